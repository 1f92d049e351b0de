// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <memory>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "veronese/example_check.hpp"
#include "veronese/resolutions.hpp"
#include "veronese/secant_ideals.hpp"
#include "veronese/selftest.hpp"

using namespace veronese;

namespace {

std::size_t jobs() { return std::max(1u, std::thread::hardware_concurrency()); }

struct Outcome {
  bool ok = true;
  std::string detail;
};

// Complexes computed by criteria 3-6, revisited by criterion 9.
struct Computed {
  std::string ring;
  std::shared_ptr<SecantCache> cache;
  std::uint32_t r, d, i_max, t_max;
};
std::vector<Computed> computed;
std::map<std::string, std::shared_ptr<SecantCache>> caches;

std::shared_ptr<SecantCache> cache_for(const std::string& name, const GradedAlgebra& b) {
  auto& c = caches[name];
  if (!c) c = std::make_shared<SecantCache>(b);
  return c;
}

std::string degrees(const ScanReport& s) {
  std::ostringstream os;
  for (const auto& [d, t] : s.per_d) os << " d=" << d << ":" << (t ? std::to_string(*t) : "-");
  return os.str();
}

Outcome scan_expect(const std::string& ring, std::shared_ptr<SecantCache> cache, std::uint32_t r, std::uint32_t i,
                    std::uint32_t d_lo, std::uint32_t d_hi, std::uint32_t t_max, std::uint32_t expected) {
  std::vector<std::uint32_t> ds;
  for (std::uint32_t d = d_lo; d <= d_hi; ++d) {
    ds.push_back(d);
    computed.push_back({ring, cache, r, d, i, t_max});
  }
  const auto s = bound_scan(*cache, r, i, ds, t_max, jobs());
  Outcome o;
  // Tor_i of the r-th secant of the rational normal curve of degree d is
  // nonzero exactly for i <= d - 2r + 1 (Eagon-Northcott length). Below that
  // range an empty row is the correct answer, not a missing degree.
  for (const auto& [d, t] : s.per_d) {
    const bool present = i + 2 * r <= d + 1;
    o.ok = o.ok && (present ? t == expected : !t.has_value());
  }
  o.ok = o.ok && s.constant && s.value == expected;
  o.detail = "r=" + std::to_string(r) + " i=" + std::to_string(i) + degrees(s);
  return o;
}

Outcome criterion1() {
  const auto report = run_example_check();
  Outcome o;
  o.ok = !report.tst_in_span && report.symmetric_in_span && report.image_matches && report.projector_agrees;
  o.detail = std::string("tst in span: ") + (report.tst_in_span ? "yes" : "no") +
             ", stt+tst+tts in span: " + (report.symmetric_in_span ? "yes" : "no");
  return o;
}

Outcome criterion2() {
  SecantCache cache(GradedAlgebra::p1());
  auto span_of = [](std::uint32_t d, std::uint32_t k) {
    std::vector<DenseVector> rows;
    for (const auto& f : catalecticant_minors(d, k)) rows.push_back(f.coords);
    return Subspace::span(rows.front().size(), rows);
  };
  const auto& four = secant(cache, 2, 4, 3);
  const auto& five = secant(cache, 2, 5, 3);
  Outcome o;
  o.ok = four.dim() == 1 && four == span_of(4, 3) && five.dim() == 4 && five == span_of(5, 3);
  o.detail = "dims " + std::to_string(four.dim()) + ", " + std::to_string(five.dim());
  return o;
}

Outcome criterion3() {
  auto cache = cache_for("P1", GradedAlgebra::p1());
  Outcome o{true, ""};
  for (std::uint32_t i = 1; i <= 3; ++i) {
    const auto s = scan_expect("P1", cache, 1, i, 2, 6, 6, i + 1);
    o.ok = o.ok && s.ok;
    o.detail += (o.detail.empty() ? "" : ";") + s.detail;
  }
  return o;
}

Outcome criterion4() {
  auto cache = cache_for("P1", GradedAlgebra::p1());
  const auto one = scan_expect("P1", cache, 2, 1, 4, 7, 6, 3);
  const auto two = scan_expect("P1", cache, 2, 2, 4, 6, 6, 4);
  return {one.ok && two.ok, one.detail + ";" + two.detail};
}

Outcome criterion5() {
  Outcome o{true, ""};
  std::size_t cells = 0;
  auto run = [&](const std::string& ring, const GradedAlgebra& b, std::uint32_t d_lo, std::uint32_t d_hi,
                 std::uint32_t i_max) {
    auto cache = cache_for(ring, b);
    const std::uint32_t t_max = 2 * i_max + 2;
    for (std::uint32_t d = d_lo; d <= d_hi; ++d) {
      computed.push_back({ring, cache, 1, d, i_max, t_max});
      const auto table = betti_table(*cache, 1, d, i_max, t_max, jobs());
      for (std::uint32_t i = 1; i <= i_max; ++i) {
        for (std::uint32_t t = 2 * i + 1; t <= t_max; ++t, ++cells) {
          if (table.at(i, t) != 0) {
            o.ok = false;
            o.detail += " " + ring + " d=" + std::to_string(d) + " beta_{" + std::to_string(i) + "," +
                        std::to_string(t) + "}=" + std::to_string(table.at(i, t));
          }
        }
      }
    }
  };
  run("P1", GradedAlgebra::p1(), 2, 5, 3);
  run("P2", GradedAlgebra::polynomial(3), 2, 3, 2);
  if (o.ok) o.detail = std::to_string(cells) + " cells with t > 2i are zero (t <= 2 i_max + 2)";
  return o;
}

Outcome criterion6() {
  std::vector<std::set<std::uint32_t>> sets;
  std::string detail;
  for (std::uint32_t vars : {3u, 4u}) {
    const std::string ring = "P" + std::to_string(vars - 1);
    auto cache = cache_for(ring, GradedAlgebra::polynomial(vars));
    computed.push_back({ring, cache, 2, 2, 1, 5});
    const auto table = betti_table(*cache, 2, 2, 1, 5, jobs());
    std::set<std::uint32_t> s;
    for (std::uint32_t t = 0; t <= 5; ++t) {
      if (table.at(1, t) != 0) s.insert(t);
    }
    sets.push_back(s);
    detail += (detail.empty() ? "" : ", ") + ring + ": {";
    for (auto t : s) detail += std::to_string(t) + (t == *s.rbegin() ? "" : ",");
    detail += "}";
  }
  return {sets[0] == sets[1] && sets[0] == std::set<std::uint32_t>{3}, detail};
}

Outcome from_report(const SelftestReport& report) {
  Outcome o{report.passed(), ""};
  for (const auto& s : report.suites) {
    o.detail += (o.detail.empty() ? "" : ", ") + s.name + " " + std::to_string(s.cases) + "/" +
                std::to_string(s.violations);
    if (s.violations) o.detail += " [" + s.counterexample + "]";
  }
  return o;
}

Outcome criterion7() { return from_report(run_category_selftest(kDefaultSeed, 1000)); }

Outcome criterion8() {
  const auto report = run_secant_selftest(kDefaultSeed, 200);
  SelftestReport secant_only{report.seed, {}};
  for (const auto& s : report.suites) {
    if (s.name != "free_module_dim") secant_only.suites.push_back(s);
  }
  return from_report(secant_only);
}

Outcome criterion9() {
  std::size_t squares = 0, eulers = 0, failures = 0;
  std::string first;
  std::map<std::tuple<std::string, std::uint32_t, std::uint32_t>, std::pair<std::uint32_t, std::uint32_t>> bounds;
  std::map<std::tuple<std::string, std::uint32_t, std::uint32_t>, std::shared_ptr<SecantCache>> owners;
  for (const auto& c : computed) {
    auto& [i_max, t_max] = bounds[{c.ring, c.r, c.d}];
    i_max = std::max(i_max, c.i_max);
    t_max = std::max(t_max, c.t_max);
    owners[{c.ring, c.r, c.d}] = c.cache;
  }
  for (const auto& [key, bound] : bounds) {
    const auto& [ring, r, d] = key;
    KoszulComplex k(*owners[key], r, d);
    const auto [i_max, t_max] = bound;
    // Ranks of every touched cell first, in parallel; the checks reuse them.
    std::vector<std::pair<std::uint32_t, std::uint32_t>> cells;
    for (std::uint32_t t = 0; t <= t_max; ++t) {
      for (std::uint32_t i = 1; i <= std::min<std::uint32_t>(t, k.generators()); ++i) cells.push_back({i, t});
    }
    run_parallel(jobs(), cells.size(), [&](std::size_t n) { k.differential_rank(cells[n].first, cells[n].second); });
    for (std::uint32_t t = 0; t <= t_max; ++t) {
      ++eulers;
      if (!euler_check(k, t)) {
        ++failures;
        if (first.empty()) first = "euler " + ring + " r=" + std::to_string(r) + " d=" + std::to_string(d);
      }
      for (std::uint32_t i = 1; i <= i_max && i + 1 <= std::min<std::uint32_t>(t, k.generators()); ++i) {
        ++squares;
        if (!differential_squares_to_zero(k, i, t)) {
          ++failures;
          if (first.empty()) first = "d^2 " + ring + " r=" + std::to_string(r) + " d=" + std::to_string(d);
        }
      }
    }
  }
  const auto free = free_module_suite(GradedAlgebra::p1());
  failures += free.violations;
  if (first.empty() && free.violations) first = free.counterexample;
  std::string detail = std::to_string(squares) + " d^2 cells, " + std::to_string(eulers) + " Euler degrees, " +
                       std::to_string(free.cases) + " free-module cases";
  if (!first.empty()) detail += "; first failure: " + first;
  return {failures == 0 && !computed.empty(), detail};
}

}  // namespace

int main() {
  struct Criterion {
    int number;
    const char* title;
    double limit_seconds;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "worked example verdicts", 5, criterion1},
      {2, "secant generators of the quartic and quintic", 10, criterion2},
      {3, "Tor degree bound scan, r = 1", 300, criterion3},
      {4, "Tor degree bound scan, r = 2", 600, criterion4},
      {5, "beta_{i,t} = 0 for t > 2i", 600, criterion5},
      {6, "stabilization of degrees in Tor_1, d = 2, r = 2", 900, criterion6},
      {7, "category property suite", 120, criterion7},
      {8, "secant structure suite", 300, criterion8},
      {9, "homological consistency", 600, criterion9},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool ok = o.ok && seconds <= c.limit_seconds;
    if (!ok) ++failed;
    std::printf("%s criterion %d: %s (%.2f s, limit %.0f s) -- %s\n", ok ? "PASS" : "FAIL", c.number, c.title, seconds,
                c.limit_seconds, o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
