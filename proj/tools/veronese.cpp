// Command-line front end: secant ideal dimensions, Betti tables, bound scans,
// the rational normal curve example and the property self-test.

#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <regex>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "veronese/example_check.hpp"
#include "veronese/resolutions.hpp"
#include "veronese/ring_io.hpp"
#include "veronese/secant_ideals.hpp"
#include "veronese/selftest.hpp"

using namespace veronese;
using nlohmann::json;

namespace {

enum Exit { kOk = 0, kMismatch = 1, kInvalid = 2, kCostGuard = 3 };

constexpr std::uint64_t kRowCap = 250000;

struct InvalidInput : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string ring = "P1";
  std::uint32_t r = 1;
  std::optional<std::uint32_t> d;
  std::string d_range;
  std::uint32_t imax = 2;
  std::uint32_t tmax = 4;
  std::uint32_t i = 1;
  std::string format = "table";
  std::string out;
  std::uint64_t seed = kDefaultSeed;
  std::size_t jobs = 1;
  bool force = false;
};

std::vector<std::uint32_t> degrees(const Options& o) {
  if (!o.d_range.empty()) {
    static const std::regex pattern(R"((\d+)\.\.(\d+))");
    std::smatch m;
    if (!std::regex_match(o.d_range, m, pattern)) throw InvalidInput("--d-range must look like a..b");
    const auto lo = static_cast<std::uint32_t>(std::stoul(m[1])), hi = static_cast<std::uint32_t>(std::stoul(m[2]));
    if (lo > hi) throw InvalidInput("--d-range is empty");
    if (lo == 0) throw InvalidInput("degrees must be at least 1");
    std::vector<std::uint32_t> out;
    for (std::uint32_t d = lo; d <= hi; ++d) out.push_back(d);
    return out;
  }
  if (o.d) {
    if (*o.d == 0) throw InvalidInput("degrees must be at least 1");
    return {*o.d};
  }
  throw InvalidInput("give --d or --d-range");
}

GradedAlgebra ring(const Options& o) {
  try {
    return load_ring(o.ring);
  } catch (const std::invalid_argument& e) {
    throw InvalidInput(e.what());
  }
}

void require_r(const Options& o) {
  if (o.r == 0) throw InvalidInput("--r must be at least 1");
}

void guard(const Options& o, std::uint64_t estimate) {
  if (!o.force && estimate > kRowCap) throw CostGuardError(estimate, kRowCap);
}

void emit(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(o.out);
  if (!f) throw InvalidInput("cannot write " + o.out);
  f << text;
}

int secant_dims(const Options& o) {
  require_r(o);
  const auto b = ring(o);
  const auto ds = degrees(o);
  for (const auto d : ds) guard(o, multichoose(b.dim(d), o.tmax));
  SecantCache cache(b);
  json rows = json::array();
  std::ostringstream table, csv;
  csv << "r,d,m,sym_dim,ideal_dim,quotient_dim\n";
  table << "   r   d   m     sym   ideal   quotient\n";
  for (const auto d : ds) {
    for (std::uint32_t m = 0; m <= o.tmax; ++m) {
      const auto& piece = cache.piece(o.r, d, m);
      const auto ideal = piece.ideal().dim(), total = piece.ambient_dim(), quotient = piece.dim();
      rows.push_back({{"d", d}, {"m", m}, {"sym_dim", total}, {"ideal_dim", ideal}, {"quotient_dim", quotient}});
      csv << o.r << ',' << d << ',' << m << ',' << total << ',' << ideal << ',' << quotient << '\n';
      table << std::setw(4) << o.r << std::setw(4) << d << std::setw(4) << m << std::setw(8) << total << std::setw(8)
            << ideal << std::setw(11) << quotient << '\n';
    }
  }
  if (o.format == "json") {
    emit(o, json{{"command", "secant-dims"}, {"ring", ring_to_json(b)}, {"r", o.r}, {"rows", rows}}.dump(2) + "\n");
  } else {
    emit(o, o.format == "csv" ? csv.str() : table.str());
  }
  return kOk;
}

int betti_cmd(const Options& o) {
  require_r(o);
  const auto b = ring(o);
  const auto ds = degrees(o);
  if (ds.size() != 1) throw InvalidInput("betti takes a single --d");
  const auto d = ds.front();
  guard(o, estimated_rows(b, d, o.imax, o.tmax));
  SecantCache cache(b);
  const auto table = betti_table(cache, o.r, d, o.imax, o.tmax, o.jobs);

  std::ostringstream text;
  if (o.format == "csv") {
    text << "i,t,beta\n";
    for (std::uint32_t i = 0; i <= o.imax; ++i) {
      for (std::uint32_t t = 0; t <= o.tmax; ++t) text << i << ',' << t << ',' << table.at(i, t) << '\n';
    }
  } else if (o.format == "json") {
    json entries = json::array();
    for (const auto& [cell, beta] : table.entries) entries.push_back({{"i", cell.first}, {"t", cell.second}, {"beta", beta}});
    text << json{{"command", "betti"}, {"ring", ring_to_json(b)}, {"r", o.r}, {"d", d}, {"imax", o.imax},
                 {"tmax", o.tmax}, {"entries", entries}}
                .dump(2)
         << '\n';
  } else {
    text << "Betti numbers of Sec_{" << d << "," << o.r << "} over Sym(B_" << d << "), B = " << b.describe() << "\n";
    text << "  t\\i";
    for (std::uint32_t i = 0; i <= o.imax; ++i) text << std::setw(8) << i;
    text << '\n';
    for (std::uint32_t t = 0; t <= o.tmax; ++t) {
      text << std::setw(5) << t;
      for (std::uint32_t i = 0; i <= o.imax; ++i) {
        const auto beta = table.at(i, t);
        text << std::setw(8) << (beta ? std::to_string(beta) : ".");
      }
      text << '\n';
    }
  }
  emit(o, text.str());
  return kOk;
}

int scan_bounds(const Options& o) {
  require_r(o);
  const auto b = ring(o);
  const auto ds = degrees(o);
  for (const auto d : ds) guard(o, estimated_rows(b, d, o.i, o.tmax));
  SecantCache cache(b);
  const auto report = bound_scan(cache, o.r, o.i, ds, o.tmax, o.jobs);

  std::ostringstream text;
  if (o.format == "json") {
    json per_d = json::array();
    for (const auto& [d, degree] : report.per_d) {
      per_d.push_back({{"d", d}, {"max_degree", degree ? json(*degree) : json(nullptr)}});
    }
    json j{{"command", "scan-bounds"}, {"ring", ring_to_json(b)}, {"r", o.r},           {"i", o.i},
           {"tmax", o.tmax},           {"per_d", per_d},         {"constant", report.constant}};
    j["value"] = report.value ? json(*report.value) : json(nullptr);
    text << j.dump(2) << '\n';
  } else if (o.format == "csv") {
    text << "d,max_degree\n";
    for (const auto& [d, degree] : report.per_d) text << d << ',' << (degree ? std::to_string(*degree) : "") << '\n';
  } else {
    for (const auto& [d, degree] : report.per_d) {
      text << "d=" << d << ": " << (degree ? std::to_string(*degree) : "none") << '\n';
    }
  }
  if (o.format == "table") text << "constant: " << (report.constant ? std::to_string(*report.value) : "no") << '\n';
  emit(o, text.str());
  return kOk;
}

int check_example(const Options& o) {
  const auto report = run_example_check();
  std::ostringstream text;
  if (o.format == "json") {
    text << json{{"command", "check-example"},
                 {"tst_in_span", report.tst_in_span},
                 {"symmetric_in_span", report.symmetric_in_span},
                 {"image_matches", report.image_matches},
                 {"projector_agrees", report.projector_agrees},
                 {"det_in_secant", report.det_in_secant},
                 {"minors_span_secant", report.minors_span_secant},
                 {"passed", report.passed()}}
                .dump(2)
         << '\n';
  } else {
    for (const auto& line : report.lines) text << line << '\n';
    text << (report.passed() ? "PASS" : "FAIL") << '\n';
  }
  emit(o, text.str());
  return report.passed() ? kOk : kMismatch;
}

int selftest(const Options& o) {
  std::vector<SelftestReport> reports{run_category_selftest(o.seed), run_secant_selftest(o.seed)};
  bool ok = true;
  json suites = json::array();
  std::ostringstream text;
  text << "seed " << o.seed << '\n';
  for (const auto& report : reports) {
    ok = ok && report.passed();
    for (const auto& s : report.suites) {
      suites.push_back({{"name", s.name}, {"cases", s.cases}, {"violations", s.violations},
                        {"counterexample", s.counterexample}});
      text << (s.violations ? "FAIL " : "ok   ") << s.name << ": " << s.cases << " cases, " << s.violations
           << " violations";
      if (s.violations) text << " (first: " << s.counterexample << ")";
      text << '\n';
    }
  }
  if (o.format == "json") {
    emit(o, json{{"command", "selftest"}, {"seed", o.seed}, {"suites", suites}, {"passed", ok}}.dump(2) + "\n");
  } else {
    emit(o, text.str());
  }
  return ok ? kOk : kMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Secant ideals of Veronese re-embeddings and their syzygies"};
  app.require_subcommand(1);
  Options o;

  auto add_ring = [&](CLI::App* c) {
    c->add_option("--ring", o.ring, "Ring description: inline JSON, a file, or P1")->capture_default_str();
  };
  auto add_output = [&](CLI::App* c) {
    c->add_option("--format", o.format, "Output format")
        ->check(CLI::IsMember({"table", "csv", "json"}))
        ->capture_default_str();
    c->add_option("--out", o.out, "Write output to this file");
  };
  auto add_degrees = [&](CLI::App* c) {
    auto* d = c->add_option("--d", o.d, "Veronese degree");
    c->add_option("--d-range", o.d_range, "Degree range a..b")->excludes(d);
  };

  auto* dims = app.add_subcommand("secant-dims", "Dimensions of the secant ideal pieces I(r)_{d,m}");
  add_ring(dims);
  dims->add_option("--r", o.r, "Secant index")->capture_default_str();
  add_degrees(dims);
  dims->add_option("--tmax", o.tmax, "Largest width m")->capture_default_str();
  add_output(dims);
  dims->add_flag("--force", o.force, "Skip the cost guard");

  auto* betti = app.add_subcommand("betti", "Graded Betti table of Sec_{d,r}(B)");
  add_ring(betti);
  betti->add_option("--r", o.r, "Secant index")->capture_default_str();
  add_degrees(betti);
  betti->add_option("--imax", o.imax, "Largest homological index")->capture_default_str();
  betti->add_option("--tmax", o.tmax, "Largest internal degree")->capture_default_str();
  betti->add_option("--jobs", o.jobs, "Worker threads")->capture_default_str();
  add_output(betti);
  betti->add_flag("--force", o.force, "Skip the cost guard");

  auto* scan = app.add_subcommand("scan-bounds", "Largest Tor_i degree across a range of d");
  add_ring(scan);
  scan->add_option("--r", o.r, "Secant index")->capture_default_str();
  scan->add_option("--i", o.i, "Homological index")->capture_default_str();
  add_degrees(scan);
  scan->add_option("--tmax", o.tmax, "Largest internal degree")->capture_default_str();
  scan->add_option("--jobs", o.jobs, "Worker threads")->capture_default_str();
  add_output(scan);
  scan->add_flag("--force", o.force, "Skip the cost guard");

  auto* example = app.add_subcommand("check-example", "Rational normal quartic/quintic multiplier example");
  add_output(example);

  auto* self = app.add_subcommand("selftest", "Category and secant property suites");
  self->add_option("--seed", o.seed, "Random seed")->capture_default_str();
  add_output(self);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInvalid;
  }

  try {
    if (*dims) return secant_dims(o);
    if (*betti) return betti_cmd(o);
    if (*scan) return scan_bounds(o);
    if (*example) return check_example(o);
    if (*self) return selftest(o);
  } catch (const InvalidInput& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInvalid;
  } catch (const CostGuardError& e) {
    std::cerr << "refused: " << e.what() << '\n';
    return kCostGuard;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInvalid;
  }
  return kInvalid;
}
