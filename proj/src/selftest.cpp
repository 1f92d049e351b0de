#include "veronese/selftest.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "veronese/resolutions.hpp"

namespace veronese {

bool SelftestReport::passed() const {
  return std::all_of(suites.begin(), suites.end(), [](const SuiteResult& s) { return s.violations == 0; });
}

namespace {

std::uint32_t uniform(std::mt19937_64& rng, std::uint32_t lo, std::uint32_t hi) {
  return std::uniform_int_distribution<std::uint32_t>(lo, hi)(rng);
}

const ExponentVector& random_monomial(std::uint32_t r, std::uint32_t degree, std::mt19937_64& rng) {
  static thread_local std::map<std::pair<std::uint32_t, std::uint32_t>, std::vector<ExponentVector>> cache;
  auto& list = cache[{r, degree}];
  if (list.empty()) list = multi(r, degree);
  return list[std::uniform_int_distribution<std::size_t>(0, list.size() - 1)(rng)];
}

Permutation random_permutation(std::uint32_t n, std::mt19937_64& rng) {
  Permutation p = identity_permutation(n);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

ObjectDM grow(ObjectDM x, std::mt19937_64& rng, std::uint32_t max_step = 1) {
  return {x.d + uniform(rng, 0, max_step), x.m + uniform(rng, 0, max_step)};
}

template <class T>
std::string show(const T& x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

void record(SuiteResult& s, bool ok, const std::string& what) {
  ++s.cases;
  if (!ok && s.violations++ == 0) s.counterexample = what;
}

}  // namespace

VerMorphism random_morphism(ObjectDM source, ObjectDM target, std::uint32_t r, std::mt19937_64& rng) {
  if (source.d > target.d || source.m > target.m || (r == 0 && target.d > 0)) {
    throw std::invalid_argument("random_morphism: empty hom-set");
  }
  std::vector<std::uint32_t> slots(target.m);
  for (std::uint32_t i = 0; i < target.m; ++i) slots[i] = i;
  std::shuffle(slots.begin(), slots.end(), rng);
  std::vector<std::uint32_t> a1(slots.begin(), slots.begin() + source.m);
  std::sort(a1.begin(), a1.end());
  VerMorphism alpha{source, target, a1, {}, {}};
  for (std::uint32_t k = 0; k < target.m - source.m; ++k) alpha.alpha2.push_back(random_monomial(r, target.d, rng));
  for (std::uint32_t k = 0; k < source.m; ++k) alpha.alpha3.push_back(random_monomial(r, target.d - source.d, rng));
  return alpha;
}

SuiteResult associativity_suite(std::mt19937_64& rng, std::size_t cases) {
  SuiteResult s{"associativity", 0, 0, {}};
  for (std::size_t k = 0; k < cases; ++k) {
    const std::uint32_t r = uniform(rng, 1, 3);
    const ObjectDM w{uniform(rng, 0, 1), uniform(rng, 0, 2)};
    const ObjectDM x = grow(w, rng), y = grow(x, rng), z = grow(y, rng);
    const auto a = random_morphism(w, x, r, rng);
    const auto b = random_morphism(x, y, r, rng);
    const auto c = random_morphism(y, z, r, rng);
    const auto left = compose(c, compose(b, a));
    const auto right = compose(compose(c, b), a);
    bool ok = left == right;
    try {
      left.validate(r);
    } catch (const std::exception&) {
      ok = false;
    }
    record(s, ok, show(a) + " ; " + show(b) + " ; " + show(c));
  }
  return s;
}

SuiteResult word_bijection_suite(std::mt19937_64& rng, std::size_t cases) {
  SuiteResult s{"encode_decode", 0, 0, {}};
  for (std::size_t k = 0; k < cases; ++k) {
    const std::uint32_t r = uniform(rng, 1, 3);
    const ObjectDM x{uniform(rng, 0, 2), uniform(rng, 0, 3)};
    const ObjectDM y = grow(x, rng, 2);
    const auto a = random_morphism(x, y, r, rng);
    const auto w = word_encode(a);
    bool ok = w.size() == y.m && word_decode(w, x, y.d) == a && word_encode(word_decode(w, x, y.d)) == w;
    record(s, ok, show(a));
  }
  // Injectivity on complete small hom-sets.
  for (std::uint32_t e = 1; e <= 2; ++e) {
    for (std::uint32_t n = 1; n <= 3; ++n) {
      std::set<std::vector<std::pair<int, std::vector<std::uint32_t>>>> seen;
      for (const auto& a : enumerate_morphisms({1, 1}, {e, n}, 2)) {
        std::vector<std::pair<int, std::vector<std::uint32_t>>> key;
        for (const auto& l : word_encode(a)) key.emplace_back(static_cast<int>(l.tag), l.vector.exponents());
        record(s, seen.insert(key).second, "word collision at " + show(a));
      }
    }
  }
  return s;
}

SuiteResult divides_higman_suite() {
  SuiteResult s{"divides_iff_higman", 0, 0, {}};
  constexpr std::uint32_t r = 2;
  const ObjectDM source{1, 1};
  std::vector<ObjectDM> targets;
  for (std::uint32_t e = 1; e <= 3; ++e) {
    for (std::uint32_t n = 1; n <= 3; ++n) targets.push_back({e, n});
  }
  std::map<ObjectDM, std::vector<VerMorphism>> homs;
  for (const auto& t : targets) homs[t] = enumerate_morphisms(source, t, r);

  for (const auto& x : targets) {
    for (const auto& alpha : homs[x]) {
      const auto alpha_word = word_encode(alpha);
      for (const auto& y : targets) {
        // Brute force: every factorisation gamma = beta o alpha, keeping the
        // lex-least beta per gamma.
        std::map<VerMorphism, VerMorphism> least;
        if (x.d <= y.d && x.m <= y.m) {
          for (const auto& beta : enumerate_morphisms(x, y, r)) {
            const auto gamma = compose(beta, alpha);
            auto [it, fresh] = least.emplace(gamma, beta);
            if (!fresh && lex_compare(beta, it->second) < 0) it->second = beta;
          }
        }
        for (const auto& gamma : homs[y]) {
          const auto oracle = least.find(gamma);
          const bool factors = oracle != least.end();
          const bool higman = higman_leq(alpha_word, word_encode(gamma));
          const auto found = divides(alpha, gamma);
          bool ok = factors == higman && factors == found.has_value();
          if (ok && found) ok = compose(*found, alpha) == gamma && *found == oracle->second;
          record(s, ok, show(alpha) + " | " + show(gamma));
        }
      }
    }
  }
  return s;
}

SuiteResult sigma_axioms_suite(std::mt19937_64& rng, std::size_t cases) {
  SuiteResult s{"sigma_action_axioms", 0, 0, {}};
  for (std::size_t k = 0; k < cases; ++k) {
    const std::uint32_t r = uniform(rng, 1, 3);
    const ObjectDM x{uniform(rng, 0, 2), uniform(rng, 0, 3)};
    const ObjectDM y = grow(x, rng, 2);
    const auto a = random_morphism(x, y, r, rng);
    const auto sigma = random_permutation(y.m, rng);
    const auto rho = random_permutation(y.m, rng);

    const auto id = sigma_act(identity_permutation(y.m), a);
    bool ok = id.morphism == a && id.tau == identity_permutation(x.m);
    const auto once = sigma_act(compose(sigma, rho), a);
    const auto twice = sigma_act(sigma, sigma_act(rho, a).morphism);
    ok = ok && once.morphism == twice.morphism;
    // sigma o alpha1 o tau^{-1} is the new, increasing slot map.
    const auto tau_inv = inverse(once.tau);
    for (std::uint32_t i = 0; ok && i < x.m; ++i) ok = once.morphism.alpha1[i] == sigma[rho[a.alpha1[tau_inv[i]]]];
    try {
      once.morphism.validate(r);
    } catch (const std::exception&) {
      ok = false;
    }
    record(s, ok, show(a));
  }
  return s;
}

SuiteResult sigma_composition_suite(std::mt19937_64& rng, std::size_t cases) {
  SuiteResult s{"sigma_of_composite", 0, 0, {}};
  for (std::size_t k = 0; k < cases; ++k) {
    const std::uint32_t r = uniform(rng, 1, 3);
    const ObjectDM x{uniform(rng, 0, 1), uniform(rng, 0, 2)};
    const ObjectDM y = grow(x, rng), z = grow(y, rng);
    const auto a = random_morphism(x, y, r, rng);
    const auto b = random_morphism(y, z, r, rng);
    const auto sigma = random_permutation(z.m, rng);
    const auto tau = induced_permutation(sigma, b.alpha1);
    const auto left = sigma_act(sigma, compose(b, a)).morphism;
    const auto right = compose(sigma_act(sigma, b).morphism, sigma_act(tau, a).morphism);
    record(s, left == right, show(a) + " ; " + show(b));
  }
  return s;
}

SuiteResult symmetrization_suite(std::mt19937_64& rng, std::size_t cases) {
  SuiteResult s{"symmetrization", 0, 0, {}};
  for (std::size_t k = 0; k < cases; ++k) {
    const std::uint32_t r = uniform(rng, 1, 2);
    const ObjectDM x{uniform(rng, 0, 1), uniform(rng, 0, 2)};
    const ObjectDM y = grow(x, rng), z = grow(y, rng);
    const auto a = random_morphism(x, y, r, rng);
    const auto b = random_morphism(y, z, r, rng);
    const auto a_sym = symmetrize(FormalCombo::of(a));
    bool ok = is_invariant(a_sym) && symmetrize(a_sym) == a_sym;
    const auto b_combo = FormalCombo::of(b);
    ok = ok && symmetrize(compose(b_combo, a_sym)) == compose(symmetrize(b_combo), a_sym);
    record(s, ok, show(a) + " ; " + show(b));
  }
  return s;
}

SuiteResult hom_count_suite() {
  SuiteResult s{"hom_count", 0, 0, {}};
  for (std::uint32_t r = 1; r <= 3; ++r) {
    for (std::uint32_t d = 0; d <= 3; ++d) {
      for (std::uint32_t e = 0; e <= 3; ++e) {
        for (std::uint32_t m = 0; m <= 3; ++m) {
          for (std::uint32_t n = 0; n <= 3; ++n) {
            const auto list = enumerate_morphisms({d, m}, {e, n}, r);
            const std::set<VerMorphism> distinct(list.begin(), list.end());
            bool ok = hom_count({d, m}, {e, n}, r) == list.size() && distinct.size() == list.size();
            for (const auto& a : list) {
              try {
                a.validate(r);
              } catch (const std::exception&) {
                ok = false;
              }
            }
            std::ostringstream os;
            os << "r=" << r << " (" << d << "," << m << ")->(" << e << "," << n << ")";
            record(s, ok, os.str());
          }
        }
      }
    }
  }
  return s;
}

SuiteResult submodule_closure_suite(SecantCache& cache, std::mt19937_64& rng, std::size_t samples) {
  ClosureConfig config;
  config.samples = samples;
  const auto report = submodule_closure_check(cache, config, rng);
  return {"submodule_closure", report.cases, report.violations, report.first_violation};
}

SuiteResult free_module_suite(const GradedAlgebra& b) {
  SuiteResult s{"free_module_dim", 0, 0, {}};
  for (std::uint32_t d = 0; d <= 4; ++d) {
    for (std::uint32_t e = 0; e <= d; ++e) {
      for (std::uint32_t m = 0; m <= 4; ++m) {
        for (std::uint32_t n = 0; n <= m; ++n) {
          std::ostringstream os;
          os << "(" << e << "," << n << ")->(" << d << "," << m << ")";
          record(s, free_module_dim_check(b, d, e, n, m), os.str());
        }
      }
    }
  }
  return s;
}

SuiteResult secant_chain_suite(SecantCache& cache, std::uint32_t r_max, std::uint32_t d_max, std::uint32_t m_max) {
  SuiteResult s{"secant_chain_and_ideal", 0, 0, {}};
  const auto& b = cache.algebra();
  for (std::uint32_t r = 1; r <= r_max; ++r) {
    for (std::uint32_t d = 1; d <= d_max; ++d) {
      for (std::uint32_t m = 0; m <= m_max; ++m) {
        std::ostringstream os;
        os << "r=" << r << " d=" << d << " m=" << m;
        const auto& ideal = cache.ideal(r, d, m);
        if (r >= 2) record(s, cache.ideal(r - 1, d, m).contains(ideal), "chain " + os.str());
        if (m < m_max && ideal.dim() > 0) {
          std::vector<SymElement> gens;
          for (const auto& v : ideal.basis()) gens.push_back({d, m, to_dense(v, ideal.ambient_dim())});
          record(s, cache.ideal(r, d, m + 1).contains(ideal_piece_from_generators(b, gens, m + 1)),
                 "ideal " + os.str());
        }
      }
    }
  }
  return s;
}

SelftestReport run_category_selftest(std::uint64_t seed, std::size_t cases) {
  std::mt19937_64 rng(seed);
  SelftestReport report{seed, {}};
  report.suites.push_back(associativity_suite(rng, cases));
  report.suites.push_back(word_bijection_suite(rng, cases));
  report.suites.push_back(divides_higman_suite());
  report.suites.push_back(sigma_axioms_suite(rng, cases));
  report.suites.push_back(sigma_composition_suite(rng, cases));
  report.suites.push_back(symmetrization_suite(rng, cases));
  report.suites.push_back(hom_count_suite());
  return report;
}

SelftestReport run_secant_selftest(std::uint64_t seed, std::size_t samples) {
  std::mt19937_64 rng(seed);
  SelftestReport report{seed, {}};
  SecantCache cache(GradedAlgebra::p1());
  report.suites.push_back(secant_chain_suite(cache, 2, 5, 4));
  report.suites.push_back(submodule_closure_suite(cache, rng, samples));
  report.suites.push_back(free_module_suite(cache.algebra()));
  return report;
}

}  // namespace veronese
