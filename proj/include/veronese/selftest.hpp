#ifndef VERONESE_SELFTEST_HPP
#define VERONESE_SELFTEST_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "veronese/secant_ideals.hpp"
#include "veronese/veronese_cat.hpp"

namespace veronese {

struct SuiteResult {
  std::string name;
  std::size_t cases = 0;
  std::size_t violations = 0;
  std::string counterexample;
};

struct SelftestReport {
  std::uint64_t seed = 0;
  std::vector<SuiteResult> suites;

  bool passed() const;
};

inline constexpr std::uint64_t kDefaultSeed = 20240607;

/// Uniform random morphism source -> target of the monomial category.
/// Throws std::invalid_argument when the hom-set is empty.
VerMorphism random_morphism(ObjectDM source, ObjectDM target, std::uint32_t r, std::mt19937_64& rng);

SuiteResult associativity_suite(std::mt19937_64& rng, std::size_t cases);
SuiteResult word_bijection_suite(std::mt19937_64& rng, std::size_t cases);
/// Exhaustive over morphisms out of (1,1) with targets e, n <= 3, r = 2,
/// against a brute-force search for factorisations.
SuiteResult divides_higman_suite();
SuiteResult sigma_axioms_suite(std::mt19937_64& rng, std::size_t cases);
SuiteResult sigma_composition_suite(std::mt19937_64& rng, std::size_t cases);
SuiteResult symmetrization_suite(std::mt19937_64& rng, std::size_t cases);
/// d, e, m, n <= 3 and r <= 3, exhaustive.
SuiteResult hom_count_suite();
SuiteResult submodule_closure_suite(SecantCache& cache, std::mt19937_64& rng, std::size_t samples);
/// d <= 4, e <= d, n <= m <= 4.
SuiteResult free_module_suite(const GradedAlgebra& b);
/// I(r) inside I(r-1), and B_d * I(r)_{d,m} inside I(r)_{d,m+1}.
SuiteResult secant_chain_suite(SecantCache& cache, std::uint32_t r_max, std::uint32_t d_max, std::uint32_t m_max);

/// The category suites, in a fixed order, from one seeded generator.
SelftestReport run_category_selftest(std::uint64_t seed, std::size_t cases = 1000);
/// Chain, ideal closure and submodule closure on P^1 cells.
SelftestReport run_secant_selftest(std::uint64_t seed, std::size_t samples = 200);

}  // namespace veronese

#endif  // VERONESE_SELFTEST_HPP
