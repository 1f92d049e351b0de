#ifndef VERONESE_RESOLUTIONS_HPP
#define VERONESE_RESOLUTIONS_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "veronese/exact_linalg.hpp"
#include "veronese/secant_ideals.hpp"

namespace veronese {

/// Koszul complex of Sec_{d,r}(B) = Sym(B_d)/I(r) over Sym(B_d):
///   K_{i,t} = Lambda^i(B_d) (x) S_{t-i},
/// with S_k the quotient piece of width k. Chain coordinates are
/// (wedge index) * dim S_{t-i} + (quotient coordinate); wedges are the
/// increasing index tuples in lexicographic order.
///
/// Ranks are memoised per cell; matrices are rebuilt on request.
class KoszulComplex {
 public:
  KoszulComplex(SecantCache& cache, std::uint32_t r, std::uint32_t d);

  SecantCache& cache() const { return *cache_; }
  std::uint32_t r() const { return r_; }
  std::uint32_t d() const { return d_; }
  /// dim B_d.
  std::uint32_t generators() const { return n_; }

  std::size_t chain_dim(std::uint32_t i, std::uint32_t t) const;
  /// Matrix of d_{i,t}: K_{i,t} -> K_{i-1,t}. Requires i >= 1 and t >= i.
  Matrix differential(std::uint32_t i, std::uint32_t t) const;
  /// Rank of d_{i,t}; zero outside 1 <= i <= min(t, dim B_d).
  std::size_t differential_rank(std::uint32_t i, std::uint32_t t);

  std::size_t betti(std::uint32_t i, std::uint32_t t);

 private:
  struct RankCell {
    std::once_flag once;
    std::size_t value = 0;
  };

  SecantCache* cache_;
  std::uint32_t r_;
  std::uint32_t d_;
  std::uint32_t n_;
  std::mutex mutex_;
  std::map<std::pair<std::uint32_t, std::uint32_t>, std::unique_ptr<RankCell>> ranks_;
};

/// Convenience: the matrix of d_{i,t} for (B, r, d).
Matrix koszul_differential(SecantCache& cache, std::uint32_t r, std::uint32_t d, std::uint32_t i, std::uint32_t t);

std::size_t betti(SecantCache& cache, std::uint32_t r, std::uint32_t d, std::uint32_t i, std::uint32_t t);

struct BettiTable {
  std::string ring;
  std::uint32_t r = 0;
  std::uint32_t d = 0;
  std::uint32_t i_max = 0;
  std::uint32_t t_max = 0;
  std::map<std::pair<std::uint32_t, std::uint32_t>, std::size_t> entries;

  std::size_t at(std::uint32_t i, std::uint32_t t) const;
};

/// Runs `task(k)` for k in [0, count) on up to `jobs` threads. Exceptions
/// from tasks are rethrown (the first one) after all workers stop.
void run_parallel(std::size_t jobs, std::size_t count, const std::function<void(std::size_t)>& task);

/// All betti numbers for 0 <= i <= i_max, 0 <= t <= t_max.
BettiTable betti_table(KoszulComplex& complex, std::uint32_t i_max, std::uint32_t t_max, std::size_t jobs = 1);
BettiTable betti_table(SecantCache& cache, std::uint32_t r, std::uint32_t d, std::uint32_t i_max, std::uint32_t t_max,
                       std::size_t jobs = 1);

/// Largest t with a nonzero entry in row i, if any.
std::optional<std::uint32_t> max_tor_degree(const BettiTable& table, std::uint32_t i);

struct ScanReport {
  std::uint32_t r = 0;
  std::uint32_t i = 0;
  std::uint32_t t_max = 0;
  std::vector<std::pair<std::uint32_t, std::optional<std::uint32_t>>> per_d;
  /// True when all present max degrees agree and at least one is present.
  /// Degrees d where Tor_i vanishes in the scanned range do not count.
  bool constant = false;
  std::optional<std::uint32_t> value;
};

ScanReport bound_scan(SecantCache& cache, std::uint32_t r, std::uint32_t i, const std::vector<std::uint32_t>& d_list,
                      std::uint32_t t_max, std::size_t jobs = 1);

/// Alternating sum of the Betti numbers in internal degree t against the
/// alternating sum of C(dim B_d, i) * dim S_{t-i}.
bool euler_check(KoszulComplex& complex, std::uint32_t t);

/// d_{i,t} o d_{i+1,t} == 0, exactly.
bool differential_squares_to_zero(const KoszulComplex& complex, std::uint32_t i, std::uint32_t t);

/// dim I_t - dim (B_d * I_{t-1}): minimal generators of I(r)_{d,.} in width t.
std::size_t minimal_generator_count(SecantCache& cache, std::uint32_t r, std::uint32_t d, std::uint32_t t);

/// Counts the Sigma_m-orbits of basis basic morphisms (e,n) -> (d,m) by
/// enumeration and compares with dim Sym^n(B_{d-e}) * dim Sym^(m-n)(B_d).
/// Throws std::invalid_argument unless e <= d and n <= m.
bool free_module_dim_check(const GradedAlgebra& b, std::uint32_t d, std::uint32_t e, std::uint32_t n, std::uint32_t m);

/// Number of basis-level orbits counted by free_module_dim_check.
std::uint64_t symmetrized_hom_dim(const GradedAlgebra& b, std::uint32_t d, std::uint32_t e, std::uint32_t n,
                                  std::uint32_t m);

/// Largest chain dimension dim Lambda^i(B_d) * dim Sym^(t-i)(B_d) over the
/// cells a table with these bounds touches; an upper bound on matrix sizes.
std::uint64_t estimated_rows(const GradedAlgebra& b, std::uint32_t d, std::uint32_t i_max, std::uint32_t t_max);

class CostGuardError : public std::runtime_error {
 public:
  CostGuardError(std::uint64_t estimate, std::uint64_t cap);
  std::uint64_t estimate() const { return estimate_; }
  std::uint64_t cap() const { return cap_; }

 private:
  std::uint64_t estimate_;
  std::uint64_t cap_;
};

}  // namespace veronese

#endif  // VERONESE_RESOLUTIONS_HPP
