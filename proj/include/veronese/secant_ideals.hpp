#ifndef VERONESE_SECANT_IDEALS_HPP
#define VERONESE_SECANT_IDEALS_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <random>
#include <string>
#include <tuple>
#include <vector>

#include "veronese/exact_linalg.hpp"
#include "veronese/graded_algebra.hpp"

namespace veronese {

/// Sym^m(B_d) modulo an ideal piece, with the non-pivot monomials of the
/// RREF ideal basis as quotient basis.
class QuotientPiece {
 public:
  QuotientPiece() = default;
  explicit QuotientPiece(Subspace ideal);

  const Subspace& ideal() const { return ideal_; }
  std::size_t ambient_dim() const { return ideal_.ambient_dim(); }
  std::size_t dim() const { return complement_.size(); }
  /// Monomial index of each quotient basis element.
  const std::vector<std::size_t>& complement() const { return complement_; }

  /// Class of a Sym^m monomial in quotient coordinates.
  SparseVector normal_form(std::size_t monomial) const;

 private:
  Subspace ideal_;
  std::vector<std::size_t> complement_;
  std::vector<long> complement_pos_;
  std::vector<long> row_of_pivot_;
};

/// Memoised secant ideal pieces I_B(r)_{d,m} inside Sym^m(B_d).
///
/// I(1)_{d,m} is the kernel of Sym^m(B_d) -> B_{dm}. For r >= 2, I(r)_{d,m}
/// is the kernel of the comultiplication into
///   sum_{i=0..m} Sym^i/I(1)_{d,i} (x) Sym^(m-i)/I(r-1)_{d,m-i},
/// assembled as a single stacked matrix.
///
/// Safe for concurrent use: each (r,d,m) cell is computed exactly once,
/// independent cells may be computed in parallel.
class SecantCache {
 public:
  explicit SecantCache(GradedAlgebra algebra);

  const GradedAlgebra& algebra() const { return algebra_; }

  /// Throws std::invalid_argument for r == 0.
  const QuotientPiece& piece(std::uint32_t r, std::uint32_t d, std::uint32_t m);
  const Subspace& ideal(std::uint32_t r, std::uint32_t d, std::uint32_t m) { return piece(r, d, m).ideal(); }

  std::size_t cells_computed() const;

 private:
  struct Cell {
    std::once_flag once;
    QuotientPiece value;
  };
  QuotientPiece compute(std::uint32_t r, std::uint32_t d, std::uint32_t m);

  GradedAlgebra algebra_;
  mutable std::mutex mutex_;
  std::map<std::tuple<std::uint32_t, std::uint32_t, std::uint32_t>, std::unique_ptr<Cell>> cells_;
};

/// Kernel of the multiplication map Sym^m(B_d) -> B_{dm}.
Subspace ideal_one(const GradedAlgebra& b, std::uint32_t d, std::uint32_t m);

/// Matrix of the stacked comultiplication map whose kernel is I(r)_{d,m}, r >= 2.
Matrix comultiplication_matrix(SecantCache& cache, std::uint32_t r, std::uint32_t d, std::uint32_t m);

Subspace secant(SecantCache& cache, std::uint32_t r, std::uint32_t d, std::uint32_t m);

/// dim Sym^m(B_d)/I(r)_{d,m} for m = 0..m_max.
std::vector<std::size_t> sec_hilbert(SecantCache& cache, std::uint32_t r, std::uint32_t d, std::uint32_t m_max);

/// Throws std::invalid_argument when f does not live in Sym^m(B_d).
bool is_in_secant(SecantCache& cache, std::uint32_t r, std::uint32_t d, std::uint32_t m, const SymElement& f);

/// Span of g * u over the generators g (all of one degree d and width m0)
/// and the monomials u of Sym^(m - m0)(B_d).
Subspace ideal_piece_from_generators(const GradedAlgebra& b, const std::vector<SymElement>& gens, std::uint32_t m);

/// k x k minors of the k x (d-k+2) catalecticant of binary forms,
/// M[i][j] = s^(i+j) t^(d-i-j), as elements of Sym^k(B_d) for B = k[s,t].
/// Columns are chosen in lexicographic order. Throws std::invalid_argument
/// when d < 2k - 2.
std::vector<SymElement> catalecticant_minors(std::uint32_t d, std::uint32_t k);

struct ClosureReport {
  std::size_t cases = 0;
  std::size_t violations = 0;
  std::string first_violation;
};

struct ClosureConfig {
  std::uint32_t r_max = 2;
  std::uint32_t d_max = 5;
  std::uint32_t m_max = 4;
  std::size_t samples = 200;
};

/// Applies random symmetrized morphisms (d,m) -> (e,n) within the configured
/// box to random elements of I(r)_{d,m} and checks the image lies in
/// I(r)_{e,n}. Sources with a zero ideal piece are skipped.
ClosureReport submodule_closure_check(SecantCache& cache, const ClosureConfig& config, std::mt19937_64& rng);

/// Uniformly random small-integer element of B_d with at most `support`
/// nonzero coordinates (at least one).
AlgElement random_element(const GradedAlgebra& b, std::uint32_t d, std::mt19937_64& rng, std::size_t support = 2);

BasicMorphismB random_basic_morphism(const GradedAlgebra& b, ObjectDM source, ObjectDM target, std::mt19937_64& rng);

}  // namespace veronese

#endif  // VERONESE_SECANT_IDEALS_HPP
