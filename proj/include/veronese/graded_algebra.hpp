#ifndef VERONESE_GRADED_ALGEBRA_HPP
#define VERONESE_GRADED_ALGEBRA_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "veronese/exact_linalg.hpp"
#include "veronese/veronese_cat.hpp"

namespace veronese {

enum class AlgebraKind { Polynomial, Semigroup, MonomialQuotient };

using Point = std::vector<std::int64_t>;

/// A commutative graded algebra generated in degree one with a monomial basis
/// in every degree and products that are either a basis element or zero:
///   Polynomial(r)            k[x_1..x_r]
///   Semigroup(gens)          k[N gens], graded by the number of generators
///   MonomialQuotient(r, gs)  k[x_1..x_r] / (x^g : g in gs)
/// Basis elements of B_d are labelled by points (exponent vectors, or lattice
/// points for semigroups) sorted lexicographically.
///
/// Copies share one lazily built, internally synchronised cache, so the
/// object behaves as an immutable value.
class GradedAlgebra {
 public:
  static GradedAlgebra polynomial(std::uint32_t vars);
  /// Throws std::invalid_argument unless some linear form is 1 on every
  /// generator (the grading must be well defined).
  static GradedAlgebra semigroup(std::vector<Point> generators);
  static GradedAlgebra monomial_quotient(std::uint32_t vars, std::vector<Point> generators);
  /// k[s,t] as the semigroup generated by (1,0) and (0,1); basis of B_d is
  /// s^i t^(d-i) at index i.
  static GradedAlgebra p1();

  AlgebraKind kind() const { return kind_; }
  std::uint32_t vars() const { return vars_; }
  const std::vector<Point>& generators() const { return generators_; }
  std::string describe() const;

  std::size_t dim(std::uint32_t d) const;
  const std::vector<Point>& basis(std::uint32_t d) const;
  /// Index of a point in basis(d), or -1.
  long index_of(std::uint32_t d, const Point& p) const;
  /// Index in B_{d+e} of the product of basis elements, or -1 when it is zero.
  long mult_basis(std::uint32_t d, std::size_t i, std::uint32_t e, std::size_t j) const;
  /// Index in B_{d_1+..+d_k} of a product of degree-d basis elements, or -1.
  long mult_basis_many(std::uint32_t d, const std::vector<std::uint32_t>& indices) const;

  friend bool operator==(const GradedAlgebra& a, const GradedAlgebra& b);

 private:
  struct Cache;
  GradedAlgebra(AlgebraKind kind, std::uint32_t vars, std::vector<Point> generators);
  const std::vector<Point>& build_degree(std::uint32_t d) const;

  AlgebraKind kind_;
  std::uint32_t vars_;
  std::vector<Point> generators_;
  std::shared_ptr<Cache> cache_;
};

struct AlgElement {
  std::uint32_t degree = 0;
  DenseVector coords;

  friend bool operator==(const AlgElement&, const AlgElement&) = default;
};

AlgElement basis_element(const GradedAlgebra& b, std::uint32_t d, std::size_t index);
AlgElement unit(const GradedAlgebra& b);
AlgElement operator+(const AlgElement& x, const AlgElement& y);
AlgElement operator*(const Rational& c, const AlgElement& x);
AlgElement mult(const GradedAlgebra& b, const AlgElement& x, const AlgElement& y);

/// Matrix of multiplication B_d (x) B_e -> B_{d+e}; column i*dim(e)+j is the
/// product of basis elements i and j.
Matrix mult_matrix(const GradedAlgebra& b, std::uint32_t d, std::uint32_t e);

// ---------------------------------------------------------------------------
// Symmetric powers

/// Sorted index multiset: a monomial of Sym^m(B_d).
using SymMonomial = std::vector<std::uint32_t>;

/// Monomial basis of Sym^m(k^n) in lexicographic order of sorted index vectors.
class SymBasis {
 public:
  /// Shared, thread-safe cache keyed by (n, m).
  static const SymBasis& get(std::uint32_t n, std::uint32_t m);

  std::uint32_t kinds() const { return n_; }
  std::uint32_t width() const { return m_; }
  std::size_t size() const { return monomials_.size(); }
  const SymMonomial& operator[](std::size_t i) const { return monomials_[i]; }
  const std::vector<SymMonomial>& monomials() const { return monomials_; }
  /// Throws std::out_of_range for malformed monomials.
  std::size_t index(const SymMonomial& mono) const;

 private:
  SymBasis(std::uint32_t n, std::uint32_t m);
  std::uint32_t n_;
  std::uint32_t m_;
  std::vector<SymMonomial> monomials_;
  std::map<SymMonomial, std::size_t> index_;
};

const SymBasis& sym_basis(const GradedAlgebra& b, std::uint32_t d, std::uint32_t m);

struct SymElement {
  std::uint32_t degree = 0;
  std::uint32_t width = 0;
  DenseVector coords;

  friend bool operator==(const SymElement&, const SymElement&) = default;
};

SymElement sym_zero(const GradedAlgebra& b, std::uint32_t d, std::uint32_t m);
SymElement sym_monomial(const GradedAlgebra& b, std::uint32_t d, const SymMonomial& mono,
                        const Rational& coeff = 1);
SymElement operator+(const SymElement& f, const SymElement& g);
SymElement operator*(const Rational& c, const SymElement& f);
SymMonomial multiset_union(const SymMonomial& a, const SymMonomial& b);
SymElement sym_mult(const GradedAlgebra& b, const SymElement& f, const SymElement& g);

/// One term x^b (x) x^(a-b) of a coproduct component.
struct CoproductTerm {
  SymMonomial left;
  SymMonomial right;
  Rational coeff;
};

/// Component Sym^m -> Sym^i (x) Sym^(m-i) of the multiplicative extension of
/// v -> v(x)1 + 1(x)v, on one monomial with multiplicity vector a:
/// sum over b <= a with |b| = i of prod_j C(a_j, b_j) x^b (x) x^(a-b).
std::vector<CoproductTerm> coproduct_monomial(const SymMonomial& mono, std::uint32_t i);

/// Keys are (index in Sym^i, index in Sym^(m-i)).
using SymTensor2 = std::map<std::pair<std::size_t, std::size_t>, Rational>;

/// Throws std::invalid_argument when i > m.
SymTensor2 coproduct_component(const GradedAlgebra& b, const SymElement& f, std::uint32_t i);

// ---------------------------------------------------------------------------
// Tensor powers and basic morphisms

/// Element of B_d^{(x)m}: basis-index tuples to coefficients.
struct TensorElement {
  std::uint32_t degree = 0;
  std::uint32_t width = 0;
  std::map<std::vector<std::uint32_t>, Rational> terms;

  void add(const std::vector<std::uint32_t>& key, const Rational& c);
  friend bool operator==(const TensorElement&, const TensorElement&) = default;
};

TensorElement operator+(const TensorElement& x, const TensorElement& y);
TensorElement operator*(const Rational& c, const TensorElement& x);

/// Quotient map B_d^{(x)m} -> Sym^m(B_d).
SymElement to_sym(const GradedAlgebra& b, const TensorElement& x);

/// The Sigma_m-invariant lift of f: each monomial is spread evenly over its
/// distinct orderings.
TensorElement sym_lift(const GradedAlgebra& b, const SymElement& f);

/// (1/m!) sum of slot permutations of x.
TensorElement symmetrize_tensor(const TensorElement& x);

/// A basic morphism (d,m) -> (e,n) with algebra-element values.
struct BasicMorphismB {
  ObjectDM source;
  ObjectDM target;
  std::vector<std::uint32_t> alpha1;
  std::vector<AlgElement> alpha2;  // per free slot, increasing, degree e
  std::vector<AlgElement> alpha3;  // per source slot, degree e - d

  std::vector<std::uint32_t> free_slots() const;
  void validate(const GradedAlgebra& b) const;
  friend bool operator==(const BasicMorphismB&, const BasicMorphismB&) = default;
};

/// Rational combination of basic morphisms sharing source and target.
using BasicCombo = std::vector<std::pair<BasicMorphismB, Rational>>;

BasicMorphismB identity_basic(const GradedAlgebra& b, ObjectDM x);

/// beta o alpha: as in the monomial category, with sums of exponent vectors
/// replaced by products in B.
BasicMorphismB compose_basic(const GradedAlgebra& b, const BasicMorphismB& beta, const BasicMorphismB& alpha);

BasicMorphismB sigma_act(const Permutation& sigma, const BasicMorphismB& alpha);

/// (1/n!) sum over S_n of sigma(alpha), as a list of n! terms.
BasicCombo symmetrize_basic(const BasicMorphismB& alpha);

/// Basic morphism of the monomial category realised in Polynomial(r).
BasicMorphismB from_ver_morphism(const GradedAlgebra& b, const VerMorphism& alpha);

/// Slot alpha1(i) receives alpha3(i) * x_i; free slot j receives alpha2(j).
TensorElement apply_basic_tensor(const GradedAlgebra& b, const BasicMorphismB& alpha, const TensorElement& x);
TensorElement apply_combo_tensor(const GradedAlgebra& b, const BasicCombo& c, const TensorElement& x);

/// Action of the class of alpha in the symmetrized category on Sym^m(B_d):
/// to_sym(apply_basic_tensor(alpha, sym_lift(f))).
SymElement apply_basic_sym(const GradedAlgebra& b, const BasicMorphismB& alpha, const SymElement& f);
SymElement apply_combo_sym(const GradedAlgebra& b, const BasicCombo& c, const SymElement& f);

}  // namespace veronese

#endif  // VERONESE_GRADED_ALGEBRA_HPP
