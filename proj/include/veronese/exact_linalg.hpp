#ifndef VERONESE_EXACT_LINALG_HPP
#define VERONESE_EXACT_LINALG_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "veronese/rational.hpp"

namespace veronese {

struct SparseEntry {
  std::size_t index;
  Rational value;

  friend bool operator==(const SparseEntry&, const SparseEntry&) = default;
};

/// Sorted by index, no stored zeros.
using SparseVector = std::vector<SparseEntry>;
using DenseVector = std::vector<Rational>;

SparseVector to_sparse(const DenseVector& v);
DenseVector to_dense(const SparseVector& v, std::size_t dim);

/// Returns a + factor * b.
SparseVector axpy(const SparseVector& a, const Rational& factor, const SparseVector& b);
SparseVector scaled(const SparseVector& v, const Rational& factor);
Rational entry(const SparseVector& v, std::size_t index);

/// Sparse row-major matrix over the rationals. Dimensions are fixed at
/// construction.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);

  static Matrix identity(std::size_t n);
  static Matrix from_dense(const std::vector<DenseVector>& rows);
  /// Triplets may repeat; repeated (row, col) pairs are summed.
  static Matrix from_triplets(std::size_t rows, std::size_t cols,
                              std::vector<std::pair<std::pair<std::size_t, std::size_t>, Rational>> triplets);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t nonzeros() const;
  bool is_zero() const { return nonzeros() == 0; }

  Rational at(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, const Rational& value);
  const SparseVector& row(std::size_t r) const { return data_.at(r); }
  void set_row(std::size_t r, SparseVector v);

  Matrix transpose() const;
  DenseVector apply(const DenseVector& v) const;
  SparseVector apply(const SparseVector& v) const;
  std::vector<DenseVector> to_dense() const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<SparseVector> data_;
};

struct RrefResult {
  Matrix reduced;
  std::vector<std::size_t> pivots;
};

/// Reduced row-echelon form. Pivot rule: first nonzero column.
/// Zero rows are kept at the bottom so the shape matches the input.
RrefResult rref(const Matrix& m);

std::size_t rank(const Matrix& m);

/// A subspace of Q^n stored by its unique RREF basis, so two subspaces are
/// equal exactly when their representations are.
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(std::size_t ambient_dim) : ambient_dim_(ambient_dim) {}

  static Subspace zero(std::size_t ambient_dim) { return Subspace(ambient_dim); }
  static Subspace full(std::size_t ambient_dim);
  static Subspace span(std::size_t ambient_dim, const std::vector<SparseVector>& vectors);
  static Subspace span(std::size_t ambient_dim, const std::vector<DenseVector>& vectors);

  std::size_t ambient_dim() const { return ambient_dim_; }
  std::size_t dim() const { return basis_.size(); }
  std::size_t codim() const { return ambient_dim_ - basis_.size(); }
  const std::vector<SparseVector>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  /// Non-pivot coordinates, increasing; these index the quotient basis.
  std::vector<std::size_t> complement() const;

  bool contains(const SparseVector& v) const;
  bool contains(const DenseVector& v) const;
  bool contains(const Subspace& other) const;

  /// v minus its pivot components; the result is supported on the
  /// complement and depends only on v modulo the subspace.
  SparseVector reduce(const SparseVector& v) const;

  Subspace sum(const Subspace& other) const;

  friend bool operator==(const Subspace&, const Subspace&) = default;

 private:
  friend Subspace kernel_basis(const Matrix& m);
  std::size_t ambient_dim_ = 0;
  std::vector<SparseVector> basis_;
  std::vector<std::size_t> pivots_;
};

Subspace kernel_basis(const Matrix& m);

/// Throws std::invalid_argument on dimension mismatch.
bool in_span(const Subspace& s, const DenseVector& v);

/// Coordinates of v modulo s with respect to the complement basis
/// (standard basis vectors at the non-pivot columns).
DenseVector quotient_coords(const Subspace& s, const DenseVector& v);

/// Incremental row-echelon builder over sparse rows. Rows are normalised to a
/// leading one; the leading column of a stored row is never the leading column
/// of another. Only the leading coefficient is eliminated on insertion, which
/// is all that rank and membership need.
class EchelonForm {
 public:
  explicit EchelonForm(std::size_t cols);

  /// Returns true when v was independent of the rows stored so far.
  bool insert(SparseVector v);
  bool in_span(SparseVector v) const;
  std::size_t rank() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }

  /// Back-substitutes into the unique RREF. Rows are returned sorted by pivot.
  std::pair<std::vector<SparseVector>, std::vector<std::size_t>> reduced() &&;

 private:
  SparseVector reduce_leading(SparseVector v) const;

  std::size_t cols_;
  std::vector<SparseVector> rows_;
  std::vector<long> row_of_pivot_;
};

}  // namespace veronese

#endif  // VERONESE_EXACT_LINALG_HPP
