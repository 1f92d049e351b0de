#include "veronese/exact_linalg.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace veronese {

SparseVector to_sparse(const DenseVector& v) {
  SparseVector out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!is_zero(v[i])) out.push_back({i, v[i]});
  }
  return out;
}

DenseVector to_dense(const SparseVector& v, std::size_t dim) {
  DenseVector out(dim);
  for (const auto& e : v) {
    if (e.index >= dim) throw std::invalid_argument("to_dense: index out of range");
    out[e.index] = e.value;
  }
  return out;
}

SparseVector axpy(const SparseVector& a, const Rational& factor, const SparseVector& b) {
  SparseVector out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].index < b[j].index)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].index < a[i].index) {
      out.push_back({b[j].index, factor * b[j].value});
      ++j;
    } else {
      Rational v = a[i].value + factor * b[j].value;
      if (!is_zero(v)) out.push_back({a[i].index, std::move(v)});
      ++i;
      ++j;
    }
  }
  return out;
}

SparseVector scaled(const SparseVector& v, const Rational& factor) {
  if (is_zero(factor)) return {};
  SparseVector out = v;
  for (auto& e : out) e.value *= factor;
  return out;
}

Rational entry(const SparseVector& v, std::size_t index) {
  auto it = std::lower_bound(v.begin(), v.end(), index,
                             [](const SparseEntry& e, std::size_t i) { return e.index < i; });
  if (it != v.end() && it->index == index) return it->value;
  return Rational(0);
}

// ---------------------------------------------------------------------------
// Matrix

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows) {}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.data_[i].push_back({i, Rational(1)});
  return m;
}

Matrix Matrix::from_dense(const std::vector<DenseVector>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("Matrix::from_dense: ragged rows");
    m.data_[r] = to_sparse(rows[r]);
  }
  return m;
}

Matrix Matrix::from_triplets(std::size_t rows, std::size_t cols,
                             std::vector<std::pair<std::pair<std::size_t, std::size_t>, Rational>> triplets) {
  std::sort(triplets.begin(), triplets.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  Matrix m(rows, cols);
  for (std::size_t k = 0; k < triplets.size();) {
    const auto [r, c] = triplets[k].first;
    if (r >= rows || c >= cols) throw std::out_of_range("Matrix::from_triplets: index out of range");
    Rational sum = 0;
    while (k < triplets.size() && triplets[k].first == std::make_pair(r, c)) sum += triplets[k++].second;
    if (!veronese::is_zero(sum)) m.data_[r].push_back({c, std::move(sum)});
  }
  return m;
}

std::size_t Matrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& row : data_) n += row.size();
  return n;
}

Rational Matrix::at(std::size_t r, std::size_t c) const {
  if (r >= rows_ || c >= cols_) throw std::out_of_range("Matrix::at");
  return entry(data_[r], c);
}

void Matrix::set(std::size_t r, std::size_t c, const Rational& value) {
  if (r >= rows_ || c >= cols_) throw std::out_of_range("Matrix::set");
  auto& row = data_[r];
  auto it = std::lower_bound(row.begin(), row.end(), c,
                             [](const SparseEntry& e, std::size_t i) { return e.index < i; });
  const bool present = it != row.end() && it->index == c;
  if (veronese::is_zero(value)) {
    if (present) row.erase(it);
  } else if (present) {
    it->value = value;
  } else {
    row.insert(it, {c, value});
  }
}

void Matrix::set_row(std::size_t r, SparseVector v) {
  if (r >= rows_) throw std::out_of_range("Matrix::set_row");
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (v[k].index >= cols_ || veronese::is_zero(v[k].value) || (k > 0 && v[k - 1].index >= v[k].index)) {
      throw std::invalid_argument("Matrix::set_row: row must be sorted, in range and zero-free");
    }
  }
  data_[r] = std::move(v);
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (const auto& e : data_[r]) t.data_[e.index].push_back({r, e.value});
  }
  return t;
}

DenseVector Matrix::apply(const DenseVector& v) const {
  if (v.size() != cols_) throw std::invalid_argument("Matrix::apply: dimension mismatch");
  DenseVector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (const auto& e : data_[r]) out[r] += e.value * v[e.index];
  }
  return out;
}

SparseVector Matrix::apply(const SparseVector& v) const {
  SparseVector out;
  for (std::size_t r = 0; r < rows_; ++r) {
    Rational acc = 0;
    std::size_t i = 0, j = 0;
    const auto& row = data_[r];
    while (i < row.size() && j < v.size()) {
      if (row[i].index < v[j].index) {
        ++i;
      } else if (v[j].index < row[i].index) {
        ++j;
      } else {
        acc += row[i++].value * v[j++].value;
      }
    }
    if (!veronese::is_zero(acc)) out.push_back({r, std::move(acc)});
  }
  return out;
}

std::vector<DenseVector> Matrix::to_dense() const {
  std::vector<DenseVector> out;
  out.reserve(rows_);
  for (const auto& row : data_) out.push_back(veronese::to_dense(row, cols_));
  return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("Matrix product: dimension mismatch");
  Matrix out(a.rows_, b.cols_);
  for (std::size_t r = 0; r < a.rows_; ++r) {
    SparseVector acc;
    for (const auto& e : a.data_[r]) acc = axpy(acc, e.value, b.data_[e.index]);
    out.data_[r] = std::move(acc);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Echelon forms

EchelonForm::EchelonForm(std::size_t cols) : cols_(cols), row_of_pivot_(cols, -1) {}

SparseVector EchelonForm::reduce_leading(SparseVector v) const {
  while (!v.empty()) {
    const long k = row_of_pivot_[v.front().index];
    if (k < 0) break;
    const Rational factor = -v.front().value;
    v = axpy(v, factor, rows_[static_cast<std::size_t>(k)]);
  }
  return v;
}

bool EchelonForm::insert(SparseVector v) {
  v = reduce_leading(std::move(v));
  if (v.empty()) return false;
  const Rational lead_inv = 1 / v.front().value;
  for (auto& e : v) e.value *= lead_inv;
  row_of_pivot_[v.front().index] = static_cast<long>(rows_.size());
  rows_.push_back(std::move(v));
  return true;
}

bool EchelonForm::in_span(SparseVector v) const { return reduce_leading(std::move(v)).empty(); }

std::pair<std::vector<SparseVector>, std::vector<std::size_t>> EchelonForm::reduced() && {
  std::sort(rows_.begin(), rows_.end(),
            [](const SparseVector& a, const SparseVector& b) { return a.front().index < b.front().index; });
  std::vector<std::size_t> pivots;
  pivots.reserve(rows_.size());
  std::vector<long> row_of(cols_, -1);
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    pivots.push_back(rows_[k].front().index);
    row_of[pivots.back()] = static_cast<long>(k);
  }
  // Rows below k are already fully reduced, so subtracting one of them only
  // introduces entries at non-pivot columns to the right of its pivot.
  for (std::size_t k = rows_.size(); k-- > 0;) {
    auto& row = rows_[k];
    std::size_t pos = 1;
    while (pos < row.size()) {
      const long j = row_of[row[pos].index];
      if (j < 0) {
        ++pos;
        continue;
      }
      const std::size_t col = row[pos].index;
      const Rational factor = -row[pos].value;
      row = axpy(row, factor, rows_[static_cast<std::size_t>(j)]);
      pos = static_cast<std::size_t>(
          std::lower_bound(row.begin(), row.end(), col,
                           [](const SparseEntry& e, std::size_t i) { return e.index < i; }) -
          row.begin());
    }
  }
  return {std::move(rows_), std::move(pivots)};
}

namespace {

// Sparse rows first keeps fill-in down; the final RREF does not depend on
// insertion order.
std::vector<std::size_t> insertion_order(const Matrix& m) {
  std::vector<std::size_t> order(m.rows());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return m.row(a).size() < m.row(b).size(); });
  return order;
}

}  // namespace

RrefResult rref(const Matrix& m) {
  EchelonForm ech(m.cols());
  for (auto r : insertion_order(m)) {
    if (!m.row(r).empty()) ech.insert(m.row(r));
  }
  auto [rows, pivots] = std::move(ech).reduced();
  Matrix reduced(m.rows(), m.cols());
  for (std::size_t k = 0; k < rows.size(); ++k) reduced.set_row(k, std::move(rows[k]));
  return {std::move(reduced), std::move(pivots)};
}

std::size_t rank(const Matrix& m) {
  EchelonForm ech(m.cols());
  for (auto r : insertion_order(m)) {
    if (!m.row(r).empty()) ech.insert(m.row(r));
  }
  return ech.rank();
}

// ---------------------------------------------------------------------------
// Subspace

Subspace Subspace::full(std::size_t ambient_dim) {
  Subspace s(ambient_dim);
  for (std::size_t i = 0; i < ambient_dim; ++i) {
    s.basis_.push_back({{i, Rational(1)}});
    s.pivots_.push_back(i);
  }
  return s;
}

Subspace Subspace::span(std::size_t ambient_dim, const std::vector<SparseVector>& vectors) {
  EchelonForm ech(ambient_dim);
  std::vector<std::size_t> order(vectors.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return vectors[a].size() < vectors[b].size(); });
  for (auto i : order) {
    if (!vectors[i].empty() && vectors[i].back().index >= ambient_dim) {
      throw std::invalid_argument("Subspace::span: vector exceeds ambient dimension");
    }
    ech.insert(vectors[i]);
  }
  Subspace s(ambient_dim);
  std::tie(s.basis_, s.pivots_) = std::move(ech).reduced();
  return s;
}

Subspace Subspace::span(std::size_t ambient_dim, const std::vector<DenseVector>& vectors) {
  std::vector<SparseVector> sparse;
  sparse.reserve(vectors.size());
  for (const auto& v : vectors) {
    if (v.size() != ambient_dim) throw std::invalid_argument("Subspace::span: dimension mismatch");
    sparse.push_back(to_sparse(v));
  }
  return span(ambient_dim, sparse);
}

std::vector<std::size_t> Subspace::complement() const {
  std::vector<std::size_t> out;
  out.reserve(codim());
  std::size_t k = 0;
  for (std::size_t c = 0; c < ambient_dim_; ++c) {
    if (k < pivots_.size() && pivots_[k] == c) {
      ++k;
    } else {
      out.push_back(c);
    }
  }
  return out;
}

SparseVector Subspace::reduce(const SparseVector& v) const {
  // RREF rows vanish on every other pivot column, so one pass with the
  // original pivot coefficients suffices.
  SparseVector out = v;
  std::size_t k = 0;
  for (const auto& e : v) {
    if (e.index >= ambient_dim_) throw std::invalid_argument("Subspace::reduce: dimension mismatch");
    while (k < pivots_.size() && pivots_[k] < e.index) ++k;
    if (k < pivots_.size() && pivots_[k] == e.index) out = axpy(out, -e.value, basis_[k]);
  }
  return out;
}

bool Subspace::contains(const SparseVector& v) const { return reduce(v).empty(); }

bool Subspace::contains(const DenseVector& v) const {
  if (v.size() != ambient_dim_) throw std::invalid_argument("Subspace::contains: dimension mismatch");
  return contains(to_sparse(v));
}

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_dim_ != ambient_dim_) throw std::invalid_argument("Subspace::contains: dimension mismatch");
  return std::all_of(other.basis_.begin(), other.basis_.end(),
                     [this](const SparseVector& v) { return contains(v); });
}

Subspace Subspace::sum(const Subspace& other) const {
  if (other.ambient_dim_ != ambient_dim_) throw std::invalid_argument("Subspace::sum: dimension mismatch");
  std::vector<SparseVector> all = basis_;
  all.insert(all.end(), other.basis_.begin(), other.basis_.end());
  return span(ambient_dim_, all);
}

Subspace kernel_basis(const Matrix& m) {
  const auto [reduced, pivots] = rref(m);
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto p : pivots) is_pivot[p] = true;

  // Kernel vector for free column f: e_f - sum_k R[k][f] e_{p_k}.
  std::vector<SparseVector> vecs(n);
  for (std::size_t c = 0; c < n; ++c) {
    if (!is_pivot[c]) vecs[c].push_back({c, Rational(1)});
  }
  for (std::size_t k = 0; k < pivots.size(); ++k) {
    for (const auto& e : reduced.row(k)) {
      if (!is_pivot[e.index]) vecs[e.index].push_back({pivots[k], -e.value});
    }
  }
  std::vector<SparseVector> kernel;
  for (std::size_t c = 0; c < n; ++c) {
    if (is_pivot[c]) continue;
    auto& v = vecs[c];
    std::sort(v.begin(), v.end(), [](const SparseEntry& a, const SparseEntry& b) { return a.index < b.index; });
    kernel.push_back(std::move(v));
  }
  return Subspace::span(n, kernel);
}

bool in_span(const Subspace& s, const DenseVector& v) {
  if (v.size() != s.ambient_dim()) throw std::invalid_argument("in_span: dimension mismatch");
  return s.contains(v);
}

DenseVector quotient_coords(const Subspace& s, const DenseVector& v) {
  if (v.size() != s.ambient_dim()) throw std::invalid_argument("quotient_coords: dimension mismatch");
  const SparseVector r = s.reduce(to_sparse(v));
  const auto comp = s.complement();
  DenseVector out(comp.size());
  std::size_t k = 0;
  for (const auto& e : r) {
    while (comp[k] < e.index) ++k;
    out[k] = e.value;
  }
  return out;
}

}  // namespace veronese
