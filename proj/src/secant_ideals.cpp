#include "veronese/secant_ideals.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace veronese {

QuotientPiece::QuotientPiece(Subspace ideal)
    : ideal_(std::move(ideal)),
      complement_(ideal_.complement()),
      complement_pos_(ideal_.ambient_dim(), -1),
      row_of_pivot_(ideal_.ambient_dim(), -1) {
  for (std::size_t k = 0; k < complement_.size(); ++k) complement_pos_[complement_[k]] = static_cast<long>(k);
  for (std::size_t k = 0; k < ideal_.pivots().size(); ++k) row_of_pivot_[ideal_.pivots()[k]] = static_cast<long>(k);
}

SparseVector QuotientPiece::normal_form(std::size_t monomial) const {
  if (complement_pos_.at(monomial) >= 0) return {{static_cast<std::size_t>(complement_pos_[monomial]), Rational(1)}};
  // A pivot monomial is congruent to minus the rest of its RREF row, which
  // is supported on the complement.
  const auto& row = ideal_.basis()[static_cast<std::size_t>(row_of_pivot_[monomial])];
  SparseVector out;
  out.reserve(row.size() - 1);
  for (std::size_t k = 1; k < row.size(); ++k) {
    out.push_back({static_cast<std::size_t>(complement_pos_[row[k].index]), -row[k].value});
  }
  return out;
}

// ---------------------------------------------------------------------------

SecantCache::SecantCache(GradedAlgebra algebra) : algebra_(std::move(algebra)) {}

const QuotientPiece& SecantCache::piece(std::uint32_t r, std::uint32_t d, std::uint32_t m) {
  if (r == 0) throw std::invalid_argument("secant ideals are defined for r >= 1");
  Cell* cell = nullptr;
  {
    std::lock_guard lock(mutex_);
    auto& slot = cells_[{r, d, m}];
    if (!slot) slot = std::make_unique<Cell>();
    cell = slot.get();
  }
  std::call_once(cell->once, [&] { cell->value = compute(r, d, m); });
  return cell->value;
}

std::size_t SecantCache::cells_computed() const {
  std::lock_guard lock(mutex_);
  return cells_.size();
}

QuotientPiece SecantCache::compute(std::uint32_t r, std::uint32_t d, std::uint32_t m) {
  if (r == 1) return QuotientPiece(ideal_one(algebra_, d, m));
  return QuotientPiece(kernel_basis(comultiplication_matrix(*this, r, d, m)));
}

Subspace ideal_one(const GradedAlgebra& b, std::uint32_t d, std::uint32_t m) {
  const auto& basis = sym_basis(b, d, m);
  Matrix mult(b.dim(d * m), basis.size());
  for (std::size_t c = 0; c < basis.size(); ++c) {
    const long k = b.mult_basis_many(d, basis[c]);
    if (k >= 0) mult.set(static_cast<std::size_t>(k), c, Rational(1));
  }
  return kernel_basis(mult);
}

Matrix comultiplication_matrix(SecantCache& cache, std::uint32_t r, std::uint32_t d, std::uint32_t m) {
  if (r < 2) throw std::invalid_argument("comultiplication_matrix: r must be at least 2");
  const auto& b = cache.algebra();
  const auto& basis = sym_basis(b, d, m);

  std::vector<const QuotientPiece*> left(m + 1), right(m + 1);
  std::vector<std::size_t> offset(m + 2, 0);
  for (std::uint32_t i = 0; i <= m; ++i) {
    left[i] = &cache.piece(1, d, i);
    right[i] = &cache.piece(r - 1, d, m - i);
    offset[i + 1] = offset[i] + left[i]->dim() * right[i]->dim();
  }

  std::vector<std::pair<std::pair<std::size_t, std::size_t>, Rational>> triplets;
  for (std::size_t c = 0; c < basis.size(); ++c) {
    for (std::uint32_t i = 0; i <= m; ++i) {
      if (left[i]->dim() == 0 || right[i]->dim() == 0) continue;
      const auto& lbasis = sym_basis(b, d, i);
      const auto& rbasis = sym_basis(b, d, m - i);
      const std::size_t width = right[i]->dim();
      for (const auto& term : coproduct_monomial(basis[c], i)) {
        const auto lnf = left[i]->normal_form(lbasis.index(term.left));
        const auto rnf = right[i]->normal_form(rbasis.index(term.right));
        for (const auto& le : lnf) {
          for (const auto& re : rnf) {
            triplets.push_back({{offset[i] + le.index * width + re.index, c}, term.coeff * le.value * re.value});
          }
        }
      }
    }
  }
  return Matrix::from_triplets(offset[m + 1], basis.size(), std::move(triplets));
}

Subspace secant(SecantCache& cache, std::uint32_t r, std::uint32_t d, std::uint32_t m) {
  return cache.ideal(r, d, m);
}

std::vector<std::size_t> sec_hilbert(SecantCache& cache, std::uint32_t r, std::uint32_t d, std::uint32_t m_max) {
  std::vector<std::size_t> dims;
  for (std::uint32_t m = 0; m <= m_max; ++m) dims.push_back(cache.piece(r, d, m).dim());
  return dims;
}

bool is_in_secant(SecantCache& cache, std::uint32_t r, std::uint32_t d, std::uint32_t m, const SymElement& f) {
  if (f.degree != d || f.width != m) throw std::invalid_argument("is_in_secant: element lives in another piece");
  const auto& ideal = cache.ideal(r, d, m);
  if (f.coords.size() != ideal.ambient_dim()) throw std::invalid_argument("is_in_secant: dimension mismatch");
  return ideal.contains(f.coords);
}

Subspace ideal_piece_from_generators(const GradedAlgebra& b, const std::vector<SymElement>& gens, std::uint32_t m) {
  if (gens.empty()) throw std::invalid_argument("ideal_piece_from_generators: no generators");
  const std::uint32_t d = gens.front().degree, m0 = gens.front().width;
  for (const auto& g : gens) {
    if (g.degree != d || g.width != m0) throw std::invalid_argument("ideal_piece_from_generators: mixed pieces");
  }
  if (m < m0) throw std::invalid_argument("ideal_piece_from_generators: width below generator width");
  std::vector<SparseVector> products;
  const auto& cofactors = sym_basis(b, d, m - m0);
  for (const auto& g : gens) {
    for (const auto& u : cofactors.monomials()) {
      products.push_back(to_sparse(sym_mult(b, g, sym_monomial(b, d, u)).coords));
    }
  }
  return Subspace::span(sym_basis(b, d, m).size(), products);
}

namespace {

using Polynomial = std::map<SymMonomial, Rational>;

Polynomial laplace_det(const std::vector<std::vector<std::uint32_t>>& entries, std::vector<std::size_t> rows,
                       const std::vector<std::size_t>& cols) {
  if (rows.size() == 1) return {{{entries[rows[0]][cols[0]]}, Rational(1)}};
  const std::size_t top = rows.front();
  rows.erase(rows.begin());
  Polynomial out;
  for (std::size_t a = 0; a < cols.size(); ++a) {
    std::vector<std::size_t> rest = cols;
    rest.erase(rest.begin() + static_cast<long>(a));
    const Rational sign = (a % 2 == 0) ? 1 : -1;
    for (const auto& [mono, c] : laplace_det(entries, rows, rest)) {
      auto key = multiset_union(mono, {entries[top][cols[a]]});
      out[key] += sign * c;
    }
  }
  std::erase_if(out, [](const auto& kv) { return is_zero(kv.second); });
  return out;
}

}  // namespace

std::vector<SymElement> catalecticant_minors(std::uint32_t d, std::uint32_t k) {
  if (k == 0 || d + 2 < 2 * k) throw std::invalid_argument("catalecticant_minors: degree too small for this size");
  const std::uint32_t ncols = d - k + 2;
  std::vector<std::vector<std::uint32_t>> entries(k, std::vector<std::uint32_t>(ncols));
  for (std::uint32_t i = 0; i < k; ++i) {
    for (std::uint32_t j = 0; j < ncols; ++j) entries[i][j] = i + j;
  }
  std::vector<std::size_t> rows(k);
  for (std::uint32_t i = 0; i < k; ++i) rows[i] = i;

  const auto& basis = SymBasis::get(d + 1, k);
  std::vector<SymElement> out;
  for (const auto& cols32 : increasing_subsets(ncols, k)) {
    const std::vector<std::size_t> cols(cols32.begin(), cols32.end());
    SymElement f{d, k, DenseVector(basis.size())};
    for (const auto& [mono, c] : laplace_det(entries, rows, cols)) f.coords[basis.index(mono)] += c;
    out.push_back(std::move(f));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Random data and the closure check

AlgElement random_element(const GradedAlgebra& b, std::uint32_t d, std::mt19937_64& rng, std::size_t support) {
  const std::size_t n = b.dim(d);
  AlgElement x{d, DenseVector(n)};
  if (n == 0) return x;
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  std::uniform_int_distribution<int> coeff(-3, 3);
  const std::size_t count = std::uniform_int_distribution<std::size_t>(1, std::max<std::size_t>(1, support))(rng);
  for (std::size_t k = 0; k < count; ++k) {
    int c = 0;
    while (c == 0) c = coeff(rng);
    x.coords[pick(rng)] += c;
  }
  if (std::all_of(x.coords.begin(), x.coords.end(), [](const Rational& q) { return is_zero(q); })) {
    x.coords[pick(rng)] = 1;
  }
  return x;
}

BasicMorphismB random_basic_morphism(const GradedAlgebra& b, ObjectDM source, ObjectDM target, std::mt19937_64& rng) {
  if (source.d > target.d || source.m > target.m) throw std::invalid_argument("random_basic_morphism: empty hom-set");
  std::vector<std::uint32_t> slots(target.m);
  for (std::uint32_t i = 0; i < target.m; ++i) slots[i] = i;
  std::shuffle(slots.begin(), slots.end(), rng);
  std::vector<std::uint32_t> a1(slots.begin(), slots.begin() + source.m);
  std::sort(a1.begin(), a1.end());
  BasicMorphismB alpha{source, target, a1, {}, {}};
  for (std::uint32_t k = 0; k < target.m - source.m; ++k) alpha.alpha2.push_back(random_element(b, target.d, rng));
  for (std::uint32_t k = 0; k < source.m; ++k) alpha.alpha3.push_back(random_element(b, target.d - source.d, rng));
  return alpha;
}

namespace {

SymElement random_ideal_element(const Subspace& ideal, std::uint32_t d, std::uint32_t m, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coeff(-3, 3);
  SparseVector acc;
  while (acc.empty()) {
    for (const auto& v : ideal.basis()) acc = axpy(acc, Rational(coeff(rng)), v);
  }
  return SymElement{d, m, to_dense(acc, ideal.ambient_dim())};
}

// Each monomial laid out in sorted slot order; not invariant in general.
TensorElement sorted_lift(const GradedAlgebra& b, const SymElement& f) {
  const auto& basis = sym_basis(b, f.degree, f.width);
  TensorElement x{f.degree, f.width, {}};
  for (std::size_t k = 0; k < basis.size(); ++k) x.add(basis[k], f.coords[k]);
  return x;
}

}  // namespace

ClosureReport submodule_closure_check(SecantCache& cache, const ClosureConfig& config, std::mt19937_64& rng) {
  const auto& b = cache.algebra();
  std::vector<std::tuple<std::uint32_t, std::uint32_t, std::uint32_t>> sources;
  for (std::uint32_t r = 1; r <= config.r_max; ++r) {
    for (std::uint32_t d = 1; d <= config.d_max; ++d) {
      for (std::uint32_t m = 0; m <= config.m_max; ++m) {
        if (cache.ideal(r, d, m).dim() > 0) sources.emplace_back(r, d, m);
      }
    }
  }
  ClosureReport report;
  if (sources.empty()) return report;
  std::uniform_int_distribution<std::size_t> pick(0, sources.size() - 1);
  for (std::size_t s = 0; s < config.samples; ++s) {
    const auto [r, d, m] = sources[pick(rng)];
    const std::uint32_t e = std::uniform_int_distribution<std::uint32_t>(d, config.d_max)(rng);
    const std::uint32_t n = std::uniform_int_distribution<std::uint32_t>(m, config.m_max)(rng);
    const auto f = random_ideal_element(cache.ideal(r, d, m), d, m, rng);
    const auto alpha = random_basic_morphism(b, {d, m}, {e, n}, rng);
    // Alternate between the symmetrized-category action on Sym and the
    // symmetrized combination applied to a non-invariant tensor lift.
    const SymElement image = (s % 2 == 0) ? apply_basic_sym(b, alpha, f)
                                          : to_sym(b, apply_combo_tensor(b, symmetrize_basic(alpha), sorted_lift(b, f)));
    ++report.cases;
    if (!is_in_secant(cache, r, e, n, image)) {
      if (report.violations++ == 0) {
        std::ostringstream os;
        os << "r=" << r << " (" << d << "," << m << ")->(" << e << "," << n << ") case " << s;
        report.first_violation = os.str();
      }
    }
  }
  return report;
}

}  // namespace veronese
