#include "veronese/graded_algebra.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace veronese {

namespace {

constexpr std::uint32_t kMaxDegree = 1024;

Point add_points(const Point& a, const Point& b) {
  Point out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

bool point_divides(const Point& a, const Point& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

}  // namespace

struct GradedAlgebra::Cache {
  struct Degree {
    std::vector<Point> basis;
    std::map<Point, std::size_t> index;
  };
  std::mutex mutex;
  std::array<std::atomic<const Degree*>, kMaxDegree> degrees{};
  std::vector<std::unique_ptr<Degree>> owned;
};

GradedAlgebra::GradedAlgebra(AlgebraKind kind, std::uint32_t vars, std::vector<Point> generators)
    : kind_(kind), vars_(vars), generators_(std::move(generators)), cache_(std::make_shared<Cache>()) {}

GradedAlgebra GradedAlgebra::polynomial(std::uint32_t vars) {
  if (vars == 0) throw std::invalid_argument("polynomial ring needs at least one variable");
  return GradedAlgebra(AlgebraKind::Polynomial, vars, {});
}

GradedAlgebra GradedAlgebra::semigroup(std::vector<Point> generators) {
  if (generators.empty()) throw std::invalid_argument("semigroup ring needs at least one generator");
  const std::size_t k = generators.front().size();
  if (k == 0) throw std::invalid_argument("semigroup generators must be nonempty vectors");
  for (const auto& g : generators) {
    if (g.size() != k) throw std::invalid_argument("semigroup generators must share one length");
  }
  std::sort(generators.begin(), generators.end());
  generators.erase(std::unique(generators.begin(), generators.end()), generators.end());

  // Grading check: G * l = (1,..,1) must be solvable, i.e. the last column of
  // the augmented matrix is not a pivot.
  std::vector<DenseVector> aug;
  for (const auto& g : generators) {
    DenseVector row;
    for (auto x : g) row.emplace_back(static_cast<long>(x));
    row.emplace_back(1);
    aug.push_back(std::move(row));
  }
  const auto pivots = rref(Matrix::from_dense(aug)).pivots;
  if (!pivots.empty() && pivots.back() == k) {
    throw std::invalid_argument("semigroup generators do not lie on a common affine hyperplane; no grading");
  }
  return GradedAlgebra(AlgebraKind::Semigroup, static_cast<std::uint32_t>(k), std::move(generators));
}

GradedAlgebra GradedAlgebra::monomial_quotient(std::uint32_t vars, std::vector<Point> generators) {
  if (vars == 0) throw std::invalid_argument("polynomial ring needs at least one variable");
  for (const auto& g : generators) {
    if (g.size() != vars) throw std::invalid_argument("monomial generators must have one exponent per variable");
    if (std::any_of(g.begin(), g.end(), [](std::int64_t x) { return x < 0; })) {
      throw std::invalid_argument("monomial generators must have nonnegative exponents");
    }
    if (std::all_of(g.begin(), g.end(), [](std::int64_t x) { return x == 0; })) {
      throw std::invalid_argument("the unit monomial cannot be a generator");
    }
    if (std::accumulate(g.begin(), g.end(), std::int64_t{0}) == 1) {
      throw std::invalid_argument("killing a variable: use fewer variables instead");
    }
  }
  std::sort(generators.begin(), generators.end());
  generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
  return GradedAlgebra(AlgebraKind::MonomialQuotient, vars, std::move(generators));
}

GradedAlgebra GradedAlgebra::p1() { return semigroup({{1, 0}, {0, 1}}); }

std::string GradedAlgebra::describe() const {
  std::ostringstream os;
  auto gens = [&] {
    os << '[';
    for (std::size_t i = 0; i < generators_.size(); ++i) {
      os << (i ? "," : "") << '[';
      for (std::size_t j = 0; j < generators_[i].size(); ++j) os << (j ? "," : "") << generators_[i][j];
      os << ']';
    }
    os << ']';
  };
  switch (kind_) {
    case AlgebraKind::Polynomial:
      os << "polynomial(" << vars_ << ")";
      break;
    case AlgebraKind::Semigroup:
      os << "semigroup";
      gens();
      break;
    case AlgebraKind::MonomialQuotient:
      os << "monomial_quotient(" << vars_ << ")";
      gens();
      break;
  }
  return os.str();
}

bool operator==(const GradedAlgebra& a, const GradedAlgebra& b) {
  return a.kind_ == b.kind_ && a.vars_ == b.vars_ && a.generators_ == b.generators_;
}

const std::vector<Point>& GradedAlgebra::build_degree(std::uint32_t d) const {
  if (d >= kMaxDegree) throw std::out_of_range("GradedAlgebra: degree beyond supported range");
  if (const auto* deg = cache_->degrees[d].load(std::memory_order_acquire)) return deg->basis;

  std::lock_guard lock(cache_->mutex);
  // Builds every missing degree up to d; semigroup degrees depend on d - 1.
  for (std::uint32_t k = 0; k <= d; ++k) {
    if (cache_->degrees[k].load(std::memory_order_relaxed)) continue;
    auto deg = std::make_unique<Cache::Degree>();
    if (kind_ == AlgebraKind::Semigroup) {
      if (k == 0) {
        deg->basis.push_back(Point(vars_, 0));
      } else {
        const auto* prev = cache_->degrees[k - 1].load(std::memory_order_relaxed);
        for (const auto& p : prev->basis) {
          for (const auto& g : generators_) deg->basis.push_back(add_points(p, g));
        }
        std::sort(deg->basis.begin(), deg->basis.end());
        deg->basis.erase(std::unique(deg->basis.begin(), deg->basis.end()), deg->basis.end());
      }
    } else {
      for (const auto& ev : multi(vars_, k)) {
        Point p(ev.exponents().begin(), ev.exponents().end());
        const bool killed = std::any_of(generators_.begin(), generators_.end(),
                                        [&](const Point& g) { return point_divides(g, p); });
        if (!killed) deg->basis.push_back(std::move(p));
      }
    }
    for (std::size_t i = 0; i < deg->basis.size(); ++i) deg->index.emplace(deg->basis[i], i);
    cache_->degrees[k].store(deg.get(), std::memory_order_release);
    cache_->owned.push_back(std::move(deg));
  }
  return cache_->degrees[d].load(std::memory_order_acquire)->basis;
}

std::size_t GradedAlgebra::dim(std::uint32_t d) const { return basis(d).size(); }

const std::vector<Point>& GradedAlgebra::basis(std::uint32_t d) const { return build_degree(d); }

long GradedAlgebra::index_of(std::uint32_t d, const Point& p) const {
  build_degree(d);
  const auto* deg = cache_->degrees[d].load(std::memory_order_acquire);
  auto it = deg->index.find(p);
  return it == deg->index.end() ? -1 : static_cast<long>(it->second);
}

long GradedAlgebra::mult_basis(std::uint32_t d, std::size_t i, std::uint32_t e, std::size_t j) const {
  return index_of(d + e, add_points(basis(d).at(i), basis(e).at(j)));
}

long GradedAlgebra::mult_basis_many(std::uint32_t d, const std::vector<std::uint32_t>& indices) const {
  Point acc(vars_, 0);
  const auto& bd = basis(d);
  for (auto i : indices) acc = add_points(acc, bd.at(i));
  return index_of(d * static_cast<std::uint32_t>(indices.size()), acc);
}

// ---------------------------------------------------------------------------
// Elements

AlgElement basis_element(const GradedAlgebra& b, std::uint32_t d, std::size_t index) {
  AlgElement x{d, DenseVector(b.dim(d))};
  x.coords.at(index) = 1;
  return x;
}

AlgElement unit(const GradedAlgebra& b) { return basis_element(b, 0, 0); }

AlgElement operator+(const AlgElement& x, const AlgElement& y) {
  if (x.degree != y.degree || x.coords.size() != y.coords.size()) {
    throw std::invalid_argument("AlgElement: sum of elements of different degrees");
  }
  AlgElement out = x;
  for (std::size_t i = 0; i < y.coords.size(); ++i) out.coords[i] += y.coords[i];
  return out;
}

AlgElement operator*(const Rational& c, const AlgElement& x) {
  AlgElement out = x;
  for (auto& v : out.coords) v *= c;
  return out;
}

AlgElement mult(const GradedAlgebra& b, const AlgElement& x, const AlgElement& y) {
  if (x.coords.size() != b.dim(x.degree) || y.coords.size() != b.dim(y.degree)) {
    throw std::invalid_argument("mult: element does not belong to this algebra");
  }
  AlgElement out{x.degree + y.degree, DenseVector(b.dim(x.degree + y.degree))};
  for (std::size_t i = 0; i < x.coords.size(); ++i) {
    if (is_zero(x.coords[i])) continue;
    for (std::size_t j = 0; j < y.coords.size(); ++j) {
      if (is_zero(y.coords[j])) continue;
      const long k = b.mult_basis(x.degree, i, y.degree, j);
      if (k >= 0) out.coords[static_cast<std::size_t>(k)] += x.coords[i] * y.coords[j];
    }
  }
  return out;
}

Matrix mult_matrix(const GradedAlgebra& b, std::uint32_t d, std::uint32_t e) {
  const std::size_t nd = b.dim(d), ne = b.dim(e);
  Matrix m(b.dim(d + e), nd * ne);
  for (std::size_t i = 0; i < nd; ++i) {
    for (std::size_t j = 0; j < ne; ++j) {
      const long k = b.mult_basis(d, i, e, j);
      if (k >= 0) m.set(static_cast<std::size_t>(k), i * ne + j, Rational(1));
    }
  }
  return m;
}

// ---------------------------------------------------------------------------
// Symmetric powers

SymBasis::SymBasis(std::uint32_t n, std::uint32_t m) : n_(n), m_(m), monomials_(sorted_multisets(n, m)) {
  for (std::size_t i = 0; i < monomials_.size(); ++i) index_.emplace(monomials_[i], i);
}

const SymBasis& SymBasis::get(std::uint32_t n, std::uint32_t m) {
  static std::mutex mutex;
  static std::map<std::pair<std::uint32_t, std::uint32_t>, std::unique_ptr<SymBasis>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[{n, m}];
  if (!slot) slot.reset(new SymBasis(n, m));
  return *slot;
}

std::size_t SymBasis::index(const SymMonomial& mono) const {
  auto it = index_.find(mono);
  if (it == index_.end()) throw std::out_of_range("SymBasis::index: not a basis monomial");
  return it->second;
}

const SymBasis& sym_basis(const GradedAlgebra& b, std::uint32_t d, std::uint32_t m) {
  return SymBasis::get(static_cast<std::uint32_t>(b.dim(d)), m);
}

SymElement sym_zero(const GradedAlgebra& b, std::uint32_t d, std::uint32_t m) {
  return SymElement{d, m, DenseVector(sym_basis(b, d, m).size())};
}

SymElement sym_monomial(const GradedAlgebra& b, std::uint32_t d, const SymMonomial& mono, const Rational& coeff) {
  SymMonomial sorted = mono;
  std::sort(sorted.begin(), sorted.end());
  auto f = sym_zero(b, d, static_cast<std::uint32_t>(mono.size()));
  f.coords[sym_basis(b, d, f.width).index(sorted)] = coeff;
  return f;
}

SymElement operator+(const SymElement& f, const SymElement& g) {
  if (f.degree != g.degree || f.width != g.width || f.coords.size() != g.coords.size()) {
    throw std::invalid_argument("SymElement: sum of elements from different pieces");
  }
  SymElement out = f;
  for (std::size_t i = 0; i < g.coords.size(); ++i) out.coords[i] += g.coords[i];
  return out;
}

SymElement operator*(const Rational& c, const SymElement& f) {
  SymElement out = f;
  for (auto& v : out.coords) v *= c;
  return out;
}

SymMonomial multiset_union(const SymMonomial& a, const SymMonomial& b) {
  SymMonomial out;
  out.reserve(a.size() + b.size());
  std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

SymElement sym_mult(const GradedAlgebra& b, const SymElement& f, const SymElement& g) {
  if (f.degree != g.degree) throw std::invalid_argument("sym_mult: factors of different degrees");
  const auto& bf = sym_basis(b, f.degree, f.width);
  const auto& bg = sym_basis(b, g.degree, g.width);
  const auto& bo = sym_basis(b, f.degree, f.width + g.width);
  if (f.coords.size() != bf.size() || g.coords.size() != bg.size()) {
    throw std::invalid_argument("sym_mult: element does not match its basis");
  }
  SymElement out{f.degree, f.width + g.width, DenseVector(bo.size())};
  for (std::size_t i = 0; i < bf.size(); ++i) {
    if (is_zero(f.coords[i])) continue;
    for (std::size_t j = 0; j < bg.size(); ++j) {
      if (is_zero(g.coords[j])) continue;
      out.coords[bo.index(multiset_union(bf[i], bg[j]))] += f.coords[i] * g.coords[j];
    }
  }
  return out;
}

std::vector<CoproductTerm> coproduct_monomial(const SymMonomial& mono, std::uint32_t i) {
  if (i > mono.size()) throw std::invalid_argument("coproduct: component index exceeds width");
  std::vector<std::pair<std::uint32_t, std::uint32_t>> runs;  // (value, multiplicity)
  for (auto v : mono) {
    if (!runs.empty() && runs.back().first == v) {
      ++runs.back().second;
    } else {
      runs.emplace_back(v, 1);
    }
  }
  std::vector<CoproductTerm> out;
  std::vector<std::uint32_t> take(runs.size());
  auto rec = [&](auto&& self, std::size_t k, std::uint32_t remaining) -> void {
    if (k == runs.size()) {
      if (remaining != 0) return;
      CoproductTerm t{{}, {}, Rational(1)};
      for (std::size_t j = 0; j < runs.size(); ++j) {
        t.left.insert(t.left.end(), take[j], runs[j].first);
        t.right.insert(t.right.end(), runs[j].second - take[j], runs[j].first);
        t.coeff *= static_cast<unsigned long>(binomial(runs[j].second, take[j]));
      }
      out.push_back(std::move(t));
      return;
    }
    for (std::uint32_t c = 0; c <= std::min(runs[k].second, remaining); ++c) {
      take[k] = c;
      self(self, k + 1, remaining - c);
    }
  };
  rec(rec, 0, i);
  return out;
}

SymTensor2 coproduct_component(const GradedAlgebra& b, const SymElement& f, std::uint32_t i) {
  if (i > f.width) throw std::invalid_argument("coproduct_component: i out of range");
  const auto& bf = sym_basis(b, f.degree, f.width);
  const auto& bl = sym_basis(b, f.degree, i);
  const auto& br = sym_basis(b, f.degree, f.width - i);
  SymTensor2 out;
  for (std::size_t k = 0; k < bf.size(); ++k) {
    if (is_zero(f.coords[k])) continue;
    for (const auto& t : coproduct_monomial(bf[k], i)) {
      auto& slot = out[{bl.index(t.left), br.index(t.right)}];
      slot += f.coords[k] * t.coeff;
    }
  }
  std::erase_if(out, [](const auto& kv) { return is_zero(kv.second); });
  return out;
}

// ---------------------------------------------------------------------------
// Tensor powers

void TensorElement::add(const std::vector<std::uint32_t>& key, const Rational& c) {
  if (is_zero(c)) return;
  auto [it, inserted] = terms.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (is_zero(it->second)) terms.erase(it);
  }
}

TensorElement operator+(const TensorElement& x, const TensorElement& y) {
  if (x.degree != y.degree || x.width != y.width) throw std::invalid_argument("TensorElement: mismatched sum");
  TensorElement out = x;
  for (const auto& [k, c] : y.terms) out.add(k, c);
  return out;
}

TensorElement operator*(const Rational& c, const TensorElement& x) {
  TensorElement out{x.degree, x.width, {}};
  for (const auto& [k, v] : x.terms) out.add(k, c * v);
  return out;
}

SymElement to_sym(const GradedAlgebra& b, const TensorElement& x) {
  auto f = sym_zero(b, x.degree, x.width);
  const auto& basis = sym_basis(b, x.degree, x.width);
  for (const auto& [key, c] : x.terms) {
    SymMonomial sorted = key;
    std::sort(sorted.begin(), sorted.end());
    f.coords[basis.index(sorted)] += c;
  }
  return f;
}

TensorElement sym_lift(const GradedAlgebra& b, const SymElement& f) {
  const auto& basis = sym_basis(b, f.degree, f.width);
  TensorElement out{f.degree, f.width, {}};
  for (std::size_t k = 0; k < basis.size(); ++k) {
    if (is_zero(f.coords[k])) continue;
    std::vector<std::vector<std::uint32_t>> orderings;
    auto word = basis[k];
    do {
      orderings.push_back(word);
    } while (std::next_permutation(word.begin(), word.end()));
    const Rational share = f.coords[k] / static_cast<unsigned long>(orderings.size());
    for (const auto& o : orderings) out.add(o, share);
  }
  return out;
}

TensorElement symmetrize_tensor(const TensorElement& x) {
  TensorElement out{x.degree, x.width, {}};
  const auto perms = all_permutations(x.width);
  const Rational w(1, static_cast<unsigned long>(perms.size()));
  for (const auto& [key, c] : x.terms) {
    for (const auto& s : perms) {
      std::vector<std::uint32_t> moved(key.size());
      for (std::size_t i = 0; i < key.size(); ++i) moved[s[i]] = key[i];
      out.add(moved, c * w);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Basic morphisms

std::vector<std::uint32_t> BasicMorphismB::free_slots() const {
  std::vector<std::uint32_t> out;
  std::size_t k = 0;
  for (std::uint32_t i = 0; i < target.m; ++i) {
    if (k < alpha1.size() && alpha1[k] == i) {
      ++k;
    } else {
      out.push_back(i);
    }
  }
  return out;
}

void BasicMorphismB::validate(const GradedAlgebra& b) const {
  auto fail = [](const char* what) { throw std::invalid_argument(std::string("BasicMorphismB: ") + what); };
  if (source.d > target.d || source.m > target.m) fail("no morphisms between these objects");
  if (alpha1.size() != source.m) fail("alpha1 must have one entry per source slot");
  for (std::size_t j = 0; j < alpha1.size(); ++j) {
    if (alpha1[j] >= target.m || (j > 0 && alpha1[j - 1] >= alpha1[j])) fail("alpha1 must be increasing into [n]");
  }
  if (alpha2.size() != target.m - source.m) fail("alpha2 must have one entry per free slot");
  if (alpha3.size() != source.m) fail("alpha3 must have one entry per source slot");
  for (const auto& x : alpha2) {
    if (x.degree != target.d || x.coords.size() != b.dim(target.d)) fail("alpha2 values must lie in B_e");
  }
  for (const auto& x : alpha3) {
    if (x.degree != target.d - source.d || x.coords.size() != b.dim(target.d - source.d)) {
      fail("alpha3 values must lie in B_{e-d}");
    }
  }
}

BasicMorphismB identity_basic(const GradedAlgebra& b, ObjectDM x) {
  BasicMorphismB id{x, x, {}, {}, {}};
  id.alpha1.resize(x.m);
  std::iota(id.alpha1.begin(), id.alpha1.end(), 0u);
  id.alpha3.assign(x.m, unit(b));
  return id;
}

BasicMorphismB compose_basic(const GradedAlgebra& b, const BasicMorphismB& beta, const BasicMorphismB& alpha) {
  if (alpha.target != beta.source) throw std::invalid_argument("compose_basic: target(alpha) != source(beta)");
  BasicMorphismB gamma{alpha.source, beta.target, {}, {}, {}};
  for (auto j : alpha.alpha1) gamma.alpha1.push_back(beta.alpha1[j]);

  const std::uint32_t n = beta.source.m, p = beta.target.m;
  std::vector<long> alpha_free_rank(n, -1);
  {
    const auto fs = alpha.free_slots();
    for (std::size_t k = 0; k < fs.size(); ++k) alpha_free_rank[fs[k]] = static_cast<long>(k);
  }
  std::vector<long> beta_preimage(p, -1);
  for (std::uint32_t i = 0; i < n; ++i) beta_preimage[beta.alpha1[i]] = i;
  std::vector<bool> in_gamma_image(p, false);
  for (auto s : gamma.alpha1) in_gamma_image[s] = true;
  std::size_t beta_free_idx = 0;
  for (std::uint32_t i = 0; i < p; ++i) {
    if (beta_preimage[i] < 0) {
      gamma.alpha2.push_back(beta.alpha2[beta_free_idx++]);
    } else if (!in_gamma_image[i]) {
      const auto ip = static_cast<std::uint32_t>(beta_preimage[i]);
      gamma.alpha2.push_back(mult(b, alpha.alpha2[static_cast<std::size_t>(alpha_free_rank[ip])], beta.alpha3[ip]));
    }
  }
  for (std::size_t i = 0; i < alpha.alpha3.size(); ++i) {
    gamma.alpha3.push_back(mult(b, alpha.alpha3[i], beta.alpha3[alpha.alpha1[i]]));
  }
  return gamma;
}

BasicMorphismB sigma_act(const Permutation& sigma, const BasicMorphismB& alpha) {
  const std::uint32_t n = alpha.target.m;
  if (sigma.size() != n || !is_permutation(sigma)) {
    throw std::invalid_argument("sigma_act: sigma must be a permutation of the target slots");
  }
  const Permutation tau_inv = inverse(induced_permutation(sigma, alpha.alpha1));
  const Permutation sigma_inv = inverse(sigma);
  BasicMorphismB out{alpha.source, alpha.target, {}, {}, {}};
  for (std::size_t k = 0; k < alpha.alpha1.size(); ++k) {
    out.alpha1.push_back(sigma[alpha.alpha1[tau_inv[k]]]);
    out.alpha3.push_back(alpha.alpha3[tau_inv[k]]);
  }
  std::vector<long> free_rank(n, -1);
  {
    const auto fs = alpha.free_slots();
    for (std::size_t k = 0; k < fs.size(); ++k) free_rank[fs[k]] = static_cast<long>(k);
  }
  for (auto slot : out.free_slots()) {
    out.alpha2.push_back(alpha.alpha2[static_cast<std::size_t>(free_rank[sigma_inv[slot]])]);
  }
  return out;
}

BasicCombo symmetrize_basic(const BasicMorphismB& alpha) {
  const auto perms = all_permutations(alpha.target.m);
  const Rational w(1, static_cast<unsigned long>(perms.size()));
  BasicCombo out;
  out.reserve(perms.size());
  for (const auto& s : perms) out.emplace_back(sigma_act(s, alpha), w);
  return out;
}

BasicMorphismB from_ver_morphism(const GradedAlgebra& b, const VerMorphism& alpha) {
  auto element = [&](const ExponentVector& v) {
    const Point p(v.exponents().begin(), v.exponents().end());
    const long idx = b.index_of(v.degree(), p);
    if (idx < 0) throw std::invalid_argument("from_ver_morphism: monomial is not a basis element");
    return basis_element(b, v.degree(), static_cast<std::size_t>(idx));
  };
  BasicMorphismB out{alpha.source, alpha.target, alpha.alpha1, {}, {}};
  for (const auto& v : alpha.alpha2) out.alpha2.push_back(element(v));
  for (const auto& v : alpha.alpha3) out.alpha3.push_back(element(v));
  return out;
}

TensorElement apply_basic_tensor(const GradedAlgebra& b, const BasicMorphismB& alpha, const TensorElement& x) {
  if (x.degree != alpha.source.d || x.width != alpha.source.m) {
    throw std::invalid_argument("apply_basic_tensor: element does not live at the source object");
  }
  const std::uint32_t e = alpha.target.d, n = alpha.target.m;
  const std::uint32_t shift = e - alpha.source.d;
  using SlotValue = std::vector<std::pair<std::uint32_t, Rational>>;

  std::vector<SlotValue> free_values(n);
  {
    const auto fs = alpha.free_slots();
    for (std::size_t k = 0; k < fs.size(); ++k) {
      const auto& c = alpha.alpha2[k].coords;
      for (std::uint32_t i = 0; i < c.size(); ++i) {
        if (!is_zero(c[i])) free_values[fs[k]].emplace_back(i, c[i]);
      }
    }
  }

  TensorElement out{e, n, {}};
  std::vector<SlotValue> slots(n);
  std::vector<std::uint32_t> key(n);
  for (const auto& [src, coeff] : x.terms) {
    for (std::uint32_t s = 0; s < n; ++s) slots[s] = free_values[s];
    for (std::size_t j = 0; j < alpha.alpha1.size(); ++j) {
      SlotValue v;
      const auto& c = alpha.alpha3[j].coords;
      for (std::uint32_t a = 0; a < c.size(); ++a) {
        if (is_zero(c[a])) continue;
        const long k = b.mult_basis(shift, a, alpha.source.d, src[j]);
        if (k >= 0) v.emplace_back(static_cast<std::uint32_t>(k), c[a]);
      }
      slots[alpha.alpha1[j]] = std::move(v);
    }
    auto expand = [&](auto&& self, std::uint32_t s, const Rational& acc) -> void {
      if (s == n) {
        out.add(key, acc);
        return;
      }
      for (const auto& [idx, c] : slots[s]) {
        key[s] = idx;
        self(self, s + 1, acc * c);
      }
    };
    expand(expand, 0, coeff);
  }
  return out;
}

TensorElement apply_combo_tensor(const GradedAlgebra& b, const BasicCombo& c, const TensorElement& x) {
  if (c.empty()) throw std::invalid_argument("apply_combo_tensor: empty combination");
  TensorElement out{c.front().first.target.d, c.front().first.target.m, {}};
  for (const auto& [alpha, coeff] : c) out = out + coeff * apply_basic_tensor(b, alpha, x);
  return out;
}

SymElement apply_basic_sym(const GradedAlgebra& b, const BasicMorphismB& alpha, const SymElement& f) {
  if (f.degree != alpha.source.d || f.width != alpha.source.m) {
    throw std::invalid_argument("apply_basic_sym: element does not live at the source object");
  }
  return to_sym(b, apply_basic_tensor(b, alpha, sym_lift(b, f)));
}

SymElement apply_combo_sym(const GradedAlgebra& b, const BasicCombo& c, const SymElement& f) {
  if (c.empty()) throw std::invalid_argument("apply_combo_sym: empty combination");
  const auto lifted = sym_lift(b, f);
  auto out = sym_zero(b, c.front().first.target.d, c.front().first.target.m);
  for (const auto& [alpha, coeff] : c) out = out + coeff * to_sym(b, apply_basic_tensor(b, alpha, lifted));
  return out;
}

}  // namespace veronese
