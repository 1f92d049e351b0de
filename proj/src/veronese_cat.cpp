#include "veronese/veronese_cat.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace veronese {

std::ostream& operator<<(std::ostream& os, const ObjectDM& x) { return os << '(' << x.d << ',' << x.m << ')'; }

std::uint32_t ExponentVector::degree() const { return std::accumulate(e_.begin(), e_.end(), 0u); }

bool ExponentVector::divides(const ExponentVector& other) const {
  if (e_.size() != other.e_.size()) return false;
  for (std::size_t i = 0; i < e_.size(); ++i) {
    if (e_[i] > other.e_[i]) return false;
  }
  return true;
}

ExponentVector ExponentVector::operator-(const ExponentVector& other) const {
  if (!other.divides(*this)) throw std::invalid_argument("ExponentVector: difference would be negative");
  std::vector<std::uint32_t> out(e_.size());
  for (std::size_t i = 0; i < e_.size(); ++i) out[i] = e_[i] - other.e_[i];
  return ExponentVector(std::move(out));
}

ExponentVector operator+(const ExponentVector& a, const ExponentVector& b) {
  if (a.e_.size() != b.e_.size()) throw std::invalid_argument("ExponentVector: length mismatch");
  std::vector<std::uint32_t> out(a.e_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.e_[i] + b.e_[i];
  return ExponentVector(std::move(out));
}

std::ostream& operator<<(std::ostream& os, const ExponentVector& v) {
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  return os << ')';
}

namespace {

void multi_rec(std::uint32_t r, std::uint32_t remaining, std::vector<std::uint32_t>& cur,
               std::vector<ExponentVector>& out) {
  if (cur.size() + 1 == r) {
    cur.push_back(remaining);
    out.emplace_back(cur);
    cur.pop_back();
    return;
  }
  for (std::uint32_t a = 0; a <= remaining; ++a) {
    cur.push_back(a);
    multi_rec(r, remaining - a, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<ExponentVector> multi(std::uint32_t r, std::uint32_t d) {
  std::vector<ExponentVector> out;
  if (r == 0) {
    if (d == 0) out.emplace_back();
    return out;
  }
  std::vector<std::uint32_t> cur;
  multi_rec(r, d, cur, out);
  return out;
}

// ---------------------------------------------------------------------------
// Morphisms

std::vector<std::uint32_t> VerMorphism::free_slots() const {
  std::vector<std::uint32_t> out;
  out.reserve(target.m - alpha1.size());
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

void VerMorphism::validate(std::size_t r) const {
  auto fail = [](const char* what) { throw std::invalid_argument(std::string("VerMorphism: ") + what); };
  if (source.d > target.d) fail("source degree exceeds target degree");
  if (source.m > target.m) fail("source width exceeds target width");
  if (alpha1.size() != source.m) fail("alpha1 must have one entry per source slot");
  for (std::size_t j = 0; j < alpha1.size(); ++j) {
    if (alpha1[j] >= target.m) fail("alpha1 value out of range");
    if (j > 0 && alpha1[j - 1] >= alpha1[j]) fail("alpha1 must be strictly increasing");
  }
  if (alpha2.size() != target.m - source.m) fail("alpha2 must have one entry per free slot");
  if (alpha3.size() != source.m) fail("alpha3 must have one entry per source slot");
  for (const auto& v : alpha2) {
    if (v.size() != r || v.degree() != target.d) fail("alpha2 values must lie in multi(r, e)");
  }
  for (const auto& v : alpha3) {
    if (v.size() != r || v.degree() != target.d - source.d) fail("alpha3 values must lie in multi(r, e - d)");
  }
}

std::ostream& operator<<(std::ostream& os, const VerMorphism& a) {
  os << a.source << "->" << a.target << " a1=[";
  for (std::size_t i = 0; i < a.alpha1.size(); ++i) os << (i ? "," : "") << a.alpha1[i];
  os << "] a2=[";
  for (std::size_t i = 0; i < a.alpha2.size(); ++i) os << (i ? "," : "") << a.alpha2[i];
  os << "] a3=[";
  for (std::size_t i = 0; i < a.alpha3.size(); ++i) os << (i ? "," : "") << a.alpha3[i];
  return os << ']';
}

VerMorphism identity_morphism(ObjectDM x, std::size_t r) {
  VerMorphism id{x, x, {}, {}, {}};
  id.alpha1.resize(x.m);
  std::iota(id.alpha1.begin(), id.alpha1.end(), 0u);
  id.alpha3.assign(x.m, ExponentVector::zero(r));
  return id;
}

VerMorphism compose(const VerMorphism& beta, const VerMorphism& alpha) {
  if (alpha.target != beta.source) throw std::invalid_argument("compose: target(alpha) != source(beta)");
  VerMorphism gamma{alpha.source, beta.target, {}, {}, {}};
  gamma.alpha1.reserve(alpha.alpha1.size());
  for (auto j : alpha.alpha1) gamma.alpha1.push_back(beta.alpha1[j]);

  // Position of each target slot of alpha among its free slots / of beta's.
  const std::uint32_t n = beta.source.m;
  const std::uint32_t p = beta.target.m;
  std::vector<long> alpha_free_rank(n, -1);
  {
    const auto fs = alpha.free_slots();
    for (std::size_t k = 0; k < fs.size(); ++k) alpha_free_rank[fs[k]] = static_cast<long>(k);
  }
  std::vector<long> beta_preimage(p, -1);
  for (std::uint32_t i = 0; i < n; ++i) beta_preimage[beta.alpha1[i]] = i;
  std::size_t beta_free_idx = 0;
  std::vector<bool> in_gamma_image(p, false);
  for (auto s : gamma.alpha1) in_gamma_image[s] = true;
  for (std::uint32_t i = 0; i < p; ++i) {
    if (beta_preimage[i] < 0) {
      gamma.alpha2.push_back(beta.alpha2[beta_free_idx++]);
    } else if (!in_gamma_image[i]) {
      const auto ip = static_cast<std::uint32_t>(beta_preimage[i]);
      gamma.alpha2.push_back(alpha.alpha2[static_cast<std::size_t>(alpha_free_rank[ip])] + beta.alpha3[ip]);
    }
  }
  gamma.alpha3.reserve(alpha.alpha3.size());
  for (std::size_t i = 0; i < alpha.alpha3.size(); ++i) {
    gamma.alpha3.push_back(alpha.alpha3[i] + beta.alpha3[alpha.alpha1[i]]);
  }
  return gamma;
}

namespace {

template <typename F>
void for_each_tuple(const std::vector<ExponentVector>& choices, std::size_t len, std::vector<ExponentVector>& cur,
                    F&& f) {
  if (cur.size() == len) {
    f(cur);
    return;
  }
  for (const auto& c : choices) {
    cur.push_back(c);
    for_each_tuple(choices, len, cur, f);
    cur.pop_back();
  }
}

}  // namespace

std::vector<VerMorphism> enumerate_morphisms(ObjectDM source, ObjectDM target, std::uint32_t r) {
  std::vector<VerMorphism> out;
  if (source.d > target.d || source.m > target.m) return out;
  const auto gens = multi(r, target.d);
  const auto shifts = multi(r, target.d - source.d);
  for (const auto& a1 : increasing_subsets(target.m, source.m)) {
    std::vector<ExponentVector> a2;
    for_each_tuple(gens, target.m - source.m, a2, [&](const std::vector<ExponentVector>& a2v) {
      std::vector<ExponentVector> a3;
      for_each_tuple(shifts, source.m, a3, [&](const std::vector<ExponentVector>& a3v) {
        out.push_back(VerMorphism{source, target, a1, a2v, a3v});
      });
    });
  }
  return out;
}

std::uint64_t hom_count(ObjectDM source, ObjectDM target, std::uint32_t r) {
  if (source.d > target.d || source.m > target.m) return 0;
  const std::uint64_t gens = multichoose(r, target.d);
  const std::uint64_t shifts = multichoose(r, target.d - source.d);
  std::uint64_t count = binomial(target.m, source.m);
  for (std::uint32_t i = 0; i < target.m - source.m; ++i) count *= gens;
  for (std::uint32_t i = 0; i < source.m; ++i) count *= shifts;
  return count;
}

// ---------------------------------------------------------------------------
// Words

std::ostream& operator<<(std::ostream& os, const SigmaLetter& l) {
  return os << (l.tag == LetterTag::Gen ? "Gen" : "Shift") << l.vector;
}

bool letter_leq(const SigmaLetter& a, const SigmaLetter& b) {
  return a.tag == b.tag && a.vector.divides(b.vector);
}

std::strong_ordering letter_compare(const SigmaLetter& a, const SigmaLetter& b) {
  if (a.tag != b.tag) return a.tag <=> b.tag;
  return a.vector <=> b.vector;
}

Word word_encode(const VerMorphism& alpha) {
  Word w;
  w.reserve(alpha.target.m);
  std::size_t j = 0, k = 0;
  for (std::uint32_t i = 0; i < alpha.target.m; ++i) {
    if (j < alpha.alpha1.size() && alpha.alpha1[j] == i) {
      w.push_back({LetterTag::Shift, alpha.alpha3[j++]});
    } else {
      w.push_back({LetterTag::Gen, alpha.alpha2[k++]});
    }
  }
  return w;
}

VerMorphism word_decode(const Word& w, ObjectDM source, std::optional<std::uint32_t> target_degree) {
  std::optional<std::uint32_t> gen_degree, shift_degree;
  std::optional<std::size_t> r;
  std::uint32_t shifts = 0;
  for (const auto& l : w) {
    if (r && *r != l.vector.size()) throw std::invalid_argument("word_decode: letters of different lengths");
    r = l.vector.size();
    auto& slot = l.tag == LetterTag::Gen ? gen_degree : shift_degree;
    const auto deg = l.vector.degree();
    if (slot && *slot != deg) throw std::invalid_argument("word_decode: inconsistent letter degrees");
    slot = deg;
    if (l.tag == LetterTag::Shift) ++shifts;
  }
  if (shifts != source.m) throw std::invalid_argument("word_decode: Shift letter count differs from source width");

  std::uint32_t e = target_degree.value_or(source.d);
  if (gen_degree) {
    e = *gen_degree;
  } else if (shift_degree) {
    e = source.d + *shift_degree;
  }
  if (shift_degree && *shift_degree + source.d != e) {
    throw std::invalid_argument("word_decode: Shift degree inconsistent with Gen degree");
  }
  if (e < source.d) throw std::invalid_argument("word_decode: target degree below source degree");

  VerMorphism alpha{source, ObjectDM{e, static_cast<std::uint32_t>(w.size())}, {}, {}, {}};
  for (std::uint32_t i = 0; i < w.size(); ++i) {
    if (w[i].tag == LetterTag::Shift) {
      alpha.alpha1.push_back(i);
      alpha.alpha3.push_back(w[i].vector);
    } else {
      alpha.alpha2.push_back(w[i].vector);
    }
  }
  return alpha;
}

bool higman_leq(const Word& u, const Word& v) {
  // Greedy leftmost matching is optimal for subsequence embeddings.
  std::size_t j = 0;
  for (const auto& letter : u) {
    while (j < v.size() && !letter_leq(letter, v[j])) ++j;
    if (j == v.size()) return false;
    ++j;
  }
  return true;
}

std::strong_ordering lex_compare(const VerMorphism& alpha, const VerMorphism& gamma) {
  if (alpha.source != gamma.source || alpha.target != gamma.target) {
    throw std::invalid_argument("lex_compare: morphisms must share source and target");
  }
  const Word a = word_encode(alpha);
  const Word g = word_encode(gamma);
  for (std::size_t i = 0; i < a.size() && i < g.size(); ++i) {
    if (auto c = letter_compare(a[i], g[i]); c != 0) return c;
  }
  return a.size() <=> g.size();
}

namespace {

// Completes beta once beta1 is fixed; returns nothing if some forced
// difference would be negative.
std::optional<VerMorphism> factor_with(const VerMorphism& alpha, const VerMorphism& gamma,
                                       const std::vector<std::uint32_t>& beta1) {
  const std::uint32_t n = alpha.target.m;
  const std::uint32_t p = gamma.target.m;
  VerMorphism beta{alpha.target, gamma.target, beta1, {}, std::vector<ExponentVector>(n)};

  // gamma2 lookup by slot
  std::vector<long> gamma_free_rank(p, -1);
  {
    const auto fs = gamma.free_slots();
    for (std::size_t k = 0; k < fs.size(); ++k) gamma_free_rank[fs[k]] = static_cast<long>(k);
  }
  std::vector<bool> in_alpha_image(n, false);
  for (std::size_t j = 0; j < alpha.alpha1.size(); ++j) {
    in_alpha_image[alpha.alpha1[j]] = true;
    const auto& g3 = gamma.alpha3[j];
    const auto& a3 = alpha.alpha3[j];
    if (!a3.divides(g3)) return std::nullopt;
    beta.alpha3[alpha.alpha1[j]] = g3 - a3;
  }
  std::size_t k = 0;
  for (std::uint32_t i = 0; i < n; ++i) {
    if (in_alpha_image[i]) continue;
    const auto& a2 = alpha.alpha2[k++];
    const auto& g2 = gamma.alpha2[static_cast<std::size_t>(gamma_free_rank[beta1[i]])];
    if (!a2.divides(g2)) return std::nullopt;
    beta.alpha3[i] = g2 - a2;
  }
  std::vector<bool> in_beta_image(p, false);
  for (auto s : beta1) in_beta_image[s] = true;
  for (std::uint32_t i = 0; i < p; ++i) {
    if (!in_beta_image[i]) beta.alpha2.push_back(gamma.alpha2[static_cast<std::size_t>(gamma_free_rank[i])]);
  }
  return beta;
}

}  // namespace

std::optional<VerMorphism> divides(const VerMorphism& alpha, const VerMorphism& gamma) {
  if (alpha.source != gamma.source) throw std::invalid_argument("divides: sources differ");
  const std::uint32_t n = alpha.target.m;
  const std::uint32_t p = gamma.target.m;
  if (alpha.target.d > gamma.target.d || n > p) return std::nullopt;

  // beta1 must send alpha1(j) to gamma1(j); the other slots are free but
  // order-preserving.
  std::vector<long> forced(n, -1);
  for (std::size_t j = 0; j < alpha.alpha1.size(); ++j) forced[alpha.alpha1[j]] = gamma.alpha1[j];
  std::vector<bool> gamma_image(p, false);
  for (auto s : gamma.alpha1) gamma_image[s] = true;

  std::optional<VerMorphism> best;
  std::vector<std::uint32_t> beta1;
  beta1.reserve(n);
  auto search = [&](auto&& self, std::uint32_t next_min) -> void {
    const std::uint32_t i = static_cast<std::uint32_t>(beta1.size());
    if (i == n) {
      if (auto beta = factor_with(alpha, gamma, beta1)) {
        if (!best || lex_compare(*beta, *best) < 0) best = std::move(beta);
      }
      return;
    }
    if (forced[i] >= 0) {
      const auto s = static_cast<std::uint32_t>(forced[i]);
      if (s < next_min) return;
      beta1.push_back(s);
      self(self, s + 1);
      beta1.pop_back();
      return;
    }
    // Free slots of alpha must land on free slots of gamma.
    for (std::uint32_t s = next_min; s + (n - i) <= p; ++s) {
      if (gamma_image[s]) continue;
      beta1.push_back(s);
      self(self, s + 1);
      beta1.pop_back();
    }
  };
  search(search, 0);
  return best;
}

// ---------------------------------------------------------------------------
// Symmetric group action

Permutation induced_permutation(const Permutation& sigma, const std::vector<std::uint32_t>& alpha1) {
  const auto m = static_cast<std::uint32_t>(alpha1.size());
  std::vector<std::uint32_t> order(m);
  std::iota(order.begin(), order.end(), 0u);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::uint32_t a, std::uint32_t b) { return sigma[alpha1[a]] < sigma[alpha1[b]]; });
  Permutation tau(m);
  for (std::uint32_t rank = 0; rank < m; ++rank) tau[order[rank]] = rank;
  return tau;
}

SigmaAction sigma_act(const Permutation& sigma, const VerMorphism& alpha) {
  const std::uint32_t n = alpha.target.m;
  if (sigma.size() != n || !is_permutation(sigma)) {
    throw std::invalid_argument("sigma_act: sigma must be a permutation of the target slots");
  }
  const Permutation tau = induced_permutation(sigma, alpha.alpha1);
  const Permutation tau_inv = inverse(tau);
  const Permutation sigma_inv = inverse(sigma);

  VerMorphism out{alpha.source, alpha.target, {}, {}, {}};
  const auto m = alpha.alpha1.size();
  out.alpha1.resize(m);
  out.alpha3.resize(m);
  for (std::size_t k = 0; k < m; ++k) {
    out.alpha1[k] = sigma[alpha.alpha1[tau_inv[k]]];
    out.alpha3[k] = alpha.alpha3[tau_inv[k]];
  }
  std::vector<long> free_rank(n, -1);
  {
    const auto fs = alpha.free_slots();
    for (std::size_t k = 0; k < fs.size(); ++k) free_rank[fs[k]] = static_cast<long>(k);
  }
  for (auto slot : out.free_slots()) {
    out.alpha2.push_back(alpha.alpha2[static_cast<std::size_t>(free_rank[sigma_inv[slot]])]);
  }
  return {std::move(out), tau};
}

FormalCombo FormalCombo::of(const VerMorphism& alpha, const Rational& coeff) {
  FormalCombo c(alpha.source, alpha.target);
  c.add(alpha, coeff);
  return c;
}

void FormalCombo::add(const VerMorphism& alpha, const Rational& coeff) {
  if (alpha.source != source_ || alpha.target != target_) {
    throw std::invalid_argument("FormalCombo: term has the wrong source or target");
  }
  if (is_zero(coeff)) return;
  auto [it, inserted] = terms_.try_emplace(alpha, coeff);
  if (!inserted) {
    it->second += coeff;
    if (is_zero(it->second)) terms_.erase(it);
  }
}

FormalCombo& FormalCombo::operator+=(const FormalCombo& other) {
  if (other.source_ != source_ || other.target_ != target_) {
    throw std::invalid_argument("FormalCombo: sum of combos from different hom-sets");
  }
  for (const auto& [alpha, c] : other.terms_) add(alpha, c);
  return *this;
}

FormalCombo operator*(const Rational& c, const FormalCombo& f) {
  FormalCombo out(f.source_, f.target_);
  for (const auto& [alpha, coeff] : f.terms_) out.add(alpha, c * coeff);
  return out;
}

FormalCombo compose(const FormalCombo& beta, const FormalCombo& alpha) {
  if (alpha.target() != beta.source()) throw std::invalid_argument("compose: target(alpha) != source(beta)");
  FormalCombo out(alpha.source(), beta.target());
  for (const auto& [b, cb] : beta.terms()) {
    for (const auto& [a, ca] : alpha.terms()) out.add(compose(b, a), cb * ca);
  }
  return out;
}

FormalCombo sigma_act(const Permutation& sigma, const FormalCombo& c) {
  FormalCombo out(c.source(), c.target());
  for (const auto& [alpha, coeff] : c.terms()) out.add(sigma_act(sigma, alpha).morphism, coeff);
  return out;
}

FormalCombo symmetrize(const FormalCombo& c) {
  const std::uint32_t n = c.target().m;
  if (n > kMaxSymmetrizeWidth) throw std::invalid_argument("symmetrize: target width exceeds the supported maximum");
  FormalCombo out(c.source(), c.target());
  for (const auto& sigma : all_permutations(n)) out += sigma_act(sigma, c);
  return Rational(1, static_cast<unsigned long>(factorial(n))) * out;
}

bool is_invariant(const FormalCombo& c) {
  const std::uint32_t n = c.target().m;
  // adjacent transpositions generate S_n
  for (std::uint32_t i = 0; i + 1 < n; ++i) {
    Permutation s = identity_permutation(n);
    std::swap(s[i], s[i + 1]);
    if (sigma_act(s, c) != c) return false;
  }
  return true;
}

}  // namespace veronese
