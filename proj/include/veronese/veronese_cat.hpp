#ifndef VERONESE_VERONESE_CAT_HPP
#define VERONESE_VERONESE_CAT_HPP

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "veronese/combinatorics.hpp"
#include "veronese/rational.hpp"

namespace veronese {

/// Object (d, m) of the Veronese category: degree d, width m.
struct ObjectDM {
  std::uint32_t d = 0;
  std::uint32_t m = 0;

  friend auto operator<=>(const ObjectDM&, const ObjectDM&) = default;
};

std::ostream& operator<<(std::ostream& os, const ObjectDM& x);

/// Exponent vector of a monomial in r variables. Ordering (operator<=>) is
/// lexicographic; `divides` is the componentwise order.
class ExponentVector {
 public:
  ExponentVector() = default;
  explicit ExponentVector(std::vector<std::uint32_t> exponents) : e_(std::move(exponents)) {}
  ExponentVector(std::initializer_list<std::uint32_t> exponents) : e_(exponents) {}

  static ExponentVector zero(std::size_t r) { return ExponentVector(std::vector<std::uint32_t>(r, 0)); }

  std::size_t size() const { return e_.size(); }
  std::uint32_t degree() const;
  std::uint32_t operator[](std::size_t i) const { return e_[i]; }
  const std::vector<std::uint32_t>& exponents() const { return e_; }

  /// Componentwise <=.
  bool divides(const ExponentVector& other) const;
  /// Componentwise difference; requires divides(other) in reverse.
  ExponentVector operator-(const ExponentVector& other) const;
  friend ExponentVector operator+(const ExponentVector& a, const ExponentVector& b);

  friend auto operator<=>(const ExponentVector&, const ExponentVector&) = default;

 private:
  std::vector<std::uint32_t> e_;
};

std::ostream& operator<<(std::ostream& os, const ExponentVector& v);

/// multi(r, d): exponent vectors of total degree d, in lexicographic order.
std::vector<ExponentVector> multi(std::uint32_t r, std::uint32_t d);

/// A morphism (d,m) -> (e,n) of the Veronese category. Slots are 0-based.
///   alpha1: strictly increasing slot injection [m] -> [n]
///   alpha2: one degree-e vector per free slot of [n], in increasing slot order
///   alpha3: one degree-(e-d) vector per source slot
struct VerMorphism {
  ObjectDM source;
  ObjectDM target;
  std::vector<std::uint32_t> alpha1;
  std::vector<ExponentVector> alpha2;
  std::vector<ExponentVector> alpha3;

  /// Slots of [n] outside the image of alpha1, increasing.
  std::vector<std::uint32_t> free_slots() const;
  /// Throws std::invalid_argument if any invariant is violated.
  void validate(std::size_t r) const;

  friend auto operator<=>(const VerMorphism&, const VerMorphism&) = default;
};

std::ostream& operator<<(std::ostream& os, const VerMorphism& a);

VerMorphism identity_morphism(ObjectDM x, std::size_t r);

/// beta o alpha. Throws std::invalid_argument when target(alpha) != source(beta).
VerMorphism compose(const VerMorphism& beta, const VerMorphism& alpha);

/// Exhaustive hom-set listing (small parameters only).
std::vector<VerMorphism> enumerate_morphisms(ObjectDM source, ObjectDM target, std::uint32_t r);

/// Closed-form size of the hom-set.
std::uint64_t hom_count(ObjectDM source, ObjectDM target, std::uint32_t r);

// ---------------------------------------------------------------------------
// Words and orders

enum class LetterTag : std::uint8_t { Shift = 0, Gen = 1 };

/// A letter of the alphabet made of two disjoint copies of Z_{>=0}^r.
/// Gen letters carry alpha2 values, Shift letters carry alpha3 values.
struct SigmaLetter {
  LetterTag tag;
  ExponentVector vector;

  friend bool operator==(const SigmaLetter&, const SigmaLetter&) = default;
};

using Word = std::vector<SigmaLetter>;

std::ostream& operator<<(std::ostream& os, const SigmaLetter& l);

/// Same tag and componentwise <=.
bool letter_leq(const SigmaLetter& a, const SigmaLetter& b);

/// Total order used for lex_compare: every Gen letter exceeds every Shift
/// letter; within a tag, vectors compare lexicographically.
std::strong_ordering letter_compare(const SigmaLetter& a, const SigmaLetter& b);

Word word_encode(const VerMorphism& alpha);

/// Inverse of word_encode for a given source. The target degree is inferred
/// from the letters; only the empty word leaves it undetermined, in which case
/// `target_degree` (default: the source degree) is used.
/// Throws std::invalid_argument on inconsistent letter degrees or when the
/// number of Shift letters differs from the source width.
VerMorphism word_decode(const Word& w, ObjectDM source, std::optional<std::uint32_t> target_degree = std::nullopt);

/// Higman embedding order on words over the letter poset.
bool higman_leq(const Word& u, const Word& v);

/// Some beta with beta o alpha == gamma (the lex-least one), if any exists.
/// Throws std::invalid_argument when the sources differ.
std::optional<VerMorphism> divides(const VerMorphism& alpha, const VerMorphism& gamma);

/// Lexicographic order on encoded words. Requires equal source and target.
std::strong_ordering lex_compare(const VerMorphism& alpha, const VerMorphism& gamma);

// ---------------------------------------------------------------------------
// Symmetric group action

/// The unique tau in S_m with sigma o alpha1 o tau^{-1} order-preserving:
/// tau(j) is the rank of sigma(alpha1(j)) among the values sigma(alpha1(.)).
Permutation induced_permutation(const Permutation& sigma, const std::vector<std::uint32_t>& alpha1);

struct SigmaAction {
  VerMorphism morphism;
  Permutation tau;
};

/// sigma(alpha) together with the induced tau. sigma permutes the target slots.
SigmaAction sigma_act(const Permutation& sigma, const VerMorphism& alpha);

/// Formal rational combination of morphisms sharing one source and target.
class FormalCombo {
 public:
  FormalCombo(ObjectDM source, ObjectDM target) : source_(source), target_(target) {}
  static FormalCombo of(const VerMorphism& alpha, const Rational& coeff = 1);

  ObjectDM source() const { return source_; }
  ObjectDM target() const { return target_; }
  const std::map<VerMorphism, Rational>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  void add(const VerMorphism& alpha, const Rational& coeff);
  FormalCombo& operator+=(const FormalCombo& other);
  friend FormalCombo operator*(const Rational& c, const FormalCombo& f);
  friend bool operator==(const FormalCombo&, const FormalCombo&) = default;

 private:
  ObjectDM source_;
  ObjectDM target_;
  std::map<VerMorphism, Rational> terms_;
};

/// Bilinear extension of compose.
FormalCombo compose(const FormalCombo& beta, const FormalCombo& alpha);

/// sigma applied termwise.
FormalCombo sigma_act(const Permutation& sigma, const FormalCombo& c);

inline constexpr std::uint32_t kMaxSymmetrizeWidth = 8;

/// (1/n!) sum over S_n of sigma(c); n = target width, at most kMaxSymmetrizeWidth.
FormalCombo symmetrize(const FormalCombo& c);

bool is_invariant(const FormalCombo& c);

}  // namespace veronese

#endif  // VERONESE_VERONESE_CAT_HPP
