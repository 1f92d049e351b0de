#include "veronese/example_check.hpp"

#include <sstream>

#include "veronese/secant_ideals.hpp"

namespace veronese {

namespace {

using Triple = std::vector<std::uint32_t>;

TensorElement tensor(std::uint32_t degree, const std::vector<std::pair<Triple, int>>& terms) {
  TensorElement x{degree, 3, {}};
  for (const auto& [key, c] : terms) x.add(key, Rational(c));
  return x;
}

// x_a x_b x_c with x_i = s^i t^(4-i).
TensorElement det_x_preimage() {
  return tensor(4, {{{0, 2, 4}, 1}, {{0, 3, 3}, -1}, {{1, 2, 3}, 1}, {{1, 1, 4}, -1}, {{2, 1, 3}, 1}, {{2, 2, 2}, -1}});
}

// f1 as printed, y_j = s^j t^(5-j).
TensorElement printed_f1() {
  return tensor(5, {{{0, 3, 4}, 1}, {{0, 4, 3}, -1}, {{1, 3, 3}, 1}, {{1, 2, 4}, -1}, {{2, 2, 3}, 1}, {{2, 3, 2}, -1}});
}

BasicMorphismB multiplier(const GradedAlgebra& b, const std::string& letters) {
  BasicMorphismB alpha{{4, 3}, {5, 3}, {0, 1, 2}, {}, {}};
  for (const char c : letters) alpha.alpha3.push_back(basis_element(b, 1, c == 's' ? 1 : 0));
  return alpha;
}

}  // namespace

bool ExampleReport::passed() const {
  return image_matches && !tst_in_span && symmetric_in_span && projector_agrees && det_in_secant &&
         minors_span_secant;
}

std::string format_sym(const GradedAlgebra& b, const SymElement& f, char var) {
  const auto& basis = sym_basis(b, f.degree, f.width);
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < basis.size(); ++k) {
    const auto& c = f.coords[k];
    if (is_zero(c)) continue;
    os << (sgn(c) < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
    const Rational mag = abs(c);
    if (mag != 1) os << to_string(mag) << '*';
    for (std::size_t j = 0; j < basis[k].size(); ++j) os << (j ? "*" : "") << var << basis[k][j];
    first = false;
  }
  return first ? "0" : os.str();
}

ExampleReport run_example_check() {
  const auto b = GradedAlgebra::p1();
  ExampleReport report;
  const auto x = det_x_preimage();

  const auto tst = multiplier(b, "tst");
  const auto f1 = apply_basic_tensor(b, tst, x);
  report.image_matches = f1 == printed_f1();

  const auto minors = catalecticant_minors(5, 3);
  std::vector<DenseVector> rows;
  for (const auto& m : minors) rows.push_back(m.coords);
  const auto span = Subspace::span(sym_basis(b, 5, 3).size(), rows);

  report.tst_image = to_sym(b, f1);
  report.tst_in_span = span.contains(report.tst_image.coords);

  TensorElement sum{5, 3, {}};
  for (const char* w : {"stt", "tst", "tts"}) sum = sum + apply_basic_tensor(b, multiplier(b, w), x);
  report.symmetric_image = to_sym(b, sum);
  report.symmetric_in_span = span.contains(report.symmetric_image.coords);

  const auto projected = to_sym(b, apply_combo_tensor(b, symmetrize_basic(tst), x));
  report.projector_agrees = Rational(3) * projected == report.symmetric_image;

  report.stt_in_span = span.contains(to_sym(b, apply_basic_tensor(b, multiplier(b, "stt"), x)).coords);

  SecantCache cache(b);
  report.det_in_secant = is_in_secant(cache, 2, 4, 3, to_sym(b, x)) && to_sym(b, x) == catalecticant_minors(4, 3)[0];
  report.minors_span_secant = cache.ideal(2, 5, 3) == span;

  auto verdict = [](bool v) { return v ? "true" : "false"; };
  report.lines.push_back(std::string("f1 == tst image: ") + verdict(report.image_matches));
  report.lines.push_back("sym(f1) = " + format_sym(b, report.tst_image));
  report.lines.push_back(std::string("I+ideal(f1) == I --") + verdict(report.tst_in_span));
  report.lines.push_back("sym(f1+f2+f3) = " + format_sym(b, report.symmetric_image));
  report.lines.push_back(std::string("I+ideal(f1+f2+f3) == I --") + verdict(report.symmetric_in_span));
  report.lines.push_back(std::string("stt+tst+tts == 3 pi(tst): ") + verdict(report.projector_agrees));
  report.lines.push_back(std::string("det X in I(2)_{4,3}: ") + verdict(report.det_in_secant));
  report.lines.push_back(std::string("minors of Y span I(2)_{5,3}: ") + verdict(report.minors_span_secant));
  report.lines.push_back(std::string("I+ideal(f2) == I --") + verdict(report.stt_in_span));
  return report;
}

}  // namespace veronese
