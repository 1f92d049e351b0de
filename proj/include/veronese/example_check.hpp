#ifndef VERONESE_EXAMPLE_CHECK_HPP
#define VERONESE_EXAMPLE_CHECK_HPP

#include <string>
#include <vector>

#include "veronese/graded_algebra.hpp"

namespace veronese {

/// The rational normal quartic and quintic: B = k[s,t], the preimage of
/// det X in B_4^{(x)3}, and its images under the multipliers tst and
/// stt + tst + tts.
struct ExampleReport {
  /// The tst image equals the expected tensor f1.
  bool image_matches = false;
  /// Symmetrised tst image lies in the span of the 3x3 minors of Y (expected: no).
  bool tst_in_span = true;
  /// Symmetrised stt + tst + tts image lies in that span (expected: yes).
  bool symmetric_in_span = false;
  /// The same multiplier through the symmetrisation of tst: one third of it.
  bool projector_agrees = false;
  /// det X lies in I(2)_{4,3} and the minors of Y span I(2)_{5,3}.
  bool det_in_secant = false;
  bool minors_span_secant = false;
  /// Informational: the symmetrised stt image alone.
  bool stt_in_span = false;

  SymElement tst_image;
  SymElement symmetric_image;
  std::vector<std::string> lines;

  bool passed() const;
};

ExampleReport run_example_check();

/// Human-readable sum of Sym^m(B_d) monomials in the variables y0, y1, ...
std::string format_sym(const GradedAlgebra& b, const SymElement& f, char var = 'y');

}  // namespace veronese

#endif  // VERONESE_EXAMPLE_CHECK_HPP
