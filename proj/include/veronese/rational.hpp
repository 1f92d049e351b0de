#ifndef VERONESE_RATIONAL_HPP
#define VERONESE_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

namespace veronese {

// GMP rationals are kept canonical (lowest terms, positive denominator) by
// every arithmetic operation, which is the invariant the rest of the library
// relies on.
using Rational = mpq_class;
using Integer = mpz_class;

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

inline std::string to_string(const Rational& q) { return q.get_str(); }

}  // namespace veronese

#endif  // VERONESE_RATIONAL_HPP
