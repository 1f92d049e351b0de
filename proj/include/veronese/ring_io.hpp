#ifndef VERONESE_RING_IO_HPP
#define VERONESE_RING_IO_HPP

#include <string>

#include <json.hpp>

#include "veronese/graded_algebra.hpp"

namespace veronese {

/// Ring descriptions:
///   {"type": "polynomial", "vars": r}
///   {"type": "semigroup", "generators": [[..], ..]}
///   {"type": "monomial_quotient", "vars": r, "generators": [[..], ..]}
/// Throws std::invalid_argument on malformed input.
GradedAlgebra ring_from_json(const nlohmann::json& j);
nlohmann::json ring_to_json(const GradedAlgebra& b);

/// `text` is inline JSON when it starts with '{', the shorthand "P1", and a
/// file path otherwise.
GradedAlgebra load_ring(const std::string& text);

}  // namespace veronese

#endif  // VERONESE_RING_IO_HPP
