#include "veronese/ring_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace veronese {

namespace {

std::vector<Point> points(const nlohmann::json& j) {
  if (!j.is_array()) throw std::invalid_argument("ring: \"generators\" must be an array of integer arrays");
  std::vector<Point> out;
  for (const auto& g : j) {
    if (!g.is_array()) throw std::invalid_argument("ring: each generator must be an integer array");
    Point p;
    for (const auto& x : g) {
      if (!x.is_number_integer()) throw std::invalid_argument("ring: generator entries must be integers");
      p.push_back(x.get<std::int64_t>());
    }
    out.push_back(std::move(p));
  }
  return out;
}

std::uint32_t vars(const nlohmann::json& j) {
  if (!j.contains("vars") || !j["vars"].is_number_unsigned()) {
    throw std::invalid_argument("ring: \"vars\" must be a positive integer");
  }
  return j["vars"].get<std::uint32_t>();
}

}  // namespace

GradedAlgebra ring_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("type") || !j["type"].is_string()) {
    throw std::invalid_argument("ring: expected an object with a string \"type\"");
  }
  const auto type = j["type"].get<std::string>();
  if (type == "polynomial") return GradedAlgebra::polynomial(vars(j));
  if (type == "semigroup") {
    if (!j.contains("generators")) throw std::invalid_argument("ring: semigroup needs \"generators\"");
    return GradedAlgebra::semigroup(points(j["generators"]));
  }
  if (type == "monomial_quotient") {
    if (!j.contains("generators")) throw std::invalid_argument("ring: monomial_quotient needs \"generators\"");
    return GradedAlgebra::monomial_quotient(vars(j), points(j["generators"]));
  }
  throw std::invalid_argument("ring: unknown type \"" + type + "\"");
}

nlohmann::json ring_to_json(const GradedAlgebra& b) {
  switch (b.kind()) {
    case AlgebraKind::Polynomial:
      return {{"type", "polynomial"}, {"vars", b.vars()}};
    case AlgebraKind::Semigroup:
      return {{"type", "semigroup"}, {"generators", b.generators()}};
    case AlgebraKind::MonomialQuotient:
      return {{"type", "monomial_quotient"}, {"vars", b.vars()}, {"generators", b.generators()}};
  }
  throw std::logic_error("ring_to_json: unknown kind");
}

GradedAlgebra load_ring(const std::string& text) {
  if (text == "P1") return GradedAlgebra::p1();
  std::string body = text;
  if (text.empty() || text.front() != '{') {
    std::ifstream in(text);
    if (!in) throw std::invalid_argument("ring: cannot open \"" + text + "\"");
    std::ostringstream os;
    os << in.rdbuf();
    body = os.str();
  }
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(body);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("ring: ") + e.what());
  }
  return ring_from_json(j);
}

}  // namespace veronese
