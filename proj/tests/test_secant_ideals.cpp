#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <thread>

#include "veronese/combinatorics.hpp"
#include "veronese/secant_ideals.hpp"
#include "veronese/selftest.hpp"

using namespace veronese;

namespace {

Subspace minors_ideal(const GradedAlgebra& b, std::uint32_t d, std::uint32_t k, std::uint32_t m) {
  return ideal_piece_from_generators(b, catalecticant_minors(d, k), m);
}

}  // namespace

TEST_CASE("the Veronese ideal is the kernel of multiplication") {
  const auto b = GradedAlgebra::p1();
  // Sym^2(B_2) -> B_4 is a 5 x 6 surjection.
  const auto& basis = sym_basis(b, 2, 2);
  Matrix mult(b.dim(4), basis.size());
  for (std::size_t c = 0; c < basis.size(); ++c) mult.set(static_cast<std::size_t>(b.mult_basis_many(2, basis[c])), c, 1);
  CHECK(rank(mult) == 5);
  CHECK(kernel_basis(mult).dim() == 1);
  CHECK(ideal_one(b, 2, 2) == kernel_basis(mult));

  SecantCache cache(b);
  for (std::uint32_t d = 1; d <= 6; ++d) {
    for (std::uint32_t m = 0; m <= 4; ++m) {
      CHECK(cache.ideal(1, d, m).dim() == multichoose(d + 1, m) - (d * m + 1));
    }
  }
  // Polynomial ring in two variables, d = 2, m = 2: 6 - 5.
  SecantCache poly(GradedAlgebra::polynomial(2));
  CHECK(poly.ideal(1, 2, 2).dim() == 1);
  CHECK(sec_hilbert(cache, 1, 2, 3) == std::vector<std::size_t>{1, 3, 5, 7});
}

TEST_CASE("rational normal curves: minors generate the secant ideals") {
  const auto b = GradedAlgebra::p1();
  SecantCache cache(b);
  for (std::uint32_t d = 2; d <= 6; ++d) {
    for (std::uint32_t m = 2; m <= 4; ++m) CHECK(cache.ideal(1, d, m) == minors_ideal(b, d, 2, m));
  }
  for (std::uint32_t d = 4; d <= 6; ++d) {
    for (std::uint32_t m = 3; m <= 4; ++m) CHECK(cache.ideal(2, d, m) == minors_ideal(b, d, 3, m));
  }
  CHECK(cache.ideal(3, 6, 4) == minors_ideal(b, 6, 4, 4));
  CHECK(cache.ideal(2, 4, 3).dim() == 1);
  CHECK(cache.ideal(2, 5, 3).dim() == 4);
  CHECK(cache.ideal(2, 3, 4).dim() == 0);
}

TEST_CASE("catalecticant minors") {
  CHECK(catalecticant_minors(4, 3).size() == 1);
  CHECK(catalecticant_minors(5, 3).size() == 4);
  CHECK(catalecticant_minors(2, 2).size() == 1);
  CHECK_THROWS_AS(catalecticant_minors(3, 3), std::invalid_argument);
  // det [[x0,x1],[x1,x2]] = x0 x2 - x1^2
  const auto b = GradedAlgebra::p1();
  CHECK(catalecticant_minors(2, 2)[0] == sym_monomial(b, 2, {0, 2}) + sym_monomial(b, 2, {1, 1}, -1));
}

TEST_CASE("the secant of the Veronese surface is the symmetric determinant") {
  const auto b = GradedAlgebra::polynomial(3);
  SecantCache cache(b);
  CHECK(cache.ideal(2, 2, 2).dim() == 0);
  CHECK(cache.ideal(2, 2, 3).dim() == 1);
  CHECK(cache.ideal(2, 2, 4).dim() == 6);
  CHECK(cache.ideal(1, 2, 2).dim() == 6);
}

TEST_CASE("normal forms are congruent to their monomials") {
  const auto b = GradedAlgebra::p1();
  SecantCache cache(b);
  const auto& q = cache.piece(2, 5, 3);
  CHECK(q.dim() + q.ideal().dim() == q.ambient_dim());
  for (std::size_t u = 0; u < q.ambient_dim(); ++u) {
    DenseVector v(q.ambient_dim());
    v[u] = 1;
    for (const auto& e : q.normal_form(u)) v[q.complement()[e.index]] -= e.value;
    CHECK(q.ideal().contains(v));
  }
}

TEST_CASE("membership and validation") {
  const auto b = GradedAlgebra::p1();
  SecantCache cache(b);
  CHECK(is_in_secant(cache, 2, 4, 3, catalecticant_minors(4, 3)[0]));
  CHECK_FALSE(is_in_secant(cache, 2, 4, 3, sym_monomial(b, 4, {0, 0, 0})));
  CHECK_THROWS_AS(is_in_secant(cache, 2, 4, 2, catalecticant_minors(4, 3)[0]), std::invalid_argument);
  CHECK_THROWS_AS(cache.piece(0, 2, 2), std::invalid_argument);
  CHECK_THROWS_AS(comultiplication_matrix(cache, 1, 2, 2), std::invalid_argument);
}

TEST_CASE("chain, ideal and submodule closure") {
  SecantCache cache(GradedAlgebra::p1());
  const auto chain = secant_chain_suite(cache, 3, 6, 4);
  CHECK(chain.cases > 0);
  CHECK(chain.violations == 0);
  std::mt19937_64 rng(17);
  const auto report = submodule_closure_check(cache, ClosureConfig{}, rng);
  CHECK(report.cases == 200);
  CHECK(report.violations == 0);

  SecantCache quotient(GradedAlgebra::monomial_quotient(3, {{0, 2, 0}}));
  const auto q = secant_chain_suite(quotient, 2, 2, 3);
  CHECK(q.violations == 0);
  ClosureConfig small{2, 2, 3, 60};
  CHECK(submodule_closure_check(quotient, small, rng).violations == 0);
}

TEST_CASE("concurrent cache use matches serial results") {
  const auto b = GradedAlgebra::p1();
  SecantCache serial(b), shared(b);
  std::vector<std::thread> workers;
  for (std::uint32_t w = 0; w < 4; ++w) {
    workers.emplace_back([&, w] {
      for (std::uint32_t m = 4; m-- > 0;) shared.ideal(2, 4 + w % 2, m + 1);
    });
  }
  for (auto& w : workers) w.join();
  for (std::uint32_t d = 4; d <= 5; ++d) {
    for (std::uint32_t m = 1; m <= 4; ++m) CHECK(shared.ideal(2, d, m) == serial.ideal(2, d, m));
  }
}
