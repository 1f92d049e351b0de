#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "veronese/combinatorics.hpp"
#include "veronese/resolutions.hpp"

using namespace veronese;

namespace {

// Eagon-Northcott: the (r+1)-minors of the (r+1) x (d-r+1) catalecticant
// resolve the r-th secant of the rational normal curve of degree d >= 2r,
// with beta_{i,i+r} = C(d-r+1, r+i) C(r+i-1, i-1).
std::size_t eagon_northcott(std::uint32_t d, std::uint32_t r, std::uint32_t i, std::uint32_t t) {
  if (i == 0) return t == 0 ? 1 : 0;
  if (t != i + r) return 0;
  return binomial(d - r + 1, r + i) * binomial(r + i - 1, i - 1);
}

}  // namespace

TEST_CASE("row zero of the Betti table") {
  SecantCache cache(GradedAlgebra::p1());
  for (std::uint32_t d = 2; d <= 4; ++d) {
    CHECK(betti(cache, 1, d, 0, 0) == 1);
    for (std::uint32_t t = 1; t <= 4; ++t) CHECK(betti(cache, 1, d, 0, t) == 0);
  }
}

TEST_CASE("twisted cubic") {
  SecantCache cache(GradedAlgebra::p1());
  KoszulComplex k(cache, 1, 3);
  CHECK(k.differential_rank(1, 2) == 7);
  CHECK(k.betti(1, 2) == 3);
  CHECK(k.betti(2, 3) == 2);
  const auto table = betti_table(k, 2, 5);
  CHECK(table.entries == std::map<std::pair<std::uint32_t, std::uint32_t>, std::size_t>{
                             {{0, 0}, 1}, {{1, 2}, 3}, {{2, 3}, 2}});
  CHECK(minimal_generator_count(cache, 1, 3, 2) == 3);
}

TEST_CASE("first differential in width one") {
  SecantCache cache(GradedAlgebra::p1());
  for (std::uint32_t r = 1; r <= 2; ++r) {
    const auto m = koszul_differential(cache, r, 4, 1, 1);
    CHECK(m == Matrix::identity(5));
  }
}

TEST_CASE("rational normal curves match Eagon-Northcott") {
  SecantCache cache(GradedAlgebra::p1());
  for (std::uint32_t r = 1; r <= 2; ++r) {
    for (std::uint32_t d = 2 * r; d <= 6; ++d) {
      const auto table = betti_table(cache, r, d, 3, 6);
      for (std::uint32_t i = 0; i <= 3; ++i) {
        for (std::uint32_t t = 0; t <= 6; ++t) {
          CAPTURE(r);
          CAPTURE(d);
          CAPTURE(i);
          CAPTURE(t);
          CHECK(table.at(i, t) == eagon_northcott(d, r, i, t));
        }
      }
    }
  }
}

TEST_CASE("first syzygies count minimal generators") {
  SecantCache cache(GradedAlgebra::p1());
  for (std::uint32_t r = 1; r <= 2; ++r) {
    for (std::uint32_t d = 2; d <= 6; ++d) {
      KoszulComplex k(cache, r, d);
      for (std::uint32_t t = 1; t <= 5; ++t) CHECK(k.betti(1, t) == minimal_generator_count(cache, r, d, t));
    }
  }
  SecantCache p2(GradedAlgebra::polynomial(3));
  KoszulComplex k(p2, 2, 2);
  for (std::uint32_t t = 1; t <= 5; ++t) CHECK(k.betti(1, t) == minimal_generator_count(p2, 2, 2, t));
}

TEST_CASE("differentials square to zero and the Euler identity holds") {
  SecantCache cache(GradedAlgebra::p1());
  SecantCache quotient(GradedAlgebra::monomial_quotient(3, {{0, 2, 0}}));
  for (auto* c : {&cache, &quotient}) {
    for (std::uint32_t r = 1; r <= 2; ++r) {
      for (std::uint32_t d = 2; d <= 4; ++d) {
        KoszulComplex k(*c, r, d);
        for (std::uint32_t t = 0; t <= 5; ++t) {
          CHECK(euler_check(k, t));
          for (std::uint32_t i = 1; i + 1 <= t; ++i) CHECK(differential_squares_to_zero(k, i, t));
        }
      }
    }
  }
}

TEST_CASE("secant of the Veronese surface and of v2(P3)") {
  for (std::uint32_t vars : {3u, 4u}) {
    SecantCache cache(GradedAlgebra::polynomial(vars));
    const auto table = betti_table(cache, 2, 2, 1, 5);
    std::set<std::uint32_t> degrees;
    for (const auto& [cell, beta] : table.entries) {
      if (cell.first == 1) degrees.insert(cell.second);
    }
    CHECK(degrees == std::set<std::uint32_t>{3});
    CHECK(table.at(1, 3) == (vars == 3 ? 1u : 10u));
  }
}

TEST_CASE("a zero ideal gives a free module") {
  SecantCache cache(GradedAlgebra::p1());
  const auto table = betti_table(cache, 3, 2, 3, 5);
  CHECK(table.entries == std::map<std::pair<std::uint32_t, std::uint32_t>, std::size_t>{{{0, 0}, 1}});
}

TEST_CASE("bound scans") {
  SecantCache cache(GradedAlgebra::p1());
  const auto one = bound_scan(cache, 1, 1, {2, 3, 4, 5, 6}, 5);
  CHECK(one.constant);
  CHECK(one.value == 2u);

  // Tor_2 of the conic vanishes, so d = 2 does not count against constancy.
  const auto two = bound_scan(cache, 1, 2, {2, 3, 4}, 5);
  CHECK(two.per_d[0].second == std::nullopt);
  CHECK(two.constant);
  CHECK(two.value == 3u);

  const auto none = bound_scan(cache, 3, 1, {2, 3}, 4);
  CHECK_FALSE(none.constant);
  CHECK_FALSE(none.value.has_value());

  BettiTable t;
  t.entries = {{{1, 2}, 3}, {{1, 4}, 1}, {{2, 3}, 2}};
  CHECK(max_tor_degree(t, 1) == 4u);
  CHECK(max_tor_degree(t, 3) == std::nullopt);
}

TEST_CASE("parallel tables equal serial ones") {
  SecantCache a(GradedAlgebra::p1()), b(GradedAlgebra::p1());
  const auto serial = betti_table(a, 2, 6, 3, 6, 1);
  const auto parallel = betti_table(b, 2, 6, 3, 6, 4);
  CHECK(serial.entries == parallel.entries);

  CHECK_THROWS_AS(run_parallel(3, 10,
                               [](std::size_t k) {
                                 if (k == 7) throw std::runtime_error("boom");
                               }),
                  std::runtime_error);
}

TEST_CASE("free module dimensions") {
  const auto b = GradedAlgebra::p1();
  CHECK(symmetrized_hom_dim(b, 3, 1, 2, 4) == 60);
  CHECK(free_module_dim_check(b, 3, 1, 2, 4));
  CHECK(symmetrized_hom_dim(b, 2, 2, 3, 3) == 1);
  CHECK(symmetrized_hom_dim(b, 3, 0, 0, 2) == multichoose(4, 2));
  CHECK_THROWS_AS(free_module_dim_check(b, 1, 2, 0, 0), std::invalid_argument);
  const auto p2 = GradedAlgebra::polynomial(3);
  for (std::uint32_t d = 1; d <= 2; ++d) {
    for (std::uint32_t e = 0; e <= d; ++e) {
      for (std::uint32_t m = 0; m <= 3; ++m) {
        for (std::uint32_t n = 0; n <= m; ++n) CHECK(free_module_dim_check(p2, d, e, n, m));
      }
    }
  }
}

TEST_CASE("cost estimates") {
  const auto b = GradedAlgebra::p1();
  // dim B_3 = 4: the largest touched chain group is Lambda^1 (x) Sym^3.
  CHECK(estimated_rows(b, 3, 1, 4) == 4 * 20);
  const CostGuardError e(10, 5);
  CHECK(e.estimate() == 10);
  CHECK(std::string(e.what()).find("--force") != std::string::npos);
}
