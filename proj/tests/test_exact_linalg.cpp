#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "veronese/exact_linalg.hpp"

using namespace veronese;

namespace {

// Fraction-free Gaussian elimination (Bareiss) over the integers. Every
// intermediate entry is a minor of the input, so divisions are exact.
std::size_t bareiss_rank(std::vector<std::vector<Integer>> a) {
  const std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  Integer prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        Integer num = a[r][c] * a[i][j] - a[i][c] * a[r][j];
        mpz_divexact(num.get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
        a[i][j] = num;
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    ++r;
  }
  return r;
}

std::vector<std::vector<Integer>> random_integers(std::mt19937_64& rng, std::size_t rows, std::size_t cols, int lo,
                                                  int hi) {
  std::uniform_int_distribution<int> dist(lo, hi);
  std::vector<std::vector<Integer>> a(rows, std::vector<Integer>(cols));
  for (auto& row : a) {
    for (auto& x : row) x = dist(rng);
  }
  return a;
}

Matrix to_matrix(const std::vector<std::vector<Integer>>& a) {
  std::vector<DenseVector> rows;
  for (const auto& row : a) {
    DenseVector r;
    for (const auto& x : row) r.emplace_back(x);
    rows.push_back(r);
  }
  return Matrix::from_dense(rows);
}

DenseVector dense(std::initializer_list<int> xs) {
  DenseVector v;
  for (const int x : xs) v.emplace_back(x);
  return v;
}

}  // namespace

TEST_CASE("rref of small matrices") {
  const auto id = rref(Matrix::identity(2));
  CHECK(id.reduced == Matrix::identity(2));
  CHECK(id.pivots == std::vector<std::size_t>{0, 1});

  const auto m = rref(Matrix::from_dense({dense({1, 2}), dense({2, 4})}));
  CHECK(m.reduced == Matrix::from_dense({dense({1, 2}), dense({0, 0})}));
  CHECK(m.pivots == std::vector<std::size_t>{0});
}

TEST_CASE("rank agrees with a fraction-free oracle") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t rows = 1 + rng() % 6, cols = 1 + rng() % 6;
    const auto a = random_integers(rng, rows, cols, -3, 3);
    const auto m = to_matrix(a);
    const std::size_t expected = bareiss_rank(a);
    CHECK(rank(m) == expected);
    const auto r = rref(m);
    CHECK(r.pivots.size() == expected);
    CHECK(rref(r.reduced).reduced == r.reduced);
    CHECK(kernel_basis(m).dim() + expected == cols);
  }
}

TEST_CASE("rank of low-rank products") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const auto left = random_integers(rng, 9, 3, -2, 2), right = random_integers(rng, 3, 8, -2, 2);
    const auto product = to_matrix(left) * to_matrix(right);
    std::vector<std::vector<Integer>> ints(9, std::vector<Integer>(8));
    for (std::size_t i = 0; i < 9; ++i) {
      for (std::size_t j = 0; j < 8; ++j) ints[i][j] = product.at(i, j).get_num();
    }
    CHECK(rank(product) == bareiss_rank(ints));
    CHECK(rank(product) <= 3);
  }
}

TEST_CASE("kernel membership matches annihilation") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t rows = 1 + rng() % 6, cols = 1 + rng() % 6;
    const auto m = to_matrix(random_integers(rng, rows, cols, -2, 2));
    const auto ker = kernel_basis(m);
    for (const auto& v : ker.basis()) CHECK(m.apply(v).empty());
    // Random test vectors, half of them drawn from the kernel.
    for (int k = 0; k < 10; ++k) {
      DenseVector v(cols);
      if (k % 2 == 0 && ker.dim() > 0) {
        for (const auto& b : ker.basis()) {
          const int c = static_cast<int>(rng() % 5) - 2;
          for (const auto& e : b) v[e.index] += c * e.value;
        }
      } else {
        for (auto& x : v) x = static_cast<int>(rng() % 5) - 2;
      }
      const auto image = m.apply(v);
      const bool annihilated = std::all_of(image.begin(), image.end(), [](const Rational& q) { return is_zero(q); });
      CHECK(in_span(ker, v) == annihilated);
    }
  }
}

TEST_CASE("in_span against an augmented rank oracle") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng() % 6, k = rng() % 5;
    auto gens = random_integers(rng, k, n, -2, 2);
    std::vector<DenseVector> rows;
    for (const auto& g : gens) {
      DenseVector r;
      for (const auto& x : g) r.emplace_back(x);
      rows.push_back(r);
    }
    const auto s = Subspace::span(n, rows);
    const auto probe = random_integers(rng, 1, n, -2, 2)[0];
    DenseVector v;
    for (const auto& x : probe) v.emplace_back(x);
    auto augmented = gens;
    augmented.push_back(probe);
    CHECK(in_span(s, v) == (bareiss_rank(augmented) == bareiss_rank(gens)));
    CHECK(s.dim() == bareiss_rank(gens));
  }
}

TEST_CASE("in_span edge cases") {
  CHECK(in_span(Subspace::full(3), dense({4, -1, 7})));
  CHECK_FALSE(in_span(Subspace::zero(3), dense({0, 1, 0})));
  CHECK(in_span(Subspace::zero(3), dense({0, 0, 0})));
  CHECK_THROWS_AS(in_span(Subspace::full(3), dense({1, 2})), std::invalid_argument);

  const auto s = Subspace::span(3, std::vector<DenseVector>{dense({1, 1, 0})});
  CHECK(in_span(s, dense({2, 2, 0})));
  CHECK_FALSE(in_span(s, dense({1, 1, 1})));
}

TEST_CASE("kernels of special matrices") {
  CHECK(kernel_basis(Matrix::identity(4)).dim() == 0);
  const auto ker = kernel_basis(Matrix(3, 4));
  CHECK(ker == Subspace::full(4));
}

TEST_CASE("subspace representation is canonical") {
  const std::vector<DenseVector> a{dense({1, 2, 3, 4}), dense({0, 1, 1, 0}), dense({1, 3, 4, 4})};
  const std::vector<DenseVector> b{dense({2, 5, 7, 8}), dense({1, 1, 2, 4})};
  const auto sa = Subspace::span(4, a), sb = Subspace::span(4, b);
  CHECK(sa.dim() == 2);
  CHECK(sa == sb);
  CHECK(sa.complement() == std::vector<std::size_t>{2, 3});
  CHECK(sa.contains(sb));
  CHECK(sa.sum(Subspace::span(4, std::vector<DenseVector>{dense({0, 0, 0, 1})})).dim() == 3);
}

TEST_CASE("quotient coordinates depend only on the class") {
  std::mt19937_64 rng(9);
  CHECK(quotient_coords(Subspace::zero(3), dense({1, -2, 5})) == dense({1, -2, 5}));
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<DenseVector> gens;
    for (int k = 0; k < 3; ++k) {
      DenseVector g(6);
      for (auto& x : g) x = static_cast<int>(rng() % 5) - 2;
      gens.push_back(g);
    }
    const auto s = Subspace::span(6, gens);
    DenseVector v(6);
    for (auto& x : v) x = static_cast<int>(rng() % 7) - 3;
    const auto base = quotient_coords(s, v);
    CHECK(base.size() == s.codim());
    for (const auto& b : s.basis()) {
      DenseVector w = v;
      for (const auto& e : b) w[e.index] += e.value;
      CHECK(quotient_coords(s, w) == base);
    }
  }
}

TEST_CASE("arithmetic with 200-digit rationals is exact") {
  std::mt19937_64 rng(13);
  auto big = [&] {
    std::string digits(1, static_cast<char>('1' + rng() % 9));
    for (int k = 1; k < 200; ++k) digits.push_back(static_cast<char>('0' + rng() % 10));
    return Integer(digits);
  };
  for (int trial = 0; trial < 50; ++trial) {
    Rational q(big(), big());
    q.canonicalize();
    const Rational inv = 1 / q;
    CHECK(q * inv == 1);
    CHECK(q.get_den() > 0);
  }
  // A rank-one matrix with huge entries stays rank one.
  const Rational a(big(), big()), b(big(), big()), c(big(), big());
  const auto m = Matrix::from_dense({{a, b}, {a * c, b * c}});
  CHECK(rank(m) == 1);
  const auto ker = kernel_basis(m);
  REQUIRE(ker.dim() == 1);
  CHECK(m.apply(ker.basis()[0]).empty());
}

TEST_CASE("matrix plumbing") {
  const auto m = Matrix::from_triplets(2, 3, {{{0, 1}, 2}, {{0, 1}, 3}, {{1, 2}, -1}, {{1, 0}, 1}, {{1, 0}, -1}});
  CHECK(m.at(0, 1) == 5);
  CHECK(m.at(1, 0) == 0);
  CHECK(m.nonzeros() == 2);
  CHECK(m.transpose().transpose() == m);
  CHECK(m.apply(dense({1, 1, 1})) == dense({5, -1}));
  CHECK(axpy({{0, 1}, {2, 1}}, -1, {{0, 1}}) == SparseVector{{2, 1}});
}

TEST_CASE("echelon form membership") {
  EchelonForm e(3);
  CHECK(e.insert({{0, 1}, {1, 1}}));
  CHECK(e.insert({{1, 1}, {2, 1}}));
  CHECK_FALSE(e.insert({{0, 1}, {2, -1}}));
  CHECK(e.in_span({{0, 2}, {1, 4}, {2, 2}}));
  CHECK(e.rank() == 2);
  auto [rows, pivots] = std::move(e).reduced();
  CHECK(pivots == std::vector<std::size_t>{0, 1});
  CHECK(rows[0] == SparseVector{{0, 1}, {2, -1}});
}
