#include "veronese/combinatorics.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace veronese {

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    // exact at every step: result * (n - k + i) is divisible by i
    result = result * (n - k + i) / i;
  }
  return result;
}

std::uint64_t multichoose(std::uint64_t n, std::uint64_t k) {
  if (n == 0) return k == 0 ? 1 : 0;
  return binomial(n + k - 1, k);
}

std::uint64_t factorial(std::uint64_t n) {
  std::uint64_t result = 1;
  for (std::uint64_t i = 2; i <= n; ++i) result *= i;
  return result;
}

namespace {

void multisets_rec(std::uint32_t n, std::uint32_t k, std::uint32_t lo, std::vector<std::uint32_t>& cur,
                   std::vector<std::vector<std::uint32_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::uint32_t v = lo; v < n; ++v) {
    cur.push_back(v);
    multisets_rec(n, k, v, cur, out);
    cur.pop_back();
  }
}

void subsets_rec(std::uint32_t n, std::uint32_t k, std::uint32_t lo, std::vector<std::uint32_t>& cur,
                 std::vector<std::vector<std::uint32_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::uint32_t v = lo; v + (k - cur.size()) <= n; ++v) {
    cur.push_back(v);
    subsets_rec(n, k, v + 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<std::vector<std::uint32_t>> sorted_multisets(std::uint32_t n, std::uint32_t k) {
  std::vector<std::vector<std::uint32_t>> out;
  std::vector<std::uint32_t> cur;
  cur.reserve(k);
  if (k == 0 || n > 0) multisets_rec(n, k, 0, cur, out);
  return out;
}

std::vector<std::vector<std::uint32_t>> increasing_subsets(std::uint32_t n, std::uint32_t k) {
  std::vector<std::vector<std::uint32_t>> out;
  std::vector<std::uint32_t> cur;
  cur.reserve(k);
  if (k <= n) subsets_rec(n, k, 0, cur, out);
  return out;
}

std::vector<Permutation> all_permutations(std::uint32_t n) {
  std::vector<Permutation> out;
  Permutation p = identity_permutation(n);
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

Permutation identity_permutation(std::uint32_t n) {
  Permutation p(n);
  std::iota(p.begin(), p.end(), 0u);
  return p;
}

Permutation inverse(const Permutation& p) {
  Permutation inv(p.size());
  for (std::uint32_t i = 0; i < p.size(); ++i) inv[p[i]] = i;
  return inv;
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.size() != q.size()) throw std::invalid_argument("compose: permutation sizes differ");
  Permutation out(p.size());
  for (std::uint32_t i = 0; i < q.size(); ++i) out[i] = p[q[i]];
  return out;
}

bool is_permutation(const Permutation& p) {
  std::vector<bool> seen(p.size(), false);
  for (auto v : p) {
    if (v >= p.size() || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

}  // namespace veronese
