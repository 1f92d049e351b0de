#ifndef VERONESE_COMBINATORICS_HPP
#define VERONESE_COMBINATORICS_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace veronese {

using Permutation = std::vector<std::uint32_t>;  // one-line: p[i] is the image of i

/// Binomial coefficient C(n, k); zero when k > n.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

/// Number of multisets of size k drawn from n kinds, C(n + k - 1, k).
std::uint64_t multichoose(std::uint64_t n, std::uint64_t k);

std::uint64_t factorial(std::uint64_t n);

/// All sorted index vectors of length k with entries in [0, n), in
/// lexicographic order.
std::vector<std::vector<std::uint32_t>> sorted_multisets(std::uint32_t n, std::uint32_t k);

/// All strictly increasing index vectors of length k with entries in [0, n),
/// in lexicographic order.
std::vector<std::vector<std::uint32_t>> increasing_subsets(std::uint32_t n, std::uint32_t k);

/// All permutations of [0, n) in lexicographic order.
std::vector<Permutation> all_permutations(std::uint32_t n);

Permutation identity_permutation(std::uint32_t n);
Permutation inverse(const Permutation& p);
/// (p * q)(i) = p(q(i)).
Permutation compose(const Permutation& p, const Permutation& q);
bool is_permutation(const Permutation& p);

}  // namespace veronese

#endif  // VERONESE_COMBINATORICS_HPP
