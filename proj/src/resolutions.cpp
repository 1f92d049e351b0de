#include "veronese/resolutions.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <set>
#include <sstream>
#include <thread>

#include "veronese/combinatorics.hpp"

namespace veronese {

namespace {

struct WedgeBasis {
  std::vector<std::vector<std::uint32_t>> tuples;
  std::map<std::vector<std::uint32_t>, std::size_t> index;
};

WedgeBasis wedge_basis(std::uint32_t n, std::uint32_t i) {
  WedgeBasis w{increasing_subsets(n, i), {}};
  for (std::size_t k = 0; k < w.tuples.size(); ++k) w.index.emplace(w.tuples[k], k);
  return w;
}

}  // namespace

KoszulComplex::KoszulComplex(SecantCache& cache, std::uint32_t r, std::uint32_t d)
    : cache_(&cache), r_(r), d_(d), n_(static_cast<std::uint32_t>(cache.algebra().dim(d))) {
  if (r == 0) throw std::invalid_argument("KoszulComplex: r must be at least 1");
}

std::size_t KoszulComplex::chain_dim(std::uint32_t i, std::uint32_t t) const {
  if (i > t || i > n_) return 0;
  return binomial(n_, i) * cache_->piece(r_, d_, t - i).dim();
}

Matrix KoszulComplex::differential(std::uint32_t i, std::uint32_t t) const {
  if (i == 0 || t < i) throw std::invalid_argument("koszul differential needs 1 <= i <= t");
  const std::uint32_t k = t - i;
  const auto& b = cache_->algebra();
  const auto& src = cache_->piece(r_, d_, k);
  const auto& dst = cache_->piece(r_, d_, k + 1);
  const auto& src_monomials = sym_basis(b, d_, k);
  const auto& dst_monomials = sym_basis(b, d_, k + 1);
  const auto source_wedges = wedge_basis(n_, i);
  const auto target_wedges = wedge_basis(n_, i - 1);

  std::vector<std::pair<std::pair<std::size_t, std::size_t>, Rational>> triplets;
  for (std::size_t jw = 0; jw < source_wedges.tuples.size(); ++jw) {
    const auto& wedge = source_wedges.tuples[jw];
    for (std::size_t q = 0; q < src.dim(); ++q) {
      const std::size_t col = jw * src.dim() + q;
      const auto& mono = src_monomials[src.complement()[q]];
      for (std::uint32_t a = 0; a < i; ++a) {
        auto rest = wedge;
        rest.erase(rest.begin() + a);
        const std::size_t row_base = target_wedges.index.at(rest) * dst.dim();
        const Rational sign = (a % 2 == 0) ? 1 : -1;
        const auto product = multiset_union({wedge[a]}, mono);
        for (const auto& e : dst.normal_form(dst_monomials.index(product))) {
          triplets.push_back({{row_base + e.index, col}, sign * e.value});
        }
      }
    }
  }
  return Matrix::from_triplets(binomial(n_, i - 1) * dst.dim(), source_wedges.tuples.size() * src.dim(),
                               std::move(triplets));
}

std::size_t KoszulComplex::differential_rank(std::uint32_t i, std::uint32_t t) {
  if (i == 0 || i > t || i > n_) return 0;
  RankCell* cell = nullptr;
  {
    std::lock_guard lock(mutex_);
    auto& slot = ranks_[{i, t}];
    if (!slot) slot = std::make_unique<RankCell>();
    cell = slot.get();
  }
  std::call_once(cell->once, [&] { cell->value = rank(differential(i, t)); });
  return cell->value;
}

std::size_t KoszulComplex::betti(std::uint32_t i, std::uint32_t t) {
  const std::size_t dim = chain_dim(i, t);
  if (dim == 0) return 0;
  return dim - differential_rank(i, t) - differential_rank(i + 1, t);
}

Matrix koszul_differential(SecantCache& cache, std::uint32_t r, std::uint32_t d, std::uint32_t i, std::uint32_t t) {
  return KoszulComplex(cache, r, d).differential(i, t);
}

std::size_t betti(SecantCache& cache, std::uint32_t r, std::uint32_t d, std::uint32_t i, std::uint32_t t) {
  return KoszulComplex(cache, r, d).betti(i, t);
}

std::size_t BettiTable::at(std::uint32_t i, std::uint32_t t) const {
  const auto it = entries.find({i, t});
  return it == entries.end() ? 0 : it->second;
}

void run_parallel(std::size_t jobs, std::size_t count, const std::function<void(std::size_t)>& task) {
  jobs = std::clamp<std::size_t>(jobs, 1, std::max<std::size_t>(1, count));
  if (jobs == 1) {
    for (std::size_t k = 0; k < count; ++k) task(k);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> workers;
  for (std::size_t w = 0; w < jobs; ++w) {
    workers.emplace_back([&] {
      for (std::size_t k = next++; k < count; k = next++) {
        try {
          task(k);
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!error) error = std::current_exception();
          next = count;
        }
      }
    });
  }
  for (auto& w : workers) w.join();
  if (error) std::rethrow_exception(error);
}

BettiTable betti_table(KoszulComplex& complex, std::uint32_t i_max, std::uint32_t t_max, std::size_t jobs) {
  BettiTable table;
  table.ring = complex.cache().algebra().describe();
  table.r = complex.r();
  table.d = complex.d();
  table.i_max = i_max;
  table.t_max = t_max;

  // Warm the quotient pieces serially: they form a dependency chain.
  for (std::uint32_t m = 0; m <= t_max; ++m) complex.cache().piece(complex.r(), complex.d(), m);

  std::vector<std::pair<std::uint32_t, std::uint32_t>> rank_cells;
  for (std::uint32_t t = 0; t <= t_max; ++t) {
    for (std::uint32_t i = 1; i <= std::min(i_max + 1, t); ++i) rank_cells.emplace_back(i, t);
  }
  // Largest cells first so the slow ones start early.
  std::sort(rank_cells.begin(), rank_cells.end(), [&](const auto& x, const auto& y) {
    return complex.chain_dim(x.first, x.second) > complex.chain_dim(y.first, y.second);
  });
  run_parallel(jobs, rank_cells.size(),
               [&](std::size_t k) { complex.differential_rank(rank_cells[k].first, rank_cells[k].second); });

  for (std::uint32_t i = 0; i <= i_max; ++i) {
    for (std::uint32_t t = 0; t <= t_max; ++t) {
      if (const std::size_t beta = complex.betti(i, t); beta != 0) table.entries[{i, t}] = beta;
    }
  }
  return table;
}

BettiTable betti_table(SecantCache& cache, std::uint32_t r, std::uint32_t d, std::uint32_t i_max, std::uint32_t t_max,
                       std::size_t jobs) {
  KoszulComplex complex(cache, r, d);
  return betti_table(complex, i_max, t_max, jobs);
}

std::optional<std::uint32_t> max_tor_degree(const BettiTable& table, std::uint32_t i) {
  std::optional<std::uint32_t> best;
  for (const auto& [cell, beta] : table.entries) {
    if (cell.first == i && beta != 0) best = std::max(best.value_or(0), cell.second);
  }
  return best;
}

ScanReport bound_scan(SecantCache& cache, std::uint32_t r, std::uint32_t i, const std::vector<std::uint32_t>& d_list,
                      std::uint32_t t_max, std::size_t jobs) {
  ScanReport report;
  report.r = r;
  report.i = i;
  report.t_max = t_max;
  for (const std::uint32_t d : d_list) {
    report.per_d.emplace_back(d, max_tor_degree(betti_table(cache, r, d, i, t_max, jobs), i));
  }
  report.constant = true;
  for (const auto& [d, degree] : report.per_d) {
    if (!degree) continue;
    if (report.value && *report.value != *degree) report.constant = false;
    if (!report.value) report.value = degree;
  }
  if (!report.value) report.constant = false;
  if (!report.constant) report.value.reset();
  return report;
}

bool euler_check(KoszulComplex& complex, std::uint32_t t) {
  Integer betti_side = 0, chain_side = 0;
  const std::uint32_t top = std::min(t, complex.generators());
  for (std::uint32_t i = 0; i <= top; ++i) {
    const int sign = (i % 2 == 0) ? 1 : -1;
    betti_side += sign * static_cast<long>(complex.betti(i, t));
    const std::size_t quotient_dim = complex.cache().piece(complex.r(), complex.d(), t - i).dim();
    chain_side += Integer(sign) * Integer(static_cast<unsigned long>(binomial(complex.generators(), i))) *
                  Integer(static_cast<unsigned long>(quotient_dim));
  }
  return betti_side == chain_side;
}

bool differential_squares_to_zero(const KoszulComplex& complex, std::uint32_t i, std::uint32_t t) {
  if (i == 0 || i + 1 > t || i + 1 > complex.generators()) return true;
  return (complex.differential(i, t) * complex.differential(i + 1, t)).is_zero();
}

std::size_t minimal_generator_count(SecantCache& cache, std::uint32_t r, std::uint32_t d, std::uint32_t t) {
  const auto& top = cache.ideal(r, d, t);
  if (t == 0) return top.dim();
  const auto& lower = cache.ideal(r, d, t - 1);
  if (lower.dim() == 0) return top.dim();
  std::vector<SymElement> gens;
  for (const auto& v : lower.basis()) gens.push_back({d, t - 1, to_dense(v, lower.ambient_dim())});
  return top.dim() - ideal_piece_from_generators(cache.algebra(), gens, t).dim();
}

namespace {

// A basis basic morphism: image slots, labels of the free slots in slot
// order, labels of the source slots.
struct BasisMorphism {
  std::vector<std::uint32_t> image;
  std::vector<std::uint32_t> free_labels;
  std::vector<std::uint32_t> source_labels;
  auto operator<=>(const BasisMorphism&) const = default;
};

BasisMorphism permute_target(const Permutation& sigma, const BasisMorphism& a, std::uint32_t m) {
  std::vector<long> slot_label(m, -1);
  std::vector<std::pair<std::uint32_t, std::uint32_t>> moved;
  for (std::size_t i = 0; i < a.image.size(); ++i) moved.emplace_back(sigma[a.image[i]], a.source_labels[i]);
  std::sort(moved.begin(), moved.end());
  BasisMorphism out;
  for (const auto& [slot, label] : moved) {
    out.image.push_back(slot);
    out.source_labels.push_back(label);
    slot_label[slot] = -2;
  }
  std::size_t f = 0;
  for (std::uint32_t j = 0; j < m; ++j) {
    if (std::binary_search(a.image.begin(), a.image.end(), j)) continue;
    slot_label[sigma[j]] = a.free_labels[f++];
  }
  for (std::uint32_t j = 0; j < m; ++j) {
    if (slot_label[j] >= 0) out.free_labels.push_back(static_cast<std::uint32_t>(slot_label[j]));
  }
  return out;
}

void for_each_tuple(std::uint32_t kinds, std::uint32_t length,
                    const std::function<void(const std::vector<std::uint32_t>&)>& f) {
  std::vector<std::uint32_t> t(length, 0);
  if (length > 0 && kinds == 0) return;
  while (true) {
    f(t);
    std::size_t k = 0;
    while (k < length && ++t[k] == kinds) t[k++] = 0;
    if (k == length) return;
  }
}

}  // namespace

std::uint64_t symmetrized_hom_dim(const GradedAlgebra& b, std::uint32_t d, std::uint32_t e, std::uint32_t n,
                                  std::uint32_t m) {
  if (e > d || n > m) throw std::invalid_argument("free_module_dim_check: need e <= d and n <= m");
  const auto free_kinds = static_cast<std::uint32_t>(b.dim(d));
  const auto shift_kinds = static_cast<std::uint32_t>(b.dim(d - e));
  const auto perms = all_permutations(m);
  std::set<BasisMorphism> orbits;
  for (const auto& image : increasing_subsets(m, n)) {
    for_each_tuple(free_kinds, m - n, [&](const std::vector<std::uint32_t>& free_labels) {
      for_each_tuple(shift_kinds, n, [&](const std::vector<std::uint32_t>& source_labels) {
        const BasisMorphism a{image, free_labels, source_labels};
        BasisMorphism least = a;
        for (const auto& sigma : perms) least = std::min(least, permute_target(sigma, a, m));
        orbits.insert(least);
      });
    });
  }
  return orbits.size();
}

bool free_module_dim_check(const GradedAlgebra& b, std::uint32_t d, std::uint32_t e, std::uint32_t n,
                           std::uint32_t m) {
  const std::uint64_t counted = symmetrized_hom_dim(b, d, e, n, m);
  return counted == multichoose(b.dim(d - e), n) * multichoose(b.dim(d), m - n);
}

std::uint64_t estimated_rows(const GradedAlgebra& b, std::uint32_t d, std::uint32_t i_max, std::uint32_t t_max) {
  const std::uint64_t n = b.dim(d);
  std::uint64_t best = multichoose(n, t_max);
  for (std::uint32_t t = 0; t <= t_max; ++t) {
    for (std::uint32_t i = 0; i <= std::min(i_max + 1, t); ++i) {
      best = std::max(best, binomial(n, i) * multichoose(n, t - i));
    }
  }
  return best;
}

namespace {

std::string cost_message(std::uint64_t estimate, std::uint64_t cap) {
  std::ostringstream os;
  os << "estimated " << estimate << " matrix rows exceeds the cap of " << cap << " (use --force to override)";
  return os.str();
}

}  // namespace

CostGuardError::CostGuardError(std::uint64_t estimate, std::uint64_t cap)
    : std::runtime_error(cost_message(estimate, cap)), estimate_(estimate), cap_(cap) {}

}  // namespace veronese
