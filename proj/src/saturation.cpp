#include "metricsat/saturation.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <limits>
#include <numeric>
#include <queue>
#include <random>
#include <thread>

#include "metricsat/errors.hpp"

namespace metricsat {
namespace {

// Dense per-k-subset counters are capped at this many k-subsets.
constexpr std::uint64_t kMaxCounters = std::uint64_t{1} << 25;
// Superset lists are memoised while their total size stays below this.
constexpr std::uint64_t kMaxCachedSupersets = std::uint64_t{1} << 24;

std::uint64_t colex_rank_sorted(std::span<const std::size_t> sorted) {
  std::uint64_t out = 0;
  for (std::size_t i = 0; i < sorted.size(); ++i)
    out += binomial(sorted[i], i + 1);
  return out;
}

/// Incremental closure engine for fixed (n, r, k). Holds per-k-subset member
/// counts; inserting an r-subset bumps the C(n-r, k-r) counters of the
/// k-subsets containing it.
class ClosureEngine {
public:
  ClosureEngine(std::size_t n, std::size_t r, std::size_t k)
      : n_(n), r_(r), k_(k), threshold_(binomial(k, r) - 1),
        kset_count_(binomial(n, k)) {
    if (kset_count_ > kMaxCounters)
      throw OutOfRange("C(" + std::to_string(n) + "," + std::to_string(k) +
                       ") k-subsets exceed the closure engine's capacity");
    if (binomial(k, r) > std::numeric_limits<std::uint16_t>::max())
      throw OutOfRange("C(k,r) too large for the closure engine");
    if (kset_count_ * binomial(k, r) <= kMaxCachedSupersets)
      cache_.resize(binomial(n, r));
  }

  void set_priority(std::vector<std::uint64_t> priority) {
    priority_ = std::move(priority);
  }

  /// Runs to fixpoint. `members` is updated in place; steps are appended to
  /// `steps` when non-null.
  void run(UniformHypergraph::Bits &members, std::vector<ClosureStep> *steps) {
    counts_.assign(kset_count_, 0);
    for (auto t = members.find_first(); t != UniformHypergraph::Bits::npos;
         t = members.find_next(t))
      for (auto s : supersets(t))
        ++counts_[s];

    using Entry = std::pair<std::uint64_t, std::uint64_t>; // (priority, rank)
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> ready;
    auto prio = [&](std::uint64_t s) {
      return priority_.empty() ? s : priority_[s];
    };
    for (std::uint64_t s = 0; s < kset_count_; ++s)
      if (counts_[s] == threshold_)
        ready.emplace(prio(s), s);

    Subset kset(k_), rset(r_);
    while (!ready.empty()) {
      auto s = ready.top().second;
      ready.pop();
      if (counts_[s] != threshold_)
        continue;
      kset = unrank(s, n_, k_);
      std::uint64_t missing = find_missing(kset, members, rset);
      members.set(missing);
      if (steps)
        steps->push_back({unrank(missing, n_, r_), kset});
      for (auto sup : supersets(missing))
        if (++counts_[sup] == threshold_)
          ready.emplace(prio(sup), sup);
    }
  }

private:
  // The unique r-subset of `kset` not in `members`.
  std::uint64_t find_missing(const Subset &kset,
                             const UniformHypergraph::Bits &members,
                             Subset &idx) const {
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    Subset chosen(r_);
    do {
      for (std::size_t i = 0; i < r_; ++i)
        chosen[i] = kset[idx[i]];
      auto t = colex_rank_sorted(chosen);
      if (!members.test(t))
        return t;
    } while (next_colex(idx, k_));
    throw InternalConsistencyError("k-subset at threshold has no gap");
  }

  std::span<const std::uint32_t> supersets(std::uint64_t t) {
    if (!cache_.empty()) {
      auto &slot = cache_[t];
      if (slot.empty())
        compute_supersets(t, slot);
      return slot;
    }
    compute_supersets(t, scratch_);
    return scratch_;
  }

  void compute_supersets(std::uint64_t t, std::vector<std::uint32_t> &out) {
    out.clear();
    const Subset inner = unrank(t, n_, r_);
    Subset outside;
    outside.reserve(n_ - r_);
    for (std::size_t v = 0, j = 0; v < n_; ++v) {
      if (j < r_ && inner[j] == v)
        ++j;
      else
        outside.push_back(v);
    }
    const std::size_t extra = k_ - r_;
    Subset pick(extra);
    std::iota(pick.begin(), pick.end(), std::size_t{0});
    Subset merged(k_);
    do {
      std::size_t a = 0, b = 0, m = 0;
      while (a < r_ || b < extra) {
        if (b == extra || (a < r_ && inner[a] < outside[pick[b]]))
          merged[m++] = inner[a++];
        else
          merged[m++] = outside[pick[b++]];
      }
      out.push_back(static_cast<std::uint32_t>(colex_rank_sorted(merged)));
    } while (extra > 0 && next_colex(pick, n_ - r_));
  }

  std::size_t n_, r_, k_;
  std::uint64_t threshold_;
  std::uint64_t kset_count_;
  std::vector<std::uint16_t> counts_;
  std::vector<std::uint64_t> priority_;
  std::vector<std::vector<std::uint32_t>> cache_;
  std::vector<std::uint32_t> scratch_;
};

void check_k(std::size_t n, std::size_t r, std::size_t k) {
  if (k < r || k > n)
    throw InvalidK(k, r, n);
}

bool legal_subset(const Subset &s, std::size_t size, std::size_t n) {
  if (s.size() != size)
    return false;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] >= n)
      return false;
    if (i > 0 && s[i - 1] >= s[i])
      return false;
  }
  return true;
}

enum class Want { NotSaturated, Saturated };

std::optional<UniformHypergraph> enumerate_size(std::size_t n, std::size_t r,
                                                std::size_t k, std::size_t size,
                                                const EnumerationOptions &opts,
                                                Want want) {
  if (k < r)
    throw InvalidK(k, r, n);
  UniformHypergraph probe(n, r); // validates n, r
  const std::uint64_t universe = probe.universe_size();
  if (size > universe)
    return std::nullopt;
  const bool by_complement = universe - size < size;
  const std::uint64_t chosen = by_complement ? universe - size : size;
  const std::uint64_t total = count_combinations(universe, chosen);
  if (total > opts.budget)
    throw BudgetExceeded(total, opts.budget);

  const bool vacuous = k > n;
  const unsigned jobs = std::max(1u, opts.jobs);
  std::atomic<std::uint64_t> best{std::numeric_limits<std::uint64_t>::max()};

  auto build = [&](const Subset &pick) {
    UniformHypergraph::Bits bits(universe);
    if (by_complement)
      bits.set();
    for (auto e : pick)
      bits[e] = !by_complement;
    return bits;
  };

  auto worker = [&](unsigned id) {
    std::optional<ClosureEngine> engine;
    if (!vacuous)
      engine.emplace(n, r, k);
    Subset pick(chosen);
    std::iota(pick.begin(), pick.end(), std::size_t{0});
    std::uint64_t index = 0;
    do {
      if (index >= best.load(std::memory_order_relaxed))
        return;
      if (index % jobs == id) {
        auto bits = build(pick);
        if (engine)
          engine->run(bits, nullptr);
        const bool saturated = bits.all();
        if (saturated == (want == Want::Saturated)) {
          auto cur = best.load();
          while (index < cur && !best.compare_exchange_weak(cur, index)) {
          }
          return;
        }
      }
      ++index;
    } while (next_colex(pick, universe));
  };

  if (jobs == 1) {
    worker(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned id = 0; id < jobs; ++id)
      pool.emplace_back(worker, id);
  }

  const auto found = best.load();
  if (found == std::numeric_limits<std::uint64_t>::max())
    return std::nullopt;
  Subset pick(chosen);
  std::iota(pick.begin(), pick.end(), std::size_t{0});
  for (std::uint64_t i = 0; i < found; ++i)
    next_colex(pick, universe);
  return UniformHypergraph(n, r, build(pick));
}

} // namespace

ClosureResult weak_saturation_closure(const UniformHypergraph &h, std::size_t k,
                                      const ClosureOptions &options) {
  check_k(h.n(), h.r(), k);
  ClosureEngine engine(h.n(), h.r(), k);
  if (options.shuffle_seed) {
    std::vector<std::uint64_t> priority(binomial(h.n(), k));
    std::iota(priority.begin(), priority.end(), std::uint64_t{0});
    std::mt19937_64 rng(*options.shuffle_seed);
    std::shuffle(priority.begin(), priority.end(), rng);
    engine.set_priority(std::move(priority));
  }
  auto bits = h.bits();
  ClosureCertificate cert{h, k, {}};
  engine.run(bits, &cert.steps);
  return {UniformHypergraph(h.n(), h.r(), std::move(bits)), std::move(cert)};
}

bool verify_certificate(const ClosureCertificate &certificate) {
  const auto &base = certificate.base;
  const std::size_t n = base.n(), r = base.r(), k = certificate.k;
  auto current = base.bits();
  const std::uint64_t threshold = binomial(std::min(k, kMaxVertices), r) - 1;
  for (const auto &step : certificate.steps) {
    if (k < r || k > n)
      return false;
    if (!legal_subset(step.added, r, n) || !legal_subset(step.witness, k, n))
      return false;
    if (!std::includes(step.witness.begin(), step.witness.end(),
                       step.added.begin(), step.added.end()))
      return false;
    const auto added = colex_rank_sorted(step.added);
    if (current.test(added))
      return false;
    std::uint64_t present = 0;
    Subset idx(r), chosen(r);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    do {
      for (std::size_t i = 0; i < r; ++i)
        chosen[i] = step.witness[idx[i]];
      present += current.test(colex_rank_sorted(chosen));
    } while (next_colex(idx, k));
    if (present != threshold)
      return false;
    current.set(added);
  }
  return true;
}

bool is_weakly_saturated(const UniformHypergraph &h, std::size_t k) {
  if (k < h.r())
    throw InvalidK(k, h.r(), h.n());
  if (k > h.n())
    return h.is_complete();
  ClosureEngine engine(h.n(), h.r(), k);
  auto bits = h.bits();
  engine.run(bits, nullptr);
  return bits.all();
}

std::uint64_t count_combinations(std::uint64_t universe, std::uint64_t size) {
  if (size > universe)
    return 0;
  size = std::min(size, universe - size);
  unsigned __int128 acc = 1;
  for (std::uint64_t i = 1; i <= size; ++i) {
    acc = acc * (universe - size + i) / i;
    if (acc > std::numeric_limits<std::uint64_t>::max())
      return std::numeric_limits<std::uint64_t>::max();
  }
  return static_cast<std::uint64_t>(acc);
}

std::optional<UniformHypergraph>
exhaustive_size_check(std::size_t n, std::size_t r, std::size_t k,
                      std::size_t size, const EnumerationOptions &options) {
  return enumerate_size(n, r, k, size, options, Want::NotSaturated);
}

std::optional<UniformHypergraph>
find_saturated_of_size(std::size_t n, std::size_t r, std::size_t k,
                       std::size_t size, const EnumerationOptions &options) {
  return enumerate_size(n, r, k, size, options, Want::Saturated);
}

std::size_t min_saturation_search(std::size_t n, std::size_t r, std::size_t k,
                                  const EnumerationOptions &options) {
  if (k < r)
    throw InvalidK(k, r, n);
  std::size_t upper = binomial(n, r);
  if (r == 3 && k == 6 && n >= 5) {
    auto star = star_construction(n);
    if (is_weakly_saturated(star, k))
      upper = star.edge_count();
  }
  std::size_t m = upper;
  while (m > 0 && find_saturated_of_size(n, r, k, m - 1, options))
    --m;
  return m;
}

} // namespace metricsat
