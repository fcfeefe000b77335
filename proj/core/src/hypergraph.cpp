#include "coverkit/hypergraph.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <string>

#include "coverkit/combinatorics.hpp"
#include "coverkit/error.hpp"
#include "coverkit/parallel.hpp"

namespace coverkit {

namespace {

// Number of leading edges (or vertices) whose in/out choice is fixed per
// parallel task. 2^kSplitDepth tasks.
constexpr std::size_t kSplitDepth = 6;

std::size_t resolve_workers(const EnumerationCaps& caps) {
  return caps.workers == 0 ? default_worker_count() : caps.workers;
}

// Small Pascal triangle in machine words; 64 rows stay far from overflow for
// the sizes the enumeration cap allows.
class SmallBinomials {
 public:
  explicit SmallBinomials(std::size_t rows) : rows_(rows + 1) {
    table_.assign(rows_ * rows_, 0);
    for (std::size_t n = 0; n < rows_; ++n) {
      at(n, 0) = 1;
      for (std::size_t k = 1; k <= n; ++k) at(n, k) = at(n - 1, k - 1) + (k < n ? at(n - 1, k) : 0);
    }
  }
  std::uint64_t operator()(std::size_t n, std::size_t k) const {
    return k > n ? 0 : table_[n * rows_ + k];
  }

 private:
  std::uint64_t& at(std::size_t n, std::size_t k) { return table_[n * rows_ + k]; }
  std::size_t rows_;
  std::vector<std::uint64_t> table_;
};

// Depth-first walk over the include/exclude tree of edges [next, N). Once the
// running union covers everything, every extension is a recovery set, so the
// remaining subtree is counted in closed form.
struct RecoveryCounter {
  const std::vector<BitSet>& edges;
  const SmallBinomials& choose;
  std::vector<std::uint64_t>& counts;  // counts[s] = recovery sets of size s

  void walk(std::size_t next, std::size_t chosen, const BitSet& covered) {
    const std::size_t remaining = edges.size() - next;
    if (covered.all()) {
      for (std::size_t j = 0; j <= remaining; ++j) counts[chosen + j] += choose(remaining, j);
      return;
    }
    if (remaining == 0) return;
    walk(next + 1, chosen + 1, covered | edges[next]);
    walk(next + 1, chosen, covered);
  }
};

}  // namespace

CoverageModel::CoverageModel(std::size_t n_vertices, std::vector<BitSet> edges)
    : n_vertices_(n_vertices), edges_(std::move(edges)) {
  if (n_vertices_ == 0) throw InputError("coverage model needs at least one vertex");
  if (edges_.empty()) throw InputError("coverage model needs at least one edge");
  BitSet covered(n_vertices_);
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (edges_[i].universe() != n_vertices_) {
      throw InputError("edge " + std::to_string(i) + " is not over the model's vertex set");
    }
    if (edges_[i].none()) throw InputError("edge " + std::to_string(i) + " is empty");
    covered |= edges_[i];
  }
  if (!covered.all()) throw InputError("edges do not cover every vertex");

  std::vector<BitSet> sorted = edges_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw InputError("duplicate edge in coverage model");
  }
}

CoverageModel CoverageModel::from_lists(std::size_t n_vertices,
                                        const std::vector<std::vector<std::size_t>>& edges) {
  std::vector<BitSet> masks;
  masks.reserve(edges.size());
  for (const auto& list : edges) {
    BitSet mask(n_vertices);
    for (std::size_t v : list) {
      if (v >= n_vertices) {
        throw InputError("vertex " + std::to_string(v) + " out of range for " +
                         std::to_string(n_vertices) + " vertices");
      }
      mask.set(v);
    }
    masks.push_back(std::move(mask));
  }
  return CoverageModel(n_vertices, std::move(masks));
}

std::size_t CoverageModel::degree(std::size_t v) const {
  return static_cast<std::size_t>(
      std::count_if(edges_.begin(), edges_.end(), [v](const BitSet& e) { return e.test(v); }));
}

std::size_t CoverageModel::max_edge_size() const {
  std::size_t best = 0;
  for (const auto& e : edges_) best = std::max(best, e.count());
  return best;
}

void RecoveryProfile::validate() const {
  if (n_edges == 0) throw InputError("profile needs at least one edge");
  if (max_non_recovery >= n_edges) throw InputError("profile M must be below N");
  if (alpha.size() != max_non_recovery + 1) throw InputError("profile alpha must have M+1 entries");
  const auto N = static_cast<std::int64_t>(n_edges);
  for (std::size_t s = 0; s < alpha.size(); ++s) {
    if (alpha[s] < 0 || alpha[s] > binomial(N, static_cast<std::int64_t>(s))) {
      throw InputError("profile alpha(" + std::to_string(s) + ") out of range");
    }
  }
  if (alpha[0] != 0) throw InputError("the empty edge set cannot cover a non-empty vertex set");
  for (std::size_t s = 0; s + 1 < alpha.size(); ++s) {
    BigInt lhs = alpha[s + 1] * static_cast<unsigned long>(s + 1);
    BigInt rhs = alpha[s] * static_cast<unsigned long>(n_edges - s);
    if (lhs < rhs) throw InputError("profile violates upward closure at s=" + std::to_string(s));
  }
}

bool is_recovery_set(const CoverageModel& model, std::span<const std::size_t> edge_indices) {
  BitSet covered(model.n_vertices());
  for (std::size_t i : edge_indices) {
    if (i >= model.n_edges()) {
      throw InputError("edge index " + std::to_string(i) + " out of range for " +
                       std::to_string(model.n_edges()) + " edges");
    }
    covered |= model.edge(i);
  }
  return covered.all();
}

RecoveryProfile recovery_profile(const CoverageModel& model, const EnumerationCaps& caps) {
  const std::size_t N = model.n_edges();
  if (N > caps.max_edges) {
    throw CapacityError("recovery_profile: " + std::to_string(N) + " edges exceeds the edge cap of " +
                        std::to_string(caps.max_edges));
  }
  if (N > 62) throw CapacityError("recovery_profile: more than 62 edges cannot be enumerated");

  const SmallBinomials choose(N);
  const std::size_t depth = std::min(N, kSplitDepth);
  const std::size_t tasks = std::size_t{1} << depth;
  std::vector<std::vector<std::uint64_t>> partial(tasks, std::vector<std::uint64_t>(N + 1, 0));

  parallel_for(tasks, resolve_workers(caps), [&](std::size_t task) {
    BitSet covered(model.n_vertices());
    std::size_t chosen = 0;
    for (std::size_t e = 0; e < depth; ++e) {
      if ((task >> e) & 1U) {
        covered |= model.edge(e);
        ++chosen;
      }
    }
    RecoveryCounter counter{model.edges(), choose, partial[task]};
    counter.walk(depth, chosen, covered);
  });

  // Reduce in task order so the result does not depend on scheduling.
  std::vector<std::uint64_t> counts(N + 1, 0);
  for (const auto& p : partial) {
    for (std::size_t s = 0; s <= N; ++s) counts[s] += p[s];
  }

  RecoveryProfile profile;
  profile.n_edges = N;
  std::size_t M = 0;
  for (std::size_t s = 0; s <= N; ++s) {
    if (counts[s] < choose(N, s)) M = s;
  }
  // Every subset above M must cover: the count reaches C(N, s).
  for (std::size_t s = M + 1; s <= N; ++s) {
    if (counts[s] != choose(N, s)) throw ConsistencyError("recovery enumeration is not upward closed");
  }
  profile.max_non_recovery = M;
  profile.alpha.reserve(M + 1);
  for (std::size_t s = 0; s <= M; ++s) profile.alpha.emplace_back(static_cast<unsigned long>(counts[s]));
  profile.validate();
  return profile;
}

Rational expected_coverage_exact(const RecoveryProfile& profile) {
  profile.validate();
  const auto N = static_cast<std::int64_t>(profile.n_edges);
  const auto M = static_cast<std::int64_t>(profile.max_non_recovery);
  Rational total = Rational(N) * (harmonic(N) - harmonic(N - M - 1));
  for (std::int64_t s = 0; s <= M; ++s) {
    const BigInt& a = profile.alpha[static_cast<std::size_t>(s)];
    if (a == 0) continue;
    total -= Rational(a, binomial(N - 1, s));
  }
  return total;
}

Rational expected_coverage_ie(const CoverageModel& model, const EnumerationCaps& caps) {
  const std::size_t V = model.n_vertices();
  const std::size_t N = model.n_edges();
  if (V > caps.max_vertices) {
    throw CapacityError("expected_coverage_ie: " + std::to_string(V) +
                        " vertices exceeds the vertex cap of " + std::to_string(caps.max_vertices));
  }
  if (V > 62) throw CapacityError("expected_coverage_ie: more than 62 vertices cannot be enumerated");

  // incidence[v] = set of edges containing v; deg(S) = |union of incidence over S|.
  std::vector<BitSet> incidence(V, BitSet(N));
  for (std::size_t e = 0; e < N; ++e) {
    for (std::size_t v : model.edge(e).elements()) incidence[v].set(e);
  }

  // signed_counts[deg] accumulates sum of (-1)^{|S|+1} over non-empty S with that degree.
  const std::size_t depth = std::min(V, kSplitDepth);
  const std::size_t tasks = std::size_t{1} << depth;
  std::vector<std::vector<std::int64_t>> partial(tasks, std::vector<std::int64_t>(N + 1, 0));

  parallel_for(tasks, resolve_workers(caps), [&](std::size_t task) {
    BitSet touched(N);
    std::size_t size = 0;
    for (std::size_t v = 0; v < depth; ++v) {
      if ((task >> v) & 1U) {
        touched |= incidence[v];
        ++size;
      }
    }
    auto& acc = partial[task];
    auto walk = [&](auto&& self, std::size_t next, std::size_t chosen, const BitSet& hit) -> void {
      if (next == V) {
        if (chosen > 0) acc[hit.count()] += (chosen % 2 == 1) ? 1 : -1;
        return;
      }
      self(self, next + 1, chosen + 1, hit | incidence[next]);
      self(self, next + 1, chosen, hit);
    };
    walk(walk, depth, size, touched);
  });

  std::vector<std::int64_t> signed_counts(N + 1, 0);
  for (const auto& p : partial) {
    for (std::size_t d = 0; d <= N; ++d) signed_counts[d] += p[d];
  }
  if (signed_counts[0] != 0) throw ConsistencyError("vertex set with no incident edge in a covering model");

  Rational total;
  for (std::size_t d = 1; d <= N; ++d) {
    if (signed_counts[d] == 0) continue;
    total += Rational(BigInt(static_cast<long>(signed_counts[d])) * static_cast<unsigned long>(N),
                      BigInt(static_cast<unsigned long>(d)));
  }
  return total;
}

CoverageModel coupon_collector_model(std::size_t n) {
  std::vector<std::vector<std::size_t>> edges;
  for (std::size_t i = 0; i < n; ++i) edges.push_back({i});
  return CoverageModel::from_lists(n, edges);
}

CoverageModel build_hamming_model(unsigned d, unsigned t, const EnumerationCaps& caps) {
  if (t > d) throw InputError("Hamming radius t must not exceed dimension d");
  if (d >= 63 || (std::size_t{1} << d) > caps.max_vertices) {
    throw CapacityError("Hamming cube 2^" + std::to_string(d) + " exceeds the vertex cap of " +
                        std::to_string(caps.max_vertices));
  }
  const std::size_t V = std::size_t{1} << d;
  if (t == d) {
    // Every ball is the whole cube; identical draws collapse to one edge.
    BitSet cube(V);
    cube.set_all();
    return CoverageModel(V, {cube});
  }
  std::vector<BitSet> edges;
  edges.reserve(V);
  for (std::size_t center = 0; center < V; ++center) {
    BitSet ball(V);
    for (std::size_t u = 0; u < V; ++u) {
      if (static_cast<unsigned>(std::popcount(center ^ u)) <= t) ball.set(u);
    }
    edges.push_back(std::move(ball));
  }
  return CoverageModel(V, std::move(edges));
}

}  // namespace coverkit
