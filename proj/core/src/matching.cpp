#include "recamp/matching.hpp"

#include <algorithm>
#include <limits>

#include "recamp/error.hpp"

namespace recamp {

namespace {

constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max() / 4;

// Successive shortest augmenting paths. Dijkstra runs on reduced costs over a
// dense vertex scan, picking the lowest vertex id on ties so witnesses are
// reproducible.
class MinCostFlow {
 public:
  explicit MinCostFlow(std::size_t n) : head_(n), potential_(n, 0) {}

  std::size_t add_arc(std::size_t from, std::size_t to, std::int64_t cap, std::int64_t cost) {
    const std::size_t id = arcs_.size();
    arcs_.push_back({to, cap, cost});
    head_[from].push_back(id);
    arcs_.push_back({from, 0, -cost});
    head_[to].push_back(id + 1);
    return id;
  }

  struct Totals {
    std::int64_t flow = 0;
    std::int64_t cost = 0;
  };

  Totals run(std::size_t source, std::size_t sink) {
    const std::size_t n = head_.size();
    Totals totals;
    std::vector<std::int64_t> dist(n);
    std::vector<std::size_t> via(n);
    std::vector<bool> done(n);
    for (;;) {
      std::fill(dist.begin(), dist.end(), kInf);
      std::fill(done.begin(), done.end(), false);
      dist[source] = 0;
      for (;;) {
        std::size_t u = n;
        for (std::size_t v = 0; v < n; ++v) {
          if (!done[v] && dist[v] < kInf && (u == n || dist[v] < dist[u])) u = v;
        }
        if (u == n) break;
        done[u] = true;
        for (std::size_t id : head_[u]) {
          const Arc& arc = arcs_[id];
          if (arc.cap <= 0 || done[arc.to]) continue;
          const std::int64_t nd = dist[u] + arc.cost + potential_[u] - potential_[arc.to];
          if (nd < dist[arc.to]) {
            dist[arc.to] = nd;
            via[arc.to] = id;
          }
        }
      }
      if (dist[sink] >= kInf) break;
      for (std::size_t v = 0; v < n; ++v) {
        if (dist[v] < kInf) potential_[v] += dist[v];
      }
      std::int64_t push = kInf;
      for (std::size_t v = sink; v != source; v = arcs_[via[v] ^ 1].to) {
        push = std::min(push, arcs_[via[v]].cap);
      }
      for (std::size_t v = sink; v != source; v = arcs_[via[v] ^ 1].to) {
        arcs_[via[v]].cap -= push;
        arcs_[via[v] ^ 1].cap += push;
        totals.cost += push * arcs_[via[v]].cost;
      }
      totals.flow += push;
    }
    return totals;
  }

  [[nodiscard]] std::int64_t flow_on(std::size_t arc) const { return arcs_[arc ^ 1].cap; }

 private:
  struct Arc {
    std::size_t to;
    std::int64_t cap;
    std::int64_t cost;
  };
  std::vector<Arc> arcs_;
  std::vector<std::vector<std::size_t>> head_;
  std::vector<std::int64_t> potential_;
};

void check_graph(const BipartiteMultigraph& g) {
  for (const BipartiteEdge& e : g.edges) {
    if (e.left >= g.left_count || e.right >= g.right_count) {
      throw Error(ErrorKind::kShape, "edge endpoint outside the declared vertex sets");
    }
    if (e.weight < 0) throw Error(ErrorKind::kShape, "edge weights must be nonnegative");
    if (e.multiplicity < 1) throw Error(ErrorKind::kShape, "edge multiplicity must be positive");
  }
}

// Vertex layout: source, left vertices, right vertices, sink.
struct FlowNetwork {
  MinCostFlow flow;
  std::vector<std::size_t> edge_arcs;
  std::size_t source;
  std::size_t sink;

  FlowNetwork(const BipartiteMultigraph& g, const std::vector<std::int64_t>& left_cap,
              const std::vector<std::int64_t>& right_cap)
      : flow(g.left_count + g.right_count + 2),
        source(0),
        sink(g.left_count + g.right_count + 1) {
    for (std::size_t l = 0; l < g.left_count; ++l) {
      if (left_cap[l] > 0) flow.add_arc(source, 1 + l, left_cap[l], 0);
    }
    edge_arcs.reserve(g.edges.size());
    for (const BipartiteEdge& e : g.edges) {
      edge_arcs.push_back(
          flow.add_arc(1 + e.left, 1 + g.left_count + e.right, e.multiplicity, e.weight));
    }
    for (std::size_t r = 0; r < g.right_count; ++r) {
      if (right_cap[r] > 0) flow.add_arc(1 + g.left_count + r, sink, right_cap[r], 0);
    }
  }

  MatchingResult read(const BipartiteMultigraph& g) const {
    MatchingResult out;
    for (std::size_t i = 0; i < g.edges.size(); ++i) {
      const std::int64_t used = flow.flow_on(edge_arcs[i]);
      if (used == 0) continue;
      out.chosen.push_back({i, used});
      out.cardinality += used;
      out.total_weight += used * g.edges[i].weight;
    }
    return out;
  }
};

}  // namespace

MatchingResult min_cost_max_cardinality_matching(const BipartiteMultigraph& g) {
  check_graph(g);
  for (const BipartiteEdge& e : g.edges) {
    if (e.multiplicity != 1) {
      throw Error(ErrorKind::kPrecondition, "simple matching requires multiplicity 1 everywhere");
    }
  }
  FlowNetwork net(g, std::vector<std::int64_t>(g.left_count, 1),
                  std::vector<std::int64_t>(g.right_count, 1));
  net.flow.run(net.source, net.sink);
  return net.read(g);
}

std::optional<MatchingResult> min_weight_perfect_b_matching(const BipartiteMultigraph& g,
                                                            const DegreeConstraint& b,
                                                            std::int64_t cap) {
  check_graph(g);
  if (b.left.size() != g.left_count || b.right.size() != g.right_count) {
    throw Error(ErrorKind::kShape, "degree constraint must cover exactly the graph's vertices");
  }
  auto negative = [](std::int64_t x) { return x < 0; };
  if (std::any_of(b.left.begin(), b.left.end(), negative) ||
      std::any_of(b.right.begin(), b.right.end(), negative)) {
    throw Error(ErrorKind::kShape, "required degrees must be nonnegative");
  }
  std::int64_t left_total = 0;
  std::int64_t right_total = 0;
  for (std::int64_t x : b.left) left_total += x;
  for (std::int64_t x : b.right) right_total += x;
  if (left_total != right_total) return std::nullopt;

  FlowNetwork net(g, b.left, b.right);
  const auto totals = net.flow.run(net.source, net.sink);
  if (totals.flow != left_total || totals.cost > cap) return std::nullopt;
  return net.read(g);
}

}  // namespace recamp
