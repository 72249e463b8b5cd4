#include "wrp/realize.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

namespace wrp {

namespace {

// Contracted multigraph: vertices [0, bag_size) are bag positions, the rest
// are outside vertices of degree >= 4. Strands are (a, b, multiplicity).
struct Shape {
  int bag_size = 0;
  int vertex_count = 0;
  std::vector<std::tuple<int, int, int>> strands;

  std::string key() const {
    std::string k = std::to_string(bag_size) + "/" + std::to_string(vertex_count) + ":";
    for (auto [a, b, c] : strands) {
      k += std::to_string(a) + "," + std::to_string(b) + "x" + std::to_string(c) + ";";
    }
    return k;
  }
};

class WalkSearch {
 public:
  WalkSearch(const Shape& shape, const std::vector<std::pair<int, int>>& pairs) : pairs_(pairs) {
    for (auto [a, b, c] : shape.strands) {
      ends_.emplace_back(a, b);
      count_.push_back(c);
      remaining_ += c;
    }
    incident_.resize(static_cast<std::size_t>(shape.vertex_count));
    for (std::size_t t = 0; t < ends_.size(); ++t) {
      incident_[static_cast<std::size_t>(ends_[t].first)].push_back(static_cast<int>(t));
      if (ends_[t].second != ends_[t].first) incident_[static_cast<std::size_t>(ends_[t].second)].push_back(static_cast<int>(t));
    }
  }

  bool run() { return step(0, pairs_.front().first, false); }

 private:
  bool step(std::size_t walk, int cur, bool started) {
    if (walk == pairs_.size()) return remaining_ == 0;
    const int open = static_cast<int>(pairs_.size() - walk) - (started ? 1 : 0);
    if (remaining_ < open) return false;
    std::string key;
    key.reserve(count_.size() + 4);
    key.push_back(static_cast<char>(walk));
    key.push_back(static_cast<char>(cur));
    key.push_back(started ? '1' : '0');
    for (int c : count_) key.push_back(static_cast<char>(c));
    if (failed_.count(key)) return false;
    if (started && cur == pairs_[walk].second) {
      const int next = walk + 1 < pairs_.size() ? pairs_[walk + 1].first : 0;
      if (step(walk + 1, next, false)) return true;
    }
    for (int t : incident_[static_cast<std::size_t>(cur)]) {
      if (count_[static_cast<std::size_t>(t)] == 0) continue;
      const auto [a, b] = ends_[static_cast<std::size_t>(t)];
      --count_[static_cast<std::size_t>(t)];
      --remaining_;
      const bool ok = step(walk, a == cur ? b : a, true);
      ++count_[static_cast<std::size_t>(t)];
      ++remaining_;
      if (ok) return true;
    }
    failed_.insert(std::move(key));
    return false;
  }

  const std::vector<std::pair<int, int>>& pairs_;
  std::vector<std::pair<int, int>> ends_;
  std::vector<int> count_;
  int remaining_ = 0;
  std::vector<std::vector<int>> incident_;
  std::unordered_set<std::string> failed_;
};

// All canonical pairings with the given per-vertex end counts.
void pairings_with_ends(std::vector<int>& ends, std::vector<std::pair<int, int>>& current,
                        std::vector<std::vector<std::pair<int, int>>>& out) {
  int a = -1;
  for (std::size_t v = 0; v < ends.size(); ++v) {
    if (ends[v] > 0) {
      a = static_cast<int>(v);
      break;
    }
  }
  if (a < 0) {
    out.push_back(current);
    return;
  }
  int low = a;
  if (!current.empty() && current.back().first == a) low = current.back().second;
  for (int b = low; b < static_cast<int>(ends.size()); ++b) {
    if (b == a ? ends[static_cast<std::size_t>(a)] < 2 : ends[static_cast<std::size_t>(b)] < 1) continue;
    --ends[static_cast<std::size_t>(a)];
    --ends[static_cast<std::size_t>(b)];
    current.emplace_back(a, b);
    pairings_with_ends(ends, current, out);
    current.pop_back();
    ++ends[static_cast<std::size_t>(a)];
    ++ends[static_cast<std::size_t>(b)];
  }
}

std::vector<std::vector<std::pair<int, int>>> solve_shape(const Shape& shape) {
  std::vector<int> degree(static_cast<std::size_t>(shape.vertex_count), 0);
  int total = 0;
  std::vector<int> parent(static_cast<std::size_t>(shape.vertex_count));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    return x;
  };
  for (auto [a, b, c] : shape.strands) {
    degree[static_cast<std::size_t>(a)] += c;
    degree[static_cast<std::size_t>(b)] += c;
    total += c;
    parent[static_cast<std::size_t>(find(a))] = find(b);
  }

  // Per bag vertex: admissible end counts m with m <= degree and matching parity.
  std::vector<std::vector<std::pair<int, int>>> out;
  std::vector<int> ends(static_cast<std::size_t>(shape.bag_size), 0);
  std::vector<std::pair<int, int>> current;
  std::vector<std::vector<std::pair<int, int>>> candidates;
  auto choose = [&](auto&& self, int v) -> void {
    if (v == shape.bag_size) {
      int sum = 0;
      int beta = 0;
      for (int m : ends) {
        sum += m;
        beta += m > 0;
      }
      const int ell = sum / 2;
      if (ell < 1 || ell > beta || ell > total) return;
      // Every component must hold an endpoint.
      std::vector<char> touched(static_cast<std::size_t>(shape.vertex_count), 0);
      for (int u = 0; u < shape.bag_size; ++u) {
        if (ends[static_cast<std::size_t>(u)] > 0) touched[static_cast<std::size_t>(find(u))] = 1;
      }
      for (int u = 0; u < shape.vertex_count; ++u) {
        if (degree[static_cast<std::size_t>(u)] > 0 && !touched[static_cast<std::size_t>(find(u))]) return;
      }
      std::vector<int> work = ends;
      pairings_with_ends(work, current, candidates);
      return;
    }
    const int d = degree[static_cast<std::size_t>(v)];
    for (int m = d % 2; m <= d; m += 2) {
      ends[static_cast<std::size_t>(v)] = m;
      self(self, v + 1);
    }
    ends[static_cast<std::size_t>(v)] = 0;
  };
  choose(choose, 0);
  for (const auto& pairs : candidates) {
    WalkSearch search(shape, pairs);
    if (search.run()) out.push_back(pairs);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<PairList> PairingRealizer::realizable(const CapacitatedGraph& g, const std::vector<EdgeId>& edges,
                                                  const std::vector<VertexId>& bag) {
  if (edges.empty()) return {};
  std::unordered_map<VertexId, std::vector<EdgeId>> around;
  for (EdgeId e : edges) {
    const Edge& ed = g.edge(e);
    around[ed.u].push_back(e);
    around[ed.v].push_back(e);
  }
  auto in_bag = [&](VertexId v) { return std::binary_search(bag.begin(), bag.end(), v); };
  auto bag_pos = [&](VertexId v) { return static_cast<int>(std::lower_bound(bag.begin(), bag.end(), v) - bag.begin()); };

  // Kept vertices: the bag plus outside vertices of degree >= 4.
  std::map<VertexId, int> kept;
  for (const auto& [v, list] : around) {
    if (in_bag(v)) continue;
    if (list.size() % 2 != 0) return {};
    if (list.size() >= 4) kept[v] = 0;
  }
  int next_id = static_cast<int>(bag.size());
  for (auto& [v, id] : kept) id = next_id++;
  auto kept_id = [&](VertexId v) -> int {
    if (in_bag(v)) return bag_pos(v);
    const auto it = kept.find(v);
    return it == kept.end() ? -1 : it->second;
  };

  Shape shape;
  shape.bag_size = static_cast<int>(bag.size());
  shape.vertex_count = next_id;
  std::map<std::pair<int, int>, int> strands;
  std::unordered_set<EdgeId> used;
  std::vector<VertexId> starts;
  for (const auto& [v, list] : around) {
    if (kept_id(v) >= 0) starts.push_back(v);
  }
  std::sort(starts.begin(), starts.end());
  for (VertexId v : starts) {
    for (EdgeId e : around[v]) {
      if (used.count(e)) continue;
      used.insert(e);
      VertexId cur = g.edge(e).other(v);
      EdgeId via = e;
      while (kept_id(cur) < 0) {
        const auto& list = around[cur];
        const EdgeId next = list[0] == via ? list[1] : list[0];
        used.insert(next);
        via = next;
        cur = g.edge(next).other(cur);
      }
      int a = kept_id(v);
      int b = kept_id(cur);
      if (a > b) std::swap(a, b);
      ++strands[{a, b}];
    }
  }
  // Edges never reached lie on cycles through no kept vertex.
  if (used.size() != edges.size()) return {};
  for (const auto& [ab, c] : strands) shape.strands.emplace_back(ab.first, ab.second, c);

  // Components without a bag vertex are rejected.
  {
    std::vector<int> parent(static_cast<std::size_t>(shape.vertex_count));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)];
      return x;
    };
    for (auto [a, b, c] : shape.strands) parent[static_cast<std::size_t>(find(a))] = find(b);
    std::vector<char> has_bag(static_cast<std::size_t>(shape.vertex_count), 0);
    for (int u = 0; u < shape.bag_size; ++u) has_bag[static_cast<std::size_t>(find(u))] = 1;
    for (int u = shape.bag_size; u < shape.vertex_count; ++u) {
      if (!has_bag[static_cast<std::size_t>(find(u))]) return {};
    }
  }

  const std::string key = shape.key();
  auto it = cache_.find(key);
  if (it == cache_.end()) it = cache_.emplace(key, solve_shape(shape)).first;
  std::vector<PairList> out;
  for (const auto& local : it->second) {
    PairList pairs;
    for (auto [a, b] : local) pairs.emplace_back(bag[static_cast<std::size_t>(a)], bag[static_cast<std::size_t>(b)]);
    out.push_back(std::move(pairs));
  }
  return out;
}

}  // namespace wrp
