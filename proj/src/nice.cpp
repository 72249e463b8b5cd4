#include "wrp/treewidth.hpp"

#include <algorithm>
#include <ostream>

namespace wrp {

std::string to_string(NiceKind kind) {
  switch (kind) {
    case NiceKind::kLeaf: return "leaf";
    case NiceKind::kIntroduce: return "introduce";
    case NiceKind::kForget: return "forget";
    case NiceKind::kJoin: return "join";
  }
  return "?";
}

int NiceTreeDecomposition::width() const {
  int w = -1;
  for (const auto& n : nodes) w = std::max(w, static_cast<int>(n.bag.size()) - 1);
  return w;
}

TreeDecomposition NiceTreeDecomposition::underlying() const {
  TreeDecomposition td;
  for (int i = 0; i < node_count(); ++i) {
    td.bags.push_back(nodes[static_cast<std::size_t>(i)].bag);
    for (int c : nodes[static_cast<std::size_t>(i)].children) td.links.emplace_back(c, i);
  }
  return td;
}

namespace {

class NiceBuilder {
 public:
  explicit NiceBuilder(const TreeDecomposition& td) : td_(td), tree_(static_cast<std::size_t>(td.node_count())) {
    for (auto [a, b] : td.links) {
      tree_[static_cast<std::size_t>(a)].push_back(b);
      tree_[static_cast<std::size_t>(b)].push_back(a);
    }
  }

  NiceTreeDecomposition build() {
    if (td_.node_count() == 0) {
      push(NiceKind::kLeaf, kNoVertex, {}, {});
    } else {
      int top = visit(0, -1);
      auto bag = out_.nodes[static_cast<std::size_t>(top)].bag;
      for (VertexId v : std::vector<VertexId>(bag.begin(), bag.end())) top = forget(top, v);
    }
    out_.root = out_.node_count() - 1;
    return std::move(out_);
  }

 private:
  int push(NiceKind kind, VertexId v, std::vector<VertexId> bag, std::vector<int> children) {
    out_.nodes.push_back(NiceNode{kind, v, std::move(bag), std::move(children)});
    return out_.node_count() - 1;
  }

  int forget(int child, VertexId v) {
    auto bag = out_.nodes[static_cast<std::size_t>(child)].bag;
    bag.erase(std::find(bag.begin(), bag.end(), v));
    return push(NiceKind::kForget, v, std::move(bag), {child});
  }

  int introduce(int child, VertexId v) {
    auto bag = out_.nodes[static_cast<std::size_t>(child)].bag;
    bag.insert(std::upper_bound(bag.begin(), bag.end(), v), v);
    return push(NiceKind::kIntroduce, v, std::move(bag), {child});
  }

  // Chain from `node` (whose bag is `from`) to a node with bag `to`.
  int morph(int node, const std::vector<VertexId>& from, const std::vector<VertexId>& to) {
    for (VertexId v : from) {
      if (!std::binary_search(to.begin(), to.end(), v)) node = forget(node, v);
    }
    for (VertexId v : to) {
      if (!std::binary_search(from.begin(), from.end(), v)) node = introduce(node, v);
    }
    return node;
  }

  int visit(int t, int parent) {
    const auto& bag = td_.bags[static_cast<std::size_t>(t)];
    std::vector<int> branches;
    for (int c : tree_[static_cast<std::size_t>(t)]) {
      if (c == parent) continue;
      const int sub = visit(c, t);
      branches.push_back(morph(sub, td_.bags[static_cast<std::size_t>(c)], bag));
    }
    if (branches.empty()) {
      if (bag.empty()) return push(NiceKind::kLeaf, kNoVertex, {}, {});
      int node = push(NiceKind::kLeaf, bag.front(), {bag.front()}, {});
      return morph(node, {bag.front()}, bag);
    }
    int acc = branches.front();
    for (std::size_t i = 1; i < branches.size(); ++i) {
      acc = push(NiceKind::kJoin, kNoVertex, bag, {acc, branches[i]});
    }
    return acc;
  }

  const TreeDecomposition& td_;
  std::vector<std::vector<int>> tree_;
  NiceTreeDecomposition out_;
};

}  // namespace

NiceTreeDecomposition make_nice(const TreeDecomposition& td) { return NiceBuilder(td).build(); }

std::vector<std::string> validate_nice(const Adjacency& adj, const NiceTreeDecomposition& ntd) {
  std::vector<std::string> errors;
  const int n = ntd.node_count();
  if (n == 0 || ntd.root != n - 1) errors.push_back("root must be the last node");
  std::vector<int> parents(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i) {
    const NiceNode& node = ntd.nodes[static_cast<std::size_t>(i)];
    const std::string at = "node " + std::to_string(i) + ": ";
    if (!std::is_sorted(node.bag.begin(), node.bag.end())) errors.push_back(at + "bag not sorted");
    for (int c : node.children) {
      if (c < 0 || c >= i) {
        errors.push_back(at + "child index out of order");
        return errors;
      }
      ++parents[static_cast<std::size_t>(c)];
    }
    auto child_bag = [&](std::size_t k) { return ntd.nodes[static_cast<std::size_t>(node.children[k])].bag; };
    switch (node.kind) {
      case NiceKind::kLeaf:
        if (!node.children.empty()) errors.push_back(at + "leaf with children");
        if (node.vertex == kNoVertex ? !node.bag.empty() : node.bag != std::vector<VertexId>{node.vertex}) {
          errors.push_back(at + "leaf bag must hold only its vertex");
        }
        break;
      case NiceKind::kIntroduce: {
        if (node.children.size() != 1) {
          errors.push_back(at + "introduce needs one child");
          break;
        }
        auto expect = child_bag(0);
        if (std::binary_search(expect.begin(), expect.end(), node.vertex)) {
          errors.push_back(at + "introduced vertex already in child");
        }
        expect.insert(std::upper_bound(expect.begin(), expect.end(), node.vertex), node.vertex);
        if (expect != node.bag) errors.push_back(at + "introduce bag mismatch");
        break;
      }
      case NiceKind::kForget: {
        if (node.children.size() != 1) {
          errors.push_back(at + "forget needs one child");
          break;
        }
        auto expect = child_bag(0);
        const auto it = std::find(expect.begin(), expect.end(), node.vertex);
        if (it == expect.end()) {
          errors.push_back(at + "forgotten vertex not in child");
          break;
        }
        expect.erase(it);
        if (expect != node.bag) errors.push_back(at + "forget bag mismatch");
        break;
      }
      case NiceKind::kJoin:
        if (node.children.size() != 2) {
          errors.push_back(at + "join needs two children");
          break;
        }
        if (child_bag(0) != node.bag || child_bag(1) != node.bag) errors.push_back(at + "join bags differ");
        break;
    }
  }
  for (int i = 0; i < n; ++i) {
    const int expected = i == ntd.root ? 0 : 1;
    if (parents[static_cast<std::size_t>(i)] != expected) {
      errors.push_back("node " + std::to_string(i) + ": wrong number of parents");
    }
  }
  if (ntd.root >= 0 && ntd.root < n && !ntd.nodes[static_cast<std::size_t>(ntd.root)].bag.empty()) {
    errors.push_back("root bag not empty");
  }
  for (const auto& v : validate_decomposition(adj, ntd.underlying()).violations) errors.push_back(v.message);
  return errors;
}

void write_nice(std::ostream& out, const NiceTreeDecomposition& ntd) {
  write_decomposition(out, ntd.underlying());
  for (int i = 0; i < ntd.node_count(); ++i) {
    const NiceNode& node = ntd.nodes[static_cast<std::size_t>(i)];
    out << "kind " << i << " " << to_string(node.kind);
    if (node.kind == NiceKind::kIntroduce || node.kind == NiceKind::kForget) out << ":" << node.vertex;
    out << "\n";
  }
  out << "root " << ntd.root << "\n";
}

}  // namespace wrp
