#include "phv/orbit.hpp"

#include <algorithm>
#include <deque>
#include <exception>
#include <map>

#include "phv/error.hpp"

namespace phv {

namespace {

struct Node {
  Module module;
  Natural dim;
  std::vector<CastlingMove> path;
  std::uint32_t depth = 0;
};

struct Candidate {
  CastlingMove move;
  Natural dim;
  std::optional<Module> child;  // absent when dim exceeds the bound
};

std::vector<Candidate> expand(const Node& node, const OrbitLimits& limits) {
  std::vector<Candidate> out;
  for (auto& mv : castling_moves(node.module, limits.subset_policy)) {
    Candidate c;
    c.dim = dim_after(node.module, mv);
    if (c.dim <= limits.max_dim) c.child = castle(node.module, mv);
    c.move = std::move(mv);
    out.push_back(std::move(c));
  }
  return out;
}

// Shared bookkeeping for both traversals; candidates must be merged in
// (frontier order, move order) for the result to be schedule independent.
class OrbitBuilder {
 public:
  OrbitBuilder(const Module& seed, const OrbitLimits& limits) : limits_(limits) {
    Node root;
    root.module = canonical_form(seed);
    root.dim = module_dim(root.module);
    if (root.dim > limits.max_dim) throw Error("seed dimension exceeds max_dim");
    index_.emplace(root.module, 0);
    nodes_.push_back(std::move(root));
  }

  const Node& node(std::size_t i) const { return nodes_[i]; }
  bool at_boundary(std::size_t i) const { return nodes_[i].depth >= limits_.max_steps; }

  // Returns indices of newly inserted nodes.
  std::vector<std::size_t> merge(std::size_t parent, std::vector<Candidate>& candidates) {
    std::vector<std::size_t> inserted;
    const bool boundary = at_boundary(parent);
    for (auto& c : candidates) {
      ++result_.nodes_visited;
      if (!c.child) {
        result_.truncated_dim = true;
        continue;
      }
      if (index_.contains(*c.child)) continue;
      if (boundary) {
        result_.truncated_steps = true;
        continue;
      }
      if (nodes_.size() >= limits_.max_nodes) {
        result_.truncated_nodes = true;
        continue;
      }
      Node n;
      n.module = std::move(*c.child);
      n.dim = std::move(c.dim);
      n.path = nodes_[parent].path;
      n.path.push_back(std::move(c.move));
      n.depth = nodes_[parent].depth + 1;
      index_.emplace(n.module, nodes_.size());
      inserted.push_back(nodes_.size());
      nodes_.push_back(std::move(n));
    }
    return inserted;
  }

  OrbitResult finish() {
    for (auto& n : nodes_) {
      result_.members.push_back({std::move(n.module), std::move(n.dim), std::move(n.path)});
    }
    std::sort(result_.members.begin(), result_.members.end(),
              [](const OrbitMember& a, const OrbitMember& b) {
                return a.dim != b.dim ? a.dim < b.dim : a.module < b.module;
              });
    return std::move(result_);
  }

 private:
  const OrbitLimits& limits_;
  std::vector<Node> nodes_;
  std::map<Module, std::size_t> index_;
  OrbitResult result_;
};

}  // namespace

OrbitResult enumerate_orbit_serial(const Module& seed, const OrbitLimits& limits) {
  OrbitBuilder builder(seed, limits);
  std::deque<std::size_t> queue{0};
  while (!queue.empty()) {
    const auto i = queue.front();
    queue.pop_front();
    auto candidates = expand(builder.node(i), limits);
    for (auto j : builder.merge(i, candidates)) queue.push_back(j);
  }
  return builder.finish();
}

OrbitResult enumerate_orbit(const Module& seed, const OrbitLimits& limits) {
  OrbitBuilder builder(seed, limits);
  std::vector<std::size_t> frontier{0};
  while (!frontier.empty()) {
    const auto count = static_cast<std::ptrdiff_t>(frontier.size());
    std::vector<std::vector<Candidate>> candidates(frontier.size());
    std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t i = 0; i < count; ++i) {
      try {
        candidates[static_cast<std::size_t>(i)] =
            expand(builder.node(frontier[static_cast<std::size_t>(i)]), limits);
      } catch (...) {
#pragma omp critical(phv_orbit_failure)
        if (!failure) failure = std::current_exception();
      }
    }
    if (failure) std::rethrow_exception(failure);
    std::vector<std::size_t> next;
    for (std::size_t i = 0; i < frontier.size(); ++i) {
      auto inserted = builder.merge(frontier[i], candidates[i]);
      next.insert(next.end(), inserted.begin(), inserted.end());
    }
    frontier = std::move(next);
  }
  return builder.finish();
}

std::optional<CastlingMove> inverse_move(const Module& parent, const CastlingMove& move) {
  const Module target = canonical_form(parent);
  const Module child = castle(parent, move);
  const auto policy = child.summands.size() <= 12 ? SubsetPolicy::all_subsets
                                                  : SubsetPolicy::singletons_and_full;
  for (const auto& candidate : castling_moves(child, policy)) {
    if (castle(child, candidate) == target) return candidate;
  }
  return std::nullopt;
}

EquivalenceResult castling_equivalent(const Module& a, const Module& b, const OrbitLimits& limits) {
  EquivalenceResult result;
  OrbitLimits forward = limits;
  OrbitLimits backward = limits;
  forward.max_steps = (limits.max_steps + 1) / 2;
  backward.max_steps = limits.max_steps / 2;
  const auto from_a = enumerate_orbit(a, forward);
  const auto from_b = enumerate_orbit(b, backward);
  result.truncated = from_a.truncated() || from_b.truncated();

  std::map<Module, const OrbitMember*> reached;
  for (const auto& m : from_b.members) reached.emplace(m.module, &m);
  const OrbitMember* best_a = nullptr;
  const OrbitMember* best_b = nullptr;
  for (const auto& m : from_a.members) {
    auto it = reached.find(m.module);
    if (it == reached.end()) continue;
    const auto length = m.path.size() + it->second->path.size();
    if (!best_a || length < best_a->path.size() + best_b->path.size()) {
      best_a = &m;
      best_b = it->second;
    }
  }
  if (!best_a) return result;

  result.found = true;
  result.path = best_a->path;
  // Walk b's path forward to collect the intermediate modules, then undo it.
  std::vector<Module> chain{canonical_form(b)};
  for (const auto& mv : best_b->path) chain.push_back(castle(chain.back(), mv));
  for (std::size_t i = best_b->path.size(); i-- > 0;) {
    auto inv = inverse_move(chain[i], best_b->path[i]);
    if (!inv) throw Error("internal error: castling transform without inverse");
    result.path.push_back(std::move(*inv));
  }
  return result;
}

}  // namespace phv
