#pragma once

// Allocation-free depth-first walk of the genus tree with a sequential
// breadth phase followed by parallel subtrees. Internal to the library.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <cstring>
#include <thread>
#include <vector>

#include "numsg/semigroup.hpp"

namespace numsg::detail {

struct NodeView {
  const std::uint8_t* counts = nullptr;
  Value capacity = 0;
  Value genus = 0;
  Value conductor = 0;
  Value multiplicity = 1;

  bool contains(Value n) const {
    return n >= conductor || (n >= 0 && counts[n] > 0);
  }
  bool is_primitive(Value n) const { return n > 0 && counts[n] == 1; }
  bool is_full() const { return conductor == 0; }
};

struct WalkOptions {
  unsigned threads = 1;
  Value split_genus = 14;
  /// Children whose conductor would exceed this are not expanded (< 0: off).
  Value max_conductor = -1;
};

inline Value node_capacity(Value max_genus) { return 3 * max_genus + 4; }

inline void fill_root(std::uint8_t* counts, Value capacity) {
  for (Value y = 0; y < capacity; ++y) {
    counts[y] = static_cast<std::uint8_t>(y / 2 + 1);
  }
}

/// Writes S \ {x} into `child` given parent counts; returns the child's
/// multiplicity.
inline Value make_child(const std::uint8_t* parent, std::uint8_t* child,
                        Value capacity, Value x, Value parent_multiplicity) {
  std::memcpy(child, parent, static_cast<std::size_t>(x));
  for (Value y = x; y < capacity; ++y) {
    child[y] = static_cast<std::uint8_t>(parent[y] - (parent[y - x] > 0 ? 1 : 0));
  }
  if (x != parent_multiplicity) return parent_multiplicity;
  Value m = x + 1;
  while (child[m] == 0) ++m;
  return m;
}

/// Range [lo, hi] of candidate children x (primitives > F).
inline std::pair<Value, Value> child_range(const NodeView& v) {
  if (v.conductor == 0) return {1, 1};
  return {v.conductor, v.conductor + v.multiplicity - 1};
}

template <class Visitor>
class GenusWalker {
 public:
  GenusWalker(Value max_genus, const WalkOptions& options)
      : max_genus_(max_genus),
        capacity_(node_capacity(max_genus)),
        options_(options) {}

  /// `make` creates a fresh visitor; visitors need `visit(const NodeView&)`
  /// and `merge(Visitor&&)`.
  template <class Make>
  Visitor run(Make make) {
    Visitor main = make();
    std::vector<std::uint8_t> root(static_cast<std::size_t>(capacity_));
    fill_root(root.data(), capacity_);
    NodeView root_view{root.data(), capacity_, 0, 0, 1};

    const Value split = std::min(options_.split_genus, max_genus_);
    const unsigned threads = std::max(1u, options_.threads);
    if (threads == 1 || split >= max_genus_) {
      Frames frames(max_genus_ + 1, capacity_);
      dfs(main, frames, root_view, max_genus_, nullptr);
      return main;
    }

    // Breadth phase: visit everything above the split, collect the split
    // layer as independent subtree roots.
    std::vector<Seed> seeds;
    {
      Frames frames(split + 1, capacity_);
      dfs(main, frames, root_view, split, &seeds);
    }

    std::vector<Visitor> partial;
    partial.reserve(threads);
    for (unsigned i = 0; i < threads; ++i) partial.push_back(make());
    std::atomic<std::size_t> next{0};
    auto work = [&](unsigned id) {
      Frames frames(max_genus_ + 1, capacity_);
      while (true) {
        std::size_t i = next.fetch_add(1, std::memory_order_relaxed);
        if (i >= seeds.size()) break;
        const Seed& s = seeds[i];
        NodeView v{s.counts.data(), capacity_, split, s.conductor,
                   s.multiplicity};
        dfs_below(partial[id], frames, v, max_genus_);
      }
    };
    {
      std::vector<std::jthread> pool;
      for (unsigned i = 0; i < threads; ++i) pool.emplace_back(work, i);
    }
    for (auto& p : partial) main.merge(std::move(p));
    return main;
  }

 private:
  struct Seed {
    std::vector<std::uint8_t> counts;
    Value conductor;
    Value multiplicity;
  };

  struct Frames {
    Frames(Value depth, Value capacity)
        : capacity(capacity),
          data(static_cast<std::size_t>(depth * capacity)) {}
    std::uint8_t* at(Value genus) { return data.data() + genus * capacity; }
    Value capacity;
    std::vector<std::uint8_t> data;
  };

  // Visits v and all descendants down to `limit`. Nodes at depth `limit`
  // are handed to `seeds` (without visiting) when seeds is non-null.
  void dfs(Visitor& visitor, Frames& frames, const NodeView& v, Value limit,
           std::vector<Seed>* seeds) {
    if (seeds && v.genus == limit) {
      seeds->push_back(Seed{
          std::vector<std::uint8_t>(v.counts, v.counts + capacity_),
          v.conductor, v.multiplicity});
      return;
    }
    visitor.visit(v);
    if (v.genus == limit) return;
    expand(frames, v, [&](const NodeView& child) {
      dfs(visitor, frames, child, limit, seeds);
    });
  }

  void dfs_below(Visitor& visitor, Frames& frames, const NodeView& v,
                 Value limit) {
    visitor.visit(v);
    if (v.genus == limit) return;
    expand(frames, v, [&](const NodeView& child) {
      dfs_below(visitor, frames, child, limit);
    });
  }

  template <class Fn>
  void expand(Frames& frames, const NodeView& v, Fn&& fn) {
    auto [lo, hi] = child_range(v);
    std::uint8_t* buf = frames.at(v.genus + 1);
    for (Value x = lo; x <= hi; ++x) {
      if (v.counts[x] != 1) continue;
      if (options_.max_conductor >= 0 && x + 1 > options_.max_conductor) break;
      Value m = make_child(v.counts, buf, capacity_, x, v.multiplicity);
      NodeView child{buf, capacity_, v.genus + 1, x + 1, m};
      fn(child);
    }
  }

  Value max_genus_;
  Value capacity_;
  WalkOptions options_;
};

template <class Visitor, class Make>
Visitor walk_genus_tree(Value max_genus, const WalkOptions& options,
                        Make make) {
  GenusWalker<Visitor> walker(max_genus, options);
  return walker.run(make);
}

/// Sorted primitives of a node.
inline std::vector<Value> node_primitives(const NodeView& v) {
  if (v.is_full()) return {1};
  std::vector<Value> out;
  for (Value y = 1; y < v.conductor + v.multiplicity; ++y) {
    if (v.counts[y] == 1) out.push_back(y);
  }
  return out;
}

inline NumericalSemigroup node_semigroup(const NodeView& v) {
  std::vector<bool> table(static_cast<std::size_t>(v.conductor + v.multiplicity));
  for (Value y = 0; y < v.conductor + v.multiplicity; ++y) {
    table[static_cast<std::size_t>(y)] = v.counts[y] > 0;
  }
  return NumericalSemigroup::from_membership(std::move(table));
}

}  // namespace numsg::detail
