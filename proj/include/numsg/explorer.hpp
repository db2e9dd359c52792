#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "numsg/semigroup.hpp"

namespace numsg {

/// Largest genus the compact tree nodes support (decomposition counts are
/// stored in one byte each).
inline constexpr Value kMaxTreeGenus = 80;

/// A genus-tree node: decomposition counts over [0, capacity), where
/// counts[y] is the number of pairs a <= b in S with a + b = y. An integer
/// is an element iff its count is positive and a primitive iff it is
/// exactly 1 (y > 0).
struct TreeNode {
  std::vector<std::uint8_t> counts;
  Value genus = 0;
  Value conductor = 0;
  Value multiplicity = 1;

  bool contains(Value n) const {
    return n >= conductor ||
           (n >= 0 && counts[static_cast<std::size_t>(n)] > 0);
  }
  /// Sorted minimal generators.
  std::vector<Value> primitives() const;
  NumericalSemigroup semigroup() const;
};

/// Root of the tree (N), sized for nodes down to `max_genus`.
TreeNode root_node(Value max_genus);

/// One child per primitive x > F, ascending in x; each child is S \ {x}.
/// Empty once the node reaches the genus its root was sized for.
std::vector<TreeNode> children(const TreeNode& node);

enum CheckFlag : unsigned {
  kCheckWilf = 1u << 0,        // W >= 0
  kCheckEliahou = 1u << 1,     // E >= 0
  kCheckFroberg = 1u << 2,     // c <= (t + 1) |L|
  kCheckWilfZero = 1u << 3,    // W = 0 shape
  kCheckEliahouM = 1u << 4,    // c <= 3m  =>  E >= 0
  kCheckIdentity = 1u << 5,    // W - E = |P_R| (|L| - q)
};

/// Parses a comma-separated list of wilf, eliahou, froberg, wilf-zero,
/// eliahou-m, identity, all. Throws MalformedSpec on unknown names.
unsigned parse_checks(std::string_view list);

struct GenusStats {
  std::uint64_t N = 0;
  std::uint64_t t = 0;   // c <= 3m
  std::uint64_t p = 0;   // 3e >= m
  std::uint64_t eE = 0;  // E >= 0
  Value min_wilf = std::numeric_limits<Value>::max();

  friend bool operator==(const GenusStats&, const GenusStats&) = default;
};

/// A semigroup found by a sweep, identified by its minimal generators.
struct Witness {
  Value genus = 0;
  std::vector<Value> generators;

  std::string spec() const;
  friend auto operator<=>(const Witness&, const Witness&) = default;
};

struct ExplorationStats {
  std::vector<GenusStats> per_genus;
  std::vector<Witness> wilf_violations;
  std::vector<Witness> eliahou_negatives;
  std::vector<Witness> froberg_violations;
  std::vector<Witness> wilf_zero_counterexamples;
  std::vector<Witness> eliahou_m_violations;
  std::vector<Witness> identity_violations;

  /// True when any enabled verification produced a witness.
  bool any_violation() const;

  friend bool operator==(const ExplorationStats&,
                         const ExplorationStats&) = default;
};

struct ExploreOptions {
  unsigned checks = 0;
  /// 0 means: WILF_THREADS, else hardware concurrency.
  unsigned threads = 0;
  /// Subtrees below this genus are expanded sequentially before the
  /// parallel phase.
  Value split_genus = 14;
  /// Froberg and W = 0 shape checks only run at genus <= this.
  Value expensive_check_ceiling = 20;
  /// Refuse sweeps whose estimated node count exceeds this.
  double node_budget = 2.0e10;
};

/// Rough node count for all genera <= max_genus (growth ~1.62 per genus).
double estimated_nodes(Value max_genus);

/// Resolves the worker count: explicit value, WILF_THREADS, hardware.
unsigned resolve_threads(unsigned requested);

/// Visits every numerical semigroup of genus <= max_genus exactly once.
/// Throws ResourceLimit if the estimate exceeds the node budget.
ExplorationStats enumerate(Value max_genus, const ExploreOptions& options = {});

/// Sequential walk handing each semigroup to `fn`.
void for_each_semigroup(Value max_genus,
                        const std::function<void(const NumericalSemigroup&)>& fn);

/// Per-genus counts computed from gap sets directly (no tree), for
/// max_genus <= kMaxOracleGenus.
inline constexpr Value kMaxOracleGenus = 15;
std::vector<std::uint64_t> oracle_enumerate(Value max_genus);

/// f(n) for 0 <= n <= max_c: the number of semigroups with conductor n.
std::vector<std::uint64_t> count_by_conductor(Value max_c,
                                              const ExploreOptions& options = {});

enum class NegativeMetric { Wilf, Eliahou };

struct NegativeWitness {
  std::string spec;
  InvariantRecord record;
};

/// All semigroups of genus <= max_genus whose metric is negative.
std::vector<NegativeWitness> find_negative(NegativeMetric metric,
                                           Value max_genus,
                                           const ExploreOptions& options = {});

}  // namespace numsg
