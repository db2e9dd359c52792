#include "numsg/explorer.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdlib>
#include <string>
#include <unordered_set>

#include "genus_walk.hpp"
#include "numsg/classifiers.hpp"

namespace numsg {

using detail::NodeView;

std::vector<Value> TreeNode::primitives() const {
  return detail::node_primitives(NodeView{
      counts.data(), static_cast<Value>(counts.size()), genus, conductor,
      multiplicity});
}

NumericalSemigroup TreeNode::semigroup() const {
  return detail::node_semigroup(NodeView{
      counts.data(), static_cast<Value>(counts.size()), genus, conductor,
      multiplicity});
}

TreeNode root_node(Value max_genus) {
  if (max_genus < 0 || max_genus > kMaxTreeGenus) {
    throw SemigroupError(ErrorCode::BoundTooLarge,
                         "genus bound must be in [0, " +
                             std::to_string(kMaxTreeGenus) + "]");
  }
  TreeNode root;
  const Value cap = detail::node_capacity(max_genus);
  root.counts.resize(static_cast<std::size_t>(cap));
  detail::fill_root(root.counts.data(), cap);
  return root;
}

std::vector<TreeNode> children(const TreeNode& node) {
  const auto cap = static_cast<Value>(node.counts.size());
  NodeView v{node.counts.data(), cap, node.genus, node.conductor,
             node.multiplicity};
  std::vector<TreeNode> out;
  // The counts only stay exact down to the genus the root was sized for.
  if (node.genus >= (cap - 4) / 3) return out;
  auto [lo, hi] = detail::child_range(v);
  for (Value x = lo; x <= hi; ++x) {
    if (node.counts[static_cast<std::size_t>(x)] != 1) continue;
    TreeNode child;
    child.counts.resize(node.counts.size());
    child.multiplicity = detail::make_child(node.counts.data(),
                                            child.counts.data(), cap, x,
                                            node.multiplicity);
    child.conductor = x + 1;
    child.genus = node.genus + 1;
    out.push_back(std::move(child));
  }
  return out;
}

unsigned parse_checks(std::string_view list) {
  unsigned flags = 0;
  std::size_t pos = 0;
  while (pos <= list.size()) {
    auto comma = list.find(',', pos);
    auto name = list.substr(pos, comma == std::string_view::npos
                                     ? std::string_view::npos
                                     : comma - pos);
    if (name == "wilf") {
      flags |= kCheckWilf;
    } else if (name == "eliahou") {
      flags |= kCheckEliahou;
    } else if (name == "froberg") {
      flags |= kCheckFroberg;
    } else if (name == "wilf-zero") {
      flags |= kCheckWilfZero;
    } else if (name == "eliahou-m") {
      flags |= kCheckEliahouM;
    } else if (name == "identity") {
      flags |= kCheckIdentity;
    } else if (name == "all") {
      flags |= kCheckWilf | kCheckEliahou | kCheckFroberg | kCheckWilfZero |
               kCheckEliahouM | kCheckIdentity;
    } else {
      throw SemigroupError(ErrorCode::MalformedSpec,
                           "unknown check '" + std::string(name) + "'");
    }
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return flags;
}

std::string Witness::spec() const {
  return format_generator_spec(GeneratorSpec{generators, std::nullopt});
}

bool ExplorationStats::any_violation() const {
  return !wilf_violations.empty() || !eliahou_negatives.empty() ||
         !froberg_violations.empty() || !wilf_zero_counterexamples.empty() ||
         !eliahou_m_violations.empty() || !identity_violations.empty();
}

double estimated_nodes(Value max_genus) {
  double total = 0;
  for (Value g = 0; g <= max_genus; ++g) total += 3.6 * std::pow(1.62, g);
  return total;
}

unsigned resolve_threads(unsigned requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("WILF_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0 && v <= 1024) {
      return static_cast<unsigned>(v);
    }
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

namespace {

void check_bound(Value max_genus, double budget) {
  if (max_genus < 0 || max_genus > kMaxTreeGenus) {
    throw SemigroupError(ErrorCode::BoundTooLarge,
                         "genus bound must be in [0, " +
                             std::to_string(kMaxTreeGenus) + "]");
  }
  if (estimated_nodes(max_genus) > budget) {
    throw SemigroupError(
        ErrorCode::ResourceLimit,
        "genus " + std::to_string(max_genus) + " needs an estimated " +
            std::to_string(static_cast<long long>(estimated_nodes(max_genus))) +
            " nodes, over the budget of " +
            std::to_string(static_cast<long long>(budget)));
  }
}

struct NodeMetrics {
  Value e = 0;
  Value left_primitives = 0;
  Value right_primitives = 0;
  Value left = 0;
  Value q = 0;
  Value decomposables = 1;
  Value wilf = 0;
  Value eliahou = 0;
};

NodeMetrics metrics(const NodeView& v) {
  NodeMetrics r;
  if (v.is_full()) {
    r.e = 1;
    return r;  // all remaining terms vanish
  }
  const Value c = v.conductor;
  const Value m = v.multiplicity;
  for (Value y = 1; y < c; ++y) r.left_primitives += v.counts[y] == 1;
  for (Value y = c; y < c + m; ++y) r.right_primitives += v.counts[y] == 1;
  r.e = r.left_primitives + r.right_primitives;
  r.left = c - v.genus;
  r.q = (c + m - 1) / m;
  r.decomposables = m - r.right_primitives;
  r.wilf = r.e * r.left - c;
  r.eliahou = r.left_primitives * r.left - r.q * r.decomposables + r.q * m - c;
  return r;
}

Value node_type(const NodeView& v, const std::vector<Value>& primitives) {
  Value t = 0;
  for (Value x = 1; x < v.conductor; ++x) {
    if (v.counts[x] > 0) continue;
    bool pf = true;
    for (Value p : primitives) {
      if (!v.contains(x + p)) {
        pf = false;
        break;
      }
    }
    t += pf;
  }
  return t;
}

class StatsVisitor {
 public:
  StatsVisitor(Value max_genus, unsigned checks, Value ceiling)
      : checks_(checks), ceiling_(ceiling) {
    stats_.per_genus.resize(static_cast<std::size_t>(max_genus + 1));
  }

  void visit(const NodeView& v) {
    const NodeMetrics r = metrics(v);
    auto& row = stats_.per_genus[static_cast<std::size_t>(v.genus)];
    const Value m = v.multiplicity;
    ++row.N;
    if (v.conductor <= 3 * m) ++row.t;
    if (3 * r.e >= m) ++row.p;
    if (r.eliahou >= 0) ++row.eE;
    row.min_wilf = std::min(row.min_wilf, r.wilf);

    if (!checks_) return;
    if ((checks_ & kCheckWilf) && r.wilf < 0) {
      record(stats_.wilf_violations, v);
    }
    if ((checks_ & kCheckEliahou) && r.eliahou < 0) {
      record(stats_.eliahou_negatives, v);
    }
    if ((checks_ & kCheckEliahouM) && v.conductor <= 3 * m && r.eliahou < 0) {
      record(stats_.eliahou_m_violations, v);
    }
    if ((checks_ & kCheckIdentity) &&
        r.wilf - r.eliahou != r.right_primitives * (r.left - r.q)) {
      record(stats_.identity_violations, v);
    }
    if (v.genus <= ceiling_ && (checks_ & (kCheckFroberg | kCheckWilfZero))) {
      const auto prims = detail::node_primitives(v);
      if (checks_ & kCheckFroberg) {
        const Value t = v.is_full() ? 0 : node_type(v, prims);
        if (v.conductor > (t + 1) * r.left) {
          record(stats_.froberg_violations, v);
        }
      }
      if ((checks_ & kCheckWilfZero) && r.wilf == 0 &&
          !has_wilf_zero_shape(prims, m)) {
        record(stats_.wilf_zero_counterexamples, v);
      }
    }
  }

  void merge(StatsVisitor&& other) {
    for (std::size_t g = 0; g < stats_.per_genus.size(); ++g) {
      auto& a = stats_.per_genus[g];
      const auto& b = other.stats_.per_genus[g];
      a.N += b.N;
      a.t += b.t;
      a.p += b.p;
      a.eE += b.eE;
      a.min_wilf = std::min(a.min_wilf, b.min_wilf);
    }
    auto append = [](std::vector<Witness>& to, std::vector<Witness>& from) {
      to.insert(to.end(), std::make_move_iterator(from.begin()),
                std::make_move_iterator(from.end()));
    };
    append(stats_.wilf_violations, other.stats_.wilf_violations);
    append(stats_.eliahou_negatives, other.stats_.eliahou_negatives);
    append(stats_.froberg_violations, other.stats_.froberg_violations);
    append(stats_.wilf_zero_counterexamples,
           other.stats_.wilf_zero_counterexamples);
    append(stats_.eliahou_m_violations, other.stats_.eliahou_m_violations);
    append(stats_.identity_violations, other.stats_.identity_violations);
  }

  ExplorationStats take() && {
    for (auto* list :
         {&stats_.wilf_violations, &stats_.eliahou_negatives,
          &stats_.froberg_violations, &stats_.wilf_zero_counterexamples,
          &stats_.eliahou_m_violations, &stats_.identity_violations}) {
      std::sort(list->begin(), list->end());
    }
    return std::move(stats_);
  }

 private:
  static void record(std::vector<Witness>& list, const NodeView& v) {
    list.push_back(Witness{v.genus, detail::node_primitives(v)});
  }

  unsigned checks_;
  Value ceiling_;
  ExplorationStats stats_;
};

}  // namespace

ExplorationStats enumerate(Value max_genus, const ExploreOptions& options) {
  check_bound(max_genus, options.node_budget);
  detail::WalkOptions walk;
  walk.threads = resolve_threads(options.threads);
  walk.split_genus = options.split_genus;
  auto visitor = detail::walk_genus_tree<StatsVisitor>(
      max_genus, walk, [&] {
        return StatsVisitor(max_genus, options.checks,
                            options.expensive_check_ceiling);
      });
  return std::move(visitor).take();
}

void for_each_semigroup(
    Value max_genus, const std::function<void(const NumericalSemigroup&)>& fn) {
  check_bound(max_genus, ExploreOptions{}.node_budget);
  struct Forward {
    const std::function<void(const NumericalSemigroup&)>* fn;
    void visit(const NodeView& v) { (*fn)(detail::node_semigroup(v)); }
    void merge(Forward&&) {}
  };
  detail::WalkOptions walk;
  walk.threads = 1;
  detail::walk_genus_tree<Forward>(max_genus, walk, [&] { return Forward{&fn}; });
}

std::vector<std::uint64_t> oracle_enumerate(Value max_genus) {
  if (max_genus < 0 || max_genus > kMaxOracleGenus) {
    throw SemigroupError(ErrorCode::BoundTooLarge,
                         "oracle enumeration is limited to genus <= " +
                             std::to_string(kMaxOracleGenus));
  }
  std::vector<std::uint64_t> counts{1};
  for (Value g = 1; g <= max_genus; ++g) {
    // Gaps of a genus-g semigroup lie in [1, 2g - 1]; bit i of a mask
    // stands for the integer i.
    const int slots = static_cast<int>(2 * g - 1);
    const std::uint32_t range = (std::uint32_t{1} << (slots + 1)) - 1;
    const std::uint32_t last = ((std::uint32_t{1} << g) - 1) << (slots - g);
    std::unordered_set<std::uint32_t> seen;
    std::uint64_t n = 0;
    // Gosper's hack over g-subsets of the slots.
    for (std::uint32_t sub = (std::uint32_t{1} << g) - 1;;) {
      const std::uint32_t gaps = sub << 1;
      const std::uint32_t elements = ~gaps & range;
      bool closed = true;
      for (std::uint32_t rest = elements & ~1u; rest && closed;
           rest &= rest - 1) {
        const int a = std::countr_zero(rest);
        if (((elements << a) & gaps) != 0) closed = false;
      }
      if (closed && seen.insert(gaps).second) ++n;
      if (sub == last) break;
      const std::uint32_t low = sub & (~sub + 1);
      const std::uint32_t ripple = sub + low;
      sub = ripple | (((sub ^ ripple) >> 2) / low);
    }
    counts.push_back(n);
  }
  return counts;
}

std::vector<std::uint64_t> count_by_conductor(Value max_c,
                                              const ExploreOptions& options) {
  if (max_c < 0) {
    throw SemigroupError(ErrorCode::BadParameters, "max_c must be >= 0");
  }
  std::vector<std::uint64_t> f(static_cast<std::size_t>(max_c + 1), 0);
  f[0] = 1;
  if (max_c == 0) return f;
  const Value max_genus = max_c - 1;
  if (max_genus > kMaxTreeGenus) {
    throw SemigroupError(ErrorCode::BoundTooLarge, "conductor bound too large");
  }
  // The conductor-pruned tree holds sum f(n) ~ 2^(n/2) nodes.
  const double estimate = 14.0 * std::pow(2.0, static_cast<double>(max_c) / 2);
  if (estimate > options.node_budget) {
    throw SemigroupError(ErrorCode::ResourceLimit,
                         "conductor bound " + std::to_string(max_c) +
                             " exceeds the node budget");
  }
  struct Bucket {
    std::vector<std::uint64_t> f;
    void visit(const NodeView& v) {
      if (v.conductor > 0) ++f[static_cast<std::size_t>(v.conductor)];
    }
    void merge(Bucket&& other) {
      for (std::size_t i = 0; i < f.size(); ++i) f[i] += other.f[i];
    }
  };
  detail::WalkOptions walk;
  walk.threads = resolve_threads(options.threads);
  walk.split_genus = options.split_genus;
  walk.max_conductor = max_c;
  auto bucket = detail::walk_genus_tree<Bucket>(max_genus, walk, [&] {
    return Bucket{std::vector<std::uint64_t>(f.size(), 0)};
  });
  for (std::size_t i = 1; i < f.size(); ++i) f[i] = bucket.f[i];
  return f;
}

std::vector<NegativeWitness> find_negative(NegativeMetric metric,
                                           Value max_genus,
                                           const ExploreOptions& options) {
  ExploreOptions opts = options;
  opts.checks = metric == NegativeMetric::Wilf ? kCheckWilf : kCheckEliahou;
  auto stats = enumerate(max_genus, opts);
  const auto& list = metric == NegativeMetric::Wilf ? stats.wilf_violations
                                                    : stats.eliahou_negatives;
  std::vector<NegativeWitness> out;
  for (const auto& w : list) {
    auto s = construct(GeneratorSpec{w.generators, std::nullopt});
    out.push_back(NegativeWitness{w.spec(), invariant_record(s)});
  }
  return out;
}

}  // namespace numsg
