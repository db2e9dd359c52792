#include <gtest/gtest.h>

#include <cstdlib>
#include <set>

#include "brute.hpp"
#include "numsg/explorer.hpp"
#include "numsg/semigroup.hpp"

using namespace numsg;

namespace {

// N(g) for g = 0..25, frozen from the brute-force oracle below (g <= 12)
// and from tree runs cross-checked at several thread counts beyond that.
const std::vector<std::uint64_t> kCounts = {
    1,     1,     2,     4,     7,     12,    23,     39,     67,
    118,   204,   343,   592,   1001,  1693,  2857,   4806,   8045,
    13467, 22464, 37396, 62194, 103246, 170963, 282828, 467224};

std::vector<std::uint64_t> counts_of(const ExplorationStats& s) {
  std::vector<std::uint64_t> out;
  for (const auto& g : s.per_genus) out.push_back(g.N);
  return out;
}

std::vector<Value> V(std::initializer_list<Value> xs) { return xs; }

}  // namespace

TEST(Tree, ChildrenExamples) {
  auto root = root_node(5);
  EXPECT_EQ(root.genus, 0);
  EXPECT_TRUE(root.semigroup().is_full());
  auto kids = children(root);
  ASSERT_EQ(kids.size(), 1u);
  EXPECT_EQ(kids[0].semigroup(), construct("2,3"));

  auto grand = children(kids[0]);
  ASSERT_EQ(grand.size(), 2u);
  EXPECT_EQ(grand[0].semigroup(), construct("3,4,5"));
  EXPECT_EQ(grand[1].semigroup(), construct("2,5"));
  EXPECT_EQ(grand[0].primitives(), V({3, 4, 5}));

  EXPECT_EQ(children(grand[0]).size(), 3u);

  // Sized for genus 1: the genus-1 node is a leaf.
  auto small = children(root_node(1));
  ASSERT_EQ(small.size(), 1u);
  EXPECT_TRUE(children(small[0]).empty());
}

TEST(Tree, CompleteAndDuplicateFreeToGenus12) {
  std::vector<TreeNode> level{root_node(12)};
  for (Value g = 0; g < 12; ++g) {
    std::vector<TreeNode> next;
    std::set<std::vector<std::uint8_t>> keys;
    for (const auto& node : level) {
      for (auto& child : children(node)) {
        EXPECT_EQ(child.genus, g + 1);
        auto s = child.semigroup();
        ASSERT_TRUE(s.is_closed());
        ASSERT_EQ(s.genus(), g + 1);
        ASSERT_TRUE(keys.insert(canonical_key(s)).second) << to_spec_string(s);
        next.push_back(std::move(child));
      }
    }
    ASSERT_EQ(next.size(), kCounts[static_cast<std::size_t>(g + 1)]);
    level = std::move(next);
  }
}

TEST(Oracle, Examples) {
  EXPECT_EQ(oracle_enumerate(0), std::vector<std::uint64_t>({1}));
  EXPECT_EQ(oracle_enumerate(3), std::vector<std::uint64_t>({1, 1, 2, 4}));
  try {
    oracle_enumerate(kMaxOracleGenus + 1);
    FAIL() << "expected BoundTooLarge";
  } catch (const SemigroupError& e) {
    EXPECT_EQ(e.code(), ErrorCode::BoundTooLarge);
  }
}

TEST(Oracle, AgreesWithTestBruteForce) {
  auto lib = oracle_enumerate(12);
  for (Value g = 0; g <= 12; ++g) {
    EXPECT_EQ(lib[static_cast<std::size_t>(g)], brute::all_of_genus(g).size()) << g;
    EXPECT_EQ(lib[static_cast<std::size_t>(g)], kCounts[static_cast<std::size_t>(g)]);
  }
}

TEST(Enumerate, MatchesOracle) {
  auto stats = enumerate(12);
  EXPECT_EQ(counts_of(stats), oracle_enumerate(12));
}

TEST(Enumerate, CountsToGenus25) {
  auto stats = enumerate(25);
  EXPECT_EQ(counts_of(stats), kCounts);
}

TEST(Enumerate, CountersAreConsistent) {
  ExploreOptions opts;
  opts.checks = parse_checks("all");
  auto stats = enumerate(22, opts);
  EXPECT_FALSE(stats.any_violation());
  for (const auto& g : stats.per_genus) {
    EXPECT_LE(g.t, g.N);
    EXPECT_LE(g.p, g.N);
    EXPECT_LE(g.eE, g.N);
    EXPECT_GE(g.min_wilf, 0);
  }
  // The W = 0 minimum is attained at every genus by <2, 2g+1>.
  for (const auto& g : stats.per_genus) EXPECT_EQ(g.min_wilf, 0);
}

// Per-genus t, p and eE recomputed semigroup by semigroup.
TEST(Enumerate, StatisticsAgainstDirectComputation) {
  const Value G = 13;
  std::vector<GenusStats> direct(static_cast<std::size_t>(G + 1));
  for (Value g = 0; g <= G; ++g) {
    for (const auto& gaps : brute::all_of_genus(g)) {
      auto r = brute::record(brute::from_gaps(gaps));
      auto& d = direct[static_cast<std::size_t>(g)];
      ++d.N;
      if (r.c <= 3 * r.m) ++d.t;
      if (3 * r.e >= r.m) ++d.p;
      if (r.E >= 0) ++d.eE;
      d.min_wilf = std::min(d.min_wilf, r.W);
    }
  }
  auto stats = enumerate(G);
  ASSERT_EQ(stats.per_genus.size(), direct.size());
  for (std::size_t g = 0; g < direct.size(); ++g) {
    EXPECT_EQ(stats.per_genus[g], direct[g]) << "genus " << g;
  }
}

TEST(Enumerate, TrendTowardsSmallConductor) {
  auto stats = enumerate(30);
  const auto& a = stats.per_genus[10];
  const auto& b = stats.per_genus[30];
  EXPECT_GT(static_cast<double>(b.t) / static_cast<double>(b.N),
            static_cast<double>(a.t) / static_cast<double>(a.N));
  EXPECT_EQ(b.N, 5646773u);
}

TEST(Enumerate, DeterministicAcrossThreads) {
  ExploreOptions opts;
  opts.checks = parse_checks("all");
  opts.threads = 1;
  auto one = enumerate(21, opts);
  for (unsigned t : {2u, 3u, 8u}) {
    opts.threads = t;
    EXPECT_EQ(enumerate(21, opts), one) << t << " threads";
  }
  // A shallower split point must not change anything either.
  opts.split_genus = 5;
  EXPECT_EQ(enumerate(21, opts), one);
}

TEST(Enumerate, ResourceGuard) {
  ExploreOptions opts;
  opts.node_budget = 1000;
  try {
    enumerate(20, opts);
    FAIL() << "expected ResourceLimit";
  } catch (const SemigroupError& e) {
    EXPECT_EQ(e.code(), ErrorCode::ResourceLimit);
  }
  EXPECT_THROW(enumerate(-1), SemigroupError);
  EXPECT_THROW(enumerate(kMaxTreeGenus + 1), SemigroupError);
}

TEST(Checks, Parse) {
  EXPECT_EQ(parse_checks("wilf"), kCheckWilf);
  EXPECT_EQ(parse_checks("wilf,eliahou"), kCheckWilf | kCheckEliahou);
  EXPECT_EQ(parse_checks("all"), kCheckWilf | kCheckEliahou | kCheckFroberg |
                                     kCheckWilfZero | kCheckEliahouM |
                                     kCheckIdentity);
  EXPECT_THROW(parse_checks("wilff"), SemigroupError);
  EXPECT_THROW(parse_checks("wilf,"), SemigroupError);
}

TEST(Threads, Resolution) {
  EXPECT_EQ(resolve_threads(3), 3u);
  ::setenv("WILF_THREADS", "5", 1);
  EXPECT_EQ(resolve_threads(0), 5u);
  EXPECT_EQ(resolve_threads(2), 2u);
  ::setenv("WILF_THREADS", "junk", 1);
  EXPECT_GE(resolve_threads(0), 1u);
  ::unsetenv("WILF_THREADS");
}

TEST(Conductor, SmallValues) {
  auto f = count_by_conductor(12);
  ASSERT_EQ(f.size(), 13u);
  EXPECT_EQ(f[0], 1u);
  EXPECT_EQ(f[1], 0u);
  EXPECT_EQ(f[2], 1u);
  EXPECT_EQ(f[3], 1u);
  // Direct count by conductor from the gap-set oracle: every semigroup with
  // c <= 12 has genus <= 11.
  std::vector<std::uint64_t> direct(13, 0);
  for (Value g = 0; g <= 11; ++g) {
    for (const auto& gaps : brute::all_of_genus(g)) {
      const Value c = gaps.empty() ? 0 : *gaps.rbegin() + 1;
      if (c <= 12) ++direct[static_cast<std::size_t>(c)];
    }
  }
  EXPECT_EQ(f, direct);
}

TEST(FindNegative, Examples) {
  EXPECT_TRUE(find_negative(NegativeMetric::Wilf, 25).empty());
  EXPECT_TRUE(find_negative(NegativeMetric::Eliahou, 25).empty());
}

// Genus 40 and 43 take minutes; opt in with NUMSG_STRETCH=1.
TEST(FindNegative, FirstNegativeEliahouAtGenus43) {
  if (!std::getenv("NUMSG_STRETCH")) GTEST_SKIP() << "set NUMSG_STRETCH=1";
  EXPECT_TRUE(find_negative(NegativeMetric::Eliahou, 40).empty());
  auto neg = find_negative(NegativeMetric::Eliahou, 43);
  bool found = false;
  for (const auto& w : neg) {
    if (w.spec == "14,22,23,57,61,62,63") {
      found = true;
      EXPECT_EQ(w.record.E, -1);
    }
  }
  EXPECT_TRUE(found);
}
