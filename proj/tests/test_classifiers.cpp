#include <gtest/gtest.h>

#include <numeric>

#include "numsg/classifiers.hpp"
#include "numsg/explorer.hpp"
#include "numsg/families.hpp"
#include "numsg/semigroup.hpp"
#include "numsg/wilf_metrics.hpp"

using namespace numsg;

namespace {

NumericalSemigroup S(const char* spec) { return construct(spec); }

template <class F>
ErrorCode code_of(F&& f) {
  try {
    f();
  } catch (const SemigroupError& e) {
    return e.code();
  }
  ADD_FAILURE() << "no exception";
  return ErrorCode::MalformedSpec;
}

}  // namespace

TEST(Classify, Examples) {
  auto a = classify(S("3,5"));
  EXPECT_TRUE(a.symmetric);
  EXPECT_FALSE(a.pseudo_symmetric);
  EXPECT_TRUE(a.irreducible);
  EXPECT_TRUE(a.almost_symmetric);
  EXPECT_FALSE(a.max_embedding_dimension);

  auto b = classify(S("3,4,5"));
  EXPECT_FALSE(b.symmetric);
  EXPECT_TRUE(b.pseudo_symmetric);
  EXPECT_TRUE(b.irreducible);
  EXPECT_TRUE(b.almost_symmetric);
  EXPECT_TRUE(b.max_embedding_dimension);

  EXPECT_TRUE(classify(S("2,3")).symmetric);

  auto n = classify(S("1"));
  EXPECT_TRUE(n.symmetric);
  EXPECT_TRUE(n.irreducible);
  EXPECT_TRUE(n.almost_symmetric);
  EXPECT_TRUE(n.max_embedding_dimension);
}

TEST(Classify, InvariantsGenus16) {
  for_each_semigroup(16, [](const NumericalSemigroup& s) {
    auto r = classify(s);
    ASSERT_EQ(r.irreducible, r.symmetric || r.pseudo_symmetric);
    if (r.symmetric || r.pseudo_symmetric) ASSERT_TRUE(r.almost_symmetric);
    ASSERT_FALSE(r.symmetric && r.pseudo_symmetric);
    // Symmetric iff the type is 1.
    if (!s.is_full()) ASSERT_EQ(r.symmetric, s.type() == 1) << to_spec_string(s);
  });
}

TEST(Property, Names) {
  for (PropertyId p : kAllProperties) {
    auto back = parse_property(property_name(p));
    ASSERT_TRUE(back.has_value());
    EXPECT_EQ(*back, p);
  }
  EXPECT_EQ(parse_property("M_c_le_3m"), PropertyId::M_c_le_3m);
  EXPECT_FALSE(parse_property("m").has_value());
  EXPECT_FALSE(parse_property("").has_value());
}

TEST(Property, Examples) {
  auto s4 = S("14,22,23@56");
  EXPECT_FALSE(property(s4, PropertyId::M_c_le_3m));
  EXPECT_TRUE(property(s4, PropertyId::D_3e_ge_m));
  EXPECT_TRUE(property(s4, PropertyId::G60_genus));
  EXPECT_FALSE(property(s4, PropertyId::E_eliahou));
  EXPECT_TRUE(property(s4, PropertyId::W_wilf));
  EXPECT_FALSE(property(s4, PropertyId::D3_embdim3));

  auto n = S("1");
  for (PropertyId p : {PropertyId::D3_embdim3, PropertyId::D_3e_ge_m,
                       PropertyId::M_c_le_3m, PropertyId::E_eliahou,
                       PropertyId::W_wilf, PropertyId::G60_genus,
                       PropertyId::S_all}) {
    EXPECT_TRUE(property(n, p)) << property_name(p);
  }
  EXPECT_FALSE(property(n, PropertyId::SPIRITO));
  EXPECT_FALSE(property(n, PropertyId::KW_kunz_waldi));
}

TEST(Moscariello, Thresholds) {
  EXPECT_EQ(moscariello_min_multiplicity(4), 1680);
  EXPECT_EQ(moscariello_min_multiplicity(4, MoscarielloThreshold::Statement), 420);
  EXPECT_EQ(code_of([] { moscariello_min_multiplicity(2); }),
            ErrorCode::BadParameters);
  // Monotone in rho.
  for (Value r = 4; r < 40; ++r) {
    EXPECT_LT(moscariello_min_multiplicity(r), moscariello_min_multiplicity(r + 1));
  }
}

TEST(Moscariello, PredicateAtThreshold) {
  // m = 1681 with e = 421 gives rho' = ceil(1681/421) = 4 and gcd(1681, 2) = 1.
  // <m, m+1, ..., m+420> has exactly those invariants.
  auto s = construct(GeneratorSpec{[] {
                                     std::vector<Value> g;
                                     for (Value i = 0; i <= 420; ++i) g.push_back(1681 + i);
                                     return g;
                                   }(),
                                   std::nullopt});
  ASSERT_EQ(s.embedding_dimension(), 421);
  EXPECT_TRUE(property(s, PropertyId::P4_moscariello));
  // Even multiplicity shares the prime 2 with rho' = 4.
  auto t = construct(GeneratorSpec{[] {
                                     std::vector<Value> g;
                                     for (Value i = 0; i <= 420; ++i) g.push_back(1682 + i);
                                     return g;
                                   }(),
                                   std::nullopt});
  EXPECT_FALSE(property(t, PropertyId::P4_moscariello));
  // Small multiplicity never qualifies.
  EXPECT_FALSE(property(S("5,13@20"), PropertyId::P4_moscariello));
}

TEST(Spirito, Predicate) {
  // ratio r > (c + m) / 3 and 100m <= 32e^2 + 20e - 125, checked by hand.
  // <3,4,5>: r = 4, c = 3, m = 3 -> 12 > 6; 300 <= 288 + 60 - 125 = 223 fails.
  EXPECT_FALSE(property(S("3,4,5"), PropertyId::SPIRITO));
  // MED <m, m+1, ..., 2m-1> with m = 4: e = 4, 400 <= 512 + 80 - 125 = 467.
  // r = 5, c = 4: 15 > 8 holds.
  EXPECT_TRUE(property(S("4,5,6,7"), PropertyId::SPIRITO));
  // <6,8,10,13,15>: e = 5 passes the size test (600 <= 775) but
  // 3r = 24 = c + m, so the strict ratio test fails.
  auto s = S("6,8,10,13,15");
  ASSERT_EQ(s.conductor(), 18);
  EXPECT_FALSE(property(s, PropertyId::SPIRITO));
}

TEST(KunzWaldi, Examples) {
  auto s = S("3,4,5");
  EXPECT_TRUE(kunz_waldi(s, 3, 4));
  EXPECT_LE(s.type(), s.embedding_dimension() - 1);
  EXPECT_FALSE(kunz_waldi(s, 4, 5));
  EXPECT_EQ(code_of([] { kunz_waldi(S("2,3"), 2, 3); }),
            ErrorCode::TooFewGenerators);
  EXPECT_EQ(code_of([&] { kunz_waldi(s, 3, 6); }), ErrorCode::NotPrimitive);
  EXPECT_EQ(code_of([&] { kunz_waldi(s, 3, 3); }), ErrorCode::NotPrimitive);
  auto pair = kunz_waldi_exists(s);
  ASSERT_TRUE(pair.has_value());
  EXPECT_EQ(*pair, std::make_pair(Value{3}, Value{4}));
  EXPECT_FALSE(kunz_waldi_exists(S("2,3")).has_value());
}

TEST(KunzWaldi, TypeBoundWheneverConditionHolds) {
  std::uint64_t hits = 0;
  for_each_semigroup(16, [&](const NumericalSemigroup& s) {
    if (s.embedding_dimension() < 3) return;
    const auto& p = s.primitives();
    for (std::size_t i = 0; i < p.size(); ++i) {
      for (std::size_t j = i + 1; j < p.size(); ++j) {
        if (kunz_waldi(s, p[i], p[j])) {
          ++hits;
          ASSERT_LE(s.type(), s.embedding_dimension() - 1) << to_spec_string(s);
        }
      }
    }
  });
  EXPECT_GT(hits, 0u);
}

TEST(WilfZero, Examples) {
  EXPECT_EQ(wilf_zero_form_check(S("3,5")), WilfZeroVerdict::Conforms);
  EXPECT_EQ(wilf_zero_form_check(S("3,7,8")), WilfZeroVerdict::Conforms);
  EXPECT_EQ(wilf_zero_form_check(S("5,13@20")), WilfZeroVerdict::NotApplicable);
  EXPECT_EQ(wilf_zero_form_check(S("3,4,5")), WilfZeroVerdict::Conforms);
  EXPECT_EQ(wilf_zero_form_check(S("1")), WilfZeroVerdict::Conforms);
  EXPECT_EQ(to_string(WilfZeroVerdict::Counterexample), "counterexample");

  std::vector<Value> odd{4, 9, 10, 12};  // W = 0 shape needs 9,10,11
  EXPECT_FALSE(has_wilf_zero_shape(odd, 4));
  std::vector<Value> med{4, 9, 10, 11};
  EXPECT_TRUE(has_wilf_zero_shape(med, 4));
}

TEST(WilfZero, NoCounterexampleGenus25) {
  ExploreOptions opts;
  opts.checks = kCheckWilfZero;
  opts.expensive_check_ceiling = 25;
  auto stats = enumerate(25, opts);
  EXPECT_TRUE(stats.wilf_zero_counterexamples.empty());
}

// Sufficient conditions for W >= 0, each checked exhaustively to genus 20.
TEST(Properties, WilfSufficientConditionsGenus20) {
  std::array<std::uint64_t, 8> hits{};
  for_each_semigroup(20, [&](const NumericalSemigroup& s) {
    const Value W = wilf_number(s);
    const Value m = s.multiplicity();
    const Value e = s.embedding_dimension();
    const Value c = s.conductor();
    const Value L = s.left_count();
    const Value q = s.depth();
    const auto cls = classify(s);
    Value gcd_lp = 0;
    for (Value p : s.primitives()) {
      if (p < c) gcd_lp = std::gcd(gcd_lp, p);
    }
    const bool conds[8] = {
        e <= 3,
        cls.irreducible,
        cls.almost_symmetric,
        c <= 4 * L,
        3 * e >= m,
        q > 0 && (2 * q + 1) * e >= m * q,
        gcd_lp >= 2,
        m <= 16,
    };
    for (std::size_t i = 0; i < 8; ++i) {
      if (!conds[i]) continue;
      ++hits[i];
      ASSERT_GE(W, 0) << "condition " << i << ": " << to_spec_string(s);
    }
  });
  for (std::size_t i = 0; i < 8; ++i) EXPECT_GT(hits[i], 0u) << i;
}

TEST(Properties, LatticeInclusionsGenus20) {
  for_each_semigroup(20, [](const NumericalSemigroup& s) {
    const bool M = property(s, PropertyId::M_c_le_3m);
    const bool E = property(s, PropertyId::E_eliahou);
    const bool W = property(s, PropertyId::W_wilf);
    if (M) ASSERT_TRUE(E);
    if (E) ASSERT_TRUE(W);
    if (property(s, PropertyId::D3_embdim3)) ASSERT_TRUE(W);
    if (property(s, PropertyId::D_3e_ge_m)) ASSERT_TRUE(W);
  });
}

TEST(QuasiCompare, MandDIncomparable) {
  auto dm = quasi_compare(PropertyId::M_c_le_3m, PropertyId::D_3e_ge_m, 25, 1);
  EXPECT_GT(dm.count_Q_minus_P, 0u);
  EXPECT_EQ(dm.verdict, CompareVerdict::IncomparableAtBound);
  EXPECT_EQ(dm.witnesses.size(), kMaxCompareWitnesses);
  EXPECT_EQ(dm.witnesses.front(), "2,9");  // <2>_8, k = 4

  auto md = quasi_compare(PropertyId::D_3e_ge_m, PropertyId::M_c_le_3m, 25, 1);
  EXPECT_GT(md.count_Q_minus_P, 0u);
  EXPECT_EQ(md.count_P_minus_Q, dm.count_Q_minus_P);
  EXPECT_EQ(md.verdict, CompareVerdict::IncomparableAtBound);
  for (const auto& w : md.witnesses) {
    auto s = construct(w);
    EXPECT_LE(s.conductor(), 3 * s.multiplicity()) << w;
    EXPECT_LT(3 * s.embedding_dimension(), s.multiplicity()) << w;
  }
}

TEST(QuasiCompare, Generalizations) {
  auto em = quasi_compare(PropertyId::E_eliahou, PropertyId::M_c_le_3m, 20, 1);
  EXPECT_EQ(em.count_Q_minus_P, 0u);
  EXPECT_TRUE(em.witnesses.empty());
  EXPECT_EQ(em.verdict, CompareVerdict::GeneralizesAtBound);
  EXPECT_EQ(to_string(em.verdict), "P-generalizes-Q-at-bound");

  auto wg = quasi_compare(PropertyId::W_wilf, PropertyId::G60_genus, 25, 2);
  EXPECT_EQ(wg.count_Q_minus_P, 0u);

  // S \ W is empty, and everything in S \ D3 is counted.
  auto d3 = quasi_compare(PropertyId::D3_embdim3, PropertyId::S_all, 10, 1);
  EXPECT_GT(d3.count_Q_minus_P, 0u);
  EXPECT_EQ(d3.count_P_minus_Q, 0u);
  EXPECT_EQ(d3.verdict, CompareVerdict::QMinusPNonemptyAtBound);
  EXPECT_EQ(to_string(d3.verdict), "Q-minus-P-nonempty");
}

TEST(QuasiCompare, ThreadCountDoesNotMatter) {
  auto a = quasi_compare(PropertyId::M_c_le_3m, PropertyId::D_3e_ge_m, 22, 1);
  auto b = quasi_compare(PropertyId::M_c_le_3m, PropertyId::D_3e_ge_m, 22, 4);
  EXPECT_EQ(a.count_Q_minus_P, b.count_Q_minus_P);
  EXPECT_EQ(a.count_P_minus_Q, b.count_P_minus_Q);
  EXPECT_EQ(a.witnesses, b.witnesses);
}

TEST(QuasiCompare, BoundGuard) {
  EXPECT_EQ(code_of([] {
              quasi_compare(PropertyId::W_wilf, PropertyId::S_all,
                            kMaxCompareGenus + 1);
            }),
            ErrorCode::BoundTooLarge);
  EXPECT_EQ(code_of([] {
              quasi_compare(PropertyId::W_wilf, PropertyId::S_all, -1);
            }),
            ErrorCode::BoundTooLarge);
}
