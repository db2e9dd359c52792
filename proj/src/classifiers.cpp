#include "numsg/classifiers.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

#include "genus_walk.hpp"
#include "numsg/explorer.hpp"
#include "numsg/wilf_metrics.hpp"

namespace numsg {

ClassificationRecord classify(const NumericalSemigroup& s) {
  ClassificationRecord r;
  if (s.is_full()) {
    r.symmetric = true;
    r.irreducible = true;
    r.almost_symmetric = true;
    r.max_embedding_dimension = true;
    return r;
  }
  const Value g = s.genus();
  const Value c = s.conductor();
  r.symmetric = 2 * g == c;
  r.pseudo_symmetric = 2 * g == c + 1;
  r.irreducible = r.symmetric || r.pseudo_symmetric;
  r.almost_symmetric = 2 * g == s.frobenius() + s.type();
  r.max_embedding_dimension = s.embedding_dimension() == s.multiplicity();
  return r;
}

std::string_view property_name(PropertyId p) {
  switch (p) {
    case PropertyId::S_all: return "S";
    case PropertyId::W_wilf: return "W";
    case PropertyId::E_eliahou: return "E";
    case PropertyId::D3_embdim3: return "D3";
    case PropertyId::D_3e_ge_m: return "D";
    case PropertyId::M_c_le_3m: return "M";
    case PropertyId::G60_genus: return "G60";
    case PropertyId::P4_moscariello: return "P4";
    case PropertyId::SPIRITO: return "SPIRITO";
    case PropertyId::KW_kunz_waldi: return "KW";
  }
  return "?";
}

std::optional<PropertyId> parse_property(std::string_view name) {
  static constexpr std::pair<std::string_view, PropertyId> kLong[] = {
      {"S_all", PropertyId::S_all},
      {"W_wilf", PropertyId::W_wilf},
      {"E_eliahou", PropertyId::E_eliahou},
      {"D3_embdim3", PropertyId::D3_embdim3},
      {"D_3e_ge_m", PropertyId::D_3e_ge_m},
      {"M_c_le_3m", PropertyId::M_c_le_3m},
      {"G60_genus", PropertyId::G60_genus},
      {"P4_moscariello", PropertyId::P4_moscariello},
      {"SPIRITO", PropertyId::SPIRITO},
      {"KW_kunz_waldi", PropertyId::KW_kunz_waldi},
  };
  for (PropertyId p : kAllProperties) {
    if (property_name(p) == name) return p;
  }
  for (const auto& [text, p] : kLong) {
    if (text == name) return p;
  }
  return std::nullopt;
}

namespace {

using Wide = __int128;

// Numerator and denominator of the multiplicity bound for rho.
std::pair<Wide, Wide> moscariello_bound(Value rho, MoscarielloThreshold kind) {
  const Wide r = rho;
  const Wide core = r * (3 * r * r - r - 4) * (3 * r * r - r - 2);
  if (kind == MoscarielloThreshold::Session) return {core * (r - 2), 8};
  return {core, 8 * (r - 2)};
}

Value radical(Value n) {
  Value out = 1;
  for (Value p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    out *= p;
    while (n % p == 0) n /= p;
  }
  if (n > 1) out *= n;
  return out;
}

}  // namespace

Value moscariello_min_multiplicity(Value rho, MoscarielloThreshold kind) {
  if (rho <= 2 || rho > (Value{1} << 16)) {
    throw SemigroupError(ErrorCode::BadParameters,
                         "rho must be in (2, 65536]");
  }
  auto [num, den] = moscariello_bound(rho, kind);
  return static_cast<Value>((num + den - 1) / den);
}

bool property(const NumericalSemigroup& s, PropertyId p) {
  const Value m = s.multiplicity();
  const Value e = s.embedding_dimension();
  const Value c = s.conductor();
  switch (p) {
    case PropertyId::S_all:
      return true;
    case PropertyId::W_wilf:
      return wilf_number(s) >= 0;
    case PropertyId::E_eliahou:
      return eliahou_number(s) >= 0;
    case PropertyId::D3_embdim3:
      return e <= 3;
    case PropertyId::D_3e_ge_m:
      return 3 * e >= m;
    case PropertyId::M_c_le_3m:
      return c <= 3 * m;
    case PropertyId::G60_genus:
      return s.genus() <= 60;
    case PropertyId::P4_moscariello: {
      const Value rho = (m + e - 1) / e;
      if (rho <= 3) return false;
      // The bound grows like rho^5 and rho <= m, so large rho never passes.
      if (rho > (Value{1} << 16)) return false;
      auto [num, den] = moscariello_bound(rho, kDefaultMoscarielloThreshold);
      if (Wide{m} * den < num) return false;
      return std::gcd(m, radical(rho)) == 1;
    }
    case PropertyId::SPIRITO: {
      if (e < 2) return false;
      const Value ratio = s.primitives()[1];
      // r > (c+m)/3 and m <= 8/25 e^2 + 1/5 e - 5/4, scaled to integers.
      return 3 * ratio > c + m && 100 * m <= 32 * e * e + 20 * e - 125;
    }
    case PropertyId::KW_kunz_waldi:
      return kunz_waldi_exists(s).has_value();
  }
  return false;
}

namespace {

bool kunz_waldi_unchecked(const NumericalSemigroup& s, Value p, Value q) {
  const auto& prims = s.primitives();
  for (std::size_t i = 0; i < prims.size(); ++i) {
    for (std::size_t j = i; j < prims.size(); ++j) {
      const Value sum = prims[i] + prims[j];
      if (!s.contains(sum - p) && !s.contains(sum - q)) return false;
    }
  }
  assert(s.type() <= s.embedding_dimension() - 1);
  return true;
}

}  // namespace

bool kunz_waldi(const NumericalSemigroup& s, Value p, Value q) {
  if (s.embedding_dimension() < 3) {
    throw SemigroupError(ErrorCode::TooFewGenerators,
                         "Kunz-Waldi condition needs embedding dimension >= 3");
  }
  const auto& prims = s.primitives();
  auto is_prim = [&](Value x) {
    return std::binary_search(prims.begin(), prims.end(), x);
  };
  if (p == q || !is_prim(p) || !is_prim(q)) {
    throw SemigroupError(ErrorCode::NotPrimitive,
                         "p and q must be two distinct primitives");
  }
  return kunz_waldi_unchecked(s, p, q);
}

std::optional<std::pair<Value, Value>> kunz_waldi_exists(
    const NumericalSemigroup& s) {
  if (s.embedding_dimension() < 3) return std::nullopt;
  const auto& prims = s.primitives();
  for (std::size_t i = 0; i < prims.size(); ++i) {
    for (std::size_t j = i + 1; j < prims.size(); ++j) {
      if (kunz_waldi_unchecked(s, prims[i], prims[j])) {
        return std::make_pair(prims[i], prims[j]);
      }
    }
  }
  return std::nullopt;
}

std::string_view to_string(WilfZeroVerdict v) {
  switch (v) {
    case WilfZeroVerdict::NotApplicable: return "not_applicable";
    case WilfZeroVerdict::Conforms: return "conforms";
    case WilfZeroVerdict::Counterexample: return "counterexample";
  }
  return "?";
}

bool has_wilf_zero_shape(std::span<const Value> primitives, Value m) {
  const auto e = static_cast<Value>(primitives.size());
  if (e == 2) return true;
  if (e != m) return false;
  if (m == 1) return true;
  const Value k = (primitives[1] - 1) / m;
  if (k < 1) return false;
  for (Value i = 1; i < m; ++i) {
    if (primitives[static_cast<std::size_t>(i)] != k * m + i) return false;
  }
  return true;
}

WilfZeroVerdict wilf_zero_form_check(const NumericalSemigroup& s) {
  if (wilf_number(s) != 0) return WilfZeroVerdict::NotApplicable;
  return has_wilf_zero_shape(s.primitives(), s.multiplicity())
             ? WilfZeroVerdict::Conforms
             : WilfZeroVerdict::Counterexample;
}

std::string_view to_string(CompareVerdict v) {
  switch (v) {
    case CompareVerdict::GeneralizesAtBound: return "P-generalizes-Q-at-bound";
    case CompareVerdict::IncomparableAtBound: return "incomparable-at-bound";
    case CompareVerdict::QMinusPNonemptyAtBound: return "Q-minus-P-nonempty";
  }
  return "?";
}

namespace {

class CompareVisitor {
 public:
  CompareVisitor(PropertyId p, PropertyId q) : p_(p), q_(q) {}

  void visit(const detail::NodeView& v) {
    const auto s = detail::node_semigroup(v);
    const bool in_p = property(s, p_);
    const bool in_q = property(s, q_);
    if (in_q && !in_p) {
      ++q_minus_p_;
      witnesses_.push_back(Witness{v.genus, s.primitives()});
      if (witnesses_.size() > 4 * kMaxCompareWitnesses) trim();
    }
    if (in_p && !in_q) ++p_minus_q_;
  }

  void merge(CompareVisitor&& other) {
    q_minus_p_ += other.q_minus_p_;
    p_minus_q_ += other.p_minus_q_;
    witnesses_.insert(witnesses_.end(), other.witnesses_.begin(),
                      other.witnesses_.end());
    trim();
  }

  void trim() {
    std::sort(witnesses_.begin(), witnesses_.end());
    if (witnesses_.size() > kMaxCompareWitnesses) {
      witnesses_.resize(kMaxCompareWitnesses);
    }
  }

  PropertyId p_, q_;
  std::uint64_t q_minus_p_ = 0;
  std::uint64_t p_minus_q_ = 0;
  std::vector<Witness> witnesses_;
};

}  // namespace

CompareReport quasi_compare(PropertyId p, PropertyId q, Value genus_bound,
                            unsigned threads) {
  if (genus_bound < 0 || genus_bound > kMaxCompareGenus) {
    throw SemigroupError(ErrorCode::BoundTooLarge,
                         "compare bound must be in [0, " +
                             std::to_string(kMaxCompareGenus) + "]");
  }
  detail::WalkOptions walk;
  walk.threads = resolve_threads(threads);
  auto visitor = detail::walk_genus_tree<CompareVisitor>(
      genus_bound, walk, [&] { return CompareVisitor(p, q); });
  visitor.trim();

  CompareReport report;
  report.P = p;
  report.Q = q;
  report.genus_bound = genus_bound;
  report.count_Q_minus_P = visitor.q_minus_p_;
  report.count_P_minus_Q = visitor.p_minus_q_;
  for (const auto& w : visitor.witnesses_) report.witnesses.push_back(w.spec());
  if (report.count_Q_minus_P == 0) {
    report.verdict = CompareVerdict::GeneralizesAtBound;
  } else if (report.count_P_minus_Q > 0) {
    report.verdict = CompareVerdict::IncomparableAtBound;
  } else {
    report.verdict = CompareVerdict::QMinusPNonemptyAtBound;
  }
  return report;
}

}  // namespace numsg
