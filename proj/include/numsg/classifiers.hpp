#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "numsg/semigroup.hpp"

namespace numsg {

struct ClassificationRecord {
  bool symmetric = false;
  bool pseudo_symmetric = false;
  bool irreducible = false;
  bool almost_symmetric = false;
  bool max_embedding_dimension = false;
};

/// N is classified as symmetric, irreducible, almost symmetric and MED.
ClassificationRecord classify(const NumericalSemigroup& s);

enum class PropertyId {
  S_all,
  W_wilf,
  E_eliahou,
  D3_embdim3,
  D_3e_ge_m,
  M_c_le_3m,
  G60_genus,
  P4_moscariello,
  SPIRITO,
  KW_kunz_waldi,
};

inline constexpr std::array<PropertyId, 10> kAllProperties = {
    PropertyId::S_all,          PropertyId::W_wilf,
    PropertyId::E_eliahou,      PropertyId::D3_embdim3,
    PropertyId::D_3e_ge_m,      PropertyId::M_c_le_3m,
    PropertyId::G60_genus,      PropertyId::P4_moscariello,
    PropertyId::SPIRITO,        PropertyId::KW_kunz_waldi,
};

/// Short names: S, W, E, D3, D, M, G60, P4, SPIRITO, KW.
std::string_view property_name(PropertyId p);
/// Accepts the short names or the enumerator names (e.g. "M_c_le_3m").
std::optional<PropertyId> parse_property(std::string_view name);

/// Multiplicity lower bound in the Moscariello-Sammartano condition for a
/// given rho = ceil(m / e).
enum class MoscarielloThreshold {
  /// rho(3rho^2-rho-4)(3rho^2-rho-2)(rho-2)/8; 1680 at rho = 4.
  Session,
  /// rho(3rho^2-rho-4)(3rho^2-rho-2)/(8(rho-2)); 420 at rho = 4.
  Statement,
};

inline constexpr MoscarielloThreshold kDefaultMoscarielloThreshold =
    MoscarielloThreshold::Session;

/// Smallest integer multiplicity satisfying the bound for `rho` (rho > 2).
Value moscariello_min_multiplicity(
    Value rho, MoscarielloThreshold kind = kDefaultMoscarielloThreshold);

bool property(const NumericalSemigroup& s, PropertyId p);

/// Whether every sum of two primitives lies in (p + S) cup (q + S).
/// Throws TooFewGenerators if e < 3 and NotPrimitive if p or q is not a
/// primitive (or p == q).
bool kunz_waldi(const NumericalSemigroup& s, Value p, Value q);

/// First primitive pair (p < q) satisfying the Kunz-Waldi condition, or
/// nullopt. Returns nullopt when e < 3.
std::optional<std::pair<Value, Value>> kunz_waldi_exists(
    const NumericalSemigroup& s);

enum class WilfZeroVerdict { NotApplicable, Conforms, Counterexample };

std::string_view to_string(WilfZeroVerdict v);

/// Checks a W = 0 semigroup against the shape "e = 2, or e = m with
/// generators m, km+1, ..., km+m-1".
WilfZeroVerdict wilf_zero_form_check(const NumericalSemigroup& s);

/// The shape test alone, on sorted minimal generators. k = 1 is accepted,
/// which covers <m, m+1, ..., 2m-1>.
bool has_wilf_zero_shape(std::span<const Value> primitives, Value m);

enum class CompareVerdict {
  GeneralizesAtBound,
  IncomparableAtBound,
  QMinusPNonemptyAtBound,
};

/// Verdicts are empirical: they only describe semigroups up to the bound.
std::string_view to_string(CompareVerdict v);

struct CompareReport {
  PropertyId P = PropertyId::S_all;
  PropertyId Q = PropertyId::S_all;
  Value genus_bound = 0;
  /// |{S : g(S) <= bound, S |= Q, S |/= P}|
  std::uint64_t count_Q_minus_P = 0;
  std::uint64_t count_P_minus_Q = 0;
  /// Up to kMaxCompareWitnesses members of Q \ P, smallest genus first.
  std::vector<std::string> witnesses;
  CompareVerdict verdict = CompareVerdict::GeneralizesAtBound;
};

inline constexpr std::size_t kMaxCompareWitnesses = 10;
inline constexpr Value kMaxCompareGenus = 32;

/// Counts Q \ P (and P \ Q) among all semigroups of genus <= bound.
CompareReport quasi_compare(PropertyId p, PropertyId q, Value genus_bound,
                            unsigned threads = 0);

}  // namespace numsg
