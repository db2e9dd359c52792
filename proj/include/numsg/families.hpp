#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "numsg/semigroup.hpp"

namespace numsg {

/// <m, hm + d, hm + 2d, ..., hm + l*d>. Requires m >= 2, gcd(m, d) = 1 and
/// 1 <= l <= m - 2.
NumericalSemigroup generalized_arithmetic(Value m, Value h, Value d, Value l);

/// <m>_{km} = <m, km + 1, ..., km + m - 1>, the maximal embedding dimension
/// family with Wilf number 0.
NumericalSemigroup med_family(Value m, Value k);

/// D(S, a) = {0} cup {s + a : s in S \ {0}}. Requires a in S.
NumericalSemigroup dilation(const NumericalSemigroup& s, Value a);

/// S(p) = <mu, gamma, gamma + 1>_{p * mu} with mu = p^2/4 + 2p + 2 and
/// gamma = 2 mu - (p/2 + 4). Requires p even, p >= 2.
NumericalSemigroup delgado_sp(Value p);

struct BhWitness {
  std::vector<Value> set;
  Value h = 0;
  Value modulus = 1;
  bool verdict = true;
  /// Two h-multisets (sorted) that are not permutations of each other but
  /// have equal sum modulo `modulus`. Present iff verdict is false.
  std::optional<std::pair<std::vector<Value>, std::vector<Value>>> collision;
};

/// Whether A induces a B_h set in Z/modulus.
BhWitness is_bh_set(std::vector<Value> a, Value h, Value modulus);

/// <{m} cup A>_{4m} for A inducing a B_3 set in Z/m with
/// (3m+1)/2 <= min A < max A <= (5m-1)/3 and |A| >= 2.
NumericalSemigroup eliahou_fromentin(Value m, std::vector<Value> a);

/// Lexicographically least (n-1)-subset of [ceil((3m+1)/2), floor((5m-1)/3)]
/// inducing a B_3 set in Z/m, or nullopt.
std::optional<std::vector<Value>> find_b3_subset(Value m, Value n);

/// <Y> for Y = {m, m+1, m+2, m+3} cup {7k + m : 0 <= k <= floor(m/7)}.
NumericalSemigroup y_family(Value m);

/// The set {0, 1, 2, 3} cup {7k} truncated to [0, limit].
std::vector<Value> sparse_sevens(Value limit);

/// First n in [0, limit] that is not a sum of three members of `x`
/// (repetition allowed), or nullopt if all are covered.
std::optional<Value> first_missing_triple_sum(const std::vector<Value>& x,
                                              Value limit);

}  // namespace numsg
