#include "numsg/families.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <string>

namespace numsg {

namespace {

[[noreturn]] void bad(const std::string& what) {
  throw SemigroupError(ErrorCode::BadParameters, what);
}

std::string join(const std::vector<Value>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(v[i]);
  }
  return out;
}

Value floor_div(Value a, Value b) { return a >= 0 ? a / b : -((-a + b - 1) / b); }
Value ceil_div(Value a, Value b) { return -floor_div(-a, b); }

}  // namespace

NumericalSemigroup generalized_arithmetic(Value m, Value h, Value d, Value l) {
  if (m < 2) bad("generalized arithmetic: m must be >= 2");
  if (h < 1 || d < 1) bad("generalized arithmetic: h and d must be positive");
  if (std::gcd(m, d) != 1) bad("generalized arithmetic: gcd(m, d) must be 1");
  if (l < 1 || l > m - 2) bad("generalized arithmetic: need 1 <= l <= m - 2");
  GeneratorSpec spec;
  spec.generators.push_back(m);
  for (Value i = 1; i <= l; ++i) spec.generators.push_back(h * m + i * d);
  return construct(spec);
}

NumericalSemigroup med_family(Value m, Value k) {
  if (m < 2 || k < 1) bad("med family: need m >= 2 and k >= 1");
  return construct(GeneratorSpec{{m}, k * m});
}

NumericalSemigroup dilation(const NumericalSemigroup& s, Value a) {
  if (!s.contains(a)) {
    throw SemigroupError(ErrorCode::NotInSemigroup,
                         "dilation requires a in S; " + std::to_string(a) +
                             " is not an element");
  }
  if (a == 0) return s;
  const Value size = s.conductor() + s.multiplicity() + 2 * a;
  if (size > kMaxTableSize) {
    throw SemigroupError(ErrorCode::TooLarge, "dilation too large");
  }
  std::vector<bool> table(static_cast<std::size_t>(size));
  table[0] = true;
  for (Value n = 1; n < size; ++n) {
    Value shifted = n - a;
    table[static_cast<std::size_t>(n)] = shifted >= 1 && s.contains(shifted);
  }
  return NumericalSemigroup::from_membership(std::move(table));
}

NumericalSemigroup delgado_sp(Value p) {
  if (p < 2 || p % 2 != 0) bad("S(p) requires an even p >= 2");
  const Value mu = p * p / 4 + 2 * p + 2;
  const Value gamma = 2 * mu - (p / 2 + 4);
  return construct(GeneratorSpec{{mu, gamma, gamma + 1}, p * mu});
}

BhWitness is_bh_set(std::vector<Value> a, Value h, Value modulus) {
  if (a.empty()) bad("B_h check needs a nonempty set");
  if (h < 1 || modulus < 1) bad("B_h check needs h >= 1 and modulus >= 1");
  std::sort(a.begin(), a.end());
  a.erase(std::unique(a.begin(), a.end()), a.end());

  BhWitness out;
  out.set = a;
  out.h = h;
  out.modulus = modulus;

  // Walk all h-multisets as non-decreasing index tuples.
  std::map<Value, std::vector<Value>> seen;
  std::vector<std::size_t> idx(static_cast<std::size_t>(h), 0);
  while (true) {
    std::vector<Value> tuple;
    Value sum = 0;
    for (auto i : idx) {
      tuple.push_back(a[i]);
      sum += ((a[i] % modulus) + modulus) % modulus;
    }
    sum %= modulus;
    auto [it, inserted] = seen.emplace(sum, tuple);
    if (!inserted) {
      out.verdict = false;
      out.collision = std::make_pair(it->second, std::move(tuple));
      return out;
    }
    // Next non-decreasing tuple.
    std::size_t pos = idx.size();
    while (pos > 0 && idx[pos - 1] == a.size() - 1) --pos;
    if (pos == 0) break;
    ++idx[pos - 1];
    for (std::size_t j = pos; j < idx.size(); ++j) idx[j] = idx[pos - 1];
  }
  return out;
}

NumericalSemigroup eliahou_fromentin(Value m, std::vector<Value> a) {
  if (m < 1) bad("m must be positive");
  std::sort(a.begin(), a.end());
  a.erase(std::unique(a.begin(), a.end()), a.end());
  if (a.size() < 2) {
    throw SemigroupError(ErrorCode::TooSmall,
                         "need |A| = n - 1 with n >= 3, got |A| = " +
                             std::to_string(a.size()));
  }
  const Value lo = a.front();
  const Value hi = a.back();
  // (3m+1)/2 <= lo < hi <= (5m-1)/3, in exact integer form.
  if (2 * lo < 3 * m + 1 || 3 * hi > 5 * m - 1) {
    throw SemigroupError(
        ErrorCode::RangeViolation,
        "A = {" + join(a) + "} must lie in [(3m+1)/2, (5m-1)/3] = [" +
            std::to_string(ceil_div(3 * m + 1, 2)) + ", " +
            std::to_string(floor_div(5 * m - 1, 3)) + "] for m = " +
            std::to_string(m));
  }
  auto witness = is_bh_set(a, 3, m);
  if (!witness.verdict) {
    const auto& [x, y] = *witness.collision;
    throw SemigroupError(ErrorCode::NotB3,
                         "A is not a B_3 set mod " + std::to_string(m) +
                             ": (" + join(x) + ") and (" + join(y) +
                             ") have equal sums");
  }
  GeneratorSpec spec;
  spec.generators.push_back(m);
  spec.generators.insert(spec.generators.end(), a.begin(), a.end());
  spec.adjoin_from = 4 * m;
  return construct(spec);
}

std::optional<std::vector<Value>> find_b3_subset(Value m, Value n) {
  if (m < 1 || n < 3) bad("find_b3_subset needs m >= 1 and n >= 3");
  const Value lo = ceil_div(3 * m + 1, 2);
  const Value hi = floor_div(5 * m - 1, 3);
  const auto want = static_cast<std::size_t>(n - 1);
  if (hi < lo || static_cast<std::size_t>(hi - lo + 1) < want) {
    return std::nullopt;
  }

  std::vector<char> used(static_cast<std::size_t>(m), 0);
  std::vector<Value> chosen;
  std::vector<Value> residues;

  // Residues of 3-multisets that include x at least once, given the
  // current residues.
  auto new_sums = [&](Value x) {
    std::vector<Value> sums;
    const Value r = x % m;
    sums.push_back((3 * r) % m);
    for (std::size_t i = 0; i < residues.size(); ++i) {
      sums.push_back((2 * r + residues[i]) % m);
      for (std::size_t j = i; j < residues.size(); ++j) {
        sums.push_back((r + residues[i] + residues[j]) % m);
      }
    }
    return sums;
  };

  std::function<bool(Value)> search = [&](Value start) -> bool {
    if (chosen.size() == want) return true;
    for (Value x = start; x <= hi; ++x) {
      if (static_cast<std::size_t>(hi - x + 1) < want - chosen.size()) break;
      auto sums = new_sums(x);
      std::vector<Value> sorted = sums;
      std::sort(sorted.begin(), sorted.end());
      bool ok = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
      for (Value s : sums) ok = ok && !used[static_cast<std::size_t>(s)];
      if (!ok) continue;
      for (Value s : sums) used[static_cast<std::size_t>(s)] = 1;
      chosen.push_back(x);
      residues.push_back(x % m);
      if (search(x + 1)) return true;
      chosen.pop_back();
      residues.pop_back();
      for (Value s : sums) used[static_cast<std::size_t>(s)] = 0;
    }
    return false;
  };

  if (search(lo)) return chosen;
  return std::nullopt;
}

NumericalSemigroup y_family(Value m) {
  if (m < 7) bad("y family requires m >= 7");
  GeneratorSpec spec;
  for (Value i = 0; i < 4; ++i) spec.generators.push_back(m + i);
  for (Value k = 0; k <= m / 7; ++k) spec.generators.push_back(7 * k + m);
  return construct(spec);
}

std::vector<Value> sparse_sevens(Value limit) {
  std::vector<Value> x;
  for (Value v : {0, 1, 2, 3}) {
    if (v <= limit) x.push_back(v);
  }
  for (Value v = 7; v <= limit; v += 7) x.push_back(v);
  return x;
}

std::optional<Value> first_missing_triple_sum(const std::vector<Value>& x,
                                              Value limit) {
  if (limit < 0) return std::nullopt;
  const auto size = static_cast<std::size_t>(limit + 1);
  std::vector<char> two(size, 0);
  for (Value a : x) {
    for (Value b : x) {
      if (a >= 0 && b >= 0 && a + b <= limit) two[static_cast<std::size_t>(a + b)] = 1;
    }
  }
  std::vector<char> three(size, 0);
  for (Value s = 0; s <= limit; ++s) {
    if (!two[static_cast<std::size_t>(s)]) continue;
    for (Value c : x) {
      if (c >= 0 && s + c <= limit) three[static_cast<std::size_t>(s + c)] = 1;
    }
  }
  for (Value n = 0; n <= limit; ++n) {
    if (!three[static_cast<std::size_t>(n)]) return n;
  }
  return std::nullopt;
}

}  // namespace numsg
