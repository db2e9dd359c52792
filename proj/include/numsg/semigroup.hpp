#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace numsg {

using Value = std::int64_t;

enum class ErrorCode {
  EmptySpec,
  NotNumerical,
  MalformedSpec,
  TooLarge,
  NoGaps,
  BadParameters,
  NotInSemigroup,
  RangeViolation,
  NotB3,
  TooSmall,
  NotPrimitive,
  TooFewGenerators,
  BoundTooLarge,
  ResourceLimit,
};

std::string_view to_string(ErrorCode code);

class SemigroupError : public std::runtime_error {
 public:
  SemigroupError(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// A finite generator set, optionally with every integer >= adjoin_from
/// thrown in. This is the `<X>_t` form.
struct GeneratorSpec {
  std::vector<Value> generators;
  std::optional<Value> adjoin_from;

  friend bool operator==(const GeneratorSpec&, const GeneratorSpec&) = default;
};

/// Parses `INT(,INT)*(@INT)?`, e.g. "5,13@20". Also accepts "@t" alone.
GeneratorSpec parse_generator_spec(std::string_view text);
std::string format_generator_spec(const GeneratorSpec& spec);

/// Entry i is the least element congruent to i modulo the multiplicity.
struct AperyVector {
  std::vector<Value> entries;

  friend bool operator==(const AperyVector&, const AperyVector&) = default;
};

/// Largest membership table we are willing to materialize.
inline constexpr Value kMaxTableSize = Value{1} << 27;

/// An immutable numerical semigroup backed by a dense membership table over
/// [0, c + m). Primitives, Apery set and pseudo-Frobenius numbers are
/// computed once at construction.
class NumericalSemigroup {
 public:
  /// The full semigroup N.
  NumericalSemigroup();

  /// Builds from a membership table that is closed under addition and ends
  /// with at least m consecutive elements. Throws MalformedSpec if the
  /// table is obviously not a semigroup prefix (0 missing, short tail).
  /// Additive closure is not rechecked; see is_closed().
  static NumericalSemigroup from_membership(std::vector<bool> table);

  /// Builds from an explicit gap set. Throws NotNumerical if the complement
  /// is not closed under addition.
  static NumericalSemigroup from_gaps(std::span<const Value> gaps);

  bool contains(Value n) const noexcept {
    if (n < 0) return false;
    if (n >= conductor_) return true;
    return table_[static_cast<std::size_t>(n)];
  }

  Value multiplicity() const noexcept { return multiplicity_; }
  Value frobenius() const noexcept { return conductor_ - 1; }
  Value conductor() const noexcept { return conductor_; }
  Value genus() const noexcept { return genus_; }
  Value left_count() const noexcept { return conductor_ - genus_; }
  Value embedding_dimension() const noexcept {
    return static_cast<Value>(primitives_.size());
  }
  /// Number of pseudo-Frobenius numbers; 0 for N.
  Value type() const noexcept {
    return static_cast<Value>(pseudo_frobenius_.size());
  }
  Value depth() const noexcept;
  Value rho() const noexcept { return depth() * multiplicity_ - conductor_; }
  bool is_full() const noexcept { return conductor_ == 0; }

  /// Sorted minimal generators.
  const std::vector<Value>& primitives() const noexcept { return primitives_; }
  const AperyVector& apery() const noexcept { return apery_; }
  /// Sorted pseudo-Frobenius numbers; empty for N.
  const std::vector<Value>& pseudo_frobenius_numbers() const noexcept {
    return pseudo_frobenius_;
  }

  /// Sorted gaps.
  std::vector<Value> gaps() const;
  /// Elements below the conductor (left elements).
  std::vector<Value> left_elements() const;

  /// Membership table over [0, c + m).
  const std::vector<bool>& table() const noexcept { return table_; }

  /// Exhaustive closure check of the table (quadratic).
  bool is_closed() const;

  friend bool operator==(const NumericalSemigroup& a,
                         const NumericalSemigroup& b) {
    return a.conductor_ == b.conductor_ && a.multiplicity_ == b.multiplicity_ &&
           a.table_ == b.table_;
  }

 private:
  explicit NumericalSemigroup(std::vector<bool> table);

  std::vector<bool> table_;
  Value multiplicity_ = 1;
  Value conductor_ = 0;
  Value genus_ = 0;
  std::vector<Value> primitives_;
  AperyVector apery_;
  std::vector<Value> pseudo_frobenius_;
};

/// Least numerical semigroup containing spec.generators and, if present,
/// every integer >= spec.adjoin_from.
NumericalSemigroup construct(const GeneratorSpec& spec);
NumericalSemigroup construct(std::string_view spec_text);

inline bool contains(const NumericalSemigroup& s, Value n) {
  return s.contains(n);
}

AperyVector apery_set(const NumericalSemigroup& s);
std::vector<Value> minimal_generators(const NumericalSemigroup& s);

/// Throws SemigroupError(NoGaps) for N.
std::vector<Value> pseudo_frobenius(const NumericalSemigroup& s);

/// Injective byte encoding of the sorted gap set (LEB128 per gap).
std::vector<std::uint8_t> canonical_key(const NumericalSemigroup& s);

/// Minimal generators rendered in the generator-spec text format.
std::string to_spec_string(const NumericalSemigroup& s);

struct InvariantRecord {
  Value m = 1;
  Value F = -1;
  Value c = 0;
  Value g = 0;
  Value L = 0;
  Value e = 1;
  Value t = 0;
  Value q = 0;
  Value rho = 0;
  std::optional<Value> ratio;
  Value W = 0;
  Value E = 0;

  friend bool operator==(const InvariantRecord&,
                         const InvariantRecord&) = default;
};

InvariantRecord invariant_record(const NumericalSemigroup& s);

}  // namespace numsg
