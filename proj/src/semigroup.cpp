#include "numsg/semigroup.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

namespace numsg {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::EmptySpec: return "EmptySpec";
    case ErrorCode::NotNumerical: return "NotNumerical";
    case ErrorCode::MalformedSpec: return "MalformedSpec";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::NoGaps: return "NoGaps";
    case ErrorCode::BadParameters: return "BadParameters";
    case ErrorCode::NotInSemigroup: return "NotInSemigroup";
    case ErrorCode::RangeViolation: return "RangeViolation";
    case ErrorCode::NotB3: return "NotB3";
    case ErrorCode::TooSmall: return "TooSmall";
    case ErrorCode::NotPrimitive: return "NotPrimitive";
    case ErrorCode::TooFewGenerators: return "TooFewGenerators";
    case ErrorCode::BoundTooLarge: return "BoundTooLarge";
    case ErrorCode::ResourceLimit: return "ResourceLimit";
  }
  return "Unknown";
}

namespace {

Value parse_int(std::string_view token, std::string_view whole) {
  Value v = 0;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (token.empty() || token.front() == '-' || token.front() == '+' ||
      ec != std::errc() || ptr != last) {
    throw SemigroupError(ErrorCode::MalformedSpec,
                         "malformed generator spec '" + std::string(whole) +
                             "': bad integer '" + std::string(token) + "'");
  }
  return v;
}

}  // namespace

GeneratorSpec parse_generator_spec(std::string_view text) {
  GeneratorSpec spec;
  std::string_view body = text;
  if (auto at = text.find('@'); at != std::string_view::npos) {
    spec.adjoin_from = parse_int(text.substr(at + 1), text);
    body = text.substr(0, at);
  }
  if (body.empty()) {
    throw SemigroupError(ErrorCode::MalformedSpec,
                         "malformed generator spec '" + std::string(text) +
                             "': expected INT(,INT)*(@INT)?");
  }
  std::size_t pos = 0;
  while (true) {
    auto comma = body.find(',', pos);
    auto token = body.substr(pos, comma == std::string_view::npos
                                      ? std::string_view::npos
                                      : comma - pos);
    spec.generators.push_back(parse_int(token, text));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return spec;
}

std::string format_generator_spec(const GeneratorSpec& spec) {
  std::string out;
  for (std::size_t i = 0; i < spec.generators.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(spec.generators[i]);
  }
  if (spec.adjoin_from) {
    out += '@';
    out += std::to_string(*spec.adjoin_from);
  }
  return out;
}

NumericalSemigroup::NumericalSemigroup() : NumericalSemigroup(std::vector<bool>{true}) {}

NumericalSemigroup::NumericalSemigroup(std::vector<bool> table)
    : table_(std::move(table)) {
  // Conductor: one past the last gap.
  Value last_gap = -1;
  for (Value n = static_cast<Value>(table_.size()) - 1; n > 0; --n) {
    if (!table_[static_cast<std::size_t>(n)]) {
      last_gap = n;
      break;
    }
  }
  conductor_ = last_gap + 1;
  multiplicity_ = 1;
  if (conductor_ > 0) {
    multiplicity_ = conductor_;
    for (Value n = 1; n < conductor_; ++n) {
      if (table_[static_cast<std::size_t>(n)]) {
        multiplicity_ = n;
        break;
      }
    }
  }
  table_.resize(static_cast<std::size_t>(conductor_ + multiplicity_), true);

  genus_ = 0;
  for (Value n = 1; n < conductor_; ++n) {
    if (!table_[static_cast<std::size_t>(n)]) ++genus_;
  }

  if (conductor_ == 0) {
    primitives_ = {1};
  } else {
    const Value limit = conductor_ + multiplicity_;
    for (Value x = 1; x < limit; ++x) {
      if (!table_[static_cast<std::size_t>(x)]) continue;
      bool decomposable = false;
      for (Value p : primitives_) {
        if (p >= x) break;
        Value rest = x - p;
        if (table_[static_cast<std::size_t>(rest)]) {
          decomposable = true;
          break;
        }
      }
      if (!decomposable) primitives_.push_back(x);
    }
  }

  apery_.entries.assign(static_cast<std::size_t>(multiplicity_), -1);
  Value filled = 0;
  for (Value n = 0; n < conductor_ + multiplicity_ && filled < multiplicity_;
       ++n) {
    if (!table_[static_cast<std::size_t>(n)]) continue;
    auto& slot = apery_.entries[static_cast<std::size_t>(n % multiplicity_)];
    if (slot < 0) {
      slot = n;
      ++filled;
    }
  }

  for (Value x = 1; x < conductor_; ++x) {
    if (table_[static_cast<std::size_t>(x)]) continue;
    bool pf = std::all_of(primitives_.begin(), primitives_.end(),
                          [&](Value p) { return contains(x + p); });
    if (pf) pseudo_frobenius_.push_back(x);
  }
}

NumericalSemigroup NumericalSemigroup::from_membership(std::vector<bool> table) {
  if (table.empty() || !table[0]) {
    throw SemigroupError(ErrorCode::MalformedSpec,
                         "membership table must contain 0");
  }
  if (static_cast<Value>(table.size()) > kMaxTableSize) {
    throw SemigroupError(ErrorCode::TooLarge, "membership table too large");
  }
  return NumericalSemigroup(std::move(table));
}

NumericalSemigroup NumericalSemigroup::from_gaps(std::span<const Value> gaps) {
  Value frob = 0;
  for (Value g : gaps) {
    if (g <= 0) {
      throw SemigroupError(ErrorCode::MalformedSpec,
                           "gaps must be positive integers");
    }
    frob = std::max(frob, g);
  }
  if (frob >= kMaxTableSize) {
    throw SemigroupError(ErrorCode::TooLarge, "gap set too large");
  }
  std::vector<bool> table(static_cast<std::size_t>(2 * frob + 2), true);
  for (Value g : gaps) table[static_cast<std::size_t>(g)] = false;
  NumericalSemigroup s(std::move(table));
  if (!s.is_closed()) {
    throw SemigroupError(ErrorCode::NotNumerical,
                         "complement of gap set is not closed under addition");
  }
  return s;
}

Value NumericalSemigroup::depth() const noexcept {
  return (conductor_ + multiplicity_ - 1) / multiplicity_;
}

std::vector<Value> NumericalSemigroup::gaps() const {
  std::vector<Value> out;
  out.reserve(static_cast<std::size_t>(genus_));
  for (Value n = 1; n < conductor_; ++n) {
    if (!table_[static_cast<std::size_t>(n)]) out.push_back(n);
  }
  return out;
}

std::vector<Value> NumericalSemigroup::left_elements() const {
  std::vector<Value> out;
  out.reserve(static_cast<std::size_t>(left_count()));
  for (Value n = 0; n < conductor_; ++n) {
    if (table_[static_cast<std::size_t>(n)]) out.push_back(n);
  }
  return out;
}

bool NumericalSemigroup::is_closed() const {
  const Value size = static_cast<Value>(table_.size());
  if (!table_[0]) return false;
  for (Value n = conductor_; n < size; ++n) {
    if (!table_[static_cast<std::size_t>(n)]) return false;
  }
  for (Value a = 1; a < conductor_; ++a) {
    if (!table_[static_cast<std::size_t>(a)]) continue;
    for (Value b = a; a + b < conductor_; ++b) {
      if (table_[static_cast<std::size_t>(b)] &&
          !table_[static_cast<std::size_t>(a + b)]) {
        return false;
      }
    }
  }
  return true;
}

NumericalSemigroup construct(const GeneratorSpec& spec) {
  if (spec.generators.empty() && !spec.adjoin_from) {
    throw SemigroupError(ErrorCode::EmptySpec,
                         "generator spec has neither generators nor threshold");
  }
  for (Value g : spec.generators) {
    if (g <= 0) {
      throw SemigroupError(ErrorCode::MalformedSpec,
                           "generators must be positive integers");
    }
  }
  if (spec.adjoin_from && *spec.adjoin_from < 0) {
    throw SemigroupError(ErrorCode::MalformedSpec,
                         "threshold must be nonnegative");
  }
  if (!spec.adjoin_from) {
    Value d = 0;
    for (Value g : spec.generators) d = std::gcd(d, g);
    if (d != 1) {
      throw SemigroupError(ErrorCode::NotNumerical,
                           "generators have gcd " + std::to_string(d) +
                               "; the generated monoid is not numerical");
    }
  }

  const Value threshold = spec.adjoin_from.value_or(kMaxTableSize);
  std::vector<Value> gens;
  for (Value g : spec.generators) {
    if (g < threshold) gens.push_back(g);
  }
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

  // Scan forward until the run of consecutive elements reaches the
  // multiplicity; everything past that point is an element.
  std::vector<char> member{1};
  Value first = 0;  // least positive element seen so far
  Value run = 0;
  for (Value n = 1;; ++n) {
    if (n > kMaxTableSize) {
      throw SemigroupError(ErrorCode::TooLarge,
                           "semigroup conductor exceeds table limit");
    }
    bool in = n >= threshold;
    for (auto it = gens.begin(); !in && it != gens.end() && *it <= n; ++it) {
      in = member[static_cast<std::size_t>(n - *it)] != 0;
    }
    member.push_back(in ? 1 : 0);
    if (in) {
      if (first == 0) first = n;
      ++run;
      if (run >= first) break;
    } else {
      run = 0;
    }
  }
  return NumericalSemigroup::from_membership(
      std::vector<bool>(member.begin(), member.end()));
}

NumericalSemigroup construct(std::string_view spec_text) {
  return construct(parse_generator_spec(spec_text));
}

AperyVector apery_set(const NumericalSemigroup& s) { return s.apery(); }

std::vector<Value> minimal_generators(const NumericalSemigroup& s) {
  return s.primitives();
}

std::vector<Value> pseudo_frobenius(const NumericalSemigroup& s) {
  if (s.is_full()) {
    throw SemigroupError(ErrorCode::NoGaps,
                         "N has no gaps, so no pseudo-Frobenius numbers");
  }
  return s.pseudo_frobenius_numbers();
}

std::vector<std::uint8_t> canonical_key(const NumericalSemigroup& s) {
  std::vector<std::uint8_t> key;
  for (Value gap : s.gaps()) {
    auto v = static_cast<std::uint64_t>(gap);
    do {
      std::uint8_t byte = v & 0x7f;
      v >>= 7;
      if (v) byte |= 0x80;
      key.push_back(byte);
    } while (v);
  }
  return key;
}

std::string to_spec_string(const NumericalSemigroup& s) {
  return format_generator_spec(GeneratorSpec{s.primitives(), std::nullopt});
}

}  // namespace numsg
