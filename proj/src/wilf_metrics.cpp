#include "numsg/wilf_metrics.hpp"

namespace numsg {

ThresholdPartition threshold_partition(const NumericalSemigroup& s) {
  ThresholdPartition out;
  const Value c = s.conductor();
  const Value m = s.multiplicity();
  out.threshold_begin = c;
  out.threshold_size = m;
  if (s.is_full()) {
    out.decomposables = {0};
    return out;
  }
  for (Value p : s.primitives()) {
    (p < c ? out.left_primitives : out.right_primitives).push_back(p);
  }
  auto it = out.right_primitives.begin();
  for (Value x = c; x < c + m; ++x) {
    if (it != out.right_primitives.end() && *it == x) {
      ++it;
    } else {
      out.decomposables.push_back(x);
    }
  }
  return out;
}

Value wilf_number(const NumericalSemigroup& s) {
  return s.embedding_dimension() * s.left_count() - s.conductor();
}

Value eliahou_number(const NumericalSemigroup& s) {
  const auto part = threshold_partition(s);
  const Value q = s.depth();
  const Value left = s.left_count();
  return static_cast<Value>(part.left_primitives.size()) * left -
         q * static_cast<Value>(part.decomposables.size()) +
         q * s.multiplicity() - s.conductor();
}

}  // namespace numsg
