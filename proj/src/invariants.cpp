#include "numsg/semigroup.hpp"
#include "numsg/wilf_metrics.hpp"

namespace numsg {

InvariantRecord invariant_record(const NumericalSemigroup& s) {
  InvariantRecord r;
  r.m = s.multiplicity();
  r.F = s.frobenius();
  r.c = s.conductor();
  r.g = s.genus();
  r.L = s.left_count();
  r.e = s.embedding_dimension();
  r.t = s.type();
  r.q = s.depth();
  r.rho = s.rho();
  if (s.primitives().size() >= 2) r.ratio = s.primitives()[1];
  r.W = wilf_number(s);
  r.E = eliahou_number(s);
  return r;
}

}  // namespace numsg
