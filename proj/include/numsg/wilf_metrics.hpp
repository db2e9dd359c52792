#pragma once

#include <vector>

#include "numsg/semigroup.hpp"

namespace numsg {

/// Split of the threshold interval {c, ..., c+m-1} into primitive and
/// decomposable members, plus the primitives lying below the conductor.
/// For N the threshold is {0}, with no primitives and D = {0}.
struct ThresholdPartition {
  Value threshold_begin = 0;  // c
  Value threshold_size = 1;   // m
  std::vector<Value> left_primitives;
  std::vector<Value> right_primitives;
  std::vector<Value> decomposables;
};

ThresholdPartition threshold_partition(const NumericalSemigroup& s);

/// W(S) = |P| * |L| - c.
Value wilf_number(const NumericalSemigroup& s);

/// E(S) = |P cap L| * |L| - q * |D| + q * m - c, where D is the set of
/// non-primitive members of the threshold interval.
Value eliahou_number(const NumericalSemigroup& s);

}  // namespace numsg
