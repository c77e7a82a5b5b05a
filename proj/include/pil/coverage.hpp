#pragma once

// Records which public operations have run since the last reset. Used by the
// test suite to check that the scenarios exercise the whole library.

#include <string>
#include <vector>

namespace pil::coverage {

enum class Op {
  Rref,
  KernelBasis,
  RowspaceContains,
  SubspaceSum,
  MonomialCount,
  ExpandPower,
  ApplyDiff,
  PairingMatrix,
  RhoOf,
  Strata,
  Lines,
  RhoMin,
  LargeSpan,
  Delete,
  Contract,
  MatroidOf,
  SameMatroid,
  Tutte,
  TutteEval,
  Generators,
  IdealDegreeSpan,
  InverseSystemBasis,
  HilbertFunction,
  AMonomialSpan,
  CheckCEqualsCPrime,
  Degree1Component,
  ExactSequenceDefect,
  ParseArrangement,
  BuildPencilArrangement,
  Count_
};

void hit(Op op);
void reset();
std::vector<std::string> missing();
const char* name(Op op);

}  // namespace pil::coverage
