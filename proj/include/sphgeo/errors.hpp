#pragma once

#include <stdexcept>
#include <string>

namespace sg {

enum class ErrorCode {
  ZeroVector,
  DependentPoints,
  EmptyIntersection,
  Singular,
  DimensionMismatch,
  DegenerateQuadric,
  PointOnQuadric,
  CoincidentPoints,
  IsotropicMirror,
  NotOrthogonal,
  LineOnGenerator,
  PointOnAbsolute,
  InvalidCenter,
  OutsideSpaceForm,
  UnsupportedEuclidean,
  WrongSide,
  ProjectingCenter,
  EmptySection,
  NoRealLift,
  BranchPoint,
  NoIntersection,
  NonPositiveDistance,
  KindMismatch,
  NoCommonTangent,
  WrongFamily,
  NotUnit,
  NotOnQuadric,
  UnknownRow,
  OnPolarHyperplane,
  ZeroRadius,
  NoRealRepresentative,
  DomainError,
  SumNotZero,
  InvalidParams,
  DegenerateInput,
  TangentPlane,
  NotGeneric,
  HypothesisViolated,
  InsufficientData,
  NotCoplanarNet,
  WindowEmpty,
  NotOnBaseCurve,
  NotRepresentable,
  Degenerate,
};

const char* to_string(ErrorCode code);

class GeometryError : public std::runtime_error {
 public:
  GeometryError(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw GeometryError(code, what);
}

}  // namespace sg
