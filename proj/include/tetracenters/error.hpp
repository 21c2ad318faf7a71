#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tc {

enum class ErrorCode {
  DivisionByZero,
  IndeterminateDivision,
  NegativeRadicand,
  SyntaxError,
  NotSymmetric,
  NotHomogeneous,
  ValidationError,
  DegenerateTriangle,
  IrrationalInExactMode,
  EvaluationSingular,
  OnSideline,
  Undecided,
  IdenticalPoints,
  DegenerateRatio,
  SkewLines,
  ParallelLines,
  IdenticalLines,
  ImaginarySigma,
  CollinearPoints,
  PointOnLine,
  ParallelDirections,
  LineParallelToPlane,
  CoplanarPoints,
  SingularSystem,
  PointAtInfinity,
  NotOnLine,
  EulerLineDegenerate,
  GenerationExhausted,
  DegenerateCevian,
  DegenerateCevianConfiguration,
  InvalidInstance,
  UnknownId,
  InvalidArgument,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t position, const std::string& what)
      : Error(ErrorCode::SyntaxError, what + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

}  // namespace tc
