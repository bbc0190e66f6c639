#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hypersum {

enum class ErrorCode {
  kPole = 1,
  kOverflow,
  kDivisionByZero,
  kShape,
  kDegenerateDenominator,
  kDivergentInput,
  kNearSingular,
  kNotConverged,
  kConfig,
  kInvalidArgument,
};

const char* error_code_name(ErrorCode code) noexcept;

/// Base of every exception thrown by the library. The code maps one-to-one
/// onto the status values of the C API.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

enum class Side { kNumerator, kDenominator, kArgument };

/// A Gamma argument (or a Pochhammer factor) sits on a nonpositive integer.
class PoleError : public Error {
 public:
  explicit PoleError(const std::string& what, Side side = Side::kArgument,
                     std::int64_t index = -1)
      : Error(ErrorCode::kPole, what), side_(side), index_(index) {}

  Side side() const noexcept { return side_; }
  std::int64_t index() const noexcept { return index_; }

 private:
  Side side_;
  std::int64_t index_;
};

class OverflowError : public Error {
 public:
  explicit OverflowError(const std::string& what)
      : Error(ErrorCode::kOverflow, what) {}
};

class DivisionByZero : public Error {
 public:
  DivisionByZero(const std::string& what, std::int64_t denominator,
                 std::int64_t index)
      : Error(ErrorCode::kDivisionByZero, what),
        denominator_(denominator),
        index_(index) {}

  std::int64_t denominator() const noexcept { return denominator_; }
  std::int64_t index() const noexcept { return index_; }

 private:
  std::int64_t denominator_;
  std::int64_t index_;
};

class ShapeError : public Error {
 public:
  explicit ShapeError(const std::string& what) : Error(ErrorCode::kShape, what) {}
};

class DegenerateDenominator : public Error {
 public:
  explicit DegenerateDenominator(const std::string& what)
      : Error(ErrorCode::kDegenerateDenominator, what) {}
};

class DivergentInput : public Error {
 public:
  explicit DivergentInput(const std::string& what)
      : Error(ErrorCode::kDivergentInput, what) {}
};

class NearSingular : public Error {
 public:
  explicit NearSingular(const std::string& what)
      : Error(ErrorCode::kNearSingular, what) {}
};

class NotConverged : public Error {
 public:
  explicit NotConverged(const std::string& what)
      : Error(ErrorCode::kNotConverged, what) {}
};

class ConfigError : public Error {
 public:
  explicit ConfigError(const std::string& what)
      : Error(ErrorCode::kConfig, what) {}
};

class InvalidArgument : public Error {
 public:
  explicit InvalidArgument(const std::string& what)
      : Error(ErrorCode::kInvalidArgument, what) {}
};

}  // namespace hypersum
