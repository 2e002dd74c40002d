#pragma once

#include <stdexcept>
#include <string>

namespace a3 {

// Base for all precondition/domain violations; the CLI maps these to exit 1.
struct domain_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ZeroSlopePair : domain_error {
  ZeroSlopePair() : domain_error("slope (0, 0) is not a point of the Farey circle") {}
};

struct EqualSlopes : domain_error {
  EqualSlopes() : domain_error("operation requires two distinct slopes") {}
};

struct NegativeDenominatorInput : domain_error {
  NegativeDenominatorInput() : domain_error("fraction difference requires non-negative denominators") {}
};

struct NonUnimodularMatrix : domain_error {
  NonUnimodularMatrix() : domain_error("matrix must have determinant +1 or -1") {}
};

struct SlopeOutOfRange : domain_error {
  explicit SlopeOutOfRange(const std::string& what) : domain_error(what) {}
};

struct ZeroInput : domain_error {
  ZeroInput() : domain_error("twisting parameter must be nonzero") {}
};

struct RegionMismatch : domain_error {
  explicit RegionMismatch(const std::string& what) : domain_error(what) {}
};

struct UnsupportedDecoration : domain_error {
  explicit UnsupportedDecoration(const std::string& what) : domain_error(what) {}
};

struct SingularMatrix : domain_error {
  SingularMatrix() : domain_error("linking matrix is singular") {}
};

struct ParameterOutOfRange : domain_error {
  explicit ParameterOutOfRange(const std::string& what) : domain_error(what) {}
};

// Raised when the transcribed tables and the counting formulas disagree.
// Never auto-corrected: it signals a transcription error to fix at the source.
struct ConsistencyFailure : domain_error {
  explicit ConsistencyFailure(const std::string& what) : domain_error(what) {}
};

struct ParseError : domain_error {
  explicit ParseError(const std::string& what) : domain_error(what) {}
};

}  // namespace a3
