#pragma once

#include <stdexcept>
#include <string>

namespace ballinterp {

// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Simplex with the wrong vertex count, mixed dimensions or non-finite entries.
class MalformedSimplexError : public Error {
 public:
  using Error::Error;
};

// |det A| fell below the scale-aware degeneracy threshold.  Carries the
// determinant that was actually computed.
class DegenerateSimplexError : public Error {
 public:
  DegenerateSimplexError(const std::string& what, double determinant)
      : Error(what), determinant_(determinant) {}
  double determinant() const { return determinant_; }

 private:
  double determinant_;
};

// Mismatched vector sizes between two arguments (e.g. point vs. basis).
class DimensionMismatchError : public Error {
 public:
  using Error::Error;
};

// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

// A documented precondition was violated (e.g. off-center ball passed to the
// centered norm routine, or an invalid search configuration).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Exact sign enumeration refused because 2^n would be too large.
class EnumerationCapError : public Error {
 public:
  using Error::Error;
};

// Requested evaluation range not covered by the spline's node pairs.
class SplineRangeError : public Error {
 public:
  using Error::Error;
};

// Malformed input text or file.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace ballinterp
