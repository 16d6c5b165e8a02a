#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <string_view>

#include <Eigen/Dense>

namespace qcohere {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

enum class ErrorCode {
  NonSquare = 1,
  NonHermitian,
  TraceNotOne,
  NotPositiveSemidefinite,
  DimensionMismatch,
  InvalidRank,
  InvalidState,
  InvalidBasis,
  IndexOutOfRange,
  EqualIndices,
  InvalidGamma,
  ZeroGammaDenominator,
  TauOutOfRange,
  InvalidPovm,
  EtaMissing,
  DegenerateDistribution,
  InvalidArgument,
};

std::string_view to_string(ErrorCode code) noexcept;

// Every failure raised by the library carries one of the codes above so the
// C boundary can translate it without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& what);

}  // namespace qcohere
