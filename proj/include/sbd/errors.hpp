#pragma once

#include <stdexcept>
#include <string>

namespace sbd {

struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct DimensionMismatch : Error {
  using Error::Error;
};

struct SingularMatrix : Error {
  using Error::Error;
};

// Kernel dimension of a generalized eigenspace disagrees with the algebraic
// multiplicity; usually means eig_cluster_tol is mis-tuned for the input.
struct DefectiveTolerance : Error {
  using Error::Error;
};

struct NotInvariant : Error {
  using Error::Error;
};

struct ConvergenceFailure : Error {
  using Error::Error;
};

// "No decomposition found" family: the CLI maps these to exit code 2.
struct NoDecomposition : Error {
  bool certified;
  NoDecomposition(const std::string& msg, bool certified_)
      : Error(msg), certified(certified_) {}
};

struct NotTriangularizable : NoDecomposition {
  using NoDecomposition::NoDecomposition;
};

struct NotDiagonalizable : NoDecomposition {
  using NoDecomposition::NoDecomposition;
};

struct OnlyScalarSpectrum : NoDecomposition {
  explicit OnlyScalarSpectrum(const std::string& msg)
      : NoDecomposition(msg, false) {}
};

struct InternalInconsistency : Error {
  using Error::Error;
};

struct VerificationFailed : Error {
  using Error::Error;
};

struct PartitionMismatch : Error {
  using Error::Error;
};

struct ParseError : Error {
  using Error::Error;
};

struct DuplicateName : Error {
  using Error::Error;
};

}  // namespace sbd
