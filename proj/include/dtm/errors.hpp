#ifndef DTM_ERRORS_HPP
#define DTM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace dtm {

// Base class for everything thrown by this library.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed input: wrong dimensions, duplicate entries, unknown ids.
class StructuralError : public Error {
public:
  explicit StructuralError(const std::string& msg) : Error(msg) {}
};

// A split plan that does not describe a valid partition.
class PlanError : public Error {
public:
  explicit PlanError(const std::string& msg) : Error(msg) {}
};

// Bad run configuration (missing impedances, invalid ranges, ...).
class ConfigError : public Error {
public:
  explicit ConfigError(const std::string& msg) : Error(msg) {}
};

// Cholesky factorization hit a non-positive pivot.
class FactorizationError : public Error {
public:
  FactorizationError(const std::string& msg, int pivot_index)
      : Error(msg), pivot(pivot_index) {}
  int pivot; // 1-based index of the failing pivot
};

// Elimination found a (numerically) singular matrix.
class SingularError : public Error {
public:
  explicit SingularError(const std::string& msg) : Error(msg) {}
};

// A local system could not be assembled into an SPD reduced matrix.
class AssemblyError : public Error {
public:
  AssemblyError(const std::string& msg, int subgraph_index)
      : Error(msg), subgraph(subgraph_index) {}
  int subgraph; // 0-based subgraph index
};

// Scalar singularity, e.g. (1+t)/(1-t) at t == 1.
class SingularityError : public Error {
public:
  explicit SingularityError(const std::string& msg) : Error(msg) {}
};

// Numeric routine failed to converge or produced invalid values.
class NumericError : public Error {
public:
  explicit NumericError(const std::string& msg) : Error(msg) {}
};

// File parsing / writing problems.
class IoError : public Error {
public:
  explicit IoError(const std::string& msg) : Error(msg) {}
};

} // namespace dtm

#endif
