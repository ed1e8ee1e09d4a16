#pragma once

#include <stdexcept>
#include <string>

namespace symdyn {

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Operands live on different spaces.
class SpaceMismatch : public Error {
public:
  explicit SpaceMismatch(const std::string& what) : Error("space mismatch: " + what) {}
};

/// Malformed system, machine or automaton description.
class SpecError : public Error {
public:
  explicit SpecError(const std::string& what) : Error("spec error: " + what) {}
};

/// A query that does not fit its system, partition or automaton.
class QueryError : public Error {
public:
  explicit QueryError(const std::string& what) : Error("query error: " + what) {}
};

/// The requested procedure needs a capability the system does not carry.
class CapabilityError : public Error {
public:
  explicit CapabilityError(const std::string& what) : Error("capability error: " + what) {}
};

/// Product component index beyond the instantiation horizon.
class HorizonError : public Error {
public:
  explicit HorizonError(const std::string& what) : Error("horizon error: " + what) {}
};

}  // namespace symdyn
