#pragma once

#include <stdexcept>
#include <string>

namespace gridfuzz {

/// Base class for every error the engine raises.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Quadruple violates a1 <= a2 <= a3 <= a4 (or contains non-finite values).
class InvalidTrapezoid : public Error {
 public:
  using Error::Error;
};

/// An arithmetic result came out non-monotone; the componentwise subtraction
/// and quotient formulas can produce these.
class NonMonotoneResult : public Error {
 public:
  using Error::Error;
};

/// Multiplication/division operand with an endpoint below zero.
class NegativeOperand : public Error {
 public:
  using Error::Error;
};

/// Division requires every divisor endpoint to be strictly positive.
class DivisorNotPositive : public Error {
 public:
  using Error::Error;
};

/// Defuzzification of a set whose grades are all zero (no rule fired).
class EmptySetError : public Error {
 public:
  using Error::Error;
};

/// Output terms do not form an ordered ladder, so severity-based rule
/// generation has no target scale.
class UnorderedOutput : public Error {
 public:
  using Error::Error;
};

/// Malformed input file. Carries the offending location when known.
class ParseError : public Error {
 public:
  using Error::Error;
  ParseError(const std::string& where, std::size_t line, const std::string& what)
      : Error(where + ":" + std::to_string(line) + ": " + what) {}
};

class UnknownVariable : public Error {
 public:
  using Error::Error;
};

class UnknownTerm : public Error {
 public:
  using Error::Error;
};

/// A rule references a variable absent from the fuzzified inputs.
class MissingInput : public Error {
 public:
  using Error::Error;
};

/// Network topology has a cycle or a component reachable by two paths.
class NonRadialTopology : public Error {
 public:
  using Error::Error;
};

/// Network file references an id that is never defined.
class DanglingReference : public Error {
 public:
  using Error::Error;
};

class UnknownBenchmark : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace gridfuzz
