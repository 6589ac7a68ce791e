#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace commdeg {

/// Base of every error raised by the library. The CLI maps subclasses onto
/// its exit-code contract.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class NotPrimePower : public Error {
public:
  explicit NotPrimePower(std::uint64_t q)
      : Error("not a prime power: " + std::to_string(q)), q_(q) {}
  std::uint64_t q() const { return q_; }

private:
  std::uint64_t q_;
};

class ReducibleModulus : public Error {
public:
  using Error::Error;
};

class NoBuiltinModulus : public Error {
public:
  explicit NoBuiltinModulus(std::uint64_t q)
      : Error("no built-in modulus for q = " + std::to_string(q) +
              "; supply one explicitly") {}
};

class DivisionByZero : public Error {
public:
  DivisionByZero() : Error("division by zero") {}
};

class DimensionMismatch : public Error {
public:
  DimensionMismatch(std::size_t expected, std::size_t got)
      : Error("dimension mismatch: expected " + std::to_string(expected) +
              ", got " + std::to_string(got)) {}
};

class FieldMismatch : public Error {
public:
  FieldMismatch() : Error("operands live over different fields") {}
};

class InvalidParameter : public Error {
public:
  using Error::Error;
};

class PreconditionViolated : public Error {
public:
  using Error::Error;
};

class BudgetExceeded : public Error {
public:
  BudgetExceeded(std::string what, std::uint64_t needed, std::uint64_t budget)
      : Error(what + ": needs " + std::to_string(needed) + ", budget " +
              std::to_string(budget)),
        needed_(needed), budget_(budget) {}
  std::uint64_t needed() const { return needed_; }
  std::uint64_t budget() const { return budget_; }

private:
  std::uint64_t needed_;
  std::uint64_t budget_;
};

/// Raised by the structure-tensor checks. Indices are 0-based internally;
/// what() reports them 1-based to match the file format.
class InvalidAlgebra : public Error {
public:
  using Error::Error;
};

class NotAlternating : public InvalidAlgebra {
public:
  NotAlternating(std::size_t i, std::size_t j)
      : InvalidAlgebra("not alternating at (" + std::to_string(i + 1) + ", " +
                       std::to_string(j + 1) + ")"),
        i_(i), j_(j) {}
  std::size_t i() const { return i_; }
  std::size_t j() const { return j_; }

private:
  std::size_t i_, j_;
};

class NotCentralElement : public Error {
public:
  explicit NotCentralElement(std::size_t idx)
      : Error("basis element " + std::to_string(idx + 1) + " is not central") {}
};

class UnknownFamily : public Error {
public:
  explicit UnknownFamily(const std::string &name)
      : Error("unknown family: " + name) {}
};

class ParseError : public Error {
public:
  ParseError(std::size_t line, const std::string &msg)
      : Error("line " + std::to_string(line) + ": " + msg), line_(line) {}
  std::size_t line() const { return line_; }

private:
  std::size_t line_;
};

} // namespace commdeg
