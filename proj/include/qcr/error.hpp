#pragma once

#include <stdexcept>
#include <string>

namespace qcr {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class UnknownRelation : public Error {
 public:
  explicit UnknownRelation(const std::string& name)
      : Error("unknown relation '" + name + "'"), name_(name) {}
  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

class UnknownCalculus : public Error {
 public:
  explicit UnknownCalculus(const std::string& name) : Error("unknown calculus '" + name + "'") {}
};

class UnknownVariable : public Error {
 public:
  explicit UnknownVariable(const std::string& name) : Error("unknown variable '" + name + "'") {}
};

class MalformedLabel : public Error {
 public:
  using Error::Error;
};

class OverlappingEdgeSets : public Error {
 public:
  using Error::Error;
};

class SupportMismatch : public Error {
 public:
  using Error::Error;
};

class NotAYesOrder : public Error {
 public:
  using Error::Error;
};

class UnclassifiedRelation : public Error {
 public:
  explicit UnclassifiedRelation(const std::string& name)
      : Error("relation '" + name + "' is not classified") {}
};

class ConstraintNotPresent : public Error {
 public:
  using Error::Error;
};

class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace qcr
