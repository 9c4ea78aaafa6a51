#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace snac0 {

enum class ErrorKind {
  input,           // malformed data, unknown points, parse failures
  precondition,    // well-formed input that violates an operation's hypothesis
  contract,        // a checked assertion was called outside its contract
  not_normalized,  // a family member does not have Lipschitz norm 1
  internal,        // an invariant that must hold by construction failed
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class InputError : public Error {
 public:
  explicit InputError(const std::string& what) : Error(ErrorKind::input, what) {}
};

class PreconditionError : public Error {
 public:
  explicit PreconditionError(const std::string& what) : Error(ErrorKind::precondition, what) {}
};

/// A greedy selection ran out of candidates before reaching the requested count.
class InsufficientSequenceError : public PreconditionError {
 public:
  InsufficientSequenceError(std::size_t found, const std::string& what) : PreconditionError(what), found_(found) {}

  std::size_t found() const noexcept { return found_; }

 private:
  std::size_t found_;
};

class ContractError : public Error {
 public:
  explicit ContractError(const std::string& what) : Error(ErrorKind::contract, what) {}
};

class InternalError : public Error {
 public:
  explicit InternalError(const std::string& what) : Error(ErrorKind::internal, what) {}
};

/// Raised by certification when a member's Lipschitz norm is not exactly 1.
class NotNormalizedError : public Error {
 public:
  NotNormalizedError(std::size_t member, const std::string& what)
      : Error(ErrorKind::not_normalized, what), member_(member) {}

  std::size_t member() const noexcept { return member_; }

 private:
  std::size_t member_;
};

}  // namespace snac0
