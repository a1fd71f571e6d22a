// Copyright 2026 The orthoinv Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef ORTHOINV_ERRORS_HPP
#define ORTHOINV_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace orthoinv {

/// Input violates an operation precondition (not an involution, zero scalar, ...).
class precondition_error : public std::invalid_argument {
 public:
  precondition_error(std::string code, const std::string& what)
      : std::invalid_argument(what), code_(std::move(code)) {}
  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

/// The operation is well posed but outside what this library decides.
class unsupported_error : public precondition_error {
 public:
  explicit unsupported_error(const std::string& what)
      : precondition_error("unsupported", what) {}
};

/// A post-check failed. Always a bug in the library.
class invariant_error : public std::logic_error {
 public:
  explicit invariant_error(const std::string& what) : std::logic_error(what) {}
};

[[noreturn]] inline void fail(const std::string& code, const std::string& what) {
  throw precondition_error(code, code + ": " + what);
}

inline void ensure(bool ok, const std::string& what) {
  if (!ok) throw invariant_error(what);
}

}  // namespace orthoinv

#endif
