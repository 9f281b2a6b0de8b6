#pragma once

#include <stdexcept>
#include <string>

namespace ctx {

enum class ErrorKind {
  Parse,          // malformed document or literal
  Invalid,        // system violates a structural/probability invariant
  ModeMismatch,   // traditional analysis of an inconsistently connected system
  SizeCap,        // coupling too large to enumerate
  ShapeMismatch,  // closed-form criterion applied to the wrong arrangement
  Domain,         // bad argument (dimension mismatch, unknown content, ...)
};

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

private:
  ErrorKind kind_;
};

}  // namespace ctx
