#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "hemb/signature.hpp"
#include "hemb/term.hpp"

namespace hemb {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, std::size_t line, std::size_t column);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Parses a functional module:
///
///   fmod NAT is
///     sort Nat .
///     op 0 : -> Nat .
///     op suc : Nat -> Nat .
///     op _+_ : Nat Nat -> Nat [assoc comm] .
///   endfm
///
/// Also accepts `sorts`, `subsort A < B < ...`, `ops a b : ... .` and
/// Maude line comments (`***`, `---`). Mixfix names drop their outer
/// underscores, so `_+_` is referenced as `+`.
Signature parse_signature(std::string_view text);

Signature load_signature(const std::string& path);

/// Parses a prefix term such as `+(1,X:Nat)` and checks it against `sig`.
Term parse_term(std::string_view text, const Signature& sig);

}  // namespace hemb
