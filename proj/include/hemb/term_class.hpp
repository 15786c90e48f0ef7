#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "hemb/signature.hpp"
#include "hemb/term.hpp"

namespace hemb {

inline constexpr std::size_t kDefaultClassCap = 1'000'000;

/// Thrown when an equivalence class is larger than the configured cap.
class ClassCapExceeded : public std::runtime_error {
 public:
  explicit ClassCapExceeded(std::size_t cap);
  std::size_t cap() const { return cap_; }

 private:
  std::size_t cap_;
};

/// Every syntactically distinct term equal to `t` modulo the A/C axioms of
/// `sig`, sorted by `Term::str()`.
std::vector<Term> enumerate_class(const Term& t, const Signature& sig,
                                  std::size_t cap = kDefaultClassCap);

/// `enumerate_class(t, sig, cap).size()`.
std::size_t class_size(const Term& t, const Signature& sig,
                       std::size_t cap = kDefaultClassCap);

}  // namespace hemb
