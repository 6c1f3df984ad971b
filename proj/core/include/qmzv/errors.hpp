#pragma once

#include <stdexcept>
#include <string>

namespace qmzv {

/// A prime divides a denominator, so the value has no image in Z_(p).
class IntegralityError : public std::domain_error {
 public:
  IntegralityError(unsigned long p, const std::string& what)
      : std::domain_error(what), prime_(p) {}
  unsigned long prime() const noexcept { return prime_; }

 private:
  unsigned long prime_;
};

/// Zero divisor or otherwise non-unit residue.
class NotInvertibleError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Arguments outside the documented parameter box.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace qmzv
