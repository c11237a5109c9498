#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace zk {

// Argument outside an operation's mathematical domain (n = 0, gcd violation, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A 64-bit intermediate (sigma, products, weighted sums) would overflow.
class RangeError : public std::range_error {
 public:
  using std::range_error::range_error;
};

// A configured engine or enumeration limit was exceeded before a decision
// could be made. Never means "no".
class CapacityError : public std::runtime_error {
 public:
  CapacityError(std::string what, std::uint64_t cap)
      : std::runtime_error(std::move(what) + " (cap " + std::to_string(cap) + ")"), cap_(cap) {}

  [[nodiscard]] std::uint64_t cap() const noexcept { return cap_; }

 private:
  std::uint64_t cap_;
};

}  // namespace zk
