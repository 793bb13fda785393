#pragma once

#include <cstdint>

#include "fsplit/errors.hpp"

namespace fsplit {

bool is_prime(std::uint64_t n);

// Arithmetic in Z/pZ for a prime p < 2^31. Elements are canonical residues.
class prime_field {
 public:
  using element = std::uint32_t;

  explicit prime_field(std::uint32_t p);

  std::uint32_t characteristic() const noexcept { return p_; }

  element reduce(std::int64_t v) const noexcept {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    return static_cast<element>(r < 0 ? r + p_ : r);
  }
  element add(element a, element b) const noexcept {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  element sub(element a, element b) const noexcept { return a >= b ? a - b : a + p_ - b; }
  element neg(element a) const noexcept { return a == 0 ? 0 : p_ - a; }
  element mul(element a, element b) const noexcept {
    return static_cast<element>((static_cast<std::uint64_t>(a) * b) % p_);
  }
  element pow(element a, std::uint64_t k) const noexcept;
  // Throws usage_error on zero.
  element inv(element a) const;

 private:
  std::uint32_t p_;
};

}  // namespace fsplit
