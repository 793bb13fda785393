#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>

#include "fsplit/errors.hpp"

namespace fsplit {

// Hard cap on variables per ring, auxiliary elimination variables included.
inline constexpr std::size_t max_vars = 32;

// Exponent vector in a fixed-width array. Unused slots stay zero, so
// comparisons and divisibility never need the ring's variable count.
class monomial {
 public:
  using exponent = std::uint16_t;
  static constexpr std::uint32_t max_exponent = 0xFFFF;

  monomial() = default;
  explicit monomial(std::span<const int> exps);

  exponent operator[](std::size_t i) const noexcept { return e_[i]; }
  void set(std::size_t i, std::uint32_t v) {
    if (v > max_exponent) throw resource_error("exponent overflow in monomial");
    e_[i] = static_cast<exponent>(v);
  }

  bool is_one() const noexcept {
    for (auto v : e_)
      if (v != 0) return false;
    return true;
  }
  std::int64_t total_degree() const noexcept {
    std::int64_t d = 0;
    for (auto v : e_) d += v;
    return d;
  }

  // True when this monomial divides other.
  bool divides(const monomial& other) const noexcept {
    bool ok = true;
    for (std::size_t i = 0; i < max_vars; ++i) ok &= e_[i] <= other.e_[i];
    return ok;
  }
  bool coprime(const monomial& other) const noexcept {
    for (std::size_t i = 0; i < max_vars; ++i)
      if (e_[i] != 0 && other.e_[i] != 0) return false;
    return true;
  }

  friend monomial operator*(const monomial& a, const monomial& b) {
    monomial r;
    std::uint32_t top = 0;
    for (std::size_t i = 0; i < max_vars; ++i) {
      std::uint32_t s = std::uint32_t(a.e_[i]) + b.e_[i];
      top |= s;
      r.e_[i] = static_cast<exponent>(s);
    }
    if (top > max_exponent) throw resource_error("exponent overflow in monomial product");
    return r;
  }
  // a / b; requires b | a.
  friend monomial operator/(const monomial& a, const monomial& b) noexcept {
    monomial r;
    for (std::size_t i = 0; i < max_vars; ++i) r.e_[i] = static_cast<exponent>(a.e_[i] - b.e_[i]);
    return r;
  }
  friend monomial lcm(const monomial& a, const monomial& b) noexcept {
    monomial r;
    for (std::size_t i = 0; i < max_vars; ++i) r.e_[i] = a.e_[i] > b.e_[i] ? a.e_[i] : b.e_[i];
    return r;
  }
  friend monomial gcd(const monomial& a, const monomial& b) noexcept {
    monomial r;
    for (std::size_t i = 0; i < max_vars; ++i) r.e_[i] = a.e_[i] < b.e_[i] ? a.e_[i] : b.e_[i];
    return r;
  }
  monomial pow(std::uint64_t k) const;

  friend bool operator==(const monomial&, const monomial&) = default;

  std::size_t hash() const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (auto v : e_) h = (h ^ v) * 1099511628211ull;
    return h;
  }

  // Bit i set iff exponent i is nonzero.
  std::uint32_t support_mask() const noexcept {
    std::uint32_t m = 0;
    for (std::size_t i = 0; i < max_vars; ++i)
      if (e_[i]) m |= 1u << i;
    return m;
  }

  const std::array<exponent, max_vars>& exponents() const noexcept { return e_; }

 private:
  std::array<exponent, max_vars> e_{};
};

struct monomial_hash {
  std::size_t operator()(const monomial& m) const noexcept { return m.hash(); }
};

}  // namespace fsplit
