#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fsplit/ring.hpp"

namespace fsplit {

struct term {
  monomial mono;
  prime_field::element coeff;
};

// Sparse polynomial over F_p. Terms are kept strictly descending in the
// ring's monomial order with no zero coefficients.
class polynomial {
 public:
  explicit polynomial(ring_ptr ring) : ring_(std::move(ring)) {}
  // Takes arbitrary terms; sorts, merges duplicates and drops zeros.
  polynomial(ring_ptr ring, std::vector<term> terms);

  static polynomial constant(ring_ptr ring, std::int64_t c);
  static polynomial variable(ring_ptr ring, std::size_t i);
  static polynomial from_monomial(ring_ptr ring, const monomial& m, prime_field::element c = 1);
  // Trusted constructor: terms must already be strictly descending and nonzero.
  static polynomial from_sorted_terms(ring_ptr ring, std::vector<term> terms);

  const poly_ring& ring() const noexcept { return *ring_; }
  const ring_ptr& ring_ptr_() const noexcept { return ring_; }
  std::span<const term> terms() const noexcept { return terms_; }
  std::vector<term> release_terms() && { return std::move(terms_); }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
  const term& lead() const { return terms_.front(); }

  // Weighted degree; nullopt for the zero polynomial.
  std::optional<std::int64_t> degree() const noexcept;
  // Zero counts as homogeneous.
  bool is_homogeneous() const noexcept;

  polynomial monic() const;
  polynomial scaled(prime_field::element c) const;
  polynomial times_term(const monomial& m, prime_field::element c) const;
  // Same context, different order: re-sorts the terms.
  polynomial in_ring(ring_ptr target) const;

  polynomial operator-() const;
  friend polynomial operator+(const polynomial& a, const polynomial& b);
  friend polynomial operator-(const polynomial& a, const polynomial& b);
  friend polynomial operator*(const polynomial& a, const polynomial& b);
  polynomial& operator+=(const polynomial& b) { return *this = *this + b; }
  polynomial& operator-=(const polynomial& b) { return *this = *this - b; }
  polynomial& operator*=(const polynomial& b) { return *this = *this * b; }

  friend bool operator==(const polynomial& a, const polynomial& b);

  std::string to_string() const;

  // this - c * m * g, the inner step of reduction.
  polynomial sub_mul(prime_field::element c, const monomial& m, const polynomial& g) const;

 private:
  void check_same_ring(const polynomial& other) const;

  ring_ptr ring_;
  std::vector<term> terms_;
};

polynomial pow(const polynomial& f, std::uint64_t k);

// f^q computed term-wise; q must be a power of the characteristic.
polynomial frobenius_power(const polynomial& f, std::uint64_t q);

// True iff q = p^e for some e >= 0; e is returned through the pointer.
bool is_power_of(std::uint64_t q, std::uint64_t p, int* e = nullptr);

// Exact quotient f / g; throws usage_error when g does not divide f.
polynomial exact_divide(const polynomial& f, const polynomial& g);

// Re-embeds f into target by mapping variable i of f's context to
// variable var_map[i] of target's context (must be injective).
polynomial remap(const polynomial& f, const ring_ptr& target, std::span<const std::size_t> var_map);

}  // namespace fsplit
