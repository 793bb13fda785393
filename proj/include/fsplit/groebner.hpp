#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "fsplit/polynomial.hpp"

namespace fsplit {

// Counts reduction steps; throws resource_error once the limit is passed.
// One budget per computation; not shared between threads.
class budget {
 public:
  static constexpr std::uint64_t default_limit = 10'000'000;

  explicit budget(std::uint64_t limit = default_limit) : limit_(limit) {}

  void spend(std::uint64_t steps = 1) {
    used_ += steps;
    if (used_ > limit_) throw resource_error("step budget of " + std::to_string(limit_) + " reductions exhausted");
  }
  std::uint64_t used() const noexcept { return used_; }
  std::uint64_t limit() const noexcept { return limit_; }

 private:
  std::uint64_t limit_;
  std::uint64_t used_ = 0;
};

// Incremental Buchberger completion with the Gebauer-Moeller pair criteria and
// sugar-degree pair selection. Generators can be added between completions;
// complete(d) stops before any pair or input of sugar > d, which for
// homogeneous input in a degree-compatible order yields a basis valid up to
// degree d.
class groebner_builder {
 public:
  groebner_builder(ring_ptr ring, budget& steps);

  void add(const polynomial& f);
  void complete(std::optional<std::int64_t> max_sugar = std::nullopt);

  // Full normal form against the current active basis.
  polynomial reduce(const polynomial& f) const;
  // Minimal, tail-reduced, monic basis sorted by ascending leading monomial.
  std::vector<polynomial> reduced_basis() const;

  const ring_ptr& ring() const noexcept { return ring_; }

 private:
  struct element {
    polynomial poly;
    monomial lead;
    std::uint32_t mask;
    std::int64_t sugar;
    bool active;
  };
  struct critical_pair {
    std::uint32_t i;
    std::uint32_t j;
    monomial lcm;
    std::int64_t sugar;
  };
  struct pending_input {
    polynomial poly;
    std::int64_t sugar;
  };

  int find_reducer(const monomial& m) const;
  polynomial top_reduce(polynomial h, std::int64_t& sugar) const;
  void insert(polynomial h, std::int64_t sugar);
  polynomial s_polynomial(const critical_pair& pr) const;
  std::int64_t sugar_of(const polynomial& f) const;

  ring_ptr ring_;
  budget* budget_;
  std::vector<element> basis_;
  std::vector<critical_pair> pairs_;
  std::vector<pending_input> inputs_;
};

// Reduced Groebner basis of the ideal generated by gens, in the given ring's order.
std::vector<polynomial> buchberger(std::span<const polynomial> gens, const ring_ptr& ring, budget& steps);

// Full normal form of f with respect to a Groebner basis.
polynomial normal_form(const polynomial& f, std::span<const polynomial> basis, budget& steps);

}  // namespace fsplit
