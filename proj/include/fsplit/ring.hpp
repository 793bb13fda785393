#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "fsplit/field.hpp"
#include "fsplit/monomial.hpp"

namespace fsplit {

// Characteristic, variable names and positive integer degrees of the variables
// of a graded polynomial ring over F_p.
class ring_context {
 public:
  // Validates p prime, 1 <= n <= max_vars, names distinct and nonempty,
  // weights >= 1 (empty weights means all 1).
  static std::shared_ptr<const ring_context> make(std::uint32_t p, std::vector<std::string> names,
                                                  std::vector<int> weights = {});

  std::uint32_t characteristic() const noexcept { return field_.characteristic(); }
  const prime_field& field() const noexcept { return field_; }
  std::size_t num_vars() const noexcept { return names_.size(); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::vector<int>& weights() const noexcept { return weights_; }
  int weight(std::size_t i) const noexcept { return weights_[i]; }
  bool standard_graded() const noexcept;
  std::int64_t weighted_degree(const monomial& m) const noexcept;
  // Index of the named variable, or -1.
  int index_of(const std::string& name) const noexcept;

  // Same field, structurally equal variable data.
  bool same_as(const ring_context& other) const noexcept;

 private:
  ring_context(std::uint32_t p, std::vector<std::string> names, std::vector<int> weights);

  prime_field field_;
  std::vector<std::string> names_;
  std::vector<int> weights_;
};

using context_ptr = std::shared_ptr<const ring_context>;

struct monomial_order {
  enum class kind : std::uint8_t { degrevlex, lex, weighted_degrevlex, block };

  kind type = kind::weighted_degrevlex;
  // For block orders: variables [0, block_size) form the eliminated block,
  // compared by degrevlex; ties are broken by weighted degrevlex on the rest.
  std::uint32_t block_size = 0;

  static monomial_order degrevlex() { return {kind::degrevlex, 0}; }
  static monomial_order lex() { return {kind::lex, 0}; }
  static monomial_order weighted_degrevlex() { return {kind::weighted_degrevlex, 0}; }
  static monomial_order block(std::uint32_t k) { return {kind::block, k}; }

  friend auto operator<=>(const monomial_order&, const monomial_order&) = default;
  std::string name() const;
};

// A ring context together with the monomial order its polynomials are sorted by.
class poly_ring {
 public:
  poly_ring(context_ptr ctx, monomial_order order);

  const ring_context& context() const noexcept { return *ctx_; }
  const context_ptr& context_ptr_() const noexcept { return ctx_; }
  const monomial_order& order() const noexcept { return order_; }
  const prime_field& field() const noexcept { return ctx_->field(); }
  std::size_t num_vars() const noexcept { return ctx_->num_vars(); }

  // Negative, zero or positive as a <, =, > b in the order.
  int compare(const monomial& a, const monomial& b) const noexcept;
  bool less(const monomial& a, const monomial& b) const noexcept { return compare(a, b) < 0; }

 private:
  int compare_lex(const monomial& a, const monomial& b) const noexcept;
  int compare_grevlex(const monomial& a, const monomial& b, std::size_t lo, std::size_t hi,
                      bool weighted) const noexcept;

  context_ptr ctx_;
  monomial_order order_;
  std::array<std::int64_t, max_vars> weights_{};
};

using ring_ptr = std::shared_ptr<const poly_ring>;

ring_ptr make_ring(context_ptr ctx, monomial_order order = monomial_order::weighted_degrevlex());

}  // namespace fsplit
