#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "fsplit/groebner.hpp"

namespace fsplit {

// Ideal of a polynomial ring given by generators, with reduced Groebner bases
// cached per monomial order. Copies share the cache; the cache is guarded so
// concurrent readers of one handle see a single computation per order.
class ideal {
 public:
  ideal(context_ptr ctx, std::vector<polynomial> gens);

  static ideal zero(context_ptr ctx) { return ideal(std::move(ctx), {}); }
  static ideal unit(context_ptr ctx);
  // The ideal generated by all variables.
  static ideal maximal(context_ptr ctx);

  const context_ptr& context() const noexcept { return ctx_; }
  // The ring with the default weighted degrevlex order; generators live here.
  const ring_ptr& ring() const noexcept { return ring_; }
  const std::vector<polynomial>& generators() const noexcept { return gens_; }

  bool is_zero() const noexcept { return gens_.empty(); }
  bool is_homogeneous() const noexcept;

  const std::vector<polynomial>& groebner_basis(budget& steps) const {
    return groebner_basis(monomial_order::weighted_degrevlex(), steps);
  }
  const std::vector<polynomial>& groebner_basis(const monomial_order& order, budget& steps) const;
  const std::vector<polynomial>& groebner_basis() const;
  bool has_cached_basis(const monomial_order& order) const;

  polynomial normal_form(const polynomial& f, budget& steps) const;
  bool contains(const polynomial& f, budget& steps) const;
  bool contains(const polynomial& f) const;
  bool contains(const ideal& other, budget& steps) const;
  bool is_unit(budget& steps) const;

  // Installs a basis known to be reduced for the order (used when a basis is
  // obtained for free, e.g. Frobenius powers of a basis or elimination output).
  void seed_basis(const monomial_order& order, std::vector<polynomial> basis) const;

 private:
  struct cache {
    std::mutex mu;
    std::map<monomial_order, std::vector<polynomial>> bases;
  };

  context_ptr ctx_;
  ring_ptr ring_;
  std::vector<polynomial> gens_;
  std::shared_ptr<cache> cache_;
};

// Ideal generated by monomials, stored as a divisibility antichain.
class monomial_ideal {
 public:
  monomial_ideal(context_ptr ctx, std::vector<monomial> gens);
  // (x_1^q, ..., x_n^q)
  static monomial_ideal frobenius_maximal(context_ptr ctx, std::uint64_t q);

  const context_ptr& context() const noexcept { return ctx_; }
  const std::vector<monomial>& generators() const noexcept { return gens_; }
  bool contains(const monomial& m) const noexcept;

 private:
  context_ptr ctx_;
  std::vector<monomial> gens_;
};

// I^[q]: q-th powers of the generators; the cached basis is the q-th power of I's basis.
ideal frobenius_power(const ideal& I, std::uint64_t q, budget& steps);

ideal sum(const ideal& I, const ideal& J);
ideal intersect(const ideal& I, const ideal& J, budget& steps);
// I intersected with the subring of the last n-k variables, as an ideal of that subring.
ideal eliminate(const ideal& I, std::size_t k, budget& steps);
// (I : f^infinity)
ideal saturate(const ideal& I, const polynomial& f, budget& steps);
// (I : J)
ideal colon(const ideal& I, const ideal& J, budget& steps);
ideal colon(const ideal& I, const polynomial& f, budget& steps);

// Degrees of a minimal homogeneous generating set of J / Iq, ascending.
// Requires Iq contained in J and both homogeneous.
std::vector<std::int64_t> mingens_degrees(const ideal& J, const ideal& Iq, budget& steps);

// True iff every term of every generator of I lies in M.
bool ideal_in_monomial_ideal(const ideal& I, const monomial_ideal& M);

// Context with `extra` fresh variables of weight 1 placed before the existing ones.
context_ptr prepend_variables(const context_ptr& ctx, std::size_t extra);

// Both ideals contain each other.
bool same_ideal(const ideal& I, const ideal& J, budget& steps);

}  // namespace fsplit
