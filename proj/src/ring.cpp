#include "fsplit/ring.hpp"

#include <set>

namespace fsplit {

monomial::monomial(std::span<const int> exps) {
  if (exps.size() > max_vars) throw usage_error("too many exponents for a monomial");
  for (std::size_t i = 0; i < exps.size(); ++i) {
    if (exps[i] < 0) throw usage_error("negative exponent");
    set(i, static_cast<std::uint32_t>(exps[i]));
  }
}

monomial monomial::pow(std::uint64_t k) const {
  monomial r;
  for (std::size_t i = 0; i < max_vars; ++i) {
    std::uint64_t v = std::uint64_t(e_[i]) * k;
    if (v > max_exponent) throw resource_error("exponent overflow in monomial power");
    r.e_[i] = static_cast<exponent>(v);
  }
  return r;
}

ring_context::ring_context(std::uint32_t p, std::vector<std::string> names, std::vector<int> weights)
    : field_(p), names_(std::move(names)), weights_(std::move(weights)) {}

std::shared_ptr<const ring_context> ring_context::make(std::uint32_t p, std::vector<std::string> names,
                                                       std::vector<int> weights) {
  if (names.empty()) throw usage_error("a ring needs at least one variable");
  if (names.size() > max_vars)
    throw usage_error("at most " + std::to_string(max_vars) + " variables are supported");
  if (weights.empty()) weights.assign(names.size(), 1);
  if (weights.size() != names.size()) throw usage_error("one weight per variable is required");
  std::set<std::string> seen;
  for (const auto& n : names) {
    if (n.empty()) throw usage_error("empty variable name");
    if (!seen.insert(n).second) throw usage_error("duplicate variable name '" + n + "'");
  }
  for (int w : weights)
    if (w < 1) throw usage_error("variable weights must be positive");
  return std::shared_ptr<const ring_context>(new ring_context(p, std::move(names), std::move(weights)));
}

bool ring_context::standard_graded() const noexcept {
  for (int w : weights_)
    if (w != 1) return false;
  return true;
}

std::int64_t ring_context::weighted_degree(const monomial& m) const noexcept {
  std::int64_t d = 0;
  for (std::size_t i = 0; i < weights_.size(); ++i) d += std::int64_t(weights_[i]) * m[i];
  return d;
}

int ring_context::index_of(const std::string& name) const noexcept {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return static_cast<int>(i);
  return -1;
}

bool ring_context::same_as(const ring_context& other) const noexcept {
  return this == &other || (characteristic() == other.characteristic() && names_ == other.names_ &&
                            weights_ == other.weights_);
}

std::string monomial_order::name() const {
  switch (type) {
    case kind::degrevlex: return "degrevlex";
    case kind::lex: return "lex";
    case kind::weighted_degrevlex: return "weighted-degrevlex";
    case kind::block: return "block(" + std::to_string(block_size) + ")";
  }
  return "?";
}

poly_ring::poly_ring(context_ptr ctx, monomial_order order) : ctx_(std::move(ctx)), order_(order) {
  if (order_.type == monomial_order::kind::block && order_.block_size > ctx_->num_vars())
    throw usage_error("block size exceeds variable count");
  for (std::size_t i = 0; i < ctx_->num_vars(); ++i) weights_[i] = ctx_->weight(i);
}

int poly_ring::compare_lex(const monomial& a, const monomial& b) const noexcept {
  for (std::size_t i = 0; i < max_vars; ++i)
    if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
  return 0;
}

int poly_ring::compare_grevlex(const monomial& a, const monomial& b, std::size_t lo, std::size_t hi,
                               bool weighted) const noexcept {
  std::int64_t da = 0, db = 0;
  for (std::size_t i = lo; i < hi; ++i) {
    std::int64_t w = weighted ? weights_[i] : 1;
    da += w * a[i];
    db += w * b[i];
  }
  if (da != db) return da > db ? 1 : -1;
  for (std::size_t i = hi; i-- > lo;)
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  return 0;
}

int poly_ring::compare(const monomial& a, const monomial& b) const noexcept {
  switch (order_.type) {
    case monomial_order::kind::lex: return compare_lex(a, b);
    case monomial_order::kind::degrevlex: return compare_grevlex(a, b, 0, max_vars, false);
    case monomial_order::kind::weighted_degrevlex: return compare_grevlex(a, b, 0, max_vars, true);
    case monomial_order::kind::block: {
      int c = compare_grevlex(a, b, 0, order_.block_size, false);
      if (c != 0) return c;
      return compare_grevlex(a, b, order_.block_size, max_vars, true);
    }
  }
  return 0;
}

ring_ptr make_ring(context_ptr ctx, monomial_order order) {
  return std::make_shared<const poly_ring>(std::move(ctx), order);
}

}  // namespace fsplit
