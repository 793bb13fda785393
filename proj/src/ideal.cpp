#include "fsplit/ideal.hpp"

#include <algorithm>
#include <numeric>

namespace fsplit {

ideal::ideal(context_ptr ctx, std::vector<polynomial> gens)
    : ctx_(std::move(ctx)), ring_(make_ring(ctx_)), cache_(std::make_shared<cache>()) {
  gens_.reserve(gens.size());
  for (auto& g : gens) {
    if (!g.ring().context().same_as(*ctx_)) throw usage_error("ideal generator from a different ring");
    if (g.is_zero()) continue;
    gens_.push_back(g.ring_ptr_() == ring_ ? std::move(g) : g.in_ring(ring_));
  }
}

ideal ideal::unit(context_ptr ctx) {
  auto r = make_ring(ctx);
  return ideal(std::move(ctx), {polynomial::constant(r, 1)});
}

ideal ideal::maximal(context_ptr ctx) {
  auto r = make_ring(ctx);
  std::vector<polynomial> gens;
  for (std::size_t i = 0; i < ctx->num_vars(); ++i) gens.push_back(polynomial::variable(r, i));
  return ideal(std::move(ctx), std::move(gens));
}

bool ideal::is_homogeneous() const noexcept {
  return std::all_of(gens_.begin(), gens_.end(), [](const polynomial& g) { return g.is_homogeneous(); });
}

bool ideal::has_cached_basis(const monomial_order& order) const {
  std::lock_guard lock(cache_->mu);
  return cache_->bases.count(order) != 0;
}

const std::vector<polynomial>& ideal::groebner_basis(const monomial_order& order, budget& steps) const {
  std::lock_guard lock(cache_->mu);
  auto it = cache_->bases.find(order);
  if (it != cache_->bases.end()) return it->second;
  auto ring = order == monomial_order::weighted_degrevlex() ? ring_ : make_ring(ctx_, order);
  auto basis = buchberger(gens_, ring, steps);
  return cache_->bases.emplace(order, std::move(basis)).first->second;
}

const std::vector<polynomial>& ideal::groebner_basis() const {
  budget steps;
  return groebner_basis(monomial_order::weighted_degrevlex(), steps);
}

void ideal::seed_basis(const monomial_order& order, std::vector<polynomial> basis) const {
  std::lock_guard lock(cache_->mu);
  cache_->bases.emplace(order, std::move(basis));
}

polynomial ideal::normal_form(const polynomial& f, budget& steps) const {
  const auto& gb = groebner_basis(steps);
  polynomial g = f.ring_ptr_() == ring_ ? f : f.in_ring(ring_);
  return fsplit::normal_form(g, gb, steps);
}

bool ideal::contains(const polynomial& f, budget& steps) const { return normal_form(f, steps).is_zero(); }

bool ideal::contains(const polynomial& f) const {
  budget steps;
  return contains(f, steps);
}

bool ideal::contains(const ideal& other, budget& steps) const {
  for (const auto& g : other.generators())
    if (!contains(g, steps)) return false;
  return true;
}

bool ideal::is_unit(budget& steps) const {
  const auto& gb = groebner_basis(steps);
  return gb.size() == 1 && gb.front().is_constant() && !gb.front().is_zero();
}

monomial_ideal::monomial_ideal(context_ptr ctx, std::vector<monomial> gens) : ctx_(std::move(ctx)) {
  std::sort(gens.begin(), gens.end(),
            [](const monomial& a, const monomial& b) { return a.total_degree() < b.total_degree(); });
  for (const auto& m : gens) {
    bool redundant = std::any_of(gens_.begin(), gens_.end(), [&](const monomial& g) { return g.divides(m); });
    if (!redundant) gens_.push_back(m);
  }
}

monomial_ideal monomial_ideal::frobenius_maximal(context_ptr ctx, std::uint64_t q) {
  std::vector<monomial> gens;
  for (std::size_t i = 0; i < ctx->num_vars(); ++i) {
    monomial m;
    m.set(i, static_cast<std::uint32_t>(std::min<std::uint64_t>(q, monomial::max_exponent + 1ull)));
    gens.push_back(m);
  }
  return monomial_ideal(std::move(ctx), std::move(gens));
}

bool monomial_ideal::contains(const monomial& m) const noexcept {
  return std::any_of(gens_.begin(), gens_.end(), [&](const monomial& g) { return g.divides(m); });
}

ideal frobenius_power(const ideal& I, std::uint64_t q, budget& steps) {
  std::vector<polynomial> gens;
  for (const auto& g : I.generators()) gens.push_back(frobenius_power(g, q));
  ideal out(I.context(), std::move(gens));
  // Leading terms commute with Frobenius and S is free over S^q on the
  // monomials with exponents < q, so q-th powers of a reduced basis form the
  // reduced basis of I^[q].
  std::vector<polynomial> basis;
  for (const auto& g : I.groebner_basis(steps)) basis.push_back(frobenius_power(g, q));
  out.seed_basis(monomial_order::weighted_degrevlex(), std::move(basis));
  return out;
}

ideal sum(const ideal& I, const ideal& J) {
  if (!I.context()->same_as(*J.context())) throw usage_error("sum of ideals in different rings");
  auto gens = I.generators();
  gens.insert(gens.end(), J.generators().begin(), J.generators().end());
  return ideal(I.context(), std::move(gens));
}

context_ptr prepend_variables(const context_ptr& ctx, std::size_t extra) {
  if (ctx->num_vars() + extra > max_vars)
    throw resource_error("auxiliary variables would exceed " + std::to_string(max_vars) + " variables");
  std::vector<std::string> names;
  std::vector<int> weights;
  for (std::size_t i = 0; i < extra; ++i) {
    names.push_back("_aux" + std::to_string(i));
    weights.push_back(1);
  }
  names.insert(names.end(), ctx->names().begin(), ctx->names().end());
  weights.insert(weights.end(), ctx->weights().begin(), ctx->weights().end());
  return ring_context::make(ctx->characteristic(), std::move(names), std::move(weights));
}

namespace {

std::vector<std::size_t> shift_map(std::size_t n, std::size_t by) {
  std::vector<std::size_t> m(n);
  std::iota(m.begin(), m.end(), by);
  return m;
}

// Eliminates the first k variables of `big` generated by gens, mapping the
// survivors into `small` (the context of the last n-k variables).
ideal eliminate_into(const context_ptr& big, std::vector<polynomial> gens, std::size_t k, const context_ptr& small,
                     budget& steps) {
  auto block = make_ring(big, monomial_order::block(static_cast<std::uint32_t>(k)));
  for (auto& g : gens) g = g.in_ring(block);
  auto basis = buchberger(gens, block, steps);
  auto target = make_ring(small);
  const std::size_t n = big->num_vars();
  std::vector<polynomial> kept;
  for (const auto& g : basis) {
    bool free_of_block = true;
    for (const auto& t : g.terms()) {
      for (std::size_t i = 0; i < k && free_of_block; ++i)
        if (t.mono[i] != 0) free_of_block = false;
      if (!free_of_block) break;
    }
    if (!free_of_block) continue;
    std::vector<term> terms;
    terms.reserve(g.size());
    for (const auto& t : g.terms()) {
      monomial m;
      for (std::size_t i = k; i < n; ++i)
        if (t.mono[i]) m.set(i - k, t.mono[i]);
      terms.push_back({m, t.coeff});
    }
    kept.push_back(polynomial(target, std::move(terms)));
  }
  ideal out(small, kept);
  // The block order restricted to the survivors is weighted degrevlex, so
  // they already form its reduced basis.
  std::sort(kept.begin(), kept.end(),
            [&](const polynomial& a, const polynomial& b) { return target->less(a.lead().mono, b.lead().mono); });
  out.seed_basis(monomial_order::weighted_degrevlex(), std::move(kept));
  return out;
}

}  // namespace

ideal eliminate(const ideal& I, std::size_t k, budget& steps) {
  const auto& ctx = I.context();
  const std::size_t n = ctx->num_vars();
  if (k >= n) throw usage_error("eliminate: must keep at least one variable");
  std::vector<std::string> names(ctx->names().begin() + static_cast<std::ptrdiff_t>(k), ctx->names().end());
  std::vector<int> weights(ctx->weights().begin() + static_cast<std::ptrdiff_t>(k), ctx->weights().end());
  auto small = ring_context::make(ctx->characteristic(), std::move(names), std::move(weights));
  return eliminate_into(ctx, I.generators(), k, small, steps);
}

ideal intersect(const ideal& I, const ideal& J, budget& steps) {
  const auto& ctx = I.context();
  if (!ctx->same_as(*J.context())) throw usage_error("intersection of ideals in different rings");
  if (I.is_zero() || J.is_zero()) return ideal::zero(ctx);
  auto big = prepend_variables(ctx, 1);
  auto r = make_ring(big);
  auto map = shift_map(ctx->num_vars(), 1);
  auto t = polynomial::variable(r, 0);
  auto one_minus_t = polynomial::constant(r, 1) - t;
  std::vector<polynomial> gens;
  for (const auto& g : I.generators()) gens.push_back(t * remap(g, r, map));
  for (const auto& h : J.generators()) gens.push_back(one_minus_t * remap(h, r, map));
  return eliminate_into(big, std::move(gens), 1, ctx, steps);
}

ideal saturate(const ideal& I, const polynomial& f, budget& steps) {
  const auto& ctx = I.context();
  if (!f.ring().context().same_as(*ctx)) throw usage_error("saturate: polynomial from a different ring");
  if (f.is_zero()) return ideal::unit(ctx);
  auto big = prepend_variables(ctx, 1);
  auto r = make_ring(big);
  auto map = shift_map(ctx->num_vars(), 1);
  std::vector<polynomial> gens;
  for (const auto& g : I.generators()) gens.push_back(remap(g, r, map));
  gens.push_back(polynomial::constant(r, 1) - polynomial::variable(r, 0) * remap(f, r, map));
  return eliminate_into(big, std::move(gens), 1, ctx, steps);
}

ideal colon(const ideal& I, const polynomial& f, budget& steps) {
  const auto& ctx = I.context();
  if (f.is_zero()) return ideal::unit(ctx);
  polynomial g = f.in_ring(I.ring());
  if (I.contains(g, steps)) return ideal::unit(ctx);
  ideal meet = intersect(I, ideal(ctx, {g}), steps);
  std::vector<polynomial> quotients;
  for (const auto& h : meet.generators()) quotients.push_back(exact_divide(h, g));
  return ideal(ctx, std::move(quotients));
}

ideal colon(const ideal& I, const ideal& J, budget& steps) {
  if (!I.context()->same_as(*J.context())) throw usage_error("colon of ideals in different rings");
  std::optional<ideal> acc;
  for (const auto& f : J.generators()) {
    ideal q = colon(I, f, steps);
    if (q.is_unit(steps)) continue;
    acc = acc ? intersect(*acc, q, steps) : q;
  }
  if (J.is_zero() || !acc) return ideal::unit(I.context());
  return *acc;
}

std::vector<std::int64_t> mingens_degrees(const ideal& J, const ideal& Iq, budget& steps) {
  if (!J.is_homogeneous() || !Iq.is_homogeneous()) throw usage_error("mingens_degrees needs homogeneous ideals");
  if (!J.context()->same_as(*Iq.context())) throw usage_error("mingens_degrees: ideals in different rings");
  std::vector<std::size_t> order(J.generators().size());
  std::iota(order.begin(), order.end(), 0);
  const auto& gens = J.generators();
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return *gens[a].degree() < *gens[b].degree(); });

  groebner_builder builder(J.ring(), steps);
  const auto& seed = Iq.has_cached_basis(monomial_order::weighted_degrevlex()) ? Iq.groebner_basis(steps)
                                                                                 : Iq.generators();
  for (const auto& g : seed) builder.add(g);
  std::vector<std::int64_t> degrees;
  for (std::size_t idx : order) {
    const auto& g = gens[idx];
    std::int64_t d = *g.degree();
    builder.complete(d);
    if (builder.reduce(g).is_zero()) continue;
    builder.add(g);
    degrees.push_back(d);
  }
  return degrees;
}

bool ideal_in_monomial_ideal(const ideal& I, const monomial_ideal& M) {
  for (const auto& g : I.generators())
    for (const auto& t : g.terms())
      if (!M.contains(t.mono)) return false;
  return true;
}

bool same_ideal(const ideal& I, const ideal& J, budget& steps) { return I.contains(J, steps) && J.contains(I, steps); }

}  // namespace fsplit
