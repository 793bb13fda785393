#include "fsplit/groebner.hpp"

#include <algorithm>

namespace fsplit {

namespace {

// rest - c * m * g_tail, where both leading terms have already cancelled.
std::vector<term> merge_reduction(const poly_ring& ring, std::span<const term> rest, std::span<const term> g_tail,
                                  prime_field::element c, const monomial& m) {
  const auto& f = ring.field();
  const auto neg_c = f.neg(c);
  std::vector<term> out;
  out.reserve(rest.size() + g_tail.size());
  std::size_t i = 0, j = 0;
  while (i < rest.size() && j < g_tail.size()) {
    monomial mb = g_tail[j].mono * m;
    int cmp = ring.compare(rest[i].mono, mb);
    if (cmp > 0) {
      out.push_back(rest[i++]);
    } else if (cmp < 0) {
      out.push_back({mb, f.mul(g_tail[j++].coeff, neg_c)});
    } else {
      auto v = f.add(rest[i].coeff, f.mul(g_tail[j].coeff, neg_c));
      if (v != 0) out.push_back({rest[i].mono, v});
      ++i;
      ++j;
    }
  }
  out.insert(out.end(), rest.begin() + static_cast<std::ptrdiff_t>(i), rest.end());
  for (; j < g_tail.size(); ++j) out.push_back({g_tail[j].mono * m, f.mul(g_tail[j].coeff, neg_c)});
  return out;
}

// Reduces h by monic reducers located through find(m) -> const polynomial* (or nullptr).
// With full = false only the leading term is reduced. on_step(reducer, multiplier)
// is invoked once per reduction step.
template <class Find, class OnStep>
polynomial reduce_with(const ring_ptr& ring, polynomial h, bool full, Find&& find, OnStep&& on_step) {
  std::vector<term> done;
  std::vector<term> cur = std::move(h).release_terms();
  std::size_t pos = 0;
  while (pos < cur.size()) {
    const term lt = cur[pos];
    const polynomial* g = find(lt.mono);
    if (g == nullptr) {
      if (!full) break;
      done.push_back(lt);
      ++pos;
      continue;
    }
    const monomial m = lt.mono / g->lead().mono;
    on_step(*g, m);
    auto g_terms = g->terms();
    cur = merge_reduction(*ring, std::span<const term>(cur).subspan(pos + 1), g_terms.subspan(1), lt.coeff, m);
    pos = 0;
  }
  if (done.empty()) {
    cur.erase(cur.begin(), cur.begin() + static_cast<std::ptrdiff_t>(pos));
    return polynomial::from_sorted_terms(ring, std::move(cur));
  }
  done.insert(done.end(), cur.begin() + static_cast<std::ptrdiff_t>(pos), cur.end());
  return polynomial::from_sorted_terms(ring, std::move(done));
}

const polynomial* find_in(std::span<const polynomial> basis, std::span<const std::uint32_t> masks,
                          const monomial& m) {
  const std::uint32_t mm = m.support_mask();
  const polynomial* best = nullptr;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (masks[i] & ~mm) continue;
    if (!basis[i].lead().mono.divides(m)) continue;
    if (best == nullptr || basis[i].size() < best->size()) best = &basis[i];
  }
  return best;
}

}  // namespace

groebner_builder::groebner_builder(ring_ptr ring, budget& steps) : ring_(std::move(ring)), budget_(&steps) {}

std::int64_t groebner_builder::sugar_of(const polynomial& f) const {
  return f.degree().value_or(0);
}

void groebner_builder::add(const polynomial& f) {
  if (f.is_zero()) return;
  if (f.ring_ptr_() != ring_ && !(f.ring().context().same_as(ring_->context())))
    throw usage_error("groebner_builder: generator from a different ring");
  polynomial g = f.ring_ptr_() == ring_ ? f : f.in_ring(ring_);
  inputs_.push_back({g, sugar_of(g)});
}

int groebner_builder::find_reducer(const monomial& m) const {
  const std::uint32_t mm = m.support_mask();
  int best = -1;
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    const auto& e = basis_[i];
    if (!e.active || (e.mask & ~mm)) continue;
    if (!e.lead.divides(m)) continue;
    if (best < 0 || e.poly.size() < basis_[static_cast<std::size_t>(best)].poly.size()) best = static_cast<int>(i);
  }
  return best;
}

polynomial groebner_builder::top_reduce(polynomial h, std::int64_t& sugar) const {
  const auto& ctx = ring_->context();
  const element* hit = nullptr;
  auto find = [&](const monomial& m) -> const polynomial* {
    int r = find_reducer(m);
    if (r < 0) return nullptr;
    hit = &basis_[static_cast<std::size_t>(r)];
    return &hit->poly;
  };
  auto step = [&](const polynomial&, const monomial& m) {
    budget_->spend();
    sugar = std::max(sugar, hit->sugar + ctx.weighted_degree(m));
  };
  if (!h.is_zero() && h.lead().coeff != 1) h = h.monic();
  return reduce_with(ring_, std::move(h), false, find, step);
}

polynomial groebner_builder::reduce(const polynomial& f) const {
  polynomial h = f.ring_ptr_() == ring_ ? f : f.in_ring(ring_);
  auto find = [&](const monomial& m) -> const polynomial* {
    int r = find_reducer(m);
    return r < 0 ? nullptr : &basis_[static_cast<std::size_t>(r)].poly;
  };
  return reduce_with(ring_, std::move(h), true, find, [&](const polynomial&, const monomial&) { budget_->spend(); });
}

polynomial groebner_builder::s_polynomial(const critical_pair& pr) const {
  const auto& gi = basis_[pr.i].poly;
  const auto& gj = basis_[pr.j].poly;
  const monomial mi = pr.lcm / basis_[pr.i].lead;
  const monomial mj = pr.lcm / basis_[pr.j].lead;
  std::vector<term> left;
  auto ti = gi.terms().subspan(1);
  left.reserve(ti.size());
  for (const auto& t : ti) left.push_back({t.mono * mi, t.coeff});
  // Both are monic, so the S-polynomial is mi*gi - mj*gj with leads cancelled.
  return polynomial::from_sorted_terms(ring_, merge_reduction(*ring_, left, gj.terms().subspan(1), 1, mj));
}

void groebner_builder::insert(polynomial h, std::int64_t sugar) {
  const auto& ctx = ring_->context();
  const auto k = static_cast<std::uint32_t>(basis_.size());
  const monomial lk = h.lead().mono;
  basis_.push_back({std::move(h), lk, lk.support_mask(), sugar, true});

  std::vector<critical_pair> fresh;
  for (std::uint32_t i = 0; i < k; ++i) {
    if (!basis_[i].active) continue;
    monomial l = lcm(basis_[i].lead, lk);
    std::int64_t s = std::max(basis_[i].sugar + ctx.weighted_degree(l / basis_[i].lead),
                              sugar + ctx.weighted_degree(l / lk));
    fresh.push_back({i, k, l, s});
  }

  // Chain criterion among the new pairs; equal lcms keep a single representative.
  std::vector<critical_pair> kept;
  for (std::size_t a = 0; a < fresh.size(); ++a) {
    const auto& p = fresh[a];
    bool keep = basis_[p.i].lead.coprime(lk);
    if (!keep) {
      keep = true;
      for (std::size_t b = a + 1; b < fresh.size() && keep; ++b)
        if (fresh[b].lcm.divides(p.lcm)) keep = false;
      for (std::size_t b = 0; b < kept.size() && keep; ++b)
        if (kept[b].lcm.divides(p.lcm)) keep = false;
    }
    if (keep) kept.push_back(p);
  }

  // Old pairs made redundant by the new leading monomial.
  std::erase_if(pairs_, [&](const critical_pair& p) {
    if (!lk.divides(p.lcm)) return false;
    return lcm(basis_[p.i].lead, lk) != p.lcm && lcm(basis_[p.j].lead, lk) != p.lcm;
  });
  for (auto& p : kept)
    if (!basis_[p.i].lead.coprime(lk)) pairs_.push_back(p);

  for (std::uint32_t i = 0; i < k; ++i)
    if (basis_[i].active && lk.divides(basis_[i].lead)) basis_[i].active = false;
}

void groebner_builder::complete(std::optional<std::int64_t> max_sugar) {
  const auto& ring = *ring_;
  for (;;) {
    int best_pair = -1;
    for (std::size_t i = 0; i < pairs_.size(); ++i) {
      const auto& p = pairs_[i];
      if (max_sugar && p.sugar > *max_sugar) continue;
      if (best_pair < 0) {
        best_pair = static_cast<int>(i);
        continue;
      }
      const auto& b = pairs_[static_cast<std::size_t>(best_pair)];
      if (p.sugar < b.sugar || (p.sugar == b.sugar && ring.less(p.lcm, b.lcm))) best_pair = static_cast<int>(i);
    }
    int best_input = -1;
    for (std::size_t i = 0; i < inputs_.size(); ++i) {
      const auto& p = inputs_[i];
      if (max_sugar && p.sugar > *max_sugar) continue;
      if (best_input < 0) {
        best_input = static_cast<int>(i);
        continue;
      }
      const auto& b = inputs_[static_cast<std::size_t>(best_input)];
      if (p.sugar < b.sugar || (p.sugar == b.sugar && ring.less(p.poly.lead().mono, b.poly.lead().mono)))
        best_input = static_cast<int>(i);
    }
    if (best_pair < 0 && best_input < 0) return;

    polynomial h(ring_);
    std::int64_t sugar = 0;
    bool take_input = best_input >= 0 &&
                      (best_pair < 0 || inputs_[static_cast<std::size_t>(best_input)].sugar <=
                                            pairs_[static_cast<std::size_t>(best_pair)].sugar);
    if (take_input) {
      auto it = inputs_.begin() + best_input;
      h = std::move(it->poly);
      sugar = it->sugar;
      inputs_.erase(it);
    } else {
      auto it = pairs_.begin() + best_pair;
      critical_pair pr = *it;
      pairs_.erase(it);
      h = s_polynomial(pr);
      sugar = pr.sugar;
      budget_->spend();
    }
    h = top_reduce(std::move(h), sugar);
    if (!h.is_zero()) insert(h.monic(), sugar);
  }
}

std::vector<polynomial> groebner_builder::reduced_basis() const {
  std::vector<const element*> active;
  for (const auto& e : basis_)
    if (e.active) active.push_back(&e);
  std::sort(active.begin(), active.end(),
            [this](const element* a, const element* b) { return ring_->less(a->lead, b->lead); });
  std::vector<polynomial> minimal;
  std::vector<std::uint32_t> masks;
  for (const element* e : active) {
    bool redundant = false;
    for (const auto& g : minimal)
      if (g.lead().mono.divides(e->lead)) {
        redundant = true;
        break;
      }
    if (!redundant) {
      minimal.push_back(e->poly);
      masks.push_back(e->mask);
    }
  }
  std::vector<polynomial> out;
  out.reserve(minimal.size());
  for (const auto& g : minimal) {
    auto terms = g.terms();
    polynomial tail = polynomial::from_sorted_terms(ring_, std::vector<term>(terms.begin() + 1, terms.end()));
    tail = reduce_with(
        ring_, std::move(tail), true, [&](const monomial& m) { return find_in(minimal, masks, m); },
        [&](const polynomial&, const monomial&) { budget_->spend(); });
    std::vector<term> full;
    full.reserve(tail.size() + 1);
    full.push_back(terms.front());
    auto rest = std::move(tail).release_terms();
    full.insert(full.end(), rest.begin(), rest.end());
    out.push_back(polynomial::from_sorted_terms(ring_, std::move(full)).monic());
  }
  return out;
}

std::vector<polynomial> buchberger(std::span<const polynomial> gens, const ring_ptr& ring, budget& steps) {
  groebner_builder b(ring, steps);
  for (const auto& g : gens) b.add(g);
  b.complete();
  return b.reduced_basis();
}

polynomial normal_form(const polynomial& f, std::span<const polynomial> basis, budget& steps) {
  if (basis.empty()) return f;
  const ring_ptr& ring = basis.front().ring_ptr_();
  std::vector<std::uint32_t> masks;
  masks.reserve(basis.size());
  std::vector<polynomial> monic;
  bool all_monic = true;
  for (const auto& g : basis) {
    masks.push_back(g.lead().mono.support_mask());
    all_monic &= g.lead().coeff == 1;
  }
  std::span<const polynomial> reducers = basis;
  if (!all_monic) {
    for (const auto& g : basis) monic.push_back(g.monic());
    reducers = monic;
  }
  polynomial h = f.ring_ptr_() == ring ? f : f.in_ring(ring);
  return reduce_with(
      ring, std::move(h), true, [&](const monomial& m) { return find_in(reducers, masks, m); },
      [&](const polynomial&, const monomial&) { steps.spend(); });
}

}  // namespace fsplit
