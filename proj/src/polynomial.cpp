#include "fsplit/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

namespace fsplit {

void polynomial::check_same_ring(const polynomial& other) const {
  if (ring_ == other.ring_) return;
  if (!ring_->context().same_as(other.ring_->context()) || ring_->order() != other.ring_->order())
    throw usage_error("polynomials live in different rings");
}

polynomial::polynomial(ring_ptr ring, std::vector<term> terms) : ring_(std::move(ring)) {
  const auto& r = *ring_;
  std::sort(terms.begin(), terms.end(),
            [&r](const term& a, const term& b) { return r.compare(a.mono, b.mono) > 0; });
  const auto& f = r.field();
  for (auto& t : terms) {
    if (!terms_.empty() && terms_.back().mono == t.mono) {
      terms_.back().coeff = f.add(terms_.back().coeff, t.coeff);
      if (terms_.back().coeff == 0) terms_.pop_back();
    } else if (t.coeff != 0) {
      terms_.push_back(t);
    }
  }
}

polynomial polynomial::constant(ring_ptr ring, std::int64_t c) {
  auto v = ring->field().reduce(c);
  polynomial p(std::move(ring));
  if (v != 0) p.terms_.push_back({monomial{}, v});
  return p;
}

polynomial polynomial::variable(ring_ptr ring, std::size_t i) {
  if (i >= ring->num_vars()) throw usage_error("variable index out of range");
  monomial m;
  m.set(i, 1);
  return from_monomial(std::move(ring), m, 1);
}

polynomial polynomial::from_monomial(ring_ptr ring, const monomial& m, prime_field::element c) {
  polynomial p(std::move(ring));
  c = p.ring_->field().reduce(c);
  if (c != 0) p.terms_.push_back({m, c});
  return p;
}

polynomial polynomial::from_sorted_terms(ring_ptr ring, std::vector<term> terms) {
  polynomial p(std::move(ring));
  p.terms_ = std::move(terms);
  return p;
}

std::optional<std::int64_t> polynomial::degree() const noexcept {
  if (terms_.empty()) return std::nullopt;
  std::int64_t d = ring_->context().weighted_degree(terms_.front().mono);
  for (const auto& t : terms_) d = std::max(d, ring_->context().weighted_degree(t.mono));
  return d;
}

bool polynomial::is_homogeneous() const noexcept {
  if (terms_.empty()) return true;
  std::int64_t d = ring_->context().weighted_degree(terms_.front().mono);
  for (const auto& t : terms_)
    if (ring_->context().weighted_degree(t.mono) != d) return false;
  return true;
}

polynomial polynomial::monic() const {
  if (terms_.empty() || terms_.front().coeff == 1) return *this;
  return scaled(ring_->field().inv(terms_.front().coeff));
}

polynomial polynomial::scaled(prime_field::element c) const {
  polynomial r(ring_);
  if (c == 0) return r;
  r.terms_.reserve(terms_.size());
  const auto& f = ring_->field();
  for (const auto& t : terms_) r.terms_.push_back({t.mono, f.mul(t.coeff, c)});
  return r;
}

polynomial polynomial::times_term(const monomial& m, prime_field::element c) const {
  polynomial r(ring_);
  if (c == 0) return r;
  r.terms_.reserve(terms_.size());
  const auto& f = ring_->field();
  for (const auto& t : terms_) r.terms_.push_back({t.mono * m, f.mul(t.coeff, c)});
  return r;
}

polynomial polynomial::in_ring(ring_ptr target) const {
  if (!target->context().same_as(ring_->context())) throw usage_error("in_ring requires the same context");
  if (target == ring_) return *this;
  return polynomial(std::move(target), terms_);
}

polynomial polynomial::operator-() const {
  polynomial r(ring_);
  r.terms_.reserve(terms_.size());
  const auto& f = ring_->field();
  for (const auto& t : terms_) r.terms_.push_back({t.mono, f.neg(t.coeff)});
  return r;
}

namespace {

// Merge a + s*b where s is a field scalar (s = 1 for add, p-1 for sub).
std::vector<term> merge_scaled(const poly_ring& ring, std::span<const term> a, std::span<const term> b,
                               prime_field::element s, const monomial* shift) {
  const auto& f = ring.field();
  std::vector<term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    monomial mb = shift ? b[j].mono * *shift : b[j].mono;
    int c = ring.compare(a[i].mono, mb);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back({mb, f.mul(b[j++].coeff, s)});
    } else {
      auto v = f.add(a[i].coeff, f.mul(b[j].coeff, s));
      if (v != 0) out.push_back({a[i].mono, v});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) out.push_back({shift ? b[j].mono * *shift : b[j].mono, f.mul(b[j].coeff, s)});
  return out;
}

}  // namespace

polynomial polynomial::sub_mul(prime_field::element c, const monomial& m, const polynomial& g) const {
  polynomial r(ring_);
  r.terms_ = merge_scaled(*ring_, terms_, g.terms_, ring_->field().neg(c), &m);
  return r;
}

polynomial operator+(const polynomial& a, const polynomial& b) {
  a.check_same_ring(b);
  polynomial r(a.ring_);
  r.terms_ = merge_scaled(*a.ring_, a.terms_, b.terms_, 1, nullptr);
  return r;
}

polynomial operator-(const polynomial& a, const polynomial& b) {
  a.check_same_ring(b);
  polynomial r(a.ring_);
  r.terms_ = merge_scaled(*a.ring_, a.terms_, b.terms_, a.ring_->field().neg(1), nullptr);
  return r;
}

polynomial operator*(const polynomial& a, const polynomial& b) {
  a.check_same_ring(b);
  if (a.is_zero() || b.is_zero()) return polynomial(a.ring_);
  const auto& f = a.ring_->field();
  std::unordered_map<monomial, prime_field::element, monomial_hash> acc;
  acc.reserve(a.size() * b.size());
  for (const auto& s : a.terms_)
    for (const auto& t : b.terms_) {
      auto& slot = acc[s.mono * t.mono];
      slot = f.add(slot, f.mul(s.coeff, t.coeff));
    }
  std::vector<term> terms;
  terms.reserve(acc.size());
  for (const auto& [m, c] : acc)
    if (c != 0) terms.push_back({m, c});
  return polynomial(a.ring_, std::move(terms));
}

bool operator==(const polynomial& a, const polynomial& b) {
  if (!a.ring_->context().same_as(b.ring_->context())) return false;
  if (a.terms_.size() != b.terms_.size()) return false;
  if (a.ring_->order() == b.ring_->order()) {
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
      if (a.terms_[i].mono != b.terms_[i].mono || a.terms_[i].coeff != b.terms_[i].coeff) return false;
    return true;
  }
  return a == b.in_ring(a.ring_);
}

std::string polynomial::to_string() const {
  if (terms_.empty()) return "0";
  const auto& ctx = ring_->context();
  const auto p = ctx.characteristic();
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    // Coefficients above p/2 print as negatives.
    bool negative = p > 2 && t.coeff > p / 2;
    auto c = negative ? p - t.coeff : t.coeff;
    if (first) os << (negative ? "-" : "");
    else os << (negative ? " - " : " + ");
    first = false;
    bool one = t.mono.is_one();
    if (c != 1 || one) {
      os << c;
      if (!one) os << '*';
    }
    bool first_var = true;
    for (std::size_t i = 0; i < ctx.num_vars(); ++i) {
      if (t.mono[i] == 0) continue;
      if (!first_var) os << '*';
      first_var = false;
      os << ctx.names()[i];
      if (t.mono[i] > 1) os << '^' << t.mono[i];
    }
  }
  return os.str();
}

polynomial pow(const polynomial& f, std::uint64_t k) {
  polynomial result = polynomial::constant(f.ring_ptr_(), 1);
  polynomial base = f;
  while (k) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return result;
}

bool is_power_of(std::uint64_t q, std::uint64_t p, int* e) {
  int k = 0;
  if (q == 0 || p < 2) return false;
  while (q % p == 0) {
    q /= p;
    ++k;
  }
  if (e) *e = k;
  return q == 1;
}

polynomial frobenius_power(const polynomial& f, std::uint64_t q) {
  if (!is_power_of(q, f.ring().context().characteristic()))
    throw usage_error(std::to_string(q) + " is not a power of the characteristic");
  // c^q = c in F_p, and the q-th power map is additive, so the order is preserved
  // term by term (m1 > m2 implies m1^q > m2^q).
  std::vector<term> terms;
  terms.reserve(f.size());
  for (const auto& t : f.terms()) terms.push_back({t.mono.pow(q), t.coeff});
  return polynomial(f.ring_ptr_(), std::move(terms));
}

polynomial exact_divide(const polynomial& f, const polynomial& g) {
  if (g.is_zero()) throw usage_error("division by the zero polynomial");
  const auto& field = f.ring().field();
  auto inv_lead = field.inv(g.lead().coeff);
  polynomial rem = f;
  std::vector<term> quotient;
  while (!rem.is_zero()) {
    const auto& lt = rem.lead();
    if (!g.lead().mono.divides(lt.mono)) throw usage_error("exact_divide: divisor does not divide");
    monomial m = lt.mono / g.lead().mono;
    auto c = field.mul(lt.coeff, inv_lead);
    quotient.push_back({m, c});
    rem = rem.sub_mul(c, m, g);
  }
  return polynomial(f.ring_ptr_(), std::move(quotient));
}

polynomial remap(const polynomial& f, const ring_ptr& target, std::span<const std::size_t> var_map) {
  const auto n = f.ring().num_vars();
  if (var_map.size() != n) throw usage_error("remap: variable map has the wrong length");
  if (target->field().characteristic() != f.ring().field().characteristic())
    throw usage_error("remap: characteristic mismatch");
  std::vector<term> terms;
  terms.reserve(f.size());
  for (const auto& t : f.terms()) {
    monomial m;
    for (std::size_t i = 0; i < n; ++i)
      if (t.mono[i]) m.set(var_map[i], t.mono[i]);
    terms.push_back({m, t.coeff});
  }
  return polynomial(target, std::move(terms));
}

}  // namespace fsplit
