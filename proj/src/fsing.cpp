#include "fsplit/fsing.hpp"

#include <algorithm>
#include <future>
#include <map>

namespace fsplit {

const char* const gorenstein_hypothesis_note =
    "fpt(m) = -a(R) characterizes quasi-Gorenstein rings among F-pure normal standard graded domains whose "
    "anti-canonical cover is Noetherian; that hypothesis is not checked here";

std::string to_string(verdict_kind v) {
  switch (v) {
    case verdict_kind::quasi_gorenstein: return "quasi-Gorenstein";
    case verdict_kind::not_quasi_gorenstein: return "not-quasi-Gorenstein";
    case verdict_kind::inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

namespace {

std::uint64_t frobenius_q(std::uint32_t p, int e) {
  if (e < 0) throw usage_error("e must be nonnegative");
  std::uint64_t q = 1;
  for (int i = 0; i < e; ++i) {
    if (q > (monomial::max_exponent + 1ull) / p) throw resource_error("p^e exceeds the supported exponent range");
    q *= p;
  }
  return q;
}

void require_homogeneous(const ideal& I, const char* what) {
  if (!I.is_homogeneous()) throw usage_error(std::string(what) + " must be homogeneous");
}

}  // namespace

ideal fedder_colon(const ideal& I, std::uint64_t q, budget& steps) {
  if (I.is_zero()) return ideal::unit(I.context());
  ideal Iq = frobenius_power(I, q, steps);
  ideal J = colon(Iq, I, steps);
  return J;
}

bool fedder_fpure(const ideal& I, budget& steps) {
  require_homogeneous(I, "the defining ideal");
  if (I.is_unit(steps)) throw usage_error("the defining ideal is the unit ideal");
  std::uint64_t p = I.context()->characteristic();
  ideal J = fedder_colon(I, p, steps);
  return !ideal_in_monomial_ideal(J, monomial_ideal::frobenius_maximal(I.context(), p));
}

nu_value nu_from_colon(const ideal& J, std::uint64_t q) {
  const std::size_t n = J.context()->num_vars();
  std::int64_t best = -1;
  for (const auto& g : J.generators())
    for (const auto& t : g.terms()) {
      std::int64_t s = 0;
      bool escapes = true;
      for (std::size_t i = 0; i < n; ++i) {
        if (t.mono[i] >= q) {
          escapes = false;
          break;
        }
        s += static_cast<std::int64_t>(q - 1 - t.mono[i]);
      }
      if (escapes) best = std::max(best, s);
    }
  return best < 0 ? nu_value::not_f_pure() : nu_value(best);
}

nu_value nu_e_maximal(const ideal& I, int e, budget& steps) {
  require_homogeneous(I, "the defining ideal");
  if (e < 1) throw usage_error("e must be at least 1");
  if (I.is_unit(steps)) throw usage_error("the defining ideal is the unit ideal");
  std::uint64_t q = frobenius_q(I.context()->characteristic(), e);
  return nu_from_colon(fedder_colon(I, q, steps), q);
}

namespace {

// Row-echelon span of polynomials modulo m^[q]; rows keyed by leading monomial.
class truncated_span {
 public:
  truncated_span(ring_ptr ring, std::uint64_t q) : ring_(std::move(ring)), q_(q) {}

  polynomial truncate(const polynomial& f) const {
    std::vector<term> keep;
    const std::size_t n = ring_->num_vars();
    for (const auto& t : f.terms()) {
      bool inside = false;
      for (std::size_t i = 0; i < n && !inside; ++i) inside = t.mono[i] >= q_;
      if (!inside) keep.push_back(t);
    }
    return polynomial::from_sorted_terms(ring_, std::move(keep));
  }

  void insert(polynomial f, budget& steps) {
    f = truncate(f);
    while (!f.is_zero()) {
      auto it = rows_.find(f.lead().mono);
      if (it == rows_.end()) {
        rows_.emplace(f.lead().mono, f.monic());
        return;
      }
      f = f.sub_mul(f.lead().coeff, monomial{}, it->second);
      steps.spend();
    }
  }

  bool empty() const noexcept { return rows_.empty(); }
  std::vector<polynomial> basis() const {
    std::vector<polynomial> out;
    for (const auto& [m, f] : rows_) out.push_back(f);
    return out;
  }

 private:
  struct mono_less {
    bool operator()(const monomial& a, const monomial& b) const { return a.exponents() < b.exponents(); }
  };
  ring_ptr ring_;
  std::uint64_t q_;
  std::map<monomial, polynomial, mono_less> rows_;
};

}  // namespace

nu_value nu_e_general(const ideal& I, const ideal& a, int e, budget& steps) {
  require_homogeneous(I, "the defining ideal");
  require_homogeneous(a, "the ideal a");
  if (e < 1) throw usage_error("e must be at least 1");
  if (!I.context()->same_as(*a.context())) throw usage_error("I and a live in different rings");
  if (a.is_zero()) throw usage_error("the ideal a must be nonzero");
  if (a.is_unit(steps)) throw usage_error("the ideal a must be proper");
  if (!a.contains(I, steps)) throw usage_error("the ideal a must contain I");
  std::uint64_t q = frobenius_q(I.context()->characteristic(), e);
  ideal J = fedder_colon(I, q, steps);

  truncated_span current(J.ring(), q);
  for (const auto& g : J.generators()) current.insert(g, steps);
  if (current.empty()) return nu_value::not_f_pure();
  std::int64_t r = 0;
  for (;;) {
    truncated_span next(J.ring(), q);
    for (const auto& w : current.basis())
      for (const auto& f : a.generators()) next.insert(w * f, steps);
    if (next.empty()) return nu_value(r);
    ++r;
    current = std::move(next);
  }
}

nu_table compute_nu_table(const ideal& I, const std::optional<ideal>& a, int e_max, std::uint64_t step_limit,
                          unsigned threads) {
  if (e_max < 1) throw usage_error("e_max must be at least 1");
  nu_table table;
  table.p = I.context()->characteristic();
  auto row = [&](int e) {
    budget steps(step_limit);
    nu_value v = a ? nu_e_general(I, *a, e, steps) : nu_e_maximal(I, e, steps);
    return nu_row{e, static_cast<std::int64_t>(frobenius_q(table.p, e)), v};
  };
  if (threads <= 1) {
    for (int e = 1; e <= e_max; ++e) table.rows.push_back(row(e));
    return table;
  }
  // Warm the shared basis cache once so workers do not queue on it.
  {
    budget steps(step_limit);
    I.groebner_basis(steps);
  }
  std::vector<std::future<nu_row>> pending;
  for (int e = 1; e <= e_max; ++e) pending.push_back(std::async(std::launch::async, row, e));
  for (auto& f : pending) table.rows.push_back(f.get());
  return table;
}

fpt_estimate estimate_fpt(const nu_table& table, const std::optional<rational>& a_inv) {
  fpt_estimate est;
  est.evidence = table.rows;
  est.lower = 0;
  for (const auto& r : table.rows) {
    if (!r.nu.f_pure()) throw usage_error("NOT_F_PURE at e = " + std::to_string(r.e));
    rational v(r.nu.value(), r.q);
    v.canonicalize();
    if (v > est.lower) est.lower = v;
  }
  if (a_inv) est.upper = rational(-*a_inv);
  if (table.rows.size() >= 2) {
    const auto& last = table.rows[table.rows.size() - 1];
    const auto& prev = table.rows[table.rows.size() - 2];
    rational a(last.nu.value(), last.q - 1), b(prev.nu.value(), prev.q - 1);
    a.canonicalize();
    b.canonicalize();
    if (a == b) est.exact_candidate = a;
  }
  return est;
}

pair_test sharp_fpure_pair(const ideal& I, const std::optional<ideal>& a, const rational& t, int e, budget& steps) {
  if (t < 0) throw usage_error("t must be nonnegative");
  pair_test out{a ? nu_e_general(I, *a, e, steps) : nu_e_maximal(I, e, steps), 0, false};
  std::uint64_t q = frobenius_q(I.context()->characteristic(), e);
  out.required = ceil_int(rational(t * static_cast<long>(q - 1)));
  out.sharply_f_pure = out.nu.f_pure() && out.nu.value() >= out.required;
  return out;
}

omega_check omega_degree_check(const ideal& I, int e, budget& steps) {
  require_homogeneous(I, "the defining ideal");
  if (!I.context()->standard_graded()) throw usage_error("the omega degree check needs a standard grading");
  if (e < 1) throw usage_error("e must be at least 1");
  const auto& ctx = I.context();
  const std::int64_t n = static_cast<std::int64_t>(ctx->num_vars());
  std::uint64_t q = frobenius_q(ctx->characteristic(), e);

  omega_check out;
  ideal J = fedder_colon(I, q, steps);
  out.nu = nu_from_colon(J, q);
  if (!out.nu.f_pure()) return out;
  ideal Iq = I.is_zero() ? ideal::zero(ctx) : frobenius_power(I, q, steps);
  out.degrees = mingens_degrees(J, Iq, steps);
  out.target = n * static_cast<std::int64_t>(q - 1) - out.nu.value();
  out.target_found = std::find(out.degrees.begin(), out.degrees.end(), out.target) != out.degrees.end();
  if (out.degrees.empty()) return out;
  const std::int64_t least = out.degrees.front();
  out.containment = true;
  for (const auto& g : J.generators())
    for (const auto& t : g.terms()) {
      bool in_frobenius = false;
      for (std::int64_t i = 0; i < n && !in_frobenius; ++i) in_frobenius = t.mono[static_cast<std::size_t>(i)] >= q;
      if (!in_frobenius && t.mono.total_degree() < least) out.containment = false;
    }
  return out;
}

namespace {

// Smallest set of variables meeting the support of every monomial.
std::size_t min_hitting_set(const std::vector<std::uint32_t>& supports, std::uint32_t chosen, std::size_t size,
                            std::size_t best) {
  if (size >= best) return best;
  for (auto s : supports)
    if ((s & chosen) == 0) {
      for (std::uint32_t bits = s; bits; bits &= bits - 1) {
        std::uint32_t v = bits & (~bits + 1);
        best = min_hitting_set(supports, chosen | v, size + 1, best);
      }
      return best;
    }
  return size;
}

}  // namespace

std::size_t krull_dimension(const ideal& I, budget& steps) {
  const std::size_t n = I.context()->num_vars();
  if (I.is_unit(steps)) throw usage_error("the unit ideal has no dimension");
  std::vector<std::uint32_t> supports;
  for (const auto& g : I.groebner_basis(steps)) supports.push_back(g.lead().mono.support_mask());
  std::sort(supports.begin(), supports.end(),
            [](std::uint32_t a, std::uint32_t b) { return __builtin_popcount(a) < __builtin_popcount(b); });
  return n - min_hitting_set(supports, 0, 0, n + 1);
}

rational ci_a_invariant(const ideal& I, budget& steps) {
  require_homogeneous(I, "the defining ideal");
  const auto& ctx = I.context();
  const std::size_t codim = ctx->num_vars() - krull_dimension(I, steps);
  if (codim != I.generators().size())
    throw usage_error("generators do not form a regular sequence (codimension " + std::to_string(codim) + ", " +
                      std::to_string(I.generators().size()) + " generators); supply the a-invariant explicitly");
  std::int64_t a = 0;
  for (const auto& g : I.generators()) a += *g.degree();
  for (int w : ctx->weights()) a -= w;
  return rational(a);
}

gorenstein_verdict gorenstein_criterion(const fpt_estimate& est, const rational& a_inv) {
  gorenstein_verdict v;
  v.a_invariant = a_inv;
  v.hypothesis_note = gorenstein_hypothesis_note;
  const rational bound = -a_inv;
  // nu_e <= -a(R)(q-1) always; equality at a single e forces omega to be
  // principal, strict inequality rules it out.
  bool equality = false, strict = false, violated = false;
  for (const auto& r : est.evidence) {
    if (!r.nu.f_pure()) continue;
    rational cap = bound * static_cast<long>(r.q - 1);
    if (rational(r.nu.value()) == cap) equality = true;
    if (rational(r.nu.value()) < cap) strict = true;
    if (rational(r.nu.value()) > cap) violated = true;
  }
  if (violated || (est.upper && est.lower > *est.upper)) {
    v.verdict = verdict_kind::inconclusive;
    v.fpt = est.exact_candidate;
    v.hypothesis_note += "; the supplied a-invariant is inconsistent with the computed nu values";
  } else if (equality) {
    v.verdict = verdict_kind::quasi_gorenstein;
    v.fpt = bound;
  } else if (strict) {
    v.verdict = verdict_kind::not_quasi_gorenstein;
    v.fpt = est.exact_candidate;
  } else if (est.exact_candidate && *est.exact_candidate == bound) {
    v.verdict = verdict_kind::quasi_gorenstein;
    v.fpt = bound;
  } else if (est.exact_candidate && *est.exact_candidate < bound) {
    // The candidate is nu_e/(q-1) of a computed row, so that row is strict.
    v.verdict = verdict_kind::not_quasi_gorenstein;
    v.fpt = est.exact_candidate;
  } else {
    v.verdict = verdict_kind::inconclusive;
    v.fpt = est.exact_candidate;
  }
  return v;
}

}  // namespace fsplit
