#include "oracle.hpp"

#include <algorithm>
#include <numeric>
#include <bitset>
#include <set>
#include <stdexcept>

namespace oracle {

std::uint64_t field::inv(std::uint64_t a) const {
  // Fermat: a^(p-2).
  std::uint64_t r = 1, b = a % p, e = p - 2;
  while (e) {
    if (e & 1) r = mul(r, b);
    b = mul(b, b);
    e >>= 1;
  }
  return r;
}

int space::degree(const exponent& e) const {
  int d = 0;
  for (std::size_t i = 0; i < e.size(); ++i) d += e[i] * (weights.empty() ? 1 : weights[i]);
  return d;
}

std::vector<exponent> space::monomials(int d) const {
  std::vector<exponent> out;
  exponent e(n, 0);
  auto rec = [&](auto&& self, std::size_t i, int left) -> void {
    if (i == n) {
      if (left == 0) out.push_back(e);
      return;
    }
    int w = weights.empty() ? 1 : weights[i];
    for (int k = 0; k * w <= left; ++k) {
      e[i] = k;
      self(self, i + 1, left - k * w);
    }
    e[i] = 0;
  };
  if (d >= 0) rec(rec, 0, d);
  return out;
}

poly space::mul(const poly& a, const poly& b) const {
  poly out;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) {
      exponent e(n);
      for (std::size_t i = 0; i < n; ++i) e[i] = ea[i] + eb[i];
      auto& slot = out[e];
      slot = f.add(slot, f.mul(ca, cb));
      if (slot == 0) out.erase(e);
    }
  return out;
}

poly space::scale_mono(const poly& a, const exponent& m) const {
  poly out;
  for (const auto& [e, c] : a) {
    exponent x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = e[i] + m[i];
    out[x] = c;
  }
  return out;
}

bool space::homogeneous(const poly& a) const {
  std::set<int> ds;
  for (const auto& [e, c] : a) ds.insert(degree(e));
  return ds.size() <= 1;
}

std::optional<int> space::degree(const poly& a) const {
  std::optional<int> d;
  for (const auto& [e, c] : a) d = std::max(d.value_or(0), degree(e));
  return d;
}

namespace {

// Row echelon form keyed by leading exponent; rows are monic.
class echelon {
 public:
  explicit echelon(const field& f) : f_(f) {}

  poly reduce(poly v) const {
    poly rem;
    while (!v.empty()) {
      auto it = v.begin();
      auto row = rows_.find(it->first);
      if (row == rows_.end()) {
        rem.insert(*it);
        v.erase(it);
        continue;
      }
      std::uint64_t c = it->second;
      for (const auto& [e, x] : row->second) {
        auto& slot = v[e];
        slot = f_.sub(slot, f_.mul(c, x));
        if (slot == 0) v.erase(e);
      }
    }
    return rem;
  }

  bool insert(const poly& v) {
    poly r = reduce(v);
    if (r.empty()) return false;
    std::uint64_t inv = f_.inv(r.begin()->second);
    for (auto& [e, c] : r) c = f_.mul(c, inv);
    exponent lead = r.begin()->first;
    rows_.emplace(std::move(lead), std::move(r));
    return true;
  }

  std::size_t size() const { return rows_.size(); }
  std::vector<poly> basis() const {
    std::vector<poly> out;
    for (const auto& [e, r] : rows_) out.push_back(r);
    return out;
  }

 private:
  field f_;
  std::map<exponent, poly, std::greater<exponent>> rows_;
};

// Span of the degree-d multiples of homogeneous generators.
echelon degree_span(const space& s, const std::vector<poly>& gens, int d) {
  echelon E(s.f);
  for (const auto& g : gens) {
    auto dg = s.degree(g);
    if (!dg) continue;
    for (const auto& m : s.monomials(d - *dg)) E.insert(s.scale_mono(g, m));
  }
  return E;
}

// Nullspace of a dense matrix over F_p.
std::vector<std::vector<std::uint64_t>> nullspace(const field& f, std::vector<std::vector<std::uint64_t>> A,
                                                  std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < A.size(); ++c) {
    std::size_t piv = r;
    while (piv < A.size() && A[piv][c] == 0) ++piv;
    if (piv == A.size()) continue;
    std::swap(A[piv], A[r]);
    std::uint64_t inv = f.inv(A[r][c]);
    for (auto& x : A[r]) x = f.mul(x, inv);
    for (std::size_t i = 0; i < A.size(); ++i) {
      if (i == r || A[i][c] == 0) continue;
      std::uint64_t k = A[i][c];
      for (std::size_t j = 0; j < cols; ++j) A[i][j] = f.sub(A[i][j], f.mul(k, A[r][j]));
    }
    pivots.push_back(c);
    ++r;
  }
  std::vector<std::vector<std::uint64_t>> out;
  for (std::size_t free = 0; free < cols; ++free) {
    if (std::find(pivots.begin(), pivots.end(), free) != pivots.end()) continue;
    std::vector<std::uint64_t> v(cols, 0);
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = f.sub(0, A[i][free]);
    out.push_back(std::move(v));
  }
  return out;
}

bool escapes(const exponent& e, std::uint64_t q) {
  return std::all_of(e.begin(), e.end(), [&](int x) { return static_cast<std::uint64_t>(x) < q; });
}

poly truncate(const poly& a, std::uint64_t q) {
  poly out;
  for (const auto& [e, c] : a)
    if (escapes(e, q)) out.emplace(e, c);
  return out;
}

}  // namespace

tri bf_member(const space& s, const poly& f, const std::vector<poly>& gens, int D) {
  echelon E(s.f);
  for (const auto& g : gens) {
    auto dg = s.degree(g);
    if (!dg) continue;
    for (int d = 0; d + *dg <= D; ++d)
      for (const auto& m : s.monomials(d)) E.insert(s.scale_mono(g, m));
  }
  if (E.reduce(f).empty()) return tri::yes;
  bool homogeneous = std::all_of(gens.begin(), gens.end(), [&](const poly& g) { return s.homogeneous(g); });
  if (homogeneous && D >= s.degree(f).value_or(0)) return tri::no;
  return tri::indeterminate;
}

std::vector<poly> bf_colon_degree(const space& s, const std::vector<poly>& I, const std::vector<poly>& J, int d) {
  auto M = s.monomials(d);
  std::vector<poly> nonzero_J;
  for (const auto& g : J)
    if (!g.empty()) nonzero_J.push_back(g);
  if (nonzero_J.empty()) {
    std::vector<poly> out;
    for (const auto& m : M) out.push_back(poly{{m, 1}});
    return out;
  }
  // Coordinates of the remainders m*g mod I, stacked over the generators g.
  std::map<std::pair<std::size_t, exponent>, std::size_t> row_of;
  std::vector<std::vector<std::pair<std::size_t, std::uint64_t>>> col_entries(M.size());
  for (std::size_t gi = 0; gi < nonzero_J.size(); ++gi) {
    const auto& g = nonzero_J[gi];
    echelon E = degree_span(s, I, d + *s.degree(g));
    for (std::size_t mi = 0; mi < M.size(); ++mi) {
      poly r = E.reduce(s.scale_mono(g, M[mi]));
      for (const auto& [e, c] : r) {
        auto key = std::make_pair(gi, e);
        auto it = row_of.find(key);
        if (it == row_of.end()) it = row_of.emplace(key, row_of.size()).first;
        col_entries[mi].push_back({it->second, c});
      }
    }
  }
  std::vector<std::vector<std::uint64_t>> A(row_of.size(), std::vector<std::uint64_t>(M.size(), 0));
  for (std::size_t mi = 0; mi < M.size(); ++mi)
    for (const auto& [r, c] : col_entries[mi]) A[r][mi] = c;
  std::vector<poly> out;
  for (const auto& v : nullspace(s.f, std::move(A), M.size())) {
    poly p;
    for (std::size_t mi = 0; mi < M.size(); ++mi)
      if (v[mi]) p[M[mi]] = v[mi];
    out.push_back(std::move(p));
  }
  return out;
}

std::vector<poly> bf_colon_capped(const space& s, const std::vector<poly>& I, const std::vector<poly>& J, int D) {
  std::vector<poly> out;
  for (int d = 0; d <= D; ++d) {
    auto part = bf_colon_degree(s, I, J, d);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

std::vector<poly> frobenius(const space& s, const std::vector<poly>& I, std::uint64_t q) {
  std::vector<poly> out;
  for (const auto& g : I) {
    poly h;
    for (const auto& [e, c] : g) {
      exponent x(s.n);
      for (std::size_t i = 0; i < s.n; ++i) x[i] = e[i] * static_cast<int>(q);
      h[x] = c;
    }
    out.push_back(std::move(h));
  }
  return out;
}

std::optional<nu_result> bf_nu(const space& s, const std::vector<poly>& I, const std::vector<poly>& a,
                               std::uint64_t q) {
  int total_weight = 0;
  for (std::size_t i = 0; i < s.n; ++i) total_weight += s.weights.empty() ? 1 : s.weights[i];
  // Beyond this degree every monomial lies in m^[q].
  const int D = static_cast<int>(q - 1) * total_weight;
  auto Iq = frobenius(s, I, q);
  echelon cur(s.f);
  bool zero_ideal = std::all_of(I.begin(), I.end(), [](const poly& g) { return g.empty(); });
  if (zero_ideal) {
    // (0 : 0) is the whole ring.
    cur.insert(poly{{exponent(s.n, 0), 1}});
  } else {
    for (const auto& g : bf_colon_capped(s, Iq, I, D)) cur.insert(truncate(g, q));
  }
  nu_result res;
  if (cur.size() == 0) return res;
  res.f_pure = true;
  long r = 0;
  while (true) {
    if (r > D) return std::nullopt;
    echelon next(s.f);
    for (const auto& v : cur.basis())
      for (const auto& g : a) next.insert(truncate(s.mul(g, v), q));
    if (next.size() == 0) break;
    cur = std::move(next);
    ++r;
  }
  res.nu = r;
  return res;
}

long bf_mingens_count(const space& s, const std::vector<poly>& I, std::uint64_t q, int d) {
  auto Iq = frobenius(s, I, q);
  auto Jd = bf_colon_degree(s, Iq, I, d);
  echelon lower = degree_span(s, Iq, d);
  for (std::size_t i = 0; i < s.n; ++i) {
    int w = s.weights.empty() ? 1 : s.weights[i];
    exponent xi(s.n, 0);
    xi[i] = 1;
    for (const auto& g : bf_colon_degree(s, Iq, I, d - w)) lower.insert(s.scale_mono(g, xi));
  }
  echelon all(s.f);
  for (const auto& g : Jd) all.insert(g);
  return static_cast<long>(all.size()) - static_cast<long>(lower.size());
}

std::size_t bf_rank(const space& s, const std::vector<poly>& polys) {
  echelon E(s.f);
  for (const auto& g : polys) E.insert(g);
  return E.size();
}

// ---- lattice side ----

long pair(const vec& a, const vec& b) {
  long s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

namespace {

// a . x >= b, with the set of original rows it was combined from.
struct ineq {
  std::vector<mpq_class> a;
  mpq_class b;
  std::bitset<256> history;
};

void normalize(ineq& r) {
  mpq_class scale = 0;
  for (const auto& x : r.a)
    if (x != 0) {
      scale = abs(x);
      break;
    }
  if (scale == 0) scale = abs(r.b);
  if (scale == 0) return;
  for (auto& x : r.a) x /= scale;
  r.b /= scale;
}

// Chernikov's rule: after k eliminations a row combined from more than k + 1
// original rows is implied by others and can be dropped.
std::vector<ineq> eliminate(const std::vector<ineq>& rows, std::size_t j, std::size_t eliminated) {
  std::vector<ineq> pos, neg, out;
  for (const auto& r : rows) {
    if (r.a[j] > 0) pos.push_back(r);
    else if (r.a[j] < 0) neg.push_back(r);
    else out.push_back(r);
  }
  for (const auto& p : pos)
    for (const auto& n : neg) {
      ineq c;
      mpq_class fp = -n.a[j], fn = p.a[j];
      c.a.resize(p.a.size());
      for (std::size_t k = 0; k < p.a.size(); ++k) c.a[k] = fp * p.a[k] + fn * n.a[k];
      c.b = fp * p.b + fn * n.b;
      c.a[j] = 0;
      c.history = p.history | n.history;
      if (c.history.count() > eliminated + 1) continue;
      out.push_back(std::move(c));
    }
  // Normalize and drop duplicates so the system stays small.
  std::vector<ineq> uniq;
  std::set<std::vector<mpq_class>> seen;
  for (auto& r : out) {
    normalize(r);
    std::vector<mpq_class> key = r.a;
    key.push_back(r.b);
    if (seen.insert(key).second) uniq.push_back(std::move(r));
  }
  return uniq;
}

// Equalities sum_j x_j g_j = u with x >= 0, plus extra rows; vars beyond gens.size() are kept.
std::vector<ineq> combination_system(const vec& u, const std::vector<vec>& gens, std::size_t extra_vars) {
  const std::size_t nv = gens.size() + extra_vars;
  std::vector<ineq> rows;
  for (std::size_t i = 0; i < u.size(); ++i) {
    ineq up, down;
    up.a.assign(nv, 0);
    down.a.assign(nv, 0);
    for (std::size_t j = 0; j < gens.size(); ++j) {
      up.a[j] = gens[j][i];
      down.a[j] = -gens[j][i];
    }
    up.b = u[i];
    down.b = -u[i];
    rows.push_back(up);
    rows.push_back(down);
  }
  for (std::size_t j = 0; j < gens.size(); ++j) {
    ineq nn;
    nn.a.assign(nv, 0);
    nn.a[j] = 1;
    nn.b = 0;
    rows.push_back(nn);
  }
  return rows;
}

void number_rows(std::vector<ineq>& rows) {
  if (rows.size() > 256) throw std::length_error("too many inequalities for the projection oracle");
  for (std::size_t i = 0; i < rows.size(); ++i) {
    rows[i].history.reset();
    rows[i].history.set(i);
  }
}

// Eliminates variables 0..count-1, each time picking the one that creates the fewest new rows.
void eliminate_all(std::vector<ineq>& rows, std::size_t count) {
  std::vector<bool> done(count, false);
  for (std::size_t step = 0; step < count; ++step) {
    std::size_t best = count, best_cost = 0;
    for (std::size_t j = 0; j < count; ++j) {
      if (done[j]) continue;
      std::size_t pos = 0, neg = 0;
      for (const auto& r : rows) {
        if (r.a[j] > 0) ++pos;
        else if (r.a[j] < 0) ++neg;
      }
      std::size_t cost = pos * neg;
      if (best == count || cost < best_cost) {
        best = j;
        best_cost = cost;
      }
    }
    done[best] = true;
    rows = eliminate(rows, best, step + 1);
  }
}

bool consistent(const std::vector<ineq>& rows) {
  for (const auto& r : rows) {
    bool zero = std::all_of(r.a.begin(), r.a.end(), [](const mpq_class& x) { return x == 0; });
    if (zero && r.b > 0) return false;
  }
  return true;
}

}  // namespace

mpq_class bf_lambda(const vec& u, const std::vector<vec>& hilbert, const std::vector<vec>& dual_rays) {
  std::vector<vec> gens = hilbert;
  gens.insert(gens.end(), dual_rays.begin(), dual_rays.end());
  const std::size_t lam = gens.size();
  auto rows = combination_system(u, gens, 1);
  // sum mu - lambda = 0
  ineq up, down;
  up.a.assign(lam + 1, 0);
  down.a.assign(lam + 1, 0);
  for (std::size_t j = 0; j < hilbert.size(); ++j) {
    up.a[j] = 1;
    down.a[j] = -1;
  }
  up.a[lam] = -1;
  down.a[lam] = 1;
  up.b = down.b = 0;
  rows.push_back(up);
  rows.push_back(down);
  number_rows(rows);
  eliminate_all(rows, lam);
  if (!consistent(rows)) throw std::invalid_argument("point outside the cone");
  std::optional<mpq_class> best;
  for (const auto& r : rows)
    if (r.a[lam] < 0) {
      mpq_class bound = r.b / r.a[lam];
      if (!best || bound < *best) best = bound;
    }
  if (!best) throw std::invalid_argument("lambda unbounded");
  return *best;
}

bool bf_in_cone(const vec& u, const std::vector<vec>& gens) {
  auto rows = combination_system(u, gens, 0);
  number_rows(rows);
  eliminate_all(rows, gens.size());
  return consistent(rows);
}

namespace {

template <typename F>
void box(std::size_t d, long B, F&& f) {
  vec x(d, -B);
  while (true) {
    f(x);
    std::size_t i = 0;
    while (i < d && x[i] == B) {
      x[i] = -B;
      ++i;
    }
    if (i == d) return;
    ++x[i];
  }
}

bool level(const vec& m, const std::vector<vec>& rays, long k) {
  return std::all_of(rays.begin(), rays.end(), [&](const vec& v) { return pair(m, v) >= k; });
}

vec minus(const vec& a, const vec& b) {
  vec c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] - b[i];
  return c;
}

bool is_zero(const vec& a) {
  return std::all_of(a.begin(), a.end(), [](long x) { return x == 0; });
}

}  // namespace

std::vector<vec> bf_dual_points(const std::vector<vec>& rays, long B) {
  std::vector<vec> out;
  box(rays.front().size(), B, [&](const vec& x) {
    if (level(x, rays, 0)) out.push_back(x);
  });
  return out;
}

std::vector<vec> bf_hilbert_basis(const std::vector<vec>& rays, long B) {
  auto pts = bf_dual_points(rays, B);
  std::vector<vec> out;
  for (const auto& x : pts) {
    if (is_zero(x)) continue;
    bool reducible = false;
    for (const auto& a : pts) {
      if (is_zero(a) || a == x) continue;
      if (level(minus(x, a), rays, 0)) {
        reducible = true;
        break;
      }
    }
    if (!reducible) out.push_back(x);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<vec> bf_omega_mingens(const std::vector<vec>& rays, long k, long B) {
  auto semigroup = bf_dual_points(rays, B);
  std::vector<vec> out;
  box(rays.front().size(), B, [&](const vec& m) {
    if (!level(m, rays, k)) return;
    for (const auto& s : semigroup)
      if (!is_zero(s) && level(minus(m, s), rays, k)) return;
    out.push_back(m);
  });
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace oracle
