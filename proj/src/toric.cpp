#include "fsplit/toric.hpp"

#include <algorithm>
#include <numeric>

#include "fsplit/errors.hpp"

namespace fsplit {

namespace {

std::string vec_string(const int_vec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s + ")";
}

// Calls f on every integer point of the box [lo, hi]; stops early when f returns false.
template <typename F>
void for_each_box_point(const int_vec& lo, const int_vec& hi, std::size_t max_points, const char* what, F&& f) {
  const std::size_t d = lo.size();
  double volume = 1;
  for (std::size_t i = 0; i < d; ++i) volume *= static_cast<double>(hi[i] - lo[i] + 1);
  if (volume > static_cast<double>(max_points))
    throw resource_error(std::string(what) + ": enumeration box of " + std::to_string(static_cast<long long>(volume)) +
                         " points exceeds the cap of " + std::to_string(max_points));
  for (std::size_t i = 0; i < d; ++i)
    if (lo[i] > hi[i]) return;
  int_vec x = lo;
  while (true) {
    if (!f(x)) return;
    std::size_t i = 0;
    while (i < d && x[i] == hi[i]) {
      x[i] = lo[i];
      ++i;
    }
    if (i == d) return;
    ++x[i];
  }
}

// Bounding box of the zonotope {sum t_i r_i : 0 <= t_i <= 1}.
void zonotope_box(const std::vector<int_vec>& rays, std::size_t d, int_vec& lo, int_vec& hi) {
  lo.assign(d, 0);
  hi.assign(d, 0);
  for (const auto& r : rays)
    for (std::size_t i = 0; i < d; ++i) {
      if (r[i] < 0) lo[i] = checked_add(lo[i], r[i]);
      else hi[i] = checked_add(hi[i], r[i]);
    }
}

std::int64_t pairing_or_zero(const std::optional<int_vec>& w, const int_vec& m) { return w ? dot(m, *w) : 0; }

void sort_graded(std::vector<int_vec>& pts, const std::optional<int_vec>& w) {
  std::sort(pts.begin(), pts.end(), [&](const int_vec& a, const int_vec& b) {
    auto da = pairing_or_zero(w, a), db = pairing_or_zero(w, b);
    if (da != db) return da < db;
    return a < b;
  });
}

}  // namespace

cone make_cone(std::size_t dim, std::vector<int_vec> rays, std::optional<int_vec> grading,
               std::vector<std::string>* warnings) {
  if (dim == 0) throw usage_error("cone dimension must be positive");
  if (rays.empty()) throw usage_error("cone needs at least one ray");
  for (auto& r : rays) {
    if (r.size() != dim) throw usage_error("ray " + vec_string(r) + " does not have " + std::to_string(dim) + " entries");
    if (gcd_of(r) == 0) throw usage_error("zero ray");
    if (gcd_of(r) != 1) {
      int_vec q = primitive(r);
      if (warnings) warnings->push_back("ray " + vec_string(r) + " replaced by primitive " + vec_string(q));
      r = std::move(q);
    }
  }
  if (grading && grading->size() != dim) throw usage_error("grading vector has the wrong dimension");
  if (rank(rays) != dim) throw usage_error("cone is not full-dimensional");
  auto dual = dual_extreme_rays(dim, rays);
  if (rank(dual) != dim) throw usage_error("cone is not strongly convex (it contains a line)");
  cone c;
  c.dim = dim;
  c.rays = std::move(rays);
  c.grading = std::move(grading);
  return c;
}

std::vector<int_vec> dual_cone(const cone& sigma) {
  if (rank(sigma.rays) != sigma.dim) throw usage_error("cone is not full-dimensional");
  auto dual = dual_extreme_rays(sigma.dim, sigma.rays);
  if (rank(dual) != sigma.dim) throw usage_error("cone is not strongly convex (it contains a line)");
  return dual;
}

bool hilbert_basis_data::in_dual(const int_vec& m) const {
  for (const auto& v : sigma_rays)
    if (dot(m, v) < 0) return false;
  return true;
}

hilbert_basis_data hilbert_basis(const cone& sigma, const toric_limits& limits) {
  if (sigma.dim > limits.max_dim)
    throw resource_error("cone dimension " + std::to_string(sigma.dim) + " exceeds the cap of " +
                         std::to_string(limits.max_dim));
  hilbert_basis_data hb;
  hb.dim = sigma.dim;
  hb.dual_rays = dual_cone(sigma);
  hb.sigma_rays = dual_extreme_rays(sigma.dim, hb.dual_rays);
  hb.grading = sigma.grading;

  // Every irreducible lies in the zonotope spanned by the dual rays (write it in
  // a simplicial subcone and split off integer parts), hence in its box.
  int_vec lo, hi;
  zonotope_box(hb.dual_rays, hb.dim, lo, hi);
  std::vector<int_vec> candidates;
  for_each_box_point(lo, hi, limits.max_points, "Hilbert basis", [&](const int_vec& x) {
    if (gcd_of(x) != 0 && hb.in_dual(x)) candidates.push_back(x);
    return true;
  });
  // x is reducible iff x - c lies in the dual cone for another candidate c.
  for (const auto& x : candidates) {
    bool irreducible = true;
    for (const auto& c : candidates) {
      if (c == x) continue;
      int_vec diff(hb.dim);
      for (std::size_t i = 0; i < hb.dim; ++i) diff[i] = x[i] - c[i];
      if (hb.in_dual(diff)) {
        irreducible = false;
        break;
      }
    }
    if (irreducible) hb.basis.push_back(x);
  }
  if (hb.grading) {
    for (const auto& h : hb.basis) {
      auto deg = dot(h, *hb.grading);
      if (deg < 1)
        throw usage_error("grading " + vec_string(*hb.grading) + " gives Hilbert basis element " + vec_string(h) +
                          " degree " + std::to_string(deg) + "; all degrees must be positive");
    }
  }
  sort_graded(hb.basis, hb.grading);
  if (hb.grading) {
    hb.standard_graded = true;
    for (const auto& h : hb.basis) {
      hb.degrees.push_back(dot(h, *hb.grading));
      if (hb.degrees.back() != 1) hb.standard_graded = false;
    }
  }
  return hb;
}

bool newton_polyhedron::contains(const int_vec& u) const {
  for (const auto& f : facets)
    if (rational(dot(u, f.normal)) < f.offset) return false;
  return true;
}

newton_polyhedron make_newton_polyhedron(const hilbert_basis_data& hb) {
  const std::size_t d = hb.dim;
  // Homogenize: the cone over P x {1} is generated by (h, 1) and (r, 0).
  std::vector<int_vec> gens;
  for (const auto& h : hb.basis) {
    int_vec g = h;
    g.push_back(1);
    gens.push_back(std::move(g));
  }
  for (const auto& r : hb.dual_rays) {
    int_vec g = r;
    g.push_back(0);
    gens.push_back(std::move(g));
  }
  newton_polyhedron P;
  for (auto& ray : dual_extreme_rays(d + 1, gens)) {
    int_vec w(ray.begin(), ray.begin() + static_cast<std::ptrdiff_t>(d));
    std::int64_t g = gcd_of(w);
    if (g == 0) continue;  // the face t >= 0
    for (auto& x : w) x /= g;
    P.facets.push_back({std::move(w), rational(-ray[d], g)});
    P.facets.back().offset.canonicalize();
  }
  std::sort(P.facets.begin(), P.facets.end(), [](const facet& a, const facet& b) {
    if (a.offset != b.offset) return a.offset < b.offset;
    return a.normal < b.normal;
  });
  return P;
}

rational lambda_m(const int_vec& u, const hilbert_basis_data& hb, const newton_polyhedron& P) {
  if (u.size() != hb.dim) throw usage_error("lattice point has the wrong dimension");
  if (!hb.in_dual(u)) throw usage_error("lattice point " + vec_string(u) + " is not in the dual cone");
  std::optional<rational> best;
  for (const auto& f : P.facets) {
    if (f.offset <= 0) continue;
    rational v = rational(dot(u, f.normal)) / f.offset;
    if (!best || v < *best) best = v;
  }
  if (!best) throw usage_error("Newton polyhedron has no bounded facet");
  return *best;
}

divisorial_module omega_mingens(const hilbert_basis_data& hb, std::int64_t k, const toric_limits& limits) {
  if (k > limits.max_level || k < -limits.max_level)
    throw resource_error("divisorial level " + std::to_string(k) + " exceeds the cap of " +
                         std::to_string(limits.max_level));
  const std::size_t d = hb.dim;
  auto in_level = [&](const int_vec& m) {
    for (const auto& v : hb.sigma_rays)
      if (dot(m, v) < k) return false;
    return true;
  };
  // Vertices of P_k = {<m, v_i> >= k} from the cone {(m, t) : <m, v_i> >= k t, t >= 0}.
  std::vector<int_vec> cons;
  for (const auto& v : hb.sigma_rays) {
    int_vec c = v;
    c.push_back(-k);
    cons.push_back(std::move(c));
  }
  int_vec last(d + 1, 0);
  last[d] = 1;
  cons.push_back(last);
  int_vec lo, hi;
  zonotope_box(hb.dual_rays, d, lo, hi);
  std::optional<int_vec> vlo, vhi;
  for (const auto& ray : dual_extreme_rays(d + 1, cons)) {
    if (ray[d] <= 0) continue;
    int_vec a(d), b(d);
    for (std::size_t i = 0; i < d; ++i) {
      rational x(ray[i], ray[d]);
      x.canonicalize();
      a[i] = floor_int(x);
      b[i] = ceil_int(x);
    }
    if (!vlo) {
      vlo = a;
      vhi = b;
    } else {
      for (std::size_t i = 0; i < d; ++i) {
        (*vlo)[i] = std::min((*vlo)[i], a[i]);
        (*vhi)[i] = std::max((*vhi)[i], b[i]);
      }
    }
  }
  if (!vlo) throw usage_error("divisorial polyhedron has no vertex");
  // Minimal generators lie in conv(vertices) + zonotope: subtracting a dual ray keeps m in P_k.
  for (std::size_t i = 0; i < d; ++i) {
    lo[i] = checked_add(lo[i], (*vlo)[i]);
    hi[i] = checked_add(hi[i], (*vhi)[i]);
  }
  divisorial_module out;
  out.level = k;
  std::size_t visited = 0;
  try {
    for_each_box_point(lo, hi, limits.max_points, "divisorial module", [&](const int_vec& m) {
      ++visited;
      if (!in_level(m)) return true;
      for (const auto& h : hb.basis) {
        int_vec diff(d);
        for (std::size_t i = 0; i < d; ++i) diff[i] = m[i] - h[i];
        if (in_level(diff)) return true;
      }
      out.generators.push_back(m);
      return true;
    });
  } catch (const resource_error& e) {
    out.complete = false;
    throw incomplete_enumeration(e.what(), out);
  }
  sort_graded(out.generators, hb.grading);
  if (hb.grading)
    for (const auto& m : out.generators) out.degrees.push_back(dot(m, *hb.grading));
  return out;
}

rational a_sigma(const hilbert_basis_data& hb, const newton_polyhedron& P, const toric_limits& limits) {
  auto omega = omega_mingens(hb, 1, limits);
  std::optional<rational> best;
  for (const auto& m : omega.generators) {
    rational v = lambda_m(m, hb, P);
    if (!best || v < *best) best = v;
  }
  if (!best) throw usage_error("no interior lattice points");
  return -*best;
}

rational a_sigma_exhaustive(const hilbert_basis_data& hb, const newton_polyhedron& P, std::int64_t bound) {
  int_vec lo(hb.dim, -bound), hi(hb.dim, bound);
  std::optional<rational> best;
  for_each_box_point(lo, hi, 50'000'000, "exhaustive interior search", [&](const int_vec& u) {
    for (const auto& v : hb.sigma_rays)
      if (dot(u, v) < 1) return true;
    rational l = lambda_m(u, hb, P);
    if (!best || l < *best) best = l;
    return true;
  });
  if (!best) throw usage_error("no interior lattice point within the search bound");
  return -*best;
}

std::optional<std::vector<rational>> canonical_solution(const hilbert_basis_data& hb) {
  int_vec ones(hb.sigma_rays.size(), 1);
  return solve_exact(hb.sigma_rays, ones);
}

bool gorenstein_toric(const hilbert_basis_data& hb) {
  auto m = canonical_solution(hb);
  if (!m) return false;
  return std::all_of(m->begin(), m->end(), [](const rational& x) { return x.get_den() == 1; });
}

std::optional<rational> qgor_data::threshold() const {
  if (!degree) return std::nullopt;
  rational r(*degree, index);
  r.canonicalize();
  return r;
}

std::optional<qgor_data> qgor_index_and_degree(const hilbert_basis_data& hb) {
  auto m = canonical_solution(hb);
  if (!m) return std::nullopt;
  mpz_class c = 1;
  for (const auto& x : *m) mpz_lcm(c.get_mpz_t(), c.get_mpz_t(), x.get_den_mpz_t());
  qgor_data q;
  q.index = to_int64(c);
  for (const auto& x : *m) {
    mpz_class v = x.get_num() * (c / x.get_den());
    q.generator.push_back(to_int64(v));
  }
  if (hb.grading) q.degree = dot(q.generator, *hb.grading);
  return q;
}

std::vector<std::string> toric_variable_names(std::size_t count) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < count; ++i)
    names.push_back(count <= 26 ? std::string(1, static_cast<char>('a' + i)) : "h" + std::to_string(i));
  return names;
}

ideal toric_present(const hilbert_basis_data& hb, std::uint32_t p, budget& steps) {
  if (!hb.grading) throw usage_error("a grading is required to present the semigroup ring");
  const std::size_t d = hb.dim, s = hb.basis.size();
  std::vector<int> weights;
  for (auto deg : hb.degrees) {
    if (deg > 1'000'000) throw resource_error("Hilbert basis degree too large");
    weights.push_back(static_cast<int>(deg));
  }
  auto target = ring_context::make(p, toric_variable_names(s), weights);
  auto big = prepend_variables(target, 1 + d);
  auto r = make_ring(big);
  auto one = polynomial::constant(r, 1);
  std::vector<polynomial> gens;
  // y_j t^{h-} - t^{h+}
  for (std::size_t j = 0; j < s; ++j) {
    monomial pos, neg;
    for (std::size_t i = 0; i < d; ++i) {
      auto x = hb.basis[j][i];
      if (x > 65535 || x < -65535) throw resource_error("Hilbert basis coordinate too large");
      if (x > 0) pos.set(1 + i, static_cast<int>(x));
      if (x < 0) neg.set(1 + i, static_cast<int>(-x));
    }
    neg.set(1 + d + j, 1);
    gens.push_back(polynomial::from_monomial(r, neg) - polynomial::from_monomial(r, pos));
  }
  monomial all;
  for (std::size_t i = 0; i <= d; ++i) all.set(i, 1);
  gens.push_back(one - polynomial::from_monomial(r, all));
  return eliminate(ideal(big, std::move(gens)), 1 + d, steps);
}

}  // namespace fsplit
