#include "fsplit/lattice.hpp"

#include <algorithm>
#include <numeric>

#include "fsplit/errors.hpp"

namespace fsplit {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw resource_error("integer overflow in lattice arithmetic");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw resource_error("integer overflow in lattice arithmetic");
  return r;
}

std::int64_t dot(const int_vec& a, const int_vec& b) {
  if (a.size() != b.size()) throw usage_error("dimension mismatch in pairing");
  std::int64_t s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s = checked_add(s, checked_mul(a[i], b[i]));
  return s;
}

std::int64_t gcd_of(const int_vec& v) {
  std::int64_t g = 0;
  for (auto x : v) g = std::gcd(g, x < 0 ? -x : x);
  return g;
}

int_vec primitive(int_vec v) {
  std::int64_t g = gcd_of(v);
  if (g > 1)
    for (auto& x : v) x /= g;
  return v;
}

std::size_t rank(const std::vector<int_vec>& rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  std::vector<std::vector<rational>> m;
  for (const auto& r : rows) m.emplace_back(r.begin(), r.end());
  std::size_t rk = 0;
  for (std::size_t c = 0; c < cols && rk < m.size(); ++c) {
    std::size_t piv = rk;
    while (piv < m.size() && m[piv][c] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[rk]);
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == rk || m[r][c] == 0) continue;
      rational f = m[r][c] / m[rk][c];
      for (std::size_t k = c; k < cols; ++k) m[r][k] -= f * m[rk][k];
    }
    ++rk;
  }
  return rk;
}

std::optional<std::vector<rational>> solve_exact(const std::vector<int_vec>& A, const int_vec& b) {
  if (A.size() != b.size()) throw usage_error("solve_exact: shape mismatch");
  if (A.empty()) return std::vector<rational>{};
  const std::size_t cols = A.front().size();
  std::vector<std::vector<rational>> m;
  for (std::size_t r = 0; r < A.size(); ++r) {
    m.emplace_back(A[r].begin(), A[r].end());
    m.back().emplace_back(b[r]);
  }
  std::size_t rk = 0;
  std::vector<std::size_t> pivot_col;
  for (std::size_t c = 0; c < cols && rk < m.size(); ++c) {
    std::size_t piv = rk;
    while (piv < m.size() && m[piv][c] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[rk]);
    rational lead = m[rk][c];
    for (auto& x : m[rk]) x /= lead;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == rk || m[r][c] == 0) continue;
      rational f = m[r][c];
      for (std::size_t k = c; k <= cols; ++k) m[r][k] -= f * m[rk][k];
    }
    pivot_col.push_back(c);
    ++rk;
  }
  for (std::size_t r = rk; r < m.size(); ++r)
    if (m[r][cols] != 0) return std::nullopt;
  if (rk < cols) throw usage_error("solve_exact: system is underdetermined");
  std::vector<rational> x(cols);
  for (std::size_t r = 0; r < rk; ++r) x[pivot_col[r]] = m[r][cols];
  return x;
}

namespace {

struct dd_ray {
  int_vec v;
  std::vector<bool> zero;  // tight constraints among those processed
};

}  // namespace

std::vector<int_vec> dual_extreme_rays(std::size_t dim, const std::vector<int_vec>& constraints) {
  for (const auto& c : constraints)
    if (c.size() != dim) throw usage_error("constraint of the wrong dimension");
  if (rank(constraints) != dim) throw usage_error("constraints do not span the space; the cone is not pointed");

  // Start from d independent constraints: the simplicial cone they cut out has
  // the columns of the inverse matrix as its extreme rays.
  std::vector<std::size_t> basis_rows;
  std::vector<int_vec> chosen;
  for (std::size_t i = 0; i < constraints.size() && chosen.size() < dim; ++i) {
    chosen.push_back(constraints[i]);
    if (rank(chosen) == chosen.size()) {
      basis_rows.push_back(i);
    } else {
      chosen.pop_back();
    }
  }
  std::vector<dd_ray> rays;
  for (std::size_t k = 0; k < dim; ++k) {
    int_vec e(dim, 0);
    e[k] = 1;
    auto sol = solve_exact(chosen, e);
    mpz_class den = 1;
    for (const auto& x : *sol) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
    int_vec v(dim);
    for (std::size_t i = 0; i < dim; ++i) {
      mpz_class z = (*sol)[i].get_num() * (den / (*sol)[i].get_den());
      v[i] = to_int64(z);
    }
    rays.push_back({primitive(std::move(v)), {}});
  }
  std::vector<bool> processed(constraints.size(), false);
  std::vector<std::size_t> order = basis_rows;
  for (std::size_t i = 0; i < constraints.size(); ++i)
    if (std::find(basis_rows.begin(), basis_rows.end(), i) == basis_rows.end()) order.push_back(i);

  auto zero_set = [&](const int_vec& v) {
    std::vector<bool> z(constraints.size(), false);
    for (std::size_t i = 0; i < constraints.size(); ++i)
      if (processed[i] && dot(v, constraints[i]) == 0) z[i] = true;
    return z;
  };
  for (std::size_t i : basis_rows) processed[i] = true;
  for (auto& r : rays) r.zero = zero_set(r.v);

  for (std::size_t idx = dim; idx < order.size(); ++idx) {
    const std::size_t ci = order[idx];
    const int_vec& a = constraints[ci];
    std::vector<std::int64_t> val(rays.size());
    for (std::size_t r = 0; r < rays.size(); ++r) val[r] = dot(rays[r].v, a);
    std::vector<dd_ray> next;
    for (std::size_t r = 0; r < rays.size(); ++r)
      if (val[r] >= 0) next.push_back(rays[r]);
    for (std::size_t i = 0; i < rays.size(); ++i) {
      if (val[i] <= 0) continue;
      for (std::size_t j = 0; j < rays.size(); ++j) {
        if (val[j] >= 0) continue;
        std::vector<bool> common(constraints.size());
        std::size_t count = 0;
        for (std::size_t k = 0; k < constraints.size(); ++k) {
          common[k] = rays[i].zero[k] && rays[j].zero[k];
          count += common[k];
        }
        if (count + 2 < dim) continue;
        bool adjacent = true;
        for (std::size_t k = 0; k < rays.size() && adjacent; ++k) {
          if (k == i || k == j) continue;
          bool contains = true;
          for (std::size_t c = 0; c < constraints.size() && contains; ++c)
            if (common[c] && !rays[k].zero[c]) contains = false;
          if (contains) adjacent = false;
        }
        if (!adjacent) continue;
        int_vec v(dim);
        for (std::size_t c = 0; c < dim; ++c)
          v[c] = checked_add(checked_mul(val[i], rays[j].v[c]), checked_mul(-val[j], rays[i].v[c]));
        next.push_back({primitive(std::move(v)), {}});
      }
    }
    processed[ci] = true;
    for (auto& r : next) r.zero = zero_set(r.v);
    rays = std::move(next);
  }
  std::vector<int_vec> out;
  for (auto& r : rays) out.push_back(r.v);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace fsplit
