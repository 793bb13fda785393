#pragma once

#include <random>
#include <string>
#include <vector>

#include "fsplit/fsing.hpp"
#include "fsplit/parse.hpp"
#include "oracle/oracle.hpp"

namespace testing {

inline fsplit::context_ptr ctx(std::uint32_t p, std::vector<std::string> names, std::vector<int> weights = {}) {
  return fsplit::ring_context::make(p, std::move(names), std::move(weights));
}

inline fsplit::polynomial poly(const fsplit::context_ptr& c, const std::string& text) {
  return fsplit::parse_polynomial(text, fsplit::make_ring(c));
}

inline fsplit::polynomial poly(const fsplit::ring_ptr& r, const std::string& text) {
  return fsplit::parse_polynomial(text, r);
}

inline fsplit::ideal ideal_of(const fsplit::context_ptr& c, const std::vector<std::string>& gens) {
  std::vector<fsplit::polynomial> ps;
  for (const auto& g : gens) ps.push_back(poly(c, g));
  return fsplit::ideal(c, std::move(ps));
}

inline oracle::space space_of(const fsplit::context_ptr& c) {
  oracle::space s{{c->characteristic()}, c->num_vars(), c->weights()};
  return s;
}

inline oracle::poly to_oracle(const fsplit::polynomial& f) {
  oracle::poly out;
  const std::size_t n = f.ring().num_vars();
  for (const auto& t : f.terms()) {
    oracle::exponent e(n);
    for (std::size_t i = 0; i < n; ++i) e[i] = t.mono[i];
    out[e] = t.coeff;
  }
  return out;
}

inline std::vector<oracle::poly> to_oracle(const std::vector<fsplit::polynomial>& fs) {
  std::vector<oracle::poly> out;
  for (const auto& f : fs) out.push_back(to_oracle(f));
  return out;
}

inline fsplit::polynomial from_oracle(const oracle::poly& g, const fsplit::ring_ptr& r) {
  std::vector<fsplit::term> terms;
  for (const auto& [e, c] : g) {
    fsplit::monomial m;
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i]) m.set(i, static_cast<std::uint32_t>(e[i]));
    terms.push_back({m, static_cast<fsplit::prime_field::element>(c)});
  }
  return fsplit::polynomial(r, std::move(terms));
}

// Monomials of total degree <= d in the ring's variables.
inline std::vector<fsplit::monomial> monomials_up_to(std::size_t n, int d) {
  std::vector<fsplit::monomial> out;
  fsplit::monomial m;
  auto rec = [&](auto&& self, std::size_t i, int left) -> void {
    if (i == n) {
      out.push_back(m);
      return;
    }
    for (int k = 0; k <= left; ++k) {
      m.set(i, static_cast<std::uint32_t>(k));
      self(self, i + 1, left - k);
    }
    m.set(i, 0);
  };
  rec(rec, 0, d);
  return out;
}

// Random homogeneous polynomial of degree d (standard grading) with up to
// max_terms terms.
inline fsplit::polynomial random_homogeneous(std::mt19937_64& rng, const fsplit::ring_ptr& r, int d,
                                             int max_terms = 3) {
  const std::size_t n = r->num_vars();
  const auto p = r->context().characteristic();
  std::vector<fsplit::term> terms;
  int count = std::uniform_int_distribution<int>(1, max_terms)(rng);
  for (int k = 0; k < count; ++k) {
    fsplit::monomial m;
    int left = d;
    for (std::size_t i = 0; i + 1 < n; ++i) {
      int e = std::uniform_int_distribution<int>(0, left)(rng);
      m.set(i, static_cast<std::uint32_t>(e));
      left -= e;
    }
    m.set(n - 1, static_cast<std::uint32_t>(left));
    auto c = std::uniform_int_distribution<std::uint32_t>(1, p - 1)(rng);
    terms.push_back({m, c});
  }
  return fsplit::polynomial(r, std::move(terms));
}

// Arbitrary (possibly inhomogeneous) polynomial with terms of degree <= d.
inline fsplit::polynomial random_poly(std::mt19937_64& rng, const fsplit::ring_ptr& r, int d, int max_terms = 4) {
  const std::size_t n = r->num_vars();
  const auto p = r->context().characteristic();
  std::vector<fsplit::term> terms;
  int count = std::uniform_int_distribution<int>(0, max_terms)(rng);
  for (int k = 0; k < count; ++k) {
    fsplit::monomial m;
    for (std::size_t i = 0; i < n; ++i)
      m.set(i, static_cast<std::uint32_t>(std::uniform_int_distribution<int>(0, d)(rng)));
    auto c = std::uniform_int_distribution<std::uint32_t>(1, p - 1)(rng);
    terms.push_back({m, c});
  }
  return fsplit::polynomial(r, std::move(terms));
}

// n <= 3 variables, p <= 3, 1..3 homogeneous generators of degree 1..3.
struct random_ideal_case {
  fsplit::context_ptr c;
  fsplit::ideal I;
};

inline random_ideal_case random_ideal(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const std::uint32_t p = std::uniform_int_distribution<int>(0, 1)(rng) ? 3 : 2;
  const std::size_t n = std::uniform_int_distribution<std::size_t>(2, 3)(rng);
  std::vector<std::string> names{"x", "y", "z"};
  names.resize(n);
  auto c = ctx(p, names);
  auto r = fsplit::make_ring(c);
  std::vector<fsplit::polynomial> gens;
  int count = std::uniform_int_distribution<int>(1, 3)(rng);
  for (int k = 0; k < count; ++k) {
    int d = std::uniform_int_distribution<int>(1, 3)(rng);
    gens.push_back(random_homogeneous(rng, r, d));
  }
  return {c, fsplit::ideal(c, std::move(gens))};
}

inline std::string data_path(const std::string& name) { return std::string(FSPLIT_DATA_DIR) + "/" + name; }

}  // namespace testing
