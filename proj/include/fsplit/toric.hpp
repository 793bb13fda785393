#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fsplit/ideal.hpp"
#include "fsplit/lattice.hpp"
#include "fsplit/rational.hpp"

namespace fsplit {

// Largest ambient dimension the lattice enumerations accept.
inline constexpr std::size_t max_cone_dim = 4;

// A strongly convex full-dimensional rational cone sigma in N = Z^d, with an
// optional grading vector w in N.
struct cone {
  std::size_t dim = 0;
  std::vector<int_vec> rays;
  std::optional<int_vec> grading;
};

// Checks dimensions, primitivizes rays (reported in `warnings` when non-null),
// and verifies that sigma is pointed and spans R^d.
cone make_cone(std::size_t dim, std::vector<int_vec> rays, std::optional<int_vec> grading = std::nullopt,
               std::vector<std::string>* warnings = nullptr);

// Primitive extreme rays of sigma^vee, sorted.
std::vector<int_vec> dual_cone(const cone& sigma);

struct hilbert_basis_data {
  std::size_t dim = 0;
  std::vector<int_vec> sigma_rays;  // extreme rays of sigma
  std::vector<int_vec> dual_rays;   // extreme rays of sigma^vee
  std::vector<int_vec> basis;       // sorted by (degree, lex) when graded, else lex
  std::optional<int_vec> grading;
  std::vector<std::int64_t> degrees;  // empty without a grading
  bool standard_graded = false;

  bool in_dual(const int_vec& m) const;
};

struct toric_limits {
  std::size_t max_dim = max_cone_dim;
  std::size_t max_points = 2'000'000;  // lattice points visited per enumeration
  std::int64_t max_level = 64;         // |k| for divisorial powers
};

hilbert_basis_data hilbert_basis(const cone& sigma, const toric_limits& limits = {});

struct facet {
  int_vec normal;  // w_F, primitive
  rational offset;  // c_F
};

// P(m) = conv(Hilbert basis) + sigma^vee as {u : <u, w_F> >= c_F}.
struct newton_polyhedron {
  std::vector<facet> facets;
  bool contains(const int_vec& u) const;
};

newton_polyhedron make_newton_polyhedron(const hilbert_basis_data& hb);

// sup{lambda : u in lambda P}, as min over facets with c_F > 0 of <u, w_F> / c_F.
rational lambda_m(const int_vec& u, const hilbert_basis_data& hb, const newton_polyhedron& P);

// Minimal generators of omega^(k) = span{x^m : <m, v_i> >= k for all rays v_i}.
struct divisorial_module {
  std::int64_t level = 0;
  std::vector<int_vec> generators;
  std::vector<std::int64_t> degrees;  // empty without a grading
  bool complete = true;
};

// Thrown when an enumeration cap is hit; carries what was found so far.
class incomplete_enumeration : public resource_error {
 public:
  incomplete_enumeration(const std::string& msg, divisorial_module partial)
      : resource_error(msg), partial_(std::move(partial)) {}
  const divisorial_module& partial() const noexcept { return partial_; }

 private:
  divisorial_module partial_;
};

divisorial_module omega_mingens(const hilbert_basis_data& hb, std::int64_t k, const toric_limits& limits = {});

// -min lambda over interior lattice points, searched over the generators of omega^(1).
rational a_sigma(const hilbert_basis_data& hb, const newton_polyhedron& P, const toric_limits& limits = {});
// Same minimum over every interior lattice point with coordinates in [-bound, bound].
rational a_sigma_exhaustive(const hilbert_basis_data& hb, const newton_polyhedron& P, std::int64_t bound);

// Solution m of <m, v_i> = 1 over the extreme rays, if one exists.
std::optional<std::vector<rational>> canonical_solution(const hilbert_basis_data& hb);

bool gorenstein_toric(const hilbert_basis_data& hb);

struct qgor_data {
  std::int64_t index = 1;  // c
  int_vec generator;       // c * m
  std::optional<std::int64_t> degree;  // D = <c m, w>, when graded
  // D / c when graded.
  std::optional<rational> threshold() const;
};

// nullopt when the ring is not Q-Gorenstein.
std::optional<qgor_data> qgor_index_and_degree(const hilbert_basis_data& hb);

// Toric ideal of the Hilbert basis: one variable per basis element, weighted by its degree.
ideal toric_present(const hilbert_basis_data& hb, std::uint32_t p, budget& steps);
std::vector<std::string> toric_variable_names(std::size_t count);

}  // namespace fsplit
