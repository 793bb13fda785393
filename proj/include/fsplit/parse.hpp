#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fsplit/ideal.hpp"
#include "fsplit/lattice.hpp"
#include "fsplit/rational.hpp"

namespace fsplit {

// A graded quotient S/I with an optional ideal a (absent means the maximal
// ideal) and an optional declared a-invariant.
struct ring_file {
  context_ptr ctx;
  std::vector<polynomial> generators;
  std::optional<std::vector<polynomial>> a_generators;
  std::optional<rational> a_invariant;

  ideal defining_ideal() const { return ideal(ctx, generators); }
  // a, or the maximal ideal when the file has no `a` line.
  ideal a_ideal() const;
};

struct cone_file {
  std::size_t dim = 0;
  std::vector<int_vec> rays;
  std::optional<int_vec> grading;
  std::optional<std::uint32_t> p;
};

// Line-oriented formats. Ring files:
//   p = 3
//   vars = x y z:2
//   I = x*y - z^2 ; ...
//   a = x ; y          (optional)
//   ainv = -1          (optional)
// Cone files: dim, rays = (c,...) (c,...), grading = (c,...), p.
// '#' starts a comment. U+2212 is accepted as a minus sign.
ring_file parse_ring(std::string_view text);
cone_file parse_cone(std::string_view text);

// True when the text has a `dim` or `rays` key, i.e. describes a cone.
bool looks_like_cone(std::string_view text);

// Polynomial expression over +, -, *, ^, integers, names and parentheses.
polynomial parse_polynomial(std::string_view text, const ring_ptr& ring);

std::string render_ring(const ring_file& r);
std::string render_cone(const cone_file& c);

bool operator==(const ring_file& a, const ring_file& b);
bool operator==(const cone_file& a, const cone_file& b);

}  // namespace fsplit
