#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "fsplit/rational.hpp"

namespace fsplit {

using int_vec = std::vector<std::int64_t>;

std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);
std::int64_t dot(const int_vec& a, const int_vec& b);
std::int64_t gcd_of(const int_vec& v);
// Divides by the gcd of the entries; the zero vector is returned unchanged.
int_vec primitive(int_vec v);

std::size_t rank(const std::vector<int_vec>& rows);

// Extreme rays of the cone {x in R^dim : <x, g> >= 0 for all g in constraints},
// as primitive integer vectors, by the double description method. The
// constraints must span R^dim so that the cone is pointed.
std::vector<int_vec> dual_extreme_rays(std::size_t dim, const std::vector<int_vec>& constraints);

// Exact solution of A x = b (A has full column rank), or nullopt when inconsistent.
std::optional<std::vector<rational>> solve_exact(const std::vector<int_vec>& A, const int_vec& b);

}  // namespace fsplit
