#include "fsplit/field.hpp"

#include <string>

namespace fsplit {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

prime_field::prime_field(std::uint32_t p) : p_(p) {
  if (p >= (1u << 31) || !is_prime(p)) throw usage_error(std::to_string(p) + " is not a prime below 2^31");
}

prime_field::element prime_field::pow(element a, std::uint64_t k) const noexcept {
  element r = 1 % p_;
  while (k) {
    if (k & 1) r = mul(r, a);
    a = mul(a, a);
    k >>= 1;
  }
  return r;
}

prime_field::element prime_field::inv(element a) const {
  if (a == 0) throw usage_error("division by zero in F_" + std::to_string(p_));
  std::int64_t t = 0, new_t = 1, r = p_, new_r = a;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  return reduce(t);
}

}  // namespace fsplit
