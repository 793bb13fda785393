#include "fsplit/rational.hpp"

#include "fsplit/errors.hpp"

namespace fsplit {

std::string to_string(const rational& r) {
  rational c = r;
  c.canonicalize();
  return c.get_str();
}

rational parse_rational(std::string_view text) {
  std::string s;
  std::size_t i = 0;
  while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
  if (text.substr(i, 3) == "\xE2\x88\x92") {
    s += '-';
    i += 3;
  }
  for (; i < text.size(); ++i) {
    char c = text[i];
    if (c == ' ' || c == '\t') continue;
    s += c;
  }
  auto bad = [&] { return usage_error("malformed rational '" + std::string(text) + "'"); };
  if (s.empty()) throw bad();
  std::size_t k = 0;
  if (s[0] == '-' || s[0] == '+') k = 1;
  bool slash = false, digits = false;
  for (std::size_t j = k; j < s.size(); ++j) {
    if (s[j] == '/') {
      if (slash || !digits) throw bad();
      slash = true;
      digits = false;
    } else if (s[j] >= '0' && s[j] <= '9') {
      digits = true;
    } else {
      throw bad();
    }
  }
  if (!digits) throw bad();
  if (s[0] == '+') s.erase(0, 1);
  rational r;
  if (r.set_str(s, 10) != 0) throw bad();
  if (r.get_den() == 0) throw usage_error("zero denominator in '" + std::string(text) + "'");
  r.canonicalize();
  return r;
}

std::int64_t to_int64(const mpz_class& z) {
  if (!z.fits_slong_p()) throw resource_error("integer does not fit in 64 bits");
  return z.get_si();
}

std::int64_t ceil_int(const rational& r) {
  mpz_class q;
  mpz_cdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return to_int64(q);
}

std::int64_t floor_int(const rational& r) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return to_int64(q);
}

}  // namespace fsplit
