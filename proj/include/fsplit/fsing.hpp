#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fsplit/ideal.hpp"
#include "fsplit/rational.hpp"

namespace fsplit {

// A nonnegative nu value, or the NOT_F_PURE marker when no generator of
// (I^[q] : I) escapes the Frobenius power of the maximal ideal.
class nu_value {
 public:
  static nu_value not_f_pure() { return nu_value(); }
  explicit nu_value(std::int64_t v) : v_(v) {}

  bool f_pure() const noexcept { return v_ >= 0; }
  std::int64_t value() const {
    if (v_ < 0) throw usage_error("NOT_F_PURE has no numeric value");
    return v_;
  }
  std::string to_string() const { return f_pure() ? std::to_string(v_) : "NOT_F_PURE"; }
  friend bool operator==(const nu_value&, const nu_value&) = default;

 private:
  nu_value() = default;
  std::int64_t v_ = -1;
};

struct nu_row {
  int e;
  std::int64_t q;
  nu_value nu;
};

struct nu_table {
  std::uint32_t p = 0;
  std::vector<nu_row> rows;

  bool f_pure() const noexcept {
    for (const auto& r : rows)
      if (!r.nu.f_pure()) return false;
    return true;
  }
};

struct fpt_estimate {
  rational lower;
  std::optional<rational> upper;
  // nu_e / (p^e - 1) when it agrees at the two largest computed e. A candidate, not a proof.
  std::optional<rational> exact_candidate;
  std::vector<nu_row> evidence;
};

enum class verdict_kind { quasi_gorenstein, not_quasi_gorenstein, inconclusive };
std::string to_string(verdict_kind v);

struct gorenstein_verdict {
  std::optional<rational> fpt;
  rational a_invariant;
  verdict_kind verdict = verdict_kind::inconclusive;
  std::string hypothesis_note;
};

struct pair_test {
  nu_value nu;
  std::int64_t required = 0;  // ceil((p^e - 1) t)
  bool sharply_f_pure = false;
};

struct omega_check {
  nu_value nu = nu_value::not_f_pure();
  std::int64_t target = 0;             // n(q-1) - nu
  std::vector<std::int64_t> degrees;   // minimal generator degrees of (I^[q]:I)/I^[q]
  bool target_found = false;
  bool containment = false;            // (I^[q]:I) inside m^[q] + m^(least degree)
  bool passed() const noexcept { return nu.f_pure() && target_found && containment; }
};

// (I^[q] : I)
ideal fedder_colon(const ideal& I, std::uint64_t q, budget& steps);

// Fedder's criterion at q = p: (I^[p] : I) not inside (x_1^p, ..., x_n^p).
bool fedder_fpure(const ideal& I, budget& steps);

// Largest sum of (q-1-a_i) over monomials x^a of J's generators with all a_i < q.
nu_value nu_from_colon(const ideal& J, std::uint64_t q);

// nu_e of the homogeneous maximal ideal.
nu_value nu_e_maximal(const ideal& I, int e, budget& steps);

// nu_e of a homogeneous ideal a containing I, by repeated multiplication
// truncated modulo m^[q].
nu_value nu_e_general(const ideal& I, const ideal& a, int e, budget& steps);

// Rows e = 1..e_max; with `a` absent the maximal ideal is used. Each row gets
// its own budget of step_limit reductions; rows may run on worker threads.
nu_table compute_nu_table(const ideal& I, const std::optional<ideal>& a, int e_max, std::uint64_t step_limit,
                          unsigned threads = 1);

// Bounds and candidate from a table; a_inv supplies the upper bound -a(R).
fpt_estimate estimate_fpt(const nu_table& table, const std::optional<rational>& a_inv);

pair_test sharp_fpure_pair(const ideal& I, const std::optional<ideal>& a, const rational& t, int e, budget& steps);

omega_check omega_degree_check(const ideal& I, int e, budget& steps);

// Koszul a-invariant sum(deg f_i) - sum(w_j); usage_error unless the
// generators form a homogeneous regular sequence.
rational ci_a_invariant(const ideal& I, budget& steps);

// Krull dimension of S/I through the leading-term ideal.
std::size_t krull_dimension(const ideal& I, budget& steps);

gorenstein_verdict gorenstein_criterion(const fpt_estimate& est, const rational& a_inv);

extern const char* const gorenstein_hypothesis_note;

}  // namespace fsplit
