#include "fsplit/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <sstream>

#include "fsplit/errors.hpp"
#include "fsplit/parse.hpp"
#include "fsplit/report.hpp"
#include "fsplit/toric.hpp"

namespace fsplit {

namespace {

using json = nlohmann::ordered_json;

const char* const cite_fedder = "Fedder's criterion: S/I is F-pure iff (I^[p] : I) is not contained in m^[p]";
const char* const cite_nu =
    "nu_e(a) = max{r : a^r (I^[q] : I) not contained in m^[q]}, and fpt(a) = lim nu_e(a)/p^e";
const char* const cite_bound =
    "nu_e(m) <= -a(R)(q-1) for F-pure graded rings; strict for every e when R is not quasi-Gorenstein";
const char* const cite_pair = "(R, a^t) is sharply F-pure iff a^ceil(t(q-1)) (I^[q] : I) is not in m^[q] for some e";
const char* const cite_omega =
    "(I^[q] : I)/I^[q] is a graded shift of omega^(1-q), with a minimal generator in degree n(q-1) - nu_e(m)";
const char* const cite_asigma =
    "for toric rings c(m) = -a_sigma(R), and a_sigma(R) = a(R) when R is standard graded";
const char* const cite_toric_gor = "a toric ring is Gorenstein iff omega is principal iff fpt(m) = -a_sigma(R)";
const char* const cite_qgor =
    "for a standard graded Q-Gorenstein ring with omega^(c) principal and generated in degree D, fpt(m) = D/c";
const char* const candidate_note =
    "candidate: nu_e/(p^e - 1) agreed at the two largest e; this is evidence, not a proof";

struct options {
  std::string json_path;
  std::uint64_t budget = budget::default_limit;
  std::uint64_t seed = 0;
  std::string file;
  int e_max = 2;
  int e = 1;
  std::string ideal_spec;
  std::string ainv;
  std::string t;
  std::string output;
  std::uint32_t p = 0;
};

struct session {
  options opt;
  report rep;
  bool report_ready = false;
  std::string text;

  void load() {
    std::ifstream in(opt.file, std::ios::binary);
    if (!in) throw usage_error("cannot read " + opt.file);
    std::ostringstream ss;
    ss << in.rdbuf();
    text = ss.str();
    rep.input_sha = sha256_hex(text);
    report_ready = true;
  }
};

ring_file load_ring(session& s) {
  s.load();
  if (looks_like_cone(s.text)) throw usage_error(s.opt.file + " describes a cone; this command needs a ring");
  ring_file rf = parse_ring(s.text);
  for (const auto& g : rf.generators) {
    if (!g.is_homogeneous()) throw usage_error("generator " + g.to_string() + " is not homogeneous");
    if (g.is_constant() && !g.is_zero()) throw usage_error("the ideal contains a unit");
  }
  return rf;
}

hilbert_basis_data load_cone(session& s, cone_file* raw = nullptr) {
  s.load();
  cone_file cf = parse_cone(s.text);
  cone c = make_cone(cf.dim, cf.rays, cf.grading, &s.rep.warnings);
  if (raw) *raw = cf;
  return hilbert_basis(c);
}

std::optional<rational> declared_ainv(const session& s, const ring_file& rf) {
  if (!s.opt.ainv.empty()) return parse_rational(s.opt.ainv);
  return rf.a_invariant;
}

// The ideal a for nu and pair: --ideal, then the file's `a` line; nullopt means m.
std::optional<ideal> chosen_a(const session& s, const ring_file& rf) {
  if (s.opt.ideal_spec == "m") return std::nullopt;
  if (!s.opt.ideal_spec.empty()) {
    auto ring = make_ring(rf.ctx);
    std::vector<polynomial> gens;
    std::string spec = s.opt.ideal_spec;
    std::size_t start = 0;
    while (start <= spec.size()) {
      std::size_t end = spec.find(';', start);
      if (end == std::string::npos) end = spec.size();
      std::string piece = spec.substr(start, end - start);
      if (piece.find_first_not_of(" \t") != std::string::npos) gens.push_back(parse_polynomial(piece, ring));
      start = end + 1;
    }
    return ideal(rf.ctx, std::move(gens));
  }
  if (rf.a_generators) return rf.a_ideal();
  return std::nullopt;
}

std::int64_t power_of(std::uint32_t p, int e) {
  std::int64_t q = 1;
  for (int i = 0; i < e; ++i) q *= p;
  return q;
}

// Fills rows e = 1..e_max into the report as they finish, so a budget
// failure still leaves the completed rows in place.
nu_table fill_rows(session& s, const ideal& I, const std::optional<ideal>& a, int e_max) {
  if (e_max < 1) throw usage_error("--e-max must be at least 1");
  nu_table table;
  table.p = I.context()->characteristic();
  for (int e = 1; e <= e_max; ++e) {
    budget b(s.opt.budget);
    nu_value nu = a ? nu_e_general(I, *a, e, b) : nu_e_maximal(I, e, b);
    nu_row row{e, power_of(table.p, e), nu};
    table.rows.push_back(row);
    s.rep.rows.push_back(row);
  }
  return table;
}

int cmd_fpure(session& s) {
  ring_file rf = load_ring(s);
  budget b(s.opt.budget);
  bool ok = fedder_fpure(rf.defining_ideal(), b);
  s.rep.result["f_pure"] = ok;
  s.rep.verdict = ok ? "F-pure" : "not F-pure";
  s.rep.citations.push_back(cite_fedder);
  return ok ? exit_ok : exit_not_f_pure;
}

int cmd_nu(session& s) {
  ring_file rf = load_ring(s);
  auto a = chosen_a(s, rf);
  s.rep.result["ideal"] = a ? "a" : "m";
  fill_rows(s, rf.defining_ideal(), a, s.opt.e_max);
  s.rep.citations.push_back(cite_nu);
  return exit_ok;
}

int cmd_fpt(session& s) {
  ring_file rf = load_ring(s);
  auto a = chosen_a(s, rf);
  s.rep.result["ideal"] = a ? "a" : "m";
  nu_table table = fill_rows(s, rf.defining_ideal(), a, s.opt.e_max);
  s.rep.citations.push_back(cite_nu);
  if (!table.f_pure()) {
    s.rep.verdict = "NOT_F_PURE";
    return exit_not_f_pure;
  }
  auto ainv = declared_ainv(s, rf);
  if (a && ainv) {
    s.rep.warnings.push_back("the a-invariant bound applies to fpt(m) only; ignored for this ideal");
    ainv.reset();
  }
  s.rep.fpt = estimate_fpt(table, ainv);
  if (s.rep.fpt->exact_candidate) s.rep.warnings.push_back(candidate_note);
  if (ainv) s.rep.citations.push_back(cite_bound);
  return exit_ok;
}

int cmd_pair(session& s) {
  ring_file rf = load_ring(s);
  if (s.opt.t.empty()) throw usage_error("--t is required");
  rational t = parse_rational(s.opt.t);
  auto a = chosen_a(s, rf);
  budget b(s.opt.budget);
  pair_test pt = sharp_fpure_pair(rf.defining_ideal(), a, t, s.opt.e, b);
  s.rep.rows.push_back({s.opt.e, power_of(rf.ctx->characteristic(), s.opt.e), pt.nu});
  s.rep.result["t"] = to_string(t);
  s.rep.result["e"] = s.opt.e;
  s.rep.result["required"] = pt.required;
  s.rep.result["sharply_f_pure"] = pt.sharply_f_pure;
  s.rep.citations.push_back(cite_pair);
  if (!pt.nu.f_pure()) {
    s.rep.verdict = "NOT_F_PURE";
    return exit_not_f_pure;
  }
  s.rep.verdict = pt.sharply_f_pure ? "sharply F-pure" : "not sharply F-pure at this e";
  return exit_ok;
}

int cmd_omega(session& s) {
  ring_file rf = load_ring(s);
  ideal I = rf.defining_ideal();
  if (s.opt.e < 1) throw usage_error("--e must be at least 1");
  json checks = json::array();
  bool all = true;
  s.rep.citations.push_back(cite_omega);
  for (int e = 1; e <= s.opt.e; ++e) {
    budget b(s.opt.budget);
    omega_check oc = omega_degree_check(I, e, b);
    s.rep.rows.push_back({e, power_of(rf.ctx->characteristic(), e), oc.nu});
    if (!oc.nu.f_pure()) {
      s.rep.verdict = "NOT_F_PURE";
      s.rep.result["checks"] = checks;
      return exit_not_f_pure;
    }
    checks.push_back({{"e", e},
                      {"target", oc.target},
                      {"degrees", oc.degrees},
                      {"target_found", oc.target_found},
                      {"containment", oc.containment},
                      {"passed", oc.passed()}});
    all = all && oc.passed();
  }
  s.rep.result["checks"] = checks;
  s.rep.verdict = all ? "pass" : "fail";
  return exit_ok;
}

json tuple_json(const int_vec& v) { return json(v); }

json tuples_json(const std::vector<int_vec>& vs) {
  json a = json::array();
  for (const auto& v : vs) a.push_back(tuple_json(v));
  return a;
}

void hb_payload(session& s, const hilbert_basis_data& hb) {
  s.rep.result["dual_rays"] = tuples_json(hb.dual_rays);
  s.rep.result["hilbert_basis"] = tuples_json(hb.basis);
  if (hb.grading) {
    s.rep.result["degrees"] = hb.degrees;
    s.rep.result["standard_graded"] = hb.standard_graded;
  }
}

// Records polyhedral Gorenstein data; returns the toric verdict and threshold.
struct toric_summary {
  bool gorenstein = false;
  std::optional<qgor_data> qgor;
  rational a_sig;
};

toric_summary toric_core(session& s, const hilbert_basis_data& hb) {
  toric_summary t;
  auto P = make_newton_polyhedron(hb);
  auto omega = omega_mingens(hb, 1);
  s.rep.result["omega_generators"] = tuples_json(omega.generators);
  t.a_sig = a_sigma(hb, P);
  t.gorenstein = gorenstein_toric(hb);
  t.qgor = qgor_index_and_degree(hb);
  s.rep.result["a_sigma"] = to_string(t.a_sig);
  s.rep.result["gorenstein"] = t.gorenstein;
  return t;
}

void qgor_payload(session& s, const hilbert_basis_data& hb, const std::optional<qgor_data>& q) {
  s.rep.result["q_gorenstein"] = q.has_value();
  if (!q) return;
  s.rep.result["index"] = q->index;
  s.rep.result["generator"] = tuple_json(q->generator);
  if (q->degree) {
    s.rep.result["degree"] = *q->degree;
    s.rep.result["fpt"] = to_string(*q->threshold());
    if (!hb.standard_graded)
      s.rep.warnings.push_back("the grading is not standard; D/c is reported but is not asserted to equal fpt(m)");
  }
}

int gorenstein_cone(session& s, bool e_max_given) {
  cone_file raw;
  hilbert_basis_data hb = load_cone(s, &raw);
  hb_payload(s, hb);
  toric_summary t = toric_core(s, hb);
  qgor_payload(s, hb, t.qgor);
  s.rep.citations.push_back(cite_asigma);
  s.rep.citations.push_back(cite_toric_gor);
  s.rep.verdict = to_string(t.gorenstein ? verdict_kind::quasi_gorenstein : verdict_kind::not_quasi_gorenstein);
  std::optional<rational> fpt;
  if (t.qgor && t.qgor->degree) {
    fpt = t.qgor->threshold();
    s.rep.citations.push_back(cite_qgor);
    bool c1 = t.qgor->index == 1;
    bool eq = *fpt == -t.a_sig;
    if (hb.standard_graded && (c1 != t.gorenstein || eq != t.gorenstein))
      s.rep.warnings.push_back("Gorenstein data are incoherent: index " + std::to_string(t.qgor->index) + ", fpt " +
                               to_string(*fpt) + ", -a_sigma " + to_string(-t.a_sig));
  }
  if (e_max_given) {
    std::uint32_t p = s.opt.p ? s.opt.p : raw.p.value_or(0);
    if (!p) throw usage_error("cross-checking through the presentation needs `p` in the cone file or --p");
    budget b(s.opt.budget);
    ideal I = toric_present(hb, p, b);
    nu_table table = fill_rows(s, I, std::nullopt, s.opt.e_max);
    if (!table.f_pure()) {
      s.rep.warnings.push_back("the presentation is not F-pure at this characteristic");
      return exit_not_f_pure;
    }
    s.rep.fpt = estimate_fpt(table, t.a_sig);
    s.rep.citations.push_back(cite_nu);
    if (s.rep.fpt->exact_candidate) {
      s.rep.warnings.push_back(candidate_note);
      if (fpt && *s.rep.fpt->exact_candidate != *fpt)
        s.rep.warnings.push_back("the Fedder candidate " + to_string(*s.rep.fpt->exact_candidate) +
                                 " differs from the polyhedral threshold " + to_string(*fpt));
    }
  }
  return exit_ok;
}

int cmd_gorenstein(session& s, bool e_max_given) {
  s.load();
  if (looks_like_cone(s.text)) return gorenstein_cone(s, e_max_given);
  ring_file rf = load_ring(s);
  ideal I = rf.defining_ideal();
  auto ainv = declared_ainv(s, rf);
  if (!ainv) {
    budget b(s.opt.budget);
    try {
      ainv = ci_a_invariant(I, b);
      s.rep.warnings.push_back("a(R) computed from the complete intersection degrees");
    } catch (const usage_error& e) {
      throw usage_error(std::string(e.what()) + "; supply the a-invariant with `ainv =` or --ainv");
    }
  }
  nu_table table = fill_rows(s, I, std::nullopt, s.opt.e_max);
  s.rep.citations.push_back(cite_nu);
  if (!table.f_pure()) {
    s.rep.verdict = "NOT_F_PURE";
    return exit_not_f_pure;
  }
  s.rep.fpt = estimate_fpt(table, ainv);
  gorenstein_verdict v = gorenstein_criterion(*s.rep.fpt, *ainv);
  s.rep.verdict = to_string(v.verdict);
  s.rep.result["a_invariant"] = to_string(v.a_invariant);
  s.rep.result["fpt"] = v.fpt ? json(to_string(*v.fpt)) : json(nullptr);
  s.rep.citations.push_back(cite_bound);
  s.rep.citations.push_back(v.hypothesis_note);
  if (s.rep.fpt->exact_candidate) s.rep.warnings.push_back(candidate_note);
  return exit_ok;
}

int cmd_toric(session& s, const std::string& what) {
  cone_file raw;
  hilbert_basis_data hb = load_cone(s, &raw);
  hb_payload(s, hb);
  if (what == "ainv") {
    auto P = make_newton_polyhedron(hb);
    auto omega = omega_mingens(hb, 1);
    s.rep.result["omega_generators"] = tuples_json(omega.generators);
    rational a = a_sigma(hb, P);
    s.rep.result["a_sigma"] = to_string(a);
    s.rep.result["c"] = to_string(-a);
    s.rep.citations.push_back(cite_asigma);
  } else if (what == "gorenstein") {
    bool g = gorenstein_toric(hb);
    s.rep.result["gorenstein"] = g;
    s.rep.verdict = g ? "Gorenstein" : "not Gorenstein";
    s.rep.citations.push_back(cite_toric_gor);
  } else if (what == "qgor") {
    if (!hb.grading) throw usage_error("the cone file needs a `grading` line to compute D");
    auto q = qgor_index_and_degree(hb);
    qgor_payload(s, hb, q);
    s.rep.verdict = q ? "Q-Gorenstein" : "NOT_QGOR";
    s.rep.citations.push_back(cite_qgor);
  } else {
    std::uint32_t p = s.opt.p ? s.opt.p : raw.p.value_or(0);
    if (!p) throw usage_error("the presentation needs `p` in the cone file or --p");
    budget b(s.opt.budget);
    ideal I = toric_present(hb, p, b);
    ring_file rf;
    rf.ctx = I.context();
    rf.generators = I.groebner_basis(b);
    std::string text = render_ring(rf);
    s.rep.result["ring"] = text;
    json gens = json::array();
    for (const auto& g : rf.generators) gens.push_back(g.to_string());
    s.rep.result["generators"] = gens;
    if (!s.opt.output.empty()) {
      std::ofstream out(s.opt.output);
      if (!out) throw usage_error("cannot write " + s.opt.output);
      out << text;
    }
  }
  return exit_ok;
}

std::string join_args(int argc, const char* const* argv) {
  std::string s;
  for (int i = 1; i < argc; ++i) {
    if (i > 1) s += ' ';
    s += argv[i];
  }
  return s;
}

void emit(const session& s, std::ostream& out) {
  out << s.rep.to_text();
  if (!s.opt.json_path.empty()) {
    std::ofstream j(s.opt.json_path);
    if (!j) throw usage_error("cannot write " + s.opt.json_path);
    j << s.rep.to_json().dump(2) << "\n";
  }
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  session s;
  s.rep.command = join_args(argc, argv);
  CLI::App app{"F-splitting invariants of graded rings and toric semigroup rings"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--json", s.opt.json_path, "Write the JSON report to this path");
  app.add_option("--budget", s.opt.budget, "Reduction step budget per computation")->check(CLI::PositiveNumber);
  app.add_option("--seed", s.opt.seed, "Accepted for reproducible scripting; every algorithm is deterministic");

  auto ring_arg = [&](CLI::App* sub) { sub->add_option("ring", s.opt.file, "Ring file")->required(); };
  auto ideal_opt = [&](CLI::App* sub) {
    sub->add_option("--ideal", s.opt.ideal_spec, "Ideal a: `m`, or generators separated by `;`");
  };

  auto* fpure = app.add_subcommand("fpure", "Fedder F-purity test");
  ring_arg(fpure);
  auto* nu = app.add_subcommand("nu", "nu_e table");
  ring_arg(nu);
  nu->add_option("--e-max", s.opt.e_max, "Largest e")->required();
  ideal_opt(nu);
  auto* fpt = app.add_subcommand("fpt", "F-pure threshold bounds and candidate");
  ring_arg(fpt);
  fpt->add_option("--e-max", s.opt.e_max, "Largest e")->required();
  fpt->add_option("--ainv", s.opt.ainv, "a-invariant a(R), giving the upper bound -a(R)");
  ideal_opt(fpt);
  auto* pair = app.add_subcommand("pair", "Sharp F-purity of (R, a^t) at one e");
  ring_arg(pair);
  pair->add_option("--t", s.opt.t, "Exponent t (rational)")->required();
  pair->add_option("--e", s.opt.e, "Frobenius exponent")->required();
  ideal_opt(pair);
  auto* omega = app.add_subcommand("omega-check", "Degree check of n(q-1) - nu_e against (I^[q]:I)/I^[q]");
  ring_arg(omega);
  omega->add_option("--e", s.opt.e, "Check e = 1..E")->required();
  auto* gor = app.add_subcommand("gorenstein", "Quasi-Gorenstein verdict from fpt(m) = -a(R)");
  gor->add_option("input", s.opt.file, "Ring or cone file")->required();
  auto* gor_e = gor->add_option("--e-max", s.opt.e_max, "Largest e");
  gor->add_option("--ainv", s.opt.ainv, "a-invariant a(R)");
  gor->add_option("--p", s.opt.p, "Characteristic for the cone presentation");
  auto* toric = app.add_subcommand("toric", "Polyhedral computations on a cone");
  toric->require_subcommand(1);
  std::string toric_cmd;
  for (const char* name : {"ainv", "gorenstein", "qgor", "present"}) {
    auto* sub = toric->add_subcommand(name);
    sub->add_option("cone", s.opt.file, "Cone file")->required();
    if (std::string(name) == "present") {
      sub->add_option("--p", s.opt.p, "Characteristic (overrides the cone file)");
      sub->add_option("--output", s.opt.output, "Also write the ring file here");
    }
    sub->callback([&toric_cmd, name] { toric_cmd = name; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return exit_ok;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  }

  int code = exit_ok;
  try {
    if (*fpure) code = cmd_fpure(s);
    else if (*nu) code = cmd_nu(s);
    else if (*fpt) code = cmd_fpt(s);
    else if (*pair) code = cmd_pair(s);
    else if (*omega) code = cmd_omega(s);
    else if (*gor) code = cmd_gorenstein(s, gor_e->count() > 0);
    else code = cmd_toric(s, toric_cmd);
  } catch (const resource_error& e) {
    err << "resource limit: " << e.what() << "\n";
    if (!s.report_ready) return exit_resource;
    s.rep.warnings.push_back(std::string("incomplete: ") + e.what());
    code = exit_resource;
  } catch (const usage_error& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  }
  try {
    emit(s, out);
  } catch (const usage_error& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  }
  return code;
}

}  // namespace fsplit
