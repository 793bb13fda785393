#include "fsplit/parse.hpp"

#include <cctype>
#include <charconv>
#include <map>

#include "fsplit/errors.hpp"

namespace fsplit {

namespace {

// One logical `key = value` line with the position of its value.
struct entry {
  std::string value;
  std::size_t line = 0;
  std::size_t column = 0;  // 1-based column of value[0]
};

// Replaces U+2212 by '-' and maps byte offsets back to character columns.
struct normalized {
  std::string text;
  std::vector<std::size_t> columns;  // 1-based character column for each byte of text
};

normalized normalize_line(std::string_view line) {
  normalized out;
  std::size_t col = 1;
  for (std::size_t i = 0; i < line.size();) {
    auto c = static_cast<unsigned char>(line[i]);
    if (c == 0xE2 && i + 2 < line.size() + 0 && line.substr(i, 3) == "\xE2\x88\x92") {
      out.text.push_back('-');
      out.columns.push_back(col);
      i += 3;
    } else if (c >= 0x80) {
      // Keep other UTF-8 sequences intact; they are rejected by the grammar.
      std::size_t len = c >= 0xF0 ? 4 : c >= 0xE0 ? 3 : c >= 0xC0 ? 2 : 1;
      for (std::size_t k = 0; k < len && i + k < line.size(); ++k) {
        out.text.push_back(line[i + k]);
        out.columns.push_back(col);
      }
      i += len;
    } else {
      out.text.push_back(line[i]);
      out.columns.push_back(col);
      ++i;
    }
    ++col;
  }
  out.columns.push_back(col);
  return out;
}

struct located_text {
  std::string text;
  std::vector<std::size_t> columns;
  std::size_t line = 0;
  std::size_t col_at(std::size_t pos) const { return columns[std::min(pos, columns.size() - 1)]; }
};

std::map<std::string, located_text> split_entries(std::string_view text,
                                                  const std::vector<std::string>& allowed) {
  std::map<std::string, located_text> out;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++line_no;
    std::string_view raw = text.substr(start, end - start);
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
    start = end + 1;
    auto norm = normalize_line(raw);
    std::string& s = norm.text;
    std::size_t hash = s.find('#');
    if (hash != std::string::npos) s.resize(hash);
    std::size_t first = s.find_first_not_of(" \t");
    if (first == std::string::npos) {
      if (end == text.size()) break;
      continue;
    }
    std::size_t eq = s.find('=');
    if (eq == std::string::npos) throw parse_error("expected `key = value`", line_no, norm.columns[first]);
    std::size_t key_end = s.find_last_not_of(" \t", eq == 0 ? 0 : eq - 1);
    if (eq == first || key_end == std::string::npos || key_end < first)
      throw parse_error("missing key before `=`", line_no, norm.columns[eq]);
    std::string key = s.substr(first, key_end - first + 1);
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end())
      throw parse_error("unknown key `" + key + "`", line_no, norm.columns[first]);
    if (out.count(key)) throw parse_error("duplicate key `" + key + "`", line_no, norm.columns[first]);
    located_text v;
    v.line = line_no;
    v.text = s.substr(eq + 1);
    v.columns.assign(norm.columns.begin() + static_cast<std::ptrdiff_t>(eq + 1), norm.columns.end());
    out.emplace(key, std::move(v));
    if (end == text.size()) break;
  }
  return out;
}

bool is_name_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_name_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

class cursor {
 public:
  explicit cursor(const located_text& t) : t_(t) {}

  void skip_ws() {
    while (pos_ < t_.text.size() && (t_.text[pos_] == ' ' || t_.text[pos_] == '\t')) ++pos_;
  }
  bool at_end() {
    skip_ws();
    return pos_ >= t_.text.size();
  }
  char peek() {
    skip_ws();
    return pos_ < t_.text.size() ? t_.text[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected `") + c + "`");
  }
  [[noreturn]] void fail(const std::string& msg) {
    skip_ws();
    std::string got = pos_ < t_.text.size() ? std::string(" near `") + t_.text[pos_] + "`" : " at end of line";
    throw parse_error(msg + got, t_.line, t_.col_at(pos_));
  }
  [[noreturn]] void fail_at(std::size_t pos, const std::string& msg) {
    throw parse_error(msg, t_.line, t_.col_at(pos));
  }
  std::size_t pos() const { return pos_; }

  // Decimal digits; returns the literal text.
  std::string digits() {
    skip_ws();
    std::size_t s = pos_;
    while (pos_ < t_.text.size() && std::isdigit(static_cast<unsigned char>(t_.text[pos_]))) ++pos_;
    if (s == pos_) fail("expected an integer");
    return t_.text.substr(s, pos_ - s);
  }
  std::string name() {
    skip_ws();
    std::size_t s = pos_;
    if (pos_ >= t_.text.size() || !is_name_start(t_.text[pos_])) fail("expected a variable name");
    while (pos_ < t_.text.size() && is_name_char(t_.text[pos_])) ++pos_;
    return t_.text.substr(s, pos_ - s);
  }
  std::int64_t signed_int() {
    bool neg = false;
    if (accept('-')) neg = true;
    else accept('+');
    std::size_t at = pos();
    std::string d = digits();
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(d.data(), d.data() + d.size(), v);
    if (ec != std::errc() || ptr != d.data() + d.size()) fail_at(at, "integer out of range");
    return neg ? -v : v;
  }

 private:
  const located_text& t_;
  std::size_t pos_ = 0;
};

class poly_parser {
 public:
  poly_parser(cursor& c, const ring_ptr& ring) : c_(c), ring_(ring) {}

  polynomial expr() {
    polynomial acc = term_();
    while (true) {
      if (c_.accept('+')) acc = acc + term_();
      else if (c_.accept('-')) acc = acc - term_();
      else return acc;
    }
  }

 private:
  polynomial term_() {
    polynomial acc = unary();
    while (c_.accept('*')) acc = acc * unary();
    return acc;
  }
  polynomial unary() {
    if (c_.accept('-')) return -unary();
    if (c_.accept('+')) return unary();
    return power();
  }
  polynomial power() {
    polynomial base = atom();
    if (c_.accept('^')) {
      std::size_t at = c_.pos();
      std::string d = c_.digits();
      std::uint64_t k = 0;
      auto [ptr, ec] = std::from_chars(d.data(), d.data() + d.size(), k);
      if (ec != std::errc() || k > 65535) c_.fail_at(at, "exponent too large");
      return pow(base, k);
    }
    return base;
  }
  polynomial atom() {
    char ch = c_.peek();
    if (ch == '(') {
      c_.accept('(');
      polynomial inner = expr();
      c_.expect(')');
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      std::string d = c_.digits();
      const std::uint64_t p = ring_->context().characteristic();
      std::uint64_t v = 0;
      for (char x : d) v = (v * 10 + static_cast<std::uint64_t>(x - '0')) % p;
      return polynomial::constant(ring_, static_cast<std::int64_t>(v));
    }
    if (is_name_start(ch)) {
      std::size_t at = c_.pos();
      c_.skip_ws();
      at = c_.pos();
      std::string n = c_.name();
      int idx = ring_->context().index_of(n);
      if (idx < 0) c_.fail_at(at, "unknown variable `" + n + "`");
      return polynomial::variable(ring_, static_cast<std::size_t>(idx));
    }
    c_.fail("expected a number, variable or `(`");
  }

  cursor& c_;
  const ring_ptr& ring_;
};

// Splits on ';' keeping column maps; empty pieces are skipped.
std::vector<located_text> split_list(const located_text& t) {
  std::vector<located_text> out;
  std::size_t s = 0;
  while (s <= t.text.size()) {
    std::size_t e = t.text.find(';', s);
    if (e == std::string::npos) e = t.text.size();
    located_text piece;
    piece.line = t.line;
    piece.text = t.text.substr(s, e - s);
    piece.columns.assign(t.columns.begin() + static_cast<std::ptrdiff_t>(s),
                         t.columns.begin() + static_cast<std::ptrdiff_t>(std::min(e + 1, t.columns.size())));
    if (piece.text.find_first_not_of(" \t") != std::string::npos) out.push_back(std::move(piece));
    s = e + 1;
  }
  return out;
}

std::vector<polynomial> parse_poly_list(const located_text& t, const ring_ptr& ring) {
  std::vector<polynomial> out;
  for (const auto& piece : split_list(t)) {
    cursor c(piece);
    poly_parser pp(c, ring);
    polynomial f = pp.expr();
    if (!c.at_end()) c.fail("unexpected input");
    out.push_back(std::move(f));
  }
  return out;
}

std::uint32_t parse_prime(const located_text& t) {
  cursor c(t);
  c.skip_ws();
  std::size_t at = c.pos();
  std::int64_t p = c.signed_int();
  if (!c.at_end()) c.fail("unexpected input after the characteristic");
  if (p < 2 || p >= (std::int64_t{1} << 31)) c.fail_at(at, "characteristic must be a prime below 2^31");
  if (!is_prime(static_cast<std::uint64_t>(p))) c.fail_at(at, std::to_string(p) + " is not prime");
  return static_cast<std::uint32_t>(p);
}

int_vec parse_tuple(cursor& c) {
  c.expect('(');
  int_vec v;
  if (c.peek() != ')') {
    v.push_back(c.signed_int());
    while (c.accept(',')) v.push_back(c.signed_int());
  }
  c.expect(')');
  return v;
}

std::string tuple_string(const int_vec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s + ")";
}

std::vector<std::string> scan_keys(std::string_view text) {
  std::vector<std::string> keys;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    std::size_t eq = line.find('=');
    if (eq != std::string_view::npos) {
      std::string key(line.substr(0, eq));
      key.erase(0, key.find_first_not_of(" \t"));
      key.erase(key.find_last_not_of(" \t") + 1);
      keys.push_back(key);
    }
    start = end + 1;
  }
  return keys;
}

}  // namespace

ideal ring_file::a_ideal() const {
  if (a_generators) return ideal(ctx, *a_generators);
  return ideal::maximal(ctx);
}

bool looks_like_cone(std::string_view text) {
  for (const auto& k : scan_keys(text))
    if (k == "dim" || k == "rays") return true;
  return false;
}

polynomial parse_polynomial(std::string_view text, const ring_ptr& ring) {
  auto norm = normalize_line(text);
  located_text t{norm.text, norm.columns, 1};
  cursor c(t);
  poly_parser pp(c, ring);
  polynomial f = pp.expr();
  if (!c.at_end()) c.fail("unexpected input");
  return f;
}

ring_file parse_ring(std::string_view text) {
  auto entries = split_entries(text, {"p", "vars", "I", "a", "ainv"});
  if (!entries.count("p")) throw parse_error("missing `p = <prime>` line", 1, 1);
  if (!entries.count("vars")) throw parse_error("missing `vars = ...` line", 1, 1);
  std::uint32_t p = parse_prime(entries.at("p"));

  const auto& vars = entries.at("vars");
  cursor c(vars);
  std::vector<std::string> names;
  std::vector<int> weights;
  while (!c.at_end()) {
    c.skip_ws();
    std::size_t at = c.pos();
    std::string n = c.name();
    if (std::find(names.begin(), names.end(), n) != names.end()) c.fail_at(at, "duplicate variable `" + n + "`");
    int w = 1;
    if (c.accept(':')) {
      c.skip_ws();
      std::size_t wat = c.pos();
      std::int64_t v = c.signed_int();
      if (v < 1 || v > 1'000'000) c.fail_at(wat, "weight must be a positive integer");
      w = static_cast<int>(v);
    }
    names.push_back(n);
    weights.push_back(w);
  }
  if (names.empty()) c.fail("expected at least one variable");
  if (names.size() > max_vars) c.fail_at(0, "at most " + std::to_string(max_vars) + " variables are supported");

  ring_file r;
  r.ctx = ring_context::make(p, names, weights);
  auto ring = make_ring(r.ctx);
  if (entries.count("I")) r.generators = parse_poly_list(entries.at("I"), ring);
  if (entries.count("a")) r.a_generators = parse_poly_list(entries.at("a"), ring);
  if (entries.count("ainv")) {
    const auto& t = entries.at("ainv");
    std::string s = t.text;
    s.erase(0, s.find_first_not_of(" \t"));
    s.erase(s.find_last_not_of(" \t") + 1);
    try {
      r.a_invariant = parse_rational(s);
    } catch (const usage_error& e) {
      std::size_t first = t.text.find_first_not_of(" \t");
      throw parse_error(e.what(), t.line, t.col_at(first == std::string::npos ? 0 : first));
    }
  }
  return r;
}

cone_file parse_cone(std::string_view text) {
  auto entries = split_entries(text, {"dim", "rays", "grading", "p"});
  if (!entries.count("dim")) throw parse_error("missing `dim = <int>` line", 1, 1);
  if (!entries.count("rays")) throw parse_error("missing `rays = (..) ...` line", 1, 1);
  cone_file cf;
  {
    cursor c(entries.at("dim"));
    c.skip_ws();
    std::size_t at = c.pos();
    std::int64_t d = c.signed_int();
    if (!c.at_end()) c.fail("unexpected input");
    if (d < 1) c.fail_at(at, "dimension must be positive");
    cf.dim = static_cast<std::size_t>(d);
  }
  {
    cursor c(entries.at("rays"));
    while (!c.at_end()) {
      c.skip_ws();
      std::size_t at = c.pos();
      int_vec v = parse_tuple(c);
      if (v.size() != cf.dim)
        c.fail_at(at, "ray has " + std::to_string(v.size()) + " entries, expected " + std::to_string(cf.dim));
      cf.rays.push_back(std::move(v));
    }
    if (cf.rays.empty()) c.fail("expected at least one ray");
  }
  if (entries.count("grading")) {
    cursor c(entries.at("grading"));
    c.skip_ws();
    std::size_t at = c.pos();
    int_vec w = parse_tuple(c);
    if (!c.at_end()) c.fail("unexpected input");
    if (w.size() != cf.dim) c.fail_at(at, "grading must have " + std::to_string(cf.dim) + " entries");
    cf.grading = std::move(w);
  }
  if (entries.count("p")) cf.p = parse_prime(entries.at("p"));
  return cf;
}

std::string render_ring(const ring_file& r) {
  std::string s = "p = " + std::to_string(r.ctx->characteristic()) + "\nvars =";
  for (std::size_t i = 0; i < r.ctx->num_vars(); ++i) {
    s += " " + r.ctx->names()[i];
    if (r.ctx->weight(i) != 1) s += ":" + std::to_string(r.ctx->weight(i));
  }
  s += "\n";
  auto list = [](const std::vector<polynomial>& gens) {
    std::string out;
    for (std::size_t i = 0; i < gens.size(); ++i) {
      if (i) out += " ; ";
      out += gens[i].to_string();
    }
    return out;
  };
  s += "I = " + list(r.generators) + "\n";
  if (r.a_generators) s += "a = " + list(*r.a_generators) + "\n";
  if (r.a_invariant) s += "ainv = " + to_string(*r.a_invariant) + "\n";
  return s;
}

std::string render_cone(const cone_file& c) {
  std::string s = "dim = " + std::to_string(c.dim) + "\nrays =";
  for (const auto& r : c.rays) s += " " + tuple_string(r);
  s += "\n";
  if (c.grading) s += "grading = " + tuple_string(*c.grading) + "\n";
  if (c.p) s += "p = " + std::to_string(*c.p) + "\n";
  return s;
}

bool operator==(const ring_file& a, const ring_file& b) {
  if (!a.ctx->same_as(*b.ctx)) return false;
  auto same_list = [](const std::vector<polynomial>& x, const std::vector<polynomial>& y) {
    if (x.size() != y.size()) return false;
    for (std::size_t i = 0; i < x.size(); ++i)
      if (!(x[i] == y[i])) return false;
    return true;
  };
  if (!same_list(a.generators, b.generators)) return false;
  if (a.a_generators.has_value() != b.a_generators.has_value()) return false;
  if (a.a_generators && !same_list(*a.a_generators, *b.a_generators)) return false;
  return a.a_invariant == b.a_invariant;
}

bool operator==(const cone_file& a, const cone_file& b) {
  return a.dim == b.dim && a.rays == b.rays && a.grading == b.grading && a.p == b.p;
}

}  // namespace fsplit
