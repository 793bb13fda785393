#include "fsplit/report.hpp"

#include <openssl/evp.h>

#include <iomanip>
#include <sstream>

#include "fsplit/errors.hpp"

namespace fsplit {

using json = nlohmann::ordered_json;

std::string sha256_hex(std::string_view data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr) != 1)
    throw std::runtime_error("SHA-256 digest failed");
  std::ostringstream os;
  for (unsigned int i = 0; i < len; ++i) os << std::hex << std::setw(2) << std::setfill('0') << int(digest[i]);
  return os.str();
}

json nu_json(const nu_value& v) {
  if (v.f_pure()) return v.value();
  return "NOT_F_PURE";
}

json report::to_json() const {
  json j;
  j["command"] = command;
  j["input_sha"] = input_sha;
  j["rows"] = json::array();
  for (const auto& r : rows) j["rows"].push_back({{"e", r.e}, {"q", r.q}, {"nu", nu_json(r.nu)}});
  if (fpt) {
    json f;
    f["lower"] = to_string(fpt->lower);
    f["upper"] = fpt->upper ? json(to_string(*fpt->upper)) : json(nullptr);
    f["candidate"] = fpt->exact_candidate ? json(to_string(*fpt->exact_candidate)) : json(nullptr);
    j["fpt"] = f;
  } else {
    j["fpt"] = nullptr;
  }
  j["verdict"] = verdict ? json(*verdict) : json(nullptr);
  j["citations"] = citations;
  j["warnings"] = warnings;
  j["result"] = result;
  return j;
}

namespace {

std::string scalar_text(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "none";
  return v.dump();
}

void flatten(const json& v, const std::string& prefix, std::ostringstream& os) {
  if (v.is_object()) {
    for (const auto& [k, x] : v.items()) flatten(x, prefix.empty() ? k : prefix + "." + k, os);
  } else if (v.is_array()) {
    bool scalars = std::all_of(v.begin(), v.end(), [](const json& x) { return x.is_primitive(); });
    if (scalars) {
      os << prefix << ":";
      for (const auto& x : v) os << " " << scalar_text(x);
      os << "\n";
    } else {
      for (std::size_t i = 0; i < v.size(); ++i) flatten(v[i], prefix + "[" + std::to_string(i) + "]", os);
    }
  } else {
    os << prefix << ": " << scalar_text(v) << "\n";
  }
}

}  // namespace

std::string report::to_text() const {
  json j = to_json();
  std::ostringstream os;
  os << "command: " << command << "\n";
  os << "input_sha256: " << input_sha << "\n";
  for (const auto& r : rows) os << "e=" << r.e << " q=" << r.q << " nu=" << r.nu.to_string() << "\n";
  if (fpt) {
    os << "fpt lower: " << scalar_text(j["fpt"]["lower"]) << "\n";
    os << "fpt upper: " << scalar_text(j["fpt"]["upper"]) << "\n";
    os << "fpt candidate: " << scalar_text(j["fpt"]["candidate"]) << "\n";
  }
  if (verdict) os << "verdict: " << *verdict << "\n";
  flatten(result, "", os);
  for (const auto& c : citations) os << "citation: " << c << "\n";
  for (const auto& w : warnings) os << "warning: " << w << "\n";
  return os.str();
}

}  // namespace fsplit
