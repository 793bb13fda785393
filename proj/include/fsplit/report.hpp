#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "fsplit/fsing.hpp"

namespace fsplit {

// Output of one CLI command. Rationals are always carried as "a/b" strings.
struct report {
  std::string command;
  std::string input_sha;
  std::vector<nu_row> rows;
  std::optional<fpt_estimate> fpt;
  std::optional<std::string> verdict;
  std::vector<std::string> citations;
  std::vector<std::string> warnings;
  nlohmann::ordered_json result = nlohmann::ordered_json::object();

  nlohmann::ordered_json to_json() const;
  // Line-oriented rendering of to_json(), so both views show the same values.
  std::string to_text() const;
};

std::string sha256_hex(std::string_view data);

nlohmann::ordered_json nu_json(const nu_value& v);

}  // namespace fsplit
