#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace ucalg {

struct CheckCase {
  std::string input;
  bool pass = false;
  std::string residual;  // empty when the case passes
};

// Outcome of one identity check over a batch of inputs.
struct Report {
  std::string check;
  nlohmann::json params = nlohmann::json::object();
  std::vector<CheckCase> cases;
  bool pass = true;

  void add_case(std::string input, bool ok, std::string residual = "") {
    cases.push_back({std::move(input), ok, std::move(residual)});
    pass = pass && ok;
  }

  // {check, inputs, pass, residuals}; residuals lists the failing cases.
  nlohmann::json to_json() const {
    nlohmann::json j;
    j["check"] = check;
    j["inputs"] = params;
    j["pass"] = pass;
    auto arr = nlohmann::json::array();
    for (const auto& c : cases) {
      if (c.pass) continue;
      arr.push_back({{"input", c.input}, {"residual", c.residual}});
    }
    j["residuals"] = arr;
    return j;
  }
};

}  // namespace ucalg
