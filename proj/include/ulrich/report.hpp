#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace ulrich {

using Json = nlohmann::ordered_json;

/// One verified claim inside a report.
struct Check {
  std::string claim;
  /// Stable identifier of the claim being checked.
  std::string anchor;
  /// PASS, FAIL, INCONCLUSIVE, or DEDUCED_TRUE / DEDUCED_FALSE.
  std::string verdict;
  Json certificate = Json::object();
  bool required = true;
};

struct Report {
  std::string pipeline;
  Json inputs = Json::object();
  std::vector<Check> checks;
  std::string verdict;
  std::string field = "q";
  std::vector<Report> attached;

  Check& add(std::string claim, std::string anchor, bool pass, Json certificate = Json::object(),
             bool required = true);
  Check& add_verdict(std::string claim, std::string anchor, std::string verdict, Json certificate = Json::object(),
                     bool required = true);
  /// Conjunction over required checks.
  bool required_pass() const;
  bool any_inconclusive() const;

  Json to_json() const;
  std::string to_text() const;
};

inline constexpr int kReportSchema = 1;

}  // namespace ulrich
