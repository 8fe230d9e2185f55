#include "ulrich/report.hpp"

#include <sstream>

namespace ulrich {

Check& Report::add(std::string claim, std::string anchor, bool pass, Json certificate, bool required) {
  return add_verdict(std::move(claim), std::move(anchor), pass ? "PASS" : "FAIL", std::move(certificate), required);
}

Check& Report::add_verdict(std::string claim, std::string anchor, std::string verdict, Json certificate,
                           bool required) {
  checks.push_back({std::move(claim), std::move(anchor), std::move(verdict), std::move(certificate), required});
  return checks.back();
}

bool Report::required_pass() const {
  for (const auto& c : checks)
    if (c.required && c.verdict != "PASS") return false;
  return true;
}

bool Report::any_inconclusive() const {
  for (const auto& c : checks)
    if (c.required && c.verdict == "INCONCLUSIVE") return true;
  return false;
}

Json Report::to_json() const {
  Json j;
  j["schema"] = kReportSchema;
  j["pipeline"] = pipeline;
  j["inputs"] = inputs;
  Json arr = Json::array();
  for (const auto& c : checks) {
    Json e;
    e["claim"] = c.claim;
    e["anchor"] = c.anchor;
    e["verdict"] = c.verdict;
    e["certificate"] = c.certificate;
    e["required"] = c.required;
    arr.push_back(std::move(e));
  }
  j["checks"] = std::move(arr);
  j["verdict"] = verdict;
  j["field"] = field;
  if (!attached.empty()) {
    Json sub = Json::array();
    for (const auto& r : attached) sub.push_back(r.to_json());
    j["attached"] = std::move(sub);
  }
  return j;
}

std::string Report::to_text() const {
  std::ostringstream os;
  os << pipeline << "  [field " << field << "]\n";
  for (const auto& c : checks) {
    os << "  " << (c.required ? "* " : "  ") << c.verdict << "  " << c.claim;
    if (!c.certificate.empty()) os << "  " << c.certificate.dump();
    os << "\n";
  }
  os << "verdict: " << verdict << "\n";
  for (const auto& r : attached) {
    std::istringstream sub(r.to_text());
    std::string line;
    while (std::getline(sub, line)) os << "  | " << line << "\n";
  }
  return os.str();
}

}  // namespace ulrich
