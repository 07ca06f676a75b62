#include "preproj/report.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace preproj {

bool VerificationReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

std::size_t VerificationReport::pass_count() const {
  return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; }));
}

void VerificationReport::run(std::string name, const std::function<std::optional<std::string>()>& body) {
  const auto start = std::chrono::steady_clock::now();
  std::optional<std::string> residual = body();
  const auto stop = std::chrono::steady_clock::now();
  CheckResult r;
  r.name = std::move(name);
  r.passed = !residual.has_value();
  r.residual = std::move(residual);
  r.ms = std::chrono::duration<double, std::milli>(stop - start).count();
  checks.push_back(std::move(r));
}

void VerificationReport::append(const VerificationReport& other) {
  checks.insert(checks.end(), other.checks.begin(), other.checks.end());
  notes.insert(notes.end(), other.notes.begin(), other.notes.end());
  if (other.integer_certificate) {
    integer_certificate = integer_certificate.value_or(true) && *other.integer_certificate;
  }
}

nlohmann::ordered_json to_json(const VerificationReport& report, const std::string& command,
                               const AlgebraFingerprint& algebra, double total_ms) {
  nlohmann::ordered_json doc;
  doc["version"] = kToolVersion;
  doc["command"] = command;
  doc["algebra"] = {{"name", algebra.name},
                    {"dimension", algebra.dimension},
                    {"nilpotency_degree", algebra.nilpotency_degree}};
  doc["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : report.checks) {
    nlohmann::ordered_json entry;
    entry["name"] = c.name;
    entry["status"] = c.passed ? "pass" : "fail";
    entry["residual"] = c.residual ? nlohmann::ordered_json(*c.residual) : nlohmann::ordered_json(nullptr);
    entry["ms"] = c.ms;
    doc["checks"].push_back(std::move(entry));
  }
  doc["status"] = report.passed() ? "pass" : "fail";
  if (!report.notes.empty()) {
    doc["notes"] = nlohmann::ordered_json::array();
    for (const auto& n : report.notes) doc["notes"].push_back({{"name", n.name}, {"detail", n.detail}});
  }
  if (report.integer_certificate) doc["integer_certificate"] = *report.integer_certificate;
  doc["ms"] = total_ms;
  return doc;
}

std::string to_text(const VerificationReport& report) {
  std::ostringstream os;
  if (!report.title.empty()) os << report.title << '\n';
  for (const auto& c : report.checks) {
    os << (c.passed ? "[PASS] " : "[FAIL] ") << c.name << "  (" << std::fixed << std::setprecision(1) << c.ms
       << " ms)\n";
    if (c.residual) os << "       residual: " << *c.residual << '\n';
  }
  for (const auto& n : report.notes) os << "[NOTE] " << n.name << ": " << n.detail << '\n';
  if (report.integer_certificate) {
    os << "integer certificate: " << (*report.integer_certificate ? "yes" : "no") << '\n';
  }
  os << report.pass_count() << "/" << report.checks.size() << " checks passed\n";
  return os.str();
}

}  // namespace preproj
