#pragma once

#include <chrono>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace preproj {

struct CheckResult {
  std::string name;
  bool passed = false;
  /// Present exactly when the check failed.
  std::optional<std::string> residual;
  double ms = 0.0;
};

/// Informational finding that does not affect the verdict, e.g. a printed
/// statement that differs from what is verified.
struct ReportNote {
  std::string name;
  std::string detail;
};

struct VerificationReport {
  std::string title;
  std::vector<CheckResult> checks;
  std::vector<ReportNote> notes;
  std::optional<bool> integer_certificate;

  [[nodiscard]] bool passed() const;
  [[nodiscard]] std::size_t pass_count() const;

  /// Times `body`, which returns the residual text on failure or nullopt on success.
  void run(std::string name, const std::function<std::optional<std::string>()>& body);
  void append(const VerificationReport& other);
};

struct AlgebraFingerprint {
  std::string name;
  std::size_t dimension = 0;
  std::size_t nilpotency_degree = 0;
};

inline constexpr const char* kToolVersion = "0.1.0";

/// Report document in the published JSON layout (see schemas/report.schema.json).
nlohmann::ordered_json to_json(const VerificationReport& report, const std::string& command,
                               const AlgebraFingerprint& algebra, double total_ms);

/// Human-readable report: one PASS/FAIL line per check, then notes.
std::string to_text(const VerificationReport& report);

}  // namespace preproj
