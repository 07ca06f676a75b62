#pragma once

#include <string>
#include <vector>

namespace preproj::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitCheckFailure = 1;
inline constexpr int kExitUsage = 2;

struct RunResult {
  int exit_code = kExitPass;
  std::string out;
  std::string err;
};

/// Runs one command line (without the program name) in process:
///   verify (lemma | theorem | identities | corner-iso | inverse [--mode printed|corrected] | all)
///   reduce --algebra (pe6|re6) "<expr>"
///   admissible (--theta t1=v,... | "<f in x, y>")
///   basis --algebra (pe6|re6) [--corner <vertex>] [--csv <file>]
///   sample [--seed <n>] [--trials <m>] [--field <p>]
/// with global flags --json and --quiet.
RunResult run(const std::vector<std::string>& args);

}  // namespace preproj::cli
