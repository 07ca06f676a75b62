#include <iostream>

#include "preproj/commands.hpp"

int main(int argc, char** argv) {
  const preproj::cli::RunResult r = preproj::cli::run(std::vector<std::string>(argv + 1, argv + argc));
  std::cout << r.out;
  std::cerr << r.err;
  return r.exit_code;
}
