#include <iostream>
#include <string>
#include <vector>

#include "spectra/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  const auto result = spectra::cli::run(args);
  std::cout << result.render();
  if (result.exit_code != 0) {
    const auto& p = result.payload;
    std::cerr << "spectra: " << p.value("reason", "error") << ": " << p.value("message", "") << '\n';
    if (!result.usage.empty()) std::cerr << result.usage;
  }
  return result.exit_code;
}
