#ifndef SPECTRA_CLI_HPP
#define SPECTRA_CLI_HPP

#include <string>
#include <vector>

#include <json.hpp>

namespace spectra::cli {

enum class Status { ok, invalid_input, inconsistent, not_found };

const char* to_string(Status s);

struct CommandResult {
  Status status = Status::ok;
  // Always carries "status"; non-ok results also carry "reason" and "message".
  nlohmann::json payload;
  int exit_code = 0;
  // Tabular rendering requested with --tsv; empty otherwise.
  std::string tsv;
  // Text for --help and usage errors.
  std::string usage;

  // What the executable prints on stdout.
  std::string render() const;
};

// argv excludes the program name.
CommandResult run(const std::vector<std::string>& argv);

}  // namespace spectra::cli

#endif  // SPECTRA_CLI_HPP
