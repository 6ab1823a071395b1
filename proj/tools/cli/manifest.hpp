#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace qnsd::cli {

// Provenance written as '#' comment lines ahead of every data section.
struct RunManifest {
  std::string subcommand;
  std::vector<std::pair<std::string, std::string>> parameters;
  std::uint64_t seed = 0;
  std::string version;
  std::string started_at;

  // Argument vector that reproduces this run, subcommand first.
  std::vector<std::string> arguments() const;
  void write(std::ostream& out) const;

  // Reads the "# args:" line back from a header; empty if absent.
  static std::vector<std::string> read_arguments(const std::string& output);
};

std::string utc_timestamp();

}  // namespace qnsd::cli
