#include "cli/manifest.hpp"

#include <chrono>
#include <ctime>
#include <ostream>
#include <sstream>

namespace qnsd::cli {

std::vector<std::string> RunManifest::arguments() const {
  std::vector<std::string> args{subcommand};
  // --key=value keeps values such as "-1.2,1" from parsing as flags.
  for (const auto& [key, value] : parameters) args.push_back("--" + key + "=" + value);
  return args;
}

void RunManifest::write(std::ostream& out) const {
  out << "# qnsd " << version << '\n';
  out << "# subcommand: " << subcommand << '\n';
  out << "# args:";
  for (const auto& arg : arguments()) out << ' ' << arg;
  out << '\n';
  out << "# seed: " << seed << '\n';
  out << "# started: " << started_at << '\n';
}

std::vector<std::string> RunManifest::read_arguments(const std::string& output) {
  constexpr std::string_view kPrefix = "# args:";
  std::istringstream lines(output);
  std::string line;
  while (std::getline(lines, line)) {
    if (line.rfind(kPrefix, 0) != 0) continue;
    std::istringstream tokens(line.substr(kPrefix.size()));
    std::vector<std::string> args;
    for (std::string tok; tokens >> tok;) args.push_back(tok);
    return args;
  }
  return {};
}

std::string utc_timestamp() {
  const std::time_t now =
      std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace qnsd::cli
