#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace permutope::cli {

/// Limits that PERMUTOPE_CAP may override. The variable holds either a bare
/// integer (the largest k) or a comma list "k=6,cycles=5000000,mix=...".
struct Caps {
  std::size_t k = 7;
  std::size_t cycles = 1'000'000;
  std::size_t mix = 10'000'000;
  std::size_t classical = 30;
  std::size_t faces = 12;
  std::size_t size = 100'000'000;
};

/// std::invalid_argument on malformed text.
Caps parse_caps(std::string_view text);

/// Runs one command. `args` excludes the program name. Returns 0 on
/// success, 1 on domain errors, 2 on usage errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        std::optional<std::string> cap_env = std::nullopt);

}  // namespace permutope::cli
