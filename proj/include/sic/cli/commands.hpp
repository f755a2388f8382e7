#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "sic/cli/analysis.hpp"

namespace sic::cli {

/// Process exit codes.
enum ExitCode : int { kOk = 0, kInputError = 1, kNumericalError = 2 };

/// Entry point of the `sic` tool; argv[0] is the program name.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

inline constexpr std::string_view kSeedEnv = "SIC_SEED";

/// Seed from $SIC_SEED when set, otherwise `fallback`.
std::uint64_t default_seed(std::uint64_t fallback = 0);

struct DemoOptions {
  std::uint64_t seed = 0;
  std::size_t restarts = 200;  // clustering demo only
};

struct DemoResult {
  Analysis analysis;
  std::string title;
  std::string expected;  // annotation of the published outcome
};

const std::vector<std::string>& demo_names();

/// Throws InputError for an unknown name.
DemoResult make_demo(std::string_view name, const DemoOptions& options);

}  // namespace sic::cli
