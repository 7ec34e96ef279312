#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace gex2::cli {

inline constexpr std::uint64_t kDefaultSeed = 20240531;
inline constexpr const char* kSeedEnv = "GEX2_SEED";

/// Seed from GEX2_SEED when set and numeric, kDefaultSeed otherwise.
std::uint64_t seed_from_env();

/// Runs the command line (args exclude the program name). Exit codes:
/// 0 all checks pass, 1 a check failed, 2 usage or input error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gex2::cli
