#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace cbench {

/// Exit codes of run_cli.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Lowercase hex SHA-256 of a file's contents.
std::string sha256_file_hex(const std::string& path);

} // namespace cbench
