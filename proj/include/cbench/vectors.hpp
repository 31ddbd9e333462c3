#pragma once

#include <filesystem>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cbench/cipher_core.hpp"

namespace cbench {

using EngineFactory = std::function<std::shared_ptr<const KeyedEngine>(CipherId, const SymmetricKey&)>;

/// make_engine with default options.
EngineFactory default_engine_factory();

struct VectorOutcome {
    std::string name;
    std::string kind;
    bool passed = false;
    std::string expected;  // hex, on failure
    std::string actual;
    std::string detail;
};

struct VectorReport {
    std::vector<VectorOutcome> outcomes;

    std::size_t passed() const noexcept;
    std::size_t failed() const noexcept { return outcomes.size() - passed(); }
    bool all_passed() const noexcept { return failed() == 0 && !outcomes.empty(); }
    const VectorOutcome* first_failure() const noexcept;
};

/// Byte positions where two equal-width hex strings differ, e.g.
/// "byte 0: 69 != 6a; byte 3: ...". Lists at most `limit` positions.
std::string hex_diff(const std::string& expected, const std::string& actual, std::size_t limit = 8);

/// Runs every vector in a JSON file of the form {"format": 1, "vectors": [...]}.
/// Throws ConfigError when the file is missing or unreadable.
VectorReport run_vector_file(const std::filesystem::path& path, const EngineFactory& factory = default_engine_factory());

} // namespace cbench
