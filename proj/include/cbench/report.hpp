#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cbench/bench.hpp"

namespace cbench {

enum class Metric { EncTime, DecTime, EncThroughput, DecThroughput };
inline constexpr std::array<Metric, 4> kAllMetrics{Metric::EncTime, Metric::DecTime, Metric::EncThroughput,
                                                   Metric::DecThroughput};

/// "enc_time", "dec_time", "enc_throughput", "dec_throughput".
std::string_view metric_stem(Metric m) noexcept;
std::string_view metric_title(Metric m) noexcept;
bool is_time_metric(Metric m) noexcept;

enum class Format { Csv, Markdown, Plain };

/// "csv", "markdown", "plain".
std::string_view format_name(Format f) noexcept;
std::optional<Format> parse_format(std::string_view name) noexcept;

struct TableRow {
    std::string file_name;
    std::uint64_t size_kb = 0;
    /// One entry per column; empty when the cell failed.
    std::vector<std::optional<double>> values;
};

struct BenchmarkTable {
    Metric metric = Metric::EncTime;
    std::vector<CipherId> columns;
    std::vector<TableRow> rows;
    /// Mean over the successful cells of each column; empty if none succeeded.
    std::vector<std::optional<double>> average_row;
};

enum class MissingCells {
    /// Any absent or failed cell raises IncompleteGridError.
    Reject,
    /// Failed cells are kept as blanks and excluded from averages.
    Mark,
};

/// Columns follow canonical cipher order restricted to the ciphers present;
/// rows follow first appearance of each file.
BenchmarkTable build_table(const std::vector<BenchmarkRecord>& records, Metric metric,
                           MissingCells missing = MissingCells::Reject);

/// (avg_time_ms / avg_size_kb) * 100. Throws ZeroSizeError unless avg_size_kb > 0.
double time_per_size_percent(double avg_time_ms, double avg_size_kb);

/// Times print with 3 decimals, throughput with 2. Failed cells print FAILED.
std::string render(const BenchmarkTable& table, Format format);

/// Reads back the CSV form of render(). Throws FormatError.
BenchmarkTable parse_csv(std::string_view text, Metric metric);

struct RankEntry {
    CipherId cipher;
    double value;
};

/// Column averages of `table`, highest first; ties keep canonical order.
std::vector<RankEntry> rank_by_throughput(const BenchmarkTable& table);

/// Encryption and decryption throughput rankings with fastest/slowest lines.
std::string summarize(const std::vector<BenchmarkRecord>& records);

} // namespace cbench
