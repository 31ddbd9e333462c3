#include "cbench/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>

#include "cbench/errors.hpp"

namespace cbench {

std::string_view metric_stem(Metric m) noexcept {
    switch (m) {
    case Metric::EncTime: return "enc_time";
    case Metric::DecTime: return "dec_time";
    case Metric::EncThroughput: return "enc_throughput";
    case Metric::DecThroughput: return "dec_throughput";
    }
    return "";
}

std::string_view metric_title(Metric m) noexcept {
    switch (m) {
    case Metric::EncTime: return "Encryption time (ms)";
    case Metric::DecTime: return "Decryption time (ms)";
    case Metric::EncThroughput: return "Encryption throughput (KB/s)";
    case Metric::DecThroughput: return "Decryption throughput (KB/s)";
    }
    return "";
}

bool is_time_metric(Metric m) noexcept { return m == Metric::EncTime || m == Metric::DecTime; }

std::string_view format_name(Format f) noexcept {
    switch (f) {
    case Format::Csv: return "csv";
    case Format::Markdown: return "markdown";
    case Format::Plain: return "plain";
    }
    return "";
}

std::optional<Format> parse_format(std::string_view name) noexcept {
    for (Format f : {Format::Csv, Format::Markdown, Format::Plain}) {
        if (format_name(f) == name) return f;
    }
    return std::nullopt;
}

namespace {

double metric_value(const BenchmarkRecord& r, Metric m) {
    switch (m) {
    case Metric::EncTime: return r.encryption.mean_ms;
    case Metric::DecTime: return r.decryption.mean_ms;
    case Metric::EncThroughput: return r.enc_throughput_kb_s;
    case Metric::DecThroughput: return r.dec_throughput_kb_s;
    }
    return 0.0;
}

std::vector<std::optional<double>> column_means(const std::vector<TableRow>& rows, std::size_t ncols) {
    std::vector<std::optional<double>> avg(ncols);
    for (std::size_t c = 0; c < ncols; ++c) {
        double sum = 0.0;
        int n = 0;
        for (const auto& row : rows) {
            if (row.values[c]) {
                sum += *row.values[c];
                ++n;
            }
        }
        if (n > 0) avg[c] = sum / n;
    }
    return avg;
}

} // namespace

BenchmarkTable build_table(const std::vector<BenchmarkRecord>& records, Metric metric, MissingCells missing) {
    BenchmarkTable table;
    table.metric = metric;
    for (CipherId id : kAllCiphers) {
        if (std::any_of(records.begin(), records.end(), [id](const auto& r) { return r.cipher == id; })) {
            table.columns.push_back(id);
        }
    }
    std::map<std::string, std::size_t> row_of;
    for (const auto& r : records) {
        if (row_of.try_emplace(r.file_name, table.rows.size()).second) {
            table.rows.push_back({r.file_name, r.size_kb, std::vector<std::optional<double>>(table.columns.size())});
        }
    }

    std::vector<std::vector<bool>> seen(table.rows.size(), std::vector<bool>(table.columns.size()));
    std::string problems;
    for (const auto& r : records) {
        const std::size_t row = row_of.at(r.file_name);
        const std::size_t col =
            std::find(table.columns.begin(), table.columns.end(), r.cipher) - table.columns.begin();
        seen[row][col] = true;
        if (r.ok) {
            table.rows[row].values[col] = metric_value(r, metric);
        } else {
            problems += " " + r.file_name + "/" + std::string(cipher_name(r.cipher)) + " (failed)";
        }
    }
    for (std::size_t row = 0; row < table.rows.size(); ++row) {
        for (std::size_t col = 0; col < table.columns.size(); ++col) {
            if (!seen[row][col]) {
                problems += " " + table.rows[row].file_name + "/" + std::string(cipher_name(table.columns[col])) +
                            " (missing)";
            }
        }
    }
    if (records.empty()) problems = " no records";
    if (!problems.empty() && missing == MissingCells::Reject) {
        throw IncompleteGridError("incomplete grid:" + problems);
    }
    table.average_row = column_means(table.rows, table.columns.size());
    return table;
}

double time_per_size_percent(double avg_time_ms, double avg_size_kb) {
    if (!(avg_size_kb > 0.0)) throw ZeroSizeError("average size must be positive");
    return avg_time_ms / avg_size_kb * 100.0;
}

namespace {

std::string fmt_value(const std::optional<double>& v, Metric m) {
    if (!v) return "FAILED";
    char buf[64];
    std::snprintf(buf, sizeof buf, is_time_metric(m) ? "%.3f" : "%.2f", *v);
    return buf;
}

std::vector<std::vector<std::string>> grid(const BenchmarkTable& t) {
    std::vector<std::vector<std::string>> g;
    std::vector<std::string> header{"File Name", "Size KB"};
    for (CipherId id : t.columns) header.emplace_back(cipher_name(id));
    g.push_back(std::move(header));
    for (const auto& row : t.rows) {
        std::vector<std::string> line{row.file_name, std::to_string(row.size_kb)};
        for (const auto& v : row.values) line.push_back(fmt_value(v, t.metric));
        g.push_back(std::move(line));
    }
    std::vector<std::string> avg{"Average", ""};
    for (const auto& v : t.average_row) avg.push_back(fmt_value(v, t.metric));
    g.push_back(std::move(avg));
    return g;
}

} // namespace

std::string render(const BenchmarkTable& table, Format format) {
    const auto g = grid(table);
    std::ostringstream out;
    if (format == Format::Csv) {
        for (const auto& line : g) {
            for (std::size_t i = 0; i < line.size(); ++i) out << (i ? "," : "") << line[i];
            out << '\n';
        }
        return out.str();
    }

    std::vector<std::size_t> width(g.front().size());
    for (const auto& line : g) {
        for (std::size_t i = 0; i < line.size(); ++i) width[i] = std::max(width[i], line[i].size());
    }
    auto cell = [&](const std::string& s, std::size_t i) {
        // Names left-aligned, numbers right-aligned.
        const std::string pad(width[i] - s.size(), ' ');
        return i == 0 ? s + pad : pad + s;
    };

    if (format == Format::Markdown) {
        out << "### " << metric_title(table.metric) << "\n\n";
        for (std::size_t r = 0; r < g.size(); ++r) {
            out << '|';
            for (std::size_t i = 0; i < g[r].size(); ++i) out << ' ' << cell(g[r][i], i) << " |";
            out << '\n';
            if (r == 0) {
                out << '|';
                for (std::size_t i = 0; i < width.size(); ++i) {
                    const std::string dashes(width[i] + 1, '-');
                    out << (i == 0 ? ":" + dashes + "|" : dashes + ":|");
                }
                out << '\n';
            }
        }
        return out.str();
    }

    out << metric_title(table.metric) << '\n';
    for (std::size_t r = 0; r < g.size(); ++r) {
        for (std::size_t i = 0; i < g[r].size(); ++i) out << (i ? "  " : "") << cell(g[r][i], i);
        out << '\n';
        if (r == 0 || r + 2 == g.size()) {
            std::size_t total = 0;
            for (auto w : width) total += w;
            out << std::string(total + 2 * (width.size() - 1), '-') << '\n';
        }
    }
    return out.str();
}

namespace {

std::vector<std::string> split(std::string_view line, char sep) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    for (;;) {
        const auto pos = line.find(sep, start);
        parts.emplace_back(line.substr(start, pos - start));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return parts;
}

std::optional<double> parse_cell(const std::string& s) {
    if (s == "FAILED") return std::nullopt;
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(s, &used);
    } catch (const std::exception&) {
        throw FormatError("bad numeric cell '" + s + "'");
    }
    if (used != s.size()) throw FormatError("bad numeric cell '" + s + "'");
    return v;
}

} // namespace

BenchmarkTable parse_csv(std::string_view text, Metric metric) {
    std::vector<std::vector<std::string>> lines;
    for (const auto& line : split(text, '\n')) {
        if (!line.empty()) lines.push_back(split(line, ','));
    }
    if (lines.size() < 2) throw FormatError("CSV needs a header and an Average row");
    const auto& header = lines.front();
    if (header.size() < 3 || header[0] != "File Name" || header[1] != "Size KB") {
        throw FormatError("unexpected CSV header");
    }

    BenchmarkTable t;
    t.metric = metric;
    for (std::size_t i = 2; i < header.size(); ++i) {
        const auto id = parse_cipher_name(header[i]);
        if (!id) throw FormatError("unknown cipher column '" + header[i] + "'");
        t.columns.push_back(*id);
    }
    for (std::size_t r = 1; r < lines.size(); ++r) {
        const auto& line = lines[r];
        if (line.size() != header.size()) throw FormatError("row " + std::to_string(r) + " has wrong width");
        std::vector<std::optional<double>> values;
        for (std::size_t i = 2; i < line.size(); ++i) values.push_back(parse_cell(line[i]));
        if (r + 1 == lines.size()) {
            if (line[0] != "Average") throw FormatError("last row must be Average");
            t.average_row = std::move(values);
        } else {
            std::uint64_t kb = 0;
            try {
                kb = std::stoull(line[1]);
            } catch (const std::exception&) {
                throw FormatError("bad size '" + line[1] + "'");
            }
            t.rows.push_back({line[0], kb, std::move(values)});
        }
    }
    return t;
}

std::vector<RankEntry> rank_by_throughput(const BenchmarkTable& table) {
    std::vector<RankEntry> out;
    for (std::size_t c = 0; c < table.columns.size(); ++c) {
        if (table.average_row[c]) out.push_back({table.columns[c], *table.average_row[c]});
    }
    std::stable_sort(out.begin(), out.end(), [](const RankEntry& a, const RankEntry& b) { return a.value > b.value; });
    return out;
}

std::string summarize(const std::vector<BenchmarkRecord>& records) {
    std::ostringstream out;
    char buf[128];
    for (Metric m : {Metric::EncThroughput, Metric::DecThroughput}) {
        const auto ranking = rank_by_throughput(build_table(records, m, MissingCells::Mark));
        out << (m == Metric::EncThroughput ? "Encryption" : "Decryption") << " throughput, average KB/s:\n";
        for (std::size_t i = 0; i < ranking.size(); ++i) {
            std::snprintf(buf, sizeof buf, "  %zu. %-9s %14.2f\n", i + 1,
                          std::string(cipher_name(ranking[i].cipher)).c_str(), ranking[i].value);
            out << buf;
        }
        if (!ranking.empty()) {
            out << "  fastest: " << cipher_name(ranking.front().cipher)
                << ", slowest: " << cipher_name(ranking.back().cipher) << '\n';
        }
        out << '\n';
    }
    const auto failed = std::count_if(records.begin(), records.end(), [](const auto& r) { return !r.ok; });
    out << "cells: " << records.size() << ", failed: " << failed << '\n';
    for (const auto& r : records) {
        if (!r.ok) out << "  FAILED " << r.file_name << "/" << cipher_name(r.cipher) << ": " << r.error << '\n';
    }
    return out.str();
}

} // namespace cbench
