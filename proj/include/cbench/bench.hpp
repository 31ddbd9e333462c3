#pragma once

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cbench/cipher_core.hpp"

namespace cbench {

using BenchClock = std::chrono::steady_clock;

struct TimingSample {
    BenchClock::time_point st_t{};
    BenchClock::time_point en_t{};
    double elapsed_ms = 0.0;
    std::uint64_t byte_count = 0;
};

struct SuiteConfig {
    std::vector<CipherId> ciphers{kAllCiphers.begin(), kAllCiphers.end()};
    std::vector<std::uint64_t> corpus_sizes_kb{137, 795, 3901, 7903, 9328};
    int repetitions = 5;
    int warmup_runs = 2;
    std::uint64_t rng_seed = 0x63626e63u;
    /// Per-cipher overrides; absent entries fall back to default_key/default_iv.
    std::map<CipherId, SymmetricKey> keys;
    std::map<CipherId, Bytes> ivs;
    /// Key width used for ChaCha20 when no explicit key is given (128 or 256).
    int chacha20_key_bits = 256;
    EngineOptions engine_options;

    /// Throws ConfigError on an empty cipher list, a zero size,
    /// repetitions < 1 or warmup_runs < 0.
    void validate() const;

    SymmetricKey key_for(CipherId id) const;
    Bytes iv_for(CipherId id) const;
};

/// `bits / 8` bytes of 0x01.
SymmetricKey default_key(int bits);
/// 00 01 02 ... for the cipher's IV width.
Bytes default_iv(CipherId id);

struct CorpusFile {
    std::string name;
    std::filesystem::path path;
    std::uint64_t size_kb = 0;

    std::uint64_t size_bytes() const noexcept { return size_kb * 1024; }
};

/// "Image01", "Image02", ...
std::string corpus_file_name(std::size_t index);

/// Writes one file per configured size. File i holds exactly size_kb * 1024
/// bytes from a generator seeded by (rng_seed, i).
std::vector<CorpusFile> generate_corpus(const SuiteConfig& config, const std::filesystem::path& directory);

TimingSample measure_encryption(CipherId id, const SymmetricKey& key, ByteView iv,
                                const std::filesystem::path& input, const std::filesystem::path& output,
                                const EngineOptions& options = {});

TimingSample measure_decryption(const SymmetricKey& key, const std::filesystem::path& encrypted,
                                const std::filesystem::path& output, const EngineOptions& options = {});

/// (byte_count / 1024) / (elapsed_ms / 1000). Throws ZeroElapsedError unless elapsed_ms > 0.
double throughput_kb_s(std::uint64_t byte_count, double elapsed_ms);

struct RunStats {
    std::vector<TimingSample> samples;
    double mean_ms = 0.0;
    double min_ms = 0.0;
    std::uint64_t byte_count = 0;

    /// Recomputes mean, min and byte_count from the samples.
    void finalize();
};

struct BenchmarkRecord {
    std::string file_name;
    std::uint64_t size_kb = 0;
    CipherId cipher = CipherId::Aes;
    RunStats encryption;
    RunStats decryption;
    /// From the mean elapsed time.
    double enc_throughput_kb_s = 0.0;
    double dec_throughput_kb_s = 0.0;
    bool ok = true;
    std::string error;
};

using ProgressFn = std::function<void(const BenchmarkRecord&)>;

/// Runs every (file, cipher) cell: warmup_runs unmeasured passes, then
/// `repetitions` measured ones. Decrypted output is compared to the source
/// after each pass. A failure marks the cell, not the suite.
std::vector<BenchmarkRecord> run_suite(const SuiteConfig& config, const std::vector<CorpusFile>& corpus,
                                       const std::filesystem::path& work_dir, const ProgressFn& progress = {});

/// One JSON object per (file, cipher, repetition); failed cells get a single
/// line with "ok": false.
void write_results_jsonl(const std::vector<BenchmarkRecord>& records, const std::filesystem::path& path);

/// Inverse of write_results_jsonl; timestamps are not persisted.
/// Throws IoError or FormatError.
std::vector<BenchmarkRecord> read_results_jsonl(const std::filesystem::path& path);

} // namespace cbench
