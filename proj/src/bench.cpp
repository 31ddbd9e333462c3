#include "cbench/bench.hpp"

#include <algorithm>
#include <fstream>
#include <random>
#include <tuple>

#include "json.hpp"

#include "cbench/errors.hpp"
#include "cbench/modes.hpp"

namespace cbench {

namespace fs = std::filesystem;
using json = nlohmann::json;

void SuiteConfig::validate() const {
    if (ciphers.empty()) throw ConfigError("no ciphers selected");
    if (corpus_sizes_kb.empty()) throw ConfigError("no corpus sizes given");
    for (auto kb : corpus_sizes_kb) {
        if (kb == 0) throw ConfigError("corpus sizes must be positive");
    }
    if (repetitions < 1) throw ConfigError("repetitions must be at least 1");
    if (warmup_runs < 0) throw ConfigError("warmup runs must be non-negative");
    if (chacha20_key_bits != 128 && chacha20_key_bits != 256) {
        throw ConfigError("ChaCha20 key width must be 128 or 256 bits");
    }
}

SymmetricKey SuiteConfig::key_for(CipherId id) const {
    if (auto it = keys.find(id); it != keys.end()) return it->second;
    const int bits = id == CipherId::ChaCha20 ? chacha20_key_bits : profile_of(id).benchmark_key_bits;
    return default_key(bits);
}

Bytes SuiteConfig::iv_for(CipherId id) const {
    if (auto it = ivs.find(id); it != ivs.end()) return it->second;
    return default_iv(id);
}

SymmetricKey default_key(int bits) {
    return SymmetricKey(Bytes(static_cast<std::size_t>(bits) / 8, 0x01));
}

Bytes default_iv(CipherId id) {
    Bytes iv(profile_of(id).iv_bytes());
    for (std::size_t i = 0; i < iv.size(); ++i) iv[i] = static_cast<std::uint8_t>(i);
    return iv;
}

std::string corpus_file_name(std::size_t index) {
    std::string n = std::to_string(index + 1);
    if (n.size() < 2) n.insert(0, "0");
    return "Image" + n;
}

std::vector<CorpusFile> generate_corpus(const SuiteConfig& config, const fs::path& directory) {
    for (auto kb : config.corpus_sizes_kb) {
        if (kb == 0) throw ConfigError("corpus sizes must be positive");
    }
    std::error_code ec;
    fs::create_directories(directory, ec);
    if (ec) throw IoError("cannot create " + directory.string() + ": " + ec.message());

    std::vector<CorpusFile> files;
    for (std::size_t i = 0; i < config.corpus_sizes_kb.size(); ++i) {
        CorpusFile f{corpus_file_name(i), directory / corpus_file_name(i), config.corpus_sizes_kb[i]};
        std::seed_seq seq{static_cast<std::uint32_t>(config.rng_seed), static_cast<std::uint32_t>(config.rng_seed >> 32),
                          static_cast<std::uint32_t>(i)};
        std::mt19937_64 rng(seq);
        Bytes data(f.size_bytes());
        std::size_t j = 0;
        for (; j + 8 <= data.size(); j += 8) {
            std::uint64_t v = rng();
            for (int b = 0; b < 8; ++b) data[j + b] = static_cast<std::uint8_t>(v >> (8 * b));
        }
        for (std::uint64_t v = rng(); j < data.size(); ++j, v >>= 8) data[j] = static_cast<std::uint8_t>(v);
        write_file(f.path, data);
        files.push_back(std::move(f));
    }
    return files;
}

namespace {

double to_ms(BenchClock::duration d) {
    return std::chrono::duration<double, std::milli>(d).count();
}

template <typename F>
TimingSample timed(F&& op) {
    TimingSample s;
    s.st_t = BenchClock::now();
    s.byte_count = op();
    s.en_t = BenchClock::now();
    s.elapsed_ms = to_ms(s.en_t - s.st_t);
    return s;
}

} // namespace

TimingSample measure_encryption(CipherId id, const SymmetricKey& key, ByteView iv, const fs::path& input,
                                const fs::path& output, const EngineOptions& options) {
    const std::optional<Bytes> iv_copy(Bytes(iv.begin(), iv.end()));
    return timed([&] { return encrypt_file(input, output, id, key, iv_copy, options); });
}

TimingSample measure_decryption(const SymmetricKey& key, const fs::path& encrypted, const fs::path& output,
                                const EngineOptions& options) {
    return timed([&] { return decrypt_file(encrypted, output, key, std::nullopt, options); });
}

double throughput_kb_s(std::uint64_t byte_count, double elapsed_ms) {
    if (!(elapsed_ms > 0.0)) throw ZeroElapsedError("elapsed time must be positive; increase repetitions");
    return (static_cast<double>(byte_count) / 1024.0) / (elapsed_ms / 1000.0);
}

void RunStats::finalize() {
    if (samples.empty()) {
        mean_ms = min_ms = 0.0;
        byte_count = 0;
        return;
    }
    double sum = 0.0;
    min_ms = samples.front().elapsed_ms;
    for (const auto& s : samples) {
        sum += s.elapsed_ms;
        min_ms = std::min(min_ms, s.elapsed_ms);
    }
    mean_ms = sum / static_cast<double>(samples.size());
    byte_count = samples.front().byte_count;
}

namespace {

BenchmarkRecord run_cell(const SuiteConfig& config, const CorpusFile& file, const Bytes& source, CipherId id,
                         const fs::path& work_dir) {
    BenchmarkRecord rec;
    rec.file_name = file.name;
    rec.size_kb = file.size_kb;
    rec.cipher = id;
    const std::string stem = file.name + "." + std::string(cipher_name(id));
    const fs::path enc = work_dir / (stem + ".enc");
    const fs::path dec = work_dir / (stem + ".dec");
    try {
        const SymmetricKey key = config.key_for(id);
        const Bytes iv = config.iv_for(id);
        for (int pass = 0; pass < config.warmup_runs + config.repetitions; ++pass) {
            TimingSample e = measure_encryption(id, key, iv, file.path, enc, config.engine_options);
            TimingSample d = measure_decryption(key, enc, dec, config.engine_options);
            if (read_file(dec) != source) {
                throw FormatError("decrypted output differs from " + file.name);
            }
            if (pass >= config.warmup_runs) {
                rec.encryption.samples.push_back(e);
                rec.decryption.samples.push_back(d);
            }
        }
        rec.encryption.finalize();
        rec.decryption.finalize();
        rec.enc_throughput_kb_s = throughput_kb_s(rec.encryption.byte_count, rec.encryption.mean_ms);
        rec.dec_throughput_kb_s = throughput_kb_s(rec.decryption.byte_count, rec.decryption.mean_ms);
    } catch (const std::exception& ex) {
        rec.ok = false;
        rec.error = ex.what();
    }
    std::error_code ec;
    fs::remove(dec, ec);
    return rec;
}

} // namespace

std::vector<BenchmarkRecord> run_suite(const SuiteConfig& config, const std::vector<CorpusFile>& corpus,
                                       const fs::path& work_dir, const ProgressFn& progress) {
    config.validate();
    std::error_code ec;
    fs::create_directories(work_dir, ec);
    if (ec) throw IoError("cannot create " + work_dir.string() + ": " + ec.message());

    std::vector<BenchmarkRecord> records;
    records.reserve(corpus.size() * config.ciphers.size());
    for (const auto& file : corpus) {
        const Bytes source = read_file(file.path);
        for (CipherId id : config.ciphers) {
            records.push_back(run_cell(config, file, source, id, work_dir));
            if (progress) progress(records.back());
        }
    }
    return records;
}

namespace {

json sample_json(const TimingSample& s) {
    return {{"elapsed_ms", s.elapsed_ms}, {"byte_count", s.byte_count}};
}

} // namespace

void write_results_jsonl(const std::vector<BenchmarkRecord>& records, const fs::path& path) {
    std::ofstream out(path, std::ios::trunc);
    if (!out) throw IoError("cannot open " + path.string() + " for writing");
    for (const auto& r : records) {
        json base{{"file_name", r.file_name}, {"size_kb", r.size_kb}, {"cipher", cipher_name(r.cipher)}};
        if (!r.ok) {
            base["repetition"] = 0;
            base["ok"] = false;
            base["error"] = r.error;
            out << base.dump() << '\n';
            continue;
        }
        for (std::size_t i = 0; i < r.encryption.samples.size(); ++i) {
            json line = base;
            const auto& e = r.encryption.samples[i];
            const auto& d = r.decryption.samples[i];
            line["repetition"] = i;
            line["ok"] = true;
            line["encryption"] = sample_json(e);
            line["decryption"] = sample_json(d);
            line["enc_throughput_kb_s"] = throughput_kb_s(e.byte_count, e.elapsed_ms);
            line["dec_throughput_kb_s"] = throughput_kb_s(d.byte_count, d.elapsed_ms);
            out << line.dump() << '\n';
        }
    }
    if (!out) throw IoError("short write to " + path.string());
}

std::vector<BenchmarkRecord> read_results_jsonl(const fs::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path.string());

    std::vector<BenchmarkRecord> records;
    std::map<std::tuple<std::string, CipherId>, std::size_t> index;
    std::string text;
    for (int line_no = 1; std::getline(in, text); ++line_no) {
        if (text.empty()) continue;
        try {
            const json j = json::parse(text);
            const auto cipher = parse_cipher_name(j.at("cipher").get<std::string>());
            if (!cipher) throw FormatError("unknown cipher " + j.at("cipher").get<std::string>());
            const auto key = std::make_tuple(j.at("file_name").get<std::string>(), *cipher);
            auto [it, fresh] = index.try_emplace(key, records.size());
            if (fresh) {
                BenchmarkRecord& r = records.emplace_back();
                r.file_name = std::get<0>(key);
                r.size_kb = j.at("size_kb").get<std::uint64_t>();
                r.cipher = *cipher;
            }
            BenchmarkRecord& r = records[it->second];
            if (!j.at("ok").get<bool>()) {
                r.ok = false;
                r.error = j.value("error", std::string{});
                continue;
            }
            for (auto [field, stats] : {std::pair{"encryption", &r.encryption}, std::pair{"decryption", &r.decryption}}) {
                TimingSample s;
                s.elapsed_ms = j.at(field).at("elapsed_ms").get<double>();
                s.byte_count = j.at(field).at("byte_count").get<std::uint64_t>();
                stats->samples.push_back(s);
            }
        } catch (const json::exception& ex) {
            throw FormatError(path.string() + ":" + std::to_string(line_no) + ": " + ex.what());
        }
    }
    for (auto& r : records) {
        if (!r.ok) continue;
        r.encryption.finalize();
        r.decryption.finalize();
        r.enc_throughput_kb_s = throughput_kb_s(r.encryption.byte_count, r.encryption.mean_ms);
        r.dec_throughput_kb_s = throughput_kb_s(r.decryption.byte_count, r.decryption.mean_ms);
    }
    return records;
}

} // namespace cbench
