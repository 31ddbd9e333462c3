#include "cbench/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <memory>
#include <optional>

#include <openssl/evp.h>

#include "CLI11.hpp"

#include "cbench/bench.hpp"
#include "cbench/errors.hpp"
#include "cbench/modes.hpp"
#include "cbench/report.hpp"
#include "cbench/vectors.hpp"

#ifndef CBENCH_DEFAULT_VECTORS_FILE
#define CBENCH_DEFAULT_VECTORS_FILE "data/vectors.json"
#endif

namespace cbench {

namespace fs = std::filesystem;

namespace {

/// Bad arguments discovered after parsing; maps to kExitUsage.
class UsageError : public Error {
public:
    using Error::Error;
};

CipherId cipher_arg(const std::string& name) {
    const auto id = parse_cipher_name(name);
    if (!id) throw UsageError("unknown cipher '" + name + "'; valid names: " + valid_cipher_names());
    return *id;
}

Bytes hex_arg(const std::string& flag, const std::string& text) {
    try {
        return from_hex(text);
    } catch (const std::invalid_argument& ex) {
        throw UsageError(flag + ": " + ex.what());
    }
}

SymmetricKey key_arg(const std::string& text) {
    if (!text.empty() && text.front() == '@') {
        const fs::path path = text.substr(1);
        if (!fs::is_regular_file(path)) throw UsageError("--key: cannot read " + path.string());
        return SymmetricKey(read_file(path));
    }
    return SymmetricKey(hex_arg("--key", text));
}

std::string sha256_hex(ByteView data) {
    std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(EVP_MD_CTX_new(), EVP_MD_CTX_free);
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (!ctx || EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr) != 1 ||
        EVP_DigestUpdate(ctx.get(), data.data(), data.size()) != 1 ||
        EVP_DigestFinal_ex(ctx.get(), md, &len) != 1) {
        throw Error("SHA-256 failed");
    }
    return to_hex(ByteView(md, len));
}

void write_text(const fs::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::trunc);
    out << text;
    if (!out) throw IoError("cannot write " + path.string());
}

struct EncryptArgs {
    std::string cipher, key, iv, in, out;
};

struct DecryptArgs {
    std::string key, in, out;
};

struct BenchArgs {
    std::string out;
    std::vector<std::uint64_t> sizes;
    int reps = 5;
    int warmup = 2;
    std::optional<std::uint64_t> seed;
    std::vector<std::string> ciphers;
    std::string format = "csv";
};

struct CorpusArgs {
    std::string out;
    std::vector<std::uint64_t> sizes;
    std::optional<std::uint64_t> seed;
};

int cmd_encrypt(const EncryptArgs& a, std::ostream& out) {
    const CipherId id = cipher_arg(a.cipher);
    const SymmetricKey key = key_arg(a.key);
    std::optional<Bytes> iv;
    if (!a.iv.empty()) iv = hex_arg("--iv", a.iv);
    check_key_length(id, key);
    const auto payload = encrypt_file(a.in, a.out, id, key, iv);
    out << payload << '\n';
    return kExitOk;
}

int cmd_decrypt(const DecryptArgs& a, std::ostream& out) {
    const auto n = decrypt_file(a.in, a.out, key_arg(a.key));
    out << n << '\n';
    return kExitOk;
}

SuiteConfig suite_config(const std::vector<std::uint64_t>& sizes, const std::optional<std::uint64_t>& seed) {
    SuiteConfig config;
    if (!sizes.empty()) config.corpus_sizes_kb = sizes;
    if (seed) config.rng_seed = *seed;
    return config;
}

int cmd_bench(const BenchArgs& a, std::ostream& out) {
    SuiteConfig config = suite_config(a.sizes, a.seed);
    config.repetitions = a.reps;
    config.warmup_runs = a.warmup;
    if (!a.ciphers.empty()) {
        config.ciphers.clear();
        for (const auto& name : a.ciphers) config.ciphers.push_back(cipher_arg(name));
    }
    const auto format = parse_format(a.format);
    if (!format) throw UsageError("--format must be csv, markdown or plain");
    config.validate();

    const fs::path dir = a.out;
    const auto corpus = generate_corpus(config, dir / "corpus");
    const auto records = run_suite(config, corpus, dir / "work", [&](const BenchmarkRecord& r) {
        out << r.file_name << ' ' << cipher_name(r.cipher);
        if (r.ok) {
            out << " enc " << r.encryption.mean_ms << " ms, dec " << r.decryption.mean_ms << " ms\n";
        } else {
            out << " FAILED: " << r.error << '\n';
        }
    });

    const fs::path results = dir / "results.jsonl";
    write_results_jsonl(records, results);
    const auto persisted = read_results_jsonl(results);
    for (Metric m : kAllMetrics) {
        const auto table = build_table(persisted, m, MissingCells::Mark);
        write_text(dir / (std::string(metric_stem(m)) + "." + std::string(format_name(*format))),
                   render(table, *format));
    }
    const std::string summary = summarize(persisted);
    write_text(dir / "summary.txt", summary);
    out << '\n' << summary;

    const bool all_ok = std::all_of(persisted.begin(), persisted.end(), [](const auto& r) { return r.ok; });
    return all_ok ? kExitOk : kExitFailure;
}

int cmd_corpus(const CorpusArgs& a, std::ostream& out) {
    const SuiteConfig config = suite_config(a.sizes, a.seed);
    for (const auto& f : generate_corpus(config, a.out)) {
        out << f.name << ' ' << f.size_bytes() << ' ' << sha256_hex(read_file(f.path)) << '\n';
    }
    return kExitOk;
}

int cmd_vectors(const std::string& file, std::ostream& out, std::ostream& err) {
    const VectorReport report = run_vector_file(file);
    for (const auto& o : report.outcomes) {
        out << (o.passed ? "PASS " : "FAIL ") << o.kind << ": " << o.name << '\n';
    }
    out << report.passed() << "/" << report.outcomes.size() << " vectors passed\n";
    if (const auto* f = report.first_failure()) {
        err << "first failure: " << f->name << '\n';
        if (!f->expected.empty()) {
            err << "  expected " << f->expected << "\n  actual   " << f->actual << '\n';
        }
        err << "  " << f->detail << '\n';
        return kExitFailure;
    }
    return report.all_passed() ? kExitOk : kExitFailure;
}

} // namespace

std::string sha256_file_hex(const std::string& path) { return sha256_hex(read_file(path)); }

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Symmetric cipher benchmark and file encryption tool", "cbench"};
    app.require_subcommand(1);

    EncryptArgs enc;
    auto* encrypt = app.add_subcommand("encrypt", "Encrypt a file into a container");
    encrypt->add_option("--cipher", enc.cipher, "AES, Blowfish, Twofish, Salsa20 or ChaCha20")->required();
    encrypt->add_option("--key", enc.key, "Key as hex, or @path for raw key bytes")->required();
    encrypt->add_option("--iv", enc.iv, "IV/nonce as hex (random when omitted)");
    encrypt->add_option("--in", enc.in, "Plaintext file")->required();
    encrypt->add_option("--out", enc.out, "Container file")->required();

    DecryptArgs dec;
    auto* decrypt = app.add_subcommand("decrypt", "Decrypt a container");
    decrypt->add_option("--key", dec.key, "Key as hex, or @path for raw key bytes")->required();
    decrypt->add_option("--in", dec.in, "Container file")->required();
    decrypt->add_option("--out", dec.out, "Plaintext file")->required();

    BenchArgs bench_args;
    auto* bench = app.add_subcommand("bench", "Run the benchmark suite");
    bench->add_option("--out", bench_args.out, "Output directory")->required();
    bench->add_option("--sizes", bench_args.sizes, "Corpus sizes in KB")->delimiter(',');
    bench->add_option("--reps", bench_args.reps, "Measured repetitions per cell");
    bench->add_option("--warmup", bench_args.warmup, "Unmeasured warmup passes per cell");
    bench->add_option("--seed", bench_args.seed, "Corpus RNG seed");
    bench->add_option("--ciphers", bench_args.ciphers, "Cipher names")->delimiter(',');
    bench->add_option("--format", bench_args.format, "csv, markdown or plain");

    CorpusArgs corpus_args;
    auto* corpus = app.add_subcommand("corpus", "Generate the benchmark corpus");
    corpus->add_option("--out", corpus_args.out, "Output directory")->required();
    corpus->add_option("--sizes", corpus_args.sizes, "Corpus sizes in KB")->delimiter(',');
    corpus->add_option("--seed", corpus_args.seed, "Corpus RNG seed");

    std::string vector_file = CBENCH_DEFAULT_VECTORS_FILE;
    auto* vectors = app.add_subcommand("vectors", "Run the known-answer vectors");
    vectors->add_option("--file", vector_file, "Vector file");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitUsage;
    }

    try {
        if (encrypt->parsed()) return cmd_encrypt(enc, out);
        if (decrypt->parsed()) return cmd_decrypt(dec, out);
        if (bench->parsed()) return cmd_bench(bench_args, out);
        if (corpus->parsed()) return cmd_corpus(corpus_args, out);
        if (vectors->parsed()) return cmd_vectors(vector_file, out, err);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const KeyLengthError& e) {
        err << "KeyLengthError: " << e.what() << '\n';
        return kExitUsage;
    } catch (const ConfigError& e) {
        err << "ConfigError: " << e.what() << '\n';
        return kExitUsage;
    } catch (const FormatError& e) {
        err << "FormatError: " << e.what() << '\n';
        return kExitFailure;
    } catch (const PaddingError& e) {
        err << "PaddingError: " << e.what() << '\n';
        return kExitFailure;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitFailure;
    }
    return kExitUsage;
}

} // namespace cbench
