#include "cbench/vectors.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>

#include "json.hpp"

#include "cbench/aes.hpp"
#include "cbench/errors.hpp"
#include "cbench/stream.hpp"
#include "cbench/twofish.hpp"

namespace cbench {

using json = nlohmann::json;

EngineFactory default_engine_factory() {
    return [](CipherId id, const SymmetricKey& key) { return make_engine(id, key); };
}

std::size_t VectorReport::passed() const noexcept {
    return static_cast<std::size_t>(
        std::count_if(outcomes.begin(), outcomes.end(), [](const auto& o) { return o.passed; }));
}

const VectorOutcome* VectorReport::first_failure() const noexcept {
    for (const auto& o : outcomes) {
        if (!o.passed) return &o;
    }
    return nullptr;
}

std::string hex_diff(const std::string& expected, const std::string& actual, std::size_t limit) {
    std::string out;
    std::size_t shown = 0, total = 0;
    const std::size_t n = std::max(expected.size(), actual.size()) / 2;
    for (std::size_t i = 0; i < n; ++i) {
        const std::string e = 2 * i + 2 <= expected.size() ? expected.substr(2 * i, 2) : "--";
        const std::string a = 2 * i + 2 <= actual.size() ? actual.substr(2 * i, 2) : "--";
        if (e == a) continue;
        ++total;
        if (shown++ < limit) {
            if (!out.empty()) out += "; ";
            out += "byte " + std::to_string(i) + ": " + e + " != " + a;
        }
    }
    if (total > limit) out += "; ... " + std::to_string(total - limit) + " more";
    return out;
}

namespace {

std::string words_hex(const auto& words) {
    std::string out;
    char buf[9];
    for (std::uint32_t w : words) {
        std::snprintf(buf, sizeof buf, "%08x", w);
        out += buf;
    }
    return out;
}

std::vector<std::uint32_t> parse_words(const json& arr) {
    std::vector<std::uint32_t> out;
    for (const auto& w : arr) out.push_back(static_cast<std::uint32_t>(std::stoul(w.get<std::string>(), nullptr, 16)));
    return out;
}

std::string joined(const json& arr) {
    std::string out;
    for (const auto& s : arr) out += s.get<std::string>();
    return out;
}

CipherId cipher_of(const json& v) {
    const auto name = v.at("cipher").get<std::string>();
    const auto id = parse_cipher_name(name);
    if (!id) throw FormatError("unknown cipher '" + name + "'");
    return *id;
}

const BlockEngine& as_block(const KeyedEngine& e) {
    const auto* b = dynamic_cast<const BlockEngine*>(&e);
    if (!b) throw FormatError(std::string(cipher_name(e.id())) + " is not a block cipher");
    return *b;
}

// Each check returns {expected, actual}; the vector passes when they match.
using Check = std::pair<std::string, std::string>;

Check check_block(const json& v, const EngineFactory& factory) {
    const auto engine = factory(cipher_of(v), SymmetricKey::from_hex(v.at("key").get<std::string>()));
    const auto& block = as_block(*engine);
    const Bytes pt = from_hex(v.at("plaintext").get<std::string>());
    const Bytes ct = from_hex(v.at("ciphertext").get<std::string>());
    Bytes enc(pt.size()), dec(ct.size());
    block.encrypt_block(pt, enc);
    block.decrypt_block(ct, dec);
    // Encryption and decryption must both hold.
    return {to_hex(ct) + to_hex(pt), to_hex(enc) + to_hex(dec)};
}

Check check_block_iterated(const json& v, const EngineFactory& factory) {
    const CipherId id = cipher_of(v);
    const std::size_t key_bytes = v.at("key_bytes").get<std::size_t>();
    const int steps = v.at("steps").get<int>();
    const std::size_t bs = profile_of(id).block_bytes();
    Bytes key(key_bytes), pt(bs), ct(bs);
    for (int i = 0; i < steps; ++i) {
        as_block(*factory(id, SymmetricKey(key))).encrypt_block(pt, ct);
        // Next key: previous plaintext followed by the leading bytes of the previous key.
        Bytes next(pt);
        next.insert(next.end(), key.begin(), key.begin() + static_cast<std::ptrdiff_t>(key_bytes - bs));
        key = std::move(next);
        pt = ct;
    }
    return {v.at("ciphertext").get<std::string>(), to_hex(ct)};
}

Check check_aes_schedule(const json& v, const EngineFactory& factory) {
    const auto engine = factory(CipherId::Aes, SymmetricKey::from_hex(v.at("key").get<std::string>()));
    const auto* aes = dynamic_cast<const AesEngine*>(engine.get());
    if (!aes) throw FormatError("factory did not produce an AES engine");
    std::string actual;
    for (const auto& rk : aes->round_keys().keys) actual += to_hex(rk);
    return {joined(v.at("round_keys")), actual};
}

Check check_twofish_schedule(const json& v) {
    const auto sk = twofish_expand_key(from_hex(v.at("key").get<std::string>()));
    std::vector<std::uint32_t> sbox(sk.sbox_key.rbegin(), sk.sbox_key.rend());
    return {joined(v.at("subkeys")) + joined(v.at("sbox_key")), words_hex(sk.k) + words_hex(sbox)};
}

Check check_keystream(const json& v, const EngineFactory& factory) {
    const auto engine = factory(cipher_of(v), SymmetricKey::from_hex(v.at("key").get<std::string>()));
    const auto* stream = dynamic_cast<const StreamEngine*>(engine.get());
    if (!stream) throw FormatError("not a stream cipher");
    const std::string expected = v.at("keystream").get<std::string>();
    const Bytes nonce = from_hex(v.at("nonce").get<std::string>());
    Bytes out(expected.size() / 2);
    stream->apply_keystream(nonce, v.at("counter").get<std::uint64_t>(), Bytes(out.size()), out);
    return {expected, to_hex(out)};
}

Check check_quarter_round(const json& v) {
    const auto in = parse_words(v.at("input"));
    if (in.size() != 4) throw FormatError("quarter round takes 4 words");
    return {joined(v.at("output")), words_hex(chacha20_quarter_round(in[0], in[1], in[2], in[3]))};
}

Check check_pht(const json& v) {
    const auto in = parse_words(v.at("input"));
    if (in.size() != 2) throw FormatError("PHT takes 2 words");
    const PhtPair p = pht(in[0], in[1]);
    return {joined(v.at("output")), words_hex(std::array<std::uint32_t, 2>{p.a_prime, p.b_prime})};
}

Check run_one(const json& v, const std::string& kind, const EngineFactory& factory) {
    if (kind == "block") return check_block(v, factory);
    if (kind == "block_iterated") return check_block_iterated(v, factory);
    if (kind == "aes_key_schedule") return check_aes_schedule(v, factory);
    if (kind == "twofish_key_schedule") return check_twofish_schedule(v);
    if (kind == "keystream") return check_keystream(v, factory);
    if (kind == "quarter_round") return check_quarter_round(v);
    if (kind == "pht") return check_pht(v);
    throw FormatError("unknown vector kind '" + kind + "'");
}

} // namespace

VectorReport run_vector_file(const std::filesystem::path& path, const EngineFactory& factory) {
    std::ifstream in(path);
    if (!in) throw ConfigError("vector file not found: " + path.string());
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::exception& ex) {
        throw ConfigError("cannot parse " + path.string() + ": " + ex.what());
    }
    if (!doc.is_object() || !doc.contains("vectors") || !doc["vectors"].is_array()) {
        throw ConfigError(path.string() + " has no \"vectors\" array");
    }

    VectorReport report;
    for (const auto& v : doc["vectors"]) {
        VectorOutcome o;
        o.name = v.value("name", std::string{"(unnamed)"});
        o.kind = v.value("kind", std::string{});
        try {
            auto [expected, actual] = run_one(v, o.kind, factory);
            std::transform(expected.begin(), expected.end(), expected.begin(), ::tolower);
            o.passed = expected == actual;
            if (!o.passed) {
                o.detail = hex_diff(expected, actual);
                o.expected = std::move(expected);
                o.actual = std::move(actual);
            }
        } catch (const std::exception& ex) {
            o.passed = false;
            o.detail = ex.what();
        }
        report.outcomes.push_back(std::move(o));
    }
    return report;
}

} // namespace cbench
