#include "cbench/modes.hpp"

#include <algorithm>
#include <fstream>
#include <stdexcept>

#include "cbench/errors.hpp"

namespace cbench {

namespace {

// 64-bit block ciphers lose their CBC margin well before 2^32 blocks.
constexpr std::uint64_t kMaxSmallBlockCount = std::uint64_t{1} << 32;

void require_iv(const KeyedEngine& engine, ByteView iv) {
    if (iv.size() != engine.iv_bytes()) {
        throw LengthError(std::string(cipher_name(engine.id())) + " needs a " + std::to_string(engine.iv_bytes()) +
                          "-byte IV/nonce, got " + std::to_string(iv.size()));
    }
}

} // namespace

Bytes pkcs7_pad(ByteView data, std::size_t block_bytes) {
    if (block_bytes < 1 || block_bytes > 255) {
        throw std::invalid_argument("PKCS#7 block size must be in [1, 255]");
    }
    const std::size_t pad = block_bytes - data.size() % block_bytes;
    Bytes out;
    out.reserve(data.size() + pad);
    out.assign(data.begin(), data.end());
    out.insert(out.end(), pad, static_cast<std::uint8_t>(pad));
    return out;
}

Bytes pkcs7_unpad(ByteView data, std::size_t block_bytes) {
    if (data.empty() || block_bytes == 0 || data.size() % block_bytes != 0) {
        throw LengthError("padded data must be a positive multiple of " + std::to_string(block_bytes) + " bytes");
    }
    const std::uint8_t pad = data.back();
    if (pad == 0 || pad > block_bytes) {
        throw PaddingError("invalid PKCS#7 pad length " + std::to_string(pad));
    }
    const auto tail = data.last(pad);
    if (!std::all_of(tail.begin(), tail.end(), [pad](std::uint8_t b) { return b == pad; })) {
        throw PaddingError("PKCS#7 pad bytes disagree");
    }
    return Bytes(data.begin(), data.end() - pad);
}

Bytes cbc_encrypt(const BlockEngine& engine, ByteView iv, ByteView plaintext) {
    require_iv(engine, iv);
    const std::size_t bs = engine.block_bytes();
    Bytes out = pkcs7_pad(plaintext, bs);
    if (bs == 8 && out.size() / bs > kMaxSmallBlockCount) {
        throw LengthError("input exceeds 2^32 blocks for a 64-bit block cipher");
    }
    const std::uint8_t* chain = iv.data();
    for (std::size_t off = 0; off < out.size(); off += bs) {
        std::uint8_t* block = out.data() + off;
        for (std::size_t i = 0; i < bs; ++i) block[i] ^= chain[i];
        engine.encrypt_raw(block, block);
        chain = block;
    }
    return out;
}

Bytes cbc_decrypt(const BlockEngine& engine, ByteView iv, ByteView ciphertext) {
    require_iv(engine, iv);
    const std::size_t bs = engine.block_bytes();
    if (ciphertext.empty() || ciphertext.size() % bs != 0) {
        throw LengthError("CBC ciphertext must be a positive multiple of " + std::to_string(bs) + " bytes, got " +
                          std::to_string(ciphertext.size()));
    }
    if (bs == 8 && ciphertext.size() / bs > kMaxSmallBlockCount) {
        throw LengthError("input exceeds 2^32 blocks for a 64-bit block cipher");
    }
    Bytes out(ciphertext.size());
    const std::uint8_t* chain = iv.data();
    for (std::size_t off = 0; off < ciphertext.size(); off += bs) {
        engine.decrypt_raw(ciphertext.data() + off, out.data() + off);
        for (std::size_t i = 0; i < bs; ++i) out[off + i] ^= chain[i];
        chain = ciphertext.data() + off;
    }
    const std::uint8_t pad = out.back();
    if (pad == 0 || pad > bs) throw PaddingError("invalid PKCS#7 pad length " + std::to_string(pad));
    for (std::size_t i = out.size() - pad; i < out.size(); ++i) {
        if (out[i] != pad) throw PaddingError("PKCS#7 pad bytes disagree");
    }
    out.resize(out.size() - pad);
    return out;
}

Bytes encrypt_payload(const KeyedEngine& engine, ByteView iv, ByteView plaintext) {
    if (const auto* block = dynamic_cast<const BlockEngine*>(&engine)) return cbc_encrypt(*block, iv, plaintext);
    const auto& stream = dynamic_cast<const StreamEngine&>(engine);
    require_iv(engine, iv);
    Bytes out(plaintext.size());
    stream.apply_keystream(iv, 0, plaintext, out);
    return out;
}

Bytes decrypt_payload(const KeyedEngine& engine, ByteView iv, ByteView ciphertext) {
    if (const auto* block = dynamic_cast<const BlockEngine*>(&engine)) return cbc_decrypt(*block, iv, ciphertext);
    return encrypt_payload(engine, iv, ciphertext);
}

Bytes encode_header(const ContainerHeader& header) {
    if (header.iv.size() > 255) throw std::invalid_argument("IV longer than 255 bytes");
    Bytes out(kContainerMagic.begin(), kContainerMagic.end());
    out.push_back(kContainerVersion);
    out.push_back(static_cast<std::uint8_t>(header.cipher));
    out.push_back(static_cast<std::uint8_t>(header.key_bits >> 8));
    out.push_back(static_cast<std::uint8_t>(header.key_bits));
    out.push_back(static_cast<std::uint8_t>(header.iv.size()));
    out.insert(out.end(), header.iv.begin(), header.iv.end());
    return out;
}

ParsedContainer parse_container(ByteView file) {
    if (file.size() < kContainerFixedBytes) throw FormatError("container truncated before end of header");
    if (!std::equal(kContainerMagic.begin(), kContainerMagic.end(), file.begin())) {
        throw FormatError("bad container magic");
    }
    if (file[4] != kContainerVersion) {
        throw FormatError("unsupported container version " + std::to_string(file[4]));
    }
    const auto cipher = cipher_from_code(file[5]);
    if (!cipher) throw FormatError("unknown cipher code " + std::to_string(file[5]));
    ParsedContainer parsed;
    parsed.header.cipher = *cipher;
    parsed.header.key_bits = static_cast<std::uint16_t>((file[6] << 8) | file[7]);
    const std::size_t iv_len = file[8];
    if (iv_len != profile_of(*cipher).iv_bytes()) {
        throw FormatError(std::string(cipher_name(*cipher)) + " container carries a " + std::to_string(iv_len) +
                          "-byte IV");
    }
    if (file.size() < kContainerFixedBytes + iv_len) throw FormatError("container truncated inside IV");
    parsed.header.iv.assign(file.begin() + kContainerFixedBytes, file.begin() + kContainerFixedBytes + iv_len);
    parsed.payload = file.subspan(kContainerFixedBytes + iv_len);
    return parsed;
}

Bytes random_bytes(std::size_t n) {
    Bytes out(n);
    if (n == 0) return out;
    std::ifstream urandom("/dev/urandom", std::ios::binary);
    if (!urandom.read(reinterpret_cast<char*>(out.data()), static_cast<std::streamsize>(n))) {
        throw IoError("cannot read from /dev/urandom");
    }
    return out;
}

Bytes read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary | std::ios::ate);
    if (!in) throw IoError("cannot open " + path.string() + " for reading");
    const std::streamsize size = in.tellg();
    Bytes data(static_cast<std::size_t>(size));
    in.seekg(0);
    if (size > 0 && !in.read(reinterpret_cast<char*>(data.data()), size)) {
        throw IoError("short read from " + path.string());
    }
    return data;
}

void write_file(const std::filesystem::path& path, ByteView data) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open " + path.string() + " for writing");
    out.write(reinterpret_cast<const char*>(data.data()), static_cast<std::streamsize>(data.size()));
    if (!out) throw IoError("short write to " + path.string());
}

std::uint64_t encrypt_file(const std::filesystem::path& input, const std::filesystem::path& output, CipherId id,
                           const SymmetricKey& key, const std::optional<Bytes>& iv, const EngineOptions& options) {
    const auto engine = make_engine(id, key, options);
    const Bytes plaintext = read_file(input);
    ContainerHeader header{id, static_cast<std::uint16_t>(key.bit_length()),
                           iv ? *iv : random_bytes(engine->iv_bytes())};
    const Bytes payload = encrypt_payload(*engine, header.iv, plaintext);

    std::ofstream out(output, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open " + output.string() + " for writing");
    const Bytes head = encode_header(header);
    out.write(reinterpret_cast<const char*>(head.data()), static_cast<std::streamsize>(head.size()));
    out.write(reinterpret_cast<const char*>(payload.data()), static_cast<std::streamsize>(payload.size()));
    if (!out) throw IoError("short write to " + output.string());
    return payload.size();
}

std::uint64_t decrypt_file(const std::filesystem::path& input, const std::filesystem::path& output,
                           const SymmetricKey& key, const std::optional<Bytes>& expected_iv,
                           const EngineOptions& options) {
    const Bytes file = read_file(input);
    const ParsedContainer parsed = parse_container(file);
    if (expected_iv && *expected_iv != parsed.header.iv) {
        throw FormatError("supplied IV does not match the IV stored in the container");
    }
    if (key.bit_length() != parsed.header.key_bits) {
        throw KeyLengthError("container was written with a " + std::to_string(parsed.header.key_bits) +
                             "-bit key, got " + std::to_string(key.bit_length()) + " bits");
    }
    const auto engine = make_engine(parsed.header.cipher, key, options);
    const Bytes plaintext = decrypt_payload(*engine, parsed.header.iv, parsed.payload);
    write_file(output, plaintext);
    return plaintext.size();
}

} // namespace cbench
