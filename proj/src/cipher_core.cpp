#include "cbench/cipher_core.hpp"

#include <algorithm>

#include "cbench/aes.hpp"
#include "cbench/blowfish.hpp"
#include "cbench/errors.hpp"
#include "cbench/stream.hpp"
#include "cbench/twofish.hpp"

namespace cbench {

namespace {

constexpr std::array<CipherProfile, 5> kProfiles{{
    {CipherId::Aes, CipherKind::Block, 128, {128, 256, 64}, 128},
    {CipherId::Blowfish, CipherKind::Block, 64, {32, 448, 8}, 128},
    {CipherId::Twofish, CipherKind::Block, 128, {128, 256, 64}, 128},
    // Stream ciphers: 64-byte keystream blocks.
    {CipherId::Salsa20, CipherKind::Stream, 512, {128, 256, 128}, 128},
    {CipherId::ChaCha20, CipherKind::Stream, 512, {128, 256, 128}, 256},
}};

constexpr std::array<std::string_view, 5> kNames{"AES", "Blowfish", "Twofish", "Salsa20", "ChaCha20"};

} // namespace

std::string_view cipher_name(CipherId id) noexcept { return kNames[static_cast<std::size_t>(id)]; }

std::optional<CipherId> parse_cipher_name(std::string_view name) noexcept {
    for (CipherId id : kAllCiphers) {
        if (cipher_name(id) == name) return id;
    }
    return std::nullopt;
}

std::string valid_cipher_names() {
    std::string out;
    for (CipherId id : kAllCiphers) {
        if (!out.empty()) out += ", ";
        out += cipher_name(id);
    }
    return out;
}

std::optional<CipherId> cipher_from_code(std::uint8_t code) noexcept {
    if (code >= kAllCiphers.size()) return std::nullopt;
    return static_cast<CipherId>(code);
}

const CipherProfile& profile_of(CipherId id) noexcept { return kProfiles[static_cast<std::size_t>(id)]; }

void check_key_length(CipherId id, const SymmetricKey& key) {
    const KeySizes& sizes = profile_of(id).standard_key_bits;
    if (!sizes.permits(key.bit_length())) {
        throw KeyLengthError(std::string(cipher_name(id)) + " does not accept a " + std::to_string(key.bit_length()) +
                             "-bit key (permitted: " + std::to_string(sizes.min_bits) + ".." +
                             std::to_string(sizes.max_bits) + " bits in steps of " +
                             std::to_string(sizes.step_bits) + ")");
    }
}

void BlockEngine::encrypt_block(ByteView in, MutableByteView out) const {
    if (in.size() != block_bytes() || out.size() != block_bytes()) {
        throw LengthError(std::string(cipher_name(id())) + " block must be " + std::to_string(block_bytes()) +
                          " bytes");
    }
    encrypt_raw(in.data(), out.data());
}

void BlockEngine::decrypt_block(ByteView in, MutableByteView out) const {
    if (in.size() != block_bytes() || out.size() != block_bytes()) {
        throw LengthError(std::string(cipher_name(id())) + " block must be " + std::to_string(block_bytes()) +
                          " bytes");
    }
    decrypt_raw(in.data(), out.data());
}

std::shared_ptr<const KeyedEngine> make_engine(CipherId id, const SymmetricKey& key, const EngineOptions& options) {
    check_key_length(id, key);
    switch (id) {
    case CipherId::Aes:
        return std::make_shared<AesEngine>(key, options.aes_tables ? options.aes_tables : AesTables::standard());
    case CipherId::Blowfish:
        return std::make_shared<BlowfishEngine>(key);
    case CipherId::Twofish:
        return std::make_shared<TwofishEngine>(key, options.twofish);
    case CipherId::Salsa20:
    case CipherId::ChaCha20:
        return std::make_shared<StreamCipherEngine>(id, key);
    }
    throw std::invalid_argument("unknown cipher id");
}

} // namespace cbench
