#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include "cbench/bytes.hpp"

namespace cbench {

enum class CipherId : std::uint8_t {
    Aes = 0,
    Blowfish = 1,
    Twofish = 2,
    Salsa20 = 3,
    ChaCha20 = 4,
};

/// Canonical order; also the column order of every report table.
inline constexpr std::array<CipherId, 5> kAllCiphers{
    CipherId::Aes, CipherId::Blowfish, CipherId::Twofish, CipherId::Salsa20, CipherId::ChaCha20};

/// "AES", "Blowfish", "Twofish", "Salsa20", "ChaCha20".
std::string_view cipher_name(CipherId id) noexcept;

/// Exact, case-sensitive match against cipher_name().
std::optional<CipherId> parse_cipher_name(std::string_view name) noexcept;

/// Comma-separated list of every accepted name, for error messages.
std::string valid_cipher_names();

/// Maps the one-octet container code back to an identifier.
std::optional<CipherId> cipher_from_code(std::uint8_t code) noexcept;

enum class CipherKind { Block, Stream };

/// Inclusive range of key sizes in bits, stepping by `step_bits`.
struct KeySizes {
    int min_bits;
    int max_bits;
    int step_bits;

    constexpr bool permits(int bits) const noexcept {
        return bits >= min_bits && bits <= max_bits && (bits - min_bits) % step_bits == 0;
    }
};

struct CipherProfile {
    CipherId id;
    CipherKind kind;
    /// Cipher block width; for stream ciphers the keystream block width.
    int block_bits;
    KeySizes standard_key_bits;
    int benchmark_key_bits;

    constexpr std::size_t block_bytes() const noexcept { return static_cast<std::size_t>(block_bits) / 8; }

    /// One block for the block ciphers (CBC), 8 bytes of nonce for the stream ciphers.
    constexpr std::size_t iv_bytes() const noexcept { return kind == CipherKind::Block ? block_bytes() : 8; }
};

const CipherProfile& profile_of(CipherId id) noexcept;

/// Raw key material. Length is validated against a cipher when an engine is built.
class SymmetricKey {
public:
    SymmetricKey() = default;
    explicit SymmetricKey(Bytes bytes) : bytes_(std::move(bytes)) {}
    explicit SymmetricKey(ByteView bytes) : bytes_(bytes.begin(), bytes.end()) {}

    static SymmetricKey from_hex(std::string_view hex) { return SymmetricKey(cbench::from_hex(hex)); }

    ByteView bytes() const noexcept { return bytes_; }
    std::size_t size() const noexcept { return bytes_.size(); }
    int bit_length() const noexcept { return static_cast<int>(bytes_.size() * 8); }

    bool operator==(const SymmetricKey&) const = default;

private:
    Bytes bytes_;
};

/// Throws KeyLengthError unless the key length is permitted by the profile of `id`.
void check_key_length(CipherId id, const SymmetricKey& key);

class AesTables;

enum class TwofishVariant {
    /// S-boxes evaluated from the key material on every g() call.
    OnTheFly,
    /// Key-dependent S-box and MDS tables precomputed at key setup.
    FullKeying,
};

struct EngineOptions {
    TwofishVariant twofish = TwofishVariant::FullKeying;
    /// Overrides the AES substitution tables; null selects the standard ones.
    std::shared_ptr<const AesTables> aes_tables;
};

/// A key-scheduled cipher instance. Immutable after construction and safe to
/// share between threads.
class KeyedEngine {
public:
    virtual ~KeyedEngine() = default;

    KeyedEngine(const KeyedEngine&) = delete;
    KeyedEngine& operator=(const KeyedEngine&) = delete;

    CipherId id() const noexcept { return id_; }
    int key_bits() const noexcept { return key_bits_; }
    const CipherProfile& profile() const noexcept { return profile_of(id_); }
    CipherKind kind() const noexcept { return profile().kind; }
    std::size_t iv_bytes() const noexcept { return profile().iv_bytes(); }

protected:
    KeyedEngine(CipherId id, int key_bits) noexcept : id_(id), key_bits_(key_bits) {}

private:
    CipherId id_;
    int key_bits_;
};

class BlockEngine : public KeyedEngine {
public:
    std::size_t block_bytes() const noexcept { return profile().block_bytes(); }

    /// Both spans must be exactly one block; throws LengthError otherwise.
    void encrypt_block(ByteView in, MutableByteView out) const;
    void decrypt_block(ByteView in, MutableByteView out) const;

    /// Unchecked single-block primitives; `in` and `out` may alias.
    virtual void encrypt_raw(const std::uint8_t* in, std::uint8_t* out) const noexcept = 0;
    virtual void decrypt_raw(const std::uint8_t* in, std::uint8_t* out) const noexcept = 0;

protected:
    using KeyedEngine::KeyedEngine;
};

inline constexpr std::size_t kKeystreamBlockBytes = 64;
using KeystreamBlock = std::array<std::uint8_t, kKeystreamBlockBytes>;

class StreamEngine : public KeyedEngine {
public:
    /// Block `block_index` of the keystream, computed directly from the index.
    virtual KeystreamBlock keystream_block(ByteView nonce, std::uint64_t block_index) const = 0;

    /// out[i] = in[i] ^ keystream[start_counter * 64 + i]. `in` and `out` must
    /// have equal length and may alias. Throws CounterOverflowError when the
    /// block counter would leave the 64-bit range.
    virtual void apply_keystream(ByteView nonce, std::uint64_t start_counter, ByteView in,
                                 MutableByteView out) const = 0;

protected:
    using KeyedEngine::KeyedEngine;
};

/// Builds the key schedule for `id`. Throws KeyLengthError when the key length
/// is outside the cipher's permitted sizes.
std::shared_ptr<const KeyedEngine> make_engine(CipherId id, const SymmetricKey& key,
                                               const EngineOptions& options = {});

} // namespace cbench
