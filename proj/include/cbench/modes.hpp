#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <optional>

#include "cbench/cipher_core.hpp"

namespace cbench {

/// Appends 1..block_bytes pad bytes, each equal to the pad length.
/// Throws std::invalid_argument unless 1 <= block_bytes <= 255.
Bytes pkcs7_pad(ByteView data, std::size_t block_bytes);

/// Throws LengthError when `data` is empty or not a whole number of blocks,
/// PaddingError when the trailing pad is malformed.
Bytes pkcs7_unpad(ByteView data, std::size_t block_bytes);

/// PKCS#7-padded CBC. `iv` must be one block (LengthError otherwise).
Bytes cbc_encrypt(const BlockEngine& engine, ByteView iv, ByteView plaintext);
Bytes cbc_decrypt(const BlockEngine& engine, ByteView iv, ByteView ciphertext);

/// CBC for block engines, keystream XOR from block 0 for stream engines.
Bytes encrypt_payload(const KeyedEngine& engine, ByteView iv, ByteView plaintext);
Bytes decrypt_payload(const KeyedEngine& engine, ByteView iv, ByteView ciphertext);

// Encrypted container layout (all integers big-endian):
//   magic "CBNC" | version (1) | cipher code (1) | key bits (2) |
//   iv length (1) | iv | payload to end of file
inline constexpr std::array<std::uint8_t, 4> kContainerMagic{0x43, 0x42, 0x4E, 0x43};
inline constexpr std::uint8_t kContainerVersion = 1;
inline constexpr std::size_t kContainerFixedBytes = 9;

struct ContainerHeader {
    CipherId cipher = CipherId::Aes;
    std::uint16_t key_bits = 0;
    Bytes iv;

    std::size_t encoded_size() const noexcept { return kContainerFixedBytes + iv.size(); }
    bool operator==(const ContainerHeader&) const = default;
};

Bytes encode_header(const ContainerHeader& header);

struct ParsedContainer {
    ContainerHeader header;
    ByteView payload;
};

/// Throws FormatError on bad magic, unknown version or cipher code, an IV
/// length that does not suit the cipher, or truncation.
ParsedContainer parse_container(ByteView file);

/// `n` bytes from the operating system's CSPRNG.
Bytes random_bytes(std::size_t n);

Bytes read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, ByteView data);

/// Writes a container for `input` to `output`. An absent IV is drawn from
/// random_bytes(). Returns the payload byte count.
std::uint64_t encrypt_file(const std::filesystem::path& input, const std::filesystem::path& output, CipherId id,
                           const SymmetricKey& key, const std::optional<Bytes>& iv = std::nullopt,
                           const EngineOptions& options = {});

/// Recovers the plaintext of a container; cipher and IV come from the header.
/// A supplied `expected_iv` must equal the embedded one (FormatError otherwise).
/// Returns the plaintext byte count.
std::uint64_t decrypt_file(const std::filesystem::path& input, const std::filesystem::path& output,
                           const SymmetricKey& key, const std::optional<Bytes>& expected_iv = std::nullopt,
                           const EngineOptions& options = {});

} // namespace cbench
