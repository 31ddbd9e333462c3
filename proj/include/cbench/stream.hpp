#pragma once

#include <array>
#include <cstdint>

#include "cbench/cipher_core.hpp"

namespace cbench {

inline constexpr std::size_t kStreamNonceBytes = 8;

/// The 16-word input to the Salsa20/ChaCha20 core.
///
/// Salsa20 places the four constants on the diagonal (words 0, 5, 10, 15),
/// key words at 1-4 and 11-14, the nonce at 6-7 and the block counter at 8-9.
/// ChaCha20 puts the constants in row 0, the key in rows 1-2, the block
/// counter at 12-13 and the nonce at 14-15. 16-byte keys use the
/// "expand 16-byte k" constants and repeat the key words.
struct StreamCoreState {
    CipherId variant = CipherId::ChaCha20;
    std::array<std::uint32_t, 16> words{};

    std::uint64_t counter() const noexcept;
    /// Advances the 64-bit block counter by one, carrying t0 into t1.
    void increment_counter() noexcept;

    std::array<std::uint32_t, 4> constants() const noexcept;
};

/// "expand 32-byte k" / "expand 16-byte k" as little-endian words.
inline constexpr std::array<std::uint32_t, 4> kSigmaConstants{0x61707865, 0x3320646e, 0x79622d32, 0x6b206574};
inline constexpr std::array<std::uint32_t, 4> kTauConstants{0x61707865, 0x3120646e, 0x79622d36, 0x6b206574};

/// Throws std::invalid_argument for a block cipher id, KeyLengthError unless
/// the key is 16 or 32 bytes, NonceLengthError unless the nonce is 8 bytes.
StreamCoreState build_state(CipherId id, const SymmetricKey& key, ByteView nonce, std::uint64_t counter);

/// 20 rounds, feed-forward addition, little-endian serialisation.
/// Both throw std::invalid_argument when handed the other variant's state.
KeystreamBlock salsa20_core(const StreamCoreState& state);
KeystreamBlock chacha20_core(const StreamCoreState& state);

constexpr std::array<std::uint32_t, 4> chacha20_quarter_round(std::uint32_t a, std::uint32_t b, std::uint32_t c,
                                                              std::uint32_t d) noexcept {
    a += b; d ^= a; d = rotl32(d, 16);
    c += d; b ^= c; b = rotl32(b, 12);
    a += b; d ^= a; d = rotl32(d, 8);
    c += d; b ^= c; b = rotl32(b, 7);
    return {a, b, c, d};
}

/// XOR `data` with the keystream starting at block `start_counter`.
/// Encryption and decryption are the same call.
Bytes keystream_xor(CipherId id, const SymmetricKey& key, ByteView nonce, std::uint64_t start_counter,
                    ByteView data);

/// Keystream block `block_index`, in work independent of the index.
KeystreamBlock seek_block(CipherId id, const SymmetricKey& key, ByteView nonce, std::uint64_t block_index);

class StreamCipherEngine final : public StreamEngine {
public:
    /// `id` must be Salsa20 or ChaCha20.
    StreamCipherEngine(CipherId id, const SymmetricKey& key);

    StreamCoreState state_for(ByteView nonce, std::uint64_t counter) const;

    KeystreamBlock keystream_block(ByteView nonce, std::uint64_t block_index) const override;
    void apply_keystream(ByteView nonce, std::uint64_t start_counter, ByteView in,
                         MutableByteView out) const override;

private:
    SymmetricKey key_;
};

} // namespace cbench
