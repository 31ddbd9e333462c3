#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "cbench/cipher_core.hpp"

namespace cbench {

inline constexpr std::size_t kTwofishBlockBytes = 16;
using TwofishBlock = std::array<std::uint8_t, kTwofishBlockBytes>;

struct PhtPair {
    std::uint32_t a_prime;
    std::uint32_t b_prime;

    constexpr bool operator==(const PhtPair&) const = default;
};

/// Pseudo-Hadamard transform: (a + b, a + 2b) mod 2^32.
constexpr PhtPair pht(std::uint32_t a, std::uint32_t b) noexcept {
    return {a + b, a + 2 * b};
}

struct TwofishSubkeys {
    /// K0..K7 are whitening words, K8..K39 the round subkeys.
    std::array<std::uint32_t, 40> k{};
    /// S-box key words in the order g() consumes them (S_{n-1} first);
    /// one word per 8 key bytes.
    std::vector<std::uint32_t> sbox_key;
};

/// Accepts 16-, 24- or 32-byte keys; throws KeyLengthError otherwise.
TwofishSubkeys twofish_expand_key(ByteView key);

/// The keyed h() function with S-box key list `list` (1 to 4 words).
std::uint32_t twofish_h(std::uint32_t x, std::span<const std::uint32_t> list) noexcept;

/// Reference transforms computing S-boxes from key material on the fly.
/// Throw LengthError unless `block` is 16 bytes.
TwofishBlock twofish_encrypt_block(ByteView block, const TwofishSubkeys& sk);
TwofishBlock twofish_decrypt_block(ByteView block, const TwofishSubkeys& sk);

class TwofishEngine final : public BlockEngine {
public:
    explicit TwofishEngine(const SymmetricKey& key, TwofishVariant variant = TwofishVariant::FullKeying);

    const TwofishSubkeys& subkeys() const noexcept { return subkeys_; }
    TwofishVariant variant() const noexcept { return variant_; }

    void encrypt_raw(const std::uint8_t* in, std::uint8_t* out) const noexcept override;
    void decrypt_raw(const std::uint8_t* in, std::uint8_t* out) const noexcept override;

private:
    struct KeyedTables {
        std::array<std::array<std::uint32_t, 256>, 4> mds_sbox;
    };

    std::uint32_t g(std::uint32_t x) const noexcept;

    TwofishSubkeys subkeys_;
    TwofishVariant variant_;
    std::unique_ptr<const KeyedTables> tables_;
};

} // namespace cbench
