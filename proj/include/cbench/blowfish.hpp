#pragma once

#include <array>
#include <cstdint>

#include "cbench/cipher_core.hpp"

namespace cbench {

inline constexpr std::size_t kBlowfishBlockBytes = 8;
inline constexpr std::size_t kBlowfishMinKeyBytes = 4;
inline constexpr std::size_t kBlowfishMaxKeyBytes = 56;

using BlowfishBlock = std::array<std::uint8_t, kBlowfishBlockBytes>;

struct BlowfishSubkeys {
    static constexpr std::size_t kRounds = 16;

    std::array<std::uint32_t, kRounds + 2> p{};
    std::array<std::array<std::uint32_t, 256>, 4> s{};

    /// (18 + 4 * 256) words of four bytes.
    static constexpr std::size_t byte_size() noexcept { return (kRounds + 2 + 4 * 256) * 4; }
};
static_assert(BlowfishSubkeys::byte_size() == 4168);

/// P-array and S-boxes before keying: the fractional hex digits of pi.
const BlowfishSubkeys& blowfish_initial_subkeys();

/// Throws KeyLengthError unless 4 <= key.size() <= 56.
BlowfishSubkeys blowfish_expand_key(ByteView key);

/// Blocks are two big-endian 32-bit halves. Throw LengthError unless 8 bytes.
BlowfishBlock blowfish_encrypt_block(ByteView block, const BlowfishSubkeys& sk);
BlowfishBlock blowfish_decrypt_block(ByteView block, const BlowfishSubkeys& sk);

class BlowfishEngine final : public BlockEngine {
public:
    explicit BlowfishEngine(const SymmetricKey& key);

    const BlowfishSubkeys& subkeys() const noexcept { return subkeys_; }

    void encrypt_raw(const std::uint8_t* in, std::uint8_t* out) const noexcept override;
    void decrypt_raw(const std::uint8_t* in, std::uint8_t* out) const noexcept override;

private:
    BlowfishSubkeys subkeys_;
};

} // namespace cbench
