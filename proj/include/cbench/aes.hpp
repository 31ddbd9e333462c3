#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <vector>

#include "cbench/cipher_core.hpp"

namespace cbench {

inline constexpr std::size_t kAesBlockBytes = 16;
using AesBlock = std::array<std::uint8_t, kAesBlockBytes>;
using AesSbox = std::array<std::uint8_t, 256>;

/// The forward S-box, derived from inversion in GF(2^8) followed by the affine map.
const AesSbox& aes_standard_sbox();

/// Substitution and round tables derived from one S-box. The standard set is
/// built once; a modified S-box yields a (non-standard) cipher for negative tests.
class AesTables {
public:
    static std::shared_ptr<const AesTables> standard();
    static std::shared_ptr<const AesTables> from_sbox(const AesSbox& sbox);

    const AesSbox& sbox() const noexcept { return sbox_; }
    const AesSbox& inv_sbox() const noexcept { return inv_sbox_; }

    // Round tables, big-endian column words: te[i] is te[0] rotated right by 8*i.
    std::array<std::array<std::uint32_t, 256>, 4> te{};
    std::array<std::array<std::uint32_t, 256>, 4> td{};

private:
    explicit AesTables(const AesSbox& sbox);

    AesSbox sbox_{};
    AesSbox inv_sbox_{};
};

/// Round keys in byte order; keys[0] is the cipher key (first 16 bytes).
struct AesRoundKeys {
    std::vector<AesBlock> keys;

    int rounds() const noexcept { return static_cast<int>(keys.size()) - 1; }
};

/// Key expansion for 16-, 24- or 32-byte keys (10, 12, 14 rounds).
AesRoundKeys aes_expand_key(ByteView key, const AesTables& tables = *AesTables::standard());

/// 16-byte keys only: eleven round keys.
AesRoundKeys aes128_expand_key(ByteView key);

/// Single-block transforms. Throw LengthError unless `block` is 16 bytes.
AesBlock aes128_encrypt_block(ByteView block, const AesRoundKeys& rk);
AesBlock aes128_decrypt_block(ByteView block, const AesRoundKeys& rk);

class AesEngine final : public BlockEngine {
public:
    explicit AesEngine(const SymmetricKey& key, std::shared_ptr<const AesTables> tables = AesTables::standard());

    const AesRoundKeys& round_keys() const noexcept { return round_keys_; }

    void encrypt_raw(const std::uint8_t* in, std::uint8_t* out) const noexcept override;
    void decrypt_raw(const std::uint8_t* in, std::uint8_t* out) const noexcept override;

private:
    std::shared_ptr<const AesTables> tables_;
    AesRoundKeys round_keys_;
    std::vector<std::uint32_t> enc_words_;
    // Equivalent-inverse-cipher schedule: reversed, with InvMixColumns folded in.
    std::vector<std::uint32_t> dec_words_;
};

} // namespace cbench
