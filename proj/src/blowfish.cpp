#include "cbench/blowfish.hpp"

#include "cbench/errors.hpp"

namespace cbench {

namespace {

constexpr std::array<std::uint32_t, 18 + 4 * 256> kPiWords{
#include "blowfish_pi.inc"
};

BlowfishSubkeys initial_from_pi() {
    BlowfishSubkeys sk;
    std::size_t i = 0;
    for (auto& p : sk.p) p = kPiWords[i++];
    for (auto& box : sk.s) {
        for (auto& w : box) w = kPiWords[i++];
    }
    return sk;
}

inline std::uint32_t feistel(const BlowfishSubkeys& sk, std::uint32_t x) noexcept {
    return ((sk.s[0][x >> 24] + sk.s[1][(x >> 16) & 0xff]) ^ sk.s[2][(x >> 8) & 0xff]) + sk.s[3][x & 0xff];
}

inline void encrypt_halves(const BlowfishSubkeys& sk, std::uint32_t& left, std::uint32_t& right) noexcept {
    std::uint32_t l = left;
    std::uint32_t r = right;
    for (std::size_t i = 0; i < BlowfishSubkeys::kRounds; i += 2) {
        l ^= sk.p[i];
        r ^= feistel(sk, l);
        r ^= sk.p[i + 1];
        l ^= feistel(sk, r);
    }
    left = r ^ sk.p[17];
    right = l ^ sk.p[16];
}

inline void decrypt_halves(const BlowfishSubkeys& sk, std::uint32_t& left, std::uint32_t& right) noexcept {
    std::uint32_t l = left;
    std::uint32_t r = right;
    for (std::size_t i = BlowfishSubkeys::kRounds + 1; i > 1; i -= 2) {
        l ^= sk.p[i];
        r ^= feistel(sk, l);
        r ^= sk.p[i - 1];
        l ^= feistel(sk, r);
    }
    left = r ^ sk.p[0];
    right = l ^ sk.p[1];
}

void require_block(ByteView block) {
    if (block.size() != kBlowfishBlockBytes) {
        throw LengthError("Blowfish block must be 8 bytes, got " + std::to_string(block.size()));
    }
}

} // namespace

const BlowfishSubkeys& blowfish_initial_subkeys() {
    static const BlowfishSubkeys sk = initial_from_pi();
    return sk;
}

BlowfishSubkeys blowfish_expand_key(ByteView key) {
    if (key.size() < kBlowfishMinKeyBytes || key.size() > kBlowfishMaxKeyBytes) {
        throw KeyLengthError("Blowfish key must be 4..56 bytes, got " + std::to_string(key.size()));
    }
    BlowfishSubkeys sk = blowfish_initial_subkeys();
    std::size_t pos = 0;
    for (auto& p : sk.p) {
        std::uint32_t data = 0;
        for (int b = 0; b < 4; ++b) {
            data = (data << 8) | key[pos];
            pos = (pos + 1) % key.size();
        }
        p ^= data;
    }
    // Replace the P-array and then every S-box entry with successive
    // encryptions of a running block that starts at zero.
    std::uint32_t l = 0;
    std::uint32_t r = 0;
    for (std::size_t i = 0; i < sk.p.size(); i += 2) {
        encrypt_halves(sk, l, r);
        sk.p[i] = l;
        sk.p[i + 1] = r;
    }
    for (auto& box : sk.s) {
        for (std::size_t i = 0; i < box.size(); i += 2) {
            encrypt_halves(sk, l, r);
            box[i] = l;
            box[i + 1] = r;
        }
    }
    return sk;
}

BlowfishBlock blowfish_encrypt_block(ByteView block, const BlowfishSubkeys& sk) {
    require_block(block);
    std::uint32_t l = load_be32(block.data());
    std::uint32_t r = load_be32(block.data() + 4);
    encrypt_halves(sk, l, r);
    BlowfishBlock out{};
    store_be32(out.data(), l);
    store_be32(out.data() + 4, r);
    return out;
}

BlowfishBlock blowfish_decrypt_block(ByteView block, const BlowfishSubkeys& sk) {
    require_block(block);
    std::uint32_t l = load_be32(block.data());
    std::uint32_t r = load_be32(block.data() + 4);
    decrypt_halves(sk, l, r);
    BlowfishBlock out{};
    store_be32(out.data(), l);
    store_be32(out.data() + 4, r);
    return out;
}

BlowfishEngine::BlowfishEngine(const SymmetricKey& key)
    : BlockEngine(CipherId::Blowfish, key.bit_length()), subkeys_(blowfish_expand_key(key.bytes())) {}

void BlowfishEngine::encrypt_raw(const std::uint8_t* in, std::uint8_t* out) const noexcept {
    std::uint32_t l = load_be32(in);
    std::uint32_t r = load_be32(in + 4);
    encrypt_halves(subkeys_, l, r);
    store_be32(out, l);
    store_be32(out + 4, r);
}

void BlowfishEngine::decrypt_raw(const std::uint8_t* in, std::uint8_t* out) const noexcept {
    std::uint32_t l = load_be32(in);
    std::uint32_t r = load_be32(in + 4);
    decrypt_halves(subkeys_, l, r);
    store_be32(out, l);
    store_be32(out + 4, r);
}

} // namespace cbench
