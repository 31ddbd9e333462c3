#include "cbench/aes.hpp"

#include <algorithm>

#include "cbench/errors.hpp"

namespace cbench {

namespace {

constexpr std::uint8_t xtime(std::uint8_t x) noexcept {
    return static_cast<std::uint8_t>((x << 1) ^ ((x & 0x80) ? 0x1b : 0x00));
}

constexpr std::uint8_t gf_mul(std::uint8_t a, std::uint8_t b) noexcept {
    std::uint8_t r = 0;
    while (b != 0) {
        if (b & 1) r ^= a;
        a = xtime(a);
        b >>= 1;
    }
    return r;
}

AesSbox compute_sbox() {
    // Multiplicative inverses via 3 as a generator of GF(2^8)*.
    std::array<std::uint8_t, 256> log{};
    std::array<std::uint8_t, 256> exp{};
    std::uint8_t x = 1;
    for (int i = 0; i < 255; ++i) {
        exp[i] = x;
        log[x] = static_cast<std::uint8_t>(i);
        x = gf_mul(x, 3);
    }
    AesSbox box{};
    for (int v = 0; v < 256; ++v) {
        const std::uint8_t inv = v == 0 ? 0 : exp[(255 - log[v]) % 255];
        std::uint8_t s = inv;
        for (int shift = 1; shift <= 4; ++shift) {
            s ^= static_cast<std::uint8_t>((inv << shift) | (inv >> (8 - shift)));
        }
        box[v] = s ^ 0x63;
    }
    return box;
}

constexpr std::uint32_t word(std::uint8_t b0, std::uint8_t b1, std::uint8_t b2, std::uint8_t b3) noexcept {
    return (std::uint32_t{b0} << 24) | (std::uint32_t{b1} << 16) | (std::uint32_t{b2} << 8) | std::uint32_t{b3};
}

constexpr std::uint8_t byte_of(std::uint32_t w, int i) noexcept {
    return static_cast<std::uint8_t>(w >> (24 - 8 * i));
}

std::vector<std::uint32_t> schedule_words(const AesRoundKeys& rk) {
    std::vector<std::uint32_t> words;
    words.reserve(rk.keys.size() * 4);
    for (const AesBlock& k : rk.keys) {
        for (int c = 0; c < 4; ++c) words.push_back(load_be32(k.data() + 4 * c));
    }
    return words;
}

std::vector<std::uint32_t> inverse_schedule_words(const std::vector<std::uint32_t>& enc, const AesTables& t) {
    const std::size_t rounds = enc.size() / 4 - 1;
    std::vector<std::uint32_t> dec(enc.size());
    for (std::size_t r = 0; r <= rounds; ++r) {
        for (int c = 0; c < 4; ++c) {
            std::uint32_t w = enc[4 * (rounds - r) + c];
            if (r != 0 && r != rounds) {
                const AesSbox& s = t.sbox();
                w = t.td[0][s[byte_of(w, 0)]] ^ t.td[1][s[byte_of(w, 1)]] ^ t.td[2][s[byte_of(w, 2)]] ^
                    t.td[3][s[byte_of(w, 3)]];
            }
            dec[4 * r + c] = w;
        }
    }
    return dec;
}

void encrypt_words(const AesTables& t, const std::uint32_t* rk, int rounds, const std::uint8_t* in,
                   std::uint8_t* out) noexcept {
    std::uint32_t s0 = load_be32(in) ^ rk[0];
    std::uint32_t s1 = load_be32(in + 4) ^ rk[1];
    std::uint32_t s2 = load_be32(in + 8) ^ rk[2];
    std::uint32_t s3 = load_be32(in + 12) ^ rk[3];
    const auto& te = t.te;
    for (int r = 1; r < rounds; ++r) {
        rk += 4;
        const std::uint32_t t0 = te[0][s0 >> 24] ^ te[1][(s1 >> 16) & 0xff] ^ te[2][(s2 >> 8) & 0xff] ^ te[3][s3 & 0xff] ^ rk[0];
        const std::uint32_t t1 = te[0][s1 >> 24] ^ te[1][(s2 >> 16) & 0xff] ^ te[2][(s3 >> 8) & 0xff] ^ te[3][s0 & 0xff] ^ rk[1];
        const std::uint32_t t2 = te[0][s2 >> 24] ^ te[1][(s3 >> 16) & 0xff] ^ te[2][(s0 >> 8) & 0xff] ^ te[3][s1 & 0xff] ^ rk[2];
        const std::uint32_t t3 = te[0][s3 >> 24] ^ te[1][(s0 >> 16) & 0xff] ^ te[2][(s1 >> 8) & 0xff] ^ te[3][s2 & 0xff] ^ rk[3];
        s0 = t0; s1 = t1; s2 = t2; s3 = t3;
    }
    rk += 4;
    const AesSbox& s = t.sbox();
    // Final round: no MixColumns.
    store_be32(out, word(s[s0 >> 24], s[(s1 >> 16) & 0xff], s[(s2 >> 8) & 0xff], s[s3 & 0xff]) ^ rk[0]);
    store_be32(out + 4, word(s[s1 >> 24], s[(s2 >> 16) & 0xff], s[(s3 >> 8) & 0xff], s[s0 & 0xff]) ^ rk[1]);
    store_be32(out + 8, word(s[s2 >> 24], s[(s3 >> 16) & 0xff], s[(s0 >> 8) & 0xff], s[s1 & 0xff]) ^ rk[2]);
    store_be32(out + 12, word(s[s3 >> 24], s[(s0 >> 16) & 0xff], s[(s1 >> 8) & 0xff], s[s2 & 0xff]) ^ rk[3]);
}

void decrypt_words(const AesTables& t, const std::uint32_t* dk, int rounds, const std::uint8_t* in,
                   std::uint8_t* out) noexcept {
    std::uint32_t s0 = load_be32(in) ^ dk[0];
    std::uint32_t s1 = load_be32(in + 4) ^ dk[1];
    std::uint32_t s2 = load_be32(in + 8) ^ dk[2];
    std::uint32_t s3 = load_be32(in + 12) ^ dk[3];
    const auto& td = t.td;
    for (int r = 1; r < rounds; ++r) {
        dk += 4;
        const std::uint32_t t0 = td[0][s0 >> 24] ^ td[1][(s3 >> 16) & 0xff] ^ td[2][(s2 >> 8) & 0xff] ^ td[3][s1 & 0xff] ^ dk[0];
        const std::uint32_t t1 = td[0][s1 >> 24] ^ td[1][(s0 >> 16) & 0xff] ^ td[2][(s3 >> 8) & 0xff] ^ td[3][s2 & 0xff] ^ dk[1];
        const std::uint32_t t2 = td[0][s2 >> 24] ^ td[1][(s1 >> 16) & 0xff] ^ td[2][(s0 >> 8) & 0xff] ^ td[3][s3 & 0xff] ^ dk[2];
        const std::uint32_t t3 = td[0][s3 >> 24] ^ td[1][(s2 >> 16) & 0xff] ^ td[2][(s1 >> 8) & 0xff] ^ td[3][s0 & 0xff] ^ dk[3];
        s0 = t0; s1 = t1; s2 = t2; s3 = t3;
    }
    dk += 4;
    const AesSbox& si = t.inv_sbox();
    store_be32(out, word(si[s0 >> 24], si[(s3 >> 16) & 0xff], si[(s2 >> 8) & 0xff], si[s1 & 0xff]) ^ dk[0]);
    store_be32(out + 4, word(si[s1 >> 24], si[(s0 >> 16) & 0xff], si[(s3 >> 8) & 0xff], si[s2 & 0xff]) ^ dk[1]);
    store_be32(out + 8, word(si[s2 >> 24], si[(s1 >> 16) & 0xff], si[(s0 >> 8) & 0xff], si[s3 & 0xff]) ^ dk[2]);
    store_be32(out + 12, word(si[s3 >> 24], si[(s2 >> 16) & 0xff], si[(s1 >> 8) & 0xff], si[s0 & 0xff]) ^ dk[3]);
}

void require_block(ByteView block) {
    if (block.size() != kAesBlockBytes) {
        throw LengthError("AES block must be 16 bytes, got " + std::to_string(block.size()));
    }
}

} // namespace

const AesSbox& aes_standard_sbox() {
    static const AesSbox box = compute_sbox();
    return box;
}

AesTables::AesTables(const AesSbox& sbox) : sbox_(sbox) {
    for (int i = 0; i < 256; ++i) inv_sbox_[sbox_[i]] = static_cast<std::uint8_t>(i);
    for (int i = 0; i < 256; ++i) {
        const std::uint8_t s = sbox_[i];
        const std::uint8_t si = inv_sbox_[i];
        te[0][i] = word(gf_mul(s, 2), s, s, gf_mul(s, 3));
        td[0][i] = word(gf_mul(si, 14), gf_mul(si, 9), gf_mul(si, 13), gf_mul(si, 11));
        for (int k = 1; k < 4; ++k) {
            te[k][i] = rotr32(te[0][i], 8 * k);
            td[k][i] = rotr32(td[0][i], 8 * k);
        }
    }
}

std::shared_ptr<const AesTables> AesTables::standard() {
    static const std::shared_ptr<const AesTables> tables = from_sbox(aes_standard_sbox());
    return tables;
}

std::shared_ptr<const AesTables> AesTables::from_sbox(const AesSbox& sbox) {
    return std::shared_ptr<const AesTables>(new AesTables(sbox));
}

AesRoundKeys aes_expand_key(ByteView key, const AesTables& tables) {
    const std::size_t nk = key.size() / 4;
    if (key.size() != 16 && key.size() != 24 && key.size() != 32) {
        throw KeyLengthError("AES key must be 16, 24 or 32 bytes, got " + std::to_string(key.size()));
    }
    const std::size_t rounds = nk + 6;
    const AesSbox& s = tables.sbox();
    std::vector<std::uint32_t> w(4 * (rounds + 1));
    for (std::size_t i = 0; i < nk; ++i) w[i] = load_be32(key.data() + 4 * i);
    std::uint8_t rcon = 1;
    for (std::size_t i = nk; i < w.size(); ++i) {
        std::uint32_t t = w[i - 1];
        if (i % nk == 0) {
            t = rotl32(t, 8);
            t = word(s[byte_of(t, 0)], s[byte_of(t, 1)], s[byte_of(t, 2)], s[byte_of(t, 3)]);
            t ^= std::uint32_t{rcon} << 24;
            rcon = xtime(rcon);
        } else if (nk > 6 && i % nk == 4) {
            t = word(s[byte_of(t, 0)], s[byte_of(t, 1)], s[byte_of(t, 2)], s[byte_of(t, 3)]);
        }
        w[i] = w[i - nk] ^ t;
    }
    AesRoundKeys rk;
    rk.keys.resize(rounds + 1);
    for (std::size_t r = 0; r <= rounds; ++r) {
        for (int c = 0; c < 4; ++c) store_be32(rk.keys[r].data() + 4 * c, w[4 * r + c]);
    }
    return rk;
}

AesRoundKeys aes128_expand_key(ByteView key) {
    if (key.size() != 16) {
        throw KeyLengthError("AES-128 key must be 16 bytes, got " + std::to_string(key.size()));
    }
    return aes_expand_key(key);
}

AesBlock aes128_encrypt_block(ByteView block, const AesRoundKeys& rk) {
    require_block(block);
    const std::vector<std::uint32_t> words = schedule_words(rk);
    AesBlock out{};
    encrypt_words(*AesTables::standard(), words.data(), rk.rounds(), block.data(), out.data());
    return out;
}

AesBlock aes128_decrypt_block(ByteView block, const AesRoundKeys& rk) {
    require_block(block);
    const AesTables& t = *AesTables::standard();
    const std::vector<std::uint32_t> words = inverse_schedule_words(schedule_words(rk), t);
    AesBlock out{};
    decrypt_words(t, words.data(), rk.rounds(), block.data(), out.data());
    return out;
}

AesEngine::AesEngine(const SymmetricKey& key, std::shared_ptr<const AesTables> tables)
    : BlockEngine(CipherId::Aes, key.bit_length()),
      tables_(std::move(tables)),
      round_keys_(aes_expand_key(key.bytes(), *tables_)),
      enc_words_(schedule_words(round_keys_)),
      dec_words_(inverse_schedule_words(enc_words_, *tables_)) {}

void AesEngine::encrypt_raw(const std::uint8_t* in, std::uint8_t* out) const noexcept {
    encrypt_words(*tables_, enc_words_.data(), round_keys_.rounds(), in, out);
}

void AesEngine::decrypt_raw(const std::uint8_t* in, std::uint8_t* out) const noexcept {
    decrypt_words(*tables_, dec_words_.data(), round_keys_.rounds(), in, out);
}

} // namespace cbench
