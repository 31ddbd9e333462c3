#include "cbench/twofish.hpp"

#include <algorithm>

#include "cbench/errors.hpp"

namespace cbench {

namespace {

using Nibbles = std::array<std::uint8_t, 16>;

struct QTables {
    std::array<std::uint8_t, 256> q0;
    std::array<std::uint8_t, 256> q1;
};

constexpr std::uint8_t ror4(std::uint8_t x) noexcept {
    return static_cast<std::uint8_t>(((x >> 1) | (x << 3)) & 0x0f);
}

// The fixed 8-bit permutations q0 and q1, each built from four 4-bit tables.
constexpr std::array<std::uint8_t, 256> build_q(const std::array<Nibbles, 4>& t) noexcept {
    std::array<std::uint8_t, 256> q{};
    for (int x = 0; x < 256; ++x) {
        const std::uint8_t a0 = static_cast<std::uint8_t>(x >> 4);
        const std::uint8_t b0 = static_cast<std::uint8_t>(x & 0x0f);
        const std::uint8_t a1 = a0 ^ b0;
        const std::uint8_t b1 = static_cast<std::uint8_t>(a0 ^ ror4(b0) ^ ((a0 << 3) & 0x0f));
        const std::uint8_t a2 = t[0][a1];
        const std::uint8_t b2 = t[1][b1];
        const std::uint8_t a3 = a2 ^ b2;
        const std::uint8_t b3 = static_cast<std::uint8_t>(a2 ^ ror4(b2) ^ ((a2 << 3) & 0x0f));
        q[x] = static_cast<std::uint8_t>((t[3][b3] << 4) | t[2][a3]);
    }
    return q;
}

constexpr std::array<Nibbles, 4> kQ0Nibbles{{
    {0x8, 0x1, 0x7, 0xD, 0x6, 0xF, 0x3, 0x2, 0x0, 0xB, 0x5, 0x9, 0xE, 0xC, 0xA, 0x4},
    {0xE, 0xC, 0xB, 0x8, 0x1, 0x2, 0x3, 0x5, 0xF, 0x4, 0xA, 0x6, 0x7, 0x0, 0x9, 0xD},
    {0xB, 0xA, 0x5, 0xE, 0x6, 0xD, 0x9, 0x0, 0xC, 0x8, 0xF, 0x3, 0x2, 0x4, 0x7, 0x1},
    {0xD, 0x7, 0xF, 0x4, 0x1, 0x2, 0x6, 0xE, 0x9, 0xB, 0x3, 0x0, 0x8, 0x5, 0xC, 0xA},
}};

constexpr std::array<Nibbles, 4> kQ1Nibbles{{
    {0x2, 0x8, 0xB, 0xD, 0xF, 0x7, 0x6, 0xE, 0x3, 0x1, 0x9, 0x4, 0x0, 0xA, 0xC, 0x5},
    {0x1, 0xE, 0x2, 0xB, 0x4, 0xC, 0x3, 0x7, 0x6, 0xD, 0xA, 0x5, 0xF, 0x9, 0x0, 0x8},
    {0x4, 0xC, 0x7, 0x5, 0x1, 0x6, 0x9, 0xA, 0x0, 0xE, 0xD, 0x8, 0x2, 0xB, 0x3, 0xF},
    {0xB, 0x9, 0x5, 0x1, 0xC, 0x3, 0xD, 0xE, 0x6, 0x4, 0x7, 0xF, 0x2, 0x0, 0x8, 0xA},
}};

constexpr QTables kQ{build_q(kQ0Nibbles), build_q(kQ1Nibbles)};

constexpr std::uint8_t gf_mul(std::uint8_t a, std::uint8_t b, unsigned poly) noexcept {
    unsigned r = 0;
    unsigned x = a;
    while (b != 0) {
        if (b & 1) r ^= x;
        x <<= 1;
        if (x & 0x100) x ^= poly;
        b >>= 1;
    }
    return static_cast<std::uint8_t>(r);
}

constexpr unsigned kMdsPoly = 0x169;
constexpr unsigned kRsPoly = 0x14D;

constexpr std::uint8_t kMds[4][4] = {
    {0x01, 0xEF, 0x5B, 0x5B},
    {0x5B, 0xEF, 0xEF, 0x01},
    {0xEF, 0x5B, 0x01, 0xEF},
    {0xEF, 0x01, 0xEF, 0x5B},
};

constexpr std::uint8_t kRs[4][8] = {
    {0x01, 0xA4, 0x55, 0x87, 0x5A, 0x58, 0xDB, 0x9E},
    {0xA4, 0x56, 0x82, 0xF3, 0x1E, 0xC6, 0x68, 0xE5},
    {0x02, 0xA1, 0xFC, 0xC1, 0x47, 0xAE, 0x3D, 0x19},
    {0xA4, 0x55, 0x87, 0x5A, 0x58, 0xDB, 0x9E, 0x03},
};

// MDS column `col` scaled by `y`, as a little-endian word.
constexpr std::uint32_t mds_column(int col, std::uint8_t y) noexcept {
    std::uint32_t w = 0;
    for (int row = 0; row < 4; ++row) {
        w |= std::uint32_t{gf_mul(kMds[row][col], y, kMdsPoly)} << (8 * row);
    }
    return w;
}

constexpr std::uint8_t byte_at(std::uint32_t w, int i) noexcept { return static_cast<std::uint8_t>(w >> (8 * i)); }

// Key-dependent S-box for byte position `pos`: the q-chain of h() with the
// list bytes XORed in, before the MDS multiply.
std::uint8_t keyed_sbox(int pos, std::uint8_t y, std::span<const std::uint32_t> list) noexcept {
    const auto& q0 = kQ.q0;
    const auto& q1 = kQ.q1;
    const std::size_t k = list.size();
    // Per byte position: the permutation applied before XORing list words
    // 3, 2, 1, 0 in turn, then the final one (true selects q1).
    static constexpr bool kUseQ1[4][5] = {
        {true, true, false, false, true},
        {false, true, true, false, false},
        {false, false, false, true, true},
        {true, false, true, true, false},
    };
    auto q = [&](bool use_q1, std::uint8_t v) { return use_q1 ? q1[v] : q0[v]; };
    if (k == 4) y = q(kUseQ1[pos][0], y) ^ byte_at(list[3], pos);
    if (k >= 3) y = q(kUseQ1[pos][1], y) ^ byte_at(list[2], pos);
    y = q(kUseQ1[pos][2], y) ^ byte_at(list[1], pos);
    y = q(kUseQ1[pos][3], y) ^ byte_at(list[0], pos);
    return q(kUseQ1[pos][4], y);
}

std::uint32_t rs_word(ByteView eight) noexcept {
    std::uint32_t w = 0;
    for (int row = 0; row < 4; ++row) {
        std::uint8_t acc = 0;
        for (int col = 0; col < 8; ++col) acc ^= gf_mul(kRs[row][col], eight[col], kRsPoly);
        w |= std::uint32_t{acc} << (8 * row);
    }
    return w;
}

void require_block(ByteView block) {
    if (block.size() != kTwofishBlockBytes) {
        throw LengthError("Twofish block must be 16 bytes, got " + std::to_string(block.size()));
    }
}

template <typename G>
void encrypt_with(const TwofishSubkeys& sk, G&& g, const std::uint8_t* in, std::uint8_t* out) noexcept {
    const auto& k = sk.k;
    std::uint32_t r0 = load_le32(in) ^ k[0];
    std::uint32_t r1 = load_le32(in + 4) ^ k[1];
    std::uint32_t r2 = load_le32(in + 8) ^ k[2];
    std::uint32_t r3 = load_le32(in + 12) ^ k[3];
    for (int round = 0; round < 16; round += 2) {
        std::uint32_t t0 = g(r0);
        std::uint32_t t1 = g(rotl32(r1, 8));
        PhtPair f = pht(t0, t1);
        r2 = rotr32(r2 ^ (f.a_prime + k[2 * round + 8]), 1);
        r3 = rotl32(r3, 1) ^ (f.b_prime + k[2 * round + 9]);

        t0 = g(r2);
        t1 = g(rotl32(r3, 8));
        f = pht(t0, t1);
        r0 = rotr32(r0 ^ (f.a_prime + k[2 * round + 10]), 1);
        r1 = rotl32(r1, 1) ^ (f.b_prime + k[2 * round + 11]);
    }
    // Output whitening undoes the final swap.
    store_le32(out, r2 ^ k[4]);
    store_le32(out + 4, r3 ^ k[5]);
    store_le32(out + 8, r0 ^ k[6]);
    store_le32(out + 12, r1 ^ k[7]);
}

template <typename G>
void decrypt_with(const TwofishSubkeys& sk, G&& g, const std::uint8_t* in, std::uint8_t* out) noexcept {
    const auto& k = sk.k;
    std::uint32_t r2 = load_le32(in) ^ k[4];
    std::uint32_t r3 = load_le32(in + 4) ^ k[5];
    std::uint32_t r0 = load_le32(in + 8) ^ k[6];
    std::uint32_t r1 = load_le32(in + 12) ^ k[7];
    for (int round = 14; round >= 0; round -= 2) {
        std::uint32_t t0 = g(r2);
        std::uint32_t t1 = g(rotl32(r3, 8));
        PhtPair f = pht(t0, t1);
        r0 = rotl32(r0, 1) ^ (f.a_prime + k[2 * round + 10]);
        r1 = rotr32(r1 ^ (f.b_prime + k[2 * round + 11]), 1);

        t0 = g(r0);
        t1 = g(rotl32(r1, 8));
        f = pht(t0, t1);
        r2 = rotl32(r2, 1) ^ (f.a_prime + k[2 * round + 8]);
        r3 = rotr32(r3 ^ (f.b_prime + k[2 * round + 9]), 1);
    }
    store_le32(out, r0 ^ k[0]);
    store_le32(out + 4, r1 ^ k[1]);
    store_le32(out + 8, r2 ^ k[2]);
    store_le32(out + 12, r3 ^ k[3]);
}

} // namespace

std::uint32_t twofish_h(std::uint32_t x, std::span<const std::uint32_t> list) noexcept {
    std::uint32_t z = 0;
    for (int pos = 0; pos < 4; ++pos) z ^= mds_column(pos, keyed_sbox(pos, byte_at(x, pos), list));
    return z;
}

TwofishSubkeys twofish_expand_key(ByteView key) {
    if (key.size() != 16 && key.size() != 24 && key.size() != 32) {
        throw KeyLengthError("Twofish key must be 16, 24 or 32 bytes, got " + std::to_string(key.size()));
    }
    const std::size_t n = key.size() / 8;
    std::vector<std::uint32_t> even(n);
    std::vector<std::uint32_t> odd(n);
    TwofishSubkeys sk;
    sk.sbox_key.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        even[i] = load_le32(key.data() + 8 * i);
        odd[i] = load_le32(key.data() + 8 * i + 4);
        sk.sbox_key[n - 1 - i] = rs_word(key.subspan(8 * i, 8));
    }
    constexpr std::uint32_t kRho = 0x01010101;
    for (std::uint32_t i = 0; i < 20; ++i) {
        const std::uint32_t a = twofish_h(2 * i * kRho, even);
        const std::uint32_t b = rotl32(twofish_h((2 * i + 1) * kRho, odd), 8);
        const PhtPair p = pht(a, b);
        sk.k[2 * i] = p.a_prime;
        sk.k[2 * i + 1] = rotl32(p.b_prime, 9);
    }
    return sk;
}

TwofishBlock twofish_encrypt_block(ByteView block, const TwofishSubkeys& sk) {
    require_block(block);
    TwofishBlock out{};
    encrypt_with(sk, [&](std::uint32_t x) { return twofish_h(x, sk.sbox_key); }, block.data(), out.data());
    return out;
}

TwofishBlock twofish_decrypt_block(ByteView block, const TwofishSubkeys& sk) {
    require_block(block);
    TwofishBlock out{};
    decrypt_with(sk, [&](std::uint32_t x) { return twofish_h(x, sk.sbox_key); }, block.data(), out.data());
    return out;
}

TwofishEngine::TwofishEngine(const SymmetricKey& key, TwofishVariant variant)
    : BlockEngine(CipherId::Twofish, key.bit_length()), subkeys_(twofish_expand_key(key.bytes())), variant_(variant) {
    if (variant_ == TwofishVariant::FullKeying) {
        auto tables = std::make_unique<KeyedTables>();
        for (int pos = 0; pos < 4; ++pos) {
            for (int x = 0; x < 256; ++x) {
                tables->mds_sbox[pos][x] =
                    mds_column(pos, keyed_sbox(pos, static_cast<std::uint8_t>(x), subkeys_.sbox_key));
            }
        }
        tables_ = std::move(tables);
    }
}

std::uint32_t TwofishEngine::g(std::uint32_t x) const noexcept {
    if (tables_) {
        const auto& t = tables_->mds_sbox;
        return t[0][x & 0xff] ^ t[1][(x >> 8) & 0xff] ^ t[2][(x >> 16) & 0xff] ^ t[3][x >> 24];
    }
    return twofish_h(x, subkeys_.sbox_key);
}

void TwofishEngine::encrypt_raw(const std::uint8_t* in, std::uint8_t* out) const noexcept {
    std::uint8_t tmp[kTwofishBlockBytes];
    encrypt_with(subkeys_, [this](std::uint32_t x) { return g(x); }, in, tmp);
    std::copy(tmp, tmp + kTwofishBlockBytes, out);
}

void TwofishEngine::decrypt_raw(const std::uint8_t* in, std::uint8_t* out) const noexcept {
    std::uint8_t tmp[kTwofishBlockBytes];
    decrypt_with(subkeys_, [this](std::uint32_t x) { return g(x); }, in, tmp);
    std::copy(tmp, tmp + kTwofishBlockBytes, out);
}

} // namespace cbench
