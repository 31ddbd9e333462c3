#include <set>

#include "doctest.h"

#include "cbench/aes.hpp"
#include "cbench/cipher_core.hpp"
#include "cbench/errors.hpp"
#include "cbench/stream.hpp"

using namespace cbench;

TEST_CASE("cipher names round-trip through parsing") {
    std::set<std::string_view> names;
    for (CipherId id : kAllCiphers) {
        names.insert(cipher_name(id));
        REQUIRE(parse_cipher_name(cipher_name(id)) == id);
        REQUIRE(cipher_from_code(static_cast<std::uint8_t>(id)) == id);
    }
    CHECK(names.size() == 5);
    CHECK(cipher_name(CipherId::ChaCha20) == "ChaCha20");
    CHECK_FALSE(parse_cipher_name("Threefish"));
    CHECK_FALSE(parse_cipher_name("aes"));
    CHECK_FALSE(cipher_from_code(5));
    CHECK(valid_cipher_names() == "AES, Blowfish, Twofish, Salsa20, ChaCha20");
}

TEST_CASE("profiles match the algorithm settings table") {
    const auto& aes = profile_of(CipherId::Aes);
    CHECK(aes.kind == CipherKind::Block);
    CHECK(aes.block_bits == 128);
    CHECK(aes.benchmark_key_bits == 128);
    for (int bits : {128, 192, 256}) CHECK(aes.standard_key_bits.permits(bits));
    CHECK_FALSE(aes.standard_key_bits.permits(160));

    const auto& bf = profile_of(CipherId::Blowfish);
    CHECK(bf.kind == CipherKind::Block);
    CHECK(bf.block_bits == 64);
    CHECK(bf.benchmark_key_bits == 128);
    for (int bits = 0; bits <= 512; ++bits) {
        CHECK(bf.standard_key_bits.permits(bits) == (bits >= 32 && bits <= 448 && bits % 8 == 0));
    }

    const auto& tf = profile_of(CipherId::Twofish);
    CHECK(tf.block_bits == 128);
    CHECK(tf.benchmark_key_bits == 128);

    const auto& salsa = profile_of(CipherId::Salsa20);
    CHECK(salsa.kind == CipherKind::Stream);
    CHECK(salsa.block_bits == 512);
    CHECK(salsa.benchmark_key_bits == 128);
    CHECK(salsa.standard_key_bits.permits(128));
    CHECK(salsa.standard_key_bits.permits(256));
    CHECK_FALSE(salsa.standard_key_bits.permits(192));

    const auto& chacha = profile_of(CipherId::ChaCha20);
    CHECK(chacha.kind == CipherKind::Stream);
    CHECK(chacha.benchmark_key_bits == 256);

    CHECK(aes.iv_bytes() == 16);
    CHECK(bf.iv_bytes() == 8);
    CHECK(tf.iv_bytes() == 16);
    CHECK(salsa.iv_bytes() == 8);
    CHECK(chacha.iv_bytes() == 8);
}

TEST_CASE("make_engine builds a complete AES-128 schedule") {
    const auto engine = make_engine(CipherId::Aes, SymmetricKey(Bytes(16, 0x2a)));
    const auto& aes = dynamic_cast<const AesEngine&>(*engine);
    CHECK(aes.round_keys().keys.size() == 11);
    CHECK(aes.round_keys().rounds() == 10);
    CHECK(engine->kind() == CipherKind::Block);
    CHECK(engine->key_bits() == 128);
}

TEST_CASE("make_engine rejects key lengths outside the profile") {
    CHECK_THROWS_AS(make_engine(CipherId::Blowfish, SymmetricKey(Bytes(3))), KeyLengthError);
    CHECK_THROWS_AS(make_engine(CipherId::Blowfish, SymmetricKey(Bytes(57))), KeyLengthError);
    CHECK_THROWS_AS(make_engine(CipherId::Aes, SymmetricKey(Bytes(15))), KeyLengthError);
    CHECK_THROWS_AS(make_engine(CipherId::Twofish, SymmetricKey(Bytes(20))), KeyLengthError);
    CHECK_THROWS_AS(make_engine(CipherId::ChaCha20, SymmetricKey(Bytes(24))), KeyLengthError);
    CHECK_NOTHROW(make_engine(CipherId::Blowfish, SymmetricKey(Bytes(4))));
    CHECK_NOTHROW(make_engine(CipherId::Blowfish, SymmetricKey(Bytes(56))));
}

TEST_CASE("ChaCha20 engine state encodes the key-length variant") {
    const Bytes nonce(8);
    const auto e256 = make_engine(CipherId::ChaCha20, SymmetricKey(Bytes(32, 7)));
    const auto& s256 = dynamic_cast<const StreamCipherEngine&>(*e256);
    // "expand 32-byte k"
    CHECK(s256.state_for(nonce, 0).constants() ==
          std::array<std::uint32_t, 4>{0x61707865, 0x3320646e, 0x79622d32, 0x6b206574});

    const auto e128 = make_engine(CipherId::ChaCha20, SymmetricKey(Bytes(16, 7)));
    const auto& s128 = dynamic_cast<const StreamCipherEngine&>(*e128);
    // "expand 16-byte k"
    CHECK(s128.state_for(nonce, 0).constants() ==
          std::array<std::uint32_t, 4>{0x61707865, 0x3120646e, 0x79622d36, 0x6b206574});
}

TEST_CASE("block engines check block lengths") {
    const auto engine = make_engine(CipherId::Aes, SymmetricKey(Bytes(16)));
    const auto& block = dynamic_cast<const BlockEngine&>(*engine);
    Bytes out(16);
    CHECK_THROWS_AS(block.encrypt_block(Bytes(15), out), LengthError);
    CHECK_THROWS_AS(block.decrypt_block(Bytes(17), out), LengthError);
}

TEST_CASE("engines are deterministic and unchanged by use") {
    for (CipherId id : kAllCiphers) {
        CAPTURE(cipher_name(id));
        const SymmetricKey key(Bytes(profile_of(id).benchmark_key_bits / 8, 0x5c));
        const auto a = make_engine(id, key);
        const auto b = make_engine(id, key);
        const Bytes iv(a->iv_bytes(), 0x11);
        if (const auto* block = dynamic_cast<const BlockEngine*>(a.get())) {
            const auto* other = dynamic_cast<const BlockEngine*>(b.get());
            Bytes in(block->block_bytes(), 0x42), x(in.size()), y(in.size()), z(in.size());
            block->encrypt_block(in, x);
            block->encrypt_block(in, z);
            other->encrypt_block(in, y);
            CHECK(x == y);
            CHECK(x == z);
        } else {
            const auto& sa = dynamic_cast<const StreamEngine&>(*a);
            const auto& sb = dynamic_cast<const StreamEngine&>(*b);
            CHECK(sa.keystream_block(iv, 3) == sb.keystream_block(iv, 3));
            CHECK(sa.keystream_block(iv, 3) == sa.keystream_block(iv, 3));
        }
    }
}

TEST_CASE("hex helpers") {
    CHECK(to_hex(from_hex("00ff10Ab")) == "00ff10ab");
    CHECK_THROWS_AS(from_hex("abc"), std::invalid_argument);
    CHECK_THROWS_AS(from_hex("zz"), std::invalid_argument);
    CHECK(SymmetricKey::from_hex("0011").bit_length() == 16);
}
