#include "cbench/stream.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "cbench/errors.hpp"

namespace cbench {

namespace {

void require_stream_id(CipherId id) {
    if (id != CipherId::Salsa20 && id != CipherId::ChaCha20) {
        throw std::invalid_argument(std::string(cipher_name(id)) + " is not a stream cipher");
    }
}

// Word indices of the 64-bit block counter (low, high) per layout.
constexpr std::size_t counter_low(CipherId variant) noexcept { return variant == CipherId::Salsa20 ? 8 : 12; }

KeystreamBlock serialize(const std::array<std::uint32_t, 16>& mixed, const std::array<std::uint32_t, 16>& input) {
    KeystreamBlock out{};
    for (std::size_t i = 0; i < 16; ++i) store_le32(out.data() + 4 * i, mixed[i] + input[i]);
    return out;
}

inline void salsa_quarter(std::array<std::uint32_t, 16>& x, int a, int b, int c, int d) noexcept {
    x[b] ^= rotl32(x[a] + x[d], 7);
    x[c] ^= rotl32(x[b] + x[a], 9);
    x[d] ^= rotl32(x[c] + x[b], 13);
    x[a] ^= rotl32(x[d] + x[c], 18);
}

inline void chacha_quarter(std::array<std::uint32_t, 16>& x, int a, int b, int c, int d) noexcept {
    const auto r = chacha20_quarter_round(x[a], x[b], x[c], x[d]);
    x[a] = r[0];
    x[b] = r[1];
    x[c] = r[2];
    x[d] = r[3];
}

KeystreamBlock core(const StreamCoreState& state) {
    return state.variant == CipherId::Salsa20 ? salsa20_core(state) : chacha20_core(state);
}

} // namespace

std::uint64_t StreamCoreState::counter() const noexcept {
    const std::size_t lo = counter_low(variant);
    return (std::uint64_t{words[lo + 1]} << 32) | words[lo];
}

void StreamCoreState::increment_counter() noexcept {
    const std::size_t lo = counter_low(variant);
    if (++words[lo] == 0) ++words[lo + 1];
}

std::array<std::uint32_t, 4> StreamCoreState::constants() const noexcept {
    if (variant == CipherId::Salsa20) return {words[0], words[5], words[10], words[15]};
    return {words[0], words[1], words[2], words[3]};
}

StreamCoreState build_state(CipherId id, const SymmetricKey& key, ByteView nonce, std::uint64_t counter) {
    require_stream_id(id);
    if (key.size() != 16 && key.size() != 32) {
        throw KeyLengthError(std::string(cipher_name(id)) + " key must be 16 or 32 bytes, got " +
                             std::to_string(key.size()));
    }
    if (nonce.size() != kStreamNonceBytes) {
        throw NonceLengthError(std::string(cipher_name(id)) + " nonce must be 8 bytes, got " +
                               std::to_string(nonce.size()));
    }
    const auto& constants = key.size() == 32 ? kSigmaConstants : kTauConstants;
    const ByteView k = key.bytes();
    std::array<std::uint32_t, 8> kw{};
    for (std::size_t i = 0; i < 8; ++i) kw[i] = load_le32(k.data() + (4 * i) % k.size());
    const auto t0 = static_cast<std::uint32_t>(counter);
    const auto t1 = static_cast<std::uint32_t>(counter >> 32);
    const std::uint32_t v0 = load_le32(nonce.data());
    const std::uint32_t v1 = load_le32(nonce.data() + 4);

    StreamCoreState st;
    st.variant = id;
    if (id == CipherId::Salsa20) {
        st.words = {constants[0], kw[0], kw[1], kw[2], kw[3], constants[1], v0, v1,
                    t0, t1, constants[2], kw[4], kw[5], kw[6], kw[7], constants[3]};
    } else {
        st.words = {constants[0], constants[1], constants[2], constants[3], kw[0], kw[1], kw[2], kw[3],
                    kw[4], kw[5], kw[6], kw[7], t0, t1, v0, v1};
    }
    return st;
}

KeystreamBlock salsa20_core(const StreamCoreState& state) {
    if (state.variant != CipherId::Salsa20) throw std::invalid_argument("salsa20_core needs a Salsa20 state");
    std::array<std::uint32_t, 16> x = state.words;
    for (int i = 0; i < 10; ++i) {
        // Columns.
        salsa_quarter(x, 0, 4, 8, 12);
        salsa_quarter(x, 5, 9, 13, 1);
        salsa_quarter(x, 10, 14, 2, 6);
        salsa_quarter(x, 15, 3, 7, 11);
        // Rows.
        salsa_quarter(x, 0, 1, 2, 3);
        salsa_quarter(x, 5, 6, 7, 4);
        salsa_quarter(x, 10, 11, 8, 9);
        salsa_quarter(x, 15, 12, 13, 14);
    }
    return serialize(x, state.words);
}

KeystreamBlock chacha20_core(const StreamCoreState& state) {
    if (state.variant != CipherId::ChaCha20) throw std::invalid_argument("chacha20_core needs a ChaCha20 state");
    std::array<std::uint32_t, 16> x = state.words;
    for (int i = 0; i < 10; ++i) {
        chacha_quarter(x, 0, 4, 8, 12);
        chacha_quarter(x, 1, 5, 9, 13);
        chacha_quarter(x, 2, 6, 10, 14);
        chacha_quarter(x, 3, 7, 11, 15);
        // Diagonals.
        chacha_quarter(x, 0, 5, 10, 15);
        chacha_quarter(x, 1, 6, 11, 12);
        chacha_quarter(x, 2, 7, 8, 13);
        chacha_quarter(x, 3, 4, 9, 14);
    }
    return serialize(x, state.words);
}

StreamCipherEngine::StreamCipherEngine(CipherId id, const SymmetricKey& key)
    : StreamEngine(id, key.bit_length()), key_(key) {
    require_stream_id(id);
    if (key.size() != 16 && key.size() != 32) {
        throw KeyLengthError(std::string(cipher_name(id)) + " key must be 16 or 32 bytes, got " +
                             std::to_string(key.size()));
    }
}

StreamCoreState StreamCipherEngine::state_for(ByteView nonce, std::uint64_t counter) const {
    return build_state(id(), key_, nonce, counter);
}

KeystreamBlock StreamCipherEngine::keystream_block(ByteView nonce, std::uint64_t block_index) const {
    return core(state_for(nonce, block_index));
}

void StreamCipherEngine::apply_keystream(ByteView nonce, std::uint64_t start_counter, ByteView in,
                                         MutableByteView out) const {
    if (in.size() != out.size()) throw LengthError("keystream input and output lengths differ");
    const std::uint64_t blocks = (in.size() + kKeystreamBlockBytes - 1) / kKeystreamBlockBytes;
    if (blocks > std::numeric_limits<std::uint64_t>::max() - start_counter) {
        throw CounterOverflowError("keystream would run past block counter 2^64 - 1");
    }
    StreamCoreState state = state_for(nonce, start_counter);
    for (std::size_t offset = 0; offset < in.size(); offset += kKeystreamBlockBytes) {
        const KeystreamBlock ks = core(state);
        const std::size_t n = std::min(kKeystreamBlockBytes, in.size() - offset);
        for (std::size_t i = 0; i < n; ++i) out[offset + i] = in[offset + i] ^ ks[i];
        state.increment_counter();
    }
}

Bytes keystream_xor(CipherId id, const SymmetricKey& key, ByteView nonce, std::uint64_t start_counter,
                    ByteView data) {
    const StreamCipherEngine engine(id, key);
    Bytes out(data.size());
    engine.apply_keystream(nonce, start_counter, data, out);
    return out;
}

KeystreamBlock seek_block(CipherId id, const SymmetricKey& key, ByteView nonce, std::uint64_t block_index) {
    return core(build_state(id, key, nonce, block_index));
}

} // namespace cbench
