// Copyright 2026 The pqcbdc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <set>

#include <openssl/sha.h>

#include "fixtures.hpp"
#include "pqcbdc/crypto/group.hpp"
#include "pqcbdc/crypto/hash.hpp"
#include "pqcbdc/crypto/hybrid.hpp"
#include "pqcbdc/crypto/key_io.hpp"
#include "pqcbdc/crypto/mss.hpp"
#include "pqcbdc/crypto/schnorr.hpp"
#include "pqcbdc/crypto/wots.hpp"
#include "pqcbdc/error.hpp"
#include "pqcbdc/ledger/token.hpp"

namespace pqcbdc {
namespace {

using crypto::SchemeId;
using testing::mss_config;
using testing::rng;

// Reference values from tests/oracles/crypto_vectors.py (hashlib + Python ints).
constexpr const char* kHashTxAbc = "d9e0da7c196c96d25eae0521d75f98b47b81b1c1656fe6a755355f21b3f0ea9c";
constexpr const char* kDrbgBlock0 = "a95cac99c2c5b8adb7022cdc234bb67080ed3754ea4aff51ece2cc48943fdfb8";
constexpr const char* kDrbgBlock1 = "259f1e73b72767d30d58581278d88749f5c86e019d0fad3c07e09accdcba40a4";
constexpr const char* kAddressAbc = "8e9200b698eba830f0856cc31ef2f0b00038d837e0dbddea1f3a8b17efce1ddc";
constexpr const char* kWotsDigitsHello = "d11ff3fbce62412351cad92320e2cfeefe6db6dd1b281b15cf29be65892199d81c2";
constexpr const char* kWotsPkSha = "0f3ed55baace955ab2b09fdd670c8a2954f08c1ee565227a33697567ddc40f30";
constexpr const char* kWotsSigSha = "ad58f1bbc9474b88ef235a509c8d3b40b4e380e1d60fa8383bc61021369c6e2f";
constexpr const char* kMssRootH2 = "303903bf0a1ac4119e512b5df8e549196a381ba3e63cb93ecd253f681e0f706e";
constexpr const char* kSchnorrY =
    "3b8eb444ddc006a2ec4278f17ec2e117542db2140ec2e328a53935b69c5ab17d"
    "1672ee36795280a74eb866e79b732da819565148a4a68da71cfce73b0fb94bbf";
constexpr const char* kSchnorrSig = "6a968e4341966f598ef2f59b2f0bbdb02e6208aa6e6491cde3c865dd2bb43660bce46b9283346d82";

Bytes bytes_of(std::string_view s) { return {s.begin(), s.end()}; }

// Untagged SHA-256, used to compare long outputs against the oracle's digests.
Digest plain_sha256(ByteView data) {
    Digest out{};
    SHA256(data.data(), data.size(), out.data());
    return out;
}

TEST(Hash, MatchesReferenceFraming) {
    EXPECT_EQ(to_hex(crypto::hash(bytes_of("abc"), "tx")), kHashTxAbc);
    EXPECT_EQ(to_hex(ledger::address_of(bytes_of("abc"))), kAddressAbc);
}

TEST(Hash, PartsEqualConcatenation) {
    auto a = bytes_of("left"), b = bytes_of("right");
    auto joined = a;
    joined.insert(joined.end(), b.begin(), b.end());
    EXPECT_EQ(crypto::hash({a, b}, "node"), crypto::hash(joined, "node"));
}

TEST(Hash, TagsSeparateDomains) {
    auto msg = bytes_of("same input");
    std::set<Digest> seen;
    for (auto tag : crypto::registered_tags()) EXPECT_TRUE(seen.insert(crypto::hash(msg, tag)).second) << tag;
}

TEST(Hash, UnknownTagRejected) {
    try {
        crypto::hash(bytes_of("x"), "bogus");
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::UnknownDomainTag);
    }
}

TEST(Drbg, MatchesReferenceBlocks) {
    auto r = crypto::Drbg::from_label("oracle");
    EXPECT_EQ(to_hex(r.next_block()), kDrbgBlock0);
    EXPECT_EQ(to_hex(r.next_block()), kDrbgBlock1);
    EXPECT_EQ(r.counter(), 2u);
}

TEST(Drbg, ResumesFromSeedAndCounter) {
    auto a = rng("resume");
    a.bytes(100);
    crypto::Drbg b(a.seed(), a.counter());
    EXPECT_EQ(a.bytes(64), b.bytes(64));
}

TEST(Drbg, UniformStaysInRangeAndCoversIt) {
    auto r = rng("uniform");
    std::set<std::int64_t> seen;
    for (int i = 0; i < 2000; ++i) {
        auto v = r.uniform_int(-3, 3);
        ASSERT_GE(v, -3);
        ASSERT_LE(v, 3);
        seen.insert(v);
        auto u = r.unit();
        ASSERT_GE(u, 0.0);
        ASSERT_LT(u, 1.0);
    }
    EXPECT_EQ(seen.size(), 7u);
}

TEST(Drbg, ForksAreIndependentAndDeterministic) {
    auto a = rng("parent"), b = rng("parent");
    auto fa = a.fork("x"), fb = b.fork("x");
    EXPECT_EQ(fa.bytes(32), fb.bytes(32));
    auto c = rng("parent");
    EXPECT_NE(c.fork("y").bytes(32), rng("parent").fork("x").bytes(32));
}

TEST(Group, DefaultGroupIsValid) {
    const auto& g = crypto::default_group();
    EXPECT_NO_THROW(g.validate());
    EXPECT_EQ(g.p_bytes(), 64u);
    EXPECT_EQ(g.q_bytes(), 20u);
    // Independent check of the subgroup structure.
    EXPECT_EQ(mpz_class((g.p - 1) % g.q), 0);
    EXPECT_NE(g.g, 1);
}

TEST(Group, RejectsBrokenParameters) {
    const auto& g = crypto::default_group();
    auto bad = crypto::GroupParams{g.p, g.q, mpz_class(1)};
    EXPECT_THROW(bad.validate(), Error);
    auto bad_q = crypto::GroupParams{g.p, g.q + 2, g.g};
    EXPECT_THROW(bad_q.validate(), Error);
}

TEST(Schnorr, MatchesReferenceVector) {
    const auto& g = crypto::default_group();
    auto x = crypto::mpz_to_bytes(mpz_class(123456789), g.q_bytes());
    EXPECT_EQ(to_hex(crypto::schnorr::public_from_private(x, g)), kSchnorrY);
    auto sig = crypto::schnorr::sign(x, bytes_of("pay 10"), g);
    EXPECT_EQ(to_hex(sig), kSchnorrSig);
    EXPECT_TRUE(crypto::schnorr::verify(from_hex(kSchnorrY), bytes_of("pay 10"), sig, g));
    EXPECT_FALSE(crypto::schnorr::verify(from_hex(kSchnorrY), bytes_of("pay 11"), sig, g));
}

TEST(Schnorr, RejectsOutOfRangeComponents) {
    const auto& g = crypto::default_group();
    auto r = rng("schnorr-range");
    auto kp = crypto::schnorr::keygen(r, g);
    auto sig = crypto::schnorr::sign(kp.private_key, bytes_of("m"), g);
    auto q = crypto::mpz_to_bytes(g.q, g.q_bytes());
    auto forged = sig;
    std::copy(q.begin(), q.end(), forged.begin() + static_cast<std::ptrdiff_t>(g.q_bytes()));
    EXPECT_FALSE(crypto::schnorr::verify(kp.public_key, bytes_of("m"), forged, g));
    const auto one = crypto::mpz_to_bytes(mpz_class(1), g.p_bytes());
    EXPECT_FALSE(crypto::schnorr::verify(one, bytes_of("m"), sig, g));
    EXPECT_THROW(crypto::schnorr::verify(kp.public_key, bytes_of("m"), Bytes(5), g), Error);
}

TEST(Wots, ParametersFollowFromWAndN) {
    EXPECT_EQ(crypto::wots::kParams.len1(), 64u);
    EXPECT_EQ(crypto::wots::kParams.len2(), 3u);
    EXPECT_EQ(crypto::wots::kPublicBytes, 2144u);
    EXPECT_EQ(crypto::wots::kSignatureBytes, 2144u);
}

TEST(Wots, MatchesReferenceVector) {
    Bytes seed(32);
    for (int i = 0; i < 32; ++i) seed[i] = static_cast<std::uint8_t>(i);
    auto digits = crypto::wots::message_digits(bytes_of("hello"));
    std::string hex;
    for (auto d : digits) hex += "0123456789abcdef"[d];
    EXPECT_EQ(hex, kWotsDigitsHello);
    auto pk = crypto::wots::public_key(seed);
    auto sig = crypto::wots::sign(seed, bytes_of("hello"));
    EXPECT_EQ(to_hex(plain_sha256(pk)), kWotsPkSha);
    EXPECT_EQ(to_hex(plain_sha256(sig)), kWotsSigSha);
    EXPECT_TRUE(crypto::wots::verify(pk, bytes_of("hello"), sig));
}

TEST(Wots, ChecksumBlocksDigitIncrease) {
    // Raising any message digit lowers the checksum, so a forger cannot only walk chains forward.
    auto r = rng("wots-checksum");
    for (int trial = 0; trial < 50; ++trial) {
        auto d = crypto::wots::message_digits(r.bytes(16));
        unsigned sum = 0;
        for (std::size_t i = 0; i < 64; ++i) sum += 15 - d[i];
        EXPECT_EQ(sum, (unsigned(d[64]) << 8) | (unsigned(d[65]) << 4) | d[66]);
    }
}

TEST(Wots, SecondSignatureIsOtsReuse) {
    auto r = rng("wots-reuse");
    auto key = crypto::keygen(SchemeId::PqWots, r);
    EXPECT_EQ(key.signatures_remaining(), 1u);
    crypto::sign(key, bytes_of("first"));
    EXPECT_EQ(key.signatures_remaining(), 0u);
    try {
        crypto::sign(key, bytes_of("second"));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::OtsReuse);
    }
    try {
        crypto::sign(key, bytes_of("first"));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::OtsReuse);
    }
}

TEST(Mss, RootMatchesReference) {
    Bytes seed(32, 0x11);
    crypto::mss::Tree tree(seed, 2);
    EXPECT_EQ(to_hex(tree.root()), kMssRootH2);
}

TEST(Mss, HeightTwoExhaustsAfterFour) {
    auto r = rng("mss-h2");
    auto key = crypto::keygen(SchemeId::PqMss, r, mss_config(2));
    std::set<std::uint32_t> leaves;
    for (int i = 0; i < 4; ++i) {
        auto sig = crypto::sign(key, bytes_of("m" + std::to_string(i)), mss_config(2));
        ASSERT_TRUE(sig.leaf_index.has_value());
        leaves.insert(*sig.leaf_index);
        EXPECT_TRUE(crypto::verify(key.public_key, SchemeId::PqMss, bytes_of("m" + std::to_string(i)), sig));
    }
    EXPECT_EQ(leaves.size(), 4u);
    EXPECT_EQ(key.signatures_remaining(), 0u);
    try {
        crypto::sign(key, bytes_of("fifth"), mss_config(2));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::MssExhausted);
    }
}

TEST(Mss, AuthPathRebuildsRoot) {
    Bytes seed(32, 0x42);
    crypto::mss::Tree tree(seed, 3);
    for (std::uint32_t leaf = 0; leaf < 8; ++leaf) {
        auto node = tree.leaf(leaf);
        auto path = tree.auth_path(leaf);
        for (int level = 0; level < 3; ++level) {
            node = ((leaf >> level) & 1) ? crypto::mss::node_hash(path[level], node)
                                         : crypto::mss::node_hash(node, path[level]);
        }
        EXPECT_EQ(node, tree.root());
    }
}

TEST(Mss, SignatureLengthAndHeights) {
    for (int h = 1; h <= 16; ++h) EXPECT_EQ(crypto::mss::signature_bytes(h), 4u + 2144u + 32u * h);
    auto r = rng("mss-heights");
    for (int h : {0, 17}) {
        try {
            crypto::keygen(SchemeId::PqMss, r, mss_config(h));
            FAIL();
        } catch (const Error& e) {
            EXPECT_EQ(e.code(), ErrorCode::UnsupportedHeight);
        }
    }
}

TEST(Mss, LeafIndexOutsideTreeIsMalformed) {
    auto r = rng("mss-leaf");
    auto key = crypto::keygen(SchemeId::PqMss, r, mss_config(2));
    auto sig = crypto::sign(key, bytes_of("m"), mss_config(2));
    sig.payload[0] = 0xFF;
    EXPECT_THROW(crypto::mss::decode(sig.payload), Error);
}

class SchemeRoundTrip : public ::testing::TestWithParam<SchemeId> {};

TEST_P(SchemeRoundTrip, SignVerifyTamperAndSizes) {
    auto r = rng(std::string("roundtrip-") + std::string(crypto::to_string(GetParam())));
    auto config = mss_config(4);
    for (int trial = 0; trial < 8; ++trial) {
        auto key = crypto::keygen(GetParam(), r, config);
        auto msg = r.bytes(1 + trial * 7);
        auto sig = crypto::sign(key, msg, config);
        auto sizes = crypto::scheme_sizes(GetParam(), config);
        EXPECT_EQ(key.public_key.size(), sizes.public_key_bytes);
        EXPECT_EQ(key.private_key.size(), sizes.private_key_bytes);
        EXPECT_EQ(sig.payload.size(), sizes.signature_bytes);
        EXPECT_TRUE(crypto::verify(key.public_key, GetParam(), msg, sig, config));

        auto other = msg;
        other[r.uniform(other.size())] ^= 0x01;
        EXPECT_FALSE(crypto::verify(key.public_key, GetParam(), other, sig, config));

        auto decoded = crypto::Signature::decode(sig.encode());
        EXPECT_EQ(decoded, sig);
    }
}

INSTANTIATE_TEST_SUITE_P(AllSchemes, SchemeRoundTrip,
                         ::testing::Values(SchemeId::ClassicalSchnorr, SchemeId::PqWots, SchemeId::PqMss));

TEST(Signature, WrongSchemeIsInvalidNotFatal) {
    auto r = rng("wrong-scheme");
    auto key = crypto::keygen(SchemeId::ClassicalSchnorr, r);
    auto sig = crypto::sign(key, bytes_of("m"));
    EXPECT_FALSE(crypto::verify(key.public_key, SchemeId::PqWots, bytes_of("m"), sig));
}

TEST(Signature, DecodeRejectsUnknownScheme) {
    Bytes junk{0x09, 0x01, 0x02};
    EXPECT_THROW(crypto::Signature::decode(junk), Error);
}

TEST(Scheme, NamesRoundTrip) {
    for (auto id : {SchemeId::ClassicalSchnorr, SchemeId::PqWots, SchemeId::PqMss, SchemeId::HybridCm})
        EXPECT_EQ(crypto::parse_scheme(crypto::to_string(id)), id);
    EXPECT_THROW(crypto::parse_scheme("rsa"), Error);
    EXPECT_THROW(crypto::scheme_from_code(0), Error);
}

TEST(Scheme, RegistryCoversEveryScheme) {
    std::set<SchemeId> ids;
    for (const auto& info : crypto::scheme_registry()) {
        ids.insert(info.id);
        EXPECT_EQ(info.quantum_safe, crypto::is_post_quantum(info.id) || info.id == SchemeId::HybridCm);
    }
    EXPECT_EQ(ids.size(), 4u);
    EXPECT_FALSE(crypto::role_recommendations().empty());
}

TEST(KeyIo, RoundTripPreservesSigningState) {
    auto r = rng("key-io");
    auto key = crypto::keygen(SchemeId::PqMss, r, mss_config(3));
    crypto::sign(key, bytes_of("a"), mss_config(3));
    crypto::sign(key, bytes_of("b"), mss_config(3));
    auto loaded = crypto::key_from_json(crypto::key_to_json(key));
    EXPECT_EQ(loaded.public_key, key.public_key);
    EXPECT_EQ(loaded.ots_state, key.ots_state);
    auto sig = crypto::sign(loaded, bytes_of("c"), mss_config(3));
    EXPECT_EQ(sig.leaf_index, 2u);
    EXPECT_TRUE(crypto::verify(loaded.public_key, SchemeId::PqMss, bytes_of("c"), sig));
}

TEST(KeyIo, DuplicateForksHistory) {
    auto r = rng("dup");
    auto key = crypto::keygen(SchemeId::PqMss, r, mss_config(2));
    auto copy = key.duplicate();
    crypto::sign(key, bytes_of("x"), mss_config(2));
    EXPECT_EQ(copy.signatures_remaining(), 4u);
    EXPECT_EQ(key.signatures_remaining(), 3u);
}

// Hybrid truth table: every policy against every (classical, pq) validity pair.
TEST(Hybrid, PolicyTruthTable) {
    auto r = rng("hybrid-table");
    auto keys = crypto::hybrid_keygen(r);
    auto pub = keys.public_key();
    auto msg = bytes_of("transfer");
    auto other = bytes_of("something else");
    auto good_c = crypto::sign(keys.classical, msg);
    auto bad_c = crypto::sign(keys.classical, other);

    int checked = 0;
    for (bool c_ok : {false, true}) {
        for (bool p_ok : {false, true}) {
            auto pq_key = crypto::keygen(SchemeId::PqWots, r);
            pub.pq = pq_key.public_key;
            auto pq_sig = crypto::sign(pq_key, p_ok ? msg : other);
            auto sig = crypto::combine_hybrid(c_ok ? good_c : bad_c, pq_sig);
            auto check = crypto::hybrid_check(pub, msg, sig);
            EXPECT_EQ(check.classical_ok, c_ok);
            EXPECT_EQ(check.pq_ok, p_ok);
            EXPECT_EQ(crypto::hybrid_verify(pub, msg, sig, crypto::VerificationPolicy::ClassicalOnly), c_ok);
            EXPECT_EQ(crypto::hybrid_verify(pub, msg, sig, crypto::VerificationPolicy::PqOnly), p_ok);
            EXPECT_EQ(crypto::hybrid_verify(pub, msg, sig, crypto::VerificationPolicy::Both), c_ok && p_ok);
            EXPECT_EQ(crypto::hybrid_verify(pub, msg, sig, crypto::VerificationPolicy::Either), c_ok || p_ok);
            checked += 4;
        }
    }
    EXPECT_EQ(checked, 16);
}

TEST(Hybrid, CompositeRoundTripAndSplit) {
    auto r = rng("hybrid-rt");
    auto keys = crypto::hybrid_keygen(r);
    auto msg = bytes_of("m");
    auto sig = crypto::hybrid_sign(keys.classical, keys.pq, msg);
    EXPECT_EQ(sig.scheme, SchemeId::HybridCm);
    EXPECT_EQ(sig.payload.size(), crypto::scheme_sizes(SchemeId::HybridCm).signature_bytes);
    auto parts = crypto::split_hybrid(sig);
    EXPECT_EQ(crypto::combine_hybrid(parts.classical, parts.pq), sig);
    auto pub = keys.public_key();
    EXPECT_EQ(pub.encode().size(), crypto::scheme_sizes(SchemeId::HybridCm).public_key_bytes);
    EXPECT_TRUE(crypto::verify(pub.encode(), SchemeId::HybridCm, msg, sig));
    auto truncated = sig;
    truncated.payload.resize(10);
    EXPECT_THROW(crypto::split_hybrid(truncated), Error);
}

TEST(Hybrid, PolicyNamesRoundTrip) {
    for (auto p : crypto::kAllPolicies) EXPECT_EQ(crypto::parse_policy(crypto::to_string(p)), p);
    EXPECT_THROW(crypto::parse_policy("any"), Error);
}

}  // namespace
}  // namespace pqcbdc
