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

#include "pqcbdc/crypto/schnorr.hpp"

#include "pqcbdc/crypto/hash.hpp"
#include "pqcbdc/error.hpp"

namespace pqcbdc::crypto::schnorr {

namespace {

mpz_class powm(const mpz_class& base, const mpz_class& exp, const mpz_class& mod) {
    mpz_class out;
    mpz_powm(out.get_mpz_t(), base.get_mpz_t(), exp.get_mpz_t(), mod.get_mpz_t());
    return out;
}

mpz_class digest_mod(const Digest& d, const mpz_class& q) {
    mpz_class v = mpz_from_bytes(d);
    return v % q;
}

mpz_class challenge(const mpz_class& r, ByteView public_key, ByteView msg, const GroupParams& group) {
    auto r_bytes = mpz_to_bytes(r, group.p_bytes());
    return digest_mod(hash({r_bytes, public_key, msg}, "chal"), group.q);
}

}  // namespace

RawKeyPair keygen(Drbg& rng, const GroupParams& group) {
    // Extra 8 bytes make the modular bias negligible.
    auto raw = rng.bytes(group.q_bytes() + 8);
    mpz_class x = mpz_from_bytes(raw) % (group.q - 1) + 1;
    RawKeyPair out;
    out.private_key = mpz_to_bytes(x, group.q_bytes());
    out.public_key = public_from_private(out.private_key, group);
    return out;
}

Bytes public_from_private(ByteView private_key, const GroupParams& group) {
    mpz_class x = mpz_from_bytes(private_key);
    return mpz_to_bytes(powm(group.g, x, group.p), group.p_bytes());
}

Bytes sign(ByteView private_key, ByteView msg, const GroupParams& group) {
    const mpz_class x = mpz_from_bytes(private_key);
    const mpz_class k = digest_mod(hash({private_key, msg}, "nonce"), group.q - 1) + 1;
    const Bytes y = public_from_private(private_key, group);
    const mpz_class r = powm(group.g, k, group.p);
    const mpz_class e = challenge(r, y, msg, group);
    const mpz_class s = (k + x * e) % group.q;

    Bytes out = mpz_to_bytes(e, group.q_bytes());
    auto s_bytes = mpz_to_bytes(s, group.q_bytes());
    out.insert(out.end(), s_bytes.begin(), s_bytes.end());
    return out;
}

bool verify(ByteView public_key, ByteView msg, ByteView signature, const GroupParams& group) {
    const auto qb = group.q_bytes();
    if (signature.size() != 2 * qb) {
        throw Error(ErrorCode::MalformedSignature, "schnorr signature must be " + std::to_string(2 * qb) + " bytes");
    }
    if (public_key.size() != group.p_bytes()) return false;

    const mpz_class y = mpz_from_bytes(public_key);
    if (y <= 1 || y >= group.p) return false;
    const mpz_class e = mpz_from_bytes(signature.first(qb));
    const mpz_class s = mpz_from_bytes(signature.subspan(qb));
    if (e >= group.q || s >= group.q) return false;

    // r = g^s * y^(q-e) = g^(s - x e) = g^k
    mpz_class r = powm(group.g, s, group.p) * powm(y, group.q - e, group.p) % group.p;
    return challenge(r, public_key, msg, group) == e;
}

}  // namespace pqcbdc::crypto::schnorr
