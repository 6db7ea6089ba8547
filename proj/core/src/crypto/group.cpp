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

#include "pqcbdc/crypto/group.hpp"

#include <string>

#include "pqcbdc/error.hpp"

namespace pqcbdc::crypto {

std::size_t GroupParams::p_bytes() const { return (mpz_sizeinbase(p.get_mpz_t(), 2) + 7) / 8; }

std::size_t GroupParams::q_bytes() const { return (mpz_sizeinbase(q.get_mpz_t(), 2) + 7) / 8; }

void GroupParams::validate() const {
    auto fail = [](const char* why) { throw Error(ErrorCode::InvalidGroup, why); };
    if (p < 3 || q < 2) fail("parameters too small");
    if (mpz_probab_prime_p(p.get_mpz_t(), 40) == 0) fail("p is not prime");
    if (mpz_probab_prime_p(q.get_mpz_t(), 40) == 0) fail("q is not prime");
    mpz_class pm1 = p - 1;
    if (!mpz_divisible_p(pm1.get_mpz_t(), q.get_mpz_t())) fail("q does not divide p-1");
    if (g <= 1 || g >= p) fail("g out of range");
    mpz_class t;
    mpz_powm(t.get_mpz_t(), g.get_mpz_t(), q.get_mpz_t(), p.get_mpz_t());
    if (t != 1) fail("g does not have order q");
}

GroupParams GroupParams::from_hex(std::string_view p, std::string_view q, std::string_view g) {
    auto parse = [](std::string_view s) {
        if (s.starts_with("0x") || s.starts_with("0X")) s.remove_prefix(2);
        mpz_class v;
        if (s.empty() || v.set_str(std::string(s), 16) != 0) {
            throw Error(ErrorCode::InvalidGroup, "bad hex integer");
        }
        return v;
    };
    return GroupParams{parse(p), parse(q), parse(g)};
}

const GroupParams& default_group() {
    static const GroupParams group = GroupParams::from_hex(
        "f0c7b9b7e488299a881d0ab0774ac55a2b2fe67944a20f3c8140c1abea5c06eb"
        "7012d45e41193cb153406f90da0389aa86d3e887d080a7aeca1405c89cc096eb",
        "dcd55062725faa53e03d1e5054102e8d3d96a11f",
        "6b5b156d1f35fb8b12ff5621a5a97a0370c1d6118483827579d942410dcb750d"
        "c7d4f04b7822f298a937f7c9260254d10a2fe35a89e12b813d173d2f75f2bcc2");
    return group;
}

Bytes mpz_to_bytes(const mpz_class& v, std::size_t len) {
    Bytes out(len, 0);
    std::size_t count = 0;
    auto needed = (mpz_sizeinbase(v.get_mpz_t(), 2) + 7) / 8;
    if (v == 0) return out;
    if (needed > len) throw Error(ErrorCode::MalformedEncoding, "integer too large for field");
    mpz_export(out.data() + (len - needed), &count, 1, 1, 1, 0, v.get_mpz_t());
    return out;
}

mpz_class mpz_from_bytes(ByteView data) {
    mpz_class v;
    if (!data.empty()) mpz_import(v.get_mpz_t(), data.size(), 1, 1, 1, 0, data.data());
    return v;
}

}  // namespace pqcbdc::crypto
