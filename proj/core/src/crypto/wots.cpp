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

#include "pqcbdc/crypto/wots.hpp"

#include <algorithm>

#include "pqcbdc/crypto/hash.hpp"
#include "pqcbdc/error.hpp"

namespace pqcbdc::crypto::wots {

namespace {

constexpr std::size_t kN = kParams.n;
constexpr std::uint8_t kTop = static_cast<std::uint8_t>(kParams.w - 1);

Digest secret_element(ByteView seed, std::size_t chain) {
    std::array<std::uint8_t, 2> idx{static_cast<std::uint8_t>(chain >> 8), static_cast<std::uint8_t>(chain)};
    return hash({seed, idx}, "wseed");
}

// Applies steps [start, start + steps) of chain `chain` to x.
Digest chain_walk(Digest x, std::size_t chain, unsigned start, unsigned steps) {
    std::array<std::uint8_t, 3> tweak{static_cast<std::uint8_t>(chain >> 8), static_cast<std::uint8_t>(chain), 0};
    for (unsigned j = start; j < start + steps; ++j) {
        tweak[2] = static_cast<std::uint8_t>(j);
        x = hash({tweak, x}, "wots");
    }
    return x;
}

void check_seed(ByteView seed) {
    if (seed.size() != kPrivateBytes) throw Error(ErrorCode::MalformedEncoding, "WOTS seed must be 32 bytes");
}

}  // namespace

std::array<std::uint8_t, kLen> message_digits(ByteView msg) {
    static_assert(kParams.log_w() == 4, "digit extraction assumes w = 16");
    const Digest m = hash(msg, "wmsg");
    std::array<std::uint8_t, kLen> digits{};
    std::size_t k = 0;
    for (auto byte : m) {
        digits[k++] = byte >> 4;
        digits[k++] = byte & 0x0f;
    }
    unsigned checksum = 0;
    for (std::size_t i = 0; i < kParams.len1(); ++i) checksum += kTop - digits[i];
    for (std::size_t i = 0; i < kParams.len2(); ++i) {
        auto shift = 4 * (kParams.len2() - 1 - i);
        digits[kParams.len1() + i] = static_cast<std::uint8_t>((checksum >> shift) & 0x0f);
    }
    return digits;
}

Bytes public_key(ByteView seed) {
    check_seed(seed);
    Bytes out;
    out.reserve(kPublicBytes);
    for (std::size_t i = 0; i < kLen; ++i) {
        auto end = chain_walk(secret_element(seed, i), i, 0, kTop);
        out.insert(out.end(), end.begin(), end.end());
    }
    return out;
}

Bytes sign(ByteView seed, ByteView msg) {
    check_seed(seed);
    const auto digits = message_digits(msg);
    Bytes out;
    out.reserve(kSignatureBytes);
    for (std::size_t i = 0; i < kLen; ++i) {
        auto node = chain_walk(secret_element(seed, i), i, 0, digits[i]);
        out.insert(out.end(), node.begin(), node.end());
    }
    return out;
}

Bytes public_from_signature(ByteView msg, ByteView signature) {
    if (signature.size() != kSignatureBytes) {
        throw Error(ErrorCode::MalformedSignature, "WOTS signature must be " + std::to_string(kSignatureBytes) + " bytes");
    }
    const auto digits = message_digits(msg);
    Bytes out;
    out.reserve(kPublicBytes);
    for (std::size_t i = 0; i < kLen; ++i) {
        Digest node{};
        std::copy_n(signature.begin() + static_cast<std::ptrdiff_t>(i * kN), kN, node.begin());
        auto end = chain_walk(node, i, digits[i], kTop - digits[i]);
        out.insert(out.end(), end.begin(), end.end());
    }
    return out;
}

bool verify(ByteView public_key, ByteView msg, ByteView signature) {
    auto candidate = public_from_signature(msg, signature);
    if (public_key.size() != kPublicBytes) return false;
    return std::equal(candidate.begin(), candidate.end(), public_key.begin());
}

}  // namespace pqcbdc::crypto::wots
