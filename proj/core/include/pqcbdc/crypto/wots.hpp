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

#pragma once

#include <array>
#include <cstddef>
#include <cstdint>

#include "pqcbdc/bytes.hpp"

// Winternitz one-time signatures over SHA-256 (n = 32, w = 16).
namespace pqcbdc::crypto::wots {

constexpr std::size_t ilog2(std::size_t v) {
    std::size_t r = 0;
    while (v > 1) {
        v >>= 1;
        ++r;
    }
    return r;
}

struct Params {
    std::size_t n;
    std::size_t w;

    constexpr std::size_t log_w() const { return ilog2(w); }
    constexpr std::size_t len1() const { return (8 * n + log_w() - 1) / log_w(); }
    constexpr std::size_t len2() const { return ilog2(len1() * (w - 1)) / log_w() + 1; }
    constexpr std::size_t len() const { return len1() + len2(); }
};

inline constexpr Params kParams{32, 16};
inline constexpr std::size_t kLen = kParams.len();
inline constexpr std::size_t kPrivateBytes = 32;
inline constexpr std::size_t kPublicBytes = kLen * kParams.n;
inline constexpr std::size_t kSignatureBytes = kLen * kParams.n;

static_assert(kParams.len1() == 64 && kParams.len2() == 3 && kLen == 67);

/// Base-w digits of hash(msg, "wmsg") followed by the len2 checksum digits.
std::array<std::uint8_t, kLen> message_digits(ByteView msg);

Bytes public_key(ByteView seed);
Bytes sign(ByteView seed, ByteView msg);

/// Completes every chain from the signature; equals the public key iff valid.
/// Throws MALFORMED_SIGNATURE on a wrong-length signature.
Bytes public_from_signature(ByteView msg, ByteView signature);

bool verify(ByteView public_key, ByteView msg, ByteView signature);

}  // namespace pqcbdc::crypto::wots
