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

#include "pqcbdc/crypto/drbg.hpp"

#include <algorithm>

#include "pqcbdc/crypto/hash.hpp"

namespace pqcbdc::crypto {

Drbg Drbg::from_label(std::string_view label) { return Drbg(hash(as_bytes(label), "drbg")); }

Digest Drbg::next_block() {
    std::array<std::uint8_t, 8> ctr{};
    for (int i = 0; i < 8; ++i) ctr[i] = static_cast<std::uint8_t>(counter_ >> (56 - 8 * i));
    ++counter_;
    return hash({seed_, ctr}, "drbg");
}

void Drbg::fill(std::span<std::uint8_t> out) {
    std::size_t pos = 0;
    while (pos < out.size()) {
        auto block = next_block();
        auto n = std::min(block.size(), out.size() - pos);
        std::copy_n(block.begin(), n, out.begin() + static_cast<std::ptrdiff_t>(pos));
        pos += n;
    }
}

Bytes Drbg::bytes(std::size_t n) {
    Bytes out(n);
    fill(out);
    return out;
}

std::uint64_t Drbg::next_u64() {
    auto block = next_block();
    std::uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v = (v << 8) | block[i];
    return v;
}

std::uint64_t Drbg::uniform(std::uint64_t bound) {
    // Rejection sampling keeps the distribution exactly uniform.
    const std::uint64_t limit = bound * (UINT64_MAX / bound);
    for (;;) {
        auto v = next_u64();
        if (v < limit) return v % bound;
    }
}

std::int64_t Drbg::uniform_int(std::int64_t lo, std::int64_t hi) {
    auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(uniform(span));
}

double Drbg::unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

Drbg Drbg::fork(std::string_view label) {
    auto block = next_block();
    return Drbg(hash({block, as_bytes(label)}, "drbg"));
}

}  // namespace pqcbdc::crypto
