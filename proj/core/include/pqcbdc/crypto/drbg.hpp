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
#include <cstdint>
#include <span>
#include <string_view>

#include "pqcbdc/bytes.hpp"

namespace pqcbdc::crypto {

using Seed = std::array<std::uint8_t, 32>;

/// Hash-counter DRBG: block i = hash(seed || be64(i), "drbg").
///
/// Every request consumes whole blocks, so the stream position is fully
/// described by (seed, counter). Not a CSPRNG for production keys; it exists
/// so that simulations and test vectors are reproducible bit for bit.
class Drbg {
public:
    explicit Drbg(const Seed& seed, std::uint64_t counter = 0) : seed_(seed), counter_(counter) {}

    /// Seed = hash(label, "drbg"). Handy for tests and CLI `--seed 42`.
    static Drbg from_label(std::string_view label);

    Digest next_block();
    void fill(std::span<std::uint8_t> out);
    Bytes bytes(std::size_t n);

    template <std::size_t N>
    std::array<std::uint8_t, N> array() {
        std::array<std::uint8_t, N> out{};
        fill(out);
        return out;
    }

    std::uint64_t next_u64();
    // Uniform in [0, bound); bound must be > 0.
    std::uint64_t uniform(std::uint64_t bound);
    // Uniform in [lo, hi], inclusive.
    std::int64_t uniform_int(std::int64_t lo, std::int64_t hi);
    // Uniform in [0, 1) with 53 bits of precision.
    double unit();

    /// Independent child stream; consumes one block of this stream.
    Drbg fork(std::string_view label);

    const Seed& seed() const { return seed_; }
    std::uint64_t counter() const { return counter_; }

private:
    Seed seed_;
    std::uint64_t counter_;
};

}  // namespace pqcbdc::crypto
