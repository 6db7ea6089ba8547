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

#include <gmpxx.h>

#include <string_view>

#include "pqcbdc/bytes.hpp"

namespace pqcbdc::crypto {

/// Prime-order subgroup of Z_p^* used by the classical Schnorr scheme.
struct GroupParams {
    mpz_class p;
    mpz_class q;
    mpz_class g;

    std::size_t p_bytes() const;
    std::size_t q_bytes() const;

    /// Throws INVALID_GROUP unless p, q are probable primes, q | p-1,
    /// g != 1 and g^q = 1 mod p.
    void validate() const;

    static GroupParams from_hex(std::string_view p, std::string_view q, std::string_view g);
};

/// Baked-in 512-bit p / 160-bit q group. Deliberately far too small for real
/// use; it keeps simulations fast.
const GroupParams& default_group();

Bytes mpz_to_bytes(const mpz_class& v, std::size_t len);
mpz_class mpz_from_bytes(ByteView data);

}  // namespace pqcbdc::crypto
