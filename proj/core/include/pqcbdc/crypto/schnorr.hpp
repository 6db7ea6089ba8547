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

#include "pqcbdc/bytes.hpp"
#include "pqcbdc/crypto/drbg.hpp"
#include "pqcbdc/crypto/group.hpp"

// Deterministic Schnorr signatures in a prime-order subgroup of Z_p^*.
//
// private = x (q_bytes), public = y = g^x mod p (p_bytes),
// signature = e || s (q_bytes each) with k = H(x || m) mod q,
// r = g^k, e = H(r || y || m) mod q, s = k + x e mod q.
namespace pqcbdc::crypto::schnorr {

struct RawKeyPair {
    Bytes public_key;
    Bytes private_key;
};

RawKeyPair keygen(Drbg& rng, const GroupParams& group);
Bytes public_from_private(ByteView private_key, const GroupParams& group);
Bytes sign(ByteView private_key, ByteView msg, const GroupParams& group);

// Throws MALFORMED_SIGNATURE on a wrong-length signature.
bool verify(ByteView public_key, ByteView msg, ByteView signature, const GroupParams& group);

}  // namespace pqcbdc::crypto::schnorr
