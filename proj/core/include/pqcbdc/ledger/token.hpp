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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pqcbdc/bytes.hpp"
#include "pqcbdc/crypto/signature.hpp"

namespace pqcbdc::ledger {

using TokenId = Id16;
using Address = Digest;
using Tick = std::int64_t;
using Value = std::int64_t;  // integer cents at the register's value_scale
using Version = int;

inline constexpr Version kClassicalVersion = 1;
inline constexpr Version kPqVersion = 2;

// hash(public_key, "addr"). Tokens only ever carry this, never the key.
Address address_of(ByteView public_key);

// Version 1 tokens are spent with classical keys, version 2 with PQ keys.
bool scheme_fits_version(crypto::SchemeId scheme, Version version);

struct Token {
    TokenId id{};
    Version version = kClassicalVersion;
    Value value = 0;
    Address owner{};
    crypto::Signature mint_sig;

    // What the register signs when the token comes into existence.
    Digest body_digest() const;

    friend bool operator==(const Token&, const Token&) = default;
};

struct TransferInput {
    TokenId token_id{};
    Bytes owner_public_key;
    crypto::Signature signature;  // over TransferRequest::digest()
};

struct TransferOutput {
    Value value = 0;
    Address owner{};
    Version version = kClassicalVersion;

    friend bool operator==(const TransferOutput&, const TransferOutput&) = default;
};

struct TransferRequest {
    std::vector<TransferInput> inputs;
    std::vector<TransferOutput> outputs;

    // Canonical content every input signs: input ids and outputs, not keys.
    Digest digest() const;
    Value output_value() const;

    Bytes encode() const;
    static TransferRequest decode(ByteView data);
};

struct Receipt {
    Digest transfer_digest{};
    std::vector<TokenId> new_token_ids;
    Tick tick = 0;
    crypto::Signature register_sig;

    Digest signed_digest() const;

    Bytes encode() const;
    static Receipt decode(ByteView data);

    friend bool operator==(const Receipt&, const Receipt&) = default;
};

bool verify_token(const Token& token, ByteView register_public_key, const crypto::SchemeConfig& config = {});
bool verify_receipt(const Receipt& receipt, ByteView register_public_key, const crypto::SchemeConfig& config = {});

// Decimal rendering at the given scale: format_value(1234, 2) == "12.34".
std::string format_value(Value value, int scale);
// Moves an amount to a finer resolution, e.g. scale 2 -> 4 multiplies by 100.
Value rescale(Value value, int from_scale, int to_scale);

}  // namespace pqcbdc::ledger
