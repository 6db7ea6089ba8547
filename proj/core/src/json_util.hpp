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

// Internal JSON helpers shared by the snapshot/config readers.

#include <json.hpp>

#include <string>

#include "pqcbdc/bytes.hpp"
#include "pqcbdc/crypto/signature.hpp"
#include "pqcbdc/error.hpp"
#include "pqcbdc/ledger/token.hpp"

namespace pqcbdc::detail {

using nlohmann::json;

inline const json& require(const json& obj, const char* field) {
    if (!obj.is_object() || !obj.contains(field)) {
        throw Error(ErrorCode::MalformedEncoding, std::string("missing field '") + field + "'");
    }
    return obj.at(field);
}

inline Bytes hex_field(const json& obj, const char* field) {
    const auto& v = require(obj, field);
    if (!v.is_string()) throw Error(ErrorCode::MalformedEncoding, std::string("field '") + field + "' must be hex");
    return from_hex(v.get<std::string>());
}

template <std::size_t N>
std::array<std::uint8_t, N> fixed_field(const json& obj, const char* field) {
    const auto& v = require(obj, field);
    if (!v.is_string()) throw Error(ErrorCode::MalformedEncoding, std::string("field '") + field + "' must be hex");
    return fixed_from_hex<N>(v.get<std::string>());
}

json key_to_value(const crypto::KeyPair& key);
crypto::KeyPair key_from_value(const json& v);

json token_to_value(const ledger::Token& t);
ledger::Token token_from_value(const json& v);

}  // namespace pqcbdc::detail
