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

#include "pqcbdc/crypto/key_io.hpp"

#include "json_util.hpp"

namespace pqcbdc {

namespace detail {

json key_to_value(const crypto::KeyPair& key) {
    json v;
    v["scheme"] = std::string(crypto::to_string(key.scheme));
    v["public"] = to_hex(key.public_key);
    v["private"] = to_hex(key.private_key);
    if (key.ots_state) {
        v["height"] = key.ots_state->height;
        v["next_leaf"] = key.ots_state->next_leaf;
        v["used_leaves"] = key.ots_state->used_leaves;
    }
    return v;
}

crypto::KeyPair key_from_value(const json& v) {
    crypto::KeyPair key;
    try {
        key.scheme = crypto::parse_scheme(require(v, "scheme").get<std::string>());
        key.public_key = hex_field(v, "public");
        key.private_key = hex_field(v, "private");
        if (v.contains("height")) {
            crypto::MerkleKeyState state;
            state.height = v.at("height").get<int>();
            state.next_leaf = v.at("next_leaf").get<std::uint32_t>();
            state.used_leaves = v.at("used_leaves").get<std::vector<std::uint32_t>>();
            key.ots_state = std::move(state);
        }
    } catch (const json::exception& e) {
        throw Error(ErrorCode::MalformedEncoding, e.what());
    }
    if ((key.scheme == crypto::SchemeId::PqWots || key.scheme == crypto::SchemeId::PqMss) && !key.ots_state) {
        throw Error(ErrorCode::MalformedEncoding, "stateful key without signing state");
    }
    crypto::restore_tree(key);
    return key;
}

}  // namespace detail

namespace crypto {

std::string key_to_json(const KeyPair& key) { return detail::key_to_value(key).dump(2); }

KeyPair key_from_json(std::string_view text) {
    detail::json v;
    try {
        v = detail::json::parse(text);
    } catch (const detail::json::exception& e) {
        throw Error(ErrorCode::MalformedEncoding, e.what());
    }
    return detail::key_from_value(v);
}

}  // namespace crypto
}  // namespace pqcbdc
