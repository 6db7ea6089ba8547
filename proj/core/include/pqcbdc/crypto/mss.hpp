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
#include <vector>

#include "pqcbdc/bytes.hpp"

// Merkle signature scheme: 2^h WOTS leaves under one 32-byte root.
//
// Signature payload: be32(leaf) || WOTS signature || h authentication-path
// nodes, bottom up.
namespace pqcbdc::crypto::mss {

inline constexpr int kMinHeight = 1;
inline constexpr int kMaxHeight = 16;

std::size_t signature_bytes(int height);

// WOTS seed of leaf i, derived from the 32-byte MSS private seed.
Bytes leaf_seed(ByteView seed, std::uint32_t leaf);
Digest leaf_hash(ByteView wots_public_key);
Digest node_hash(const Digest& left, const Digest& right);

/// Full tree kept in memory for signing; immutable once built.
class Tree {
public:
    // Throws UNSUPPORTED_HEIGHT outside [kMinHeight, kMaxHeight].
    Tree(ByteView seed, int height);

    int height() const { return height_; }
    std::uint64_t leaf_count() const { return std::uint64_t{1} << height_; }
    const Digest& root() const { return levels_.back().front(); }
    const Digest& leaf(std::uint32_t index) const { return levels_.front().at(index); }
    std::vector<Digest> auth_path(std::uint32_t leaf) const;

private:
    int height_;
    std::vector<std::vector<Digest>> levels_;
};

Bytes sign(const Tree& tree, ByteView seed, std::uint32_t leaf, ByteView msg);

struct DecodedSignature {
    std::uint32_t leaf;
    int height;
    ByteView wots_signature;
    std::vector<Digest> auth_path;
};

// Throws MALFORMED_SIGNATURE if the length does not match any height in
// range or the leaf index is outside the tree.
DecodedSignature decode(ByteView payload);

bool verify(ByteView root, ByteView msg, ByteView payload);

}  // namespace pqcbdc::crypto::mss
