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

#include "pqcbdc/crypto/mss.hpp"

#include <algorithm>

#include "pqcbdc/crypto/hash.hpp"
#include "pqcbdc/crypto/wots.hpp"
#include "pqcbdc/error.hpp"

namespace pqcbdc::crypto::mss {

namespace {

constexpr std::size_t kHeader = 4;

void check_height(int height) {
    if (height < kMinHeight || height > kMaxHeight) {
        throw Error(ErrorCode::UnsupportedHeight, "MSS height " + std::to_string(height) + " outside [1,16]");
    }
}

}  // namespace

std::size_t signature_bytes(int height) {
    check_height(height);
    return kHeader + wots::kSignatureBytes + 32 * static_cast<std::size_t>(height);
}

Bytes leaf_seed(ByteView seed, std::uint32_t leaf) {
    std::array<std::uint8_t, 4> idx{static_cast<std::uint8_t>(leaf >> 24), static_cast<std::uint8_t>(leaf >> 16),
                                    static_cast<std::uint8_t>(leaf >> 8), static_cast<std::uint8_t>(leaf)};
    auto d = hash({seed, idx}, "mseed");
    return {d.begin(), d.end()};
}

Digest leaf_hash(ByteView wots_public_key) { return hash(wots_public_key, "leaf"); }

Digest node_hash(const Digest& left, const Digest& right) { return hash({left, right}, "node"); }

Tree::Tree(ByteView seed, int height) : height_(height) {
    check_height(height);
    if (seed.size() != 32) throw Error(ErrorCode::MalformedEncoding, "MSS seed must be 32 bytes");
    std::vector<Digest> leaves(leaf_count());
    for (std::uint32_t i = 0; i < leaves.size(); ++i) {
        leaves[i] = leaf_hash(wots::public_key(leaf_seed(seed, i)));
    }
    levels_.push_back(std::move(leaves));
    while (levels_.back().size() > 1) {
        const auto& below = levels_.back();
        std::vector<Digest> above(below.size() / 2);
        for (std::size_t i = 0; i < above.size(); ++i) above[i] = node_hash(below[2 * i], below[2 * i + 1]);
        levels_.push_back(std::move(above));
    }
}

std::vector<Digest> Tree::auth_path(std::uint32_t leaf) const {
    std::vector<Digest> path;
    path.reserve(static_cast<std::size_t>(height_));
    for (int level = 0; level < height_; ++level) path.push_back(levels_[level].at((leaf >> level) ^ 1U));
    return path;
}

Bytes sign(const Tree& tree, ByteView seed, std::uint32_t leaf, ByteView msg) {
    Bytes out;
    out.reserve(signature_bytes(tree.height()));
    for (int shift = 24; shift >= 0; shift -= 8) out.push_back(static_cast<std::uint8_t>(leaf >> shift));
    auto ots = wots::sign(leaf_seed(seed, leaf), msg);
    out.insert(out.end(), ots.begin(), ots.end());
    for (const auto& node : tree.auth_path(leaf)) out.insert(out.end(), node.begin(), node.end());
    return out;
}

DecodedSignature decode(ByteView payload) {
    const auto fixed = kHeader + wots::kSignatureBytes;
    if (payload.size() < fixed + 32 || (payload.size() - fixed) % 32 != 0) {
        throw Error(ErrorCode::MalformedSignature, "MSS signature has invalid length");
    }
    const auto height = static_cast<int>((payload.size() - fixed) / 32);
    if (height > kMaxHeight) throw Error(ErrorCode::MalformedSignature, "MSS signature height exceeds 16");

    DecodedSignature out;
    out.height = height;
    out.leaf = (std::uint32_t{payload[0]} << 24) | (std::uint32_t{payload[1]} << 16) |
               (std::uint32_t{payload[2]} << 8) | payload[3];
    if (out.leaf >= (std::uint64_t{1} << height)) {
        throw Error(ErrorCode::MalformedSignature, "MSS leaf index outside tree");
    }
    out.wots_signature = payload.subspan(kHeader, wots::kSignatureBytes);
    for (std::size_t off = fixed; off < payload.size(); off += 32) {
        Digest node{};
        std::copy_n(payload.begin() + static_cast<std::ptrdiff_t>(off), 32, node.begin());
        out.auth_path.push_back(node);
    }
    return out;
}

bool verify(ByteView root, ByteView msg, ByteView payload) {
    const auto sig = decode(payload);
    Digest node = leaf_hash(wots::public_from_signature(msg, sig.wots_signature));
    for (int level = 0; level < sig.height; ++level) {
        const auto& sibling = sig.auth_path[static_cast<std::size_t>(level)];
        node = ((sig.leaf >> level) & 1U) ? node_hash(sibling, node) : node_hash(node, sibling);
    }
    return root.size() == node.size() && std::equal(node.begin(), node.end(), root.begin());
}

}  // namespace pqcbdc::crypto::mss
