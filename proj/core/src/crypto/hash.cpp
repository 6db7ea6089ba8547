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

#include "pqcbdc/crypto/hash.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <array>
#include <memory>

#include "pqcbdc/error.hpp"

namespace pqcbdc::crypto {

namespace {

constexpr std::array<std::string_view, 17> kTags{
    "addr", "chal", "cert", "drbg", "leaf", "link", "mint", "mseed", "node",
    "nonce", "rcpt", "skey", "tx", "wid", "wmsg", "wots", "wseed",
};

const EVP_MD* sha256() {
    static EVP_MD* md = EVP_MD_fetch(nullptr, "SHA256", nullptr);
    return md;
}

struct CtxDeleter {
    void operator()(EVP_MD_CTX* ctx) const { EVP_MD_CTX_free(ctx); }
};

EVP_MD_CTX* thread_ctx() {
    thread_local std::unique_ptr<EVP_MD_CTX, CtxDeleter> ctx{EVP_MD_CTX_new()};
    return ctx.get();
}

void check_tag(std::string_view tag) {
    if (!is_registered_tag(tag)) throw Error(ErrorCode::UnknownDomainTag, std::string(tag));
}

}  // namespace

bool is_registered_tag(std::string_view tag) {
    return std::find(kTags.begin(), kTags.end(), tag) != kTags.end();
}

std::span<const std::string_view> registered_tags() { return kTags; }

Digest hash(ByteView data, std::string_view domain_tag) { return hash({data}, domain_tag); }

Digest hash(std::initializer_list<ByteView> parts, std::string_view domain_tag) {
    check_tag(domain_tag);
    EVP_MD_CTX* ctx = thread_ctx();
    static constexpr std::uint8_t kSeparator = 0x00;
    EVP_DigestInit_ex2(ctx, sha256(), nullptr);
    EVP_DigestUpdate(ctx, domain_tag.data(), domain_tag.size());
    EVP_DigestUpdate(ctx, &kSeparator, 1);
    for (auto part : parts) {
        if (!part.empty()) EVP_DigestUpdate(ctx, part.data(), part.size());
    }
    Digest out{};
    unsigned int len = 0;
    EVP_DigestFinal_ex(ctx, out.data(), &len);
    return out;
}

}  // namespace pqcbdc::crypto
