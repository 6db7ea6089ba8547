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

#include "pqcbdc/ledger/token.hpp"

#include <cstdlib>
#include <limits>

#include "pqcbdc/crypto/hash.hpp"
#include "pqcbdc/error.hpp"

namespace pqcbdc::ledger {

using crypto::SchemeId;

Address address_of(ByteView public_key) { return crypto::hash(public_key, "addr"); }

bool scheme_fits_version(SchemeId scheme, Version version) {
    switch (version) {
        case kClassicalVersion: return scheme == SchemeId::ClassicalSchnorr;
        case kPqVersion: return crypto::is_post_quantum(scheme);
        default: return false;
    }
}

Digest Token::body_digest() const {
    ByteWriter w;
    w.raw(id).u8(static_cast<std::uint8_t>(version)).i64(value).raw(owner);
    return crypto::hash(w.bytes(), "mint");
}

Digest TransferRequest::digest() const {
    ByteWriter w;
    w.u16(static_cast<std::uint16_t>(inputs.size()));
    for (const auto& in : inputs) w.raw(in.token_id);
    w.u16(static_cast<std::uint16_t>(outputs.size()));
    for (const auto& out : outputs) w.i64(out.value).raw(out.owner).u8(static_cast<std::uint8_t>(out.version));
    return crypto::hash(w.bytes(), "tx");
}

Value TransferRequest::output_value() const {
    Value total = 0;
    for (const auto& out : outputs) {
        if (out.value < 0 || total > std::numeric_limits<Value>::max() - out.value) {
            throw Error(ErrorCode::InvalidValue, "output value out of range");
        }
        total += out.value;
    }
    return total;
}

Bytes TransferRequest::encode() const {
    ByteWriter w;
    w.u16(static_cast<std::uint16_t>(inputs.size()));
    for (const auto& in : inputs) w.raw(in.token_id).var(in.owner_public_key).var(in.signature.encode());
    w.u16(static_cast<std::uint16_t>(outputs.size()));
    for (const auto& out : outputs) w.i64(out.value).raw(out.owner).u8(static_cast<std::uint8_t>(out.version));
    return w.take();
}

TransferRequest TransferRequest::decode(ByteView data) {
    ByteReader r(data);
    TransferRequest req;
    auto n_in = r.u16();
    for (std::uint16_t i = 0; i < n_in; ++i) {
        TransferInput in;
        in.token_id = r.fixed<16>();
        in.owner_public_key = r.var();
        in.signature = crypto::Signature::decode(r.var());
        req.inputs.push_back(std::move(in));
    }
    auto n_out = r.u16();
    for (std::uint16_t i = 0; i < n_out; ++i) {
        TransferOutput out;
        out.value = r.i64();
        out.owner = r.fixed<32>();
        out.version = r.u8();
        req.outputs.push_back(out);
    }
    r.expect_done();
    return req;
}

Digest Receipt::signed_digest() const {
    ByteWriter w;
    w.raw(transfer_digest).u16(static_cast<std::uint16_t>(new_token_ids.size()));
    for (const auto& id : new_token_ids) w.raw(id);
    w.i64(tick);
    return crypto::hash(w.bytes(), "rcpt");
}

Bytes Receipt::encode() const {
    ByteWriter w;
    w.raw(transfer_digest).u16(static_cast<std::uint16_t>(new_token_ids.size()));
    for (const auto& id : new_token_ids) w.raw(id);
    w.i64(tick).var(register_sig.encode());
    return w.take();
}

Receipt Receipt::decode(ByteView data) {
    ByteReader r(data);
    Receipt rc;
    rc.transfer_digest = r.fixed<32>();
    auto n = r.u16();
    for (std::uint16_t i = 0; i < n; ++i) rc.new_token_ids.push_back(r.fixed<16>());
    rc.tick = r.i64();
    rc.register_sig = crypto::Signature::decode(r.var());
    r.expect_done();
    return rc;
}

namespace {

bool verify_register_sig(const crypto::Signature& sig, const Digest& msg, ByteView pub,
                         const crypto::SchemeConfig& config) {
    try {
        return crypto::verify(pub, SchemeId::PqMss, msg, sig, config);
    } catch (const Error&) {
        return false;
    }
}

}  // namespace

bool verify_token(const Token& token, ByteView register_public_key, const crypto::SchemeConfig& config) {
    return verify_register_sig(token.mint_sig, token.body_digest(), register_public_key, config);
}

bool verify_receipt(const Receipt& receipt, ByteView register_public_key, const crypto::SchemeConfig& config) {
    return verify_register_sig(receipt.register_sig, receipt.signed_digest(), register_public_key, config);
}

std::string format_value(Value value, int scale) {
    std::string sign = value < 0 ? "-" : "";
    auto mag = static_cast<std::uint64_t>(value < 0 ? -(value + 1) : value) + (value < 0 ? 1 : 0);
    auto digits = std::to_string(mag);
    if (scale <= 0) return sign + digits;
    auto width = static_cast<std::size_t>(scale);
    if (digits.size() <= width) digits.insert(0, width + 1 - digits.size(), '0');
    digits.insert(digits.size() - width, 1, '.');
    return sign + digits;
}

Value rescale(Value value, int from_scale, int to_scale) {
    if (to_scale < from_scale) throw Error(ErrorCode::InvalidValue, "rescaling to a coarser resolution loses value");
    Value out = value;
    for (int i = from_scale; i < to_scale; ++i) {
        if (std::llabs(out) > std::numeric_limits<Value>::max() / 10) {
            throw Error(ErrorCode::InvalidValue, "rescaled value overflows");
        }
        out *= 10;
    }
    return out;
}

}  // namespace pqcbdc::ledger
