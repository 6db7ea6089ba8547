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

#include "pqcbdc/pki/certificate.hpp"

#include <string>

#include "pqcbdc/crypto/hash.hpp"
#include "pqcbdc/error.hpp"

namespace pqcbdc::pki {

std::string_view to_string(Role role) {
    switch (role) {
        case Role::RootCa: return "root-ca";
        case Role::SubCa: return "sub-ca";
        case Role::Wallet: return "wallet";
        case Role::Register: return "register";
    }
    return "unknown";
}

Role parse_role(std::string_view name) {
    for (auto r : {Role::RootCa, Role::SubCa, Role::Wallet, Role::Register}) {
        if (to_string(r) == name) return r;
    }
    throw Error(ErrorCode::MalformedEncoding, "unknown role '" + std::string(name) + "'");
}

namespace {

Role role_from_code(std::uint8_t code) {
    if (code < 1 || code > 4) throw Error(ErrorCode::MalformedEncoding, "unknown role code");
    return static_cast<Role>(code);
}

void write_sig(ByteWriter& w, const std::optional<crypto::Signature>& sig) {
    if (!sig) {
        w.u8(0);
        return;
    }
    w.u8(1).var(sig->encode());
}

std::optional<crypto::Signature> read_sig(ByteReader& r) {
    auto flag = r.u8();
    if (flag == 0) return std::nullopt;
    if (flag != 1) throw Error(ErrorCode::MalformedEncoding, "bad presence flag");
    return crypto::Signature::decode(r.var());
}

std::uint8_t read_flag(ByteReader& r) {
    auto flag = r.u8();
    if (flag > 1) throw Error(ErrorCode::MalformedEncoding, "bad presence flag");
    return flag;
}

}  // namespace

Bytes Certificate::tbs() const {
    ByteWriter w;
    w.raw(serial).str(subject).u8(static_cast<std::uint8_t>(role));
    w.u8(classical_pub ? 1 : 0);
    if (classical_pub) w.var(*classical_pub);
    w.u8(pq ? 1 : 0);
    if (pq) w.u8(static_cast<std::uint8_t>(pq->scheme)).var(pq->public_key);
    w.u8(linked_serial ? 1 : 0);
    if (linked_serial) w.raw(*linked_serial);
    w.i64(validity.not_before).i64(validity.not_after).raw(issuer_serial);
    return w.take();
}

Digest Certificate::tbs_digest() const { return crypto::hash(tbs(), "cert"); }

Bytes Certificate::encode() const {
    ByteWriter w;
    w.raw(tbs());
    write_sig(w, issuer_sig_classical);
    write_sig(w, issuer_sig_pq);
    return w.take();
}

Certificate Certificate::decode(ByteView data) {
    ByteReader r(data);
    Certificate c;
    c.serial = r.fixed<16>();
    c.subject = r.str();
    c.role = role_from_code(r.u8());
    if (read_flag(r)) c.classical_pub = r.var();
    if (read_flag(r)) {
        PqExtension ext;
        ext.scheme = crypto::scheme_from_code(r.u8());
        ext.public_key = r.var();
        c.pq = std::move(ext);
    }
    if (read_flag(r)) c.linked_serial = r.fixed<16>();
    c.validity.not_before = r.i64();
    c.validity.not_after = r.i64();
    c.issuer_serial = r.fixed<16>();
    c.issuer_sig_classical = read_sig(r);
    c.issuer_sig_pq = read_sig(r);
    r.expect_done();
    return c;
}

}  // namespace pqcbdc::pki
