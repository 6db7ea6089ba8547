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

#include "pqcbdc/pki/pki.hpp"

#include <algorithm>

#include "pqcbdc/crypto/hash.hpp"
#include "pqcbdc/crypto/schnorr.hpp"
#include "pqcbdc/error.hpp"

namespace pqcbdc::pki {

using crypto::KeyPair;
using crypto::SchemeConfig;
using crypto::SchemeId;
using crypto::Signature;

std::string_view to_string(Failure f) {
    switch (f) {
        case Failure::Expired: return "EXPIRED";
        case Failure::BadSignature: return "BAD_SIGNATURE";
        case Failure::BrokenChain: return "BROKEN_CHAIN";
        case Failure::PolicyUnsatisfied: return "POLICY_UNSATISFIED";
        case Failure::WrongRole: return "WRONG_ROLE";
        case Failure::LinkProofInvalid: return "LINK_PROOF_INVALID";
    }
    return "UNKNOWN";
}

namespace {

void check_validity_order(const Validity& v) {
    if (v.not_before > v.not_after) throw Error(ErrorCode::InvalidValue, "not_before after not_after");
}

Signature classical_sign(const KeyPair& key, ByteView msg, const SchemeConfig& config) {
    if (key.scheme != SchemeId::ClassicalSchnorr) throw Error(ErrorCode::KeyMismatch, "classical key expected");
    return Signature{SchemeId::ClassicalSchnorr, crypto::schnorr::sign(key.private_key, msg, config.group_params()),
                     std::nullopt};
}

// Signs `cert` in place. PQ first so an exhausted key leaves nothing half-done.
void sign_certificate(Certificate& cert, IssuerKeys keys, bool with_classical, bool with_pq,
                      const SchemeConfig& config) {
    const auto digest = cert.tbs_digest();
    if (with_pq) cert.issuer_sig_pq = crypto::sign(*keys.pq, digest, config);
    if (with_classical) cert.issuer_sig_classical = classical_sign(*keys.classical, digest, config);
}

enum class SigState { Absent, Valid, Invalid };

SigState check_one(const std::optional<Signature>& sig, ByteView public_key, SchemeId scheme, const Digest& msg,
                   const SchemeConfig& config) {
    if (!sig) return SigState::Absent;
    try {
        return crypto::verify(public_key, scheme, msg, *sig, config) ? SigState::Valid : SigState::Invalid;
    } catch (const Error&) {
        return SigState::Invalid;
    }
}

std::optional<Failure> check_issuer_signatures(const Certificate& cert, const Certificate& issuer,
                                               VerificationPolicy policy, const SchemeConfig& config) {
    const auto digest = cert.tbs_digest();
    auto c = SigState::Absent;
    auto p = SigState::Absent;
    // Families the policy does not ask for are never looked at.
    if (crypto::policy_needs_classical(policy) && issuer.classical_pub) {
        c = check_one(cert.issuer_sig_classical, *issuer.classical_pub, SchemeId::ClassicalSchnorr, digest, config);
    }
    if (crypto::policy_needs_pq(policy) && issuer.pq) {
        p = check_one(cert.issuer_sig_pq, issuer.pq->public_key, issuer.pq->scheme, digest, config);
    }
    if (crypto::policy_accepts(policy, c == SigState::Valid, p == SigState::Valid)) return std::nullopt;
    if (c == SigState::Invalid || p == SigState::Invalid) return Failure::BadSignature;
    return Failure::PolicyUnsatisfied;
}

}  // namespace

Certificate issue_root(std::string subject, IssuerKeys keys, Validity validity, crypto::Drbg& rng,
                       const SchemeConfig& config) {
    if (!keys.classical && !keys.pq) throw Error(ErrorCode::NoKeys);
    check_validity_order(validity);
    Certificate cert;
    cert.serial = rng.array<16>();
    cert.subject = std::move(subject);
    cert.role = Role::RootCa;
    if (keys.classical) cert.classical_pub = keys.classical->public_key;
    if (keys.pq) cert.pq = PqExtension{keys.pq->scheme, keys.pq->public_key};
    cert.validity = validity;
    cert.issuer_serial = cert.serial;
    sign_certificate(cert, keys, keys.classical != nullptr, keys.pq != nullptr, config);
    return cert;
}

Certificate issue(const Certificate& issuer, IssuerKeys keys, std::string subject, const SubjectKeys& subject_keys,
                  Role role, Validity validity, crypto::Drbg& rng, const SchemeConfig& config,
                  std::optional<Serial> linked_serial) {
    if (!is_ca(issuer.role)) throw Error(ErrorCode::WrongRole, "issuer is not a CA");
    if (role == Role::RootCa) throw Error(ErrorCode::WrongRole, "root certificates are self-issued");
    check_validity_order(validity);
    if (!validity.within(issuer.validity)) throw Error(ErrorCode::ValidityExceedsIssuer);
    if (!subject_keys.classical && !subject_keys.pq) throw Error(ErrorCode::NoKeys);
    if (issuer.classical_pub && (!keys.classical || keys.classical->public_key != *issuer.classical_pub)) {
        throw Error(ErrorCode::KeyMismatch, "classical issuer key does not match issuer certificate");
    }
    if (issuer.pq && (!keys.pq || keys.pq->public_key != issuer.pq->public_key)) {
        throw Error(ErrorCode::KeyMismatch, "PQ issuer key does not match issuer certificate");
    }

    Certificate cert;
    cert.serial = rng.array<16>();
    cert.subject = std::move(subject);
    cert.role = role;
    cert.classical_pub = subject_keys.classical;
    cert.pq = subject_keys.pq;
    cert.linked_serial = linked_serial;
    cert.validity = validity;
    cert.issuer_serial = issuer.serial;
    sign_certificate(cert, keys, issuer.classical_pub.has_value(), issuer.pq.has_value(), config);
    return cert;
}

Bytes PqRequest::canonical(const Serial& classical_serial) const {
    ByteWriter w;
    w.str(subject).u8(static_cast<std::uint8_t>(role)).u8(static_cast<std::uint8_t>(pq.scheme)).var(pq.public_key);
    w.i64(validity.not_before).i64(validity.not_after).raw(classical_serial);
    return w.take();
}

LinkedCertPair link_certs(const Certificate& classical_cert, const KeyPair& classical_key, const PqRequest& request,
                          const Certificate& issuer, IssuerKeys issuer_keys, crypto::Drbg& rng,
                          const SchemeConfig& config) {
    if (classical_key.scheme != SchemeId::ClassicalSchnorr || !classical_cert.classical_pub ||
        *classical_cert.classical_pub != classical_key.public_key) {
        throw Error(ErrorCode::LinkProofInvalid, "classical key does not belong to the classical certificate");
    }
    auto pq_cert = issue(issuer, issuer_keys, request.subject, SubjectKeys{std::nullopt, request.pq}, request.role,
                         request.validity, rng, config, classical_cert.serial);
    auto proof_msg = crypto::hash(request.canonical(classical_cert.serial), "link");
    auto proof = classical_sign(classical_key, proof_msg, config);
    return {classical_cert, std::move(pq_cert), std::move(proof)};
}

bool verify_link_proof(const LinkedCertPair& pair, const SchemeConfig& config) {
    const auto& c = pair.classical_cert;
    const auto& p = pair.pq_cert;
    if (!p.linked_serial || *p.linked_serial != c.serial || !p.pq || !c.classical_pub) return false;
    PqRequest request{p.subject, p.role, *p.pq, p.validity};
    auto msg = crypto::hash(request.canonical(c.serial), "link");
    try {
        return crypto::verify(*c.classical_pub, SchemeId::ClassicalSchnorr, msg, pair.link_proof, config);
    } catch (const Error&) {
        return false;
    }
}

VerificationReport verify_chain(std::span<const Certificate> chain, const Certificate& trust_root,
                                VerificationPolicy policy, Tick now, const SchemeConfig& config) {
    if (chain.empty() || !(chain.back() == trust_root)) return VerificationReport::fail(Failure::BrokenChain);
    for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
        if (chain[i].issuer_serial != chain[i + 1].serial) return VerificationReport::fail(Failure::BrokenChain);
    }
    if (!chain.back().self_signed()) return VerificationReport::fail(Failure::BrokenChain);

    if (chain.back().role != Role::RootCa) return VerificationReport::fail(Failure::WrongRole);
    for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
        const auto& cert = chain[i];
        if (cert.self_signed()) return VerificationReport::fail(Failure::WrongRole);
        const bool leaf = i == 0;
        if (leaf ? cert.role == Role::RootCa : cert.role != Role::SubCa) {
            return VerificationReport::fail(Failure::WrongRole);
        }
    }

    for (const auto& cert : chain) {
        if (!cert.validity.contains(now)) return VerificationReport::fail(Failure::Expired);
    }

    for (std::size_t i = 0; i < chain.size(); ++i) {
        const auto& issuer = i + 1 < chain.size() ? chain[i + 1] : chain[i];
        if (auto failure = check_issuer_signatures(chain[i], issuer, policy, config)) {
            return VerificationReport::fail(*failure);
        }
    }
    return VerificationReport::pass();
}

VerificationReport verify_linked(const LinkedCertPair& pair, std::span<const Certificate> issuers,
                                 const Certificate& trust_root, VerificationPolicy policy, Tick now,
                                 const SchemeConfig& config) {
    if (!verify_link_proof(pair, config)) return VerificationReport::fail(Failure::LinkProofInvalid);

    auto with_leaf = [&](const Certificate& leaf) {
        std::vector<Certificate> chain;
        chain.reserve(issuers.size() + 1);
        chain.push_back(leaf);
        chain.insert(chain.end(), issuers.begin(), issuers.end());
        return chain;
    };
    auto classical = [&] {
        return verify_chain(with_leaf(pair.classical_cert), trust_root, VerificationPolicy::ClassicalOnly, now, config);
    };
    auto pq = [&] { return verify_chain(with_leaf(pair.pq_cert), trust_root, VerificationPolicy::PqOnly, now, config); };

    switch (policy) {
        case VerificationPolicy::ClassicalOnly: return classical();
        case VerificationPolicy::PqOnly: return pq();
        case VerificationPolicy::Both: {
            auto c = classical();
            return c.ok() ? pq() : c;
        }
        case VerificationPolicy::Either: {
            auto c = classical();
            if (c.ok()) return c;
            auto p = pq();
            return p.ok() ? p : c;
        }
    }
    return VerificationReport::fail(Failure::PolicyUnsatisfied);
}

}  // namespace pqcbdc::pki
