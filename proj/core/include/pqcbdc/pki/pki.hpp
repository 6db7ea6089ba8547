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

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pqcbdc/crypto/drbg.hpp"
#include "pqcbdc/crypto/hybrid.hpp"
#include "pqcbdc/pki/certificate.hpp"

namespace pqcbdc::pki {

using crypto::VerificationPolicy;

/// Signing keys of an issuer. The classical key is stateless; the PQ key is
/// advanced by every issuance.
struct IssuerKeys {
    const crypto::KeyPair* classical = nullptr;
    crypto::KeyPair* pq = nullptr;
};

struct SubjectKeys {
    std::optional<Bytes> classical;
    std::optional<PqExtension> pq;
};

// Throws NO_KEYS if neither key is supplied. Self-signed with every family
// supplied.
Certificate issue_root(std::string subject, IssuerKeys keys, Validity validity, crypto::Drbg& rng,
                       const crypto::SchemeConfig& config = {});

// Throws WRONG_ROLE (issuer not a CA, or subject role ROOT_CA),
// VALIDITY_EXCEEDS_ISSUER, KEY_MISMATCH, NO_KEYS. Signs with every key family
// present on the issuer certificate.
Certificate issue(const Certificate& issuer, IssuerKeys keys, std::string subject, const SubjectKeys& subject_keys,
                  Role role, Validity validity, crypto::Drbg& rng, const crypto::SchemeConfig& config = {},
                  std::optional<Serial> linked_serial = std::nullopt);

/// Content of the request for the PQ half of a non-composite pair.
struct PqRequest {
    std::string subject;
    Role role = Role::Wallet;
    PqExtension pq;
    Validity validity;

    // Bound to the classical certificate it extends.
    Bytes canonical(const Serial& classical_serial) const;
};

struct LinkedCertPair {
    Certificate classical_cert;
    Certificate pq_cert;
    crypto::Signature link_proof;  // classical key over the PQ request
};

// Throws LINK_PROOF_INVALID if classical_key does not belong to classical_cert,
// plus any issue() error.
LinkedCertPair link_certs(const Certificate& classical_cert, const crypto::KeyPair& classical_key,
                          const PqRequest& request, const Certificate& issuer, IssuerKeys issuer_keys,
                          crypto::Drbg& rng, const crypto::SchemeConfig& config = {});

enum class Failure : std::uint8_t {
    Expired,
    BadSignature,
    BrokenChain,
    PolicyUnsatisfied,
    WrongRole,
    LinkProofInvalid,
};

std::string_view to_string(Failure f);

struct VerificationReport {
    std::optional<Failure> failure;

    bool ok() const { return !failure.has_value(); }
    static VerificationReport pass() { return {}; }
    static VerificationReport fail(Failure f) { return {f}; }

    friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

/// Leaf first, root last. The root must equal trust_root byte for byte.
/// Checks, in order: chain links, roles, validity at `now`, then issuer
/// signatures under `policy`. Pure.
VerificationReport verify_chain(std::span<const Certificate> chain, const Certificate& trust_root,
                                VerificationPolicy policy, Tick now, const crypto::SchemeConfig& config = {});

/// Non-composite verification. `issuers` is the CA path above both halves
/// (leaf-side first, root last). CLASSICAL_ONLY checks the classical half,
/// PQ_ONLY the PQ half, BOTH/EITHER combine them. The link proof and the
/// serial reference are checked under every policy.
VerificationReport verify_linked(const LinkedCertPair& pair, std::span<const Certificate> issuers,
                                 const Certificate& trust_root, VerificationPolicy policy, Tick now,
                                 const crypto::SchemeConfig& config = {});

bool verify_link_proof(const LinkedCertPair& pair, const crypto::SchemeConfig& config = {});

}  // namespace pqcbdc::pki
