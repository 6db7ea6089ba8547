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

#include <memory>
#include <sstream>

#include "cli_util.hpp"
#include "pqcbdc/crypto/hybrid.hpp"
#include "pqcbdc/crypto/scheme.hpp"
#include "pqcbdc/ledger/token.hpp"
#include "pqcbdc/pki/pki.hpp"

namespace pqcbdc::cli {

namespace {

struct KeygenArgs {
    std::string scheme;
    std::string seed = "0";
    int height = 8;
    std::string out;
};

struct SizesArgs {
    std::string scheme;
    int height = 8;
};

struct CertArgs {
    std::string role;
    std::string subject;
    std::string classical_key;
    std::string pq_key;
    std::string issuer;
    std::string issuer_classical_key;
    std::string issuer_pq_key;
    ledger::Tick not_before = 0;
    ledger::Tick not_after = 1'000'000;
    std::string seed = "0";
    std::string out;

    std::vector<std::string> chain;
    std::string trust;
    std::string policy = "both";
    ledger::Tick now = 0;
};

void run_keygen(const KeygenArgs& a) {
    auto rng = rng_from(a.seed);
    crypto::SchemeConfig config;
    config.mss_height = a.height;
    auto key = crypto::keygen(crypto::parse_scheme(a.scheme), rng, config);
    save_key(a.out, key);
    json out{{"scheme", a.scheme},
             {"public_key", to_hex(key.public_key)},
             {"address", to_hex(ledger::address_of(key.public_key))},
             {"signatures_remaining", key.signatures_remaining()}};
    print(out.dump(2));
}

std::string size_line(crypto::SchemeId id, const crypto::SchemeConfig& config) {
    auto s = crypto::scheme_sizes(id, config);
    std::ostringstream os;
    os << "scheme=" << crypto::to_string(id) << " public=" << s.public_key_bytes << " private=" << s.private_key_bytes
       << " signature=" << s.signature_bytes;
    return os.str();
}

void run_sizes(const SizesArgs& a) {
    crypto::SchemeConfig config;
    config.mss_height = a.height;
    if (!a.scheme.empty()) return print(size_line(crypto::parse_scheme(a.scheme), config));
    for (const auto& info : crypto::scheme_registry()) print(size_line(info.id, config));
}

// Keys are optional on the command line; absent paths give null pointers.
struct LoadedKeys {
    std::unique_ptr<crypto::KeyPair> classical;
    std::unique_ptr<crypto::KeyPair> pq;

    LoadedKeys(const std::string& classical_path, const std::string& pq_path) {
        if (!classical_path.empty()) classical = std::make_unique<crypto::KeyPair>(load_key(classical_path));
        if (!pq_path.empty()) pq = std::make_unique<crypto::KeyPair>(load_key(pq_path));
    }
    pki::IssuerKeys issuer() { return {classical.get(), pq.get()}; }
};

void run_cert_issue(const CertArgs& a) {
    auto rng = rng_from(a.seed);
    auto role = pki::parse_role(a.role);
    pki::Validity validity{a.not_before, a.not_after};
    pki::Certificate cert;
    if (role == pki::Role::RootCa) {
        LoadedKeys own(a.classical_key, a.pq_key);
        cert = pki::issue_root(a.subject, own.issuer(), validity, rng);
        if (own.pq) save_key(a.pq_key, *own.pq);
    } else {
        if (a.issuer.empty()) throw CLI::ValidationError("--issuer", "required unless --role root-ca");
        auto issuer = load_cert(a.issuer);
        LoadedKeys keys(a.issuer_classical_key, a.issuer_pq_key);
        LoadedKeys subject(a.classical_key, a.pq_key);
        pki::SubjectKeys sk;
        if (subject.classical) sk.classical = subject.classical->public_key;
        if (subject.pq) sk.pq = pki::PqExtension{subject.pq->scheme, subject.pq->public_key};
        cert = pki::issue(issuer, keys.issuer(), a.subject, sk, role, validity, rng);
        if (keys.pq) save_key(a.issuer_pq_key, *keys.pq);
    }
    save_cert(a.out, cert);
    json out{{"serial", to_hex(cert.serial)},
             {"subject", cert.subject},
             {"role", std::string(pki::to_string(cert.role))},
             {"classical", cert.classical_pub.has_value()},
             {"pq", cert.pq ? json(std::string(crypto::to_string(cert.pq->scheme))) : json(nullptr)}};
    print(out.dump(2));
}

void run_cert_verify(const CertArgs& a) {
    std::vector<pki::Certificate> chain;
    for (const auto& path : a.chain) chain.push_back(load_cert(path));
    auto trust = a.trust.empty() ? chain.back() : load_cert(a.trust);
    auto report = pki::verify_chain(chain, trust, crypto::parse_policy(a.policy), a.now);
    if (!report.ok()) {
        throw OpError(std::string(pki::to_string(*report.failure)) + ": chain rejected under " + a.policy);
    }
    print("OK policy=" + a.policy + " length=" + std::to_string(chain.size()));
}

}  // namespace

void add_crypto_commands(CLI::App& app) {
    auto keygen = std::make_shared<KeygenArgs>();
    auto* kg = app.add_subcommand("keygen", "generate a key pair and write it as JSON");
    kg->add_option("--scheme", keygen->scheme, "classical-schnorr | pq-wots | pq-mss")->required();
    kg->add_option("--seed", keygen->seed, "64 hex digits or any label");
    kg->add_option("--height", keygen->height, "PQ_MSS tree height")->check(CLI::Range(1, 16));
    kg->add_option("--out", keygen->out, "key file")->required();
    kg->callback([keygen] { run_keygen(*keygen); });

    auto sizes = std::make_shared<SizesArgs>();
    auto* sz = app.add_subcommand("sizes", "report key and signature sizes");
    sz->add_option("--scheme", sizes->scheme, "one scheme; all when omitted");
    sz->add_option("--height", sizes->height, "PQ_MSS tree height")->check(CLI::Range(1, 16));
    sz->callback([sizes] { run_sizes(*sizes); });

    auto cert = std::make_shared<CertArgs>();
    auto* ct = app.add_subcommand("cert", "issue and verify certificates");
    ct->require_subcommand(1);
    auto* issue = ct->add_subcommand("issue", "issue a certificate");
    issue->add_option("--role", cert->role, "root-ca | sub-ca | wallet | register")->required();
    issue->add_option("--subject", cert->subject)->required();
    issue->add_option("--classical-key", cert->classical_key, "subject classical key file");
    issue->add_option("--pq-key", cert->pq_key, "subject PQ key file");
    issue->add_option("--issuer", cert->issuer, "issuer certificate file");
    issue->add_option("--issuer-classical-key", cert->issuer_classical_key);
    issue->add_option("--issuer-pq-key", cert->issuer_pq_key);
    issue->add_option("--not-before", cert->not_before);
    issue->add_option("--not-after", cert->not_after);
    issue->add_option("--seed", cert->seed);
    issue->add_option("--out", cert->out, "certificate file (hex)")->required();
    issue->callback([cert] { run_cert_issue(*cert); });

    auto* verify = ct->add_subcommand("verify", "verify a chain, leaf first");
    verify->add_option("--chain", cert->chain, "certificate files, leaf first")->required()->delimiter(',');
    verify->add_option("--trust", cert->trust, "trusted root; defaults to the last chain element");
    verify->add_option("--policy", cert->policy, "classical-only | pq-only | both | either");
    verify->add_option("--at-tick,--now", cert->now, "tick");
    verify->callback([cert] { run_cert_verify(*cert); });
}

}  // namespace pqcbdc::cli
