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

#include <stdexcept>
#include <string>
#include <string_view>

#include <CLI11.hpp>
#include <json.hpp>

#include "pqcbdc/crypto/drbg.hpp"
#include "pqcbdc/crypto/signature.hpp"
#include "pqcbdc/ledger/register.hpp"
#include "pqcbdc/pki/certificate.hpp"
#include "pqcbdc/wallet/wallet.hpp"

namespace pqcbdc::cli {

using nlohmann::json;

// File-system trouble; reported as an operation error.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Operation failure without a library error code; what() starts with the code name.
class OpError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view content);
void print(std::string_view text);

crypto::Drbg rng_from(const std::string& seed);

crypto::KeyPair load_key(const std::string& path);
void save_key(const std::string& path, const crypto::KeyPair& key);

pki::Certificate load_cert(const std::string& path);
void save_cert(const std::string& path, const pki::Certificate& cert);

wallet::Wallet load_wallet(const std::string& path);
void save_wallet(const std::string& path, const wallet::Wallet& w);

// Register state directory: register.json (receipt key, config, id stream)
// plus events.jsonl. State is always rebuilt by replaying the event log.
struct RegisterStore {
    std::string dir;

    bool exists() const;
    ledger::Register load() const;
    void save(const ledger::Register& reg) const;
};

json token_json(const ledger::Token& t);
json receipt_json(const ledger::Receipt& r);
json versions_json(const ledger::VersionSet& set);

void add_crypto_commands(CLI::App& app);
void add_ledger_commands(CLI::App& app);
void add_wallet_commands(CLI::App& app);
void add_sim_commands(CLI::App& app);

}  // namespace pqcbdc::cli
