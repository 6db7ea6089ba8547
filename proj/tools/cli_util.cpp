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

#include "cli_util.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "pqcbdc/crypto/key_io.hpp"
#include "pqcbdc/ledger/event_log.hpp"
#include "pqcbdc/sim/scenario.hpp"

namespace pqcbdc::cli {

namespace fs = std::filesystem;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, std::string_view content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write " + path);
    out << content;
    if (!out) throw IoError("write failed for " + path);
}

void print(std::string_view text) {
    std::cout << text;
    if (text.empty() || text.back() != '\n') std::cout << '\n';
}

crypto::Drbg rng_from(const std::string& seed) { return crypto::Drbg(sim::parse_seed(seed)); }

crypto::KeyPair load_key(const std::string& path) { return crypto::key_from_json(read_file(path)); }

void save_key(const std::string& path, const crypto::KeyPair& key) { write_file(path, crypto::key_to_json(key)); }

namespace {

std::string trimmed(std::string s) {
    auto first = s.find_first_not_of(" \t\r\n");
    auto last = s.find_last_not_of(" \t\r\n");
    return first == std::string::npos ? std::string{} : s.substr(first, last - first + 1);
}

}  // namespace

pki::Certificate load_cert(const std::string& path) {
    return pki::Certificate::decode(from_hex(trimmed(read_file(path))));
}

void save_cert(const std::string& path, const pki::Certificate& cert) {
    write_file(path, to_hex(cert.encode()) + "\n");
}

wallet::Wallet load_wallet(const std::string& path) { return wallet::Wallet::from_json(read_file(path)); }

void save_wallet(const std::string& path, const wallet::Wallet& w) { write_file(path, w.to_json() + "\n"); }

bool RegisterStore::exists() const { return fs::exists(fs::path(dir) / "register.json"); }

ledger::Register RegisterStore::load() const {
    if (!exists()) throw IoError("no register state in " + dir + " (run `register init` first)");
    auto meta = json::parse(read_file((fs::path(dir) / "register.json").string()));
    ledger::RegisterConfig config;
    config.receipt_tree_height = meta.at("receipt_tree_height").get<int>();
    config.value_scale = meta.at("value_scale").get<int>();
    crypto::Drbg rng(fixed_from_hex<32>(meta.at("id_seed").get<std::string>()), meta.at("id_counter").get<std::uint64_t>());
    auto key = crypto::key_from_json(meta.at("key").dump());
    auto events = ledger::read_log(read_file((fs::path(dir) / "events.jsonl").string()));
    return ledger::Register::replay(std::move(key), events, rng, config);
}

void RegisterStore::save(const ledger::Register& reg) const {
    fs::create_directories(dir);
    json meta;
    meta["receipt_tree_height"] = reg.config().receipt_tree_height;
    meta["value_scale"] = reg.config().value_scale;
    meta["id_seed"] = to_hex(reg.id_stream().seed());
    meta["id_counter"] = reg.id_stream().counter();
    meta["key"] = json::parse(crypto::key_to_json(reg.receipt_key()));
    write_file((fs::path(dir) / "register.json").string(), meta.dump(2) + "\n");
    write_file((fs::path(dir) / "events.jsonl").string(), ledger::write_log(reg.events()));
}

json token_json(const ledger::Token& t) {
    return {{"token_id", to_hex(t.id)}, {"version", t.version}, {"value", t.value}, {"owner_addr", to_hex(t.owner)}};
}

json receipt_json(const ledger::Receipt& r) {
    json ids = json::array();
    for (const auto& id : r.new_token_ids) ids.push_back(to_hex(id));
    return {{"transfer_digest", to_hex(r.transfer_digest)},
            {"new_token_ids", ids},
            {"tick", r.tick},
            {"receipt", to_hex(r.encode())}};
}

json versions_json(const ledger::VersionSet& set) {
    json out = json::array();
    for (auto v : set) out.push_back(v);
    return out;
}

}  // namespace pqcbdc::cli
