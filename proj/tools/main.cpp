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

// pqcbdc: command-line front end.
//
// Exit codes: 0 success, 1 usage error (E_USAGE), 2 operation error (E_OP).

#include <iostream>

#include "cli_util.hpp"
#include "pqcbdc/error.hpp"

int main(int argc, char** argv) {
    CLI::App app{"pqcbdc: post-quantum crypto-agility laboratory for token-based CBDC"};
    app.require_subcommand(1);
    app.fallthrough(false);

    pqcbdc::cli::add_crypto_commands(app);
    pqcbdc::cli::add_ledger_commands(app);
    pqcbdc::cli::add_wallet_commands(app);
    pqcbdc::cli::add_sim_commands(app);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "E_USAGE: " << e.what() << "\n";
        return 1;
    } catch (const pqcbdc::Error& e) {
        std::cerr << "E_OP " << e.what() << "\n";
        return 2;
    } catch (const pqcbdc::cli::OpError& e) {
        std::cerr << "E_OP " << e.what() << "\n";
        return 2;
    } catch (const pqcbdc::cli::IoError& e) {
        std::cerr << "E_OP IO_ERROR: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "E_OP INTERNAL: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
