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

#include "pqcbdc/error.hpp"

namespace pqcbdc {

std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::UnknownDomainTag: return "UNKNOWN_DOMAIN_TAG";
        case ErrorCode::UnsupportedHeight: return "UNSUPPORTED_HEIGHT";
        case ErrorCode::UnsupportedScheme: return "UNSUPPORTED_SCHEME";
        case ErrorCode::OtsReuse: return "OTS_REUSE";
        case ErrorCode::MssExhausted: return "MSS_EXHAUSTED";
        case ErrorCode::MalformedSignature: return "MALFORMED_SIGNATURE";
        case ErrorCode::MalformedEncoding: return "MALFORMED_ENCODING";
        case ErrorCode::InvalidGroup: return "INVALID_GROUP";
        case ErrorCode::NoKeys: return "NO_KEYS";
        case ErrorCode::WrongRole: return "WRONG_ROLE";
        case ErrorCode::ValidityExceedsIssuer: return "VALIDITY_EXCEEDS_ISSUER";
        case ErrorCode::KeyMismatch: return "KEY_MISMATCH";
        case ErrorCode::LinkProofInvalid: return "LINK_PROOF_INVALID";
        case ErrorCode::UnsupportedVersion: return "UNSUPPORTED_VERSION";
        case ErrorCode::InvalidValue: return "INVALID_VALUE";
        case ErrorCode::MalformedRequest: return "MALFORMED_REQUEST";
        case ErrorCode::DoubleSpend: return "DOUBLE_SPEND";
        case ErrorCode::UnknownToken: return "UNKNOWN_TOKEN";
        case ErrorCode::OwnerMismatch: return "OWNER_MISMATCH";
        case ErrorCode::BadSignature: return "BAD_SIGNATURE";
        case ErrorCode::TokenVersionExpired: return "TOKEN_VERSION_EXPIRED";
        case ErrorCode::ValueMismatch: return "VALUE_MISMATCH";
        case ErrorCode::VersionDowngradeForbidden: return "VERSION_DOWNGRADE_FORBIDDEN";
        case ErrorCode::DeadlineOrder: return "DEADLINE_ORDER";
        case ErrorCode::BeforeDeadline: return "BEFORE_DEADLINE";
        case ErrorCode::ClockRegression: return "CLOCK_REGRESSION";
        case ErrorCode::RegisterKeyExhausted: return "REGISTER_KEY_EXHAUSTED";
        case ErrorCode::InsufficientFunds: return "INSUFFICIENT_FUNDS";
        case ErrorCode::NoCommonVersion: return "NO_COMMON_VERSION";
        case ErrorCode::DowngradeRequired: return "DOWNGRADE_REQUIRED";
        case ErrorCode::BadReceipt: return "BAD_RECEIPT";
        case ErrorCode::WalletOffline: return "WALLET_OFFLINE";
        case ErrorCode::UnknownAddress: return "UNKNOWN_ADDRESS";
        case ErrorCode::ConfigInvalid: return "CONFIG_INVALID";
        case ErrorCode::EmptySeries: return "EMPTY_SERIES";
    }
    return "UNKNOWN_ERROR";
}

Error::Error(ErrorCode code) : std::runtime_error(std::string(to_string(code))), code_(code) {}

Error::Error(ErrorCode code, const std::string& detail)
    : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

}  // namespace pqcbdc
