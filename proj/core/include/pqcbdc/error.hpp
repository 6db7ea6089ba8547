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

namespace pqcbdc {

enum class ErrorCode {
    // crypto
    UnknownDomainTag,
    UnsupportedHeight,
    UnsupportedScheme,
    OtsReuse,
    MssExhausted,
    MalformedSignature,
    MalformedEncoding,
    InvalidGroup,
    // pki
    NoKeys,
    WrongRole,
    ValidityExceedsIssuer,
    KeyMismatch,
    LinkProofInvalid,
    // register
    UnsupportedVersion,
    InvalidValue,
    MalformedRequest,
    DoubleSpend,
    UnknownToken,
    OwnerMismatch,
    BadSignature,
    TokenVersionExpired,
    ValueMismatch,
    VersionDowngradeForbidden,
    DeadlineOrder,
    BeforeDeadline,
    ClockRegression,
    RegisterKeyExhausted,
    // wallet
    InsufficientFunds,
    NoCommonVersion,
    DowngradeRequired,
    BadReceipt,
    WalletOffline,
    UnknownAddress,
    // sim
    ConfigInvalid,
    EmptySeries,
};

/// Stable upper-case identifier, e.g. "DOUBLE_SPEND".
std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
public:
    explicit Error(ErrorCode code);
    Error(ErrorCode code, const std::string& detail);

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace pqcbdc
