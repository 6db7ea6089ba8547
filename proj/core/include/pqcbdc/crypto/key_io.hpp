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

#include <string>
#include <string_view>

#include "pqcbdc/crypto/signature.hpp"

namespace pqcbdc::crypto {

// JSON text form of a key pair, including MSS/WOTS signing state. All binary
// fields are hex. Loading a PQ_MSS key rebuilds its tree.
std::string key_to_json(const KeyPair& key);
KeyPair key_from_json(std::string_view text);

}  // namespace pqcbdc::crypto
