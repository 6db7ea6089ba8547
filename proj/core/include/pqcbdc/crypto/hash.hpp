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

#include <initializer_list>
#include <span>
#include <string_view>

#include "pqcbdc/bytes.hpp"

namespace pqcbdc::crypto {

inline constexpr std::size_t kDigestBytes = 32;

// All hashing is SHA-256 over (tag || 0x00 || data). The tag must come from
// the fixed registry below; anything else is UNKNOWN_DOMAIN_TAG.
Digest hash(ByteView data, std::string_view domain_tag);

// Same as hash() over the concatenation of parts, without materializing it.
Digest hash(std::initializer_list<ByteView> parts, std::string_view domain_tag);

bool is_registered_tag(std::string_view tag);
std::span<const std::string_view> registered_tags();

}  // namespace pqcbdc::crypto
