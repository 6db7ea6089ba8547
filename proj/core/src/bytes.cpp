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

#include "pqcbdc/bytes.hpp"

#include "pqcbdc/error.hpp"

namespace pqcbdc {

namespace {

int hex_value(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    return -1;
}

}  // namespace

std::string to_hex(ByteView data) {
    static constexpr char kDigits[] = "0123456789abcdef";
    std::string out;
    out.reserve(data.size() * 2);
    for (auto b : data) {
        out.push_back(kDigits[b >> 4]);
        out.push_back(kDigits[b & 0x0f]);
    }
    return out;
}

Bytes from_hex(std::string_view hex) {
    if (hex.size() % 2 != 0) throw Error(ErrorCode::MalformedEncoding, "odd-length hex string");
    Bytes out;
    out.reserve(hex.size() / 2);
    for (std::size_t i = 0; i < hex.size(); i += 2) {
        int hi = hex_value(hex[i]);
        int lo = hex_value(hex[i + 1]);
        if (hi < 0 || lo < 0) throw Error(ErrorCode::MalformedEncoding, "non-hex character");
        out.push_back(static_cast<std::uint8_t>((hi << 4) | lo));
    }
    return out;
}

void throw_length_mismatch(std::size_t expected, std::size_t actual) {
    throw Error(ErrorCode::MalformedEncoding,
                "expected " + std::to_string(expected) + " bytes, got " + std::to_string(actual));
}

ByteWriter& ByteWriter::u8(std::uint8_t v) {
    out_.push_back(v);
    return *this;
}

ByteWriter& ByteWriter::u16(std::uint16_t v) {
    out_.push_back(static_cast<std::uint8_t>(v >> 8));
    out_.push_back(static_cast<std::uint8_t>(v));
    return *this;
}

ByteWriter& ByteWriter::u32(std::uint32_t v) {
    for (int shift = 24; shift >= 0; shift -= 8) out_.push_back(static_cast<std::uint8_t>(v >> shift));
    return *this;
}

ByteWriter& ByteWriter::u64(std::uint64_t v) {
    for (int shift = 56; shift >= 0; shift -= 8) out_.push_back(static_cast<std::uint8_t>(v >> shift));
    return *this;
}

ByteWriter& ByteWriter::raw(ByteView data) {
    out_.insert(out_.end(), data.begin(), data.end());
    return *this;
}

ByteWriter& ByteWriter::var(ByteView data) {
    if (data.size() > 0xffff) throw Error(ErrorCode::MalformedEncoding, "field exceeds 65535 bytes");
    u16(static_cast<std::uint16_t>(data.size()));
    return raw(data);
}

ByteView ByteReader::raw(std::size_t n) {
    if (remaining() < n) throw Error(ErrorCode::MalformedEncoding, "truncated input");
    auto view = data_.subspan(pos_, n);
    pos_ += n;
    return view;
}

std::uint8_t ByteReader::u8() { return raw(1)[0]; }

std::uint16_t ByteReader::u16() {
    auto v = raw(2);
    return static_cast<std::uint16_t>((v[0] << 8) | v[1]);
}

std::uint32_t ByteReader::u32() {
    auto v = raw(4);
    std::uint32_t out = 0;
    for (auto b : v) out = (out << 8) | b;
    return out;
}

std::uint64_t ByteReader::u64() {
    auto v = raw(8);
    std::uint64_t out = 0;
    for (auto b : v) out = (out << 8) | b;
    return out;
}

Bytes ByteReader::var() {
    auto n = u16();
    auto v = raw(n);
    return {v.begin(), v.end()};
}

std::string ByteReader::str() {
    auto n = u16();
    auto v = raw(n);
    return {v.begin(), v.end()};
}

void ByteReader::expect_done() const {
    if (!done()) throw Error(ErrorCode::MalformedEncoding, "trailing bytes");
}

}  // namespace pqcbdc
