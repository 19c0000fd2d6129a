/*
 *
 *    Copyright (c) 2026 The mattersim Authors
 *
 *    Licensed under the Apache License, Version 2.0 (the "License");
 *    you may not use this file except in compliance with the License.
 *    You may obtain a copy of the License at
 *
 *        http://www.apache.org/licenses/LICENSE-2.0
 *
 *    Unless required by applicable law or agreed to in writing, software
 *    distributed under the License is distributed on an "AS IS" BASIS,
 *    WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 *    See the License for the specific language governing permissions and
 *    limitations under the License.
 */

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace mattersim {

using Bytes    = std::vector<uint8_t>;
using ByteSpan = std::span<const uint8_t>;

std::string to_hex(ByteSpan data);
std::optional<Bytes> from_hex(const std::string& hex);

/// Little-endian fixed-width field writer used by all wire encoders.
class ByteWriter {
public:
    explicit ByteWriter(Bytes& out) : out_(out) {}

    void u8(uint8_t v) { out_.push_back(v); }
    void u16(uint16_t v)
    {
        out_.push_back(static_cast<uint8_t>(v));
        out_.push_back(static_cast<uint8_t>(v >> 8));
    }
    void u32(uint32_t v)
    {
        for (int i = 0; i < 4; i++) {
            out_.push_back(static_cast<uint8_t>(v >> (8 * i)));
        }
    }
    void u64(uint64_t v)
    {
        for (int i = 0; i < 8; i++) {
            out_.push_back(static_cast<uint8_t>(v >> (8 * i)));
        }
    }
    void raw(ByteSpan data) { out_.insert(out_.end(), data.begin(), data.end()); }

private:
    Bytes& out_;
};

/// Little-endian reader; all accessors return nullopt once the input is
/// exhausted so callers can treat truncation as a single malformed case.
class ByteReader {
public:
    explicit ByteReader(ByteSpan data) : data_(data) {}

    size_t remaining() const { return data_.size() - pos_; }
    size_t position() const { return pos_; }

    std::optional<uint8_t> u8()
    {
        if (remaining() < 1) {
            return std::nullopt;
        }
        return data_[pos_++];
    }
    std::optional<uint16_t> u16()
    {
        if (remaining() < 2) {
            return std::nullopt;
        }
        uint16_t v = static_cast<uint16_t>(data_[pos_]) | static_cast<uint16_t>(data_[pos_ + 1]) << 8;
        pos_ += 2;
        return v;
    }
    std::optional<uint32_t> u32()
    {
        if (remaining() < 4) {
            return std::nullopt;
        }
        uint32_t v = 0;
        for (int i = 0; i < 4; i++) {
            v |= static_cast<uint32_t>(data_[pos_ + i]) << (8 * i);
        }
        pos_ += 4;
        return v;
    }
    std::optional<uint64_t> u64()
    {
        if (remaining() < 8) {
            return std::nullopt;
        }
        uint64_t v = 0;
        for (int i = 0; i < 8; i++) {
            v |= static_cast<uint64_t>(data_[pos_ + i]) << (8 * i);
        }
        pos_ += 8;
        return v;
    }
    std::optional<Bytes> raw(size_t n)
    {
        if (remaining() < n) {
            return std::nullopt;
        }
        Bytes out(data_.begin() + pos_, data_.begin() + pos_ + n);
        pos_ += n;
        return out;
    }
    Bytes rest()
    {
        Bytes out(data_.begin() + pos_, data_.end());
        pos_ = data_.size();
        return out;
    }

private:
    ByteSpan data_;
    size_t pos_ = 0;
};

} // namespace mattersim
