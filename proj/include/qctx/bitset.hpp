// Copyright 2026 The qctx Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace qctx {

/// Fixed-size bit set over [0, size) packed into 64-bit words.
class Bitset {
public:
    using Word = std::uint64_t;
    static constexpr std::size_t kBits = 64;

    Bitset() = default;
    explicit Bitset(std::size_t size) : size_(size), words_((size + kBits - 1) / kBits, 0) {}

    std::size_t size() const noexcept { return size_; }
    std::size_t num_words() const noexcept { return words_.size(); }
    Word *data() noexcept { return words_.data(); }
    const Word *data() const noexcept { return words_.data(); }

    bool test(std::size_t i) const noexcept { return (words_[i / kBits] >> (i % kBits)) & 1u; }
    void set(std::size_t i) noexcept { words_[i / kBits] |= Word{1} << (i % kBits); }
    void reset(std::size_t i) noexcept { words_[i / kBits] &= ~(Word{1} << (i % kBits)); }
    void set_all() noexcept {
        for (auto &w : words_) w = ~Word{0};
        trim();
    }
    void clear() noexcept {
        for (auto &w : words_) w = 0;
    }

    std::size_t count() const noexcept {
        std::size_t c = 0;
        for (Word w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }
    bool any() const noexcept {
        for (Word w : words_)
            if (w) return true;
        return false;
    }
    /// Lowest set index at or after `from`, or size() when none.
    std::size_t next(std::size_t from) const noexcept {
        if (from >= size_) return size_;
        std::size_t wi = from / kBits;
        Word w = words_[wi] & (~Word{0} << (from % kBits));
        while (true) {
            if (w) return wi * kBits + static_cast<std::size_t>(std::countr_zero(w));
            if (++wi == words_.size()) return size_;
            w = words_[wi];
        }
    }
    std::size_t first() const noexcept { return next(0); }

    Bitset &operator&=(const Bitset &o) noexcept {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }
    Bitset &operator|=(const Bitset &o) noexcept {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    /// this &= ~o
    Bitset &subtract(const Bitset &o) noexcept {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }
    void flip() noexcept {
        for (auto &w : words_) w = ~w;
        trim();
    }

    std::vector<int> members() const {
        std::vector<int> out;
        for (std::size_t i = first(); i < size_; i = next(i + 1)) out.push_back(static_cast<int>(i));
        return out;
    }

    friend bool operator==(const Bitset &a, const Bitset &b) = default;

private:
    void trim() noexcept {
        if (size_ % kBits && !words_.empty()) words_.back() &= (Word{1} << (size_ % kBits)) - 1;
    }

    std::size_t size_ = 0;
    std::vector<Word> words_;
};

}  // namespace qctx
