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

#include <compare>
#include <cstdint>
#include <ostream>

namespace qctx {

/// A prime qudit dimension. Construction fails with NotPrime for composites, d < 2,
/// or d above kMaxDim.
class PrimeDim {
public:
    static constexpr int kMaxDim = 31;

    explicit PrimeDim(int d);

    int value() const noexcept { return d_; }
    operator int() const noexcept { return d_; }
    bool is_odd() const noexcept { return d_ != 2; }

    /// Reduces any integer into [0, d).
    int reduce(std::int64_t a) const noexcept {
        std::int64_t r = a % d_;
        return static_cast<int>(r < 0 ? r + d_ : r);
    }

    friend bool operator==(PrimeDim a, PrimeDim b) noexcept { return a.d_ == b.d_; }

private:
    int d_;
};

bool is_prime(int n) noexcept;

/// An element of Z_d, always held in canonical form [0, d).
class ZdElem {
public:
    ZdElem(std::int64_t value, PrimeDim d) : value_(d.reduce(value)), d_(d) {}

    int value() const noexcept { return value_; }
    PrimeDim modulus() const noexcept { return d_; }
    bool is_zero() const noexcept { return value_ == 0; }

    ZdElem operator+(ZdElem o) const { return {value_ + o.value_, d_}; }
    ZdElem operator-(ZdElem o) const { return {value_ - o.value_, d_}; }
    ZdElem operator*(ZdElem o) const { return {std::int64_t{value_} * o.value_, d_}; }
    ZdElem operator-() const { return {-value_, d_}; }
    ZdElem pow(std::uint64_t e) const;

    friend bool operator==(ZdElem a, ZdElem b) noexcept {
        return a.value_ == b.value_ && a.d_ == b.d_;
    }

private:
    int value_;
    PrimeDim d_;
};

std::ostream &operator<<(std::ostream &out, ZdElem a);

/// Multiplicative inverse; throws ZeroInverse when a == 0.
ZdElem mod_inverse(ZdElem a);

/// Integer convenience form of mod_inverse.
int mod_inverse(std::int64_t a, PrimeDim d);

/// Legendre symbol (x/d) in {-1, 0, 1}; throws EvenDim for d = 2.
int legendre(ZdElem x);

/// Least quadratic non-residue in Z_d^*; throws EvenDim for d = 2.
ZdElem smallest_nonresidue(PrimeDim d);

/// The inverse of 2 mod d, used by the Weyl and Clifford phase conventions (odd d only).
int half(PrimeDim d);

}  // namespace qctx
