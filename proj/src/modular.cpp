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

#include "qctx/modular.hpp"

#include <string>

#include "qctx/error.hpp"

namespace qctx {

std::string_view error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::NotPrime: return "NotPrime";
        case ErrorCode::ZeroInverse: return "ZeroInverse";
        case ErrorCode::EvenDim: return "EvenDim";
        case ErrorCode::DimensionOverflow: return "DimensionOverflow";
        case ErrorCode::ShapeMismatch: return "ShapeMismatch";
        case ErrorCode::IdentityPauli: return "IdentityPauli";
        case ErrorCode::IdentityFactor: return "IdentityFactor";
        case ErrorCode::NotHermitian: return "NotHermitian";
        case ErrorCode::NotClifford: return "NotClifford";
        case ErrorCode::BadConnectionSet: return "BadConnectionSet";
        case ErrorCode::InvalidHint: return "InvalidHint";
        case ErrorCode::BudgetExceeded: return "BudgetExceeded";
        case ErrorCode::NoConvergence: return "NoConvergence";
        case ErrorCode::UnsupportedDim: return "UnsupportedDim";
        case ErrorCode::DecompositionMismatch: return "DecompositionMismatch";
        case ErrorCode::SearchFailed: return "SearchFailed";
        case ErrorCode::ParseError: return "ParseError";
    }
    return "Unknown";
}

bool is_prime(int n) noexcept {
    if (n < 2) return false;
    for (int f = 2; f * f <= n; ++f) {
        if (n % f == 0) return false;
    }
    return true;
}

PrimeDim::PrimeDim(int d) : d_(d) {
    if (!is_prime(d) || d > kMaxDim) {
        throw Error(ErrorCode::NotPrime,
                    "dimension " + std::to_string(d) + " is not a supported prime (2..31)");
    }
}

ZdElem ZdElem::pow(std::uint64_t e) const {
    ZdElem result(1, d_);
    ZdElem base = *this;
    while (e > 0) {
        if (e & 1) result = result * base;
        base = base * base;
        e >>= 1;
    }
    return result;
}

std::ostream &operator<<(std::ostream &out, ZdElem a) { return out << a.value(); }

ZdElem mod_inverse(ZdElem a) {
    if (a.is_zero()) {
        throw Error(ErrorCode::ZeroInverse, "0 has no inverse mod " + std::to_string(a.modulus().value()));
    }
    // Fermat: a^(d-2) for prime d.
    return a.pow(static_cast<std::uint64_t>(a.modulus().value() - 2));
}

int mod_inverse(std::int64_t a, PrimeDim d) { return mod_inverse(ZdElem(a, d)).value(); }

int legendre(ZdElem x) {
    const int d = x.modulus().value();
    if (d == 2) throw Error(ErrorCode::EvenDim, "Legendre symbol requires an odd prime");
    if (x.is_zero()) return 0;
    return x.pow(static_cast<std::uint64_t>((d - 1) / 2)).value() == 1 ? 1 : -1;
}

ZdElem smallest_nonresidue(PrimeDim d) {
    if (!d.is_odd()) throw Error(ErrorCode::EvenDim, "no quadratic non-residue mod 2");
    for (int v = 1; v < d.value(); ++v) {
        if (legendre(ZdElem(v, d)) == -1) return ZdElem(v, d);
    }
    throw Error(ErrorCode::SearchFailed, "no non-residue found");
}

int half(PrimeDim d) {
    if (!d.is_odd()) throw Error(ErrorCode::EvenDim, "2 is not invertible mod 2");
    return (d.value() + 1) / 2;
}

}  // namespace qctx
