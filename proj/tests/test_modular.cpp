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

#include <gtest/gtest.h>

#include <set>

#include "qctx/error.hpp"
#include "qctx/modular.hpp"

namespace qctx {
namespace {

TEST(PrimeDim, AcceptsPrimesOnly) {
    for (int d : {2, 3, 5, 7, 11, 13, 31}) EXPECT_EQ(PrimeDim(d).value(), d);
    for (int d : {-3, 0, 1, 4, 9, 15, 25, 37}) {
        try {
            PrimeDim bad(d);
            FAIL() << d;
        } catch (const Error &e) {
            EXPECT_EQ(e.code(), ErrorCode::NotPrime);
        }
    }
}

TEST(PrimeDim, ReduceIsCanonical) {
    PrimeDim d(5);
    EXPECT_EQ(d.reduce(-1), 4);
    EXPECT_EQ(d.reduce(-10), 0);
    EXPECT_EQ(d.reduce(12), 2);
}

TEST(ModInverse, Examples) {
    EXPECT_EQ(mod_inverse(ZdElem(1, PrimeDim(5))).value(), 1);
    EXPECT_EQ(mod_inverse(ZdElem(2, PrimeDim(3))).value(), 2);
    EXPECT_EQ(mod_inverse(ZdElem(2, PrimeDim(7))).value(), 4);
}

TEST(ModInverse, ZeroThrows) {
    try {
        mod_inverse(ZdElem(0, PrimeDim(7)));
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::ZeroInverse);
    }
}

TEST(ModInverse, ProductIsOneForEveryUnit) {
    for (int p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31}) {
        PrimeDim d(p);
        for (int a = 1; a < p; ++a) {
            const ZdElem x(a, d);
            EXPECT_EQ((x * mod_inverse(x)).value(), 1) << a << " mod " << p;
        }
    }
}

// Squares collected by brute force.
std::set<int> squares(int p) {
    std::set<int> out;
    for (int x = 1; x < p; ++x) out.insert(x * x % p);
    return out;
}

TEST(Legendre, Examples) {
    EXPECT_EQ(legendre(ZdElem(0, PrimeDim(5))), 0);
    EXPECT_EQ(legendre(ZdElem(4, PrimeDim(5))), 1);
    EXPECT_EQ(legendre(ZdElem(2, PrimeDim(3))), -1);
}

TEST(Legendre, MatchesSquaresAndIsMultiplicative) {
    for (int p : {3, 5, 7, 11, 13, 17, 19, 23, 29, 31}) {
        PrimeDim d(p);
        const auto sq = squares(p);
        int plus = 0, minus = 0;
        for (int x = 1; x < p; ++x) {
            const int l = legendre(ZdElem(x, d));
            EXPECT_EQ(l, sq.count(x) ? 1 : -1);
            (l == 1 ? plus : minus)++;
            for (int y = 1; y < p; ++y) {
                EXPECT_EQ(legendre(ZdElem(x * y, d)), l * legendre(ZdElem(y, d)));
            }
        }
        EXPECT_EQ(plus, (p - 1) / 2);
        EXPECT_EQ(minus, (p - 1) / 2);
    }
}

TEST(Legendre, EvenDimThrows) {
    try {
        legendre(ZdElem(1, PrimeDim(2)));
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::EvenDim);
    }
}

TEST(SmallestNonresidue, Examples) {
    EXPECT_EQ(smallest_nonresidue(PrimeDim(3)).value(), 2);
    EXPECT_EQ(smallest_nonresidue(PrimeDim(5)).value(), 2);
    EXPECT_EQ(smallest_nonresidue(PrimeDim(7)).value(), 3);
    for (int p : {11, 13, 17, 19, 23}) {
        const auto sq = squares(p);
        int first = 1;
        while (sq.count(first)) ++first;
        EXPECT_EQ(smallest_nonresidue(PrimeDim(p)).value(), first);
    }
}

TEST(Half, IsInverseOfTwo) {
    for (int p : {3, 5, 7, 11}) EXPECT_EQ(2 * half(PrimeDim(p)) % p, 1);
}

}  // namespace
}  // namespace qctx
