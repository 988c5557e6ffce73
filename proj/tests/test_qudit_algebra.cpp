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

#include <cmath>
#include <numbers>
#include <random>

#include "qctx/dense_matrix.hpp"
#include "qctx/error.hpp"
#include "qctx/pauli.hpp"

namespace qctx {
namespace {

constexpr double kTol = 1e-10;

// Reference shift and clock built entry by entry: X|j> = |j+1>, Z|j> = w^j |j>.
DenseMatrix ref_shift(int d) {
    DenseMatrix m(d);
    for (int j = 0; j < d; ++j) m((j + 1) % d, j) = 1.0;
    return m;
}

DenseMatrix ref_clock(int d) {
    DenseMatrix m(d);
    for (int j = 0; j < d; ++j) m(j, j) = std::polar(1.0, 2 * std::numbers::pi * j / d);
    return m;
}

// Independent construction of the unphased label (qubit labels get i^{x.z}).
DenseMatrix ref_pauli(const std::vector<int> &x, const std::vector<int> &z, int d) {
    DenseMatrix acc = DenseMatrix::identity(1);
    int xz = 0;
    for (std::size_t q = 0; q < x.size(); ++q) {
        acc = kron(acc, matrix_power(ref_shift(d), x[q]) * matrix_power(ref_clock(d), z[q]));
        xz += x[q] * z[q];
    }
    if (d == 2) acc *= std::pow(Complex(0, 1), xz);
    return acc;
}

// Every unphased label on n qudits.
std::vector<SymplecticPauli> all_labels(int n, PrimeDim d) {
    std::vector<SymplecticPauli> out;
    int total = 1;
    for (int i = 0; i < 2 * n; ++i) total *= d.value();
    for (int idx = 0; idx < total; ++idx) {
        std::vector<int> digits(2 * n);
        int rest = idx;
        for (int i = 2 * n - 1; i >= 0; --i) {
            digits[i] = rest % d.value();
            rest /= d.value();
        }
        out.emplace_back(std::vector<int>(digits.begin(), digits.begin() + n),
                         std::vector<int>(digits.begin() + n, digits.end()));
    }
    return out;
}

DenseMatrix commutator(const DenseMatrix &a, const DenseMatrix &b) { return a * b - b * a; }

TEST(PauliMatrix, IdentityLabel) {
    for (int p : {2, 3, 5}) {
        PrimeDim d(p);
        EXPECT_LT(max_abs_diff(pauli_matrix(single_pauli(0, 0, d), d), DenseMatrix::identity(p)), kTol);
    }
}

TEST(PauliMatrix, QubitYIsStandard) {
    PrimeDim d(2);
    DenseMatrix y(2);
    y(0, 1) = Complex(0, -1);
    y(1, 0) = Complex(0, 1);
    EXPECT_LT(max_abs_diff(pauli_matrix(single_pauli(1, 1, d), d), y), kTol);
}

TEST(PauliMatrix, QutritShiftIsCyclic) {
    PrimeDim d(3);
    const DenseMatrix x = pauli_matrix(single_pauli(1, 0, d), d);
    for (int j = 0; j < 3; ++j) {
        for (int i = 0; i < 3; ++i) EXPECT_EQ(x(i, j), Complex(i == (j + 1) % 3 ? 1.0 : 0.0));
    }
}

TEST(PauliMatrix, MatchesReferenceAndIsUnitary) {
    for (int p : {2, 3, 5}) {
        PrimeDim d(p);
        for (int n : {1, 2}) {
            for (const auto &label : all_labels(n, d)) {
                const DenseMatrix m = pauli_matrix(label, d);
                EXPECT_LT(max_abs_diff(m, ref_pauli(label.x, label.z, p)), kTol) << label.label();
                EXPECT_LT(max_abs_diff(m * m.adjoint(), DenseMatrix::identity(m.dim())), 1e-12);
            }
        }
    }
}

TEST(PauliMatrix, OverflowGuard) {
    PrimeDim d(31);
    const SymplecticPauli p({1, 1}, {0, 0});
    try {
        pauli_matrix(p, d);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::DimensionOverflow);
    }
}

TEST(SymplecticPauli, MultiplyMatchesDenseProduct) {
    for (int p : {2, 3, 5}) {
        PrimeDim d(p);
        const auto labels = all_labels(2, d);
        std::mt19937 rng(7);
        std::uniform_int_distribution<std::size_t> pick(0, labels.size() - 1);
        std::uniform_int_distribution<int> phase(0, phase_order(d) - 1);
        for (int trial = 0; trial < 200; ++trial) {
            SymplecticPauli a = labels[pick(rng)], b = labels[pick(rng)];
            a.phase = phase(rng);
            b.phase = phase(rng);
            const DenseMatrix expected = pauli_matrix(a, d) * pauli_matrix(b, d);
            EXPECT_LT(max_abs_diff(pauli_matrix(multiply(a, b, d), d), expected), kTol);
            EXPECT_LT(max_abs_diff(pauli_matrix(inverse(a, d), d), pauli_matrix(a, d).adjoint()), kTol);
        }
    }
}

TEST(SymplecticCommutes, Examples) {
    PrimeDim d2(2);
    const SymplecticPauli xi({1, 0}, {0, 0}), zi({0, 0}, {1, 0});
    EXPECT_TRUE(symplectic_commutes(xi, xi, d2));
    EXPECT_FALSE(symplectic_commutes(xi, zi, d2));
    for (int p : {2, 3, 5, 7}) {
        PrimeDim d(p);
        EXPECT_TRUE(symplectic_commutes(SymplecticPauli({1, 1}, {0, 0}), SymplecticPauli({0, 0}, {1, p - 1}), d));
    }
}

TEST(SymplecticCommutes, ShapeMismatch) {
    try {
        symplectic_commutes(single_pauli(1, 0, PrimeDim(3)), SymplecticPauli({1, 0}, {0, 0}), PrimeDim(3));
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::ShapeMismatch);
    }
}

TEST(SymplecticCommutes, AgreesWithDenseCommutator) {
    for (int p : {2, 3}) {
        PrimeDim d(p);
        for (int n : {1, 2}) {
            const auto labels = all_labels(n, d);
            std::vector<DenseMatrix> mats;
            for (const auto &l : labels) mats.push_back(pauli_matrix(l, d));
            for (std::size_t i = 0; i < labels.size(); ++i) {
                for (std::size_t j = 0; j < labels.size(); ++j) {
                    const bool dense = commutator(mats[i], mats[j]).max_abs() < kTol;
                    EXPECT_EQ(symplectic_commutes(labels[i], labels[j], d), dense);
                }
            }
        }
    }
}

TEST(Eigenprojector, QubitPlusState) {
    PrimeDim d(2);
    const Projector p = eigenprojector(single_pauli(1, 0, d), 0, d);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) EXPECT_NEAR(std::abs(p.matrix(i, j) - 0.5), 0.0, kTol);
    EXPECT_EQ(p.label, "(1|0)[0]");
}

TEST(Eigenprojector, TwoQutritRankThree) {
    PrimeDim d(3);
    const Projector p = eigenprojector(SymplecticPauli({1, 1}, {0, 0}), 0, d);
    EXPECT_EQ(p.rank, 3);
    EXPECT_NEAR(p.matrix.trace().real(), 3.0, kTol);
}

TEST(Eigenprojector, IdentityThrows) {
    try {
        eigenprojector(single_pauli(0, 0, PrimeDim(3)), 0, PrimeDim(3));
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::IdentityPauli);
    }
}

TEST(Eigenprojector, SpectralPropertiesAllLabels) {
    for (int p : {2, 3, 5}) {
        PrimeDim d(p);
        for (int n : {1, 2}) {
            for (const auto &label : all_labels(n, d)) {
                if (label.is_identity()) continue;
                const DenseMatrix pm = pauli_matrix(label, d);
                DenseMatrix sum(pm.dim());
                for (int k = 0; k < p; ++k) {
                    const Projector proj = eigenprojector(label, k, d);
                    EXPECT_LT(max_abs_diff(proj.matrix * proj.matrix, proj.matrix), kTol);
                    EXPECT_TRUE(proj.matrix.is_hermitian(kTol));
                    EXPECT_NEAR(proj.matrix.trace().real(), proj.rank, kTol);
                    EXPECT_LT(max_abs_diff(pm * proj.matrix, root_of_unity(d, k) * proj.matrix), kTol);
                    sum += proj.matrix;
                }
                EXPECT_LT(max_abs_diff(sum, DenseMatrix::identity(pm.dim())), kTol);
            }
        }
    }
}

TEST(Rank1Decompose, QubitXX) {
    PrimeDim d(2);
    const auto parts = rank1_decompose(SymplecticPauli({1, 1}, {0, 0}), 0, d);
    ASSERT_EQ(parts.size(), 2u);
    EXPECT_EQ(parts[0].label, "(1|0)[0]x(1|0)[0]");
    EXPECT_EQ(parts[1].label, "(1|0)[1]x(1|0)[1]");
}

TEST(Rank1Decompose, QutritPairwiseOrthogonal) {
    PrimeDim d(3);
    const auto parts = rank1_decompose(SymplecticPauli({1, 1}, {1, 2}), 0, d);
    ASSERT_EQ(parts.size(), 3u);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = i + 1; j < 3; ++j)
            EXPECT_LT((parts[i].matrix * parts[j].matrix).max_abs(), kTol);
}

TEST(Rank1Decompose, IdentityFactorThrows) {
    try {
        rank1_decompose(SymplecticPauli({1, 0}, {0, 0}), 0, PrimeDim(3));
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::IdentityFactor);
    }
}

TEST(Rank1Decompose, SumEqualsEigenprojectorAllTwoLocalLabels) {
    for (int p : {2, 3, 5}) {
        PrimeDim d(p);
        for (const auto &label : all_labels(2, d)) {
            const bool first_id = label.x[0] == 0 && label.z[0] == 0;
            const bool second_id = label.x[1] == 0 && label.z[1] == 0;
            if (first_id || second_id) continue;
            for (int k = 0; k < p; ++k) {
                DenseMatrix sum(p * p);
                for (const auto &part : rank1_decompose(label, k, d)) {
                    EXPECT_NEAR(part.matrix.trace().real(), 1.0, kTol);
                    sum += part.matrix;
                }
                EXPECT_LT(max_abs_diff(sum, eigenprojector(label, k, d).matrix), kTol) << label.label() << k;
            }
        }
    }
}

TEST(HermitianEigen, Identity) {
    const EigenSystem es = hermitian_eigen(DenseMatrix::identity(6));
    for (double v : es.values) EXPECT_NEAR(v, 1.0, 1e-12);
}

TEST(HermitianEigen, RandomReconstruction) {
    std::mt19937 rng(11);
    std::normal_distribution<double> g;
    for (int n : {2, 5, 9, 25}) {
        DenseMatrix m(n);
        for (int i = 0; i < n; ++i) {
            m(i, i) = g(rng);
            for (int j = i + 1; j < n; ++j) {
                m(i, j) = Complex(g(rng), g(rng));
                m(j, i) = std::conj(m(i, j));
            }
        }
        const EigenSystem es = hermitian_eigen(m);
        DenseMatrix lambda(n);
        for (int i = 0; i < n; ++i) lambda(i, i) = es.values[i];
        EXPECT_LT(max_abs_diff(es.vectors * lambda * es.vectors.adjoint(), m), 1e-8);
        EXPECT_LT(max_abs_diff(es.vectors.adjoint() * es.vectors, DenseMatrix::identity(n)), 1e-10);
        for (int i = 1; i < n; ++i) EXPECT_LE(es.values[i - 1], es.values[i]);
    }
}

TEST(HermitianEigen, RejectsNonHermitian) {
    DenseMatrix m(2);
    m(0, 1) = 1.0;
    try {
        hermitian_eigen(m);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::NotHermitian);
    }
}

}  // namespace
}  // namespace qctx
