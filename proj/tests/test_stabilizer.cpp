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
#include <array>
#include <map>
#include <set>

#include "qctx/error.hpp"
#include "qctx/stabilizer.hpp"

namespace qctx {
namespace {

double overlap(const DenseMatrix &a, const DenseMatrix &b) { return trace_of_product(a, b).real(); }

TEST(StabilizerState, RejectsBadGenerators) {
    PrimeDim d(3);
    const std::vector<SymplecticPauli> anticommuting{SymplecticPauli({1, 0}, {0, 0}), SymplecticPauli({0, 0}, {1, 0})};
    const std::vector<SymplecticPauli> dependent{SymplecticPauli({1, 0}, {0, 0}), SymplecticPauli({2, 0}, {0, 0})};
    const std::vector<SymplecticPauli> too_few{SymplecticPauli({1, 0}, {0, 0})};
    for (const auto &gens : {anticommuting, dependent, too_few}) {
        try {
            StabilizerState::from_generators(d, gens);
            FAIL();
        } catch (const Error &e) {
            EXPECT_EQ(e.code(), ErrorCode::ShapeMismatch);
        }
    }
    // i X on a qubit squares to -I.
    const std::vector<SymplecticPauli> imaginary{single_pauli(1, 0, PrimeDim(2), 1)};
    EXPECT_THROW(StabilizerState::from_generators(PrimeDim(2), imaginary), Error);
}

TEST(StabilizerState, SingleQuditMatchesEigenprojector) {
    for (int p : {2, 3, 5}) {
        PrimeDim d(p);
        for (const auto &op : mub_operators(d)) {
            for (int k = 0; k < p; ++k) {
                const auto s = single_qudit_eigenstate(op, k, d);
                EXPECT_LT(max_abs_diff(s.projector(), eigenprojector(op, k, d).matrix), 1e-10);
                EXPECT_EQ(s.label(), projector_label(op, k));
            }
        }
    }
}

TEST(Families, SizesMatchCountingFormulas) {
    const std::map<int, std::array<std::size_t, 3>> table{{2, {36, 24, 60}}, {3, {144, 216, 360}}, {5, {900, 3000, 3900}}};
    for (const auto &[p, sizes] : table) {
        PrimeDim d(p);
        EXPECT_EQ(enumerate_single(d).states.size(), static_cast<std::size_t>(p * (p + 1)));
        const FamilyKind kinds[] = {FamilyKind::separable, FamilyKind::entangled, FamilyKind::total};
        for (int i = 0; i < 3; ++i) {
            const auto fam = enumerate_two_qudit(d, kinds[i]);
            EXPECT_EQ(fam.states.size(), sizes[i]);
            EXPECT_EQ(expected_family_size(d, kinds[i]), sizes[i]);
            std::set<StabilizerState> unique(fam.states.begin(), fam.states.end());
            EXPECT_EQ(unique.size(), sizes[i]);
        }
    }
}

TEST(Families, EntangledDisjointFromSeparable) {
    for (int p : {2, 3}) {
        PrimeDim d(p);
        const auto sep = enumerate_two_qudit(d, FamilyKind::separable);
        const auto ent = enumerate_two_qudit(d, FamilyKind::entangled);
        const std::set<StabilizerState> s(sep.states.begin(), sep.states.end());
        for (const auto &e : ent.states) EXPECT_FALSE(s.count(e));
        // Entangled states have maximally mixed marginals: no generator is a local operator.
        for (const auto &e : ent.states) {
            for (const auto &el : e.elements()) {
                const auto pa = pauli_from_index(el.vector, 2, d);
                const bool first = pa.x[0] || pa.z[0], second = pa.x[1] || pa.z[1];
                EXPECT_EQ(first, second);
            }
        }
    }
}

TEST(Families, CapEnforced) {
    try {
        enumerate_two_qudit(PrimeDim(11), FamilyKind::separable);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::BudgetExceeded);
    }
}

TEST(Families, MutuallyUnbiasedSingleQuditBases) {
    for (int p : {2, 3, 5}) {
        PrimeDim d(p);
        const auto fam = enumerate_single(d);
        for (std::size_t i = 0; i < fam.states.size(); ++i) {
            for (std::size_t j = 0; j < fam.states.size(); ++j) {
                const std::size_t a = i / p, b = j / p;
                const double expected = a == b ? (i == j ? 1.0 : 0.0) : 1.0 / p;
                EXPECT_NEAR(overlap(fam.states[i].projector(), fam.states[j].projector()), expected, 1e-10);
            }
        }
    }
}

TEST(Orthogonality, Examples) {
    PrimeDim d(3);
    const auto phi = jamiolkowski_stabilizer(CliffordElement{}, d);
    const auto shifted = jamiolkowski_stabilizer({SL2Zd::identity(), {1, 0}}, d);
    EXPECT_FALSE(is_orthogonal(phi, phi));
    EXPECT_TRUE(is_orthogonal(phi, shifted));
    EXPECT_NEAR(overlap(phi.projector(), shifted.projector()), 0.0, 1e-10);
    const auto single = enumerate_single(d);
    EXPECT_TRUE(is_orthogonal(single.states[0], single.states[1]));
    EXPECT_THROW(is_orthogonal(single.states[0], phi), Error);
}

TEST(Orthogonality, ExactAgreesWithDenseOnTotalFamily) {
    for (int p : {2, 3}) {
        PrimeDim d(p);
        const auto fam = enumerate_two_qudit(d, FamilyKind::total);
        std::vector<DenseMatrix> proj;
        for (const auto &s : fam.states) proj.push_back(s.projector());
        for (std::size_t i = 0; i < proj.size(); ++i) {
            EXPECT_NEAR(proj[i].trace().real(), 1.0, 1e-10);
            for (std::size_t j = 0; j < proj.size(); ++j) {
                const double ov = overlap(proj[i], proj[j]);
                ASSERT_EQ(is_orthogonal(fam.states[i], fam.states[j]), ov < 1e-10) << i << " " << j;
                // Equal canonical generators iff equal projectors.
                ASSERT_EQ(fam.states[i] == fam.states[j], max_abs_diff(proj[i], proj[j]) < 1e-10);
            }
        }
    }
}

TEST(Orthogonality, JamiolkowskiProjectorsMatchDenseVectors) {
    for (int p : {2, 3}) {
        PrimeDim d(p);
        for (const auto &c : enumerate_clifford(d)) {
            const auto v = jamiolkowski_state(c, d).vector;
            EXPECT_LT(max_abs_diff(jamiolkowski_stabilizer(c, d).projector(), DenseMatrix::outer(v)), 1e-10);
        }
    }
}

TEST(Orthogonality, SeparableOverlapValues) {
    for (int p : {2, 3}) {
        PrimeDim d(p);
        const auto fam = enumerate_two_qudit(d, FamilyKind::separable);
        const std::vector<double> allowed{0.0, 1.0 / (p * p), 1.0 / p, 1.0};
        for (std::size_t i = 0; i < fam.states.size(); i += 7) {
            const DenseMatrix pi = fam.states[i].projector();
            for (const auto &t : fam.states) {
                const double ov = overlap(pi, t.projector());
                bool found = false;
                for (double a : allowed) found = found || std::abs(ov - a) < 1e-10;
                EXPECT_TRUE(found) << ov;
            }
        }
    }
}

TEST(BasisPartition, GroupsAreOrthonormalBases) {
    for (int p : {2, 3, 5}) {
        PrimeDim d(p);
        const std::map<FamilyKind, std::size_t> expected{
            {FamilyKind::separable, static_cast<std::size_t>((p + 1) * (p + 1))},
            {FamilyKind::entangled, static_cast<std::size_t>(p * (p * p - 1))},
            {FamilyKind::total, static_cast<std::size_t>((p * p + 1) * (p + 1))}};
        for (const auto &[kind, count] : expected) {
            const auto fam = enumerate_two_qudit(d, kind);
            const auto groups = basis_partition(fam);
            EXPECT_EQ(groups.size(), count);
            for (const auto &g : groups) {
                ASSERT_EQ(g.size(), static_cast<std::size_t>(p * p));
                for (std::size_t a = 0; a < g.size(); ++a)
                    for (std::size_t b = a + 1; b < g.size(); ++b)
                        ASSERT_TRUE(is_orthogonal(fam.states[g[a]], fam.states[g[b]]));
            }
        }
    }
}

TEST(WeylOrigin, OnePerLagrangianAndPairwiseNonOrthogonal) {
    for (int p : {3, 5}) {
        PrimeDim d(p);
        for (auto kind : {FamilyKind::separable, FamilyKind::entangled, FamilyKind::total}) {
            const auto fam = enumerate_two_qudit(d, kind);
            const auto origin = weyl_origin_states(fam);
            EXPECT_EQ(origin.size(), basis_partition(fam).size());
            for (std::size_t a = 0; a < origin.size(); ++a)
                for (std::size_t b = a + 1; b < origin.size(); ++b)
                    ASSERT_FALSE(is_orthogonal(fam.states[origin[a]], fam.states[origin[b]]));
        }
    }
    EXPECT_THROW(weyl_origin_states(enumerate_single(PrimeDim(2))), Error);
}

TEST(Families, ParseNames) {
    EXPECT_EQ(parse_family("sep"), FamilyKind::separable);
    EXPECT_EQ(parse_family("tot"), FamilyKind::total);
    EXPECT_EQ(family_name(FamilyKind::entangled), "ent");
    EXPECT_THROW(parse_family("mixed"), Error);
}

}  // namespace
}  // namespace qctx
