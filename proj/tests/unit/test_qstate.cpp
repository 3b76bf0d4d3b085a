#include <gtest/gtest.h>

#include <cmath>

#include "entanglia/measures.hpp"
#include "entanglia/noflip.hpp"
#include "entanglia/qstate.hpp"
#include "entanglia/witness.hpp"

using namespace entanglia;

TEST(PureState, Validation) {
    EXPECT_THROW(PureState(CVec{1, 1}, {2}), Error);
    try {
        PureState(CVec{1, 0, 0, 0}, {2, 3});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::BadDims);
    }
}

TEST(Schmidt, BellIsMaximallyEntangled) {
    const auto sd = schmidt(bell(Bell::PhiPlus), {0});
    EXPECT_NEAR(sd.coefficients[0], .5, 1e-12);
    EXPECT_NEAR(sd.coefficients[1], .5, 1e-12);
    EXPECT_EQ(sd.rank, 2u);
}

TEST(Schmidt, ProductHasRankOne) {
    Rng rng(1);
    const PureState a = random_pure(Dims{2}, rng), b = random_pure(Dims{3}, rng);
    const auto sd = schmidt(kron(a, b), {0});
    EXPECT_NEAR(sd.coefficients[0], 1, 1e-12);
    EXPECT_EQ(sd.rank, 1u);
}

// |Ω> = (|0>|00> + |1>|ψφ> + |2>|φψ>)/√3 at the coordinate axes
TEST(Schmidt, FlipGadgetInitialState) {
    const double s = 1 / std::sqrt(2.0);
    const CVec z{1, 0}, x{s, s}, y{s, Cx(0, s)};
    const std::array<CVec, 3> br = {kron(z, z), kron(x, y), kron(y, x)};
    CVec amp(12, 0.0);
    for (std::size_t j = 0; j < 3; ++j) {
        const CVec t = kron(basis_ket(3, j), br[j]);
        for (std::size_t i = 0; i < 12; ++i) amp[i] += t[i];
    }
    const auto sd = schmidt(PureState::from_unnormalized(amp, {3, 4}), {0});
    const RealVec c = sd.coefficients.sorted();
    EXPECT_NEAR(c[0], 2. / 3, 1e-12);
    EXPECT_NEAR(c[1], 1. / 6, 1e-12);
    EXPECT_NEAR(c[2], 1. / 6, 1e-12);
}

TEST(Schmidt, ReconstructionAndSymmetry) {
    Rng rng(2);
    for (int t = 0; t < 20; ++t) {
        const PureState psi = random_pure(Dims{2, 3, 2}, rng);
        for (const IndexSet& split : {IndexSet{0}, IndexSet{1}, IndexSet{0, 2}}) {
            const auto sd = schmidt(psi, split);
            double sum = 0;
            for (double l : sd.coefficients.values()) sum += l;
            EXPECT_NEAR(sum, 1, 1e-9);
            const CVec rec = sd.reconstruct();
            EXPECT_NEAR(std::abs(inner(rec, psi.amplitudes())), 1, 1e-8);

            IndexSet comp;
            for (std::size_t k = 0; k < 3; ++k)
                if (std::find(split.begin(), split.end(), k) == split.end()) comp.push_back(k);
            const RealVec a = sd.coefficients.sorted(), b = schmidt(psi, comp).coefficients.sorted();
            for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i) EXPECT_NEAR(a[i], b[i], 1e-9);
        }
    }
}

TEST(Schmidt, BothMarginalSpectraAgree) {
    Rng rng(3);
    const CMatrix rho = random_pure(Dims{3, 4}, rng).density();
    const RealVec a = eigvals_hermitian(partial_trace(rho, {0})), b = eigvals_hermitian(partial_trace(rho, {1}));
    for (std::size_t i = 0; i < 3; ++i) EXPECT_NEAR(a[i], b[i], 1e-9);
    EXPECT_NEAR(b[3], 0, 1e-9);
}

TEST(Schmidt, BadSplit) {
    try {
        schmidt(bell(Bell::PhiPlus), {0, 1});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::BadSplit);
    }
}

TEST(Schmidt, RandomThreeByThreeHasFullRank) {
    for (std::uint64_t seed = 0; seed < 100; ++seed)
        EXPECT_EQ(schmidt(random_pure(Dims{3, 3}, seed), {0}).rank, 3u) << seed;
}

TEST(Bell, Basics) {
    EXPECT_NEAR(std::abs(inner(bell(Bell::PhiPlus).amplitudes(), bell(Bell::PhiMinus).amplitudes())), 0, 1e-15);
    EXPECT_NEAR(entanglement_entropy(bell(Bell::PhiPlus), {0}), 1, 1e-12);
    const CVec flipped = kron(CMatrix::identity(2), pauli::X()).apply(bell(Bell::PhiPlus).amplitudes());
    const CVec want = bell(Bell::PsiPlus).amplitudes();
    for (std::size_t i = 0; i < 4; ++i) EXPECT_NEAR(std::abs(flipped[i] - want[i]), 0, 1e-15);
}

TEST(Werner, Spectrum) {
    for (double p : {0.0, 0.2, 0.5, 0.9, 1.0}) {
        const RealVec v = eigvals_hermitian(werner(p));
        EXPECT_NEAR(v[0], std::max((1 + 3 * p) / 4, (1 - p) / 4), 1e-12);
        EXPECT_NEAR(v[3], std::min((1 + 3 * p) / 4, (1 - p) / 4), 1e-12);
    }
}

TEST(Werner, Endpoints) {
    EXPECT_LT(werner(0).max_abs_diff(CMatrix::identity(4) * Cx(.25)), 1e-15);
    EXPECT_TRUE(is_ppt(werner(0), {1}));
    EXPECT_LT(werner(1).max_abs_diff(bell(Bell::PsiMinus).density()), 1e-15);
    EXPECT_FALSE(is_ppt(werner(1), {1}));
    EXPECT_FALSE(is_ppt(werner(0.4), {1}));
    EXPECT_THROW(werner(1.5), Error);
}

TEST(Bloch, RoundTrip) {
    EXPECT_LT(bloch_to_qubit({0, 0, 1}).max_abs_diff(CMatrix::projector(basis_ket(2, 0))), 1e-15);
    EXPECT_LT(bloch_to_qubit({0, 0, 0}).max_abs_diff(CMatrix::identity(2) * Cx(.5)), 1e-15);
    const auto n = qubit_to_bloch(bloch_to_qubit({.3, -.2, .5}));
    EXPECT_NEAR(n[0], .3, 1e-15);
    EXPECT_NEAR(n[1], -.2, 1e-15);
    EXPECT_NEAR(n[2], .5, 1e-15);
    try {
        bloch_to_qubit({1, 1, 0});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::BadBloch);
    }
}

TEST(Bloch, MixedFlipMagnitude) {
    const auto r = mixed_flip_demo();
    EXPECT_NEAR(r.bloch_psi[2], .02, 1e-12);
    EXPECT_NEAR(r.bloch_phi[2], -.02, 1e-12);
}

TEST(RandomPure, Deterministic) {
    const PureState a = random_pure(5, 42), b = random_pure(5, 42);
    EXPECT_EQ(a.amplitudes(), b.amplitudes());
    EXPECT_NEAR(norm2(a.amplitudes()), 1, 1e-12);
}

TEST(RequireDensity, RejectsNonDensity) {
    try {
        require_density(CMatrix::diag({.7, .7}));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::NotDensity);
    }
}
