#include <gtest/gtest.h>

#include "entanglia/io.hpp"

using namespace entanglia;

TEST(Io, MatrixRoundTripIsExact) {
    Rng rng(1);
    const CMatrix rho = random_density({2, 3}, rng);
    const CMatrix back = matrix_from_text(matrix_to_text(rho));
    EXPECT_EQ(back.max_abs_diff(rho), 0.0);
    EXPECT_EQ(*back.dims(), (Dims{2, 3}));
}

TEST(Io, StateRoundTripIsExact) {
    const PureState psi = random_pure(Dims{2, 2}, 3);
    const PureState back = state_from_text(state_to_text(psi));
    EXPECT_EQ(back.amplitudes(), psi.amplitudes());
}

TEST(Io, DensityFromEitherDocument) {
    const CMatrix a = density_from_text(state_to_text(bell(Bell::PsiMinus)));
    EXPECT_LT(a.max_abs_diff(bell(Bell::PsiMinus).density()), 1e-15);
    const CMatrix b = density_from_text(R"({"dims":[2],"re":[[0.5,0],[0,0.5]]})");
    EXPECT_LT(b.max_abs_diff(CMatrix::identity(2) * Cx(.5)), 1e-15);
}

TEST(Io, Errors) {
    try {
        matrix_from_text(R"({"dims":[3],"re":[[1,0],[0,1]]})");
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::BadDims);
    }
    try {
        matrix_from_text("{not json");
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::BadFormat);
    }
    try {
        state_from_text(R"({"amp":[[1,0]]})");
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::MissingDims);
    }
}

TEST(Io, ParseVector) {
    EXPECT_EQ(parse_vector(".4,.4,.2"), (RealVec{.4, .4, .2}));
    EXPECT_EQ(parse_vector("0.5, 0.5"), (RealVec{.5, .5}));
    EXPECT_THROW(parse_vector("1,,2"), Error);
    EXPECT_THROW(parse_vector("a"), Error);
}

TEST(Io, SeventeenDigits) {
    EXPECT_EQ(fmt17(0.1), "0.10000000000000001");
}
