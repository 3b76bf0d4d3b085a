#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "entanglia/noflip.hpp"

using namespace entanglia;

namespace {
constexpr double kPi = std::numbers::pi;
const double kS = 1 / std::sqrt(2.0);

std::array<double, 3> random_unit(Rng& rng) {
    std::normal_distribution<double> g;
    std::array<double, 3> v{g(rng), g(rng), g(rng)};
    const double n = std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
    for (auto& x : v) x /= n;
    return v;
}
} // namespace

TEST(Flip, CoordinateAxes) {
    const auto g = flip_gadget(kS, kS, kS, kS, kPi / 2);
    const RealVec i = g.initial_schmidt.sorted(), f = g.final_schmidt.sorted();
    EXPECT_NEAR(i[0], 2. / 3, 1e-9);
    EXPECT_NEAR(i[1], 1. / 6, 1e-9);
    EXPECT_NEAR(i[2], 1. / 6, 1e-9);
    const double h = 1 / (2 * std::sqrt(3.0));
    EXPECT_NEAR(f[0], 1. / 3 + h, 1e-9);
    EXPECT_NEAR(f[1], 1. / 3, 1e-9);
    EXPECT_NEAR(f[2], 1. / 3 - h, 1e-9);
    EXPECT_EQ(g.verdict, GadgetVerdict::Incomparable);
    EXPECT_LT(g.cardan_gap, 1e-8);
    EXPECT_NEAR(g.A, .25, 1e-12);
    EXPECT_NEAR(g.B, .25, 1e-12);
    EXPECT_NEAR(g.B_final, 0, 1e-12);
}

TEST(Flip, ClosedFormMatchesNumeric) {
    Rng rng(1);
    std::uniform_real_distribution<double> u(0, 1);
    for (int t = 0; t < 50; ++t) {
        const double ta = u(rng) * kPi / 2, tc = u(rng) * kPi / 2, th = u(rng) * kPi;
        const double a = std::cos(ta), b = std::sin(ta), c = std::cos(tc), d = std::sin(tc);
        const auto g = flip_gadget(a, b, c, d, th);
        const auto cf = flip_closed_form(a, b, c, d, th);
        EXPECT_NEAR(g.A, cf[0], 1e-9);
        EXPECT_NEAR(g.B, cf[1], 1e-9);
        EXPECT_NEAR(g.B_final, cf[2], 1e-9);
        EXPECT_NEAR(g.B - g.B_final, coplanarity_gap(a, b, c, d, th), 1e-9);
        EXPECT_LT(g.cardan_gap, 1e-8);
    }
}

TEST(Flip, CoplanarIsHarmless) {
    const auto g = flip_gadget(.6, .8, kS, kS, 0);
    EXPECT_NEAR(g.B, g.B_final, 1e-12);
    EXPECT_EQ(g.verdict, GadgetVerdict::NoViolation);
    const RealVec i = g.initial_schmidt.sorted(), f = g.final_schmidt.sorted();
    for (std::size_t k = 0; k < 3; ++k) EXPECT_NEAR(i[k], f[k], 1e-9);
}

TEST(Flip, PhasesDoNotMatter) {
    Rng rng(2);
    std::uniform_real_distribution<double> u(0, 1);
    for (int t = 0; t < 30; ++t) {
        const double ta = u(rng) * kPi / 2, tc = u(rng) * kPi / 2, th = u(rng) * kPi;
        const double a = std::cos(ta), b = std::sin(ta), c = std::cos(tc), d = std::sin(tc);
        const auto g0 = flip_gadget(a, b, c, d, th);
        const auto g1 = flip_gadget(a, b, c, d, th, u(rng) * 6, u(rng) * 6);
        EXPECT_EQ(g0.verdict, g1.verdict);
        const RealVec f0 = g0.final_schmidt.sorted(), f1 = g1.final_schmidt.sorted();
        for (std::size_t k = 0; k < 3; ++k) EXPECT_NEAR(f0[k], f1[k], 1e-9);
    }
}

TEST(Flip, BadParam) {
    EXPECT_THROW(flip_gadget(.5, .5, kS, kS, 1), Error);
    EXPECT_THROW(flip_gadget(kS, kS, kS, kS, 4), Error);
}

TEST(CoplanarityGap, Values) {
    EXPECT_NEAR(coplanarity_gap(kS, kS, kS, kS, kPi), 0, 1e-15);
    EXPECT_NEAR(coplanarity_gap(0, 1, kS, kS, 1), 0, 1e-15);
    EXPECT_NEAR(coplanarity_gap(kS, kS, kS, kS, kPi / 2), .25, 1e-15);
}

TEST(Flip, GreatCircleDichotomy) {
    Rng rng(3);
    std::uniform_real_distribution<double> u(0, 2 * kPi);
    for (int t = 0; t < 100; ++t) {
        // coplanar: three points on a random great circle
        const auto e1 = random_unit(rng);
        auto e2 = random_unit(rng);
        const double dp = e1[0] * e2[0] + e1[1] * e2[1] + e1[2] * e2[2];
        for (int k = 0; k < 3; ++k) e2[k] -= dp * e1[k];
        const double n2 = std::sqrt(e2[0] * e2[0] + e2[1] * e2[1] + e2[2] * e2[2]);
        for (auto& x : e2) x /= n2;
        std::array<std::array<double, 3>, 3> pts;
        for (auto& p : pts) {
            const double ang = u(rng);
            for (int k = 0; k < 3; ++k) p[k] = std::cos(ang) * e1[k] + std::sin(ang) * e2[k];
        }
        const auto cp = canonical_flip_params(pts[0], pts[1], pts[2]);
        EXPECT_EQ(flip_gadget(cp.a, cp.b, cp.c, cp.d, cp.theta).verdict, GadgetVerdict::NoViolation) << t;

        const auto rp = canonical_flip_params(random_unit(rng), random_unit(rng), random_unit(rng));
        EXPECT_EQ(flip_gadget(rp.a, rp.b, rp.c, rp.d, rp.theta).verdict, GadgetVerdict::Incomparable) << t;
    }
}

TEST(AntiUnitary, ParameterIndependence) {
    const auto ref = antiunitary_gadget(kPi / 2, 0, 0);
    const auto plain = antiunitary_gadget(0, 0, 0);
    const RealVec r = ref.gadget.final_schmidt.sorted(), p = plain.gadget.final_schmidt.sorted();
    for (std::size_t k = 0; k < 3; ++k) EXPECT_NEAR(r[k], p[k], 1e-9);
    EXPECT_EQ(ref.gadget.verdict, GadgetVerdict::Incomparable);
    Rng rng(4);
    std::uniform_real_distribution<double> u(0, 2 * kPi);
    for (int t = 0; t < 20; ++t) {
        const auto g = antiunitary_gadget(u(rng), u(rng), u(rng));
        const RealVec f = g.gadget.final_schmidt.sorted();
        for (std::size_t k = 0; k < 3; ++k) EXPECT_NEAR(f[k], r[k], 1e-9);
        EXPECT_LT(g.plain_unitary_shift, 1e-9);
    }
}

TEST(Angle, AnchorPoints) {
    const auto flip = angle_preserving_gadget(0, 1);
    EXPECT_NEAR(flip.A_final, .25, 1e-12);
    EXPECT_NEAR(flip.B_final, .25, 1e-12);
    EXPECT_EQ(flip.verdict, GadgetVerdict::Incomparable);
    EXPECT_EQ(angle_preserving_gadget(kS, kS).verdict, GadgetVerdict::Incomparable);
    const auto id = angle_preserving_gadget(1, 0);
    EXPECT_EQ(id.verdict, GadgetVerdict::NoViolation);
    EXPECT_NEAR(id.A_final, .25, 1e-12);
    EXPECT_NEAR(id.B_final, 0, 1e-12);
    const RealVec i = id.initial_schmidt.sorted(), f = id.final_schmidt.sorted();
    for (std::size_t k = 0; k < 3; ++k) EXPECT_NEAR(i[k], f[k], 1e-9);
    EXPECT_THROW(angle_preserving_gadget(1, 1), Error);
}

TEST(Angle, ClosedFormsAgreeWithConstruction) {
    Rng rng(5);
    std::uniform_real_distribution<double> u(0, 2 * kPi);
    for (int t = 0; t < 40; ++t) {
        const double th = u(rng), ph1 = u(rng), ph2 = u(rng);
        const Cx al = std::polar(std::cos(th), ph1), be = std::polar(std::sin(th), ph2);
        const auto g = angle_preserving_gadget(al, be);
        const auto pqr = angle_pqr(al, be);
        const double A = (std::norm(pqr[0]) + std::norm(pqr[1]) + std::norm(pqr[2])) / 3;
        const double B = 2 * std::real(pqr[0] * pqr[2] * std::conj(pqr[1]));
        EXPECT_NEAR(g.A_final, A, 1e-9);
        EXPECT_NEAR(g.B_final, B, 1e-9);
        const auto real_ab = angle_real_AB(std::cos(th), std::sin(th));
        const auto gr = angle_preserving_gadget(std::cos(th), std::sin(th));
        EXPECT_NEAR(gr.A_final, real_ab[0], 1e-9);
        EXPECT_NEAR(gr.B_final, real_ab[1], 1e-9);
    }
}

TEST(MixedFlip, Directions) {
    const auto z = mixed_flip_demo();
    EXPECT_LT(z.deviation, 1e-9);
    EXPECT_EQ(z.verdict, MajVerdict::Incomparable);
    const auto x = mixed_flip_demo({1, 0, 0});
    EXPECT_NEAR(x.bloch_psi[0], .02, 1e-9);
    EXPECT_NEAR(x.bloch_phi[0], -.02, 1e-9);
    EXPECT_LT(x.deviation, 1e-9);
}
