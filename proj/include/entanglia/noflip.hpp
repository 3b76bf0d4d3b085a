#pragma once

#include <array>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "error.hpp"
#include "majorize.hpp"
#include "measures.hpp"
#include "numkernel.hpp"
#include "qstate.hpp"

namespace entanglia {

enum class GadgetVerdict { Incomparable, EntanglementIncreased, NoViolation };

inline const char* to_string(GadgetVerdict v) {
    switch (v) {
    case GadgetVerdict::Incomparable: return "Incomparable";
    case GadgetVerdict::EntanglementIncreased: return "EntanglementIncreased";
    case GadgetVerdict::NoViolation: return "NoViolation";
    }
    return "?";
}

struct GadgetResult {
    ProbVector initial_schmidt; // numeric, from the explicit 3x4 kets
    ProbVector final_schmidt;
    GadgetVerdict verdict = GadgetVerdict::NoViolation;
    double A = 0; // cubic coefficients x^3 - 3Ax + B of the initial reduced state
    double B = 0;
    double A_final = 0;
    double B_final = 0; // B' for the flip gadget
    double entropy_initial = 0;
    double entropy_final = 0;
    RealVec cardan_initial; // closed-form spectra
    RealVec cardan_final;
    double cardan_gap = 0; // max |closed form - numeric|
    std::string region;    // diagnostic only
};

// Three orthogonal branches' Bob kets → Alice's reduced state ρ_jk = ⟨B_k|B_j⟩/3.
inline CMatrix alice_state(const std::array<CVec, 3>& branches) {
    CVec psi;
    for (std::size_t j = 0; j < 3; ++j) {
        const CVec aj = basis_ket(3, j);
        const CVec t = kron(aj, branches[j]);
        if (psi.empty()) psi.assign(t.size(), 0.0);
        for (std::size_t i = 0; i < t.size(); ++i) psi[i] += t[i] / std::sqrt(3.0);
    }
    const double n = norm2(psi);
    if (std::abs(n - 1) > 1e-9) fail(ErrorKind::BadParam, "gadget ket not normalised");
    CMatrix rho = CMatrix::projector(psi).with_dims({3, branches[0].size()});
    return partial_trace(rho, {0});
}

struct CubicCoeffs {
    double A = 0, B = 0;
};

// ρ = (I + X)/3 with off-diagonals p (01), q (02), r (12) of X.
inline CubicCoeffs cubic_coeffs(const CMatrix& rhoA) {
    const Cx p = 3.0 * rhoA(0, 1), q = 3.0 * rhoA(0, 2), r = 3.0 * rhoA(1, 2);
    return {(std::norm(p) + std::norm(q) + std::norm(r)) / 3, 2 * std::real(p * r * std::conj(q))};
}

inline RealVec cardan_spectrum(double A, double B) {
    const auto y = cardan_roots(A, B);
    RealVec l{(1 - y[0]) / 3, (1 - y[1]) / 3, (1 - y[2]) / 3};
    std::sort(l.begin(), l.end(), std::greater<>());
    return l;
}

namespace detail {
inline RealVec clamp_spectrum(RealVec v) {
    double s = 0;
    for (auto& x : v) s += (x = std::max(x, 0.0));
    for (auto& x : v) x /= s;
    return v;
}

inline GadgetResult finish_gadget(const CMatrix& ri, const CMatrix& rf) {
    GadgetResult g;
    const RealVec si = clamp_spectrum(eigvals_hermitian(ri)), sf = clamp_spectrum(eigvals_hermitian(rf));
    g.initial_schmidt = ProbVector(si);
    g.final_schmidt = ProbVector(sf);
    const auto ci = cubic_coeffs(ri), cf = cubic_coeffs(rf);
    g.A = ci.A;
    g.B = ci.B;
    g.A_final = cf.A;
    g.B_final = cf.B;
    g.cardan_initial = cardan_spectrum(ci.A, ci.B);
    g.cardan_final = cardan_spectrum(cf.A, cf.B);
    for (std::size_t i = 0; i < 3; ++i)
        g.cardan_gap = std::max({g.cardan_gap, std::abs(g.cardan_initial[i] - si[i]), std::abs(g.cardan_final[i] - sf[i])});
    g.entropy_initial = shannon(si);
    g.entropy_final = shannon(sf);
    const auto v = compare(si, sf);
    if (v == MajVerdict::Incomparable)
        g.verdict = GadgetVerdict::Incomparable;
    else if (v != MajVerdict::Equal && g.entropy_final - g.entropy_initial > 1e-9)
        g.verdict = GadgetVerdict::EntanglementIncreased;
    else
        g.verdict = GadgetVerdict::NoViolation;
    return g;
}

inline void check_unit(double x, double y, const char* what) {
    if (std::abs(x * x + y * y - 1) > 1e-9) fail(ErrorKind::BadParam, std::string(what) + " must satisfy x^2 + y^2 = 1");
}

inline CVec qubit(Cx a, Cx b) { return {a, b}; }
} // namespace detail

// ── Flip gadget ───────────────────────────────────────────────────────

struct FlipInputs {
    CVec zero, psi, phi;         // |0>, a|0>+b|1>, c|0>+d e^{iθ}|1>
    CVec zero_f, psi_f, phi_f;   // flipped kets including phases μ, ν
};

inline FlipInputs flip_inputs(double a, double b, double c, double d, double theta, double mu, double nu) {
    detail::check_unit(a, b, "(a, b)");
    detail::check_unit(c, d, "(c, d)");
    if (theta < -1e-12 || theta > std::numbers::pi + 1e-12) fail(ErrorKind::BadParam, "theta must lie in [0, pi]");
    const Cx et = std::polar(1.0, theta);
    FlipInputs f;
    f.zero = detail::qubit(1, 0);
    f.psi = detail::qubit(a, b);
    f.phi = detail::qubit(c, d * et);
    f.zero_f = detail::qubit(0, 1);
    f.psi_f = detail::qubit(std::polar(b, mu), -std::polar(a, mu));
    f.phi_f = detail::qubit(std::polar(1.0, nu) * d * std::conj(et), -std::polar(c, nu));
    return f;
}

// B - B' = 4 a²b²c²d² sin²θ; zero iff |0>, |ψ>, |φ> lie on one great circle.
inline double coplanarity_gap(double a, double b, double c, double d, double theta) {
    const double s = std::sin(theta);
    return 4 * a * a * b * b * c * c * d * d * s * s;
}

// Paper closed forms for the flip gadget (A, B, B').
inline std::array<double, 3> flip_closed_form(double a, double b, double c, double d, double theta) {
    const Cx ov = a * c + b * d * std::polar(1.0, theta); // ⟨ψ|φ⟩
    const double o2 = std::norm(ov);
    const double A = (2 * a * a * c * c + o2 * o2) / 3;
    const double B = 2 * a * a * c * c * o2;
    const double Bp = 2 * a * a * c * c * std::real(std::conj(ov) * std::conj(ov)); // Re⟨φ|ψ⟩²
    return {A, B, Bp};
}

inline GadgetResult flip_gadget(double a, double b, double c, double d, double theta, double mu = 0, double nu = 0) {
    const auto f = flip_inputs(a, b, c, d, theta, mu, nu);
    const CMatrix ri = alice_state({kron(f.zero, f.zero), kron(f.psi, f.phi), kron(f.phi, f.psi)});
    const CMatrix rf = alice_state({kron(f.zero, f.zero_f), kron(f.psi, f.phi_f), kron(f.phi, f.psi_f)});
    GadgetResult g = detail::finish_gadget(ri, rf);
    const double gap = coplanarity_gap(a, b, c, d, theta);
    g.region = gap > 1e-12 ? (g.B_final < 0 ? "B'<0" : g.B_final > 0 ? "B'>0" : "B'=0") : "great-circle";
    return g;
}

// Canonical (a, b, c, d, θ) of three Bloch directions: n0 ↦ |0>, the first component real.
struct FlipParams {
    double a = 1, b = 0, c = 1, d = 0, theta = 0;
};

inline CVec bloch_ket(const std::array<double, 3>& n) {
    const double len = std::sqrt(n[0] * n[0] + n[1] * n[1] + n[2] * n[2]);
    if (std::abs(len - 1) > 1e-9) fail(ErrorKind::BadBloch, "pure-state Bloch vector must have unit length");
    const double th = std::acos(std::clamp(n[2] / len, -1.0, 1.0));
    const double ph = std::atan2(n[1], n[0]);
    return {std::cos(th / 2), std::polar(std::sin(th / 2), ph)};
}

inline FlipParams canonical_flip_params(const std::array<double, 3>& n0, const std::array<double, 3>& n1,
                                        const std::array<double, 3>& n2) {
    const CVec k0 = bloch_ket(n0);
    const CVec k0p{-std::conj(k0[1]), std::conj(k0[0])};
    auto rot = [&](const CVec& v) { return CVec{inner(k0, v), inner(k0p, v)}; };
    CVec v1 = rot(bloch_ket(n1)), v2 = rot(bloch_ket(n2));
    auto dephase0 = [](CVec& v) {
        if (std::abs(v[0]) > 1e-15) {
            const Cx ph = std::conj(v[0]) / std::abs(v[0]);
            v[0] *= ph;
            v[1] *= ph;
        }
    };
    dephase0(v1);
    dephase0(v2);
    // diag(1, e^{-iφ}) keeps |0> and makes v1[1] real
    const double phi1 = std::abs(v1[1]) > 1e-15 ? std::arg(v1[1]) : 0.0;
    v2[1] *= std::polar(1.0, -phi1);
    FlipParams p;
    p.a = v1[0].real();
    p.b = std::abs(v1[1]);
    p.c = v2[0].real();
    p.d = std::abs(v2[1]);
    p.theta = std::abs(v2[1]) > 1e-15 ? std::abs(std::arg(v2[1])) : 0.0;
    const double nb = std::hypot(p.a, p.b), nd = std::hypot(p.c, p.d);
    p.a /= nb;
    p.b /= nb;
    p.c /= nd;
    p.d /= nd;
    return p;
}

// ── Anti-unitary gadget Γ = C·U ──────────────────────────────────────

inline CMatrix general_unitary(double theta, double alpha, double beta) {
    const double ct = std::cos(theta), st = std::sin(theta);
    return CMatrix{{ct, std::polar(st, alpha)}, {-std::polar(st, beta), std::polar(ct, alpha + beta)}};
}

inline const std::array<CVec, 3>& axis_kets() {
    static const std::array<CVec, 3> k = {CVec{1, 0}, CVec{1 / std::sqrt(2.0), 1 / std::sqrt(2.0)},
                                          CVec{1 / std::sqrt(2.0), Cx(0, 1 / std::sqrt(2.0))}};
    return k; // |0z>, |0x>, |0y>
}

struct AntiUnitaryResult {
    GadgetResult gadget;
    double plain_unitary_shift = 0; // max |ρ_A(after U) - ρ_A(before)|
};

inline AntiUnitaryResult antiunitary_gadget(double theta, double alpha, double beta) {
    const CMatrix U = general_unitary(theta, alpha, beta);
    const auto& k = axis_kets();
    const CVec z = k[0], x = k[1], y = k[2];
    auto gamma = [&](const CVec& v) {
        CVec w = U.apply(v);
        for (auto& e : w) e = std::conj(e);
        return w;
    };
    const CMatrix ri = alice_state({kron(z, z), kron(x, y), kron(y, x)});
    const CMatrix rf = alice_state({kron(z, gamma(z)), kron(x, gamma(y)), kron(y, gamma(x))});
    const CMatrix ru = alice_state({kron(z, U.apply(z)), kron(x, U.apply(y)), kron(y, U.apply(x))});
    AntiUnitaryResult r{detail::finish_gadget(ri, rf), ri.max_abs_diff(ru)};
    r.gadget.region = "anti-unitary";
    return r;
}

// ── Angle-preserving gadget: |0_k> ↦ α|0_k> + β|1_k> on the three axes ──

inline GadgetResult angle_preserving_gadget(Cx alpha, Cx beta) {
    if (std::abs(std::norm(alpha) + std::norm(beta) - 1) > 1e-9) fail(ErrorKind::BadParam, "|alpha|^2 + |beta|^2 must be 1");
    const double s = 1 / std::sqrt(2.0);
    const CVec z0{1, 0}, z1{0, 1}, x0{s, s}, x1{s, -s}, y0{s, Cx(0, s)}, y1{s, Cx(0, -s)};
    auto mix = [&](const CVec& u, const CVec& v) { return CVec{alpha * u[0] + beta * v[0], alpha * u[1] + beta * v[1]}; };
    const CMatrix ri = alice_state({kron(z0, z0), kron(x0, x0), kron(y0, y0)});
    const CMatrix rf = alice_state({kron(z0, mix(z0, z1)), kron(x0, mix(x0, x1)), kron(y0, mix(y0, y1))});
    GadgetResult g = detail::finish_gadget(ri, rf);
    const double A = g.A_final, B = g.B_final;
    const char* sign = B < -1e-12 ? "B<0" : B > 1e-12 ? "B>0" : "B=0";
    const char* size = A < 0.25 - 1e-12 ? "A<1/4" : A > 0.25 + 1e-12 ? "A>1/4" : "A=1/4";
    g.region = std::string(sign) + "," + size;
    return g;
}

// Paper closed forms p, q, r and the real-parameter A, B.
inline std::array<Cx, 3> angle_pqr(Cx al, Cx be) {
    const Cx i(0, 1);
    const Cx p = 0.5 * (std::norm(al) - std::norm(be) + al * std::conj(be) + be * std::conj(al));
    const Cx q = 0.5 * (std::norm(al) + i * std::norm(be) + al * std::conj(be) - i * be * std::conj(al));
    const Cx r = 0.5 * (al * std::conj(be) + be * std::conj(al) - i);
    return {p, q, r};
}

inline std::array<double, 2> angle_real_AB(double al, double be) {
    const double A = 0.25 + (2 * al * al * be * be + 3 * al * be * (al * al - be * be)) / 6;
    const double B = be / 4 * (al * al - be * be + 2 * al * be) * (al * (2 * al * al + 1) + be * (al * al - be * be));
    return {A, B};
}

// ── Mixed-qubit flip ──────────────────────────────────────────────────

struct MixedFlipReport {
    std::array<double, 3> direction{};
    std::array<double, 3> bloch_psi{}; // ρ_B1 for Ψ
    std::array<double, 3> bloch_phi{};
    double deviation = 0; // max |bloch - (±0.02 n)|
    MajVerdict verdict = MajVerdict::Equal;
};

// Bob's basis |0>=|ψψ>, |1>=|ψ̄ψ>, |2>=|ψ̄ψ̄>; reduce Σ √λ_i |i>_A|i>_B to the first Bob qubit.
inline MixedFlipReport mixed_flip_demo(std::array<double, 3> n = {0, 0, 1}, const ProbVector& lpsi = {.51, .30, .19},
                                       const ProbVector& lphi = {.49, .36, .15}) {
    const double len = std::sqrt(n[0] * n[0] + n[1] * n[1] + n[2] * n[2]);
    if (len < 1e-12) fail(ErrorKind::BadBloch, "direction must be nonzero");
    for (auto& x : n) x /= len;
    const CVec k = bloch_ket(n);
    const CVec kb{-std::conj(k[1]), std::conj(k[0])};
    const std::array<CVec, 3> bob = {kron(k, k), kron(kb, k), kron(kb, kb)};
    auto reduce = [&](const ProbVector& lam) {
        const RealVec l = lam.sorted();
        CVec psi(12, 0.0);
        for (std::size_t i = 0; i < 3; ++i) {
            const CVec t = kron(basis_ket(3, i), bob[i]);
            for (std::size_t j = 0; j < 12; ++j) psi[j] += std::sqrt(l[i]) * t[j];
        }
        const CMatrix rho = CMatrix::projector(psi).with_dims({3, 2, 2});
        return qubit_to_bloch(partial_trace(rho, {1}));
    };
    MixedFlipReport r;
    r.direction = n;
    r.bloch_psi = reduce(lpsi);
    r.bloch_phi = reduce(lphi);
    for (std::size_t i = 0; i < 3; ++i)
        r.deviation = std::max({r.deviation, std::abs(r.bloch_psi[i] - 0.02 * n[i]), std::abs(r.bloch_phi[i] + 0.02 * n[i])});
    r.verdict = compare(lpsi, lphi);
    return r;
}

} // namespace entanglia
