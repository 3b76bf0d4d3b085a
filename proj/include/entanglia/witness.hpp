#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <vector>

#include "error.hpp"
#include "numkernel.hpp"
#include "qstate.hpp"

namespace entanglia {

inline constexpr double PPT_TOL = 1e-9;
inline constexpr double DISTILL_TOL = 1e-9;
inline constexpr std::size_t DISTILL_MAX_DIM = 4096;

struct PptResult {
    bool ppt = true;
    double min_eigenvalue = 0;
};

inline PptResult ppt_test(const CMatrix& rho, const IndexSet& cut) {
    const double m = min_eigenvalue(partial_transpose(rho, cut));
    return {m >= -PPT_TOL, m};
}

inline bool is_ppt(const CMatrix& rho, const IndexSet& cut) { return ppt_test(rho, cut).ppt; }

// Horodecki M: sum of the two largest eigenvalues of T^T T, T_ij = Tr ρ σ_i⊗σ_j.
inline double chsh_M(const CMatrix& rho) {
    if (rho.rows() != 4 || rho.cols() != 4) fail(ErrorKind::BadDims, "CHSH needs a two-qubit matrix");
    const CMatrix s[3] = {pauli::X(), pauli::Y(), pauli::Z()};
    CMatrix T(3, 3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) T(i, j) = (rho * kron(s[i], s[j])).trace().real();
    const RealVec ev = eigvals_hermitian(T.transpose() * T);
    return ev[0] + ev[1];
}

namespace detail {
// Reorders factors so that `cut` comes first; returns the reordered matrix and the two block sizes.
inline CMatrix cut_first(const CMatrix& rho, const IndexSet& cut, std::size_t& dA, std::size_t& dB) {
    const Dims& dims = rho.require_dims();
    check_subset(cut, dims.size(), false);
    if (cut.size() >= dims.size()) fail(ErrorKind::BadSubset, "cut must leave a complement");
    IndexSet s = cut;
    std::sort(s.begin(), s.end());
    IndexSet perm = s;
    for (std::size_t k = 0; k < dims.size(); ++k)
        if (!std::binary_search(s.begin(), s.end(), k)) perm.push_back(k);
    dA = 1;
    for (auto k : s) dA *= dims[k];
    dB = rho.rows() / dA;
    return permute_subsystems(rho, perm);
}
} // namespace detail

inline bool reduction_check(const CMatrix& rho, const IndexSet& cut) {
    std::size_t dA = 0, dB = 0;
    CMatrix r = detail::cut_first(rho, cut, dA, dB);
    r.set_dims({dA, dB});
    const CMatrix rA = partial_trace(r, {0}), rB = partial_trace(r, {1});
    const CMatrix m1 = kron(CMatrix::identity(dA), rB) - r;
    const CMatrix m2 = kron(rA, CMatrix::identity(dB)) - r;
    return min_eigenvalue(m1) < -PPT_TOL || min_eigenvalue(m2) < -PPT_TOL;
}

// ── Maximal entangled fraction ────────────────────────────────────────

inline constexpr int FMAX_RESTARTS = 16;
inline constexpr int FMAX_ITERS = 50;

struct FmaxResult {
    double value = 0;       // lower bound on F_max
    bool lower_bound = true; // seesaw, not a certificate of optimality
    bool entangled = false;  // value > 1/d
    int restarts = 0;
    std::uint64_t seed = 0;
};

// max over (U⊗I)|Φ_d⟩ of ⟨Ψ|ρ|Ψ⟩. (U⊗I)|Φ_d⟩ has amplitude U_ab/√d at |ab⟩.
inline FmaxResult max_entangled_fraction(const CMatrix& rho, std::size_t d, std::uint64_t seed,
                                         int restarts = FMAX_RESTARTS, int iters = FMAX_ITERS) {
    rho.require_dims();
    if (rho.rows() != d * d) fail(ErrorKind::BadDims, "expected a d x d bipartite state");
    auto value = [&](const CMatrix& U) {
        CVec v(U.data());
        for (auto& z : v) z /= std::sqrt(static_cast<double>(d));
        return expectation(rho, v).real();
    };
    auto grad = [&](const CMatrix& U) {
        CMatrix L(d, d, rho.apply(U.data()));
        return L;
    };
    Rng rng(seed);
    FmaxResult res{-1, true, false, restarts, seed};
    for (int r = 0; r < restarts; ++r) {
        CMatrix U = r == 0 ? CMatrix::identity(d) : random_unitary(d, rng);
        double f = value(U);
        for (int it = 0; it < iters; ++it) {
            const CMatrix G = grad(U);
            if (G.max_abs() < 1e-300) break;
            U = polar_unitary(G);
            const double nf = value(U);
            const bool done = std::abs(nf - f) <= 1e-10 * std::max(1.0, std::abs(f));
            f = nf;
            if (done) break;
        }
        res.value = std::max(res.value, f);
    }
    res.entangled = res.value > 1.0 / static_cast<double>(d) + 1e-9;
    return res;
}

// ── Schmidt-rank-2 distillability seesaw ──────────────────────────────

struct DistillResult {
    bool found = false; // false means inconclusive, never "undistillable"
    double value = 0;
    PureState witness; // dims {dA^k, dB^k}: all A copies first, then all B copies
    int copies = 1;
};

namespace detail {
// Orthonormal basis (≤ 2 columns) for the column space of a dim×2 coefficient matrix.
inline CMatrix two_frame(const CVec& x, std::size_t dim, Rng& rng, bool left) {
    // x indexed as (a, j) with a∈dim, j∈{0,1} when left, else (j, b)
    CMatrix X(dim, 2);
    for (std::size_t a = 0; a < dim; ++a)
        for (std::size_t j = 0; j < 2; ++j) X(a, j) = left ? x[a * 2 + j] : x[j * dim + a];
    std::vector<CVec> cols;
    const auto e = eig_hermitian(X * X.adjoint());
    for (std::size_t k = 0; k < 2 && k < dim; ++k)
        if (e.values[k] > 1e-14) cols.push_back(column(e.vectors, k));
    while (cols.size() < std::min<std::size_t>(2, dim)) {
        CVec u = gaussian_vector(dim, rng);
        for (const auto& w : cols) {
            const Cx ov = inner(w, u);
            for (std::size_t i = 0; i < dim; ++i) u[i] -= ov * w[i];
        }
        cols.push_back(normalized(u));
    }
    return columns_to_matrix(cols, dim);
}
} // namespace detail

inline DistillResult distillable_rank2(const CMatrix& rho, const IndexSet& cut, int copies = 1, std::uint64_t seed = 1,
                                       int restarts = 8, int iters = 60) {
    if (copies < 1) fail(ErrorKind::BadParam, "copies must be at least 1");
    std::size_t dA = 0, dB = 0;
    CMatrix r = detail::cut_first(rho, cut, dA, dB);
    if (dA < 2 || dB < 2) fail(ErrorKind::BadSubset, "both sides of the cut need dimension at least 2");
    r.set_dims({dA, dB});
    std::size_t total = 1;
    for (int c = 0; c < copies; ++c) {
        total *= rho.rows();
        if (total > DISTILL_MAX_DIM) fail(ErrorKind::TooLarge, "dimension^copies exceeds 4096");
    }
    const CMatrix pt = partial_transpose(r, {0});
    CMatrix W = pt;
    for (int c = 1; c < copies; ++c) W = kron(W, pt);
    std::size_t DA = 1, DB = 1;
    for (int c = 0; c < copies; ++c) {
        DA *= dA;
        DB *= dB;
    }
    if (copies > 1) {
        Dims fd;
        for (int c = 0; c < copies; ++c) {
            fd.push_back(dA);
            fd.push_back(dB);
        }
        W.set_dims(fd);
        IndexSet perm;
        for (int c = 0; c < copies; ++c) perm.push_back(2 * static_cast<std::size_t>(c));
        for (int c = 0; c < copies; ++c) perm.push_back(2 * static_cast<std::size_t>(c) + 1);
        W = permute_subsystems(W, perm);
    }
    W.clear_dims();

    Rng rng(seed);
    double best = INFINITY;
    CVec best_vec;
    // restrict W to (span U) ⊗ (span V) side by side
    auto restrict_right = [&](const CMatrix& V) { // C^DA ⊗ span V
        const CMatrix E = kron(CMatrix::identity(DA), V);
        return E.adjoint() * W * E;
    };
    auto restrict_left = [&](const CMatrix& U) {
        const CMatrix E = kron(U, CMatrix::identity(DB));
        return E.adjoint() * W * E;
    };
    for (int rs = 0; rs < restarts; ++rs) {
        CMatrix V;
        {
            std::vector<CVec> cols;
            while (cols.size() < 2) {
                CVec u = gaussian_vector(DB, rng);
                for (const auto& w : cols) {
                    const Cx ov = inner(w, u);
                    for (std::size_t i = 0; i < DB; ++i) u[i] -= ov * w[i];
                }
                cols.push_back(normalized(u));
            }
            V = columns_to_matrix(cols, DB);
        }
        CMatrix U;
        double val = INFINITY;
        CVec vec;
        for (int it = 0; it < iters; ++it) {
            {
                const auto e = eig_hermitian(restrict_right(V));
                const CVec x = column(e.vectors, e.values.size() - 1); // (a, j)
                U = detail::two_frame(x, DA, rng, true);
            }
            const auto e = eig_hermitian(restrict_left(U));
            const double nv = e.values.back();
            const CVec y = column(e.vectors, e.values.size() - 1); // (j, b)
            V = detail::two_frame(y, DB, rng, false);
            vec = kron(U, CMatrix::identity(DB)).apply(y);
            const bool done = std::abs(nv - val) < 1e-13;
            val = nv;
            if (done) break;
        }
        if (val < best) {
            best = val;
            best_vec = vec;
        }
    }
    DistillResult out;
    out.found = best < -DISTILL_TOL;
    out.value = best;
    out.witness = PureState::from_unnormalized(canonical_phase(best_vec), {DA, DB});
    out.copies = copies;
    return out;
}

// ── Aggregate report ──────────────────────────────────────────────────

struct WitnessReport {
    bool ppt = true;
    double min_pt_eigenvalue = 0;
    std::optional<double> chsh_M;
    bool reduction_violated = false;
    std::optional<FmaxResult> fmax;
    std::optional<DistillResult> distillable_rank2;
    bool entangled = false; // any criterion fired
    std::uint64_t seed = 0;
};

inline WitnessReport witness_report(const CMatrix& rho, const IndexSet& cut, std::uint64_t seed) {
    require_density(rho);
    const Dims& dims = rho.require_dims();
    WitnessReport w;
    w.seed = seed;
    const auto p = ppt_test(rho, cut);
    w.ppt = p.ppt;
    w.min_pt_eigenvalue = p.min_eigenvalue;
    if (dims == Dims{2, 2}) w.chsh_M = chsh_M(rho);
    w.reduction_violated = reduction_check(rho, cut);
    if (dims.size() == 2 && dims[0] == dims[1]) w.fmax = max_entangled_fraction(rho, dims[0], seed);
    if (rho.rows() <= 64) w.distillable_rank2 = distillable_rank2(rho, cut, 1, seed);
    w.entangled = !w.ppt || w.reduction_violated || (w.chsh_M && *w.chsh_M > 1 + 1e-9) || (w.fmax && w.fmax->entangled);
    return w;
}

} // namespace entanglia
