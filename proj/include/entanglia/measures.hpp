#pragma once

#include <cmath>
#include <limits>
#include <vector>

#include "error.hpp"
#include "majorize.hpp"
#include "numkernel.hpp"
#include "qstate.hpp"

namespace entanglia {

// Entanglement in bits (log base 2).
struct Ebits {
    double value = 0;
    operator double() const noexcept { return value; }
};

inline double xlog2x(double x) { return x > 0 ? x * std::log2(x) : 0.0; }

inline double shannon(std::span<const double> p) {
    double h = 0;
    for (double x : p) h -= xlog2x(std::max(x, 0.0));
    return std::max(h, 0.0);
}

inline double binary_entropy(double x) {
    if (!(x >= 0 && x <= 1)) fail(ErrorKind::BadParam, "binary entropy argument must be in [0,1]");
    return -xlog2x(x) - xlog2x(1 - x);
}

inline double relative_entropy_classical(std::span<const double> p, std::span<const double> q) {
    if (p.size() != q.size()) fail(ErrorKind::BadDims, "distributions differ in length");
    double d = 0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] <= 0) continue;
        if (q[i] <= 0) return std::numeric_limits<double>::infinity();
        d += p[i] * std::log2(p[i] / q[i]);
    }
    return std::max(d, 0.0);
}

// joint[x][y] probabilities
inline double mutual_information(const std::vector<RealVec>& joint) {
    if (joint.empty()) fail(ErrorKind::BadDistribution, "empty joint table");
    const std::size_t nx = joint.size(), ny = joint[0].size();
    RealVec px(nx, 0.0), py(ny, 0.0), flat;
    double total = 0;
    for (std::size_t i = 0; i < nx; ++i) {
        if (joint[i].size() != ny) fail(ErrorKind::BadDistribution, "ragged joint table");
        for (std::size_t j = 0; j < ny; ++j) {
            const double v = joint[i][j];
            if (v < -NEG_CLAMP) fail(ErrorKind::BadDistribution, "negative joint probability");
            px[i] += v;
            py[j] += v;
            flat.push_back(v);
            total += v;
        }
    }
    if (std::abs(total - 1) > MAJ_TOL) fail(ErrorKind::BadDistribution, "joint table does not sum to 1");
    return std::max(shannon(px) + shannon(py) - shannon(flat), 0.0);
}

// Eigenvalues of a density matrix with PSD noise clamped away.
inline RealVec density_spectrum(const CMatrix& rho) {
    require_density(rho);
    RealVec v = eigvals_hermitian(rho);
    for (auto& x : v) x = std::max(x, 0.0);
    return v;
}

inline double von_neumann_entropy(const CMatrix& rho) { return shannon(density_spectrum(rho)); }

inline Ebits entanglement_entropy(const PureState& psi, const IndexSet& split) {
    return {shannon(schmidt(psi, split).coefficients)};
}

inline double concurrence_pure(const PureState& psi, const IndexSet& split) {
    const auto sd = schmidt(psi, split);
    double purity = 0;
    for (double l : sd.coefficients.values()) purity += l * l;
    return std::sqrt(std::max(0.0, 2 * (1 - purity)));
}

namespace detail {
inline void require_two_qubits(const CMatrix& rho) {
    if (rho.rows() != 4 || rho.cols() != 4) fail(ErrorKind::BadDims, "expected a 4x4 two-qubit matrix");
    if (rho.has_dims() && *rho.dims() != Dims{2, 2}) fail(ErrorKind::BadDims, "expected dims [2,2]");
}
} // namespace detail

// Wootters concurrence.
inline double concurrence_2q(const CMatrix& rho) {
    detail::require_two_qubits(rho);
    require_density(rho);
    // ρ = W W†, so ρρ̃ has the spectrum of τ τ† with τ = Wᵀ (Y⊗Y) W.
    // Working on the numerical support avoids √ε noise from null directions.
    const auto e = eig_hermitian(rho);
    std::vector<std::size_t> keep;
    for (std::size_t k = 0; k < 4; ++k)
        if (e.values[k] > 1e-14) keep.push_back(k);
    const std::size_t r = keep.size();
    CMatrix w(4, r);
    for (std::size_t j = 0; j < r; ++j)
        for (std::size_t i = 0; i < 4; ++i) w(i, j) = std::sqrt(e.values[keep[j]]) * e.vectors(i, keep[j]);
    const CMatrix tau = w.transpose() * kron(pauli::Y(), pauli::Y()) * w;
    CMatrix tt = tau * tau.adjoint();
    tt = 0.5 * (tt + tt.adjoint());
    RealVec ev = r ? eigvals_hermitian(tt) : RealVec{};
    RealVec l(4, 0.0);
    for (std::size_t i = 0; i < r; ++i) l[i] = std::sqrt(std::max(ev[i], 0.0));
    return std::clamp(l[0] - l[1] - l[2] - l[3], 0.0, 1.0);
}

inline Ebits eof_from_concurrence(double c) {
    c = std::clamp(c, 0.0, 1.0);
    return {binary_entropy((1 + std::sqrt(1 - c * c)) / 2)};
}

inline Ebits eof_2q(const CMatrix& rho) { return eof_from_concurrence(concurrence_2q(rho)); }

inline double negativity(const CMatrix& rho, const IndexSet& cut) {
    return std::max(0.0, (trace_norm(partial_transpose(rho, cut)) - 1) / 2);
}

inline double log_negativity(const CMatrix& rho, const IndexSet& cut) {
    return std::max(0.0, std::log2(trace_norm(partial_transpose(rho, cut))));
}

} // namespace entanglia
