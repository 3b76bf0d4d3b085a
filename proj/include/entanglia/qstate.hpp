#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "error.hpp"
#include "majorize.hpp"
#include "numkernel.hpp"

namespace entanglia {

using Rng = std::mt19937_64;

inline constexpr double NORM_TOL = 1e-9;
inline constexpr double SCHMIDT_RANK_TOL = 1e-10;

class PureState {
public:
    PureState() = default;
    PureState(CVec amp, Dims dims) : amp_(std::move(amp)), dims_(std::move(dims)) {
        if (product(dims_) != amp_.size()) fail(ErrorKind::BadDims, "dims product must equal amplitude count");
        const double n = norm2(amp_);
        if (std::abs(n - 1.0) > NORM_TOL) fail(ErrorKind::BadParam, "state norm is " + std::to_string(n));
    }
    // Normalises first; for building states from unnormalised kets.
    static PureState from_unnormalized(const CVec& amp, Dims dims) { return PureState(normalized(amp), std::move(dims)); }

    const CVec& amplitudes() const noexcept { return amp_; }
    const Dims& dims() const noexcept { return dims_; }
    std::size_t size() const noexcept { return amp_.size(); }
    Cx operator[](std::size_t i) const { return amp_[i]; }

    CMatrix density() const { return CMatrix::projector(amp_).with_dims(dims_); }

private:
    CVec amp_;
    Dims dims_;
};

inline PureState kron(const PureState& a, const PureState& b) {
    Dims d = a.dims();
    d.insert(d.end(), b.dims().begin(), b.dims().end());
    return PureState(kron(a.amplitudes(), b.amplitudes()), std::move(d));
}

// Largest-magnitude amplitude made real-positive.
inline CVec canonical_phase(CVec v) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < v.size(); ++i)
        if (std::abs(v[i]) > std::abs(v[best]) + 1e-12) best = i;
    if (v.empty() || std::abs(v[best]) == 0) return v;
    const Cx ph = std::conj(v[best]) / std::abs(v[best]);
    for (auto& z : v) z *= ph;
    return v;
}

inline CVec basis_ket(std::size_t dim, std::size_t i) {
    CVec v(dim, 0.0);
    v[i] = 1.0;
    return v;
}

// "0110" -> computational basis ket on qubits
inline CVec bits_ket(std::string_view bits) {
    std::size_t idx = 0;
    for (char c : bits) {
        if (c != '0' && c != '1') fail(ErrorKind::BadParam, "bit string must contain only 0 and 1");
        idx = idx * 2 + static_cast<std::size_t>(c - '0');
    }
    return basis_ket(std::size_t{1} << bits.size(), idx);
}

// Reorders ket factors: new factor k is old factor perm[k].
inline CVec permute_ket(const CVec& v, const Dims& dims, const IndexSet& perm) {
    Dims nd(perm.size());
    for (std::size_t k = 0; k < perm.size(); ++k) nd[k] = dims[perm[k]];
    const Dims ost = detail::strides_of(dims), nst = detail::strides_of(nd);
    CVec out(v.size());
    for (std::size_t x = 0; x < v.size(); ++x) {
        std::size_t y = 0;
        for (std::size_t k = 0; k < perm.size(); ++k) y += ((x / ost[perm[k]]) % dims[perm[k]]) * nst[k];
        out[y] = v[x];
    }
    return out;
}

// Gram-Schmidt completion of orthonormal columns to `target` columns.
inline std::vector<CVec> complete_orthonormal(std::vector<CVec> cols, std::size_t dim, std::size_t target) {
    for (std::size_t b = 0; cols.size() < target && b < dim; ++b) {
        CVec u = basis_ket(dim, b);
        for (int pass = 0; pass < 2; ++pass)
            for (const auto& w : cols) {
                const Cx ov = inner(w, u);
                for (std::size_t i = 0; i < dim; ++i) u[i] -= ov * w[i];
            }
        const double nu = norm2(u);
        if (nu < 1e-6) continue;
        for (auto& z : u) z /= nu;
        cols.push_back(std::move(u));
    }
    return cols;
}

inline CMatrix columns_to_matrix(const std::vector<CVec>& cols, std::size_t rows) {
    CMatrix m(rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j)
        for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
    return m;
}

// ── Schmidt decomposition ─────────────────────────────────────────────

struct SchmidtDecomposition {
    ProbVector coefficients; // squared Schmidt coefficients, descending
    CMatrix left_basis;      // columns on the split side
    CMatrix right_basis;     // columns on the complement
    std::size_t rank = 0;
    IndexSet order; // subsystem order used: split first, then complement
    Dims dims;      // original dims

    // Σ √λ_i |i_A>|i'_B>, returned in the original subsystem order.
    CVec reconstruct() const {
        const std::size_t dA = left_basis.rows(), dB = right_basis.rows();
        CVec v(dA * dB, 0.0);
        for (std::size_t i = 0; i < coefficients.size(); ++i) {
            const double s = std::sqrt(coefficients[i]);
            if (s == 0) continue;
            for (std::size_t a = 0; a < dA; ++a)
                for (std::size_t b = 0; b < dB; ++b) v[a * dB + b] += s * left_basis(a, i) * right_basis(b, i);
        }
        Dims pd(order.size());
        for (std::size_t k = 0; k < order.size(); ++k) pd[k] = dims[order[k]];
        IndexSet inv(order.size());
        for (std::size_t k = 0; k < order.size(); ++k) inv[order[k]] = k;
        return permute_ket(v, pd, inv);
    }
};

namespace detail {
inline IndexSet split_order(const Dims& dims, const IndexSet& split) {
    if (split.empty() || split.size() >= dims.size())
        fail(ErrorKind::BadSplit, "split must be a nonempty proper subset of subsystems");
    for (auto k : split)
        if (k >= dims.size()) fail(ErrorKind::BadSplit, "split index out of range");
    IndexSet s = split;
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end()) fail(ErrorKind::BadSplit, "split index repeated");
    IndexSet order = s;
    for (std::size_t k = 0; k < dims.size(); ++k)
        if (!std::binary_search(s.begin(), s.end(), k)) order.push_back(k);
    return order;
}
} // namespace detail

inline SchmidtDecomposition schmidt(const PureState& psi, const IndexSet& split) {
    const Dims& dims = psi.dims();
    const IndexSet order = detail::split_order(dims, split);
    std::size_t dA = 1;
    for (std::size_t k = 0; k < split.size(); ++k) dA *= dims[order[k]];
    const std::size_t dB = psi.size() / dA;
    const CVec v = permute_ket(psi.amplitudes(), dims, order);
    auto M = [&](std::size_t a, std::size_t b) { return v[a * dB + b]; };

    const bool left_small = dA <= dB;
    const std::size_t ds = left_small ? dA : dB;
    CMatrix red(ds, ds);
    for (std::size_t i = 0; i < ds; ++i)
        for (std::size_t j = 0; j < ds; ++j) {
            Cx s = 0;
            if (left_small)
                for (std::size_t b = 0; b < dB; ++b) s += M(i, b) * std::conj(M(j, b));
            else
                for (std::size_t a = 0; a < dA; ++a) s += M(a, i) * std::conj(M(a, j));
            red(i, j) = s;
        }
    const auto e = eig_hermitian(red);

    RealVec lam(ds);
    std::size_t rank = 0;
    for (std::size_t i = 0; i < ds; ++i) {
        lam[i] = std::max(e.values[i], 0.0);
        if (lam[i] > SCHMIDT_RANK_TOL) ++rank;
    }
    double total = 0;
    for (double x : lam) total += x;
    for (auto& x : lam) x /= total;

    std::vector<CVec> small, big;
    for (std::size_t i = 0; i < ds; ++i) small.push_back(column(e.vectors, i));
    const std::size_t dl = left_small ? dB : dA;
    for (std::size_t i = 0; i < rank; ++i) {
        CVec w(dl, 0.0);
        const double s = std::sqrt(lam[i]);
        for (std::size_t x = 0; x < dl; ++x) {
            Cx acc = 0;
            if (left_small)
                for (std::size_t a = 0; a < dA; ++a) acc += std::conj(small[i][a]) * M(a, x);
            else
                for (std::size_t b = 0; b < dB; ++b) acc += M(x, b) * std::conj(small[i][b]);
            w[x] = acc / s;
        }
        big.push_back(std::move(w));
    }
    big = complete_orthonormal(std::move(big), dl, ds);

    SchmidtDecomposition sd{ProbVector(lam), {}, {}, rank, order, dims};
    if (left_small) {
        sd.left_basis = columns_to_matrix(small, dA);
        sd.right_basis = columns_to_matrix(big, dB);
    } else {
        sd.left_basis = columns_to_matrix(big, dA);
        sd.right_basis = columns_to_matrix(small, dB);
    }
    return sd;
}

// √λ-weighted bipartite state with computational Schmidt bases, |ψ> = Σ √λ_i |ii>
inline PureState schmidt_state(const ProbVector& lambda) {
    const std::size_t d = lambda.size();
    CVec v(d * d, 0.0);
    const auto s = lambda.sorted();
    for (std::size_t i = 0; i < d; ++i) v[i * d + i] = std::sqrt(s[i]);
    return PureState::from_unnormalized(v, {d, d});
}

// ── Named states ──────────────────────────────────────────────────────

enum class Bell { PhiPlus, PhiMinus, PsiPlus, PsiMinus };

inline const char* to_string(Bell b) {
    switch (b) {
    case Bell::PhiPlus: return "Phi+";
    case Bell::PhiMinus: return "Phi-";
    case Bell::PsiPlus: return "Psi+";
    case Bell::PsiMinus: return "Psi-";
    }
    return "?";
}

inline PureState bell(Bell kind) {
    const double s = 1 / std::sqrt(2.0);
    switch (kind) {
    case Bell::PhiPlus: return PureState({s, 0, 0, s}, {2, 2});
    case Bell::PhiMinus: return PureState({s, 0, 0, -s}, {2, 2});
    case Bell::PsiPlus: return PureState({0, s, s, 0}, {2, 2});
    case Bell::PsiMinus: return PureState({0, s, -s, 0}, {2, 2});
    }
    return {};
}

inline PureState max_entangled(std::size_t d) {
    CVec v(d * d, 0.0);
    for (std::size_t i = 0; i < d; ++i) v[i * d + i] = 1 / std::sqrt(static_cast<double>(d));
    return PureState(v, {d, d});
}

inline CMatrix werner(double p) {
    if (!(p >= 0 && p <= 1)) fail(ErrorKind::BadParam, "werner weight must be in [0,1]");
    CMatrix r = p * bell(Bell::PsiMinus).density() + ((1 - p) / 4) * CMatrix::identity(4);
    r.set_dims({2, 2});
    return r;
}

inline CMatrix bloch_to_qubit(const std::array<double, 3>& n) {
    const double len = std::sqrt(n[0] * n[0] + n[1] * n[1] + n[2] * n[2]);
    if (len > 1 + 1e-9) fail(ErrorKind::BadBloch, "Bloch vector longer than 1");
    CMatrix r = 0.5 * (pauli::I() + n[0] * pauli::X() + n[1] * pauli::Y() + n[2] * pauli::Z());
    return r;
}

inline std::array<double, 3> qubit_to_bloch(const CMatrix& rho) {
    if (rho.rows() != 2 || rho.cols() != 2) fail(ErrorKind::BadDims, "expected a 2x2 density matrix");
    return {(rho * pauli::X()).trace().real(), (rho * pauli::Y()).trace().real(), (rho * pauli::Z()).trace().real()};
}

// ── Validity ──────────────────────────────────────────────────────────

inline void require_density(const CMatrix& rho, const char* what = "input") {
    if (!rho.square()) fail(ErrorKind::NotDensity, std::string(what) + " is not square");
    if (!rho.is_hermitian()) fail(ErrorKind::NotDensity, std::string(what) + " is not hermitian");
    const double tr = rho.trace().real();
    if (std::abs(tr - 1) > 1e-9) fail(ErrorKind::NotDensity, std::string(what) + " has trace " + std::to_string(tr));
    const double lo = min_eigenvalue(rho);
    if (lo < -PSD_CLAMP)
        fail(ErrorKind::NotDensity, std::string(what) + " has eigenvalue " + std::to_string(lo));
}

inline bool is_density(const CMatrix& rho) {
    try {
        require_density(rho);
        return true;
    } catch (const Error&) {
        return false;
    }
}

// ── Random objects (seeded) ───────────────────────────────────────────

inline CVec gaussian_vector(std::size_t n, Rng& rng) {
    std::normal_distribution<double> g(0.0, 1.0);
    CVec v(n);
    for (auto& z : v) {
        const double re = g(rng);
        const double im = g(rng);
        z = Cx(re, im);
    }
    return v;
}

inline PureState random_pure(const Dims& dims, Rng& rng) {
    return PureState::from_unnormalized(gaussian_vector(product(dims), rng), dims);
}

inline PureState random_pure(std::size_t dim, std::uint64_t seed) {
    Rng rng(seed);
    return random_pure(Dims{dim}, rng);
}

inline PureState random_pure(const Dims& dims, std::uint64_t seed) {
    Rng rng(seed);
    return random_pure(dims, rng);
}

// Ginibre ensemble G G† / Tr, of the given rank.
inline CMatrix random_density(const Dims& dims, Rng& rng, std::size_t rank = 0) {
    const std::size_t n = product(dims);
    if (rank == 0) rank = n;
    CMatrix g(n, rank, gaussian_vector(n * rank, rng));
    CMatrix r = g * g.adjoint();
    r /= r.trace().real();
    r.set_dims(dims);
    return r;
}

inline CMatrix random_unitary(std::size_t n, Rng& rng) {
    std::vector<CVec> cols;
    while (cols.size() < n) {
        CVec u = gaussian_vector(n, rng);
        for (int pass = 0; pass < 2; ++pass)
            for (const auto& w : cols) {
                const Cx ov = inner(w, u);
                for (std::size_t i = 0; i < n; ++i) u[i] -= ov * w[i];
            }
        const double nu = norm2(u);
        if (nu < 1e-8) continue;
        for (auto& z : u) z /= nu;
        cols.push_back(std::move(u));
    }
    return columns_to_matrix(cols, n);
}

inline CMatrix random_hermitian(std::size_t n, Rng& rng) {
    CMatrix g(n, n, gaussian_vector(n * n, rng));
    return 0.5 * (g + g.adjoint());
}

// Uniform on the simplex.
inline ProbVector random_prob(std::size_t d, Rng& rng) {
    std::exponential_distribution<double> ex(1.0);
    RealVec v(d);
    double s = 0;
    for (auto& x : v) s += (x = ex(rng));
    for (auto& x : v) x /= s;
    return ProbVector(v);
}

} // namespace entanglia
