#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <numbers>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "error.hpp"

namespace entanglia {

using Cx = std::complex<double>;
using CVec = std::vector<Cx>;
using RealVec = std::vector<double>;
using Dims = std::vector<std::size_t>;
using IndexSet = std::vector<std::size_t>;

// ── Tolerances ────────────────────────────────────────────────────────

inline constexpr double HERM_TOL = 1e-9;
inline constexpr double RESID_TOL = 1e-9;
inline constexpr double PSD_CLAMP = 1e-9;
inline constexpr double JACOBI_OFF_TOL = 1e-12;
inline constexpr int JACOBI_MAX_SWEEPS = 100;

inline std::size_t product(const Dims& d) {
    return std::accumulate(d.begin(), d.end(), std::size_t{1}, std::multiplies<>());
}

// ── CMatrix ───────────────────────────────────────────────────────────

class CMatrix {
public:
    CMatrix() = default;
    CMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    CMatrix(std::size_t rows, std::size_t cols, CVec data) : rows_(rows), cols_(cols), data_(std::move(data)) {
        if (data_.size() != rows_ * cols_) fail(ErrorKind::BadDims, "entry count does not match shape");
    }
    CMatrix(std::initializer_list<std::initializer_list<Cx>> rows) {
        rows_ = rows.size();
        cols_ = rows_ ? rows.begin()->size() : 0;
        data_.reserve(rows_ * cols_);
        for (const auto& r : rows) {
            if (r.size() != cols_) fail(ErrorKind::BadDims, "ragged initializer");
            data_.insert(data_.end(), r.begin(), r.end());
        }
    }

    static CMatrix zeros(std::size_t r, std::size_t c) { return CMatrix(r, c); }
    static CMatrix identity(std::size_t n) {
        CMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }
    static CMatrix diag(const RealVec& d) {
        CMatrix m(d.size(), d.size());
        for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
        return m;
    }
    // |u><v|
    static CMatrix outer(const CVec& u, const CVec& v) {
        CMatrix m(u.size(), v.size());
        for (std::size_t i = 0; i < u.size(); ++i)
            for (std::size_t j = 0; j < v.size(); ++j) m(i, j) = u[i] * std::conj(v[j]);
        return m;
    }
    static CMatrix projector(const CVec& v) { return outer(v, v); }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool square() const noexcept { return rows_ == cols_; }
    const CVec& data() const noexcept { return data_; }
    CVec& data() noexcept { return data_; }

    Cx& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Cx& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    const std::optional<Dims>& dims() const noexcept { return dims_; }
    bool has_dims() const noexcept { return dims_.has_value(); }
    const Dims& require_dims() const {
        if (!dims_) fail(ErrorKind::MissingDims, "matrix has no subsystem dimensions");
        return *dims_;
    }
    CMatrix with_dims(Dims d) const {
        CMatrix m = *this;
        m.set_dims(std::move(d));
        return m;
    }
    void set_dims(Dims d) {
        if (!square() || product(d) != rows_) fail(ErrorKind::BadDims, "dims product must equal matrix size");
        dims_ = std::move(d);
    }
    void clear_dims() { dims_.reset(); }

    CMatrix adjoint() const {
        CMatrix m(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) m(j, i) = std::conj((*this)(i, j));
        m.dims_ = dims_;
        return m;
    }
    CMatrix transpose() const {
        CMatrix m(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j);
        m.dims_ = dims_;
        return m;
    }
    CMatrix conj() const {
        CMatrix m = *this;
        for (auto& z : m.data_) z = std::conj(z);
        return m;
    }
    Cx trace() const {
        Cx t = 0;
        for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
        return t;
    }
    RealVec diagonal_real() const {
        RealVec d(std::min(rows_, cols_));
        for (std::size_t i = 0; i < d.size(); ++i) d[i] = (*this)(i, i).real();
        return d;
    }
    double frobenius() const {
        double s = 0;
        for (const auto& z : data_) s += std::norm(z);
        return std::sqrt(s);
    }
    double max_abs() const {
        double m = 0;
        for (const auto& z : data_) m = std::max(m, std::abs(z));
        return m;
    }
    double hermiticity_defect() const {
        if (!square()) return INFINITY;
        double m = 0;
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = i; j < cols_; ++j)
                m = std::max(m, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
        return m;
    }
    bool is_hermitian(double tol = HERM_TOL) const { return hermiticity_defect() <= tol; }

    CVec apply(const CVec& v) const {
        if (v.size() != cols_) fail(ErrorKind::BadDims, "vector length does not match matrix columns");
        CVec out(rows_);
        for (std::size_t i = 0; i < rows_; ++i) {
            Cx s = 0;
            for (std::size_t j = 0; j < cols_; ++j) s += (*this)(i, j) * v[j];
            out[i] = s;
        }
        return out;
    }

    CMatrix& operator+=(const CMatrix& o) {
        check_same_shape(o);
        for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
        return *this;
    }
    CMatrix& operator-=(const CMatrix& o) {
        check_same_shape(o);
        for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
        return *this;
    }
    CMatrix& operator*=(Cx s) {
        for (auto& z : data_) z *= s;
        return *this;
    }
    CMatrix& operator/=(Cx s) {
        for (auto& z : data_) z /= s;
        return *this;
    }

    friend CMatrix operator+(CMatrix a, const CMatrix& b) { return a += b; }
    friend CMatrix operator-(CMatrix a, const CMatrix& b) { return a -= b; }
    friend CMatrix operator*(CMatrix a, Cx s) { return a *= s; }
    friend CMatrix operator*(Cx s, CMatrix a) { return a *= s; }
    friend CMatrix operator/(CMatrix a, Cx s) { return a /= s; }
    friend CMatrix operator*(const CMatrix& a, const CMatrix& b) {
        if (a.cols_ != b.rows_) fail(ErrorKind::BadDims, "matmul shape mismatch");
        CMatrix m(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const Cx aik = a(i, k);
                if (aik == Cx{}) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) m(i, j) += aik * b(k, j);
            }
        if (a.dims_ && b.dims_ && *a.dims_ == *b.dims_) m.dims_ = a.dims_;
        return m;
    }

    double max_abs_diff(const CMatrix& o) const {
        check_same_shape(o);
        double m = 0;
        for (std::size_t k = 0; k < data_.size(); ++k) m = std::max(m, std::abs(data_[k] - o.data_[k]));
        return m;
    }

private:
    void check_same_shape(const CMatrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) fail(ErrorKind::BadDims, "shape mismatch");
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    CVec data_;
    std::optional<Dims> dims_;
};

inline Cx inner(const CVec& a, const CVec& b) {
    Cx s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += std::conj(a[i]) * b[i];
    return s;
}

inline double norm2(const CVec& a) { return std::sqrt(std::real(inner(a, a))); }

inline CVec normalized(CVec v) {
    const double n = norm2(v);
    for (auto& z : v) z /= n;
    return v;
}

// <v|M|v>
inline Cx expectation(const CMatrix& m, const CVec& v) { return inner(v, m.apply(v)); }

// ── Tensor structure ──────────────────────────────────────────────────

inline CMatrix kron(const CMatrix& a, const CMatrix& b) {
    CMatrix m(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const Cx aij = a(i, j);
            if (aij == Cx{}) continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l) m(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
        }
    if (a.has_dims() && b.has_dims()) {
        Dims d = *a.dims();
        d.insert(d.end(), b.dims()->begin(), b.dims()->end());
        m.set_dims(std::move(d));
    }
    return m;
}

inline CVec kron(const CVec& a, const CVec& b) {
    CVec out(a.size() * b.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i * b.size() + j] = a[i] * b[j];
    return out;
}

namespace detail {

inline Dims strides_of(const Dims& dims) {
    Dims s(dims.size(), 1);
    for (std::size_t k = dims.size(); k-- > 1;) s[k - 1] = s[k] * dims[k];
    return s;
}

inline void check_subset(const IndexSet& set, std::size_t n, bool allow_empty) {
    if (set.empty() && !allow_empty) fail(ErrorKind::BadSubset, "subsystem set is empty");
    std::vector<bool> seen(n, false);
    for (auto k : set) {
        if (k >= n) fail(ErrorKind::BadSubset, "subsystem index " + std::to_string(k) + " out of range");
        if (seen[k]) fail(ErrorKind::BadSubset, "subsystem index repeated");
        seen[k] = true;
    }
}

// Splits each full index into the part living on `sel` and the rest, both as full-space offsets.
inline void split_offsets(const Dims& dims, const IndexSet& sel, std::vector<std::size_t>& on,
                          std::vector<std::size_t>& off) {
    const std::size_t n = product(dims);
    const Dims st = strides_of(dims);
    std::vector<bool> in(dims.size(), false);
    for (auto k : sel) in[k] = true;
    on.assign(n, 0);
    off.assign(n, 0);
    for (std::size_t x = 0; x < n; ++x) {
        std::size_t rem = x;
        for (std::size_t k = 0; k < dims.size(); ++k) {
            const std::size_t digit = rem / st[k];
            rem %= st[k];
            (in[k] ? on[x] : off[x]) += digit * st[k];
        }
    }
}

// Compact index of x restricted to the subsystems in `sel` (kept in ascending order).
inline std::vector<std::size_t> compact_index(const Dims& dims, const IndexSet& sel) {
    const std::size_t n = product(dims);
    const Dims st = strides_of(dims);
    IndexSet s = sel;
    std::sort(s.begin(), s.end());
    std::vector<std::size_t> out(n, 0);
    for (std::size_t x = 0; x < n; ++x) {
        std::size_t c = 0;
        for (auto k : s) c = c * dims[k] + (x / st[k]) % dims[k];
        out[x] = c;
    }
    return out;
}

} // namespace detail

// Reduced matrix over `keep` (ascending subsystem order).
inline CMatrix partial_trace(const CMatrix& rho, const IndexSet& keep) {
    const Dims& dims = rho.require_dims();
    detail::check_subset(keep, dims.size(), false);
    IndexSet kept = keep;
    std::sort(kept.begin(), kept.end());
    IndexSet traced;
    for (std::size_t k = 0; k < dims.size(); ++k)
        if (!std::binary_search(kept.begin(), kept.end(), k)) traced.push_back(k);

    Dims kd;
    for (auto k : kept) kd.push_back(dims[k]);
    const std::size_t nk = product(kd);
    const auto ki = detail::compact_index(dims, kept);
    const auto ti = detail::compact_index(dims, traced);

    std::size_t nt = 1;
    for (auto k : traced) nt *= dims[k];
    std::vector<std::vector<std::size_t>> groups(nt);
    for (std::size_t x = 0; x < rho.rows(); ++x) groups[ti[x]].push_back(x);

    CMatrix out(nk, nk);
    for (const auto& g : groups)
        for (auto r : g)
            for (auto c : g) out(ki[r], ki[c]) += rho(r, c);
    out.set_dims(kd);
    return out;
}

inline CMatrix partial_transpose(const CMatrix& rho, const IndexSet& part) {
    const Dims& dims = rho.require_dims();
    detail::check_subset(part, dims.size(), true);
    std::vector<std::size_t> on, off;
    detail::split_offsets(dims, part, on, off);
    CMatrix out(rho.rows(), rho.cols());
    for (std::size_t r = 0; r < rho.rows(); ++r)
        for (std::size_t c = 0; c < rho.cols(); ++c) out(off[r] + on[c], off[c] + on[r]) = rho(r, c);
    out.set_dims(dims);
    return out;
}

// Reorders tensor factors: new factor k is old factor perm[k].
inline CMatrix permute_subsystems(const CMatrix& rho, const IndexSet& perm) {
    const Dims& dims = rho.require_dims();
    if (perm.size() != dims.size()) fail(ErrorKind::BadSubset, "permutation length mismatch");
    detail::check_subset(perm, dims.size(), false);
    Dims nd(perm.size());
    for (std::size_t k = 0; k < perm.size(); ++k) nd[k] = dims[perm[k]];
    const Dims ost = detail::strides_of(dims);
    const Dims nst = detail::strides_of(nd);
    std::vector<std::size_t> map(rho.rows());
    for (std::size_t x = 0; x < rho.rows(); ++x) {
        std::size_t y = 0;
        for (std::size_t k = 0; k < perm.size(); ++k) y += ((x / ost[perm[k]]) % dims[perm[k]]) * nst[k];
        map[x] = y;
    }
    CMatrix out(rho.rows(), rho.cols());
    for (std::size_t r = 0; r < rho.rows(); ++r)
        for (std::size_t c = 0; c < rho.cols(); ++c) out(map[r], map[c]) = rho(r, c);
    out.set_dims(nd);
    return out;
}

// ── Hermitian eigensolver ─────────────────────────────────────────────

struct EigResult {
    RealVec values;  // descending
    CMatrix vectors; // columns aligned with values
};

namespace detail {

// Cyclic complex Jacobi on a dense n x n hermitian block (row-major, in place).
inline void jacobi(std::vector<Cx>& a, std::vector<Cx>& v, std::size_t n, bool want_vectors) {
    auto off_norm = [&] {
        double s = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (i != j) s += std::norm(a[i * n + j]);
        return std::sqrt(s);
    };
    double fro = 0;
    for (const auto& z : a) fro += std::norm(z);
    const double tol = JACOBI_OFF_TOL * std::max(1.0, std::sqrt(fro));

    for (int sweep = 0; sweep < JACOBI_MAX_SWEEPS; ++sweep) {
        if (off_norm() < tol) return;
        for (std::size_t p = 0; p + 1 < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) {
                const Cx apq = a[p * n + q];
                const double g = std::abs(apq);
                if (g == 0.0) continue;
                const double app = a[p * n + p].real();
                const double aqq = a[q * n + q].real();
                const double theta = (aqq - app) / (2.0 * g);
                const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                const Cx e = apq / g;
                const Cx eb = std::conj(e);
                // V = [[c, s], [-s*eb, c*eb]] on (p, q)
                const Cx vqp = -s * eb, vqq = c * eb;
                for (std::size_t k = 0; k < n; ++k) {
                    const Cx akp = a[k * n + p], akq = a[k * n + q];
                    a[k * n + p] = akp * c + akq * vqp;
                    a[k * n + q] = akp * s + akq * vqq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const Cx apk = a[p * n + k], aqk = a[q * n + k];
                    a[p * n + k] = c * apk + std::conj(vqp) * aqk;
                    a[q * n + k] = s * apk + std::conj(vqq) * aqk;
                }
                a[p * n + q] = 0;
                a[q * n + p] = 0;
                a[p * n + p] = a[p * n + p].real();
                a[q * n + q] = a[q * n + q].real();
                if (want_vectors)
                    for (std::size_t k = 0; k < n; ++k) {
                        const Cx vkp = v[k * n + p], vkq = v[k * n + q];
                        v[k * n + p] = vkp * c + vkq * vqp;
                        v[k * n + q] = vkp * s + vkq * vqq;
                    }
            }
    }
}

// Connected components of the nonzero pattern; each is diagonalised on its own.
inline std::vector<std::vector<std::size_t>> blocks_of(const CMatrix& h) {
    const std::size_t n = h.rows();
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (h(i, j) != Cx{} || h(j, i) != Cx{}) {
                const auto ri = find(i), rj = find(j);
                if (ri != rj) parent[std::max(ri, rj)] = std::min(ri, rj);
            }
    std::vector<std::vector<std::size_t>> groups(n);
    for (std::size_t i = 0; i < n; ++i) groups[find(i)].push_back(i);
    std::vector<std::vector<std::size_t>> out;
    for (auto& g : groups)
        if (!g.empty()) out.push_back(std::move(g));
    return out;
}

inline EigResult eig_impl(const CMatrix& h, bool want_vectors) {
    if (!h.square()) fail(ErrorKind::BadDims, "eigensolver needs a square matrix");
    const double defect = h.hermiticity_defect();
    if (defect > HERM_TOL) fail(ErrorKind::NotHermitian, "hermiticity defect " + std::to_string(defect));
    const std::size_t n = h.rows();

    RealVec vals(n);
    CMatrix vecs(want_vectors ? n : 0, want_vectors ? n : 0);
    for (const auto& blk : blocks_of(h)) {
        const std::size_t m = blk.size();
        std::vector<Cx> a(m * m), v(want_vectors ? m * m : 0);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j)
                a[i * m + j] = 0.5 * (h(blk[i], blk[j]) + std::conj(h(blk[j], blk[i])));
        if (want_vectors)
            for (std::size_t i = 0; i < m; ++i) v[i * m + i] = 1.0;
        if (m > 1) jacobi(a, v, m, want_vectors);
        for (std::size_t i = 0; i < m; ++i) {
            vals[blk[i]] = a[i * m + i].real();
            if (want_vectors)
                for (std::size_t k = 0; k < m; ++k) vecs(blk[k], blk[i]) = v[k * m + i];
        }
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](auto x, auto y) { return vals[x] > vals[y]; });

    EigResult r;
    r.values.resize(n);
    for (std::size_t i = 0; i < n; ++i) r.values[i] = vals[order[i]];
    if (want_vectors) {
        r.vectors = CMatrix(n, n);
        for (std::size_t i = 0; i < n; ++i) {
            const std::size_t src = order[i];
            Cx phase = 1.0;
            for (std::size_t k = 0; k < n; ++k)
                if (std::abs(vecs(k, src)) > 1e-12) {
                    phase = std::conj(vecs(k, src)) / std::abs(vecs(k, src));
                    break;
                }
            for (std::size_t k = 0; k < n; ++k) r.vectors(k, i) = vecs(k, src) * phase;
        }
    }
    return r;
}

} // namespace detail

inline EigResult eig_hermitian(const CMatrix& h) { return detail::eig_impl(h, true); }

inline RealVec eigvals_hermitian(const CMatrix& h) { return detail::eig_impl(h, false).values; }

inline double min_eigenvalue(const CMatrix& h) {
    const auto v = eigvals_hermitian(h);
    return v.empty() ? 0.0 : v.back();
}

inline CVec column(const CMatrix& m, std::size_t j) {
    CVec c(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) c[i] = m(i, j);
    return c;
}

// V f(diag) V^dagger
template <class F>
CMatrix spectral_map(const EigResult& e, F&& f) {
    const std::size_t n = e.values.size();
    CMatrix out(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        const double fk = f(e.values[k]);
        if (fk == 0.0) continue;
        for (std::size_t i = 0; i < n; ++i) {
            const Cx vik = e.vectors(i, k) * fk;
            for (std::size_t j = 0; j < n; ++j) out(i, j) += vik * std::conj(e.vectors(j, k));
        }
    }
    return out;
}

inline double trace_norm(const CMatrix& a) {
    if (!a.square()) fail(ErrorKind::BadDims, "trace norm needs a square matrix");
    double s = 0;
    if (a.is_hermitian()) {
        for (double v : eigvals_hermitian(a)) s += std::abs(v);
        return s;
    }
    for (double v : eigvals_hermitian(a.adjoint() * a)) s += std::sqrt(std::max(v, 0.0));
    return s;
}

inline CMatrix psd_sqrt(const CMatrix& a) {
    const auto e = eig_hermitian(a);
    if (!e.values.empty() && e.values.back() < -PSD_CLAMP)
        fail(ErrorKind::NotPSD, "eigenvalue " + std::to_string(e.values.back()) + " below clamp");
    CMatrix r = spectral_map(e, [](double x) { return std::sqrt(std::max(x, 0.0)); });
    if (a.has_dims()) r.set_dims(*a.dims());
    return r;
}

// Unitary factor W of M = W P. Rank-deficient directions are completed by Gram-Schmidt.
inline CMatrix polar_unitary(const CMatrix& m) {
    const std::size_t n = m.rows();
    const auto e = eig_hermitian(m.adjoint() * m);
    std::vector<CVec> left;
    std::vector<std::size_t> kept;
    for (std::size_t k = 0; k < n; ++k) {
        const double sv = std::sqrt(std::max(e.values[k], 0.0));
        if (sv <= 1e-12 * std::max(1.0, std::sqrt(std::max(e.values[0], 0.0)))) break;
        CVec u = m.apply(column(e.vectors, k));
        for (auto& z : u) z /= sv;
        left.push_back(std::move(u));
        kept.push_back(k);
    }
    // complete the left basis
    for (std::size_t b = 0; left.size() < n && b < n; ++b) {
        CVec u(n, 0.0);
        u[b] = 1.0;
        for (const auto& w : left) {
            const Cx ov = inner(w, u);
            for (std::size_t i = 0; i < n; ++i) u[i] -= ov * w[i];
        }
        const double nu = norm2(u);
        if (nu < 1e-8) continue;
        for (auto& z : u) z /= nu;
        left.push_back(std::move(u));
    }
    CMatrix w(n, n);
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) w(i, j) += left[k][i] * std::conj(e.vectors(j, k));
    return w;
}

// ── Cardan ────────────────────────────────────────────────────────────

// Roots of x^3 - 3 G x + H = 0 in the order 2√G cos(2π/3+α), 2√G cos α, 2√G cos(2π/3-α).
inline std::array<double, 3> cardan_roots(double G, double H) {
    if (G < 0) fail(ErrorKind::BadParam, "G must be nonnegative");
    if (H * H > 4 * G * G * G + 1e-12) fail(ErrorKind::ComplexRoots, "H^2 > 4 G^3");
    if (G == 0) return {0.0, 0.0, 0.0};
    const double c3 = std::clamp(-H / (2 * std::sqrt(G * G * G)), -1.0, 1.0);
    const double alpha = std::acos(c3) / 3;
    const double r = 2 * std::sqrt(G);
    constexpr double tp = 2 * std::numbers::pi / 3;
    std::array<double, 3> y{r * std::cos(tp + alpha), r * std::cos(alpha), r * std::cos(tp - alpha)};
    std::sort(y.begin(), y.end());
    return y;
}

// ── Paulis ────────────────────────────────────────────────────────────

namespace pauli {
inline CMatrix I() { return CMatrix::identity(2); }
inline CMatrix X() { return CMatrix{{0, 1}, {1, 0}}; }
inline CMatrix Y() { return CMatrix{{0, Cx(0, -1)}, {Cx(0, 1), 0}}; }
inline CMatrix Z() { return CMatrix{{1, 0}, {0, -1}}; }
} // namespace pauli

} // namespace entanglia
