#pragma once

#include <algorithm>
#include <bit>
#include <cmath>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "error.hpp"
#include "numkernel.hpp"

namespace entanglia {

inline constexpr double MAJ_TOL = 1e-9;
inline constexpr double NEG_CLAMP = 1e-12;

// Probability (Schmidt) vector. Stored as given; every operation sorts internally.
class ProbVector {
public:
    ProbVector() = default;
    ProbVector(std::initializer_list<double> v) : ProbVector(RealVec(v)) {}
    explicit ProbVector(RealVec v) : v_(std::move(v)) {
        double s = 0;
        for (auto& x : v_) {
            if (x < -NEG_CLAMP) fail(ErrorKind::BadDistribution, "negative component " + std::to_string(x));
            x = std::max(x, 0.0);
            s += x;
        }
        if (std::abs(s - 1.0) > MAJ_TOL) fail(ErrorKind::BadDistribution, "components sum to " + std::to_string(s));
    }

    const RealVec& values() const noexcept { return v_; }
    std::size_t size() const noexcept { return v_.size(); }
    double operator[](std::size_t i) const { return v_[i]; }
    operator std::span<const double>() const noexcept { return v_; }

    RealVec sorted() const {
        RealVec s = v_;
        std::sort(s.begin(), s.end(), std::greater<>());
        return s;
    }
    // number of entries above 1e-12
    std::size_t rank() const {
        return static_cast<std::size_t>(std::count_if(v_.begin(), v_.end(), [](double x) { return x > 1e-12; }));
    }

private:
    RealVec v_;
};

enum class MajVerdict { XPrecY, YPrecX, Equal, Incomparable };

inline const char* to_string(MajVerdict v) {
    switch (v) {
    case MajVerdict::XPrecY: return "XPrecY";
    case MajVerdict::YPrecX: return "YPrecX";
    case MajVerdict::Equal: return "Equal";
    case MajVerdict::Incomparable: return "Incomparable";
    }
    return "?";
}

inline RealVec sorted_desc(std::span<const double> x, std::size_t len) {
    RealVec s(x.begin(), x.end());
    s.resize(std::max(len, s.size()), 0.0);
    std::sort(s.begin(), s.end(), std::greater<>());
    return s;
}

inline RealVec partial_sums(const RealVec& sorted) {
    RealVec p(sorted.size());
    double s = 0;
    for (std::size_t i = 0; i < sorted.size(); ++i) p[i] = (s += sorted[i]);
    return p;
}

namespace detail {
inline void check_traces(std::span<const double> x, std::span<const double> y) {
    double sx = 0, sy = 0;
    for (double v : x) sx += v;
    for (double v : y) sy += v;
    if (std::abs(sx - sy) > MAJ_TOL)
        fail(ErrorKind::TraceMismatch, "sums " + std::to_string(sx) + " and " + std::to_string(sy) + " differ");
}
} // namespace detail

// x ≺ y
inline bool majorizes(std::span<const double> x, std::span<const double> y) {
    detail::check_traces(x, y);
    const std::size_t n = std::max(x.size(), y.size());
    const auto px = partial_sums(sorted_desc(x, n));
    const auto py = partial_sums(sorted_desc(y, n));
    for (std::size_t k = 0; k < n; ++k)
        if (px[k] > py[k] + MAJ_TOL) return false;
    return true;
}

// Ascending formulation: every ascending partial sum of x dominates that of y.
inline bool majorizes_ascending(std::span<const double> x, std::span<const double> y) {
    detail::check_traces(x, y);
    const std::size_t n = std::max(x.size(), y.size());
    auto xs = sorted_desc(x, n), ys = sorted_desc(y, n);
    std::reverse(xs.begin(), xs.end());
    std::reverse(ys.begin(), ys.end());
    const auto px = partial_sums(xs), py = partial_sums(ys);
    for (std::size_t k = 0; k < n; ++k)
        if (px[k] < py[k] - MAJ_TOL) return false;
    return true;
}

// Subset formulation: for every I there is J with |I| = |J| and <x, e^I> <= <y, e^J>. Exhaustive, small d only.
inline bool majorizes_by_subsets(std::span<const double> x, std::span<const double> y) {
    detail::check_traces(x, y);
    const std::size_t n = std::max(x.size(), y.size());
    if (n > 20) fail(ErrorKind::TooLarge, "subset enumeration limited to 20 entries");
    RealVec xs(x.begin(), x.end()), ys(y.begin(), y.end());
    xs.resize(n, 0.0);
    ys.resize(n, 0.0);
    std::vector<double> best(n + 1, -INFINITY);
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
        double s = 0;
        for (std::size_t i = 0; i < n; ++i)
            if (mask >> i & 1) s += ys[i];
        const auto k = static_cast<std::size_t>(std::popcount(mask));
        best[k] = std::max(best[k], s);
    }
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
        double s = 0;
        for (std::size_t i = 0; i < n; ++i)
            if (mask >> i & 1) s += xs[i];
        if (s > best[static_cast<std::size_t>(std::popcount(mask))] + MAJ_TOL) return false;
    }
    return true;
}

inline MajVerdict compare(std::span<const double> x, std::span<const double> y) {
    const bool xy = majorizes(x, y);
    const bool yx = majorizes(y, x);
    if (xy && yx) return MajVerdict::Equal;
    if (xy) return MajVerdict::XPrecY;
    if (yx) return MajVerdict::YPrecX;
    return MajVerdict::Incomparable;
}

inline bool is_doubly_stochastic(const CMatrix& a) {
    if (!a.square()) return false;
    const std::size_t n = a.rows();
    for (const auto& z : a.data())
        if (std::abs(z.imag()) >= 1e-12 || z.real() < -MAJ_TOL) return false;
    for (std::size_t i = 0; i < n; ++i) {
        double rs = 0, cs = 0;
        for (std::size_t j = 0; j < n; ++j) {
            rs += a(i, j).real();
            cs += a(j, i).real();
        }
        if (std::abs(rs - 1) > MAJ_TOL || std::abs(cs - 1) > MAJ_TOL) return false;
    }
    return true;
}

// Doubly stochastic A with A·y↓ = x↓, as a product of T-transforms.
inline CMatrix ds_witness(std::span<const double> x, std::span<const double> y) {
    if (!majorizes(x, y)) fail(ErrorKind::NotMajorized, "x is not majorized by y");
    const std::size_t n = std::max(x.size(), y.size());
    const RealVec xs = sorted_desc(x, n);
    RealVec cur = sorted_desc(y, n);
    CMatrix A = CMatrix::identity(n);
    constexpr double eps = 1e-13;
    for (std::size_t step = 0; step + 1 < n; ++step) {
        // j: last index with cur_j > x_j; k: first index after j with cur_k < x_k
        std::size_t j = n;
        for (std::size_t i = n; i-- > 0;)
            if (cur[i] > xs[i] + eps) {
                j = i;
                break;
            }
        if (j == n) break;
        std::size_t k = n;
        for (std::size_t i = j + 1; i < n; ++i)
            if (cur[i] < xs[i] - eps) {
                k = i;
                break;
            }
        if (k == n) break;
        const double delta = std::min(cur[j] - xs[j], xs[k] - cur[k]);
        const double mix = delta / (cur[j] - cur[k]); // weight on the transposition
        CMatrix T = CMatrix::identity(n);
        T(j, j) = T(k, k) = 1 - mix;
        T(j, k) = T(k, j) = mix;
        A = T * A;
        const double cj = cur[j], ck = cur[k];
        cur[j] = (1 - mix) * cj + mix * ck;
        cur[k] = mix * cj + (1 - mix) * ck;
        if (std::abs(cur[j] - xs[j]) < eps) cur[j] = xs[j];
        if (std::abs(cur[k] - xs[k]) < eps) cur[k] = xs[k];
    }
    return A;
}

inline bool spectra_majorized(const CMatrix& rho, const CMatrix& sigma) {
    const auto a = eigvals_hermitian(rho);
    const auto b = eigvals_hermitian(sigma);
    return majorizes(a, b);
}

// Σ P_j ρ P_j
inline CMatrix dephase(const CMatrix& rho, const std::vector<CMatrix>& projectors) {
    if (projectors.empty()) fail(ErrorKind::BadResolution, "no projectors");
    const std::size_t n = rho.rows();
    CMatrix sum(n, n);
    for (std::size_t i = 0; i < projectors.size(); ++i) {
        const auto& P = projectors[i];
        if (P.rows() != n || P.cols() != n) fail(ErrorKind::BadResolution, "projector shape mismatch");
        if ((P * P).max_abs_diff(P) > MAJ_TOL || !P.is_hermitian())
            fail(ErrorKind::BadResolution, "element " + std::to_string(i) + " is not an orthogonal projector");
        for (std::size_t j = i + 1; j < projectors.size(); ++j)
            if ((P * projectors[j]).max_abs() > MAJ_TOL) fail(ErrorKind::BadResolution, "projectors not orthogonal");
        sum += P;
    }
    if (sum.max_abs_diff(CMatrix::identity(n)) > MAJ_TOL) fail(ErrorKind::BadResolution, "projectors do not sum to I");
    CMatrix out(n, n);
    for (const auto& P : projectors) out += P * rho * P;
    if (rho.has_dims()) out.set_dims(*rho.dims());
    return out;
}

inline bool ensemble_exists(const ProbVector& p, const ProbVector& lambda) { return majorizes(p, lambda); }

} // namespace entanglia
