#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "error.hpp"
#include "majorize.hpp"
#include "measures.hpp"
#include "qstate.hpp"

namespace entanglia {

inline constexpr double CATALYST_STEP = 1e-3;
inline constexpr std::size_t COOP_SAMPLES = 100000;
inline constexpr double MULTICOPY_MAX = 1e6;

// a → b by deterministic LOCC
inline bool nielsen(std::span<const double> a, std::span<const double> b) { return majorizes(a, b); }

// Sorted outer product of Schmidt vectors.
inline RealVec tensor(std::span<const double> a, std::span<const double> b) {
    RealVec out;
    out.reserve(a.size() * b.size());
    for (double x : a)
        for (double y : b) out.push_back(x * y);
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

inline RealVec tensor_power(std::span<const double> a, int k) {
    RealVec out{1.0};
    for (int i = 0; i < k; ++i) out = tensor(out, a);
    return out;
}

inline RealVec strip_zeros(std::span<const double> a) {
    RealVec s = sorted_desc(a, a.size());
    while (!s.empty() && s.back() <= NEG_CLAMP) s.pop_back();
    return s;
}

// Partial sums of both sorted vectors side by side; the certificate printed in reports.
struct PartialSumTable {
    RealVec x, y;   // sorted, padded
    RealVec sx, sy; // partial sums
};

inline PartialSumTable partial_sum_table(std::span<const double> x, std::span<const double> y) {
    const std::size_t n = std::max(x.size(), y.size());
    PartialSumTable t{sorted_desc(x, n), sorted_desc(y, n), {}, {}};
    t.sx = partial_sums(t.x);
    t.sy = partial_sums(t.y);
    return t;
}

// ── Classification ────────────────────────────────────────────────────

enum class Pattern3 { None, AType, BType };

inline const char* to_string(Pattern3 p) {
    switch (p) {
    case Pattern3::None: return "none";
    case Pattern3::AType: return "A";
    case Pattern3::BType: return "B";
    }
    return "?";
}

struct PairClass {
    MajVerdict verdict = MajVerdict::Equal;
    std::optional<Pattern3> pattern_3x3; // only for rank-3 incomparable pairs
    bool strong = false;
    bool catalysis_possible = false; // necessary condition only
};

namespace detail {
inline bool chain_ge(std::initializer_list<double> v) {
    const double* p = v.begin();
    for (std::size_t i = 0; i + 1 < v.size(); ++i)
        if (p[i] < p[i + 1] - MAJ_TOL) return false;
    return true;
}
} // namespace detail

inline PairClass classify(std::span<const double> a, std::span<const double> b) {
    PairClass pc;
    pc.verdict = compare(a, b);
    const RealVec sa = strip_zeros(a), sb = strip_zeros(b);
    const std::size_t d = std::max(sa.size(), sb.size());
    const RealVec pa = sorted_desc(sa, d), pb = sorted_desc(sb, d);
    const double a1 = pa[0], b1 = pb[0], ad = pa[d - 1], bd = pb[d - 1];
    pc.strong = (a1 < b1 - MAJ_TOL && ad < bd - MAJ_TOL) || (a1 > b1 + MAJ_TOL && ad > bd + MAJ_TOL);
    pc.catalysis_possible = a1 <= b1 + MAJ_TOL && ad >= bd - MAJ_TOL;
    if (pc.verdict == MajVerdict::Incomparable && sa.size() == 3 && sb.size() == 3) {
        if (detail::chain_ge({pa[0], pb[0], pb[1], pa[1], pa[2], pb[2]}))
            pc.pattern_3x3 = Pattern3::AType;
        else if (detail::chain_ge({pb[0], pa[0], pa[1], pb[1], pb[2], pa[2]}))
            pc.pattern_3x3 = Pattern3::BType;
        else
            pc.pattern_3x3 = Pattern3::None;
    }
    return pc;
}

// a^{⊗k} → b^{⊗k}
inline bool multicopy(std::span<const double> a, std::span<const double> b, int k) {
    if (k < 1) fail(ErrorKind::BadParam, "copies must be at least 1");
    const RealVec sa = strip_zeros(a), sb = strip_zeros(b);
    if (std::pow(static_cast<double>(sa.size() * sb.size()), k) > MULTICOPY_MAX)
        fail(ErrorKind::TooLarge, "tensor power too large");
    return nielsen(tensor_power(sa, k), tensor_power(sb, k));
}

// ── Catalysis ─────────────────────────────────────────────────────────

// First c in [1/2, 1) on the grid with a⊗(c,1-c) → b⊗(c,1-c).
inline std::optional<double> find_catalyst_2x2(std::span<const double> a, std::span<const double> b,
                                               double grid_step = CATALYST_STEP) {
    if (!(grid_step > 0 && grid_step < 0.5)) fail(ErrorKind::BadParam, "grid step must be in (0, 1/2)");
    if (!classify(a, b).catalysis_possible) return std::nullopt;
    for (std::size_t i = 0;; ++i) {
        const double c = 0.5 + static_cast<double>(i) * grid_step;
        if (c >= 1) break;
        const RealVec cat{c, 1 - c};
        if (nielsen(tensor(a, cat), tensor(b, cat))) return c;
    }
    return std::nullopt;
}

// ── Assisted transformations ──────────────────────────────────────────

enum class AssistKind { MaxEntangledLowerRank, TwoByTwo };

struct AssistPlan {
    AssistKind kind = AssistKind::TwoByTwo;
    ProbVector resource;
    bool consumed = true;
    std::optional<double> c0;
    std::optional<Ebits> e0;
    int type = 0; // 1 or 2 for the 3x3 recipes
};

inline RealVec uniform(std::size_t d) { return RealVec(d, 1.0 / static_cast<double>(d)); }

// a ⊗ Φ_{d-1} → b ⊗ |00⟩ via the simplified conditions k a1/(d-1) ≤ Σ_{i≤k} b_i.
inline bool assist_max_entangled(std::span<const double> a, std::span<const double> b) {
    const RealVec sa = strip_zeros(a), sb = strip_zeros(b);
    if (sa.size() != sb.size() || sa.size() < 3) fail(ErrorKind::RankMismatch, "need equal ranks d >= 3");
    const std::size_t d = sa.size();
    const RealVec pb = partial_sums(sb);
    for (std::size_t k = 1; k < d; ++k)
        if (static_cast<double>(k) * sa[0] / static_cast<double>(d - 1) > pb[k - 1] + MAJ_TOL) return false;
    return true;
}

// The same question answered by majorization of the explicit product vectors.
inline bool assist_max_entangled_direct(std::span<const double> a, std::span<const double> b) {
    const RealVec sa = strip_zeros(a), sb = strip_zeros(b);
    if (sa.size() != sb.size() || sa.size() < 3) fail(ErrorKind::RankMismatch, "need equal ranks d >= 3");
    return nielsen(tensor(sa, uniform(sa.size() - 1)), sb);
}

inline AssistPlan assist_plan_max_entangled(std::span<const double> a, std::span<const double> b) {
    if (!assist_max_entangled(a, b)) fail(ErrorKind::NoPlanFound, "maximally entangled state of rank d-1 is not enough");
    const std::size_t d = strip_zeros(a).size();
    AssistPlan p;
    p.kind = AssistKind::MaxEntangledLowerRank;
    p.resource = ProbVector(uniform(d - 1));
    p.consumed = true;
    p.e0 = Ebits{std::log2(static_cast<double>(d - 1))};
    return p;
}

// Least entangled 2x2 resource (c0, 1-c0) for a rank-3 incomparable pair.
inline AssistPlan min_assist_3x3(std::span<const double> a, std::span<const double> b) {
    const RealVec sa = strip_zeros(a), sb = strip_zeros(b);
    if (sa.size() != 3 || sb.size() != 3 || compare(a, b) != MajVerdict::Incomparable)
        fail(ErrorKind::NotIncomparable3x3, "need a rank-3 incomparable pair");
    AssistPlan p;
    p.kind = AssistKind::TwoByTwo;
    double c0 = 0;
    if (sa[0] < sb[0] && sa[0] + sa[1] > sb[0] + sb[1]) {
        c0 = (sb[0] + sb[1]) / (sa[0] + sa[1]);
        p.type = 1;
    } else {
        c0 = sb[0] / sa[0];
        p.type = 2;
    }
    c0 = std::max(c0, 0.5);
    p.c0 = c0;
    p.e0 = Ebits{binary_entropy(c0)};
    p.resource = ProbVector({c0, 1 - c0});
    p.consumed = true;
    if (!nielsen(tensor(sa, p.resource), sb)) fail(ErrorKind::NoPlanFound, "closed-form resource failed the direct check");
    return p;
}

// 2x2 states whose product converts to a d-dimensional maximally entangled state.
inline std::vector<ProbVector> maxent_ladder(std::size_t d) {
    if (d < 2) fail(ErrorKind::BadParam, "d must be at least 2");
    std::vector<ProbVector> out;
    for (std::size_t i = 1; i < d; ++i) {
        const double m = static_cast<double>(d - i + 1);
        out.push_back(ProbVector({(m - 1) / m, 1 / m}));
    }
    return out;
}

// ── Mutual cooperation ────────────────────────────────────────────────

struct CoopPlan {
    ProbVector chi, eta;
    // ψ↮φ, χ↮η, ψ↮η, χ↮φ
    std::array<bool, 4> cross_incomparable{};
    bool joint_ok = false;
    std::string method; // "case1", "case2", "search", "given"
    std::size_t samples = 0;
    std::uint64_t seed = 0;

    bool valid() const { return joint_ok && cross_incomparable[1]; }
    bool all_cross() const {
        return std::all_of(cross_incomparable.begin(), cross_incomparable.end(), [](bool x) { return x; });
    }
};

// Checks a candidate pair (χ, η) for the joint conversion ψ⊗χ → φ⊗η.
inline CoopPlan coop_check(std::span<const double> a, std::span<const double> b, const ProbVector& chi,
                           const ProbVector& eta) {
    CoopPlan p{chi, eta, {}, false, "given", 0, 0};
    p.cross_incomparable = {compare(a, b) == MajVerdict::Incomparable, compare(chi, eta) == MajVerdict::Incomparable,
                            compare(a, eta) == MajVerdict::Incomparable, compare(chi, b) == MajVerdict::Incomparable};
    p.joint_ok = nielsen(tensor(a, chi), tensor(b, eta));
    return p;
}

namespace detail {
inline bool coop_accept(const CoopPlan& p, bool require_all_cross) {
    return p.valid() && (!require_all_cross || p.all_cross());
}

inline std::optional<CoopPlan> coop_case1(const RealVec& a, const RealVec& b, bool all_cross) {
    const double a1 = a[0], a2 = a[1], a3 = a[2], b1 = b[0], b2 = b[1], b3 = b[2];
    const double ratio = std::max(a1 / a2, b1 / b3);
    const double cap = std::min(a3 / (2 * a1 + a3), 1.0 / 3.0);
    for (int i = 1; i < 2000; ++i) {
        const double al2 = (1.0 / 3.0) * (1 - i / 2000.0);
        const double al1 = 1 - 2 * al2;
        if (!(al1 / al2 > ratio)) continue;
        const double lo = std::max({al2 * b3 / a3, al2 * (b2 + 2 * b3), (al2 * (2 - b1) - a3) / (1 - a3),
                                    1 - al1 * (b1 + b2) / a1, 0.0});
        if (!(lo < cap)) continue;
        for (double f : {1e-3, 1e-2, 0.1, 0.5}) {
            const double be2 = lo + f * (cap - lo);
            const double be1 = (1 - be2) / 2;
            auto p = coop_check(a, b, ProbVector({be1, be1, be2}), ProbVector({al1, al2, al2}));
            if (coop_accept(p, all_cross)) {
                p.method = "case1";
                return p;
            }
        }
    }
    return std::nullopt;
}

inline std::optional<CoopPlan> coop_case2(const RealVec& a, const RealVec& b, bool all_cross) {
    const double a1 = a[0], a2 = a[1], a3 = a[2], b1 = b[0], b2 = b[1], b3 = b[2];
    constexpr int N = 200;
    for (int i = 1; i < N; ++i)
        for (int j = 1; j < N; ++j) {
            double be1 = 0, be2 = 0, be3 = 0;
            if (a1 < 0.5) {
                be1 = 1.0 / 3 + (2.0 / 3) * i / N;
                be3 = (1 - be1) * j / (2.0 * N);
                be2 = 1 - be1 - be3;
            } else {
                if (i > 1) return std::nullopt;
                be1 = 0.5;
                be3 = 0.25 * j / N;
                be2 = 0.5 - be3;
            }
            if (!(be1 > be2 && be2 > be3 && be3 > 0)) continue;
            double lo = 0;
            if (a1 < 0.5)
                lo = std::max({be1 * a1 / b1, (be1 * (a1 + a2) + a1 * be2) / (2 * b1 + b2),
                               (1 - be3) * (1 - a3) / (2 * (1 - b3))});
            else
                lo = std::max({a1 / (2 * b1), (a1 + a2 + 2 * a1 * be2) / (2 * (2 * b1 + b2)),
                               (0.5 + be2) * (1 - a3) / (2 * (1 - b3)), (2 * a1 + a2) / (4 * (b1 + b2)),
                               (a1 + a2 - a2 * be3) / (2 - b3)});
            lo = std::max({lo, a1 * be3 / b3, (be1 + be2) / 2}); // α1 b3 > a1 β3; χ↮η needs β1+β2 < 2α1
            if (!(a1 * be3 > be1 * a3)) continue;
            const double hi = std::min(0.5, be1);
            if (!(lo < hi)) continue;
            for (double f : {1e-3, 1e-2, 0.1, 0.5}) {
                const double al1 = lo + f * (hi - lo);
                const double al2 = 1 - 2 * al1;
                if (!(al1 > al2)) continue;
                auto p = coop_check(a, b, ProbVector({be1, be2, be3}), ProbVector({al1, al1, al2}));
                if (coop_accept(p, all_cross)) {
                    p.method = "case2";
                    return p;
                }
            }
        }
    return std::nullopt;
}

// Dirichlet sample; concentration k around `centre` when given.
inline RealVec simplex_sample(Rng& rng, std::size_t d, const RealVec* centre, double k) {
    RealVec v(d);
    double s = 0;
    for (std::size_t i = 0; i < d; ++i) {
        const double shape = centre ? std::max(k * (*centre)[i], 1e-3) : 1.0;
        std::gamma_distribution<double> g(shape, 1.0);
        s += (v[i] = g(rng));
    }
    for (auto& x : v) x /= s;
    std::sort(v.begin(), v.end(), std::greater<>());
    return v;
}
} // namespace detail

// Auxiliary incomparable pair (χ, η) with ψ⊗χ → φ⊗η, for rank-3 incomparable (ψ, φ).
inline CoopPlan coop_construct(std::span<const double> a, std::span<const double> b, std::uint64_t seed = 1,
                               bool require_all_cross = false, std::size_t samples = COOP_SAMPLES) {
    const RealVec sa = strip_zeros(a), sb = strip_zeros(b);
    if (sa.size() != 3 || sb.size() != 3 || compare(a, b) != MajVerdict::Incomparable)
        fail(ErrorKind::NotIncomparable3x3, "need a rank-3 incomparable pair");
    auto recipe = sa[0] > sb[0] ? detail::coop_case1(sa, sb, require_all_cross)
                                : detail::coop_case2(sa, sb, require_all_cross);
    if (recipe) return *recipe;

    Rng rng(seed);
    for (std::size_t s = 0; s < samples; ++s) {
        RealVec chi, eta;
        switch (s % 3) {
        case 0:
            chi = detail::simplex_sample(rng, 3, nullptr, 0);
            eta = detail::simplex_sample(rng, 3, nullptr, 0);
            break;
        default: {
            const double k = s % 3 == 1 ? 60.0 : 400.0;
            chi = detail::simplex_sample(rng, 3, &sa, k);
            eta = detail::simplex_sample(rng, 3, &sb, k);
        }
        }
        auto p = coop_check(sa, sb, ProbVector(chi), ProbVector(eta));
        if (detail::coop_accept(p, require_all_cross)) {
            p.method = "search";
            p.samples = s + 1;
            p.seed = seed;
            return p;
        }
    }
    fail(ErrorKind::NoPlanFound, "neither the recipe nor " + std::to_string(samples) + " samples produced a plan");
}

// ── Two copies of the same source ─────────────────────────────────────

struct EtaRange {
    int case_id = 1;        // 1: η = (α, α, 1-2α); 2: η = (1-2α, α, α)
    double formula_lo = 0;  // interval from the closed-form bounds
    double formula_hi = 0;
    double lo = 0;          // certified sub-interval (grid end points that pass)
    double hi = 0;
    std::size_t grid_points = 0;
    std::size_t certified_points = 0;

    ProbVector eta(double alpha) const {
        return case_id == 1 ? ProbVector({alpha, alpha, 1 - 2 * alpha}) : ProbVector({1 - 2 * alpha, alpha, alpha});
    }
};

// η with a⊗a → b⊗η and a↮η, parametrized by one α.
inline EtaRange split_two_copies(std::span<const double> a, std::span<const double> b, std::size_t grid = 401) {
    const RealVec sa = strip_zeros(a), sb = strip_zeros(b);
    if (sa.size() != 3 || sb.size() != 3) fail(ErrorKind::BadParam, "need rank-3 vectors");
    const double a1 = sa[0], a2 = sa[1], a3 = sa[2], b1 = sb[0], b2 = sb[1], b3 = sb[2];
    if (a1 - a2 <= MAJ_TOL || a2 - a3 <= MAJ_TOL) fail(ErrorKind::Degenerate, "source has tied Schmidt coefficients");
    if (compare(sa, sb) != MajVerdict::Incomparable) fail(ErrorKind::BadParam, "target must be incomparable with source");

    EtaRange r;
    if (a1 < b1) {
        r.case_id = 1;
        const double common = std::max({a1 - (a1 * a1 - a2 * a2) / 2, a1 * a1 / b1, a1 * (a1 + 2 * a2) / (2 * b1 + b2)});
        const double extra = a2 * a2 > a1 * a3 ? (a1 + a2) * (a1 + a2) / (2 * (b1 + b2)) : a1 * (2 - a1) / (2 - b3);
        r.formula_lo = std::max({common, extra, (a1 + a2) / 2});
        r.formula_hi = std::min(a1, 0.5);
    } else {
        r.case_id = 2;
        const double bound = a2 * a2 > a1 * a3
                                 ? std::min({a1 * a3 / b1, a3 * a3 / b3, a3 * (2 * a2 + a3) / (b2 + 2 * b3)})
                                 : std::min({a3 + (a2 * a2 - a3 * a3) / 2, a3 * a3 / b3, a3 * (2 * a2 + a3) / (b2 + 2 * b3)});
        r.formula_lo = a3;
        r.formula_hi = std::min(bound, (1 - a1) / 2);
    }
    if (!(r.formula_lo < r.formula_hi)) fail(ErrorKind::EmptyRange, "closed-form bounds leave no room for eta");

    const RealVec aa = tensor(sa, sa);
    bool any = false;
    r.grid_points = grid;
    for (std::size_t i = 1; i <= grid; ++i) {
        const double t = static_cast<double>(i) / static_cast<double>(grid + 1);
        const double al = r.formula_lo + t * (r.formula_hi - r.formula_lo);
        const ProbVector eta = r.eta(al);
        if (nielsen(aa, tensor(sb, eta)) && compare(sa, eta) == MajVerdict::Incomparable) {
            if (!any) r.lo = al;
            r.hi = al;
            any = true;
            ++r.certified_points;
        }
    }
    if (!any) fail(ErrorKind::EmptyRange, "no grid point inside the closed-form interval passes the direct check");
    return r;
}

} // namespace entanglia
