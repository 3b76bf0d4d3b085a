// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fail.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "entanglia.hpp"
#include "support/property_suites.hpp"

using namespace entanglia;

namespace {

constexpr double kPi = std::numbers::pi;

struct Criterion {
    int id;
    std::string title;
    bool ok = true;
    std::vector<std::string> notes;

    void require(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            notes.push_back("failed: " + what);
        }
    }
    void note(const std::string& s) { notes.push_back(s); }
};

std::string num(double x, int prec = 6) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", prec, x);
    return buf;
}

template <class F>
Criterion run(int id, const std::string& title, F&& body) {
    Criterion c{id, title, true, {}};
    const auto t0 = std::chrono::steady_clock::now();
    try {
        body(c);
    } catch (const std::exception& e) {
        c.ok = false;
        c.notes.push_back(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%s  [%2d] %s (%.2fs)\n", c.ok ? "PASS" : "FAIL", id, title.c_str(), secs);
    for (const auto& n : c.notes) std::printf("        %s\n", n.c_str());
    std::fflush(stdout);
    return c;
}

void catalysis(Criterion& c) {
    const RealVec a{.4, .4, .1, .1}, b{.5, .25, .25, 0}, cat{.6, .4};
    c.require(!nielsen(a, b), "source must not reach target alone");
    RealVec ac = tensor(a, cat), bc = tensor(b, cat);
    std::sort(ac.begin(), ac.end(), std::greater<>());
    std::sort(bc.begin(), bc.end(), std::greater<>());
    const RealVec want_a{.24, .24, .16, .16, .06, .06, .04, .04}, want_b{.3, .2, .15, .15, .1, .1, 0, 0};
    for (std::size_t i = 0; i < 8; ++i) {
        c.require(std::abs(ac[i] - want_a[i]) < 1e-12, "source product entry " + std::to_string(i));
        c.require(std::abs(bc[i] - want_b[i]) < 1e-12, "target product entry " + std::to_string(i));
    }
    c.require(nielsen(ac, bc), "catalysed Nielsen check");
    const auto found = find_catalyst_2x2(a, b);
    c.require(found.has_value() && std::abs(*found - .6) < CATALYST_STEP, "catalyst search finds c = 0.6");
    if (found) c.note("catalyst search: c = " + num(*found));
}

void multi_copy(Criterion& c) {
    const RealVec a{.4, .4, .1, .1}, b{.5, .25, .25, 0};
    c.require(!multicopy(a, b, 1), "k=1 must fail");
    c.require(!multicopy(a, b, 2), "k=2 must fail");
    c.require(multicopy(a, b, 3), "k=3 must succeed");
}

// Paper claims about an example quadruple.
struct Claim {
    enum Kind { Incomparable, Converts, NotConverts, Strong } kind;
    int from, to; // indices into {ψ, φ, χ, η}
};

void cooperation(Criterion& c) {
    const char* names[4] = {"psi", "phi", "chi", "eta"};
    struct Example {
        const char* label;
        std::array<RealVec, 4> v;
        std::array<double, 4> entropy;
        double entropy_tol;
        std::vector<Claim> claims;
    };
    using K = Claim;
    const std::vector<Example> examples = {
        {"Example 1",
         {RealVec{.4, .4, .2}, {.48, .26, .26}, {.49, .255, .255}, {.41, .41, .18}},
         {1.5219, 1.5188, 1.5097, 1.5001},
         5e-4,
         {{K::Incomparable, 0, 1}, {K::Incomparable, 2, 3}, {K::Converts, 0, 3}, {K::Converts, 1, 2}}},
        {"Example 2",
         {RealVec{.41, .38, .21}, {.4, .4, .2}, {.45, .34, .21}, {.48, .309, .211}},
         {1.5307, 1.5219, 1.5204, 1.50544},
         5e-4,
         {{K::Incomparable, 0, 1},
          {K::Incomparable, 2, 3},
          {K::Incomparable, 0, 3},
          {K::Incomparable, 2, 1},
          {K::Converts, 0, 2}}},
        {"Example 3",
         {RealVec{.4, .3, .2, .1}, {.45, .29, .14, .12}, {.5, .25, .2, .05}, {.48, .36, .12, .04}},
         {1.846, 1.800, 1.680, 1.592},
         5e-4,
         {{K::Incomparable, 0, 1},
          {K::Incomparable, 2, 3},
          {K::Strong, 0, 1},
          {K::Strong, 2, 3},
          {K::Converts, 0, 3},
          {K::NotConverts, 2, 1},
          {K::Converts, 1, 2}}},
        {"Example 4",
         {RealVec{.4, .3, .2, .1}, {.45, .29, .14, .12}, {.5, .23, .22, .05}, {.48, .36, .12, .04}},
         {1.846, 1.800, 1.684, 1.592},
         5e-4,
         {{K::Incomparable, 0, 1},
          {K::Incomparable, 0, 3},
          {K::Incomparable, 2, 1},
          {K::Incomparable, 2, 3},
          {K::Strong, 0, 1},
          {K::Strong, 2, 3},
          {K::Converts, 0, 2}}},
    };
    for (const auto& ex : examples) {
        const std::string L = ex.label;
        for (int i = 0; i < 4; ++i) {
            const double e = shannon(ex.v[i]);
            c.require(std::abs(e - ex.entropy[i]) <= ex.entropy_tol,
                      L + " E(" + names[i] + ") = " + num(e) + ", stated " + num(ex.entropy[i]));
        }
        for (const auto& cl : ex.claims) {
            const RealVec &x = ex.v[cl.from], &y = ex.v[cl.to];
            const std::string pair = std::string(names[cl.from]) + "," + names[cl.to];
            switch (cl.kind) {
            case K::Incomparable:
                c.require(compare(x, y) == MajVerdict::Incomparable,
                          L + " " + pair + " stated incomparable, computed " + to_string(compare(x, y)));
                break;
            case K::Converts: c.require(nielsen(x, y), L + " " + pair + " stated convertible"); break;
            case K::NotConverts: c.require(!nielsen(x, y), L + " " + pair + " stated not convertible"); break;
            case K::Strong: c.require(classify(x, y).strong, L + " " + pair + " stated strongly incomparable"); break;
            }
        }
        const auto plan = coop_check(ex.v[0], ex.v[1], ProbVector(ex.v[2]), ProbVector(ex.v[3]));
        c.require(plan.joint_ok, L + " joint transformation psi(x)chi -> phi(x)eta");
    }
}

void flip_axes(Criterion& c) {
    const double s = 1 / std::sqrt(2.0);
    const auto g = flip_gadget(s, s, s, s, kPi / 2);
    const RealVec i = g.initial_schmidt.sorted(), f = g.final_schmidt.sorted();
    const double h = 1 / (2 * std::sqrt(3.0));
    const RealVec wi{2. / 3, 1. / 6, 1. / 6}, wf{1. / 3 + h, 1. / 3, 1. / 3 - h};
    for (std::size_t k = 0; k < 3; ++k) {
        c.require(std::abs(i[k] - wi[k]) < 1e-9, "initial Schmidt entry " + std::to_string(k));
        c.require(std::abs(f[k] - wf[k]) < 1e-9, "final Schmidt entry " + std::to_string(k));
    }
    c.require(g.verdict == GadgetVerdict::Incomparable, "verdict Incomparable");
    c.require(g.cardan_gap < 1e-8, "Cardan vs numeric gap " + num(g.cardan_gap));
    c.note("Cardan vs numeric gap " + num(g.cardan_gap, 3));
}

std::array<double, 3> unit_vector(Rng& rng) {
    std::normal_distribution<double> g;
    std::array<double, 3> v{g(rng), g(rng), g(rng)};
    const double n = std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
    for (auto& x : v) x /= n;
    return v;
}

void great_circle(Criterion& c) {
    Rng rng(20240501);
    std::uniform_real_distribution<double> ang(0, 2 * kPi);
    int coplanar_ok = 0, generic_ok = 0;
    double max_gap = 0;
    for (int t = 0; t < 200; ++t) {
        const auto e1 = unit_vector(rng);
        auto e2 = unit_vector(rng);
        const double d = e1[0] * e2[0] + e1[1] * e2[1] + e1[2] * e2[2];
        for (int k = 0; k < 3; ++k) e2[k] -= d * e1[k];
        const double n2 = std::sqrt(e2[0] * e2[0] + e2[1] * e2[1] + e2[2] * e2[2]);
        for (auto& x : e2) x /= n2;
        std::array<std::array<double, 3>, 3> p;
        for (auto& q : p) {
            const double a = ang(rng);
            for (int k = 0; k < 3; ++k) q[k] = std::cos(a) * e1[k] + std::sin(a) * e2[k];
        }
        const auto cp = canonical_flip_params(p[0], p[1], p[2]);
        const auto g = flip_gadget(cp.a, cp.b, cp.c, cp.d, cp.theta);
        coplanar_ok += g.verdict == GadgetVerdict::NoViolation;
        max_gap = std::max(max_gap, g.cardan_gap);
    }
    for (int t = 0; t < 200; ++t) {
        const auto rp = canonical_flip_params(unit_vector(rng), unit_vector(rng), unit_vector(rng));
        const auto g = flip_gadget(rp.a, rp.b, rp.c, rp.d, rp.theta);
        generic_ok += g.verdict == GadgetVerdict::Incomparable;
        max_gap = std::max(max_gap, g.cardan_gap);
    }
    c.require(coplanar_ok == 200, std::to_string(coplanar_ok) + "/200 coplanar triples NoViolation");
    c.require(generic_ok == 200, std::to_string(generic_ok) + "/200 generic triples Incomparable");
    c.note("coplanar NoViolation " + std::to_string(coplanar_ok) + "/200, generic Incomparable " +
           std::to_string(generic_ok) + "/200, max Cardan gap " + num(max_gap, 3));
}

void antiunitary(Criterion& c) {
    const auto ref = antiunitary_gadget(kPi / 2, 0, 0);
    const RealVec r = ref.gadget.final_schmidt.sorted();
    Rng rng(7);
    std::uniform_real_distribution<double> u(0, 2 * kPi);
    double spread = 0, shift = 0;
    for (int t = 0; t < 50; ++t) {
        const auto g = antiunitary_gadget(u(rng), u(rng), u(rng));
        const RealVec f = g.gadget.final_schmidt.sorted();
        for (std::size_t k = 0; k < 3; ++k) spread = std::max(spread, std::abs(f[k] - r[k]));
        shift = std::max(shift, g.plain_unitary_shift);
    }
    c.require(spread < 1e-9, "final Schmidt spread " + num(spread));
    c.require(shift < 1e-9, "plain-U reduced density shift " + num(shift));
    c.require(ref.gadget.verdict == GadgetVerdict::Incomparable, "verdict Incomparable");
    c.note("max spread " + num(spread, 3) + ", max plain-U shift " + num(shift, 3));
}

void angle_anchors(Criterion& c) {
    const double s = 1 / std::sqrt(2.0);
    c.require(angle_preserving_gadget(0, 1).verdict == GadgetVerdict::Incomparable, "(0,1) Incomparable");
    c.require(angle_preserving_gadget(s, s).verdict == GadgetVerdict::Incomparable, "(1/sqrt2,1/sqrt2) Incomparable");
    const auto id = angle_preserving_gadget(1, 0);
    c.require(id.verdict == GadgetVerdict::NoViolation, "(1,0) NoViolation");
    const RealVec i = id.initial_schmidt.sorted(), f = id.final_schmidt.sorted();
    for (std::size_t k = 0; k < 3; ++k) c.require(std::abs(i[k] - f[k]) < 1e-9, "(1,0) spectrum unchanged");
}

void werner_thresholds(Criterion& c) {
    const double pt = 1. / 3, pc = 1 / std::sqrt(2.0), eps = 1e-6;
    c.require(is_ppt(werner(pt - eps), {1}), "PPT just below p=1/3");
    c.require(!is_ppt(werner(pt + eps), {1}), "NPT just above p=1/3");
    c.require(chsh_M(werner(pc - eps)) < 1, "M<1 just below p=1/sqrt2");
    c.require(chsh_M(werner(pc + eps)) > 1, "M>1 just above p=1/sqrt2");
    double worst = 0;
    for (int k = 0; k < 100; ++k) {
        const double p = k / 99.0;
        worst = std::max(worst, std::abs(concurrence_2q(werner(p)) - std::max(0.0, (3 * p - 1) / 2)));
    }
    c.require(worst < 1e-8, "concurrence grid error " + num(worst));
    c.note("max concurrence error over 100 points " + num(worst, 3));
}

void bound_family(Criterion& c) {
    for (std::size_t n : {4u, 6u, 8u}) {
        const std::string N = "n=" + std::to_string(n) + ": ";
        const auto rec = be_family(n), dir = be_family_direct(n);
        double diff = 0;
        for (int k = 0; k < 4; ++k) diff = std::max(diff, rec.states[k].max_abs_diff(dir.states[k]));
        c.require(diff < 1e-12, N + "recursive vs direct " + num(diff));
        const auto r = verify_family(rec);
        c.require(r.orthogonal, N + "pairwise orthogonal");
        double min_even = INFINITY, max_single = -INFINITY;
        for (const auto& e : r.even_cuts) min_even = std::min(min_even, e.min_pt_eigenvalue);
        for (const auto& e : r.single_cuts) max_single = std::max(max_single, e.min_pt_eigenvalue);
        c.require(min_even >= -1e-9, N + "even cuts PPT, min " + num(min_even));
        c.require(max_single < -1e-6, N + "1:(n-1) cuts NPT, max of min " + num(max_single));
        c.require(r.max_marginal_defect < 1e-12, N + "single-qubit trace-out " + num(r.max_marginal_defect));
        c.require(r.pauli_connected, N + "Pauli connection");
        c.require(r.min_unlock_fidelity >= 1 - 1e-9, N + "unlock fidelity " + num(r.min_unlock_fidelity));
        c.require(r.max_unlock_prob_defect < 1e-9, N + "unlock probabilities " + num(r.max_unlock_prob_defect));
        c.require(r.unlock_ok, N + "unlock predicted Bell states");
        c.note(N + std::to_string(r.even_cuts.size()) + " even cuts (min PT eig " + num(min_even, 3) + "), " +
               std::to_string(r.single_cuts.size()) + " single cuts (max min PT eig " + num(max_single, 3) + ")");
    }
}

void horodecki_tiles(Criterion& c) {
    for (int k = 1; k <= 9; ++k) c.require(is_ppt(horodecki_state(k / 10.0), {0}), "rho_a PPT at a=" + num(k / 10.0));
    const double ins = ppt_test(rho_ins(), {0}).min_eigenvalue;
    c.require(ins < -1e-9, "rho_ins NPT, min PT eig " + num(ins));
    const CMatrix rb = upb_complement();
    c.require(is_ppt(rb, {0}), "Tiles complement PPT");
    int rank = 0;
    for (double e : eigvals_hermitian(rb)) rank += e > 1e-9;
    c.require(rank == 4, "Tiles complement rank " + std::to_string(rank));
    const double full = upb_unextendibility_score(64, 1), trunc = upb_unextendibility_score(64, 1, true);
    c.require(full < 1 - 1e-3, "UPB score " + num(full, 10));
    c.require(trunc >= 1 - 1e-9, "truncated score " + num(trunc, 12));
    c.note("UPB seesaw score " + num(full, 10) + ", 4-state truncation " + num(trunc, 12));
}

void hiding(Criterion& c) {
    for (std::size_t n : {4u, 6u}) {
        const std::string N = "n=" + std::to_string(n) + ": ";
        const auto r = run_demo(n, 100, 2024);
        c.require(r.unlock_rate == 1.0, N + "authorized decode " + num(r.unlock_rate));
        c.require(r.family_leak_rate == 1.0, N + "family bit recovery " + num(r.family_leak_rate));
        c.require(std::abs(r.pm_bit_rate - .5) <= .05, N + "sign bit rate " + num(r.pm_bit_rate));
        c.require(r.trace_security_max < HIDE_SECURITY_TOL, N + "marginals " + num(r.trace_security_max));
        const auto fam = be_family_direct(n);
        c.require(string_distribution(fam.states[0]) == string_distribution(fam.states[1]),
                  N + "rho+ and rho- string distributions identical");
        c.note(N + "decode " + num(r.unlock_rate) + ", family leak " + num(r.family_leak_rate) + ", sign bit " +
               num(r.pm_bit_rate, 4) + ", marginal defect " + num(r.trace_security_max, 3));
    }
}

void properties(Criterion& c) {
    const std::pair<const char*, props::Tally> suites[] = {
        {"majorization axioms", props::majorization_axioms(11)},
        {"entropy inequalities", props::entropy_inequalities(12)},
        {"Peres-Horodecki vs concurrence (500 states)", props::peres_horodecki(13, 500)},
        {"incomparability theorem (1000 pairs)", props::incomparability_theorem(14, 1000)},
    };
    for (const auto& [name, t] : suites) {
        c.require(t.failures == 0, std::string(name) + ": " + t.first_failure);
        c.note(std::string(name) + ": " + std::to_string(t.checks) + " checks, " + std::to_string(t.failures) +
               " failures");
    }
}

} // namespace

int main() {
    std::vector<Criterion> results;
    results.push_back(run(1, "catalysis golden test", catalysis));
    results.push_back(run(2, "multi-copy conversion at k=3", multi_copy));
    results.push_back(run(3, "mutual cooperation examples 1-4", cooperation));
    results.push_back(run(4, "flip gadget at the coordinate axes", flip_axes));
    results.push_back(run(5, "great-circle dichotomy", great_circle));
    results.push_back(run(6, "anti-unitary parameter independence", antiunitary));
    results.push_back(run(7, "angle-preserving anchor points", angle_anchors));
    results.push_back(run(8, "Werner thresholds", werner_thresholds));
    results.push_back(run(9, "bound entangled family n=4,6,8", bound_family));
    results.push_back(run(10, "Horodecki state and Tiles UPB", horodecki_tiles));
    results.push_back(run(11, "hiding demo", hiding));
    results.push_back(run(12, "property suites", properties));
    int failed = 0;
    for (const auto& r : results) failed += !r.ok;
    std::printf("%d/%zu criteria passed\n", static_cast<int>(results.size()) - failed, results.size());
    return failed ? 1 : 0;
}
