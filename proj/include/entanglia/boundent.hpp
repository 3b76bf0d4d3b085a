#pragma once

#include <array>
#include <bit>
#include <cmath>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "error.hpp"
#include "numkernel.hpp"
#include "qstate.hpp"
#include "witness.hpp"

namespace entanglia {

inline constexpr std::size_t BE_MAX_N = 10;
inline constexpr std::size_t BE_FULL_VERIFY_N = 8;
inline constexpr double BE_TOL = 1e-12;
inline constexpr double BE_NPT_TOL = 1e-9;

// Index doubles as the two-bit code: high bit = family (ρ/σ), low bit = sign.
enum class BELabel { RhoPlus = 0, RhoMinus = 1, SigmaPlus = 2, SigmaMinus = 3 };

inline const char* to_string(BELabel l) {
    switch (l) {
    case BELabel::RhoPlus: return "rho+";
    case BELabel::RhoMinus: return "rho-";
    case BELabel::SigmaPlus: return "sigma+";
    case BELabel::SigmaMinus: return "sigma-";
    }
    return "?";
}

inline BELabel parse_be_label(std::string_view s) {
    for (int k = 0; k < 4; ++k)
        if (s == to_string(static_cast<BELabel>(k))) return static_cast<BELabel>(k);
    fail(ErrorKind::BadLabel, "unknown state label '" + std::string(s) + "' (rho+, rho-, sigma+, sigma-)");
}

inline BELabel be_label(int k) {
    if (k < 0 || k > 3) fail(ErrorKind::BadLabel, "state label index must be 0..3");
    return static_cast<BELabel>(k);
}

// Bell code matches the label code: Φ⁺=0, Φ⁻=1, Ψ⁺=2, Ψ⁻=3.
inline Bell bell_of_code(int k) { return static_cast<Bell>(k & 3); }

struct BEFamily {
    std::size_t n_qubits = 0;
    std::array<CMatrix, 4> states;
    std::array<std::vector<PureState>, 4> support_vectors;

    const CMatrix& operator[](BELabel l) const { return states[static_cast<int>(l)]; }
};

namespace detail {
inline void check_be_n(std::size_t n) {
    if (n % 2 != 0) fail(ErrorKind::OddN, "qubit count must be even");
    if (n < 4) fail(ErrorKind::BadParam, "qubit count must be at least 4");
    if (n > BE_MAX_N) fail(ErrorKind::TooLarge, "qubit count above 10");
}

inline Dims qubit_dims(std::size_t n) { return Dims(n, 2); }

inline std::string bit_string(std::size_t x, std::size_t n) {
    std::string s(n, '0');
    for (std::size_t k = 0; k < n; ++k)
        if ((x >> (n - 1 - k)) & 1U) s[k] = '1';
    return s;
}

// Support vectors (|p⟩ ± |p̄⟩)/√2 for strings p starting with 0, grouped by zero-count parity.
inline std::array<std::vector<PureState>, 4> be_supports(std::size_t n) {
    std::array<std::vector<PureState>, 4> sup;
    const std::size_t N = std::size_t{1} << n, mask = N - 1;
    const double s = 1 / std::sqrt(2.0);
    for (std::size_t p = 0; p < N / 2; ++p) {
        const std::size_t zeros = n - static_cast<std::size_t>(std::popcount(p));
        const int fam = zeros % 2 == 0 ? 0 : 2;
        for (int sign = 0; sign < 2; ++sign) {
            CVec v(N);
            v[p] = s;
            v[p ^ mask] = sign == 0 ? s : -s;
            sup[fam + sign].emplace_back(std::move(v), qubit_dims(n));
        }
    }
    return sup;
}

inline CMatrix uniform_mixture(const std::vector<PureState>& vs, std::size_t dim) {
    CMatrix m(dim, dim);
    const double w = 1.0 / static_cast<double>(vs.size());
    for (const auto& v : vs) {
        const CVec& a = v.amplitudes();
        for (std::size_t i = 0; i < dim; ++i) {
            if (a[i] == Cx{}) continue;
            for (std::size_t j = 0; j < dim; ++j)
                if (a[j] != Cx{}) m(i, j) += w * a[i] * std::conj(a[j]);
        }
    }
    return m;
}
} // namespace detail

inline BEFamily be_family_direct(std::size_t n) {
    detail::check_be_n(n);
    BEFamily f;
    f.n_qubits = n;
    f.support_vectors = detail::be_supports(n);
    for (int k = 0; k < 4; ++k) {
        f.states[k] = detail::uniform_mixture(f.support_vectors[k], std::size_t{1} << n);
        f.states[k].set_dims(detail::qubit_dims(n));
    }
    return f;
}

// Recursive step: state s on m+2 qubits = ¼ Σ_t state_t(m) ⊗ P[Bell(t XOR s)].
inline std::array<CMatrix, 4> be_step(const std::array<CMatrix, 4>& prev) {
    std::array<CMatrix, 4> next;
    for (int s = 0; s < 4; ++s) {
        CMatrix acc;
        for (int t = 0; t < 4; ++t) {
            CMatrix term = kron(prev[t], bell(bell_of_code(t ^ s)).density());
            acc = t == 0 ? term : acc + term;
        }
        acc *= 0.25;
        next[s] = acc;
    }
    return next;
}

inline BEFamily be_family(std::size_t n) {
    detail::check_be_n(n);
    std::array<CMatrix, 4> cur;
    for (int k = 0; k < 4; ++k) cur[k] = bell(bell_of_code(k)).density();
    for (std::size_t m = 2; m < n; m += 2) cur = be_step(cur);
    BEFamily f;
    f.n_qubits = n;
    f.support_vectors = detail::be_supports(n);
    for (int k = 0; k < 4; ++k) {
        cur[k].set_dims(detail::qubit_dims(n));
        f.states[k] = std::move(cur[k]);
    }
    return f;
}

// ── Unlocking ─────────────────────────────────────────────────────────

struct UnlockOutcome {
    BELabel measured;     // which (n−2)-qubit family member (n=4: Bell state) was found
    double probability = 0;
    Bell predicted;
    double fidelity = 0;  // ⟨Bell|ρ_cond|Bell⟩
    CMatrix conditional;  // state of the last two qubits
};

struct UnlockResult {
    BELabel label;
    std::array<UnlockOutcome, 4> outcomes;
};

struct UnlockBranch {
    double probability = 0;
    CMatrix conditional; // last two qubits, normalized when probability > 0
};

// Projects the first n−2 qubits of any n-qubit state onto the four support subspaces of the
// (n−2)-qubit family (n=4: Bell projectors) and returns the branch states of the last pair.
inline std::array<UnlockBranch, 4> unlock_branches(const CMatrix& rho, std::size_t n) {
    detail::check_be_n(n);
    if (rho.rows() != (std::size_t{1} << n)) fail(ErrorKind::BadDims, "state size does not match qubit count");
    std::array<CMatrix, 4> proj;
    if (n == 4) {
        for (int t = 0; t < 4; ++t) proj[t] = bell(bell_of_code(t)).density();
    } else {
        const BEFamily small = be_family_direct(n - 2);
        const double scale = static_cast<double>(small.support_vectors[0].size());
        for (int t = 0; t < 4; ++t) proj[t] = small.states[t] * Cx(scale);
    }
    const std::size_t D = std::size_t{1} << (n - 2);
    std::array<UnlockBranch, 4> out;
    for (int t = 0; t < 4; ++t) {
        CMatrix cond(4, 4);
        const CMatrix& P = proj[t];
        // cond[b,b'] = Σ_{i,j} P[j,i] ρ[(i,b),(j,b')]
        for (std::size_t i = 0; i < D; ++i)
            for (std::size_t j = 0; j < D; ++j) {
                const Cx pji = P(j, i);
                if (pji == Cx{}) continue;
                for (std::size_t b = 0; b < 4; ++b)
                    for (std::size_t c = 0; c < 4; ++c) cond(b, c) += pji * rho(i * 4 + b, j * 4 + c);
            }
        const double p = cond.trace().real();
        if (p > 0) cond /= Cx(p);
        cond.set_dims({2, 2});
        out[t] = {p, std::move(cond)};
    }
    return out;
}

inline UnlockResult unlock(const BEFamily& fam, BELabel label) {
    const int s = static_cast<int>(label);
    if (s < 0 || s > 3) fail(ErrorKind::BadLabel, "state label index must be 0..3");
    auto br = unlock_branches(fam.states[s], fam.n_qubits);
    UnlockResult res{label, {}};
    for (int t = 0; t < 4; ++t) {
        UnlockOutcome o;
        o.measured = static_cast<BELabel>(t);
        o.probability = br[t].probability;
        o.predicted = bell_of_code(t ^ s);
        o.fidelity = expectation(br[t].conditional, bell(o.predicted).amplitudes()).real();
        o.conditional = std::move(br[t].conditional);
        res.outcomes[t] = std::move(o);
    }
    return res;
}

// ── Verification ──────────────────────────────────────────────────────

struct CutEvidence {
    BELabel label;
    IndexSet cut;
    double min_pt_eigenvalue = 0;
};

struct FamilyReport {
    std::size_t n_qubits = 0;
    bool orthogonal = false;
    bool permutation_symmetric = false;
    bool even_cut_ppt = false;
    bool single_vs_rest_npt = false;
    bool pauli_connected = false;
    bool reduced_max_mixed = false;
    bool unlock_ok = false;
    bool reduced = false; // n=10: only a sample of even cuts was checked
    double max_overlap = 0;
    double max_symmetry_defect = 0;
    double max_pauli_defect = 0;
    double max_marginal_defect = 0;
    double max_unlock_prob_defect = 0;
    double min_unlock_fidelity = 1;
    std::vector<CutEvidence> even_cuts;
    std::vector<CutEvidence> single_cuts;

    bool all() const {
        return orthogonal && permutation_symmetric && even_cut_ppt && single_vs_rest_npt && pauli_connected &&
               reduced_max_mixed && unlock_ok;
    }
};

// Tr(AB) for Hermitian A, B.
inline double trace_product(const CMatrix& a, const CMatrix& b) {
    Cx s{};
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) s += a(i, j) * b(j, i);
    return s.real();
}

// P on `qubit` conjugating rho: (P_q) ρ (P_q)†.
inline CMatrix conjugate_on_qubit(const CMatrix& rho, const CMatrix& P, std::size_t qubit) {
    const Dims& dims = rho.require_dims();
    if (qubit >= dims.size()) fail(ErrorKind::BadParty, "qubit index out of range");
    CMatrix op = CMatrix::identity(1);
    for (std::size_t k = 0; k < dims.size(); ++k) op = kron(op, k == qubit ? P : CMatrix::identity(dims[k]));
    CMatrix out = op * rho * op.adjoint();
    out.set_dims(dims);
    return out;
}

// Even-sized subsets containing qubit 0 (one representative per bipartition).
inline std::vector<IndexSet> even_cuts(std::size_t n) {
    std::vector<IndexSet> cuts;
    for (std::size_t m = 0; m < (std::size_t{1} << (n - 1)); ++m) {
        IndexSet s{0};
        for (std::size_t k = 1; k < n; ++k)
            if ((m >> (k - 1)) & 1U) s.push_back(k);
        if (s.size() % 2 == 0 && s.size() < n) cuts.push_back(s);
    }
    return cuts;
}

inline FamilyReport verify_family(const BEFamily& fam) {
    const std::size_t n = fam.n_qubits;
    const std::size_t N = std::size_t{1} << n;
    FamilyReport r;
    r.n_qubits = n;

    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            r.max_overlap = std::max(r.max_overlap, std::abs(trace_product(fam.states[i], fam.states[j])));
    r.orthogonal = r.max_overlap <= BE_TOL;

    for (std::size_t k = 0; k + 1 < n; ++k) {
        IndexSet perm(n);
        for (std::size_t q = 0; q < n; ++q) perm[q] = q;
        std::swap(perm[k], perm[k + 1]);
        for (const auto& st : fam.states)
            r.max_symmetry_defect = std::max(r.max_symmetry_defect, permute_subsystems(st, perm).max_abs_diff(st));
    }
    r.permutation_symmetric = r.max_symmetry_defect <= BE_TOL;

    r.even_cut_ppt = true;
    auto cuts = even_cuts(n);
    if (n > BE_FULL_VERIFY_N) {
        r.reduced = true;
        std::vector<IndexSet> few;
        for (std::size_t m = 2; m < n; m += 2) {
            IndexSet s;
            for (std::size_t k = 0; k < m; ++k) s.push_back(k);
            few.push_back(s);
        }
        cuts = few;
    }
    for (const auto& cut : cuts)
        for (int k = 0; k < 4; ++k) {
            const double m = min_eigenvalue(partial_transpose(fam.states[k], cut));
            r.even_cuts.push_back({static_cast<BELabel>(k), cut, m});
            if (m < -PPT_TOL) r.even_cut_ppt = false;
        }

    r.single_vs_rest_npt = true;
    for (std::size_t q = 0; q < n; ++q)
        for (int k = 0; k < 4; ++k) {
            const double m = min_eigenvalue(partial_transpose(fam.states[k], {q}));
            r.single_cuts.push_back({static_cast<BELabel>(k), {q}, m});
            if (!(m < -BE_NPT_TOL)) r.single_vs_rest_npt = false;
        }

    const CMatrix iy = pauli::Y() * Cx(0, 1);
    const CMatrix paulis[4] = {pauli::I(), pauli::Z(), pauli::X(), iy};
    for (int k = 0; k < 4; ++k)
        r.max_pauli_defect =
            std::max(r.max_pauli_defect, conjugate_on_qubit(fam.states[0], paulis[k], 0).max_abs_diff(fam.states[k]));
    r.pauli_connected = r.max_pauli_defect <= BE_TOL;

    const CMatrix mm = CMatrix::identity(N / 2) * Cx(2.0 / static_cast<double>(N));
    for (std::size_t q = 0; q < n; ++q) {
        IndexSet keep;
        for (std::size_t k = 0; k < n; ++k)
            if (k != q) keep.push_back(k);
        for (const auto& st : fam.states) {
            CMatrix red = partial_trace(st, keep);
            red.clear_dims();
            r.max_marginal_defect = std::max(r.max_marginal_defect, red.max_abs_diff(mm));
        }
    }
    r.reduced_max_mixed = r.max_marginal_defect <= BE_TOL;

    for (int k = 0; k < 4; ++k) {
        const auto u = unlock(fam, static_cast<BELabel>(k));
        for (const auto& o : u.outcomes) {
            r.max_unlock_prob_defect = std::max(r.max_unlock_prob_defect, std::abs(o.probability - 0.25));
            r.min_unlock_fidelity = std::min(r.min_unlock_fidelity, o.fidelity);
        }
    }
    r.unlock_ok = r.max_unlock_prob_defect <= 1e-9 && r.min_unlock_fidelity >= 1 - 1e-9;
    return r;
}

// Smolin state rebuilt as ¼ Σ_k P[Bell_k]⊗P[Bell_k] on each of the three pairings; max deviation from ρ⁺₄.
inline double smolin_pairing_defect(const BEFamily& fam4) {
    if (fam4.n_qubits != 4) fail(ErrorKind::BadParam, "pairing check is defined for four qubits");
    CMatrix base(16, 16);
    for (int k = 0; k < 4; ++k) {
        const CMatrix p = bell(bell_of_code(k)).density();
        base += kron(p, p) * Cx(0.25);
    }
    base.set_dims({2, 2, 2, 2});
    // factor order after permutation: AB:CD, AC:BD, AD:BC
    const IndexSet perms[3] = {{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 2, 3, 1}};
    double worst = 0;
    for (const auto& p : perms) {
        // base lives on (x0,x1,x2,x3) = pairing slots; map slot k to qubit p[k]
        IndexSet inv(4);
        for (std::size_t k = 0; k < 4; ++k) inv[p[k]] = k;
        worst = std::max(worst, permute_subsystems(base, inv).max_abs_diff(fam4.states[0]));
    }
    return worst;
}

// ── Horodecki 3×3 state ───────────────────────────────────────────────

inline CMatrix rho_ins() {
    CMatrix m = CMatrix::identity(9);
    CVec ghz(9);
    ghz[0] = ghz[4] = ghz[8] = 1;
    m += CMatrix::projector(ghz);
    for (std::size_t idx : {0, 4, 8, 6}) m(idx, idx) -= 1; // |00⟩,|11⟩,|22⟩,|20⟩
    m *= 0.125;
    m.set_dims({3, 3});
    return m;
}

inline CVec horodecki_phi(double a) {
    CVec v(9);
    v[6] = std::sqrt((1 + a) / 2); // |2⟩|0⟩
    v[8] = std::sqrt((1 - a) / 2); // |2⟩|2⟩
    return v;
}

inline CMatrix horodecki_state(double a) {
    if (!(a >= 0 && a <= 1)) fail(ErrorKind::BadParam, "a must lie in [0,1]");
    CMatrix m = rho_ins() * Cx(8 * a) + CMatrix::projector(horodecki_phi(a));
    m /= Cx(8 * a + 1);
    m.set_dims({3, 3});
    return m;
}

// ── Tiles UPB ─────────────────────────────────────────────────────────

inline std::array<PureState, 5> tiles_upb() {
    const double s = 1 / std::sqrt(2.0);
    auto prod = [](CVec a, CVec b) { return PureState::from_unnormalized(kron(a, b), {3, 3}); };
    return {prod({1, 0, 0}, {s, -s, 0}), prod({s, -s, 0}, {0, 0, 1}), prod({0, 0, 1}, {0, s, -s}),
            prod({0, s, -s}, {1, 0, 0}), prod({1, 1, 1}, {1, 1, 1})};
}

inline CMatrix upb_complement_projector(std::size_t use = 5) {
    const auto upb = tiles_upb();
    CMatrix p = CMatrix::identity(9);
    for (std::size_t k = 0; k < use && k < 5; ++k) p -= upb[k].density();
    p.set_dims({3, 3});
    return p;
}

inline CMatrix upb_complement() {
    CMatrix p = upb_complement_projector() * Cx(0.25);
    p.set_dims({3, 3});
    return p;
}

// Seesaw max of ⟨u⊗v|Π|u⊗v⟩ over product states; Π acts on C^dA⊗C^dB.
inline double max_product_overlap(const CMatrix& Pi, std::size_t dA, std::size_t dB, int trials, std::uint64_t seed,
                                  int iters = 200) {
    if (trials < 1) fail(ErrorKind::BadParam, "trials must be at least 1");
    Rng rng(seed);
    double best = -1;
    auto reduce_B = [&](const CVec& v) { // (I⊗v)† Π (I⊗v)
        CMatrix m(dA, dA);
        for (std::size_t a = 0; a < dA; ++a)
            for (std::size_t a2 = 0; a2 < dA; ++a2) {
                Cx s{};
                for (std::size_t b = 0; b < dB; ++b)
                    for (std::size_t b2 = 0; b2 < dB; ++b2)
                        s += std::conj(v[b]) * Pi(a * dB + b, a2 * dB + b2) * v[b2];
                m(a, a2) = s;
            }
        return m;
    };
    auto reduce_A = [&](const CVec& u) {
        CMatrix m(dB, dB);
        for (std::size_t b = 0; b < dB; ++b)
            for (std::size_t b2 = 0; b2 < dB; ++b2) {
                Cx s{};
                for (std::size_t a = 0; a < dA; ++a)
                    for (std::size_t a2 = 0; a2 < dA; ++a2)
                        s += std::conj(u[a]) * Pi(a * dB + b, a2 * dB + b2) * u[a2];
                m(b, b2) = s;
            }
        return m;
    };
    for (int t = 0; t < trials; ++t) {
        CVec u = normalized(gaussian_vector(dA, rng));
        CVec v = normalized(gaussian_vector(dB, rng));
        double val = -1;
        for (int it = 0; it < iters; ++it) {
            const auto ea = eig_hermitian(reduce_B(v));
            u = column(ea.vectors, 0);
            const auto eb = eig_hermitian(reduce_A(u));
            v = column(eb.vectors, 0);
            const double nv = eb.values[0];
            const bool done = std::abs(nv - val) < 1e-15;
            val = nv;
            if (done) break;
        }
        best = std::max(best, val);
    }
    return best;
}

// drop_last: score against the first four Tiles states only (an extendible set).
inline double upb_unextendibility_score(int trials, std::uint64_t seed, bool drop_last = false) {
    return max_product_overlap(upb_complement_projector(drop_last ? 4 : 5), 3, 3, trials, seed);
}

} // namespace entanglia
