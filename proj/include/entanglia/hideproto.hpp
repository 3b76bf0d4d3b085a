#pragma once

#include <bit>
#include <cmath>
#include <cstdint>
#include <map>
#include <random>
#include <string>

#include "boundent.hpp"
#include "error.hpp"
#include "numkernel.hpp"

namespace entanglia {

inline constexpr double HIDE_SECURITY_TOL = 1e-9;
inline constexpr int HIDE_DEFAULT_SHOTS = 1000;

// Codebook: secret k ↦ family state with label code k (0↦ρ⁺, 1↦ρ⁻, 2↦σ⁺, 3↦σ⁻).
struct HiddenState {
    std::size_t n_qubits = 0;
    int secret = 0;
    CMatrix state;
};

inline HiddenState hide(int secret, std::size_t n, const BEFamily& fam) {
    if (secret < 0 || secret > 3) fail(ErrorKind::BadSecret, "secret must be 0..3");
    detail::check_be_n(n);
    if (fam.n_qubits != n) fail(ErrorKind::BadParam, "family size does not match n");
    return {n, secret, fam.states[secret]};
}

inline HiddenState hide(int secret, std::size_t n) {
    if (secret < 0 || secret > 3) fail(ErrorKind::BadSecret, "secret must be 0..3");
    return hide(secret, n, be_family_direct(n));
}

inline int decode_global(const HiddenState& h, const BEFamily& fam) {
    int best = 0;
    double bv = -INFINITY;
    for (int k = 0; k < 4; ++k) {
        const double v = trace_product(fam.states[k], h.state);
        if (v > bv) {
            bv = v;
            best = k;
        }
    }
    return best;
}

inline int decode_global(const HiddenState& h) { return decode_global(h, be_family_direct(h.n_qubits)); }

// Computational-basis statistics: the diagonal of the state.
inline RealVec string_distribution(const CMatrix& rho) {
    RealVec d = rho.diagonal_real();
    for (auto& x : d) x = std::max(x, 0.0);
    return d;
}

namespace detail {
inline int zero_parity(std::size_t x, std::size_t n) {
    return static_cast<int>((n - static_cast<std::size_t>(std::popcount(x))) % 2);
}
} // namespace detail

struct ParityAttackResult {
    int family_bit = 0;          // majority zero-count parity: 0 even (ρ), 1 odd (σ)
    bool parity_consistent = true; // every sampled string had the same parity
    int pm_guess = 0;            // majority of the last bit of each string
    double pm_hits = 0;          // fraction of shots whose last bit equals the true sign bit
    int shots = 0;
    std::uint64_t seed = 0;
    std::map<std::string, int> counts;
};

inline ParityAttackResult parity_attack(const HiddenState& h, std::uint64_t seed, int shots = HIDE_DEFAULT_SHOTS) {
    if (shots < 1) fail(ErrorKind::BadParam, "shots must be at least 1");
    const RealVec dist = string_distribution(h.state);
    std::discrete_distribution<std::size_t> pick(dist.begin(), dist.end());
    Rng rng(seed);
    ParityAttackResult r;
    r.shots = shots;
    r.seed = seed;
    int odd = 0, last_one = 0, hits = 0, first_parity = -1;
    const int true_pm = h.secret & 1;
    for (int s = 0; s < shots; ++s) {
        const std::size_t x = pick(rng);
        const int par = detail::zero_parity(x, h.n_qubits);
        if (first_parity < 0) first_parity = par;
        if (par != first_parity) r.parity_consistent = false;
        odd += par;
        const int last = static_cast<int>(x & 1U);
        last_one += last;
        hits += last == true_pm;
        ++r.counts[detail::bit_string(x, h.n_qubits)];
    }
    r.family_bit = 2 * odd > shots ? 1 : 0;
    r.pm_guess = 2 * last_one > shots ? 1 : 0;
    r.pm_hits = static_cast<double>(hits) / shots;
    return r;
}

// ‖Tr_party ρ − I/2^{n−1}‖₁
inline double trace_security(const HiddenState& h, std::size_t excluded_party) {
    if (excluded_party >= h.n_qubits) fail(ErrorKind::BadParty, "party index out of range");
    IndexSet keep;
    for (std::size_t k = 0; k < h.n_qubits; ++k)
        if (k != excluded_party) keep.push_back(k);
    CMatrix red = partial_trace(h.state.with_dims(Dims(h.n_qubits, 2)), keep);
    red.clear_dims();
    const std::size_t D = red.rows();
    return trace_norm(red - CMatrix::identity(D) * Cx(1.0 / static_cast<double>(D)));
}

// Authorized decode: the first n−2 parties measure jointly, the last two measure in the Bell basis.
inline int decode_unlock(const HiddenState& h, Rng& rng) {
    const auto br = unlock_branches(h.state, h.n_qubits);
    RealVec p(4);
    for (int t = 0; t < 4; ++t) p[t] = std::max(br[t].probability, 0.0);
    const int t = static_cast<int>(std::discrete_distribution<int>(p.begin(), p.end())(rng));
    RealVec q(4);
    for (int b = 0; b < 4; ++b)
        q[b] = std::max(expectation(br[t].conditional, bell(bell_of_code(b)).amplitudes()).real(), 0.0);
    const int b = static_cast<int>(std::discrete_distribution<int>(q.begin(), q.end())(rng));
    return t ^ b;
}

struct DemoReport {
    std::size_t n = 0;
    int trials = 0;
    int shots = 0;
    std::uint64_t seed = 0;
    double unlock_rate = 0;
    double global_rate = 0;
    double family_leak_rate = 0;
    double pm_bit_rate = 0; // pooled over all shots
    double trace_security_max = 0;
};

inline DemoReport run_demo(std::size_t n, int trials, std::uint64_t seed, int shots = HIDE_DEFAULT_SHOTS) {
    detail::check_be_n(n);
    if (trials < 1) fail(ErrorKind::BadParam, "trials must be at least 1");
    const BEFamily fam = be_family_direct(n);
    Rng master(seed);
    DemoReport rep{n, trials, shots, seed};
    int unlocked = 0, global = 0, leaked = 0;
    double pm_hits = 0;
    for (int t = 0; t < trials; ++t) {
        Rng rng(master());
        const int secret = static_cast<int>(rng() % 4);
        const HiddenState h = hide(secret, n, fam);
        const auto atk = parity_attack(h, rng(), shots);
        leaked += atk.family_bit == (secret >> 1);
        pm_hits += atk.pm_hits * shots;
        for (std::size_t q = 0; q < n; ++q) rep.trace_security_max = std::max(rep.trace_security_max, trace_security(h, q));
        unlocked += decode_unlock(h, rng) == secret;
        global += decode_global(h, fam) == secret;
    }
    rep.unlock_rate = static_cast<double>(unlocked) / trials;
    rep.global_rate = static_cast<double>(global) / trials;
    rep.family_leak_rate = static_cast<double>(leaked) / trials;
    rep.pm_bit_rate = pm_hits / (static_cast<double>(trials) * shots);
    return rep;
}

} // namespace entanglia
