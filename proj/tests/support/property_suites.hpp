#pragma once

// Randomized property suites shared by the unit tests and the acceptance run.
// Each returns a tally; a suite passes when failures == 0.

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "entanglia.hpp"

namespace entanglia::props {

struct Tally {
    int checks = 0;
    int failures = 0;
    std::string first_failure;

    void check(bool ok, const std::string& what) {
        ++checks;
        if (!ok && failures++ == 0) first_failure = what;
    }
    void merge(const Tally& o) {
        if (o.failures && !failures) first_failure = o.first_failure;
        checks += o.checks;
        failures += o.failures;
    }
};

namespace detail {
// |U_ij|² of a Haar unitary is doubly stochastic.
inline RealVec unistochastic_apply(const RealVec& y, Rng& rng) {
    const CMatrix u = random_unitary(y.size(), rng);
    RealVec x(y.size(), 0.0);
    for (std::size_t i = 0; i < y.size(); ++i)
        for (std::size_t j = 0; j < y.size(); ++j) x[i] += std::norm(u(i, j)) * y[j];
    return x;
}

inline CMatrix rotate(const CMatrix& rho, const CMatrix& u) {
    CMatrix r = u * rho * u.adjoint();
    if (rho.has_dims()) r.set_dims(*rho.dims());
    return r;
}
} // namespace detail

inline Tally majorization_axioms(std::uint64_t seed, int trials = 200) {
    Rng rng(seed);
    Tally t;
    for (int k = 0; k < trials; ++k) {
        const std::size_t d = 2 + k % 5;
        const std::string tag = " trial " + std::to_string(k);
        const ProbVector z = random_prob(d, rng);
        t.check(majorizes(z, z), "reflexivity" + tag);

        const RealVec y = detail::unistochastic_apply(z.values(), rng);
        const RealVec x = detail::unistochastic_apply(y, rng);
        t.check(majorizes(y, z) && majorizes(x, y) && majorizes(x, z), "transitivity" + tag);

        RealVec uniform(d, 1.0 / static_cast<double>(d)), pure(d, 0.0);
        pure[0] = 1;
        t.check(majorizes(uniform, z) && majorizes(z, pure), "extremes" + tag);

        const CMatrix h = random_hermitian(d, rng);
        t.check(majorizes(h.diagonal_real(), eigvals_hermitian(h)), "Schur" + tag);

        // Dephasing in a random basis, grouped into blocks of up to two vectors.
        const CMatrix rho = random_density({d}, rng);
        const CMatrix u = random_unitary(d, rng);
        std::vector<CMatrix> projectors;
        for (std::size_t b = 0; b < d; b += 2) {
            CMatrix p(d, d);
            for (std::size_t c = b; c < std::min(d, b + 2); ++c) {
                CVec v(d);
                for (std::size_t i = 0; i < d; ++i) v[i] = u(i, c);
                p += CMatrix::projector(v);
            }
            projectors.push_back(p);
        }
        t.check(spectra_majorized(dephase(rho, projectors), rho), "dephasing" + tag);
    }
    return t;
}

inline Tally entropy_inequalities(std::uint64_t seed, int trials = 200) {
    Rng rng(seed);
    Tally t;
    constexpr double tol = 1e-9;
    for (int k = 0; k < trials; ++k) {
        const std::string tag = " trial " + std::to_string(k);
        const Dims dims = k % 2 ? Dims{2, 2} : Dims{3, 3};
        const CMatrix ab = random_density(dims, rng, 1 + k % 9 % product(dims));
        const double s = von_neumann_entropy(ab);
        const double sa = von_neumann_entropy(partial_trace(ab, {0}));
        const double sb = von_neumann_entropy(partial_trace(ab, {1}));
        t.check(s <= sa + sb + tol, "subadditivity" + tag);
        t.check(s >= std::abs(sa - sb) - tol, "triangle" + tag);

        const std::size_t n = product(dims);
        const ProbVector w = random_prob(3, rng);
        CMatrix mix(n, n);
        double avg = 0;
        for (std::size_t i = 0; i < 3; ++i) {
            const CMatrix r = random_density(dims, rng, 1 + (k + i) % n);
            mix += r * Cx(w[i]);
            avg += w[i] * von_neumann_entropy(r);
        }
        t.check(von_neumann_entropy(mix) >= avg - tol, "concavity" + tag);

        const CMatrix rotated = detail::rotate(ab, random_unitary(n, rng));
        t.check(shannon(rotated.diagonal_real()) >= s - tol, "measurement bound" + tag);

        if (k % 4 == 0) {
            const CMatrix abc = random_density({2, 2, 2}, rng, 1 + k % 8);
            const double lhs = von_neumann_entropy(abc) + von_neumann_entropy(partial_trace(abc, {1}));
            const double rhs = von_neumann_entropy(partial_trace(abc, {0, 1})) + von_neumann_entropy(partial_trace(abc, {1, 2}));
            t.check(lhs <= rhs + 1e-8, "strong subadditivity" + tag);
        }
    }
    return t;
}

// PPT ⟺ zero concurrence on two qubits.
inline Tally peres_horodecki(std::uint64_t seed, int count = 500) {
    Rng rng(seed);
    Tally t;
    for (int k = 0; k < count; ++k) {
        const CMatrix rho = random_density({2, 2}, rng, 1 + k % 4);
        const bool ppt = is_ppt(rho, {1});
        const double c = concurrence_2q(rho);
        t.check(ppt == (c < 1e-7), "state " + std::to_string(k) + ": ppt=" + std::to_string(ppt) + " C=" + std::to_string(c));
    }
    return t;
}

// Incomparable pairs satisfy a₁ + b_d < 1 and b₁ + a_d < 1.
inline Tally incomparability_theorem(std::uint64_t seed, int count = 1000) {
    Rng rng(seed);
    Tally t;
    int found = 0;
    for (std::size_t d = 3; found < count; d = d == 6 ? 3 : d + 1) {
        const ProbVector a = random_prob(d, rng), b = random_prob(d, rng);
        if (compare(a, b) != MajVerdict::Incomparable) continue;
        const RealVec as = a.sorted(), bs = b.sorted();
        t.check(as[0] + bs[d - 1] < 1 && bs[0] + as[d - 1] < 1, "pair " + std::to_string(found));
        ++found;
    }
    return t;
}

} // namespace entanglia::props
