// Flipping three qubit states is physical only when their Bloch vectors lie on a great circle.

#include <cmath>
#include <cstdio>
#include <numbers>

#include "entanglia.hpp"

using namespace entanglia;

namespace {
void report(const char* what, const GadgetResult& g) {
    const RealVec i = g.initial_schmidt.sorted(), f = g.final_schmidt.sorted();
    std::printf("%s\n  before (%.4f, %.4f, %.4f)\n  after  (%.4f, %.4f, %.4f)\n  -> %s\n", what, i[0], i[1], i[2], f[0], f[1],
                f[2], to_string(g.verdict));
}
} // namespace

int main() {
    const double s = 1 / std::sqrt(2.0), pi = std::numbers::pi;
    report("x, y, z axes", flip_gadget(s, s, s, s, pi / 2));
    report("three states on the x-z great circle", flip_gadget(s, s, std::cos(.3), std::sin(.3), 0));
    report("anti-unitary U K with random U", antiunitary_gadget(1.1, 0.4, 2.7).gadget);
    report("angle-preserving map with alpha = beta = 1/sqrt2", angle_preserving_gadget(s, s));

    std::puts("\nmixed-state version, +-0.02 Bloch shift along z:");
    const auto m = mixed_flip_demo();
    std::printf("  rho_psi z = %+.4f, rho_phi z = %+.4f, spectra %s\n", m.bloch_psi[2], m.bloch_phi[2], to_string(m.verdict));
}
