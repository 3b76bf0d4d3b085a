// Hide two bits in a 6-qubit bound entangled state, then decode and attack.

#include <cstdio>

#include "entanglia.hpp"

using namespace entanglia;

int main() {
    const std::size_t n = 6;
    const BEFamily fam = be_family_direct(n);
    Rng rng(42);
    for (int secret = 0; secret < 4; ++secret) {
        const HiddenState h = hide(secret, n, fam);
        double worst = 0;
        for (std::size_t q = 0; q < n; ++q) worst = std::max(worst, trace_security(h, q));
        const auto atk = parity_attack(h, 100 + secret);
        std::printf("secret %d (%s): unlocked %d, global %d, parity attack family bit %d (true %d), "
                    "sign-bit hits %.3f, marginal defect %.1e\n",
                    secret, to_string(be_label(secret)), decode_unlock(h, rng), decode_global(h, fam), atk.family_bit,
                    secret >> 1, atk.pm_hits, worst);
    }
    const DemoReport r = run_demo(n, 200, 7);
    std::printf("\n200 random secrets: decode %.3f, family bit leaked %.3f, sign bit %.3f\n", r.unlock_rate,
                r.family_leak_rate, r.pm_bit_rate);
}
