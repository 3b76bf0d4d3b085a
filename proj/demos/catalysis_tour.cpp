// A walk through pure-state conversions: Nielsen, catalysis, multiple copies,
// assistance and mutual cooperation.

#include <cstdio>

#include "entanglia.hpp"

using namespace entanglia;

namespace {
void show(const char* name, std::span<const double> v) {
    std::printf("  %-6s (", name);
    for (std::size_t i = 0; i < v.size(); ++i) std::printf("%s%.4g", i ? ", " : "", v[i]);
    std::printf(")  E = %.4f\n", shannon(v));
}
} // namespace

int main() {
    const RealVec a{.4, .4, .1, .1}, b{.5, .25, .25, 0};
    std::puts("1. An incomparable pair that a catalyst unlocks");
    show("psi", a);
    show("phi", b);
    std::printf("  psi -> phi directly: %s\n", nielsen(a, b) ? "yes" : "no");
    if (const auto c = find_catalyst_2x2(a, b)) {
        const RealVec cat{*c, 1 - *c};
        std::printf("  with catalyst (%.3g, %.3g): %s\n", cat[0], cat[1],
                    nielsen(tensor(a, cat), tensor(b, cat)) ? "yes" : "no");
    }
    for (int k = 1; k <= 3; ++k) std::printf("  %d copies: %s\n", k, multicopy(a, b, k) ? "convertible" : "not convertible");

    std::puts("\n2. A 3x3 pair is strongly incomparable, so no 2x2 catalyst exists");
    const RealVec p{.4, .4, .2}, q{.48, .26, .26};
    show("psi", p);
    show("phi", q);
    const auto pc = classify(p, q);
    std::printf("  verdict %s, strong %s, catalyst %s\n", to_string(pc.verdict), pc.strong ? "yes" : "no",
                find_catalyst_2x2(p, q) ? "found" : "none");

    std::puts("\n3. Spending a little entanglement instead");
    const AssistPlan m = min_assist_3x3(p, q);
    std::printf("  least 2x2 resource: (%.4g, %.4g), %.4f ebits\n", m.resource[0], m.resource[1], m.e0->value);

    std::puts("\n4. Or trading with a second incomparable pair");
    const CoopPlan plan = coop_construct(p, q);
    show("chi", plan.chi.values());
    show("eta", plan.eta.values());
    std::printf("  psi(x)chi -> phi(x)eta: %s, all four cross pairs incomparable: %s\n", plan.joint_ok ? "yes" : "no",
                plan.all_cross() ? "yes" : "no");
}
