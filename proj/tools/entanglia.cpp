// entanglia: command-line front end.
// Exit codes: 0 success, 2 usage error, 3 numeric-precondition failure.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "entanglia.hpp"

using namespace entanglia;

namespace {

constexpr int EXIT_USAGE = 2;
constexpr int EXIT_NUMERIC = 3;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Config {
    bool json = false;
    std::uint64_t seed = 1;
    int jobs = 1;
};

// ── Output helpers ────────────────────────────────────────────────────

std::string g6(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", x);
    return buf;
}

std::string vec6(std::span<const double> v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + g6(v[i]);
    return s + ")";
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

// nlohmann's dump prints the shortest round-trip form; reports use 17 significant digits.
void emit(const json& j, std::ostream& os, int indent = 0) {
    const std::string pad(static_cast<std::size_t>(indent + 2), ' '), end(static_cast<std::size_t>(indent), ' ');
    switch (j.type()) {
    case json::value_t::object: {
        if (j.empty()) {
            os << "{}";
            return;
        }
        os << "{\n";
        bool first = true;
        for (auto it = j.begin(); it != j.end(); ++it) {
            os << (first ? "" : ",\n") << pad << json(it.key()).dump() << ": ";
            emit(it.value(), os, indent + 2);
            first = false;
        }
        os << "\n" << end << "}";
        return;
    }
    case json::value_t::array: {
        const bool flat = std::all_of(j.begin(), j.end(), [](const json& x) { return x.is_primitive(); });
        os << "[";
        for (std::size_t i = 0; i < j.size(); ++i) {
            os << (i ? "," : "") << (flat ? (i ? " " : "") : "\n" + pad);
            emit(j[i], os, indent + 2);
        }
        os << (flat || j.empty() ? "" : "\n" + end) << "]";
        return;
    }
    case json::value_t::number_float: {
        const double x = j.get<double>();
        if (std::isfinite(x))
            os << fmt17(x);
        else
            os << "null";
        return;
    }
    default: os << j.dump();
    }
}

json tolerances() {
    return {{"majorization", MAJ_TOL},        {"negative_clamp", NEG_CLAMP},  {"ppt", PPT_TOL},
            {"distill", DISTILL_TOL},         {"catalyst_step", CATALYST_STEP}, {"bound_entangled", BE_TOL},
            {"bound_npt", BE_NPT_TOL},        {"hide_security", HIDE_SECURITY_TOL}};
}

// Every subcommand fills one of these; main prints it.
struct Report {
    json doc;
    std::ostringstream text;
};

json matrix_json(const CMatrix& m) {
    json re = json::array(), im = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json r = json::array(), c = json::array();
        for (std::size_t k = 0; k < m.cols(); ++k) {
            r.push_back(m(i, k).real());
            c.push_back(m(i, k).imag());
        }
        re.push_back(r);
        im.push_back(c);
    }
    return {{"re", re}, {"im", im}};
}

void table(std::ostream& os, const PartialSumTable& t, const char* xn, const char* yn) {
    char line[160];
    std::snprintf(line, sizeof line, "  %3s %12s %12s %12s %12s\n", "k", xn, yn, "cum", "cum");
    os << line;
    for (std::size_t k = 0; k < t.x.size(); ++k) {
        std::snprintf(line, sizeof line, "  %3zu %12s %12s %12s %12s%s\n", k + 1, g6(t.x[k]).c_str(), g6(t.y[k]).c_str(),
                      g6(t.sx[k]).c_str(), g6(t.sy[k]).c_str(), t.sx[k] > t.sy[k] + MAJ_TOL ? "  >" : "");
        os << line;
    }
}

json table_json(const PartialSumTable& t) {
    return {{"x_sorted", t.x}, {"y_sorted", t.y}, {"x_partial", t.sx}, {"y_partial", t.sy}};
}

// ── Argument parsing ──────────────────────────────────────────────────

RealVec vec_arg(const std::string& s) { return parse_vector(s); }
ProbVector prob_arg(const std::string& s) { return ProbVector(parse_vector(s)); }

IndexSet cut_arg(const std::string& s) {
    IndexSet out;
    for (double v : parse_vector(s)) {
        if (v < 0 || v != std::floor(v)) fail(ErrorKind::BadFormat, "cut entries must be party indices");
        out.push_back(static_cast<std::size_t>(v));
    }
    return out;
}

std::uint64_t env_seed() {
    const char* e = std::getenv("ENTANGLIA_SEED");
    if (!e || !*e) return 1;
    char* end = nullptr;
    const unsigned long long v = std::strtoull(e, &end, 10);
    if (*end != '\0') throw UsageError("ENTANGLIA_SEED must be a non-negative integer");
    return v;
}

// ── Subcommands ───────────────────────────────────────────────────────

void cmd_majorize(Report& r, const std::string& xs, const std::string& ys) {
    const RealVec x = vec_arg(xs), y = vec_arg(ys);
    const MajVerdict v = compare(x, y);
    const auto t = partial_sum_table(x, y);
    r.doc["verdict"] = to_string(v);
    r.doc["x_prec_y"] = majorizes(x, y);
    r.doc["table"] = table_json(t);
    r.text << "x = " << vec6(x) << "\ny = " << vec6(y) << "\nverdict: " << to_string(v) << "\n";
    table(r.text, t, "x", "y");
    if (majorizes(x, y)) {
        const CMatrix a = ds_witness(x, y);
        r.doc["doubly_stochastic"] = matrix_json(a)["re"];
        r.text << "doubly stochastic A with x = A y:\n";
        for (std::size_t i = 0; i < a.rows(); ++i) {
            r.text << " ";
            for (std::size_t j = 0; j < a.cols(); ++j) r.text << " " << g6(a(i, j).real());
            r.text << "\n";
        }
    }
}

void cmd_nielsen(Report& r, const std::string& as, const std::string& bs) {
    const ProbVector a = prob_arg(as), b = prob_arg(bs);
    const bool ok = nielsen(a, b);
    const auto t = partial_sum_table(a, b);
    r.doc["convertible"] = ok;
    r.doc["table"] = table_json(t);
    r.text << "psi = " << vec6(a) << "\nphi = " << vec6(b) << "\npsi -> phi by LOCC: " << yes_no(ok) << "\n";
    table(r.text, t, "psi", "phi");
}

void cmd_classify(Report& r, const std::string& as, const std::string& bs) {
    const ProbVector a = prob_arg(as), b = prob_arg(bs);
    const PairClass c = classify(a, b);
    const auto t = partial_sum_table(a, b);
    r.doc["verdict"] = to_string(c.verdict);
    r.doc["pattern_3x3"] = c.pattern_3x3 ? json(to_string(*c.pattern_3x3)) : json(nullptr);
    r.doc["strong"] = c.strong;
    r.doc["catalysis_possible"] = c.catalysis_possible;
    r.doc["table"] = table_json(t);
    r.doc["entropy"] = {shannon(a), shannon(b)};
    r.text << "psi = " << vec6(a) << "  E = " << g6(shannon(a)) << "\nphi = " << vec6(b) << "  E = " << g6(shannon(b))
           << "\nverdict: " << to_string(c.verdict) << "\n";
    if (c.pattern_3x3) r.text << "3x3 pattern: " << to_string(*c.pattern_3x3) << "\n";
    r.text << "strongly incomparable: " << yes_no(c.strong) << "\n2x2 catalysis possible: " << yes_no(c.catalysis_possible)
           << "\n";
    table(r.text, t, "psi", "phi");
}

void cmd_catalyst(Report& r, const std::string& as, const std::string& bs, double step) {
    const ProbVector a = prob_arg(as), b = prob_arg(bs);
    r.doc["step"] = step;
    const auto c = find_catalyst_2x2(a, b, step);
    r.text << "psi = " << vec6(a) << "\nphi = " << vec6(b) << "\n";
    if (!c) {
        r.doc["catalyst"] = nullptr;
        r.doc["catalysis_possible"] = classify(a, b).catalysis_possible;
        r.text << "no 2x2 catalyst on the grid (step " << g6(step) << ")\n";
        return;
    }
    const RealVec cat{*c, 1 - *c};
    const auto t = partial_sum_table(tensor(a, cat), tensor(b, cat));
    r.doc["catalyst"] = cat;
    r.doc["certified"] = nielsen(tensor(a, cat), tensor(b, cat));
    r.doc["table"] = table_json(t);
    r.text << "catalyst (c, 1-c) with c = " << g6(*c) << "\ncertified product table:\n";
    table(r.text, t, "psi(x)c", "phi(x)c");
}

void cmd_multicopy(Report& r, const std::string& as, const std::string& bs, int k) {
    const ProbVector a = prob_arg(as), b = prob_arg(bs);
    json rows = json::array();
    r.text << "psi = " << vec6(a) << "\nphi = " << vec6(b) << "\n";
    for (int j = 1; j <= k; ++j) {
        const bool ok = multicopy(a, b, j);
        rows.push_back({{"k", j}, {"convertible", ok}});
        r.text << "  k = " << j << ": " << (ok ? "psi^k -> phi^k" : "no") << "\n";
    }
    r.doc["copies"] = rows;
}

void cmd_assist(Report& r, const std::string& as, const std::string& bs, bool minimal) {
    const ProbVector a = prob_arg(as), b = prob_arg(bs);
    const AssistPlan p = minimal ? min_assist_3x3(a, b) : assist_plan_max_entangled(a, b);
    r.doc["kind"] = p.kind == AssistKind::TwoByTwo ? "two_by_two" : "max_entangled_lower_rank";
    r.doc["resource"] = p.resource.values();
    r.doc["consumed"] = p.consumed;
    r.doc["c0"] = p.c0 ? json(*p.c0) : json(nullptr);
    r.doc["e0_ebits"] = p.e0 ? json(p.e0->value) : json(nullptr);
    r.doc["type"] = p.type;
    r.doc["direct_check"] = nielsen(tensor(a, p.resource), strip_zeros(b));
    r.text << "resource " << vec6(p.resource) << (p.consumed ? " (consumed)" : "") << "\n";
    if (p.c0) r.text << "c0 = " << g6(*p.c0) << ", type " << p.type << "\n";
    if (p.e0) r.text << "resource entanglement = " << g6(*p.e0) << " ebits\n";
    r.text << "direct majorization check: " << (r.doc["direct_check"].get<bool>() ? "pass" : "FAIL") << "\n";
}

void cmd_coop(Report& r, const std::string& as, const std::string& bs, bool all_cross, std::size_t samples,
              std::uint64_t seed) {
    const ProbVector a = prob_arg(as), b = prob_arg(bs);
    const CoopPlan p = coop_construct(a, b, seed, all_cross, samples);
    const char* names[4] = {"psi<>phi", "chi<>eta", "psi<>eta", "chi<>phi"};
    r.doc["chi"] = p.chi.values();
    r.doc["eta"] = p.eta.values();
    r.doc["method"] = p.method;
    r.doc["samples"] = p.samples;
    r.doc["joint_ok"] = p.joint_ok;
    r.doc["cross_incomparable"] = p.cross_incomparable;
    r.doc["entropy"] = {shannon(a), shannon(b), shannon(p.chi), shannon(p.eta)};
    r.text << "chi = " << vec6(p.chi) << "\neta = " << vec6(p.eta) << "\nmethod: " << p.method;
    if (p.samples) r.text << " (" << p.samples << " samples)";
    r.text << "\njoint psi(x)chi -> phi(x)eta: " << (p.joint_ok ? "pass" : "FAIL") << "\n";
    for (int i = 0; i < 4; ++i) r.text << "  " << names[i] << ": " << yes_no(p.cross_incomparable[i]) << "\n";
}

void cmd_split2(Report& r, const std::string& as, const std::string& bs, std::size_t grid) {
    const ProbVector a = prob_arg(as), b = prob_arg(bs);
    const EtaRange e = split_two_copies(a, b, grid);
    r.doc["case"] = e.case_id;
    r.doc["formula_interval"] = {e.formula_lo, e.formula_hi};
    r.doc["certified_interval"] = {e.lo, e.hi};
    r.doc["grid_points"] = e.grid_points;
    r.doc["certified_points"] = e.certified_points;
    const double mid = (e.lo + e.hi) / 2;
    r.doc["example_eta"] = e.eta(mid).values();
    r.text << "case " << e.case_id << (e.case_id == 1 ? ": eta = (t, t, 1-2t)" : ": eta = (1-2t, t, t)") << "\n"
           << "closed-form interval t in [" << g6(e.formula_lo) << ", " << g6(e.formula_hi) << "]\n"
           << "certified t in [" << g6(e.lo) << ", " << g6(e.hi) << "] (" << e.certified_points << "/" << e.grid_points
           << " grid points)\nexample eta = " << vec6(e.eta(mid)) << "\n";
}

void cmd_measure(Report& r, const std::string& kind, const std::string& file, const std::string& cut_s) {
    const CMatrix rho = load_density(file);
    require_density(rho);
    const IndexSet cut = cut_arg(cut_s);
    r.doc["measure"] = kind;
    double v = 0;
    if (kind == "entropy") {
        const double s = von_neumann_entropy(rho);
        CMatrix red = partial_trace(rho, cut);
        v = von_neumann_entropy(red);
        r.doc["von_neumann"] = s;
        r.doc["reduced_entropy"] = v;
        r.doc["cut"] = cut;
        r.text << "S(rho) = " << g6(s) << " bits\nS(rho_cut) = " << g6(v) << " bits\n";
        return;
    }
    if (kind == "concurrence") {
        v = concurrence_2q(rho);
    } else if (kind == "eof") {
        v = eof_2q(rho);
    } else if (kind == "negativity") {
        v = negativity(rho, cut);
        r.doc["log_negativity"] = log_negativity(rho, cut);
        r.doc["cut"] = cut;
    } else {
        throw UsageError("unknown measure '" + kind + "'");
    }
    r.doc["value"] = v;
    r.text << kind << " = " << g6(v) << "\n";
    if (kind == "negativity") r.text << "log negativity = " << g6(r.doc["log_negativity"].get<double>()) << "\n";
}

void cmd_witness(Report& r, const std::string& file, const std::string& cut_s, std::uint64_t seed) {
    const CMatrix rho = load_density(file);
    const WitnessReport w = witness_report(rho, cut_arg(cut_s), seed);
    r.doc["ppt"] = w.ppt;
    r.doc["min_pt_eigenvalue"] = w.min_pt_eigenvalue;
    r.doc["chsh_M"] = w.chsh_M ? json(*w.chsh_M) : json(nullptr);
    r.doc["reduction_violated"] = w.reduction_violated;
    r.doc["fmax"] = w.fmax ? json{{"value", w.fmax->value}, {"entangled", w.fmax->entangled}, {"restarts", w.fmax->restarts}}
                           : json(nullptr);
    r.doc["distillable_rank2"] =
        w.distillable_rank2 ? json{{"found", w.distillable_rank2->found}, {"value", w.distillable_rank2->value}} : json(nullptr);
    r.doc["entangled"] = w.entangled;
    r.text << "PPT: " << yes_no(w.ppt) << " (min PT eigenvalue " << g6(w.min_pt_eigenvalue) << ")\n";
    if (w.chsh_M) r.text << "CHSH M = " << g6(*w.chsh_M) << (*w.chsh_M > 1 ? " (violates)" : "") << "\n";
    r.text << "reduction criterion violated: " << yes_no(w.reduction_violated) << "\n";
    if (w.fmax) r.text << "F_max >= " << g6(w.fmax->value) << "\n";
    if (w.distillable_rank2)
        r.text << "rank-2 distillability witness: " << (w.distillable_rank2->found ? "found" : "not found (inconclusive)")
               << "\n";
    r.text << "entangled: " << (w.entangled ? "yes" : "not detected") << "\n";
}

void gadget_report(Report& r, const GadgetResult& g) {
    r.doc["initial_schmidt"] = g.initial_schmidt.sorted();
    r.doc["final_schmidt"] = g.final_schmidt.sorted();
    r.doc["cardan_initial"] = g.cardan_initial;
    r.doc["cardan_final"] = g.cardan_final;
    r.doc["cardan_gap"] = g.cardan_gap;
    r.doc["A"] = g.A;
    r.doc["B"] = g.B;
    r.doc["A_final"] = g.A_final;
    r.doc["B_final"] = g.B_final;
    r.doc["entropy"] = {g.entropy_initial, g.entropy_final};
    r.doc["verdict"] = to_string(g.verdict);
    r.doc["region"] = g.region;
    r.text << "initial Schmidt " << vec6(g.initial_schmidt.sorted()) << "  E = " << g6(g.entropy_initial) << "\n"
           << "final Schmidt   " << vec6(g.final_schmidt.sorted()) << "  E = " << g6(g.entropy_final) << "\n"
           << "cubic (A, B) = (" << g6(g.A) << ", " << g6(g.B) << ") -> (" << g6(g.A_final) << ", " << g6(g.B_final)
           << ")\nCardan vs numeric gap " << g6(g.cardan_gap) << "\nverdict: " << to_string(g.verdict) << " [" << g.region
           << "]\n";
}

void cmd_flip(Report& r, double a, double b, double c, double d, double theta, double mu, double nu) {
    const GadgetResult g = flip_gadget(a, b, c, d, theta, mu, nu);
    r.doc["coplanarity_gap"] = coplanarity_gap(a, b, c, d, theta);
    gadget_report(r, g);
    r.text << "B - B' = " << g6(coplanarity_gap(a, b, c, d, theta)) << "\n";
}

void cmd_antiunitary(Report& r, double theta, double alpha, double beta) {
    const auto res = antiunitary_gadget(theta, alpha, beta);
    gadget_report(r, res.gadget);
    r.doc["plain_unitary_shift"] = res.plain_unitary_shift;
    r.text << "plain unitary leg: reduced density moved by " << g6(res.plain_unitary_shift) << "\n";
}

void cmd_angle(Report& r, double alpha, double beta, double phase, int sweep) {
    if (sweep <= 0) {
        gadget_report(r, angle_preserving_gadget(alpha, std::polar(beta, phase)));
        return;
    }
    if (sweep < 2) throw UsageError("--sweep needs at least 2 points");
    json rows = json::array();
    char line[128];
    std::snprintf(line, sizeof line, "  %10s %10s %10s %10s  %s\n", "theta", "alpha", "A'", "B'", "verdict");
    r.text << line;
    for (int i = 0; i < sweep; ++i) {
        const double th = (std::numbers::pi / 2) * i / (sweep - 1);
        const double al = std::cos(th), be = std::sin(th);
        const GadgetResult g = angle_preserving_gadget(al, be);
        rows.push_back({{"theta", th}, {"alpha", al}, {"beta", be}, {"A_final", g.A_final}, {"B_final", g.B_final},
                        {"verdict", to_string(g.verdict)}});
        std::snprintf(line, sizeof line, "  %10s %10s %10s %10s  %s\n", g6(th).c_str(), g6(al).c_str(), g6(g.A_final).c_str(),
                      g6(g.B_final).c_str(), to_string(g.verdict));
        r.text << line;
    }
    r.doc["sweep"] = rows;
}

void cmd_bound(Report& r, const std::string& action, std::size_t n, const std::string& label, const std::string& out,
               int trials, std::uint64_t seed) {
    r.doc["action"] = action;
    if (action == "build") {
        const BEFamily fam = be_family(n);
        r.doc["n"] = n;
        json states = json::array();
        for (int k = 0; k < 4; ++k) {
            const CMatrix& s = fam.states[k];
            int rank = 0;
            for (double e : eigvals_hermitian(s)) rank += e > 1e-9;
            const double purity = trace_product(s, s);
            states.push_back({{"label", to_string(be_label(k))}, {"rank", rank}, {"purity", purity}});
            r.text << to_string(be_label(k)) << ": rank " << rank << ", purity " << g6(purity);
            if (!out.empty()) {
                std::filesystem::create_directories(out);
                const std::string path = (std::filesystem::path(out) / (std::string(to_string(be_label(k))) + ".json")).string();
                save_text(path, matrix_to_text(s.with_dims(Dims(n, 2))));
                r.text << " -> " << path;
            }
            r.text << "\n";
        }
        r.doc["states"] = states;
        return;
    }
    if (action == "verify") {
        const FamilyReport f = verify_family(be_family(n));
        double min_even = INFINITY, max_single = -INFINITY;
        for (const auto& e : f.even_cuts) min_even = std::min(min_even, e.min_pt_eigenvalue);
        for (const auto& e : f.single_cuts) max_single = std::max(max_single, e.min_pt_eigenvalue);
        const std::pair<const char*, bool> checks[] = {
            {"orthogonal", f.orthogonal},         {"permutation symmetric", f.permutation_symmetric},
            {"even cuts PPT", f.even_cut_ppt},    {"1:(n-1) cuts NPT", f.single_vs_rest_npt},
            {"Pauli connected", f.pauli_connected}, {"marginals maximally mixed", f.reduced_max_mixed},
            {"unlock", f.unlock_ok}};
        json cj;
        for (const auto& [name, ok] : checks) {
            cj[name] = ok;
            r.text << "  " << (ok ? "pass" : "FAIL") << "  " << name << "\n";
        }
        r.doc["n"] = n;
        r.doc["checks"] = cj;
        r.doc["reduced"] = f.reduced;
        r.doc["even_cuts"] = f.even_cuts.size();
        r.doc["min_even_pt_eigenvalue"] = min_even;
        r.doc["max_single_pt_eigenvalue"] = max_single;
        r.doc["max_overlap"] = f.max_overlap;
        r.doc["max_symmetry_defect"] = f.max_symmetry_defect;
        r.doc["max_pauli_defect"] = f.max_pauli_defect;
        r.doc["max_marginal_defect"] = f.max_marginal_defect;
        r.doc["max_unlock_prob_defect"] = f.max_unlock_prob_defect;
        r.doc["min_unlock_fidelity"] = f.min_unlock_fidelity;
        r.doc["all"] = f.all();
        r.text << "n = " << n << ": " << f.even_cuts.size() << " even cuts (min PT eigenvalue " << g6(min_even) << "), "
               << f.single_cuts.size() << " single cuts (largest min PT eigenvalue " << g6(max_single) << ")\n";
        if (f.reduced) r.text << "note: even cuts were sampled at this size\n";
        r.text << "all checks: " << (f.all() ? "pass" : "FAIL") << "\n";
        return;
    }
    if (action == "unlock") {
        const BELabel l = parse_be_label(label);
        const UnlockResult u = unlock(be_family(n), l);
        json rows = json::array();
        r.text << "state " << to_string(l) << ", first " << n - 2 << " qubits measured:\n";
        for (const auto& o : u.outcomes) {
            rows.push_back({{"measured", to_string(o.measured)}, {"probability", o.probability},
                            {"predicted", to_string(o.predicted)}, {"fidelity", o.fidelity}});
            r.text << "  " << to_string(o.measured) << "  p = " << g6(o.probability) << "  -> " << to_string(o.predicted)
                   << "  fidelity " << g6(o.fidelity) << "\n";
        }
        r.doc["label"] = to_string(l);
        r.doc["outcomes"] = rows;
        return;
    }
    if (action == "horodecki") {
        json rows = json::array();
        for (int k = 0; k <= 10; ++k) {
            const double a = k / 10.0;
            const auto p = ppt_test(horodecki_state(a), {0});
            rows.push_back({{"a", a}, {"ppt", p.ppt}, {"min_pt_eigenvalue", p.min_eigenvalue}});
            r.text << "  a = " << g6(a) << ": " << (p.ppt ? "PPT" : "NPT") << " (min PT eigenvalue " << g6(p.min_eigenvalue)
                   << ")\n";
        }
        const auto ins = ppt_test(rho_ins(), {0});
        r.doc["rho_a"] = rows;
        r.doc["rho_ins"] = {{"ppt", ins.ppt}, {"min_pt_eigenvalue", ins.min_eigenvalue}};
        r.text << "  rho_ins: " << (ins.ppt ? "PPT" : "NPT") << " (min PT eigenvalue " << g6(ins.min_eigenvalue) << ")\n";
        return;
    }
    if (action == "upb") {
        const auto upb = tiles_upb();
        double overlap = 0;
        for (int i = 0; i < 5; ++i)
            for (int j = i + 1; j < 5; ++j) overlap = std::max(overlap, std::abs(inner(upb[i].amplitudes(), upb[j].amplitudes())));
        const CMatrix rb = upb_complement();
        int rank = 0;
        for (double e : eigvals_hermitian(rb)) rank += e > 1e-9;
        const auto p = ppt_test(rb, {0});
        const double full = upb_unextendibility_score(trials, seed), trunc = upb_unextendibility_score(trials, seed, true);
        r.doc["max_overlap"] = overlap;
        r.doc["complement_rank"] = rank;
        r.doc["complement_ppt"] = p.ppt;
        r.doc["complement_min_pt_eigenvalue"] = p.min_eigenvalue;
        r.doc["trials"] = trials;
        r.doc["score"] = full;
        r.doc["truncated_score"] = trunc;
        r.text << "Tiles UPB: max pairwise overlap " << g6(overlap) << "\ncomplement state: rank " << rank << ", "
               << (p.ppt ? "PPT" : "NPT") << " (min PT eigenvalue " << g6(p.min_eigenvalue) << ")\n"
               << "best product overlap with the complement (" << trials << " restarts): " << fmt17(full) << "\n"
               << "same with the fifth state dropped: " << fmt17(trunc) << "\n";
        return;
    }
    throw UsageError("unknown bound action '" + action + "'");
}

void cmd_hide_demo(Report& r, std::size_t n, int trials, int shots, std::uint64_t seed) {
    const DemoReport d = run_demo(n, trials, seed, shots);
    r.doc["n"] = n;
    r.doc["trials"] = d.trials;
    r.doc["shots"] = d.shots;
    r.doc["unlock_rate"] = d.unlock_rate;
    r.doc["global_rate"] = d.global_rate;
    r.doc["family_leak_rate"] = d.family_leak_rate;
    r.doc["pm_bit_rate"] = d.pm_bit_rate;
    r.doc["trace_security_max"] = d.trace_security_max;
    r.text << "n = " << n << ", " << trials << " trials, " << shots << " shots per attack\n"
           << "authorized decode (joint on first n-2, Bell on last pair): " << g6(d.unlock_rate) << "\n"
           << "global decode: " << g6(d.global_rate) << "\n"
           << "parity attack, family bit (rho vs sigma): " << g6(d.family_leak_rate) << "  [known leak]\n"
           << "parity attack, sign bit: " << g6(d.pm_bit_rate) << "\n"
           << "max |(n-1)-party marginal - I/2^(n-1)|_1: " << g6(d.trace_security_max) << "\n";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"entanglia: entanglement transformations, impossible-operation gadgets, bound entanglement and data hiding"};
    app.require_subcommand(1);
    app.fallthrough();

    Config cfg;
    app.add_flag("--json", cfg.json, "structured output (17 significant digits)");
    app.add_option("--seed", cfg.seed, "random seed (default: ENTANGLIA_SEED or 1)");
    app.add_option("--jobs", cfg.jobs, "worker threads (accepted; all workloads run single-threaded)")->check(CLI::PositiveNumber);

    std::function<void(Report&)> action;
    std::string s1, s2, s3;
    double d1 = 0, d2 = 0, d3 = 0, d4 = 0, d5 = 0;
    double step = CATALYST_STEP, mu = 0, nu = 0, phase = 0;
    int k = 1, sweep = 0, trials = 64, shots = HIDE_DEFAULT_SHOTS, hide_trials = 100;
    bool minimal = false, all_cross = false;
    std::size_t samples = COOP_SAMPLES, grid = 401, n = 4, hide_n = 4;
    std::string cut = "0", label = "rho+", out;

    auto two_vectors = [&](CLI::App* sub) {
        sub->add_option("a", s1, "first vector, comma-separated")->required();
        sub->add_option("b", s2, "second vector, comma-separated")->required();
    };

    auto* maj = app.add_subcommand("majorize", "x ≺ y check with partial sums and a doubly-stochastic witness");
    two_vectors(maj);
    maj->callback([&] { action = [&](Report& r) { cmd_majorize(r, s1, s2); }; });

    auto* nie = app.add_subcommand("nielsen", "Nielsen convertibility of two Schmidt vectors");
    two_vectors(nie);
    nie->callback([&] { action = [&](Report& r) { cmd_nielsen(r, s1, s2); }; });

    auto* cls = app.add_subcommand("classify", "comparable / incomparable / strongly incomparable");
    two_vectors(cls);
    cls->callback([&] { action = [&](Report& r) { cmd_classify(r, s1, s2); }; });

    auto* cat = app.add_subcommand("catalyst", "search for a 2x2 catalyst");
    two_vectors(cat);
    cat->add_option("--step", step, "grid step for c")->capture_default_str();
    cat->callback([&] { action = [&](Report& r) { cmd_catalyst(r, s1, s2, step); }; });

    auto* mc = app.add_subcommand("multicopy", "psi^k -> phi^k for 1..k");
    two_vectors(mc);
    mc->add_option("k", k, "largest number of copies")->required()->check(CLI::PositiveNumber);
    mc->callback([&] { action = [&](Report& r) { cmd_multicopy(r, s1, s2, k); }; });

    auto* as = app.add_subcommand("assist", "entanglement-assisted conversion");
    two_vectors(as);
    as->add_flag("--min", minimal, "least entangled 2x2 resource (3x3 incomparable pairs)");
    as->callback([&] { action = [&](Report& r) { cmd_assist(r, s1, s2, minimal); }; });

    auto* co = app.add_subcommand("coop", "auxiliary incomparable pair for a joint conversion");
    two_vectors(co);
    co->add_flag("--all-cross", all_cross, "require all four cross pairs incomparable");
    co->add_option("--samples", samples, "random-search budget")->capture_default_str();
    co->callback([&] { action = [&](Report& r) { cmd_coop(r, s1, s2, all_cross, samples, cfg.seed); }; });

    auto* sp = app.add_subcommand("split2", "two copies of psi into phi and an incomparable eta");
    two_vectors(sp);
    sp->add_option("--grid", grid, "grid points over the closed-form interval")->capture_default_str();
    sp->callback([&] { action = [&](Report& r) { cmd_split2(r, s1, s2, grid); }; });

    auto* me = app.add_subcommand("measure", "entanglement measures of a state or density file");
    me->add_option("measure", s1, "entropy | concurrence | eof | negativity")
        ->required()
        ->check(CLI::IsMember({"entropy", "concurrence", "eof", "negativity"}));
    me->add_option("file", s2, "state or matrix document")->required();
    me->add_option("--cut", cut, "parties on one side, comma-separated")->capture_default_str();
    me->callback([&] { action = [&](Report& r) { cmd_measure(r, s1, s2, cut); }; });

    auto* wi = app.add_subcommand("witness", "PPT, CHSH, reduction, F_max and distillability");
    wi->add_option("file", s1, "state or matrix document")->required();
    wi->add_option("--cut", cut, "parties on one side, comma-separated")->capture_default_str();
    wi->callback([&] { action = [&](Report& r) { cmd_witness(r, s1, cut, cfg.seed); }; });

    auto* fl = app.add_subcommand("flip", "flip gadget on |0>, a|0>+b|1>, c|0>+d e^{i theta}|1>");
    fl->add_option("a", d1)->required();
    fl->add_option("b", d2)->required();
    fl->add_option("c", d3)->required();
    fl->add_option("d", d4)->required();
    fl->add_option("theta", d5)->required();
    fl->add_option("--mu", mu, "phase of the first flipped output");
    fl->add_option("--nu", nu, "phase of the second flipped output");
    fl->callback([&] { action = [&](Report& r) { cmd_flip(r, d1, d2, d3, d4, d5, mu, nu); }; });

    auto* au = app.add_subcommand("antiunitary", "anti-unitary gadget U K on the three axes");
    au->add_option("theta", d1)->required();
    au->add_option("alpha", d2)->required();
    au->add_option("beta", d3)->required();
    au->callback([&] { action = [&](Report& r) { cmd_antiunitary(r, d1, d2, d3); }; });

    auto* an = app.add_subcommand("angle", "angle-preserving gadget |0_k> -> alpha|0_k> + beta|1_k>");
    an->add_option("alpha", d1, "real amplitude alpha");
    an->add_option("beta", d2, "modulus of beta");
    an->add_option("--phase", phase, "phase of beta");
    an->add_option("--sweep", sweep, "scan alpha = cos t, beta = sin t over N points");
    an->callback([&] {
        if (sweep <= 0 && an->count("alpha") + an->count("beta") < 2) throw CLI::RequiredError("alpha and beta");
        action = [&](Report& r) { cmd_angle(r, d1, d2, phase, sweep); };
    });

    auto* bo = app.add_subcommand("bound", "activable bound entangled family, Horodecki state, Tiles UPB");
    bo->add_option("action", s1, "build | verify | unlock | horodecki | upb")
        ->required()
        ->check(CLI::IsMember({"build", "verify", "unlock", "horodecki", "upb"}));
    bo->add_option("--n", n, "number of qubits (even, 4..10)")->capture_default_str();
    bo->add_option("--label", label, "rho+ | rho- | sigma+ | sigma- (unlock)")->capture_default_str();
    bo->add_option("--out", out, "directory for matrix documents (build)");
    bo->add_option("--trials", trials, "seesaw restarts (upb)")->capture_default_str();
    bo->callback([&] { action = [&](Report& r) { cmd_bound(r, s1, n, label, out, trials, cfg.seed); }; });

    auto* hi = app.add_subcommand("hide", "data hiding with the bound entangled family");
    hi->require_subcommand(1);
    auto* hd = hi->add_subcommand("demo", "hide random secrets, decode and attack");
    hd->add_option("--n", hide_n, "number of qubits")->capture_default_str();
    hd->add_option("--trials", hide_trials, "number of secrets")->capture_default_str()->check(CLI::PositiveNumber);
    hd->add_option("--shots", shots, "samples per parity attack")->capture_default_str()->check(CLI::PositiveNumber);
    hd->callback([&] { action = [&](Report& r) { cmd_hide_demo(r, hide_n, hide_trials, shots, cfg.seed); }; });

    try {
        cfg.seed = env_seed();
        app.parse(argc, argv);
        Report r;
        action(r);
        if (cfg.json) {
            json doc = {{"command", app.get_subcommands().front()->get_name()}, {"seed", cfg.seed}, {"tolerances", tolerances()}};
            doc["result"] = r.doc;
            emit(doc, std::cout);
            std::cout << "\n";
        } else {
            std::cout << r.text.str();
        }
        return 0;
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : EXIT_USAGE;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return EXIT_USAGE;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        switch (e.kind()) {
        case ErrorKind::BadFormat:
        case ErrorKind::BadLabel:
        case ErrorKind::MissingDims: return EXIT_USAGE;
        default: return EXIT_NUMERIC;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return EXIT_NUMERIC;
    }
}
