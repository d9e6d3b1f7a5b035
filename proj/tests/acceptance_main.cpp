// Acceptance gate: runs the ten headline checks, one line of output each,
// exit status 0 only when every one of them passes inside its time budget.
// Usage: bsys_acceptance <path-to-bsysctl> [data-dir]

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "bsys/behavior.hpp"
#include "bsys/grid_oracle.hpp"
#include "bsys/groebner.hpp"
#include "bsys/maxwell.hpp"
#include "support/oracle_helpers.hpp"
#include "support/random_systems.hpp"

using namespace bsys;
using testsupport::Rng;

namespace {

struct Outcome {
    bool ok = false;
    std::string detail;
};

bool expect(Outcome& out, bool cond, const std::string& what) {
    if (!cond && out.detail.empty()) out.detail = what;
    return cond;
}

ModuleVector continuity_vector() {
    std::vector<Polynomial> comps(4, Polynomial::zero(4));
    comps[0] = Polynomial::variable(4, 3);  // dt on rho
    comps[1] = Polynomial::variable(4, 0);  // dx on J1
    comps[2] = Polynomial::variable(4, 1);  // dy on J2
    comps[3] = Polynomial::variable(4, 2);  // dz on J3
    return ModuleVector(std::move(comps));
}

// --- criteria 1-4: the electromagnetic golden values ------------------------

Outcome crit_continuity() {
    Outcome out;
    LawsQuadruple q = derived_laws(maxwell_system());
    Submodule continuity(4, 4, {continuity_vector()});
    out.ok = expect(out, module_equal(q.inv_c, continuity),
                    "forced source laws differ from the continuity ideal");
    if (out.ok) out.detail = "inv_c = <dt*rho + dx*J1 + dy*J2 + dz*J3>";
    return out;
}

Outcome crit_full_freedom() {
    Outcome out;
    LawsQuadruple q = derived_laws(maxwell_system());
    bool ok = module_equal(q.pi_c, Submodule::full(4, 4));
    for (int i = 0; i < 4; ++i) ok = ok && is_member(ModuleVector::unit(4, 4, i), q.pi_c);
    out.ok = expect(out, ok, "pi_c is not all of A^4");
    if (out.ok) out.detail = "pi_c = A^4, all four unit laws are members";
    return out;
}

Outcome crit_sandwich() {
    Outcome out;
    LawsQuadruple q = derived_laws(maxwell_system());
    MaxwellExpected exp = maxwell_expected();
    bool ok = expect(out, module_equal(q.inv_w, exp.laws.inv_w),
                     "forced field laws differ from the four source-free generators");
    ok &= expect(out, module_equal(q.pi_w, exp.laws.pi_w),
                 "achievable field laws differ from the eight vacuum generators");
    ok &= expect(out, is_submodule(q.inv_w, q.pi_w), "inv_w not contained in pi_w");
    int witnesses = 0;
    for (const auto& g : q.pi_w.generators())
        if (!is_member(g, q.inv_w)) ++witnesses;
    ok &= expect(out, witnesses > 0, "no witness that the inclusion is proper");
    out.ok = ok;
    if (ok)
        out.detail = "inv_w = homogeneous, pi_w = vacuum, " + std::to_string(witnesses) +
                     " proper-inclusion witnesses";
    return out;
}

Outcome crit_synthesis() {
    Outcome out;
    ControlSystem sys = maxwell_system();
    MaxwellExpected exp = maxwell_expected();
    bool ok = expect(out, module_equal(psi(exp.m0, sys), exp.n0),
                     "psi(<rho, continuity>) is not <homogeneous, div E>");
    Synthesis syn = synthesize_controller(exp.n0, sys);
    ok &= expect(out, module_equal(syn.controller, exp.m0),
                 "synthesized controller differs from <rho, continuity>");
    ok &= expect(out, syn.certificate_ok, "round-trip certificate failed");
    out.ok = ok;
    if (ok) out.detail = "psi(M0) = N0 and synthesize(N0) = M0, certificate passed";
    return out;
}

// --- criteria 5-7: the seeded random corpus ---------------------------------

constexpr int kCorpusSize = 110;
constexpr std::uint64_t kCorpusSeed = 555000;

Outcome crit_roundtrip() {
    Outcome out;
    for (int i = 0; i < kCorpusSize; ++i) {
        Rng rng(kCorpusSeed + i);
        ControlSystem sys = testsupport::random_system(rng);
        LawsQuadruple q = derived_laws(sys);
        Submodule N = testsupport::random_admissible_target(rng, q.inv_w, q.pi_w);
        Submodule M = phi(N, sys);
        if (!expect(out, module_equal(psi(M, sys), N),
                    "psi(phi(N)) != N on system " + std::to_string(i)))
            return out;
        if (!expect(out, module_equal(phi(psi(M, sys), sys), M),
                    "phi(psi(phi(N))) != phi(N) on system " + std::to_string(i)))
            return out;
    }
    out.ok = true;
    out.detail = "psi(phi(N)) = N and phi(psi(phi(N))) = phi(N) on " +
                 std::to_string(kCorpusSize) + " systems";
    return out;
}

Outcome crit_endpoints() {
    Outcome out;
    for (int i = 0; i < kCorpusSize; ++i) {
        Rng rng(kCorpusSeed + i);
        ControlSystem sys = testsupport::random_system(rng);
        LawsQuadruple q = derived_laws(sys);
        if (!expect(out, module_equal(phi(q.inv_w, sys), q.inv_c),
                    "phi(inv_w) != inv_c on system " + std::to_string(i)))
            return out;
        if (!expect(out, module_equal(phi(q.pi_w, sys), q.pi_c),
                    "phi(pi_w) != pi_c on system " + std::to_string(i)))
            return out;
    }
    out.ok = true;
    out.detail = "phi(inv_w) = inv_c and phi(pi_w) = pi_c on the whole corpus";
    return out;
}

Outcome crit_clipping() {
    Outcome out;
    int unclipped = 0;
    for (int i = 0; i < kCorpusSize; ++i) {
        Rng rng(kCorpusSeed + i);
        ControlSystem sys = testsupport::random_system(rng);
        // Arbitrary controller laws, frequently outside pi_c.
        Submodule M = testsupport::random_submodule(rng, sys.partition.k_c(), sys.ring.n, 2);
        Submodule clipped = clip_controller(M, sys);
        if (!module_equal(clipped, M)) ++unclipped;
        if (!expect(out, module_equal(psi(M, sys), psi(clipped, sys)),
                    "psi(M) != psi(M ∩ pi_c) on system " + std::to_string(i)))
            return out;
        ControlSystem inter = interconnect(sys, M);
        if (!expect(out,
                    module_equal(project_block(inter.P, sys.partition.w_block()),
                                 project_block(sys.P, sys.partition.w_block())),
                    "interconnection changed project_block(P, w) on system " +
                        std::to_string(i)))
            return out;
    }
    out.ok = true;
    out.detail = "psi and the residual behavior survive clipping on all systems (" +
                 std::to_string(unclipped) + " controllers were genuinely clipped)";
    return out;
}

// --- criterion 8: rewriting engine oracle ------------------------------------

Outcome crit_gb_oracle() {
    Outcome out;
    Polynomial x = Polynomial::variable(2, 0), y = Polynomial::variable(2, 1);
    Submodule ix(1, 2, {ModuleVector({x})});
    Submodule iy(1, 2, {ModuleVector({y})});
    Submodule ixy(1, 2, {ModuleVector({x * y})});
    if (!expect(out, module_equal(module_intersect(ix, iy), ixy), "<x> ∩ <y> != <xy>"))
        return out;

    for (int i = 0; i < 50; ++i) {
        Rng rng(777000 + i);
        int rank = rng.range(1, 3), nvars = rng.range(1, 3);
        Submodule S = testsupport::random_submodule(rng, rank, nvars, 2);
        std::vector<ModuleVector> gens = S.generators();
        if (gens.empty()) continue;
        for (int step = 0; step < 6; ++step) {
            int a = rng.range(0, static_cast<int>(gens.size()) - 1);
            int b = rng.range(0, static_cast<int>(gens.size()) - 1);
            switch (rng.range(0, 3)) {
                case 0: {
                    int sign = rng.chance(50) ? 1 : -1;
                    int num = rng.range(1, 3);
                    int den = rng.range(1, 2);
                    gens[a] = gens[a].scaled(make_rational(sign * num, den));
                    break;
                }
                case 1:
                    if (a != b)
                        gens[a] += gens[b].scaled(testsupport::random_polynomial(rng, nvars, 1));
                    break;
                case 2:
                    std::swap(gens[a], gens[b]);
                    break;
                default:
                    gens.push_back(gens[a] + gens[b].scaled(Polynomial::variable(nvars, 0)));
            }
        }
        ModuleOrder ord = default_order(rank, nvars);
        if (!expect(out, S.groebner_basis(ord) == Submodule(rank, nvars, gens).groebner_basis(ord),
                    "reduced basis changed under rewriting, case " + std::to_string(i)))
            return out;
    }
    out.ok = true;
    out.detail = "<x> ∩ <y> = <xy>; reduced bases invariant on 50 rewriting cases";
    return out;
}

// --- criterion 9: finite-window trajectory oracle ----------------------------

ControlSystem shift_corpus_system(Rng& rng) {
    int n = rng.range(1, 2);
    int k_w = rng.range(1, 3);
    int k_c = rng.range(1, 4 - k_w);
    RingSpec ring(n, OperatorKind::shift, testsupport::numbered_names("s", n));
    VariablePartition part(testsupport::numbered_names("w", k_w),
                           testsupport::numbered_names("c", k_c));
    Submodule P = testsupport::random_submodule(rng, k_w + k_c, n, 1, 3);
    return ControlSystem(ring, part, P);
}

ControlSystem delta_system_1d() {
    RingSpec ring(1, OperatorKind::shift, {"s"});
    Polynomial s = Polynomial::variable(1, 0), one = Polynomial::constant(1, 1);
    return ControlSystem(ring, VariablePartition({"w1"}, {"c1"}),
                         Submodule(2, 1, {ModuleVector({s - one, -one})}));
}

ControlSystem coupled_pair_1d() {
    RingSpec ring(1, OperatorKind::shift, {"s"});
    Polynomial s = Polynomial::variable(1, 0), one = Polynomial::constant(1, 1);
    Polynomial z = Polynomial::zero(1);
    return ControlSystem(
        ring, VariablePartition({"w1", "w2"}, {"c1"}),
        Submodule(3, 1, {ModuleVector({s - one, z, -one}), ModuleVector({z, s - one, -one})}));
}

Outcome crit_grid_oracle() {
    Outcome out;
    int checked_laws = 0;
    // 24 seeded random shift systems plus two structured ones with nonzero
    // forced-law modules, all at window side 6.
    std::vector<ControlSystem> corpus;
    for (int i = 0; i < 24; ++i) {
        Rng rng(888000 + i);
        corpus.push_back(shift_corpus_system(rng));
    }
    corpus.push_back(coupled_pair_1d());
    {
        RingSpec ring(2, OperatorKind::shift, {"s1", "s2"});
        Polynomial s1 = Polynomial::variable(2, 0), s2 = Polynomial::variable(2, 1);
        Polynomial one = Polynomial::constant(2, 1), z = Polynomial::zero(2);
        corpus.emplace_back(ring, VariablePartition({"w1", "w2"}, {"c1"}),
                            Submodule(3, 2, {ModuleVector({s1 - one, z, -one}),
                                             ModuleVector({z, s2 - one, -one})}));
    }
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        InclusionReport rep =
            oracle_inclusion_check(corpus[i], Window{corpus[i].ring.n, 6}, Exec::parallel);
        checked_laws += rep.laws_checked;
        if (!expect(out, rep.passed && rep.violations.empty(),
                    "inclusion check failed on corpus system " + std::to_string(i)))
            return out;
    }

    // Five corrupted law modules; each must be caught at some window side <= 10.
    Polynomial s = Polynomial::variable(1, 0), one = Polynomial::constant(1, 1);
    Polynomial z = Polynomial::zero(1);
    ControlSystem second_order(
        RingSpec(1, OperatorKind::shift, {"s"}), VariablePartition({"w1"}, {"c1"}),
        Submodule(2, 1, {ModuleVector({Polynomial::variable(1, 0, 2), -one})}));
    struct Control {
        const char* name;
        ControlSystem sys;
        Submodule bogus;
    };
    std::vector<Control> controls;
    controls.push_back({"w constant", delta_system_1d(),
                        Submodule(1, 1, {ModuleVector({s - one})})});
    controls.push_back({"w two-periodic", delta_system_1d(),
                        Submodule(1, 1, {ModuleVector({Polynomial::variable(1, 0, 2) - one})})});
    controls.push_back({"first signal constant alone", coupled_pair_1d(),
                        Submodule(2, 1, {ModuleVector({s - one, z})})});
    controls.push_back({"second signal anti-periodic", coupled_pair_1d(),
                        Submodule(2, 1, {ModuleVector({z, s + one})})});
    controls.push_back({"w constant under double shift", second_order,
                        Submodule(1, 1, {ModuleVector({s - one})})});
    std::string sides;
    for (const auto& c : controls) {
        int side = testsupport::first_violating_side(c.sys, c.bogus, 3, 10);
        if (!expect(out, side > 0,
                    std::string("negative control not caught by side 10: ") + c.name))
            return out;
        sides += (sides.empty() ? "" : ",") + std::to_string(side);
    }
    out.ok = true;
    out.detail = std::to_string(corpus.size()) + " systems clean at L=6 (" +
                 std::to_string(checked_laws) + " certified laws checked); negative controls " +
                 "caught at L=" + sides;
    return out;
}

// --- criterion 10: byte-deterministic demo -----------------------------------

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Outcome crit_demo_determinism(const std::string& cli) {
    Outcome out;
    std::string cmd1 = "\"" + cli + "\" demo maxwell > acceptance_demo_1.out 2>&1";
    std::string cmd2 = "\"" + cli + "\" demo maxwell > acceptance_demo_2.out 2>&1";
    int rc1 = std::system(cmd1.c_str());
    int rc2 = std::system(cmd2.c_str());
    bool ok = expect(out, rc1 == 0 && rc2 == 0, "demo exited nonzero");
    std::string a = slurp("acceptance_demo_1.out");
    std::string b = slurp("acceptance_demo_2.out");
    ok &= expect(out, !a.empty(), "demo produced no output");
    ok &= expect(out, a == b, "two demo runs differ");
    out.ok = ok;
    if (ok) out.detail = "two runs byte-identical (" + std::to_string(a.size()) + " bytes)";
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::fprintf(stderr, "usage: %s <path-to-bsysctl> [data-dir]\n", argv[0]);
        return 2;
    }
    std::string cli = argv[1];

    struct Criterion {
        const char* name;
        double limit_s;  // <= 0 means no budget enforced
        std::function<Outcome()> fn;
    };
    const std::vector<Criterion> criteria = {
        {"forced source laws equal the continuity ideal", 5.0, crit_continuity},
        {"source signals fully free", 5.0, crit_full_freedom},
        {"field-side sandwich with proper-inclusion witnesses", 10.0, crit_sandwich},
        {"charge-free synthesis round trip with certificate", 10.0, crit_synthesis},
        {"bijection round trip on the random corpus", 120.0, crit_roundtrip},
        {"endpoint identities on the corpus", 0.0, crit_endpoints},
        {"clipping identity and residual invariance on the corpus", 0.0, crit_clipping},
        {"intersection golden case and 50 rewriting cases", 0.0, crit_gb_oracle},
        {"trajectory oracle corpus and negative controls", 120.0, crit_grid_oracle},
        {"demo output byte-identical across runs", 0.0,
         [&cli] { return crit_demo_determinism(cli); }},
    };

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto& c = criteria[i];
        auto t0 = std::chrono::steady_clock::now();
        Outcome out;
        try {
            out = c.fn();
        } catch (const std::exception& e) {
            out.ok = false;
            out.detail = std::string("exception: ") + e.what();
        }
        double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        bool in_budget = c.limit_s <= 0.0 || secs < c.limit_s;
        bool pass = out.ok && in_budget;
        if (!pass) ++failures;
        std::printf("[%2zu/10] %s  %6.2fs  %s — %s%s\n", i + 1, pass ? "PASS" : "FAIL", secs,
                    c.name, out.detail.c_str(),
                    (out.ok && !in_budget) ? " [over time budget]" : "");
        std::fflush(stdout);
    }
    if (failures) std::printf("%d of 10 acceptance criteria FAILED\n", failures);
    else std::printf("all 10 acceptance criteria passed\n");
    return failures == 0 ? 0 : 1;
}
