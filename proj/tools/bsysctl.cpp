#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "bsys/behavior.hpp"
#include "bsys/errors.hpp"
#include "bsys/grid_oracle.hpp"
#include "bsys/groebner.hpp"
#include "bsys/maxwell.hpp"
#include "bsys/parse.hpp"
#include "bsys/print.hpp"

namespace {

using namespace bsys;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot read file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string describe_order(const ModuleOrder& ord, const std::vector<std::string>& var_names) {
    std::string rule = ord.rule() == PositionRule::pot ? "position-over-term" : "term-over-position";
    return rule + ", " + ord.base().describe(var_names) + ", positions in declaration order";
}

void print_module(const std::string& title, const Submodule& S, const ControlSystem& sys,
                  const std::vector<std::string>& signal_names) {
    ModuleOrder ord = default_order(S.rank(), S.nvars());
    std::cout << title << ":\n";
    std::istringstream lines(print_canonical(S, ord, sys.ring.var_names, signal_names));
    for (std::string line; std::getline(lines, line);) std::cout << "  " << line << "\n";
}

ControlSystem load_system(const std::string& path) { return parse_system(read_file(path)); }

// Module files must agree with the system: same ring, same names, right block.
Submodule load_block_module(const std::string& path, const ControlSystem& sys, char block) {
    ModuleFile mf = parse_module_file(read_file(path));
    if (!(mf.ring == sys.ring))
        throw Error(path + ": ring declaration does not match the system file");
    if (mf.block != block)
        throw Error(path + ": expected a '" + std::string(1, block) + ":' variable block");
    const auto& expect = block == 'w' ? sys.partition.w_names : sys.partition.c_names;
    if (mf.names != expect)
        throw Error(path + ": variable block does not match the system's " +
                    std::string(1, block) + " block");
    return mf.module;
}

std::string format_point(const std::vector<int>& x) {
    std::string s = "(";
    for (std::size_t i = 0; i < x.size(); ++i) s += (i ? ", " : "") + std::to_string(x[i]);
    return s + ")";
}

std::string format_exponent_tuple(const Exponent& e) {
    std::string s = "(";
    for (std::size_t i = 0; i < e.size(); ++i) s += (i ? ", " : "") + std::to_string(e[i]);
    return s + ")";
}

void print_margins(const std::vector<MarginInfo>& margins) {
    std::cout << "margins:\n";
    for (const auto& m : margins) {
        std::cout << "  law " << m.law << ": ";
        if (m.certified)
            std::cout << "certified, reach " << format_exponent_tuple(m.margin)
                      << ", cofactor degree " << m.certificate_degree << "\n";
        else
            std::cout << "own-support fallback, reach " << format_exponent_tuple(m.margin)
                      << "\n";
    }
}

void print_violations(const std::vector<Violation>& violations) {
    if (violations.empty()) {
        std::cout << "violations: none\n";
        return;
    }
    std::cout << "violations:\n";
    for (const auto& v : violations)
        std::cout << "  trajectory " << v.trajectory << ", law " << v.law << ", point "
                  << format_point(v.point) << ": value " << format_rational(v.value) << "\n";
}

int cmd_laws(const std::string& file) {
    ControlSystem sys = load_system(file);
    LawsQuadruple q = derived_laws(sys);
    std::cout << "order: " << describe_order(default_order(1, sys.ring.n), sys.ring.var_names)
              << "\n";
    print_module("pi_w (laws the w block can obey)", q.pi_w, sys, sys.partition.w_names);
    print_module("inv_w (w laws forced by the system)", q.inv_w, sys, sys.partition.w_names);
    print_module("pi_c (laws the c block can obey)", q.pi_c, sys, sys.partition.c_names);
    print_module("inv_c (c laws forced by the system)", q.inv_c, sys, sys.partition.c_names);
    return 0;
}

int cmd_controller(const std::string& file, const std::string& target) {
    ControlSystem sys = load_system(file);
    Submodule N = load_block_module(target, sys, 'w');
    Admissibility adm = is_admissible_w(N, sys);
    if (!adm.admissible) {
        ModuleOrder ord = default_order(sys.partition.k_w(), sys.ring.n);
        std::cout << "inadmissible target\n";
        std::cout << "witness ("
                  << (adm.witness->lower_failed ? "forced law missing from target"
                                                : "target law not achievable")
                  << "): "
                  << format_law(adm.witness->law, sys.ring.var_names, sys.partition.w_names, ord)
                  << "\n";
        return 1;
    }
    Synthesis syn = synthesize_controller(N, sys);
    print_module("canonical controller", syn.controller, sys, sys.partition.c_names);
    std::cout << "certificate (controller achieves the target): "
              << (syn.certificate_ok ? "PASS" : "FAIL") << "\n";
    std::cout << "controller admissible on the c side: "
              << (syn.c_side.admissible ? "yes" : "no") << "\n";
    return syn.certificate_ok ? 0 : 1;
}

int cmd_achieve(const std::string& file, const std::string& controller) {
    ControlSystem sys = load_system(file);
    Submodule M = load_block_module(controller, sys, 'c');
    Submodule clipped = clip_controller(M, sys);
    print_module("clipped controller (achievable part)", clipped, sys, sys.partition.c_names);
    print_module("achieved w laws", psi(clipped, sys), sys, sys.partition.w_names);
    return 0;
}

int cmd_check(const std::string& file, const std::string& target, const std::string& controller) {
    ControlSystem sys = load_system(file);
    Submodule N = load_block_module(target, sys, 'w');
    Submodule M = load_block_module(controller, sys, 'c');
    AchieveReport rep = verify_achieves(M, N, sys);
    std::cout << "achieved: " << (rep.achieved ? "yes" : "no") << "\n";
    std::cout << "minimal: " << (rep.minimal ? "yes" : "no") << "\n";
    print_module("achieved w laws", rep.psi_of_controller, sys, sys.partition.w_names);
    print_module("canonical controller", rep.canonical, sys, sys.partition.c_names);
    return rep.achieved ? 0 : 1;
}

int cmd_oracle(const std::string& file, int window, const std::string& target, bool parallel) {
    ControlSystem sys = load_system(file);
    Window win{sys.ring.n, window};
    Exec exec = parallel ? Exec::parallel : Exec::serial;
    if (target.empty()) {
        InclusionReport rep = oracle_inclusion_check(sys, win, exec);
        std::cout << "window: side " << win.side << ", dimension " << win.n << "\n";
        std::cout << "kernel dimension: " << rep.kernel_dimension << "\n";
        std::cout << "laws checked: " << rep.laws_checked << "\n";
        print_margins(rep.margins);
        print_violations(rep.violations);
        std::cout << "inclusion check: " << (rep.passed ? "PASS" : "FAIL") << "\n";
        return rep.passed ? 0 : 1;
    }
    Submodule N = load_block_module(target, sys, 'w');
    ControllerOracleReport rep = oracle_canonical_controller(sys, N, win, exec);
    std::cout << "window: side " << win.side << ", dimension " << win.n << "\n";
    std::cout << "restricted behavior dimension: " << rep.restricted_behavior_dim << "\n";
    print_margins(rep.margins);
    print_violations(rep.violations);
    std::cout << "controller-law check: " << (rep.inclusion_passed ? "PASS" : "FAIL") << "\n";
    std::cout << "interior offset: " << rep.interior_offset << "\n";
    std::cout << "interior dimension (projected trajectories): " << rep.interior_dim_projected
              << "\n";
    std::cout << "interior dimension (controller kernel): " << rep.interior_dim_controller
              << "\n";
    std::cout << "interior dimensions equal: " << (rep.interior_dims_equal ? "yes" : "no")
              << " (informative; boundary effects expected)\n";
    return rep.inclusion_passed ? 0 : 1;
}

int cmd_demo(const std::string& which) {
    if (which != "maxwell") throw Error("unknown demo '" + which + "' (available: maxwell)");
    std::cout << "== electromagnetic field demo ==\n";
    std::cout << "units: normalized so the speed of light is 1 and the 4*pi source factors\n";
    std::cout << "are absorbed into the charge and current signals; this rescaling is an\n";
    std::cout << "isomorphism of the signal space and changes no module identity below.\n\n";

    ControlSystem sys = parse_system(maxwell_bsys_text());
    std::cout << "system: " << sys.partition.k_w() << " field signals (E, B), "
              << sys.partition.k_c() << " source signals (rho, J), "
              << static_cast<int>(sys.P.generators().size()) << " laws\n";
    std::cout << "order: "
              << describe_order(default_order(1, sys.ring.n), sys.ring.var_names) << "\n\n";

    LawsQuadruple q = derived_laws(sys);
    std::cout << "derived law modules:\n";
    print_module("inv_c (source laws forced by the system)", q.inv_c, sys,
                 sys.partition.c_names);
    print_module("pi_c (source laws that can be imposed)", q.pi_c, sys, sys.partition.c_names);
    print_module("inv_w (field laws forced by the system)", q.inv_w, sys, sys.partition.w_names);
    print_module("pi_w (field laws that can be imposed)", q.pi_w, sys, sys.partition.w_names);

    MaxwellExpected exp = maxwell_expected();
    std::cout << "\ncharge-free restriction (rho = 0):\n";
    print_module("target field laws N0", exp.n0, sys, sys.partition.w_names);
    Synthesis syn = synthesize_controller(exp.n0, sys);
    print_module("synthesized controller phi(N0)", syn.controller, sys, sys.partition.c_names);
    std::cout << "matches the expected controller (rho law + continuity): "
              << (module_equal(syn.controller, exp.m0) ? "yes" : "no") << "\n";
    std::cout << "certificate psi(phi(N0)) = N0: " << (syn.certificate_ok ? "PASS" : "FAIL")
              << "\n";
    AchieveReport rep = verify_achieves(exp.m0, exp.n0, sys);
    std::cout << "verify_achieves(M0, N0): achieved " << (rep.achieved ? "yes" : "no")
              << ", minimal " << (rep.minimal ? "yes" : "no") << "\n";

    std::cout << "\nendpoint identities:\n";
    std::cout << "phi(inv_w) = inv_c: "
              << (module_equal(phi(q.inv_w, sys), q.inv_c) ? "yes" : "no") << "\n";
    std::cout << "phi(pi_w) = pi_c: " << (module_equal(phi(q.pi_w, sys), q.pi_c) ? "yes" : "no")
              << "\n";

    std::cout << "\nproper inclusions inv_w < N0 < pi_w:\n";
    ModuleOrder ord_w = default_order(sys.partition.k_w(), sys.ring.n);
    for (const auto& g : exp.n0.generators()) {
        if (!is_member(g, q.inv_w)) {
            std::cout << "  in N0 but not forced: "
                      << format_law(g, sys.ring.var_names, sys.partition.w_names, ord_w) << "\n";
            break;
        }
    }
    for (const auto& g : q.pi_w.generators()) {
        if (!is_member(g, exp.n0)) {
            std::cout << "  achievable but outside N0: "
                      << format_law(g, sys.ring.var_names, sys.partition.w_names, ord_w) << "\n";
            break;
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computational back end for law modules of linear distributed systems"};
    app.require_subcommand(1);

    std::string file, target, controller, demo_name;
    int window = 6;
    bool parallel = false;

    auto* laws = app.add_subcommand("laws", "derived law modules of a system");
    laws->add_option("file", file, "system file (.bsys)")->required();

    auto* ctrl = app.add_subcommand("controller", "synthesize the canonical controller");
    ctrl->add_option("file", file, "system file (.bsys)")->required();
    ctrl->add_option("--target", target, "target w-law module (.bsysmod)")->required();

    auto* ach = app.add_subcommand("achieve", "laws achieved by a given controller");
    ach->add_option("file", file, "system file (.bsys)")->required();
    ach->add_option("--controller", controller, "controller module (.bsysmod)")->required();

    auto* chk = app.add_subcommand("check", "verify a controller against a target");
    chk->add_option("file", file, "system file (.bsys)")->required();
    chk->add_option("--target", target, "target w-law module (.bsysmod)")->required();
    chk->add_option("--controller", controller, "controller module (.bsysmod)")->required();

    auto* orc = app.add_subcommand("oracle", "finite-window trajectory cross-check (shift rings)");
    orc->add_option("file", file, "system file (.bsys)")->required();
    orc->add_option("--window", window, "window side length")->required();
    orc->add_option("--target", target, "optional target module for controller comparison");
    orc->add_flag("--parallel", parallel, "use the parallel kernels");

    auto* dem = app.add_subcommand("demo", "built-in end-to-end walkthrough");
    dem->add_option("name", demo_name, "demo name (maxwell)")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    try {
        if (laws->parsed()) return cmd_laws(file);
        if (ctrl->parsed()) return cmd_controller(file, target);
        if (ach->parsed()) return cmd_achieve(file, controller);
        if (chk->parsed()) return cmd_check(file, target, controller);
        if (orc->parsed()) return cmd_oracle(file, window, target, parallel);
        if (dem->parsed()) return cmd_demo(demo_name);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const InadmissibleError& e) {
        std::cout << e.what() << "\n";
        return 1;
    } catch (const OracleUnavailableError& e) {
        std::cerr << "oracle unavailable: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
