#include "doctest.h"

#include <sys/wait.h>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "bsys/maxwell.hpp"
#include "bsys/print.hpp"

using namespace bsys;

namespace {

struct RunResult {
    int exit_code;
    std::string output;
};

RunResult run_cli(const std::string& args, const std::string& tag) {
    std::string out_path = "cli_out_" + tag + ".txt";
    std::string cmd = "\"" BSYS_CTL_PATH "\" " + args + " > " + out_path + " 2>&1";
    int status = std::system(cmd.c_str());
    RunResult r;
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    std::ifstream in(out_path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    r.output = ss.str();
    return r;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream(path, std::ios::binary) << content;
}

std::string data_file() { return std::string(BSYS_DATA_DIR) + "/maxwell.bsys"; }

// Serializes a derived module as a .bsysmod file over one variable block.
std::string module_file_text(const Submodule& S, char block,
                             const std::vector<std::string>& names) {
    std::string text = "ring diff dx dy dz dt\nvars ";
    text += block;
    text += ":";
    for (const auto& n : names) text += " " + n;
    text += "\n";
    std::string printed =
        print_canonical(S, default_order(S.rank(), 4), {"dx", "dy", "dz", "dt"}, names);
    if (printed != "<0>\n") {
        std::istringstream lines(printed);
        for (std::string line; std::getline(lines, line);) text += "law " + line + "\n";
    }
    return text;
}

}  // namespace

TEST_CASE("laws subcommand prints the derived modules") {
    RunResult r = run_cli("laws " + data_file(), "laws");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("inv_c") != std::string::npos);
    CHECK(r.output.find("dt*rho + dx*J1 + dy*J2 + dz*J3") != std::string::npos);
    CHECK(r.output.find("order:") != std::string::npos);
}

TEST_CASE("controller and check subcommands round-trip the charge-free target") {
    MaxwellExpected exp = maxwell_expected();
    ControlSystem sys = maxwell_system();
    write_file("cli_target.bsysmod", module_file_text(exp.n0, 'w', sys.partition.w_names));
    write_file("cli_controller.bsysmod", module_file_text(exp.m0, 'c', sys.partition.c_names));

    RunResult ctrl = run_cli("controller " + data_file() + " --target cli_target.bsysmod",
                             "controller");
    CHECK(ctrl.exit_code == 0);
    CHECK(ctrl.output.find("PASS") != std::string::npos);

    RunResult chk = run_cli("check " + data_file() +
                                " --target cli_target.bsysmod --controller cli_controller.bsysmod",
                            "check");
    CHECK(chk.exit_code == 0);
    CHECK(chk.output.find("achieved: yes") != std::string::npos);
    CHECK(chk.output.find("minimal: yes") != std::string::npos);
}

TEST_CASE("non-minimal controller is reported but still achieves") {
    ControlSystem sys = maxwell_system();
    MaxwellExpected exp = maxwell_expected();
    Submodule rho_only(4, 4, {ModuleVector::unit(4, 4, 0)});
    write_file("cli_target2.bsysmod", module_file_text(exp.n0, 'w', sys.partition.w_names));
    write_file("cli_rho_only.bsysmod", module_file_text(rho_only, 'c', sys.partition.c_names));
    RunResult chk = run_cli("check " + data_file() +
                                " --target cli_target2.bsysmod --controller cli_rho_only.bsysmod",
                            "check_nonmin");
    CHECK(chk.exit_code == 0);
    CHECK(chk.output.find("achieved: yes") != std::string::npos);
    CHECK(chk.output.find("minimal: no") != std::string::npos);
}

TEST_CASE("inadmissible target exits 1 with a witness") {
    write_file("cli_bad_target.bsysmod",
               "ring diff dx dy dz dt\nvars w: E1 E2 E3 B1 B2 B3\nlaw E1\n");
    RunResult r = run_cli("controller " + data_file() + " --target cli_bad_target.bsysmod",
                          "inadmissible");
    CHECK(r.exit_code == 1);
    CHECK(r.output.find("inadmissible") != std::string::npos);
}

TEST_CASE("oracle refuses differential rings with exit 2") {
    RunResult r = run_cli("oracle " + data_file() + " --window 4", "oracle_diff");
    CHECK(r.exit_code == 2);
    CHECK(r.output.find("oracle unavailable") != std::string::npos);
}

TEST_CASE("oracle runs on shift systems") {
    write_file("cli_shift.bsys",
               "ring shift s\nvars w: w1 w2\nvars c: c1\n"
               "law (s - 1)*w1 - c1\nlaw (s - 1)*w2 - c1\n");
    RunResult r = run_cli("oracle cli_shift.bsys --window 5", "oracle_shift");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("violations: none") != std::string::npos);
    CHECK(r.output.find("inclusion check: PASS") != std::string::npos);
}

TEST_CASE("parse errors exit 2") {
    write_file("cli_broken.bsys", "ring diff dx\nvars w: a\nvars c: u\nlaw a*u\n");
    RunResult r = run_cli("laws cli_broken.bsys", "broken");
    CHECK(r.exit_code == 2);
    CHECK(r.output.find("parse error") != std::string::npos);
}

TEST_CASE("usage errors exit 2") {
    CHECK(run_cli("laws", "usage").exit_code == 2);
    CHECK(run_cli("frobnicate", "unknown").exit_code == 2);
}

TEST_CASE("demo output is byte-identical across runs") {
    RunResult a = run_cli("demo maxwell", "demo_a");
    RunResult b = run_cli("demo maxwell", "demo_b");
    CHECK(a.exit_code == 0);
    CHECK_FALSE(a.output.empty());
    CHECK(a.output == b.output);
    CHECK(a.output.find("speed of light is 1") != std::string::npos);
    CHECK(a.output.find("achieved yes, minimal yes") != std::string::npos);
}
