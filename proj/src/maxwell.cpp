#include "bsys/maxwell.hpp"

namespace bsys {

namespace {

constexpr int DX = 0, DY = 1, DZ = 2, DT = 3;
constexpr int NV = 4;
constexpr int E1 = 0, E2 = 1, E3 = 2, B1 = 3, B2 = 4, B3 = 5;
constexpr int RHO = 6, J1 = 7, J2 = 8, J3 = 9;

// v += d(var) applied to signal position pos, scaled by sign.
void add(ModuleVector& v, int pos, int var, int sign = 1) {
    v[pos] += Polynomial::variable(NV, var).scaled(Rational(sign));
}

void add_const(ModuleVector& v, int pos, int sign) {
    v[pos] += Polynomial::constant(NV, Rational(sign));
}

std::vector<ModuleVector> maxwell_rows() {
    std::vector<ModuleVector> rows(8, ModuleVector(10, NV));
    // div E = rho
    add(rows[0], E1, DX);
    add(rows[0], E2, DY);
    add(rows[0], E3, DZ);
    add_const(rows[0], RHO, -1);
    // div B = 0
    add(rows[1], B1, DX);
    add(rows[1], B2, DY);
    add(rows[1], B3, DZ);
    // curl E + dt B = 0, three components
    add(rows[2], B1, DT);
    add(rows[2], E3, DY);
    add(rows[2], E2, DZ, -1);
    add(rows[3], B2, DT);
    add(rows[3], E1, DZ);
    add(rows[3], E3, DX, -1);
    add(rows[4], B3, DT);
    add(rows[4], E2, DX);
    add(rows[4], E1, DY, -1);
    // dt E - curl B + J = 0, three components
    add(rows[5], E1, DT);
    add(rows[5], B2, DZ);
    add(rows[5], B3, DY, -1);
    add_const(rows[5], J1, 1);
    add(rows[6], E2, DT);
    add(rows[6], B3, DX);
    add(rows[6], B1, DZ, -1);
    add_const(rows[6], J2, 1);
    add(rows[7], E3, DT);
    add(rows[7], B1, DY);
    add(rows[7], B2, DX, -1);
    add_const(rows[7], J3, 1);
    return rows;
}

ModuleVector continuity() {
    // dt*rho + dx*J1 + dy*J2 + dz*J3
    ModuleVector v(4, NV);
    v[0] = Polynomial::variable(NV, DT);
    v[1] = Polynomial::variable(NV, DX);
    v[2] = Polynomial::variable(NV, DY);
    v[3] = Polynomial::variable(NV, DZ);
    return v;
}

ModuleVector w_part(const ModuleVector& row) {
    ModuleVector v(6, NV);
    for (int i = 0; i < 6; ++i) v[i] = row[i];
    return v;
}

}  // namespace

ControlSystem maxwell_system() {
    RingSpec ring(NV, OperatorKind::differential, {"dx", "dy", "dz", "dt"});
    VariablePartition part({"E1", "E2", "E3", "B1", "B2", "B3"}, {"rho", "J1", "J2", "J3"});
    return ControlSystem(ring, part, Submodule(10, NV, maxwell_rows()));
}

MaxwellExpected maxwell_expected() {
    auto rows = maxwell_rows();

    std::vector<ModuleVector> vacuum;  // w-parts of all eight laws
    for (const auto& r : rows) vacuum.push_back(w_part(r));
    std::vector<ModuleVector> source_free = {vacuum[1], vacuum[2], vacuum[3], vacuum[4]};

    Submodule pi_w(6, NV, vacuum);
    Submodule inv_w(6, NV, source_free);
    Submodule pi_c = Submodule::full(4, NV);
    Submodule inv_c(4, NV, {continuity()});

    // rho = 0 restriction: controller imposes rho together with continuity...
    ModuleVector rho_law(4, NV);
    rho_law[0] = Polynomial::constant(NV, Rational(1));
    Submodule m0(4, NV, {rho_law, continuity()});
    // ...and the controlled w-behavior obeys the source-free laws plus div E.
    std::vector<ModuleVector> n0_gens = source_free;
    n0_gens.push_back(vacuum[0]);  // dx*E1 + dy*E2 + dz*E3
    Submodule n0(6, NV, n0_gens);

    return {{pi_w, inv_w, pi_c, inv_c}, m0, n0};
}

std::string maxwell_bsys_text() {
    return
        "# Electromagnetic field system in normalized units: the speed of light is 1\n"
        "# and the 4*pi source factors are absorbed into rho and J by rescaling.\n"
        "ring diff dx dy dz dt\n"
        "vars w: E1 E2 E3 B1 B2 B3\n"
        "vars c: rho J1 J2 J3\n"
        "law dx*E1 + dy*E2 + dz*E3 - rho\n"
        "law dx*B1 + dy*B2 + dz*B3\n"
        "law dt*B1 - dz*E2 + dy*E3\n"
        "law dt*B2 + dz*E1 - dx*E3\n"
        "law dt*B3 - dy*E1 + dx*E2\n"
        "law dt*E1 + dz*B2 - dy*B3 + J1\n"
        "law dt*E2 - dz*B1 + dx*B3 + J2\n"
        "law dt*E3 + dy*B1 - dx*B2 + J3\n";
}

}  // namespace bsys
