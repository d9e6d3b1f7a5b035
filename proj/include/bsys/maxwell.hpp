#pragma once

#include <string>

#include "bsys/behavior.hpp"

namespace bsys {

// Electromagnetic field equations over Q[dx,dy,dz,dt] in normalized units
// (speed of light 1, source terms rescaled to drop the 4*pi factors). Signals:
// w = (E1,E2,E3,B1,B2,B3), c = (rho,J1,J2,J3); eight laws.
ControlSystem maxwell_system();

struct MaxwellExpected {
    LawsQuadruple laws;  // continuity ideal, full c-freedom, source-free and vacuum blocks
    Submodule m0;        // controller for the charge-free restriction: rho = 0 plus continuity
    Submodule n0;        // its target: source-free laws plus the divergence-of-E law
};

MaxwellExpected maxwell_expected();

// The same system as a text fixture in the `.bsys` format, byte-for-byte the
// content shipped in data/maxwell.bsys; parsing it must reproduce
// maxwell_system() exactly.
std::string maxwell_bsys_text();

}  // namespace bsys
