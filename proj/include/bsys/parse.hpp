#pragma once

#include <string>
#include <vector>

#include "bsys/behavior.hpp"

namespace bsys {

// Parses the `.bsys` system format:
//   ring (diff|shift) IDENT+
//   vars w: IDENT+
//   vars c: IDENT+
//   law EXPR          (signal-linear expression)
//   lawvec EXPR, ...  (raw tuple of operator polynomials, one per signal)
// Comments run from '#' to end of line. Errors carry 1-based positions.
ControlSystem parse_system(const std::string& text);

// `.bsysmod` module files: same header but exactly one vars block (w: or c:),
// then law/lawvec lines over that block alone.
struct ModuleFile {
    RingSpec ring;
    char block;  // 'w' or 'c'
    std::vector<std::string> names;
    Submodule module;
    ModuleFile(RingSpec r, char b, std::vector<std::string> n, Submodule m)
        : ring(std::move(r)), block(b), names(std::move(n)), module(std::move(m)) {}
};

ModuleFile parse_module_file(const std::string& text);

}  // namespace bsys
