#pragma once

#include <string>
#include <vector>

#include "bsys/module.hpp"
#include "bsys/order.hpp"

namespace bsys {

std::string format_rational(const Rational& q);

// Terms sorted descending under ord; e.g. "dx^2*dy - 3/2*dt + 1".
std::string format_polynomial(const Polynomial& p, const std::vector<std::string>& var_names,
                              const MonomialOrder& ord);

// Renders a law as a signal-linear expression, e.g. "dt*rho + dx*J1". With an
// empty signal_names list (allowed for rank 1 only) the bare operator
// polynomial is printed. Terms sorted descending under ord.
std::string format_law(const ModuleVector& v, const std::vector<std::string>& var_names,
                       const std::vector<std::string>& signal_names, const ModuleOrder& ord);

// Reduced Groebner basis of S under ord, one generator per line, generators
// sorted by (leading position ascending, leading exponent descending), each
// line rendered like format_law. The zero module prints as "<0>". Output is
// byte-deterministic. Every returned line ends with '\n'.
std::string print_canonical(const Submodule& S, const ModuleOrder& ord,
                            const std::vector<std::string>& var_names,
                            const std::vector<std::string>& signal_names);

}  // namespace bsys
