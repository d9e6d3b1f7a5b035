#pragma once

#include <optional>
#include <vector>

#include "bsys/exact_linalg.hpp"
#include "bsys/module.hpp"

namespace bsys {

// Cofactors q_i with target = sum_i q_i * gens[i] and deg(q_i) <= degree_bound,
// found by solving the coefficient-matching linear system exactly. Returns
// nullopt when no such bounded-degree combination exists. This route is
// deliberately independent of the Groebner machinery, so it can vouch for
// membership results computed there.
std::optional<std::vector<Polynomial>> cofactor_certificate(const ModuleVector& target,
                                                            const std::vector<ModuleVector>& gens,
                                                            int degree_bound,
                                                            Exec exec = Exec::serial);

struct MembershipCertificate {
    std::vector<Polynomial> cofactors;  // aligned with S.generators()
    int degree_bound = 0;               // bound at which the solve succeeded
};

// Escalates the cofactor degree bound from deg(v) to deg(v) + max_extra_degree
// until a certificate appears. nullopt means none was found within the cap
// (which does not disprove membership).
std::optional<MembershipCertificate> find_membership_certificate(const ModuleVector& v,
                                                                 const Submodule& S,
                                                                 int max_extra_degree = 8,
                                                                 Exec exec = Exec::serial);

}  // namespace bsys
