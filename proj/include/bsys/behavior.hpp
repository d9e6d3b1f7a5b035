#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bsys/groebner.hpp"
#include "bsys/module.hpp"
#include "bsys/ring.hpp"

namespace bsys {

// Splits the k signal variables into the to-be-controlled block w (positions
// 0..k_w-1) and the control block c (positions k_w..k_w+k_c-1).
struct VariablePartition {
    VariablePartition(std::vector<std::string> w, std::vector<std::string> c);

    int k_w() const { return static_cast<int>(w_names.size()); }
    int k_c() const { return static_cast<int>(c_names.size()); }
    int rank() const { return k_w() + k_c(); }
    std::vector<int> w_block() const;
    std::vector<int> c_block() const;
    std::vector<std::string> all_names() const;

    std::vector<std::string> w_names;
    std::vector<std::string> c_names;

    bool operator==(const VariablePartition&) const = default;
};

// A distributed system given by its law module P: the behavior is the set of
// signal trajectories annihilated by every element of P.
struct ControlSystem {
    ControlSystem(RingSpec ring, VariablePartition partition, Submodule laws);

    RingSpec ring;
    VariablePartition partition;
    Submodule P;  // rank k_w + k_c
};

struct LawsQuadruple {
    Submodule pi_w;   // projections of P to w: laws the w-variables can obey
    Submodule inv_w;  // w-laws forced by P alone (preimage of the w-embedding)
    Submodule pi_c;
    Submodule inv_c;
};

LawsQuadruple derived_laws(const ControlSystem& sys);

struct AdmissibilityWitness {
    bool lower_failed;     // true: a forced law is missing; false: target exceeds pi-side
    ModuleVector law;      // generator violating the inclusion
};

struct Admissibility {
    bool admissible = false;
    std::optional<AdmissibilityWitness> witness;  // set when inadmissible
};

// N is achievable as a controlled w-behavior iff inv_w subseteq N subseteq pi_w.
Admissibility is_admissible_w(const Submodule& N, const ControlSystem& sys);
// Mirror check on the controller side: inv_c subseteq M subseteq pi_c.
Admissibility is_admissible_c(const Submodule& M, const ControlSystem& sys);

Submodule embed_w(const Submodule& N, const ControlSystem& sys);
Submodule embed_c(const Submodule& M, const ControlSystem& sys);

// The w -> c direction of the bijection: phi(N) = preimage_c(embed_w(N) + P).
// Throws InadmissibleError for inadmissible N unless force is set (the formula
// itself is total, but its guarantees only cover admissible targets).
Submodule phi(const Submodule& N, const ControlSystem& sys, bool force = false);

// The c -> w direction: psi(M) = preimage_w(embed_c(M) + P). This is the law
// module of the controlled behavior once controller laws M are imposed.
Submodule psi(const Submodule& M, const ControlSystem& sys);

struct Synthesis {
    Submodule controller;    // phi(N), the canonical controller
    bool certificate_ok;     // psi(controller) == N, verified
    Admissibility c_side;    // controller sits between inv_c and pi_c
};

// Canonical-controller synthesis for an admissible target N; throws
// InadmissibleError (with the witness rendered) otherwise.
Synthesis synthesize_controller(const Submodule& N, const ControlSystem& sys);

// M restricted to laws the control variables can actually obey: M ∩ pi_c.
// Imposing the clipped controller changes nothing: psi(clip(M)) = psi(M).
Submodule clip_controller(const Submodule& M, const ControlSystem& sys);

struct AchieveReport {
    bool achieved = false;  // psi(M) == N
    bool minimal = false;   // clip(M) == phi(N)
    Submodule psi_of_controller;
    Submodule canonical;    // phi(N), computed unconditionally
};

AchieveReport verify_achieves(const Submodule& M, const Submodule& N, const ControlSystem& sys);

// New system with law module P + embed_c(M); its w-projection equals the
// original's, i.e. interconnection adds no hidden w-laws.
ControlSystem interconnect(const ControlSystem& sys, const Submodule& M);

}  // namespace bsys
