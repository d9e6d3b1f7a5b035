#include "bsys/behavior.hpp"

#include <algorithm>
#include <set>

#include "bsys/errors.hpp"
#include "bsys/print.hpp"

namespace bsys {

VariablePartition::VariablePartition(std::vector<std::string> w, std::vector<std::string> c)
    : w_names(std::move(w)), c_names(std::move(c)) {
    if (w_names.empty()) throw Error("partition needs at least one to-be-controlled variable");
    if (c_names.empty()) throw Error("partition needs at least one control variable");
    std::set<std::string> seen;
    for (const auto& n : w_names)
        if (n.empty() || !seen.insert(n).second)
            throw Error("invalid or duplicate signal variable: " + n);
    for (const auto& n : c_names)
        if (n.empty() || !seen.insert(n).second)
            throw Error("invalid or duplicate signal variable: " + n);
}

std::vector<int> VariablePartition::w_block() const {
    std::vector<int> b(k_w());
    for (int i = 0; i < k_w(); ++i) b[i] = i;
    return b;
}

std::vector<int> VariablePartition::c_block() const {
    std::vector<int> b(k_c());
    for (int i = 0; i < k_c(); ++i) b[i] = k_w() + i;
    return b;
}

std::vector<std::string> VariablePartition::all_names() const {
    std::vector<std::string> names = w_names;
    names.insert(names.end(), c_names.begin(), c_names.end());
    return names;
}

ControlSystem::ControlSystem(RingSpec ring_, VariablePartition partition_, Submodule laws)
    : ring(std::move(ring_)), partition(std::move(partition_)), P(std::move(laws)) {
    if (P.rank() != partition.rank())
        throw RankMismatchError("law module rank " + std::to_string(P.rank()) +
                                " does not match signal variable count " +
                                std::to_string(partition.rank()));
    if (P.nvars() != ring.n)
        throw RingMismatchError("law module over a different operator ring than declared");
}

LawsQuadruple derived_laws(const ControlSystem& sys) {
    const auto w = sys.partition.w_block();
    const auto c = sys.partition.c_block();
    return {project_block(sys.P, w), preimage_block(sys.P, w), project_block(sys.P, c),
            preimage_block(sys.P, c)};
}

namespace {

Admissibility sandwich_check(const Submodule& lower, const Submodule& X, const Submodule& upper) {
    auto ord = default_order(X.rank(), X.nvars());
    const auto& gb_x = X.groebner_basis(ord);
    for (const auto& g : lower.generators()) {
        if (!normal_form(g, gb_x, ord).is_zero())
            return {false, AdmissibilityWitness{true, g}};
    }
    const auto& gb_up = upper.groebner_basis(ord);
    for (const auto& g : X.generators()) {
        if (!normal_form(g, gb_up, ord).is_zero())
            return {false, AdmissibilityWitness{false, g}};
    }
    return {true, std::nullopt};
}

std::string witness_message(const AdmissibilityWitness& w, const ControlSystem& sys,
                            const std::vector<std::string>& signal_names) {
    ModuleOrder ord = default_order(static_cast<int>(signal_names.size()), sys.ring.n);
    std::string law = format_law(w.law, sys.ring.var_names, signal_names, ord);
    return w.lower_failed
               ? "forced law not contained in the target: " + law
               : "target law outside the achievable projection: " + law;
}

}  // namespace

Admissibility is_admissible_w(const Submodule& N, const ControlSystem& sys) {
    if (N.rank() != sys.partition.k_w())
        throw RankMismatchError("target module rank does not match the w-block");
    if (N.nvars() != sys.ring.n)
        throw RingMismatchError("target module over a different operator ring");
    const auto w = sys.partition.w_block();
    return sandwich_check(preimage_block(sys.P, w), N, project_block(sys.P, w));
}

Admissibility is_admissible_c(const Submodule& M, const ControlSystem& sys) {
    if (M.rank() != sys.partition.k_c())
        throw RankMismatchError("controller module rank does not match the c-block");
    if (M.nvars() != sys.ring.n)
        throw RingMismatchError("controller module over a different operator ring");
    const auto c = sys.partition.c_block();
    return sandwich_check(preimage_block(sys.P, c), M, project_block(sys.P, c));
}

Submodule embed_w(const Submodule& N, const ControlSystem& sys) {
    return embed_block(N, sys.partition.rank(), sys.partition.w_block());
}

Submodule embed_c(const Submodule& M, const ControlSystem& sys) {
    return embed_block(M, sys.partition.rank(), sys.partition.c_block());
}

Submodule phi(const Submodule& N, const ControlSystem& sys, bool force) {
    if (!force) {
        Admissibility adm = is_admissible_w(N, sys);
        if (!adm.admissible)
            throw InadmissibleError("target is not admissible: " +
                                    witness_message(*adm.witness, sys, sys.partition.w_names));
    } else if (N.rank() != sys.partition.k_w() || N.nvars() != sys.ring.n) {
        throw RankMismatchError("target module does not fit the w-block");
    }
    return preimage_block(module_sum(embed_w(N, sys), sys.P), sys.partition.c_block());
}

Submodule psi(const Submodule& M, const ControlSystem& sys) {
    if (M.rank() != sys.partition.k_c())
        throw RankMismatchError("controller module rank does not match the c-block");
    if (M.nvars() != sys.ring.n)
        throw RingMismatchError("controller module over a different operator ring");
    return preimage_block(module_sum(embed_c(M, sys), sys.P), sys.partition.w_block());
}

Synthesis synthesize_controller(const Submodule& N, const ControlSystem& sys) {
    Admissibility adm = is_admissible_w(N, sys);
    if (!adm.admissible)
        throw InadmissibleError("cannot synthesize for an inadmissible target: " +
                                witness_message(*adm.witness, sys, sys.partition.w_names));
    Submodule controller = phi(N, sys, true);
    bool ok = module_equal(psi(controller, sys), N);
    return {controller, ok, is_admissible_c(controller, sys)};
}

Submodule clip_controller(const Submodule& M, const ControlSystem& sys) {
    if (M.rank() != sys.partition.k_c())
        throw RankMismatchError("controller module rank does not match the c-block");
    if (M.nvars() != sys.ring.n)
        throw RingMismatchError("controller module over a different operator ring");
    return module_intersect(M, project_block(sys.P, sys.partition.c_block()));
}

AchieveReport verify_achieves(const Submodule& M, const Submodule& N, const ControlSystem& sys) {
    if (N.rank() != sys.partition.k_w())
        throw RankMismatchError("target module rank does not match the w-block");
    Submodule achieved_laws = psi(M, sys);
    Submodule canonical = phi(N, sys, true);
    bool achieved = module_equal(achieved_laws, N);
    bool minimal = module_equal(clip_controller(M, sys), canonical);
    return {achieved, minimal, std::move(achieved_laws), std::move(canonical)};
}

ControlSystem interconnect(const ControlSystem& sys, const Submodule& M) {
    if (M.rank() != sys.partition.k_c())
        throw RankMismatchError("controller module rank does not match the c-block");
    if (M.nvars() != sys.ring.n)
        throw RingMismatchError("controller module over a different operator ring");
    return ControlSystem(sys.ring, sys.partition, module_sum(sys.P, embed_c(M, sys)));
}

}  // namespace bsys
