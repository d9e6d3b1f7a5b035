#include "doctest.h"

#include "bsys/behavior.hpp"
#include "bsys/errors.hpp"
#include "support/random_systems.hpp"

using namespace bsys;
using testsupport::Rng;

namespace {

// Single integrator: one operator variable d, law d*w1 - c1 = 0.
ControlSystem integrator() {
    RingSpec ring(1, OperatorKind::differential, {"d"});
    VariablePartition part({"w1"}, {"c1"});
    Polynomial d = Polynomial::variable(1, 0);
    Submodule P(2, 1, {ModuleVector({d, Polynomial::constant(1, -1)})});
    return ControlSystem(ring, part, P);
}

Submodule ideal1(Polynomial p) { return Submodule(1, 1, {ModuleVector({std::move(p)})}); }

Polynomial dpow(int k) { return Polynomial::variable(1, 0, k); }

}  // namespace

TEST_CASE("integrator derived laws") {
    ControlSystem sys = integrator();
    LawsQuadruple q = derived_laws(sys);
    CHECK(module_equal(q.pi_w, ideal1(dpow(1))));
    CHECK(q.inv_w.groebner_basis(default_order(1, 1)).empty());
    CHECK(module_equal(q.pi_c, Submodule::full(1, 1)));
    CHECK(q.inv_c.groebner_basis(default_order(1, 1)).empty());
}

TEST_CASE("integrator admissibility") {
    ControlSystem sys = integrator();
    CHECK(is_admissible_w(ideal1(dpow(2)), sys).admissible);
    CHECK(is_admissible_w(Submodule::zero(1, 1), sys).admissible);
    CHECK(is_admissible_w(ideal1(dpow(1)), sys).admissible);

    Admissibility bad = is_admissible_w(Submodule::full(1, 1), sys);
    CHECK_FALSE(bad.admissible);
    REQUIRE(bad.witness.has_value());
    CHECK_FALSE(bad.witness->lower_failed);  // target exceeds the achievable side
}

TEST_CASE("integrator phi and psi round-trip") {
    ControlSystem sys = integrator();
    Submodule N = ideal1(dpow(2));
    Submodule M = phi(N, sys);
    CHECK(module_equal(M, ideal1(dpow(1))));
    CHECK(module_equal(psi(M, sys), N));

    // The extremes map to each other.
    LawsQuadruple q = derived_laws(sys);
    CHECK(module_equal(phi(q.pi_w, sys), q.pi_c));
    CHECK(module_equal(phi(q.inv_w, sys), q.inv_c));
}

TEST_CASE("synthesis rejects inadmissible targets with a witness") {
    ControlSystem sys = integrator();
    CHECK_THROWS_AS(synthesize_controller(Submodule::full(1, 1), sys), InadmissibleError);
    CHECK_THROWS_AS(phi(Submodule::full(1, 1), sys), InadmissibleError);
    CHECK_NOTHROW(phi(Submodule::full(1, 1), sys, /*force=*/true));

    Synthesis syn = synthesize_controller(ideal1(dpow(2)), sys);
    CHECK(syn.certificate_ok);
    CHECK(syn.c_side.admissible);
    CHECK(module_equal(syn.controller, ideal1(dpow(1))));
}

TEST_CASE("verify_achieves on the integrator") {
    ControlSystem sys = integrator();
    Submodule N = ideal1(dpow(2));
    AchieveReport rep = verify_achieves(ideal1(dpow(1)), N, sys);
    CHECK(rep.achieved);
    CHECK(rep.minimal);
    CHECK(module_equal(rep.psi_of_controller, N));

    AchieveReport wrong = verify_achieves(ideal1(dpow(2)), N, sys);
    CHECK_FALSE(wrong.achieved);  // d^2 on c achieves d^3 on w, not d^2
    CHECK(module_equal(wrong.psi_of_controller, ideal1(dpow(3))));
}

TEST_CASE("clipping against the achievable c laws") {
    // Reversed roles: law -w1 + d*c1 = 0, so pi_c = <d> is proper.
    RingSpec ring(1, OperatorKind::differential, {"d"});
    VariablePartition part({"w1"}, {"c1"});
    Submodule P(2, 1, {ModuleVector({Polynomial::constant(1, -1), dpow(1)})});
    ControlSystem sys(ring, part, P);

    CHECK(module_equal(derived_laws(sys).pi_c, ideal1(dpow(1))));
    Submodule M = Submodule::full(1, 1);
    CHECK(module_equal(clip_controller(M, sys), ideal1(dpow(1))));
    CHECK(module_equal(psi(M, sys), psi(clip_controller(M, sys), sys)));
}

TEST_CASE("random systems: endpoint identities and round-trips") {
    Rng rng(1000);
    for (int trial = 0; trial < 20; ++trial) {
        ControlSystem sys = testsupport::random_system(rng);
        LawsQuadruple q = derived_laws(sys);

        CHECK(module_equal(phi(q.inv_w, sys), q.inv_c));
        CHECK(module_equal(phi(q.pi_w, sys), q.pi_c));

        Submodule N = testsupport::random_admissible_target(rng, q.inv_w, q.pi_w);
        REQUIRE(is_admissible_w(N, sys).admissible);
        Submodule M = phi(N, sys);
        CHECK(module_equal(psi(M, sys), N));
        CHECK(module_equal(phi(psi(M, sys), sys), M));
        CHECK(is_admissible_c(M, sys).admissible);
    }
}

TEST_CASE("random systems: monotonicity of phi") {
    Rng rng(1001);
    for (int trial = 0; trial < 12; ++trial) {
        ControlSystem sys = testsupport::random_system(rng);
        LawsQuadruple q = derived_laws(sys);
        Submodule N1 = testsupport::random_admissible_target(rng, q.inv_w, q.pi_w);
        // N2 = N1 plus more achievable laws, so N1 <= N2 <= pi_w.
        Submodule more = testsupport::random_admissible_target(rng, q.inv_w, q.pi_w);
        Submodule N2 = module_sum(N1, more);
        CHECK(is_submodule(phi(N1, sys), phi(N2, sys)));
    }
}

TEST_CASE("random systems: clipping, sandwich, residual invariance") {
    Rng rng(1002);
    for (int trial = 0; trial < 15; ++trial) {
        ControlSystem sys = testsupport::random_system(rng);
        LawsQuadruple q = derived_laws(sys);
        // Arbitrary c-side module, deliberately not confined to pi_c.
        Submodule M = testsupport::random_submodule(rng, sys.partition.k_c(), sys.ring.n, 2);

        Submodule achieved = psi(M, sys);
        CHECK(module_equal(achieved, psi(clip_controller(M, sys), sys)));
        CHECK(is_submodule(q.inv_w, achieved));
        CHECK(is_submodule(achieved, q.pi_w));

        ControlSystem inter = interconnect(sys, M);
        LawsQuadruple qi = derived_laws(inter);
        CHECK(module_equal(qi.pi_w, q.pi_w));          // no hidden w laws appear
        CHECK(module_equal(qi.inv_w, achieved));       // forced laws are what M achieves
    }
}

TEST_CASE("partition bookkeeping") {
    VariablePartition part({"a", "b"}, {"u"});
    CHECK(part.rank() == 3);
    CHECK(part.w_block() == std::vector<int>{0, 1});
    CHECK(part.c_block() == std::vector<int>{2});
    CHECK(part.all_names() == std::vector<std::string>{"a", "b", "u"});
    CHECK_THROWS_AS(VariablePartition({"a", "a"}, {"u"}), Error);
    CHECK_THROWS_AS(VariablePartition({"a"}, {"a"}), Error);
}
