#include "doctest.h"

#include "bsys/certificate.hpp"
#include "bsys/groebner.hpp"
#include "support/random_systems.hpp"

using namespace bsys;
using testsupport::Rng;

namespace {

Polynomial var(int nvars, int i, int pow = 1) { return Polynomial::variable(nvars, i, pow); }

ModuleVector reconstruct(const std::vector<Polynomial>& cofs,
                         const std::vector<ModuleVector>& gens, int rank, int nvars) {
    ModuleVector acc(rank, nvars);
    for (std::size_t i = 0; i < gens.size(); ++i) acc += gens[i].scaled(cofs[i]);
    return acc;
}

}  // namespace

TEST_CASE("difference of squares has degree-1 cofactors") {
    Polynomial x = var(2, 0), y = var(2, 1);
    std::vector<ModuleVector> gens{ModuleVector({x + y}), ModuleVector({x - y})};
    ModuleVector target({var(2, 0, 2) - var(2, 1, 2)});

    CHECK_FALSE(cofactor_certificate(target, gens, 0).has_value());

    auto cofs = cofactor_certificate(target, gens, 1);
    REQUIRE(cofs.has_value());
    for (const auto& q : *cofs) CHECK(q.degree() <= 1);
    CHECK(reconstruct(*cofs, gens, 1, 2) == target);
}

TEST_CASE("non-members never get a certificate") {
    Polynomial x = var(2, 0), y = var(2, 1);
    std::vector<ModuleVector> gens{ModuleVector({x}), ModuleVector({y})};
    ModuleVector one({Polynomial::constant(2, 1)});
    CHECK_FALSE(cofactor_certificate(one, gens, 4).has_value());
    Submodule S(1, 2, gens);
    CHECK_FALSE(find_membership_certificate(one, S).has_value());
    CHECK_FALSE(is_member(one, S));
}

TEST_CASE("zero vector certificate is trivial") {
    Submodule S(2, 1, {ModuleVector({var(1, 0), Polynomial::constant(1, 1)})});
    auto cert = find_membership_certificate(ModuleVector(2, 1), S);
    REQUIRE(cert.has_value());
    CHECK(reconstruct(cert->cofactors, S.generators(), 2, 1) == ModuleVector(2, 1));
}

TEST_CASE("escalation finds certificates for random members") {
    Rng rng(314);
    for (int trial = 0; trial < 20; ++trial) {
        int rank = rng.range(1, 3), nvars = rng.range(1, 2);
        Submodule S = testsupport::random_submodule(rng, rank, nvars, 2);
        ModuleVector v(rank, nvars);
        for (const auto& g : S.generators())
            v += g.scaled(testsupport::random_polynomial(rng, nvars, 2));

        auto cert = find_membership_certificate(v, S);
        REQUIRE_MESSAGE(cert.has_value(), "trial " << trial);
        CHECK(reconstruct(cert->cofactors, S.generators(), rank, nvars) == v);
        CHECK(cert->cofactors.size() == S.generators().size());
        for (const auto& q : cert->cofactors) CHECK(q.degree() <= cert->degree_bound);
        // Independent cross-check against the rewriting engine.
        CHECK(is_member(v, S));
    }
}

TEST_CASE("rank-2 mixed-position certificate") {
    // v = x*(x, 1) + y*(y, 0) = (x^2 + y^2, x)
    Polynomial x = var(2, 0), y = var(2, 1);
    ModuleVector g1({x, Polynomial::constant(2, 1)});
    ModuleVector g2({y, Polynomial::zero(2)});
    ModuleVector v = g1.scaled(x) + g2.scaled(y);
    auto cofs = cofactor_certificate(v, {g1, g2}, 1);
    REQUIRE(cofs.has_value());
    CHECK(reconstruct(*cofs, {g1, g2}, 2, 2) == v);
}

TEST_CASE("serial and parallel solves agree") {
    Rng rng(315);
    Submodule S = testsupport::random_submodule(rng, 2, 2, 2);
    ModuleVector v(2, 2);
    for (const auto& g : S.generators())
        v += g.scaled(testsupport::random_polynomial(rng, 2, 2));
    auto a = find_membership_certificate(v, S, 8, Exec::serial);
    auto b = find_membership_certificate(v, S, 8, Exec::parallel);
    REQUIRE(a.has_value());
    REQUIRE(b.has_value());
    CHECK(a->degree_bound == b->degree_bound);
    CHECK(a->cofactors == b->cofactors);
}
