#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "bsys/order.hpp"
#include "bsys/ring.hpp"

namespace bsys {

// Element of the free module A^rank: one polynomial per component.
class ModuleVector {
public:
    ModuleVector() = default;
    ModuleVector(int rank, int nvars);  // zero vector; rank 0 is the degenerate module
    explicit ModuleVector(std::vector<Polynomial> comps);

    static ModuleVector unit(int rank, int nvars, int pos);

    int rank() const { return static_cast<int>(comps_.size()); }
    int nvars() const { return nvars_; }
    bool is_zero() const;

    const Polynomial& operator[](int pos) const { return comps_.at(pos); }
    Polynomial& operator[](int pos) { return comps_.at(pos); }
    const std::vector<Polynomial>& components() const { return comps_; }

    ModuleVector operator-() const;
    ModuleVector& operator+=(const ModuleVector& rhs);
    ModuleVector& operator-=(const ModuleVector& rhs);
    friend ModuleVector operator+(ModuleVector lhs, const ModuleVector& rhs) {
        lhs += rhs;
        return lhs;
    }
    friend ModuleVector operator-(ModuleVector lhs, const ModuleVector& rhs) {
        lhs -= rhs;
        return lhs;
    }

    ModuleVector scaled(const Polynomial& p) const;   // p * v, componentwise
    ModuleVector scaled(const Rational& c) const;
    ModuleVector shifted(const Exponent& e) const;    // monomial * v

    // Positions with a nonzero component.
    std::vector<int> support() const;
    // Per-variable max exponent over every term of every component.
    Exponent max_degrees() const;
    int degree() const;  // max total degree over components, -1 if zero

    bool operator==(const ModuleVector&) const = default;

private:
    void check_compatible(const ModuleVector& other) const;

    int nvars_ = 0;
    std::vector<Polynomial> comps_;
};

// Finitely generated submodule of A^rank, carried by a generator list.
// Groebner bases are memoized per module order; the cache is shared between
// copies, so Submodule values stay cheap to pass around.
class Submodule {
public:
    Submodule(int rank, int nvars);
    Submodule(int rank, int nvars, std::vector<ModuleVector> gens);

    static Submodule zero(int rank, int nvars) { return Submodule(rank, nvars); }
    static Submodule full(int rank, int nvars);  // all of A^rank

    int rank() const { return rank_; }
    int nvars() const { return nvars_; }
    const std::vector<ModuleVector>& generators() const { return gens_; }
    bool has_no_generators() const { return gens_.empty(); }

    // Reduced Groebner basis for the given order, computed once per order.
    const std::vector<ModuleVector>& groebner_basis(const ModuleOrder& ord) const;

private:
    struct GbCache {
        std::mutex mu;
        std::map<std::string, std::vector<ModuleVector>> by_order;
    };

    int rank_;
    int nvars_;
    std::vector<ModuleVector> gens_;
    std::shared_ptr<GbCache> cache_;
};

}  // namespace bsys
