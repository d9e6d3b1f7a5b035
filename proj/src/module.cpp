#include "bsys/module.hpp"

#include <algorithm>

#include "bsys/errors.hpp"
#include "bsys/groebner.hpp"

namespace bsys {

ModuleVector::ModuleVector(int rank, int nvars) : nvars_(nvars) {
    if (rank < 0) throw RankMismatchError("module vector rank must be nonnegative");
    comps_.assign(rank, Polynomial(nvars));
}

ModuleVector::ModuleVector(std::vector<Polynomial> comps) : comps_(std::move(comps)) {
    if (comps_.empty()) throw RankMismatchError("module vector needs rank >= 1");
    nvars_ = comps_.front().nvars();
    for (const auto& p : comps_)
        if (p.nvars() != nvars_)
            throw RingMismatchError("module vector components over different rings");
}

ModuleVector ModuleVector::unit(int rank, int nvars, int pos) {
    if (pos < 0 || pos >= rank) throw RankMismatchError("unit vector position out of range");
    ModuleVector v(rank, nvars);
    v[pos] = Polynomial::constant(nvars, Rational(1));
    return v;
}

bool ModuleVector::is_zero() const {
    return std::all_of(comps_.begin(), comps_.end(),
                       [](const Polynomial& p) { return p.is_zero(); });
}

void ModuleVector::check_compatible(const ModuleVector& other) const {
    if (rank() != other.rank())
        throw RankMismatchError("module vectors of different rank (" +
                                std::to_string(rank()) + " vs " +
                                std::to_string(other.rank()) + ")");
    if (nvars_ != other.nvars_)
        throw RingMismatchError("module vectors over different operator rings");
}

ModuleVector ModuleVector::operator-() const {
    ModuleVector r = *this;
    for (auto& p : r.comps_) p = -p;
    return r;
}

ModuleVector& ModuleVector::operator+=(const ModuleVector& rhs) {
    check_compatible(rhs);
    for (int i = 0; i < rank(); ++i) comps_[i] += rhs.comps_[i];
    return *this;
}

ModuleVector& ModuleVector::operator-=(const ModuleVector& rhs) {
    check_compatible(rhs);
    for (int i = 0; i < rank(); ++i) comps_[i] -= rhs.comps_[i];
    return *this;
}

ModuleVector ModuleVector::scaled(const Polynomial& p) const {
    ModuleVector r = *this;
    for (auto& c : r.comps_) c = p * c;
    return r;
}

ModuleVector ModuleVector::scaled(const Rational& c) const {
    ModuleVector r = *this;
    for (auto& p : r.comps_) p = p.scaled(c);
    return r;
}

ModuleVector ModuleVector::shifted(const Exponent& e) const {
    ModuleVector r = *this;
    for (auto& p : r.comps_) p = p.shifted(e);
    return r;
}

std::vector<int> ModuleVector::support() const {
    std::vector<int> s;
    for (int i = 0; i < rank(); ++i)
        if (!comps_[i].is_zero()) s.push_back(i);
    return s;
}

Exponent ModuleVector::max_degrees() const {
    Exponent m(nvars_, 0);
    for (const auto& p : comps_) {
        Exponent pm = p.max_degrees();
        for (int i = 0; i < nvars_; ++i) m[i] = std::max(m[i], pm[i]);
    }
    return m;
}

int ModuleVector::degree() const {
    int d = -1;
    for (const auto& p : comps_) d = std::max(d, p.degree());
    return d;
}

Submodule::Submodule(int rank, int nvars)
    : rank_(rank), nvars_(nvars), cache_(std::make_shared<GbCache>()) {
    if (rank_ < 0) throw RankMismatchError("submodule rank must be nonnegative");
}

Submodule::Submodule(int rank, int nvars, std::vector<ModuleVector> gens)
    : Submodule(rank, nvars) {
    gens_.reserve(gens.size());
    for (auto& g : gens) {
        if (g.rank() != rank_)
            throw RankMismatchError("generator rank does not match submodule rank");
        if (g.nvars() != nvars_)
            throw RingMismatchError("generator over a different operator ring");
        if (!g.is_zero()) gens_.push_back(std::move(g));
    }
}

Submodule Submodule::full(int rank, int nvars) {
    std::vector<ModuleVector> gens;
    gens.reserve(rank);
    for (int i = 0; i < rank; ++i) gens.push_back(ModuleVector::unit(rank, nvars, i));
    return Submodule(rank, nvars, std::move(gens));
}

const std::vector<ModuleVector>& Submodule::groebner_basis(const ModuleOrder& ord) const {
    if (ord.rank() != rank_ || ord.base().nvars() != nvars_)
        throw RankMismatchError("module order does not fit this submodule");
    std::lock_guard<std::mutex> lock(cache_->mu);
    auto key = ord.encode();
    auto it = cache_->by_order.find(key);
    if (it != cache_->by_order.end()) return it->second;
    auto gb = buchberger(gens_, rank_, nvars_, ord).basis;
    auto [ins, ok] = cache_->by_order.emplace(std::move(key), std::move(gb));
    return ins->second;
}

}  // namespace bsys
