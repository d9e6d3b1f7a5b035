#include "bsys/ring.hpp"

#include <algorithm>
#include <set>

namespace bsys {

RingSpec::RingSpec(int n_, OperatorKind kind_, std::vector<std::string> names)
    : n(n_), kind(kind_), var_names(std::move(names)) {
    if (n < 1) throw Error("ring needs at least one operator variable");
    if (static_cast<int>(var_names.size()) != n)
        throw Error("ring declares " + std::to_string(n) + " variables but " +
                    std::to_string(var_names.size()) + " names");
    std::set<std::string> seen;
    for (const auto& name : var_names) {
        if (name.empty()) throw Error("empty operator variable name");
        if (!seen.insert(name).second) throw Error("duplicate operator variable: " + name);
    }
}

int total_degree(const Exponent& e) {
    int d = 0;
    for (int p : e) d += p;
    return d;
}

Exponent exponent_sum(const Exponent& a, const Exponent& b) {
    Exponent r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

Exponent exponent_diff(const Exponent& a, const Exponent& b) {
    Exponent r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

bool exponent_divides(const Exponent& divisor, const Exponent& multiple) {
    for (std::size_t i = 0; i < divisor.size(); ++i)
        if (divisor[i] > multiple[i]) return false;
    return true;
}

Exponent exponent_lcm(const Exponent& a, const Exponent& b) {
    Exponent r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
    return r;
}

bool exponent_coprime(const Exponent& a, const Exponent& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > 0 && b[i] > 0) return false;
    return true;
}

Polynomial Polynomial::constant(int nvars, const Rational& c) {
    Polynomial p(nvars);
    p.add_term(Exponent(nvars, 0), c);
    return p;
}

Polynomial Polynomial::variable(int nvars, int index, int power) {
    if (index < 0 || index >= nvars) throw Error("variable index out of range");
    Exponent e(nvars, 0);
    e[index] = power;
    return monomial(nvars, std::move(e), Rational(1));
}

Polynomial Polynomial::monomial(int nvars, Exponent e, const Rational& c) {
    if (static_cast<int>(e.size()) != nvars) throw Error("exponent length mismatch");
    Polynomial p(nvars);
    p.add_term(std::move(e), c);
    return p;
}

Rational Polynomial::coefficient(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const Exponent& e, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

void Polynomial::check_compatible(const Polynomial& other) const {
    if (nvars_ != other.nvars_)
        throw RingMismatchError("polynomials over different operator rings (" +
                                std::to_string(nvars_) + " vs " +
                                std::to_string(other.nvars_) + " variables)");
}

Polynomial Polynomial::operator-() const {
    Polynomial r(nvars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
    check_compatible(rhs);
    for (const auto& [e, c] : rhs.terms_) add_term(e, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
    check_compatible(rhs);
    for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
    return *this;
}

Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) {
    lhs.check_compatible(rhs);
    Polynomial r(lhs.nvars_);
    for (const auto& [ea, ca] : lhs.terms_)
        for (const auto& [eb, cb] : rhs.terms_) r.add_term(exponent_sum(ea, eb), ca * cb);
    return r;
}

Polynomial Polynomial::scaled(const Rational& c) const {
    Polynomial r(nvars_);
    if (c == 0) return r;
    for (const auto& [e, coef] : terms_) r.terms_.emplace(e, coef * c);
    return r;
}

Polynomial Polynomial::shifted(const Exponent& e) const {
    Polynomial r(nvars_);
    for (const auto& [ex, coef] : terms_) r.terms_.emplace(exponent_sum(ex, e), coef);
    return r;
}

int Polynomial::degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, total_degree(e));
    return d;
}

Exponent Polynomial::max_degrees() const {
    Exponent m(nvars_, 0);
    for (const auto& [e, c] : terms_)
        for (int i = 0; i < nvars_; ++i) m[i] = std::max(m[i], e[i]);
    return m;
}

}  // namespace bsys
