#ifndef BSYS_RING_HPP
#define BSYS_RING_HPP

#include <map>
#include <string>
#include <vector>

#include "bsys/errors.hpp"
#include "bsys/rational.hpp"

namespace bsys {

// Which commutative operator algebra the variables generate. The kind only
// selects printing conventions and trajectory-oracle availability; every
// algebraic operation below is plain polynomial arithmetic either way.
enum class OperatorKind { differential, shift };

struct RingSpec {
    int n = 0;
    OperatorKind kind = OperatorKind::differential;
    std::vector<std::string> var_names;

    RingSpec() = default;
    RingSpec(int n_, OperatorKind kind_, std::vector<std::string> names);

    bool operator==(const RingSpec&) const = default;
};

// A monomial's exponent vector, length n. Entries are non-negative.
using Exponent = std::vector<int>;

int total_degree(const Exponent& e);
Exponent exponent_sum(const Exponent& a, const Exponent& b);
// Componentwise difference; requires b to divide a.
Exponent exponent_diff(const Exponent& a, const Exponent& b);
bool exponent_divides(const Exponent& divisor, const Exponent& multiple);
Exponent exponent_lcm(const Exponent& a, const Exponent& b);
bool exponent_coprime(const Exponent& a, const Exponent& b);

// Sparse multivariate polynomial over Q in a fixed number of operator
// variables. Terms are keyed by exponent in a storage order that is
// independent of any monomial order; leading terms are computed on demand
// against a caller-supplied order.
class Polynomial {
public:
    using TermMap = std::map<Exponent, Rational>;

    Polynomial() = default;
    explicit Polynomial(int nvars) : nvars_(nvars) {}

    static Polynomial zero(int nvars) { return Polynomial(nvars); }
    static Polynomial constant(int nvars, const Rational& c);
    static Polynomial variable(int nvars, int index, int power = 1);
    static Polynomial monomial(int nvars, Exponent e, const Rational& c);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t num_terms() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    // Coefficient of the given exponent (zero if absent).
    Rational coefficient(const Exponent& e) const;

    // Adds c * x^e, erasing the slot if the sum cancels.
    void add_term(const Exponent& e, const Rational& c);

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& rhs);
    Polynomial& operator-=(const Polynomial& rhs);
    friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
    friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }
    friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs);

    Polynomial scaled(const Rational& c) const;
    Polynomial shifted(const Exponent& e) const;  // multiply by x^e

    // -1 for the zero polynomial.
    int degree() const;
    // Per-variable maximum exponent over all terms (all zeros if empty);
    // this is the shift support needed by the finite-window oracle.
    Exponent max_degrees() const;

    bool operator==(const Polynomial&) const = default;

private:
    void check_compatible(const Polynomial& other) const;

    int nvars_ = 0;
    TermMap terms_;
};

}  // namespace bsys

#endif
