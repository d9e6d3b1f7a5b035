#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "bsys/ring.hpp"

namespace bsys {

enum class TermOrder { lex, grlex, grevlex };

// Monomial order on exponent vectors, with an optional variable permutation.
// permutation[i] gives the index (into the exponent vector) of the i-th most
// significant variable; an empty permutation means the identity.
class MonomialOrder {
public:
    MonomialOrder(TermOrder kind, int nvars, std::vector<int> permutation = {});

    int nvars() const { return nvars_; }
    TermOrder kind() const { return kind_; }
    const std::vector<int>& permutation() const { return perm_; }

    // Strict three-way comparison: greater means "larger monomial".
    std::strong_ordering compare(const Exponent& a, const Exponent& b) const;
    bool less(const Exponent& a, const Exponent& b) const { return compare(a, b) < 0; }

    std::string describe(const std::vector<std::string>& var_names) const;
    std::string encode() const;  // stable key fragment for caching

    bool operator==(const MonomialOrder&) const = default;

private:
    TermOrder kind_;
    int nvars_;
    std::vector<int> perm_;  // always explicit, size nvars_
};

enum class PositionRule { top, pot };  // term-over-position / position-over-term

// A point in the free module A^rank: a monomial at a component position.
struct ModuleMonomial {
    Exponent exp;
    int pos = 0;
};

// Order on module monomials. position_priority lists component positions from
// greatest to least (default: 0,1,...,rank-1). When elim_block is set, monomials
// whose position lies in the block dominate all others regardless of the rest of
// the order; this makes the order an elimination order for that block.
class ModuleOrder {
public:
    ModuleOrder(MonomialOrder base, int rank, PositionRule rule,
                std::vector<int> position_priority = {},
                std::vector<int> elim_block = {});

    const MonomialOrder& base() const { return base_; }
    int rank() const { return rank_; }
    PositionRule rule() const { return rule_; }
    const std::vector<int>& position_priority() const { return priority_; }
    const std::vector<int>& elim_block() const { return elim_block_; }
    bool has_elim_block() const { return !elim_block_.empty(); }

    std::strong_ordering compare(const ModuleMonomial& a, const ModuleMonomial& b) const;
    bool less(const ModuleMonomial& a, const ModuleMonomial& b) const {
        return compare(a, b) < 0;
    }

    ModuleOrder with_elim_block(std::vector<int> block) const;

    std::string encode() const;  // stable cache key

    bool operator==(const ModuleOrder&) const = default;

private:
    MonomialOrder base_;
    int rank_;
    PositionRule rule_;
    std::vector<int> priority_;       // positions, most significant first
    std::vector<int> priority_rank_;  // priority_rank_[pos] = index in priority_
    std::vector<int> elim_block_;     // sorted ascending
    std::vector<char> in_elim_;       // in_elim_[pos] != 0 iff pos in elim_block_
};

// Default order used throughout: position-over-term over graded reverse
// lexicographic, components in declaration order (position 0 greatest).
ModuleOrder default_order(int rank, int nvars);

}  // namespace bsys
