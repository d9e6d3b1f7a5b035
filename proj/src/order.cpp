#include "bsys/order.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "bsys/errors.hpp"

namespace bsys {

namespace {

std::vector<int> identity_perm(int n) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    return p;
}

bool is_permutation_of(const std::vector<int>& p, int n) {
    if (static_cast<int>(p.size()) != n) return false;
    std::vector<char> seen(n, 0);
    for (int v : p) {
        if (v < 0 || v >= n || seen[v]) return false;
        seen[v] = 1;
    }
    return true;
}

const char* term_order_name(TermOrder k) {
    switch (k) {
        case TermOrder::lex: return "lex";
        case TermOrder::grlex: return "grlex";
        case TermOrder::grevlex: return "grevlex";
    }
    return "?";
}

}  // namespace

MonomialOrder::MonomialOrder(TermOrder kind, int nvars, std::vector<int> permutation)
    : kind_(kind), nvars_(nvars), perm_(std::move(permutation)) {
    if (nvars_ < 1) throw Error("monomial order needs at least one variable");
    if (perm_.empty()) perm_ = identity_perm(nvars_);
    if (!is_permutation_of(perm_, nvars_))
        throw Error("monomial order permutation is not a permutation of the variables");
}

std::strong_ordering MonomialOrder::compare(const Exponent& a, const Exponent& b) const {
    if (static_cast<int>(a.size()) != nvars_ || static_cast<int>(b.size()) != nvars_)
        throw RingMismatchError("exponent length does not match monomial order");
    switch (kind_) {
        case TermOrder::lex: {
            for (int i = 0; i < nvars_; ++i) {
                int va = a[perm_[i]], vb = b[perm_[i]];
                if (va != vb) return va <=> vb;
            }
            return std::strong_ordering::equal;
        }
        case TermOrder::grlex: {
            int da = total_degree(a), db = total_degree(b);
            if (da != db) return da <=> db;
            for (int i = 0; i < nvars_; ++i) {
                int va = a[perm_[i]], vb = b[perm_[i]];
                if (va != vb) return va <=> vb;
            }
            return std::strong_ordering::equal;
        }
        case TermOrder::grevlex: {
            int da = total_degree(a), db = total_degree(b);
            if (da != db) return da <=> db;
            // Equal degree: greater iff the LAST nonzero entry of a-b (reading
            // variables from most to least significant) is negative.
            for (int i = nvars_ - 1; i >= 0; --i) {
                int va = a[perm_[i]], vb = b[perm_[i]];
                if (va != vb) return vb <=> va;
            }
            return std::strong_ordering::equal;
        }
    }
    return std::strong_ordering::equal;
}

std::string MonomialOrder::describe(const std::vector<std::string>& var_names) const {
    std::ostringstream os;
    os << term_order_name(kind_) << "(";
    for (int i = 0; i < nvars_; ++i) {
        if (i) os << " > ";
        os << var_names.at(perm_[i]);
    }
    os << ")";
    return os.str();
}

std::string MonomialOrder::encode() const {
    std::ostringstream os;
    os << term_order_name(kind_) << ":" << nvars_ << ":";
    for (int i = 0; i < nvars_; ++i) {
        if (i) os << ",";
        os << perm_[i];
    }
    return os.str();
}

ModuleOrder::ModuleOrder(MonomialOrder base, int rank, PositionRule rule,
                         std::vector<int> position_priority, std::vector<int> elim_block)
    : base_(std::move(base)),
      rank_(rank),
      rule_(rule),
      priority_(std::move(position_priority)),
      elim_block_(std::move(elim_block)) {
    if (rank_ < 0) throw Error("module order rank must be nonnegative");
    if (priority_.empty()) priority_ = identity_perm(rank_);
    if (!is_permutation_of(priority_, rank_))
        throw Error("position priority is not a permutation of the component positions");
    priority_rank_.assign(rank_, 0);
    for (int i = 0; i < rank_; ++i) priority_rank_[priority_[i]] = i;
    std::sort(elim_block_.begin(), elim_block_.end());
    in_elim_.assign(rank_, 0);
    for (std::size_t i = 0; i < elim_block_.size(); ++i) {
        int pos = elim_block_[i];
        if (pos < 0 || pos >= rank_) throw Error("elimination block position out of range");
        if (i > 0 && elim_block_[i] == elim_block_[i - 1])
            throw Error("duplicate position in elimination block");
        in_elim_[pos] = 1;
    }
}

std::strong_ordering ModuleOrder::compare(const ModuleMonomial& a,
                                          const ModuleMonomial& b) const {
    if (a.pos < 0 || a.pos >= rank_ || b.pos < 0 || b.pos >= rank_)
        throw RankMismatchError("module monomial position out of range for order");
    if (!elim_block_.empty()) {
        // Block positions dominate everything outside the block.
        bool ea = in_elim_[a.pos], eb = in_elim_[b.pos];
        if (ea != eb) return ea ? std::strong_ordering::greater : std::strong_ordering::less;
    }
    // priority_rank_ is ascending in significance-rank: smaller rank = greater.
    if (rule_ == PositionRule::pot) {
        if (a.pos != b.pos) return priority_rank_[b.pos] <=> priority_rank_[a.pos];
        return base_.compare(a.exp, b.exp);
    }
    auto c = base_.compare(a.exp, b.exp);
    if (c != 0) return c;
    return priority_rank_[b.pos] <=> priority_rank_[a.pos];
}

ModuleOrder ModuleOrder::with_elim_block(std::vector<int> block) const {
    return ModuleOrder(base_, rank_, rule_, priority_, std::move(block));
}

std::string ModuleOrder::encode() const {
    std::ostringstream os;
    os << base_.encode() << "|" << rank_ << "|" << (rule_ == PositionRule::top ? "top" : "pot")
       << "|";
    for (int i = 0; i < rank_; ++i) {
        if (i) os << ",";
        os << priority_[i];
    }
    os << "|elim:";
    for (std::size_t i = 0; i < elim_block_.size(); ++i) {
        if (i) os << ",";
        os << elim_block_[i];
    }
    return os.str();
}

ModuleOrder default_order(int rank, int nvars) {
    return ModuleOrder(MonomialOrder(TermOrder::grevlex, nvars), rank, PositionRule::pot);
}

}  // namespace bsys
