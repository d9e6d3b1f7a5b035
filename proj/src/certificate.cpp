#include "bsys/certificate.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "bsys/errors.hpp"

namespace bsys {

namespace {

void enumerate_monomials(int nvars, int max_degree, int var, Exponent& cur,
                         std::vector<Exponent>& out) {
    if (var == nvars) {
        out.push_back(cur);
        return;
    }
    int used = total_degree(cur);
    for (int d = 0; d <= max_degree - used; ++d) {
        cur[var] = d;
        enumerate_monomials(nvars, max_degree, var + 1, cur, out);
    }
    cur[var] = 0;
}

std::vector<Exponent> monomials_up_to(int nvars, int max_degree) {
    std::vector<Exponent> out;
    Exponent cur(nvars, 0);
    enumerate_monomials(nvars, max_degree, 0, cur, out);
    return out;
}

}  // namespace

std::optional<std::vector<Polynomial>> cofactor_certificate(const ModuleVector& target,
                                                            const std::vector<ModuleVector>& gens,
                                                            int degree_bound, Exec exec) {
    const int rank = target.rank();
    const int nvars = target.nvars();
    for (const auto& g : gens) {
        if (g.rank() != rank) throw RankMismatchError("certificate generators of wrong rank");
        if (g.nvars() != nvars)
            throw RingMismatchError("certificate generators over a different operator ring");
    }
    if (gens.empty()) {
        if (target.is_zero()) return std::vector<Polynomial>{};
        return std::nullopt;
    }
    if (degree_bound < 0) return std::nullopt;

    const std::vector<Exponent> mons = monomials_up_to(nvars, degree_bound);
    const int per_gen = static_cast<int>(mons.size());
    const int ncols = per_gen * static_cast<int>(gens.size());

    // Row per (position, product monomial) appearing anywhere.
    std::map<std::pair<int, Exponent>, int> row_of;
    auto row_index = [&](int pos, const Exponent& e) {
        auto [it, inserted] = row_of.emplace(std::make_pair(pos, e), int(row_of.size()));
        return it->second;
    };
    struct Entry {
        int row, col;
        Rational c;
    };
    std::vector<Entry> entries;
    for (std::size_t gi = 0; gi < gens.size(); ++gi) {
        for (int mi = 0; mi < per_gen; ++mi) {
            const int col = int(gi) * per_gen + mi;
            for (int pos = 0; pos < rank; ++pos)
                for (const auto& [e, c] : gens[gi][pos].terms())
                    entries.push_back({row_index(pos, exponent_sum(e, mons[mi])), col, c});
        }
    }
    std::vector<std::pair<int, Rational>> rhs;  // (row, value)
    for (int pos = 0; pos < rank; ++pos)
        for (const auto& [e, c] : target[pos].terms()) rhs.push_back({row_index(pos, e), c});

    QMatrix A(static_cast<int>(row_of.size()), ncols);
    for (const auto& en : entries) A.at(en.row, en.col) += en.c;
    std::vector<Rational> b(row_of.size(), Rational(0));
    for (const auto& [row, c] : rhs) b[row] = c;

    auto x = solve_linear(A, b, exec);
    if (!x) return std::nullopt;

    std::vector<Polynomial> cof(gens.size(), Polynomial(nvars));
    for (std::size_t gi = 0; gi < gens.size(); ++gi)
        for (int mi = 0; mi < per_gen; ++mi)
            cof[gi].add_term(mons[mi], (*x)[gi * per_gen + mi]);

    // Exact arithmetic should make this unconditional; verify anyway so a bad
    // certificate can never leak out.
    ModuleVector recon(rank, nvars);
    for (std::size_t gi = 0; gi < gens.size(); ++gi) recon += gens[gi].scaled(cof[gi]);
    if (!(recon == target)) throw Error("internal: cofactor certificate failed verification");
    return cof;
}

std::optional<MembershipCertificate> find_membership_certificate(const ModuleVector& v,
                                                                 const Submodule& S,
                                                                 int max_extra_degree,
                                                                 Exec exec) {
    if (v.rank() != S.rank()) throw RankMismatchError("vector rank does not match submodule");
    if (v.nvars() != S.nvars())
        throw RingMismatchError("vector over a different operator ring than submodule");
    if (v.is_zero()) return MembershipCertificate{
        std::vector<Polynomial>(S.generators().size(), Polynomial(S.nvars())), 0};
    const int start = std::max(0, v.degree());
    for (int d = start; d <= start + max_extra_degree; ++d) {
        auto cof = cofactor_certificate(v, S.generators(), d, exec);
        if (cof) return MembershipCertificate{std::move(*cof), d};
    }
    return std::nullopt;
}

}  // namespace bsys
