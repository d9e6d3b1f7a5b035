#include "bsys/print.hpp"

#include <algorithm>
#include <sstream>

#include "bsys/errors.hpp"

namespace bsys {

namespace {

std::string format_monomial(const Exponent& e, const std::vector<std::string>& var_names) {
    std::string s;
    for (std::size_t v = 0; v < e.size(); ++v) {
        if (e[v] == 0) continue;
        if (!s.empty()) s += "*";
        s += var_names.at(v);
        if (e[v] != 1) s += "^" + std::to_string(e[v]);
    }
    return s;
}

// One term: optional coefficient, operator monomial, optional signal name.
// |coeff| is printed (sign handling belongs to the join), and a coefficient of
// magnitude 1 is dropped unless nothing else remains.
std::string format_term(const Rational& coeff, const Exponent& e,
                        const std::vector<std::string>& var_names, const std::string& signal) {
    Rational a = coeff < 0 ? Rational(-coeff) : coeff;
    std::string mon = format_monomial(e, var_names);
    std::string tail = mon;
    if (!signal.empty()) tail += (tail.empty() ? "" : "*") + signal;
    if (tail.empty()) return format_rational(a);
    if (a == 1) return tail;
    return format_rational(a) + "*" + tail;
}

struct PrintTerm {
    ModuleMonomial mm;
    Rational coeff;
};

std::string join_terms(std::vector<PrintTerm> terms, const std::vector<std::string>& var_names,
                       const std::vector<std::string>& signal_names) {
    std::string out;
    for (std::size_t i = 0; i < terms.size(); ++i) {
        const auto& t = terms[i];
        std::string signal = signal_names.empty() ? std::string() : signal_names.at(t.mm.pos);
        std::string body = format_term(t.coeff, t.mm.exp, var_names, signal);
        if (i == 0) {
            out += (t.coeff < 0 ? "-" : "") + body;
        } else {
            out += (t.coeff < 0 ? " - " : " + ") + body;
        }
    }
    return out;
}

std::vector<PrintTerm> collect_sorted(const ModuleVector& v, const ModuleOrder& ord) {
    std::vector<PrintTerm> terms;
    for (int pos = 0; pos < v.rank(); ++pos)
        for (const auto& [e, c] : v[pos].terms()) terms.push_back({{e, pos}, c});
    std::sort(terms.begin(), terms.end(), [&](const PrintTerm& a, const PrintTerm& b) {
        return ord.compare(a.mm, b.mm) > 0;
    });
    return terms;
}

}  // namespace

std::string format_rational(const Rational& q) { return q.get_str(); }

std::string format_polynomial(const Polynomial& p, const std::vector<std::string>& var_names,
                              const MonomialOrder& ord) {
    if (p.is_zero()) return "0";
    std::vector<PrintTerm> terms;
    for (const auto& [e, c] : p.terms()) terms.push_back({{e, 0}, c});
    std::sort(terms.begin(), terms.end(), [&](const PrintTerm& a, const PrintTerm& b) {
        return ord.compare(a.mm.exp, b.mm.exp) > 0;
    });
    return join_terms(std::move(terms), var_names, {});
}

std::string format_law(const ModuleVector& v, const std::vector<std::string>& var_names,
                       const std::vector<std::string>& signal_names, const ModuleOrder& ord) {
    if (signal_names.empty() && v.rank() != 1)
        throw Error("cannot render a rank-" + std::to_string(v.rank()) +
                    " law without signal names");
    if (!signal_names.empty() && static_cast<int>(signal_names.size()) != v.rank())
        throw RankMismatchError("signal name count does not match law rank");
    if (v.is_zero()) return "0";
    return join_terms(collect_sorted(v, ord), var_names, signal_names);
}

std::string print_canonical(const Submodule& S, const ModuleOrder& ord,
                            const std::vector<std::string>& var_names,
                            const std::vector<std::string>& signal_names) {
    const auto& gb = S.groebner_basis(ord);
    if (gb.empty()) return "<0>\n";

    // Leading monomial of each basis element, for the line ordering.
    std::vector<int> idx(gb.size());
    std::vector<ModuleMonomial> lead(gb.size());
    for (std::size_t i = 0; i < gb.size(); ++i) {
        idx[i] = static_cast<int>(i);
        auto terms = collect_sorted(gb[i], ord);
        lead[i] = terms.front().mm;
    }
    std::sort(idx.begin(), idx.end(), [&](int a, int b) {
        if (lead[a].pos != lead[b].pos) return lead[a].pos < lead[b].pos;
        return ord.base().compare(lead[a].exp, lead[b].exp) > 0;
    });

    std::string out;
    for (int i : idx) out += format_law(gb[i], var_names, signal_names, ord) + "\n";
    return out;
}

}  // namespace bsys
