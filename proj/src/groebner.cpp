#include "bsys/groebner.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <utility>

#include "bsys/errors.hpp"

namespace bsys {

namespace {

// Internal flat representation: all terms of a module vector in one list,
// sorted strictly descending under the active order. Leading term = front().
struct MTerm {
    ModuleMonomial mm;
    Rational coeff;
};
using TermVec = std::vector<MTerm>;

TermVec to_terms(const ModuleVector& v, const ModuleOrder& ord) {
    TermVec t;
    for (int pos = 0; pos < v.rank(); ++pos)
        for (const auto& [e, c] : v[pos].terms()) t.push_back({{e, pos}, c});
    std::sort(t.begin(), t.end(),
              [&](const MTerm& a, const MTerm& b) { return ord.compare(a.mm, b.mm) > 0; });
    return t;
}

ModuleVector from_terms(const TermVec& t, int rank, int nvars) {
    ModuleVector v(rank, nvars);
    for (const auto& mt : t) v[mt.mm.pos].add_term(mt.mm.exp, mt.coeff);
    return v;
}

// a + c * x^e * b, both inputs sorted descending; a uniform monomial shift
// preserves the relative order of b's terms, so this is a plain merge.
TermVec axpy(const TermVec& a, const Rational& c, const Exponent& e, const TermVec& b,
             const ModuleOrder& ord) {
    TermVec r;
    r.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        ModuleMonomial mb{exponent_sum(b[j].mm.exp, e), b[j].mm.pos};
        auto cmp = ord.compare(a[i].mm, mb);
        if (cmp > 0) {
            r.push_back(a[i++]);
        } else if (cmp < 0) {
            r.push_back({std::move(mb), c * b[j].coeff});
            ++j;
        } else {
            Rational s = a[i].coeff + c * b[j].coeff;
            if (s != 0) r.push_back({a[i].mm, std::move(s)});
            ++i;
            ++j;
        }
    }
    for (; i < a.size(); ++i) r.push_back(a[i]);
    for (; j < b.size(); ++j)
        r.push_back({{exponent_sum(b[j].mm.exp, e), b[j].mm.pos}, c * b[j].coeff});
    return r;
}

TermVec shift_scale(const TermVec& f, const Rational& c, const Exponent& e) {
    TermVec r;
    r.reserve(f.size());
    for (const auto& mt : f) r.push_back({{exponent_sum(mt.mm.exp, e), mt.mm.pos}, c * mt.coeff});
    return r;
}

// Scale to primitive integer coefficients with positive leading coefficient
// and report the factor applied. Rescaling changes a vector only by a unit,
// never the module it generates or the reduction path it takes.
Rational primitive_scale(TermVec& t) {
    if (t.empty()) return Rational(1);
    Integer den_l(1);
    for (const auto& mt : t) den_l = lcm(den_l, Integer(mt.coeff.get_den()));
    Integer num_g(0);
    for (const auto& mt : t)
        num_g = gcd(num_g, Integer(mt.coeff.get_num() * (den_l / mt.coeff.get_den())));
    Rational scale(den_l, num_g);
    scale.canonicalize();
    if (t.front().coeff < 0) scale = -scale;
    for (auto& mt : t) mt.coeff *= scale;
    return scale;
}

void make_primitive(TermVec& t) { primitive_scale(t); }

// Homogenization degree of a vector: the largest total degree among its terms.
long vector_degree(const TermVec& t) {
    long d = 0;
    for (const auto& mt : t) d = std::max(d, static_cast<long>(total_degree(mt.mm.exp)));
    return d;
}

// Reduction works on integer coefficients: rational arithmetic pays a gcd per
// operation, which dominates the whole engine. A vector is stored scaled by a
// rational lambda so that scaled = lambda * true_value with integer entries.
struct ITerm {
    ModuleMonomial mm;
    Integer coeff;
};
using ITermVec = std::vector<ITerm>;

struct ScaledInt {
    ITermVec terms;
    Rational lambda;
};

ScaledInt to_integer(const TermVec& t) {
    Integer den_l(1);
    for (const auto& mt : t) den_l = lcm(den_l, Integer(mt.coeff.get_den()));
    ScaledInt s;
    s.lambda = den_l;
    s.terms.reserve(t.size());
    for (const auto& mt : t)
        s.terms.push_back({mt.mm, Integer(mt.coeff.get_num() * (den_l / mt.coeff.get_den()))});
    return s;
}

// Divide out the integer content; returns the updated lambda factor applied.
void remove_content(ScaledInt& s) {
    if (s.terms.empty()) return;
    Integer g(0);
    for (const auto& mt : s.terms) {
        g = gcd(g, mt.coeff);
        if (g == 1) return;
    }
    for (auto& mt : s.terms) mt.coeff /= g;
    s.lambda /= Rational(g);
}

// r = a*h[start..] + c * x^e * b, integer coefficients, both inputs sorted
// descending; a uniform monomial shift preserves the order of b's terms.
ITermVec iaxpy(const ITermVec& h, std::size_t start, const Integer& a, const Integer& c,
               const Exponent& e, const ITermVec& b, const ModuleOrder& ord) {
    ITermVec r;
    r.reserve(h.size() - start + b.size());
    std::size_t i = start, j = 0;
    while (i < h.size() && j < b.size()) {
        ModuleMonomial mb{exponent_sum(b[j].mm.exp, e), b[j].mm.pos};
        auto cmp = ord.compare(h[i].mm, mb);
        if (cmp > 0) {
            r.push_back({h[i].mm, Integer(a * h[i].coeff)});
            ++i;
        } else if (cmp < 0) {
            r.push_back({std::move(mb), Integer(c * b[j].coeff)});
            ++j;
        } else {
            Integer s = a * h[i].coeff + c * b[j].coeff;
            if (s != 0) r.push_back({h[i].mm, std::move(s)});
            ++i;
            ++j;
        }
    }
    for (; i < h.size(); ++i) r.push_back({h[i].mm, Integer(a * h[i].coeff)});
    for (; j < b.size(); ++j)
        r.push_back({{exponent_sum(b[j].mm.exp, e), b[j].mm.pos}, Integer(c * b[j].coeff)});
    return r;
}

// Full reduction of h against G (empty entries in G are skipped). Always
// divides by the first eligible divisor, which makes the result deterministic.
// If quotients is non-null it accumulates h = sum quotients[i]*G[i] + result.
// When sugar tracking is requested, *sugar is raised to the sugar degree of
// every reduction step taken, starting from the caller-provided value.
TermVec reduce_full(const TermVec& h_in, const std::vector<TermVec>& G, const ModuleOrder& ord,
                    std::vector<Polynomial>* quotients,
                    const std::vector<long>* divisor_sugar = nullptr, long* sugar = nullptr) {
    TermVec rem;
    ScaledInt h = to_integer(h_in);
    remove_content(h);
    // Divisors are converted once, on first use.
    std::vector<ScaledInt> Gi(G.size());
    std::vector<char> converted(G.size(), 0);
    std::size_t start = 0;
    int steps_since_renorm = 0;
    while (start < h.terms.size()) {
        const ITerm& lead = h.terms[start];
        std::size_t found = G.size();
        for (std::size_t gi = 0; gi < G.size(); ++gi) {
            if (G[gi].empty()) continue;
            const MTerm& glt = G[gi].front();
            if (glt.mm.pos == lead.mm.pos && exponent_divides(glt.mm.exp, lead.mm.exp)) {
                found = gi;
                break;
            }
        }
        if (found == G.size()) {
            rem.push_back({lead.mm, Rational(lead.coeff) / h.lambda});
            ++start;
            continue;
        }
        if (!converted[found]) {
            Gi[found] = to_integer(G[found]);
            remove_content(Gi[found]);
            converted[found] = 1;
        }
        const ScaledInt& g = Gi[found];
        const Integer& glc = g.terms.front().coeff;
        Integer d = gcd(lead.coeff, glc);
        Integer a = glc / d;           // multiplies h
        Integer c = -(lead.coeff / d); // multiplies the shifted divisor
        Exponent shift = exponent_diff(lead.mm.exp, g.terms.front().mm.exp);
        if (quotients) {
            // True-value quotient: lc(h)/lc(g) with both scalings undone.
            Rational factor = Rational(lead.coeff) * g.lambda / (h.lambda * glc);
            (*quotients)[found].add_term(shift, factor);
        }
        if (divisor_sugar && sugar)
            *sugar = std::max(*sugar, (*divisor_sugar)[found] + total_degree(shift));
        h.lambda *= Rational(a);
        h.terms = iaxpy(h.terms, start, a, c, shift, g.terms, ord);
        start = 0;
        if (++steps_since_renorm >= 8) {
            steps_since_renorm = 0;
            remove_content(h);
        }
    }
    return rem;
}

// S-vector of f and g, which must share a leading position.
TermVec spair(const TermVec& f, const TermVec& g, const ModuleOrder& ord) {
    const MTerm& lf = f.front();
    const MTerm& lg = g.front();
    Exponent l = exponent_lcm(lf.mm.exp, lg.mm.exp);
    TermVec a = shift_scale(f, Rational(1) / lf.coeff, exponent_diff(l, lf.mm.exp));
    return axpy(a, Rational(-1) / lg.coeff, exponent_diff(l, lg.mm.exp), g, ord);
}

// All terms concentrated at the leading position. The coprimality (product)
// criterion is only valid for such pairs: for genuinely vector-valued
// generators the classical ideal-case argument breaks down, e.g. f = (x, 1),
// g = (y, 1) have coprime leading monomials but S(f,g) = (0, y - x) is
// irreducible and must be kept.
bool concentrated(const TermVec& f) {
    const int pos = f.front().mm.pos;
    return std::all_of(f.begin(), f.end(), [&](const MTerm& mt) { return mt.mm.pos == pos; });
}

// Minimalize + fully tail-reduce + make monic + sort descending by leading
// monomial. Output is THE reduced Groebner basis (unique for the order).
std::vector<TermVec> reduce_basis(std::vector<TermVec> G, const ModuleOrder& ord) {
    std::vector<int> idx(G.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](int a, int b) {
        auto c = ord.compare(G[a].front().mm, G[b].front().mm);
        return c != 0 ? c < 0 : a < b;
    });
    // Ascending leading monomials: divisors come first, so one pass suffices.
    std::vector<TermVec> kept;
    for (int id : idx) {
        const ModuleMonomial& lm = G[id].front().mm;
        bool redundant = false;
        for (const auto& k : kept) {
            if (k.front().mm.pos == lm.pos && exponent_divides(k.front().mm.exp, lm.exp)) {
                redundant = true;
                break;
            }
        }
        if (!redundant) kept.push_back(std::move(G[id]));
    }
    // Leading monomials are now pairwise non-divisible and fixed; tail-reduce
    // each element against the others.
    for (std::size_t i = 0; i < kept.size(); ++i) {
        TermVec self = std::move(kept[i]);
        kept[i].clear();  // reduce_full skips empty divisors
        kept[i] = reduce_full(std::move(self), kept, ord, nullptr);
    }
    for (auto& w : kept) {
        Rational inv = Rational(1) / w.front().coeff;
        for (auto& mt : w) mt.coeff *= inv;
    }
    std::sort(kept.begin(), kept.end(), [&](const TermVec& a, const TermVec& b) {
        return ord.compare(a.front().mm, b.front().mm) > 0;
    });
    return kept;
}

struct PairEntry {
    long sugar;
    ModuleMonomial lcm;
    int i, j;
};

// Sugar-first selection: pairs of lowest homogenization degree are processed
// first. This keeps reductions from wandering into high degrees under
// non-graded (elimination) orders, where ordering by lcm alone degenerates.
struct PairCmp {
    const ModuleOrder* ord;
    bool operator()(const PairEntry& a, const PairEntry& b) const {
        if (a.sugar != b.sugar) return a.sugar < b.sugar;
        auto c = ord->compare(a.lcm, b.lcm);
        if (c != 0) return c < 0;
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    }
};

void check_fits(const ModuleVector& v, int rank, int nvars) {
    if (v.rank() != rank)
        throw RankMismatchError("vector rank " + std::to_string(v.rank()) +
                                " does not match expected rank " + std::to_string(rank));
    if (v.nvars() != nvars)
        throw RingMismatchError("vector over a different operator ring");
}

void check_block(const std::vector<int>& block, int rank) {
    std::vector<char> seen(rank, 0);
    for (int pos : block) {
        if (pos < 0 || pos >= rank)
            throw RankMismatchError("block position " + std::to_string(pos) +
                                    " out of range for rank " + std::to_string(rank));
        if (seen[pos]) throw RankMismatchError("duplicate block position");
        seen[pos] = 1;
    }
}

std::vector<TermVec> to_term_list(const std::vector<ModuleVector>& G, const ModuleOrder& ord,
                                  int rank, int nvars) {
    std::vector<TermVec> Gt;
    Gt.reserve(G.size());
    for (const auto& g : G) {
        check_fits(g, rank, nvars);
        Gt.push_back(to_terms(g, ord));
    }
    return Gt;
}

}  // namespace

ModuleVector normal_form(const ModuleVector& v, const std::vector<ModuleVector>& G,
                         const ModuleOrder& ord) {
    check_fits(v, ord.rank(), ord.base().nvars());
    auto Gt = to_term_list(G, ord, v.rank(), v.nvars());
    return from_terms(reduce_full(to_terms(v, ord), Gt, ord, nullptr), v.rank(), v.nvars());
}

DivisionResult divide(const ModuleVector& v, const std::vector<ModuleVector>& G,
                      const ModuleOrder& ord) {
    check_fits(v, ord.rank(), ord.base().nvars());
    auto Gt = to_term_list(G, ord, v.rank(), v.nvars());
    std::vector<Polynomial> q(G.size(), Polynomial(v.nvars()));
    TermVec r = reduce_full(to_terms(v, ord), Gt, ord, &q);
    return {from_terms(r, v.rank(), v.nvars()), std::move(q)};
}

std::vector<ModuleVector> normal_forms(const std::vector<ModuleVector>& vs,
                                       const std::vector<ModuleVector>& G,
                                       const ModuleOrder& ord, Exec exec) {
    const int rank = ord.rank(), nvars = ord.base().nvars();
    for (const auto& v : vs) check_fits(v, rank, nvars);
    auto Gt = to_term_list(G, ord, rank, nvars);
    std::vector<ModuleVector> out(vs.size());
    auto one = [&](std::size_t i) {
        out[i] = from_terms(reduce_full(to_terms(vs[i], ord), Gt, ord, nullptr), rank, nvars);
    };
    const long n = static_cast<long>(vs.size());
#ifdef _OPENMP
    if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic)
        for (long i = 0; i < n; ++i) one(static_cast<std::size_t>(i));
        return out;
    }
#endif
    (void)exec;
    for (long i = 0; i < n; ++i) one(static_cast<std::size_t>(i));
    return out;
}

GBReport buchberger(const std::vector<ModuleVector>& gens, int rank, int nvars,
                    const ModuleOrder& ord) {
    if (ord.rank() != rank || ord.base().nvars() != nvars)
        throw RankMismatchError("module order does not fit rank/ring of the generators");
    GBReport rep{{}, ord};
    std::vector<TermVec> G;
    std::vector<long> sugar;
    for (const auto& g : gens) {
        check_fits(g, rank, nvars);
        if (g.is_zero()) continue;
        TermVec t = to_terms(g, ord);
        make_primitive(t);
        sugar.push_back(vector_degree(t));
        G.push_back(std::move(t));
    }

    std::set<PairEntry, PairCmp> queue(PairCmp{&ord});

    // Gebauer-Moller update for a newly added element m: discard old and new
    // pairs whose S-vectors provably reduce to zero, then queue the survivors.
    // Every pair formed is accounted for in exactly one report counter.
    auto update = [&](int m) {
        const ModuleMonomial& lm = G[m].front().mm;
        // Old-pair (chain) criterion: (i, j) is redundant once lm(m) divides
        // lcm(i, j) while both mixed lcms differ from lcm(i, j).
        for (auto it = queue.begin(); it != queue.end();) {
            if (it->lcm.pos == lm.pos && exponent_divides(lm.exp, it->lcm.exp) &&
                exponent_lcm(G[it->i].front().mm.exp, lm.exp) != it->lcm.exp &&
                exponent_lcm(G[it->j].front().mm.exp, lm.exp) != it->lcm.exp) {
                it = queue.erase(it);
                ++rep.pairs_skipped_chain;
            } else {
                ++it;
            }
        }
        struct Cand {
            Exponent lcm;
            long sugar;
            int i;
            bool alive;
            bool coprime;
        };
        std::vector<Cand> cands;
        for (int i = 0; i < m; ++i) {
            const ModuleMonomial& li = G[i].front().mm;
            if (li.pos != lm.pos) continue;
            ++rep.pairs_formed;
            Exponent l = exponent_lcm(li.exp, lm.exp);
            long sg = std::max(sugar[i] + total_degree(exponent_diff(l, li.exp)),
                               sugar[m] + total_degree(exponent_diff(l, lm.exp)));
            // The coprimality (product) criterion is only sound for generators
            // concentrated at their leading position: for genuinely
            // vector-valued pairs like (x, 1), (y, 1) the S-vector (0, y - x)
            // is irreducible and must be kept.
            bool cop = exponent_coprime(li.exp, lm.exp) && concentrated(G[i]) &&
                       concentrated(G[m]);
            cands.push_back({std::move(l), sg, i, true, cop});
        }
        // New-pair criterion: drop a candidate whose lcm is a proper multiple
        // of another candidate's lcm.
        for (auto& c : cands) {
            for (const auto& d : cands) {
                if (&d != &c && d.lcm != c.lcm && exponent_divides(d.lcm, c.lcm)) {
                    c.alive = false;
                    ++rep.pairs_skipped_chain;
                    break;
                }
            }
        }
        // Equal-lcm classes: a coprime member certifies the whole class, and
        // otherwise one representative suffices.
        for (std::size_t a = 0; a < cands.size(); ++a) {
            if (!cands[a].alive) continue;
            bool class_coprime = cands[a].coprime;
            std::vector<std::size_t> cls{a};
            for (std::size_t b = a + 1; b < cands.size(); ++b) {
                if (!cands[b].alive || cands[b].lcm != cands[a].lcm) continue;
                class_coprime = class_coprime || cands[b].coprime;
                cls.push_back(b);
            }
            if (class_coprime) {
                for (std::size_t x : cls) {
                    cands[x].alive = false;
                    ++rep.pairs_skipped_product;
                }
            } else {
                for (std::size_t x = 1; x < cls.size(); ++x) {
                    cands[cls[x]].alive = false;
                    ++rep.pairs_skipped_chain;
                }
            }
        }
        for (auto& c : cands)
            if (c.alive) queue.insert({c.sugar, {std::move(c.lcm), lm.pos}, c.i, m});
    };
    for (int m = 0; m < static_cast<int>(G.size()); ++m) update(m);

    while (!queue.empty()) {
        PairEntry p = *queue.begin();
        queue.erase(queue.begin());
        long hsugar = p.sugar;
        TermVec r = reduce_full(spair(G[p.i], G[p.j], ord), G, ord, nullptr, &sugar, &hsugar);
        if (r.empty()) {
            ++rep.pairs_reduced_to_zero;
            continue;
        }
        make_primitive(r);
        sugar.push_back(hsugar);
        G.push_back(std::move(r));
        ++rep.basis_additions;
        update(static_cast<int>(G.size()) - 1);
    }

    auto W = reduce_basis(std::move(G), ord);
    rep.basis.reserve(W.size());
    for (const auto& w : W) rep.basis.push_back(from_terms(w, rank, nvars));
    return rep;
}

GBReport buchberger(const Submodule& S, const ModuleOrder& ord) {
    return buchberger(S.generators(), S.rank(), S.nvars(), ord);
}

bool is_member(const ModuleVector& v, const Submodule& S, const ModuleOrder& ord) {
    check_fits(v, S.rank(), S.nvars());
    return normal_form(v, S.groebner_basis(ord), ord).is_zero();
}

bool is_member(const ModuleVector& v, const Submodule& S) {
    return is_member(v, S, default_order(S.rank(), S.nvars()));
}

bool is_submodule(const Submodule& S, const Submodule& T) {
    if (S.rank() != T.rank())
        throw RankMismatchError("submodules of different rank are not comparable");
    if (S.nvars() != T.nvars())
        throw RingMismatchError("submodules over different operator rings");
    auto ord = default_order(S.rank(), S.nvars());
    const auto& gb = T.groebner_basis(ord);
    return std::all_of(S.generators().begin(), S.generators().end(), [&](const ModuleVector& g) {
        return normal_form(g, gb, ord).is_zero();
    });
}

bool module_equal(const Submodule& S, const Submodule& T) {
    if (S.rank() != T.rank())
        throw RankMismatchError("submodules of different rank are not comparable");
    if (S.nvars() != T.nvars())
        throw RingMismatchError("submodules over different operator rings");
    auto ord = default_order(S.rank(), S.nvars());
    return S.groebner_basis(ord) == T.groebner_basis(ord);
}

Submodule module_sum(const Submodule& S, const Submodule& T) {
    if (S.rank() != T.rank()) throw RankMismatchError("cannot sum submodules of different rank");
    if (S.nvars() != T.nvars())
        throw RingMismatchError("cannot sum submodules over different operator rings");
    std::vector<ModuleVector> gens = S.generators();
    gens.insert(gens.end(), T.generators().begin(), T.generators().end());
    return Submodule(S.rank(), S.nvars(), std::move(gens));
}

Submodule project_block(const Submodule& S, const std::vector<int>& block) {
    check_block(block, S.rank());
    const int r = static_cast<int>(block.size());
    std::vector<ModuleVector> gens;
    for (const auto& g : S.generators()) {
        ModuleVector v(r, S.nvars());
        for (int i = 0; i < r; ++i) v[i] = g[block[i]];
        if (!v.is_zero()) gens.push_back(std::move(v));
    }
    return Submodule(r, S.nvars(), std::move(gens));
}

Submodule preimage_block(const Submodule& S, const std::vector<int>& block) {
    check_block(block, S.rank());
    const int r = static_cast<int>(block.size());
    std::vector<char> in_block(S.rank(), 0);
    for (int pos : block) in_block[pos] = 1;
    std::vector<int> complement;
    for (int pos = 0; pos < S.rank(); ++pos)
        if (!in_block[pos]) complement.push_back(pos);

    // Term-over-position base: position-over-term triangularizes the eliminated
    // block column by column and intermediate coefficients explode.
    ModuleOrder ord(MonomialOrder(TermOrder::grevlex, S.nvars()), S.rank(), PositionRule::top, {},
                    complement);
    std::vector<ModuleVector> gens;
    for (const auto& g : S.groebner_basis(ord)) {
        bool clean = std::all_of(complement.begin(), complement.end(),
                                 [&](int pos) { return g[pos].is_zero(); });
        if (!clean) continue;
        ModuleVector v(r, S.nvars());
        for (int i = 0; i < r; ++i) v[i] = g[block[i]];
        if (!v.is_zero()) gens.push_back(std::move(v));
    }
    return Submodule(r, S.nvars(), std::move(gens));
}

ModuleVector embed_vector(const ModuleVector& v, int big_rank, const std::vector<int>& block) {
    check_block(block, big_rank);
    if (v.rank() != static_cast<int>(block.size()))
        throw RankMismatchError("vector rank does not match block size");
    ModuleVector out(big_rank, v.nvars());
    for (int i = 0; i < v.rank(); ++i) out[block[i]] = v[i];
    return out;
}

Submodule embed_block(const Submodule& S, int big_rank, const std::vector<int>& block) {
    check_block(block, big_rank);
    if (S.rank() != static_cast<int>(block.size()))
        throw RankMismatchError("submodule rank does not match block size");
    std::vector<ModuleVector> gens;
    gens.reserve(S.generators().size());
    for (const auto& g : S.generators()) gens.push_back(embed_vector(g, big_rank, block));
    return Submodule(big_rank, S.nvars(), std::move(gens));
}

Submodule module_intersect(const Submodule& S, const Submodule& T) {
    if (S.rank() != T.rank())
        throw RankMismatchError("cannot intersect submodules of different rank");
    if (S.nvars() != T.nvars())
        throw RingMismatchError("cannot intersect submodules over different operator rings");
    const int rank = S.rank(), nvars = S.nvars();
    if (rank == 0 || S.has_no_generators() || T.has_no_generators())
        return Submodule::zero(rank, nvars);

    // Work in A^(2*rank) with generators (s_i, s_i) and (t_j, 0). An element
    // whose first block vanishes reads (0, v) with v = sum a_i s_i = -sum b_j t_j,
    // so the second blocks of such elements run over exactly S intersect T, and
    // eliminating the first block of positions extracts a generating set.
    std::vector<ModuleVector> gens;
    gens.reserve(S.generators().size() + T.generators().size());
    for (const auto& g : S.generators()) {
        ModuleVector v(2 * rank, nvars);
        for (int i = 0; i < rank; ++i) {
            v[i] = g[i];
            v[rank + i] = g[i];
        }
        gens.push_back(std::move(v));
    }
    for (const auto& g : T.generators()) {
        ModuleVector v(2 * rank, nvars);
        for (int i = 0; i < rank; ++i) v[i] = g[i];
        gens.push_back(std::move(v));
    }

    std::vector<int> first_block(rank);
    for (int i = 0; i < rank; ++i) first_block[i] = i;
    // Term-over-position base: with position-over-term the first block gets
    // triangularized column by column and intermediate coefficients explode.
    ModuleOrder ord(MonomialOrder(TermOrder::grevlex, nvars), 2 * rank, PositionRule::top, {},
                    first_block);
    auto rep = buchberger(gens, 2 * rank, nvars, ord);

    std::vector<ModuleVector> kept;
    for (const auto& b : rep.basis) {
        bool clean = true;
        for (int i = 0; i < rank && clean; ++i) clean = b[i].is_zero();
        if (!clean) continue;
        ModuleVector v(rank, nvars);
        for (int i = 0; i < rank; ++i) v[i] = b[rank + i];
        if (!v.is_zero()) kept.push_back(std::move(v));
    }
    return Submodule(rank, nvars, std::move(kept));
}

}  // namespace bsys
