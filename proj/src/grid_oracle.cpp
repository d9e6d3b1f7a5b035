#include "bsys/grid_oracle.hpp"

#include <algorithm>

#include "bsys/certificate.hpp"
#include "bsys/errors.hpp"
#include "bsys/groebner.hpp"

namespace bsys {

namespace {

void check_window(const RingSpec& ring, const Window& win) {
    if (ring.kind != OperatorKind::shift)
        throw OracleUnavailableError(
            "trajectory oracle requires a shift ring: differential signal spaces have no "
            "faithful finite-window truncation");
    if (win.n != ring.n)
        throw RingMismatchError("window dimension does not match ring variable count");
    if (win.side < 1) throw Error("window side must be positive");
}

std::vector<std::vector<int>> region_points(const Window& win, const Exponent& margin,
                                            int inset = 0) {
    std::vector<std::vector<int>> pts;
    for (int v = 0; v < win.n; ++v)
        if (inset + margin[v] > win.side - 1 - inset) return pts;
    std::vector<int> x(win.n, inset);
    while (true) {
        pts.push_back(x);
        int i = win.n - 1;
        for (; i >= 0; --i) {
            if (++x[i] <= win.side - 1 - inset - margin[i]) break;
            x[i] = inset;
        }
        if (i < 0) break;
    }
    return pts;
}

// Sound per-variable check margins for one law. With a certificate
// law = sum cof_i * gens[i], the law's value at x expands into values of the
// gens at points shifted by the cofactor supports, all of which must stay
// where those gens are themselves enforced.
MarginInfo law_margin(int law_index, const ModuleVector& law_embedded,
                      const std::vector<ModuleVector>& law_own, std::size_t own_index,
                      const Submodule& relative_to, Exec exec) {
    const int nvars = law_embedded.nvars();
    MarginInfo info;
    info.law = law_index;
    auto cert = find_membership_certificate(law_embedded, relative_to, 8, exec);
    if (cert) {
        Exponent m(nvars, 0);
        const auto& gens = relative_to.generators();
        for (std::size_t i = 0; i < gens.size(); ++i) {
            if (cert->cofactors[i].is_zero()) continue;
            Exponent qd = cert->cofactors[i].max_degrees();
            Exponent gd = gens[i].max_degrees();
            for (int v = 0; v < nvars; ++v) m[v] = std::max(m[v], qd[v] + gd[v]);
        }
        info.certified = true;
        info.margin = std::move(m);
        info.certificate_degree = cert->degree_bound;
    } else {
        info.certified = false;
        info.margin = law_own[own_index].max_degrees();
    }
    return info;
}

Rational eval_law(const std::vector<Rational>& traj, const ModuleVector& law,
                  const std::vector<int>& block, const std::vector<int>& x, const Window& win,
                  int points) {
    Rational acc(0);
    std::vector<int> shifted(win.n);
    for (int i = 0; i < law.rank(); ++i) {
        for (const auto& [e, c] : law[i].terms()) {
            for (int v = 0; v < win.n; ++v) shifted[v] = x[v] + e[v];
            acc += c * traj[std::size_t(block[i]) * points + point_index(shifted, win)];
        }
    }
    return acc;
}

// Evaluates each law over its margin region on every trajectory. Results are
// merged in trajectory order, so the report does not depend on thread count.
std::vector<Violation> check_laws(const std::vector<std::vector<Rational>>& trajectories,
                                  const std::vector<ModuleVector>& laws,
                                  const std::vector<MarginInfo>& margins,
                                  const std::vector<int>& block, const Window& win, Exec exec) {
    const int points = point_count(win);
    std::vector<std::vector<std::vector<int>>> regions;
    regions.reserve(laws.size());
    for (const auto& m : margins) regions.push_back(region_points(win, m.margin));

    std::vector<std::vector<Violation>> per_traj(trajectories.size());
    auto run_one = [&](std::size_t ti) {
        for (std::size_t li = 0; li < laws.size(); ++li) {
            for (const auto& x : regions[li]) {
                Rational v = eval_law(trajectories[ti], laws[li], block, x, win, points);
                if (v != 0)
                    per_traj[ti].push_back({static_cast<int>(ti), static_cast<int>(li), x, v});
            }
        }
    };
    const long n = static_cast<long>(trajectories.size());
#ifdef _OPENMP
    if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic)
        for (long i = 0; i < n; ++i) run_one(static_cast<std::size_t>(i));
    } else
#endif
    {
        (void)exec;
        for (long i = 0; i < n; ++i) run_one(static_cast<std::size_t>(i));
    }
    std::vector<Violation> all;
    for (auto& v : per_traj) all.insert(all.end(), v.begin(), v.end());
    return all;
}

void grow_to_cover(Exponent& inset, const std::vector<ModuleVector>& gens) {
    for (const auto& g : gens) {
        Exponent d = g.max_degrees();
        for (std::size_t v = 0; v < inset.size(); ++v) inset[v] = std::max(inset[v], d[v]);
    }
}

// Rank of the trajectory family restricted to the interior sub-window.
int interior_rank(const std::vector<std::vector<Rational>>& trajectories, int k,
                  const Window& win, int inset, Exec exec) {
    const int points = point_count(win);
    std::vector<std::vector<int>> interior = region_points(win, Exponent(win.n, 0), inset);
    if (trajectories.empty() || interior.empty()) return 0;
    QMatrix m(static_cast<int>(trajectories.size()), k * static_cast<int>(interior.size()));
    for (std::size_t t = 0; t < trajectories.size(); ++t) {
        int col = 0;
        for (int s = 0; s < k; ++s)
            for (const auto& x : interior)
                m.at(static_cast<int>(t), col++) =
                    trajectories[t][std::size_t(s) * points + point_index(x, win)];
    }
    return matrix_rank(std::move(m), exec);
}

}  // namespace

int point_count(const Window& win) {
    int p = 1;
    for (int i = 0; i < win.n; ++i) p *= win.side;
    return p;
}

int point_index(const std::vector<int>& x, const Window& win) {
    int idx = 0;
    for (int i = 0; i < win.n; ++i) idx = idx * win.side + x[i];
    return idx;
}

std::vector<int> point_at(int index, const Window& win) {
    std::vector<int> x(win.n, 0);
    for (int i = win.n - 1; i >= 0; --i) {
        x[i] = index % win.side;
        index /= win.side;
    }
    return x;
}

InstantiatedSystem instantiate(const Submodule& S, const RingSpec& ring, const Window& win) {
    check_window(ring, win);
    if (S.nvars() != ring.n)
        throw RingMismatchError("module over a different operator ring than declared");
    const int k = S.rank();
    const int points = point_count(win);

    InstantiatedSystem sys;
    sys.k = k;
    sys.win = win;
    std::vector<int> shifted(win.n);
    struct Row {
        int gen;
        std::vector<int> point;
    };
    std::vector<Row> rows;
    for (std::size_t gi = 0; gi < S.generators().size(); ++gi) {
        Exponent margin = S.generators()[gi].max_degrees();
        for (const auto& x : region_points(win, margin))
            rows.push_back({static_cast<int>(gi), x});
    }
    sys.matrix = QMatrix(static_cast<int>(rows.size()), k * points);
    sys.rows.reserve(rows.size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        const auto& g = S.generators()[rows[r].gen];
        for (int pos = 0; pos < k; ++pos) {
            for (const auto& [e, c] : g[pos].terms()) {
                for (int v = 0; v < win.n; ++v) shifted[v] = rows[r].point[v] + e[v];
                sys.matrix.at(static_cast<int>(r),
                              pos * points + point_index(shifted, win)) += c;
            }
        }
        sys.rows.push_back({rows[r].gen, rows[r].point});
    }
    return sys;
}

WindowKernel window_kernel(const Submodule& S, const RingSpec& ring, const Window& win,
                           Exec exec) {
    InstantiatedSystem inst = instantiate(S, ring, win);
    return {S.rank(), win, kernel_basis(inst.matrix, exec)};
}

InclusionReport oracle_inclusion_check(const ControlSystem& sys, const Window& win, Exec exec) {
    check_window(sys.ring, win);
    const auto w = sys.partition.w_block();
    WindowKernel K = window_kernel(sys.P, sys.ring, win, exec);
    Submodule forced = preimage_block(sys.P, w);

    const auto& laws = forced.generators();
    std::vector<MarginInfo> margins;
    margins.reserve(laws.size());
    for (std::size_t li = 0; li < laws.size(); ++li) {
        ModuleVector embedded = embed_vector(laws[li], sys.partition.rank(), w);
        margins.push_back(law_margin(static_cast<int>(li), embedded, laws, li, sys.P, exec));
    }
    std::vector<Violation> violations = check_laws(K.basis, laws, margins, w, win, exec);

    InclusionReport rep;
    rep.passed = violations.empty();
    rep.violations = std::move(violations);
    rep.margins = std::move(margins);
    rep.kernel_dimension = K.dimension();
    rep.laws_checked = static_cast<int>(laws.size());
    rep.win = win;
    return rep;
}

ControllerOracleReport oracle_canonical_controller(const ControlSystem& sys, const Submodule& N,
                                                   const Window& win, Exec exec) {
    check_window(sys.ring, win);
    Submodule controller = phi(N, sys);  // rejects inadmissible N
    Submodule restricted = module_sum(sys.P, embed_w(N, sys));
    const auto c = sys.partition.c_block();
    const int k_c = sys.partition.k_c();
    const int points = point_count(win);

    WindowKernel K0 = window_kernel(restricted, sys.ring, win, exec);
    std::vector<std::vector<Rational>> projected;
    projected.reserve(K0.basis.size());
    for (const auto& f : K0.basis) {
        std::vector<Rational> pc(std::size_t(k_c) * points);
        for (int j = 0; j < k_c; ++j)
            for (int p = 0; p < points; ++p)
                pc[std::size_t(j) * points + p] = f[std::size_t(c[j]) * points + p];
        projected.push_back(std::move(pc));
    }

    const auto& laws = controller.generators();
    std::vector<int> identity_block(k_c);
    for (int j = 0; j < k_c; ++j) identity_block[j] = j;
    std::vector<MarginInfo> margins;
    margins.reserve(laws.size());
    for (std::size_t li = 0; li < laws.size(); ++li) {
        ModuleVector embedded = embed_vector(laws[li], sys.partition.rank(), c);
        margins.push_back(
            law_margin(static_cast<int>(li), embedded, laws, li, restricted, exec));
    }
    std::vector<Violation> violations =
        check_laws(projected, laws, margins, identity_block, win, exec);

    // Interior inset: large enough that every law above is guaranteed on the
    // whole interior, and covering the shift reach of all involved generators.
    Exponent inset_vec(win.n, 0);
    grow_to_cover(inset_vec, sys.P.generators());
    grow_to_cover(inset_vec, N.generators());
    grow_to_cover(inset_vec, controller.generators());
    for (const auto& m : margins)
        for (int v = 0; v < win.n; ++v) inset_vec[v] = std::max(inset_vec[v], m.margin[v]);
    int inset = *std::max_element(inset_vec.begin(), inset_vec.end());

    WindowKernel KM = window_kernel(controller, sys.ring, win, exec);

    ControllerOracleReport rep;
    rep.inclusion_passed = violations.empty();
    rep.violations = std::move(violations);
    rep.margins = std::move(margins);
    rep.restricted_behavior_dim = K0.dimension();
    rep.interior_offset = inset;
    rep.interior_dim_projected = interior_rank(projected, k_c, win, inset, exec);
    rep.interior_dim_controller = interior_rank(KM.basis, k_c, win, inset, exec);
    rep.interior_dims_equal = rep.interior_dim_projected == rep.interior_dim_controller;
    rep.win = win;
    return rep;
}

}  // namespace bsys
