// Compares the serial reference kernels against the OpenMP-parallel ones on
// the three data-parallel hot spots: fraction-free elimination, kernel-basis
// extraction, and batch normal forms. Results must agree exactly; timings are
// informational.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "bsys/exact_linalg.hpp"
#include "bsys/grid_oracle.hpp"
#include "bsys/groebner.hpp"
#include "../tests/support/random_systems.hpp"

using namespace bsys;
using testsupport::Rng;

namespace {

double seconds_of(const std::function<void()>& fn) {
    auto t0 = std::chrono::steady_clock::now();
    fn();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

double best_of(int reps, const std::function<void()>& fn) {
    double best = 1e100;
    for (int i = 0; i < reps; ++i) best = std::min(best, seconds_of(fn));
    return best;
}

void report(const char* name, double serial, double parallel, bool equal) {
    std::printf("%-28s serial %8.4fs   parallel %8.4fs   speedup %5.2fx   results %s\n", name,
                serial, parallel, parallel > 0 ? serial / parallel : 0.0,
                equal ? "identical" : "DIFFER");
}

QMatrix random_matrix(Rng& rng, int rows, int cols) {
    QMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) {
            if (rng.chance(30)) continue;
            int num = rng.range(-9, 9);
            int den = rng.range(1, 4);
            m.at(i, j) = make_rational(num, den);
        }
    return m;
}

}  // namespace

int main() {
#ifdef _OPENMP
    std::printf("OpenMP enabled, max threads: %d\n", omp_get_max_threads());
#else
    std::printf("built without OpenMP; parallel policy degrades to serial\n");
#endif

    Rng rng(424242);

    {
        QMatrix m = random_matrix(rng, 90, 110);
        QMatrix a, b;
        std::vector<int> pa, pb;
        double ts = best_of(3, [&] { a = m; pa = rref(a, Exec::serial); });
        double tp = best_of(3, [&] { b = m; pb = rref(b, Exec::parallel); });
        report("rref 90x110", ts, tp, a == b && pa == pb);
    }

    {
        QMatrix m = random_matrix(rng, 70, 120);
        std::vector<std::vector<Rational>> ka, kb;
        double ts = best_of(3, [&] { ka = kernel_basis(m, Exec::serial); });
        double tp = best_of(3, [&] { kb = kernel_basis(m, Exec::parallel); });
        report("kernel_basis 70x120", ts, tp, ka == kb);
    }

    {
        // Batch normal forms against a fixed reduced basis.
        Submodule S = testsupport::random_submodule(rng, 3, 3, 2, 4);
        ModuleOrder ord = default_order(3, 3);
        const auto& gb = S.groebner_basis(ord);
        std::vector<ModuleVector> vs;
        for (int i = 0; i < 400; ++i) vs.push_back(testsupport::random_vector(rng, 3, 3, 4));
        std::vector<ModuleVector> ra, rb;
        double ts = best_of(3, [&] { ra = normal_forms(vs, gb, ord, Exec::serial); });
        double tp = best_of(3, [&] { rb = normal_forms(vs, gb, ord, Exec::parallel); });
        report("normal_forms x400", ts, tp, ra == rb);
    }

    {
        // Full window-kernel computation on a 2-D shift system.
        RingSpec ring(2, OperatorKind::shift, {"s1", "s2"});
        Polynomial s1 = Polynomial::variable(2, 0), s2 = Polynomial::variable(2, 1);
        Polynomial one = Polynomial::constant(2, 1), z = Polynomial::zero(2);
        Submodule P(3, 2, {ModuleVector({s1 - one, z, -one}), ModuleVector({z, s2 - one, -one})});
        WindowKernel ka, kb;
        double ts = best_of(2, [&] { ka = window_kernel(P, ring, Window{2, 7}, Exec::serial); });
        double tp = best_of(2, [&] { kb = window_kernel(P, ring, Window{2, 7}, Exec::parallel); });
        report("window_kernel 2D L=7", ts, tp, ka.basis == kb.basis);
    }

    return 0;
}
