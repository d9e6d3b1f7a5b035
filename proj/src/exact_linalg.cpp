#include "bsys/exact_linalg.hpp"

#include <algorithm>

#include "bsys/errors.hpp"

namespace bsys {

namespace {

struct IMatrix {
    int rows = 0, cols = 0;
    std::vector<Integer> a;
    Integer& at(int r, int c) { return a[std::size_t(r) * cols + c]; }
    const Integer& at(int r, int c) const { return a[std::size_t(r) * cols + c]; }
};

// Scale each row to integers (multiply by the lcm of its denominators; this
// does not change the row space or the null space).
IMatrix to_integer_rows(const QMatrix& m) {
    IMatrix im;
    im.rows = m.rows();
    im.cols = m.cols();
    im.a.assign(std::size_t(im.rows) * im.cols, Integer(0));
    for (int r = 0; r < im.rows; ++r) {
        Integer den_l(1);
        for (int c = 0; c < im.cols; ++c)
            den_l = lcm(den_l, Integer(m.at(r, c).get_den()));
        for (int c = 0; c < im.cols; ++c) {
            const Rational& q = m.at(r, c);
            im.at(r, c) = Integer(q.get_num()) * (den_l / Integer(q.get_den()));
        }
    }
    return im;
}

// Fraction-free forward elimination (one-step Bareiss). After the call, rows
// 0..p-1 are in echelon form with integer entries that are minors of the
// input; rows below are zero. Returns the pivot columns. The two-term update
//   a[i][j] <- (a[r][c]*a[i][j] - a[i][c]*a[r][j]) / prev
// is an exact integer division by Sylvester's determinant identity.
std::vector<int> bareiss_echelon(IMatrix& m, Exec exec) {
    std::vector<int> pivots;
    Integer prev(1);
    int r = 0;
    for (int c = 0; c < m.cols && r < m.rows; ++c) {
        int pr = -1;
        for (int i = r; i < m.rows; ++i) {
            if (m.at(i, c) != 0) {
                pr = i;
                break;
            }
        }
        if (pr < 0) continue;
        if (pr != r)
            for (int j = 0; j < m.cols; ++j) std::swap(m.at(r, j), m.at(pr, j));

        const Integer pivot = m.at(r, c);
        auto update_row = [&](int i) {
            if (m.at(i, c) == 0) {
                // Still rescale so the whole block stays on the same Bareiss
                // level; division by prev remains exact.
                for (int j = c + 1; j < m.cols; ++j)
                    m.at(i, j) = pivot * m.at(i, j) / prev;
                return;
            }
            const Integer head = m.at(i, c);
            for (int j = c + 1; j < m.cols; ++j)
                m.at(i, j) = (pivot * m.at(i, j) - head * m.at(r, j)) / prev;
            m.at(i, c) = 0;
        };
        const int first = r + 1;
#ifdef _OPENMP
        if (exec == Exec::parallel) {
#pragma omp parallel for schedule(static)
            for (int i = first; i < m.rows; ++i) update_row(i);
        } else
#endif
        {
            (void)exec;
            for (int i = first; i < m.rows; ++i) update_row(i);
        }
        prev = pivot;
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

std::vector<int> rref(QMatrix& m, Exec exec) {
    IMatrix im = to_integer_rows(m);
    std::vector<int> pivots = bareiss_echelon(im, exec);
    const int p = static_cast<int>(pivots.size());

    // Normalize pivot rows to rationals with unit pivots.
    QMatrix out(m.rows(), m.cols());
    for (int i = 0; i < p; ++i) {
        const Integer& d = im.at(i, pivots[i]);
        for (int c = pivots[i]; c < m.cols(); ++c) {
            Rational q(im.at(i, c), d);
            q.canonicalize();
            out.at(i, c) = std::move(q);
        }
    }
    // Eliminate upwards to reach reduced form.
    for (int i = p - 1; i >= 0; --i) {
        const int pc = pivots[i];
        auto clear_above = [&](int u) {
            const Rational f = out.at(u, pc);
            if (f == 0) return;
            for (int c = pc; c < m.cols(); ++c) out.at(u, c) -= f * out.at(i, c);
        };
#ifdef _OPENMP
        if (exec == Exec::parallel) {
#pragma omp parallel for schedule(static)
            for (int u = 0; u < i; ++u) clear_above(u);
        } else
#endif
        {
            for (int u = 0; u < i; ++u) clear_above(u);
        }
    }
    m = std::move(out);
    return pivots;
}

int matrix_rank(QMatrix m, Exec exec) { return static_cast<int>(rref(m, exec).size()); }

std::vector<std::vector<Rational>> kernel_basis(const QMatrix& m, Exec exec) {
    QMatrix r = m;
    std::vector<int> pivots = rref(r, exec);
    std::vector<char> is_pivot(m.cols(), 0);
    for (int c : pivots) is_pivot[c] = 1;
    std::vector<int> free_cols;
    for (int c = 0; c < m.cols(); ++c)
        if (!is_pivot[c]) free_cols.push_back(c);

    std::vector<std::vector<Rational>> basis(free_cols.size());
    auto build = [&](std::size_t fi) {
        const int f = free_cols[fi];
        std::vector<Rational> x(m.cols(), Rational(0));
        x[f] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = -r.at(int(i), f);
        basis[fi] = std::move(x);
    };
    const long nf = static_cast<long>(free_cols.size());
#ifdef _OPENMP
    if (exec == Exec::parallel) {
#pragma omp parallel for schedule(static)
        for (long i = 0; i < nf; ++i) build(static_cast<std::size_t>(i));
        return basis;
    }
#endif
    for (long i = 0; i < nf; ++i) build(static_cast<std::size_t>(i));
    return basis;
}

std::optional<std::vector<Rational>> solve_linear(const QMatrix& m,
                                                  const std::vector<Rational>& b,
                                                  Exec exec) {
    if (static_cast<int>(b.size()) != m.rows())
        throw Error("right-hand side length does not match matrix rows");
    QMatrix aug(m.rows(), m.cols() + 1);
    for (int r = 0; r < m.rows(); ++r) {
        for (int c = 0; c < m.cols(); ++c) aug.at(r, c) = m.at(r, c);
        aug.at(r, m.cols()) = b[r];
    }
    std::vector<int> pivots = rref(aug, exec);
    if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
    std::vector<Rational> x(m.cols(), Rational(0));
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug.at(int(i), m.cols());
    return x;
}

}  // namespace bsys
