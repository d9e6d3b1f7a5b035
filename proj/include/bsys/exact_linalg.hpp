#pragma once

#include <optional>
#include <vector>

#include "bsys/groebner.hpp"  // Exec
#include "bsys/rational.hpp"

namespace bsys {

// Dense rational matrix, row-major.
class QMatrix {
public:
    QMatrix() = default;
    QMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(std::size_t(rows) * cols) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Rational& at(int r, int c) { return a_[std::size_t(r) * cols_ + c]; }
    const Rational& at(int r, int c) const { return a_[std::size_t(r) * cols_ + c]; }

    bool operator==(const QMatrix&) const = default;

private:
    int rows_ = 0, cols_ = 0;
    std::vector<Rational> a_;
};

// In-place reduced row echelon form with exact arithmetic. Returns the pivot
// column indices in increasing order. Pivot choice is the first row with a
// nonzero entry in the current column, so the result is deterministic (and
// unique anyway: RREF is a canonical form). The forward pass runs fraction-free
// on integers (Bareiss), keeping entries as minors of the input instead of
// letting rationals grow; row updates are data-parallel under Exec::parallel.
std::vector<int> rref(QMatrix& m, Exec exec = Exec::serial);

int matrix_rank(QMatrix m, Exec exec = Exec::serial);

// Basis of {x : M x = 0}, one vector per non-pivot column, in column order.
// Each basis vector has 1 at its free column. Deterministic.
std::vector<std::vector<Rational>> kernel_basis(const QMatrix& m, Exec exec = Exec::serial);

// One solution of M x = b with all free variables set to zero, or nullopt if
// the system is inconsistent.
std::optional<std::vector<Rational>> solve_linear(const QMatrix& m,
                                                  const std::vector<Rational>& b,
                                                  Exec exec = Exec::serial);

}  // namespace bsys
