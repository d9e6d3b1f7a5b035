#pragma once

#include <vector>

#include "bsys/behavior.hpp"
#include "bsys/exact_linalg.hpp"
#include "bsys/module.hpp"
#include "bsys/ring.hpp"

namespace bsys {

// Finite evaluation window {0..side-1}^n for shift-operator systems. Each law
// is evaluated only at points where all of its shifted arguments stay inside
// the window; there is no zero padding.
struct Window {
    int n = 1;
    int side = 1;
};

// Coordinates of grid points are flattened row-major with the first axis most
// significant; a trajectory vector stores signal s at grid point p at index
// s * point_count + p.
int point_count(const Window& win);
int point_index(const std::vector<int>& x, const Window& win);
std::vector<int> point_at(int index, const Window& win);

struct InstantiatedSystem {
    int k = 0;  // signal count
    Window win;
    QMatrix matrix;  // one row per (generator, valid point), k * points columns
    struct RowMeta {
        int generator;
        std::vector<int> point;
    };
    std::vector<RowMeta> rows;
};

// Turns every generator of S into linear equations on window trajectories.
// Throws OracleUnavailableError for differential rings: only the shift action
// has faithful finite-window semantics.
InstantiatedSystem instantiate(const Submodule& S, const RingSpec& ring, const Window& win);

struct WindowKernel {
    int k = 0;
    Window win;
    std::vector<std::vector<Rational>> basis;  // exact spanning set of the solution space
    int dimension() const { return static_cast<int>(basis.size()); }
};

WindowKernel window_kernel(const Submodule& S, const RingSpec& ring, const Window& win,
                           Exec exec = Exec::serial);

struct Violation {
    int trajectory = 0;      // index into the kernel basis
    int law = 0;             // index into the checked law list
    std::vector<int> point;  // where the law failed
    Rational value;          // the nonzero evaluation
};

// Per-law record of the region where satisfaction is actually guaranteed.
// When a membership certificate for the law (in terms of the system's own
// generators) is found, the check region derived from it is sound: a nonzero
// value there is a genuine bug. Without a certificate the law's own shift
// support is used and flagged, since combinations with high-degree cofactors
// may legitimately fail near the window boundary.
struct MarginInfo {
    int law = 0;
    bool certified = false;
    Exponent margin;              // per-variable reach subtracted from the far boundary
    int certificate_degree = -1;  // cofactor degree bound that succeeded
};

struct InclusionReport {
    bool passed = false;
    std::vector<Violation> violations;
    std::vector<MarginInfo> margins;
    int kernel_dimension = 0;
    int laws_checked = 0;
    Window win;
};

// Projects every window trajectory of P to the w-block and checks it against
// every generator of the forced-law module preimage_w(P), exactly.
InclusionReport oracle_inclusion_check(const ControlSystem& sys, const Window& win,
                                       Exec exec = Exec::serial);

struct ControllerOracleReport {
    bool inclusion_passed = false;  // projected trajectories satisfy the controller laws
    std::vector<Violation> violations;
    std::vector<MarginInfo> margins;
    int restricted_behavior_dim = 0;   // window kernel of P + embedded target
    int interior_offset = 0;           // inner sub-window inset used for dimensions
    int interior_dim_projected = 0;    // dim of c-projections on the interior
    int interior_dim_controller = 0;   // dim of the controller kernel on the interior
    bool interior_dims_equal = false;  // informative only; boundary effects expected
    Window win;
};

// Trajectory-level cross-check of controller synthesis: the c-projections of
// the restricted behavior's window trajectories must satisfy the canonical
// controller's laws; interior dimensions of both solution sets are compared
// informatively. Throws InadmissibleError for inadmissible N.
ControllerOracleReport oracle_canonical_controller(const ControlSystem& sys, const Submodule& N,
                                                   const Window& win, Exec exec = Exec::serial);

}  // namespace bsys
