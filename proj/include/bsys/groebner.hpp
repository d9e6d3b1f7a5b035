#pragma once

#include <optional>
#include <vector>

#include "bsys/module.hpp"
#include "bsys/order.hpp"

namespace bsys {

// Execution policy for the data-parallel kernels (batch reduction and the
// exact linear algebra they sit on). `parallel` uses OpenMP when compiled in,
// and degrades to serial otherwise.
enum class Exec { serial, parallel };

struct GBReport {
    std::vector<ModuleVector> basis;  // reduced Groebner basis, monic, sorted
                                      // descending by leading monomial
    ModuleOrder order;
    long pairs_formed = 0;            // same-leading-position generator pairs considered
    long pairs_skipped_product = 0;   // discarded via the coprimality criterion
    long pairs_skipped_chain = 0;     // discarded via the Gebauer-Moller chain criteria
    long pairs_reduced_to_zero = 0;   // processed pairs whose S-vector vanished
    long basis_additions = 0;         // intermediate elements appended during the run
};

struct DivisionResult {
    ModuleVector remainder;
    std::vector<Polynomial> quotients;  // v = sum quotients[i] * G[i] + remainder
};

// Multivariate division: fully reduces v against G under ord. The remainder
// has no monomial divisible by a leading monomial of G, and v - r lies in <G>.
// Deterministic: always divides by the first eligible element of G.
ModuleVector normal_form(const ModuleVector& v, const std::vector<ModuleVector>& G,
                         const ModuleOrder& ord);
DivisionResult divide(const ModuleVector& v, const std::vector<ModuleVector>& G,
                      const ModuleOrder& ord);

// Normal forms of many vectors against one divisor set; the rows are
// independent, so this is one of the parallel kernels.
std::vector<ModuleVector> normal_forms(const std::vector<ModuleVector>& vs,
                                       const std::vector<ModuleVector>& G,
                                       const ModuleOrder& ord, Exec exec = Exec::serial);

// Buchberger's algorithm for submodules of A^rank. S-pairs are formed only
// between generators whose leading monomials share a position. Returns the
// reduced Groebner basis together with pair statistics.
GBReport buchberger(const std::vector<ModuleVector>& gens, int rank, int nvars,
                    const ModuleOrder& ord);
GBReport buchberger(const Submodule& S, const ModuleOrder& ord);

bool is_member(const ModuleVector& v, const Submodule& S, const ModuleOrder& ord);
bool is_member(const ModuleVector& v, const Submodule& S);

bool is_submodule(const Submodule& S, const Submodule& T);  // S subseteq T
bool module_equal(const Submodule& S, const Submodule& T);

Submodule module_sum(const Submodule& S, const Submodule& T);

// Image of S under the projection onto the listed positions (rank |block|).
// Projections of generators generate the image.
Submodule project_block(const Submodule& S, const std::vector<int>& block);

// {p in A^block : placing p at the block positions (zero elsewhere) lands in S},
// re-indexed to rank |block|. Computed by eliminating the complement positions.
Submodule preimage_block(const Submodule& S, const std::vector<int>& block);

// Embedding of a rank-|block| submodule into A^big_rank at the block positions.
Submodule embed_block(const Submodule& S, int big_rank, const std::vector<int>& block);
ModuleVector embed_vector(const ModuleVector& v, int big_rank, const std::vector<int>& block);

// S intersect T, computed in A^(2*rank) from generators (s_i, s_i) and
// (t_j, 0) by eliminating the first block of positions.
Submodule module_intersect(const Submodule& S, const Submodule& T);

}  // namespace bsys
