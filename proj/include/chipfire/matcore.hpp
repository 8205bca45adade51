#ifndef CHIPFIRE_MATCORE_HPP
#define CHIPFIRE_MATCORE_HPP

#include <chipfire/matrix.hpp>
#include <chipfire/numeric.hpp>

#include <optional>
#include <string>

namespace chipfire {

// Outcome of the M-matrix decision.
//
// The decider is condition-driven: a Z-matrix whose exact inverse exists and
// is entrywise nonnegative is a non-singular M-matrix. On success the verdict
// carries the inverse and a certificate x = M^{-1} * ones, which is
// nonnegative and satisfies M x = ones (all entries positive). On failure
// `failure_witness` names the first violated condition.
struct MVerdict {
    bool is_z = false;
    bool is_m = false;
    std::optional<RatMatrix> inverse;
    std::optional<RatVec> certificate;
    std::optional<std::string> failure_witness;
};

// True iff every off-diagonal entry is <= 0. The diagonal is not inspected.
bool is_z_matrix(const IntMatrix& m);

// Exact determinant via fraction-free (Bareiss) elimination.
Int determinant(const IntMatrix& m);

// Exact inverse over the rationals. Throws SingularError.
RatMatrix invert_exact(const IntMatrix& m);

MVerdict m_verdict(const IntMatrix& m);

// Integer z with g - f = L z, if one exists. Exact rational solve followed by
// an integrality check of every coordinate. Throws SingularError.
std::optional<IntVec> equivalence_witness(const IntMatrix& l, const IntVec& f, const IntVec& g);

// Same decision given a precomputed L^{-1} (used by the engine's hot paths).
std::optional<IntVec> equivalence_witness(const RatMatrix& l_inverse, const IntVec& f,
                                          const IntVec& g);

} // namespace chipfire

#endif
