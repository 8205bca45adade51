#ifndef CHIPFIRE_DYNAMICS_HPP
#define CHIPFIRE_DYNAMICS_HPP

#include <chipfire/matcore.hpp>
#include <chipfire/matrix.hpp>
#include <chipfire/numeric.hpp>

#include <cstdint>
#include <optional>
#include <vector>

namespace chipfire {

// Total fires before stabilize() reports CapExceeded, unless overridden.
inline const Int kDefaultFireCap = 10'000'000;

enum class FirePolicy {
    smallest_index, // always fire the smallest-index eligible state
    random_order,   // fire a uniformly random eligible state (seeded)
};

struct StabilizeOptions {
    FirePolicy policy = FirePolicy::smallest_index;
    std::uint64_t seed = 0;           // used by random_order only
    std::optional<Int> cap;           // defaults to kDefaultFireCap
    bool record_sequence = true;      // odometer-only runs may batch fires
};

// A stabilization transcript. `odometer[i]` counts the fires of state i,
// `sequence` lists the fired states in order, and
// result = start - L * odometer holds exactly.
struct FiringRecord {
    IntVec odometer;
    std::vector<std::size_t> sequence;
    IntVec result;
};

// Chip-firing engine for one M-matrix.
//
// The user supplies the matrix delta; firing state i subtracts row i of
// delta, which is column i of L = delta^T. All internal firing math uses L,
// all file I/O talks about delta. Construction runs the M-matrix verdict and
// rejects anything that fails it, so every engine is avalanche finite.
// Instances are immutable and safe to share across threads.
class Engine {
public:
    explicit Engine(IntMatrix delta); // throws NotMMatrixError

    std::size_t size() const noexcept { return delta_.size(); }
    const IntMatrix& delta() const noexcept { return delta_; }
    const IntMatrix& l_matrix() const noexcept { return l_; }
    const RatMatrix& l_inverse() const noexcept { return l_inverse_; }
    const MVerdict& verdict() const noexcept { return verdict_; }
    const Int& determinant() const noexcept { return det_; }

    // Diagonal of L minus one in every entry; the maximal stable configuration.
    IntVec d_vector() const;

    bool eligible(const IntVec& c, std::size_t i) const;

    // Unconditional move c - L e_i. Legality is the caller's concern.
    IntVec fire(const IntVec& c, std::size_t i) const;

    // Repeated legal firing until no state is eligible. Requires c >= 0.
    FiringRecord stabilize(IntVec c, const StabilizeOptions& options = {}) const;

    std::optional<IntVec> equivalence_witness(const IntVec& f, const IntVec& g) const;

    void check_dimension(const IntVec& c) const;

private:
    IntMatrix delta_;
    IntMatrix l_;
    MVerdict verdict_;
    RatMatrix l_inverse_; // (delta^{-1})^T
    Int det_;
};

} // namespace chipfire

#endif
