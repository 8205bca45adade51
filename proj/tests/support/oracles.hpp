#ifndef CHIPFIRE_TESTS_ORACLES_HPP
#define CHIPFIRE_TESTS_ORACLES_HPP

#include "generators.hpp"

#include <chipfire/energy.hpp>
#include <chipfire/matrix.hpp>

namespace chipfire::testing {

// Brute-force references, written against L directly (not the engine) with
// their own loop structure. They intentionally share nothing with the
// production deciders beyond exact matrix arithmetic.

// Exhaustive scan over 0 <= z <= floor(L^{-1} c) + 1 (one beyond the proven
// bound), z != 0. Tiny instances only: box volume capped at 10^6.
bool oracle_z_superstable(const IntMatrix& l, const IntVec& c);

struct OracleMin {
    IntVec argmin;
    std::size_t ties; // configurations attaining the minimum; 1 when unique
};

// Argmin of the energy over the nonnegative class members of f inside the
// stable box, by exhaustive scan with its own energy evaluation. Only
// homogeneous specs (all power or all log terms) are supported. Also draws
// 100 random class members f - L z outside the scan and checks none beats
// the minimum.
OracleMin oracle_min_energy(const IntMatrix& l, const EnergySpec& spec, const IntVec& f,
                            Rng& rng);

} // namespace chipfire::testing

#endif
