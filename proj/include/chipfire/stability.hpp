#ifndef CHIPFIRE_STABILITY_HPP
#define CHIPFIRE_STABILITY_HPP

#include <chipfire/dynamics.hpp>

#include <optional>
#include <vector>

namespace chipfire {

// Guard on brute-force searches (box volume) used by the enumerators.
inline const Int kSearchGuard = 100'000'000;

struct SuperstableResult {
    bool superstable = false;
    // Present iff not superstable; a nonzero vector z >= 0 with c - L z >= 0.
    std::optional<IntVec> violation;
};

struct StabilityReport {
    bool stable = false;
    bool chi_superstable = false;
    bool z_superstable = false;
    std::optional<IntVec> violating_chi;
    std::optional<IntVec> violating_z;
};

// c[i] < L[i][i] for all i. Negative entries are allowed.
bool is_stable(const Engine& e, const IntVec& c);

// Exhaustive test of all 2^n - 1 nonzero 0/1 vectors chi; the witness is the
// lexicographically smallest violator. Requires c >= 0 and n <= 24.
SuperstableResult is_chi_superstable(const Engine& e, const IntVec& c);

// Finite search over the box 0 <= z <= floor(L^{-1} c). The bound is sound
// because L^{-1} >= 0: any violator z satisfies z <= L^{-1} c. The witness
// has the smallest coordinate sum, ties broken lexicographically.
// Requires c >= 0.
SuperstableResult is_z_superstable(const Engine& e, const IntVec& c);

StabilityReport stability_report(const Engine& e, const IntVec& c);

// Every z-superstable configuration, in lexicographic order. Scans the
// stable box 0 <= c <= D^L; the count always equals det(L).
std::vector<IntVec> enumerate_z_superstables(const Engine& e);

// The unique z-superstable configuration equivalent to f, computed without
// enumeration: stabilize a lifted representative of D^L - f to its critical
// configuration c, then return D^L - c. Accepts any integer f.
IntVec canonical_z_superstable(const Engine& e, const IntVec& f);

} // namespace chipfire

#endif
