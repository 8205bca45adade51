#ifndef CHIPFIRE_CRITICAL_HPP
#define CHIPFIRE_CRITICAL_HPP

#include <chipfire/dynamics.hpp>

#include <vector>

namespace chipfire {

// Witness that a configuration is critical: a start with every entry at
// least the matching diagonal of L, plus a legal firing transcript ending at
// the certified configuration.
struct CriticalCertificate {
    IntVec start;
    FiringRecord record;
};

struct CanonicalCritical {
    IntVec configuration;
    CriticalCertificate certificate;
};

struct LiftResult {
    IntVec lifted;     // g = f + L z with g[i] >= L[i][i] for all i
    IntVec multiplier; // z >= 0
};

// Raise f into the region where every state can fire, staying in its class.
// Solves L^{-1} y exactly for y = max(0, diag(L) - f) and scales by the lcm
// of the denominators, the smallest uniform integer multiplier with
// L z = lambda y >= y.
LiftResult lift_above_diagonal(const Engine& e, const IntVec& f);

// The unique critical configuration equivalent to f, with a replayable
// certificate: lift, then stabilize with the deterministic policy.
CanonicalCritical canonical_critical(const Engine& e, const IntVec& f);

// Same configuration without the certificate; batches fires, so it is the
// right call inside enumeration loops.
IntVec critical_representative(const Engine& e, const IntVec& f);

// Production decider: stable and D^L - c is z-superstable.
bool is_critical(const Engine& e, const IntVec& c);

// Independent decider used for cross-checks: stable and equal to the
// stabilization of its own lift.
bool is_critical_by_stabilization(const Engine& e, const IntVec& c);

// The duality map c -> D^L - c. An involution exchanging z-superstable and
// critical configurations.
IntVec dual(const Engine& e, const IntVec& c);

// Image of enumerate_z_superstables under dual, sorted lexicographically.
std::vector<IntVec> enumerate_criticals(const Engine& e);

} // namespace chipfire

#endif
