#include "oracles.hpp"

#include <chipfire/errors.hpp>
#include <chipfire/matcore.hpp>

namespace chipfire::testing {

namespace {

const Int kOracleVolumeGuard = 1'000'000;

bool next_in_box(IntVec& v, const IntVec& upper) {
    std::size_t i = v.size();
    while (i-- > 0) {
        if (v[i] < upper[i]) {
            v[i] += 1;
            return true;
        }
        v[i] = 0;
    }
    return false;
}

bool integral(const RatVec& v) {
    for (const Rat& q : v)
        if (denominator(q) != 1) return false;
    return true;
}

// Oracle-side energy: either a plain rational (all-power specs) or the
// product under the log (all-log specs); log is monotone, so products
// compare like the energies themselves.
struct OracleEnergy {
    bool logarithmic = false;
    Rat value = 0;
};

OracleEnergy oracle_energy(const RatMatrix& l_inverse, const EnergySpec& spec, const IntVec& q) {
    const std::size_t n = l_inverse.size();
    std::vector<PhiSpec> phis;
    switch (spec.kind) {
    case EnergySpec::Kind::two_norm: phis.assign(n, {PhiSpec::Fn::power, 2}); break;
    case EnergySpec::Kind::p_norm: phis.assign(n, {PhiSpec::Fn::power, spec.p}); break;
    case EnergySpec::Kind::general: phis = spec.phis; break;
    }
    if (phis.size() != n) throw Error("oracle", "spec length mismatch");
    bool any_log = false, any_power = false;
    for (const PhiSpec& p : phis) (p.fn == PhiSpec::Fn::log1p_abs ? any_log : any_power) = true;
    if (any_log && any_power) throw Error("oracle", "mixed specs unsupported by the oracle");

    RatVec d = l_inverse.apply(q);
    OracleEnergy e;
    if (any_log) {
        e.logarithmic = true;
        e.value = 1;
        for (std::size_t i = 0; i < n; ++i) e.value *= 1 + abs(d[i]);
    } else {
        for (std::size_t i = 0; i < n; ++i) {
            Rat term = 1;
            for (unsigned k = 0; k < phis[i].p; ++k) term *= abs(d[i]);
            e.value += term;
        }
    }
    return e;
}

} // namespace

bool oracle_z_superstable(const IntMatrix& l, const IntVec& c) {
    const std::size_t n = l.size();
    const RatMatrix inv = invert_exact(l);

    RatVec t = inv.apply(c);
    IntVec upper(n);
    Int volume = 1;
    for (std::size_t i = 0; i < n; ++i) {
        Int b = floor_rat(t[i]) + 1; // one beyond the proven bound
        upper[i] = b < 0 ? Int(0) : b;
        volume *= upper[i] + 1;
        if (volume > kOracleVolumeGuard)
            throw SearchTooLargeError("oracle box exceeds 10^6 candidates");
    }

    IntVec z(n, Int(0));
    while (next_in_box(z, upper)) {
        bool dominated = true;
        for (std::size_t i = 0; i < n && dominated; ++i) {
            Int w = c[i];
            for (std::size_t j = 0; j < n; ++j) w -= l(i, j) * z[j];
            if (w < 0) dominated = false;
        }
        if (dominated) return false;
    }
    return true;
}

OracleMin oracle_min_energy(const IntMatrix& l, const EnergySpec& spec, const IntVec& f,
                            Rng& rng) {
    const std::size_t n = l.size();
    const RatMatrix inv = invert_exact(l);

    IntVec upper(n);
    Int volume = 1;
    for (std::size_t i = 0; i < n; ++i) {
        upper[i] = l(i, i) - 1;
        volume *= upper[i] + 1;
        if (volume > kOracleVolumeGuard)
            throw SearchTooLargeError("oracle box exceeds 10^6 candidates");
    }

    OracleMin best;
    best.ties = 0;
    OracleEnergy best_energy;
    IntVec g(n, Int(0));
    for (;;) {
        IntVec diff(n);
        for (std::size_t i = 0; i < n; ++i) diff[i] = g[i] - f[i];
        if (integral(inv.apply(diff))) {
            OracleEnergy e = oracle_energy(inv, spec, g);
            if (best.ties == 0 || e.value < best_energy.value) {
                best_energy = e;
                best.argmin = g;
                best.ties = 1;
            } else if (e.value == best_energy.value) {
                ++best.ties;
            }
        }
        if (!next_in_box(g, upper)) break;
    }
    if (best.ties == 0) throw Error("oracle", "no class member inside the stable box");

    // Random class members g = f - L z must not beat the box minimum.
    int found = 0;
    for (int attempt = 0; attempt < 100000 && found < 100; ++attempt) {
        IntVec z(n);
        for (std::size_t i = 0; i < n; ++i) z[i] = rng.uniform(-3, 3);
        IntVec cand = f;
        bool nonneg = true;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) cand[i] -= l(i, j) * z[j];
            if (cand[i] < 0) nonneg = false;
        }
        if (!nonneg) continue;
        ++found;
        OracleEnergy e = oracle_energy(inv, spec, cand);
        if (e.logarithmic != best_energy.logarithmic) throw Error("oracle", "spec drifted");
        if (e.value < best_energy.value)
            throw Error("oracle", "random class member beats the box minimum");
    }
    return best;
}

} // namespace chipfire::testing
