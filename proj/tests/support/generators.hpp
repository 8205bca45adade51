#ifndef CHIPFIRE_TESTS_GENERATORS_HPP
#define CHIPFIRE_TESTS_GENERATORS_HPP

#include <chipfire/matcore.hpp>
#include <chipfire/matrix.hpp>

#include <cstdint>
#include <random>

namespace chipfire::testing {

// Seeded, platform-stable draws (mt19937_64 plus rejection sampling; no
// library distribution objects).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    // Uniform integer in [lo, hi], inclusive.
    long long uniform(long long lo, long long hi);

    std::mt19937_64& engine() { return engine_; }

private:
    std::mt19937_64 engine_;
};

// Strict row diagonal dominance: off-diagonals in [-3, 0], each diagonal is
// the row's absolute off-diagonal sum plus 1..3. Always an M-matrix with
// every row sum positive.
IntMatrix random_row_dominant(Rng& rng, std::size_t n);

// Transpose of a row-dominant draw, rejected until some row sum is negative.
// Column dominance survives the transpose, so the verdict still passes.
IntMatrix random_negative_row_sum(Rng& rng, std::size_t n);

// Z-matrix rejection sampling through the full verdict; covers matrices that
// are neither row nor column dominant.
IntMatrix random_z_rejection(Rng& rng, std::size_t n);

// Row-dominant with per-row slack 0..3 (row sums >= 0, some possibly zero),
// rejected through the verdict to drop singular draws.
IntMatrix random_nonneg_row_sums(Rng& rng, std::size_t n);

// Round-robin mix of the three regimes above.
IntMatrix random_m_matrix(Rng& rng, std::size_t n);

bool has_negative_row_sum(const IntMatrix& m);

IntVec random_config(Rng& rng, std::size_t n, long long max_entry);

// Uniform element of the stable box [0, diag(L) - 1].
IntVec random_stable_config(Rng& rng, const IntMatrix& l);

} // namespace chipfire::testing

#endif
