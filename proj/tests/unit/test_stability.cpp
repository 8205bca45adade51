#include <chipfire/stability.hpp>

#include "support/generators.hpp"
#include "support/oracles.hpp"

#include <doctest.h>

#include <algorithm>

using namespace chipfire;
using chipfire::testing::Rng;

namespace {

const IntMatrix kDelta41{{3, -1}, {-4, 2}}; // L = [[3,-4],[-1,2]], det 2
const IntMatrix kDelta42{{5, -4}, {-2, 3}}; // L = [[5,-2],[-4,3]], det 7
const IntMatrix kDelta44{{3, -3}, {-1, 2}}; // L = [[3,-1],[-3,2]], det 3

bool contains(const std::vector<IntVec>& sorted, const IntVec& c) {
    return std::binary_search(sorted.begin(), sorted.end(), c);
}

} // namespace

TEST_CASE("stability is the strict diagonal bound, negatives included") {
    Engine e(kDelta42);
    CHECK(is_stable(e, IntVec{4, 2}));
    CHECK(is_stable(e, IntVec{0, 0}));
    CHECK(is_stable(e, IntVec{-7, 1}));
    CHECK_FALSE(is_stable(e, IntVec{5, 0}));
    CHECK_FALSE(is_stable(e, IntVec{0, 3}));
    CHECK_THROWS_AS(is_stable(e, IntVec{0, 0, 0}), DimensionMismatchError);
}

TEST_CASE("0/1 violator search returns the lexicographically smallest witness") {
    Engine e41(kDelta41);
    CHECK(is_chi_superstable(e41, IntVec{2, 0}).superstable);
    SuperstableResult top = is_chi_superstable(e41, IntVec{2, 1});
    CHECK_FALSE(top.superstable);
    CHECK(*top.violation == IntVec{1, 1});

    Engine e42(kDelta42);
    SuperstableResult r = is_chi_superstable(e42, IntVec{4, 2});
    CHECK_FALSE(r.superstable);
    CHECK(*r.violation == IntVec{1, 1});

    Engine id(IntMatrix::identity(2));
    SuperstableResult first = is_chi_superstable(id, IntVec{1, 1});
    CHECK_FALSE(first.superstable);
    CHECK(*first.violation == IntVec{0, 1});

    CHECK_THROWS_AS(is_chi_superstable(e41, IntVec{-1, 0}), NegativeInputError);
}

TEST_CASE("integer violator search minimizes the coordinate sum") {
    Engine e41(kDelta41);
    SuperstableResult r = is_z_superstable(e41, IntVec{2, 0});
    CHECK_FALSE(r.superstable);
    CHECK(*r.violation == IntVec{2, 1}); // no violator of sum 1 or 2 exists

    Engine e44(kDelta44);
    SuperstableResult s = is_z_superstable(e44, IntVec{1, 1});
    CHECK_FALSE(s.superstable);
    CHECK(*s.violation == IntVec{1, 2});
    // the same configuration passes the 0/1 test: the hierarchy is strict here
    CHECK(is_chi_superstable(e44, IntVec{1, 1}).superstable);

    CHECK(is_z_superstable(e41, IntVec{1, 0}).superstable);
    CHECK_THROWS_AS(is_z_superstable(e41, IntVec{0, -2}), NegativeInputError);
}

TEST_CASE("enumeration matches the worked examples and the determinant") {
    Engine e41(kDelta41);
    CHECK(enumerate_z_superstables(e41) == std::vector<IntVec>{{0, 0}, {1, 0}});

    Engine e42(kDelta42);
    std::vector<IntVec> s42 = enumerate_z_superstables(e42);
    CHECK(s42 == std::vector<IntVec>{{0, 0}, {0, 1}, {0, 2}, {1, 0}, {1, 1}, {2, 0}, {2, 1}});
    CHECK(Int(s42.size()) == e42.determinant());

    // maximal members under the componentwise order have unequal sums
    std::vector<IntVec> maximal;
    for (const IntVec& c : s42) {
        bool dominated = false;
        for (const IntVec& d : s42)
            if (d != c && d[0] >= c[0] && d[1] >= c[1]) dominated = true;
        if (!dominated) maximal.push_back(c);
    }
    CHECK(maximal == std::vector<IntVec>{{0, 2}, {2, 1}});
    CHECK(coordinate_sum(maximal[0]) == 2);
    CHECK(coordinate_sum(maximal[1]) == 3);

    Engine e44(kDelta44);
    CHECK(enumerate_z_superstables(e44) == std::vector<IntVec>{{0, 0}, {0, 1}, {1, 0}});

    CHECK(enumerate_z_superstables(Engine(IntMatrix::identity(3))) ==
          std::vector<IntVec>{{0, 0, 0}});
}

TEST_CASE("superstable sets are downward closed and sit inside the hierarchy") {
    Rng rng(31);
    for (int t = 0; t < 12; ++t) {
        std::size_t n = static_cast<std::size_t>(rng.uniform(2, 3));
        Engine e(chipfire::testing::random_m_matrix(rng, n));
        std::vector<IntVec> supers = enumerate_z_superstables(e);
        CHECK(Int(supers.size()) == e.determinant());
        CHECK(std::is_sorted(supers.begin(), supers.end()));
        CHECK(contains(supers, IntVec(n, Int(0))));

        for (const IntVec& c : supers) {
            CHECK(is_stable(e, c));
            CHECK(is_chi_superstable(e, c).superstable);
            // every componentwise-smaller configuration stays superstable
            IntVec below(n, Int(0));
            for (;;) {
                CHECK(contains(supers, below));
                std::size_t i = n;
                bool advanced = false;
                while (i-- > 0) {
                    if (below[i] < c[i]) {
                        below[i] += 1;
                        advanced = true;
                        break;
                    }
                    below[i] = 0;
                }
                if (!advanced) break;
            }
        }

        // the production decider agrees with the brute-force scan
        for (int k = 0; k < 10; ++k) {
            IntVec c = chipfire::testing::random_config(rng, n, 6);
            CHECK(is_z_superstable(e, c).superstable ==
                  chipfire::testing::oracle_z_superstable(e.l_matrix(), c));
        }
    }
}

TEST_CASE("combined report carries both witnesses") {
    Engine e(kDelta44);
    StabilityReport r = stability_report(e, IntVec{1, 1});
    CHECK(r.stable);
    CHECK(r.chi_superstable);
    CHECK_FALSE(r.z_superstable);
    CHECK_FALSE(r.violating_chi.has_value());
    CHECK(*r.violating_z == IntVec{1, 2});

    StabilityReport clean = stability_report(e, IntVec{1, 0});
    CHECK(clean.stable);
    CHECK(clean.chi_superstable);
    CHECK(clean.z_superstable);

    StabilityReport hot = stability_report(e, IntVec{7, 0});
    CHECK_FALSE(hot.stable);
    CHECK_FALSE(hot.chi_superstable);
    CHECK_FALSE(hot.z_superstable);
    CHECK(*hot.violating_chi == IntVec{1, 0});
}

TEST_CASE("canonical representative is superstable, equivalent, and idempotent") {
    Engine e42(kDelta42);
    CHECK(canonical_z_superstable(e42, IntVec{5, 0}) == IntVec{2, 1});

    Engine e41(kDelta41);
    CHECK(canonical_z_superstable(e41, IntVec{2, 0}) == IntVec{0, 0});

    Engine e44(kDelta44);
    CHECK(canonical_z_superstable(e44, IntVec{1, 1}) == IntVec{0, 0});

    Rng rng(47);
    for (int t = 0; t < 25; ++t) {
        std::size_t n = static_cast<std::size_t>(rng.uniform(2, 4));
        Engine e(chipfire::testing::random_m_matrix(rng, n));
        // any integer vector is accepted, negatives included
        IntVec f(n);
        for (std::size_t i = 0; i < n; ++i) f[i] = rng.uniform(-15, 15);
        IntVec s = canonical_z_superstable(e, f);
        CHECK(is_z_superstable(e, s).superstable);
        CHECK(e.equivalence_witness(f, s).has_value());
        CHECK(canonical_z_superstable(e, s) == s);
    }

    for (const IntVec& s : enumerate_z_superstables(e42))
        CHECK(canonical_z_superstable(e42, s) == s);
}

TEST_CASE("search guards fail loudly instead of running forever") {
    Engine big(IntMatrix::identity(25));
    CHECK_THROWS_AS(is_chi_superstable(big, IntVec(25, Int(0))), DimensionTooLargeError);

    Engine id2(IntMatrix::identity(2));
    CHECK_THROWS_AS(is_z_superstable(id2, IntVec{20000, 20000}), SearchTooLargeError);

    IntMatrix wide(2);
    wide(0, 0) = 20000;
    wide(1, 1) = 20000;
    CHECK_THROWS_AS(enumerate_z_superstables(Engine(wide)), SearchTooLargeError);
}
