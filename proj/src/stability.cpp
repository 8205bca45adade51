#include <chipfire/stability.hpp>

#include <chipfire/critical.hpp>

namespace chipfire {

namespace {

void check_nonnegative(const IntVec& c) {
    for (std::size_t i = 0; i < c.size(); ++i)
        if (c[i] < 0)
            throw NegativeInputError("configuration has negative entry at state " +
                                     std::to_string(i));
}

// Candidates z with fixed coordinate sum, 0 <= z <= bound, visited in
// lexicographic order. Returns the first violator found.
bool search_sum_stratum(const Engine& e, const IntVec& c, const IntVec& bound,
                        const IntVec& suffix_capacity, IntVec& z, std::size_t idx, Int remaining,
                        IntVec& out) {
    const std::size_t n = e.size();
    if (idx + 1 == n) {
        if (remaining > bound[idx]) return false;
        z[idx] = remaining;
        const IntMatrix& l = e.l_matrix();
        for (std::size_t i = 0; i < n; ++i) {
            Int w = c[i];
            for (std::size_t j = 0; j < n; ++j) w -= l(i, j) * z[j];
            if (w < 0) return false;
        }
        out = z;
        return true;
    }
    Int lo = remaining - suffix_capacity[idx + 1];
    if (lo < 0) lo = 0;
    Int hi = remaining < bound[idx] ? remaining : bound[idx];
    for (Int v = lo; v <= hi; ++v) {
        z[idx] = v;
        if (search_sum_stratum(e, c, bound, suffix_capacity, z, idx + 1, remaining - v, out))
            return true;
    }
    return false;
}

} // namespace

bool is_stable(const Engine& e, const IntVec& c) {
    e.check_dimension(c);
    for (std::size_t i = 0; i < e.size(); ++i)
        if (c[i] >= e.l_matrix()(i, i)) return false;
    return true;
}

SuperstableResult is_chi_superstable(const Engine& e, const IntVec& c) {
    e.check_dimension(c);
    check_nonnegative(c);
    const std::size_t n = e.size();
    if (n > 24)
        throw DimensionTooLargeError("0/1 search needs 2^n candidates; size " +
                                     std::to_string(n) + " exceeds 24");
    const IntMatrix& l = e.l_matrix();
    // Ascending k with chi[0] as the most significant bit walks the vectors
    // in lexicographic order, so the first hit is the smallest witness.
    for (std::uint64_t k = 1; k < (std::uint64_t(1) << n); ++k) {
        bool ok = true;
        for (std::size_t i = 0; i < n && ok; ++i) {
            Int w = c[i];
            for (std::size_t j = 0; j < n; ++j)
                if ((k >> (n - 1 - j)) & 1u) w -= l(i, j);
            if (w < 0) ok = false;
        }
        if (ok) {
            IntVec chi(n);
            for (std::size_t j = 0; j < n; ++j) chi[j] = Int((k >> (n - 1 - j)) & 1u);
            return {false, chi};
        }
    }
    return {true, std::nullopt};
}

SuperstableResult is_z_superstable(const Engine& e, const IntVec& c) {
    e.check_dimension(c);
    check_nonnegative(c);
    const std::size_t n = e.size();

    // Any violator satisfies L z <= c, hence z <= L^{-1} c entrywise.
    RatVec t = e.l_inverse().apply(c);
    IntVec bound(n);
    Int volume = 1;
    Int total = 0;
    for (std::size_t i = 0; i < n; ++i) {
        bound[i] = floor_rat(t[i]);
        if (bound[i] < 0) bound[i] = 0;
        volume *= bound[i] + 1;
        total += bound[i];
        if (volume > kSearchGuard)
            throw SearchTooLargeError("violator search box has more than " +
                                      to_string(kSearchGuard) + " candidates");
    }

    IntVec suffix_capacity(n, Int(0));
    Int acc = 0;
    for (std::size_t i = n; i-- > 0;) {
        acc += bound[i];
        suffix_capacity[i] = acc;
    }

    IntVec z(n, Int(0));
    IntVec out;
    for (Int s = 1; s <= total; ++s)
        if (search_sum_stratum(e, c, bound, suffix_capacity, z, 0, s, out)) return {false, out};
    return {true, std::nullopt};
}

StabilityReport stability_report(const Engine& e, const IntVec& c) {
    StabilityReport r;
    r.stable = is_stable(e, c);
    SuperstableResult chi = is_chi_superstable(e, c);
    r.chi_superstable = chi.superstable;
    r.violating_chi = std::move(chi.violation);
    SuperstableResult z = is_z_superstable(e, c);
    r.z_superstable = z.superstable;
    r.violating_z = std::move(z.violation);
    return r;
}

std::vector<IntVec> enumerate_z_superstables(const Engine& e) {
    const std::size_t n = e.size();
    const IntMatrix& l = e.l_matrix();
    Int volume = 1;
    for (std::size_t i = 0; i < n; ++i) {
        volume *= l(i, i);
        if (volume > kSearchGuard)
            throw SearchTooLargeError("stable box has more than " + to_string(kSearchGuard) +
                                      " candidates");
    }

    std::vector<IntVec> found;
    IntVec c(n, Int(0));
    for (;;) {
        if (is_z_superstable(e, c).superstable) found.push_back(c);
        std::size_t i = n;
        while (i-- > 0) {
            if (c[i] + 1 < l(i, i)) {
                c[i] += 1;
                break;
            }
            c[i] = 0;
            if (i == 0) return found;
        }
    }
}

IntVec canonical_z_superstable(const Engine& e, const IntVec& f) {
    e.check_dimension(f);
    // Push the problem through the duality: the critical configuration of the
    // reflected class reflects back onto the z-superstable representative.
    IntVec d = e.d_vector();
    IntVec h(e.size());
    for (std::size_t i = 0; i < e.size(); ++i) h[i] = d[i] - f[i];
    IntVec crit = critical_representative(e, h);
    for (std::size_t i = 0; i < e.size(); ++i) crit[i] = d[i] - crit[i];
    return crit;
}

} // namespace chipfire
