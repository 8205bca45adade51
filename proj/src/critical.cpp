#include <chipfire/critical.hpp>

#include <chipfire/stability.hpp>

#include <algorithm>

namespace chipfire {

LiftResult lift_above_diagonal(const Engine& e, const IntVec& f) {
    e.check_dimension(f);
    const std::size_t n = e.size();
    const IntMatrix& l = e.l_matrix();

    IntVec y(n, Int(0));
    bool trivial = true;
    for (std::size_t i = 0; i < n; ++i) {
        Int gap = l(i, i) - f[i];
        if (gap > 0) {
            y[i] = gap;
            trivial = false;
        }
    }
    LiftResult out;
    out.multiplier.assign(n, Int(0));
    if (trivial) {
        out.lifted = f;
        return out;
    }

    // t = L^{-1} y >= 0; scaling by the lcm of denominators makes z = lambda t
    // integral with L z = lambda y >= y, so f + L z clears every diagonal.
    RatVec t = e.l_inverse().apply(y);
    Int lambda = 1;
    for (std::size_t i = 0; i < n; ++i) lambda = lcm_int(lambda, denominator(t[i]));
    for (std::size_t i = 0; i < n; ++i) out.multiplier[i] = numerator(t[i]) * (lambda / denominator(t[i]));

    out.lifted = f;
    for (std::size_t i = 0; i < n; ++i) out.lifted[i] += lambda * y[i];
    return out;
}

CanonicalCritical canonical_critical(const Engine& e, const IntVec& f) {
    LiftResult lr = lift_above_diagonal(e, f);
    StabilizeOptions opt;
    opt.record_sequence = true;
    FiringRecord rec = e.stabilize(lr.lifted, opt);
    CanonicalCritical out;
    out.configuration = rec.result;
    out.certificate.start = lr.lifted;
    out.certificate.record = std::move(rec);
    return out;
}

IntVec critical_representative(const Engine& e, const IntVec& f) {
    LiftResult lr = lift_above_diagonal(e, f);
    StabilizeOptions opt;
    opt.record_sequence = false;
    return e.stabilize(lr.lifted, opt).result;
}

bool is_critical(const Engine& e, const IntVec& c) {
    e.check_dimension(c);
    if (!is_stable(e, c)) return false;
    for (std::size_t i = 0; i < e.size(); ++i)
        if (c[i] < 0) return false;
    return is_z_superstable(e, dual(e, c)).superstable;
}

bool is_critical_by_stabilization(const Engine& e, const IntVec& c) {
    e.check_dimension(c);
    if (!is_stable(e, c)) return false;
    for (std::size_t i = 0; i < e.size(); ++i)
        if (c[i] < 0) return false;
    return critical_representative(e, c) == c;
}

IntVec dual(const Engine& e, const IntVec& c) {
    e.check_dimension(c);
    IntVec d = e.d_vector();
    for (std::size_t i = 0; i < e.size(); ++i) d[i] -= c[i];
    return d;
}

std::vector<IntVec> enumerate_criticals(const Engine& e) {
    std::vector<IntVec> out;
    for (const IntVec& s : enumerate_z_superstables(e)) out.push_back(dual(e, s));
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace chipfire
