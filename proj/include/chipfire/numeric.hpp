#ifndef CHIPFIRE_NUMERIC_HPP
#define CHIPFIRE_NUMERIC_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

namespace chipfire {

// Exact scalar types. Expression templates are switched off so that `auto`
// and std containers behave like plain value types.
using Int = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                          boost::multiprecision::et_off>;
using Rat = boost::multiprecision::number<
    boost::multiprecision::rational_adaptor<boost::multiprecision::cpp_int_backend<>>,
    boost::multiprecision::et_off>;

using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

// Floor of an exact rational as an integer (round toward minus infinity).
inline Int floor_rat(const Rat& q) {
    Int num = numerator(q);
    Int den = denominator(q); // positive by canonical form
    Int quot = num / den;     // truncates toward zero
    if (num < 0 && quot * den != num) {
        --quot;
    }
    return quot;
}

inline Int lcm_int(const Int& a, const Int& b) {
    return boost::multiprecision::lcm(a, b);
}

inline bool all_nonnegative(const IntVec& v) {
    for (const Int& x : v) {
        if (x < 0) return false;
    }
    return true;
}

inline bool is_zero_vector(const IntVec& v) {
    for (const Int& x : v) {
        if (x != 0) return false;
    }
    return true;
}

inline IntVec operator+(const IntVec& a, const IntVec& b) {
    IntVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline IntVec operator-(const IntVec& a, const IntVec& b) {
    IntVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

// Componentwise max(z, 0).
inline IntVec positive_part(const IntVec& z) {
    IntVec r(z.size());
    for (std::size_t i = 0; i < z.size(); ++i) r[i] = z[i] > 0 ? z[i] : Int(0);
    return r;
}

inline Int coordinate_sum(const IntVec& v) {
    Int s = 0;
    for (const Int& x : v) s += x;
    return s;
}

std::string to_string(const Int& x);
std::string to_string(const Rat& q); // "p" or "p/q" in lowest terms

} // namespace chipfire

#endif
