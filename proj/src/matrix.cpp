#include <chipfire/matrix.hpp>

namespace chipfire {

std::string to_string(const Int& x) { return x.str(); }

std::string to_string(const Rat& q) {
    Int num = numerator(q);
    Int den = denominator(q);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
    if (a.size() != b.size()) throw DimensionMismatchError("matrix dimensions differ");
    const std::size_t n = a.size();
    IntMatrix r(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            const Int& aik = a(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < n; ++j) r(i, j) += aik * b(k, j);
        }
    return r;
}

RatMatrix multiply(const IntMatrix& a, const RatMatrix& b) {
    if (a.size() != b.size()) throw DimensionMismatchError("matrix dimensions differ");
    const std::size_t n = a.size();
    RatMatrix r(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            const Int& aik = a(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < n; ++j) r(i, j) += Rat(aik) * b(k, j);
        }
    return r;
}

} // namespace chipfire
