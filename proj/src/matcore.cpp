#include <chipfire/matcore.hpp>

#include <utility>

namespace chipfire {

bool is_z_matrix(const IntMatrix& m) {
    const std::size_t n = m.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j && m(i, j) > 0) return false;
    return true;
}

// Fraction-free elimination: every division below is exact over the integers.
Int determinant(const IntMatrix& m) {
    const std::size_t n = m.size();
    std::vector<IntVec> a(n, IntVec(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i][j] = m(i, j);

    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t p = k + 1;
            while (p < n && a[p][k] == 0) ++p;
            if (p == n) return 0;
            std::swap(a[k], a[p]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    return sign > 0 ? a[n - 1][n - 1] : -a[n - 1][n - 1];
}

RatMatrix invert_exact(const IntMatrix& m) {
    const std::size_t n = m.size();
    RatMatrix a(m);
    RatMatrix inv = RatMatrix::identity(n);

    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && a(p, k) == 0) ++p;
        if (p == n) throw SingularError("matrix is singular");
        if (p != k) {
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(a(k, j), a(p, j));
                std::swap(inv(k, j), inv(p, j));
            }
        }
        const Rat pivot = a(k, k);
        for (std::size_t j = 0; j < n; ++j) {
            a(k, j) /= pivot;
            inv(k, j) /= pivot;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k) continue;
            const Rat factor = a(i, k);
            if (factor == 0) continue;
            for (std::size_t j = 0; j < n; ++j) {
                a(i, j) -= factor * a(k, j);
                inv(i, j) -= factor * inv(k, j);
            }
        }
    }
    return inv;
}

MVerdict m_verdict(const IntMatrix& m) {
    MVerdict v;
    const std::size_t n = m.size();

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j && m(i, j) > 0) {
                v.is_z = false;
                v.is_m = false;
                v.failure_witness = "positive off-diagonal entry " + to_string(m(i, j)) +
                                    " at (" + std::to_string(i) + ", " + std::to_string(j) + ")";
                return v;
            }
    v.is_z = true;

    RatMatrix inv(n);
    try {
        inv = invert_exact(m);
    } catch (const SingularError&) {
        v.is_m = false;
        v.failure_witness = "matrix is singular";
        return v;
    }

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (inv(i, j) < 0) {
                v.is_m = false;
                v.failure_witness = "inverse entry (" + std::to_string(i) + ", " +
                                    std::to_string(j) + ") = " + to_string(inv(i, j)) +
                                    " is negative";
                return v;
            }

    v.is_m = true;
    // x = M^{-1} 1 satisfies x >= 0 and Mx = 1 > 0.
    RatVec cert(n, Rat(0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) cert[i] += inv(i, j);
    v.certificate = std::move(cert);
    v.inverse = std::move(inv);
    return v;
}

std::optional<IntVec> equivalence_witness(const RatMatrix& l_inverse, const IntVec& f,
                                          const IntVec& g) {
    const std::size_t n = l_inverse.size();
    if (f.size() != n || g.size() != n)
        throw DimensionMismatchError("configuration length does not match matrix size");
    IntVec d(n);
    for (std::size_t i = 0; i < n; ++i) d[i] = g[i] - f[i];
    RatVec z = l_inverse.apply(d);
    IntVec w(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (denominator(z[i]) != 1) return std::nullopt;
        w[i] = numerator(z[i]);
    }
    return w;
}

std::optional<IntVec> equivalence_witness(const IntMatrix& l, const IntVec& f, const IntVec& g) {
    return equivalence_witness(invert_exact(l), f, g);
}

} // namespace chipfire
