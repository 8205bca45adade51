#ifndef CHIPFIRE_MATRIX_HPP
#define CHIPFIRE_MATRIX_HPP

#include <chipfire/errors.hpp>
#include <chipfire/numeric.hpp>

#include <cstddef>
#include <initializer_list>
#include <vector>

namespace chipfire {

// Square matrix of arbitrary-precision integers, row-major.
class IntMatrix {
public:
    explicit IntMatrix(std::size_t n) : n_(n), entries_(n * n, Int(0)) {
        if (n == 0) throw DimensionMismatchError("matrix dimension must be at least 1");
    }

    IntMatrix(std::initializer_list<std::initializer_list<long long>> rows)
        : IntMatrix(rows.size()) {
        std::size_t i = 0;
        for (const auto& row : rows) {
            if (row.size() != n_) throw DimensionMismatchError("matrix rows must all have length n");
            std::size_t j = 0;
            for (long long v : row) entries_[i * n_ + j++] = v;
            ++i;
        }
    }

    explicit IntMatrix(const std::vector<IntVec>& rows) : IntMatrix(rows.size()) {
        for (std::size_t i = 0; i < n_; ++i) {
            if (rows[i].size() != n_) throw DimensionMismatchError("matrix rows must all have length n");
            for (std::size_t j = 0; j < n_; ++j) entries_[i * n_ + j] = rows[i][j];
        }
    }

    static IntMatrix identity(std::size_t n) {
        IntMatrix m(n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    std::size_t size() const noexcept { return n_; }

    Int& operator()(std::size_t i, std::size_t j) { return entries_[i * n_ + j]; }
    const Int& operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }

    IntMatrix transpose() const {
        IntMatrix t(n_);
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    IntVec column(std::size_t j) const {
        IntVec c(n_);
        for (std::size_t i = 0; i < n_; ++i) c[i] = (*this)(i, j);
        return c;
    }

    IntVec row(std::size_t i) const {
        IntVec r(n_);
        for (std::size_t j = 0; j < n_; ++j) r[j] = (*this)(i, j);
        return r;
    }

    // Matrix-vector product M v.
    IntVec apply(const IntVec& v) const {
        if (v.size() != n_) throw DimensionMismatchError();
        IntVec r(n_, Int(0));
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j) r[i] += (*this)(i, j) * v[j];
        return r;
    }

    friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
        return a.n_ == b.n_ && a.entries_ == b.entries_;
    }

private:
    std::size_t n_;
    std::vector<Int> entries_;
};

// Square matrix of exact rationals in lowest terms (the scalar type keeps
// entries canonical on every operation).
class RatMatrix {
public:
    explicit RatMatrix(std::size_t n) : n_(n), entries_(n * n, Rat(0)) {
        if (n == 0) throw DimensionMismatchError("matrix dimension must be at least 1");
    }

    explicit RatMatrix(const IntMatrix& m) : RatMatrix(m.size()) {
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j) (*this)(i, j) = Rat(m(i, j));
    }

    static RatMatrix identity(std::size_t n) {
        RatMatrix m(n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    std::size_t size() const noexcept { return n_; }

    Rat& operator()(std::size_t i, std::size_t j) { return entries_[i * n_ + j]; }
    const Rat& operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }

    RatMatrix transpose() const {
        RatMatrix t(n_);
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    RatVec apply(const IntVec& v) const {
        if (v.size() != n_) throw DimensionMismatchError();
        RatVec r(n_, Rat(0));
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j) r[i] += (*this)(i, j) * Rat(v[j]);
        return r;
    }

    RatVec apply(const RatVec& v) const {
        if (v.size() != n_) throw DimensionMismatchError();
        RatVec r(n_, Rat(0));
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j) r[i] += (*this)(i, j) * v[j];
        return r;
    }

    friend bool operator==(const RatMatrix& a, const RatMatrix& b) {
        return a.n_ == b.n_ && a.entries_ == b.entries_;
    }

    bool all_nonnegative() const {
        for (const Rat& q : entries_) {
            if (q < 0) return false;
        }
        return true;
    }

private:
    std::size_t n_;
    std::vector<Rat> entries_;
};

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);
RatMatrix multiply(const IntMatrix& a, const RatMatrix& b);

} // namespace chipfire

#endif
