#ifndef RANKBARRIERS_MATRIX_HPP
#define RANKBARRIERS_MATRIX_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "rankbarriers/errors.hpp"
#include "rankbarriers/scalars.hpp"

namespace rankbarriers {

// Dense row-major matrix over a single scalar kind.
template <typename T>
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t rows, std::size_t cols, const T& fill)
        : rows_(rows), cols_(cols), e_(rows * cols, fill) {}
    Matrix(std::size_t rows, std::size_t cols, std::vector<T> entries)
        : rows_(rows), cols_(cols), e_(std::move(entries)) {
        if (e_.size() != rows_ * cols_)
            throw ShapeError("matrix entry count does not match rows*cols");
    }

    static Matrix identity(std::size_t n, const T& one) {
        Matrix m(n, n, zero_like(one));
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = one;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const std::vector<T>& entries() const { return e_; }

    T& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const T& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
    }

    Matrix transposed() const {
        if (rows_ == 0 || cols_ == 0) return Matrix(cols_, rows_, e_);
        Matrix m(cols_, rows_, zero_like(e_[0]));
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
        return m;
    }

private:
    std::size_t rows_, cols_;
    std::vector<T> e_;
};

template <typename T>
std::vector<T> mat_vec(const Matrix<T>& m, const std::vector<T>& v) {
    if (v.size() != m.cols())
        throw ShapeError("matrix-vector size mismatch");
    std::vector<T> out;
    out.reserve(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        T acc = m.cols() ? zero_like(m.at(i, 0)) : T();
        for (std::size_t j = 0; j < m.cols(); ++j) {
            T term = m.at(i, j) * v[j];
            acc = acc + term;
        }
        out.push_back(acc);
    }
    return out;
}

namespace detail {

template <typename T>
struct Echelon {
    Matrix<T> m;
    std::vector<std::size_t> pivot_cols; // pivot i sits at row i, this column
};

// Fraction-free forward elimination (Bareiss).  Over the rationals each row
// is first scaled to integer entries so intermediate values stay integral
// minors; over a prime field the same update is exact trivially.
template <typename T>
Echelon<T> echelon(Matrix<T> m) {
    static_assert(is_field_v<T>,
                  "elimination requires a field scalar kind");
    if constexpr (std::is_same_v<T, Rational>) {
        for (std::size_t i = 0; i < m.rows(); ++i) {
            BigInt l(1);
            for (std::size_t j = 0; j < m.cols(); ++j) {
                BigInt den = m.at(i, j).get_den();
                BigInt g = gcd(l, den);
                l = l / g * den;
            }
            if (l != 1) {
                Rational scale(l);
                for (std::size_t j = 0; j < m.cols(); ++j) {
                    Rational v = m.at(i, j) * scale;
                    m.at(i, j) = v;
                }
            }
        }
    }
    Echelon<T> res{std::move(m), {}};
    Matrix<T>& a = res.m;
    std::size_t r = 0;
    T prev = a.rows() && a.cols() ? one_like(a.at(0, 0)) : T();
    for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
        std::size_t piv = r;
        while (piv < a.rows() && is_zero(a.at(piv, c))) ++piv;
        if (piv == a.rows()) continue;
        if (piv != r)
            for (std::size_t j = 0; j < a.cols(); ++j)
                std::swap(a.at(piv, j), a.at(r, j));
        for (std::size_t i = r + 1; i < a.rows(); ++i) {
            for (std::size_t j = c + 1; j < a.cols(); ++j) {
                T num = a.at(r, c) * a.at(i, j) - a.at(i, c) * a.at(r, j);
                a.at(i, j) = num / prev;
            }
            a.at(i, c) = zero_like(a.at(i, c));
        }
        prev = a.at(r, c);
        res.pivot_cols.push_back(c);
        ++r;
    }
    return res;
}

} // namespace detail

// Rank over an exact field.
template <typename T>
std::size_t mat_rank(const Matrix<T>& m) {
    if constexpr (!is_field_v<T>) {
        throw UnsupportedScalarError("rank requires a field scalar kind");
    } else {
        return detail::echelon(m).pivot_cols.size();
    }
}

// Basis of the right kernel {x : m x = 0}.  Canonical: one vector per free
// column, that free coordinate set to 1, remaining free coordinates 0.
template <typename T>
std::vector<std::vector<T>> mat_kernel(const Matrix<T>& m) {
    if constexpr (!is_field_v<T>) {
        throw UnsupportedScalarError("kernel requires a field scalar kind");
    } else {
        auto ech = detail::echelon(m);
        const auto& a = ech.m;
        const auto& pv = ech.pivot_cols;
        std::vector<bool> is_pivot(m.cols(), false);
        for (std::size_t c : pv) is_pivot[c] = true;
        std::vector<std::vector<T>> basis;
        T one = one_like(m.rows() && m.cols() ? m.at(0, 0) : T());
        if (m.cols() == 0) return basis;
        for (std::size_t f = 0; f < m.cols(); ++f) {
            if (is_pivot[f]) continue;
            std::vector<T> x(m.cols(), zero_like(one));
            x[f] = one;
            for (std::size_t k = pv.size(); k-- > 0;) {
                std::size_t pc = pv[k];
                T acc = zero_like(one);
                for (std::size_t j = pc + 1; j < m.cols(); ++j) {
                    T term = a.at(k, j) * x[j];
                    acc = acc + term;
                }
                x[pc] = (zero_like(one) - acc) / a.at(k, pc);
            }
            basis.push_back(std::move(x));
        }
        return basis;
    }
}

// One solution of m x = b (free coordinates pinned to 0), or nullopt when
// the system is inconsistent.
template <typename T>
std::optional<std::vector<T>> mat_solve(const Matrix<T>& m,
                                        const std::vector<T>& b) {
    if constexpr (!is_field_v<T>) {
        throw UnsupportedScalarError("solve requires a field scalar kind");
    } else {
        if (b.size() != m.rows())
            throw ShapeError("right-hand side length does not match rows");
        T one = one_like(m.rows() && m.cols() ? m.at(0, 0)
                                              : (b.empty() ? T() : b[0]));
        Matrix<T> aug(m.rows(), m.cols() + 1, zero_like(one));
        for (std::size_t i = 0; i < m.rows(); ++i) {
            for (std::size_t j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
            aug.at(i, m.cols()) = b[i];
        }
        auto ech = detail::echelon(std::move(aug));
        const auto& a = ech.m;
        const auto& pv = ech.pivot_cols;
        if (!pv.empty() && pv.back() == m.cols()) return std::nullopt;
        std::vector<T> x(m.cols(), zero_like(one));
        for (std::size_t k = pv.size(); k-- > 0;) {
            std::size_t pc = pv[k];
            T acc = a.at(k, m.cols());
            for (std::size_t j = pc + 1; j < m.cols(); ++j) {
                T term = a.at(k, j) * x[j];
                acc = acc - term;
            }
            x[pc] = acc / a.at(k, pc);
        }
        return x;
    }
}

// Entry-wise reduction mod p.
Matrix<Fp> matrix_mod(const Matrix<Rational>& m, std::uint64_t p);

} // namespace rankbarriers

#endif
