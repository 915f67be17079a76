#ifndef RANKBARRIERS_TENSOR_HPP
#define RANKBARRIERS_TENSOR_HPP

#include <cstdint>
#include <map>
#include <vector>

#include "rankbarriers/errors.hpp"
#include "rankbarriers/grading.hpp"
#include "rankbarriers/matrix.hpp"
#include "rankbarriers/scalars.hpp"

namespace rankbarriers {

// Row-major flat index of a multi-index (last position varies fastest).
inline std::size_t flat_index(const std::vector<std::size_t>& dims,
                              const std::vector<std::size_t>& idx) {
    if (idx.size() != dims.size()) throw ShapeError("multi-index arity mismatch");
    std::size_t f = 0;
    for (std::size_t j = 0; j < dims.size(); ++j) {
        if (idx[j] >= dims[j]) throw ShapeError("multi-index out of range");
        f = f * dims[j] + idx[j];
    }
    return f;
}

inline std::vector<std::size_t> multi_index(const std::vector<std::size_t>& dims,
                                            std::size_t flat) {
    std::vector<std::size_t> idx(dims.size(), 0);
    for (std::size_t j = dims.size(); j-- > 0;) {
        idx[j] = flat % dims[j];
        flat /= dims[j];
    }
    return idx;
}

// Advance a multi-index in row-major order; false once exhausted.
inline bool next_multi(const std::vector<std::size_t>& dims,
                       std::vector<std::size_t>& idx) {
    for (std::size_t j = dims.size(); j-- > 0;) {
        if (++idx[j] < dims[j]) return true;
        idx[j] = 0;
    }
    return false;
}

// Dense tensor of arbitrary order over one scalar kind.  Entries are stored
// flat in row-major order.
template <typename T>
class Tensor {
public:
    Tensor() = default;
    Tensor(std::vector<std::size_t> dims, const T& fill)
        : dims_(std::move(dims)), e_(checked_size(dims_), fill) {}
    Tensor(std::vector<std::size_t> dims, std::vector<T> entries)
        : dims_(std::move(dims)), e_(std::move(entries)) {
        if (e_.size() != checked_size(dims_))
            throw ShapeError("tensor entry count does not match dims");
    }

    const std::vector<std::size_t>& dims() const { return dims_; }
    std::size_t order() const { return dims_.size(); }
    std::size_t size() const { return e_.size(); }
    const std::vector<T>& entries() const { return e_; }
    std::vector<T>& entries() { return e_; }

    const T& at(const std::vector<std::size_t>& idx) const {
        return e_[flat_index(dims_, idx)];
    }
    T& at(const std::vector<std::size_t>& idx) {
        return e_[flat_index(dims_, idx)];
    }

    bool operator==(const Tensor& o) const {
        return dims_ == o.dims_ && e_ == o.e_;
    }
    bool operator!=(const Tensor& o) const { return !(*this == o); }

    Tensor operator+(const Tensor& o) const {
        if (dims_ != o.dims_) throw ShapeError("tensor addition shape mismatch");
        Tensor r(*this);
        for (std::size_t i = 0; i < e_.size(); ++i) {
            T s = r.e_[i] + o.e_[i];
            r.e_[i] = s;
        }
        return r;
    }
    Tensor operator-(const Tensor& o) const {
        if (dims_ != o.dims_) throw ShapeError("tensor subtraction shape mismatch");
        Tensor r(*this);
        for (std::size_t i = 0; i < e_.size(); ++i) {
            T s = r.e_[i] - o.e_[i];
            r.e_[i] = s;
        }
        return r;
    }
    Tensor scaled(const T& c) const {
        Tensor r(*this);
        for (auto& x : r.e_) {
            T s = x * c;
            x = s;
        }
        return r;
    }

    bool is_zero() const {
        for (const auto& x : e_)
            if (!rankbarriers::is_zero(x)) return false;
        return true;
    }

private:
    static std::size_t checked_size(const std::vector<std::size_t>& dims) {
        if (dims.empty()) throw ShapeError("tensor needs at least one factor");
        std::size_t s = 1;
        for (auto d : dims) {
            if (d == 0) throw ShapeError("tensor dimension must be positive");
            if (s > (std::size_t(1) << 28) / d)
                throw SizeError("tensor too large");
            s *= d;
        }
        return s;
    }

    std::vector<std::size_t> dims_;
    std::vector<T> e_;
};

// Outer product of the given factor vectors.
template <typename T>
Tensor<T> simple_tensor(const std::vector<std::vector<T>>& factors) {
    if (factors.empty()) throw ShapeError("simple tensor needs >= 1 factor");
    std::vector<std::size_t> dims;
    for (const auto& f : factors) {
        if (f.empty()) throw ShapeError("simple tensor factor must be nonempty");
        dims.push_back(f.size());
    }
    Tensor<T> t(dims, zero_like(factors[0][0]));
    std::vector<std::size_t> idx(dims.size(), 0);
    std::size_t flat = 0;
    do {
        T prod = factors[0][idx[0]];
        for (std::size_t j = 1; j < factors.size(); ++j) {
            T p = prod * factors[j][idx[j]];
            prod = p;
        }
        t.entries()[flat++] = prod;
    } while (next_multi(dims, idx));
    return t;
}

// Matrix of the flattening that groups the given positions (0-based,
// strictly ascending) on the rows and the complement on the columns.
template <typename T>
Matrix<T> flatten(const Tensor<T>& t, const std::vector<std::size_t>& left) {
    const std::size_t d = t.order();
    std::vector<bool> in_left(d, false);
    for (std::size_t i = 0; i < left.size(); ++i) {
        if (left[i] >= d) throw ShapeError("flattening position out of range");
        if (i > 0 && left[i] <= left[i - 1])
            throw ShapeError("flattening positions must be strictly ascending");
        in_left[left[i]] = true;
    }
    if (left.empty() || left.size() == d)
        throw DomainError("flattening needs a nonempty proper subset of positions");
    std::size_t rows = 1, cols = 1;
    for (std::size_t j = 0; j < d; ++j)
        (in_left[j] ? rows : cols) *= t.dims()[j];
    Matrix<T> m(rows, cols, zero_like(t.entries()[0]));
    std::vector<std::size_t> idx(d, 0);
    std::size_t flat = 0;
    do {
        std::size_t r = 0, c = 0;
        for (std::size_t j = 0; j < d; ++j) {
            if (in_left[j])
                r = r * t.dims()[j] + idx[j];
            else
                c = c * t.dims()[j] + idx[j];
        }
        m.at(r, c) = t.entries()[flat++];
    } while (next_multi(t.dims(), idx));
    return m;
}

// Regroup positions into k blocks; block b of the result indexes the
// positions listed in parts[b] (row-major within the block, in listed
// order).  parts must partition {0..d-1} into nonempty blocks.
template <typename T>
Tensor<T> group(const Tensor<T>& t,
                const std::vector<std::vector<std::uint32_t>>& parts) {
    const std::size_t d = t.order();
    std::vector<bool> seen(d, false);
    for (const auto& blk : parts) {
        if (blk.empty()) throw DomainError("grouping blocks must be nonempty");
        for (auto p : blk) {
            if (p >= d) throw ShapeError("grouping position out of range");
            if (seen[p]) throw DomainError("grouping blocks must be disjoint");
            seen[p] = true;
        }
    }
    for (bool s : seen)
        if (!s) throw DomainError("grouping blocks must cover every position");
    std::vector<std::size_t> new_dims;
    for (const auto& blk : parts) {
        std::size_t dim = 1;
        for (auto p : blk) dim *= t.dims()[p];
        new_dims.push_back(dim);
    }
    Tensor<T> out(new_dims, zero_like(t.entries()[0]));
    std::vector<std::size_t> idx(d, 0);
    std::size_t flat = 0;
    do {
        std::vector<std::size_t> nidx(parts.size(), 0);
        for (std::size_t b = 0; b < parts.size(); ++b)
            for (auto p : parts[b]) nidx[b] = nidx[b] * t.dims()[p] + idx[p];
        out.at(nidx) = t.entries()[flat++];
    } while (next_multi(t.dims(), idx));
    return out;
}

// Homogeneous polynomial of fixed total degree with zero coefficients
// omitted; exponent vectors are full length n.
template <typename T>
class HomogPoly {
public:
    HomogPoly(std::size_t n, std::size_t d) : n_(n), d_(d) {
        if (n == 0) throw ShapeError("polynomial needs >= 1 variable");
    }

    std::size_t n() const { return n_; }
    std::size_t d() const { return d_; }
    const std::map<std::vector<std::uint32_t>, T>& terms() const {
        return terms_;
    }

    void check_exp(const std::vector<std::uint32_t>& e) const {
        if (e.size() != n_) throw ShapeError("exponent vector length mismatch");
        std::uint64_t s = 0;
        for (auto x : e) s += x;
        if (s != d_) throw DomainError("exponent vector has wrong total degree");
    }

    void set_coeff(const std::vector<std::uint32_t>& e, const T& c) {
        check_exp(e);
        if (rankbarriers::is_zero(c))
            terms_.erase(e);
        else
            terms_[e] = c;
    }
    void add_coeff(const std::vector<std::uint32_t>& e, const T& c) {
        check_exp(e);
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            if (!rankbarriers::is_zero(c)) terms_[e] = c;
            return;
        }
        T s = it->second + c;
        if (rankbarriers::is_zero(s))
            terms_.erase(it);
        else
            it->second = s;
    }
    // `zero` supplies the scalar shape for absent coefficients (prime-field
    // scalars carry their modulus).
    T coeff(const std::vector<std::uint32_t>& e, const T& zero = T()) const {
        check_exp(e);
        auto it = terms_.find(e);
        if (it == terms_.end()) return zero;
        return it->second;
    }

    bool is_zero() const { return terms_.empty(); }

    HomogPoly operator+(const HomogPoly& o) const {
        if (n_ != o.n_ || d_ != o.d_)
            throw ShapeError("polynomial addition shape mismatch");
        HomogPoly r(*this);
        for (const auto& [e, c] : o.terms_) r.add_coeff(e, c);
        return r;
    }
    HomogPoly operator-(const HomogPoly& o) const {
        if (n_ != o.n_ || d_ != o.d_)
            throw ShapeError("polynomial subtraction shape mismatch");
        HomogPoly r(*this);
        for (const auto& [e, c] : o.terms_) {
            T neg = zero_like(c) - c;
            r.add_coeff(e, neg);
        }
        return r;
    }
    HomogPoly scaled(const T& c) const {
        HomogPoly r(n_, d_);
        for (const auto& [e, v] : terms_) {
            T s = v * c;
            r.set_coeff(e, s);
        }
        return r;
    }
    // Product; total degrees add.
    HomogPoly operator*(const HomogPoly& o) const {
        if (n_ != o.n_) throw ShapeError("polynomial product variable mismatch");
        HomogPoly r(n_, d_ + o.d_);
        for (const auto& [e1, c1] : terms_)
            for (const auto& [e2, c2] : o.terms_) {
                std::vector<std::uint32_t> e(n_);
                for (std::size_t i = 0; i < n_; ++i) e[i] = e1[i] + e2[i];
                T prod = c1 * c2;
                r.add_coeff(e, prod);
            }
        return r;
    }

    bool operator==(const HomogPoly& o) const {
        return n_ == o.n_ && d_ == o.d_ && terms_ == o.terms_;
    }
    bool operator!=(const HomogPoly& o) const { return !(*this == o); }

private:
    std::size_t n_, d_;
    std::map<std::vector<std::uint32_t>, T> terms_;
};

} // namespace rankbarriers

#endif
