#pragma once

// Exact dense matrices over an integral domain, fraction-free (Bareiss)
// determinants, and the binomial Hankel matrix H(m,n,d) with its maximal
// minors q_0..q_d.

#include "subres/combinatorics.hpp"
#include "subres/domains.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace subres {

template <CoefficientDomain D>
class ExactMatrix {
public:
    using Element = typename D::Element;

    ExactMatrix(D dom, std::size_t rows, std::size_t cols)
        : dom_(std::move(dom)), rows_(rows), cols_(cols), e_(rows * cols, dom_.zero()) {}

    const D& domain() const { return dom_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    const Element& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }
    Element& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }

private:
    D dom_;
    std::size_t rows_, cols_;
    std::vector<Element> e_;
};

namespace detail {

// Fraction-free elimination of the leading `steps` columns of the row-major
// working array `w` (rows x cols), with row swaps on zero pivots. Returns the
// swap sign, or 0 if some pivot column vanishes below the diagonal (every
// determinant drawn from these columns is then zero).
template <CoefficientDomain D>
int bareiss_eliminate(const D& dom, std::vector<typename D::Element>& w,
                      std::size_t rows, std::size_t cols, std::size_t steps) {
    int sign = 1;
    typename D::Element prev = dom.one();
    for (std::size_t k = 0; k < steps; ++k) {
        if (dom.is_zero(w[k * cols + k])) {
            std::size_t piv = k + 1;
            while (piv < rows && dom.is_zero(w[piv * cols + k])) ++piv;
            if (piv == rows) return 0;
            for (std::size_t j = 0; j < cols; ++j)
                std::swap(w[k * cols + j], w[piv * cols + j]);
            sign = -sign;
        }
        const typename D::Element& pivot = w[k * cols + k];
        for (std::size_t i = k + 1; i < rows; ++i) {
            for (std::size_t j = k + 1; j < cols; ++j) {
                // Sylvester's identity makes this division exact
                w[i * cols + j] = dom.exact_div(
                    dom.sub(dom.mul(w[i * cols + j], pivot),
                            dom.mul(w[i * cols + k], w[k * cols + j])),
                    prev);
            }
            w[i * cols + k] = dom.zero();
        }
        prev = pivot;
    }
    return sign;
}

} // namespace detail

// Exact determinant; the 0x0 determinant is 1.
template <CoefficientDomain D>
typename D::Element bareiss_det(const ExactMatrix<D>& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
    const D& dom = m.domain();
    std::size_t n = m.rows();
    if (n == 0) return dom.one();
    std::vector<typename D::Element> w;
    w.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) w.push_back(m.at(i, j));
    int sign = detail::bareiss_eliminate(dom, w, n, n, n - 1);
    if (sign == 0) return dom.zero();
    typename D::Element det = w[(n - 1) * n + (n - 1)];
    return sign < 0 ? dom.negate(det) : det;
}

// Determinants of [prefix | c] for every column c of `columns`, sharing one
// fraction-free elimination of the common prefix. `prefix` is s x (s-1),
// `columns` is s x t; the result has one determinant per column of `columns`.
template <CoefficientDomain D>
std::vector<typename D::Element> bareiss_det_columns(const ExactMatrix<D>& prefix,
                                                     const ExactMatrix<D>& columns) {
    if (!(prefix.domain() == columns.domain()))
        throw std::invalid_argument("matrix domain mismatch");
    if (prefix.rows() != prefix.cols() + 1 || columns.rows() != prefix.rows())
        throw std::invalid_argument("prefix must be s x (s-1) with matching column height");
    const D& dom = prefix.domain();
    std::size_t s = prefix.rows();
    std::size_t t = columns.cols();
    std::size_t cols = (s - 1) + t;
    std::vector<typename D::Element> w;
    w.reserve(s * cols);
    for (std::size_t i = 0; i < s; ++i) {
        for (std::size_t j = 0; j + 1 < s; ++j) w.push_back(prefix.at(i, j));
        for (std::size_t j = 0; j < t; ++j) w.push_back(columns.at(i, j));
    }
    int sign = detail::bareiss_eliminate(dom, w, s, cols, s - 1);
    std::vector<typename D::Element> out;
    out.reserve(t);
    for (std::size_t j = 0; j < t; ++j) {
        if (sign == 0) {
            out.push_back(dom.zero());
        } else {
            // after s-1 steps, entry (s-1, s-1+j) is det[prefix | column j]
            typename D::Element v = w[(s - 1) * cols + (s - 1) + j];
            out.push_back(sign < 0 ? dom.negate(v) : v);
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// H(m,n,d)

// Parameters of the d x (d+1) Hankel matrix with entries binomial(c, m-i-j),
// c = m+n-2d-1. Valid for 0 <= d < min(m,n), and also d = min(m,n) when the
// degrees differ (the rectangular setup makes sense there even though the
// closed-form subresultant is only claimed below the minimum).
struct HankelSpec {
    unsigned m = 0, n = 0, d = 0;

    HankelSpec(unsigned m_, unsigned n_, unsigned d_) : m(m_), n(n_), d(d_) {
        unsigned lo = std::min(m, n);
        bool ok = (m >= 1 && n >= 1) && (d < lo || (d == lo && m != n));
        if (!ok)
            throw std::invalid_argument("invalid Hankel parameters (m,n,d) = (" +
                                        std::to_string(m) + "," + std::to_string(n) + "," +
                                        std::to_string(d) + ")");
    }

    unsigned c() const { return m + n - 2 * d - 1; }
};

// Entry (i,j) = binomial(c, m-i-j) for 1 <= i <= d, 0 <= j <= d.
inline ExactMatrix<IntegerRing> hankel_matrix(const HankelSpec& spec) {
    ExactMatrix<IntegerRing> h(IntegerRing{}, spec.d, spec.d + 1);
    long long c = spec.c();
    for (unsigned i = 1; i <= spec.d; ++i)
        for (unsigned j = 0; j <= spec.d; ++j)
            h.at(i - 1, j) = binomial(c, static_cast<long long>(spec.m) - i - j);
    return h;
}

// (q_0, ..., q_d): q_j is the determinant of H with its (j+1)-th column
// deleted. Each minor is an independent Bareiss determinant.
inline std::vector<Integer> maximal_minors(const HankelSpec& spec) {
    ExactMatrix<IntegerRing> h = hankel_matrix(spec);
    std::vector<Integer> q;
    q.reserve(spec.d + 1);
    for (unsigned j = 0; j <= spec.d; ++j) {
        ExactMatrix<IntegerRing> sub(IntegerRing{}, spec.d, spec.d);
        for (unsigned i = 0; i < spec.d; ++i) {
            unsigned col = 0;
            for (unsigned jj = 0; jj <= spec.d; ++jj) {
                if (jj == j) continue;
                sub.at(i, col++) = h.at(i, jj);
            }
        }
        q.push_back(bareiss_det(sub));
    }
    return q;
}

} // namespace subres
