#pragma once

// The ground-truth side of the library: order-d subresultants straight from
// the determinantal definition, principal subresultants, and Sylvester double
// sums for square-free inputs together with Sylvester's identity
//
//   binom(d,p) * Sres_d(f,g) = (-1)^(p(m-d)) * Syl_{p,q}(A,B),   d = p+q.
//
// Sres_d(f,g) is assembled coefficient by coefficient: the matrix of the
// defining determinant has m+n-2d-1 scalar columns and one polynomial column,
// and the coefficient of x^k is the determinant with the polynomial column
// replaced by its coefficient-of-x^k column. All d+1 determinants share the
// scalar prefix, so they are computed by one fraction-free elimination pass.

#include "subres/matrix.hpp"
#include "subres/polynomial.hpp"
#include "subres/report.hpp"

#include <chrono>
#include <stdexcept>
#include <string>
#include <vector>

namespace subres {

namespace detail {

template <CoefficientDomain D>
void check_subres_input(const Polynomial<D>& f, const Polynomial<D>& g, unsigned d) {
    if (f.degree() < 1 || g.degree() < 1)
        throw std::invalid_argument("subresultant requires deg f >= 1 and deg g >= 1");
    unsigned m = static_cast<unsigned>(f.degree());
    unsigned n = static_cast<unsigned>(g.degree());
    if (d >= std::min(m, n))
        throw std::invalid_argument("subresultant order d must satisfy d < min(deg f, deg g)");
}

} // namespace detail

// Order-d subresultant of f and g from the defining determinant. Works over
// any domain with exact division (fields, Z, GF(p)[t], ...).
template <CoefficientDomain D>
Polynomial<D> subresultant_det(const Polynomial<D>& f, const Polynomial<D>& g, unsigned d) {
    detail::check_subres_input(f, g, d);
    const D& dom = detail::common_domain(f, g);
    unsigned m = static_cast<unsigned>(f.degree());
    unsigned n = static_cast<unsigned>(g.degree());
    unsigned s = m + n - 2 * d; // matrix size; n-d rows of f, m-d rows of g

    ExactMatrix<D> prefix(dom, s, s - 1);
    for (unsigned i = 1; i <= n - d; ++i)
        for (unsigned j = 1; j < s; ++j)
            prefix.at(i - 1, j - 1) = f.coeff(static_cast<int>(m + i) - static_cast<int>(j));
    for (unsigned i = 1; i <= m - d; ++i)
        for (unsigned j = 1; j < s; ++j)
            prefix.at(n - d + i - 1, j - 1) = g.coeff(static_cast<int>(n + i) - static_cast<int>(j));

    // column k holds the coefficients of x^k of x^(n-d-i)f and x^(m-d-i)g
    ExactMatrix<D> columns(dom, s, d + 1);
    for (unsigned k = 0; k <= d; ++k) {
        for (unsigned i = 1; i <= n - d; ++i)
            columns.at(i - 1, k) = f.coeff(static_cast<int>(k) - static_cast<int>(n - d - i));
        for (unsigned i = 1; i <= m - d; ++i)
            columns.at(n - d + i - 1, k) = g.coeff(static_cast<int>(k) - static_cast<int>(m - d - i));
    }

    std::vector<typename D::Element> dets = bareiss_det_columns(prefix, columns);
    return Polynomial<D>(dom, std::move(dets));
}

// Coefficient of x^d in Sres_d(f,g); zero exactly when the degree drops.
template <CoefficientDomain D>
typename D::Element principal_subresultant(const Polynomial<D>& f, const Polynomial<D>& g,
                                           unsigned d) {
    return subresultant_det(f, g, d).coeff(static_cast<int>(d));
}

// ---------------------------------------------------------------------------
// Sylvester double sums

namespace detail {

// R(Y,Z) = prod_{y in Y} prod_{z in Z} (y - z); empty products are 1.
template <FieldDomain D>
typename D::Element root_product(const D& dom, const std::vector<typename D::Element>& y,
                                 const std::vector<typename D::Element>& z) {
    typename D::Element r = dom.one();
    for (const auto& a : y)
        for (const auto& b : z) r = dom.mul(r, dom.sub(a, b));
    return r;
}

template <FieldDomain D>
void check_distinct(const D& dom, const std::vector<typename D::Element>& roots,
                    const char* which) {
    for (std::size_t i = 0; i < roots.size(); ++i)
        for (std::size_t j = i + 1; j < roots.size(); ++j)
            if (dom.equal(roots[i], roots[j]))
                throw std::domain_error(std::string("repeated root in ") + which);
}

// first/next size-k index combination in lexicographic (ranked) order
inline std::vector<std::size_t> first_combination(std::size_t k) {
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    return idx;
}

inline bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
    std::size_t k = idx.size();
    for (std::size_t i = k; i-- > 0;) {
        if (idx[i] < n - k + i) {
            ++idx[i];
            for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
            return true;
        }
    }
    return false;
}

template <typename T>
void split_by_indices(const std::vector<T>& all, const std::vector<std::size_t>& idx,
                      std::vector<T>& chosen, std::vector<T>& rest) {
    chosen.clear();
    rest.clear();
    std::size_t next = 0;
    for (std::size_t i = 0; i < all.size(); ++i) {
        if (next < idx.size() && idx[next] == i) {
            chosen.push_back(all[i]);
            ++next;
        } else {
            rest.push_back(all[i]);
        }
    }
}

} // namespace detail

// Syl_{p,q}(A,B)(x): the double sum over subsets A' of A with |A'| = p and
// B' of B with |B'| = q of
//
//   R(A',B') R(A\A', B\B') / (R(A', A\A') R(B', B\B')) * R(x,A') R(x,B').
//
// Roots must be pairwise distinct within A and within B.
template <FieldDomain D>
Polynomial<D> sylvester_double_sum(const D& dom, const std::vector<typename D::Element>& a,
                                   const std::vector<typename D::Element>& b, unsigned p,
                                   unsigned q) {
    if (p > a.size() || q > b.size())
        throw std::invalid_argument("double sum requires p <= |A| and q <= |B|");
    detail::check_distinct(dom, a, "A");
    detail::check_distinct(dom, b, "B");

    using Elem = typename D::Element;
    Polynomial<D> sum(dom);
    std::vector<Elem> a_in, a_out, b_in, b_out;

    auto a_idx = detail::first_combination(p);
    do {
        detail::split_by_indices(a, a_idx, a_in, a_out);
        auto b_idx = detail::first_combination(q);
        do {
            detail::split_by_indices(b, b_idx, b_in, b_out);
            Elem num = dom.mul(detail::root_product(dom, a_in, b_in),
                               detail::root_product(dom, a_out, b_out));
            Elem den = dom.mul(detail::root_product(dom, a_in, a_out),
                               detail::root_product(dom, b_in, b_out));
            Elem coeff = dom.exact_div(num, den);
            Polynomial<D> term = Polynomial<D>::constant(dom, coeff);
            for (const auto& r : a_in) term = term * power_of_linear(dom, r, 1);
            for (const auto& r : b_in) term = term * power_of_linear(dom, r, 1);
            sum = sum + term;
        } while (detail::next_combination(b_idx, b.size()));
    } while (detail::next_combination(a_idx, a.size()));
    return sum;
}

// Sylvester's identity between the order-(p+q) subresultant of the monic
// square-free polynomials with roots A and B and the double sum Syl_{p,q}.
template <FieldDomain D>
VerificationReport check_sylvester_identity(const D& dom,
                                            const std::vector<typename D::Element>& a,
                                            const std::vector<typename D::Element>& b,
                                            unsigned p, unsigned q) {
    auto t0 = std::chrono::steady_clock::now();
    unsigned d = p + q;
    unsigned m = static_cast<unsigned>(a.size());
    if (d >= std::min(a.size(), b.size()))
        throw std::invalid_argument("identity requires p + q < min(|A|, |B|)");

    Polynomial<D> f = Polynomial<D>::constant(dom, dom.one());
    for (const auto& r : a) f = f * power_of_linear(dom, r, 1);
    Polynomial<D> g = Polynomial<D>::constant(dom, dom.one());
    for (const auto& r : b) g = g * power_of_linear(dom, r, 1);

    Polynomial<D> lhs = scale(subresultant_det(f, g, d), dom.from_integer(binomial(d, p)));
    Polynomial<D> syl = sylvester_double_sum(dom, a, b, p, q);
    bool flip = (static_cast<unsigned long long>(p) * (m - d)) % 2 == 1;
    Polynomial<D> rhs = flip ? -syl : syl;

    VerificationReport rep;
    rep.subject = "sylvester-identity";
    {
        std::string in = "A={";
        for (std::size_t i = 0; i < a.size(); ++i) in += (i ? "," : "") + dom.to_string(a[i]);
        in += "}, B={";
        for (std::size_t i = 0; i < b.size(); ++i) in += (i ? "," : "") + dom.to_string(b[i]);
        in += "}, p=" + std::to_string(p) + ", q=" + std::to_string(q);
        rep.inputs = in;
    }
    rep.lhs = poly_to_string(lhs);
    rep.rhs = poly_to_string(rhs);
    rep.pass = (lhs == rhs);
    rep.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

} // namespace subres
