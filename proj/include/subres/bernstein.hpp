#pragma once

// The Bernstein-basis form of the subresultant of (x-alpha)^m and (x-beta)^n:
// a sign, a power of (alpha-beta), and the integer coefficients q_0..q_d of
// the basis {(x-alpha)^j (x-beta)^(d-j)}.

#include "subres/polynomial.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace subres {

template <CoefficientDomain D>
struct BernsteinSubresultant {
    D dom;
    unsigned m = 0, n = 0, d = 0;
    typename D::Element alpha, beta;
    int sign = 1;          // (-1)^binom(d,2)
    unsigned exponent = 0; // (m-d)(n-d)
    std::vector<Integer> q;

    BernsteinSubresultant(D dom_, unsigned m_, unsigned n_, unsigned d_,
                          typename D::Element alpha_, typename D::Element beta_, int sign_,
                          unsigned exponent_, std::vector<Integer> q_)
        : dom(std::move(dom_)), m(m_), n(n_), d(d_), alpha(std::move(alpha_)),
          beta(std::move(beta_)), sign(sign_), exponent(exponent_), q(std::move(q_)) {
        if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +1 or -1");
        if (q.size() != static_cast<std::size_t>(d) + 1)
            throw std::invalid_argument("q must have d+1 entries");
        if (exponent != (m - d) * (n - d))
            throw std::invalid_argument("exponent must equal (m-d)(n-d)");
    }

    unsigned c() const { return m + n - 2 * d - 1; }
};

// Monomial-basis polynomial sign * (alpha-beta)^exponent *
// sum_j q_j (x-alpha)^j (x-beta)^(d-j), with the integer q_j mapped into the
// domain through its characteristic.
template <CoefficientDomain D>
Polynomial<D> bernstein_expand(const BernsteinSubresultant<D>& b) {
    const D& dom = b.dom;
    Polynomial<D> sum(dom);
    for (unsigned j = 0; j <= b.d; ++j) {
        Polynomial<D> term = scale(power_of_linear(dom, b.alpha, j) *
                                       power_of_linear(dom, b.beta, b.d - j),
                                   dom.from_integer(b.q[j]));
        sum = sum + term;
    }
    typename D::Element pre = element_pow(dom, dom.sub(b.alpha, b.beta), b.exponent);
    if (b.sign < 0) pre = dom.negate(pre);
    return scale(sum, pre);
}

} // namespace subres
