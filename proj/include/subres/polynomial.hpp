#pragma once

// Dense univariate polynomials over a CoefficientDomain, in ascending
// coefficient order with structural trailing-zero trimming (the leading
// coefficient of a nonzero polynomial is never zero). PolynomialRing makes
// Polynomial<D> itself a CoefficientDomain, which is how nested domains such
// as GF(p)[t] enter the library.

#include "subres/combinatorics.hpp"
#include "subres/domains.hpp"

#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace subres {

template <CoefficientDomain D>
class Polynomial {
public:
    using Element = typename D::Element;

    explicit Polynomial(D dom) : dom_(std::move(dom)) {}

    Polynomial(D dom, std::vector<Element> coeffs)
        : dom_(std::move(dom)), coeffs_(std::move(coeffs)) {
        trim();
    }

    static Polynomial constant(D dom, Element c) {
        std::vector<Element> v;
        v.push_back(std::move(c));
        return Polynomial(std::move(dom), std::move(v));
    }

    // The indeterminate x.
    static Polynomial variable(D dom) {
        std::vector<Element> v{dom.zero(), dom.one()};
        return Polynomial(std::move(dom), std::move(v));
    }

    const D& domain() const { return dom_; }

    // -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }

    Element coeff(int k) const {
        if (k < 0 || k >= static_cast<int>(coeffs_.size())) return dom_.zero();
        return coeffs_[static_cast<std::size_t>(k)];
    }

    const Element& leading() const {
        if (coeffs_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
        return coeffs_.back();
    }

    const std::vector<Element>& coefficients() const { return coeffs_; }

private:
    void trim() {
        while (!coeffs_.empty() && dom_.is_zero(coeffs_.back())) coeffs_.pop_back();
    }

    D dom_;
    std::vector<Element> coeffs_;
};

namespace detail {

template <CoefficientDomain D>
const D& common_domain(const Polynomial<D>& a, const Polynomial<D>& b) {
    if (!(a.domain() == b.domain()))
        throw std::invalid_argument("polynomial domain mismatch");
    return a.domain();
}

} // namespace detail

template <CoefficientDomain D>
bool operator==(const Polynomial<D>& a, const Polynomial<D>& b) {
    const D& dom = detail::common_domain(a, b);
    if (a.degree() != b.degree()) return false;
    for (int k = 0; k <= a.degree(); ++k)
        if (!dom.equal(a.coeff(k), b.coeff(k))) return false;
    return true;
}

template <CoefficientDomain D>
Polynomial<D> operator+(const Polynomial<D>& a, const Polynomial<D>& b) {
    const D& dom = detail::common_domain(a, b);
    int n = std::max(a.degree(), b.degree());
    std::vector<typename D::Element> out;
    out.reserve(static_cast<std::size_t>(n + 1));
    for (int k = 0; k <= n; ++k) out.push_back(dom.add(a.coeff(k), b.coeff(k)));
    return Polynomial<D>(dom, std::move(out));
}

template <CoefficientDomain D>
Polynomial<D> operator-(const Polynomial<D>& a) {
    const D& dom = a.domain();
    std::vector<typename D::Element> out;
    out.reserve(a.coefficients().size());
    for (const auto& c : a.coefficients()) out.push_back(dom.negate(c));
    return Polynomial<D>(dom, std::move(out));
}

template <CoefficientDomain D>
Polynomial<D> operator-(const Polynomial<D>& a, const Polynomial<D>& b) {
    const D& dom = detail::common_domain(a, b);
    int n = std::max(a.degree(), b.degree());
    std::vector<typename D::Element> out;
    out.reserve(static_cast<std::size_t>(n + 1));
    for (int k = 0; k <= n; ++k) out.push_back(dom.sub(a.coeff(k), b.coeff(k)));
    return Polynomial<D>(dom, std::move(out));
}

template <CoefficientDomain D>
Polynomial<D> operator*(const Polynomial<D>& a, const Polynomial<D>& b) {
    const D& dom = detail::common_domain(a, b);
    if (a.is_zero() || b.is_zero()) return Polynomial<D>(dom);
    std::vector<typename D::Element> out(
        static_cast<std::size_t>(a.degree() + b.degree() + 1), dom.zero());
    for (int i = 0; i <= a.degree(); ++i)
        for (int j = 0; j <= b.degree(); ++j)
            out[static_cast<std::size_t>(i + j)] =
                dom.add(out[static_cast<std::size_t>(i + j)], dom.mul(a.coeff(i), b.coeff(j)));
    return Polynomial<D>(dom, std::move(out));
}

template <CoefficientDomain D>
Polynomial<D> scale(const Polynomial<D>& f, const typename D::Element& c) {
    const D& dom = f.domain();
    std::vector<typename D::Element> out;
    out.reserve(f.coefficients().size());
    for (const auto& a : f.coefficients()) out.push_back(dom.mul(a, c));
    return Polynomial<D>(dom, std::move(out));
}

template <CoefficientDomain D>
typename D::Element evaluate(const Polynomial<D>& f, const typename D::Element& a) {
    const D& dom = f.domain();
    typename D::Element r = dom.zero();
    for (int k = f.degree(); k >= 0; --k) r = dom.add(dom.mul(r, a), f.coeff(k));
    return r;
}

// (x - a)^m by binomial expansion.
template <CoefficientDomain D>
Polynomial<D> power_of_linear(const D& dom, const typename D::Element& a, unsigned m) {
    std::vector<typename D::Element> out;
    out.reserve(m + 1);
    typename D::Element neg_a = dom.negate(a);
    // coefficient of x^k is C(m,k) * (-a)^(m-k); accumulate the power upward
    std::vector<typename D::Element> pow_neg(m + 1, dom.one());
    for (unsigned i = 1; i <= m; ++i) pow_neg[i] = dom.mul(pow_neg[i - 1], neg_a);
    for (unsigned k = 0; k <= m; ++k)
        out.push_back(dom.mul(dom.from_integer(binomial(m, k)), pow_neg[m - k]));
    return Polynomial<D>(dom, std::move(out));
}

// f(x + a), exact, by Horner in (x + a).
template <CoefficientDomain D>
Polynomial<D> shift(const Polynomial<D>& f, const typename D::Element& a) {
    const D& dom = f.domain();
    std::vector<typename D::Element> r; // ascending coefficients of the partial result
    for (int k = f.degree(); k >= 0; --k) {
        // r <- r*(x + a) + f_k
        std::vector<typename D::Element> next(r.size() + 1, dom.zero());
        for (std::size_t i = 0; i < r.size(); ++i) {
            next[i + 1] = dom.add(next[i + 1], r[i]);
            next[i] = dom.add(next[i], dom.mul(r[i], a));
        }
        if (next.empty()) next.push_back(dom.zero());
        next[0] = dom.add(next[0], f.coeff(k));
        r = std::move(next);
    }
    return Polynomial<D>(dom, std::move(r));
}

// "6*x^2 - 4*x + 1"; descending powers, zero terms skipped.
template <CoefficientDomain D>
std::string poly_to_string(const Polynomial<D>& f, const std::string& var = "x") {
    const D& dom = f.domain();
    if (f.is_zero()) return "0";
    std::string out;
    for (int k = f.degree(); k >= 0; --k) {
        if (dom.is_zero(f.coeff(k))) continue;
        std::string c = dom.to_string(f.coeff(k));
        bool negative = !c.empty() && c.front() == '-';
        if (negative) c.erase(c.begin());
        if (out.empty())
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        if (k == 0) {
            out += c;
        } else {
            if (c != "1") out += c + "*";
            out += var;
            if (k > 1) out += "^" + std::to_string(k);
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// D[t]: polynomials as a coefficient domain in their own right.

template <CoefficientDomain D>
class PolynomialRing {
public:
    using Element = Polynomial<D>;

    explicit PolynomialRing(D base, std::string var = "t")
        : base_(std::move(base)), var_(std::move(var)) {}

    const D& base() const { return base_; }
    const std::string& variable_name() const { return var_; }

    Element variable() const { return Element::variable(base_); }
    Element constant(typename D::Element c) const { return Element::constant(base_, std::move(c)); }

    Element zero() const { return Element(base_); }
    Element one() const { return constant(base_.one()); }
    Element add(const Element& a, const Element& b) const { return a + b; }
    Element sub(const Element& a, const Element& b) const { return a - b; }
    Element negate(const Element& a) const { return -a; }
    Element mul(const Element& a, const Element& b) const { return a * b; }

    // Long division; the quotient must come out remainder-free.
    Element exact_div(const Element& a, const Element& b) const {
        if (b.is_zero()) throw std::domain_error("polynomial division by zero");
        if (a.is_zero()) return a;
        int dq = a.degree() - b.degree();
        if (dq < 0) throw std::domain_error("inexact polynomial division");
        std::vector<typename D::Element> rem(a.coefficients().begin(), a.coefficients().end());
        std::vector<typename D::Element> quot(static_cast<std::size_t>(dq) + 1, base_.zero());
        for (int k = dq; k >= 0; --k) {
            std::size_t top = static_cast<std::size_t>(k + b.degree());
            if (base_.is_zero(rem[top])) continue;
            typename D::Element q = base_.exact_div(rem[top], b.leading());
            quot[static_cast<std::size_t>(k)] = q;
            for (int j = 0; j <= b.degree(); ++j) {
                std::size_t idx = static_cast<std::size_t>(k + j);
                rem[idx] = base_.sub(rem[idx], base_.mul(q, b.coeff(j)));
            }
        }
        for (const auto& c : rem)
            if (!base_.is_zero(c)) throw std::domain_error("inexact polynomial division");
        return Element(base_, std::move(quot));
    }

    bool is_zero(const Element& a) const { return a.is_zero(); }
    bool equal(const Element& a, const Element& b) const { return a == b; }
    Integer characteristic() const { return base_.characteristic(); }
    Element from_integer(const Integer& v) const { return constant(base_.from_integer(v)); }

    std::string to_string(const Element& a) const {
        std::string s = poly_to_string(a, var_);
        // parenthesize multi-term values so callers can embed them verbatim
        std::size_t terms = 0;
        for (const auto& c : a.coefficients())
            if (!base_.is_zero(c)) ++terms;
        return terms > 1 ? "(" + s + ")" : s;
    }
    std::string name() const { return base_.name() + "[" + var_ + "]"; }

    friend bool operator==(const PolynomialRing& a, const PolynomialRing& b) {
        return a.base_ == b.base_ && a.var_ == b.var_;
    }

private:
    D base_;
    std::string var_;
};

} // namespace subres
