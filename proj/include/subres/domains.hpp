#pragma once

// Coefficient domains: the semantic contract every exact ring used by the
// library satisfies, plus the three scalar instances (integers, rationals,
// prime fields). Polynomial rings over these live in polynomial.hpp.
//
// A domain is a small immutable value object; elements are passed through it
// for every operation. All operations are pure, so domains and elements are
// freely shareable across threads.

#include "subres/numbers.hpp"

#include <concepts>
#include <stdexcept>
#include <string>
#include <utility>

namespace subres {

template <typename D>
concept CoefficientDomain =
    std::equality_comparable<D> &&
    requires(const D& dom, const typename D::Element& a, const typename D::Element& b) {
        typename D::Element;
        { dom.zero() } -> std::same_as<typename D::Element>;
        { dom.one() } -> std::same_as<typename D::Element>;
        { dom.add(a, b) } -> std::same_as<typename D::Element>;
        { dom.sub(a, b) } -> std::same_as<typename D::Element>;
        { dom.negate(a) } -> std::same_as<typename D::Element>;
        { dom.mul(a, b) } -> std::same_as<typename D::Element>;
        { dom.exact_div(a, b) } -> std::same_as<typename D::Element>;
        { dom.is_zero(a) } -> std::same_as<bool>;
        { dom.equal(a, b) } -> std::same_as<bool>;
        { dom.characteristic() } -> std::same_as<Integer>;
        { dom.from_integer(Integer()) } -> std::same_as<typename D::Element>;
        { dom.to_string(a) } -> std::same_as<std::string>;
        { dom.name() } -> std::same_as<std::string>;
    };

template <typename D>
concept FieldDomain = CoefficientDomain<D> &&
    requires(const D& dom, const typename D::Element& a) {
        { dom.invert(a) } -> std::same_as<typename D::Element>;
    };

// a^e by binary powering; e >= 0.
template <CoefficientDomain D>
typename D::Element element_pow(const D& dom, typename D::Element base, unsigned long long e) {
    typename D::Element r = dom.one();
    while (e > 0) {
        if (e & 1) r = dom.mul(r, base);
        e >>= 1;
        if (e > 0) base = dom.mul(base, base);
    }
    return r;
}

// ---------------------------------------------------------------------------
// Z

struct IntegerRing {
    using Element = Integer;

    Element zero() const { return 0; }
    Element one() const { return 1; }
    Element add(const Element& a, const Element& b) const { return a + b; }
    Element sub(const Element& a, const Element& b) const { return a - b; }
    Element negate(const Element& a) const { return -a; }
    Element mul(const Element& a, const Element& b) const { return a * b; }
    Element exact_div(const Element& a, const Element& b) const {
        if (b == 0) throw std::domain_error("integer division by zero");
        Integer q, r;
        divide_qr(a, b, q, r);
        if (r != 0) throw std::domain_error("inexact integer division");
        return q;
    }
    bool is_zero(const Element& a) const { return a == 0; }
    bool equal(const Element& a, const Element& b) const { return a == b; }
    Integer characteristic() const { return 0; }
    Element from_integer(const Integer& v) const { return v; }
    std::string to_string(const Element& a) const { return a.str(); }
    std::string name() const { return "Z"; }

    friend bool operator==(const IntegerRing&, const IntegerRing&) = default;
};

// ---------------------------------------------------------------------------
// Q

struct RationalField {
    using Element = Rational;

    Element zero() const { return 0; }
    Element one() const { return 1; }
    Element add(const Element& a, const Element& b) const { return a + b; }
    Element sub(const Element& a, const Element& b) const { return a - b; }
    Element negate(const Element& a) const { return -a; }
    Element mul(const Element& a, const Element& b) const { return a * b; }
    Element exact_div(const Element& a, const Element& b) const {
        if (b == 0) throw std::domain_error("rational division by zero");
        return a / b;
    }
    Element invert(const Element& a) const {
        if (a == 0) throw std::domain_error("inverting zero");
        return Element(1) / a;
    }
    bool is_zero(const Element& a) const { return a == 0; }
    bool equal(const Element& a, const Element& b) const { return a == b; }
    Integer characteristic() const { return 0; }
    Element from_integer(const Integer& v) const { return Element(v); }
    std::string to_string(const Element& a) const { return a.str(); }
    std::string name() const { return "Q"; }

    friend bool operator==(const RationalField&, const RationalField&) = default;
};

// ---------------------------------------------------------------------------
// GF(p)

// A residue tagged with its modulus, so that elements from different prime
// fields cannot be combined silently.
class PrimeFieldElement {
public:
    PrimeFieldElement(Integer residue, Integer modulus)
        : residue_(std::move(residue)), modulus_(std::move(modulus)) {
        if (modulus_ < 2 || residue_ < 0 || residue_ >= modulus_)
            throw std::invalid_argument("prime field element out of range");
    }

    const Integer& residue() const { return residue_; }
    const Integer& modulus() const { return modulus_; }

    friend bool operator==(const PrimeFieldElement&, const PrimeFieldElement&) = default;

private:
    Integer residue_;
    Integer modulus_;
};

class PrimeField {
public:
    using Element = PrimeFieldElement;

    explicit PrimeField(Integer p) : p_(std::move(p)) {
        if (!is_prime(p_))
            throw std::invalid_argument("prime field modulus is not prime: " + p_.str());
    }

    const Integer& modulus() const { return p_; }

    Element zero() const { return Element(0, p_); }
    Element one() const { return Element(1, p_); }

    Element add(const Element& a, const Element& b) const {
        check(a);
        check(b);
        Integer r = a.residue() + b.residue();
        if (r >= p_) r -= p_;
        return Element(std::move(r), p_);
    }
    Element sub(const Element& a, const Element& b) const {
        check(a);
        check(b);
        Integer r = a.residue() - b.residue();
        if (r < 0) r += p_;
        return Element(std::move(r), p_);
    }
    Element negate(const Element& a) const {
        check(a);
        if (a.residue() == 0) return a;
        return Element(p_ - a.residue(), p_);
    }
    Element mul(const Element& a, const Element& b) const {
        check(a);
        check(b);
        return Element(a.residue() * b.residue() % p_, p_);
    }
    Element invert(const Element& a) const {
        check(a);
        if (a.residue() == 0) throw std::domain_error("inverting zero in " + name());
        // extended Euclid on (residue, p)
        Integer r0 = a.residue(), r1 = p_, s0 = 1, s1 = 0;
        while (r1 != 0) {
            Integer q = r0 / r1;
            r0 -= q * r1;
            std::swap(r0, r1);
            s0 -= q * s1;
            std::swap(s0, s1);
        }
        s0 %= p_;
        if (s0 < 0) s0 += p_;
        return Element(std::move(s0), p_);
    }
    Element exact_div(const Element& a, const Element& b) const { return mul(a, invert(b)); }
    bool is_zero(const Element& a) const {
        check(a);
        return a.residue() == 0;
    }
    bool equal(const Element& a, const Element& b) const {
        check(a);
        check(b);
        return a.residue() == b.residue();
    }
    Integer characteristic() const { return p_; }
    Element from_integer(const Integer& v) const {
        Integer r = v % p_;
        if (r < 0) r += p_;
        return Element(std::move(r), p_);
    }
    std::string to_string(const Element& a) const {
        check(a);
        return a.residue().str();
    }
    std::string name() const { return "GF(" + p_.str() + ")"; }

    friend bool operator==(const PrimeField& a, const PrimeField& b) { return a.p_ == b.p_; }

private:
    void check(const Element& a) const {
        if (a.modulus() != p_)
            throw std::invalid_argument("prime field modulus mismatch: element mod " +
                                        a.modulus().str() + " used in " + name());
    }

    Integer p_;
};

} // namespace subres
