#pragma once

// Closed-form counterparts of the determinantal definitions: the Hankel-minor
// coefficients q_j as factorial products, the Bernstein-form subresultant of
// two pure powers, the principal subresultant, Ostrowski's binomial
// determinant evaluation, the Pfaff-Saalschutz identity, the binomial kernel
// identity behind the q_j ratios, the cofactor construction that writes the
// Bernstein combination as F*(x-alpha)^m + G*(x-beta)^n, and the positive-
// characteristic degree analysis.
//
// Every factorial-quotient formula is evaluated over the rationals and
// asserted integral before the result is mapped into the target domain; this
// keeps the formulas meaningful in small characteristic, where the quotients
// themselves are undefined.

#include "subres/bernstein.hpp"
#include "subres/matrix.hpp"
#include "subres/polynomial.hpp"
#include "subres/report.hpp"

#include <chrono>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace subres {

class pole_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

namespace detail {

inline void check_order(unsigned m, unsigned n, unsigned d) {
    if (m < 1 || n < 1 || d >= std::min(m, n))
        throw std::invalid_argument("invalid parameters (m,n,d) = (" + std::to_string(m) + "," +
                                    std::to_string(n) + "," + std::to_string(d) +
                                    "): need 0 <= d < min(m,n)");
}

inline Integer require_integral(const Rational& v, const char* what) {
    if (denominator(v) != 1)
        throw std::logic_error(std::string(what) + " evaluated to the non-integer " + v.str());
    return numerator(v);
}

inline std::string mnd_string(unsigned m, unsigned n, unsigned d) {
    return "m=" + std::to_string(m) + ", n=" + std::to_string(n) + ", d=" + std::to_string(d);
}

class Stopwatch {
public:
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0_)
            .count();
    }

private:
    std::chrono::steady_clock::time_point t0_ = std::chrono::steady_clock::now();
};

} // namespace detail

// q_0(m,n,d) = (-1)^binom(d,2) prod_{i=1..d} (i-1)!(c+i-1)! / ((m-i-1)!(n-i)!),
// with q_0(m,n,0) = 1.
inline Integer q0_closed(unsigned m, unsigned n, unsigned d) {
    detail::check_order(m, n, d);
    if (d == 0) return 1;
    unsigned c = m + n - 2 * d - 1;
    Rational v = 1;
    for (unsigned i = 1; i <= d; ++i) {
        v *= Rational(factorial(i - 1) * factorial(c + i - 1),
                      factorial(m - i - 1) * factorial(n - i));
    }
    if (binomial(d, 2) % 2 != 0) v = -v;
    return detail::require_integral(v, "q_0 closed form");
}

// (q_0, ..., q_d) with q_j = binom(d,j) binom(n-d+j-1,j) / binom(m-1,j) * q_0.
inline std::vector<Integer> qj_closed(unsigned m, unsigned n, unsigned d) {
    detail::check_order(m, n, d);
    Integer q0 = q0_closed(m, n, d);
    std::vector<Integer> q{q0};
    q.reserve(d + 1);
    for (unsigned j = 1; j <= d; ++j) {
        Rational ratio(binomial(d, j) * binomial(static_cast<long long>(n) - d + j - 1, j),
                       binomial(static_cast<long long>(m) - 1, j));
        q.push_back(detail::require_integral(Rational(q0) * ratio, "q_j closed form"));
    }
    return q;
}

// The subresultant of (x-alpha)^m and (x-beta)^n in Bernstein form:
// (-1)^binom(d,2) (alpha-beta)^((m-d)(n-d)) sum_j q_j (x-alpha)^j (x-beta)^(d-j).
template <CoefficientDomain D>
BernsteinSubresultant<D> subresultant_closed(const D& dom, unsigned m, unsigned n, unsigned d,
                                             typename D::Element alpha,
                                             typename D::Element beta) {
    detail::check_order(m, n, d);
    int sign = binomial(d, 2) % 2 == 0 ? 1 : -1;
    return BernsteinSubresultant<D>(dom, m, n, d, std::move(alpha), std::move(beta), sign,
                                    (m - d) * (n - d), qj_closed(m, n, d));
}

// The integer factor prod_{i=1..d} (i-1)!(c+i)! / ((m-i)!(n-i)!) of the
// principal subresultant.
inline Integer psres_integer_factor(unsigned m, unsigned n, unsigned d) {
    detail::check_order(m, n, d);
    unsigned c = m + n - 2 * d - 1;
    Rational v = 1;
    for (unsigned i = 1; i <= d; ++i)
        v *= Rational(factorial(i - 1) * factorial(c + i), factorial(m - i) * factorial(n - i));
    return detail::require_integral(v, "principal subresultant factor");
}

// PSres_d((x-alpha)^m, (x-beta)^n) = (alpha-beta)^((m-d)(n-d)) * integer factor.
template <CoefficientDomain D>
typename D::Element psres_closed(const D& dom, unsigned m, unsigned n, unsigned d,
                                 const typename D::Element& alpha,
                                 const typename D::Element& beta) {
    detail::check_order(m, n, d);
    if (d == 0)
        throw std::invalid_argument("principal subresultant closed form requires d >= 1");
    typename D::Element pre = element_pow(dom, dom.sub(alpha, beta), (m - d) * (n - d));
    return dom.mul(pre, dom.from_integer(psres_integer_factor(m, n, d)));
}

// ---------------------------------------------------------------------------
// Ostrowski's determinant evaluation

// The (k+1)-square matrix with entry (i,j) = binomial(l, a_i - j).
inline ExactMatrix<IntegerRing> ostrowski_matrix(unsigned l, const std::vector<unsigned>& a) {
    if (a.empty()) throw std::invalid_argument("ostrowski: empty index sequence");
    std::size_t k1 = a.size();
    ExactMatrix<IntegerRing> mat(IntegerRing{}, k1, k1);
    for (std::size_t i = 0; i < k1; ++i)
        for (std::size_t j = 0; j < k1; ++j)
            mat.at(i, j) = binomial(l, static_cast<long long>(a[i]) - static_cast<long long>(j));
    return mat;
}

struct OstrowskiResult {
    Integer value;
    bool used_closed_form = true; // false: a factorial argument was negative,
                                  // value comes from the matrix determinant
};

// det(binomial(l, a_i - j)) = l!^(k+1) prod_{i=1..k} (l+i)^(k+1-i)
//   * prod_{i<i'} (a_i' - a_i) / (prod a_i! prod (l+k-a_i)!).
// When some l+k-a_i is negative the product formula has no meaning and the
// determinant is evaluated from the matrix instead.
inline OstrowskiResult ostrowski_det(unsigned l, const std::vector<unsigned>& a) {
    if (a.empty()) throw std::invalid_argument("ostrowski: empty index sequence");
    unsigned k = static_cast<unsigned>(a.size()) - 1;
    for (unsigned ai : a)
        if (static_cast<long long>(l) + k - ai < 0)
            return {bareiss_det(ostrowski_matrix(l, a)), false};
    Rational v = 1;
    Integer lf = factorial(l);
    for (unsigned i = 0; i <= k; ++i) v *= Rational(lf);
    for (unsigned i = 1; i <= k; ++i) {
        Integer base = static_cast<long long>(l) + i;
        for (unsigned e = 0; e < k + 1 - i; ++e) v *= Rational(base);
    }
    for (unsigned i = 0; i <= k; ++i)
        for (unsigned ip = i + 1; ip <= k; ++ip)
            v *= Rational(static_cast<long long>(a[ip]) - static_cast<long long>(a[i]));
    for (unsigned i = 0; i <= k; ++i)
        v /= Rational(factorial(a[i]) * factorial(l + k - a[i]));
    return {detail::require_integral(v, "ostrowski closed form"), true};
}

// Closed form versus Bareiss determinant of the same binomial matrix.
inline VerificationReport ostrowski_check(unsigned l, const std::vector<unsigned>& a) {
    detail::Stopwatch sw;
    OstrowskiResult closed = ostrowski_det(l, a);
    Integer direct = bareiss_det(ostrowski_matrix(l, a));
    VerificationReport rep;
    rep.subject = closed.used_closed_form ? "ostrowski" : "ostrowski (matrix fallback)";
    rep.inputs = "l=" + std::to_string(l) + ", a=(";
    for (std::size_t i = 0; i < a.size(); ++i)
        rep.inputs += (i ? "," : "") + std::to_string(a[i]);
    rep.inputs += ")";
    rep.lhs = closed.value.str();
    rep.rhs = direct.str();
    rep.pass = closed.value == direct;
    rep.elapsed_ms = sw.ms();
    return rep;
}

// ---------------------------------------------------------------------------
// Pfaff-Saalschutz

// Both sides of
//   sum_{j=0..k} (x)_j (y)_j (-k)_j / ((z)_j (1+x+y-z-k)_j j!)
//     = (z-x)_k (z-y)_k / ((z)_k (z-x-y)_k)
// evaluated exactly. Throws pole_error naming the first vanishing Pochhammer
// denominator factor.
inline std::pair<Rational, Rational> pfaff_saalschutz(unsigned k, const Rational& x,
                                                      const Rational& y, const Rational& z) {
    Rational w = Rational(1) + x + y - z - Rational(k);
    for (unsigned i = 0; i < k; ++i) {
        if (z + Rational(i) == 0)
            throw pole_error("pole: (z)_" + std::to_string(i + 1) + " = 0");
        if (w + Rational(i) == 0)
            throw pole_error("pole: (1+x+y-z-k)_" + std::to_string(i + 1) + " = 0");
        if (z - x - y + Rational(i) == 0)
            throw pole_error("pole: (z-x-y)_" + std::to_string(i + 1) + " = 0");
    }
    Rational lhs = 0;
    for (unsigned j = 0; j <= k; ++j) {
        Rational num = pochhammer(x, j) * pochhammer(y, j) * pochhammer(Rational(-(long long)k), j);
        Rational den = pochhammer(z, j) * pochhammer(w, j) * Rational(factorial(j));
        lhs += num / den;
    }
    Rational rhs = pochhammer(z - x, k) * pochhammer(z - y, k) /
                   (pochhammer(z, k) * pochhammer(z - x - y, k));
    return {lhs, rhs};
}

// ---------------------------------------------------------------------------
// The binomial kernel identity behind the q_j ratios

// Exact check of
//   sum_{j=0..d} binom(c, m-j-i) (-1)^j binom(d,j) binom(n-d+j-1,j) / binom(m-1,j)
//     = binom(i-1,d) binom(m+n-d-1, m-i) / binom(m-1,d)
// for any i >= 1; both sides vanish for 1 <= i <= d.
inline VerificationReport binomial_identity_check(unsigned m, unsigned n, unsigned d, unsigned i) {
    detail::Stopwatch sw;
    detail::check_order(m, n, d);
    if (d == 0 || i == 0)
        throw std::invalid_argument("binomial kernel identity requires d >= 1 and i >= 1");
    long long c = static_cast<long long>(m) + n - 2 * d - 1;
    Rational lhs = 0;
    for (unsigned j = 0; j <= d; ++j) {
        Rational ratio(binomial(d, j) * binomial(static_cast<long long>(n) - d + j - 1, j),
                       binomial(static_cast<long long>(m) - 1, j));
        Rational term = Rational(binomial(c, static_cast<long long>(m) - j - i)) * ratio;
        lhs += (j % 2 == 0) ? term : -term;
    }
    Rational rhs = Rational(binomial(static_cast<long long>(i) - 1, d) *
                                binomial(static_cast<long long>(m) + n - d - 1,
                                         static_cast<long long>(m) - i),
                            binomial(static_cast<long long>(m) - 1, d));
    VerificationReport rep;
    rep.subject = "binomial-kernel";
    rep.inputs = detail::mnd_string(m, n, d) + ", i=" + std::to_string(i);
    rep.lhs = lhs.str();
    rep.rhs = rhs.str();
    rep.pass = lhs == rhs;
    rep.elapsed_ms = sw.ms();
    return rep;
}

// ---------------------------------------------------------------------------
// Cofactor construction

template <CoefficientDomain D>
struct CofactorPair {
    Polynomial<D> f_cofactor; // deg < n - d
    Polynomial<D> g_cofactor; // deg < m - d
};

// (alpha-beta)^c sum_j q_j (x-alpha)^j (x-beta)^(d-j), the degree <= d
// combination realized by the cofactors below.
template <CoefficientDomain D>
Polynomial<D> hd_polynomial(const D& dom, unsigned m, unsigned n, unsigned d,
                            const typename D::Element& alpha, const typename D::Element& beta) {
    detail::check_order(m, n, d);
    std::vector<Integer> q = qj_closed(m, n, d);
    Polynomial<D> sum(dom);
    for (unsigned j = 0; j <= d; ++j)
        sum = sum + scale(power_of_linear(dom, alpha, j) * power_of_linear(dom, beta, d - j),
                          dom.from_integer(q[j]));
    return scale(sum, element_pow(dom, dom.sub(alpha, beta), m + n - 2 * d - 1));
}

// Cofactors F, G with F*(x-alpha)^m + G*(x-beta)^n = hd_polynomial(...),
// deg F < n-d and deg G < m-d. Built term by term from the expansion of
// (alpha-beta)^c = ((alpha-x) + (x-beta))^c: within each Bernstein term the
// k-th summand is a multiple of (x-alpha)^m when k+j >= m and a multiple of
// (x-beta)^n when c-k+d-j >= n; the remaining middle terms cancel across j
// because (q_0, -q_1, ..., (-1)^d q_d) spans the kernel of H(m,n,d).
template <CoefficientDomain D>
CofactorPair<D> hd_cofactors(const D& dom, unsigned m, unsigned n, unsigned d,
                             const typename D::Element& alpha, const typename D::Element& beta) {
    detail::check_order(m, n, d);
    std::vector<Integer> q = qj_closed(m, n, d);
    long long c = static_cast<long long>(m) + n - 2 * d - 1;

    Polynomial<D> f_cof(dom), g_cof(dom);
    for (unsigned j = 0; j <= d; ++j) {
        typename D::Element qj = dom.from_integer(q[j]);
        for (long long k = std::max<long long>(0, static_cast<long long>(m) - j); k <= c; ++k) {
            Integer coeff = binomial(c, k);
            if (k % 2 != 0) coeff = -coeff;
            Polynomial<D> term =
                scale(power_of_linear(dom, alpha, static_cast<unsigned>(k + j - m)) *
                          power_of_linear(dom, beta, static_cast<unsigned>(c - k + d - j)),
                      dom.mul(qj, dom.from_integer(coeff)));
            f_cof = f_cof + term;
        }
        long long g_top = static_cast<long long>(m) - d - static_cast<long long>(j) - 1;
        for (long long k = 0; k <= std::min(c, g_top); ++k) {
            Integer coeff = binomial(c, k);
            if (k % 2 != 0) coeff = -coeff;
            Polynomial<D> term =
                scale(power_of_linear(dom, alpha, static_cast<unsigned>(k + j)) *
                          power_of_linear(dom, beta, static_cast<unsigned>(c - k + d - j - n)),
                      dom.mul(qj, dom.from_integer(coeff)));
            g_cof = g_cof + term;
        }
    }
    return {std::move(f_cof), std::move(g_cof)};
}

// ---------------------------------------------------------------------------
// Column-sum identity

// sum_{j=0..d} q_j(m,n,d) = q_0(m+1,n,d), both sides exact integers.
inline VerificationReport sum_q_identity(unsigned m, unsigned n, unsigned d) {
    detail::Stopwatch sw;
    detail::check_order(m, n, d);
    if (d == 0) throw std::invalid_argument("column-sum identity requires d >= 1");
    Integer lhs = 0;
    for (const Integer& qj : qj_closed(m, n, d)) lhs += qj;
    Integer rhs = q0_closed(m + 1, n, d);
    VerificationReport rep;
    rep.subject = "sum-q";
    rep.inputs = detail::mnd_string(m, n, d);
    rep.lhs = lhs.str();
    rep.rhs = rhs.str();
    rep.pass = lhs == rhs;
    rep.elapsed_ms = sw.ms();
    return rep;
}

// ---------------------------------------------------------------------------
// Degree in positive characteristic

struct CharPDegreeReport {
    unsigned m = 0, n = 0, d = 0;
    Integer p;
    int degree = -1;        // -1 encodes the zero polynomial
    std::vector<Integer> s; // s_r = sum_{j>=r} binom(j,r) q_j, r = 0..d
};

// Degree of Sres_d((x-alpha)^m, (x-beta)^n) over a field of characteristic p
// for any alpha != beta: the coefficient of x^(d-r) is, up to a nonzero
// factor, s_r = sum_{j>=r} binom(j,r) q_j, so the degree is d minus the first
// r with p not dividing s_r (and -1 when every s_r vanishes mod p).
inline CharPDegreeReport charp_degree(unsigned m, unsigned n, unsigned d, const Integer& p) {
    detail::check_order(m, n, d);
    if (!is_prime(p)) throw std::invalid_argument("characteristic must be prime: " + p.str());
    std::vector<Integer> q = qj_closed(m, n, d);
    CharPDegreeReport rep;
    rep.m = m;
    rep.n = n;
    rep.d = d;
    rep.p = p;
    rep.s.reserve(d + 1);
    for (unsigned r = 0; r <= d; ++r) {
        Integer sr = 0;
        for (unsigned j = r; j <= d; ++j) sr += binomial(j, r) * q[j];
        rep.s.push_back(std::move(sr));
    }
    rep.degree = -1;
    for (unsigned r = 0; r <= d; ++r) {
        if (rep.s[r] % p != 0) {
            rep.degree = static_cast<int>(d - r);
            break;
        }
    }
    return rep;
}

} // namespace subres
