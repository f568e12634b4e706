#pragma once

// Command-line front end: compute, verify, and tabulate. The whole driver
// takes plain argument vectors and streams so the test suite can exercise the
// binary surface in-process.
//
// Exit codes: 0 all checks pass, 1 a verification failed, 2 usage error.
// SUBRES_LOG=info|debug enables progress diagnostics on stderr.

#include "subres/rng.hpp"
#include "subres/subres.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <atomic>
#include <cstdlib>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>
#include <utility>
#include <vector>

namespace subres::cli {

using json = nlohmann::ordered_json;

inline int log_level() {
    const char* v = std::getenv("SUBRES_LOG");
    if (!v) return 0;
    std::string s(v);
    if (s == "debug" || s == "2") return 2;
    if (s == "info" || s == "1") return 1;
    return 0;
}

namespace detail {

// ---------------------------------------------------------------------------
// small shared helpers

inline std::string join_integers(const std::vector<Integer>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].str();
    return s;
}

inline PrimeFieldElement rational_mod_p(const PrimeField& fp, const Rational& v) {
    PrimeFieldElement den = fp.from_integer(denominator(v));
    if (fp.is_zero(den))
        throw std::invalid_argument("denominator of " + v.str() + " vanishes in " + fp.name());
    return fp.mul(fp.from_integer(numerator(v)), fp.invert(den));
}

inline std::vector<Integer> primes_below(unsigned bound) {
    std::vector<Integer> out;
    for (unsigned p = 2; p < bound; ++p)
        if (is_prime(p)) out.push_back(p);
    return out;
}

// row-major array-of-arrays of decimal strings
template <CoefficientDomain D>
json matrix_to_json(const ExactMatrix<D>& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m.domain().to_string(m.at(i, j)));
        rows.push_back(row);
    }
    return rows;
}

inline json report_to_json(const VerificationReport& r) {
    json j;
    j["subject"] = r.subject;
    j["inputs"] = r.inputs;
    j["pass"] = r.pass;
    j["lhs"] = r.lhs;
    j["rhs"] = r.rhs;
    j["elapsed_ms"] = r.elapsed_ms;
    return j;
}

inline void print_report_text(std::ostream& out, const VerificationReport& r) {
    out << (r.pass ? "PASS" : "FAIL") << "  " << r.subject << "  [" << r.inputs << "]\n"
        << "  lhs = " << r.lhs << "\n"
        << "  rhs = " << r.rhs << "\n";
}

// naive reference determinant used by the self-check sweep
inline Integer cofactor_det_ref(const ExactMatrix<IntegerRing>& m) {
    std::size_t n = m.rows();
    if (n == 0) return 1;
    if (n == 1) return m.at(0, 0);
    Integer acc = 0;
    for (std::size_t j = 0; j < n; ++j) {
        if (m.at(0, j) == 0) continue;
        ExactMatrix<IntegerRing> minor(IntegerRing{}, n - 1, n - 1);
        for (std::size_t i = 1; i < n; ++i) {
            std::size_t col = 0;
            for (std::size_t jj = 0; jj < n; ++jj)
                if (jj != j) minor.at(i - 1, col++) = m.at(i, jj);
        }
        Integer term = m.at(0, j) * cofactor_det_ref(minor);
        acc += (j % 2 == 0) ? term : -term;
    }
    return acc;
}

// ---------------------------------------------------------------------------
// deterministic worker pool

struct CaseOutcome {
    bool ok = true;
    std::string detail;
};

template <typename Fn>
std::vector<CaseOutcome> run_cases(std::size_t count, unsigned jobs, Fn&& fn) {
    std::vector<CaseOutcome> results(count);
    auto guarded = [&](std::size_t i) {
        try {
            return fn(i);
        } catch (const std::exception& e) {
            return CaseOutcome{false, std::string("exception: ") + e.what()};
        }
    };
    if (jobs <= 1) {
        for (std::size_t i = 0; i < count; ++i) results[i] = guarded(i);
        return results;
    }
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= count) return;
            results[i] = guarded(i);
        }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    return results;
}

inline CaseOutcome pass_case() { return {}; }
inline CaseOutcome fail_case(std::string detail) { return {false, std::move(detail)}; }

} // namespace detail

// ---------------------------------------------------------------------------
// subres: Theorem-1 data plus monomial expansion, optional oracle comparison

template <FieldDomain D>
int run_subres_over(const D& dom, unsigned m, unsigned n, unsigned d,
                    const typename D::Element& alpha, const typename D::Element& beta,
                    bool with_oracle, long long characteristic, const std::string& format,
                    std::ostream& out) {
    BernsteinSubresultant<D> bform = subresultant_closed(dom, m, n, d, alpha, beta);
    Polynomial<D> mono = bernstein_expand(bform);
    bool match = true;
    if (with_oracle) {
        Polynomial<D> ref =
            subresultant_det(power_of_linear(dom, alpha, m), power_of_linear(dom, beta, n), d);
        match = (mono == ref);
    }
    if (format == "json") {
        json j;
        j["m"] = m;
        j["n"] = n;
        j["d"] = d;
        j["characteristic"] = characteristic;
        j["alpha"] = dom.to_string(alpha);
        j["beta"] = dom.to_string(beta);
        json b;
        b["sign"] = bform.sign;
        b["power_alpha_minus_beta"] = bform.exponent;
        json q = json::array();
        for (const Integer& v : bform.q) q.push_back(v.str());
        b["q"] = q;
        j["bernstein"] = b;
        json coeffs = json::array();
        for (int k = 0; k <= mono.degree(); ++k) coeffs.push_back(dom.to_string(mono.coeff(k)));
        j["monomial"] = coeffs;
        if (with_oracle) j["oracle_match"] = match;
        out << j.dump(2) << "\n";
    } else {
        out << "Sres_" << d << " of (x-alpha)^" << m << ", (x-beta)^" << n << " over "
            << dom.name() << "\n"
            << "  alpha     = " << dom.to_string(alpha) << "\n"
            << "  beta      = " << dom.to_string(beta) << "\n"
            << "  bernstein : sign=" << (bform.sign > 0 ? "+1" : "-1")
            << " power=" << bform.exponent << " q=[" << detail::join_integers(bform.q) << "]\n"
            << "  monomial  = " << poly_to_string(mono) << "\n";
        if (with_oracle) out << "  oracle    : " << (match ? "match" : "MISMATCH") << "\n";
    }
    return match ? 0 : 1;
}

inline int cmd_subres(unsigned m, unsigned n, unsigned d, const std::string& alpha_str,
                      const std::string& beta_str, long long characteristic, bool with_oracle,
                      const std::string& format, std::ostream& out) {
    Rational a = parse_rational(alpha_str);
    Rational b = parse_rational(beta_str);
    if (characteristic == 0)
        return run_subres_over(RationalField{}, m, n, d, a, b, with_oracle, 0, format, out);
    PrimeField fp{Integer(characteristic)};
    return run_subres_over(fp, m, n, d, detail::rational_mod_p(fp, a),
                           detail::rational_mod_p(fp, b), with_oracle, characteristic, format,
                           out);
}

// ---------------------------------------------------------------------------
// qcoeffs: Hankel minors against the factorial closed form

inline int cmd_qcoeffs(unsigned m, unsigned n, unsigned d, const std::string& format,
                       std::ostream& out) {
    HankelSpec spec(m, n, d);
    std::vector<Integer> minors = maximal_minors(spec);
    std::vector<Integer> closed = qj_closed(m, n, d);
    bool match = minors == closed;
    if (format == "json") {
        json j;
        j["m"] = m;
        j["n"] = n;
        j["d"] = d;
        j["c"] = spec.c();
        j["hankel"] = detail::matrix_to_json(hankel_matrix(spec));
        json a = json::array(), b = json::array();
        for (const Integer& v : minors) a.push_back(v.str());
        for (const Integer& v : closed) b.push_back(v.str());
        j["minors"] = a;
        j["closed_form"] = b;
        j["match"] = match;
        out << j.dump(2) << "\n";
    } else {
        out << "q coefficients for (m,n,d) = (" << m << "," << n << "," << d << ")\n"
            << "  hankel minors : [" << detail::join_integers(minors) << "]\n"
            << "  closed form   : [" << detail::join_integers(closed) << "]\n"
            << "  match         : " << (match ? "yes" : "NO") << "\n";
    }
    return match ? 0 : 1;
}

// ---------------------------------------------------------------------------
// psres: the principal-subresultant integer factor and its prime content

inline int cmd_psres(unsigned m, unsigned n, unsigned d, const std::string& alpha_str,
                     const std::string& beta_str, long long characteristic,
                     const std::string& format, std::ostream& out) {
    if (d == 0) throw std::invalid_argument("psres requires d >= 1");
    Integer factor = psres_integer_factor(m, n, d);

    std::vector<std::pair<Integer, unsigned>> factorization;
    Integer rest = factor;
    for (Integer p = 2; rest > 1; ++p) {
        unsigned e = 0;
        while (rest % p == 0) {
            rest /= p;
            ++e;
        }
        if (e > 0) factorization.emplace_back(p, e);
    }
    unsigned bound = m + n - d;
    bool drops_everywhere = true;
    for (const Integer& p : detail::primes_below(bound))
        if (factor % p != 0) drops_everywhere = false;

    std::string value;
    if (!alpha_str.empty()) {
        Rational a = parse_rational(alpha_str), b = parse_rational(beta_str);
        if (characteristic == 0) {
            value = to_string(psres_closed(RationalField{}, m, n, d, a, b));
        } else {
            PrimeField fp{Integer(characteristic)};
            value = fp.to_string(psres_closed(fp, m, n, d, detail::rational_mod_p(fp, a),
                                              detail::rational_mod_p(fp, b)));
        }
    }

    if (format == "json") {
        json j;
        j["m"] = m;
        j["n"] = n;
        j["d"] = d;
        j["factor"] = factor.str();
        json fs = json::array();
        for (const auto& [p, e] : factorization) fs.push_back(json{{"prime", p.str()}, {"exp", e}});
        j["factorization"] = fs;
        j["prime_bound"] = bound;
        j["degree_drops_for_all_smaller_primes"] = drops_everywhere;
        if (!value.empty()) j["value"] = value;
        out << j.dump(2) << "\n";
    } else {
        out << "principal subresultant factor for (m,n,d) = (" << m << "," << n << "," << d
            << ")\n"
            << "  factor  = " << factor.str() << "\n";
        out << "  primes  = {";
        for (std::size_t i = 0; i < factorization.size(); ++i) {
            out << (i ? ", " : "") << factorization[i].first.str();
            if (factorization[i].second > 1) out << "^" << factorization[i].second;
        }
        out << "}\n";
        if (drops_everywhere)
            out << "  note    : degree < d for every characteristic p < " << bound << "\n";
        if (!value.empty()) out << "  value   = " << value << "\n";
    }
    return 0;
}

// ---------------------------------------------------------------------------
// charp-table: degree of Sres_d per prime characteristic below m+n-d

inline int cmd_charp_table(unsigned m, unsigned n, unsigned d, const std::string& format,
                           std::ostream& out) {
    subres::detail::check_order(m, n, d);
    std::vector<Integer> primes = detail::primes_below(m + n - d);
    if (format == "json") {
        json j;
        j["m"] = m;
        j["n"] = n;
        j["d"] = d;
        json rows = json::array();
        for (const Integer& p : primes) {
            CharPDegreeReport rep = charp_degree(m, n, d, p);
            rows.push_back(json{{"p", p.str()}, {"degree", rep.degree}});
        }
        j["rows"] = rows;
        out << j.dump(2) << "\n";
    } else {
        out << "degree of Sres_" << d << "((x-alpha)^" << m << ", (x-beta)^" << n
            << ") for alpha != beta, by characteristic\n";
        for (const Integer& p : primes) {
            CharPDegreeReport rep = charp_degree(m, n, d, p);
            out << "  p=" << std::left << std::setw(4) << p.str() << " degree=" << rep.degree;
            if (rep.degree < 0) out << " (zero polynomial)";
            out << "\n";
        }
    }
    return 0;
}

// ---------------------------------------------------------------------------
// identity: single identity instances

inline int cmd_identity(const std::string& kind, unsigned l, const std::vector<unsigned>& a,
                        unsigned k, const std::string& x_str, const std::string& y_str,
                        const std::string& z_str, unsigned m, unsigned n, unsigned d, unsigned i,
                        const std::string& format, std::ostream& out) {
    VerificationReport rep;
    json extra;
    if (kind == "ostrowski") {
        if (a.empty()) throw std::invalid_argument("identity ostrowski needs --a");
        rep = ostrowski_check(l, a);
        extra["matrix"] = detail::matrix_to_json(ostrowski_matrix(l, a));
    } else if (kind == "pfaff-saalschutz") {
        Rational x = parse_rational(x_str), y = parse_rational(y_str), z = parse_rational(z_str);
        subres::detail::Stopwatch sw;
        auto [lhs, rhs] = pfaff_saalschutz(k, x, y, z);
        rep.subject = "pfaff-saalschutz";
        rep.inputs = "k=" + std::to_string(k) + ", x=" + x.str() + ", y=" + y.str() +
                     ", z=" + z.str();
        rep.lhs = lhs.str();
        rep.rhs = rhs.str();
        rep.pass = lhs == rhs;
        rep.elapsed_ms = sw.ms();
    } else if (kind == "binomial-kernel") {
        rep = binomial_identity_check(m, n, d, i);
    } else {
        throw std::invalid_argument("unknown identity kind: " + kind);
    }
    if (format == "json") {
        json j = detail::report_to_json(rep);
        for (auto& [key, value] : extra.items()) j[key] = value;
        out << j.dump(2) << "\n";
    } else {
        detail::print_report_text(out, rep);
    }
    return rep.pass ? 0 : 1;
}

// ---------------------------------------------------------------------------
// verify: the full invariant sweep

namespace detail {

struct SweepResult {
    std::string name;
    std::vector<CaseOutcome> outcomes;

    std::size_t failures() const {
        std::size_t f = 0;
        for (const auto& o : outcomes)
            if (!o.ok) ++f;
        return f;
    }
};

struct SweepContext {
    unsigned max;
    std::uint64_t seed;
    unsigned jobs;
    std::ostream* log; // stderr when SUBRES_LOG is set, else null
};

inline void log_sweep(const SweepContext& ctx, const std::string& name, std::size_t cases) {
    if (ctx.log) *ctx.log << "[verify] " << name << ": " << cases << " cases\n";
}

struct MndCase {
    unsigned m, n, d;
};

inline std::vector<MndCase> mnd_cases(unsigned max, unsigned min_d) {
    std::vector<MndCase> cases;
    for (unsigned m = 1; m <= max; ++m)
        for (unsigned n = 1; n <= max; ++n)
            for (unsigned d = min_d; d < std::min(m, n); ++d) cases.push_back({m, n, d});
    return cases;
}

inline std::string mnd_str(const MndCase& c) {
    return "m=" + std::to_string(c.m) + " n=" + std::to_string(c.n) + " d=" + std::to_string(c.d);
}

inline SweepResult sweep_bareiss_vs_cofactor(const SweepContext& ctx) {
    const std::size_t count = 40;
    log_sweep(ctx, "bareiss-vs-cofactor", count);
    auto outcomes = run_cases(count, ctx.jobs, [&](std::size_t i) {
        SplitMix64 rng(case_seed(ctx.seed, "bareiss-vs-cofactor", i));
        std::size_t n = static_cast<std::size_t>(rng.range(1, 5));
        ExactMatrix<IntegerRing> mat(IntegerRing{}, n, n);
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) mat.at(r, c) = rng.range(-9, 9);
        Integer fast = bareiss_det(mat);
        Integer ref = cofactor_det_ref(mat);
        if (fast != ref)
            return fail_case("bareiss=" + fast.str() + " cofactor=" + ref.str());
        return pass_case();
    });
    return {"bareiss-vs-cofactor", std::move(outcomes)};
}

inline SweepResult sweep_hankel_kernel(const SweepContext& ctx) {
    std::vector<MndCase> cases = mnd_cases(ctx.max, 0);
    for (unsigned lo = 1; lo <= ctx.max; ++lo) // extended d = min(m,n) cases
        for (unsigned hi = lo + 1; hi <= ctx.max; ++hi) {
            cases.push_back({lo, hi, lo});
            cases.push_back({hi, lo, lo});
        }
    log_sweep(ctx, "hankel-kernel", cases.size());
    auto outcomes = run_cases(cases.size(), ctx.jobs, [&](std::size_t i) {
        const MndCase& c = cases[i];
        HankelSpec spec(c.m, c.n, c.d);
        auto h = hankel_matrix(spec);
        auto q = maximal_minors(spec);
        for (unsigned r = 0; r < spec.d; ++r) {
            Integer dot = 0;
            for (unsigned j = 0; j <= spec.d; ++j) {
                Integer term = h.at(r, j) * q[j];
                dot += (j % 2 == 0) ? term : -term;
            }
            if (dot != 0) return fail_case(mnd_str(c) + ": row " + std::to_string(r));
        }
        return pass_case();
    });
    return {"hankel-kernel", std::move(outcomes)};
}

inline SweepResult sweep_theorem2_minors(const SweepContext& ctx) {
    std::vector<MndCase> cases = mnd_cases(ctx.max, 0);
    log_sweep(ctx, "theorem2-minors", cases.size());
    auto outcomes = run_cases(cases.size(), ctx.jobs, [&](std::size_t i) {
        const MndCase& c = cases[i];
        if (qj_closed(c.m, c.n, c.d) != maximal_minors(HankelSpec(c.m, c.n, c.d)))
            return fail_case(mnd_str(c));
        return pass_case();
    });
    return {"theorem2-minors", std::move(outcomes)};
}

inline SweepResult sweep_theorem1_oracle(const SweepContext& ctx) {
    const RationalField qq;
    std::vector<MndCase> cases = mnd_cases(ctx.max, 1);
    const std::size_t pairs = 3;
    log_sweep(ctx, "theorem1-vs-oracle", cases.size() * pairs);
    auto outcomes = run_cases(cases.size() * pairs, ctx.jobs, [&](std::size_t i) {
        const MndCase& c = cases[i / pairs];
        SplitMix64 rng(case_seed(ctx.seed, "theorem1-vs-oracle", i));
        Rational a = rng.rational(50, 20), b = rng.rational(50, 20);
        if (a == b) b += 1;
        auto closed = bernstein_expand(subresultant_closed(qq, c.m, c.n, c.d, a, b));
        auto oracle =
            subresultant_det(power_of_linear(qq, a, c.m), power_of_linear(qq, b, c.n), c.d);
        if (!(closed == oracle))
            return fail_case(mnd_str(c) + " alpha=" + a.str() + " beta=" + b.str());
        return pass_case();
    });
    return {"theorem1-vs-oracle", std::move(outcomes)};
}

inline SweepResult sweep_poisson_order0(const SweepContext& ctx) {
    const RationalField qq;
    std::vector<MndCase> cases;
    for (unsigned m = 1; m <= ctx.max; ++m)
        for (unsigned n = 1; n <= ctx.max; ++n) cases.push_back({m, n, 0});
    log_sweep(ctx, "poisson-order0", cases.size());
    auto outcomes = run_cases(cases.size(), ctx.jobs, [&](std::size_t i) {
        const MndCase& c = cases[i];
        SplitMix64 rng(case_seed(ctx.seed, "poisson-order0", i));
        Rational a = rng.rational(9, 4), b = rng.rational(9, 4);
        if (a == b) b += 1;
        auto sres = subresultant_det(power_of_linear(qq, a, c.m), power_of_linear(qq, b, c.n), 0);
        Rational expected = 1;
        for (unsigned e = 0; e < c.m * c.n; ++e) expected *= a - b;
        if (sres.degree() != 0 || sres.coeff(0) != expected) return fail_case(mnd_str(c));
        auto closed = bernstein_expand(subresultant_closed(qq, c.m, c.n, 0, a, b));
        if (!(closed == sres)) return fail_case(mnd_str(c) + " (closed form)");
        return pass_case();
    });
    return {"poisson-order0", std::move(outcomes)};
}

inline SweepResult sweep_psres_coherence(const SweepContext& ctx) {
    const RationalField qq;
    std::vector<MndCase> cases = mnd_cases(ctx.max, 1);
    log_sweep(ctx, "psres-coherence", cases.size());
    auto outcomes = run_cases(cases.size(), ctx.jobs, [&](std::size_t i) {
        const MndCase& c = cases[i];
        SplitMix64 rng(case_seed(ctx.seed, "psres-coherence", i));
        Rational a = rng.rational(20, 8), b = rng.rational(20, 8);
        if (a == b) b += 1;
        Rational closed = psres_closed(qq, c.m, c.n, c.d, a, b);
        auto expansion = bernstein_expand(subresultant_closed(qq, c.m, c.n, c.d, a, b));
        Rational oracle = principal_subresultant(power_of_linear(qq, a, c.m),
                                                 power_of_linear(qq, b, c.n), c.d);
        if (closed != expansion.coeff(static_cast<int>(c.d)) || closed != oracle)
            return fail_case(mnd_str(c));
        return pass_case();
    });
    return {"psres-coherence", std::move(outcomes)};
}

inline SweepResult sweep_translation_covariance(const SweepContext& ctx) {
    const RationalField qq;
    const std::size_t count = 25;
    log_sweep(ctx, "translation-covariance", count);
    auto outcomes = run_cases(count, ctx.jobs, [&](std::size_t i) {
        SplitMix64 rng(case_seed(ctx.seed, "translation-covariance", i));
        unsigned m = static_cast<unsigned>(rng.range(2, 5));
        unsigned n = static_cast<unsigned>(rng.range(2, 5));
        std::vector<Rational> fc, gc;
        for (unsigned k = 0; k <= m; ++k) fc.push_back(rng.rational(6, 3));
        for (unsigned k = 0; k <= n; ++k) gc.push_back(rng.rational(6, 3));
        fc.back() = 1;
        gc.back() = 1;
        Polynomial<RationalField> f(qq, fc), g(qq, gc);
        Rational a = rng.rational(6, 3);
        for (unsigned d = 0; d < std::min(m, n); ++d)
            if (!(shift(subresultant_det(f, g, d), a) ==
                  subresultant_det(shift(f, a), shift(g, a), d)))
                return fail_case("case " + std::to_string(i) + " d=" + std::to_string(d));
        return pass_case();
    });
    return {"translation-covariance", std::move(outcomes)};
}

inline SweepResult sweep_sylvester_identity(const SweepContext& ctx) {
    const RationalField qq;
    const std::size_t count = 50;
    log_sweep(ctx, "sylvester-identity", count);
    auto outcomes = run_cases(count, ctx.jobs, [&](std::size_t i) {
        SplitMix64 rng(case_seed(ctx.seed, "sylvester-identity", i));
        unsigned m = static_cast<unsigned>(rng.range(1, 6));
        unsigned n = static_cast<unsigned>(rng.range(1, 6));
        std::vector<Rational> a, b;
        while (a.size() < m) {
            Rational r(rng.range(-20, 20));
            bool dup = false;
            for (const auto& x : a) dup = dup || x == r;
            if (!dup) a.push_back(r);
        }
        while (b.size() < n) {
            Rational r(rng.range(-20, 20));
            bool dup = false;
            for (const auto& x : b) dup = dup || x == r;
            if (!dup) b.push_back(r);
        }
        for (unsigned p = 0; p < std::min(m, n); ++p)
            for (unsigned q = 0; p + q < std::min(m, n); ++q)
                if (!check_sylvester_identity(qq, a, b, p, q).pass)
                    return fail_case("case " + std::to_string(i) + " p=" + std::to_string(p) +
                                     " q=" + std::to_string(q));
        return pass_case();
    });
    return {"sylvester-identity", std::move(outcomes)};
}

inline SweepResult sweep_ostrowski(const SweepContext& ctx) {
    struct Case {
        unsigned l;
        std::vector<unsigned> a;
    };
    std::vector<Case> cases;
    for (unsigned l = 0; l <= ctx.max; ++l)
        for (unsigned k = 0; k <= 5; ++k)
            for (unsigned rep = 0; rep < 2; ++rep) {
                SplitMix64 rng(case_seed(ctx.seed, "ostrowski-gen",
                                         (static_cast<std::uint64_t>(l) * 6 + k) * 2 + rep));
                std::vector<unsigned> a;
                unsigned prev = 0;
                for (unsigned i = 0; i <= k; ++i) {
                    prev += static_cast<unsigned>(rng.range(i == 0 ? 0 : 1, 3));
                    a.push_back(prev);
                }
                cases.push_back({l, std::move(a)});
            }
    log_sweep(ctx, "ostrowski", cases.size());
    auto outcomes = run_cases(cases.size(), ctx.jobs, [&](std::size_t i) {
        const Case& c = cases[i];
        VerificationReport rep = ostrowski_check(c.l, c.a);
        if (!rep.pass) return fail_case(rep.inputs);
        return pass_case();
    });
    return {"ostrowski", std::move(outcomes)};
}

inline SweepResult sweep_pfaff_saalschutz(const SweepContext& ctx) {
    const std::size_t count = 100;
    log_sweep(ctx, "pfaff-saalschutz", count);
    auto outcomes = run_cases(count, ctx.jobs, [&](std::size_t i) {
        SplitMix64 rng(case_seed(ctx.seed, "pfaff-saalschutz", i));
        unsigned k = static_cast<unsigned>(i % (ctx.max + 1));
        for (int attempt = 0; attempt < 64; ++attempt) {
            Rational x = rng.rational(8, 3), y = rng.rational(8, 3), z = rng.rational(8, 3);
            try {
                auto [lhs, rhs] = pfaff_saalschutz(k, x, y, z);
                if (lhs != rhs)
                    return fail_case("k=" + std::to_string(k) + " x=" + x.str() +
                                     " y=" + y.str() + " z=" + z.str());
                return pass_case();
            } catch (const pole_error&) {
                // redraw deterministically
            }
        }
        return fail_case("no pole-free triple found for k=" + std::to_string(k));
    });
    return {"pfaff-saalschutz", std::move(outcomes)};
}

inline SweepResult sweep_binomial_kernel(const SweepContext& ctx) {
    struct Case {
        MndCase mnd;
        unsigned i;
    };
    std::vector<Case> cases;
    for (const MndCase& c : mnd_cases(ctx.max, 1))
        for (unsigned i = 1; i <= c.m; ++i) cases.push_back({c, i});
    log_sweep(ctx, "binomial-kernel", cases.size());
    auto outcomes = run_cases(cases.size(), ctx.jobs, [&](std::size_t idx) {
        const Case& c = cases[idx];
        VerificationReport rep = binomial_identity_check(c.mnd.m, c.mnd.n, c.mnd.d, c.i);
        if (!rep.pass) return fail_case(rep.inputs);
        if (c.i <= c.mnd.d && rep.lhs != "0")
            return fail_case(rep.inputs + " expected both sides zero in the kernel range");
        return pass_case();
    });
    return {"binomial-kernel", std::move(outcomes)};
}

inline SweepResult sweep_sum_q(const SweepContext& ctx) {
    std::vector<MndCase> cases = mnd_cases(ctx.max, 1);
    log_sweep(ctx, "sum-q", cases.size());
    auto outcomes = run_cases(cases.size(), ctx.jobs, [&](std::size_t i) {
        const MndCase& c = cases[i];
        VerificationReport rep = sum_q_identity(c.m, c.n, c.d);
        if (!rep.pass) return fail_case(rep.inputs);
        return pass_case();
    });
    return {"sum-q", std::move(outcomes)};
}

inline SweepResult sweep_hd_cofactors(const SweepContext& ctx) {
    const RationalField qq;
    std::vector<MndCase> cases = mnd_cases(std::min(ctx.max, 8u), 0);
    log_sweep(ctx, "hd-cofactors", cases.size());
    auto outcomes = run_cases(cases.size(), ctx.jobs, [&](std::size_t i) {
        const MndCase& c = cases[i];
        SplitMix64 rng(case_seed(ctx.seed, "hd-cofactors", i));
        Rational a = rng.rational(9, 4), b = rng.rational(9, 4);
        if (a == b) b += 1;
        CofactorPair<RationalField> cof = hd_cofactors(qq, c.m, c.n, c.d, a, b);
        auto combo = cof.f_cofactor * power_of_linear(qq, a, c.m) +
                     cof.g_cofactor * power_of_linear(qq, b, c.n);
        if (!(combo == hd_polynomial(qq, c.m, c.n, c.d, a, b))) return fail_case(mnd_str(c));
        if (cof.f_cofactor.degree() >= static_cast<int>(c.n - c.d) ||
            cof.g_cofactor.degree() >= static_cast<int>(c.m - c.d))
            return fail_case(mnd_str(c) + " degree bound violated");
        return pass_case();
    });
    return {"hd-cofactors", std::move(outcomes)};
}

inline SweepResult sweep_charp_vs_symbolic(const SweepContext& ctx) {
    struct Case {
        MndCase mnd;
        long long p;
    };
    std::vector<Case> cases;
    for (const MndCase& c : mnd_cases(std::min(ctx.max, 6u), 1))
        for (long long p : {2, 3, 5}) cases.push_back({c, p});
    log_sweep(ctx, "charp-vs-symbolic", cases.size());
    auto outcomes = run_cases(cases.size(), ctx.jobs, [&](std::size_t i) {
        const Case& c = cases[i];
        int predicted = charp_degree(c.mnd.m, c.mnd.n, c.mnd.d, c.p).degree;
        PrimeField fp{Integer(c.p)};
        PolynomialRing<PrimeField> ring(fp);
        auto f = power_of_linear(ring, ring.variable(), c.mnd.m);
        auto g = power_of_linear(ring, ring.zero(), c.mnd.n);
        int symbolic = subresultant_det(f, g, c.mnd.d).degree();
        if (predicted != symbolic)
            return fail_case(mnd_str(c.mnd) + " p=" + std::to_string(c.p) + " predicted=" +
                             std::to_string(predicted) + " symbolic=" + std::to_string(symbolic));
        return pass_case();
    });
    return {"charp-vs-symbolic", std::move(outcomes)};
}

inline SweepResult sweep_psres_prime_support(const SweepContext& ctx) {
    std::vector<MndCase> cases = mnd_cases(ctx.max, 1);
    log_sweep(ctx, "psres-prime-support", cases.size());
    auto outcomes = run_cases(cases.size(), ctx.jobs, [&](std::size_t i) {
        const MndCase& c = cases[i];
        Integer v = psres_integer_factor(c.m, c.n, c.d);
        for (Integer p = 2; v > 1; ++p) {
            while (v % p == 0) v /= p;
            if (p >= c.m + c.n - c.d && v > 1)
                return fail_case(mnd_str(c) + ": prime factor >= m+n-d");
        }
        return pass_case();
    });
    return {"psres-prime-support", std::move(outcomes)};
}

} // namespace detail

inline int cmd_verify(unsigned max, std::uint64_t seed, unsigned jobs, const std::string& format,
                      std::ostream& out, std::ostream& err) {
    if (max < 2) throw std::invalid_argument("verify needs --max >= 2");
    detail::SweepContext ctx{max, seed, jobs == 0 ? 1 : jobs,
                             log_level() >= 1 ? &err : nullptr};

    std::vector<detail::SweepResult> sweeps;
    sweeps.push_back(detail::sweep_bareiss_vs_cofactor(ctx));
    sweeps.push_back(detail::sweep_hankel_kernel(ctx));
    sweeps.push_back(detail::sweep_theorem2_minors(ctx));
    sweeps.push_back(detail::sweep_theorem1_oracle(ctx));
    sweeps.push_back(detail::sweep_poisson_order0(ctx));
    sweeps.push_back(detail::sweep_psres_coherence(ctx));
    sweeps.push_back(detail::sweep_translation_covariance(ctx));
    sweeps.push_back(detail::sweep_sylvester_identity(ctx));
    sweeps.push_back(detail::sweep_ostrowski(ctx));
    sweeps.push_back(detail::sweep_pfaff_saalschutz(ctx));
    sweeps.push_back(detail::sweep_binomial_kernel(ctx));
    sweeps.push_back(detail::sweep_sum_q(ctx));
    sweeps.push_back(detail::sweep_hd_cofactors(ctx));
    sweeps.push_back(detail::sweep_charp_vs_symbolic(ctx));
    sweeps.push_back(detail::sweep_psres_prime_support(ctx));

    std::size_t passed = 0;
    for (const auto& s : sweeps)
        if (s.failures() == 0) ++passed;
    bool all_pass = passed == sweeps.size();

    if (format == "json") {
        json j;
        j["command"] = "verify";
        j["max"] = max;
        j["seed"] = seed;
        j["pass"] = all_pass;
        json list = json::array();
        for (const auto& s : sweeps) {
            json js;
            js["name"] = s.name;
            js["cases"] = s.outcomes.size();
            json fails = json::array();
            for (std::size_t i = 0; i < s.outcomes.size(); ++i)
                if (!s.outcomes[i].ok)
                    fails.push_back(json{{"case", i}, {"detail", s.outcomes[i].detail}});
            js["failures"] = fails;
            list.push_back(js);
        }
        j["sweeps"] = list;
        out << j.dump(2) << "\n";
    } else {
        for (const auto& s : sweeps) {
            std::size_t fails = s.failures();
            out << (fails == 0 ? "PASS" : "FAIL") << "  " << std::left << std::setw(26) << s.name
                << " cases=" << s.outcomes.size();
            if (fails != 0) out << " failures=" << fails;
            out << "\n";
            if (fails != 0) {
                for (std::size_t i = 0; i < s.outcomes.size(); ++i)
                    if (!s.outcomes[i].ok)
                        out << "      case " << i << ": " << s.outcomes[i].detail << "\n";
            }
        }
        out << "verify: " << passed << "/" << sweeps.size() << " sweeps passed (max=" << max
            << ", seed=" << seed << ")\n";
    }
    return all_pass ? 0 : 1;
}

// ---------------------------------------------------------------------------
// driver

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact subresultants of two pure powers (x-alpha)^m and (x-beta)^n"};
    app.require_subcommand(1);

    unsigned m = 0, n = 0, d = 0;
    std::string alpha, beta;
    long long characteristic = 0;
    bool with_oracle = false;
    std::string format = "text";
    unsigned max = 8;
    std::uint64_t seed = 42;
    unsigned jobs = 1;
    unsigned os_l = 0, ps_k = 0, kernel_i = 1;
    std::vector<unsigned> os_a;
    std::string ps_x = "0", ps_y = "0", ps_z = "0";
    std::string identity_kind;

    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"text", "json"}));
    };
    auto add_mnd = [&](CLI::App* sub, bool need_d = true) {
        sub->add_option("-m", m, "multiplicity of alpha")->required();
        sub->add_option("-n", n, "multiplicity of beta")->required();
        auto* od = sub->add_option("-d", d, "subresultant order");
        if (need_d) od->required();
    };

    CLI::App* c_subres = app.add_subcommand(
        "subres", "Bernstein data and monomial expansion of Sres_d, optional oracle check");
    add_mnd(c_subres);
    c_subres->add_option("--alpha", alpha, "root alpha, a rational like 7/3")->required();
    c_subres->add_option("--beta", beta, "root beta")->required();
    c_subres->add_option("--char", characteristic, "characteristic (0 = rationals)")
        ->check(CLI::NonNegativeNumber);
    c_subres->add_flag("--oracle", with_oracle, "compare against the determinantal definition");
    add_format(c_subres);

    CLI::App* c_qcoeffs =
        app.add_subcommand("qcoeffs", "Hankel minors q_j against the factorial closed form");
    add_mnd(c_qcoeffs);
    add_format(c_qcoeffs);

    CLI::App* c_psres = app.add_subcommand(
        "psres", "principal subresultant integer factor and its prime factorization");
    add_mnd(c_psres);
    c_psres->add_option("--alpha", alpha, "optional root alpha for the full value");
    c_psres->add_option("--beta", beta, "optional root beta for the full value");
    c_psres->add_option("--char", characteristic, "characteristic for the full value")
        ->check(CLI::NonNegativeNumber);
    add_format(c_psres);

    CLI::App* c_charp =
        app.add_subcommand("charp-table", "degree of Sres_d per prime characteristic p < m+n-d");
    add_mnd(c_charp);
    add_format(c_charp);

    CLI::App* c_verify = app.add_subcommand("verify", "run the full invariant sweep");
    c_verify->add_option("--max", max, "degree bound for the sweeps (default 8)");
    c_verify->add_option("--seed", seed, "seed for the randomized cases (default 42)");
    c_verify->add_option("--jobs", jobs, "worker threads (results are order-independent)");
    add_format(c_verify);

    CLI::App* c_identity = app.add_subcommand(
        "identity", "evaluate one identity instance: ostrowski | pfaff-saalschutz | binomial-kernel");
    c_identity->add_option("kind", identity_kind, "identity to evaluate")->required();
    c_identity->add_option("--l", os_l, "ostrowski: binomial upper index");
    c_identity->add_option("--a", os_a, "ostrowski: row indices a_0,a_1,...")->delimiter(',');
    c_identity->add_option("--k", ps_k, "pfaff-saalschutz: summation bound");
    c_identity->add_option("--x", ps_x, "pfaff-saalschutz: x");
    c_identity->add_option("--y", ps_y, "pfaff-saalschutz: y");
    c_identity->add_option("--z", ps_z, "pfaff-saalschutz: z");
    c_identity->add_option("-m", m, "binomial-kernel: m");
    c_identity->add_option("-n", n, "binomial-kernel: n");
    c_identity->add_option("-d", d, "binomial-kernel: d");
    c_identity->add_option("--i", kernel_i, "binomial-kernel: i");
    add_format(c_identity);

    try {
        std::vector<const char*> argv;
        argv.reserve(args.size() + 1);
        argv.push_back("subres");
        for (const std::string& a : args) argv.push_back(a.c_str());
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (c_subres->parsed())
            return cmd_subres(m, n, d, alpha, beta, characteristic, with_oracle, format, out);
        if (c_qcoeffs->parsed()) return cmd_qcoeffs(m, n, d, format, out);
        if (c_psres->parsed())
            return cmd_psres(m, n, d, alpha, beta, characteristic, format, out);
        if (c_charp->parsed()) return cmd_charp_table(m, n, d, format, out);
        if (c_verify->parsed()) return cmd_verify(max, seed, jobs, format, out, err);
        if (c_identity->parsed())
            return cmd_identity(identity_kind, os_l, os_a, ps_k, ps_x, ps_y, ps_z, m, n, d,
                                kernel_i, format, out);
        err << "error: no subcommand\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace subres::cli
