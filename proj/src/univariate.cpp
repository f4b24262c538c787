#include "specfm/univariate.hpp"

#include <algorithm>

#include "specfm/error.hpp"

namespace specfm {

std::vector<Scalar> to_dense(const Poly& p, Var v) {
    for (Var u : p.vars().list())
        if (u != v && p.involves(u))
            fail_input(std::string("expected a univariate polynomial in ") + var_name(v) +
                       ", found " + var_name(u));
    std::vector<Scalar> c(p.degree_in(v) + 1, Scalar(0));
    if (p.is_zero()) return {};
    for (const auto& t : p.terms()) c[t.mono.deg(v)] = t.coeff;
    while (!c.empty() && c.back().is_zero()) c.pop_back();
    return c;
}

Poly from_dense(VarSet vars, Var v, const std::vector<Scalar>& coeffs) {
    std::vector<Term> terms;
    for (std::size_t k = 0; k < coeffs.size(); ++k)
        if (!coeffs[k].is_zero()) terms.push_back({Monomial::var(v, std::uint32_t(k)), coeffs[k]});
    return Poly::from_terms(vars, std::move(terms));
}

Scalar eval_dense(const std::vector<Scalar>& coeffs, const Scalar& x) {
    Scalar acc(0);
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
    return acc;
}

namespace {

using SVec = std::vector<Scalar>;

void trim(SVec& v) {
    while (!v.empty() && v.back().is_zero()) v.pop_back();
}

SVec dense_divrem(SVec a, const SVec& b, SVec* rem) {
    if (b.empty()) fail_internal("univariate: division by zero");
    SVec q;
    const Scalar lb_inv = b.back().inverse();
    while (a.size() >= b.size()) {
        const std::size_t shift = a.size() - b.size();
        const Scalar c = a.back() * lb_inv;
        if (q.size() < shift + 1) q.resize(shift + 1, Scalar(0));
        q[shift] += c;
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
        trim(a);
    }
    if (rem) *rem = std::move(a);
    return q;
}

SVec dense_monic(SVec a) {
    if (a.empty()) return a;
    const Scalar inv = a.back().inverse();
    for (auto& c : a) c *= inv;
    return a;
}

SVec dense_gcd(SVec a, SVec b) { return scalar_poly_gcd(std::move(a), std::move(b)); }

SVec dense_derivative(const SVec& a) {
    SVec d;
    for (std::size_t k = 1; k < a.size(); ++k) d.push_back(a[k] * Scalar(long(k)));
    trim(d);
    return d;
}

bool all_rational(const SVec& a) {
    for (const auto& c : a)
        if (!c.is_rational()) return false;
    return true;
}

// Candidate roots of an integer-coefficient polynomial via the rational-root
// theorem. Divisor enumeration is trial division; constants here are desk
// scale. Returns an empty list when the constants are too large to factor.
std::vector<Rational> rational_root_candidates(const SVec& a) {
    mpz_class lead = 1, cst = 1;
    {
        // clear denominators
        mpz_class den_lcm = 1;
        for (const auto& c : a) {
            mpz_class d = c.rational().get_den();
            mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
        }
        std::vector<mpz_class> zi;
        for (const auto& c : a) {
            Rational q = c.rational() * Rational(den_lcm);
            zi.push_back(q.get_num());
        }
        lead = abs(zi.back());
        cst = abs(zi.front());
    }
    if (cst == 0) fail_internal("rational_root_candidates: zero constant term");
    const mpz_class limit("1000000000000");
    if (lead > limit || cst > limit) return {};
    auto divisors = [](mpz_class n) {
        std::vector<mpz_class> d;
        for (mpz_class i = 1; i * i <= n; ++i) {
            if (n % i == 0) {
                d.push_back(i);
                if (i * i != n) d.push_back(n / i);
            }
        }
        return d;
    };
    std::vector<Rational> out;
    for (const mpz_class& p : divisors(cst)) {
        for (const mpz_class& q : divisors(lead)) {
            Rational r(p, q);
            r.canonicalize();
            out.push_back(r);
            out.push_back(-r);
        }
    }
    std::sort(out.begin(), out.end(), [](const Rational& x, const Rational& y) { return x < y; });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// Tries to produce one root of the squarefree polynomial `sq` in the
// coefficient field; nullopt when no extraction rule applies.
std::optional<Scalar> extract_one_root(const SVec& sq) {
    if (sq.size() <= 1) return std::nullopt;
    if (sq.size() == 2) return -sq[0] / sq[1];
    if (all_rational(sq)) {
        for (const Rational& cand : rational_root_candidates(sq)) {
            if (eval_dense(sq, Scalar(Rational(cand))).is_zero()) return Scalar(Rational(cand));
        }
        if (sq.size() != 3) return std::nullopt;
    }
    if (sq.size() == 3) {
        // quadratic formula with an exact square-root test
        const Scalar &a = sq[2], &b = sq[1], &c = sq[0];
        const Scalar disc = b * b - Scalar(4) * a * c;
        auto s = disc.sqrt_exact();
        if (!s) return std::nullopt;
        return (-b + *s) / (Scalar(2) * a);
    }
    return std::nullopt;
}

}  // namespace

Poly univariate_gcd(const Poly& a, const Poly& b, Var v) {
    SVec g = dense_gcd(to_dense(a, v), to_dense(b, v));
    return from_dense(VarSet{v}, v, g);
}

Poly poly_divexact(const Poly& a, const Poly& b) {
    if (b.is_zero()) fail_input("poly_divexact: division by zero");
    if (a.vars() != b.vars()) fail_input("poly_divexact: variable-set mismatch");
    Poly r = a;
    Poly q(a.vars());
    while (!r.is_zero()) {
        const Term& lr = r.terms().front();
        const Term& lb = b.terms().front();
        if (!lb.mono.divides(lr.mono)) fail_input("poly_divexact: not an exact multiple");
        const Monomial m = lb.mono.divide_into(lr.mono);
        const Scalar c = lr.coeff / lb.coeff;
        q += Poly::term(a.vars(), m, c);
        r -= b.mul_term(m, c);
    }
    return q;
}

Poly resultant_univ(const Poly& p, const Poly& q, Var v) {
    if (p.is_zero() || q.is_zero()) fail_input("resultant: zero input polynomial");
    const VarSet rest = p.vars().united(q.vars()).without(v);
    const std::uint32_t m = p.degree_in(v);
    const std::uint32_t n = q.degree_in(v);

    // coefficient polynomials in the remaining variables, descending in v
    auto coeffs_desc = [&](const Poly& f, std::uint32_t deg) {
        std::vector<Poly> c(deg + 1, Poly::zero(rest));
        for (const auto& t : f.terms()) {
            Monomial mono = t.mono;
            const std::uint32_t k = mono.deg(v);
            mono.e[int(v)] = 0;
            c[deg - k] += Poly::term(rest, mono, t.coeff);
        }
        return c;
    };

    if (m == 0 && n == 0) return Poly::constant(rest, Scalar(1));
    if (m == 0) return p.with_vars(rest).pow(n);
    if (n == 0) return q.with_vars(rest).pow(m);

    const std::vector<Poly> pc = coeffs_desc(p, m);
    const std::vector<Poly> qc = coeffs_desc(q, n);
    const std::size_t size = m + n;
    std::vector<std::vector<Poly>> mat(size, std::vector<Poly>(size, Poly::zero(rest)));
    for (std::uint32_t row = 0; row < n; ++row)
        for (std::uint32_t k = 0; k <= m; ++k) mat[row][row + k] = pc[k];
    for (std::uint32_t row = 0; row < m; ++row)
        for (std::uint32_t k = 0; k <= n; ++k) mat[n + row][row + k] = qc[k];

    // Bareiss fraction-free elimination
    Poly prev = Poly::constant(rest, Scalar(1));
    int sign = 1;
    for (std::size_t k = 0; k + 1 < size; ++k) {
        if (mat[k][k].is_zero()) {
            std::size_t swap_row = k + 1;
            while (swap_row < size && mat[swap_row][k].is_zero()) ++swap_row;
            if (swap_row == size) return Poly::zero(rest);
            std::swap(mat[k], mat[swap_row]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < size; ++i) {
            for (std::size_t j = k + 1; j < size; ++j) {
                Poly num = mat[i][j] * mat[k][k] - mat[i][k] * mat[k][j];
                mat[i][j] = poly_divexact(num, prev);
            }
            mat[i][k] = Poly::zero(rest);
        }
        prev = mat[k][k];
    }
    Poly det = mat[size - 1][size - 1];
    return sign < 0 ? -det : det;
}

RootReport squarefree_linear_roots(const Poly& p, Var v) {
    SVec c = to_dense(p, v);
    if (c.empty()) fail_input("squarefree_linear_roots: zero polynomial");
    RootReport report;
    report.residual = Poly::constant(VarSet{v}, Scalar(1));
    report.residual_degree = 0;

    // root at zero
    std::uint32_t m0 = 0;
    while (m0 < c.size() && c[m0].is_zero()) ++m0;
    if (m0 > 0) {
        report.roots.push_back({Scalar(0), m0});
        c.erase(c.begin(), c.begin() + m0);
    }

    for (;;) {
        if (c.size() <= 1) break;
        SVec sq = dense_divrem(c, dense_gcd(c, dense_derivative(c)), nullptr);
        auto root = extract_one_root(dense_monic(std::move(sq)));
        if (!root) break;
        // divide out (v - root) with multiplicity
        const SVec lin = {-*root, Scalar(1)};
        std::uint32_t mult = 0;
        for (;;) {
            SVec rem;
            SVec quo = dense_divrem(c, lin, &rem);
            if (!rem.empty()) break;
            c = std::move(quo);
            ++mult;
        }
        if (mult == 0) fail_internal("squarefree_linear_roots: claimed root does not divide");
        report.roots.push_back({*root, mult});
    }

    if (c.size() > 1) {
        report.residual = from_dense(VarSet{v}, v, dense_monic(std::move(c)));
        report.residual_degree = report.residual.degree_in(v);
    }
    std::sort(report.roots.begin(), report.roots.end(),
              [](const auto& a, const auto& b) { return a.first.str() < b.first.str(); });
    return report;
}

}  // namespace specfm
