#include "specfm/scalar.hpp"

#include <sstream>

#include "specfm/error.hpp"

namespace specfm {

const char* param_name(Param p) { return p == Param::Lambda ? "lambda" : "t"; }

struct Scalar::Frac {
    Param var;
    std::vector<Scalar> num;  // dense, lowest degree first, coefficients of lower level
    std::vector<Scalar> den;  // monic, gcd(num, den) = 1
};

struct ScalarDetail {
    struct FracView {
        std::vector<Scalar> num, den;
    };

    // Views a scalar as a fraction in `var`, lifting lower levels to constants.
    static FracView view(const Scalar& s, Param var) {
        if (!s.is_rational()) {
            const Scalar::Frac& f = *std::get<Scalar::FracPtr>(s.v_);
            if (f.var == var) return {f.num, f.den};
        }
        if (s.is_zero()) return {{}, {Scalar(1)}};
        return {{s}, {Scalar(1)}};
    }

    static Scalar build(Param var, std::vector<Scalar> num, std::vector<Scalar> den) {
        return Scalar::make(var, std::move(num), std::move(den));
    }
};

namespace {

int param_level(Param p) { return p == Param::Lambda ? 1 : 2; }

using SVec = std::vector<Scalar>;

void trim(SVec& v) {
    while (!v.empty() && v.back().is_zero()) v.pop_back();
}

bool vec_zero(const SVec& v) { return v.empty(); }

SVec vec_add(const SVec& a, const SVec& b) {
    SVec r(std::max(a.size(), b.size()), Scalar(0));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    trim(r);
    return r;
}

SVec vec_neg(SVec a) {
    for (auto& c : a) c = -c;
    return a;
}

SVec vec_mul(const SVec& a, const SVec& b) {
    if (a.empty() || b.empty()) return {};
    SVec r(a.size() + b.size() - 1, Scalar(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    trim(r);
    return r;
}

SVec vec_scale(SVec a, const Scalar& s) {
    for (auto& c : a) c *= s;
    trim(a);
    return a;
}

// Division with remainder over a field: a = q*b + r, deg r < deg b.
SVec vec_divrem(SVec a, const SVec& b, SVec* rem_out) {
    if (vec_zero(b)) fail_internal("scalar tower: division by zero polynomial");
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
    if (rem_out) *rem_out = std::move(a);
    trim(q);
    return q;
}

SVec vec_monic(SVec a) {
    if (a.empty()) return a;
    const Scalar inv = a.back().inverse();
    for (auto& c : a) c *= inv;
    return a;
}

SVec vec_gcd(SVec a, SVec b);

int vec_coeff_level(const SVec& v) {
    int l = 0;
    for (const auto& c : v) l = std::max(l, c.level());
    return l;
}

// The coefficient's denominator as a scalar of the coefficient's own level.
Scalar den_as_scalar(const Scalar& c) {
    if (c.is_rational()) return Scalar(Rational(c.rational().get_den()));
    return ScalarDetail::build(c.top_param(), c.denominator_coeffs(), {Scalar(1)});
}

// Multiplies through by all coefficient denominators; afterwards every
// coefficient has a trivial denominator at its own level.
SVec vec_clear_denominators(SVec v) {
    Scalar d(1);
    for (const auto& c : v) {
        const Scalar dc = den_as_scalar(c);
        if (!dc.is_one()) d *= dc;
    }
    if (!d.is_one())
        for (auto& c : v) c *= d;
    return v;
}

// Content removal: divides out the gcd of the coefficients' numerators,
// computed one level down the tower. Coefficients must be denominator-free.
SVec vec_primitive(SVec v) {
    if (v.empty()) return v;
    const int level = vec_coeff_level(v);
    if (level == 0) return v;  // rational content is a unit
    SVec content;
    bool first = true;
    for (const auto& c : v) {
        const SVec nc = c.level() == level ? c.numerator_coeffs() : SVec{c};
        content = first ? nc : vec_gcd(content, nc);
        first = false;
        if (content.size() == 1) break;
    }
    if (content.size() <= 1) return v;
    const Param var = level == 1 ? Param::Lambda : Param::T;
    const Scalar cs = ScalarDetail::build(var, content, {Scalar(1)});
    for (auto& c : v) c /= cs;
    return v;
}

// Fraction-free pseudo-remainder: multiplies by the leading coefficient of b
// instead of dividing, so denominator-free coefficients stay that way.
SVec vec_prem(SVec r, const SVec& b) {
    const Scalar& lb = b.back();
    while (r.size() >= b.size()) {
        const std::size_t shift = r.size() - b.size();
        const Scalar lr = r.back();
        for (auto& c : r) c *= lb;
        for (std::size_t i = 0; i < b.size(); ++i) r[shift + i] -= lr * b[i];
        trim(r);
        if (r.empty()) break;
    }
    return r;
}

SVec vec_gcd(SVec a, SVec b) {
    trim(a);
    trim(b);
    if (vec_zero(a)) return vec_monic(std::move(b));
    if (vec_zero(b)) return vec_monic(std::move(a));

    if (vec_coeff_level(a) == 0 && vec_coeff_level(b) == 0) {
        // plain Euclid over Q with monic remainders
        while (!vec_zero(b)) {
            SVec r;
            vec_divrem(a, b, &r);
            a = std::move(b);
            b = vec_monic(std::move(r));
        }
        return vec_monic(std::move(a));
    }

    // primitive pseudo-remainder sequence
    a = vec_primitive(vec_clear_denominators(std::move(a)));
    b = vec_primitive(vec_clear_denominators(std::move(b)));
    if (a.size() < b.size()) std::swap(a, b);
    while (!vec_zero(b)) {
        SVec r = vec_prem(a, b);
        trim(r);
        if (!vec_zero(r)) r = vec_primitive(vec_clear_denominators(std::move(r)));
        a = std::move(b);
        b = std::move(r);
    }
    return vec_monic(std::move(a));
}

Scalar vec_eval(const SVec& v, const Scalar& x) {
    Scalar acc(0);
    for (auto it = v.rbegin(); it != v.rend(); ++it) acc = acc * x + *it;
    return acc;
}

// Exact polynomial square root (the full product is re-verified).
std::optional<SVec> vec_sqrt(const SVec& p) {
    if (vec_zero(p)) return SVec{};
    const std::size_t deg = p.size() - 1;
    if (deg % 2 != 0) return std::nullopt;
    const std::size_t m = deg / 2;
    auto lead = p.back().sqrt_exact();
    if (!lead) return std::nullopt;
    SVec s(m + 1, Scalar(0));
    s[m] = *lead;
    const Scalar two_lead_inv = (Scalar(2) * *lead).inverse();
    for (std::size_t k = m; k-- > 0;) {
        // match the coefficient of x^(m+k): p[m+k] = 2 s_k s_m + cross terms
        Scalar cross(0);
        for (std::size_t i = k + 1; i <= m; ++i) {
            const std::size_t need = m + k;
            if (need < i) continue;
            const std::size_t j = need - i;
            if (j > m || j <= k) continue;
            cross += s[i] * s[j];
        }
        s[k] = (p[m + k] - cross) * two_lead_inv;
    }
    if (vec_mul(s, s) != p) return std::nullopt;
    return s;
}

std::string scalar_product_text(const Scalar& c, const std::string& mono);

std::string vec_text(const SVec& v, const char* name) {
    if (v.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = v.size(); k-- > 0;) {
        const Scalar& c = v[k];
        if (c.is_zero()) continue;
        std::string mono;
        if (k == 1)
            mono = name;
        else if (k > 1)
            mono = std::string(name) + "^" + std::to_string(k);
        std::string piece = scalar_product_text(c, mono);
        if (first) {
            os << piece;
            first = false;
        } else if (!piece.empty() && piece[0] == '-') {
            os << " - " << piece.substr(1);
        } else {
            os << " + " << piece;
        }
    }
    return os.str();
}

// Renders c * mono with the usual cosmetics (1*x -> x, c*1 -> c).
std::string scalar_product_text(const Scalar& c, const std::string& mono) {
    if (mono.empty()) {
        std::string cs = c.str();
        return (c.needs_parens() && !c.is_rational()) ? "(" + cs + ")" : cs;
    }
    if (c.is_rational()) {
        const Rational& q = c.rational();
        if (q == 1) return mono;
        if (q == -1) return "-" + mono;
        return rational_str(q) + "*" + mono;
    }
    std::string cs = c.str();
    if (c.needs_parens()) cs = "(" + cs + ")";
    return cs + "*" + mono;
}

using FracView = ScalarDetail::FracView;

FracView view(const Scalar& s, Param var) { return ScalarDetail::view(s, var); }

Param top_var_of(const Scalar& a, const Scalar& b) {
    const int l = std::max(a.level(), b.level());
    return l >= 2 ? Param::T : Param::Lambda;
}

}  // namespace

std::vector<Scalar> scalar_poly_gcd(std::vector<Scalar> a, std::vector<Scalar> b) {
    return vec_gcd(std::move(a), std::move(b));
}

const Scalar::Frac& Scalar::frac() const { return *std::get<FracPtr>(v_); }

Scalar Scalar::param(Param p) {
    auto f = std::make_shared<Frac>();
    f->var = p;
    f->num = {Scalar(0), Scalar(1)};
    f->den = {Scalar(1)};
    return Scalar(FracPtr(std::move(f)));
}

Scalar Scalar::make(Param var, std::vector<Scalar> num, std::vector<Scalar> den) {
    trim(num);
    trim(den);
    if (vec_zero(den)) fail_internal("scalar tower: zero denominator");
    if (vec_zero(num)) return Scalar(0);
    if (den.size() > 1 || num.size() > 1) {
        if (den.size() > 1) {
            SVec g = vec_gcd(num, den);
            if (g.size() > 1) {
                num = vec_divrem(std::move(num), g, nullptr);
                den = vec_divrem(std::move(den), g, nullptr);
            }
        }
        if (!den.back().is_one()) {
            const Scalar lead_inv = den.back().inverse();
            num = vec_scale(std::move(num), lead_inv);
            den = vec_scale(std::move(den), lead_inv);
        }
    } else if (!den[0].is_one()) {
        num[0] /= den[0];
        den[0] = Scalar(1);
    }
    if (den.size() == 1 && num.size() == 1) return num[0];
    auto f = std::make_shared<Frac>();
    f->var = var;
    f->num = std::move(num);
    f->den = std::move(den);
    return Scalar(FracPtr(std::move(f)));
}

bool Scalar::is_zero() const { return is_rational() && rational() == 0; }

bool Scalar::is_one() const { return is_rational() && rational() == 1; }

const Rational& Scalar::rational() const {
    if (!is_rational()) fail_internal("scalar: rational() on a rational-function value");
    return std::get<Rational>(v_);
}

int Scalar::level() const {
    if (is_rational()) return 0;
    return param_level(frac().var);
}

bool Scalar::uses_param(Param p) const {
    if (is_rational()) return false;
    const Frac& f = frac();
    if (f.var == p) return true;
    for (const auto& c : f.num)
        if (c.uses_param(p)) return true;
    for (const auto& c : f.den)
        if (c.uses_param(p)) return true;
    return false;
}

Scalar Scalar::operator-() const {
    if (is_rational()) return Scalar(Rational(-rational()));
    const Frac& f = frac();
    return make(f.var, vec_neg(f.num), f.den);
}

Scalar operator+(const Scalar& a, const Scalar& b) {
    if (a.is_rational() && b.is_rational()) return Scalar(Rational(a.rational() + b.rational()));
    const Param var = top_var_of(a, b);
    FracView fa = view(a, var), fb = view(b, var);
    return ScalarDetail::build(var, vec_add(vec_mul(fa.num, fb.den), vec_mul(fb.num, fa.den)),
                               vec_mul(fa.den, fb.den));
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar operator*(const Scalar& a, const Scalar& b) {
    if (a.is_rational() && b.is_rational()) return Scalar(Rational(a.rational() * b.rational()));
    const Param var = top_var_of(a, b);
    FracView fa = view(a, var), fb = view(b, var);
    return ScalarDetail::build(var, vec_mul(fa.num, fb.num), vec_mul(fa.den, fb.den));
}

Scalar Scalar::inverse() const {
    if (is_zero()) fail_input("scalar: division by zero");
    if (is_rational()) return Scalar(Rational(1 / rational()));
    const Frac& f = frac();
    return make(f.var, f.den, f.num);
}

Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }

bool Scalar::operator==(const Scalar& o) const {
    if (is_rational() != o.is_rational()) return false;
    if (is_rational()) return rational() == o.rational();
    const Frac& f = frac();
    const Frac& g = o.frac();
    return f.var == g.var && f.num == g.num && f.den == g.den;
}

std::optional<Scalar> Scalar::sqrt_exact() const {
    if (is_rational()) {
        auto r = rational_sqrt(rational());
        if (!r) return std::nullopt;
        return Scalar(*r);
    }
    const Frac& f = frac();
    // num/den is a square iff num*den is a square polynomial; then
    // sqrt(num/den) = sqrt(num*den)/den.
    auto w = vec_sqrt(vec_mul(f.num, f.den));
    if (!w) return std::nullopt;
    return make(f.var, std::move(*w), f.den);
}

Scalar Scalar::specialize(Param p, const Scalar& value) const {
    if (is_rational()) return *this;
    const Frac& f = frac();
    SVec num = f.num, den = f.den;
    for (auto& c : num) c = c.specialize(p, value);
    for (auto& c : den) c = c.specialize(p, value);
    if (f.var != p) return make(f.var, std::move(num), std::move(den));
    const Scalar d = vec_eval(den, value);
    if (d.is_zero())
        fail_input(std::string("scalar specialization: denominator vanishes at ") +
                   param_name(p) + " = " + value.str());
    return vec_eval(num, value) / d;
}

std::string Scalar::str() const {
    if (is_rational()) return rational_str(rational());
    const Frac& f = frac();
    const std::string ns = vec_text(f.num, param_name(f.var));
    if (f.den.size() == 1 && f.den[0].is_one()) return ns;
    return "(" + ns + ")/(" + vec_text(f.den, param_name(f.var)) + ")";
}

bool Scalar::needs_parens() const {
    if (is_rational()) return sgn(rational()) < 0;
    const Frac& f = frac();
    if (f.den.size() > 1 || !f.den[0].is_one()) return true;
    // a single monomial like 4*lambda is safe inside a product
    std::size_t nonzero = 0;
    for (const auto& c : f.num)
        if (!c.is_zero()) ++nonzero;
    if (nonzero != 1) return true;
    for (const auto& c : f.num)
        if (!c.is_zero() && (c.needs_parens() || !c.is_rational())) return true;
    return false;
}

Param Scalar::top_param() const {
    if (is_rational()) fail_internal("scalar: top_param of a rational");
    return frac().var;
}

std::vector<Scalar> Scalar::numerator_coeffs() const {
    if (is_rational()) return {*this};
    return frac().num;
}

std::vector<Scalar> Scalar::denominator_coeffs() const {
    if (is_rational()) return {Scalar(1)};
    return frac().den;
}

}  // namespace specfm
