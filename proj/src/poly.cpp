#include "specfm/poly.hpp"

#include <algorithm>
#include <sstream>

#include "specfm/error.hpp"

namespace specfm {

const char* var_name(Var v) {
    switch (v) {
        case Var::x: return "x";
        case Var::y: return "y";
        case Var::z: return "z";
        case Var::t: return "t";
        case Var::w: return "w";
    }
    return "?";
}

std::optional<Var> var_from_name(const std::string& name) {
    if (name == "x") return Var::x;
    if (name == "y") return Var::y;
    if (name == "z") return Var::z;
    if (name == "t") return Var::t;
    if (name == "w") return Var::w;
    return std::nullopt;
}

int VarSet::size() const {
    int n = 0;
    for (int i = 0; i < kVarCount; ++i)
        if (contains(Var(i))) ++n;
    return n;
}

std::vector<Var> VarSet::list() const {
    std::vector<Var> r;
    for (int i = 0; i < kVarCount; ++i)
        if (contains(Var(i))) r.push_back(Var(i));
    return r;
}

bool canonical_mono_less(const Monomial& a, const Monomial& b) {
    const auto da = a.total_degree(), db = b.total_degree();
    if (da != db) return da < db;
    // grevlex tie-break: larger exponent in the *last* differing variable loses
    for (int i = kVarCount - 1; i >= 0; --i) {
        if (a.e[i] != b.e[i]) return a.e[i] > b.e[i];
    }
    return false;
}

namespace {

bool canonical_term_desc(const Term& a, const Term& b) {
    return canonical_mono_less(b.mono, a.mono);
}

}  // namespace

Poly Poly::constant(VarSet vars, Scalar c) {
    Poly p(vars);
    if (!c.is_zero()) p.terms_.push_back({Monomial::one(), std::move(c)});
    return p;
}

Poly Poly::variable(VarSet vars, Var v) {
    if (!vars.contains(v))
        fail_input(std::string("polynomial: variable ") + var_name(v) + " not in variable set");
    Poly p(vars);
    p.terms_.push_back({Monomial::var(v), Scalar(1)});
    return p;
}

Poly Poly::term(VarSet vars, Monomial m, Scalar c) {
    for (int i = 0; i < kVarCount; ++i)
        if (m.e[i] > 0 && !vars.contains(Var(i)))
            fail_input(std::string("polynomial: monomial uses ") + var_name(Var(i)) +
                       " outside the variable set");
    Poly p(vars);
    if (!c.is_zero()) p.terms_.push_back({m, std::move(c)});
    return p;
}

Scalar Poly::constant_value() const {
    if (terms_.empty()) return Scalar(0);
    if (terms_.size() != 1 || !terms_[0].mono.is_one())
        fail_internal("polynomial: constant_value of a non-constant");
    return terms_[0].coeff;
}

std::uint64_t Poly::total_degree() const {
    std::uint64_t d = 0;
    for (const auto& t : terms_) d = std::max(d, t.mono.total_degree());
    return d;
}

std::uint32_t Poly::degree_in(Var v) const {
    std::uint32_t d = 0;
    for (const auto& t : terms_) d = std::max(d, t.mono.deg(v));
    return d;
}

int Poly::coefficient_level() const {
    int l = 0;
    for (const auto& t : terms_) l = std::max(l, t.coeff.level());
    return l;
}

bool Poly::uses_param(Param p) const {
    for (const auto& t : terms_)
        if (t.coeff.uses_param(p)) return true;
    return false;
}

Scalar Poly::coeff_of(const Monomial& m) const {
    for (const auto& t : terms_)
        if (t.mono == m) return t.coeff;
    return Scalar(0);
}

void Poly::check_same_vars(const Poly& o, const char* op) const {
    if (vars_ != o.vars_)
        fail_input(std::string("polynomial ") + op + ": variable-set mismatch");
}

Poly Poly::from_terms(VarSet vars, std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(), canonical_term_desc);
    Poly p(vars);
    for (auto& t : terms) {
        if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
            p.terms_.back().coeff += t.coeff;
            if (p.terms_.back().coeff.is_zero()) p.terms_.pop_back();
        } else if (!t.coeff.is_zero()) {
            p.terms_.push_back(std::move(t));
        }
    }
    return p;
}

Poly Poly::operator-() const {
    Poly r(vars_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.mono, -t.coeff});
    return r;
}

Poly operator+(const Poly& a, const Poly& b) {
    a.check_same_vars(b, "add");
    Poly r(a.vars_);
    r.terms_.reserve(a.terms_.size() + b.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < a.terms_.size() && j < b.terms_.size()) {
        const Term& ta = a.terms_[i];
        const Term& tb = b.terms_[j];
        if (ta.mono == tb.mono) {
            Scalar c = ta.coeff + tb.coeff;
            if (!c.is_zero()) r.terms_.push_back({ta.mono, std::move(c)});
            ++i;
            ++j;
        } else if (canonical_mono_less(tb.mono, ta.mono)) {
            r.terms_.push_back(ta);
            ++i;
        } else {
            r.terms_.push_back(tb);
            ++j;
        }
    }
    for (; i < a.terms_.size(); ++i) r.terms_.push_back(a.terms_[i]);
    for (; j < b.terms_.size(); ++j) r.terms_.push_back(b.terms_[j]);
    return r;
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
    a.check_same_vars(b, "mul");
    std::vector<Term> prod;
    prod.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& ta : a.terms_)
        for (const auto& tb : b.terms_) prod.push_back({ta.mono * tb.mono, ta.coeff * tb.coeff});
    return Poly::from_terms(a.vars_, std::move(prod));
}

Poly Poly::scaled(const Scalar& c) const {
    Poly r(vars_);
    if (c.is_zero()) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.mono, t.coeff * c});
    return r;
}

Poly Poly::mul_term(const Monomial& m, const Scalar& c) const {
    Poly r(vars_);
    if (c.is_zero()) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.mono * m, t.coeff * c});
    // multiplying by a monomial preserves the canonical order
    return r;
}

Poly Poly::pow(std::uint32_t k) const {
    Poly acc = Poly::constant(vars_, Scalar(1));
    Poly base = *this;
    while (k > 0) {
        if (k & 1u) acc *= base;
        base = (k >>= 1) ? base * base : base;
    }
    return acc;
}

Poly Poly::substitute(const std::map<Var, Poly>& bindings) const {
    // simultaneous substitution: result vars = (vars - bound) + binding vars
    VarSet out_vars = vars_;
    for (const auto& [v, p] : bindings) {
        (void)p;
        if (!vars_.contains(v))
            fail_input(std::string("substitute: ") + var_name(v) + " is not a variable here");
        out_vars = out_vars.without(v);
    }
    for (const auto& [v, p] : bindings) {
        (void)v;
        out_vars = out_vars.united(p.vars());
    }

    Poly result = Poly::zero(out_vars);
    // cache of powers per bound variable
    std::map<Var, std::vector<Poly>> powers;
    for (const auto& t : terms_) {
        Poly piece = Poly::constant(out_vars, t.coeff);
        Monomial rest = t.mono;
        for (const auto& [v, p] : bindings) {
            const std::uint32_t k = rest.e[int(v)];
            rest.e[int(v)] = 0;
            if (k == 0) continue;
            auto& pw = powers[v];
            if (pw.empty()) pw.push_back(Poly::constant(out_vars, Scalar(1)));
            while (pw.size() <= k) pw.push_back(pw.back() * p.with_vars(out_vars));
            piece *= pw[k];
        }
        piece = piece.mul_term(rest, Scalar(1));
        result += piece;
    }
    return result;
}

Poly Poly::substitute_scalar(Var v, const Scalar& value) const {
    std::map<Var, Poly> b;
    b.emplace(v, Poly::constant(VarSet{}, value));
    return substitute(b);
}

Poly Poly::derivative(Var v) const {
    Poly r(vars_);
    for (const auto& t : terms_) {
        const std::uint32_t k = t.mono.deg(v);
        if (k == 0) continue;
        Monomial m = t.mono;
        m.e[int(v)] = k - 1;
        r.terms_.push_back({m, t.coeff * Scalar(long(k))});
    }
    // derivative preserves ordering within equal-degree blocks only; re-sort
    return Poly::from_terms(vars_, std::move(r.terms_));
}

Poly Poly::with_vars(VarSet vars) const {
    for (int i = 0; i < kVarCount; ++i) {
        const Var v = Var(i);
        if (!vars.contains(v) && involves(v))
            fail_input(std::string("with_vars: polynomial involves dropped variable ") +
                       var_name(v));
    }
    Poly r = *this;
    r.vars_ = vars;
    return r;
}

Poly Poly::map_coeffs(const std::function<Scalar(const Scalar&)>& f) const {
    Poly r(vars_);
    for (const auto& t : terms_) {
        Scalar c = f(t.coeff);
        if (!c.is_zero()) r.terms_.push_back({t.mono, std::move(c)});
    }
    return r;
}

std::string Poly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
        std::string mono;
        {
            std::ostringstream ms;
            bool mfirst = true;
            for (int i = 0; i < kVarCount; ++i) {
                const std::uint32_t k = t.mono.e[i];
                if (k == 0) continue;
                if (!mfirst) ms << "*";
                ms << var_name(Var(i));
                if (k > 1) ms << "^" << k;
                mfirst = false;
            }
            mono = ms.str();
        }
        std::string piece;
        const Scalar& c = t.coeff;
        if (mono.empty()) {
            piece = c.needs_parens() && !c.is_rational() ? "(" + c.str() + ")" : c.str();
        } else if (c.is_rational()) {
            const Rational& q = c.rational();
            if (q == 1)
                piece = mono;
            else if (q == -1)
                piece = "-" + mono;
            else
                piece = rational_str(q) + "*" + mono;
        } else {
            std::string cs = c.str();
            if (c.needs_parens()) cs = "(" + cs + ")";
            piece = cs + "*" + mono;
        }
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

}  // namespace specfm
