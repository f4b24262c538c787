#include "specfm/groebner.hpp"

#include <algorithm>
#include <set>

#include "specfm/error.hpp"
#include "specfm/univariate.hpp"

namespace specfm {

bool MonomialOrder::covers(const VarSet& vars) const {
    for (Var v : vars.list())
        if (std::find(priority_.begin(), priority_.end(), v) == priority_.end()) return false;
    return true;
}

bool MonomialOrder::less(const Monomial& a, const Monomial& b) const {
    if (kind_ == Kind::Lex) {
        for (Var v : priority_) {
            if (a.deg(v) != b.deg(v)) return a.deg(v) < b.deg(v);
        }
        return false;
    }
    std::uint64_t da = 0, db = 0;
    for (Var v : priority_) {
        da += a.deg(v);
        db += b.deg(v);
    }
    if (da != db) return da < db;
    for (auto it = priority_.rbegin(); it != priority_.rend(); ++it) {
        if (a.deg(*it) != b.deg(*it)) return a.deg(*it) > b.deg(*it);
    }
    return false;
}

std::string MonomialOrder::str() const {
    std::string s = kind_ == Kind::Lex ? "lex(" : "grevlex(";
    for (std::size_t i = 0; i < priority_.size(); ++i) {
        if (i) s += ",";
        s += var_name(priority_[i]);
    }
    return s + ")";
}

Ideal Ideal::make(VarSet vars, std::vector<Poly> gens) {
    Ideal ideal;
    ideal.vars = vars;
    for (auto& g : gens) {
        if (!g.vars().subset_of(vars))
            fail_input("ideal: generator uses variables outside the declared set");
        if (g.is_zero()) continue;
        ideal.gens.push_back(g.with_vars(vars));
    }
    return ideal;
}

int Ideal::coefficient_level() const {
    int l = 0;
    for (const auto& g : gens) l = std::max(l, g.coefficient_level());
    return l;
}

bool Ideal::uses_param(Param p) const {
    for (const auto& g : gens)
        if (g.uses_param(p)) return true;
    return false;
}

const Term& lead_term(const Poly& p, const MonomialOrder& order) {
    if (p.is_zero()) fail_internal("lead_term of zero polynomial");
    const Term* best = &p.terms()[0];
    for (const auto& t : p.terms())
        if (order.less(best->mono, t.mono)) best = &t;
    return *best;
}

namespace {

void log_inversion(InversionLog* log, const Scalar& s) {
    if (log && !s.is_rational()) log->inverted.push_back(s);
}

Poly make_monic(const Poly& p, const MonomialOrder& order, InversionLog* log) {
    const Term& lt = lead_term(p, order);
    if (lt.coeff.is_one()) return p;
    log_inversion(log, lt.coeff);
    return p.scaled(lt.coeff.inverse());
}

}  // namespace

Poly normal_form(const Poly& p, const std::vector<Poly>& basis, const MonomialOrder& order,
                 InversionLog* log) {
    Poly remainder(p.vars());
    Poly work = p;
    while (!work.is_zero()) {
        const Term lt = lead_term(work, order);
        bool reduced = false;
        for (const auto& g : basis) {
            if (g.is_zero()) continue;
            const Term& lg = lead_term(g, order);
            if (!lg.mono.divides(lt.mono)) continue;
            const Monomial m = lg.mono.divide_into(lt.mono);
            log_inversion(log, lg.coeff);
            const Scalar c = lt.coeff / lg.coeff;
            work -= g.mul_term(m, c);
            reduced = true;
            break;
        }
        if (!reduced) {
            const Poly single = Poly::term(p.vars(), lt.mono, lt.coeff);
            remainder += single;
            work -= single;
        }
    }
    return remainder;
}

namespace {

Poly spoly(const Poly& a, const Poly& b, const MonomialOrder& order, InversionLog* log) {
    const Term& la = lead_term(a, order);
    const Term& lb = lead_term(b, order);
    const Monomial l = Monomial::lcm(la.mono, lb.mono);
    log_inversion(log, la.coeff);
    log_inversion(log, lb.coeff);
    return a.mul_term(la.mono.divide_into(l), la.coeff.inverse()) -
           b.mul_term(lb.mono.divide_into(l), lb.coeff.inverse());
}

struct Pair {
    std::size_t i, j;
    Monomial lcm;
    std::uint64_t deg;
};

}  // namespace

GroebnerBasis buchberger(const Ideal& ideal, const MonomialOrder& order, InversionLog* log) {
    if (!order.covers(ideal.vars)) fail_input("buchberger: order does not cover the variables");

    std::vector<Poly> basis;
    for (const auto& g : ideal.gens)
        if (!g.is_zero()) basis.push_back(make_monic(g, order, log));

    // pending pairs; processed/discarded pairs recorded for the chain criterion
    std::vector<Pair> pending;
    std::set<std::pair<std::size_t, std::size_t>> pending_keys;
    auto push_pair = [&](std::size_t i, std::size_t j) {
        const Monomial l =
            Monomial::lcm(lead_term(basis[i], order).mono, lead_term(basis[j], order).mono);
        pending.push_back({i, j, l, l.total_degree()});
        pending_keys.insert({i, j});
    };
    for (std::size_t j = 1; j < basis.size(); ++j)
        for (std::size_t i = 0; i < j; ++i) push_pair(i, j);

    auto pair_pending = [&](std::size_t a, std::size_t b) {
        if (a > b) std::swap(a, b);
        return pending_keys.count({a, b}) != 0;
    };

    while (!pending.empty()) {
        // normal selection: minimal lcm degree, ties broken canonically
        std::size_t pick = 0;
        for (std::size_t k = 1; k < pending.size(); ++k) {
            const Pair &a = pending[k], &b = pending[pick];
            if (a.deg != b.deg ? a.deg < b.deg
                               : (a.lcm != b.lcm ? order.less(a.lcm, b.lcm)
                                                 : std::tie(a.i, a.j) < std::tie(b.i, b.j)))
                pick = k;
        }
        const Pair pair = pending[pick];
        pending.erase(pending.begin() + std::ptrdiff_t(pick));
        pending_keys.erase({pair.i, pair.j});

        const Monomial& li = lead_term(basis[pair.i], order).mono;
        const Monomial& lj = lead_term(basis[pair.j], order).mono;
        // product criterion
        if (li.coprime_with(lj)) continue;
        // chain criterion: some k with LT(k) | lcm(i,j) and both companion
        // pairs already handled
        bool skip = false;
        for (std::size_t k = 0; k < basis.size() && !skip; ++k) {
            if (k == pair.i || k == pair.j) continue;
            if (!lead_term(basis[k], order).mono.divides(pair.lcm)) continue;
            if (!pair_pending(pair.i, k) && !pair_pending(pair.j, k)) skip = true;
        }
        if (skip) continue;

        Poly s = spoly(basis[pair.i], basis[pair.j], order, log);
        Poly nf = normal_form(s, basis, order, log);
        if (nf.is_zero()) continue;
        basis.push_back(make_monic(nf, order, log));
        for (std::size_t i = 0; i + 1 < basis.size(); ++i) push_pair(i, basis.size() - 1);
    }

    // minimalize: drop elements whose leading term is divisible by another's
    std::vector<Poly> minimal;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        const Monomial& li = lead_term(basis[i], order).mono;
        bool redundant = false;
        for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
            if (i == j) continue;
            const Monomial& lj = lead_term(basis[j], order).mono;
            if (lj != li && lj.divides(li)) redundant = true;
            if (lj == li && j < i) redundant = true;  // keep the first of equals
        }
        if (!redundant) minimal.push_back(basis[i]);
    }

    // tail-reduce to the unique reduced basis
    for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t i = 0; i < minimal.size(); ++i) {
            std::vector<Poly> others;
            for (std::size_t j = 0; j < minimal.size(); ++j)
                if (j != i) others.push_back(minimal[j]);
            Poly r = make_monic(normal_form(minimal[i], others, order, log), order, log);
            if (r != minimal[i]) {
                minimal[i] = r;
                changed = true;
            }
        }
    }

    std::sort(minimal.begin(), minimal.end(), [&](const Poly& a, const Poly& b) {
        return order.less(lead_term(a, order).mono, lead_term(b, order).mono);
    });
    return GroebnerBasis{order, ideal.vars, std::move(minimal)};
}

std::optional<std::vector<Monomial>> standard_monomials(const GroebnerBasis& gb) {
    std::vector<Monomial> lts;
    for (const auto& g : gb.polys) lts.push_back(lead_term(g, gb.order).mono);
    for (const auto& m : lts)
        if (m.is_one()) return std::vector<Monomial>{};  // unit ideal

    const std::vector<Var> vars = gb.vars.list();
    std::vector<std::uint32_t> bound(vars.size(), 0);
    for (std::size_t vi = 0; vi < vars.size(); ++vi) {
        bool found = false;
        for (const auto& m : lts) {
            bool pure = m.deg(vars[vi]) > 0;
            for (Var u : gb.vars.list())
                if (u != vars[vi] && m.deg(u) > 0) pure = false;
            if (pure) {
                const std::uint32_t d = m.deg(vars[vi]);
                bound[vi] = found ? std::min(bound[vi], d) : d;
                found = true;
            }
        }
        if (!found) return std::nullopt;  // no pure power: infinite staircase
    }

    std::vector<Monomial> standard;
    Monomial cur;
    // enumerate the box below the pure-power bounds, filter by divisibility
    std::function<void(std::size_t)> rec = [&](std::size_t vi) {
        if (vi == vars.size()) {
            for (const auto& m : lts)
                if (m.divides(cur)) return;
            standard.push_back(cur);
            return;
        }
        for (std::uint32_t e = 0; e < bound[vi]; ++e) {
            cur.e[int(vars[vi])] = e;
            rec(vi + 1);
        }
        cur.e[int(vars[vi])] = 0;
    };
    rec(0);
    std::sort(standard.begin(), standard.end(), canonical_mono_less);
    return standard;
}

std::optional<std::size_t> quotient_length(const GroebnerBasis& gb) {
    auto sm = standard_monomials(gb);
    if (!sm) return std::nullopt;
    return sm->size();
}

bool ideal_contains(const GroebnerBasis& gb, const Poly& p) {
    return normal_form(p.with_vars(gb.vars), gb.polys, gb.order).is_zero();
}

namespace {

MonomialOrder default_order(const VarSet& vars) { return MonomialOrder::grevlex(vars.list()); }

}  // namespace

bool ideals_equal(const Ideal& a, const Ideal& b) {
    if (a.vars != b.vars) return false;
    const GroebnerBasis ga = buchberger(a, default_order(a.vars));
    const GroebnerBasis gb = buchberger(b, default_order(b.vars));
    return ga.polys == gb.polys;
}

Poly eliminate(const Ideal& ideal, Var keep) {
    if (!ideal.vars.contains(keep)) fail_input("eliminate: kept variable not in the ideal");
    std::vector<Var> priority;
    for (Var v : ideal.vars.list())
        if (v != keep) priority.push_back(v);
    priority.push_back(keep);
    const GroebnerBasis gb = buchberger(ideal, MonomialOrder::lex(priority));

    std::vector<Poly> kept;
    for (const auto& g : gb.polys) {
        bool only_keep = true;
        for (Var v : ideal.vars.list())
            if (v != keep && g.involves(v)) only_keep = false;
        if (only_keep) kept.push_back(g);
    }
    if (kept.empty())
        fail_input("eliminate: elimination ideal is zero (ideal not zero-dimensional)");
    Poly best = kept[0];
    for (const auto& g : kept)
        if (g.degree_in(keep) < best.degree_in(keep)) best = g;
    // reduced basis elements are monic already
    return best.with_vars(VarSet{keep});
}

Ideal ideal_quotient(const Ideal& ideal, const Poly& f) {
    if (f.is_zero()) fail_input("ideal_quotient: f = 0");
    if (ideal.gens.empty()) return ideal;
    if (f.is_constant()) return Ideal::make(ideal.vars, ideal.gens);
    if (ideal.vars.contains(Var::w))
        fail_input("ideal_quotient: the auxiliary variable w is reserved");

    const VarSet ext = ideal.vars.united(VarSet{Var::w});
    const Poly w = Poly::variable(ext, Var::w);
    const Poly one = Poly::constant(ext, Scalar(1));
    std::vector<Poly> gens;
    for (const auto& g : ideal.gens) gens.push_back(w * g.with_vars(ext));
    gens.push_back((one - w) * f.with_vars(ext));

    std::vector<Var> priority{Var::w};
    for (Var v : ideal.vars.list()) priority.push_back(v);
    const GroebnerBasis gb =
        buchberger(Ideal::make(ext, std::move(gens)), MonomialOrder::lex(priority));

    std::vector<Poly> result;
    for (const auto& g : gb.polys) {
        if (g.involves(Var::w)) continue;
        result.push_back(poly_divexact(g.with_vars(ideal.vars), f.with_vars(ideal.vars)));
    }
    return Ideal::make(ideal.vars, std::move(result));
}

Ideal specialize_t(const Ideal& cover, const Scalar& t0) {
    const VarSet out = cover.vars.without(Var::t);
    if (!cover.vars.contains(Var::t)) return Ideal::make(out, cover.gens);
    std::vector<Poly> gens;
    for (const auto& g : cover.gens) {
        Poly s = g.substitute_scalar(Var::t, t0);
        if (!s.is_zero()) gens.push_back(s.with_vars(out));
    }
    return Ideal::make(out, std::move(gens));
}

Ideal generic_fibre_ideal(const Ideal& cover) {
    return specialize_t(cover, Scalar::param(Param::T));
}

}  // namespace specfm
