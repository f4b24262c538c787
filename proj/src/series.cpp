#include "specfm/series.hpp"

#include <sstream>

#include "specfm/error.hpp"

namespace specfm {

TruncSeries::TruncSeries(int order) : order_(order) {
    if (order < 1) fail_input("series: truncation order must be positive");
}

TruncSeries TruncSeries::constant(int order, const Scalar& c) {
    TruncSeries s(order);
    s.put(0, 0, c);
    return s;
}

TruncSeries TruncSeries::var0(int order) {
    TruncSeries s(order);
    s.put(1, 0, Scalar(1));
    return s;
}

TruncSeries TruncSeries::var1(int order) {
    TruncSeries s(order);
    s.put(0, 1, Scalar(1));
    return s;
}

void TruncSeries::put(std::uint32_t i, std::uint32_t j, const Scalar& c) {
    if (c.is_zero()) return;
    if (std::uint64_t(i) + j >= std::uint64_t(order_)) return;
    auto [it, inserted] = terms_.try_emplace({i, j}, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Scalar TruncSeries::coeff(std::uint32_t i, std::uint32_t j) const {
    auto it = terms_.find({i, j});
    return it == terms_.end() ? Scalar(0) : it->second;
}

bool TruncSeries::is_univariate() const {
    for (const auto& [k, c] : terms_) {
        (void)c;
        if (k.second > 0) return false;
    }
    return true;
}

TruncSeries TruncSeries::operator-() const {
    TruncSeries r(order_);
    for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
    return r;
}

TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) {
    const int order = std::min(a.order_, b.order_);
    TruncSeries r = a.truncated(order);
    for (const auto& [k, c] : b.terms_) r.put(k.first, k.second, c);
    return r;
}

TruncSeries operator-(const TruncSeries& a, const TruncSeries& b) { return a + (-b); }

TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
    const int order = std::min(a.order_, b.order_);
    TruncSeries r(order);
    for (const auto& [ka, ca] : a.terms_)
        for (const auto& [kb, cb] : b.terms_)
            r.put(ka.first + kb.first, ka.second + kb.second, ca * cb);
    return r;
}

TruncSeries TruncSeries::scaled(const Scalar& c) const {
    TruncSeries r(order_);
    if (c.is_zero()) return r;
    for (const auto& [k, v] : terms_) r.terms_.emplace(k, v * c);
    return r;
}

TruncSeries TruncSeries::truncated(int new_order) const {
    TruncSeries r(new_order);
    for (const auto& [k, c] : terms_) r.put(k.first, k.second, c);
    return r;
}

TruncSeries TruncSeries::drop_mixed() const {
    TruncSeries r(order_);
    for (const auto& [k, c] : terms_)
        if (k.first == 0 || k.second == 0) r.terms_.emplace(k, c);
    return r;
}

TruncSeries TruncSeries::shifted(int var_index, std::uint32_t k) const {
    TruncSeries r(order_);
    for (const auto& [key, c] : terms_) {
        const std::uint32_t i = key.first + (var_index == 0 ? k : 0);
        const std::uint32_t j = key.second + (var_index == 1 ? k : 0);
        r.put(i, j, c);
    }
    return r;
}

TruncSeries TruncSeries::with_coeff(std::uint32_t i, std::uint32_t j, const Scalar& c) const {
    TruncSeries r = *this;
    r.terms_.erase({i, j});
    r.put(i, j, c);
    return r;
}

std::string TruncSeries::str(const char* n0, const char* n1) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")";
        if (k.first > 0) os << "*" << n0 << "^" << k.first;
        if (k.second > 0) os << "*" << n1 << "^" << k.second;
    }
    return os.str();
}

TruncSeries series_sqrt_one_plus(const TruncSeries& s, int order) {
    if (!s.constant_term().is_zero())
        fail_input("series_sqrt_one_plus: input must have zero constant term");
    const TruncSeries st = s.truncated(order);
    // binomial series: sum_k C(1/2, k) s^k; s^k has degree >= k
    TruncSeries acc = TruncSeries::constant(order, Scalar(1));
    TruncSeries pw = TruncSeries::constant(order, Scalar(1));
    Scalar binom(1);
    for (int k = 1; k < order; ++k) {
        // C(1/2,k) = C(1/2,k-1) * (1/2 - (k-1)) / k
        binom = binom * (Scalar(1, 2) - Scalar(long(k - 1))) / Scalar(long(k));
        pw *= st;
        if (pw.is_zero()) break;
        acc += pw.scaled(binom);
    }
    return acc;
}

TruncSeries series_compose(const TruncSeries& f, const TruncSeries& g) {
    if (!f.is_univariate()) fail_input("series_compose: outer series must be univariate");
    if (!g.constant_term().is_zero())
        fail_input("series_compose: inner series needs zero constant term");
    const int order = std::min(f.order(), g.order());
    // Horner over the dense univariate coefficients of f
    std::vector<Scalar> cf(std::size_t(order), Scalar(0));
    for (const auto& [k, c] : f.terms()) cf[k.first] = c;
    TruncSeries acc(order);
    for (std::size_t i = cf.size(); i-- > 0;) {
        acc = acc * g + TruncSeries::constant(order, cf[i]);
    }
    return acc;
}

TruncSeries series_invert_map(const TruncSeries& f, int order) {
    if (!f.is_univariate()) fail_input("series_invert_map: series must be univariate");
    if (!f.constant_term().is_zero())
        fail_input("series_invert_map: series must have zero constant term");
    const Scalar a1 = f.coeff(1, 0);
    if (a1.is_zero()) fail_input("series_invert_map: linear coefficient must be invertible");
    const TruncSeries ft = f.truncated(order);
    const Scalar a1_inv = a1.inverse();
    TruncSeries g(order);
    g = g.with_coeff(1, 0, a1_inv);
    for (int n = 2; n < order; ++n) {
        const TruncSeries comp = series_compose(ft, g);
        const Scalar resid = comp.coeff(std::uint32_t(n), 0);
        if (resid.is_zero()) continue;
        g = g.with_coeff(std::uint32_t(n), 0, -resid * a1_inv);
    }
    return g;
}

TruncSeries poly_eval_series(const Poly& p, const std::map<Var, TruncSeries>& bindings) {
    int order = 0;
    for (const auto& [v, s] : bindings) {
        (void)v;
        order = order == 0 ? s.order() : std::min(order, s.order());
    }
    if (order == 0) fail_input("poly_eval_series: no bindings");
    for (Var v : p.vars().list())
        if (p.involves(v) && bindings.find(v) == bindings.end())
            fail_input(std::string("poly_eval_series: unbound variable ") + var_name(v));

    TruncSeries acc(order);
    std::map<Var, std::vector<TruncSeries>> powers;
    for (const auto& term : p.terms()) {
        TruncSeries piece = TruncSeries::constant(order, term.coeff);
        for (const auto& [v, s] : bindings) {
            const std::uint32_t k = term.mono.deg(v);
            if (k == 0) continue;
            auto& pw = powers[v];
            if (pw.empty()) pw.push_back(TruncSeries::constant(order, Scalar(1)));
            while (pw.size() <= k) pw.push_back(pw.back() * s);
            piece *= pw[k];
        }
        acc += piece;
    }
    return acc;
}

}  // namespace specfm
