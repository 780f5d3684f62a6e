#pragma once

#include <gl2star/poly.hpp>

#include <limits>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace gl2star {

// Coordinate-degree bound through which series coefficients are guaranteed
// correct. "exact" absorbs nothing when combined with a finite bound.
class Trust {
  public:
    static Trust exact() { return Trust(true, 0); }
    static Trust degree(int d) {
        if (d < 0) throw std::invalid_argument("negative trusted degree");
        return Trust(false, d);
    }

    bool is_exact() const { return exact_; }
    int deg() const {
        if (exact_) throw std::logic_error("exact series has no finite trusted degree");
        return deg_;
    }

    friend Trust min(const Trust& a, const Trust& b) {
        if (a.exact_) return b;
        if (b.exact_) return a;
        return degree(std::min(a.deg_, b.deg_));
    }

    Trust lowered(int by = 1) const {
        if (exact_) return *this;
        return degree(std::max(0, deg_ - by));
    }

    // covers(d): coefficients of coordinate degree <= d are reliable
    bool covers(int d) const { return exact_ || deg_ >= d; }

    friend bool operator==(const Trust& a, const Trust& b) {
        return a.exact_ == b.exact_ && (a.exact_ || a.deg_ == b.deg_);
    }

    std::string str() const { return exact_ ? "exact" : std::to_string(deg_); }

  private:
    Trust(bool e, int d) : exact_(e), deg_(d) {}
    bool exact_;
    int deg_;
};

// Truncated formal series in the deformation parameter t with Poly
// coefficients, doubly bounded: hard truncation at t_order, and a trusted
// coordinate degree. Monomials above a finite trust are dropped on
// normalization since nothing may ever read them.
class TSeries {
  public:
    TSeries() = default;
    TSeries(Chart chart, int t_order, Trust trust)
        : chart_(std::move(chart)), trust_(trust),
          coeffs_(static_cast<size_t>(t_order) + 1, Poly(chart_)) {
        if (t_order < 0) throw std::invalid_argument("negative t_order");
    }

    static TSeries constant(const Poly& p, int t_order, Trust trust) {
        TSeries s(p.chart(), t_order, trust);
        s.set_coeff(0, p);
        return s;
    }
    static TSeries constant(const Poly& p, int t_order) {
        return constant(p, t_order, Trust::exact());
    }
    static TSeries scalar(const Chart& chart, const std::vector<Rational>& c) {
        TSeries s(chart, static_cast<int>(c.size()) - 1, Trust::exact());
        for (size_t k = 0; k < c.size(); ++k) s.set_coeff(static_cast<int>(k), Poly(chart, c[k]));
        return s;
    }

    const Chart& chart() const { return chart_; }
    int t_order() const { return static_cast<int>(coeffs_.size()) - 1; }
    const Trust& trust() const { return trust_; }
    const Poly& coeff(int k) const { return coeffs_.at(static_cast<size_t>(k)); }
    const std::vector<Poly>& coeffs() const { return coeffs_; }

    void set_coeff(int k, const Poly& p) {
        require_same_chart(chart_, p.chart(), "series coefficient");
        coeffs_.at(static_cast<size_t>(k)) = trust_.is_exact() ? p : p.truncated(trust_.deg());
    }

    bool is_zero() const {
        for (const auto& p : coeffs_)
            if (!p.is_zero()) return false;
        return true;
    }

    // smallest total coordinate degree appearing in any coefficient
    int min_coord_degree() const {
        int best = std::numeric_limits<int>::max();
        for (const auto& p : coeffs_) {
            auto d = p.min_degree();
            if (d && *d < best) best = *d;
        }
        return best == std::numeric_limits<int>::max() ? 0 : best;
    }

    TSeries with_trust(Trust t) const {
        TSeries r(chart_, t_order(), t);
        for (int k = 0; k <= t_order(); ++k) r.set_coeff(k, coeffs_[k]);
        return r;
    }

    TSeries truncated_to(int coord_degree) const {
        return with_trust(min(trust_, Trust::degree(coord_degree)));
    }

    friend TSeries operator+(const TSeries& f, const TSeries& g) {
        require_same_chart(f.chart_, g.chart_, "series add");
        int n = std::min(f.t_order(), g.t_order());
        TSeries r(f.chart_, n, min(f.trust_, g.trust_));
        for (int k = 0; k <= n; ++k) r.set_coeff(k, f.coeff(k) + g.coeff(k));
        return r;
    }
    friend TSeries operator-(const TSeries& f, const TSeries& g) {
        require_same_chart(f.chart_, g.chart_, "series sub");
        int n = std::min(f.t_order(), g.t_order());
        TSeries r(f.chart_, n, min(f.trust_, g.trust_));
        for (int k = 0; k <= n; ++k) r.set_coeff(k, f.coeff(k) - g.coeff(k));
        return r;
    }
    friend TSeries operator-(const TSeries& f) {
        TSeries r(f.chart_, f.t_order(), f.trust_);
        for (int k = 0; k <= f.t_order(); ++k) r.set_coeff(k, -f.coeff(k));
        return r;
    }

    // Trusted degree of a product: min over operands of their own bound and
    // of (bound + least degree of the other factor); "exact" absorbs nothing.
    static Trust mul_trust(const TSeries& f, const TSeries& g) {
        Trust t = min(f.trust_, g.trust_);
        if (!f.trust_.is_exact())
            t = min(t, Trust::degree(f.trust_.deg() + g.min_coord_degree()));
        if (!g.trust_.is_exact())
            t = min(t, Trust::degree(g.trust_.deg() + f.min_coord_degree()));
        return t;
    }

    friend TSeries operator*(const TSeries& f, const TSeries& g) {
        require_same_chart(f.chart_, g.chart_, "series mul");
        int n = std::min(f.t_order(), g.t_order());
        TSeries r(f.chart_, n, mul_trust(f, g));
        for (int k = 0; k <= n; ++k) {
            Poly acc(f.chart_);
            for (int i = 0; i <= k; ++i) acc += f.coeff(i) * g.coeff(k - i);
            r.set_coeff(k, acc);
        }
        return r;
    }
    friend TSeries operator*(const Rational& c, const TSeries& f) {
        TSeries r(f.chart_, f.t_order(), f.trust_);
        for (int k = 0; k <= f.t_order(); ++k) r.set_coeff(k, c * f.coeff(k));
        return r;
    }
    friend TSeries operator*(const TSeries& f, const Rational& c) { return c * f; }
    friend TSeries operator*(const Poly& p, const TSeries& f) {
        TSeries r(f.chart_, f.t_order(), f.trust_.is_exact() || p.is_zero()
                                             ? f.trust_
                                             : Trust::degree(f.trust_.deg() +
                                                             p.min_degree().value_or(0)));
        for (int k = 0; k <= f.t_order(); ++k) r.set_coeff(k, p * f.coeff(k));
        return r;
    }
    friend TSeries operator*(const TSeries& f, const Poly& p) { return p * f; }

    TSeries& operator+=(const TSeries& g) { return *this = *this + g; }
    TSeries& operator-=(const TSeries& g) { return *this = *this - g; }
    TSeries& operator*=(const TSeries& g) { return *this = *this * g; }

    friend bool operator==(const TSeries& f, const TSeries& g) {
        return f.chart_ == g.chart_ && f.trust_ == g.trust_ && f.coeffs_ == g.coeffs_;
    }

    TSeries derivative(int var) const {
        TSeries r(chart_, t_order(), trust_.lowered());
        for (int k = 0; k <= t_order(); ++k) r.set_coeff(k, coeffs_[k].derivative(var));
        return r;
    }
    TSeries derivative(const std::string& var) const { return derivative(chart_.index_of(var)); }

    std::vector<std::string> coeff_strings() const {
        std::vector<std::string> out;
        for (const auto& p : coeffs_) out.push_back(p.str());
        return out;
    }

  private:
    Chart chart_;
    Trust trust_ = Trust::exact();
    std::vector<Poly> coeffs_;
};

// ---- scalar series (constant Poly coefficients) ------------------------

namespace detail {
inline void require_unit_constant(const TSeries& g, const char* what) {
    Poly c0 = g.coeff(0);
    if (!(c0 == Poly(g.chart(), rat(1))))
        throw std::invalid_argument(std::string(what) + ": series constant term is not 1");
}
} // namespace detail

// 1/g for unit-constant g, by formal series recursion.
inline TSeries reciprocal(const TSeries& g) {
    detail::require_unit_constant(g, "reciprocal");
    TSeries r(g.chart(), g.t_order(), g.trust());
    r.set_coeff(0, Poly(g.chart(), rat(1)));
    for (int k = 1; k <= g.t_order(); ++k) {
        Poly acc(g.chart());
        for (int i = 1; i <= k; ++i) acc += g.coeff(i) * r.coeff(k - i);
        r.set_coeff(k, -acc);
    }
    return r;
}

// sqrt(g) for unit-constant g: s_k = (g_k - sum_{0<i<k} s_i s_{k-i}) / 2.
inline TSeries sqrt_series(const TSeries& g) {
    detail::require_unit_constant(g, "sqrt");
    TSeries s(g.chart(), g.t_order(), g.trust());
    s.set_coeff(0, Poly(g.chart(), rat(1)));
    const Rational half = rat(1, 2);
    for (int k = 1; k <= g.t_order(); ++k) {
        Poly acc = g.coeff(k);
        for (int i = 1; i < k; ++i) acc -= s.coeff(i) * s.coeff(k - i);
        s.set_coeff(k, half * acc);
    }
    return s;
}

// exp(k t) as an exact scalar series over `chart`.
inline TSeries exp_kt(const Chart& chart, const Rational& k, int t_order) {
    std::vector<Rational> c(static_cast<size_t>(t_order) + 1, Rational(0));
    c[0] = 1;
    for (int n = 1; n <= t_order; ++n) c[n] = c[n - 1] * k / rat(n);
    return TSeries::scalar(chart, c);
}

inline TSeries cosh_t(const Chart& chart, int t_order, const Rational& k = Rational(1)) {
    return rat(1, 2) * (exp_kt(chart, k, t_order) + exp_kt(chart, -k, t_order));
}
inline TSeries sinh_t(const Chart& chart, int t_order, const Rational& k = Rational(1)) {
    return rat(1, 2) * (exp_kt(chart, k, t_order) - exp_kt(chart, -k, t_order));
}
inline TSeries sech_t(const Chart& chart, int t_order) {
    return reciprocal(cosh_t(chart, t_order));
}
inline TSeries tanh_t(const Chart& chart, int t_order) {
    return sinh_t(chart, t_order) * sech_t(chart, t_order);
}
// s(t) = sqrt(2 / (1 + exp(-2t)))
inline TSeries sqrt_ratio_s(const Chart& chart, int t_order) {
    TSeries h = rat(1, 2) * (exp_kt(chart, rat(0), t_order) + exp_kt(chart, rat(-2), t_order));
    return sqrt_series(reciprocal(h));
}

// ---- substitution -------------------------------------------------------

// Substitute chart-A variables in `target` by series over chart B. All used
// variables need images; images must share chart and t_order. The result's
// trusted degree is the min over the images actually used.
inline TSeries series_substitute(const Poly& target,
                                 const std::map<std::string, TSeries>& images) {
    const Chart& from = target.chart();
    std::vector<const TSeries*> image_of(from.size(), nullptr);
    const Chart* to = nullptr;
    int t_order = -1;
    for (const auto& [var, s] : images) {
        image_of[static_cast<size_t>(from.index_of(var))] = &s;
        if (!to) {
            to = &s.chart();
            t_order = s.t_order();
        } else {
            require_same_chart(*to, s.chart(), "substitution images");
            if (s.t_order() != t_order)
                throw std::invalid_argument("substitution images disagree on t_order");
        }
    }
    if (!to) throw std::invalid_argument("substitution with no images");

    Trust trust = Trust::exact();
    for (const auto& [m, c] : target.terms())
        for (size_t v = 0; v < m.size(); ++v)
            if (m[v] > 0) {
                if (!image_of[v])
                    throw std::invalid_argument("no substitution image for variable " +
                                                from.variable(v));
                trust = min(trust, image_of[v]->trust());
            }

    TSeries result(*to, t_order, trust);
    // cache of per-variable powers, built on demand
    std::vector<std::vector<TSeries>> powers(from.size());
    auto power = [&](size_t v, int e) -> const TSeries& {
        auto& cache = powers[v];
        if (cache.empty()) cache.push_back(TSeries::constant(Poly(*to, rat(1)), t_order));
        while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * *image_of[v]);
        return cache[static_cast<size_t>(e)];
    };
    for (const auto& [m, c] : target.terms()) {
        TSeries term = TSeries::constant(Poly(*to, c), t_order);
        for (size_t v = 0; v < m.size(); ++v)
            if (m[v] > 0) term *= power(v, m[v]);
        result += term.with_trust(trust);
    }
    return result;
}

} // namespace gl2star
