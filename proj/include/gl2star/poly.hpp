#pragma once

#include <gl2star/chart.hpp>
#include <gl2star/rational.hpp>

#include <cctype>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace gl2star {

// Exponent vector over a chart's variables.
using Monomial = std::vector<int>;

inline int degree_of(const Monomial& m) {
    int d = 0;
    for (int e : m) d += e;
    return d;
}

// Graded lexicographic order in the chart's variable order: lower total
// degree first, and within a degree the lexicographically larger exponent
// vector first (so alpha^2 precedes beta*gamma).
struct GrlexLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
        int da = degree_of(a), db = degree_of(b);
        if (da != db) return da < db;
        return a > b; // lex-descending inside a degree block
    }
};

// Sparse multivariate polynomial with exact rational coefficients.
// Invariant: no stored zero coefficients; equality is term-map equality.
class Poly {
  public:
    using TermMap = std::map<Monomial, Rational, GrlexLess>;

    Poly() = default;
    explicit Poly(Chart chart) : chart_(std::move(chart)) {}
    Poly(Chart chart, const Rational& constant) : chart_(std::move(chart)) {
        if (!gl2star::is_zero(constant)) terms_[Monomial(chart_.size(), 0)] = constant;
    }

    static Poly variable(const Chart& chart, const std::string& var, int power = 1) {
        Poly p(chart);
        Monomial m(chart.size(), 0);
        m[chart.index_of(var)] = power;
        p.terms_[m] = rat(1);
        return p;
    }

    const Chart& chart() const { return chart_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    // max over terms of the exponent sum; empty (the -infinity sentinel) for 0
    std::optional<int> total_degree() const {
        std::optional<int> d;
        for (const auto& [m, c] : terms_) {
            int dm = degree_of(m);
            if (!d || dm > *d) d = dm;
        }
        return d;
    }

    std::optional<int> min_degree() const {
        std::optional<int> d;
        for (const auto& [m, c] : terms_) {
            int dm = degree_of(m);
            if (!d || dm < *d) d = dm;
        }
        return d;
    }

    Rational coefficient(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    Rational constant_term() const { return coefficient(Monomial(chart_.size(), 0)); }

    void add_term(const Monomial& m, const Rational& c) {
        if (gl2star::is_zero(c)) return;
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (gl2star::is_zero(it->second)) terms_.erase(it);
        }
    }

    friend Poly operator+(const Poly& p, const Poly& q) {
        require_same_chart(p.chart_, q.chart_, "poly add");
        Poly r = p;
        for (const auto& [m, c] : q.terms_) r.add_term(m, c);
        return r;
    }
    friend Poly operator-(const Poly& p, const Poly& q) {
        require_same_chart(p.chart_, q.chart_, "poly sub");
        Poly r = p;
        for (const auto& [m, c] : q.terms_) r.add_term(m, -c);
        return r;
    }
    friend Poly operator-(const Poly& p) {
        Poly r(p.chart_);
        for (const auto& [m, c] : p.terms_) r.terms_[m] = -c;
        return r;
    }
    friend Poly operator*(const Poly& p, const Poly& q) {
        require_same_chart(p.chart_, q.chart_, "poly mul");
        Poly r(p.chart_);
        for (const auto& [mp, cp] : p.terms_)
            for (const auto& [mq, cq] : q.terms_) {
                Monomial m(mp);
                for (size_t i = 0; i < m.size(); ++i) m[i] += mq[i];
                r.add_term(m, cp * cq);
            }
        return r;
    }
    friend Poly operator*(const Rational& c, const Poly& p) {
        Poly r(p.chart_);
        if (gl2star::is_zero(c)) return r;
        for (const auto& [m, pc] : p.terms_) r.terms_[m] = c * pc;
        return r;
    }
    friend Poly operator*(const Poly& p, const Rational& c) { return c * p; }

    Poly& operator+=(const Poly& q) { return *this = *this + q; }
    Poly& operator-=(const Poly& q) { return *this = *this - q; }
    Poly& operator*=(const Poly& q) { return *this = *this * q; }

    friend bool operator==(const Poly& p, const Poly& q) {
        return p.chart_ == q.chart_ && p.terms_ == q.terms_;
    }
    friend bool operator!=(const Poly& p, const Poly& q) { return !(p == q); }

    Poly derivative(int var) const {
        Poly r(chart_);
        for (const auto& [m, c] : terms_) {
            if (m[var] == 0) continue;
            Monomial dm(m);
            dm[var] -= 1;
            r.add_term(dm, c * rat(m[var]));
        }
        return r;
    }
    Poly derivative(const std::string& var) const { return derivative(chart_.index_of(var)); }

    // drop every monomial of total degree above `deg`
    Poly truncated(int deg) const {
        Poly r(chart_);
        for (const auto& [m, c] : terms_)
            if (degree_of(m) <= deg) r.terms_[m] = c;
        return r;
    }

    // the homogeneous part of total degree `deg`
    Poly homogeneous_part(int deg) const {
        Poly r(chart_);
        for (const auto& [m, c] : terms_)
            if (degree_of(m) == deg) r.terms_[m] = c;
        return r;
    }

    Rational evaluate(const std::vector<Rational>& point) const {
        if (point.size() != chart_.size())
            throw std::invalid_argument("evaluate: wrong point dimension");
        Rational total(0);
        for (const auto& [m, c] : terms_) {
            Rational term = c;
            for (size_t i = 0; i < m.size(); ++i)
                for (int k = 0; k < m[i]; ++k) term *= point[i];
            total += term;
        }
        return total;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream out;
        bool first = true;
        for (const auto& [m, c] : terms_) {
            Rational ac = abs(c);
            if (first) {
                if (sgn(c) < 0) out << "-";
                first = false;
            } else {
                out << (sgn(c) < 0 ? " - " : " + ");
            }
            bool constant = degree_of(m) == 0;
            bool unit = ac == 1;
            if (!unit || constant) out << to_string(ac);
            bool need_star = !unit && !constant;
            for (size_t i = 0; i < m.size(); ++i) {
                if (m[i] == 0) continue;
                if (need_star) out << "*";
                out << chart_.variable(i);
                if (m[i] > 1) out << "^" << m[i];
                need_star = true;
            }
        }
        return out.str();
    }

  private:
    Chart chart_;
    TermMap terms_;
};

// Parses the canonical rendering (signs, "p/q*", "^k"); test and I/O helper.
inline Poly poly_from_string(const Chart& chart, const std::string& text) {
    Poly result(chart);
    size_t i = 0;
    auto skip_ws = [&] { while (i < text.size() && std::isspace((unsigned char)text[i])) ++i; };
    skip_ws();
    if (i == text.size()) throw std::invalid_argument("empty polynomial text");
    bool first = true;
    while (true) {
        skip_ws();
        if (i == text.size()) break;
        int sign = 1;
        if (text[i] == '+' || text[i] == '-') {
            sign = text[i] == '-' ? -1 : 1;
            ++i;
            skip_ws();
        } else if (!first) {
            throw std::invalid_argument("expected sign in polynomial text: " + text);
        }
        first = false;
        Rational coeff = rat(sign);
        bool saw_coeff = false;
        if (i < text.size() && std::isdigit((unsigned char)text[i])) {
            size_t j = i;
            while (j < text.size() && (std::isdigit((unsigned char)text[j]) || text[j] == '/')) ++j;
            coeff = rat(sign) * rat(text.substr(i, j - i));
            i = j;
            saw_coeff = true;
        }
        Monomial m(chart.size(), 0);
        bool saw_var = false;
        while (true) {
            skip_ws();
            if (i < text.size() && text[i] == '*') {
                ++i;
                skip_ws();
            }
            if (i >= text.size() || !std::isalpha((unsigned char)text[i])) break;
            size_t j = i;
            while (j < text.size() && (std::isalnum((unsigned char)text[j]) || text[j] == '_')) ++j;
            int var = chart.index_of(text.substr(i, j - i));
            i = j;
            int power = 1;
            if (i < text.size() && text[i] == '^') {
                ++i;
                size_t k = i;
                while (k < text.size() && std::isdigit((unsigned char)text[k])) ++k;
                power = std::stoi(text.substr(i, k - i));
                i = k;
            }
            m[var] += power;
            saw_var = true;
        }
        if (!saw_coeff && !saw_var)
            throw std::invalid_argument("dangling sign in polynomial text: " + text);
        result.add_term(m, coeff);
    }
    return result;
}

} // namespace gl2star
