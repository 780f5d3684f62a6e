#pragma once

#include <gl2star/poly.hpp>

#include <array>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>

namespace gl2star {

// 2x2 rational matrix; doubles as a gl(2) element over the basis
// (E11, E12, E21, E22) whose coefficients are just the entries.
struct Mat2 {
    std::array<std::array<Rational, 2>, 2> m{};

    static Mat2 zero() { return Mat2{}; }
    static Mat2 unit(int i, int j) {
        Mat2 r;
        r.m[static_cast<size_t>(i)][static_cast<size_t>(j)] = 1;
        return r;
    }
    static Mat2 identity() {
        Mat2 r;
        r.m[0][0] = r.m[1][1] = 1;
        return r;
    }

    friend Mat2 operator*(const Mat2& a, const Mat2& b) {
        Mat2 r;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                for (int k = 0; k < 2; ++k)
                    r.m[i][j] += a.m[i][k] * b.m[k][j];
        return r;
    }
    friend Mat2 operator+(const Mat2& a, const Mat2& b) {
        Mat2 r;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) r.m[i][j] = a.m[i][j] + b.m[i][j];
        return r;
    }
    friend Mat2 operator-(const Mat2& a, const Mat2& b) {
        Mat2 r;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) r.m[i][j] = a.m[i][j] - b.m[i][j];
        return r;
    }
    friend bool operator==(const Mat2& a, const Mat2& b) { return a.m == b.m; }
};

inline Mat2 commutator(const Mat2& a, const Mat2& b) { return a * b - b * a; }

inline Mat2 x_plus() { return Mat2::unit(0, 1); }
inline Mat2 x_minus() { return Mat2::unit(1, 0); }
inline Mat2 cartan_h() { return Mat2::unit(0, 0) - Mat2::unit(1, 1); }

// fixed gl(2) basis order; index k corresponds to E_{k/2, k%2}
inline const std::array<Mat2, 4>& gl2_basis() {
    static const std::array<Mat2, 4> basis = {Mat2::unit(0, 0), Mat2::unit(0, 1),
                                              Mat2::unit(1, 0), Mat2::unit(1, 1)};
    return basis;
}

inline const std::array<std::string, 4>& gl2_basis_names() {
    static const std::array<std::string, 4> names = {"E11", "E12", "E21", "E22"};
    return names;
}

// coefficients of a matrix over the E_ij basis (a permutation of its entries)
inline std::array<Rational, 4> basis_coefficients(const Mat2& x) {
    return {x.m[0][0], x.m[0][1], x.m[1][0], x.m[1][1]};
}

// Element of gl(2)^{tensor k} for k in {2,3}, stored as a signed sum of
// basis-index tuples. Unused slots hold -1.
class TensorElem {
  public:
    using Key = std::array<int, 3>;

    explicit TensorElem(int arity) : arity_(arity) {
        if (arity != 2 && arity != 3) throw std::invalid_argument("tensor arity must be 2 or 3");
    }

    int arity() const { return arity_; }
    const std::map<Key, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add(Key k, const Rational& c) {
        for (int s = arity_; s < 3; ++s) k[static_cast<size_t>(s)] = -1;
        if (gl2star::is_zero(c)) return;
        auto [it, inserted] = terms_.try_emplace(k, c);
        if (!inserted) {
            it->second += c;
            if (gl2star::is_zero(it->second)) terms_.erase(it);
        }
    }

    friend TensorElem operator+(const TensorElem& a, const TensorElem& b) {
        if (a.arity_ != b.arity_) throw std::invalid_argument("tensor arity mismatch");
        TensorElem r = a;
        for (const auto& [k, c] : b.terms_) r.add(k, c);
        return r;
    }
    friend TensorElem operator-(const TensorElem& a, const TensorElem& b) {
        if (a.arity_ != b.arity_) throw std::invalid_argument("tensor arity mismatch");
        TensorElem r = a;
        for (const auto& [k, c] : b.terms_) r.add(k, -c);
        return r;
    }
    friend TensorElem operator*(const Rational& c, const TensorElem& a) {
        TensorElem r(a.arity_);
        for (const auto& [k, v] : a.terms_) r.add(k, c * v);
        return r;
    }
    friend bool operator==(const TensorElem& a, const TensorElem& b) {
        return a.arity_ == b.arity_ && a.terms_ == b.terms_;
    }

    // swap the two slots of an arity-2 element
    TensorElem flipped() const {
        if (arity_ != 2) throw std::logic_error("flip needs arity 2");
        TensorElem r(2);
        for (const auto& [k, c] : terms_) r.add({k[1], k[0], -1}, c);
        return r;
    }

    bool antisymmetric2() const {
        return arity_ == 2 && (*this + flipped()).is_zero();
    }

    // signed sum over all slot permutations, divided by their count
    TensorElem antisymmetrization3() const {
        if (arity_ != 3) throw std::logic_error("antisymmetrization needs arity 3");
        static const std::array<std::array<int, 3>, 6> perms = {
            {{0, 1, 2}, {1, 0, 2}, {1, 2, 0}, {2, 1, 0}, {2, 0, 1}, {0, 2, 1}}};
        static const std::array<int, 6> signs = {1, -1, 1, -1, 1, -1};
        TensorElem r(3);
        for (const auto& [k, c] : terms_)
            for (size_t p = 0; p < perms.size(); ++p)
                r.add({k[perms[p][0]], k[perms[p][1]], k[perms[p][2]]},
                      rat(signs[p], 6) * c);
        return r;
    }

    bool alternating() const { return arity_ == 3 && *this == antisymmetrization3(); }

    // commutator against X acting diagonally on every slot
    TensorElem bracket_with_diagonal(const Mat2& x) const {
        TensorElem r(arity_);
        const auto& basis = gl2_basis();
        for (const auto& [k, c] : terms_)
            for (int s = 0; s < arity_; ++s) {
                Mat2 br = commutator(basis[static_cast<size_t>(k[static_cast<size_t>(s)])], x);
                auto coeffs = basis_coefficients(br);
                for (int b = 0; b < 4; ++b) {
                    if (gl2star::is_zero(coeffs[static_cast<size_t>(b)])) continue;
                    Key nk = k;
                    nk[static_cast<size_t>(s)] = b;
                    r.add(nk, c * coeffs[static_cast<size_t>(b)]);
                }
            }
        return r;
    }

    // signed sums of basis-name tuples, e.g. "+1*(E12, E21)"
    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream out;
        bool first = true;
        for (const auto& [k, c] : terms_) {
            if (!first) out << " ";
            first = false;
            out << (sgn(c) < 0 ? "-" : "+") << to_string(abs(c)) << "*(";
            for (int s = 0; s < arity_; ++s) {
                if (s) out << ", ";
                out << gl2_basis_names()[static_cast<size_t>(k[static_cast<size_t>(s)])];
            }
            out << ")";
        }
        return out.str();
    }

  private:
    int arity_;
    std::map<Key, Rational> terms_;
};

// the GL(2) r-matrix  X+ (x) X-  -  X- (x) X+
inline TensorElem r_tilde() {
    TensorElem r(2);
    r.add({1, 2, -1}, rat(1));
    r.add({2, 1, -1}, rat(-1));
    return r;
}

struct CybeReport {
    TensorElem defect; // [r12,r13] + [r12,r23] + [r13,r23]
    bool alternating = false;
    bool invariant = false;
};

// Yang-Baxter defect of an antisymmetric 2-tensor, computed slot-wise via
// structure constants; checks that it lands in the alternating part and
// commutes with every diagonally-embedded basis element.
inline CybeReport cybe_defect(const TensorElem& r) {
    if (r.arity() != 2) throw std::invalid_argument("cybe_defect expects an arity-2 tensor");
    if (!r.antisymmetric2()) throw std::invalid_argument("cybe_defect expects r + flip(r) = 0");
    const auto& basis = gl2_basis();
    TensorElem defect(3);
    for (const auto& [k1, c1] : r.terms())
        for (const auto& [k2, c2] : r.terms()) {
            int i = k1[0], j = k1[1], k = k2[0], l = k2[1];
            Rational c = c1 * c2;
            auto add_bracket = [&](const Mat2& x, const Mat2& y, int slot, int keep1, int keep2) {
                auto coeffs = basis_coefficients(commutator(x, y));
                for (int b = 0; b < 4; ++b) {
                    if (gl2star::is_zero(coeffs[static_cast<size_t>(b)])) continue;
                    TensorElem::Key key{};
                    key[static_cast<size_t>(slot)] = b;
                    if (slot == 0) {
                        key[1] = keep1;
                        key[2] = keep2;
                    } else if (slot == 1) {
                        key[0] = keep1;
                        key[2] = keep2;
                    } else {
                        key[0] = keep1;
                        key[1] = keep2;
                    }
                    defect.add(key, c * coeffs[static_cast<size_t>(b)]);
                }
            };
            auto bi = [&](int t) { return basis[static_cast<size_t>(t)]; };
            add_bracket(bi(i), bi(k), 0, j, l); // [r12, r13]
            add_bracket(bi(j), bi(k), 1, i, l); // [r12, r23]
            add_bracket(bi(j), bi(l), 2, i, k); // [r13, r23]
        }

    CybeReport report{defect, defect.alternating(), true};
    for (const auto& x : basis)
        if (!defect.bracket_with_diagonal(x).is_zero()) {
            report.invariant = false;
            break;
        }
    return report;
}

enum class Side { left, right };

// Invariant vector field applied to a coordinate polynomial over the
// ordinary chart, with t11=a, t12=b, t21=c, t22=d. The left action sends
// t_ij to (T X)_ij and the right action to (X T)_ij; both extend to
// polynomials as derivations.
inline Poly invariant_field_apply(const Mat2& x, Side side, const Poly& p) {
    if (p.chart() != ordinary_chart())
        throw std::invalid_argument("invariant fields act on the ordinary chart, got " +
                                    p.chart().name());
    const Chart& ord = p.chart();
    auto var = [&](int i, int j) { return Poly::variable(ord, ord.variable(static_cast<size_t>(2 * i + j))); };
    std::array<Poly, 4> image{Poly(ord), Poly(ord), Poly(ord), Poly(ord)};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            Poly img(ord);
            for (int k = 0; k < 2; ++k) {
                if (side == Side::left)
                    img += var(i, k) * x.m[static_cast<size_t>(k)][static_cast<size_t>(j)];
                else
                    img += x.m[static_cast<size_t>(i)][static_cast<size_t>(k)] * var(k, j);
            }
            image[static_cast<size_t>(2 * i + j)] = img;
        }
    Poly out(ord);
    for (int v = 0; v < 4; ++v) out += image[static_cast<size_t>(v)] * p.derivative(v);
    return out;
}

// Poisson bracket of an r-matrix: contraction of invariant-field products.
// The right-minus-left orientation is the one reproducing the quadratic
// coordinate relations; the opposite orientation negates them all (the
// verification pipeline reports this convention explicitly).
inline Poly r_bracket(const TensorElem& r, const Poly& phi, const Poly& psi) {
    require_same_chart(phi.chart(), psi.chart(), "r_bracket");
    if (phi.chart() != ordinary_chart())
        throw std::invalid_argument("r_bracket is defined on the ordinary chart");
    const auto& basis = gl2_basis();
    Poly out(phi.chart());
    for (const auto& [k, c] : r.terms()) {
        const Mat2& xi = basis[static_cast<size_t>(k[0])];
        const Mat2& xj = basis[static_cast<size_t>(k[1])];
        out += c * (invariant_field_apply(xi, Side::right, phi) *
                        invariant_field_apply(xj, Side::right, psi) -
                    invariant_field_apply(xi, Side::left, phi) *
                        invariant_field_apply(xj, Side::left, psi));
    }
    return out;
}

} // namespace gl2star
