#include <gl2star/liealg.hpp>
#include <gl2star/poisson.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <string>

using namespace gl2star;

namespace {

Poly ordp(const std::string& text) { return poly_from_string(ordinary_chart(), text); }
Poly expp(const std::string& text) { return poly_from_string(exponential_chart(), text); }

// push the coordinate bracket through the chart functions; independent of
// the tensor-transport code path
TSeries bracket_composed(const std::string& u, const std::string& v,
                         const std::map<std::string, TSeries>& images) {
    Poly br = r_bracket(r_tilde(), Poly::variable(ordinary_chart(), u),
                        Poly::variable(ordinary_chart(), v));
    return series_substitute(br, images);
}

} // namespace

TEST_CASE("ordinary tensor") {
    const PoissonTensor& t = ordinary_tensor();
    CHECK(t.entry("a", "d") == ordp("2*b*c"));
    CHECK(t.entry("b", "c").is_zero());
    CHECK(t.entry("d", "a") == ordp("-2*b*c"));
    CHECK(t.entry("a", "b") == ordp("a*b"));
    CHECK(t.trust().is_exact());

    SECTION("matches the r-matrix bracket on every coordinate pair") {
        const char* names[4] = {"a", "b", "c", "d"};
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j)
                CHECK(t.entry(i, j) ==
                      r_bracket(r_tilde(), Poly::variable(ordinary_chart(), names[i]),
                                Poly::variable(ordinary_chart(), names[j])));
    }

    SECTION("jacobi defect vanishes exactly") {
        auto rep = jacobi_defect(t);
        CHECK(rep.pass);
        CHECK(rep.compared_through.is_exact());
        for (const auto& triple : rep.triples) CHECK(triple.defect.is_zero());
    }
}

TEST_CASE("exponential chart functions") {
    auto images = exp_chart_functions(3);

    SECTION("degree-0 part is the identity matrix") {
        CHECK(images.at("a").coeff(0).constant_term() == rat(1));
        CHECK(images.at("d").coeff(0).constant_term() == rat(1));
        CHECK(images.at("b").coeff(0).constant_term() == rat(0));
        CHECK(images.at("c").coeff(0).constant_term() == rat(0));
    }

    SECTION("a through degree 2") {
        auto a2 = exp_chart_functions(2).at("a");
        CHECK(a2.coeff(0) == expp("1 + alpha + 1/2*alpha^2 + 1/2*beta*gamma"));
    }

    SECTION("c through degree 3") {
        CHECK(images.at("c").coeff(0) ==
              expp("gamma + 1/2*gamma*alpha + 1/2*gamma*delta + 1/6*beta*gamma^2 + "
                   "1/6*gamma*alpha^2 + 1/6*gamma*delta^2 + 1/6*gamma*alpha*delta"));
    }

    SECTION("composition with the log jet is the identity through degree 4") {
        auto img4 = exp_chart_functions(4);
        auto xi = log_chart_jet(4);
        const Chart& exp = exponential_chart();
        for (int k = 0; k < 4; ++k) {
            TSeries back = series_substitute(xi[static_cast<size_t>(k)], img4);
            Poly expected = Poly::variable(exp, exp.variable(static_cast<size_t>(k)));
            CHECK(back.coeff(0).truncated(4) == expected);
        }
    }

    SECTION("degree out of range is rejected") {
        CHECK_THROWS_AS(exp_chart_functions(5), std::invalid_argument);
    }
}

TEST_CASE("exponential chart tensor") {
    PoissonTensor t = exp_chart_tensor(3);

    SECTION("the computed transport is the linear dual-algebra tensor") {
        // cross-checked against an independent finite-difference transport of
        // the matrix logarithm; the reference third-order values differ and
        // are carried separately (see reference_exp_tensor)
        CHECK(t.entry("alpha", "beta") == expp("beta"));
        CHECK(t.entry("alpha", "gamma") == expp("gamma"));
        CHECK(t.entry("beta", "delta") == expp("beta"));
        CHECK(t.entry("gamma", "delta") == expp("gamma"));
        CHECK(t.entry("beta", "gamma").is_zero());
        CHECK(t.entry("alpha", "delta").is_zero());
    }

    SECTION("antisymmetry at the representation level") {
        for (int i = 0; i < 4; ++i) {
            CHECK(t.entry(i, i).is_zero());
            for (int j = 0; j < 4; ++j) CHECK(t.entry(i, j) == -t.entry(j, i));
        }
    }

    SECTION("jacobi defect vanishes through degree 2") {
        auto rep = jacobi_defect(t);
        CHECK(rep.pass);
        CHECK(rep.compared_through.deg() == 2);
    }

    SECTION("agrees with pushing the bracket through the chart functions") {
        // independent route: compose {u,v} with the chart series and compare
        // against sum_kl du/dxi^k dv/dxi^l Lambda^{kl}, through degree 2
        auto images = exp_chart_functions(4);
        const Chart& exp = exponential_chart();
        const char* names[4] = {"a", "b", "c", "d"};
        for (int ui = 0; ui < 4; ++ui)
            for (int vi = 0; vi < 4; ++vi) {
                TSeries lhs = bracket_composed(names[ui], names[vi], images);
                TSeries rhs(exp, 0, Trust::exact());
                for (int k = 0; k < 4; ++k)
                    for (int l = 0; l < 4; ++l) {
                        if (k == l) continue;
                        rhs += images.at(names[ui]).derivative(k) *
                               images.at(names[vi]).derivative(l) *
                               TSeries::constant(t.entry(k, l), 0, t.trust());
                    }
                REQUIRE(lhs.coeff(0).truncated(2) == rhs.coeff(0).truncated(2));
            }
    }

    SECTION("degree above the log-jet order is rejected") {
        CHECK_THROWS_AS(exp_chart_tensor(4), std::invalid_argument);
    }
}

TEST_CASE("jacobi defect of the zero tensor") {
    PoissonTensor zero(ordinary_chart(), Trust::exact());
    auto rep = jacobi_defect(zero);
    CHECK(rep.pass);
}

TEST_CASE("reference exponential tensor") {
    const PoissonTensor& t = reference_exp_tensor();

    SECTION("carries the third-order reference entries") {
        CHECK(t.entry("alpha", "beta") == expp("beta + 1/3*beta^2*gamma + 1/3*beta*alpha^2"));
        CHECK(t.entry("beta", "gamma").is_zero());
        CHECK(t.entry("alpha", "delta") == expp("alpha*beta*gamma + beta*gamma*delta"));
        CHECK(t.trust().deg() == 3);
    }

    SECTION("is Poisson through degree 2") {
        auto rep = jacobi_defect(t);
        CHECK(rep.pass);
        CHECK(rep.compared_through.deg() == 2);
    }

    SECTION("agrees with the computed transport through degree 1, differs at 3") {
        PoissonTensor computed = exp_chart_tensor(3);
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j)
                CHECK(t.entry(i, j).truncated(1) == computed.entry(i, j).truncated(1));
        CHECK(t.entry("alpha", "beta") != computed.entry("alpha", "beta"));
    }
}
