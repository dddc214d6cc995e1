#include <doctest.h>

#include "motivecalc/realize.hpp"

using namespace motivecalc;

namespace {

// Independent oracle for P_t(Sym^n C): expand the generating function
// (1+xt)^{2g} / ((1-x)(1-xt^2)) by brute triple summation.
IntPoly sym_poincare_oracle(long n, long g) {
    IntPoly total;
    for (long a = 0; a <= n && a <= 2 * g; ++a)
        for (long c = 0; a + c <= n; ++c) {
            // remaining x-power is soaked up by the 1/(1-x) factor
            total += IntPoly::monomial(static_cast<std::size_t>(a + 2 * c),
                                       binomial(static_cast<unsigned>(2 * g),
                                                static_cast<unsigned>(a)));
        }
    return total;
}

const CurveContext g2{2, 0};

}  // namespace

TEST_CASE("sym_poincare frozen examples") {
    CHECK(sym_poincare(0, 5) == IntPoly{1});
    CHECK(sym_poincare(1, 2) == IntPoly{1, 4, 1});
    // computed with the brute-force oracle
    CHECK(sym_poincare(2, 2) == IntPoly{1, 4, 7, 4, 1});
}

TEST_CASE("sym_poincare matches the brute oracle") {
    for (long g = 0; g <= 5; ++g)
        for (long n = 0; n <= 8; ++n)
            CHECK(sym_poincare(n, g) == sym_poincare_oracle(n, g));
}

TEST_CASE("sym_poincare of the projective-space degeneration") {
    // g = 0: Sym^n(P^1) = P^n
    for (long n = 0; n <= 6; ++n)
        CHECK(sym_poincare(n, 0) == IntPoly::geometric(static_cast<std::size_t>(n) + 1, 2));
}

TEST_CASE("poincare of the Jacobian") {
    CHECK(poincare(MotiveExpr::atom(MotiveAtom::jac_c()), g2) == IntPoly{1, 4, 6, 4, 1});
    CHECK(poincare(MotiveExpr::atom(MotiveAtom::pic_c(7)), g2) == IntPoly{1, 4, 6, 4, 1});
}

TEST_CASE("poincare of twisted units") {
    CHECK(poincare(MotiveExpr::unit(3), g2) == IntPoly::monomial(6));
}

TEST_CASE("poincare of N_L at g=2") {
    MotiveExpr nl = expand_rational(MotiveExpr::atom(MotiveAtom::moduli_nl(1)), g2);
    CHECK(poincare(nl, g2) == IntPoly{1, 0, 1, 4, 1, 0, 1});
}

TEST_CASE("poincare rejects unexpanded moduli atoms") {
    CHECK_THROWS_AS(poincare(MotiveExpr::atom(MotiveAtom::moduli_n(1)), g2),
                    std::invalid_argument);
}

TEST_CASE("poincare needs a table for ~Sym atoms") {
    MotiveExpr t = MotiveExpr::atom(MotiveAtom::tilde_sym_c(1));
    CHECK_THROWS_AS(poincare(t, g2), MissingBettiTableError);
    CurveContext with_table = g2;
    with_table.tilde_sym_betti = TildeSymBettiTable{{1, IntPoly{1, 4, 1}}};
    CHECK(poincare(t, with_table) == IntPoly{1, 4, 1});
}

TEST_CASE("euler characteristics") {
    CHECK(euler(MotiveExpr::atom(MotiveAtom::jac_c()), g2) == 0);
    CHECK(euler(MotiveExpr::unit(5), g2) == 1);
    // evaluate 1 + t^2 + 4t^3 + t^4 + t^6 at t = -1
    MotiveExpr nl = expand_rational(MotiveExpr::atom(MotiveAtom::moduli_nl(1)), g2);
    CHECK(euler(nl, g2) == 0);
}

TEST_CASE("atom dimensions") {
    CHECK(dimension(MotiveAtom::moduli_nl(1), g2) == 3);
    CHECK(dimension(MotiveAtom::moduli_n(1), g2) == 5);
    CHECK(dimension(MotiveAtom::sym_c(5), g2) == 5);
    CHECK(dimension(MotiveAtom::tilde_sym_c(3), g2) == 3);
    CHECK(dimension(MotiveAtom::jac_c(), CurveContext{4, 0}) == 4);
    CHECK(dimension(MotiveAtom::proj_space(7), g2) == 7);
}

TEST_CASE("chow decomposition basics") {
    CHECK(chow_decomposition(MotiveExpr::unit(0), 0, g2).entries ==
          ChowDecomposition{{{{0, {}}, 1}}}.entries);
    // vanishing outside [0, dim]
    MotiveExpr jac = MotiveExpr::atom(MotiveAtom::jac_c());
    CHECK(chow_decomposition(jac, -1, g2).entries.empty());
    CHECK(chow_decomposition(jac, 3, g2).entries.empty());
    CHECK_FALSE(chow_decomposition(jac, 2, g2).entries.empty());
}

TEST_CASE("chow decomposition of N_L in codimension one") {
    for (long g : {2L, 3L, 5L}) {
        CurveContext ctx(g, 0);
        MotiveExpr nl = expand_rational(MotiveExpr::atom(MotiveAtom::moduli_nl(1)), ctx);
        ChowDecomposition cd = chow_decomposition(nl, 1, ctx);
        ChowDecomposition expect;
        expect.entries[{0, {MotiveAtom::sym_c(1)}}] = 1;
        CHECK(cd == expect);
    }
}

TEST_CASE("dimension_of_expr tracks the top cohomological degree") {
    MotiveExpr nl = expand_rational(MotiveExpr::atom(MotiveAtom::moduli_nl(1)), g2);
    CHECK(dimension_of_expr(nl, g2) == 3);
    CHECK(2 * dimension_of_expr(nl, g2) == poincare(nl, g2).degree());
}
