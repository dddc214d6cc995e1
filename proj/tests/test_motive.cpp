#include <doctest.h>

#include "motivecalc/motive.hpp"

using namespace motivecalc;

namespace {
const CurveContext g2{2, 0};
}

TEST_CASE("normalize cancels opposite terms") {
    MotiveExpr e = normalize({MotiveTerm{{}, 0, 1}, MotiveTerm{{}, 0, -1}}, g2);
    CHECK(e.is_zero());
}

TEST_CASE("normalize expands the projective line") {
    MotiveExpr e = normalize({MotiveTerm{{MotiveAtom::proj_space(1)}, 0, 1}}, g2);
    CHECK(e == dsum(MotiveExpr::unit(0), MotiveExpr::unit(1)));
    // no ProjSpace atom survives
    for (const auto& t : e.terms())
        for (const auto& a : t.atoms) CHECK(a.kind != AtomKind::ProjSpace);
}

TEST_CASE("normalize collapses Pic to Jac when the flag is set") {
    CurveContext ctx(2, 0, /*collapse=*/true);
    MotiveExpr e = normalize({MotiveTerm{{MotiveAtom::pic_c(3)}, 2, 1}}, ctx);
    CHECK(e == MotiveExpr::atom(MotiveAtom::jac_c(), 2));
    MotiveExpr kept = normalize({MotiveTerm{{MotiveAtom::pic_c(3)}, 2, 1}}, g2);
    CHECK(kept == MotiveExpr::atom(MotiveAtom::pic_c(3), 2));
}

TEST_CASE("normalize absorbs Unit and Sym^0 atoms") {
    MotiveExpr e = normalize(
        {MotiveTerm{{MotiveAtom::unit(), MotiveAtom::sym_c(0), MotiveAtom::jac_c()}, 1, 2}},
        g2);
    CHECK(e == MotiveExpr::atom(MotiveAtom::jac_c(), 1, 2));
}

TEST_CASE("moduli atoms reject even degree") {
    CHECK_THROWS_AS(MotiveAtom::moduli_n(2), std::invalid_argument);
    CHECK_THROWS_AS(MotiveAtom::moduli_nl(0), std::invalid_argument);
    CHECK_NOTHROW(MotiveAtom::moduli_n(-1));
}

TEST_CASE("dsum identities") {
    MotiveExpr jac = MotiveExpr::atom(MotiveAtom::jac_c());
    CHECK(dsum(jac, MotiveExpr::zero()) == jac);
    CHECK(dsum(jac, jac) == scale(jac, 2));
    MotiveExpr j1 = twist(jac, 1);
    CHECK(dsum(j1, scale(j1, -1)).is_zero());
}

TEST_CASE("tensor expands h(P^1)^2") {
    MotiveExpr p1 = MotiveExpr::proj_space(1);
    MotiveExpr sq = tensor(p1, p1);
    MotiveExpr expect = normalize(
        {MotiveTerm{{}, 0, 1}, MotiveTerm{{}, 1, 2}, MotiveTerm{{}, 2, 1}}, g2);
    CHECK(sq == expect);
}

TEST_CASE("tensor with a twisted unit shifts the twist") {
    MotiveExpr jac = MotiveExpr::atom(MotiveAtom::jac_c());
    CHECK(tensor(jac, MotiveExpr::unit(3)) == twist(jac, 3));
}

TEST_CASE("tensor of moduli and Jacobian keeps both atoms") {
    MotiveExpr m = tensor(MotiveExpr::atom(MotiveAtom::moduli_nl(1)),
                          MotiveExpr::atom(MotiveAtom::jac_c()));
    REQUIRE(m.terms().size() == 1);
    CHECK(m.terms()[0].atoms ==
          std::vector<MotiveAtom>{MotiveAtom::jac_c(), MotiveAtom::moduli_nl(1)});
}

TEST_CASE("twist is additive and zero twist is the identity") {
    MotiveExpr x = dsum(MotiveExpr::atom(MotiveAtom::sym_c(2), 1),
                        MotiveExpr::unit(0, 3));
    CHECK(twist(x, 0) == x);
    CHECK(twist(MotiveExpr::unit(1), 2) == MotiveExpr::unit(3));
}

TEST_CASE("is_effective") {
    CHECK(is_effective(MotiveExpr::zero()));
    CHECK_FALSE(is_effective(scale(MotiveExpr::atom(MotiveAtom::jac_c()), -1)));
}

TEST_CASE("expand_rational at g=2") {
    MotiveExpr nl = expand_rational(MotiveExpr::atom(MotiveAtom::moduli_nl(1)), g2);
    MotiveExpr expect = normalize({MotiveTerm{{MotiveAtom::sym_c(1)}, 1, 1},
                                   MotiveTerm{{}, 0, 1},
                                   MotiveTerm{{}, 3, 1}},
                                  g2);
    CHECK(nl == expect);

    MotiveExpr n = expand_rational(MotiveExpr::atom(MotiveAtom::moduli_n(1)), g2);
    CHECK(n == tensor(expect, MotiveExpr::atom(MotiveAtom::jac_c())));
}

TEST_CASE("expand_rational degenerate genera") {
    CurveContext g0(0, 0), g1(1, 0);
    CHECK(expand_rational(MotiveExpr::atom(MotiveAtom::moduli_nl(1)), g0).is_zero());
    CHECK(expand_rational(MotiveExpr::atom(MotiveAtom::moduli_nl(1)), g1) ==
          MotiveExpr::unit());
    CHECK(expand_rational(MotiveExpr::atom(MotiveAtom::moduli_n(1)), g1) ==
          MotiveExpr::atom(MotiveAtom::jac_c()));
}

TEST_CASE("expand_rational leaves no moduli atom behind") {
    MotiveExpr mixed =
        tensor(MotiveExpr::atom(MotiveAtom::moduli_n(3)),
               dsum(MotiveExpr::atom(MotiveAtom::moduli_nl(1), 2),
                    MotiveExpr::atom(MotiveAtom::sym_c(1))));
    MotiveExpr out = expand_rational(mixed, CurveContext{3, 0});
    for (const auto& t : out.terms())
        for (const auto& a : t.atoms) {
            CHECK(a.kind != AtomKind::ModuliN);
            CHECK(a.kind != AtomKind::ModuliNL);
        }
}

TEST_CASE("normal form is deterministic") {
    MotiveExpr a = normalize({MotiveTerm{{MotiveAtom::jac_c(), MotiveAtom::sym_c(2)}, 1, 1},
                              MotiveTerm{{MotiveAtom::sym_c(2), MotiveAtom::jac_c()}, 1, 1}},
                             g2);
    REQUIRE(a.terms().size() == 1);
    CHECK(a.terms()[0].coeff == 2);
    CHECK(std::is_sorted(a.terms()[0].atoms.begin(), a.terms()[0].atoms.end()));
}
