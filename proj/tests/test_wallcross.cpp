#include <doctest.h>

#include "motivecalc/realize.hpp"
#include "motivecalc/wallcross.hpp"

using namespace motivecalc;

namespace {

Weight w(std::initializer_list<std::string> coords) {
    std::vector<Rational> v;
    for (const auto& s : coords) v.push_back(parse_rational(s));
    return Weight(std::move(v));
}

MotiveExpr jac2(long tw = 0) {
    MotiveExpr j = MotiveExpr::atom(MotiveAtom::jac_c());
    return twist(tensor(j, j), tw);
}

}  // namespace

TEST_CASE("exponents near the origin give binomials and b = 0") {
    for (long N = 1; N <= 8; ++N) {
        ExponentTable tab = exponents(near_origin_weight(N), N);
        for (long j = 0; j <= N; ++j) {
            CHECK(tab.d[static_cast<std::size_t>(j)] ==
                  binomial(static_cast<unsigned>(N), static_cast<unsigned>(j)).get_si());
            CHECK(tab.c[static_cast<std::size_t>(j)] == 0);
        }
        for (long long b : tab.b) CHECK(b == 0);
    }
}

TEST_CASE("exponents at the N=3 centre") {
    ExponentTable tab = exponents(w({"1/2", "1/2", "1/2"}), 3);
    CHECK(tab.d == std::vector<long long>{0, 4, 4, 0});
    CHECK(tab.c == std::vector<long long>{1, -1, -1, 1});
    REQUIRE(tab.b.size() == 1);
    CHECK(tab.b[0] == 1);
}

TEST_CASE("exponents in a perturbed N=4 maximal chamber") {
    ExponentTable tab = exponents(w({"31/64", "127/256", "249/512", "1/2"}), 4);
    CHECK(tab.d == std::vector<long long>{0, 4, 8, 4, 0});
    REQUIRE(tab.b.size() == 2);
    CHECK(tab.b[0] == 1);
    CHECK(tab.b[1] == 1);
}

TEST_CASE("exponents reject weights on walls") {
    CHECK_THROWS_AS(exponents(w({"1/2", "1/2"}), 2), NotGenericError);
}

TEST_CASE("cross_wall on a flop is the identity") {
    FlipData flop = flip_type(Wall{0, 0b11u, Parity::Odd}, 3, 2);
    MotiveExpr m = dsum(MotiveExpr::unit(0), jac2(1));
    CHECK(cross_wall(m, flop, CrossingDirection::PlusToMinus) == m);
    CHECK(cross_wall(m, flop, CrossingDirection::MinusToPlus) == m);
}

TEST_CASE("cross_wall adds the centre twist toward the maximal side") {
    // N=3 back wall: crossing +->- (toward the centre) adds Jac^2(g)
    const long g = 2;
    FlipData fd = flip_type(Wall{0, 0b111u, Parity::Odd}, g, 3);
    MotiveExpr m = MotiveExpr::unit(0);
    MotiveExpr crossed = cross_wall(m, fd, CrossingDirection::PlusToMinus);
    CHECK(crossed == dsum(m, jac2(g)));
    // and the reverse crossing removes it again
    CHECK(cross_wall(crossed, fd, CrossingDirection::MinusToPlus) == m);
}

TEST_CASE("cross_wall round trips through virtual expressions") {
    FlipData fd = flip_type(Wall{0, 0b111u, Parity::Odd}, 4, 3);
    MotiveExpr m = MotiveExpr::zero();
    MotiveExpr there = cross_wall(m, fd, CrossingDirection::MinusToPlus);
    CHECK_FALSE(is_effective(there));  // virtual intermediate values are legal
    CHECK(cross_wall(there, fd, CrossingDirection::PlusToMinus) == m);
}

TEST_CASE("closed formula for N=2 is chamber independent") {
    CurveContext ctx(2, 2);
    MotiveExpr expect = flag_degenerate(MotiveExpr::atom(MotiveAtom::moduli_n(1)), 2);
    CHECK(closed_formula_parabolic(w({"1/8", "1/16"}), ctx, 1, false) == expect);
    CHECK(closed_formula_parabolic(w({"3/4", "7/8"}), ctx, 1, false) == expect);
    CHECK(closed_formula_parabolic(w({"1/8", "13/16"}), ctx, 1, false) == expect);
}

TEST_CASE("closed formula for the N=3 maximal chamber") {
    CurveContext ctx(2, 3);
    MotiveExpr base = flag_degenerate(MotiveExpr::atom(MotiveAtom::moduli_n(1)), 3);
    MotiveExpr maximal = closed_formula_parabolic(w({"1/2", "1/2", "1/2"}), ctx, 1, false);
    CHECK(maximal == dsum(base, jac2(2)));
    // fixed determinant: one copy of the Jacobian
    MotiveExpr base_l = flag_degenerate(MotiveExpr::atom(MotiveAtom::moduli_nl(1)), 3);
    MotiveExpr maximal_l = closed_formula_parabolic(w({"1/2", "1/2", "1/2"}), ctx, 1, true);
    CHECK(maximal_l == dsum(base_l, twist(MotiveExpr::atom(MotiveAtom::jac_c()), 2)));
}

TEST_CASE("motive_by_path equals the closed formula on the worked examples") {
    CurveContext ctx(2, 3);
    Weight maximal = w({"31/64", "127/256", "1/2"});
    CHECK(motive_by_path(maximal, ctx, 1, false) ==
          closed_formula_parabolic(maximal, ctx, 1, false));
    CurveContext ctx2(2, 2);
    Weight far = w({"3/4", "7/8"});
    CHECK(motive_by_path(far, ctx2, 1, false) ==
          flag_degenerate(MotiveExpr::atom(MotiveAtom::moduli_n(1)), 2));
}

TEST_CASE("motive_by_path accepts waypoints") {
    CurveContext ctx(2, 3);
    Weight target = w({"31/64", "127/256", "1/2"});
    Weight way = w({"1/8", "3/4", "1/16"});
    CHECK(motive_by_path(target, ctx, 1, false, &way) ==
          motive_by_path(target, ctx, 1, false));
}

TEST_CASE("hecke_modify flips one coordinate and drops the degree") {
    auto [d, moved] = hecke_modify(4, w({"1/3"}), 1);
    CHECK(d == 3);
    CHECK(moved == w({"2/3"}));
    auto [d2, back] = hecke_modify(d, moved, 1);
    CHECK(d2 == 2);
    CHECK(back == w({"1/3"}));
    CHECK_THROWS_AS(hecke_modify(4, w({"1/3"}), 2), std::invalid_argument);
    CHECK_THROWS_AS(hecke_modify(4, w({"1/3"}), 0), std::invalid_argument);
}

TEST_CASE("flag_degenerate") {
    MotiveExpr n = MotiveExpr::atom(MotiveAtom::moduli_n(1));
    CHECK(flag_degenerate(n, 0) == n);
    MotiveExpr two = flag_degenerate(n, 2);
    MotiveExpr expect = dsum(dsum(n, scale(twist(n, 1), 2)), twist(n, 2));
    CHECK(two == expect);
    // Poincare realization multiplies by (1+t^2)^N
    CurveContext ctx(2, 0);
    IntPoly p = poincare(expand_rational(two, ctx), ctx);
    IntPoly base = poincare(expand_rational(n, ctx), ctx);
    CHECK(p == base * IntPoly{1, 0, 1} * IntPoly{1, 0, 1});
}

namespace {

// Literal reading of the subset-count definition: for each j, count subsets
// I with |I| = j mod 2 and j-1 < |I| + sum_{I^c} a - sum_I a < j+1.
std::vector<long long> d_counts_oracle(const Weight& alpha, long N) {
    std::vector<long long> d(static_cast<std::size_t>(N) + 1, 0);
    for (long j = 0; j <= N; ++j) {
        for (std::uint32_t I = 0; I < (1u << N); ++I) {
            if ((__builtin_popcount(I) ^ j) & 1) continue;
            Rational f(__builtin_popcount(I));
            for (long i = 0; i < N; ++i)
                f += (I & (1u << i)) ? -alpha[i] : alpha[i];
            if (Rational(j - 1) < f && f < Rational(j + 1))
                ++d[static_cast<std::size_t>(j)];
        }
    }
    return d;
}

}  // namespace

TEST_CASE("exponent counts match the literal interval definition") {
    std::uint64_t state = 12345;
    auto next = [&] {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        return state;
    };
    for (long N = 1; N <= 7; ++N) {
        for (int trial = 0; trial < 40; ++trial) {
            std::vector<Rational> v(static_cast<std::size_t>(N));
            for (auto& c : v) {
                c = Rational(1 + static_cast<long>(next() % 1023), 1024);
                c.canonicalize();
            }
            Weight alpha(std::move(v));
            if (!is_generic(alpha, N, Parity::Odd)) continue;
            CHECK(exponents(alpha, N).d == d_counts_oracle(alpha, N));
        }
    }
}

TEST_CASE("wall-crossing increment against hand-computed N=3 exponents") {
    // crossing the back wall changes (d_j) by (1,-1,-1,1)
    ExponentTable lo = exponents(near_origin_weight(3), 3);
    ExponentTable hi = exponents(w({"1/2", "1/2", "1/2"}), 3);
    std::vector<long long> diff(4);
    for (int j = 0; j < 4; ++j) diff[static_cast<std::size_t>(j)] = lo.d[j] - hi.d[j];
    CHECK(diff == std::vector<long long>{1, -1, -1, 1});
}
