#include <doctest.h>

#include <thread>
#include <vector>

#include "motivecalc/formulas.hpp"
#include "motivecalc/realize.hpp"

using namespace motivecalc;

// Every operation is a pure function over immutable values; hammering the
// same queries from several threads must reproduce the single-threaded
// answers bit for bit.
TEST_CASE("concurrent evaluation matches single-threaded results") {
    CurveContext ctx(3, 3);
    Weight alpha({Rational(1, 3), Rational(2, 5), Rational(3, 7)});
    const MotiveExpr expected_motive = closed_formula_parabolic(alpha, ctx, 1, false);
    const IntPoly expected_poly =
        poincare(expand_rational(expected_motive, ctx), ctx);
    const IntPoly expected_sym = sym_poincare(6, 4);

    std::vector<std::thread> workers;
    std::vector<int> ok(8, 0);
    for (int t = 0; t < 8; ++t) {
        workers.emplace_back([&, t] {
            bool good = true;
            for (int i = 0; i < 25; ++i) {
                good = good &&
                       closed_formula_parabolic(alpha, ctx, 1, false) == expected_motive;
                good = good && sym_poincare(6, 4) == expected_sym;
                MotiveExpr m = motive_by_path(alpha, ctx, 1, false);
                good = good && poincare(expand_rational(m, ctx), ctx) == expected_poly;
            }
            ok[static_cast<std::size_t>(t)] = good ? 1 : 0;
        });
    }
    for (auto& w : workers) w.join();
    for (int flag : ok) CHECK(flag == 1);
}
