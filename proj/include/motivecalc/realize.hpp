#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "motivecalc/motive.hpp"
#include "motivecalc/polynomial.hpp"

namespace motivecalc {

// P_t(Sym^n C): coefficient of x^n in (1+xt)^{2g} / ((1-x)(1-xt^2)),
// computed with truncated power-series arithmetic over exact integers.
IntPoly sym_poincare(long n, long g);

// Additive/multiplicative realization: Q -> 1, twist n -> t^{2n},
// Sym^n C -> sym_poincare, Jac/Pic -> (1+t)^{2g}, ~Sym^n -> table lookup.
// The input must contain no moduli atoms (expand_rational first); throws
// MissingBettiTableError when a ~Sym atom has no table entry.
IntPoly poincare(const MotiveExpr& a, const CurveContext& ctx);

// poincare evaluated at t = -1.
BigInt euler(const MotiveExpr& a, const CurveContext& ctx);

// Dimension of the variety an atom stands for.
long dimension(const MotiveAtom& a, const CurveContext& ctx);

// Top nonvanishing cohomological degree / 2 of an effective expression;
// the dimension of the variety it is the motive of.
long dimension_of_expr(const MotiveExpr& e, const CurveContext& ctx);

// Formal rational Chow-group decomposition in a fixed codimension. Entries
// are keyed by (k, atom product) and mean CH^k(prod) with a multiplicity.
struct ChowDecomposition {
    // key: (k, atoms); value: integer multiplicity
    std::map<std::pair<long, std::vector<MotiveAtom>>, long long> entries;

    friend bool operator==(const ChowDecomposition&, const ChowDecomposition&) = default;
    std::string to_string() const;
};

// CH^{cod} of the expression: each term (A, n, c) contributes
// c * CH^{cod-n}(prod A), dropped when cod-n < 0 or cod-n > dim(prod A).
ChowDecomposition chow_decomposition(const MotiveExpr& a, long cod,
                                     const CurveContext& ctx);

}  // namespace motivecalc
