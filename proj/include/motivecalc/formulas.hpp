#pragma once

#include <vector>

#include "motivecalc/polynomial.hpp"
#include "motivecalc/wallcross.hpp"

namespace motivecalc {

struct NonExactDivisionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// One fixed-locus component of the Higgs-field scaling action.
struct BBComponent {
    enum class Kind : std::uint8_t { VectorBundleLocus, Type11Locus };
    Kind kind = Kind::Type11Locus;
    long d_prime = 0;            // degree of the line subbundle
    std::vector<int> m_prime;    // 0/1 multiplicity vector, length N
    long j = 0;                  // j = g - d' + (d-1)/2
    long l = 0;                  // |m'|
    MotiveExpr base;
    long codim = 0;              // 3g - 2j + l - 2 for type (1,1) components
};

// h(N(2,d)) + sum_{j=1}^{g-1} Pic^{a_{d,j}}(C) (x) Sym^{2j-1}(C) (3g-2j-2)
// with a_{d,j} = g - j + (d-1)/2.
MotiveExpr motive_higgs(const CurveContext& ctx, long d);

// Fixed determinant: Pic (x) Sym is replaced by the 2^{2g}-cover ~Sym.
MotiveExpr motive_higgs_fixed_det(const CurveContext& ctx, long d);

// Fixed loci of the scaling action on the parabolic Higgs moduli space for a
// generic weight: the vector-bundle locus (base = chamber motive of N^alpha)
// plus one type-(1,1) component per (d', m') with
//   d + sum_i alpha_i (1 - 2 m'_i) < 2d' <= 2g - 2 + N + d - |m'|.
std::vector<BBComponent> bb_fixed_loci_par_higgs(const CurveContext& ctx, long d,
                                                 const Weight& alpha,
                                                 bool fixed_det = false);

// Closed formula for the parabolic Higgs motive; independent of the weight.
MotiveExpr motive_par_higgs(const CurveContext& ctx, long d, bool fixed_det);

// State of the pair-moduli flip chain for degree d = 4g-3+2delta: starts at
// P_t(P^{5g-5+2delta}), each step applies the flip of type
// (step, 5g-7+2delta-2*step) with centre Sym^{step+1}(C), and the final
// space fibres over N_L as a P^{2g-2+2delta}-bundle.
struct ThaddeusState {
    long g = 2;
    long delta = 0;
    long step = 0;  // flips applied so far, 0 .. 2g-2+delta
    IntPoly poly;

    static ThaddeusState initial(long g, long delta);
    bool done() const { return step > 2 * g - 3 + delta; }
    void advance();
    // strips the projective-bundle factor; exact by construction, anything
    // else signals a recursion bug.
    IntPoly quotient_poincare() const;
};

// Runs the whole chain; independent of delta.
IntPoly thaddeus_poincare_NL(long g, long delta);

// Even degree d: Hecke modification at the first point, then the odd-degree
// closed formula at d-1.
MotiveExpr motive_parabolic_even(const CurveContext& ctx, long d,
                                 const Weight& alpha, bool fixed_det);

// Poincare polynomial of the whole BB decomposition:
// sum over components of t^{2 codim} P_t(base).
IntPoly bb_poincare(const std::vector<BBComponent>& components,
                    const CurveContext& ctx);

}  // namespace motivecalc
