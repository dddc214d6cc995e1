#pragma once

#include <vector>

#include "motivecalc/motive.hpp"
#include "motivecalc/weights.hpp"

namespace motivecalc {

// Subset-count exponents of the closed parabolic formula. The defining
// identity, with the sign forced by the near-origin base case, is
//   (1-x)(1-x^2) B(x) = (1+x)^N - D(x).
struct ExponentTable {
    std::vector<long long> d;  // d_0..d_N
    std::vector<long long> c;  // c_j = C(N,j) - d_j
    std::vector<long long> b;  // b_0..b_{N-3}; empty when N < 3
};

// d_j counts subsets I with |I| = j mod 2 and
// j-1 < |I| + sum_{i not in I} a_i - sum_{i in I} a_i < j+1, by brute force
// over all 2^N subsets in exact arithmetic.
ExponentTable exponents(const Weight& alpha, long N);

// The flip rewrite across one wall. Moving from H^- to H^+ the motive gains
// the centre twists in (n_-, n_+] and loses those in (n_+, n_-] (at most one
// range is nonempty); the reverse crossing inverts the roles. Flops are
// identity rewrites.
MotiveExpr cross_wall(const MotiveExpr& m, const FlipData& fd,
                      CrossingDirection direction);

// h(N or N_L) (x) h(P^1)^N  +  sum_j centre(g+j)^{b_j(alpha)}.
MotiveExpr closed_formula_parabolic(const Weight& alpha, const CurveContext& ctx,
                                    long d, bool fixed_det);

// Walks wall crossings from the reference minimal chamber to alpha, starting
// at the flag-bundle motive and applying cross_wall per crossing; asserts
// effectivity of the result. An optional waypoint routes the path through an
// intermediate weight (used for path-independence checks).
MotiveExpr motive_by_path(const Weight& alpha, const CurveContext& ctx, long d,
                          bool fixed_det, const Weight* waypoint = nullptr);

// Degree drops by one, alpha_i -> 1 - alpha_i.
std::pair<long, Weight> hecke_modify(long d, const Weight& alpha, int i);

// Tensors with h(P^1)^N: each forgotten full flag is a P^1-bundle.
MotiveExpr flag_degenerate(const MotiveExpr& m, long N);

}  // namespace motivecalc
