#include "motivecalc/formulas.hpp"

#include "motivecalc/realize.hpp"

namespace motivecalc {

namespace {

long a_dj(const CurveContext& ctx, long d, long j) {
    return ctx.g - j + (d - 1) / 2;
}

}  // namespace

MotiveExpr motive_higgs(const CurveContext& ctx, long d) {
    if (d % 2 == 0) throw std::invalid_argument("motive_higgs needs odd d");
    MotiveExpr out = MotiveExpr::atom(MotiveAtom::moduli_n(d));
    for (long j = 1; j <= ctx.g - 1; ++j) {
        MotiveExpr stratum = tensor(
            MotiveExpr::atom(MotiveAtom::pic_c(a_dj(ctx, d, j))),
            MotiveExpr::atom(MotiveAtom::sym_c(2 * j - 1)));
        out = dsum(out, twist(stratum, 3 * ctx.g - 2 * j - 2));
    }
    // the Pic atoms were built without the context; renormalize so
    // collapse_pic takes effect
    return normalize({out.terms().begin(), out.terms().end()}, ctx);
}

MotiveExpr motive_higgs_fixed_det(const CurveContext& ctx, long d) {
    if (d % 2 == 0) throw std::invalid_argument("motive_higgs_fixed_det needs odd d");
    MotiveExpr out = MotiveExpr::atom(MotiveAtom::moduli_nl(d));
    for (long j = 1; j <= ctx.g - 1; ++j)
        out = dsum(out, MotiveExpr::atom(MotiveAtom::tilde_sym_c(2 * j - 1),
                                         3 * ctx.g - 2 * j - 2));
    return out;
}

std::vector<BBComponent> bb_fixed_loci_par_higgs(const CurveContext& ctx, long d,
                                                 const Weight& alpha,
                                                 bool fixed_det) {
    if (d % 2 == 0) throw std::invalid_argument("bb enumeration needs odd d");
    const long N = ctx.N;
    if (alpha.size() != N)
        throw std::invalid_argument("bb enumeration: weight size mismatch");
    if (!is_generic(alpha, N, Parity::Odd)) {
        for (const auto& w : enumerate_walls(N, Parity::Odd))
            if (wall_eval(w, alpha) == 0) throw NotGenericError(w, N);
    }

    std::vector<BBComponent> out;
    BBComponent vb;
    vb.kind = BBComponent::Kind::VectorBundleLocus;
    vb.m_prime.assign(static_cast<std::size_t>(N), 0);
    vb.base = closed_formula_parabolic(alpha, ctx, d, fixed_det);
    vb.codim = 0;
    out.push_back(std::move(vb));

    for (std::uint32_t m = 0; m < (1u << N); ++m) {
        const long l = __builtin_popcount(m);
        // threshold: d + sum alpha_i (1 - 2 m'_i) < 2d'
        Rational threshold(d);
        for (long i = 0; i < N; ++i)
            threshold += (m & (1u << i)) ? -alpha[i] : alpha[i];
        const long upper = 2 * ctx.g - 2 + N + d - l;  // inclusive bound on 2d'
        // smallest integer d' with 2d' > threshold
        long dp_min;
        {
            Rational half = threshold / 2;
            BigInt fl;
            mpz_fdiv_q(fl.get_mpz_t(), half.get_num().get_mpz_t(),
                       half.get_den().get_mpz_t());
            dp_min = fl.get_si() + 1;
        }
        for (long twod = 2 * dp_min; twod <= upper; twod += 2) {
            const long dp = twod / 2;
            BBComponent c;
            c.kind = BBComponent::Kind::Type11Locus;
            c.d_prime = dp;
            c.m_prime.assign(static_cast<std::size_t>(N), 0);
            for (long i = 0; i < N; ++i)
                if (m & (1u << i)) c.m_prime[static_cast<std::size_t>(i)] = 1;
            c.l = l;
            c.j = ctx.g - dp + (d - 1) / 2;
            const long sym_index = 2 * c.j + N - l - 1;
            if (fixed_det) {
                c.base = MotiveExpr::atom(MotiveAtom::tilde_sym_c(sym_index));
            } else {
                c.base = normalize(
                    {MotiveTerm{{MotiveAtom::pic_c(a_dj(ctx, d, c.j)),
                                 MotiveAtom::sym_c(sym_index)},
                                0, 1}},
                    ctx);
            }
            c.codim = 3 * ctx.g - 2 * c.j + l - 2;
            out.push_back(std::move(c));
        }
    }
    return out;
}

MotiveExpr motive_par_higgs(const CurveContext& ctx, long d, bool fixed_det) {
    if (d % 2 == 0) throw std::invalid_argument("motive_par_higgs needs odd d");
    const long N = ctx.N;
    MotiveAtom moduli =
        fixed_det ? MotiveAtom::moduli_nl(d) : MotiveAtom::moduli_n(d);
    MotiveExpr out = flag_degenerate(MotiveExpr::atom(moduli), N);
    for (long l = 0; l <= N; ++l) {
        const long long mult =
            binomial(static_cast<unsigned>(N), static_cast<unsigned>(l)).get_si();
        // l + 1 - N <= 2j, so j starts at ceil((l+1-N)/2)
        long j_lo = l + 1 - N;
        j_lo = (j_lo >= 0) ? (j_lo + 1) / 2 : -((-j_lo) / 2);
        for (long j = j_lo; j <= ctx.g - 1; ++j) {
            const long sym_index = 2 * j + N - l - 1;
            MotiveExpr base;
            if (fixed_det) {
                base = MotiveExpr::atom(MotiveAtom::tilde_sym_c(sym_index));
            } else {
                base = normalize({MotiveTerm{{MotiveAtom::pic_c(a_dj(ctx, d, j)),
                                              MotiveAtom::sym_c(sym_index)},
                                             0, 1}},
                                 ctx);
            }
            out = dsum(out, scale(twist(base, 3 * ctx.g - 2 * j + l - 2), mult));
        }
    }
    return out;
}

ThaddeusState ThaddeusState::initial(long g, long delta) {
    if (g < 2) throw std::invalid_argument("the pair-moduli chain needs g >= 2");
    if (delta < 0) throw std::invalid_argument("delta must be >= 0");
    ThaddeusState s;
    s.g = g;
    s.delta = delta;
    s.step = 0;
    s.poly = IntPoly::geometric(static_cast<std::size_t>(5 * g - 5 + 2 * delta) + 1, 2);
    return s;
}

void ThaddeusState::advance() {
    if (done()) throw std::logic_error("pair-moduli chain already finished");
    const long m = step;
    const long l = 5 * g - 7 + 2 * delta - 2 * step;
    IntPoly centre = sym_poincare(step + 1, g);
    // flip from the P^m side to the P^l side: gain (m, l], lose (l, m]
    for (long j = m + 1; j <= l; ++j)
        poly += centre * IntPoly::monomial(static_cast<std::size_t>(2 * j));
    for (long j = l + 1; j <= m; ++j)
        poly -= centre * IntPoly::monomial(static_cast<std::size_t>(2 * j));
    ++step;
}

IntPoly ThaddeusState::quotient_poincare() const {
    IntPoly quotient;
    IntPoly bundle =
        IntPoly::geometric(static_cast<std::size_t>(2 * g - 2 + 2 * delta) + 1, 2);
    if (!poly.divide_exact(bundle, quotient))
        throw NonExactDivisionError(
            "pair-moduli recursion did not divide by the projective bundle");
    return quotient;
}

IntPoly thaddeus_poincare_NL(long g, long delta) {
    ThaddeusState s = ThaddeusState::initial(g, delta);
    while (!s.done()) s.advance();
    return s.quotient_poincare();
}

MotiveExpr motive_parabolic_even(const CurveContext& ctx, long d,
                                 const Weight& alpha, bool fixed_det) {
    if (d % 2 != 0) throw std::invalid_argument("motive_parabolic_even needs even d");
    if (!is_generic(alpha, ctx.N, Parity::Even)) {
        for (const auto& w : enumerate_walls(ctx.N, Parity::Even))
            if (wall_eval(w, alpha) == 0) throw NotGenericError(w, ctx.N);
    }
    auto [d_odd, mapped] = hecke_modify(d, alpha, 1);
    return closed_formula_parabolic(mapped, ctx, d_odd, fixed_det);
}

IntPoly bb_poincare(const std::vector<BBComponent>& components,
                    const CurveContext& ctx) {
    IntPoly total;
    for (const auto& c : components) {
        MotiveExpr base = expand_rational(c.base, ctx);
        total += poincare(base, ctx) *
                 IntPoly::monomial(static_cast<std::size_t>(2 * c.codim));
    }
    return total;
}

}  // namespace motivecalc
