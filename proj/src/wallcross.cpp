#include "motivecalc/wallcross.hpp"

namespace motivecalc {

ExponentTable exponents(const Weight& alpha, long N) {
    if (alpha.size() != N)
        throw std::invalid_argument("exponents: weight size mismatch");
    if (!is_generic(alpha, N, Parity::Odd)) {
        for (const auto& w : enumerate_walls(N, Parity::Odd))
            if (wall_eval(w, alpha) == 0) throw NotGenericError(w, N);
    }
    ExponentTable tab;
    tab.d.assign(static_cast<std::size_t>(N) + 1, 0);
    for (std::uint32_t I = 0; I < (1u << N); ++I) {
        const int card = __builtin_popcount(I);
        Rational f(card);
        for (long i = 0; i < N; ++i) {
            if (I & (1u << i))
                f -= alpha[i];
            else
                f += alpha[i];
        }
        // the unique j = card mod 2 with j-1 < f < j+1
        BigInt fl = f.get_num() / f.get_den();  // floor, f > 0 here
        long j0 = fl.get_si();
        long j = -1;
        for (long cand = j0 - 1; cand <= j0 + 1; ++cand) {
            if (cand < 0 || ((cand ^ card) & 1)) continue;
            if (Rational(cand - 1) < f && f < Rational(cand + 1)) {
                j = cand;
                break;
            }
        }
        if (j < 0 || j > N)
            throw std::logic_error("exponents: no parity-matched window for subset");
        ++tab.d[static_cast<std::size_t>(j)];
    }
    tab.c.resize(tab.d.size());
    for (long j = 0; j <= N; ++j)
        tab.c[static_cast<std::size_t>(j)] =
            binomial(static_cast<unsigned>(N), static_cast<unsigned>(j)).get_si() -
            tab.d[static_cast<std::size_t>(j)];
    if (N >= 3) {
        tab.b.assign(static_cast<std::size_t>(N) - 2, 0);
        for (long j = 0; j <= N - 3; ++j) {
            long long acc = 0;
            for (long i = 0; i <= j; ++i)
                acc += ((i + 2) / 2) * tab.c[static_cast<std::size_t>(j - i)];
            tab.b[static_cast<std::size_t>(j)] = acc;
        }
    }
    return tab;
}

MotiveExpr cross_wall(const MotiveExpr& m, const FlipData& fd,
                      CrossingDirection direction) {
    // Landing on the H^- side gains centre(j) for n_+ < j <= n_-, landing on
    // H^+ gains n_- < j <= n_+; the departed side's range is subtracted.
    long gain_lo, gain_hi, lose_lo, lose_hi;
    if (direction == CrossingDirection::PlusToMinus) {
        gain_lo = fd.n_plus;
        gain_hi = fd.n_minus;
        lose_lo = fd.n_minus;
        lose_hi = fd.n_plus;
    } else {
        gain_lo = fd.n_minus;
        gain_hi = fd.n_plus;
        lose_lo = fd.n_plus;
        lose_hi = fd.n_minus;
    }
    MotiveExpr out = m;
    for (long j = gain_lo + 1; j <= gain_hi; ++j)
        out = dsum(out, twist(fd.center, j));
    for (long j = lose_lo + 1; j <= lose_hi; ++j)
        out = dsum(out, scale(twist(fd.center, j), -1));
    return out;
}

namespace {

MotiveExpr base_flag_bundle_motive(const CurveContext& ctx, long d, bool fixed_det) {
    MotiveAtom moduli =
        fixed_det ? MotiveAtom::moduli_nl(d) : MotiveAtom::moduli_n(d);
    MotiveExpr m = MotiveExpr::atom(moduli);
    return flag_degenerate(m, ctx.N);
}

}  // namespace

MotiveExpr closed_formula_parabolic(const Weight& alpha, const CurveContext& ctx,
                                    long d, bool fixed_det) {
    if (d % 2 == 0)
        throw std::invalid_argument("closed_formula_parabolic needs odd d");
    ExponentTable tab = exponents(alpha, ctx.N);
    MotiveExpr out = base_flag_bundle_motive(ctx, d, fixed_det);
    MotiveExpr jac = MotiveExpr::atom(MotiveAtom::jac_c());
    MotiveExpr centre = fixed_det ? jac : tensor(jac, jac);
    for (std::size_t j = 0; j < tab.b.size(); ++j)
        if (tab.b[j] != 0)
            out = dsum(out, scale(twist(centre, ctx.g + static_cast<long>(j)),
                                  tab.b[j]));
    return out;
}

MotiveExpr motive_by_path(const Weight& alpha, const CurveContext& ctx, long d,
                          bool fixed_det, const Weight* waypoint) {
    if (d % 2 == 0) throw std::invalid_argument("motive_by_path needs odd d");
    const long N = ctx.N;
    Weight start = near_origin_weight(N);
    MotiveExpr m = base_flag_bundle_motive(ctx, d, fixed_det);

    std::vector<std::pair<Weight, Weight>> legs;
    if (waypoint) {
        legs.emplace_back(start, *waypoint);
        legs.emplace_back(*waypoint, alpha);
    } else {
        legs.emplace_back(start, alpha);
    }
    for (const auto& [from, to] : legs) {
        for (const auto& crossing : segment_crossings(from, to, N, Parity::Odd)) {
            FlipData fd = flip_type(crossing.wall, ctx.g, N, fixed_det);
            m = cross_wall(m, fd, crossing.direction);
        }
    }
    if (!is_effective(m))
        throw NotEffectiveError("wall-crossing path produced a virtual motive");
    return m;
}

std::pair<long, Weight> hecke_modify(long d, const Weight& alpha, int i) {
    if (i < 1 || i > alpha.size())
        throw std::invalid_argument("hecke_modify index out of range");
    std::vector<Rational> v = alpha.coords();
    v[static_cast<std::size_t>(i - 1)] = Rational(1) - v[static_cast<std::size_t>(i - 1)];
    return {d - 1, Weight(std::move(v))};
}

MotiveExpr flag_degenerate(const MotiveExpr& m, long N) {
    MotiveExpr out = m;
    const MotiveExpr p1 = MotiveExpr::proj_space(1);
    for (long i = 0; i < N; ++i) out = tensor(out, p1);
    return out;
}

}  // namespace motivecalc
