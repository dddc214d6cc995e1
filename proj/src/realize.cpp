#include "motivecalc/realize.hpp"

#include <algorithm>

namespace motivecalc {

IntPoly sym_poincare(long n, long g) {
    if (n < 0) throw std::invalid_argument("sym_poincare needs n >= 0");
    const std::size_t trunc = static_cast<std::size_t>(n) + 1;
    // (1+xt)^{2g} truncated at x^{n+1}
    PolySeries num(trunc);
    for (std::size_t k = 0; k < trunc && k <= 2 * static_cast<std::size_t>(g); ++k)
        num[k] = IntPoly::monomial(k, binomial(static_cast<unsigned>(2 * g),
                                               static_cast<unsigned>(k)));
    // 1/(1-x) = sum x^k
    PolySeries geo(trunc);
    for (std::size_t k = 0; k < trunc; ++k) geo[k] = IntPoly::constant(1);
    // 1/(1-xt^2) = sum x^k t^{2k}
    PolySeries geo_t(trunc);
    for (std::size_t k = 0; k < trunc; ++k) geo_t[k] = IntPoly::monomial(2 * k);
    PolySeries prod = num.mul(geo).mul(geo_t);
    return prod[static_cast<std::size_t>(n)];
}

IntPoly poincare(const MotiveExpr& a, const CurveContext& ctx) {
    IntPoly total;
    const IntPoly abelian = IntPoly{1, 1}.pow(static_cast<unsigned>(2 * ctx.g));
    for (const auto& t : a.terms()) {
        IntPoly p = IntPoly::monomial(static_cast<std::size_t>(2 * t.twist),
                                      BigInt(static_cast<long>(t.coeff)));
        if (t.twist < 0)
            throw std::invalid_argument("Poincare realization needs effective twists");
        for (const auto& at : t.atoms) {
            switch (at.kind) {
                case AtomKind::SymC:
                    p *= sym_poincare(at.param, ctx.g);
                    break;
                case AtomKind::JacC:
                case AtomKind::PicC:
                    p *= abelian;
                    break;
                case AtomKind::TildeSymC: {
                    if (!ctx.tilde_sym_betti ||
                        !ctx.tilde_sym_betti->count(at.param))
                        throw MissingBettiTableError(static_cast<int>(at.param));
                    p *= ctx.tilde_sym_betti->at(at.param);
                    break;
                }
                case AtomKind::ProjSpace:
                    p *= IntPoly::geometric(static_cast<std::size_t>(at.param) + 1, 2);
                    break;
                case AtomKind::ModuliN:
                case AtomKind::ModuliNL:
                    throw std::invalid_argument(
                        "poincare: moduli atom present; call expand_rational first");
                case AtomKind::Unit:
                    break;
            }
        }
        total += p;
    }
    return total;
}

BigInt euler(const MotiveExpr& a, const CurveContext& ctx) {
    return poincare(a, ctx).eval(BigInt(-1));
}

long dimension(const MotiveAtom& a, const CurveContext& ctx) {
    switch (a.kind) {
        case AtomKind::Unit: return 0;
        case AtomKind::SymC: return a.param;
        case AtomKind::JacC: return ctx.g;
        case AtomKind::PicC: return ctx.g;
        case AtomKind::TildeSymC: return a.param;
        case AtomKind::ProjSpace: return a.param;
        case AtomKind::ModuliN: return 4 * ctx.g - 3;
        case AtomKind::ModuliNL: return 3 * ctx.g - 3;
    }
    return 0;
}

long dimension_of_expr(const MotiveExpr& e, const CurveContext& ctx) {
    long best = -1;
    for (const auto& t : e.terms()) {
        long d = t.twist;
        for (const auto& at : t.atoms) d += dimension(at, ctx);
        best = std::max(best, d);
    }
    return best;
}

ChowDecomposition chow_decomposition(const MotiveExpr& a, long cod,
                                     const CurveContext& ctx) {
    ChowDecomposition out;
    for (const auto& t : a.terms()) {
        for (const auto& at : t.atoms)
            if (at.kind == AtomKind::ModuliN || at.kind == AtomKind::ModuliNL)
                throw std::invalid_argument(
                    "chow_decomposition: moduli atom present; expand first");
        const long k = cod - t.twist;
        if (k < 0) continue;
        long dim = 0;
        for (const auto& at : t.atoms) dim += dimension(at, ctx);
        if (k > dim) continue;
        auto key = std::make_pair(k, t.atoms);
        out.entries[key] += t.coeff;
        if (out.entries[key] == 0) out.entries.erase(key);
    }
    return out;
}

std::string ChowDecomposition::to_string() const {
    if (entries.empty()) return "0";
    std::string s;
    for (const auto& [key, mult] : entries) {
        if (!s.empty()) s += " + ";
        if (mult != 1) s += std::to_string(mult) + "*";
        s += "CH^" + std::to_string(key.first) + "(";
        if (key.second.empty()) {
            s += "point";
        } else {
            for (std::size_t i = 0; i < key.second.size(); ++i) {
                if (i) s += " x ";
                s += key.second[i].to_string();
            }
        }
        s += ")";
        if (key.first == 0 && key.second.size() <= 1 &&
            (key.second.empty() || key.second[0].kind != AtomKind::TildeSymC))
            s += " [rk 1]";
    }
    return s;
}

}  // namespace motivecalc
