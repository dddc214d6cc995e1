#include "motivecalc/weights.hpp"

#include <algorithm>
#include <numeric>

namespace motivecalc {

std::string Weight::to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < alpha_.size(); ++i) {
        if (i) s += ", ";
        s += format_rational(alpha_[i]);
    }
    return s + ")";
}

std::vector<int> Wall::members(long N) const {
    std::vector<int> out;
    for (long i = 0; i < N; ++i)
        if (I & (1u << i)) out.push_back(static_cast<int>(i) + 1);
    return out;
}

std::string Wall::to_string(long N) const {
    std::string s = "W_{" + std::to_string(this->s) + ",{";
    bool first = true;
    for (int i : members(N)) {
        if (!first) s += ",";
        s += std::to_string(i);
        first = false;
    }
    return s + "}}";
}

std::vector<Wall> enumerate_walls(long N, Parity parity) {
    std::vector<Wall> walls;
    if (N <= 0) return walls;
    if (N > 24)
        throw std::invalid_argument("wall enumeration supports N <= 24");
    const std::uint32_t full = (1u << N) - 1u;
    for (long s = 0;; ++s) {
        const long level = (parity == Parity::Odd) ? 2 * s + 1 : 2 * s;
        if (level >= N) break;
        for (std::uint32_t I = 0; I <= full; ++I) {
            if (__builtin_popcount(I) > level)
                walls.push_back(Wall{s, I, parity});
        }
    }
    std::sort(walls.begin(), walls.end());
    return walls;
}

Rational wall_eval(const Wall& w, const Weight& alpha) {
    Rational v(w.level());
    for (long i = 0; i < alpha.size(); ++i) {
        if (w.I & (1u << i))
            v -= alpha[i];
        else
            v += alpha[i];
    }
    return v;
}

bool is_generic(const Weight& alpha, long N, Parity parity) {
    for (const auto& w : enumerate_walls(N, parity))
        if (wall_eval(w, alpha) == 0) return false;
    return true;
}

ChamberSignature chamber_signature(const Weight& alpha, long N, Parity parity) {
    ChamberSignature sig;
    for (const auto& w : enumerate_walls(N, parity)) {
        Rational v = wall_eval(w, alpha);
        if (v == 0) throw NotGenericError(w, N);
        sig.signs.push_back(v > 0 ? +1 : -1);
    }
    return sig;
}

FlipData flip_type(const Wall& w, long g, long N, bool fixed_det) {
    FlipData fd;
    fd.n_minus = g + w.card() - 2 * w.s - 3;
    fd.n_plus = g + N - w.card() + 2 * w.s - 1;
    fd.is_flop = (fd.n_minus == fd.n_plus);
    fd.small_genus_warning = (g < 2);
    MotiveExpr jac = MotiveExpr::atom(MotiveAtom::jac_c());
    fd.center = fixed_det ? jac : tensor(jac, jac);
    return fd;
}

long chi_par(long n_e, long d_e, const std::vector<std::vector<long>>& m_e,
             long n_f, long d_f, const std::vector<std::vector<long>>& m_f,
             long g) {
    if (m_e.size() != m_f.size())
        throw std::invalid_argument("chi_par: multiplicity tables differ in shape");
    long flag = 0;
    for (std::size_t i = 0; i < m_e.size(); ++i) {
        if (m_e[i].size() != m_f[i].size())
            throw std::invalid_argument("chi_par: multiplicity tables differ in shape");
        for (std::size_t j = 0; j < m_e[i].size(); ++j)
            for (std::size_t k = 0; k < j; ++k)
                flag += m_e[i][j] * m_f[i][k];
    }
    return -n_f * d_e + n_e * d_f + n_e * n_f * (1 - g) - flag;
}

Weight hecke_action(const Weight& alpha, int i) {
    if (i < 1 || i > alpha.size() - 1)
        throw std::invalid_argument("hecke_action index out of range");
    std::vector<Rational> v = alpha.coords();
    v[static_cast<std::size_t>(i - 1)] = Rational(1) - v[static_cast<std::size_t>(i - 1)];
    v[static_cast<std::size_t>(i)] = Rational(1) - v[static_cast<std::size_t>(i)];
    return Weight(std::move(v));
}

Weight perm_action(const Weight& alpha, const std::vector<int>& sigma) {
    if (static_cast<long>(sigma.size()) != alpha.size())
        throw std::invalid_argument("perm_action: size mismatch");
    std::vector<Rational> v(sigma.size());
    for (std::size_t i = 0; i < sigma.size(); ++i)
        v[static_cast<std::size_t>(sigma[i])] = alpha[static_cast<long>(i)];
    return Weight(std::move(v));
}

Wall perm_wall(const Wall& w, const std::vector<int>& sigma) {
    Wall out = w;
    out.I = 0;
    for (std::size_t i = 0; i < sigma.size(); ++i)
        if (w.I & (1u << i)) out.I |= (1u << sigma[i]);
    return out;
}

Weight WeightSymmetry::apply(const Weight& a) const {
    std::vector<Rational> v = a.coords();
    for (std::size_t i = 0; i < v.size(); ++i)
        if (flips & (1u << i)) v[i] = Rational(1) - v[i];
    Weight flipped(std::move(v));
    return perm.empty() ? flipped : perm_action(flipped, perm);
}

Wall WeightSymmetry::apply(const Wall& w, long N) const {
    // Hecke flips at D: I -> I xor D, level -> level - |I & D| + |D \ I|,
    // normalising to a positive level by complementing I.
    Wall out = w;
    const std::uint32_t full = (1u << N) - 1u;
    long level = w.level();
    level -= __builtin_popcount(w.I & flips);
    level += __builtin_popcount(flips & ~w.I & full);
    out.I = w.I ^ flips;
    if (level < 0) {
        level = -level;
        out.I = ~out.I & full;
    }
    out.s = (w.parity == Parity::Odd) ? (level - 1) / 2 : level / 2;
    if (!perm.empty()) out = perm_wall(out, perm);
    return out;
}

Wall standard_wall(long l, long N) {
    std::uint32_t I = 0;
    for (long i = l; i < N; ++i) I |= (1u << i);
    return Wall{0, I, Parity::Odd};
}

std::pair<long, WeightSymmetry> canonical_wall(const Wall& w, long N) {
    if (w.parity != Parity::Odd)
        throw std::invalid_argument("canonical_wall handles odd parity only");
    WeightSymmetry sym;
    sym.perm.clear();
    Wall cur = w;

    // Step 1: Hecke at the lowest 2s members of I kills the level down to 1.
    if (cur.s > 0) {
        std::uint32_t J = 0;
        int need = static_cast<int>(2 * cur.s);
        for (long i = 0; i < N && need > 0; ++i)
            if (cur.I & (1u << i)) {
                J |= (1u << i);
                --need;
            }
        sym.flips ^= J;
        WeightSymmetry step{J, {}};
        cur = step.apply(cur, N);
    }

    // Step 2: if the complement is too big, a Hecke at two members of I plus
    // the sign normalisation shrinks I's complement below N/2.
    long l = N - cur.card();
    if (!(2 * (l + 1) <= N)) {
        std::uint32_t J = 0;
        int need = 2;
        for (long i = 0; i < N && need > 0; ++i)
            if (cur.I & (1u << i)) {
                J |= (1u << i);
                --need;
            }
        sym.flips ^= J;
        WeightSymmetry step{J, {}};
        cur = step.apply(cur, N);
        l = N - cur.card();
    }

    // Step 3: permute the complement of I to the first l coordinates.
    sym.perm.assign(static_cast<std::size_t>(N), 0);
    int lo = 0, hi = static_cast<int>(l);
    for (long i = 0; i < N; ++i) {
        if (cur.I & (1u << i))
            sym.perm[static_cast<std::size_t>(i)] = hi++;
        else
            sym.perm[static_cast<std::size_t>(i)] = lo++;
    }
    return {l, sym};
}

namespace {

// v is in the closure of alpha's chamber iff no wall strictly separates them.
bool vertex_in_closure(const std::vector<Rational>& v, const Weight& alpha,
                       const std::vector<Wall>& walls, long N) {
    for (const auto& w : walls) {
        Rational at_alpha = wall_eval(w, alpha);
        if (at_alpha == 0) throw NotGenericError(w, N);
        Rational at_v(w.level());
        for (long i = 0; i < N; ++i) {
            if (w.I & (1u << i))
                at_v -= v[static_cast<std::size_t>(i)];
            else
                at_v += v[static_cast<std::size_t>(i)];
        }
        if (at_v * at_alpha < 0) return false;
    }
    return true;
}

}  // namespace

ChamberClass classify_chamber(const Weight& alpha, long N, Parity parity) {
    const auto walls = enumerate_walls(N, parity);
    for (std::uint32_t v = 0; v < (1u << N); ++v) {
        if (__builtin_popcount(v) % 2 != 0) continue;
        std::vector<Rational> vertex(static_cast<std::size_t>(N));
        for (long i = 0; i < N; ++i)
            vertex[static_cast<std::size_t>(i)] = (v & (1u << i)) ? 1 : 0;
        if (vertex_in_closure(vertex, alpha, walls, N)) return ChamberClass::Minimal;
    }
    std::vector<Rational> centre(static_cast<std::size_t>(N), Rational(1, 2));
    if (vertex_in_closure(centre, alpha, walls, N)) return ChamberClass::Maximal;
    return ChamberClass::Intermediate;
}

std::vector<Crossing> segment_crossings(const Weight& alpha_from,
                                        const Weight& alpha_to, long N,
                                        Parity parity) {
    if (alpha_from.size() != N || alpha_to.size() != N)
        throw std::invalid_argument("segment_crossings: weight size mismatch");
    std::vector<Crossing> crossings;
    for (const auto& w : enumerate_walls(N, parity)) {
        Rational f0 = wall_eval(w, alpha_from);
        Rational f1 = wall_eval(w, alpha_to);
        if (f0 == 0) throw NotGenericError(w, N);
        if (f1 == 0) throw NotGenericError(w, N);
        if ((f0 > 0) == (f1 > 0)) continue;
        // affine in t, so the root is f0 / (f0 - f1), strictly inside (0,1)
        Rational t = f0 / (f0 - f1);
        crossings.push_back(Crossing{
            t, w,
            f0 > 0 ? CrossingDirection::PlusToMinus : CrossingDirection::MinusToPlus});
    }
    std::sort(crossings.begin(), crossings.end(),
              [](const Crossing& a, const Crossing& b) { return a.t < b.t; });
    for (std::size_t i = 1; i < crossings.size(); ++i)
        if (crossings[i].t == crossings[i - 1].t)
            throw DegeneratePathError("two walls cross the segment at t = " +
                                      format_rational(crossings[i].t));
    return crossings;
}

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

}  // namespace

Weight perturb(const Weight& alpha, long N, Parity parity, std::uint64_t seed) {
    std::uint64_t state = seed ^ 0xa02e1db5c7f3a1ull;
    for (int attempt = 0; attempt < 64; ++attempt) {
        const long k = 16 + attempt;
        std::vector<Rational> v = alpha.coords();
        for (long i = 0; i < N; ++i) {
            const bool up = splitmix64(state) & 1u;
            Rational off(1);
            off /= Rational(BigInt(1) << static_cast<unsigned>(k + i));
            auto& c = v[static_cast<std::size_t>(i)];
            c += up ? off : -off;
            if (c <= 0 || c >= 1) c += up ? -2 * off : 2 * off;
        }
        Weight cand(std::move(v));
        if (is_generic(cand, N, parity)) return cand;
    }
    throw DegeneratePathError("perturbation failed to reach a generic weight");
}

Weight near_origin_weight(long N) {
    std::vector<Rational> v(static_cast<std::size_t>(N));
    for (long i = 0; i < N; ++i)
        v[static_cast<std::size_t>(i)] =
            Rational(1) / Rational(BigInt(1) << static_cast<unsigned>(2 + i));
    return Weight(std::move(v));
}

std::string direction_to_string(CrossingDirection d) {
    return d == CrossingDirection::PlusToMinus ? "+->-" : "-->+";
}

}  // namespace motivecalc
