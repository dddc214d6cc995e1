#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "motivecalc/polynomial.hpp"

namespace motivecalc {

struct MissingBettiTableError : std::runtime_error {
    explicit MissingBettiTableError(int n)
        : std::runtime_error("no Betti table entry for ~Sym^" + std::to_string(n) +
                             "(C)"),
          sym_index(n) {}
    int sym_index;
};

struct NotEffectiveError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// One formal generator of the motive ring. The order of the enumerators is
// the serialization order and must not change.
enum class AtomKind : std::uint8_t {
    Unit,       // the unit motive; absorbed into twists, never stored in terms
    SymC,       // Sym^n(C)
    JacC,       // Jac(C)
    PicC,       // Pic^a(C); collapses to JacC when the context allows it
    TildeSymC,  // pullback of Sym^n(C) under multiplication-by-2 on Jac(C)
    ProjSpace,  // P^m; eliminated at normalization (pure Tate)
    ModuliN,    // rank-2 odd-degree bundle moduli, dimension 4g-3
    ModuliNL,   // same with fixed determinant, dimension 3g-3
};

struct MotiveAtom {
    AtomKind kind = AtomKind::Unit;
    // n for SymC/TildeSymC, a for PicC, m for ProjSpace, d for ModuliN/ModuliNL.
    long param = 0;

    static MotiveAtom unit() { return {AtomKind::Unit, 0}; }
    static MotiveAtom sym_c(long n) {
        if (n < 0) throw std::invalid_argument("Sym^n(C) needs n >= 0");
        return {AtomKind::SymC, n};
    }
    static MotiveAtom jac_c() { return {AtomKind::JacC, 0}; }
    static MotiveAtom pic_c(long a) { return {AtomKind::PicC, a}; }
    static MotiveAtom tilde_sym_c(long n) {
        if (n < 0) throw std::invalid_argument("~Sym^n(C) needs n >= 0");
        return {AtomKind::TildeSymC, n};
    }
    static MotiveAtom proj_space(long m) {
        if (m < 0) throw std::invalid_argument("P^m needs m >= 0");
        return {AtomKind::ProjSpace, m};
    }
    static MotiveAtom moduli_n(long d) {
        if (d % 2 == 0) throw std::invalid_argument("N(2,d) atom needs odd d");
        return {AtomKind::ModuliN, d};
    }
    static MotiveAtom moduli_nl(long d) {
        if (d % 2 == 0) throw std::invalid_argument("N_L(2,d) atom needs odd d");
        return {AtomKind::ModuliNL, d};
    }

    friend auto operator<=>(const MotiveAtom&, const MotiveAtom&) = default;

    std::string to_string() const;
};

// coeff * (atom_1 x ... x atom_k)(twist). Virtual terms (coeff < 0) are legal;
// wall-crossing paths pass through them.
struct MotiveTerm {
    std::vector<MotiveAtom> atoms;  // sorted multiset, no Unit entries
    long twist = 0;
    long long coeff = 0;
};

struct CurveContext;

// Normal-form integer-linear combination of twisted atom monomials. Unique
// normal form: equal expressions have identical serializations.
class MotiveExpr {
public:
    MotiveExpr() = default;

    static MotiveExpr zero() { return {}; }
    static MotiveExpr unit(long twist = 0, long long coeff = 1);
    static MotiveExpr atom(const MotiveAtom& a, long twist = 0, long long coeff = 1);
    // h(P^m) pre-expanded into Tate twists.
    static MotiveExpr proj_space(long m);

    const std::vector<MotiveTerm>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    friend bool operator==(const MotiveExpr& a, const MotiveExpr& b) {
        if (a.terms_.size() != b.terms_.size()) return false;
        for (std::size_t i = 0; i < a.terms_.size(); ++i) {
            const auto& x = a.terms_[i];
            const auto& y = b.terms_[i];
            if (x.atoms != y.atoms || x.twist != y.twist || x.coeff != y.coeff)
                return false;
        }
        return true;
    }

    std::string to_string() const;

private:
    friend MotiveExpr normalize(std::vector<MotiveTerm> raw, const CurveContext& ctx);
    friend MotiveExpr dsum(const MotiveExpr& a, const MotiveExpr& b);
    friend MotiveExpr tensor(const MotiveExpr& a, const MotiveExpr& b);
    friend MotiveExpr twist(const MotiveExpr& a, long n);
    friend MotiveExpr scale(const MotiveExpr& a, long long k);

    std::vector<MotiveTerm> terms_;
};

// Betti table for the 2^{2g}-covers ~Sym^n(C): n -> ascending coefficients of
// the Poincare polynomial. No closed formula is known; this is injected data.
using TildeSymBettiTable = std::map<long, IntPoly>;

struct CurveContext {
    long g = 2;  // genus
    long N = 0;  // number of marked points
    // Pic^a(C) ~ Jac(C) whenever the curve has a degree-1 line bundle.
    bool collapse_pic = false;
    std::optional<TildeSymBettiTable> tilde_sym_betti;

    CurveContext() = default;
    CurveContext(long genus, long marked, bool collapse = false)
        : g(genus), N(marked), collapse_pic(collapse) {
        if (g < 0) throw std::invalid_argument("genus must be >= 0");
        if (N < 0) throw std::invalid_argument("N must be >= 0");
    }
};

// Canonical normal form: merges equal (atoms, twist) keys, drops zero terms,
// absorbs Unit atoms, rewrites Sym^0 -> Unit, expands P^m into Tate twists,
// and collapses Pic^a -> Jac when the context says so. Deterministic total
// order on terms: (atoms, twist) lexicographically.
MotiveExpr normalize(std::vector<MotiveTerm> raw, const CurveContext& ctx);

MotiveExpr dsum(const MotiveExpr& a, const MotiveExpr& b);
MotiveExpr tensor(const MotiveExpr& a, const MotiveExpr& b);
MotiveExpr twist(const MotiveExpr& a, long n);
MotiveExpr scale(const MotiveExpr& a, long long k);

// True iff every coefficient is >= 0. Only meaningful on normalized input,
// which is the only kind MotiveExpr can hold.
bool is_effective(const MotiveExpr& a);

// Substitutes the rank-2 odd-degree closed formula for every moduli atom:
//   h(N_L) = h(Sym^{g-1}C)(g-1) + sum_{i=0}^{g-2} h(Sym^i C)(Q(i)+Q(3g-3-2i))
// and h(N) = h(N_L) (x) h(Jac C). Sym^{-1} = empty: the g = 0 expansion
// vanishes and g = 1 gives the unit. The result has no moduli atoms.
MotiveExpr expand_rational(const MotiveExpr& a, const CurveContext& ctx);

}  // namespace motivecalc
