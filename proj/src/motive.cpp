#include "motivecalc/motive.hpp"

#include <algorithm>
#include <tuple>

namespace motivecalc {

std::string MotiveAtom::to_string() const {
    switch (kind) {
        case AtomKind::Unit: return "Q";
        case AtomKind::SymC:
            return param == 1 ? "C" : "Sym^" + std::to_string(param) + "(C)";
        case AtomKind::JacC: return "Jac(C)";
        case AtomKind::PicC: return "Pic^" + std::to_string(param) + "(C)";
        case AtomKind::TildeSymC: return "~Sym^" + std::to_string(param) + "(C)";
        case AtomKind::ProjSpace: return "P^" + std::to_string(param);
        case AtomKind::ModuliN: return "N(d=" + std::to_string(param) + ")";
        case AtomKind::ModuliNL: return "N_L(d=" + std::to_string(param) + ")";
    }
    return "?";
}

namespace {

bool term_key_less(const MotiveTerm& a, const MotiveTerm& b) {
    return std::tie(a.atoms, a.twist) < std::tie(b.atoms, b.twist);
}

// Rewrites one raw term into ProjSpace-free, Unit-free, Sym^0-free terms.
void expand_term(MotiveTerm t, const CurveContext& ctx, std::vector<MotiveTerm>& out) {
    for (std::size_t i = 0; i < t.atoms.size();) {
        MotiveAtom& a = t.atoms[i];
        if (a.kind == AtomKind::Unit || (a.kind == AtomKind::SymC && a.param == 0)) {
            t.atoms.erase(t.atoms.begin() + static_cast<long>(i));
            continue;
        }
        if (a.kind == AtomKind::PicC && ctx.collapse_pic) {
            a = MotiveAtom::jac_c();
            continue;  // re-examine in place; JacC needs no further rewriting
        }
        if (a.kind == AtomKind::ProjSpace) {
            long m = a.param;
            t.atoms.erase(t.atoms.begin() + static_cast<long>(i));
            for (long k = 0; k <= m; ++k) {
                MotiveTerm copy = t;
                copy.twist += k;
                expand_term(std::move(copy), ctx, out);
            }
            return;
        }
        ++i;
    }
    std::sort(t.atoms.begin(), t.atoms.end());
    out.push_back(std::move(t));
}

}  // namespace

MotiveExpr normalize(std::vector<MotiveTerm> raw, const CurveContext& ctx) {
    std::vector<MotiveTerm> flat;
    flat.reserve(raw.size());
    for (auto& t : raw) {
        if (t.coeff == 0) continue;
        expand_term(std::move(t), ctx, flat);
    }
    std::sort(flat.begin(), flat.end(), term_key_less);
    MotiveExpr e;
    for (auto& t : flat) {
        if (!e.terms_.empty() && e.terms_.back().atoms == t.atoms &&
            e.terms_.back().twist == t.twist) {
            e.terms_.back().coeff += t.coeff;
            if (e.terms_.back().coeff == 0) e.terms_.pop_back();
        } else if (t.coeff != 0) {
            e.terms_.push_back(std::move(t));
        }
    }
    return e;
}

MotiveExpr MotiveExpr::unit(long tw, long long coeff) {
    return normalize({MotiveTerm{{}, tw, coeff}}, CurveContext{});
}

MotiveExpr MotiveExpr::atom(const MotiveAtom& a, long tw, long long coeff) {
    return normalize({MotiveTerm{{a}, tw, coeff}}, CurveContext{});
}

MotiveExpr MotiveExpr::proj_space(long m) {
    return normalize({MotiveTerm{{MotiveAtom::proj_space(m)}, 0, 1}}, CurveContext{});
}

// Inputs are already normalized, so merging keys is all that is left.
MotiveExpr dsum(const MotiveExpr& a, const MotiveExpr& b) {
    MotiveExpr e;
    auto ia = a.terms_.begin(), ib = b.terms_.begin();
    while (ia != a.terms_.end() || ib != b.terms_.end()) {
        MotiveTerm t;
        if (ib == b.terms_.end() || (ia != a.terms_.end() && term_key_less(*ia, *ib))) {
            t = *ia++;
        } else if (ia == a.terms_.end() || term_key_less(*ib, *ia)) {
            t = *ib++;
        } else {
            t = *ia;
            t.coeff += ib->coeff;
            ++ia;
            ++ib;
        }
        if (t.coeff != 0) e.terms_.push_back(std::move(t));
    }
    return e;
}

MotiveExpr tensor(const MotiveExpr& a, const MotiveExpr& b) {
    std::vector<MotiveTerm> raw;
    raw.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& x : a.terms_) {
        for (const auto& y : b.terms_) {
            MotiveTerm t;
            t.atoms = x.atoms;
            t.atoms.insert(t.atoms.end(), y.atoms.begin(), y.atoms.end());
            std::sort(t.atoms.begin(), t.atoms.end());
            t.twist = x.twist + y.twist;
            t.coeff = x.coeff * y.coeff;
            raw.push_back(std::move(t));
        }
    }
    // no ProjSpace/Unit/Sym^0 atoms can appear, so a plain merge suffices
    std::sort(raw.begin(), raw.end(), term_key_less);
    MotiveExpr e;
    for (auto& t : raw) {
        if (!e.terms_.empty() && e.terms_.back().atoms == t.atoms &&
            e.terms_.back().twist == t.twist) {
            e.terms_.back().coeff += t.coeff;
            if (e.terms_.back().coeff == 0) e.terms_.pop_back();
        } else if (t.coeff != 0) {
            e.terms_.push_back(std::move(t));
        }
    }
    return e;
}

MotiveExpr twist(const MotiveExpr& a, long n) {
    MotiveExpr e = a;
    for (auto& t : e.terms_) t.twist += n;
    if (n != 0) std::sort(e.terms_.begin(), e.terms_.end(), term_key_less);
    return e;
}

MotiveExpr scale(const MotiveExpr& a, long long k) {
    if (k == 0) return {};
    MotiveExpr e = a;
    for (auto& t : e.terms_) t.coeff *= k;
    return e;
}

bool is_effective(const MotiveExpr& a) {
    for (const auto& t : a.terms())
        if (t.coeff < 0) return false;
    return true;
}

namespace {

// h(N_L(2,d)) for odd d, as a sum of symmetric powers and Tate twists.
MotiveExpr moduli_nl_expansion(const CurveContext& ctx) {
    const long g = ctx.g;
    if (g == 0) return MotiveExpr::zero();  // Sym^{-1}(C) = empty
    std::vector<MotiveTerm> raw;
    raw.push_back(MotiveTerm{{MotiveAtom::sym_c(g - 1)}, g - 1, 1});
    for (long i = 0; i <= g - 2; ++i) {
        raw.push_back(MotiveTerm{{MotiveAtom::sym_c(i)}, i, 1});
        raw.push_back(MotiveTerm{{MotiveAtom::sym_c(i)}, 3 * g - 3 - 2 * i, 1});
    }
    return normalize(std::move(raw), ctx);
}

}  // namespace

MotiveExpr expand_rational(const MotiveExpr& a, const CurveContext& ctx) {
    MotiveExpr nl = moduli_nl_expansion(ctx);
    MotiveExpr n = tensor(nl, MotiveExpr::atom(MotiveAtom::jac_c()));
    MotiveExpr out;
    for (const auto& t : a.terms()) {
        MotiveExpr piece = MotiveExpr::unit(t.twist, t.coeff);
        for (const auto& at : t.atoms) {
            if (at.kind == AtomKind::ModuliNL) {
                piece = tensor(piece, nl);
            } else if (at.kind == AtomKind::ModuliN) {
                piece = tensor(piece, n);
            } else {
                piece = tensor(piece, MotiveExpr::atom(at));
            }
        }
        out = dsum(out, piece);
    }
    return out;
}

std::string MotiveExpr::to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& t : terms_) {
        long long c = t.coeff;
        if (s.empty()) {
            if (c < 0) {
                s += "-";
                c = -c;
            }
        } else {
            s += (c < 0) ? " - " : " + ";
            if (c < 0) c = -c;
        }
        if (c != 1) s += std::to_string(c) + "*";
        if (t.atoms.empty()) {
            s += "Q";
        } else {
            for (std::size_t i = 0; i < t.atoms.size(); ++i) {
                if (i) s += "*";
                s += t.atoms[i].to_string();
            }
        }
        if (t.twist != 0) s += "(" + std::to_string(t.twist) + ")";
    }
    return s;
}

}  // namespace motivecalc
