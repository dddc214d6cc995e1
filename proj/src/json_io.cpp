#include "motivecalc/json_io.hpp"

#include <limits>

namespace motivecalc {

namespace {

const char* kind_name(AtomKind k) {
    switch (k) {
        case AtomKind::Unit: return "Unit";
        case AtomKind::SymC: return "SymC";
        case AtomKind::JacC: return "JacC";
        case AtomKind::PicC: return "PicC";
        case AtomKind::TildeSymC: return "TildeSymC";
        case AtomKind::ProjSpace: return "ProjSpace";
        case AtomKind::ModuliN: return "ModuliN";
        case AtomKind::ModuliNL: return "ModuliNL";
    }
    return "?";
}

const char* param_key(AtomKind k) {
    switch (k) {
        case AtomKind::SymC:
        case AtomKind::TildeSymC: return "n";
        case AtomKind::PicC: return "a";
        case AtomKind::ProjSpace: return "m";
        case AtomKind::ModuliN:
        case AtomKind::ModuliNL: return "d";
        default: return nullptr;
    }
}

}  // namespace

Json atom_to_json(const MotiveAtom& a) {
    Json j{{"kind", kind_name(a.kind)}};
    if (const char* key = param_key(a.kind)) j[key] = a.param;
    return j;
}

MotiveAtom atom_from_json(const Json& j) {
    const std::string kind = j.at("kind").get<std::string>();
    auto param = [&](const char* key) { return j.at(key).get<long>(); };
    if (kind == "Unit") return MotiveAtom::unit();
    if (kind == "SymC") return MotiveAtom::sym_c(param("n"));
    if (kind == "JacC") return MotiveAtom::jac_c();
    if (kind == "PicC") return MotiveAtom::pic_c(param("a"));
    if (kind == "TildeSymC") return MotiveAtom::tilde_sym_c(param("n"));
    if (kind == "ProjSpace") return MotiveAtom::proj_space(param("m"));
    if (kind == "ModuliN") return MotiveAtom::moduli_n(param("d"));
    if (kind == "ModuliNL") return MotiveAtom::moduli_nl(param("d"));
    throw std::invalid_argument("unknown atom kind: " + kind);
}

Json motive_to_json(const MotiveExpr& e) {
    Json terms = Json::array();
    for (const auto& t : e.terms()) {
        Json atoms = Json::array();
        for (const auto& a : t.atoms) atoms.push_back(atom_to_json(a));
        terms.push_back(Json{{"atoms", std::move(atoms)},
                             {"twist", t.twist},
                             {"coeff", t.coeff}});
    }
    return Json{{"terms", std::move(terms)}};
}

MotiveExpr motive_from_json(const Json& j) {
    std::vector<MotiveTerm> raw;
    for (const auto& tj : j.at("terms")) {
        MotiveTerm t;
        for (const auto& aj : tj.at("atoms")) t.atoms.push_back(atom_from_json(aj));
        t.twist = tj.at("twist").get<long>();
        t.coeff = tj.at("coeff").get<long long>();
        raw.push_back(std::move(t));
    }
    return normalize(std::move(raw), CurveContext{});
}

Json poly_to_json(const IntPoly& p) {
    Json arr = Json::array();
    for (const auto& c : p.coeffs()) {
        if (c.fits_slong_p())
            arr.push_back(c.get_si());
        else
            arr.push_back(c.get_str());
    }
    return arr;
}

IntPoly poly_from_json(const Json& j) {
    std::vector<BigInt> cs;
    for (const auto& cj : j) {
        if (cj.is_string())
            cs.emplace_back(cj.get<std::string>());
        else
            cs.emplace_back(static_cast<long>(cj.get<long long>()));
    }
    return IntPoly(std::move(cs));
}

Json weight_to_json(const Weight& w) {
    Json arr = Json::array();
    for (const auto& a : w.coords()) arr.push_back(format_rational(a));
    return arr;
}

Weight weight_from_json(const Json& j) {
    std::vector<Rational> v;
    for (const auto& e : j) v.push_back(parse_rational(e.get<std::string>()));
    return Weight(std::move(v));
}

Json wall_to_json(const Wall& w, long N) {
    Json members = Json::array();
    for (int i : w.members(N)) members.push_back(i);
    return Json{{"s", w.s},
                {"I", std::move(members)},
                {"parity", w.parity == Parity::Odd ? "odd" : "even"}};
}

Wall wall_from_json(const Json& j) {
    Wall w;
    w.s = j.at("s").get<long>();
    w.I = 0;
    for (const auto& e : j.at("I")) w.I |= 1u << (e.get<int>() - 1);
    const std::string parity = j.at("parity").get<std::string>();
    if (parity == "odd")
        w.parity = Parity::Odd;
    else if (parity == "even")
        w.parity = Parity::Even;
    else
        throw std::invalid_argument("wall parity must be odd or even");
    return w;
}

Json crossings_to_json(const std::vector<Crossing>& cs, long g, long N,
                       bool fixed_det) {
    Json arr = Json::array();
    for (const auto& c : cs) {
        FlipData fd = flip_type(c.wall, g, N, fixed_det);
        MotiveExpr delta = cross_wall(MotiveExpr::zero(), fd, c.direction);
        Json rec{{"t", format_rational(c.t)},
                 {"wall", wall_to_json(c.wall, N)},
                 {"direction", direction_to_string(c.direction)},
                 {"n_minus", fd.n_minus},
                 {"n_plus", fd.n_plus},
                 {"is_flop", fd.is_flop}};
        Json added = Json::array(), removed = Json::array();
        for (const auto& t : delta.terms()) {
            MotiveTerm abs = t;
            abs.coeff = t.coeff < 0 ? -t.coeff : t.coeff;
            Json tj = motive_to_json(normalize({abs}, CurveContext{}));
            (t.coeff > 0 ? added : removed).push_back(std::move(tj));
        }
        rec["added"] = std::move(added);
        rec["removed"] = std::move(removed);
        arr.push_back(std::move(rec));
    }
    return arr;
}

Json exponent_table_to_json(const ExponentTable& t) {
    return Json{{"d", t.d}, {"c", t.c}, {"b", t.b}};
}

Json bb_component_to_json(const BBComponent& c) {
    Json j{{"kind", c.kind == BBComponent::Kind::VectorBundleLocus
                        ? "vector_bundle_locus"
                        : "type_1_1"},
           {"m_prime", c.m_prime},
           {"l", c.l},
           {"codim", c.codim},
           {"base", motive_to_json(c.base)}};
    if (c.kind == BBComponent::Kind::Type11Locus) {
        j["d_prime"] = c.d_prime;
        j["j"] = c.j;
    }
    return j;
}

Json chow_to_json(const ChowDecomposition& d) {
    Json arr = Json::array();
    for (const auto& [key, mult] : d.entries) {
        Json atoms = Json::array();
        for (const auto& a : key.second) atoms.push_back(atom_to_json(a));
        arr.push_back(Json{{"codim", key.first},
                           {"atoms", std::move(atoms)},
                           {"multiplicity", mult}});
    }
    return arr;
}

TildeSymBettiTable betti_table_from_json(const Json& j) {
    TildeSymBettiTable table;
    for (auto it = j.begin(); it != j.end(); ++it)
        table[std::stol(it.key())] = poly_from_json(it.value());
    return table;
}

}  // namespace motivecalc
