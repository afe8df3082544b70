#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cofin/delta.hpp"
#include "cofin/diagram.hpp"
#include "cofin/nerve.hpp"
#include "cofin/sset.hpp"

namespace cofin {

/// The level diagram of an SSetDiagram: a set-valued diagram over the
/// opposite truncated simplex category whose level r is the coproduct,
/// over all full r-simplices, of the value at the first vertex.
struct ReshapedDiagram {
    DeltaCat delta;
    SetDiagram diagram;  // over opposite(delta.cat)
    std::vector<std::vector<SimplexRef>> level_simplices;
    std::vector<std::vector<int>> offsets;  // component start within each level

    int component_of(int level, const SimplexRef& s) const {
        const auto& ls = level_simplices[static_cast<std::size_t>(level)];
        for (int i = 0; i < static_cast<int>(ls.size()); ++i)
            if (ls[static_cast<std::size_t>(i)] == s) return i;
        throw error("reshape: unknown simplex");
    }
};

inline ReshapedDiagram reshape_build(const SSetDiagram& F, int n_max) {
    if (n_max < 1) throw error("reshape_build: n_max must be at least 1");
    if (n_max > F.base.truncation) throw error("reshape_build: n_max exceeds base truncation");
    ReshapedDiagram R;
    R.delta = delta_leq(n_max);
    R.diagram.shape = opposite(R.delta.cat);
    for (int k = 0; k <= n_max; ++k) {
        R.level_simplices.push_back(all_simplices(F.base, k));
        std::vector<int> off;
        int total = 0;
        for (const auto& s : R.level_simplices.back()) {
            off.push_back(total);
            total += F.size_at_vertex(vertex(F.base, s, 0));
        }
        R.offsets.push_back(std::move(off));
        R.diagram.sizes.push_back(total);
    }
    for (int m = 0; m < R.delta.cat.num_morphisms(); ++m) {
        const MonotoneMap& alpha = R.delta.maps[static_cast<std::size_t>(m)];
        const int a = alpha.source_rank, b = alpha.target_rank;
        // in the opposite shape this morphism runs from level b to level a
        std::vector<int> act(static_cast<std::size_t>(R.diagram.sizes[static_cast<std::size_t>(b)]));
        for (std::size_t j = 0; j < R.level_simplices[static_cast<std::size_t>(b)].size(); ++j) {
            const SimplexRef& rho = R.level_simplices[static_cast<std::size_t>(b)][j];
            SimplexRef sigma = apply(F.base, rho, alpha);
            int tgt_off = R.offsets[static_cast<std::size_t>(a)]
                                   [static_cast<std::size_t>(R.component_of(a, sigma))];
            auto pa = path_action(F, rho, 0, alpha(0));
            int src_off = R.offsets[static_cast<std::size_t>(b)][j];
            for (std::size_t x = 0; x < pa.size(); ++x)
                act[static_cast<std::size_t>(src_off) + x] = tgt_off + pa[x];
        }
        R.diagram.action.push_back(std::move(act));
    }
    return R;
}

/// Colimit of an SSetDiagram computed directly over the opposite of the
/// 2-truncated category of simplices, first-vertex values.
struct DirectColimit {
    SimplexCategory simplices;
    SetDiagram diagram;  // over opposite(simplices.cat)
    Quotient colim;
};

inline DirectColimit direct_colimit(const SSetDiagram& F) {
    if (F.base.truncation < 2) throw error("direct_colimit: base must be truncated at 2 or more");
    DirectColimit R;
    R.simplices = category_of_simplices(F.base, 2);
    R.diagram.shape = opposite(R.simplices.cat);
    for (const auto& s : R.simplices.object_simplices)
        R.diagram.sizes.push_back(F.size_at_vertex(vertex(F.base, s, 0)));
    for (int m = 0; m < R.simplices.cat.num_morphisms(); ++m) {
        // alpha: sigma -> rho downstairs; upstairs a map F(rho(0)) -> F(sigma(0))
        const auto& mor = R.simplices.cat.morphisms[static_cast<std::size_t>(m)];
        const auto& alpha = R.simplices.morphism_maps[static_cast<std::size_t>(m)];
        const SimplexRef& rho = R.simplices.object_simplices[static_cast<std::size_t>(mor.dst)];
        R.diagram.action.push_back(path_action(F, rho, 0, alpha(0)));
    }
    R.colim = colim_finset(R.diagram);
    return R;
}

struct ReshapeReport {
    bool ok = false;
    int reshaped_classes = 0;
    int direct_classes = 0;
    std::vector<std::string> issues;
};

/// Checks that the coequalizer-of-coproducts colimit of the level
/// diagram agrees with the direct colimit, via the pairing of vertex
/// elements (which hit every class on both sides).
inline ReshapeReport reshape_colim_check(const SSetDiagram& F) {
    {
        auto bad = validate(F);
        if (!bad.empty()) throw error("reshape_colim_check: " + bad.front());
    }
    ReshapeReport rep;
    ReshapedDiagram R = reshape_build(F, 1);
    Quotient qa = colim_finset(R.diagram);
    DirectColimit D = direct_colimit(F);
    const Quotient& qb = D.colim;
    rep.reshaped_classes = qa.classes;
    rep.direct_classes = qb.classes;
    std::map<int, int> a2b, b2a;
    for (int v = 0; v < F.base.nondeg_count(0); ++v) {
        SimplexRef sv{identity_map(0), v};
        int ca = R.component_of(0, sv);
        int ob = D.simplices.object_of(sv);
        for (int x = 0; x < F.size_at_vertex(v); ++x) {
            int a = qa.legs[0][static_cast<std::size_t>(
                R.offsets[0][static_cast<std::size_t>(ca)] + x)];
            int b = qb.legs[static_cast<std::size_t>(ob)][static_cast<std::size_t>(x)];
            auto [ia, insa] = a2b.try_emplace(a, b);
            if (!insa && ia->second != b)
                rep.issues.push_back("pairing not well defined on class " + std::to_string(a));
            auto [ib, insb] = b2a.try_emplace(b, a);
            if (!insb && ib->second != a)
                rep.issues.push_back("pairing not injective at class " + std::to_string(b));
        }
    }
    if (static_cast<int>(a2b.size()) != qa.classes)
        rep.issues.push_back("some level classes miss every vertex");
    if (static_cast<int>(b2a.size()) != qb.classes)
        rep.issues.push_back("some direct classes miss every vertex");
    rep.ok = rep.issues.empty() && qa.classes == qb.classes;
    return rep;
}

struct DecomposeReport {
    bool ok = false;
    int total_classes = 0;
    int iterated_classes = 0;
    std::vector<std::string> issues;
};

/// Computes colim F in one go and as an iterated colimit over the base
/// shape of X, and compares the two along the shared elements.
inline DecomposeReport decompose_check(const SetDiagram& X, const SetDiagram& F) {
    DecomposeReport rep;
    GrothendieckResult G = grothendieck(X);
    if (F.shape.objects != G.cat.objects || F.shape.morphisms.size() != G.cat.morphisms.size()) {
        rep.issues.push_back("inner diagram shape is not the total category of the outer one");
        return rep;
    }
    Quotient qa = colim_finset(F);
    rep.total_classes = qa.classes;

    const FinCategory& K = X.shape;
    SetDiagram outer;
    outer.shape = K;
    // element (x, e) of the i component sits at offset off[i][x] + e
    std::vector<std::vector<int>> off(static_cast<std::size_t>(K.num_objects()));
    for (int i = 0; i < K.num_objects(); ++i) {
        int total = 0;
        for (int x = 0; x < X.size_at(i); ++x) {
            off[static_cast<std::size_t>(i)].push_back(total);
            total += F.size_at(G.object_of(i, x));
        }
        outer.sizes.push_back(total);
    }
    std::map<std::pair<int, int>, int> gm;  // (total object, shape morphism) -> total morphism
    for (int m = 0; m < static_cast<int>(G.morphisms.size()); ++m)
        gm[G.morphisms[static_cast<std::size_t>(m)]] = m;
    for (int f = 0; f < K.num_morphisms(); ++f) {
        const auto& mor = K.morphisms[static_cast<std::size_t>(f)];
        std::vector<int> act(static_cast<std::size_t>(outer.sizes[static_cast<std::size_t>(mor.src)]));
        for (int x = 0; x < X.size_at(mor.src); ++x) {
            int s = G.object_of(mor.src, x);
            int x2 = X.action[static_cast<std::size_t>(f)][static_cast<std::size_t>(x)];
            const auto& fa = F.action[static_cast<std::size_t>(gm.at({s, f}))];
            for (int e = 0; e < F.size_at(s); ++e)
                act[static_cast<std::size_t>(off[static_cast<std::size_t>(mor.src)]
                                                [static_cast<std::size_t>(x)] + e)] =
                    off[static_cast<std::size_t>(mor.dst)][static_cast<std::size_t>(x2)] +
                    fa[static_cast<std::size_t>(e)];
        }
        outer.action.push_back(std::move(act));
    }
    Quotient qb = colim_finset(outer);
    rep.iterated_classes = qb.classes;

    std::map<int, int> a2b, b2a;
    for (int s = 0; s < static_cast<int>(G.objects.size()); ++s) {
        auto [i, x] = G.objects[static_cast<std::size_t>(s)];
        for (int e = 0; e < F.size_at(s); ++e) {
            int a = qa.legs[static_cast<std::size_t>(s)][static_cast<std::size_t>(e)];
            int b = qb.legs[static_cast<std::size_t>(i)][static_cast<std::size_t>(
                off[static_cast<std::size_t>(i)][static_cast<std::size_t>(x)] + e)];
            auto [ia, insa] = a2b.try_emplace(a, b);
            if (!insa && ia->second != b) rep.issues.push_back("comparison not well defined");
            auto [ib, insb] = b2a.try_emplace(b, a);
            if (!insb && ib->second != a) rep.issues.push_back("comparison not injective");
        }
    }
    rep.ok = rep.issues.empty() && qa.classes == qb.classes;
    return rep;
}

struct Cocone {
    int apex = -1;
    std::vector<int> legs;  // per object of the index category
};

namespace detail {

inline void enumerate_cocones(const FinCategory& C, const Functor& D, int apex,
                              std::vector<Cocone>& out) {
    const FinCategory& J = D.dom;
    std::vector<std::vector<int>> choices;
    for (int j = 0; j < J.num_objects(); ++j)
        choices.push_back(C.hom(D.obj_map[static_cast<std::size_t>(j)], apex));
    std::vector<int> legs(static_cast<std::size_t>(J.num_objects()), -1);
    std::vector<std::size_t> pick(static_cast<std::size_t>(J.num_objects()), 0);
    int j = 0;
    while (j >= 0) {
        if (j == J.num_objects()) {
            out.push_back({apex, legs});
            --j;
            continue;
        }
        bool placed = false;
        for (std::size_t& p = pick[static_cast<std::size_t>(j)]; p < choices[static_cast<std::size_t>(j)].size(); ++p) {
            int leg = choices[static_cast<std::size_t>(j)][p];
            bool ok = true;
            for (int f = 0; f < J.num_morphisms() && ok; ++f) {
                const auto& m = J.morphisms[static_cast<std::size_t>(f)];
                if (m.src > j || m.dst > j) continue;
                int ls = m.src == j ? leg : legs[static_cast<std::size_t>(m.src)];
                int ld = m.dst == j ? leg : legs[static_cast<std::size_t>(m.dst)];
                if (C.compose(ld, D.mor_map[static_cast<std::size_t>(f)]) != ls) ok = false;
            }
            if (ok) {
                legs[static_cast<std::size_t>(j)] = leg;
                ++p;
                placed = true;
                break;
            }
        }
        if (placed) {
            ++j;
            if (j <= J.num_objects() - 1) pick[static_cast<std::size_t>(j)] = 0;
        } else {
            pick[static_cast<std::size_t>(j)] = 0;
            --j;
        }
    }
}

}  // namespace detail

/// Brute-force colimit of D: J -> C inside C itself. Returns a
/// universal cocone if one exists: for every competing cocone there is
/// exactly one mediating morphism.
inline std::optional<Cocone> colim_in_category(const FinCategory& C, const Functor& D) {
    std::vector<Cocone> cocones;
    for (int apex = 0; apex < C.num_objects(); ++apex)
        detail::enumerate_cocones(C, D, apex, cocones);
    for (const auto& cand : cocones) {
        bool universal = true;
        for (const auto& other : cocones) {
            int mediators = 0;
            for (int m : C.hom(cand.apex, other.apex)) {
                bool commutes = true;
                for (std::size_t j = 0; j < cand.legs.size() && commutes; ++j)
                    if (C.compose(m, cand.legs[j]) != other.legs[j]) commutes = false;
                if (commutes) ++mediators;
            }
            if (mediators != 1) {
                universal = false;
                break;
            }
        }
        if (universal) return cand;
    }
    return std::nullopt;
}

struct RepresentableReport {
    bool ok = false;
    int colim_classes = 0;
    int slice_components = 0;
};

/// Compares the colimit of c -> Hom(p(c), d) over the opposite of C
/// with the number of connected components of the slice of p over d.
inline RepresentableReport representable_colim_check(const Functor& p, int d) {
    const FinCategory& C = p.dom;
    const FinCategory& D = p.cod;
    SetDiagram H;
    H.shape = opposite(C);
    std::vector<std::vector<int>> homs;
    for (int c = 0; c < C.num_objects(); ++c)
        homs.push_back(D.hom(p.obj_map[static_cast<std::size_t>(c)], d));
    for (const auto& h : homs) H.sizes.push_back(static_cast<int>(h.size()));
    for (int u = 0; u < C.num_morphisms(); ++u) {
        const auto& m = C.morphisms[static_cast<std::size_t>(u)];
        // contravariant: precompose with p(u), mapping the hom set at
        // the target of u into the one at its source
        std::vector<int> act;
        for (int g : homs[static_cast<std::size_t>(m.dst)]) {
            int gu = D.compose(g, p.mor_map[static_cast<std::size_t>(u)]);
            const auto& hs = homs[static_cast<std::size_t>(m.src)];
            int pos = -1;
            for (int i = 0; i < static_cast<int>(hs.size()); ++i)
                if (hs[static_cast<std::size_t>(i)] == gu) pos = i;
            act.push_back(pos);
        }
        H.action.push_back(std::move(act));
    }
    RepresentableReport rep;
    rep.colim_classes = colim_finset(H).classes;
    rep.slice_components = category_components(slice_along(p, d).cat).first;
    rep.ok = rep.colim_classes == rep.slice_components;
    return rep;
}

/// Dual probe: colimit of c -> Hom(d, p(c)) over C against the
/// components of the coslice of p under d.
inline RepresentableReport corepresentable_colim_check(const Functor& p, int d) {
    const FinCategory& C = p.dom;
    const FinCategory& D = p.cod;
    SetDiagram H;
    H.shape = C;
    std::vector<std::vector<int>> homs;
    for (int c = 0; c < C.num_objects(); ++c)
        homs.push_back(D.hom(d, p.obj_map[static_cast<std::size_t>(c)]));
    for (const auto& h : homs) H.sizes.push_back(static_cast<int>(h.size()));
    for (int u = 0; u < C.num_morphisms(); ++u) {
        const auto& m = C.morphisms[static_cast<std::size_t>(u)];
        std::vector<int> act;
        for (int g : homs[static_cast<std::size_t>(m.src)]) {
            int ug = D.compose(p.mor_map[static_cast<std::size_t>(u)], g);
            const auto& hs = homs[static_cast<std::size_t>(m.dst)];
            int pos = -1;
            for (int i = 0; i < static_cast<int>(hs.size()); ++i)
                if (hs[static_cast<std::size_t>(i)] == ug) pos = i;
            act.push_back(pos);
        }
        H.action.push_back(std::move(act));
    }
    RepresentableReport rep;
    rep.colim_classes = colim_finset(H).classes;
    rep.slice_components = category_components(coslice_along(p, d).cat).first;
    rep.ok = rep.colim_classes == rep.slice_components;
    return rep;
}

}  // namespace cofin
