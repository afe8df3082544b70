#pragma once

#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "cofin/fincat.hpp"
#include "cofin/sset.hpp"

namespace cofin {

/// Functor from a finite category to finite sets; the set at each
/// object is {0, ..., sizes[c]-1}.
struct SetDiagram {
    FinCategory shape;
    std::vector<int> sizes;
    std::vector<std::vector<int>> action;  // per morphism

    int size_at(int c) const { return sizes[static_cast<std::size_t>(c)]; }
};

inline std::vector<std::string> validate(const SetDiagram& D) {
    std::vector<std::string> bad;
    const FinCategory& C = D.shape;
    if (static_cast<int>(D.sizes.size()) != C.num_objects() ||
        static_cast<int>(D.action.size()) != C.num_morphisms()) {
        bad.push_back("diagram tables have wrong size");
        return bad;
    }
    for (int f = 0; f < C.num_morphisms(); ++f) {
        const auto& m = C.morphisms[static_cast<std::size_t>(f)];
        const auto& a = D.action[static_cast<std::size_t>(f)];
        if (static_cast<int>(a.size()) != D.size_at(m.src)) {
            bad.push_back("action of " + m.id + " has wrong domain size");
            continue;
        }
        for (int v : a)
            if (v < 0 || v >= D.size_at(m.dst))
                bad.push_back("action of " + m.id + " is out of range");
    }
    if (!bad.empty()) return bad;
    for (int c = 0; c < C.num_objects(); ++c) {
        const auto& a = D.action[static_cast<std::size_t>(C.identity[static_cast<std::size_t>(c)])];
        for (int x = 0; x < D.size_at(c); ++x)
            if (a[static_cast<std::size_t>(x)] != x)
                bad.push_back("identity of " + C.objects[static_cast<std::size_t>(c)] + " does not act trivially");
    }
    for (int g = 0; g < C.num_morphisms(); ++g)
        for (int f = 0; f < C.num_morphisms(); ++f) {
            int gf = C.compose(g, f);
            if (gf == -1) continue;
            const auto& af = D.action[static_cast<std::size_t>(f)];
            const auto& ag = D.action[static_cast<std::size_t>(g)];
            const auto& agf = D.action[static_cast<std::size_t>(gf)];
            for (std::size_t x = 0; x < af.size(); ++x)
                if (ag[static_cast<std::size_t>(af[x])] != agf[x]) {
                    bad.push_back("composition fails for (" + C.morphisms[static_cast<std::size_t>(g)].id +
                                  "," + C.morphisms[static_cast<std::size_t>(f)].id + ")");
                    break;
                }
        }
    return bad;
}

inline bool is_valid(const SetDiagram& D) { return validate(D).empty(); }

/// Colimit carrier: the quotient classes and the universal legs.
struct Quotient {
    int classes = 0;
    std::vector<std::vector<int>> legs;  // legs[c][x] -> class
};

namespace detail {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
    }
};

}  // namespace detail

inline Quotient colim_finset(const SetDiagram& D) {
    const FinCategory& C = D.shape;
    std::vector<int> offset(static_cast<std::size_t>(C.num_objects()) + 1, 0);
    for (int c = 0; c < C.num_objects(); ++c)
        offset[static_cast<std::size_t>(c) + 1] = offset[static_cast<std::size_t>(c)] + D.size_at(c);
    detail::UnionFind uf(offset.back());
    for (int f = 0; f < C.num_morphisms(); ++f) {
        const auto& m = C.morphisms[static_cast<std::size_t>(f)];
        for (int x = 0; x < D.size_at(m.src); ++x)
            uf.unite(offset[static_cast<std::size_t>(m.src)] + x,
                     offset[static_cast<std::size_t>(m.dst)] +
                         D.action[static_cast<std::size_t>(f)][static_cast<std::size_t>(x)]);
    }
    std::map<int, int> renumber;
    Quotient Q;
    Q.legs.resize(static_cast<std::size_t>(C.num_objects()));
    for (int c = 0; c < C.num_objects(); ++c)
        for (int x = 0; x < D.size_at(c); ++x) {
            int root = uf.find(offset[static_cast<std::size_t>(c)] + x);
            auto [it, inserted] = renumber.try_emplace(root, Q.classes);
            if (inserted) ++Q.classes;
            Q.legs[static_cast<std::size_t>(c)].push_back(it->second);
        }
    return Q;
}

/// Limit as the set of compatible families, with projection legs.
struct LimitSet {
    std::vector<std::vector<int>> elements;  // each a choice per object
};

inline LimitSet lim_finset(const SetDiagram& D) {
    const FinCategory& C = D.shape;
    LimitSet L;
    std::vector<int> family(static_cast<std::size_t>(C.num_objects()), 0);
    if (C.num_objects() == 0) {
        L.elements.push_back({});
        return L;
    }
    for (int c = 0; c < C.num_objects(); ++c)
        if (D.size_at(c) == 0) return L;
    while (true) {
        bool ok = true;
        for (int f = 0; f < C.num_morphisms() && ok; ++f) {
            const auto& m = C.morphisms[static_cast<std::size_t>(f)];
            if (D.action[static_cast<std::size_t>(f)][static_cast<std::size_t>(family[static_cast<std::size_t>(m.src)])] !=
                family[static_cast<std::size_t>(m.dst)])
                ok = false;
        }
        if (ok) L.elements.push_back(family);
        int c = C.num_objects() - 1;
        while (c >= 0 && family[static_cast<std::size_t>(c)] + 1 == D.size_at(c)) {
            family[static_cast<std::size_t>(c)] = 0;
            --c;
        }
        if (c < 0) break;
        ++family[static_cast<std::size_t>(c)];
    }
    return L;
}

/// Grothendieck construction of a covariant set-valued functor, with
/// the projection down to the shape.
struct GrothendieckResult {
    FinCategory cat;
    Functor projection;
    std::vector<std::pair<int, int>> objects;    // (shape object, element)
    std::vector<std::pair<int, int>> morphisms;  // (source object index, shape morphism)

    int object_of(int c, int x) const {
        for (int i = 0; i < static_cast<int>(objects.size()); ++i)
            if (objects[static_cast<std::size_t>(i)] == std::pair{c, x}) return i;
        throw error("grothendieck: unknown element");
    }
};

inline GrothendieckResult grothendieck(const SetDiagram& X) {
    const FinCategory& C = X.shape;
    GrothendieckResult R;
    FinCategory& E = R.cat;
    std::map<std::pair<int, int>, int> oi;
    for (int c = 0; c < C.num_objects(); ++c)
        for (int x = 0; x < X.size_at(c); ++x) {
            oi[{c, x}] = E.num_objects();
            R.objects.push_back({c, x});
            E.objects.push_back("(" + C.objects[static_cast<std::size_t>(c)] + "#" + std::to_string(x) + ")");
        }
    std::map<std::pair<int, int>, int> mi;
    for (int s = 0; s < E.num_objects(); ++s) {
        auto [c, x] = R.objects[static_cast<std::size_t>(s)];
        for (int f = 0; f < C.num_morphisms(); ++f) {
            if (C.morphisms[static_cast<std::size_t>(f)].src != c) continue;
            int c2 = C.morphisms[static_cast<std::size_t>(f)].dst;
            int x2 = X.action[static_cast<std::size_t>(f)][static_cast<std::size_t>(x)];
            mi[{s, f}] = E.num_morphisms();
            R.morphisms.push_back({s, f});
            E.morphisms.push_back({E.objects[static_cast<std::size_t>(s)] + "|" +
                                       C.morphisms[static_cast<std::size_t>(f)].id,
                                   s, oi.at({c2, x2})});
        }
    }
    for (int s = 0; s < E.num_objects(); ++s)
        E.identity.push_back(mi.at({s, C.identity[static_cast<std::size_t>(R.objects[static_cast<std::size_t>(s)].first)]}));
    const int nm = E.num_morphisms();
    E.table.assign(static_cast<std::size_t>(nm), std::vector<int>(static_cast<std::size_t>(nm), -1));
    for (int g = 0; g < nm; ++g)
        for (int f = 0; f < nm; ++f) {
            if (E.morphisms[static_cast<std::size_t>(f)].dst != E.morphisms[static_cast<std::size_t>(g)].src) continue;
            auto [sg, fg] = R.morphisms[static_cast<std::size_t>(g)];
            auto [sf, ff] = R.morphisms[static_cast<std::size_t>(f)];
            (void)sg;
            E.table[static_cast<std::size_t>(g)][static_cast<std::size_t>(f)] = mi.at({sf, C.compose(fg, ff)});
        }
    R.projection = Functor{E, C, {}, {}};
    for (auto& [c, x] : R.objects) {
        (void)x;
        R.projection.obj_map.push_back(c);
    }
    for (auto& [s, f] : R.morphisms) {
        (void)s;
        R.projection.mor_map.push_back(f);
    }
    return R;
}

/// Category of elements of a presheaf (a SetDiagram over the opposite
/// shape); the projection is a discrete cartesian fibration.
inline GrothendieckResult category_of_elements(const SetDiagram& X) {
    GrothendieckResult G = grothendieck(X);
    GrothendieckResult R;
    R.objects = G.objects;
    R.morphisms = G.morphisms;
    R.cat = opposite(G.cat);
    R.projection = Functor{R.cat, opposite(X.shape), G.projection.obj_map, G.projection.mor_map};
    return R;
}

/// Connected components of a category's underlying graph; this is the
/// pi_0 of its nerve.
inline std::pair<int, std::vector<int>> category_components(const FinCategory& C) {
    detail::UnionFind uf(C.num_objects());
    for (const auto& m : C.morphisms) uf.unite(m.src, m.dst);
    std::map<int, int> renumber;
    std::vector<int> comp;
    int count = 0;
    for (int c = 0; c < C.num_objects(); ++c) {
        auto [it, inserted] = renumber.try_emplace(uf.find(c), count);
        if (inserted) ++count;
        comp.push_back(it->second);
    }
    return {count, comp};
}

/// Diagram of finite sets indexed by a simplicial set: values on
/// vertices, actions on nondegenerate edges, 2-simplices imposing the
/// usual coherence.
struct SSetDiagram {
    SSet base;
    std::vector<int> vertex_sizes;
    std::vector<std::vector<int>> edge_actions;  // per nondegenerate edge

    int size_at_vertex(int v) const { return vertex_sizes[static_cast<std::size_t>(v)]; }
};

/// Action of a full edge: identity for degenerate edges.
inline std::vector<int> edge_action(const SSetDiagram& F, const SimplexRef& e) {
    if (e.level() != 1) throw error("edge_action: not an edge");
    if (e.op.target_rank == 0) {
        std::vector<int> id(static_cast<std::size_t>(F.size_at_vertex(e.gen)));
        std::iota(id.begin(), id.end(), 0);
        return id;
    }
    return F.edge_actions[static_cast<std::size_t>(e.gen)];
}

/// Composite of the spine edge actions of a full simplex from vertex i
/// to vertex j, evaluated left to right.
inline std::vector<int> path_action(const SSetDiagram& F, const SimplexRef& s, int i, int j) {
    std::vector<int> acc(static_cast<std::size_t>(F.size_at_vertex(vertex(F.base, s, i))));
    std::iota(acc.begin(), acc.end(), 0);
    for (int l = i; l < j; ++l) {
        SimplexRef e = apply(F.base, s, MonotoneMap(1, s.level(), {l, l + 1}));
        auto a = edge_action(F, e);
        for (auto& v : acc) v = a[static_cast<std::size_t>(v)];
    }
    return acc;
}

inline std::vector<std::string> validate(const SSetDiagram& F) {
    std::vector<std::string> bad;
    const SSet& S = F.base;
    if (static_cast<int>(F.vertex_sizes.size()) != S.nondeg_count(0)) {
        bad.push_back("vertex size table has wrong size");
        return bad;
    }
    int ne = S.truncation >= 1 ? S.nondeg_count(1) : 0;
    if (static_cast<int>(F.edge_actions.size()) != ne) {
        bad.push_back("edge action table has wrong size");
        return bad;
    }
    for (int e = 0; e < ne; ++e) {
        SimplexRef edge{identity_map(1), e};
        int v0 = vertex(S, edge, 0), v1 = vertex(S, edge, 1);
        const auto& a = F.edge_actions[static_cast<std::size_t>(e)];
        if (static_cast<int>(a.size()) != F.size_at_vertex(v0)) {
            bad.push_back("edge action of " + S.id_of(1, e) + " has wrong domain size");
            continue;
        }
        for (int v : a)
            if (v < 0 || v >= F.size_at_vertex(v1))
                bad.push_back("edge action of " + S.id_of(1, e) + " is out of range");
    }
    if (!bad.empty()) return bad;
    for (int t = 2; t <= std::min(S.truncation, 2); ++t)
        for (int x = 0; x < S.nondeg_count(2); ++x) {
            SimplexRef s{identity_map(2), x};
            auto a02 = edge_action(F, face(S, s, 1));
            auto a01 = edge_action(F, face(S, s, 2));
            auto a12 = edge_action(F, face(S, s, 0));
            bool ok = true;
            for (std::size_t v = 0; v < a01.size(); ++v)
                if (a12[static_cast<std::size_t>(a01[v])] != a02[v]) ok = false;
            if (!ok) bad.push_back("2-simplex coherence fails at " + S.id_of(2, x));
        }
    return bad;
}

inline bool is_valid(const SSetDiagram& F) { return validate(F).empty(); }

}  // namespace cofin
