#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "cofin/monotone.hpp"

namespace cofin {

/// A finite category given by a total composition table. Objects and
/// morphisms are addressed by index; the string ids exist for
/// serialization and deterministic reporting.
struct FinCategory {
    struct Mor {
        std::string id;
        int src = 0;
        int dst = 0;
    };

    std::vector<std::string> objects;
    std::vector<Mor> morphisms;
    std::vector<int> identity;             // object index -> morphism index
    std::vector<std::vector<int>> table;   // table[g][f] = index of g.f, -1 if not composable

    int num_objects() const { return static_cast<int>(objects.size()); }
    int num_morphisms() const { return static_cast<int>(morphisms.size()); }

    int compose(int g, int f) const { return table[static_cast<std::size_t>(g)][static_cast<std::size_t>(f)]; }

    int object_index(const std::string& id) const {
        for (int i = 0; i < num_objects(); ++i)
            if (objects[static_cast<std::size_t>(i)] == id) return i;
        throw error("unknown object id: " + id);
    }
    int morphism_index(const std::string& id) const {
        for (int i = 0; i < num_morphisms(); ++i)
            if (morphisms[static_cast<std::size_t>(i)].id == id) return i;
        throw error("unknown morphism id: " + id);
    }

    std::vector<int> hom(int a, int b) const {
        std::vector<int> out;
        for (int i = 0; i < num_morphisms(); ++i)
            if (morphisms[static_cast<std::size_t>(i)].src == a &&
                morphisms[static_cast<std::size_t>(i)].dst == b)
                out.push_back(i);
        return out;
    }
};

/// Reports every broken category axiom; an empty result means valid.
inline std::vector<std::string> validate(const FinCategory& C) {
    std::vector<std::string> bad;
    const int nm = C.num_morphisms();
    if (static_cast<int>(C.identity.size()) != C.num_objects())
        bad.push_back("identity table has wrong size");
    if (static_cast<int>(C.table.size()) != nm)
        bad.push_back("composition table has wrong size");
    for (const auto& row : C.table)
        if (static_cast<int>(row.size()) != nm) {
            bad.push_back("composition table row has wrong size");
            return bad;
        }
    for (const auto& m : C.morphisms)
        if (m.src < 0 || m.src >= C.num_objects() || m.dst < 0 || m.dst >= C.num_objects())
            bad.push_back("morphism " + m.id + " has bad endpoints");
    if (!bad.empty()) return bad;

    for (int a = 0; a < C.num_objects(); ++a) {
        int e = C.identity[static_cast<std::size_t>(a)];
        if (e < 0 || e >= nm || C.morphisms[static_cast<std::size_t>(e)].src != a ||
            C.morphisms[static_cast<std::size_t>(e)].dst != a)
            bad.push_back("identity of " + C.objects[static_cast<std::size_t>(a)] + " is not an endomorphism");
    }
    for (int g = 0; g < nm; ++g)
        for (int f = 0; f < nm; ++f) {
            const auto& mg = C.morphisms[static_cast<std::size_t>(g)];
            const auto& mf = C.morphisms[static_cast<std::size_t>(f)];
            int gf = C.compose(g, f);
            if (mf.dst != mg.src) {
                if (gf != -1)
                    bad.push_back("composite defined for non-composable (" + mg.id + "," + mf.id + ")");
                continue;
            }
            if (gf < 0 || gf >= nm) {
                bad.push_back("missing composite (" + mg.id + "," + mf.id + ")");
                continue;
            }
            const auto& mgf = C.morphisms[static_cast<std::size_t>(gf)];
            if (mgf.src != mf.src || mgf.dst != mg.dst)
                bad.push_back("mistargeted composite (" + mg.id + "," + mf.id + ")");
        }
    if (!bad.empty()) return bad;

    for (int f = 0; f < nm; ++f) {
        const auto& mf = C.morphisms[static_cast<std::size_t>(f)];
        if (C.compose(f, C.identity[static_cast<std::size_t>(mf.src)]) != f ||
            C.compose(C.identity[static_cast<std::size_t>(mf.dst)], f) != f)
            bad.push_back("identity law fails at " + mf.id);
    }
    for (int h = 0; h < nm; ++h)
        for (int g = 0; g < nm; ++g) {
            if (C.morphisms[static_cast<std::size_t>(g)].dst != C.morphisms[static_cast<std::size_t>(h)].src) continue;
            int hg = C.compose(h, g);
            for (int f = 0; f < nm; ++f) {
                if (C.morphisms[static_cast<std::size_t>(f)].dst != C.morphisms[static_cast<std::size_t>(g)].src) continue;
                if (C.compose(h, C.compose(g, f)) != C.compose(hg, f))
                    bad.push_back("associativity fails on (" +
                                  C.morphisms[static_cast<std::size_t>(h)].id + "," +
                                  C.morphisms[static_cast<std::size_t>(g)].id + "," +
                                  C.morphisms[static_cast<std::size_t>(f)].id + ")");
            }
        }
    return bad;
}

inline bool is_valid(const FinCategory& C) { return validate(C).empty(); }

struct Functor {
    FinCategory dom;
    FinCategory cod;
    std::vector<int> obj_map;
    std::vector<int> mor_map;

    int on_object(int a) const { return obj_map[static_cast<std::size_t>(a)]; }
    int on_morphism(int f) const { return mor_map[static_cast<std::size_t>(f)]; }
};

inline std::vector<std::string> validate(const Functor& F) {
    std::vector<std::string> bad;
    if (static_cast<int>(F.obj_map.size()) != F.dom.num_objects() ||
        static_cast<int>(F.mor_map.size()) != F.dom.num_morphisms()) {
        bad.push_back("functor maps have wrong size");
        return bad;
    }
    for (int f = 0; f < F.dom.num_morphisms(); ++f) {
        const auto& m = F.dom.morphisms[static_cast<std::size_t>(f)];
        const auto& n = F.cod.morphisms[static_cast<std::size_t>(F.on_morphism(f))];
        if (n.src != F.on_object(m.src) || n.dst != F.on_object(m.dst))
            bad.push_back("functor breaks endpoints at " + m.id);
    }
    for (int a = 0; a < F.dom.num_objects(); ++a)
        if (F.on_morphism(F.dom.identity[static_cast<std::size_t>(a)]) !=
            F.cod.identity[static_cast<std::size_t>(F.on_object(a))])
            bad.push_back("functor breaks identity at " + F.dom.objects[static_cast<std::size_t>(a)]);
    for (int g = 0; g < F.dom.num_morphisms(); ++g)
        for (int f = 0; f < F.dom.num_morphisms(); ++f) {
            int gf = F.dom.compose(g, f);
            if (gf == -1) continue;
            if (F.cod.compose(F.on_morphism(g), F.on_morphism(f)) != F.on_morphism(gf))
                bad.push_back("functor breaks composition at (" +
                              F.dom.morphisms[static_cast<std::size_t>(g)].id + "," +
                              F.dom.morphisms[static_cast<std::size_t>(f)].id + ")");
        }
    return bad;
}

inline bool is_valid(const Functor& F) { return validate(F).empty(); }

inline Functor identity_functor(const FinCategory& C) {
    Functor F{C, C, {}, {}};
    F.obj_map.resize(static_cast<std::size_t>(C.num_objects()));
    F.mor_map.resize(static_cast<std::size_t>(C.num_morphisms()));
    for (int a = 0; a < C.num_objects(); ++a) F.obj_map[static_cast<std::size_t>(a)] = a;
    for (int f = 0; f < C.num_morphisms(); ++f) F.mor_map[static_cast<std::size_t>(f)] = f;
    return F;
}

inline Functor compose_functors(const Functor& G, const Functor& F) {
    Functor H{F.dom, G.cod, {}, {}};
    for (int a = 0; a < F.dom.num_objects(); ++a)
        H.obj_map.push_back(G.on_object(F.on_object(a)));
    for (int f = 0; f < F.dom.num_morphisms(); ++f)
        H.mor_map.push_back(G.on_morphism(F.on_morphism(f)));
    return H;
}

inline FinCategory terminal_category() {
    FinCategory C;
    C.objects = {"*"};
    C.morphisms = {{"id*", 0, 0}};
    C.identity = {0};
    C.table = {{0}};
    return C;
}

inline FinCategory discrete_category(int k) {
    FinCategory C;
    for (int i = 0; i < k; ++i) {
        C.objects.push_back("o" + std::to_string(i));
        C.morphisms.push_back({"id_o" + std::to_string(i), i, i});
        C.identity.push_back(i);
    }
    C.table.assign(static_cast<std::size_t>(k), std::vector<int>(static_cast<std::size_t>(k), -1));
    for (int i = 0; i < k; ++i) C.table[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = i;
    return C;
}

/// Functor from the terminal category picking out the object d.
inline Functor constant_functor(const FinCategory& D, int d) {
    Functor F{terminal_category(), D, {d}, {D.identity[static_cast<std::size_t>(d)]}};
    return F;
}

inline FinCategory opposite(const FinCategory& C) {
    FinCategory O;
    O.objects = C.objects;
    O.identity = C.identity;
    O.morphisms = C.morphisms;
    for (auto& m : O.morphisms) std::swap(m.src, m.dst);
    const int nm = C.num_morphisms();
    O.table.assign(static_cast<std::size_t>(nm), std::vector<int>(static_cast<std::size_t>(nm), -1));
    for (int g = 0; g < nm; ++g)
        for (int f = 0; f < nm; ++f)
            O.table[static_cast<std::size_t>(g)][static_cast<std::size_t>(f)] = C.compose(f, g);
    return O;
}

/// Opposite of a functor, between the opposite categories. Index maps
/// are unchanged since opposite() preserves numbering.
inline Functor opposite(const Functor& F) {
    return Functor{opposite(F.dom), opposite(F.cod), F.obj_map, F.mor_map};
}

struct ProductResult {
    FinCategory cat;
    Functor proj_left;
    Functor proj_right;
    std::vector<std::pair<int, int>> object_pairs;
    std::vector<std::pair<int, int>> morphism_pairs;

    int object_of(int a, int b) const {
        for (int i = 0; i < static_cast<int>(object_pairs.size()); ++i)
            if (object_pairs[static_cast<std::size_t>(i)] == std::pair{a, b}) return i;
        throw error("product: unknown object pair");
    }
};

inline ProductResult product(const FinCategory& A, const FinCategory& B) {
    ProductResult R;
    FinCategory& P = R.cat;
    std::map<std::pair<int, int>, int> oi, mi;
    for (int a = 0; a < A.num_objects(); ++a)
        for (int b = 0; b < B.num_objects(); ++b) {
            oi[{a, b}] = P.num_objects();
            R.object_pairs.push_back({a, b});
            P.objects.push_back("(" + A.objects[static_cast<std::size_t>(a)] + "," +
                                B.objects[static_cast<std::size_t>(b)] + ")");
        }
    for (int f = 0; f < A.num_morphisms(); ++f)
        for (int g = 0; g < B.num_morphisms(); ++g) {
            const auto& mf = A.morphisms[static_cast<std::size_t>(f)];
            const auto& mg = B.morphisms[static_cast<std::size_t>(g)];
            mi[{f, g}] = P.num_morphisms();
            R.morphism_pairs.push_back({f, g});
            P.morphisms.push_back({"(" + mf.id + "," + mg.id + ")",
                                   oi[{mf.src, mg.src}], oi[{mf.dst, mg.dst}]});
        }
    for (auto& [pair, idx] : oi) {
        (void)idx;
        P.identity.push_back(mi[{A.identity[static_cast<std::size_t>(pair.first)],
                                 B.identity[static_cast<std::size_t>(pair.second)]}]);
    }
    const int nm = P.num_morphisms();
    P.table.assign(static_cast<std::size_t>(nm), std::vector<int>(static_cast<std::size_t>(nm), -1));
    for (int g = 0; g < nm; ++g)
        for (int f = 0; f < nm; ++f) {
            auto [g1, g2] = R.morphism_pairs[static_cast<std::size_t>(g)];
            auto [f1, f2] = R.morphism_pairs[static_cast<std::size_t>(f)];
            int c1 = A.compose(g1, f1), c2 = B.compose(g2, f2);
            if (c1 != -1 && c2 != -1)
                P.table[static_cast<std::size_t>(g)][static_cast<std::size_t>(f)] = mi[{c1, c2}];
        }
    R.proj_left = Functor{P, A, {}, {}};
    R.proj_right = Functor{P, B, {}, {}};
    for (auto& [a, b] : R.object_pairs) {
        R.proj_left.obj_map.push_back(a);
        R.proj_right.obj_map.push_back(b);
    }
    for (auto& [f, g] : R.morphism_pairs) {
        R.proj_left.mor_map.push_back(f);
        R.proj_right.mor_map.push_back(g);
    }
    return R;
}

/// Diagonal C -> C x C relative to a given product() result of (C, C).
inline Functor diagonal_functor(const FinCategory& C, const ProductResult& CxC) {
    Functor D{C, CxC.cat, {}, {}};
    std::map<std::pair<int, int>, int> oi, mi;
    for (int i = 0; i < static_cast<int>(CxC.object_pairs.size()); ++i)
        oi[CxC.object_pairs[static_cast<std::size_t>(i)]] = i;
    for (int i = 0; i < static_cast<int>(CxC.morphism_pairs.size()); ++i)
        mi[CxC.morphism_pairs[static_cast<std::size_t>(i)]] = i;
    for (int a = 0; a < C.num_objects(); ++a) D.obj_map.push_back(oi[{a, a}]);
    for (int f = 0; f < C.num_morphisms(); ++f) D.mor_map.push_back(mi[{f, f}]);
    return D;
}

/// F x G between the canonical products of the domains and codomains.
inline Functor product_functor(const Functor& F, const Functor& G) {
    ProductResult D = product(F.dom, G.dom);
    ProductResult C = product(F.cod, G.cod);
    std::map<std::pair<int, int>, int> oi, mi;
    for (int i = 0; i < static_cast<int>(C.object_pairs.size()); ++i)
        oi[C.object_pairs[static_cast<std::size_t>(i)]] = i;
    for (int i = 0; i < static_cast<int>(C.morphism_pairs.size()); ++i)
        mi[C.morphism_pairs[static_cast<std::size_t>(i)]] = i;
    Functor H{D.cat, C.cat, {}, {}};
    for (auto& [a, b] : D.object_pairs)
        H.obj_map.push_back(oi.at({F.obj_map[static_cast<std::size_t>(a)],
                                   G.obj_map[static_cast<std::size_t>(b)]}));
    for (auto& [f, g] : D.morphism_pairs)
        H.mor_map.push_back(mi.at({F.mor_map[static_cast<std::size_t>(f)],
                                   G.mor_map[static_cast<std::size_t>(g)]}));
    return H;
}

/// Comma category (F down G) for F: A -> C, G: B -> C.
/// Objects are triples (a, b, f: F(a) -> G(b)); morphisms are commuting
/// squares (u, v).
struct CommaResult {
    FinCategory cat;
    Functor proj_left;   // to A
    Functor proj_right;  // to B
    std::vector<std::tuple<int, int, int>> objects_data;      // (a, b, f)
    std::vector<std::tuple<int, int, int>> morphisms_data;    // (src object, u, v)
};

inline CommaResult comma(const Functor& F, const Functor& G) {
    const FinCategory& A = F.dom;
    const FinCategory& B = G.dom;
    const FinCategory& C = F.cod;
    CommaResult R;
    FinCategory& K = R.cat;
    std::map<std::tuple<int, int, int>, int> oi;
    for (int a = 0; a < A.num_objects(); ++a)
        for (int b = 0; b < B.num_objects(); ++b)
            for (int f : C.hom(F.on_object(a), G.on_object(b))) {
                oi[{a, b, f}] = K.num_objects();
                R.objects_data.push_back({a, b, f});
                K.objects.push_back("(" + A.objects[static_cast<std::size_t>(a)] + ";" +
                                    B.objects[static_cast<std::size_t>(b)] + ";" +
                                    C.morphisms[static_cast<std::size_t>(f)].id + ")");
            }
    // a morphism is a square (u, v); (u, v) alone does not determine the
    // target object, so morphisms are keyed by endpoints as well
    std::map<std::tuple<int, int, int, int>, int> mi;
    for (int s = 0; s < K.num_objects(); ++s) {
        auto [a, b, f] = R.objects_data[static_cast<std::size_t>(s)];
        for (int u = 0; u < A.num_morphisms(); ++u) {
            if (A.morphisms[static_cast<std::size_t>(u)].src != a) continue;
            int a2 = A.morphisms[static_cast<std::size_t>(u)].dst;
            for (int v = 0; v < B.num_morphisms(); ++v) {
                if (B.morphisms[static_cast<std::size_t>(v)].src != b) continue;
                int b2 = B.morphisms[static_cast<std::size_t>(v)].dst;
                for (int f2 : C.hom(F.on_object(a2), G.on_object(b2))) {
                    if (C.compose(f2, F.on_morphism(u)) != C.compose(G.on_morphism(v), f)) continue;
                    int t = oi.at({a2, b2, f2});
                    mi[{s, t, u, v}] = K.num_morphisms();
                    R.morphisms_data.push_back({s, u, v});
                    K.morphisms.push_back({K.objects[static_cast<std::size_t>(s)] + ">" +
                                               K.objects[static_cast<std::size_t>(t)] + "|" +
                                               A.morphisms[static_cast<std::size_t>(u)].id + ";" +
                                               B.morphisms[static_cast<std::size_t>(v)].id,
                                           s, t});
                }
            }
        }
    }
    for (int s = 0; s < K.num_objects(); ++s) {
        auto [a, b, f] = R.objects_data[static_cast<std::size_t>(s)];
        (void)f;
        K.identity.push_back(mi.at({s, s, A.identity[static_cast<std::size_t>(a)],
                                    B.identity[static_cast<std::size_t>(b)]}));
    }
    const int nm = K.num_morphisms();
    K.table.assign(static_cast<std::size_t>(nm), std::vector<int>(static_cast<std::size_t>(nm), -1));
    for (int g = 0; g < nm; ++g)
        for (int f = 0; f < nm; ++f) {
            if (K.morphisms[static_cast<std::size_t>(f)].dst != K.morphisms[static_cast<std::size_t>(g)].src) continue;
            auto [sg, ug, vg] = R.morphisms_data[static_cast<std::size_t>(g)];
            auto [sf, uf, vf] = R.morphisms_data[static_cast<std::size_t>(f)];
            (void)sg;
            K.table[static_cast<std::size_t>(g)][static_cast<std::size_t>(f)] =
                mi.at({sf, K.morphisms[static_cast<std::size_t>(g)].dst, A.compose(ug, uf),
                       B.compose(vg, vf)});
        }
    R.proj_left = Functor{K, A, {}, {}};
    R.proj_right = Functor{K, B, {}, {}};
    for (auto& [a, b, f] : R.objects_data) {
        (void)f;
        R.proj_left.obj_map.push_back(a);
        R.proj_right.obj_map.push_back(b);
    }
    for (auto& [s, u, v] : R.morphisms_data) {
        (void)s;
        R.proj_left.mor_map.push_back(u);
        R.proj_right.mor_map.push_back(v);
    }
    return R;
}

/// C x_D D_{/d}: objects are pairs (c, f: p(c) -> d).
inline CommaResult slice_along(const Functor& p, int d) {
    if (d < 0 || d >= p.cod.num_objects()) throw error("slice_along: unknown object");
    return comma(p, constant_functor(p.cod, d));
}

/// C x_D D_{d/}: objects are pairs (c, f: d -> p(c)).
inline CommaResult coslice_along(const Functor& p, int d) {
    if (d < 0 || d >= p.cod.num_objects()) throw error("coslice_along: unknown object");
    return comma(constant_functor(p.cod, d), p);
}

inline CommaResult slice(const FinCategory& C, int d) { return slice_along(identity_functor(C), d); }
inline CommaResult coslice(const FinCategory& C, int d) { return coslice_along(identity_functor(C), d); }

/// Strict pullback A x_C B of F: A -> C and G: B -> C.
struct PullbackResult {
    FinCategory cat;
    Functor proj_left;
    Functor proj_right;
    std::vector<std::pair<int, int>> object_pairs;
    std::vector<std::pair<int, int>> morphism_pairs;
};

inline PullbackResult pullback(const Functor& F, const Functor& G) {
    const FinCategory& A = F.dom;
    const FinCategory& B = G.dom;
    PullbackResult R;
    FinCategory& P = R.cat;
    std::map<std::pair<int, int>, int> oi, mi;
    for (int a = 0; a < A.num_objects(); ++a)
        for (int b = 0; b < B.num_objects(); ++b) {
            if (F.on_object(a) != G.on_object(b)) continue;
            oi[{a, b}] = P.num_objects();
            R.object_pairs.push_back({a, b});
            P.objects.push_back("(" + A.objects[static_cast<std::size_t>(a)] + "," +
                                B.objects[static_cast<std::size_t>(b)] + ")");
        }
    for (int u = 0; u < A.num_morphisms(); ++u)
        for (int v = 0; v < B.num_morphisms(); ++v) {
            if (F.on_morphism(u) != G.on_morphism(v)) continue;
            const auto& mu = A.morphisms[static_cast<std::size_t>(u)];
            const auto& mv = B.morphisms[static_cast<std::size_t>(v)];
            auto s = oi.find({mu.src, mv.src});
            auto t = oi.find({mu.dst, mv.dst});
            if (s == oi.end() || t == oi.end()) continue;
            mi[{u, v}] = P.num_morphisms();
            R.morphism_pairs.push_back({u, v});
            P.morphisms.push_back({"(" + mu.id + "," + mv.id + ")", s->second, t->second});
        }
    for (auto& [a, b] : R.object_pairs)
        P.identity.push_back(mi.at({A.identity[static_cast<std::size_t>(a)],
                                    B.identity[static_cast<std::size_t>(b)]}));
    const int nm = P.num_morphisms();
    P.table.assign(static_cast<std::size_t>(nm), std::vector<int>(static_cast<std::size_t>(nm), -1));
    for (int g = 0; g < nm; ++g)
        for (int f = 0; f < nm; ++f) {
            if (P.morphisms[static_cast<std::size_t>(f)].dst != P.morphisms[static_cast<std::size_t>(g)].src) continue;
            auto [ug, vg] = R.morphism_pairs[static_cast<std::size_t>(g)];
            auto [uf, vf] = R.morphism_pairs[static_cast<std::size_t>(f)];
            P.table[static_cast<std::size_t>(g)][static_cast<std::size_t>(f)] =
                mi.at({A.compose(ug, uf), B.compose(vg, vf)});
        }
    R.proj_left = Functor{P, A, {}, {}};
    R.proj_right = Functor{P, B, {}, {}};
    for (auto& [a, b] : R.object_pairs) {
        R.proj_left.obj_map.push_back(a);
        R.proj_right.obj_map.push_back(b);
    }
    for (auto& [u, v] : R.morphism_pairs) {
        R.proj_left.mor_map.push_back(u);
        R.proj_right.mor_map.push_back(v);
    }
    return R;
}

/// Wide pullback C_{a1/} x_C ... x_C C_{am/}. Objects are tuples
/// (c, f_1: a_1 -> c, ..., f_m: a_m -> c); morphisms are maps c -> c'
/// commuting with all legs. m = 0 gives C back.
inline FinCategory multislice(const FinCategory& C, const std::vector<int>& anchors) {
    for (int a : anchors)
        if (a < 0 || a >= C.num_objects()) throw error("multislice: unknown object");
    if (anchors.empty()) return C;
    FinCategory M;
    std::vector<std::pair<int, std::vector<int>>> obj_data;  // (c, legs)
    std::map<std::pair<int, std::vector<int>>, int> oi;
    for (int c = 0; c < C.num_objects(); ++c) {
        std::vector<std::vector<int>> homs;
        for (int a : anchors) homs.push_back(C.hom(a, c));
        std::vector<std::size_t> pick(anchors.size(), 0);
        bool any_empty = false;
        for (auto& h : homs)
            if (h.empty()) any_empty = true;
        if (any_empty) continue;
        while (true) {
            std::vector<int> legs;
            for (std::size_t i = 0; i < pick.size(); ++i) legs.push_back(homs[i][pick[i]]);
            oi[{c, legs}] = M.num_objects();
            obj_data.push_back({c, legs});
            std::string id = "(" + C.objects[static_cast<std::size_t>(c)];
            for (int l : legs) id += ";" + C.morphisms[static_cast<std::size_t>(l)].id;
            id += ")";
            M.objects.push_back(id);
            std::size_t i = pick.size();
            while (i > 0 && pick[i - 1] + 1 == homs[i - 1].size()) { pick[i - 1] = 0; --i; }
            if (i == 0) break;
            ++pick[i - 1];
        }
    }
    std::map<std::pair<int, int>, int> mi;  // (src obj, u) -> morphism
    std::vector<std::pair<int, int>> mor_data;
    for (int s = 0; s < M.num_objects(); ++s) {
        auto& [c, legs] = obj_data[static_cast<std::size_t>(s)];
        for (int u = 0; u < C.num_morphisms(); ++u) {
            if (C.morphisms[static_cast<std::size_t>(u)].src != c) continue;
            std::vector<int> legs2;
            for (int l : legs) legs2.push_back(C.compose(u, l));
            auto t = oi.find({C.morphisms[static_cast<std::size_t>(u)].dst, legs2});
            if (t == oi.end()) continue;  // cannot happen for a valid C
            mi[{s, u}] = M.num_morphisms();
            mor_data.push_back({s, u});
            M.morphisms.push_back({M.objects[static_cast<std::size_t>(s)] + "|" +
                                       C.morphisms[static_cast<std::size_t>(u)].id,
                                   s, t->second});
        }
    }
    for (int s = 0; s < M.num_objects(); ++s)
        M.identity.push_back(mi.at({s, C.identity[static_cast<std::size_t>(obj_data[static_cast<std::size_t>(s)].first)]}));
    const int nm = M.num_morphisms();
    M.table.assign(static_cast<std::size_t>(nm), std::vector<int>(static_cast<std::size_t>(nm), -1));
    for (int g = 0; g < nm; ++g)
        for (int f = 0; f < nm; ++f) {
            if (M.morphisms[static_cast<std::size_t>(f)].dst != M.morphisms[static_cast<std::size_t>(g)].src) continue;
            auto [sg, ug] = mor_data[static_cast<std::size_t>(g)];
            auto [sf, uf] = mor_data[static_cast<std::size_t>(f)];
            (void)sg;
            M.table[static_cast<std::size_t>(g)][static_cast<std::size_t>(f)] = mi.at({sf, C.compose(ug, uf)});
        }
    return M;
}

/// Brute-force isomorphism search; intended for small categories only.
inline bool isomorphic(const FinCategory& A, const FinCategory& B) {
    if (A.num_objects() != B.num_objects() || A.num_morphisms() != B.num_morphisms())
        return false;
    const int no = A.num_objects();
    std::vector<int> perm(static_cast<std::size_t>(no));
    for (int i = 0; i < no; ++i) perm[static_cast<std::size_t>(i)] = i;
    do {
        bool hom_ok = true;
        for (int a = 0; a < no && hom_ok; ++a)
            for (int b = 0; b < no && hom_ok; ++b)
                if (A.hom(a, b).size() != B.hom(perm[static_cast<std::size_t>(a)],
                                                perm[static_cast<std::size_t>(b)]).size())
                    hom_ok = false;
        if (!hom_ok) continue;
        // backtracking over morphism bijections respecting hom-sets
        std::vector<int> mmap(static_cast<std::size_t>(A.num_morphisms()), -1);
        std::vector<bool> used(static_cast<std::size_t>(B.num_morphisms()), false);
        auto consistent = [&](int upto) {
            for (int g = 0; g <= upto; ++g)
                for (int f = 0; f <= upto; ++f) {
                    int gf = A.compose(g, f);
                    if (A.morphisms[static_cast<std::size_t>(f)].dst != A.morphisms[static_cast<std::size_t>(g)].src)
                        continue;
                    if (gf <= upto && gf >= 0) {
                        int c = B.compose(mmap[static_cast<std::size_t>(g)], mmap[static_cast<std::size_t>(f)]);
                        if (c != mmap[static_cast<std::size_t>(gf)]) return false;
                    }
                }
            return true;
        };
        std::function<bool(int)> go = [&](int f) -> bool {
            if (f == A.num_morphisms()) return true;
            const auto& mf = A.morphisms[static_cast<std::size_t>(f)];
            for (int g = 0; g < B.num_morphisms(); ++g) {
                if (used[static_cast<std::size_t>(g)]) continue;
                const auto& mg = B.morphisms[static_cast<std::size_t>(g)];
                if (mg.src != perm[static_cast<std::size_t>(mf.src)] ||
                    mg.dst != perm[static_cast<std::size_t>(mf.dst)])
                    continue;
                bool f_is_id = A.identity[static_cast<std::size_t>(mf.src)] == f;
                bool g_is_id = B.identity[static_cast<std::size_t>(mg.src)] == g;
                if (f_is_id != g_is_id) continue;
                mmap[static_cast<std::size_t>(f)] = g;
                used[static_cast<std::size_t>(g)] = true;
                if (consistent(f) && go(f + 1)) return true;
                used[static_cast<std::size_t>(g)] = false;
                mmap[static_cast<std::size_t>(f)] = -1;
            }
            return false;
        };
        if (go(0)) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

}  // namespace cofin
