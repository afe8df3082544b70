#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "cofin/diagram.hpp"
#include "cofin/fincat.hpp"
#include "cofin/sset.hpp"

namespace cofin {

/// Seeded generator; all randomized operations take one of these so
/// runs are reproducible.
struct Rng {
    std::mt19937_64 eng;

    explicit Rng(std::uint64_t seed) : eng(seed) {}

    int below(int n) {
        return static_cast<int>(std::uniform_int_distribution<int>(0, n - 1)(eng));
    }
    bool coin() { return below(2) == 1; }
};

/// Quotient of a category by the congruence generated by identifying
/// the given parallel morphism pairs.
inline FinCategory quotient_category(const FinCategory& C, const std::vector<std::pair<int, int>>& pairs) {
    const int nm = C.num_morphisms();
    std::vector<int> parent(static_cast<std::size_t>(nm));
    for (int i = 0; i < nm; ++i) parent[static_cast<std::size_t>(i)] = i;
    auto find = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)];
        return x;
    };
    auto unite = [&](int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
        return true;
    };
    for (auto [f, g] : pairs) {
        const auto &mf = C.morphisms[static_cast<std::size_t>(f)], &mg = C.morphisms[static_cast<std::size_t>(g)];
        if (mf.src != mg.src || mf.dst != mg.dst) throw error("quotient_category: pair not parallel");
        unite(f, g);
    }
    bool changed = true;
    while (changed) {
        changed = false;
        for (int f = 0; f < nm; ++f)
            for (int g = f + 1; g < nm; ++g) {
                if (find(f) != find(g)) continue;
                for (int h = 0; h < nm; ++h) {
                    int hf = C.compose(h, f), hg = C.compose(h, g);
                    if (hf != -1 && unite(hf, hg)) changed = true;
                    int fh = C.compose(f, h), gh = C.compose(g, h);
                    if (fh != -1 && unite(fh, gh)) changed = true;
                }
            }
    }
    FinCategory Q;
    Q.objects = C.objects;
    std::vector<int> cls(static_cast<std::size_t>(nm), -1);
    for (int f = 0; f < nm; ++f) {
        int r = find(f);
        if (cls[static_cast<std::size_t>(r)] == -1) {
            cls[static_cast<std::size_t>(r)] = Q.num_morphisms();
            Q.morphisms.push_back(C.morphisms[static_cast<std::size_t>(r)]);
        }
        cls[static_cast<std::size_t>(f)] = cls[static_cast<std::size_t>(r)];
    }
    for (int c = 0; c < C.num_objects(); ++c)
        Q.identity.push_back(cls[static_cast<std::size_t>(C.identity[static_cast<std::size_t>(c)])]);
    const int qm = Q.num_morphisms();
    Q.table.assign(static_cast<std::size_t>(qm), std::vector<int>(static_cast<std::size_t>(qm), -1));
    for (int g = 0; g < nm; ++g)
        for (int f = 0; f < nm; ++f) {
            int gf = C.compose(g, f);
            if (gf != -1)
                Q.table[static_cast<std::size_t>(cls[static_cast<std::size_t>(g)])]
                       [static_cast<std::size_t>(cls[static_cast<std::size_t>(f)])] =
                    cls[static_cast<std::size_t>(gf)];
        }
    return Q;
}

namespace detail {

/// Free category on a DAG whose edges all go from lower to higher node
/// index; morphisms are identities plus directed paths.
inline FinCategory free_dag_category(int nodes, const std::vector<std::pair<int, int>>& edges) {
    FinCategory C;
    for (int i = 0; i < nodes; ++i) C.objects.push_back("c" + std::to_string(i));
    std::vector<std::vector<int>> paths;  // edge index sequences
    std::map<std::vector<int>, int> path_index;
    for (int i = 0; i < nodes; ++i) {
        path_index[{-i - 1}] = C.num_morphisms();  // sentinel key for the identity
        paths.push_back({});
        C.identity.push_back(C.num_morphisms());
        C.morphisms.push_back({"1_c" + std::to_string(i), i, i});
    }
    // grow paths breadth-first by length
    std::vector<std::vector<int>> frontier;
    for (int e = 0; e < static_cast<int>(edges.size()); ++e) frontier.push_back({e});
    while (!frontier.empty()) {
        std::vector<std::vector<int>> next;
        for (auto& p : frontier) {
            int src = edges[static_cast<std::size_t>(p.front())].first;
            int dst = edges[static_cast<std::size_t>(p.back())].second;
            path_index[p] = C.num_morphisms();
            paths.push_back(p);
            std::string id = "e" + std::to_string(p[0]);
            for (std::size_t i = 1; i < p.size(); ++i) id += ".e" + std::to_string(p[i]);
            C.morphisms.push_back({id, src, dst});
            for (int e = 0; e < static_cast<int>(edges.size()); ++e)
                if (edges[static_cast<std::size_t>(e)].first == dst) {
                    auto q = p;
                    q.push_back(e);
                    next.push_back(std::move(q));
                }
        }
        frontier = std::move(next);
    }
    const int nm = C.num_morphisms();
    C.table.assign(static_cast<std::size_t>(nm), std::vector<int>(static_cast<std::size_t>(nm), -1));
    for (int g = 0; g < nm; ++g)
        for (int f = 0; f < nm; ++f) {
            const auto &mf = C.morphisms[static_cast<std::size_t>(f)], &mg = C.morphisms[static_cast<std::size_t>(g)];
            if (mf.dst != mg.src) continue;
            auto joined = paths[static_cast<std::size_t>(f)];
            joined.insert(joined.end(), paths[static_cast<std::size_t>(g)].begin(),
                          paths[static_cast<std::size_t>(g)].end());
            int r;
            if (joined.empty())
                r = C.identity[static_cast<std::size_t>(mf.src)];
            else
                r = path_index.at(joined);
            C.table[static_cast<std::size_t>(g)][static_cast<std::size_t>(f)] = r;
        }
    return C;
}

}  // namespace detail

/// Random finite category: free category on a small random DAG,
/// optionally quotiented by a random parallel pair.
inline FinCategory random_category(Rng& rng, int max_objects = 3, int max_morphisms = 8) {
    while (true) {
        int n = 1 + rng.below(max_objects);
        std::vector<std::pair<int, int>> edges;
        if (n >= 2) {
            int k = rng.below(5);
            for (int e = 0; e < k; ++e) {
                int i = rng.below(n - 1);
                int j = i + 1 + rng.below(n - 1 - i);
                edges.push_back({i, j});
            }
        }
        FinCategory C = detail::free_dag_category(n, edges);
        if (C.num_morphisms() > 2 * max_morphisms) continue;
        std::vector<std::pair<int, int>> parallel;
        for (int f = 0; f < C.num_morphisms(); ++f)
            for (int g = f + 1; g < C.num_morphisms(); ++g)
                if (C.morphisms[static_cast<std::size_t>(f)].src == C.morphisms[static_cast<std::size_t>(g)].src &&
                    C.morphisms[static_cast<std::size_t>(f)].dst == C.morphisms[static_cast<std::size_t>(g)].dst)
                    parallel.push_back({f, g});
        if (!parallel.empty() && rng.coin())
            C = quotient_category(C, {parallel[static_cast<std::size_t>(rng.below(static_cast<int>(parallel.size())))]});
        if (C.num_morphisms() <= max_morphisms) return C;
    }
}

/// All functors from A to B, found by backtracking over object and
/// morphism assignments; stops at the cap if given one.
inline std::vector<Functor> enumerate_functors(const FinCategory& A, const FinCategory& B,
                                               std::size_t cap = 100000) {
    std::vector<Functor> out;
    std::vector<int> obj(static_cast<std::size_t>(A.num_objects()), 0);
    std::function<void(int)> place_objects = [&](int next_obj) {
        if (out.size() >= cap) return;
        if (next_obj < A.num_objects()) {
            for (int b = 0; b < B.num_objects(); ++b) {
                obj[static_cast<std::size_t>(next_obj)] = b;
                place_objects(next_obj + 1);
            }
            return;
        }
        std::vector<int> mor(static_cast<std::size_t>(A.num_morphisms()), -1);
        for (int c = 0; c < A.num_objects(); ++c)
            mor[static_cast<std::size_t>(A.identity[static_cast<std::size_t>(c)])] =
                B.identity[static_cast<std::size_t>(obj[static_cast<std::size_t>(c)])];
        std::function<void(int)> place_mors = [&](int f) {
            if (out.size() >= cap) return;
            while (f < A.num_morphisms() && mor[static_cast<std::size_t>(f)] != -1) ++f;
            if (f == A.num_morphisms()) {
                Functor F{A, B, obj, mor};
                if (validate(F).empty()) out.push_back(std::move(F));
                return;
            }
            const auto& m = A.morphisms[static_cast<std::size_t>(f)];
            for (int g : B.hom(obj[static_cast<std::size_t>(m.src)], obj[static_cast<std::size_t>(m.dst)])) {
                mor[static_cast<std::size_t>(f)] = g;
                place_mors(f + 1);
            }
            mor[static_cast<std::size_t>(f)] = -1;
        };
        place_mors(0);
    };
    place_objects(0);
    return out;
}

inline Functor random_functor(Rng& rng, const FinCategory& A, const FinCategory& B) {
    auto all = enumerate_functors(A, B, 5000);
    if (all.empty()) throw error("random_functor: no functor exists");
    return all[static_cast<std::size_t>(rng.below(static_cast<int>(all.size())))];
}

/// Quotient of a set-valued diagram by the equivalence generated by the
/// given element identifications, saturated under every action map so
/// the result is again functorial.
inline SetDiagram quotient_diagram(const SetDiagram& D, std::vector<std::tuple<int, int, int>> pairs) {
    const FinCategory& C = D.shape;
    std::vector<int> offset(static_cast<std::size_t>(C.num_objects()) + 1, 0);
    for (int c = 0; c < C.num_objects(); ++c)
        offset[static_cast<std::size_t>(c) + 1] = offset[static_cast<std::size_t>(c)] + D.size_at(c);
    detail::UnionFind uf(offset.back());
    for (auto [c, x, y] : pairs)
        uf.unite(offset[static_cast<std::size_t>(c)] + x, offset[static_cast<std::size_t>(c)] + y);
    bool changed = true;
    while (changed) {
        changed = false;
        for (int f = 0; f < C.num_morphisms(); ++f) {
            const auto& m = C.morphisms[static_cast<std::size_t>(f)];
            const auto& a = D.action[static_cast<std::size_t>(f)];
            for (int x = 0; x < D.size_at(m.src); ++x)
                for (int y = x + 1; y < D.size_at(m.src); ++y) {
                    if (uf.find(offset[static_cast<std::size_t>(m.src)] + x) !=
                        uf.find(offset[static_cast<std::size_t>(m.src)] + y))
                        continue;
                    int fx = uf.find(offset[static_cast<std::size_t>(m.dst)] + a[static_cast<std::size_t>(x)]);
                    int fy = uf.find(offset[static_cast<std::size_t>(m.dst)] + a[static_cast<std::size_t>(y)]);
                    if (fx != fy) {
                        uf.unite(fx, fy);
                        changed = true;
                    }
                }
        }
    }
    SetDiagram Q;
    Q.shape = C;
    std::map<int, int> cls;  // root -> (object, local index) packed per object
    std::vector<std::vector<int>> local(static_cast<std::size_t>(C.num_objects()));
    for (int c = 0; c < C.num_objects(); ++c) {
        int count = 0;
        std::map<int, int> here;
        for (int x = 0; x < D.size_at(c); ++x) {
            int r = uf.find(offset[static_cast<std::size_t>(c)] + x);
            auto [it, inserted] = here.try_emplace(r, count);
            if (inserted) ++count;
            local[static_cast<std::size_t>(c)].push_back(it->second);
        }
        Q.sizes.push_back(count);
    }
    for (int f = 0; f < C.num_morphisms(); ++f) {
        const auto& m = C.morphisms[static_cast<std::size_t>(f)];
        std::vector<int> act(static_cast<std::size_t>(Q.size_at(m.src)), -1);
        for (int x = 0; x < D.size_at(m.src); ++x)
            act[static_cast<std::size_t>(local[static_cast<std::size_t>(m.src)][static_cast<std::size_t>(x)])] =
                local[static_cast<std::size_t>(m.dst)]
                     [static_cast<std::size_t>(D.action[static_cast<std::size_t>(f)][static_cast<std::size_t>(x)])];
        Q.action.push_back(std::move(act));
    }
    return Q;
}

/// The covariant hom functor at c, as a set-valued diagram.
inline SetDiagram representable_diagram(const FinCategory& C, int c) {
    SetDiagram D;
    D.shape = C;
    std::vector<std::vector<int>> homs;
    for (int b = 0; b < C.num_objects(); ++b) homs.push_back(C.hom(c, b));
    for (const auto& h : homs) D.sizes.push_back(static_cast<int>(h.size()));
    for (int f = 0; f < C.num_morphisms(); ++f) {
        const auto& m = C.morphisms[static_cast<std::size_t>(f)];
        std::vector<int> act;
        for (int g : homs[static_cast<std::size_t>(m.src)]) {
            int fg = C.compose(f, g);
            const auto& hs = homs[static_cast<std::size_t>(m.dst)];
            for (int i = 0; i < static_cast<int>(hs.size()); ++i)
                if (hs[static_cast<std::size_t>(i)] == fg) {
                    act.push_back(i);
                    break;
                }
        }
        D.action.push_back(std::move(act));
    }
    return D;
}

/// Pointwise disjoint union of two diagrams over the same shape.
inline SetDiagram coproduct_diagram(const SetDiagram& A, const SetDiagram& B) {
    SetDiagram D;
    D.shape = A.shape;
    for (int c = 0; c < A.shape.num_objects(); ++c) D.sizes.push_back(A.size_at(c) + B.size_at(c));
    for (int f = 0; f < A.shape.num_morphisms(); ++f) {
        const auto& m = A.shape.morphisms[static_cast<std::size_t>(f)];
        std::vector<int> act = A.action[static_cast<std::size_t>(f)];
        for (int v : B.action[static_cast<std::size_t>(f)]) act.push_back(A.size_at(m.dst) + v);
        D.action.push_back(std::move(act));
    }
    return D;
}

/// Pointwise product of two diagrams over the same shape; pairs are
/// numbered x * |B| + y.
inline SetDiagram product_diagram(const SetDiagram& A, const SetDiagram& B) {
    SetDiagram D;
    D.shape = A.shape;
    for (int c = 0; c < A.shape.num_objects(); ++c) D.sizes.push_back(A.size_at(c) * B.size_at(c));
    for (int f = 0; f < A.shape.num_morphisms(); ++f) {
        const auto& m = A.shape.morphisms[static_cast<std::size_t>(f)];
        std::vector<int> act;
        for (int x = 0; x < A.size_at(m.src); ++x)
            for (int y = 0; y < B.size_at(m.src); ++y)
                act.push_back(A.action[static_cast<std::size_t>(f)][static_cast<std::size_t>(x)] *
                                  B.size_at(m.dst) +
                              B.action[static_cast<std::size_t>(f)][static_cast<std::size_t>(y)]);
        D.action.push_back(std::move(act));
    }
    return D;
}

/// Random valid set-valued diagram: a coproduct of representables,
/// quotiented by random saturated identifications.
inline SetDiagram random_set_diagram(Rng& rng, const FinCategory& C, int max_size = 5) {
    SetDiagram D;
    D.shape = C;
    D.sizes.assign(static_cast<std::size_t>(C.num_objects()), 0);
    for (int f = 0; f < C.num_morphisms(); ++f) D.action.push_back({});
    int pieces = 1 + rng.below(3);
    for (int i = 0; i < pieces && C.num_objects() > 0; ++i)
        D = coproduct_diagram(D, representable_diagram(C, rng.below(C.num_objects())));
    std::vector<std::tuple<int, int, int>> pairs;
    int idents = rng.below(3);
    for (int i = 0; i < idents; ++i) {
        int c = C.num_objects() > 0 ? rng.below(C.num_objects()) : 0;
        if (C.num_objects() == 0 || D.size_at(c) < 2) continue;
        pairs.push_back({c, rng.below(D.size_at(c)), rng.below(D.size_at(c))});
    }
    D = quotient_diagram(D, pairs);
    // trim oversized values by extra identifications
    for (int c = 0; c < C.num_objects(); ++c)
        while (D.size_at(c) > max_size)
            D = quotient_diagram(D, {{c, rng.below(D.size_at(c)), rng.below(D.size_at(c))}});
    return D;
}

/// Restriction of a diagram on D along p: C -> D.
inline SetDiagram restrict_diagram(const SetDiagram& F, const Functor& p) {
    SetDiagram R;
    R.shape = p.dom;
    for (int c = 0; c < p.dom.num_objects(); ++c)
        R.sizes.push_back(F.size_at(p.obj_map[static_cast<std::size_t>(c)]));
    for (int f = 0; f < p.dom.num_morphisms(); ++f)
        R.action.push_back(F.action[static_cast<std::size_t>(p.mor_map[static_cast<std::size_t>(f)])]);
    return R;
}

/// Random simplicial set truncated at 2: vertices, edges, and
/// 2-simplices filled in over compatible edge triples.
inline SSet random_sset(Rng& rng, int max_nondeg = 8) {
    SSet S;
    S.truncation = 2;
    S.init_levels();
    int nv = 1 + rng.below(3);
    for (int v = 0; v < nv; ++v) S.add(0, "v" + std::to_string(v), {});
    int budget = max_nondeg - nv;
    int ne = budget > 0 ? rng.below(std::min(budget, 4) + 1) : 0;
    for (int e = 0; e < ne; ++e) {
        int a = rng.below(nv), b = rng.below(nv);
        S.add(1, "e" + std::to_string(e),
              {{identity_map(0), b}, {identity_map(0), a}});
    }
    budget -= ne;
    int nt = budget > 0 ? rng.below(std::min(budget, 3) + 1) : 0;
    for (int t = 0; t < nt && S.nondeg_count(1) > 0; ++t) {
        // pick e2: a -> b and e0: b -> c, then an e1: a -> c if one exists
        int e2 = rng.below(S.nondeg_count(1));
        SimplexRef r2{identity_map(1), e2};
        int a = vertex(S, r2, 0), b = vertex(S, r2, 1);
        std::vector<int> from_b;
        for (int e = 0; e < S.nondeg_count(1); ++e)
            if (vertex(S, {identity_map(1), e}, 0) == b) from_b.push_back(e);
        if (from_b.empty()) continue;
        int e0 = from_b[static_cast<std::size_t>(rng.below(static_cast<int>(from_b.size())))];
        int c = vertex(S, {identity_map(1), e0}, 1);
        std::vector<SimplexRef> hyp;
        for (int e = 0; e < S.nondeg_count(1); ++e) {
            SimplexRef r{identity_map(1), e};
            if (vertex(S, r, 0) == a && vertex(S, r, 1) == c) hyp.push_back(r);
        }
        if (a == c) hyp.push_back({MonotoneMap(1, 0, {0, 0}), a});
        if (hyp.empty()) continue;
        SimplexRef e1 = hyp[static_cast<std::size_t>(rng.below(static_cast<int>(hyp.size())))];
        S.add(2, "t" + std::to_string(t),
              {{identity_map(1), e0}, e1, {identity_map(1), e2}});
    }
    return S;
}

/// Random coherent simplicial diagram of sets: whenever a 2-simplex is
/// added, its long edge is fresh and carries the composite action.
inline SSetDiagram random_sset_diagram(Rng& rng, int max_nondeg = 8, int max_size = 4) {
    SSetDiagram F;
    SSet& S = F.base;
    S.truncation = 2;
    S.init_levels();
    int nv = 1 + rng.below(3);
    for (int v = 0; v < nv; ++v) {
        S.add(0, "v" + std::to_string(v), {});
        F.vertex_sizes.push_back(1 + rng.below(max_size));
    }
    auto random_map = [&](int from, int to) {
        std::vector<int> m;
        for (int i = 0; i < from; ++i) m.push_back(rng.below(to));
        return m;
    };
    int budget = max_nondeg - nv;
    int ne = budget > 0 ? rng.below(std::min(budget, 3) + 1) : 0;
    for (int e = 0; e < ne; ++e) {
        int a = rng.below(nv), b = rng.below(nv);
        S.add(1, "e" + std::to_string(e), {{identity_map(0), b}, {identity_map(0), a}});
        F.edge_actions.push_back(random_map(F.size_at_vertex(a), F.size_at_vertex(b)));
    }
    budget -= ne;
    int nt = budget >= 2 ? rng.below(std::min(budget / 2, 2) + 1) : 0;
    for (int t = 0; t < nt && S.nondeg_count(1) > 0; ++t) {
        int e2 = rng.below(S.nondeg_count(1));
        SimplexRef r2{identity_map(1), e2};
        int b = vertex(S, r2, 1);
        std::vector<int> from_b;
        for (int e = 0; e < S.nondeg_count(1); ++e)
            if (vertex(S, {identity_map(1), e}, 0) == b) from_b.push_back(e);
        if (from_b.empty()) continue;
        int e0 = from_b[static_cast<std::size_t>(rng.below(static_cast<int>(from_b.size())))];
        int a = vertex(S, r2, 0), c = vertex(S, {identity_map(1), e0}, 1);
        // fresh long edge carrying the composite keeps the diagram coherent
        int e1 = S.nondeg_count(1);
        S.add(1, "le" + std::to_string(t), {{identity_map(0), c}, {identity_map(0), a}});
        std::vector<int> comp(static_cast<std::size_t>(F.size_at_vertex(a)));
        for (int x = 0; x < F.size_at_vertex(a); ++x)
            comp[static_cast<std::size_t>(x)] = F.edge_actions[static_cast<std::size_t>(e0)][static_cast<std::size_t>(
                F.edge_actions[static_cast<std::size_t>(e2)][static_cast<std::size_t>(x)])];
        F.edge_actions.push_back(std::move(comp));
        S.add(2, "t" + std::to_string(t),
              {{identity_map(1), e0}, {identity_map(1), e1}, {identity_map(1), e2}});
    }
    return F;
}

}  // namespace cofin
