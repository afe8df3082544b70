#pragma once

#include <map>
#include <string>
#include <vector>

#include "cofin/fincat.hpp"
#include "cofin/sset.hpp"

namespace cofin {

/// Nerve of a finite category, truncated. Nondegenerate k-simplices are
/// the composable chains of k non-identity morphisms; chains[k][x]
/// records the chain behind generator x (chains[0][x] is object x).
struct NerveResult {
    SSet sset;
    std::vector<std::vector<std::vector<int>>> chains;
};

namespace detail {

inline bool is_identity_mor(const FinCategory& C, int f) {
    return C.identity[static_cast<std::size_t>(C.morphisms[static_cast<std::size_t>(f)].src)] == f;
}

/// EZ normal form of a chain that may contain identity components.
inline SimplexRef normalize_chain(const FinCategory& C,
                                  const std::map<std::vector<int>, int>& chain_index,
                                  const std::vector<int>& chain, int vertex_if_empty) {
    const int k = static_cast<int>(chain.size());
    std::vector<int> stripped;
    std::vector<int> s(static_cast<std::size_t>(k) + 1);
    s[0] = 0;
    for (int i = 0; i < k; ++i) {
        bool degen = is_identity_mor(C, chain[static_cast<std::size_t>(i)]);
        if (!degen) stripped.push_back(chain[static_cast<std::size_t>(i)]);
        s[static_cast<std::size_t>(i) + 1] = s[static_cast<std::size_t>(i)] + (degen ? 0 : 1);
    }
    int j = s[static_cast<std::size_t>(k)];
    if (stripped.empty())
        return {MonotoneMap(k, 0, std::vector<int>(static_cast<std::size_t>(k) + 1, 0)), vertex_if_empty};
    return {MonotoneMap(k, j, std::move(s)), chain_index.at(stripped)};
}

}  // namespace detail

inline NerveResult nerve(const FinCategory& C, int dim_bound) {
    NerveResult R;
    SSet& S = R.sset;
    S.truncation = dim_bound;
    S.init_levels();
    R.chains.assign(static_cast<std::size_t>(dim_bound) + 1, {});
    std::map<std::vector<int>, int> chain_index;  // nondegenerate chains, dim >= 1
    for (int a = 0; a < C.num_objects(); ++a) {
        R.chains[0].push_back({});
        S.add(0, C.objects[static_cast<std::size_t>(a)], {});
    }
    std::vector<std::vector<std::vector<int>>> per_dim(static_cast<std::size_t>(dim_bound) + 1);
    for (int f = 0; f < C.num_morphisms() && dim_bound >= 1; ++f)
        if (!detail::is_identity_mor(C, f)) per_dim[1].push_back({f});
    for (int k = 2; k <= dim_bound; ++k)
        for (const auto& chain : per_dim[static_cast<std::size_t>(k) - 1])
            for (int f = 0; f < C.num_morphisms(); ++f) {
                if (detail::is_identity_mor(C, f)) continue;
                if (C.morphisms[static_cast<std::size_t>(f)].src !=
                    C.morphisms[static_cast<std::size_t>(chain.back())].dst)
                    continue;
                auto next = chain;
                next.push_back(f);
                per_dim[static_cast<std::size_t>(k)].push_back(std::move(next));
            }
    for (int k = 1; k <= dim_bound; ++k)
        for (const auto& chain : per_dim[static_cast<std::size_t>(k)]) {
            chain_index[chain] = static_cast<int>(R.chains[static_cast<std::size_t>(k)].size());
            R.chains[static_cast<std::size_t>(k)].push_back(chain);
            std::string id;
            for (std::size_t i = 0; i < chain.size(); ++i) {
                if (i) id += "|";
                id += C.morphisms[static_cast<std::size_t>(chain[i])].id;
            }
            std::vector<SimplexRef> fl;
            for (int i = 0; i <= k; ++i) {
                std::vector<int> fchain;
                int vertex_obj = -1;
                if (i == 0) {
                    fchain.assign(chain.begin() + 1, chain.end());
                    vertex_obj = C.morphisms[static_cast<std::size_t>(chain[0])].dst;
                } else if (i == k) {
                    fchain.assign(chain.begin(), chain.end() - 1);
                    vertex_obj = C.morphisms[static_cast<std::size_t>(chain[0])].src;
                } else {
                    fchain.assign(chain.begin(), chain.end());
                    int c = C.compose(fchain[static_cast<std::size_t>(i)],
                                      fchain[static_cast<std::size_t>(i) - 1]);
                    fchain[static_cast<std::size_t>(i) - 1] = c;
                    fchain.erase(fchain.begin() + i);
                    vertex_obj = C.morphisms[static_cast<std::size_t>(chain[0])].src;
                }
                fl.push_back(detail::normalize_chain(C, chain_index, fchain, vertex_obj));
            }
            S.add(k, id, std::move(fl));
        }
    return R;
}

/// Morphism of C realized by a full edge of nerve(C): the chain entry
/// for nondegenerate edges, the vertex identity for degenerate ones.
inline int nerve_edge_morphism(const NerveResult& N, const FinCategory& C, const SimplexRef& e) {
    if (e.level() != 1) throw error("nerve_edge_morphism: not an edge");
    if (e.op.target_rank == 0) return C.identity[static_cast<std::size_t>(e.gen)];
    return N.chains[1][static_cast<std::size_t>(e.gen)][0];
}

/// Composite of the spine edges of a full simplex from vertex i to j.
inline int spine_composite(const NerveResult& N, const FinCategory& C, const SimplexRef& s,
                           int i, int j) {
    int m = C.identity[static_cast<std::size_t>(vertex(N.sset, s, i))];
    for (int l = i; l < j; ++l) {
        SimplexRef e = apply(N.sset, s, MonotoneMap(1, s.level(), {l, l + 1}));
        m = C.compose(nerve_edge_morphism(N, C, e), m);
    }
    return m;
}

/// Category of simplices of S up to dim_bound. Objects are all full
/// simplices (nondegenerate only in the semisimplicial variant);
/// morphisms sigma -> rho are the monotone alpha with rho.alpha = sigma.
struct SimplexCategory {
    FinCategory cat;
    std::vector<SimplexRef> object_simplices;
    std::vector<MonotoneMap> morphism_maps;

    int object_of(const SimplexRef& s) const {
        for (int i = 0; i < static_cast<int>(object_simplices.size()); ++i)
            if (object_simplices[static_cast<std::size_t>(i)] == s) return i;
        throw error("simplex category: unknown simplex");
    }
};

inline SimplexCategory category_of_simplices(const SSet& S, int dim_bound,
                                             bool semisimplicial = false) {
    if (dim_bound > S.truncation) throw error("category_of_simplices: dim_bound exceeds truncation");
    SimplexCategory R;
    FinCategory& K = R.cat;
    for (int k = 0; k <= dim_bound; ++k) {
        if (semisimplicial) {
            for (int x = 0; x < S.nondeg_count(k); ++x) {
                R.object_simplices.push_back({identity_map(k), x});
                K.objects.push_back(simplex_str(S, {identity_map(k), x}));
            }
        } else {
            for (const auto& s : all_simplices(S, k)) {
                R.object_simplices.push_back(s);
                K.objects.push_back(simplex_str(S, s));
            }
        }
    }
    std::map<std::tuple<int, int, MonotoneMap>, int> mi;
    std::vector<std::tuple<int, int, MonotoneMap>> mdata;
    for (int t = 0; t < K.num_objects(); ++t) {
        const auto& rho = R.object_simplices[static_cast<std::size_t>(t)];
        for (int m = 0; m <= dim_bound; ++m) {
            auto maps = semisimplicial ? enumerate_injective(m, rho.level())
                                       : enumerate_monotone(m, rho.level());
            for (const auto& a : maps) {
                SimplexRef sigma = apply(S, rho, a);
                if (semisimplicial && !sigma.is_nondegenerate()) continue;
                int s = R.object_of(sigma);
                mi[{s, t, a}] = K.num_morphisms();
                mdata.push_back({s, t, a});
                R.morphism_maps.push_back(a);
                K.morphisms.push_back({K.objects[static_cast<std::size_t>(s)] + ">" + a.str() + ">" +
                                           K.objects[static_cast<std::size_t>(t)],
                                       s, t});
            }
        }
    }
    for (int s = 0; s < K.num_objects(); ++s)
        K.identity.push_back(mi.at({s, s, identity_map(R.object_simplices[static_cast<std::size_t>(s)].level())}));
    const int nm = K.num_morphisms();
    K.table.assign(static_cast<std::size_t>(nm), std::vector<int>(static_cast<std::size_t>(nm), -1));
    for (int g = 0; g < nm; ++g)
        for (int f = 0; f < nm; ++f) {
            auto& [sg, tg, ag] = mdata[static_cast<std::size_t>(g)];
            auto& [sf, tf, af] = mdata[static_cast<std::size_t>(f)];
            if (tf != sg) continue;
            K.table[static_cast<std::size_t>(g)][static_cast<std::size_t>(f)] =
                mi.at({sf, tg, compose(ag, af)});
        }
    return R;
}

/// First-vertex comparison functor opposite(simplex category) -> C for
/// the nerve of C, sending sigma to sigma(0).
inline Functor first_vertex_functor(const NerveResult& N, const FinCategory& C,
                                    const SimplexCategory& K) {
    Functor F{opposite(K.cat), C, {}, {}};
    for (const auto& s : K.object_simplices) F.obj_map.push_back(vertex(N.sset, s, 0));
    for (int m = 0; m < K.cat.num_morphisms(); ++m) {
        const auto& mor = K.cat.morphisms[static_cast<std::size_t>(m)];  // alpha: sigma -> rho
        const auto& alpha = K.morphism_maps[static_cast<std::size_t>(m)];
        const auto& rho = K.object_simplices[static_cast<std::size_t>(mor.dst)];
        F.mor_map.push_back(spine_composite(N, C, rho, 0, alpha(0)));
    }
    return F;
}

/// Last-vertex functor simplex category -> C, sending sigma to sigma(m).
inline Functor last_vertex_functor(const NerveResult& N, const FinCategory& C,
                                   const SimplexCategory& K) {
    Functor F{K.cat, C, {}, {}};
    for (const auto& s : K.object_simplices) F.obj_map.push_back(vertex(N.sset, s, s.level()));
    for (int m = 0; m < K.cat.num_morphisms(); ++m) {
        const auto& mor = K.cat.morphisms[static_cast<std::size_t>(m)];
        const auto& alpha = K.morphism_maps[static_cast<std::size_t>(m)];
        const auto& rho = K.object_simplices[static_cast<std::size_t>(mor.dst)];
        F.mor_map.push_back(spine_composite(N, C, rho, alpha(alpha.source_rank), rho.level()));
    }
    return F;
}

}  // namespace cofin
