#pragma once

#include <map>
#include <string>
#include <vector>

#include "cofin/delta.hpp"
#include "cofin/fincat.hpp"
#include "cofin/sset.hpp"

namespace cofin {
namespace fixtures {

/// One vertex, one nondegenerate loop, nothing in dimension 2.
inline SSet circle() {
    SSet S;
    S.truncation = 2;
    S.init_levels();
    S.add(0, "pt", {});
    S.add(1, "loop", {{identity_map(0), 0}, {identity_map(0), 0}});
    return S;
}

/// The minimal 6-vertex triangulation of the projective plane: all 15
/// edges of K6 and 10 triangles, each edge lying in exactly two.
inline SSet projective_plane() {
    SSet S;
    S.truncation = 2;
    S.init_levels();
    for (int v = 1; v <= 6; ++v) S.add(0, std::to_string(v), {});
    std::map<std::pair<int, int>, int> edge;
    for (int i = 1; i <= 6; ++i)
        for (int j = i + 1; j <= 6; ++j) {
            edge[{i, j}] = S.nondeg_count(1);
            S.add(1, std::to_string(i) + std::to_string(j),
                  {{identity_map(0), j - 1}, {identity_map(0), i - 1}});
        }
    const int tris[10][3] = {{1, 2, 5}, {1, 2, 6}, {1, 3, 4}, {1, 3, 6}, {1, 4, 5},
                             {2, 3, 4}, {2, 3, 5}, {2, 4, 6}, {3, 5, 6}, {4, 5, 6}};
    for (const auto& t : tris)
        S.add(2, std::to_string(t[0]) + std::to_string(t[1]) + std::to_string(t[2]),
              {{identity_map(1), edge.at({t[1], t[2]})},
               {identity_map(1), edge.at({t[0], t[2]})},
               {identity_map(1), edge.at({t[0], t[1]})}});
    return S;
}

/// A finite category with all reflexive coequalizers but no
/// coequalizer of the parallel pair u, v out of its first object.
/// Generators f, g: a -> b with common section s, h: b -> c
/// coequalizing them, u, v: a -> d, and q: d -> e with qu != qv.
inline FinCategory no_coequalizer() {
    struct Gen {
        std::string name;
        int src, dst;
    };
    // objects a b c d e = 0..4
    const std::vector<Gen> gens = {{"f", 0, 1}, {"g", 0, 1}, {"s", 1, 0}, {"h", 1, 2},
                                   {"u", 0, 3}, {"v", 0, 3}, {"q", 3, 4}};
    auto reduce = [](std::vector<std::string> w) {
        // fs = gs = identity, hg = hf; words read right to left
        bool changed = true;
        while (changed) {
            changed = false;
            for (std::size_t i = 0; i + 1 < w.size(); ++i) {
                if ((w[i] == "f" || w[i] == "g") && w[i + 1] == "s") {
                    w.erase(w.begin() + static_cast<std::ptrdiff_t>(i), w.begin() + static_cast<std::ptrdiff_t>(i) + 2);
                    changed = true;
                    break;
                }
                if (w[i] == "h" && w[i + 1] == "g") {
                    w[i + 1] = "f";
                    changed = true;
                    break;
                }
            }
        }
        return w;
    };
    struct NF {
        int src, dst;
        std::vector<std::string> word;
        bool operator<(const NF& o) const {
            return std::tie(src, dst, word) < std::tie(o.src, o.dst, o.word);
        }
    };
    std::vector<NF> mors;
    std::map<NF, int> index;
    auto insert = [&](NF m) {
        auto [it, inserted] = index.try_emplace(m, static_cast<int>(mors.size()));
        if (inserted) mors.push_back(std::move(m));
        return it->second;
    };
    for (int c = 0; c < 5; ++c) insert({c, c, {}});
    for (const auto& g : gens) insert({g.src, g.dst, {g.name}});
    bool grew = true;
    while (grew) {
        grew = false;
        std::size_t count = mors.size();
        for (std::size_t i = 0; i < count; ++i)
            for (std::size_t j = 0; j < count; ++j) {
                if (mors[j].dst != mors[i].src) continue;
                std::vector<std::string> w = mors[i].word;
                w.insert(w.end(), mors[j].word.begin(), mors[j].word.end());
                NF m{mors[j].src, mors[i].dst, reduce(std::move(w))};
                if (!index.count(m)) {
                    insert(std::move(m));
                    grew = true;
                }
            }
    }
    FinCategory C;
    C.objects = {"a", "b", "c", "d", "e"};
    for (const auto& m : mors) {
        std::string id;
        for (const auto& l : m.word) id += l;
        if (id.empty()) id = "1_" + C.objects[static_cast<std::size_t>(m.src)];
        C.morphisms.push_back({id, m.src, m.dst});
    }
    for (int c = 0; c < 5; ++c) C.identity.push_back(index.at({c, c, {}}));
    const int nm = C.num_morphisms();
    C.table.assign(static_cast<std::size_t>(nm), std::vector<int>(static_cast<std::size_t>(nm), -1));
    for (int g = 0; g < nm; ++g)
        for (int f = 0; f < nm; ++f) {
            if (mors[static_cast<std::size_t>(f)].dst != mors[static_cast<std::size_t>(g)].src) continue;
            std::vector<std::string> w = mors[static_cast<std::size_t>(g)].word;
            w.insert(w.end(), mors[static_cast<std::size_t>(f)].word.begin(),
                     mors[static_cast<std::size_t>(f)].word.end());
            C.table[static_cast<std::size_t>(g)][static_cast<std::size_t>(f)] =
                index.at({mors[static_cast<std::size_t>(f)].src, mors[static_cast<std::size_t>(g)].dst,
                          reduce(std::move(w))});
        }
    return C;
}

/// The parallel pair u, v of the no-coequalizer category as a functor
/// from the walking parallel pair. reflexive = true gives f, g instead.
inline Functor no_coequalizer_pair(const FinCategory& C, bool reflexive) {
    FinCategory J;
    J.objects = {"x", "y"};
    J.morphisms = {{"1_x", 0, 0}, {"1_y", 1, 1}, {"p", 0, 1}, {"q", 0, 1}};
    J.identity = {0, 1};
    J.table = {{0, -1, -1, -1}, {-1, 1, 2, 3}, {2, -1, -1, -1}, {3, -1, -1, -1}};
    Functor D{J, C, {}, {}};
    const char* m1 = reflexive ? "f" : "u";
    const char* m2 = reflexive ? "g" : "v";
    int tgt = -1, p1 = -1, p2 = -1;
    for (int m = 0; m < C.num_morphisms(); ++m) {
        if (C.morphisms[static_cast<std::size_t>(m)].id == m1) {
            p1 = m;
            tgt = C.morphisms[static_cast<std::size_t>(m)].dst;
        }
        if (C.morphisms[static_cast<std::size_t>(m)].id == m2) p2 = m;
    }
    D.obj_map = {0, tgt};
    D.mor_map = {C.identity[0], C.identity[static_cast<std::size_t>(tgt)], p1, p2};
    return D;
}

}  // namespace fixtures
}  // namespace cofin
