#pragma once

#include <map>
#include <vector>

#include "cofin/fincat.hpp"
#include "cofin/monotone.hpp"

namespace cofin {

/// A truncated simplex category together with the monotone map behind
/// each morphism index. Object k is the ordinal [k].
struct DeltaCat {
    FinCategory cat;
    std::vector<MonotoneMap> maps;            // morphism index -> map
    std::map<MonotoneMap, int> map_index;

    int morphism_of(const MonotoneMap& f) const {
        auto it = map_index.find(f);
        if (it == map_index.end()) throw error("delta: map not in category");
        return it->second;
    }
};

namespace detail {

inline DeltaCat build_delta(int N, bool injective_only) {
    if (N < 0) throw error("delta: negative truncation");
    DeltaCat D;
    FinCategory& C = D.cat;
    for (int k = 0; k <= N; ++k) C.objects.push_back("[" + std::to_string(k) + "]");
    for (int m = 0; m <= N; ++m)
        for (int n = 0; n <= N; ++n) {
            auto fs = injective_only ? enumerate_injective(m, n) : enumerate_monotone(m, n);
            for (auto& f : fs) {
                D.map_index[f] = C.num_morphisms();
                D.maps.push_back(f);
                C.morphisms.push_back({f.str(), m, n});
            }
        }
    for (int k = 0; k <= N; ++k) C.identity.push_back(D.morphism_of(identity_map(k)));
    const int nm = C.num_morphisms();
    C.table.assign(static_cast<std::size_t>(nm), std::vector<int>(static_cast<std::size_t>(nm), -1));
    for (int g = 0; g < nm; ++g)
        for (int f = 0; f < nm; ++f) {
            if (C.morphisms[static_cast<std::size_t>(f)].dst != C.morphisms[static_cast<std::size_t>(g)].src) continue;
            C.table[static_cast<std::size_t>(g)][static_cast<std::size_t>(f)] =
                D.morphism_of(compose(D.maps[static_cast<std::size_t>(g)], D.maps[static_cast<std::size_t>(f)]));
        }
    return D;
}

}  // namespace detail

/// The full subcategory of the simplex category on [0], ..., [N].
inline DeltaCat delta_leq(int N) { return detail::build_delta(N, false); }

/// The semisimplicial variant: injective monotone maps only.
inline DeltaCat delta_s_leq(int N) { return detail::build_delta(N, true); }

/// Inclusion functor between two simplex-style categories; every map of
/// the smaller one must exist in the bigger one.
inline Functor delta_inclusion(const DeltaCat& small, const DeltaCat& big) {
    if (small.cat.num_objects() > big.cat.num_objects())
        throw error("delta_inclusion: target truncation too low");
    Functor F{small.cat, big.cat, {}, {}};
    for (int k = 0; k < small.cat.num_objects(); ++k) F.obj_map.push_back(k);
    for (auto& f : small.maps) F.mor_map.push_back(big.morphism_of(f));
    return F;
}

}  // namespace cofin
