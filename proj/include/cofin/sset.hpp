#pragma once

#include <map>
#include <string>
#include <vector>

#include "cofin/monotone.hpp"

namespace cofin {

/// A simplex in Eilenberg-Zilber normal form: a surjective degeneracy
/// operator applied to a nondegenerate generator. With an identity
/// operator this is the generator itself.
struct SimplexRef {
    MonotoneMap op;  // surjection [k] ->> [j]
    int gen = 0;     // nondegenerate simplex index at dimension j

    int level() const { return op.source_rank; }
    bool is_nondegenerate() const { return op.is_identity(); }

    friend bool operator==(const SimplexRef& a, const SimplexRef& b) {
        return a.op == b.op && a.gen == b.gen;
    }
    friend bool operator<(const SimplexRef& a, const SimplexRef& b) {
        if (a.op.target_rank != b.op.target_rank) return a.op.target_rank < b.op.target_rank;
        if (a.gen != b.gen) return a.gen < b.gen;
        return a.op < b.op;
    }
};

/// Finite truncated simplicial set. Only nondegenerate simplices are
/// stored; each face of a nondegenerate k-simplex is kept as the EZ
/// normal form of that face.
struct SSet {
    int truncation = 0;
    std::vector<std::vector<std::string>> ids;                  // ids[k][x]
    std::vector<std::vector<std::vector<SimplexRef>>> faces;    // faces[k][x][i], k >= 1

    int nondeg_count(int k) const {
        if (k < 0 || k > truncation) return 0;
        return static_cast<int>(ids[static_cast<std::size_t>(k)].size());
    }
    const std::string& id_of(int k, int x) const {
        return ids[static_cast<std::size_t>(k)][static_cast<std::size_t>(x)];
    }
    int index_of(int k, const std::string& id) const {
        for (int x = 0; x < nondeg_count(k); ++x)
            if (id_of(k, x) == id) return x;
        throw error("unknown simplex id: " + id);
    }
    bool empty() const { return nondeg_count(0) == 0; }

    void init_levels() {
        ids.assign(static_cast<std::size_t>(truncation) + 1, {});
        faces.assign(static_cast<std::size_t>(truncation) + 1, {});
    }
    /// Appends a nondegenerate k-simplex; facelist must obey the
    /// simplicial identities (checked by validate()).
    int add(int k, std::string id, std::vector<SimplexRef> facelist) {
        if (k > truncation) throw error("add: dimension beyond truncation");
        if (k > 0 && static_cast<int>(facelist.size()) != k + 1)
            throw error("add: wrong number of faces");
        ids[static_cast<std::size_t>(k)].push_back(std::move(id));
        faces[static_cast<std::size_t>(k)].push_back(std::move(facelist));
        return nondeg_count(k) - 1;
    }
};

namespace detail {

/// x . e for an injective operator e, unfolded through the stored faces.
inline SimplexRef apply_injection(const SSet& S, int gen, const MonotoneMap& e) {
    const int g = e.target_rank;
    if (e.source_rank == g) return {identity_map(g), gen};
    int miss = g;
    while (miss >= 0) {
        bool hit = false;
        for (int v : e.values)
            if (v == miss) hit = true;
        if (!hit) break;
        --miss;
    }
    const auto& ref = S.faces[static_cast<std::size_t>(g)][static_cast<std::size_t>(gen)]
                             [static_cast<std::size_t>(miss)];
    std::vector<int> vals;
    for (int v : e.values) vals.push_back(v > miss ? v - 1 : v);
    MonotoneMap e2(e.source_rank, g - 1, std::move(vals));
    // x.e = (x.d^miss).e2, and x.d^miss = ref as a full (g-1)-simplex
    MonotoneMap beta = compose(ref.op, e2);
    auto [t, e3] = ez_factor(beta);
    SimplexRef inner = apply_injection(S, ref.gen, e3);
    return {compose(inner.op, t), inner.gen};
}

}  // namespace detail

/// The full simplex s.a, for a full simplex s at level s.op.source_rank
/// and a monotone operator a landing in that level.
inline SimplexRef apply(const SSet& S, const SimplexRef& s, const MonotoneMap& a) {
    if (a.target_rank != s.op.source_rank) throw error("apply: operator level mismatch");
    MonotoneMap beta = compose(s.op, a);
    auto [t, e] = ez_factor(beta);
    SimplexRef inner = detail::apply_injection(S, s.gen, e);
    return {compose(inner.op, t), inner.gen};
}

inline SimplexRef face(const SSet& S, const SimplexRef& s, int i) {
    return apply(S, s, coface(s.level(), i));
}
inline SimplexRef degeneracy(const SSet& S, const SimplexRef& s, int i) {
    return apply(S, s, codegeneracy(s.level(), i));
}

/// The i-th vertex, as a nondegenerate 0-simplex index.
inline int vertex(const SSet& S, const SimplexRef& s, int i) {
    if (i < 0 || i > s.level()) throw error("vertex: index out of range");
    return apply(S, s, vertex_map(s.level(), i)).gen;
}

/// All simplices of dimension k, degenerate ones included, in a fixed
/// deterministic order.
inline std::vector<SimplexRef> all_simplices(const SSet& S, int k) {
    if (k < 0 || k > S.truncation) throw error("all_simplices: beyond truncation");
    std::vector<SimplexRef> out;
    for (int j = 0; j <= k; ++j) {
        std::vector<MonotoneMap> surjections;
        for (auto& f : enumerate_monotone(k, j))
            if (f.is_surjective()) surjections.push_back(f);
        for (int x = 0; x < S.nondeg_count(j); ++x)
            for (auto& s : surjections) out.push_back({s, x});
    }
    return out;
}

inline std::string simplex_str(const SSet& S, const SimplexRef& s) {
    return s.op.str() + "*" + S.id_of(s.op.target_rank, s.gen);
}

/// Checks the EZ storage invariants and the simplicial identities
/// d_i d_j = d_{j-1} d_i on the expanded full structure.
inline std::vector<std::string> validate(const SSet& S) {
    std::vector<std::string> bad;
    if (static_cast<int>(S.ids.size()) != S.truncation + 1 ||
        static_cast<int>(S.faces.size()) != S.truncation + 1) {
        bad.push_back("level tables have wrong size");
        return bad;
    }
    for (int k = 1; k <= S.truncation; ++k)
        for (int x = 0; x < S.nondeg_count(k); ++x) {
            const auto& fl = S.faces[static_cast<std::size_t>(k)][static_cast<std::size_t>(x)];
            if (static_cast<int>(fl.size()) != k + 1) {
                bad.push_back("wrong face count at " + S.id_of(k, x));
                continue;
            }
            for (const auto& r : fl) {
                if (r.op.source_rank != k - 1 || !r.op.is_surjective())
                    bad.push_back("face operator of " + S.id_of(k, x) + " is not a level-" +
                                  std::to_string(k - 1) + " surjection");
                else if (r.gen < 0 || r.gen >= S.nondeg_count(r.op.target_rank))
                    bad.push_back("dangling face generator at " + S.id_of(k, x));
            }
        }
    if (!bad.empty()) return bad;
    for (int k = 2; k <= S.truncation; ++k)
        for (const auto& s : all_simplices(S, k))
            for (int j = 1; j <= k; ++j)
                for (int i = 0; i < j; ++i) {
                    SimplexRef a = face(S, face(S, s, j), i);
                    SimplexRef b = face(S, face(S, s, i), j - 1);
                    if (!(a == b))
                        bad.push_back("simplicial identity d" + std::to_string(i) + "d" +
                                      std::to_string(j) + " fails at " + simplex_str(S, s));
                }
    return bad;
}

inline bool is_valid(const SSet& S) { return validate(S).empty(); }

namespace detail {

inline std::string subset_id(const std::vector<int>& vs) {
    std::string id;
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (i) id += ".";
        id += std::to_string(vs[i]);
    }
    return id;
}

/// Standard simplex with an arbitrary subset of the top-dimensional
/// cells and their cofaces removed; shared by standard/boundary/horn.
inline SSet simplex_complex(int n, const std::vector<std::vector<int>>& dropped) {
    SSet S;
    S.truncation = n;
    S.init_levels();
    std::vector<std::vector<std::vector<int>>> subsets(static_cast<std::size_t>(n) + 1);
    std::map<std::vector<int>, int> index;
    // enumerate (k+1)-subsets of {0..n} in lex order
    for (int k = 0; k <= n; ++k) {
        std::vector<int> cur(static_cast<std::size_t>(k) + 1);
        for (int i = 0; i <= k; ++i) cur[static_cast<std::size_t>(i)] = i;
        while (true) {
            bool drop = false;
            for (const auto& d : dropped)
                if (d == cur) drop = true;
            if (!drop) {
                index[cur] = static_cast<int>(subsets[static_cast<std::size_t>(k)].size());
                subsets[static_cast<std::size_t>(k)].push_back(cur);
            }
            int i = k;
            while (i >= 0 && cur[static_cast<std::size_t>(i)] == n - (k - i)) --i;
            if (i < 0) break;
            ++cur[static_cast<std::size_t>(i)];
            for (int j = i + 1; j <= k; ++j)
                cur[static_cast<std::size_t>(j)] = cur[static_cast<std::size_t>(i)] + (j - i);
        }
    }
    for (int k = 0; k <= n; ++k)
        for (const auto& sub : subsets[static_cast<std::size_t>(k)]) {
            std::vector<SimplexRef> fl;
            for (int i = 0; i <= k && k > 0; ++i) {
                std::vector<int> f = sub;
                f.erase(f.begin() + i);
                fl.push_back({identity_map(k - 1), index.at(f)});
            }
            S.add(k, subset_id(sub), std::move(fl));
        }
    return S;
}

}  // namespace detail

inline SSet standard(int n) { return detail::simplex_complex(n, {}); }

inline SSet boundary(int n) {
    std::vector<int> top(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) top[static_cast<std::size_t>(i)] = i;
    return detail::simplex_complex(n, {top});
}

inline SSet horn(int n, int k) {
    if (k < 0 || k > n) throw error("horn: index out of range");
    std::vector<int> top, opp;
    for (int i = 0; i <= n; ++i) {
        top.push_back(i);
        if (i != k) opp.push_back(i);
    }
    return detail::simplex_complex(n, {top, opp});
}

inline SSet opposite(const SSet& S) {
    SSet O = S;
    for (int k = 1; k <= S.truncation; ++k)
        for (int x = 0; x < S.nondeg_count(k); ++x)
            for (int i = 0; i <= k; ++i) {
                const auto& r = S.faces[static_cast<std::size_t>(k)][static_cast<std::size_t>(x)]
                                       [static_cast<std::size_t>(k - i)];
                O.faces[static_cast<std::size_t>(k)][static_cast<std::size_t>(x)]
                       [static_cast<std::size_t>(i)] = {reverse_map(r.op), r.gen};
            }
    return O;
}

inline SSet skeleton(const SSet& S, int k) {
    if (k < 0) throw error("skeleton: negative dimension");
    SSet K = S;
    K.truncation = std::min(k, S.truncation);
    K.ids.resize(static_cast<std::size_t>(K.truncation) + 1);
    K.faces.resize(static_cast<std::size_t>(K.truncation) + 1);
    return K;
}

/// The same simplicial set viewed at a higher truncation; the new
/// levels carry degenerate simplices only.
inline SSet raise_truncation(const SSet& S, int k) {
    if (k < S.truncation) throw error("raise_truncation: lower than current");
    SSet K = S;
    K.truncation = k;
    K.ids.resize(static_cast<std::size_t>(k) + 1);
    K.faces.resize(static_cast<std::size_t>(k) + 1);
    return K;
}

inline SSet disjoint_union(const SSet& A, const SSet& B) {
    SSet U;
    U.truncation = std::max(A.truncation, B.truncation);
    U.init_levels();
    auto copy_in = [&](const SSet& S, const std::string& tag) {
        for (int k = 0; k <= S.truncation; ++k)
            for (int x = 0; x < S.nondeg_count(k); ++x) {
                std::vector<SimplexRef> fl;
                if (k > 0)
                    for (const auto& r : S.faces[static_cast<std::size_t>(k)][static_cast<std::size_t>(x)]) {
                        int off = (&S == &B) ? A.nondeg_count(r.op.target_rank) : 0;
                        fl.push_back({r.op, r.gen + off});
                    }
                U.add(k, tag + S.id_of(k, x), std::move(fl));
            }
    };
    copy_in(A, "l:");
    copy_in(B, "r:");
    return U;
}

/// Levelwise product truncated at dim_bound. Nondegenerate product
/// simplices are the jointly nondegenerate pairs of full simplices.
struct SSetProduct {
    SSet sset;
    std::vector<std::vector<std::pair<SimplexRef, SimplexRef>>> pairs;  // per dim, generator -> factor pair
};

inline SSetProduct product(const SSet& A, const SSet& B, int dim_bound) {
    if (dim_bound > A.truncation || dim_bound > B.truncation)
        throw error("product: dim_bound exceeds a factor's truncation");
    SSetProduct R;
    SSet& P = R.sset;
    P.truncation = dim_bound;
    P.init_levels();
    R.pairs.assign(static_cast<std::size_t>(dim_bound) + 1, {});
    std::map<std::pair<std::string, std::string>, int> index;  // keyed by factor strings per dim
    auto jointly_nondeg = [](const SimplexRef& a, const SimplexRef& b) {
        for (int i = 0; i < a.level(); ++i)
            if (a.op(i) == a.op(i + 1) && b.op(i) == b.op(i + 1)) return false;
        return true;
    };
    auto pair_normal_form = [&](const SimplexRef& a, const SimplexRef& b) -> SimplexRef {
        // common collapse = positions where both factors degenerate
        const int k = a.level();
        std::vector<int> c(static_cast<std::size_t>(k) + 1);
        c[0] = 0;
        for (int i = 0; i < k; ++i) {
            bool collapse = a.op(i) == a.op(i + 1) && b.op(i) == b.op(i + 1);
            c[static_cast<std::size_t>(i) + 1] = c[static_cast<std::size_t>(i)] + (collapse ? 0 : 1);
        }
        int q = c[static_cast<std::size_t>(k)];
        MonotoneMap common(k, q, c);
        // section picking the first preimage of each value
        std::vector<int> sec(static_cast<std::size_t>(q) + 1);
        for (int v = 0, i = 0; v <= q; ++v) {
            while (c[static_cast<std::size_t>(i)] != v) ++i;
            sec[static_cast<std::size_t>(v)] = i;
        }
        MonotoneMap section(q, k, sec);
        SimplexRef a2{compose(a.op, section), a.gen};
        SimplexRef b2{compose(b.op, section), b.gen};
        auto it = index.find({a2.op.str() + "#" + std::to_string(a2.gen) + "@" + std::to_string(q),
                              b2.op.str() + "#" + std::to_string(b2.gen)});
        if (it == index.end()) throw error("product: missing generator pair");
        return {common, it->second};
    };
    for (int k = 0; k <= dim_bound; ++k) {
        auto as = all_simplices(A, k);
        auto bs = all_simplices(B, k);
        for (const auto& a : as)
            for (const auto& b : bs) {
                if (!jointly_nondeg(a, b)) continue;
                index[{a.op.str() + "#" + std::to_string(a.gen) + "@" + std::to_string(k),
                       b.op.str() + "#" + std::to_string(b.gen)}] =
                    static_cast<int>(R.pairs[static_cast<std::size_t>(k)].size());
                R.pairs[static_cast<std::size_t>(k)].push_back({a, b});
                std::vector<SimplexRef> fl;
                for (int i = 0; i <= k && k > 0; ++i) {
                    SimplexRef fa = face(A, a, i);
                    SimplexRef fb = face(B, b, i);
                    fl.push_back(pair_normal_form(fa, fb));
                }
                P.add(k, "(" + simplex_str(A, a) + "x" + simplex_str(B, b) + ")", std::move(fl));
            }
    }
    return R;
}

}  // namespace cofin
