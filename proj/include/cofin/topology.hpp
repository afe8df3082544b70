#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <map>
#include <optional>
#include <queue>
#include <string>
#include <vector>

#include "cofin/sset.hpp"

namespace cofin {

using Mat = std::vector<std::vector<mpz_class>>;

/// Normalized chain complex of a truncated simplicial set: one basis
/// element per nondegenerate simplex, boundaries drop degenerate faces.
struct ChainComplex {
    std::vector<int> dims;        // per degree
    std::vector<Mat> boundaries;  // boundaries[k] maps degree k to k-1; boundaries[0] empty
};

inline ChainComplex chain_complex(const SSet& S) {
    ChainComplex C;
    for (int k = 0; k <= S.truncation; ++k) C.dims.push_back(S.nondeg_count(k));
    C.boundaries.resize(static_cast<std::size_t>(S.truncation) + 1);
    for (int k = 1; k <= S.truncation; ++k) {
        Mat M(static_cast<std::size_t>(C.dims[static_cast<std::size_t>(k) - 1]),
              std::vector<mpz_class>(static_cast<std::size_t>(C.dims[static_cast<std::size_t>(k)]), 0));
        for (int x = 0; x < C.dims[static_cast<std::size_t>(k)]; ++x)
            for (int i = 0; i <= k; ++i) {
                SimplexRef f = face(S, {identity_map(k), x}, i);
                if (!f.is_nondegenerate()) continue;
                M[static_cast<std::size_t>(f.gen)][static_cast<std::size_t>(x)] += (i % 2 == 0) ? 1 : -1;
            }
        C.boundaries[static_cast<std::size_t>(k)] = std::move(M);
    }
    return C;
}

struct SmithResult {
    std::vector<mpz_class> factors;  // nonzero invariant factors, each dividing the next
    std::optional<Mat> U, V;         // unimodular, U * M * V diagonal when requested

    int rank() const { return static_cast<int>(factors.size()); }
};

namespace detail {

inline void mat_identity(Mat& M, std::size_t n) {
    M.assign(n, std::vector<mpz_class>(n, 0));
    for (std::size_t i = 0; i < n; ++i) M[i][i] = 1;
}

}  // namespace detail

inline SmithResult smith_normal_form(Mat M, bool witnesses = false) {
    SmithResult R;
    const std::size_t rows = M.size();
    const std::size_t cols = rows ? M[0].size() : 0;
    if (witnesses) {
        R.U.emplace();
        R.V.emplace();
        detail::mat_identity(*R.U, rows);
        detail::mat_identity(*R.V, cols);
    }
    auto row_op = [&](std::size_t dst, std::size_t src, const mpz_class& q) {
        for (std::size_t j = 0; j < cols; ++j) M[dst][j] -= q * M[src][j];
        if (R.U)
            for (std::size_t j = 0; j < rows; ++j) (*R.U)[dst][j] -= q * (*R.U)[src][j];
    };
    auto col_op = [&](std::size_t dst, std::size_t src, const mpz_class& q) {
        for (std::size_t i = 0; i < rows; ++i) M[i][dst] -= q * M[i][src];
        if (R.V)
            for (std::size_t i = 0; i < cols; ++i) (*R.V)[i][dst] -= q * (*R.V)[i][src];
    };
    auto row_swap = [&](std::size_t a, std::size_t b) {
        std::swap(M[a], M[b]);
        if (R.U) std::swap((*R.U)[a], (*R.U)[b]);
    };
    auto col_swap = [&](std::size_t a, std::size_t b) {
        for (std::size_t i = 0; i < rows; ++i) std::swap(M[i][a], M[i][b]);
        if (R.V)
            for (std::size_t i = 0; i < cols; ++i) std::swap((*R.V)[i][a], (*R.V)[i][b]);
    };
    auto row_negate = [&](std::size_t a) {
        for (std::size_t j = 0; j < cols; ++j) M[a][j] = -M[a][j];
        if (R.U)
            for (std::size_t j = 0; j < rows; ++j) (*R.U)[a][j] = -(*R.U)[a][j];
    };

    std::size_t t = 0;
    while (t < rows && t < cols) {
        std::size_t pi = t, pj = t;
        bool found = false;
        for (std::size_t i = t; i < rows; ++i)
            for (std::size_t j = t; j < cols; ++j)
                if (M[i][j] != 0 && (!found || cmp(abs(M[i][j]), abs(M[pi][pj])) < 0)) {
                    pi = i;
                    pj = j;
                    found = true;
                }
        if (!found) break;
        row_swap(t, pi);
        col_swap(t, pj);
        bool clean = false;
        while (!clean) {
            clean = true;
            for (std::size_t i = t + 1; i < rows; ++i)
                if (M[i][t] != 0) {
                    mpz_class q = M[i][t] / M[t][t];
                    row_op(i, t, q);
                    if (M[i][t] != 0) {
                        row_swap(t, i);
                        clean = false;
                    }
                }
            for (std::size_t j = t + 1; j < cols; ++j)
                if (M[t][j] != 0) {
                    mpz_class q = M[t][j] / M[t][t];
                    col_op(j, t, q);
                    if (M[t][j] != 0) {
                        col_swap(t, j);
                        clean = false;
                    }
                }
        }
        // enforce divisibility of the rest of the block by the pivot
        bool redo = false;
        for (std::size_t i = t + 1; i < rows && !redo; ++i)
            for (std::size_t j = t + 1; j < cols && !redo; ++j)
                if (M[i][j] % M[t][t] != 0) {
                    col_op(t, j, -1);
                    redo = true;
                }
        if (redo) continue;
        if (M[t][t] < 0) row_negate(t);
        ++t;
    }
    for (std::size_t i = 0; i < t; ++i) R.factors.push_back(M[i][i]);
    return R;
}

struct HomologyGroup {
    int betti = 0;
    std::vector<mpz_class> torsion;  // invariant factors > 1

    bool trivial() const { return betti == 0 && torsion.empty(); }
};

/// Integer homology in every degree up to the truncation. The reduced
/// variant subtracts the extra Z in degree 0 when the set is nonempty.
inline std::vector<HomologyGroup> homology(const SSet& S, bool reduced = false) {
    ChainComplex C = chain_complex(S);
    std::vector<SmithResult> snf(static_cast<std::size_t>(S.truncation) + 2);
    for (int k = 1; k <= S.truncation; ++k)
        snf[static_cast<std::size_t>(k)] = smith_normal_form(C.boundaries[static_cast<std::size_t>(k)]);
    std::vector<HomologyGroup> H;
    for (int k = 0; k <= S.truncation; ++k) {
        HomologyGroup h;
        int rank_out = k >= 1 ? snf[static_cast<std::size_t>(k)].rank() : 0;
        int rank_in = k + 1 <= S.truncation ? snf[static_cast<std::size_t>(k) + 1].rank() : 0;
        h.betti = C.dims[static_cast<std::size_t>(k)] - rank_out - rank_in;
        if (k + 1 <= S.truncation)
            for (const auto& d : snf[static_cast<std::size_t>(k) + 1].factors)
                if (d > 1) h.torsion.push_back(d);
        if (reduced && k == 0 && C.dims[0] > 0) h.betti -= 1;
        H.push_back(std::move(h));
    }
    return H;
}

/// Components of the truncated simplicial set: vertices joined by
/// nondegenerate edges.
inline std::pair<int, std::vector<int>> pi0(const SSet& S) {
    const int nv = S.nondeg_count(0);
    std::vector<int> parent(static_cast<std::size_t>(nv));
    for (int i = 0; i < nv; ++i) parent[static_cast<std::size_t>(i)] = i;
    auto find = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)];
        return x;
    };
    if (S.truncation >= 1)
        for (int e = 0; e < S.nondeg_count(1); ++e) {
            SimplexRef edge{identity_map(1), e};
            int a = find(vertex(S, edge, 0)), b = find(vertex(S, edge, 1));
            if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
        }
    std::map<int, int> renumber;
    std::vector<int> comp;
    int count = 0;
    for (int v = 0; v < nv; ++v) {
        auto [it, inserted] = renumber.try_emplace(find(v), count);
        if (inserted) ++count;
        comp.push_back(it->second);
    }
    return {count, comp};
}

struct GroupPresentation {
    std::vector<std::string> generators;
    std::vector<std::vector<int>> relators;  // letters g+1 or -(g+1)
};

/// Edge-path presentation of the fundamental group of the basepoint's
/// component: breadth-first spanning tree, one generator per non-tree
/// nondegenerate edge, one relator per nondegenerate 2-simplex.
inline GroupPresentation pi1_presentation(const SSet& S, int basepoint) {
    if (basepoint < 0 || basepoint >= S.nondeg_count(0))
        throw error("pi1_presentation: basepoint is not a vertex");
    const int nv = S.nondeg_count(0);
    const int ne = S.truncation >= 1 ? S.nondeg_count(1) : 0;
    std::vector<std::vector<std::pair<int, int>>> adj(static_cast<std::size_t>(nv));
    for (int e = 0; e < ne; ++e) {
        SimplexRef edge{identity_map(1), e};
        int a = vertex(S, edge, 0), b = vertex(S, edge, 1);
        adj[static_cast<std::size_t>(a)].push_back({b, e});
        if (a != b) adj[static_cast<std::size_t>(b)].push_back({a, e});
    }
    std::vector<bool> in_component(static_cast<std::size_t>(nv), false);
    std::vector<bool> tree_edge(static_cast<std::size_t>(ne), false);
    std::queue<int> bfs;
    bfs.push(basepoint);
    in_component[static_cast<std::size_t>(basepoint)] = true;
    while (!bfs.empty()) {
        int v = bfs.front();
        bfs.pop();
        for (auto [w, e] : adj[static_cast<std::size_t>(v)])
            if (!in_component[static_cast<std::size_t>(w)]) {
                in_component[static_cast<std::size_t>(w)] = true;
                tree_edge[static_cast<std::size_t>(e)] = true;
                bfs.push(w);
            }
    }
    GroupPresentation P;
    std::vector<int> gen_of(static_cast<std::size_t>(ne), -1);
    for (int e = 0; e < ne; ++e) {
        SimplexRef edge{identity_map(1), e};
        if (!in_component[static_cast<std::size_t>(vertex(S, edge, 0))]) continue;
        if (tree_edge[static_cast<std::size_t>(e)]) continue;
        gen_of[static_cast<std::size_t>(e)] = static_cast<int>(P.generators.size());
        P.generators.push_back(S.id_of(1, e));
    }
    auto edge_letter = [&](const SimplexRef& e) -> std::vector<int> {
        if (e.op.target_rank == 0) return {};
        int g = gen_of[static_cast<std::size_t>(e.gen)];
        if (g == -1) return {};
        return {g + 1};
    };
    if (S.truncation >= 2)
        for (int x = 0; x < S.nondeg_count(2); ++x) {
            SimplexRef s{identity_map(2), x};
            if (!in_component[static_cast<std::size_t>(vertex(S, s, 0))]) continue;
            std::vector<int> rel = edge_letter(face(S, s, 2));
            for (int l : edge_letter(face(S, s, 0))) rel.push_back(l);
            auto w = edge_letter(face(S, s, 1));
            for (auto it = w.rbegin(); it != w.rend(); ++it) rel.push_back(-*it);
            if (!rel.empty()) P.relators.push_back(std::move(rel));
        }
    return P;
}

/// Exponent-sum abelianization: (free rank, torsion coefficients).
inline std::pair<int, std::vector<mpz_class>> abelianization(const GroupPresentation& P) {
    const std::size_t g = P.generators.size();
    Mat M(g, std::vector<mpz_class>(P.relators.size(), 0));
    for (std::size_t r = 0; r < P.relators.size(); ++r)
        for (int l : P.relators[r])
            M[static_cast<std::size_t>(std::abs(l)) - 1][r] += l > 0 ? 1 : -1;
    SmithResult snf = smith_normal_form(std::move(M));
    std::vector<mpz_class> torsion;
    for (const auto& d : snf.factors)
        if (d > 1) torsion.push_back(d);
    return {static_cast<int>(g) - snf.rank(), torsion};
}

struct TietzeResult {
    bool certified = false;
    std::vector<std::string> trace;
};

namespace detail {

inline void free_reduce(std::vector<int>& w) {
    std::vector<int> out;
    for (int l : w) {
        if (!out.empty() && out.back() == -l)
            out.pop_back();
        else
            out.push_back(l);
    }
    while (out.size() >= 2 && out.front() == -out.back()) {
        out.erase(out.begin());
        out.pop_back();
    }
    w = std::move(out);
}

}  // namespace detail

/// Bounded search for a trivialization: repeatedly pick a relator in
/// which some generator appears exactly once, solve for it, substitute
/// everywhere. Certified only when every generator is gone; never
/// certifies a nontrivial group.
inline TietzeResult tietze_trivialize(GroupPresentation P, long budget = 10000) {
    TietzeResult R;
    std::vector<bool> alive(P.generators.size(), true);
    int alive_count = static_cast<int>(P.generators.size());
    for (auto& r : P.relators) detail::free_reduce(r);
    while (alive_count > 0 && budget > 0) {
        int pick_rel = -1, pick_gen = 0;
        std::size_t pick_pos = 0;
        for (std::size_t r = 0; r < P.relators.size() && pick_rel < 0; ++r) {
            std::map<int, int> count;
            for (int l : P.relators[r]) ++count[std::abs(l)];
            for (std::size_t pos = 0; pos < P.relators[r].size(); ++pos) {
                int l = P.relators[r][pos];
                if (count[std::abs(l)] == 1) {
                    pick_rel = static_cast<int>(r);
                    pick_gen = std::abs(l);
                    pick_pos = pos;
                    break;
                }
            }
        }
        if (pick_rel < 0) break;
        // rotate so the chosen letter is first, then g = inverse of the rest
        std::vector<int> rel = P.relators[static_cast<std::size_t>(pick_rel)];
        std::rotate(rel.begin(), rel.begin() + static_cast<std::ptrdiff_t>(pick_pos), rel.end());
        // g w = 1 gives g = w^-1; g^-1 w = 1 gives g = w
        std::vector<int> word(rel.begin() + 1, rel.end());
        if (rel[0] > 0) {
            std::reverse(word.begin(), word.end());
            for (int& l : word) l = -l;
        }
        P.relators.erase(P.relators.begin() + pick_rel);
        for (auto& r : P.relators) {
            std::vector<int> out;
            for (int l : r) {
                if (std::abs(l) == pick_gen) {
                    if (l > 0)
                        out.insert(out.end(), word.begin(), word.end());
                    else
                        for (auto it = word.rbegin(); it != word.rend(); ++it) out.push_back(-*it);
                } else {
                    out.push_back(l);
                }
            }
            detail::free_reduce(out);
            r = std::move(out);
            --budget;
        }
        std::erase_if(P.relators, [](const std::vector<int>& r) { return r.empty(); });
        alive[static_cast<std::size_t>(pick_gen) - 1] = false;
        --alive_count;
        R.trace.push_back("eliminate " + P.generators[static_cast<std::size_t>(pick_gen) - 1]);
        --budget;
    }
    R.certified = alive_count == 0;
    if (!R.certified) R.trace.clear();
    return R;
}

enum class Verdict { Yes, No, Unknown };

inline std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Yes: return "Yes";
        case Verdict::No: return "No";
        default: return "Unknown";
    }
}

struct ConnectivityReport {
    int level = 0;
    Verdict verdict = Verdict::Unknown;
    std::string witness;                   // for No, or the Unknown reason
    std::vector<std::string> certificate;  // for Yes at level >= 2
};

/// Tri-valued n-connectivity. Levels at or below -1 hold vacuously;
/// level 0 is nonemptiness, level 1 connectedness; higher levels use
/// homology for refutation and a Tietze certificate plus Hurewicz for
/// confirmation.
inline ConnectivityReport connectivity(const SSet& S, int n, long tietze_budget = 10000) {
    ConnectivityReport rep;
    rep.level = n;
    if (n <= -1) {
        rep.verdict = Verdict::Yes;
        return rep;
    }
    if (S.nondeg_count(0) == 0) {
        rep.verdict = Verdict::No;
        rep.witness = "empty";
        return rep;
    }
    if (n == 0) {
        rep.verdict = Verdict::Yes;
        return rep;
    }
    auto [components, comp] = pi0(S);
    if (components > 1) {
        int other = 0;
        while (comp[static_cast<std::size_t>(other)] == comp[0]) ++other;
        rep.verdict = Verdict::No;
        rep.witness = "vertices " + S.id_of(0, 0) + " and " + S.id_of(0, other) +
                      " lie in different components";
        return rep;
    }
    if (n == 1) {
        rep.verdict = Verdict::Yes;
        return rep;
    }
    auto H = homology(S, true);
    // homology at the truncation degree is not refutation evidence: the
    // missing next level could bound those cycles
    for (int k = 1; k < n && k < S.truncation; ++k)
        if (!H[static_cast<std::size_t>(k)].trivial()) {
            rep.verdict = Verdict::No;
            rep.witness = "nonzero homology in degree " + std::to_string(k);
            return rep;
        }
    if (S.truncation < 2) {
        // relators live on 2-simplices, so the loop group is unknown here
        rep.verdict = Verdict::Unknown;
        rep.witness = "insufficient truncation";
        return rep;
    }
    GroupPresentation P = pi1_presentation(S, 0);
    auto [ab_rank, ab_torsion] = abelianization(P);
    if (ab_rank != 0 || !ab_torsion.empty()) {
        rep.verdict = Verdict::No;
        rep.witness = "nontrivial abelianized fundamental group";
        return rep;
    }
    if (S.truncation < n) {
        rep.verdict = Verdict::Unknown;
        rep.witness = "insufficient truncation";
        return rep;
    }
    TietzeResult T = tietze_trivialize(P, tietze_budget);
    if (!T.certified) {
        rep.verdict = Verdict::Unknown;
        rep.witness = "fundamental group not certified trivial";
        return rep;
    }
    rep.verdict = Verdict::Yes;
    rep.certificate = T.trace;
    for (int k = 2; k < n; ++k)
        rep.certificate.push_back("homology vanishes in degree " + std::to_string(k));
    return rep;
}

/// Weak contractibility: certified trivial fundamental group plus
/// vanishing reduced homology in every available degree.
inline ConnectivityReport weak_contractible(const SSet& S, long tietze_budget = 10000) {
    ConnectivityReport rep;
    rep.level = S.truncation + 1;
    if (S.nondeg_count(0) == 0) {
        rep.verdict = Verdict::No;
        rep.witness = "empty";
        return rep;
    }
    auto H = homology(S, true);
    for (int k = 0; k < std::max(S.truncation, 1); ++k)
        if (!H[static_cast<std::size_t>(k)].trivial()) {
            rep.verdict = Verdict::No;
            rep.witness = "nonzero reduced homology in degree " + std::to_string(k);
            return rep;
        }
    GroupPresentation P = pi1_presentation(S, 0);
    if (S.truncation < 2 && !P.generators.empty()) {
        rep.verdict = Verdict::Unknown;
        rep.witness = "insufficient truncation";
        return rep;
    }
    auto [ab_rank, ab_torsion] = abelianization(P);
    if (ab_rank != 0 || !ab_torsion.empty()) {
        rep.verdict = Verdict::No;
        rep.witness = "nontrivial abelianized fundamental group";
        return rep;
    }
    TietzeResult T = tietze_trivialize(P, tietze_budget);
    if (!T.certified) {
        rep.verdict = Verdict::Unknown;
        rep.witness = "fundamental group not certified trivial";
        return rep;
    }
    rep.verdict = Verdict::Yes;
    rep.certificate = T.trace;
    return rep;
}

}  // namespace cofin
