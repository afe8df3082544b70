#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cofin/diagram.hpp"
#include "cofin/fincat.hpp"
#include "cofin/nerve.hpp"
#include "cofin/rand.hpp"
#include "cofin/reshape.hpp"
#include "cofin/topology.hpp"

namespace cofin {

struct CofinalityReport {
    std::string direction;  // "left" or "right"
    int level = 0;
    Verdict overall = Verdict::Unknown;
    std::vector<ConnectivityReport> per_object;  // indexed by codomain object
    int witness_object = -1;                     // first No, if any
    std::optional<FinCategory> witness_comma;
};

namespace detail {

inline Verdict aggregate(const std::vector<ConnectivityReport>& reports) {
    bool unknown = false;
    for (const auto& r : reports) {
        if (r.verdict == Verdict::No) return Verdict::No;
        if (r.verdict == Verdict::Unknown) unknown = true;
    }
    return unknown ? Verdict::Unknown : Verdict::Yes;
}

}  // namespace detail

/// Right n-cofinality of p: every coslice of p is n-connective.
/// Comma nerves are truncated at max(n, 2) so relators are available.
inline CofinalityReport right_n_cofinal(const Functor& p, int n, long tietze_budget = 10000) {
    if (auto bad = validate(p); !bad.empty()) throw error("right_n_cofinal: " + bad.front());
    CofinalityReport rep;
    rep.direction = "right";
    rep.level = n;
    for (int d = 0; d < p.cod.num_objects(); ++d) {
        CommaResult K = coslice_along(p, d);
        NerveResult N = nerve(K.cat, std::max(n, 2));
        ConnectivityReport r = connectivity(N.sset, n, tietze_budget);
        if (r.verdict == Verdict::No && rep.witness_object == -1) {
            rep.witness_object = d;
            rep.witness_comma = K.cat;
        }
        rep.per_object.push_back(std::move(r));
    }
    rep.overall = detail::aggregate(rep.per_object);
    return rep;
}

/// Left n-cofinality: every slice of p is n-connective.
inline CofinalityReport left_n_cofinal(const Functor& p, int n, long tietze_budget = 10000) {
    if (auto bad = validate(p); !bad.empty()) throw error("left_n_cofinal: " + bad.front());
    CofinalityReport rep;
    rep.direction = "left";
    rep.level = n;
    for (int d = 0; d < p.cod.num_objects(); ++d) {
        CommaResult K = slice_along(p, d);
        NerveResult N = nerve(K.cat, std::max(n, 2));
        ConnectivityReport r = connectivity(N.sset, n, tietze_budget);
        if (r.verdict == Verdict::No && rep.witness_object == -1) {
            rep.witness_object = d;
            rep.witness_comma = K.cat;
        }
        rep.per_object.push_back(std::move(r));
    }
    rep.overall = detail::aggregate(rep.per_object);
    return rep;
}

/// Classical cofinality proxy: every comma nerve weakly contractible,
/// inspected up to the given dimension.
inline CofinalityReport right_weak_cofinal(const Functor& p, int dim = 3, long tietze_budget = 10000) {
    CofinalityReport rep;
    rep.direction = "right";
    rep.level = dim + 1;
    for (int d = 0; d < p.cod.num_objects(); ++d) {
        CommaResult K = coslice_along(p, d);
        ConnectivityReport r = weak_contractible(nerve(K.cat, dim).sset, tietze_budget);
        if (r.verdict == Verdict::No && rep.witness_object == -1) {
            rep.witness_object = d;
            rep.witness_comma = K.cat;
        }
        rep.per_object.push_back(std::move(r));
    }
    rep.overall = detail::aggregate(rep.per_object);
    return rep;
}

inline CofinalityReport left_weak_cofinal(const Functor& p, int dim = 3, long tietze_budget = 10000) {
    CofinalityReport rep;
    rep.direction = "left";
    rep.level = dim + 1;
    for (int d = 0; d < p.cod.num_objects(); ++d) {
        CommaResult K = slice_along(p, d);
        ConnectivityReport r = weak_contractible(nerve(K.cat, dim).sset, tietze_budget);
        if (r.verdict == Verdict::No && rep.witness_object == -1) {
            rep.witness_object = d;
            rep.witness_comma = K.cat;
        }
        rep.per_object.push_back(std::move(r));
    }
    rep.overall = detail::aggregate(rep.per_object);
    return rep;
}

struct ProbeReport {
    bool pass = true;
    std::string reason;
    std::optional<SetDiagram> witness;
    int witness_object = -1;
};

namespace detail {

/// Is the canonical comparison colim(F restricted along p) -> colim(F)
/// a bijection? Classes are matched through the shared elements.
inline bool colim_comparison_bijective(const SetDiagram& F, const Functor& p) {
    SetDiagram R = restrict_diagram(F, p);
    Quotient qr = colim_finset(R), qf = colim_finset(F);
    std::map<int, int> fwd, bwd;
    for (int c = 0; c < p.dom.num_objects(); ++c)
        for (int x = 0; x < R.size_at(c); ++x) {
            int a = qr.legs[static_cast<std::size_t>(c)][static_cast<std::size_t>(x)];
            int b = qf.legs[static_cast<std::size_t>(p.obj_map[static_cast<std::size_t>(c)])]
                           [static_cast<std::size_t>(x)];
            auto [ia, insa] = fwd.try_emplace(a, b);
            if (!insa && ia->second != b) return false;  // cannot happen; comparison is natural
            auto [ib, insb] = bwd.try_emplace(b, a);
            if (!insb && ib->second != a) return false;  // not injective
        }
    return static_cast<int>(fwd.size()) == qr.classes && static_cast<int>(bwd.size()) == qf.classes;
}

/// Is the canonical restriction lim(F) -> lim(F along p) a bijection?
inline bool lim_comparison_bijective(const SetDiagram& F, const Functor& p) {
    SetDiagram R = restrict_diagram(F, p);
    LimitSet lf = lim_finset(F), lr = lim_finset(R);
    if (lf.elements.size() != lr.elements.size()) return false;
    std::vector<bool> hit(lr.elements.size(), false);
    for (const auto& fam : lf.elements) {
        std::vector<int> res;
        for (int c = 0; c < p.dom.num_objects(); ++c)
            res.push_back(fam[static_cast<std::size_t>(p.obj_map[static_cast<std::size_t>(c)])]);
        bool found = false;
        for (std::size_t i = 0; i < lr.elements.size(); ++i)
            if (!hit[i] && lr.elements[i] == res) {
                hit[i] = true;
                found = true;
                break;
            }
        if (!found) return false;
    }
    return true;
}

}  // namespace detail

/// Colimit-preservation probe for p: random diagrams on the codomain
/// compared along p, plus the exhaustive representable probe at every
/// codomain object.
inline ProbeReport preservation_probe(const Functor& p, int trials, std::uint64_t seed) {
    ProbeReport rep;
    for (int d = 0; d < p.cod.num_objects(); ++d) {
        RepresentableReport r = corepresentable_colim_check(p, d);
        if (!r.ok || r.colim_classes != r.slice_components) {
            rep.pass = false;
            rep.reason = "internal mismatch at object " + p.cod.objects[static_cast<std::size_t>(d)];
            rep.witness_object = d;
            return rep;
        }
        // a representable has a one-point colimit; restriction must keep it
        if (r.colim_classes != 1) {
            rep.pass = false;
            rep.reason = "restricted representable at object " +
                         p.cod.objects[static_cast<std::size_t>(d)] + " has " +
                         std::to_string(r.colim_classes) + " colimit classes";
            rep.witness_object = d;
            return rep;
        }
    }
    Rng rng(seed);
    for (int t = 0; t < trials; ++t) {
        SetDiagram F = random_set_diagram(rng, p.cod);
        if (!detail::colim_comparison_bijective(F, p)) {
            rep.pass = false;
            rep.reason = "colimit comparison fails on a random diagram";
            rep.witness = F;
            return rep;
        }
    }
    return rep;
}

/// Limit-preservation probe, dual to preservation_probe.
inline ProbeReport limit_probe(const Functor& p, int trials, std::uint64_t seed) {
    ProbeReport rep;
    for (int d = 0; d < p.cod.num_objects(); ++d) {
        RepresentableReport r = representable_colim_check(p, d);
        if (!r.ok || r.colim_classes != r.slice_components) {
            rep.pass = false;
            rep.reason = "internal mismatch at object " + p.cod.objects[static_cast<std::size_t>(d)];
            rep.witness_object = d;
            return rep;
        }
        if (r.colim_classes != 1) {
            rep.pass = false;
            rep.reason = "restricted representable at object " +
                         p.cod.objects[static_cast<std::size_t>(d)] + " has " +
                         std::to_string(r.colim_classes) + " colimit classes";
            rep.witness_object = d;
            return rep;
        }
    }
    Rng rng(seed);
    for (int t = 0; t < trials; ++t) {
        SetDiagram F = random_set_diagram(rng, p.cod);
        if (!detail::lim_comparison_bijective(F, p)) {
            rep.pass = false;
            rep.reason = "limit comparison fails on a random diagram";
            rep.witness = F;
            return rep;
        }
    }
    return rep;
}

struct SiftednessReport {
    int level = 0;
    bool nonempty = false;
    Verdict overall = Verdict::Unknown;
    std::vector<std::pair<std::pair<int, int>, ConnectivityReport>> per_pair;
    std::optional<std::pair<int, int>> witness_pair;
    std::optional<FinCategory> witness_comma;
};

/// n-siftedness: nonempty, and for every pair of objects the comma of
/// the diagonal under that pair is n-connective.
inline SiftednessReport n_sifted(const FinCategory& C, int n, long tietze_budget = 10000) {
    SiftednessReport rep;
    rep.level = n;
    rep.nonempty = C.num_objects() > 0;
    if (!rep.nonempty) {
        rep.overall = Verdict::No;
        return rep;
    }
    ProductResult P = product(C, C);
    Functor diag = diagonal_functor(C, P);
    std::vector<ConnectivityReport> flat;
    for (int a = 0; a < C.num_objects(); ++a)
        for (int b = 0; b < C.num_objects(); ++b) {
            CommaResult K = coslice_along(diag, P.object_of(a, b));
            NerveResult N = nerve(K.cat, std::max(n, 2));
            ConnectivityReport r = connectivity(N.sset, n, tietze_budget);
            if (r.verdict == Verdict::No && !rep.witness_pair) {
                rep.witness_pair = {a, b};
                rep.witness_comma = K.cat;
            }
            flat.push_back(r);
            rep.per_pair.push_back({{a, b}, std::move(r)});
        }
    rep.overall = detail::aggregate(flat);
    return rep;
}

inline SiftednessReport n_cosifted(const FinCategory& C, int n, long tietze_budget = 10000) {
    SiftednessReport rep = n_sifted(opposite(C), n, tietze_budget);
    return rep;
}

struct ProductProbeReport {
    bool pass = true;
    std::string reason;
    std::optional<std::pair<SetDiagram, SetDiagram>> witness;
};

namespace detail {

inline bool product_comparison_bijective(const SetDiagram& X, const SetDiagram& Y) {
    Quotient qx = colim_finset(X), qy = colim_finset(Y);
    Quotient qp = colim_finset(product_diagram(X, Y));
    std::map<int, std::pair<int, int>> fwd;
    std::map<std::pair<int, int>, int> bwd;
    for (int c = 0; c < X.shape.num_objects(); ++c)
        for (int x = 0; x < X.size_at(c); ++x)
            for (int y = 0; y < Y.size_at(c); ++y) {
                int a = qp.legs[static_cast<std::size_t>(c)][static_cast<std::size_t>(x * Y.size_at(c) + y)];
                std::pair<int, int> b{qx.legs[static_cast<std::size_t>(c)][static_cast<std::size_t>(x)],
                                      qy.legs[static_cast<std::size_t>(c)][static_cast<std::size_t>(y)]};
                auto [ia, insa] = fwd.try_emplace(a, b);
                if (!insa && ia->second != b) return false;
                auto [ib, insb] = bwd.try_emplace(b, a);
                if (!insb && ib->second != a) return false;
            }
    return static_cast<int>(fwd.size()) == qp.classes &&
           static_cast<int>(bwd.size()) == qx.classes * qy.classes;
}

}  // namespace detail

/// Does colim over C commute with binary products of set-valued
/// diagrams? Sweeps all pairs of representables first (these detect the
/// failures the diagonal commas predict), then random pairs; also
/// checks the empty product against connectedness of the shape.
inline ProductProbeReport product_preservation_probe(const FinCategory& C, int trials,
                                                     std::uint64_t seed) {
    ProductProbeReport rep;
    {
        SetDiagram one;
        one.shape = C;
        one.sizes.assign(static_cast<std::size_t>(C.num_objects()), 1);
        for (int f = 0; f < C.num_morphisms(); ++f) one.action.push_back({0});
        int classes = colim_finset(one).classes;
        bool connected = C.num_objects() > 0 && category_components(C).first == 1;
        if ((classes == 1) != connected) {
            rep.pass = false;
            rep.reason = "empty product check fails";
            return rep;
        }
        if (classes != 1) {
            rep.pass = false;
            rep.reason = "shape is not connected, terminal diagram has " + std::to_string(classes) +
                         " classes";
            rep.witness = {one, one};
            return rep;
        }
    }
    for (int a = 0; a < C.num_objects(); ++a)
        for (int b = 0; b < C.num_objects(); ++b) {
            SetDiagram X = representable_diagram(C, a), Y = representable_diagram(C, b);
            if (!detail::product_comparison_bijective(X, Y)) {
                rep.pass = false;
                rep.reason = "representable pair (" + C.objects[static_cast<std::size_t>(a)] + ", " +
                             C.objects[static_cast<std::size_t>(b)] + ") breaks the comparison";
                rep.witness = {X, Y};
                return rep;
            }
        }
    Rng rng(seed);
    for (int t = 0; t < trials; ++t) {
        SetDiagram X = random_set_diagram(rng, C), Y = random_set_diagram(rng, C);
        if (!detail::product_comparison_bijective(X, Y)) {
            rep.pass = false;
            rep.reason = "random pair breaks the comparison";
            rep.witness = {X, Y};
            return rep;
        }
    }
    return rep;
}

struct MultiSiftednessReport {
    int level = 0;
    int arity = 0;
    Verdict overall = Verdict::Unknown;
    std::vector<std::pair<std::vector<int>, ConnectivityReport>> per_tuple;
    std::optional<std::vector<int>> witness_tuple;
};

/// Connectivity of every m-fold multislice at level n; arity 0 checks
/// the category itself.
inline MultiSiftednessReport multi_sifted(const FinCategory& C, int n, int m,
                                          long tietze_budget = 10000) {
    if (m < 0) throw error("multi_sifted: negative arity");
    MultiSiftednessReport rep;
    rep.level = n;
    rep.arity = m;
    std::vector<std::vector<int>> tuples{{}};
    for (int i = 0; i < m; ++i) {
        std::vector<std::vector<int>> next;
        for (const auto& t : tuples)
            for (int a = 0; a < C.num_objects(); ++a) {
                auto t2 = t;
                t2.push_back(a);
                next.push_back(std::move(t2));
            }
        tuples = std::move(next);
    }
    std::vector<ConnectivityReport> flat;
    for (const auto& t : tuples) {
        FinCategory K = multislice(C, t);
        ConnectivityReport r = connectivity(nerve(K, std::max(n, 2)).sset, n, tietze_budget);
        if (r.verdict == Verdict::No && !rep.witness_tuple) rep.witness_tuple = t;
        flat.push_back(r);
        rep.per_tuple.push_back({t, std::move(r)});
    }
    rep.overall = detail::aggregate(flat);
    return rep;
}

}  // namespace cofin
