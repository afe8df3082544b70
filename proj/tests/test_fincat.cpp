#include <catch2/catch_amalgamated.hpp>

#include "cofin/delta.hpp"
#include "cofin/diagram.hpp"
#include "cofin/fincat.hpp"
#include "cofin/fixtures.hpp"
#include "cofin/rand.hpp"

using namespace cofin;

namespace {

FinCategory walking_arrow() {
    FinCategory C;
    C.objects = {"a", "b"};
    C.morphisms = {{"1_a", 0, 0}, {"1_b", 1, 1}, {"t", 0, 1}};
    C.identity = {0, 1};
    C.table = {{0, -1, -1}, {-1, 1, 2}, {2, -1, -1}};
    return C;
}

}  // namespace

TEST_CASE("validate accepts good categories and reports broken tables") {
    CHECK(validate(delta_leq(2).cat).empty());
    CHECK(validate(walking_arrow()).empty());
    CHECK(validate(fixtures::no_coequalizer()).empty());

    auto C = delta_leq(1).cat;
    C.table[2][0] = C.identity[0];  // mistarget one composite
    auto bad = validate(C);
    CHECK_FALSE(bad.empty());
}

TEST_CASE("opposite and product") {
    auto C = delta_leq(1).cat;
    CHECK(validate(opposite(C)).empty());
    CHECK(isomorphic(opposite(opposite(C)), C));
    // the double opposite is the identity on numbering, not just isomorphic
    CHECK(opposite(opposite(C)).table == C.table);

    auto P = product(C, C);
    CHECK(validate(P.cat).empty());
    CHECK(P.cat.num_objects() == 4);
    CHECK(P.cat.num_morphisms() == 7 * 7);
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            for (int c = 0; c < 2; ++c)
                for (int d = 0; d < 2; ++d)
                    CHECK(P.cat.hom(P.object_of(a, b), P.object_of(c, d)).size() ==
                          C.hom(a, c).size() * C.hom(b, d).size());

    auto PT = product(C, terminal_category());
    CHECK(isomorphic(PT.cat, C));
    CHECK(validate(diagonal_functor(C, P)).empty());
}

TEST_CASE("comma categories against brute force") {
    auto C = delta_leq(1).cat;
    auto P = product(C, C);
    Functor diag = diagonal_functor(C, P);
    CommaResult K = comma(diag, diag);
    CHECK(validate(K.cat).empty());
    CHECK(validate(K.proj_left).empty());
    CHECK(validate(K.proj_right).empty());
    int objs = 0;
    for (int a = 0; a < C.num_objects(); ++a)
        for (int b = 0; b < C.num_objects(); ++b)
            objs += static_cast<int>(P.cat.hom(diag.on_object(a), diag.on_object(b)).size());
    CHECK(K.cat.num_objects() == objs);
    int mors = 0;
    for (const auto& [sa, sb, sf] : K.objects_data)
        for (const auto& [ta, tb, tf] : K.objects_data)
            for (int u : C.hom(sa, ta))
                for (int v : C.hom(sb, tb))
                    if (P.cat.compose(tf, diag.on_morphism(u)) ==
                        P.cat.compose(diag.on_morphism(v), sf))
                        ++mors;
    CHECK(K.cat.num_morphisms() == mors);
}

TEST_CASE("slices and coslices") {
    auto A = walking_arrow();
    CHECK(isomorphic(slice(A, 1).cat, A));  // slice over the terminal object

    auto Sop = opposite(delta_s_leq(1).cat);
    CHECK(coslice(Sop, 0).cat.num_objects() == 1);
    CHECK(coslice(Sop, 1).cat.num_objects() == 3);

    // coslice along the identity has an initial object
    auto K = coslice_along(identity_functor(Sop), 1);
    int initial = 0;
    for (int s = 0; s < K.cat.num_objects(); ++s) {
        bool ok = true;
        for (int t = 0; t < K.cat.num_objects(); ++t)
            if (K.cat.hom(s, t).size() != 1) ok = false;
        if (ok) ++initial;
    }
    CHECK(initial == 1);
}

TEST_CASE("diagonal coslices of truncated simplex categories") {
    auto Sop = opposite(delta_s_leq(1).cat);
    auto P = product(Sop, Sop);
    auto K = coslice_along(diagonal_functor(Sop, P), P.object_of(0, 1));
    CHECK(K.cat.num_objects() == 2);
    CHECK(K.cat.num_morphisms() == 2);  // identities only: disconnected pair

    auto Dop = opposite(delta_leq(1).cat);
    auto PD = product(Dop, Dop);
    auto KD = coslice_along(diagonal_functor(Dop, PD), PD.object_of(1, 1));
    CHECK(KD.cat.num_objects() == 13);  // 2*2 over [0] plus 3*3 over [1]
}

TEST_CASE("pullbacks") {
    auto C = delta_leq(1).cat;
    auto idc = identity_functor(C);
    CHECK(isomorphic(pullback(idc, idc).cat, C));

    // pullback of coslice projections vs coslice along the diagonal
    auto Sop = opposite(delta_s_leq(1).cat);
    auto P = product(Sop, Sop);
    auto via_diag = coslice_along(diagonal_functor(Sop, P), P.object_of(0, 1));
    auto via_pb = pullback(coslice(Sop, 0).proj_right, coslice(Sop, 1).proj_right);
    CHECK(validate(via_pb.cat).empty());
    CHECK(isomorphic(via_pb.cat, via_diag.cat));
    CHECK(via_pb.cat.num_objects() == 2);
    CHECK(category_components(via_pb.cat).first == 2);
}

TEST_CASE("multislices") {
    auto Sop = opposite(delta_s_leq(1).cat);
    CHECK(isomorphic(multislice(Sop, {}), Sop));
    CHECK(isomorphic(multislice(Sop, {1}), coslice(Sop, 1).cat));
    auto M = multislice(Sop, {0, 1});
    CHECK(M.num_objects() == 2);
    CHECK(category_components(M).first == 2);
    CHECK(validate(multislice(Sop, {0, 1, 1})).empty());
}

TEST_CASE("random categories validate") {
    Rng rng(11);
    for (int t = 0; t < 100; ++t) {
        auto C = random_category(rng);
        CHECK(validate(C).empty());
        CHECK(C.num_objects() >= 1);
        CHECK(C.num_morphisms() <= 8);
    }
}

TEST_CASE("functor validation and enumeration") {
    auto A = walking_arrow();
    auto C = delta_leq(1).cat;
    auto fs = enumerate_functors(A, C);
    for (const auto& F : fs) CHECK(validate(F).empty());
    // one functor per choice of objects and image of t: 1 + 2 + 1 + 3
    CHECK(fs.size() == 7);

    Functor broken = identity_functor(A);
    broken.mor_map[2] = A.identity[0];
    CHECK_FALSE(validate(broken).empty());
}
