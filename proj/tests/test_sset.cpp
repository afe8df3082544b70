#include <catch2/catch_amalgamated.hpp>

#include "cofin/fixtures.hpp"
#include "cofin/rand.hpp"
#include "cofin/sset.hpp"

using namespace cofin;

namespace {

long binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    long r = 1;
    for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
    return r;
}

}  // namespace

TEST_CASE("standard complexes") {
    auto S3 = standard(3);
    CHECK(is_valid(S3));
    for (int k = 0; k <= 3; ++k) CHECK(S3.nondeg_count(k) == binom(4, k + 1));

    auto B2 = boundary(2);
    CHECK(is_valid(B2));
    CHECK(B2.nondeg_count(0) == 3);
    CHECK(B2.nondeg_count(1) == 3);
    CHECK(B2.nondeg_count(2) == 0);

    auto H21 = horn(2, 1);
    CHECK(is_valid(H21));
    CHECK(H21.nondeg_count(0) == 3);
    CHECK(H21.nondeg_count(1) == 2);
    CHECK_THROWS_AS(horn(2, 3), error);
}

TEST_CASE("full levels") {
    CHECK(all_simplices(standard(1), 1).size() == 3);
    auto pt = raise_truncation(standard(0), 2);
    for (int k = 0; k <= pt.truncation; ++k) CHECK(all_simplices(pt, k).size() == 1);
    CHECK(all_simplices(boundary(2), 2).size() == 9);
    CHECK_THROWS_AS(all_simplices(boundary(2), 3), error);
}

TEST_CASE("vertices") {
    auto S2 = standard(2);
    SimplexRef top{identity_map(2), S2.index_of(2, "0.1.2")};
    CHECK(S2.id_of(0, vertex(S2, top, 0)) == "0");
    CHECK(S2.id_of(0, vertex(S2, top, 1)) == "1");
    CHECK(S2.id_of(0, vertex(S2, top, 2)) == "2");
    SimplexRef v{identity_map(0), 0};
    CHECK(vertex(S2, v, 0) == 0);
    SimplexRef dv = degeneracy(S2, v, 0);
    CHECK(dv.level() == 1);
    CHECK(vertex(S2, dv, 0) == 0);
    CHECK(vertex(S2, dv, 1) == 0);
}

TEST_CASE("faces satisfy the simplicial identities") {
    for (const SSet& S : {standard(3), boundary(3), horn(3, 1), fixtures::projective_plane(),
                          fixtures::circle()})
        CHECK(validate(S).empty());
}

TEST_CASE("opposite") {
    auto B = boundary(3);
    CHECK(is_valid(opposite(B)));
    auto OO = opposite(opposite(B));
    for (int k = 0; k <= 3; ++k) CHECK(OO.nondeg_count(k) == B.nondeg_count(k));
    // faces come back in the original order
    for (int x = 0; x < B.nondeg_count(2); ++x)
        for (int i = 0; i <= 2; ++i)
            CHECK(face(OO, {identity_map(2), x}, i) == face(B, {identity_map(2), x}, i));
}

TEST_CASE("skeleton and disjoint union") {
    auto S = skeleton(standard(3), 1);
    CHECK(S.truncation == 1);
    CHECK(S.nondeg_count(0) == 4);
    CHECK(S.nondeg_count(1) == 6);
    CHECK(is_valid(S));

    auto U = disjoint_union(standard(1), boundary(2));
    CHECK(is_valid(U));
    CHECK(U.nondeg_count(0) == 5);
    CHECK(U.nondeg_count(1) == 4);
}

TEST_CASE("products") {
    auto D1 = raise_truncation(standard(1), 2);
    auto P = product(D1, D1, 2);
    CHECK(is_valid(P.sset));
    CHECK(all_simplices(P.sset, 1).size() == 9);
    CHECK(P.sset.nondeg_count(1) == 5);
    CHECK(P.sset.nondeg_count(0) == 4);
    CHECK(P.sset.nondeg_count(2) == 2);  // the two triangles of the square

    for (int k = 0; k <= 2; ++k)
        CHECK(all_simplices(P.sset, k).size() ==
              all_simplices(D1, k).size() * all_simplices(D1, k).size());

    auto PT = product(boundary(2), raise_truncation(standard(0), 2), 2);
    for (int k = 0; k <= 2; ++k)
        CHECK(PT.sset.nondeg_count(k) == boundary(2).nondeg_count(k));
}

TEST_CASE("random simplicial sets are valid") {
    Rng rng(5);
    for (int t = 0; t < 100; ++t) CHECK(is_valid(random_sset(rng)));
}
