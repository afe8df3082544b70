#include <catch2/catch_amalgamated.hpp>

#include "cofin/delta.hpp"
#include "cofin/fixtures.hpp"
#include "cofin/nerve.hpp"
#include "cofin/rand.hpp"
#include "cofin/serialize.hpp"

using namespace cofin;

TEST_CASE("categories round-trip") {
    std::vector<FinCategory> cats = {terminal_category(), discrete_category(3),
                                     delta_leq(2).cat, opposite(delta_s_leq(1).cat),
                                     fixtures::no_coequalizer()};
    Rng rng(101);
    for (int t = 0; t < 50; ++t) cats.push_back(random_category(rng));
    for (const auto& C : cats) {
        auto doc = to_document("category", C);
        auto parsed = parse_document(dump_document(doc));
        CHECK(parsed.kind == "category");
        auto C2 = category_from_json(parsed.payload);
        CHECK(C2.objects == C.objects);
        CHECK(C2.identity == C.identity);
        CHECK(C2.table == C.table);
        CHECK(to_json(C2) == to_json(C));
    }
}

TEST_CASE("functors round-trip") {
    Rng rng(103);
    std::vector<Functor> fns = {delta_inclusion(delta_s_leq(1), delta_leq(1)),
                                identity_functor(fixtures::no_coequalizer())};
    for (int t = 0; t < 50; ++t) {
        auto A = random_category(rng);
        auto B = random_category(rng);
        fns.push_back(random_functor(rng, A, B));
    }
    for (const auto& F : fns) {
        auto parsed = parse_document(dump_document(to_document("functor", F)));
        auto F2 = functor_from_json(parsed.payload);
        CHECK(validate(F2).empty());
        CHECK(F2.obj_map == F.obj_map);
        CHECK(F2.mor_map == F.mor_map);
        CHECK(to_json(F2) == to_json(F));
    }
}

TEST_CASE("simplicial sets round-trip") {
    std::vector<SSet> ssets = {standard(3), boundary(2), horn(2, 1), fixtures::circle(),
                               fixtures::projective_plane(), nerve(delta_s_leq(1).cat, 2).sset};
    Rng rng(107);
    for (int t = 0; t < 50; ++t) ssets.push_back(random_sset(rng));
    for (const auto& S : ssets) {
        auto parsed = parse_document(dump_document(to_document("sset", S)));
        auto S2 = sset_from_json(parsed.payload);
        CHECK(is_valid(S2));
        CHECK(S2.truncation == S.truncation);
        for (int k = 0; k <= S.truncation; ++k) CHECK(S2.nondeg_count(k) == S.nondeg_count(k));
        CHECK(to_json(S2) == to_json(S));
    }
}

TEST_CASE("set diagrams round-trip") {
    Rng rng(109);
    for (int t = 0; t < 50; ++t) {
        auto C = random_category(rng);
        auto D = random_set_diagram(rng, C);
        auto parsed = parse_document(dump_document(to_document("set_diagram", D)));
        auto D2 = set_diagram_from_json(parsed.payload);
        CHECK(is_valid(D2));
        CHECK(D2.sizes == D.sizes);
        CHECK(D2.action == D.action);
        CHECK(colim_finset(D2).classes == colim_finset(D).classes);
        CHECK(to_json(D2) == to_json(D));
    }
}

TEST_CASE("simplicial diagrams round-trip") {
    Rng rng(113);
    for (int t = 0; t < 50; ++t) {
        auto F = random_sset_diagram(rng);
        auto parsed = parse_document(dump_document(to_document("sset_diagram", F)));
        auto F2 = sset_diagram_from_json(parsed.payload);
        CHECK(is_valid(F2));
        CHECK(F2.vertex_sizes == F.vertex_sizes);
        CHECK(F2.edge_actions == F.edge_actions);
        CHECK(to_json(F2) == to_json(F));
    }
}

TEST_CASE("dumps are byte-deterministic") {
    auto a = dump_document(to_document("sset", fixtures::projective_plane()));
    auto b = dump_document(to_document("sset", fixtures::projective_plane()));
    CHECK(a == b);
    CHECK(a.back() == '\n');

    Rng r1(127), r2(127);
    for (int t = 0; t < 10; ++t) {
        auto c1 = random_category(r1);
        auto c2 = random_category(r2);
        CHECK(dump_document(to_document("category", c1)) ==
              dump_document(to_document("category", c2)));
    }
}

TEST_CASE("malformed documents are rejected") {
    CHECK_THROWS(parse_document("not json"));
    CHECK_THROWS_AS(parse_document("{}"), error);
    CHECK_THROWS_AS(parse_document(R"({"kind":"category","payload":{}})"), error);
    CHECK_THROWS_AS(
        parse_document(R"({"format_version":"99","kind":"category","payload":{}})"), error);
    CHECK_THROWS(category_from_json(json::parse(R"({"objects":["a"]})")));
}
