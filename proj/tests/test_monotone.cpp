#include <catch2/catch_amalgamated.hpp>

#include "cofin/monotone.hpp"

using namespace cofin;

namespace {

long binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    long r = 1;
    for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
    return r;
}

}  // namespace

TEST_CASE("basic maps") {
    CHECK(identity_map(2).is_identity());
    CHECK(coface(2, 1).values == std::vector<int>{0, 2});
    CHECK(codegeneracy(2, 0).values == std::vector<int>{0, 0, 1, 2});
    CHECK(vertex_map(3, 2).values == std::vector<int>{2});
    CHECK_THROWS_AS(MonotoneMap(1, 1, {1, 0}), error);
    CHECK_THROWS_AS(MonotoneMap(1, 1, {0, 2}), error);
}

TEST_CASE("cosimplicial identities") {
    // d^j d^i = d^i d^(j-1) for i < j, both composites [n] -> [n+2]
    for (int n = 0; n <= 3; ++n)
        for (int i = 0; i <= n + 1; ++i)
            for (int j = i + 1; j <= n + 2; ++j)
                CHECK(compose(coface(n + 2, j), coface(n + 1, i)) ==
                      compose(coface(n + 2, i), coface(n + 1, j - 1)));
    // s^j d^j = id = s^j d^(j+1)
    for (int n = 1; n <= 3; ++n)
        for (int j = 0; j < n; ++j) {
            CHECK(compose(codegeneracy(n - 1, j), coface(n, j)).is_identity());
            CHECK(compose(codegeneracy(n - 1, j), coface(n, j + 1)).is_identity());
        }
}

TEST_CASE("composition is associative") {
    for (const auto& f : enumerate_monotone(1, 2))
        for (const auto& g : enumerate_monotone(2, 2))
            for (const auto& h : enumerate_monotone(2, 1))
                CHECK(compose(h, compose(g, f)) == compose(compose(h, g), f));
}

TEST_CASE("enumeration counts") {
    CHECK(enumerate_monotone(0, 0).size() == 1);
    CHECK(enumerate_monotone(1, 1).size() == 3);
    CHECK(enumerate_monotone(0, 2).size() == 3);
    for (int m = 0; m <= 5; ++m)
        for (int n = 0; n <= 5; ++n) {
            CHECK(static_cast<long>(enumerate_monotone(m, n).size()) == binom(m + n + 1, m + 1));
            CHECK(static_cast<long>(enumerate_injective(m, n).size()) == binom(n + 1, m + 1));
        }
    auto maps = enumerate_monotone(1, 1);
    CHECK(maps.front().values == std::vector<int>{0, 0});
    CHECK(maps.back().values == std::vector<int>{1, 1});
}

TEST_CASE("epi-mono factorization is correct and unique") {
    for (int m = 0; m <= 4; ++m)
        for (int n = 0; n <= 4; ++n)
            for (const auto& f : enumerate_monotone(m, n)) {
                auto ez = ez_factor(f);
                CHECK(ez.surjection.is_surjective());
                CHECK(ez.injection.is_injective());
                CHECK(compose(ez.injection, ez.surjection) == f);
                int count = 0;
                for (int k = 0; k <= std::min(m, n); ++k)
                    for (const auto& s : enumerate_monotone(m, k))
                        for (const auto& e : enumerate_monotone(k, n))
                            if (s.is_surjective() && e.is_injective() && compose(e, s) == f)
                                ++count;
                CHECK(count == 1);
            }
}

TEST_CASE("order reversal is functorial") {
    for (const auto& f : enumerate_monotone(1, 2))
        for (const auto& g : enumerate_monotone(2, 3)) {
            CHECK(reverse_map(reverse_map(f)) == f);
            CHECK(reverse_map(compose(g, f)) == compose(reverse_map(g), reverse_map(f)));
        }
}
