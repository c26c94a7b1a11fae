#include "doctest.h"

#include "strata/characters.hpp"
#include "strata/decompose.hpp"
#include "strata/partition.hpp"
#include "strata/plethysm.hpp"
#include "support/oracles.hpp"

using namespace strata;

TEST_CASE("partition basics") {
    Partition p{3, 1, 1};
    CHECK(p.size() == 5);
    CHECK(p.length() == 3);
    CHECK(p.padded(2) == Partition{5, 1, 1});
    CHECK(Partition{}.padded(4) == Partition{4});
    CHECK(Partition::parse("[3,1,1]") == p);
    CHECK(Partition::parse("3,1,1") == p);
    CHECK_THROWS_AS(Partition({1, 3}), std::invalid_argument);
    CHECK(partitions_of(5).size() == 7);
    CHECK(partitions_of(8).size() == 22);
    CHECK(z_of(Partition{1, 1, 1}) == 6);
    CHECK(z_of(Partition{2, 1}) == 2);
    CHECK(conjugacy_class_size(Partition{2, 1}) == 3);
    CHECK(cycle_type(class_representative(Partition{3, 2, 1})) == Partition{3, 2, 1});
}

TEST_CASE("characters: trivial, sign, and known values") {
    for (int m = 1; m <= 6; ++m)
        for (const auto& mu : partitions_of(m))
            CHECK(irreducible_character(Partition{m}, mu) == 1);
    CHECK(irreducible_character(Partition{1, 1}, Partition{2}) == -1);
    CHECK(irreducible_character(Partition{2, 1}, Partition{1, 1, 1}) == 2);
    CHECK(irreducible_character(Partition{2, 1}, Partition{3}) == -1);
    CHECK(irreducible_dimension(Partition{2, 2}) == 2);
    CHECK(irreducible_dimension(Partition{3, 1}) == 3);
    CHECK_THROWS_AS(irreducible_character(Partition{2}, Partition{3}),
                    std::invalid_argument);
}

TEST_CASE("character tables match the permutation-character oracle") {
    for (int m = 2; m <= 5; ++m) {
        auto table = character_table(m);
        auto oracle = oracles::character_table_oracle(m);
        CHECK(table == oracle);
    }
}

TEST_CASE("character table columns are orthogonal for m <= 6") {
    for (int m = 2; m <= 6; ++m) {
        auto parts = partitions_of(m);
        auto table = character_table(m);
        size_t K = parts.size();
        for (size_t j1 = 0; j1 < K; ++j1)
            for (size_t j2 = 0; j2 < K; ++j2) {
                long long acc = 0;
                for (size_t l = 0; l < K; ++l) acc += table[l][j1] * table[l][j2];
                if (j1 == j2) CHECK(acc == z_of(parts[j1]));
                else CHECK(acc == 0);
            }
    }
}

TEST_CASE("decomposition of free modules") {
    // degree m of the degree-1 free module is the trivial representation
    auto m1 = free_module(1, 5);
    for (int m = 1; m <= 5; ++m) {
        auto dec = decompose_degree(m1, m);
        CHECK(dec.size() == 1);
        CHECK(dec.at(Partition{m}) == 1);
    }
    // the quoted example: degree 3 of the degree-2 free module
    auto m2 = free_module(2, 4);
    auto dec = decompose_degree(m2, 3);
    CHECK(dec.size() == 2);
    CHECK(dec.at(Partition{3}) == 2);
    CHECK(dec.at(Partition{2, 1}) == 2);
    // degree d of the degree-d free module is the regular representation
    for (int d = 2; d <= 4; ++d) {
        auto md = free_module(d, d);
        auto reg = decompose_degree(md, d);
        for (const auto& lambda : partitions_of(d))
            CHECK(reg.at(lambda) == irreducible_dimension(lambda));
    }
}

TEST_CASE("free module constituents never exceed length d") {
    for (int d = 1; d <= 3; ++d) {
        auto m = free_module(d, 6);
        for (int deg = d; deg <= 6; ++deg)
            for (auto& [lambda, mult] : decompose_degree(m, deg))
                CHECK(lambda.length() <= d);
    }
}

TEST_CASE("multiplicity profiles and the polynomial fit helper") {
    auto m1 = free_module(1, 6);
    auto prof = multiplicity_profile(m1, Partition{});
    for (long long v : prof) CHECK(v == 1);
    CHECK(poly_fit_min_degree(prof, 1) == 0);

    auto m2 = free_module(2, 8);
    auto prof2 = multiplicity_profile(m2, Partition{1});
    // number of surjection orbits grows linearly: fits degree <= 1
    CHECK(poly_fit_min_degree(prof2, 2) <= 1);

    auto zero = multiplicity_profile(zero_module(5), Partition{1});
    for (long long v : zero) CHECK(v == 0);
    CHECK(poly_fit_min_degree(zero) == -1);

    CHECK(poly_fit_min_degree({1, 4, 9, 16, 25}) == 2);
    CHECK(poly_fit_min_degree({7, 7, 7}) == 0);
}

TEST_CASE("plethysm degree terms") {
    // s_(1)[h_1 + h_2 + ...] has degree-m term h_m = s_(m)
    for (int m = 1; m <= 6; ++m) {
        auto term = plethysm_degree_term(Partition{1}, m);
        CHECK(term.size() == 1);
        CHECK(term.at(Partition{m}) == 1);
    }
    // and it matches the decomposition of the degree-1 free module
    auto m1 = free_module(1, 6);
    for (int m = 1; m <= 6; ++m)
        CHECK(plethysm_degree_term(Partition{1}, m) == decompose_degree(m1, m));
}

TEST_CASE("plethysm terms for |lambda| = 2 sum to the free module") {
    auto m2 = free_module(2, 5);
    for (int m = 2; m <= 5; ++m) {
        auto a = plethysm_degree_term(Partition{2}, m);
        auto b = plethysm_degree_term(Partition{1, 1}, m);
        std::map<Partition, long long> sum = a;
        for (auto& [k, v] : b) sum[k] += v;
        CHECK(sum == decompose_degree(m2, m));
    }
}

TEST_CASE("plethysm equals the projective module decomposition") {
    for (int m = 1; m <= 5; ++m)
        for (int k = 1; k <= std::min(3, m); ++k)
            for (const auto& lambda : partitions_of(k))
                CHECK(plethysm_degree_term(lambda, m) == projective_decompose(lambda, m));
}

TEST_CASE("projective modules weighted by dimension add up to the free module") {
    for (int k = 2; k <= 3; ++k) {
        auto mk = free_module(k, 5);
        for (int m = k; m <= 5; ++m) {
            std::map<Partition, long long> sum;
            for (const auto& lambda : partitions_of(k)) {
                long long d = irreducible_dimension(lambda);
                for (auto& [mu, mult] : projective_decompose(lambda, m))
                    sum[mu] += d * mult;
            }
            CHECK(sum == decompose_degree(mk, m));
        }
    }
}
