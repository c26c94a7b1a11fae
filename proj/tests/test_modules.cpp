#include "doctest.h"

#include "strata/fs_module.hpp"

using namespace strata;

TEST_CASE("free module dimensions and the identity action") {
    auto m1 = free_module(1, 5);
    for (int n = 1; n <= 5; ++n) CHECK(m1.dim(n) == 1);
    auto m2 = free_module(2, 4);
    CHECK(m2.dim(1) == 0);
    CHECK(m2.dim(2) == 2);
    CHECK(m2.dim(3) == 6);
    CHECK(m2.dim(4) == 14);
    CHECK(m2.action(Surjection::identity(3)).trace() == Rat(6));
    CHECK_THROWS_AS(m2.dim(5), std::invalid_argument);
    CHECK_THROWS_AS(free_module(3, 2), std::invalid_argument);
}

TEST_CASE("free modules are contravariantly functorial") {
    CHECK(functoriality_check(free_module(1, 4), 4));
    CHECK(functoriality_check(free_module(2, 4), 4));
    CHECK(functoriality_check(free_module(3, 4), 4));
}

TEST_CASE("restriction forgets high degrees and composes") {
    auto m = free_module(2, 4);
    auto r = restrict_module(m, 2);
    CHECK(r.max_degree() == 2);
    CHECK(r.dim(2) == 2);
    CHECK_THROWS_AS(r.dim(3), std::invalid_argument);
    auto rr = restrict_module(restrict_module(m, 3), 2);
    CHECK(rr.max_degree() == 2);
    CHECK(rr.dim(2) == 2);
    // identity when r == N
    auto rid = restrict_module(m, 4);
    CHECK(rid.dim(4) == 14);
}

TEST_CASE("induction recovers truncated free modules degreewise") {
    for (int d = 1; d <= 3; ++d)
        for (int r = d; r <= 4; ++r) {
            auto full = free_module(d, 4);
            auto ind = induce_with_data(restrict_module(full, r), 4);
            for (int n = 1; n <= 4; ++n) {
                CHECK(ind.module.dim(n) == full.dim(n));
                if (full.dim(n) > 0) CHECK(ind.counit_into(full, n).is_invertible());
            }
            CHECK(functoriality_check(ind.module, 4));
        }
}

TEST_CASE("induction of a module supported in degree one") {
    // one-dimensional space in degree 1; the only action is the identity
    std::vector<std::vector<std::string>> basis(2);
    basis[1] = {"x"};
    auto m = explicit_module(1, basis, {});
    auto ind = induce_module(m, 4);
    for (int n = 1; n <= 4; ++n) CHECK(ind.dim(n) == 1);
    CHECK(functoriality_check(ind, 4));
}

TEST_CASE("induction of the zero module is zero") {
    auto ind = induce_module(zero_module(3), 5);
    for (int n = 1; n <= 5; ++n) CHECK(ind.dim(n) == 0);
}

TEST_CASE("induction handles dense (non basis-map) modules") {
    // degree-1 space of dimension 2 with a non-permutation involution wired
    // through degree 2, exercising the sparse elimination path
    std::vector<std::vector<std::string>> basis(3);
    basis[1] = {"x", "y"};
    basis[2] = {"u"};
    std::map<Surjection, Action> actions;
    RatMat mix(1, 2);  // action of [2]->[1]: a map V_1 -> V_2
    mix.at(0, 0) = Rat(1);
    mix.at(0, 1) = Rat(1, 2);
    actions.emplace(Surjection(2, 1, {1, 1}), Action::dense(mix));
    auto m = explicit_module(2, basis, actions);
    auto ind = induce_with_data(m, 3);
    CHECK(ind.module.dim(1) == 2);
    CHECK(ind.module.dim(2) == 1);
    // the degree-3 space is the colimit over the three collapses through [2]
    CHECK(ind.module.dim(3) >= 0);
    CHECK(functoriality_check(ind.module, 3));
}

TEST_CASE("induced modules survive a JSON round-trip") {
    auto ind = induce_module(restrict_module(free_module(2, 4), 2), 4);
    auto back = module_from_json(module_to_json(ind));
    for (int n = 1; n <= 4; ++n) CHECK(back.dim(n) == ind.dim(n));
    for (int n = 1; n <= 4; ++n)
        for (int mm = 1; mm <= n; ++mm)
            for (const auto& f : enumerate_surjections(n, mm))
                CHECK(back.action(f) == ind.action(f));
    CHECK(functoriality_check(back, 4));
}

TEST_CASE("module JSON round-trip preserves dimensions and actions") {
    auto m = free_module(2, 3);
    auto j = module_to_json(m);
    auto back = module_from_json(j);
    CHECK(back.max_degree() == 3);
    for (int n = 1; n <= 3; ++n) CHECK(back.dim(n) == m.dim(n));
    for (int n = 1; n <= 3; ++n)
        for (int mm = 1; mm <= n; ++mm)
            for (const auto& f : enumerate_surjections(n, mm))
                CHECK(back.action(f) == m.action(f));
    CHECK(functoriality_check(back, 3));
}
