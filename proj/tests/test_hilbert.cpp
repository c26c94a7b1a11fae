#include "doctest.h"

#include "strata/hilbert.hpp"

using namespace strata;

TEST_CASE("free Hilbert series has the canonical factored shape") {
    auto g1 = free_hilbert_series(1);
    CHECK(g1.str() == "(t) / (1-1t)");
    CHECK(g1.C() == 1);
    auto g2 = free_hilbert_series(2);
    CHECK(g2.C() == 2);
    for (auto& [j, d] : g2.denominator_exponents) CHECK(d == 1);
    auto g4 = free_hilbert_series(4);
    CHECK(g4.C() == 4);
    CHECK(g4.denominator_exponents.size() == 4);
    CHECK_THROWS_AS(free_hilbert_series(0), std::invalid_argument);
}

TEST_CASE("coefficients come out of the recurrence exactly") {
    auto g1 = free_hilbert_series(1);
    CHECK(coefficient(g1, 10) == Rat(1));
    CHECK(coefficient(g1, 0) == Rat(0));
    auto g2 = free_hilbert_series(2);
    std::vector<long long> expect{0, 0, 2, 6, 14, 30, 62};
    for (int n = 0; n < static_cast<int>(expect.size()); ++n)
        CHECK(coefficient(g2, n) == Rat(expect[n]));
    auto g3 = free_hilbert_series(3);
    CHECK(coefficient(g3, 5) == Rat(count_surjections(5, 3)));
    CHECK(coefficient(g3, 5) == Rat(150));
    RationalGF zero;
    CHECK(coefficient(zero, 7) == Rat(0));
}

TEST_CASE("series coefficients equal surjection counts for d <= 4, n <= 12") {
    for (int d = 1; d <= 4; ++d) {
        auto gf = free_hilbert_series(d);
        for (int n = 0; n <= 12; ++n)
            CHECK(coefficient(gf, n) == Rat(count_surjections(n, d)));
    }
}

TEST_CASE("partial fractions: known decomposition and exact resummation") {
    auto g1 = poly_exp_decomposition(free_hilbert_series(1));
    REQUIRE(g1.terms.size() == 1);
    CHECK(g1.terms[0].first == 1);
    CHECK(g1.terms[0].second == Poly::constant(Rat(1)));

    auto g2 = poly_exp_decomposition(free_hilbert_series(2));
    REQUIRE(g2.terms.size() == 2);
    CHECK(g2.terms[0].first == 1);
    CHECK(g2.terms[0].second == Poly::constant(Rat(-2)));  // count = 2^n - 2
    CHECK(g2.terms[1].first == 2);
    CHECK(g2.terms[1].second == Poly::constant(Rat(1)));

    for (int d = 1; d <= 4; ++d) {
        auto gf = free_hilbert_series(d);
        auto dec = poly_exp_decomposition(gf);
        for (int n = dec.polynomial_part.degree() + 1; n <= 12; ++n)
            CHECK(dec.eval(n) == coefficient(gf, n));
    }
}

TEST_CASE("partial fractions handle repeated factors and polynomial parts") {
    // t / (1-t)^2 has coefficients n
    RationalGF gf;
    gf.numerator = Poly::monomial(Rat(1), 1);
    gf.denominator_exponents[1] = 2;
    auto dec = poly_exp_decomposition(gf);
    REQUIRE(dec.terms.size() == 1);
    CHECK(dec.terms[0].second.eval(Rat(7)) == Rat(7));
    for (int n = 0; n <= 9; ++n) CHECK(coefficient(gf, n) == Rat(n));

    // numerator degree above the denominator forces a polynomial part
    RationalGF top;
    top.numerator = Poly({Rat(3), Rat(0), Rat(5)});  // 3 + 5 t^2
    top.denominator_exponents[1] = 1;
    auto dec2 = poly_exp_decomposition(top);
    for (int n = dec2.polynomial_part.degree() + 1; n <= 8; ++n)
        CHECK(dec2.eval(n) == coefficient(top, n));
}

TEST_CASE("reduction cancels shared factors") {
    RationalGF gf;
    gf.numerator = Poly({Rat(2), Rat(-2)});  // 2(1 - t)
    gf.denominator_exponents[1] = 2;
    gf.reduce();
    CHECK(gf.denominator_exponents.at(1) == 1);
    CHECK(gf.numerator == Poly::constant(Rat(2)));
    RationalGF full;
    full.numerator = Poly({Rat(1), Rat(-3), Rat(2)});  // (1-t)(1-2t)
    full.denominator_exponents[1] = 1;
    full.denominator_exponents[2] = 1;
    full.reduce();
    CHECK(full.denominator_exponents.empty());
    CHECK(full.numerator == Poly::constant(Rat(1)));
}

TEST_CASE("threshold and bound polynomials") {
    CHECK(f_bound(0, 0, 0) == -7);
    CHECK(f_bound(1, 1, 1) == 30);
    // monotone in every argument
    for (int i = 0; i <= 3; ++i)
        for (int e = 0; e <= 3; ++e)
            for (int a = 0; a <= 3; ++a) {
                CHECK(f_bound(i + 1, e, a) >= f_bound(i, e, a));
                CHECK(f_bound(i, e + 1, a) >= f_bound(i, e, a));
                CHECK(f_bound(i, e, a + 1) >= f_bound(i, e, a));
            }

    for (int i = 0; i <= 10; ++i) {
        CHECK(p_bound(0, i, BoundForm::Composed) == 0);
        CHECK(p_bound(0, i, BoundForm::Expanded) == 0);
    }
    CHECK(p_bound(1, 0, BoundForm::Composed) == 15);
    CHECK(p_bound(1, 0, BoundForm::Expanded) == 15);
    CHECK(p_bound(1, 1, BoundForm::Composed) == 88);
    CHECK(p_bound(1, 1, BoundForm::Expanded) == 78);
    CHECK(p_bound(2, 0, BoundForm::Composed) == p_bound(2, 0, BoundForm::Expanded));

    auto rep = bounds_report(1, 1);
    CHECK(rep.composed == 88);
    CHECK(rep.expanded == 78);
    CHECK(rep.discrepancy);
    CHECK_FALSE(bounds_report(1, 0).discrepancy);

    auto alt = alt_threshold_coeffs();
    CHECK(alt.eval(1, 1, 1) == 11 + 7 + 9 - 5);
}
