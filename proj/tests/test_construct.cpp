#include <doctest.h>

#include <cmath>

#include "qcs/construct.hpp"

using namespace qcs;

TEST_CASE("good triplet validation") {
    GoodTriplet t = validate_good_triplet(5, 2, -1);
    CHECK(t.t == 0);
    CHECK(t.m == 4);
    // 9 | 2^3 + 1 but only with odd t: the m = 1 route must refuse
    CHECK_THROWS_AS(validate_good_triplet(9, 2, 1), domain_error);
    // while m = -1 remains available
    CHECK_NOTHROW(validate_good_triplet(9, 2, -1));
    // odd multiplicative order: only trivial ideals
    CHECK_THROWS_AS(validate_good_triplet(7, 2, -1), domain_error);
    CHECK_THROWS_AS(validate_good_triplet(6, 2, -1), domain_error);  // gcd != 1
    CHECK_THROWS_AS(validate_good_triplet(5, 4, -1), domain_error);  // p not prime
    CHECK_THROWS_AS(validate_good_triplet(15, 2, 2), domain_error);  // m^2 != 1
    // m = 4 on n = 15 (4^2 = 16 = 1): 15 | 2^t + 4 never holds
    CHECK_THROWS_AS(validate_good_triplet(15, 2, 4), domain_error);
    // m = 1 on n = 5: 5 | 2^2 + 1, t = 2 even
    GoodTriplet t5 = validate_good_triplet(5, 2, 1);
    CHECK(t5.t == 2);
}

TEST_CASE("strategy selection") {
    Route r = strategy_select(5, 2);  // ord = 4, 2^2 = -1 mod 5
    CHECK(r.kind == RouteKind::FrobeniusSquareRoot);
    CHECK(r.m == 1);
    r = strategy_select(9, 2);  // ord = 6
    CHECK(r.kind == RouteKind::MinusOne);
    CHECK(r.m == -1);
    r = strategy_select(7, 2);  // ord = 3, odd
    CHECK(r.kind == RouteKind::Fail);
    r = strategy_select(15, 2);  // ord = 4 but 2^2 = 4 != -1 mod 15
    CHECK(r.kind == RouteKind::MinusOne);
}

TEST_CASE("the n=5 reference code") {
    // pick the conjugate pair with root exponents {2, 3} explicitly
    HSelection sel;
    sel.auto_mode = false;
    sel.indices = {2};
    Blueprint bp = construct_code(5, 2, -1, {}, sel);
    Gf f2 = make_prime_field(2);
    CHECK(bp.g == p_from_ints(f2, {1, 1}));
    CHECK(bp.k == 1);
    CHECK(bp.h.deg() == 2);
    // a = eta^p mod h, eta mod hbar, 0 mod g; here a = X^2 + X^3
    CHECK(bp.a == p_from_ints(f2, {0, 0, 1, 1}));
    CHECK(bp.f == p_from_ints(f2, {0, 0, 1, 0, 1}));
    CHECK(bp.h_exponents == std::vector<u32>{2, 3});

    IdealBasis ib = assemble(bp);
    CHECK(ib.S.dim() == 4);
    Sigma sigma(5, -1);
    CHECK(is_sigma_isotropic(2, ib.S, sigma));
    CHECK(is_uniquely_cyclic(ib.S));
    CHECK(closed_under_shift(2, ib.S));
    CHECK(closed_under_eta(bp.ext, ib.S));
}

TEST_CASE("explicit h selection and conjugate pairing") {
    QuadExt ext = find_irreducible_quadratic(2);
    SplitField sf = make_split_field(9, ext);
    FactorSet fp2 = factor_xn_minus_1(9, ext, sf, true);
    auto pairs = pair_conjugate_factors(ext, fp2, {{0}});
    REQUIRE(pairs.size() == 2);
    // picking both members of one pair is invalid
    HSelection bad;
    bad.auto_mode = false;
    bad.indices = {1, 2};
    CHECK_THROWS_AS(choose_h(ext, 9, pairs, bad), domain_error);
    // picking one per pair works and h * hbar covers the non-g exponents
    HSelection ok;
    ok.auto_mode = false;
    ok.indices = {2, 6};
    Poly h = choose_h(ext, 9, pairs, ok);
    CHECK(h.deg() == 4);
}

TEST_CASE("centralizer set equals the centralizer kernel") {
    for (auto [n, p] : std::vector<std::pair<u32, u32>>{{5, 2}, {9, 2}, {4, 3}, {5, 3}}) {
        Blueprint bp = construct_code(n, p, -1, {}, HSelection{});
        IdealBasis ib = assemble(bp);
        Sigma sigma(n, -1);
        Basis kernel = centralizer(p, ib.S, sigma);
        Basis z = z_set_basis(bp);
        CHECK(z.dim() == n + bp.k);
        CHECK(kernel.dim() == z.dim());
        for (const auto& r : z.rows()) CHECK(kernel.contains(r));
        // elementwise: every Z element is in the kernel, and the counts match
        auto elems = z_set_elements(bp);
        double expected = std::pow(static_cast<double>(p), n + bp.k);
        CHECK(static_cast<double>(elems.size()) == expected);
        for (const auto& v : elems) CHECK(kernel.contains(v));
        // S sits inside its centralizer set
        for (const auto& r : ib.S.rows()) CHECK(z.contains(r));
    }
}

TEST_CASE("odd-characteristic construction is isotropic and well-sized") {
    // n = 4, p = 3: X^4 - 1 = (X-1)(X+1)(X^2+1) over F_3
    Blueprint bp = construct_code(4, 3, -1, {}, HSelection{});
    CHECK(bp.k == 2);
    IdealBasis ib = assemble(bp);
    CHECK(ib.S.dim() == 2);
    Sigma sigma(4, -1);
    CHECK(is_sigma_isotropic(3, ib.S, sigma));
    CHECK(closed_under_shift(3, ib.S));
    CHECK(closed_under_eta(bp.ext, ib.S));
    CHECK(is_uniquely_cyclic(ib.S));
}

TEST_CASE("extra factors enlarge g") {
    // n = 15: absorbing the even-degree factors 3 and 7 into g
    Blueprint bp = construct_code(15, 2, -1, {3, 7}, HSelection{});
    CHECK(bp.k == 9);
    IdealBasis ib = assemble(bp);
    CHECK(ib.S.dim() == 6);
    // index 2 is not a factor index of X^15 - 1 over F_2
    CHECK_THROWS_AS(construct_code(15, 2, -1, {2}, HSelection{}), domain_error);
}
