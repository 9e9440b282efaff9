#include <doctest.h>

#include "qcs/gf.hpp"

using namespace qcs;

TEST_CASE("primality and factoring") {
    CHECK(is_prime(2));
    CHECK(is_prime(3));
    CHECK(is_prime(29));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(15));
    CHECK(prime_factors(12) == std::vector<u64>{2, 3});
    CHECK(prime_factors(2ull * 3 * 5 * 17) == std::vector<u64>{2, 3, 5, 17});
    CHECK(prime_factors(1) == std::vector<u64>{});
}

TEST_CASE("modular arithmetic helpers") {
    CHECK(mod_pow(2, 10, 1000) == 24);
    CHECK(mod_pow(7, 0, 13) == 1);
    CHECK(multiplicative_order(2, 5) == 4);
    CHECK(multiplicative_order(2, 9) == 6);
    CHECK(multiplicative_order(2, 7) == 3);
    CHECK(multiplicative_order(3, 8) == 2);
}

TEST_CASE("prime field arithmetic") {
    Gf f3 = make_prime_field(3);
    auto two = f3.from_int(2);
    CHECK(f3.mul(two, two) == f3.one());  // 4 = 1 mod 3
    CHECK(f3.add(two, f3.one()) == f3.zero());
    CHECK(f3.inv(two) == two);
    CHECK_THROWS_AS(f3.inv(f3.zero()), domain_error);
    // exhaustive inverse check over F_13
    Gf f13 = make_prime_field(13);
    for (u32 c = 1; c < 13; ++c)
        CHECK(f13.mul(f13.from_int(c), f13.inv(f13.from_int(c))) == f13.one());
}

TEST_CASE("quadratic extension of F_2 is F_4") {
    QuadExt ext = find_irreducible_quadratic(2);
    CHECK(ext.c0 == 1);
    CHECK(ext.c1 == 1);
    auto eta = ext.eta();
    // eta^2 = eta + 1
    CHECK(ext.gf.mul(eta, eta) == ext.gf.add(eta, ext.gf.one()));
    // Frobenius swaps the two roots: eta^2 = eta + 1 = conjugate
    CHECK(ext.frobenius(eta) == ext.gf.add(eta, ext.gf.one()));
    // every nonzero element has order dividing 3
    for (u32 a = 0; a < 2; ++a)
        for (u32 b = 0; b < 2; ++b) {
            if (a == 0 && b == 0) continue;
            auto x = ext.gf.make({a, b});
            CHECK(ext.gf.pow(x, 3) == ext.gf.one());
        }
}

TEST_CASE("quadratic extension of odd primes") {
    for (u32 p : {3u, 5u, 7u, 11u}) {
        QuadExt ext = find_irreducible_quadratic(p);
        CHECK(ext.c1 == 0);
        auto eta = ext.eta();
        // eta^2 = c0, and c0 is a non-residue so Y^2 - c0 has no F_p root
        CHECK(ext.gf.mul(eta, eta) == ext.gf.from_int(ext.c0));
        for (u32 c = 0; c < p; ++c)
            CHECK(c * c % p != ext.c0);
        // Frobenius is an involution fixing F_p
        CHECK(ext.frobenius(ext.frobenius(eta)) == eta);
        CHECK(ext.frobenius(ext.gf.from_int(2)) == ext.gf.from_int(2));
    }
}

TEST_CASE("splitting field for n=5, p=2") {
    QuadExt ext = find_irreducible_quadratic(2);
    SplitField sf = make_split_field(5, ext);
    CHECK(sf.L == 4);  // lcm(2, ord_5(2)) = 4
    CHECK(sf.order == 16);
    // beta has order exactly 5
    CHECK(sf.gf.pow(sf.beta, 5) == sf.gf.one());
    CHECK_FALSE(sf.gf.pow(sf.beta, 1) == sf.gf.one());
    // the embedded eta satisfies the quadratic
    auto mu = sf.gf.add(sf.gf.mul(sf.eta, sf.eta),
                        sf.gf.add(sf.eta, sf.gf.one()));  // eta^2+eta+1 over F_2
    CHECK(sf.gf.is_zero(mu));
    // generator spans the multiplicative group
    CHECK(sf.gf.pow(sf.generator, 15) == sf.gf.one());
    CHECK_FALSE(sf.gf.pow(sf.generator, 5) == sf.gf.one());
    CHECK_FALSE(sf.gf.pow(sf.generator, 3) == sf.gf.one());
    // embed / project round-trip over all of F_4
    for (u32 a = 0; a < 2; ++a)
        for (u32 b = 0; b < 2; ++b) {
            auto x = ext.gf.make({a, b});
            CHECK(sf.to_fp2(sf.embed_fp2(x)) == x);
        }
    CHECK(sf.subfield_table.size() == 4);
}

TEST_CASE("splitting field embeds F_{p^2} multiplicatively") {
    QuadExt ext = find_irreducible_quadratic(3);
    SplitField sf = make_split_field(5, ext);
    for (u32 a = 0; a < 3; ++a)
        for (u32 b = 0; b < 3; ++b)
            for (u32 c = 0; c < 3; ++c)
                for (u32 d = 0; d < 3; ++d) {
                    auto x = ext.gf.make({a, b}), y = ext.gf.make({c, d});
                    CHECK(sf.embed_fp2(ext.gf.mul(x, y)) ==
                          sf.gf.mul(sf.embed_fp2(x), sf.embed_fp2(y)));
                }
    // elements outside the subfield are rejected
    bool some_outside = false;
    for (u64 i = 1; i < sf.order - 1; ++i) {
        auto x = sf.gf.pow(sf.generator, i);
        try {
            sf.to_fp2(x);
        } catch (const algebra_error&) {
            some_outside = true;
        }
    }
    CHECK(some_outside);
}

TEST_CASE("primitive nth root is deterministic and has exact order") {
    QuadExt ext = find_irreducible_quadratic(2);
    SplitField a = make_split_field(9, ext);
    SplitField b = make_split_field(9, ext);
    CHECK(a.beta == b.beta);
    for (u32 d = 1; d < 9; ++d)
        if (9 % d == 0) CHECK_FALSE(a.gf.pow(a.beta, d) == a.gf.one());
    CHECK(a.gf.pow(a.beta, 9) == a.gf.one());
}
