#include <doctest.h>

#include "qcs/poly.hpp"

using namespace qcs;

namespace {

Poly random_poly(const Gf& f, u32 max_deg, u64& state) {
    auto next = [&state] {
        state = state * 6364136223846793005ull + 1442695040888963407ull;
        return state >> 33;
    };
    std::vector<u32> c(max_deg + 1);
    for (auto& x : c) x = static_cast<u32>(next() % f.p());
    return p_from_ints(f, c);
}

}  // namespace

TEST_CASE("basic polynomial arithmetic over F_2") {
    Gf f2 = make_prime_field(2);
    Poly a = p_from_ints(f2, {1, 1});        // 1 + X
    Poly b = p_from_ints(f2, {1, 1, 1});     // 1 + X + X^2
    CHECK(p_mul(f2, a, b) == p_from_ints(f2, {1, 0, 0, 1}));  // X^3 + 1
    CHECK(p_add(f2, a, a).is_zero());
    auto [q, r] = p_divmod(f2, p_from_ints(f2, {1, 0, 0, 1}), a);
    CHECK(q == b);
    CHECK(r.is_zero());
    CHECK(p_divexact(f2, p_from_ints(f2, {1, 0, 0, 1}), b) == a);
    CHECK_THROWS_AS(p_divexact(f2, p_from_ints(f2, {1, 1, 0, 1}), b), algebra_error);
}

TEST_CASE("division identity over F_3, randomized") {
    Gf f3 = make_prime_field(3);
    u64 state = 42;
    for (int it = 0; it < 200; ++it) {
        Poly a = random_poly(f3, 8, state);
        Poly b = random_poly(f3, 4, state);
        if (b.is_zero()) continue;
        auto [q, r] = p_divmod(f3, a, b);
        CHECK(p_add(f3, p_mul(f3, q, b), r) == a);
        CHECK((r.is_zero() || r.deg() < b.deg()));
    }
}

TEST_CASE("gcd is monic and divides both") {
    Gf f3 = make_prime_field(3);
    u64 state = 7;
    for (int it = 0; it < 100; ++it) {
        Poly a = random_poly(f3, 6, state);
        Poly b = random_poly(f3, 6, state);
        if (a.is_zero() || b.is_zero()) continue;
        Poly g = p_gcd(f3, a, b);
        CHECK(g.c.back() == f3.one());
        CHECK(p_mod(f3, a, g).is_zero());
        CHECK(p_mod(f3, b, g).is_zero());
    }
}

TEST_CASE("evaluation and ring reduction") {
    Gf f5 = make_prime_field(5);
    Poly a = p_from_ints(f5, {1, 2, 3});  // 1 + 2X + 3X^2
    CHECK(p_eval(f5, a, f5.from_int(2)) == f5.from_int((1 + 4 + 12) % 5));
    // X^7 = X^2 in F[X]/(X^5 - 1)
    std::vector<u32> x7(8, 0);
    x7[7] = 1;
    CHECK(p_mod_xn1(f5, p_from_ints(f5, x7), 5) ==
          p_from_ints(f5, {0, 0, 1}));
}

TEST_CASE("CRT combination satisfies all residues") {
    Gf f2 = make_prime_field(2);
    // moduli: X+1, X^2+X+1, X^4+X^3+X^2+X+1 (pairwise coprime factors)
    Poly m1 = p_from_ints(f2, {1, 1});
    Poly m2 = p_from_ints(f2, {1, 1, 1});
    Poly m3 = p_from_ints(f2, {1, 1, 1, 1, 1});
    Poly r1 = p_from_ints(f2, {1});
    Poly r2 = p_from_ints(f2, {0, 1});
    Poly r3 = p_from_ints(f2, {1, 0, 1});
    Poly x = crt_combine(f2, {{r1, m1}, {r2, m2}, {r3, m3}});
    CHECK(p_mod(f2, x, m1) == r1);
    CHECK(p_mod(f2, x, m2) == r2);
    CHECK(p_mod(f2, x, m3) == r3);
    CHECK(x.deg() < m1.deg() + m2.deg() + m3.deg());
}

TEST_CASE("substitution X -> X^{-m} is a ring homomorphism") {
    for (u32 p : {2u, 3u}) {
        Gf fp = make_prime_field(p);
        const u32 n = 8;
        u64 state = 99 + p;
        for (i64 m : {i64{-1}, i64{3}}) {  // 3^2 = 9 = 1 mod 8
            for (int it = 0; it < 50; ++it) {
                Poly a = p_mod_xn1(fp, random_poly(fp, n - 1, state), n);
                Poly b = p_mod_xn1(fp, random_poly(fp, n - 1, state), n);
                Poly lhs = frobenius_substitute(fp, p_mulmod_xn1(fp, a, b, n), n, m);
                Poly rhs = p_mulmod_xn1(fp, frobenius_substitute(fp, a, n, m),
                                        frobenius_substitute(fp, b, n, m), n);
                CHECK(lhs == rhs);
                CHECK(frobenius_substitute(fp, p_add(fp, a, b), n, m) ==
                      p_add(fp, frobenius_substitute(fp, a, n, m),
                            frobenius_substitute(fp, b, n, m)));
                // involution
                CHECK(frobenius_substitute(fp, frobenius_substitute(fp, a, n, m), n, m) == a);
            }
        }
    }
}

TEST_CASE("field change maps round-trip") {
    QuadExt ext = find_irreducible_quadratic(3);
    Gf fp = make_prime_field(3);
    SplitField sf = make_split_field(5, ext);
    Poly a = p_from_ints(fp, {2, 0, 1, 1});
    Poly a2 = lift_fp_to_fp2(ext.gf, a);
    CHECK(project_fp2_to_fp(fp, a2) == a);
    Poly as = lift_fp2_to_split(sf, a2);
    CHECK(project_split_to_fp2(sf, ext.gf, as) == a2);
    // a polynomial with an eta part cannot be projected to F_p
    Poly b = p_make(ext.gf, {ext.eta()});
    CHECK_THROWS_AS(project_fp2_to_fp(fp, b), algebra_error);
    // conjugation is a coefficient-wise involution
    Poly c = p_make(ext.gf, {ext.eta(), ext.gf.from_int(2), ext.gf.make({1, 2})});
    CHECK(conjugate_fp2(ext, conjugate_fp2(ext, c)) == c);
}
