#ifndef QCS_POLY_HPP
#define QCS_POLY_HPP

#include "qcs/gf.hpp"

// Dense polynomials over a Gf field.  A Poly is a normalized coefficient
// vector (no leading zeros; the zero polynomial is empty).  All operations
// take the coefficient field explicitly so the same code serves F_p,
// F_{p^2} and the splitting field.

namespace qcs {

struct Poly {
    std::vector<Gf::El> c;  // low degree first

    int deg() const { return static_cast<int>(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }
    bool operator==(const Poly& o) const { return c == o.c; }
};

Poly p_make(const Gf& f, std::vector<Gf::El> coeffs);
Poly p_from_ints(const Gf& f, const std::vector<u32>& coeffs);
Poly p_zero();
Poly p_one(const Gf& f);
Poly p_x(const Gf& f);                    // the monomial X
Poly p_xn_minus_1(const Gf& f, u32 n);
Poly p_scale(const Gf& f, const Poly& a, const Gf::El& s);

Poly p_add(const Gf& f, const Poly& a, const Poly& b);
Poly p_sub(const Gf& f, const Poly& a, const Poly& b);
Poly p_neg(const Gf& f, const Poly& a);
Poly p_mul(const Gf& f, const Poly& a, const Poly& b);
// quotient and remainder; b must be nonzero
std::pair<Poly, Poly> p_divmod(const Gf& f, const Poly& a, const Poly& b);
Poly p_mod(const Gf& f, const Poly& a, const Poly& b);
// exact division; throws algebra_error when the remainder is nonzero
Poly p_divexact(const Gf& f, const Poly& a, const Poly& b);
Poly p_gcd(const Gf& f, Poly a, Poly b);  // monic
Poly p_monic(const Gf& f, const Poly& a);
Gf::El p_eval(const Gf& f, const Poly& a, const Gf::El& x);

// multiplication in R = F[X]/(X^n - 1)
Poly p_mulmod_xn1(const Gf& f, const Poly& a, const Poly& b, u32 n);
Poly p_mod_xn1(const Gf& f, const Poly& a, u32 n);

// coefficient vector of fixed length n (residue representation)
std::vector<Gf::El> p_residue(const Gf& f, const Poly& a, u32 n);
Poly p_from_residue(const Gf& f, const std::vector<Gf::El>& r);

// field-change maps
Poly lift_fp_to_fp2(const Gf& fp2, const Poly& a);           // c -> (c, 0)
Poly lift_fp2_to_split(const SplitField& sf, const Poly& a); // (u,v) -> u + eta v
Poly project_split_to_fp2(const SplitField& sf, const Gf& fp2, const Poly& a);
Poly project_fp2_to_fp(const Gf& fp, const Poly& a);         // throws if any eta part
// coefficient-wise Frobenius over F_{p^2}
Poly conjugate_fp2(const QuadExt& ext, const Poly& a);

// Frobenius substitution X -> X^{-m} in R: coefficient permutation
// i -> (-m * i) mod n.  Requires m^2 = 1 mod n.
Poly frobenius_substitute(const Gf& f, const Poly& a, u32 n, i64 m);

// Chinese remainder combination; moduli must be pairwise coprime.
Poly crt_combine(const Gf& f, const std::vector<std::pair<Poly, Poly>>& residues);

}  // namespace qcs

#endif
