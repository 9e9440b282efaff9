#ifndef QCS_CYCLO_HPP
#define QCS_CYCLO_HPP

#include "qcs/poly.hpp"

// Factorization of X^n - 1 over F_p and F_{p^2} through cyclotomic cosets
// and root products in the splitting field.  Factors are indexed by the
// smallest exponent in their coset (the g_i / h_i naming).

namespace qcs {

// Orbits of i -> q*i mod n, sorted ascending inside each coset and by
// smallest element across cosets.  Requires gcd(n, q) = 1.
std::vector<std::vector<u32>> cyclotomic_cosets(u32 n, u64 q);

struct Factor {
    u32 index = 0;            // smallest coset element
    std::vector<u32> coset;   // exponents i with beta^i a root
    Poly poly;                // irreducible factor over the base field
};

struct FactorSet {
    u32 n = 0;
    std::vector<Factor> factors;

    const Factor& by_index(u32 idx) const;
    bool has_index(u32 idx) const;
};

// Factor X^n - 1 over F_p (base_is_fp2 = false) or F_{p^2} (true).
// Coefficients are computed in the split field and projected back; a
// projection failure signals an internal inconsistency.
FactorSet factor_xn_minus_1(u32 n, const QuadExt& ext, const SplitField& sf,
                            bool base_is_fp2);

// A maximal cyclic run of consecutive exponents.  `s` labels the primitive
// root beta^s the exponents refer to; exponents are w.r.t. that root.
struct ExpRun {
    u32 start = 0, len = 0, s = 1;
};

// Longest cyclic run inside the exponent set w.r.t. the canonical root.
ExpRun longest_consecutive_run(const std::vector<u32>& exponents, u32 n);

// Longest run over all primitive n-th roots beta^s (gcd(s, n) = 1); the
// exponent set transforms as E -> s^{-1} E.
ExpRun best_run_over_primitive_roots(const std::vector<u32>& exponents, u32 n);

// s^{-1} * E mod n, sorted: the exponent set relabeled to the root beta^s.
std::vector<u32> relabel_exponents(const std::vector<u32>& exponents, u32 n, u32 s);

}  // namespace qcs

#endif
