#ifndef QCS_CONSTRUCT_HPP
#define QCS_CONSTRUCT_HPP

#include <optional>

#include "qcs/cyclo.hpp"
#include "qcs/symplectic.hpp"

// End-to-end code construction: validate the (n, p, m) triplet, build g(X)
// from cyclotomic factors, pair conjugate factors over F_{p^2}, select
// h(X, eta), solve for a(X) by CRT, and assemble the isotropic ideal basis.

namespace qcs {

struct GoodTriplet {
    u32 n = 0, p = 0;
    i64 m = 0;
    u32 t = 0;
};

// Throws domain_error with a descriptive message when the triplet is not
// good or can only produce trivial ideals.
GoodTriplet validate_good_triplet(u32 n, u32 p, i64 m);

enum class RouteKind { FrobeniusSquareRoot, MinusOne, Fail };

struct Route {
    RouteKind kind = RouteKind::Fail;
    i64 m = 0;
    std::string reason;
};

Route strategy_select(u32 n, u32 p);

struct ConjugatePair {
    Factor first;   // r'
    Factor second;  // r'^p (coefficient Frobenius of first)
};

struct Blueprint {
    GoodTriplet triplet;
    QuadExt ext;
    Poly g;             // over F_p, factor of X^n - 1
    Poly h, hbar;       // over F_{p^2}; g * h * hbar = X^n - 1
    Poly a;             // over F_p, residue in R
    Poly f;             // c0^{-1} a g mod X^n - 1, over F_p
    u32 k = 0;          // deg g
    std::vector<std::vector<u32>> g_cosets;  // exponent cosets of g's factors
    std::vector<std::vector<u32>> h_cosets;  // exponent cosets of h's factors
    std::vector<u32> h_exponents;            // sorted union of h_cosets
};

// g = product of all odd-degree factors plus the selected even-degree ones.
Poly build_g(const Gf& fp, const FactorSet& fp_factors, const std::vector<u32>& extra,
             std::vector<std::vector<u32>>* cosets_out = nullptr);

// Group the F_{p^2} factors of (X^n - 1)/g into Frobenius-conjugate pairs.
std::vector<ConjugatePair> pair_conjugate_factors(const QuadExt& ext,
                                                  const FactorSet& fp2_factors,
                                                  const std::vector<std::vector<u32>>& g_cosets);

struct HSelection {
    bool auto_mode = true;           // maximize the consecutive root run
    std::vector<u32> indices;        // explicit factor indices otherwise
};

Poly choose_h(const QuadExt& ext, u32 n, const std::vector<ConjugatePair>& pairs,
              const HSelection& sel, std::vector<std::vector<u32>>* cosets_out = nullptr);

// CRT solve: a = eta^p mod h, a = eta mod hbar, a = 0 mod g; result must be
// Frobenius-fixed (all coefficients in F_p).
Poly compute_a(const QuadExt& ext, u32 n, const Poly& g_fp, const Poly& h, const Poly& hbar);

Blueprint construct_code(u32 n, u32 p, i64 m, const std::vector<u32>& g_extra,
                         const HSelection& h_sel);

struct IdealBasis {
    Basis S;
    PauliVec gen1;  // (g, f)
    PauliVec gen2;  // eta * (g, f)
};

IdealBasis assemble(const Blueprint& bp);

// Returns h; used as the centralizer ideal generator.
const Poly& centralizer_generator(const Blueprint& bp);

// The explicit centralizer set Z = {(u, u a + v (X^n-1)/g)} as a basis.
Basis z_set_basis(const Blueprint& bp);
// Enumerate Z elementwise (only for small p^(n + deg g)).
std::vector<PauliVec> z_set_elements(const Blueprint& bp);

}  // namespace qcs

#endif
