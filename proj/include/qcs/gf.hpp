#ifndef QCS_GF_HPP
#define QCS_GF_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

// Finite field arithmetic: F_p, its quadratic extension F_p(eta), and the
// splitting field of X^n - 1.  All fields are represented uniformly as
// F_p[Y]/(modulus) with elements stored as coefficient vectors of fixed
// length deg(modulus), low degree first.

namespace qcs {

using u32 = std::uint32_t;
using u64 = std::uint64_t;
using i64 = std::int64_t;

struct domain_error : std::runtime_error {
    explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

struct algebra_error : std::runtime_error {
    explicit algebra_error(const std::string& what) : std::runtime_error(what) {}
};

bool is_prime(u64 n);

// Prime factors of n, ascending, without multiplicity.
std::vector<u64> prime_factors(u64 n);

u64 mod_pow(u64 base, u64 exp, u64 mod);

// Multiplicative order of q modulo n; requires gcd(q, n) = 1.
u32 multiplicative_order(u64 q, u32 n);

class Gf {
public:
    using El = std::vector<u32>;

    // modulus: monic polynomial over F_p, low degree first, degree >= 1.
    Gf(u32 p, std::vector<u32> modulus);
    Gf() : Gf(2, {0, 1}) {}  // default: F_2

    u32 p() const { return p_; }
    u32 deg() const { return static_cast<u32>(modulus_.size() - 1); }
    const std::vector<u32>& modulus() const { return modulus_; }

    El zero() const { return El(deg(), 0); }
    El one() const;
    El from_int(u32 c) const;  // image of c mod p as a constant
    // Element with the given coefficients (length <= deg, padded with zeros).
    El make(std::vector<u32> coeffs) const;

    bool is_zero(const El& x) const;
    El add(const El& x, const El& y) const;
    El sub(const El& x, const El& y) const;
    El neg(const El& x) const;
    El mul(const El& x, const El& y) const;
    El inv(const El& x) const;  // throws domain_error on zero
    El pow(const El& x, u64 e) const;
    // x^(p^k), computed as k successive p-th powers (no exponent overflow).
    El pow_pk(const El& x, u32 k) const;

    bool operator==(const Gf& o) const { return p_ == o.p_ && modulus_ == o.modulus_; }

private:
    u32 p_;
    std::vector<u32> modulus_;
};

Gf make_prime_field(u32 p);

// F_{p^2} = F_p(eta) with mu(Y) = Y^2 - c1*Y - c0 irreducible.
struct QuadExt {
    Gf gf;
    u32 c0 = 0, c1 = 0;

    Gf::El eta() const { return gf.make({0, 1}); }
    // Frobenius x -> x^p.
    Gf::El frobenius(const Gf::El& x) const { return gf.pow_pk(x, 1); }
};

// Canonical irreducible quadratic: Y^2+Y+1 for p = 2, else the
// lexicographically first Y^2 - c0 with c0 ranging over 1..p-1.
QuadExt find_irreducible_quadratic(u32 p);
QuadExt make_quad_ext(u32 p, u32 c0, u32 c1);

// F_{p^L} containing both F_{p^2} and all n-th roots of unity,
// L = lcm(2, ord_n(p)).  The modulus, generator, eta and beta are all
// chosen deterministically so code identities are stable across runs.
struct SplitField {
    Gf gf;
    u32 n = 0;
    u32 L = 0;
    u64 order = 0;    // p^L
    Gf::El generator; // of the multiplicative group
    Gf::El eta;       // root of mu(Y) inside the split field
    Gf::El beta;      // primitive n-th root of unity

    // Embeddings and the inverse maps.  fp2 elements are (a, b) = a + eta*b.
    Gf::El embed_fp(u32 c) const;
    Gf::El embed_fp2(const Gf::El& x) const;
    // Decompose a subfield element as a + eta*b; throws algebra_error if the
    // element does not lie in the embedded F_{p^2}.
    Gf::El to_fp2(const Gf::El& x) const;

    std::vector<std::pair<Gf::El, Gf::El>> subfield_table; // (split el, fp2 el)
};

SplitField make_split_field(u32 n, const QuadExt& ext);

// Deterministic element of multiplicative order exactly n in the split field.
Gf::El primitive_nth_root(const SplitField& sf, u32 n);

}  // namespace qcs

#endif
