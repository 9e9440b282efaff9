#ifndef QCS_SYMPLECTIC_HPP
#define QCS_SYMPLECTIC_HPP

#include "qcs/poly.hpp"

// The classical F_p^n x F_p^n picture: joint weight, the sigma_m involution,
// the sigma-symplectic form, isotropy, centralizer kernels, and the
// simultaneous cyclic shift.

namespace qcs {

struct PauliVec {
    std::vector<u32> a, b;  // entries mod p, |a| = |b| = n

    u32 n() const { return static_cast<u32>(a.size()); }
    bool operator==(const PauliVec& o) const { return a == o.a && b == o.b; }
};

PauliVec pv_zero(u32 n);
bool pv_is_zero(const PauliVec& v);
PauliVec pv_add(u32 p, const PauliVec& u, const PauliVec& v);

u32 joint_weight(const PauliVec& v);

// The involution i -> m*i mod n; requires m^2 = 1 mod n.
struct Sigma {
    u32 n = 0;
    u32 m = 0;  // reduced representative in [0, n)

    Sigma(u32 n, i64 m_raw);
    u32 perm(u32 i) const { return static_cast<u32>(static_cast<u64>(m) * i % n); }
    std::vector<u32> apply(const std::vector<u32>& x) const;  // (sigma x)_i = x_{m i}
};

u32 sigma_form(u32 p, const PauliVec& u, const PauliVec& v, const Sigma& sigma);

// (a, b) -> (a, sigma b)
PauliVec apply_sigma_half(const PauliVec& v, const Sigma& sigma);

// right cyclic shift of both halves
PauliVec simultaneous_shift(const PauliVec& v);

// multiplication by eta: (a, b) -> (c0 b, a + c1 b)
PauliVec eta_multiply(const QuadExt& ext, const PauliVec& v);

// An F_p-subspace given by a spanning set; kept row-reduced internally.
class Basis {
public:
    Basis(u32 n, u32 p) : n_(n), p_(p) {}

    u32 n() const { return n_; }
    u32 p() const { return p_; }
    u32 dim() const { return static_cast<u32>(rows_.size()); }
    const std::vector<PauliVec>& rows() const { return rows_; }

    // add a vector to the span; returns false if already contained
    bool insert(const PauliVec& v);
    bool contains(const PauliVec& v) const;

private:
    std::vector<u32> flat(const PauliVec& v) const;
    PauliVec unflat(const std::vector<u32>& x) const;
    // reduce x against the rows in place; returns pivot column or -1
    int reduce(std::vector<u32>& x) const;

    u32 n_, p_;
    std::vector<PauliVec> rows_;      // row-reduced, pivot order
    std::vector<int> pivots_;
};

Basis span_of(u32 n, u32 p, const std::vector<PauliVec>& vecs);

bool is_sigma_isotropic(u32 p, const Basis& s, const Sigma& sigma);

Basis apply_sigma(const Basis& s, const Sigma& sigma);

// kernel of the sigma-form functionals of s: all x with <x, u>_sigma = 0
Basis centralizer(u32 p, const Basis& s, const Sigma& sigma);

// Full polynomial identity a(X)d(X^{-m}) - b(X)c(X^{-m}) = 0 mod X^n - 1.
bool polynomial_isotropy_check(u32 p, const PauliVec& u, const PauliVec& v, i64 m);

// true when s contains no (0, b) with b != 0
bool is_uniquely_cyclic(const Basis& s);

bool closed_under_shift(u32 p, const Basis& s);
bool closed_under_eta(const QuadExt& ext, const Basis& s);

Poly pv_half_to_poly(const Gf& fp, const std::vector<u32>& half);

}  // namespace qcs

#endif
