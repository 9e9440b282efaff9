#include "qcs/poly.hpp"

#include <algorithm>

namespace qcs {

namespace {
void normalize(const Gf& f, Poly& a) {
    while (!a.c.empty() && f.is_zero(a.c.back())) a.c.pop_back();
}
}  // namespace

Poly p_make(const Gf& f, std::vector<Gf::El> coeffs) {
    Poly a{std::move(coeffs)};
    normalize(f, a);
    return a;
}

Poly p_from_ints(const Gf& f, const std::vector<u32>& coeffs) {
    Poly a;
    a.c.reserve(coeffs.size());
    for (u32 c : coeffs) a.c.push_back(f.from_int(c));
    normalize(f, a);
    return a;
}

Poly p_zero() { return Poly{}; }

Poly p_one(const Gf& f) { return Poly{{f.one()}}; }

Poly p_x(const Gf& f) { return Poly{{f.zero(), f.one()}}; }

Poly p_xn_minus_1(const Gf& f, u32 n) {
    Poly a;
    a.c.assign(n + 1, f.zero());
    a.c[0] = f.neg(f.one());
    a.c[n] = f.one();
    return a;
}

Poly p_scale(const Gf& f, const Poly& a, const Gf::El& s) {
    Poly z;
    z.c.reserve(a.c.size());
    for (const auto& c : a.c) z.c.push_back(f.mul(c, s));
    normalize(f, z);
    return z;
}

Poly p_add(const Gf& f, const Poly& a, const Poly& b) {
    Poly z;
    z.c.resize(std::max(a.c.size(), b.c.size()), f.zero());
    for (std::size_t i = 0; i < a.c.size(); ++i) z.c[i] = a.c[i];
    for (std::size_t i = 0; i < b.c.size(); ++i) z.c[i] = f.add(z.c[i], b.c[i]);
    normalize(f, z);
    return z;
}

Poly p_sub(const Gf& f, const Poly& a, const Poly& b) { return p_add(f, a, p_neg(f, b)); }

Poly p_neg(const Gf& f, const Poly& a) {
    Poly z;
    z.c.reserve(a.c.size());
    for (const auto& c : a.c) z.c.push_back(f.neg(c));
    return z;
}

Poly p_mul(const Gf& f, const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return p_zero();
    Poly z;
    z.c.assign(a.c.size() + b.c.size() - 1, f.zero());
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        if (f.is_zero(a.c[i])) continue;
        for (std::size_t j = 0; j < b.c.size(); ++j)
            z.c[i + j] = f.add(z.c[i + j], f.mul(a.c[i], b.c[j]));
    }
    normalize(f, z);
    return z;
}

std::pair<Poly, Poly> p_divmod(const Gf& f, const Poly& a, const Poly& b) {
    if (b.is_zero()) throw domain_error("p_divmod: division by zero polynomial");
    Poly r = a;
    if (a.deg() < b.deg()) return {p_zero(), r};
    Poly q;
    q.c.assign(a.deg() - b.deg() + 1, f.zero());
    Gf::El lead_inv = f.inv(b.c.back());
    for (int i = r.deg(); i >= b.deg(); --i) {
        if (f.is_zero(r.c[i])) continue;
        Gf::El coef = f.mul(r.c[i], lead_inv);
        q.c[i - b.deg()] = coef;
        for (int j = 0; j <= b.deg(); ++j)
            r.c[i - b.deg() + j] = f.sub(r.c[i - b.deg() + j], f.mul(coef, b.c[j]));
    }
    normalize(f, q);
    normalize(f, r);
    return {q, r};
}

Poly p_mod(const Gf& f, const Poly& a, const Poly& b) { return p_divmod(f, a, b).second; }

Poly p_divexact(const Gf& f, const Poly& a, const Poly& b) {
    auto [q, r] = p_divmod(f, a, b);
    if (!r.is_zero()) throw algebra_error("p_divexact: inexact division");
    return q;
}

Poly p_monic(const Gf& f, const Poly& a) {
    if (a.is_zero()) return a;
    return p_scale(f, a, f.inv(a.c.back()));
}

Poly p_gcd(const Gf& f, Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = p_mod(f, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return p_monic(f, a);
}

Gf::El p_eval(const Gf& f, const Poly& a, const Gf::El& x) {
    Gf::El acc = f.zero();
    for (auto it = a.c.rbegin(); it != a.c.rend(); ++it) acc = f.add(f.mul(acc, x), *it);
    return acc;
}

Poly p_mod_xn1(const Gf& f, const Poly& a, u32 n) {
    Poly z;
    z.c.assign(n, f.zero());
    for (std::size_t i = 0; i < a.c.size(); ++i)
        z.c[i % n] = f.add(z.c[i % n], a.c[i]);
    normalize(f, z);
    return z;
}

Poly p_mulmod_xn1(const Gf& f, const Poly& a, const Poly& b, u32 n) {
    return p_mod_xn1(f, p_mul(f, a, b), n);
}

std::vector<Gf::El> p_residue(const Gf& f, const Poly& a, u32 n) {
    if (a.deg() >= static_cast<int>(n)) throw domain_error("p_residue: degree >= n");
    std::vector<Gf::El> r(n, f.zero());
    for (std::size_t i = 0; i < a.c.size(); ++i) r[i] = a.c[i];
    return r;
}

Poly p_from_residue(const Gf& f, const std::vector<Gf::El>& r) { return p_make(f, r); }

Poly lift_fp_to_fp2(const Gf& fp2, const Poly& a) {
    Poly z;
    z.c.reserve(a.c.size());
    for (const auto& c : a.c) z.c.push_back(fp2.make({c[0], 0}));
    return z;
}

Poly lift_fp2_to_split(const SplitField& sf, const Poly& a) {
    Poly z;
    z.c.reserve(a.c.size());
    for (const auto& c : a.c) z.c.push_back(sf.embed_fp2(c));
    return z;
}

Poly project_split_to_fp2(const SplitField& sf, const Gf& fp2, const Poly& a) {
    Poly z;
    z.c.reserve(a.c.size());
    for (const auto& c : a.c) z.c.push_back(sf.to_fp2(c));
    (void)fp2;
    return z;
}

Poly project_fp2_to_fp(const Gf& fp, const Poly& a) {
    Poly z;
    z.c.reserve(a.c.size());
    for (const auto& c : a.c) {
        if (c[1] != 0) throw algebra_error("project_fp2_to_fp: coefficient not in F_p");
        z.c.push_back(fp.from_int(c[0]));
    }
    normalize(fp, z);
    return z;
}

Poly conjugate_fp2(const QuadExt& ext, const Poly& a) {
    Poly z;
    z.c.reserve(a.c.size());
    for (const auto& c : a.c) z.c.push_back(ext.frobenius(c));
    return z;
}

Poly frobenius_substitute(const Gf& f, const Poly& a, u32 n, i64 m) {
    i64 mm = ((m % n) + n) % n;
    if (mm * mm % n != 1) throw domain_error("frobenius_substitute: m^2 != 1 mod n");
    std::vector<Gf::El> r(n, f.zero());
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        u32 j = static_cast<u32>(((n - mm % n) * (i % n)) % n);  // -m*i mod n
        r[j] = f.add(r[j], a.c[i]);
    }
    return p_make(f, r);
}

Poly crt_combine(const Gf& f, const std::vector<std::pair<Poly, Poly>>& residues) {
    if (residues.empty()) return p_zero();
    Poly value = p_mod(f, residues[0].first, residues[0].second);
    Poly modulus = residues[0].second;
    for (std::size_t i = 1; i < residues.size(); ++i) {
        const Poly& v = residues[i].first;
        const Poly& m = residues[i].second;
        if (p_gcd(f, modulus, m).deg() != 0)
            throw domain_error("crt_combine: moduli not coprime");
        // value + modulus * t with  modulus * t = v - value mod m
        Poly diff = p_mod(f, p_sub(f, v, value), m);
        // invert modulus mod m by extended Euclid via gcd coefficients
        // (small degrees: solve with the iterative scheme below)
        Poly r0 = m, r1 = p_mod(f, modulus, m);
        Poly s0 = p_zero(), s1 = p_one(f);
        while (!r1.is_zero() && r1.deg() > 0) {
            auto [q, r2] = p_divmod(f, r0, r1);
            Poly s2 = p_sub(f, s0, p_mul(f, q, s1));
            r0 = std::move(r1); r1 = std::move(r2);
            s0 = std::move(s1); s1 = std::move(s2);
        }
        if (r1.is_zero()) throw domain_error("crt_combine: moduli not coprime");
        Poly inv = p_scale(f, s1, f.inv(r1.c[0]));  // modulus^{-1} mod m
        Poly t = p_mod(f, p_mul(f, diff, inv), m);
        value = p_add(f, value, p_mul(f, modulus, t));
        modulus = p_mul(f, modulus, m);
        value = p_mod(f, value, modulus);
    }
    return value;
}

}  // namespace qcs
