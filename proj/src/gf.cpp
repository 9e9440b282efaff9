#include "qcs/gf.hpp"

#include <algorithm>
#include <numeric>

namespace qcs {

bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<u64> prime_factors(u64 n) {
    std::vector<u64> out;
    for (u64 d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

u64 mod_pow(u64 base, u64 exp, u64 mod) {
    unsigned __int128 acc = 1, b = base % mod;
    while (exp) {
        if (exp & 1) acc = acc * b % mod;
        b = b * b % mod;
        exp >>= 1;
    }
    return static_cast<u64>(acc);
}

u32 multiplicative_order(u64 q, u32 n) {
    if (n == 1) return 1;
    if (std::gcd(q % n, static_cast<u64>(n)) != 1)
        throw domain_error("multiplicative_order: gcd(q, n) != 1");
    u64 x = q % n;
    u32 ord = 1;
    while (x != 1) {
        x = x * q % n;
        ++ord;
    }
    return ord;
}

Gf::Gf(u32 p, std::vector<u32> modulus) : p_(p), modulus_(std::move(modulus)) {
    if (!is_prime(p_)) throw domain_error("Gf: p must be prime");
    if (modulus_.size() < 2 || modulus_.back() % p_ != 1)
        throw domain_error("Gf: modulus must be monic of degree >= 1");
    for (auto& c : modulus_) c %= p_;
}

Gf::El Gf::one() const {
    El x(deg(), 0);
    x[0] = 1 % p_;
    return x;
}

Gf::El Gf::from_int(u32 c) const {
    El x(deg(), 0);
    x[0] = c % p_;
    return x;
}

Gf::El Gf::make(std::vector<u32> coeffs) const {
    if (coeffs.size() > deg()) throw domain_error("Gf::make: too many coefficients");
    coeffs.resize(deg(), 0);
    for (auto& c : coeffs) c %= p_;
    return coeffs;
}

bool Gf::is_zero(const El& x) const {
    return std::all_of(x.begin(), x.end(), [](u32 c) { return c == 0; });
}

Gf::El Gf::add(const El& x, const El& y) const {
    El z(deg());
    for (u32 i = 0; i < deg(); ++i) z[i] = (x[i] + y[i]) % p_;
    return z;
}

Gf::El Gf::sub(const El& x, const El& y) const {
    El z(deg());
    for (u32 i = 0; i < deg(); ++i) z[i] = (x[i] + p_ - y[i]) % p_;
    return z;
}

Gf::El Gf::neg(const El& x) const {
    El z(deg());
    for (u32 i = 0; i < deg(); ++i) z[i] = (p_ - x[i]) % p_;
    return z;
}

Gf::El Gf::mul(const El& x, const El& y) const {
    const u32 d = deg();
    std::vector<u64> acc(2 * d - 1, 0);
    for (u32 i = 0; i < d; ++i) {
        if (x[i] == 0) continue;
        for (u32 j = 0; j < d; ++j) acc[i + j] += static_cast<u64>(x[i]) * y[j];
    }
    // reduce by the monic modulus, high degree first
    for (u32 k = 2 * d - 2; k + 1 > d; --k) {
        u64 c = acc[k] % p_;
        if (c == 0) continue;
        for (u32 j = 0; j < d; ++j)
            acc[k - d + j] += static_cast<u64>(p_ - modulus_[j]) * c;
        acc[k] = 0;
    }
    El z(d);
    for (u32 i = 0; i < d; ++i) z[i] = static_cast<u32>(acc[i] % p_);
    return z;
}

Gf::El Gf::pow(const El& x, u64 e) const {
    El acc = one(), b = x;
    while (e) {
        if (e & 1) acc = mul(acc, b);
        b = mul(b, b);
        e >>= 1;
    }
    return acc;
}

Gf::El Gf::pow_pk(const El& x, u32 k) const {
    El z = x;
    for (u32 i = 0; i < k; ++i) z = pow(z, p_);
    return z;
}

Gf::El Gf::inv(const El& x) const {
    if (is_zero(x)) throw domain_error("Gf::inv: zero has no inverse");
    // x^(p^L - 2) without forming p^L: (p^L - 2) = sum over the base-p digits.
    // Simpler and safe for every field size used here: extended Euclid over
    // F_p[Y] between x (as a polynomial) and the modulus.
    u32 p = p_;
    auto pdeg = [](const std::vector<u32>& a) {
        for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i)
            if (a[i] != 0) return i;
        return -1;
    };
    auto scalar_inv = [p](u32 a) {
        u64 r = 1, b = a % p, e = p - 2;
        while (e) {
            if (e & 1) r = r * b % p;
            b = b * b % p;
            e >>= 1;
        }
        return static_cast<u32>(r);
    };
    std::vector<u32> r0 = modulus_, r1(x.begin(), x.end());
    std::vector<u32> s0(1, 0), s1(1, 1);
    while (pdeg(r1) >= 0) {
        int d0 = pdeg(r0), d1 = pdeg(r1);
        if (d0 < d1) {
            std::swap(r0, r1);
            std::swap(s0, s1);
            continue;
        }
        u32 q = static_cast<u32>(static_cast<u64>(r0[d0]) * scalar_inv(r1[d1]) % p);
        u32 shift = static_cast<u32>(d0 - d1);
        for (int i = 0; i <= d1; ++i)
            r0[i + shift] = (r0[i + shift] + static_cast<u64>(p - q) * r1[i]) % p;
        if (s0.size() < s1.size() + shift) s0.resize(s1.size() + shift, 0);
        for (std::size_t i = 0; i < s1.size(); ++i)
            s0[i + shift] = (s0[i + shift] + static_cast<u64>(p - q) * s1[i]) % p;
    }
    int d0 = pdeg(r0);
    if (d0 != 0) throw algebra_error("Gf::inv: element not invertible (modulus not irreducible?)");
    u32 lead = scalar_inv(r0[0]);
    El z(deg(), 0);
    for (std::size_t i = 0; i < s0.size() && i < z.size(); ++i)
        z[i] = static_cast<u32>(static_cast<u64>(s0[i]) * lead % p);
    return z;
}

Gf make_prime_field(u32 p) { return Gf(p, {0, 1}); }

namespace {

// Irreducibility of a monic polynomial f over F_p via the Frobenius test:
// Y^(p^L) == Y mod f and gcd(Y^(p^(L/r)) - Y, f) = 1 for each prime r | L.
bool irreducible_over_fp(u32 p, const std::vector<u32>& f) {
    Gf ring(p, f);  // quotient ring; arithmetic works even if f is reducible
    const u32 L = ring.deg();
    if (L == 1) return true;
    Gf::El y = ring.make({0, 1});
    Gf::El yq = ring.pow_pk(y, L);
    if (yq != y) return false;
    for (u64 r : prime_factors(L)) {
        Gf::El g = ring.sub(ring.pow_pk(y, L / static_cast<u32>(r)), y);
        // gcd(g, f) must be 1: equivalent to g invertible in the quotient ring
        try {
            ring.inv(g);
        } catch (const std::exception&) {
            return false;
        }
    }
    return true;
}

std::vector<u32> nth_modulus_candidate(u32 p, u32 L, u64 v) {
    std::vector<u32> f(L + 1, 0);
    f[L] = 1;
    for (u32 i = 0; i < L && v; ++i) {
        f[i] = static_cast<u32>(v % p);
        v /= p;
    }
    return f;
}

}  // namespace

QuadExt find_irreducible_quadratic(u32 p) {
    if (!is_prime(p)) throw domain_error("find_irreducible_quadratic: p must be prime");
    if (p == 2) return make_quad_ext(2, 1, 1);  // Y^2 + Y + 1
    for (u32 c0 = 1; c0 < p; ++c0) {
        // Y^2 - c0 irreducible iff c0 is a quadratic non-residue
        if (mod_pow(c0, (p - 1) / 2, p) == p - 1) return make_quad_ext(p, c0, 0);
    }
    throw algebra_error("find_irreducible_quadratic: no non-residue found");
}

QuadExt make_quad_ext(u32 p, u32 c0, u32 c1) {
    // mu(Y) = Y^2 - c1*Y - c0  ->  modulus coefficients (-c0, -c1, 1)
    std::vector<u32> mod = {(p - c0 % p) % p, (p - c1 % p) % p, 1};
    // exhaustive root check
    for (u32 y = 0; y < p; ++y)
        if ((static_cast<u64>(y) * y + mod[1] * static_cast<u64>(y) + mod[0]) % p == 0)
            throw domain_error("make_quad_ext: mu has a root in F_p");
    return QuadExt{Gf(p, mod), c0 % p, c1 % p};
}

Gf::El SplitField::embed_fp(u32 c) const { return gf.from_int(c); }

Gf::El SplitField::embed_fp2(const Gf::El& x) const {
    Gf::El z = gf.from_int(x[0]);
    return gf.add(z, gf.mul(gf.from_int(x[1]), eta));
}

Gf::El SplitField::to_fp2(const Gf::El& x) const {
    for (const auto& [el, fp2] : subfield_table)
        if (el == x) return fp2;
    throw algebra_error("SplitField::to_fp2: element not in the embedded F_{p^2}");
}

SplitField make_split_field(u32 n, const QuadExt& ext) {
    const u32 p = ext.gf.p();
    if (n == 0 || std::gcd(n, p) != 1)
        throw domain_error("make_split_field: need gcd(n, p) = 1");
    u32 L = std::lcm(2u, multiplicative_order(p, n));

    // overflow guard for p^L
    u64 order = 1;
    for (u32 i = 0; i < L; ++i) {
        if (order > (u64(1) << 62) / p)
            throw domain_error("make_split_field: field too large");
        order *= p;
    }

    // deterministic modulus: first irreducible in candidate enumeration order
    std::vector<u32> modulus;
    for (u64 v = 0;; ++v) {
        auto f = nth_modulus_candidate(p, L, v);
        if (irreducible_over_fp(p, f)) {
            modulus = std::move(f);
            break;
        }
    }

    SplitField sf{Gf(p, modulus), n, L, order, {}, {}, {}};

    // deterministic generator of the multiplicative group
    auto factors = prime_factors(order - 1);
    for (u64 v = 1;; ++v) {
        std::vector<u32> coeffs;
        u64 w = v;
        while (w) {
            coeffs.push_back(static_cast<u32>(w % p));
            w /= p;
        }
        if (coeffs.size() > L) throw algebra_error("make_split_field: no generator found");
        Gf::El cand = sf.gf.make(coeffs);
        bool ok = true;
        for (u64 r : factors)
            if (sf.gf.pow(cand, (order - 1) / r) == sf.gf.one()) {
                ok = false;
                break;
            }
        if (ok) {
            sf.generator = cand;
            break;
        }
    }

    // eta: first power of the F_{p^2}-subfield generator that is a root of mu
    u64 sub_ord = static_cast<u64>(p) * p - 1;
    Gf::El zeta = sf.gf.pow(sf.generator, (order - 1) / sub_ord);
    const auto& mod = ext.gf.modulus();  // (-c0, -c1, 1)
    bool found = false;
    Gf::El z = sf.gf.one();
    for (u64 i = 0; i < sub_ord; ++i) {
        Gf::El val = sf.gf.add(sf.gf.mul(z, z),
                               sf.gf.add(sf.gf.mul(sf.gf.from_int(mod[1]), z),
                                         sf.gf.from_int(mod[0])));
        if (sf.gf.is_zero(val)) {
            sf.eta = z;
            found = true;
            break;
        }
        z = sf.gf.mul(z, zeta);
    }
    if (!found) throw algebra_error("make_split_field: mu has no root in split field");

    // subfield lookup for projecting coefficients back to F_{p^2}
    for (u32 a = 0; a < p; ++a)
        for (u32 b = 0; b < p; ++b) {
            Gf::El fp2 = ext.gf.make({a, b});
            sf.subfield_table.emplace_back(sf.embed_fp2(fp2), fp2);
        }

    sf.beta = primitive_nth_root(sf, n);
    return sf;
}

Gf::El primitive_nth_root(const SplitField& sf, u32 n) {
    if (n == 0 || std::gcd(n, sf.gf.p()) != 1)
        throw domain_error("primitive_nth_root: need gcd(n, p) = 1");
    if ((sf.order - 1) % n != 0)
        throw domain_error("primitive_nth_root: n does not divide p^L - 1");
    Gf::El beta = sf.gf.pow(sf.generator, (sf.order - 1) / n);
    for (u64 r : prime_factors(n))
        if (sf.gf.pow(beta, n / r) == sf.gf.one())
            throw algebra_error("primitive_nth_root: order check failed");
    return beta;
}

}  // namespace qcs
