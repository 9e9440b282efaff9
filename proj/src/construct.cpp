#include "qcs/construct.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace qcs {

GoodTriplet validate_good_triplet(u32 n, u32 p, i64 m_raw) {
    if (n < 2) throw domain_error("triplet: n must be at least 2");
    if (!is_prime(p)) throw domain_error("triplet: p must be prime");
    if (std::gcd(static_cast<u64>(n), static_cast<u64>(p)) != 1)
        throw domain_error("triplet: n and p must be coprime");
    i64 m = ((m_raw % n) + n) % n;
    if (static_cast<u64>(m) * m % n != 1)
        throw domain_error("triplet: m^2 != 1 mod n");
    u32 ord = multiplicative_order(p, n);
    if (ord % 2 != 0)
        throw domain_error("triplet: ord_n(p) is odd, X^n - 1 has no even-degree "
                           "factors over F_p and every isotropic ideal is trivial");
    GoodTriplet tr;
    tr.n = n;
    tr.p = p;
    tr.m = m;
    if (m == n - 1) {
        tr.t = 0;  // n | p^0 + m
        return tr;
    }
    // smallest even t >= 2 with p^t = -m mod n
    const u64 target = (n - static_cast<u64>(m)) % n;
    bool any = false;
    for (u32 t = 1; t <= 2 * ord; ++t) {
        if (mod_pow(p, t, n) != target) continue;
        any = true;
        if (t % 2 == 0) {
            tr.t = t;
            return tr;
        }
    }
    if (any)
        throw domain_error("triplet: n | p^t + m only for odd t; the construction "
                           "needs an even exponent when m != -1");
    throw domain_error("triplet: no t with n | p^t + m, the triplet is not good");
}

Route strategy_select(u32 n, u32 p) {
    Route r;
    if (n < 2 || !is_prime(p) ||
        std::gcd(static_cast<u64>(n), static_cast<u64>(p)) != 1) {
        r.reason = "need n >= 2, p prime, gcd(n, p) = 1";
        return r;
    }
    u32 ord = multiplicative_order(p, n);
    if (ord % 2 != 0) {
        r.kind = RouteKind::Fail;
        r.reason = "ord_n(p) = " + std::to_string(ord) + " is odd: only trivial ideals";
        return r;
    }
    if (ord % 4 == 0) {
        u32 t = ord / 4;
        if (mod_pow(p, 2ull * t, n) == n - 1ull) {
            // p^{2t} is a square root of 1 equal to -1, so m = -p^{2t} = 1
            r.kind = RouteKind::FrobeniusSquareRoot;
            r.m = 1;
            r.reason = "ord_n(p) = 4t with p^{2t} = -1 mod n (t = " + std::to_string(t) + ")";
            return r;
        }
    }
    r.kind = RouteKind::MinusOne;
    r.m = -1;
    r.reason = "ord_n(p) even: m = -1 with t = 0";
    return r;
}

Poly build_g(const Gf& fp, const FactorSet& fp_factors, const std::vector<u32>& extra,
             std::vector<std::vector<u32>>* cosets_out) {
    std::vector<u32> chosen;
    for (const auto& fac : fp_factors.factors)
        if (fac.poly.deg() % 2 == 1) chosen.push_back(fac.index);
    for (u32 idx : extra) {
        if (!fp_factors.has_index(idx))
            throw domain_error("build_g: no factor of X^n - 1 over F_p with index " +
                               std::to_string(idx));
        if (std::find(chosen.begin(), chosen.end(), idx) == chosen.end())
            chosen.push_back(idx);
    }
    std::sort(chosen.begin(), chosen.end());
    Poly g = p_one(fp);
    if (cosets_out) cosets_out->clear();
    for (u32 idx : chosen) {
        const Factor& fac = fp_factors.by_index(idx);
        g = p_mul(fp, g, fac.poly);
        if (cosets_out) cosets_out->push_back(fac.coset);
    }
    return g;
}

std::vector<ConjugatePair> pair_conjugate_factors(
    const QuadExt& ext, const FactorSet& fp2_factors,
    const std::vector<std::vector<u32>>& g_cosets) {
    const u32 n = fp2_factors.n;
    const u32 p = ext.gf.p();
    std::vector<bool> in_g(n, false);
    for (const auto& coset : g_cosets)
        for (u32 e : coset) in_g[e] = true;

    std::vector<const Factor*> remaining;
    for (const auto& fac : fp2_factors.factors)
        if (!in_g[fac.coset.front()]) remaining.push_back(&fac);

    std::vector<ConjugatePair> pairs;
    std::vector<bool> used(remaining.size(), false);
    for (std::size_t i = 0; i < remaining.size(); ++i) {
        if (used[i]) continue;
        // the conjugate factor has coset p * C mod n
        std::vector<u32> conj;
        for (u32 e : remaining[i]->coset)
            conj.push_back(static_cast<u32>(static_cast<u64>(e) * p % n));
        std::sort(conj.begin(), conj.end());
        std::size_t j = i + 1;
        for (; j < remaining.size(); ++j)
            if (!used[j] && remaining[j]->coset == conj) break;
        if (j == remaining.size())
            throw algebra_error("pair_conjugate_factors: factor h_" +
                                std::to_string(remaining[i]->index) +
                                " has no distinct Frobenius conjugate; its exponents "
                                "belong in g(X)");
        if (!(conjugate_fp2(ext, remaining[i]->poly) == remaining[j]->poly))
            throw algebra_error("pair_conjugate_factors: coefficient Frobenius does "
                                "not map the paired factors onto each other");
        used[i] = used[j] = true;
        pairs.push_back(ConjugatePair{*remaining[i], *remaining[j]});
    }
    return pairs;
}

Poly choose_h(const QuadExt& ext, u32 n, const std::vector<ConjugatePair>& pairs,
              const HSelection& sel, std::vector<std::vector<u32>>* cosets_out) {
    std::vector<const Factor*> picked;
    if (!sel.auto_mode) {
        for (const auto& pr : pairs) {
            bool first = std::find(sel.indices.begin(), sel.indices.end(), pr.first.index) !=
                         sel.indices.end();
            bool second = std::find(sel.indices.begin(), sel.indices.end(), pr.second.index) !=
                          sel.indices.end();
            if (first == second)
                throw domain_error("choose_h: exactly one of factors h_" +
                                   std::to_string(pr.first.index) + ", h_" +
                                   std::to_string(pr.second.index) + " must be selected");
            picked.push_back(first ? &pr.first : &pr.second);
        }
        if (sel.indices.size() != pairs.size())
            throw domain_error("choose_h: selection size does not match the number of "
                               "conjugate pairs");
    } else {
        if (pairs.size() > 20)
            throw domain_error("choose_h: too many conjugate pairs for exhaustive "
                               "selection");
        u32 best_len = 0;
        std::vector<u32> best_idx;
        u64 best_mask = 0;
        for (u64 mask = 0; mask < (1ull << pairs.size()); ++mask) {
            std::vector<u32> exps, idx;
            for (std::size_t i = 0; i < pairs.size(); ++i) {
                const Factor& f = (mask >> i & 1) ? pairs[i].second : pairs[i].first;
                exps.insert(exps.end(), f.coset.begin(), f.coset.end());
                idx.push_back(f.index);
            }
            std::sort(exps.begin(), exps.end());
            std::sort(idx.begin(), idx.end());
            u32 len = pairs.empty() ? 0 : best_run_over_primitive_roots(exps, n).len;
            if (len > best_len || (len == best_len && (best_idx.empty() || idx < best_idx))) {
                best_len = len;
                best_idx = idx;
                best_mask = mask;
            }
        }
        for (std::size_t i = 0; i < pairs.size(); ++i)
            picked.push_back((best_mask >> i & 1) ? &pairs[i].second : &pairs[i].first);
    }
    Poly h = p_one(ext.gf);
    if (cosets_out) cosets_out->clear();
    for (const Factor* f : picked) {
        h = p_mul(ext.gf, h, f->poly);
        if (cosets_out) cosets_out->push_back(f->coset);
    }
    return h;
}

Poly compute_a(const QuadExt& ext, u32 n, const Poly& g_fp, const Poly& h,
               const Poly& hbar) {
    const Gf& fp2 = ext.gf;
    Gf fp = make_prime_field(fp2.p());
    Poly g2 = lift_fp_to_fp2(fp2, g_fp);
    std::vector<std::pair<Poly, Poly>> residues;
    Gf::El eta = ext.eta();
    if (h.deg() >= 1) residues.push_back({Poly{{ext.frobenius(eta)}}, h});
    if (hbar.deg() >= 1) residues.push_back({Poly{{eta}}, hbar});
    if (g2.deg() >= 1) residues.push_back({p_zero(), g2});
    Poly a2 = residues.empty() ? p_zero() : crt_combine(fp2, residues);

    // the solution must be Frobenius-fixed, i.e. have F_p coefficients
    Poly a = project_fp2_to_fp(fp, a2);
    if (!p_mod(fp2, p_sub(fp2, a2, Poly{{ext.frobenius(eta)}}), h).is_zero() && h.deg() >= 1)
        throw algebra_error("compute_a: a != eta^p mod h");
    if (!p_mod(fp2, p_sub(fp2, a2, Poly{{eta}}), hbar).is_zero() && hbar.deg() >= 1)
        throw algebra_error("compute_a: a != eta mod hbar");
    if (!g_fp.is_zero() && g_fp.deg() >= 1 && !p_mod(fp, a, g_fp).is_zero())
        throw algebra_error("compute_a: a != 0 mod g");
    // mu(a) = a^2 - c1 a - c0 must vanish modulo (X^n - 1)/g
    Poly q = p_divexact(fp, p_xn_minus_1(fp, n), g_fp);
    if (q.deg() >= 1) {
        Poly mu = p_sub(fp, p_mul(fp, a, a),
                        p_add(fp, p_scale(fp, a, fp.from_int(ext.c1)),
                              Poly{{fp.from_int(ext.c0)}}));
        if (!p_mod(fp, mu, q).is_zero())
            throw algebra_error("compute_a: mu(a) != 0 mod (X^n - 1)/g");
    }
    return a;
}

Blueprint construct_code(u32 n, u32 p, i64 m, const std::vector<u32>& g_extra,
                         const HSelection& h_sel) {
    Blueprint bp;
    bp.triplet = validate_good_triplet(n, p, m);
    bp.ext = find_irreducible_quadratic(p);
    SplitField sf = make_split_field(n, bp.ext);
    Gf fp = make_prime_field(p);

    FactorSet fp_factors = factor_xn_minus_1(n, bp.ext, sf, false);
    FactorSet fp2_factors = factor_xn_minus_1(n, bp.ext, sf, true);

    bp.g = build_g(fp, fp_factors, g_extra, &bp.g_cosets);
    auto pairs = pair_conjugate_factors(bp.ext, fp2_factors, bp.g_cosets);
    bp.h = choose_h(bp.ext, n, pairs, h_sel, &bp.h_cosets);
    bp.hbar = conjugate_fp2(bp.ext, bp.h);

    // sanity: g * h * hbar = X^n - 1 over F_{p^2}
    Poly prod = p_mul(bp.ext.gf, lift_fp_to_fp2(bp.ext.gf, bp.g),
                      p_mul(bp.ext.gf, bp.h, bp.hbar));
    if (!(prod == p_xn_minus_1(bp.ext.gf, n)))
        throw algebra_error("construct_code: g * h * hbar != X^n - 1");

    bp.a = compute_a(bp.ext, n, bp.g, bp.h, bp.hbar);
    // f = c0^{-1} a g mod X^n - 1
    u32 c0inv = 1;
    {
        u64 r = 1, b = bp.ext.c0 % p, e = p - 2;
        if (p > 2) {
            while (e) {
                if (e & 1) r = r * b % p;
                b = b * b % p;
                e >>= 1;
            }
            c0inv = static_cast<u32>(r);
        } else {
            c0inv = bp.ext.c0;  // p = 2: c0 = 1
        }
    }
    bp.f = p_mod_xn1(fp, p_scale(fp, p_mul(fp, bp.a, bp.g), fp.from_int(c0inv)), n);
    bp.k = static_cast<u32>(bp.g.deg());
    for (const auto& coset : bp.h_cosets)
        bp.h_exponents.insert(bp.h_exponents.end(), coset.begin(), coset.end());
    std::sort(bp.h_exponents.begin(), bp.h_exponents.end());
    return bp;
}

IdealBasis assemble(const Blueprint& bp) {
    const u32 n = bp.triplet.n, p = bp.triplet.p;
    Gf fp = make_prime_field(p);
    IdealBasis ib{Basis(n, p), PauliVec{}, PauliVec{}};
    auto residue_u32 = [&](const Poly& poly) {
        std::vector<u32> r(n, 0);
        for (u32 i = 0; i <= static_cast<u32>(poly.deg()) && !poly.is_zero(); ++i)
            r[i] = poly.c[i][0];
        return r;
    };
    ib.gen1 = PauliVec{residue_u32(bp.g), residue_u32(bp.f)};
    ib.gen2 = eta_multiply(bp.ext, ib.gen1);
    PauliVec v1 = ib.gen1, v2 = ib.gen2;
    for (u32 i = 0; i < n; ++i) {
        ib.S.insert(v1);
        ib.S.insert(v2);
        v1 = simultaneous_shift(v1);
        v2 = simultaneous_shift(v2);
    }
    if (ib.S.dim() != n - bp.k)
        throw algebra_error("assemble: dim S = " + std::to_string(ib.S.dim()) +
                            ", expected n - deg g = " + std::to_string(n - bp.k));
    Sigma sigma(n, bp.triplet.m);
    if (!is_sigma_isotropic(p, ib.S, sigma))
        throw algebra_error("assemble: S is not sigma-isotropic");
    return ib;
}

const Poly& centralizer_generator(const Blueprint& bp) { return bp.h; }

// Scalar inverse of c0 mod p; the second half of every centralizer element
// carries this factor so that (u, v) <-> u + eta*v sends the set onto the
// h-multiples.
static u32 c0_inverse(const Blueprint& bp) {
    const u32 p = bp.triplet.p;
    u64 r = 1, b = bp.ext.c0 % p, e = p - 2;
    if (p == 2) return bp.ext.c0;
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return static_cast<u32>(r);
}

Basis z_set_basis(const Blueprint& bp) {
    const u32 n = bp.triplet.n, p = bp.triplet.p;
    Gf fp = make_prime_field(p);
    Poly q = p_divexact(fp, p_xn_minus_1(fp, n), bp.g);
    const Gf::El c0inv = fp.from_int(c0_inverse(bp));
    q = p_scale(fp, q, c0inv);
    Poly ascale = p_scale(fp, bp.a, c0inv);
    Basis z(n, p);
    auto residue_u32 = [&](const Poly& poly) {
        std::vector<u32> r(n, 0);
        for (u32 i = 0; i <= static_cast<u32>(poly.deg()) && !poly.is_zero(); ++i)
            r[i] = poly.c[i][0];
        return r;
    };
    // (u, c0^{-1} u a) for u ranging over the monomials
    Poly xa = ascale;
    Poly xi = p_one(fp);
    for (u32 i = 0; i < n; ++i) {
        z.insert(PauliVec{residue_u32(xi), residue_u32(xa)});
        xi = p_mulmod_xn1(fp, xi, p_x(fp), n);
        xa = p_mulmod_xn1(fp, xa, p_x(fp), n);
    }
    // (0, v (X^n - 1)/g) for v of degree < deg g
    Poly xq = q;
    for (u32 j = 0; j < bp.k; ++j) {
        z.insert(PauliVec{std::vector<u32>(n, 0), residue_u32(xq)});
        xq = p_mulmod_xn1(fp, xq, p_x(fp), n);
    }
    return z;
}

std::vector<PauliVec> z_set_elements(const Blueprint& bp) {
    const u32 n = bp.triplet.n, p = bp.triplet.p;
    double log_size = (n + bp.k) * std::log2(static_cast<double>(p));
    if (log_size > 22)
        throw domain_error("z_set_elements: p^(n + deg g) too large to enumerate");
    Gf fp = make_prime_field(p);
    const Gf::El c0inv = fp.from_int(c0_inverse(bp));
    Poly q = p_scale(fp, p_divexact(fp, p_xn_minus_1(fp, n), bp.g), c0inv);
    Poly ascale = p_scale(fp, bp.a, c0inv);
    auto residue_u32 = [&](const Poly& poly) {
        std::vector<u32> r(n, 0);
        for (u32 i = 0; i <= static_cast<u32>(poly.deg()) && !poly.is_zero(); ++i)
            r[i] = poly.c[i][0];
        return r;
    };
    std::vector<PauliVec> out;
    std::vector<u32> ucoef(n, 0), vcoef(bp.k, 0);
    auto advance = [p](std::vector<u32>& digits) {
        for (auto& d : digits) {
            if (++d < p) return true;
            d = 0;
        }
        return false;
    };
    do {
        Poly u = p_from_ints(fp, ucoef);
        std::vector<u32> vc = vcoef;
        do {
            Poly v = p_from_ints(fp, vc);
            Poly second = p_mod_xn1(
                fp, p_add(fp, p_mul(fp, u, ascale), p_mul(fp, v, q)), n);
            out.push_back(PauliVec{residue_u32(u), residue_u32(second)});
        } while (advance(vc));
    } while (advance(ucoef));
    return out;
}

}  // namespace qcs
