#include "qcs/decode.hpp"

#include <algorithm>
#include <array>
#include <bit>

namespace qcs {

namespace {

std::vector<u32> residue_u32(const Poly& poly, u32 n) {
    std::vector<u32> r(n, 0);
    for (u32 i = 0; i <= static_cast<u32>(poly.deg()) && !poly.is_zero(); ++i)
        r[i] = poly.c[i][0];
    return r;
}

}  // namespace

DecoderCtx make_decoder_ctx(const Blueprint& bp) {
    const u32 n = bp.triplet.n, p = bp.triplet.p;
    SplitField sf = make_split_field(n, bp.ext);
    BchReport bch = bch_distance(bp);
    DecoderCtx ctx{bp,
                   sf,
                   Sigma(n, bp.triplet.m),
                   bch,
                   bch.correct,
                   bch.run.start,
                   sf.gf.pow(sf.beta, bch.run.s),
                   PauliVec{residue_u32(bp.g, n), residue_u32(bp.f, n)},
                   bp.ext.gf.zero()};
    // alpha = -c0^{-1} eta^p; its eta-component is c0^{-1} != 0, so {1, alpha}
    // is an F_p basis of F_{p^2}
    const Gf& fp2 = bp.ext.gf;
    u64 c0inv = 1, b = bp.ext.c0 % p, e = p >= 2 ? p - 2 : 0;
    while (e) {
        if (e & 1) c0inv = c0inv * b % p;
        b = b * b % p;
        e >>= 1;
    }
    Gf::El etap = bp.ext.frobenius(bp.ext.eta());
    ctx.alpha = fp2.neg(fp2.mul(fp2.from_int(static_cast<u32>(c0inv)), etap));
    return ctx;
}

Poly syndrome_polynomial(const DecoderCtx& ctx, const std::vector<u32>& e1,
                         const std::vector<u32>& e2) {
    const u32 n = ctx.bp.triplet.n, p = ctx.bp.triplet.p;
    Gf fp = make_prime_field(p);
    PauliVec err{e1, e2};

    // route 1: n sigma-form values against the shifted generator
    std::vector<Gf::El> coeffs(n, fp.zero());
    PauliVec gen = ctx.gen1;
    for (u32 i = 0; i < n; ++i) {
        u32 v = sigma_form(p, gen, err, ctx.sigma);
        u32 idx = static_cast<u32>(static_cast<u64>(ctx.sigma.m) * i % n);
        coeffs[idx] = fp.add(coeffs[idx], fp.from_int(v));
        gen = simultaneous_shift(gen);
    }
    Poly route1 = p_from_residue(fp, coeffs);

    // route 2: closed form g(X) e2(X^{-m}) - f(X) e1(X^{-m}) mod X^n - 1
    Poly e1p = frobenius_substitute(fp, p_from_ints(fp, e1), n, ctx.bp.triplet.m);
    Poly e2p = frobenius_substitute(fp, p_from_ints(fp, e2), n, ctx.bp.triplet.m);
    Poly route2 = p_mod_xn1(
        fp, p_sub(fp, p_mul(fp, ctx.bp.g, e2p), p_mul(fp, ctx.bp.f, e1p)), n);

    if (!(route1 == route2))
        throw algebra_error("syndrome_polynomial: shifted-form sum disagrees with "
                            "the closed form");
    return route1;
}

Poly reduce_syndrome(const DecoderCtx& ctx, const Poly& rprime) {
    const u32 p = ctx.bp.triplet.p;
    Gf fp = make_prime_field(p);
    Poly q = p_divexact(fp, rprime, ctx.bp.g);
    return p_mod(ctx.bp.ext.gf, lift_fp_to_fp2(ctx.bp.ext.gf, q), ctx.bp.h);
}

void split_error(const DecoderCtx& ctx, const Poly& E, std::vector<u32>& e1,
                 std::vector<u32>& e2) {
    const u32 n = ctx.bp.triplet.n, p = ctx.bp.triplet.p;
    e1.assign(n, 0);
    e2.assign(n, 0);
    const u32 a0 = ctx.alpha[0], a1 = ctx.alpha[1];
    // scalar inverse of a1 mod p
    u64 a1inv = 1, b = a1 % p, e = p - 2;
    while (e) {
        if (e & 1) a1inv = a1inv * b % p;
        b = b * b % p;
        e >>= 1;
    }
    for (u32 j = 0; j <= static_cast<u32>(E.deg()) && !E.is_zero(); ++j) {
        const Gf::El& c = E.c[j];
        if (c[0] == 0 && c[1] == 0) continue;
        // E_j = e2[i] + alpha e1[i] at i = -m*j mod n
        u32 i = static_cast<u32>((static_cast<u64>(n - ctx.sigma.m) * j) % n);
        u32 v1 = static_cast<u32>(c[1] * a1inv % p);
        u32 v2 = static_cast<u32>((c[0] + static_cast<u64>(p - a0) * v1) % p);
        e1[i] = v1;
        e2[i] = v2;
    }
}

DecodeResult bmw_decode(const DecoderCtx& ctx, const Poly& r) {
    DecodeResult res;
    const u32 n = ctx.bp.triplet.n;
    const Gf& K = ctx.sf.gf;
    const u32 tau = ctx.tau;
    if (tau == 0) {
        if (!r.is_zero()) {
            res.reason = "nonzero syndrome but the code corrects no errors";
            return res;
        }
        res.ok = true;
        res.E = p_zero();
        res.e1.assign(n, 0);
        res.e2.assign(n, 0);
        return res;
    }
    const u32 nsyn = 4 * tau;
    if (ctx.bch.run.len < nsyn)
        throw algebra_error("bmw_decode: consecutive root run shorter than 4*tau");

    // syndromes at beta_s^{c}, ..., beta_s^{c + 4 tau - 1}
    Poly rl = lift_fp2_to_split(ctx.sf, r);
    std::vector<Gf::El> S(nsyn);
    for (u32 j = 0; j < nsyn; ++j)
        S[j] = p_eval(K, rl, K.pow(ctx.beta_s, ctx.run_start + j));

    // Berlekamp-Massey over the split field
    std::vector<Gf::El> C{K.one()}, B{K.one()};
    u32 L = 0, mlen = 1;
    Gf::El bdisc = K.one();
    for (u32 i = 0; i < nsyn; ++i) {
        Gf::El delta = S[i];
        for (u32 j = 1; j <= L && j < C.size(); ++j)
            delta = K.add(delta, K.mul(C[j], S[i - j]));
        if (K.is_zero(delta)) {
            ++mlen;
        } else if (2 * L <= i) {
            std::vector<Gf::El> T = C;
            Gf::El coef = K.mul(delta, K.inv(bdisc));
            if (C.size() < B.size() + mlen) C.resize(B.size() + mlen, K.zero());
            for (std::size_t j = 0; j < B.size(); ++j)
                C[j + mlen] = K.sub(C[j + mlen], K.mul(coef, B[j]));
            L = i + 1 - L;
            B = T;
            bdisc = delta;
            mlen = 1;
        } else {
            Gf::El coef = K.mul(delta, K.inv(bdisc));
            if (C.size() < B.size() + mlen) C.resize(B.size() + mlen, K.zero());
            for (std::size_t j = 0; j < B.size(); ++j)
                C[j + mlen] = K.sub(C[j + mlen], K.mul(coef, B[j]));
            ++mlen;
        }
    }
    while (!C.empty() && K.is_zero(C.back())) C.pop_back();
    if (C.size() != L + 1) {
        res.reason = "locator degree does not match its linear complexity";
        return res;
    }
    if (L > 2 * tau) {
        res.reason = "error weight beyond the 2*tau guarantee";
        return res;
    }

    // root search: locations l with Lambda(beta_s^{-l}) = 0
    std::vector<u32> locs;
    Poly lambda{C};
    for (u32 l = 0; l < n; ++l) {
        Gf::El x = K.inv(K.pow(ctx.beta_s, l));
        if (K.is_zero(p_eval(K, lambda, x))) locs.push_back(l);
    }
    if (locs.size() != L) {
        res.reason = "locator roots do not all lie on the root circle";
        return res;
    }

    // magnitudes: solve sum_t Y_t X_t^{c+j} = S_j for j = 0..L-1
    std::vector<Gf::El> Y(locs.size(), K.zero());
    if (!locs.empty()) {
        std::vector<std::vector<Gf::El>> M(locs.size());
        for (u32 j = 0; j < locs.size(); ++j) {
            M[j].reserve(locs.size() + 1);
            for (u32 t = 0; t < locs.size(); ++t)
                M[j].push_back(
                    K.pow(ctx.beta_s, static_cast<u64>(ctx.run_start + j) * locs[t] % n));
            M[j].push_back(S[j]);
        }
        for (u32 col = 0; col < locs.size(); ++col) {
            u32 piv = col;
            while (piv < M.size() && K.is_zero(M[piv][col])) ++piv;
            if (piv == M.size()) {
                res.reason = "singular magnitude system";
                return res;
            }
            std::swap(M[col], M[piv]);
            Gf::El inv = K.inv(M[col][col]);
            for (auto& c : M[col]) c = K.mul(c, inv);
            for (u32 rr = 0; rr < M.size(); ++rr) {
                if (rr == col || K.is_zero(M[rr][col])) continue;
                Gf::El f = M[rr][col];
                for (u32 cc = 0; cc <= locs.size(); ++cc)
                    M[rr][cc] = K.sub(M[rr][cc], K.mul(f, M[col][cc]));
            }
        }
        for (u32 t = 0; t < locs.size(); ++t) Y[t] = M[t].back();
        // consistency on the remaining syndromes
        for (u32 j = static_cast<u32>(locs.size()); j < nsyn; ++j) {
            Gf::El acc = K.zero();
            for (u32 t = 0; t < locs.size(); ++t)
                acc = K.add(acc, K.mul(Y[t], K.pow(ctx.beta_s,
                                                   static_cast<u64>(ctx.run_start + j) *
                                                       locs[t] % n)));
            if (!(acc == S[j])) {
                res.reason = "magnitudes inconsistent with the extra syndromes";
                return res;
            }
        }
    }

    // rebuild E over F_{p^2}
    const Gf& fp2 = ctx.bp.ext.gf;
    std::vector<Gf::El> ec(n, fp2.zero());
    for (u32 t = 0; t < locs.size(); ++t) {
        Gf::El mag;
        try {
            mag = ctx.sf.to_fp2(Y[t]);
        } catch (const algebra_error&) {
            res.reason = "error magnitude falls outside F_{p^2}";
            return res;
        }
        if (fp2.is_zero(mag)) {
            res.reason = "zero magnitude at a claimed location";
            return res;
        }
        ec[locs[t]] = mag;
    }
    Poly E = p_from_residue(fp2, ec);
    if (!p_mod(fp2, p_sub(fp2, E, r), ctx.bp.h).is_zero()) {
        res.reason = "reconstructed error does not reproduce the syndrome";
        return res;
    }
    res.ok = true;
    res.E = E;
    split_error(ctx, E, res.e1, res.e2);
    return res;
}

DecodeResult decode_error(const DecoderCtx& ctx, const std::vector<u32>& e1,
                          const std::vector<u32>& e2) {
    Poly rprime = syndrome_polynomial(ctx, e1, e2);
    Poly r = reduce_syndrome(ctx, rprime);
    return bmw_decode(ctx, r);
}

u64 SyndromeTable::syndrome_of(u64 x, u64 z) const {
    u64 s = 0;
    u64 xs = x, zs = z;
    while (xs) {
        s ^= syn_x[std::countr_zero(xs)];
        xs &= xs - 1;
    }
    while (zs) {
        s ^= syn_z[std::countr_zero(zs)];
        zs &= zs - 1;
    }
    return s;
}

SyndromeTable build_syndrome_table(const Blueprint& bp, u32 max_weight) {
    const u32 n = bp.triplet.n, p = bp.triplet.p;
    if (p != 2 || n > 32)
        throw domain_error("build_syndrome_table: lookup decoding implemented for "
                           "p = 2, n <= 32");
    IdealBasis ib = assemble(bp);
    SyndromeTable st;
    st.n = n;
    st.rows = ib.S.dim();
    st.max_weight = max_weight;
    if (st.rows > 26)
        throw domain_error("build_syndrome_table: 2^" + std::to_string(st.rows) +
                           " syndrome entries exceed the memory budget");
    Sigma sigma(n, bp.triplet.m);
    st.syn_x.assign(n, 0);
    st.syn_z.assign(n, 0);
    const auto& rows = ib.S.rows();
    for (u32 pos = 0; pos < n; ++pos) {
        u32 mp = sigma.perm(pos);  // m * pos mod n (m is an involution)
        for (u32 j = 0; j < st.rows; ++j) {
            st.syn_x[pos] |= static_cast<u64>(rows[j].b[mp] & 1) << j;
            st.syn_z[pos] |= static_cast<u64>(rows[j].a[mp] & 1) << j;
        }
    }
    const u64 entries = 1ull << st.rows;
    st.leader_x.assign(entries, 0);
    st.leader_z.assign(entries, 0);
    st.have.assign(entries, 0);
    st.have[0] = 1;  // zero syndrome -> zero error
    u64 filled = 1;

    // per-position syndrome and bit patterns for X, Z, Y
    struct Pat {
        u64 syn, x, z;
    };
    std::vector<std::array<Pat, 3>> pats(n);
    for (u32 pos = 0; pos < n; ++pos) {
        u64 bx = 1ull << pos;
        pats[pos][0] = Pat{st.syn_x[pos], bx, 0};                      // X
        pats[pos][1] = Pat{st.syn_z[pos], 0, bx};                      // Z
        pats[pos][2] = Pat{st.syn_x[pos] ^ st.syn_z[pos], bx, bx};     // Y
    }

    for (u32 w = 1; w <= max_weight && filled < entries; ++w) {
        std::vector<u32> idx(w);
        for (u32 i = 0; i < w; ++i) idx[i] = i;
        bool more = w <= n;
        while (more && filled < entries) {
            // base-3 odometer over the patterns of the chosen positions
            std::vector<u32> pat(w, 0);
            bool pmore = true;
            while (pmore) {
                u64 syn = 0, x = 0, z = 0;
                for (u32 i = 0; i < w; ++i) {
                    const Pat& q = pats[idx[i]][pat[i]];
                    syn ^= q.syn;
                    x |= q.x;
                    z |= q.z;
                }
                if (!st.have[syn]) {
                    st.have[syn] = 1;
                    st.leader_x[syn] = x;
                    st.leader_z[syn] = z;
                    ++filled;
                }
                pmore = false;
                for (u32 i = 0; i < w; ++i) {
                    if (++pat[i] < 3) {
                        pmore = true;
                        break;
                    }
                    pat[i] = 0;
                }
            }
            // next combination of positions
            int i = static_cast<int>(w) - 1;
            while (i >= 0 && idx[i] == n - w + i) --i;
            if (i < 0) {
                more = false;
            } else {
                ++idx[i];
                for (u32 j = i + 1; j < w; ++j) idx[j] = idx[j - 1] + 1;
            }
        }
    }
    return st;
}

}  // namespace qcs
