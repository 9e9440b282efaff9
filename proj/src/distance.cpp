#include "qcs/distance.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <limits>
#include <thread>

namespace qcs {

BchReport bch_distance(const Blueprint& bp) {
    BchReport rep;
    rep.run = best_run_over_primitive_roots(bp.h_exponents, bp.triplet.n);
    rep.d = rep.run.len + 1;
    rep.detect = (rep.d + 1) / 2 - 1;
    rep.correct = (rep.d - 1) / 4;
    return rep;
}

DetectCorrect detect_correct_from_distance(u32 d) {
    return DetectCorrect{d - 1, (d - 1) / 2};
}

u64 brute_message_count(const Blueprint& bp) {
    const u32 n = bp.triplet.n, p = bp.triplet.p;
    const u32 K = n - static_cast<u32>(std::max(bp.h.deg(), 0));
    double bits = 2.0 * K * std::log2(static_cast<double>(p));
    if (bits > 62) return std::numeric_limits<u64>::max();
    u64 total = 1;
    for (u32 i = 0; i < 2 * K; ++i) total *= p;
    return total - 1;
}

namespace {

struct Contrib {
    u64 w0 = 0, w1 = 0, w1s = 0, gs = 0;
};

struct ShardOut {
    u32 raw = std::numeric_limits<u32>::max();
    u32 sigma = std::numeric_limits<u32>::max();
    u32 raw_all = std::numeric_limits<u32>::max();
    u32 sigma_all = std::numeric_limits<u32>::max();
};

ShardOut run_shard(const std::vector<Contrib>& contribs, u64 begin, u64 end) {
    ShardOut out;
    Contrib st;
    u64 gc = begin ^ (begin >> 1);
    for (u64 bits = gc; bits;) {
        int b = std::countr_zero(bits);
        bits &= bits - 1;
        st.w0 ^= contribs[b].w0;
        st.w1 ^= contribs[b].w1;
        st.w1s ^= contribs[b].w1s;
        st.gs ^= contribs[b].gs;
    }
    for (u64 c = begin; c < end; ++c) {
        if (c != begin) {
            int b = std::countr_zero(c);
            st.w0 ^= contribs[b].w0;
            st.w1 ^= contribs[b].w1;
            st.w1s ^= contribs[b].w1s;
            st.gs ^= contribs[b].gs;
        }
        u32 raw = static_cast<u32>(std::popcount(st.w0 | st.w1));
        u32 sig = static_cast<u32>(std::popcount(st.w0 | st.w1s));
        if (raw < out.raw_all) out.raw_all = raw;
        if (sig < out.sigma_all) out.sigma_all = sig;
        if (st.gs == 0) continue;  // the element lies in S itself
        if (raw < out.raw) out.raw = raw;
        if (sig < out.sigma) out.sigma = sig;
    }
    return out;
}

// Fast path for p = 2, n <= 32: the two F_4 components of every candidate
// pack into bitmasks and a Gray-code walk updates them with four XORs.
BruteResult brute_binary(const Blueprint& bp, u64 budget, u32 workers) {
    const u32 n = bp.triplet.n;
    const u32 k = bp.k;
    const u32 K = (n + k) / 2;  // message coefficients over F_4
    BruteResult res;
    res.total_messages = (1ull << (2 * K)) - 1;
    if (res.total_messages > budget) return res;

    Sigma sigma(n, bp.triplet.m);
    const Gf& fp2 = bp.ext.gf;

    // X^j mod g as k-bit masks (binary LFSR step)
    u64 gmask = 0;
    for (u32 i = 0; i < k; ++i) gmask |= static_cast<u64>(bp.g.c[i][0] & 1) << i;
    std::vector<u64> xj_mod_g(K);
    u64 rem = 1;  // k >= 1 always: g has the factor X - 1
    for (u32 j = 0; j < K; ++j) {
        xj_mod_g[j] = rem;
        rem <<= 1;
        if (rem >> k & 1) rem = (rem ^ (1ull << k)) ^ gmask;
    }

    std::vector<Contrib> contribs(2 * K);
    std::vector<Gf::El> hres = p_residue(fp2, bp.h, n);
    for (u32 j = 0; j < K; ++j) {
        // X^j * h: deg h + j < n, so the shift never wraps
        u64 w0 = 0, w1 = 0;
        for (u32 i = 0; i + j < n; ++i) {
            w0 |= static_cast<u64>(hres[i][0] & 1) << (i + j);
            w1 |= static_cast<u64>(hres[i][1] & 1) << (i + j);
        }
        auto permuted = [&](u64 mask) {
            u64 out = 0;
            for (u32 i = 0; i < n; ++i)
                if (mask >> sigma.perm(i) & 1) out |= 1ull << i;
            return out;
        };
        contribs[2 * j] = Contrib{w0, w1, permuted(w1), xj_mod_g[j]};
        // eta * (a + eta b) = b + eta (a + b) over F_4
        u64 e0 = w1, e1 = w0 ^ w1;
        contribs[2 * j + 1] = Contrib{e0, e1, permuted(e1), xj_mod_g[j] << k};
    }

    if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
    const u64 lo = 1, hi = res.total_messages + 1;
    workers = static_cast<u32>(std::min<u64>(workers, hi - lo));
    std::vector<ShardOut> outs(workers);
    std::vector<std::thread> pool;
    const u64 chunk = (hi - lo + workers - 1) / workers;
    for (u32 w = 0; w < workers; ++w) {
        u64 b = lo + w * chunk, e = std::min(hi, b + chunk);
        pool.emplace_back([&, w, b, e] { outs[w] = run_shard(contribs, b, e); });
    }
    for (auto& t : pool) t.join();
    res.raw = std::numeric_limits<u32>::max();
    res.sigma = std::numeric_limits<u32>::max();
    res.raw_all = std::numeric_limits<u32>::max();
    res.sigma_all = std::numeric_limits<u32>::max();
    for (const auto& o : outs) {
        res.raw = std::min(res.raw, o.raw);
        res.sigma = std::min(res.sigma, o.sigma);
        res.raw_all = std::min(res.raw_all, o.raw_all);
        res.sigma_all = std::min(res.sigma_all, o.sigma_all);
    }
    res.completed = true;
    return res;
}

BruteResult brute_generic(const Blueprint& bp, u64 budget) {
    const u32 n = bp.triplet.n, p = bp.triplet.p;
    const Gf& fp2 = bp.ext.gf;
    const u32 K = n - static_cast<u32>(std::max(bp.h.deg(), 0));
    BruteResult res;
    res.total_messages = brute_message_count(bp);
    if (res.total_messages > budget) return res;

    Sigma sigma(n, bp.triplet.m);
    Poly g2 = lift_fp_to_fp2(fp2, bp.g);
    res.raw = std::numeric_limits<u32>::max();
    res.sigma = std::numeric_limits<u32>::max();
    res.raw_all = std::numeric_limits<u32>::max();
    res.sigma_all = std::numeric_limits<u32>::max();

    // odometer over the 2K base-p digits of the message u
    std::vector<u32> digits(2 * K, 0);
    auto advance = [p](std::vector<u32>& d) {
        for (auto& x : d) {
            if (++x < p) return true;
            x = 0;
        }
        return false;
    };
    while (advance(digits)) {
        std::vector<Gf::El> uc(K);
        for (u32 j = 0; j < K; ++j) uc[j] = fp2.make({digits[2 * j], digits[2 * j + 1]});
        Poly u = p_from_residue(fp2, uc);
        Poly w = p_mulmod_xn1(fp2, u, bp.h, n);
        std::vector<Gf::El> r = p_residue(fp2, w, n);
        u32 raw = 0, sig = 0;
        for (u32 i = 0; i < n; ++i) {
            if (r[i][0] != 0 || r[i][1] != 0) ++raw;
            if (r[i][0] != 0 || r[sigma.perm(i)][1] != 0) ++sig;
        }
        res.raw_all = std::min(res.raw_all, raw);
        res.sigma_all = std::min(res.sigma_all, sig);
        if (p_mod(fp2, u, g2).is_zero()) continue;  // w = u h lies in S
        res.raw = std::min(res.raw, raw);
        res.sigma = std::min(res.sigma, sig);
    }
    res.completed = true;
    return res;
}

}  // namespace

BruteResult brute_force_distance(const Blueprint& bp, u64 budget, u32 workers) {
    if (bp.triplet.p == 2 && bp.triplet.n <= 32)
        return brute_binary(bp, budget, workers);
    return brute_generic(bp, budget);
}

}  // namespace qcs
