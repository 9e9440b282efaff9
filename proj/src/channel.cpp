#include "qcs/channel.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

namespace qcs {

namespace {

u64 splitmix64(u64 x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

}  // namespace

CounterRng::CounterRng(u64 seed, u64 stream) {
    key = splitmix64(splitmix64(seed) ^ stream);
}

u64 CounterRng::next_u64() { return splitmix64(key + 0x632be59bd9b4e019ull * ++ctr); }

double CounterRng::next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

std::pair<u64, u64> sample_error(const ChannelParams& params, u32 n, CounterRng& rng) {
    if (params.prob < 0.0 || params.prob > 1.0)
        throw domain_error("sample_error: prob outside [0, 1]");
    u64 x = 0, z = 0;
    if (params.model == ChannelModel::DepolarizingSplit) {
        for (u32 i = 0; i < n; ++i) {
            double u = rng.next_double();
            if (u >= params.prob) continue;
            double v = rng.next_double();
            // X, Y, Z equally likely given an error
            if (v < 1.0 / 3.0) {
                x |= 1ull << i;
            } else if (v < 2.0 / 3.0) {
                x |= 1ull << i;
                z |= 1ull << i;
            } else {
                z |= 1ull << i;
            }
        }
    } else {
        for (u32 i = 0; i < n; ++i) {
            if (rng.next_double() < params.prob) x |= 1ull << i;
            if (rng.next_double() < params.prob) z |= 1ull << i;
        }
    }
    return {x, z};
}

QberPoint qber_point(const SyndromeTable& table, const std::string& code_id,
                     const ChannelParams& params, u32 prob_index, u32 workers) {
    QberPoint pt;
    pt.code_id = code_id;
    pt.prob = params.prob;
    pt.trials = params.trials;
    if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
    workers = static_cast<u32>(std::min<u64>(workers, params.trials));

    auto run_range = [&](u64 begin, u64 end) {
        u64 errs = 0;
        for (u64 t = begin; t < end; ++t) {
            // substream = (prob point, trial): identical draws regardless of
            // worker partitioning, and matched across codes for paired runs
            CounterRng rng(params.seed, (static_cast<u64>(prob_index) << 40) | t);
            auto [x, z] = sample_error(params, table.n, rng);
            u64 syn = table.syndrome_of(x, z);
            u64 rx = x ^ table.leader_x[syn];
            u64 rz = z ^ table.leader_z[syn];
            if (rx != 0 || rz != 0) ++errs;
        }
        return errs;
    };

    std::vector<u64> tallies(workers, 0);
    std::vector<std::thread> pool;
    const u64 chunk = (params.trials + workers - 1) / workers;
    for (u32 w = 0; w < workers; ++w) {
        u64 b = w * chunk, e = std::min<u64>(params.trials, b + chunk);
        pool.emplace_back([&, w, b, e] { tallies[w] = run_range(b, e); });
    }
    for (auto& t : pool) t.join();
    for (u64 v : tallies) pt.errors += v;
    pt.qber = static_cast<double>(pt.errors) / static_cast<double>(pt.trials);
    pt.stderr_ = std::sqrt(pt.qber * (1.0 - pt.qber) / static_cast<double>(pt.trials));
    return pt;
}

std::vector<QberPoint> run_qber(const SyndromeTable& table, const std::string& code_id,
                                const ChannelParams& base, const std::vector<double>& probs,
                                u32 workers) {
    std::vector<QberPoint> out;
    out.reserve(probs.size());
    for (u32 i = 0; i < probs.size(); ++i) {
        ChannelParams p = base;
        p.prob = probs[i];
        out.push_back(qber_point(table, code_id, p, i, workers));
    }
    return out;
}

std::optional<double> find_threshold(const std::vector<QberPoint>& a,
                                     const std::vector<QberPoint>& b) {
    if (a.size() != b.size() || a.empty())
        throw domain_error("find_threshold: curves are not on a common grid");
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i].prob != b[i].prob)
            throw domain_error("find_threshold: probability grids differ");
    std::vector<double> diff(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) diff[i] = a[i].qber - b[i].qber;
    for (std::size_t i = 0; i < diff.size(); ++i) {
        if (diff[i] == 0.0) return a[i].prob;
        if (i + 1 < diff.size() && diff[i] * diff[i + 1] < 0.0) {
            double f = diff[i] / (diff[i] - diff[i + 1]);
            return a[i].prob + f * (a[i + 1].prob - a[i].prob);
        }
    }
    return std::nullopt;
}

}  // namespace qcs
