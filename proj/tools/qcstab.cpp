// Command-line front end: construct codes, inspect factorizations, analyze
// distance, decode explicit errors, run the channel simulation, and
// regenerate the reference table.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "qcs/channel.hpp"
#include "qcs/decode.hpp"
#include "qcs/json_io.hpp"
#include "qcs/table1.hpp"

namespace {

using namespace qcs;

u32 env_workers() {
    const char* w = std::getenv("QCS_WORKERS");
    if (!w) return 0;
    return static_cast<u32>(std::strtoul(w, nullptr, 10));
}

std::string fp_poly_str(const Poly& a) {
    if (a.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (u32 i = 0; i <= static_cast<u32>(a.deg()); ++i) {
        if (a.c[i][0] == 0) continue;
        if (!first) os << " + ";
        first = false;
        if (i == 0 || a.c[i][0] != 1) os << a.c[i][0];
        if (i >= 1) os << "X";
        if (i >= 2) os << "^" << i;
    }
    return os.str();
}

std::string fp2_poly_str(const Poly& a) {
    if (a.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (u32 i = 0; i <= static_cast<u32>(a.deg()); ++i) {
        if (a.c[i][0] == 0 && a.c[i][1] == 0) continue;
        if (!first) os << " + ";
        first = false;
        os << "(" << a.c[i][0] << "+" << a.c[i][1] << "e)";
        if (i >= 1) os << "X";
        if (i >= 2) os << "^" << i;
    }
    return os.str();
}

std::vector<u32> parse_u32_list(const std::string& s) {
    std::vector<u32> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ','))
        if (!tok.empty()) out.push_back(static_cast<u32>(std::stoul(tok)));
    return out;
}

std::vector<double> parse_probs(const std::string& s) {
    // "start:stop:step" or a comma-separated list
    if (s.find(':') != std::string::npos) {
        std::stringstream ss(s);
        std::string a, b, c;
        std::getline(ss, a, ':');
        std::getline(ss, b, ':');
        std::getline(ss, c, ':');
        double start = std::stod(a), stop = std::stod(b), step = std::stod(c);
        if (step <= 0) throw domain_error("probs: step must be positive");
        std::vector<double> out;
        for (double x = start; x <= stop + 1e-12; x += step) out.push_back(x);
        return out;
    }
    std::vector<double> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ','))
        if (!tok.empty()) out.push_back(std::stod(tok));
    return out;
}

Blueprint load_blueprint(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw domain_error("cannot open blueprint file: " + path);
    nlohmann::json j;
    in >> j;
    return blueprint_from_json(j);
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(out_path);
        if (!out) throw domain_error("cannot open output file: " + out_path);
        out << text;
    }
}

std::vector<QberPoint> read_qber_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw domain_error("cannot open CSV file: " + path);
    std::vector<QberPoint> pts;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line.rfind("code,", 0) == 0) continue;
        std::stringstream ss(line);
        std::string tok;
        QberPoint pt;
        std::getline(ss, pt.code_id, ',');
        std::getline(ss, tok, ',');
        pt.prob = std::stod(tok);
        std::getline(ss, tok, ',');
        pt.trials = std::stoull(tok);
        std::getline(ss, tok, ',');
        pt.errors = std::stoull(tok);
        std::getline(ss, tok, ',');
        pt.qber = std::stod(tok);
        std::getline(ss, tok, ',');
        pt.stderr_ = std::stod(tok);
        pts.push_back(pt);
    }
    return pts;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"linear cyclic stabilizer codes: construction, distance, "
                 "decoding and channel simulation"};
    app.require_subcommand(1);

    // ---- factors ----
    auto* cmd_factors = app.add_subcommand("factors", "factor X^n - 1 over F_p and F_{p^2}");
    u32 fa_n = 0, fa_p = 2;
    cmd_factors->add_option("--n", fa_n, "block length")->required();
    cmd_factors->add_option("--p", fa_p, "characteristic");

    // ---- construct ----
    auto* cmd_construct = app.add_subcommand("construct", "build a code blueprint");
    u32 co_n = 0, co_p = 2;
    i64 co_m = -1;
    std::string co_gextra, co_hsel, co_out;
    cmd_construct->add_option("--n", co_n, "block length")->required();
    cmd_construct->add_option("--p", co_p, "characteristic");
    cmd_construct->add_option("--m", co_m, "involution parameter (m^2 = 1 mod n)");
    cmd_construct->add_option("--g-extra", co_gextra,
                              "comma-separated even-degree factor indices for g");
    cmd_construct->add_option("--h-select", co_hsel,
                              "comma-separated factor indices, one per conjugate pair "
                              "(default: maximize the consecutive root run)");
    cmd_construct->add_option("--out", co_out, "output path (default stdout)");

    // ---- distance ----
    auto* cmd_distance = app.add_subcommand("distance", "BCH bound and exhaustive distance");
    std::string di_bp, di_mode = "all";
    u64 di_budget = 1ull << 26;
    cmd_distance->add_option("--blueprint", di_bp, "blueprint JSON path")->required();
    cmd_distance->add_option("--mode", di_mode, "bch | brute | all");
    cmd_distance->add_option("--budget", di_budget, "max messages for the exhaustive scan");

    // ---- decode ----
    auto* cmd_decode = app.add_subcommand("decode", "decode an explicit error pair");
    std::string de_bp, de_e1, de_e2;
    cmd_decode->add_option("--blueprint", de_bp, "blueprint JSON path")->required();
    cmd_decode->add_option("--e1", de_e1, "comma-separated shift error entries")->required();
    cmd_decode->add_option("--e2", de_e2, "comma-separated phase error entries")->required();

    // ---- simulate ----
    auto* cmd_simulate = app.add_subcommand("simulate", "Monte Carlo QBER curve");
    std::string si_bp, si_probs = "0.005:0.25:0.005", si_model = "depolarizing-split",
                si_out;
    u64 si_trials = 100000, si_seed = 1;
    u32 si_maxw = 0;
    cmd_simulate->add_option("--blueprint", si_bp, "blueprint JSON path")->required();
    cmd_simulate->add_option("--probs", si_probs, "start:stop:step or comma list");
    cmd_simulate->add_option("--trials", si_trials, "trials per probability point");
    cmd_simulate->add_option("--seed", si_seed, "RNG seed");
    cmd_simulate->add_option("--model", si_model, "depolarizing-split | independent-xz");
    cmd_simulate->add_option("--max-weight", si_maxw,
                             "syndrome table fill depth (default: n)");
    cmd_simulate->add_option("--out", si_out, "output path (default stdout)");

    // ---- threshold ----
    auto* cmd_threshold = app.add_subcommand("threshold", "QBER curve crossing of two codes");
    std::string th_a, th_b;
    cmd_threshold->add_option("--a", th_a, "first QBER CSV")->required();
    cmd_threshold->add_option("--b", th_b, "second QBER CSV")->required();

    // ---- table1 ----
    auto* cmd_table1 = app.add_subcommand("table1", "regenerate the 13 reference codes");
    u64 ta_budget = 1ull << 26;
    std::string ta_out;
    cmd_table1->add_option("--budget", ta_budget, "max messages per exhaustive scan");
    cmd_table1->add_option("--out", ta_out, "output path (default stdout)");

    CLI11_PARSE(app, argc, argv);
    const u32 workers = env_workers();

    try {
        if (*cmd_factors) {
            QuadExt ext = find_irreducible_quadratic(fa_p);
            SplitField sf = make_split_field(fa_n, ext);
            std::ostringstream os;
            os << "# factors of X^" << fa_n << " - 1 over F_" << fa_p << "\n";
            for (const auto& f : factor_xn_minus_1(fa_n, ext, sf, false).factors) {
                os << "g" << f.index << ": coset={";
                for (std::size_t i = 0; i < f.coset.size(); ++i)
                    os << (i ? "," : "") << f.coset[i];
                os << "} poly=" << fp_poly_str(f.poly) << "\n";
            }
            os << "# factors over F_" << fa_p << "^2 (e = quadratic generator)\n";
            for (const auto& f : factor_xn_minus_1(fa_n, ext, sf, true).factors) {
                os << "h" << f.index << ": coset={";
                for (std::size_t i = 0; i < f.coset.size(); ++i)
                    os << (i ? "," : "") << f.coset[i];
                os << "} poly=" << fp2_poly_str(f.poly) << "\n";
            }
            std::cout << os.str();
        } else if (*cmd_construct) {
            HSelection sel;
            if (!co_hsel.empty()) {
                sel.auto_mode = false;
                sel.indices = parse_u32_list(co_hsel);
            }
            Blueprint bp = construct_code(co_n, co_p, co_m, parse_u32_list(co_gextra), sel);
            assemble(bp);  // validates isotropy and dimension before emitting
            emit(blueprint_to_json(bp).dump(2) + "\n", co_out);
        } else if (*cmd_distance) {
            Blueprint bp = load_blueprint(di_bp);
            nlohmann::json j;
            j["n"] = bp.triplet.n;
            j["k"] = bp.k;
            if (di_mode == "bch" || di_mode == "all") {
                BchReport bch = bch_distance(bp);
                j["bch"] = {{"d", bch.d},
                            {"run_start", bch.run.start},
                            {"run_len", bch.run.len},
                            {"run_root_power", bch.run.s},
                            {"detect", bch.detect},
                            {"correct", bch.correct}};
            }
            if (di_mode == "brute" || di_mode == "all") {
                BruteResult br = brute_force_distance(bp, di_budget, workers);
                j["brute"]["messages"] = br.total_messages;
                if (br.completed) {
                    DetectCorrect dc = detect_correct_from_distance(br.sigma_all);
                    j["brute"]["distance_sigma"] = br.sigma;
                    j["brute"]["distance_raw"] = br.raw;
                    j["brute"]["distance_sigma_nodegen"] = br.sigma_all;
                    j["brute"]["distance_raw_nodegen"] = br.raw_all;
                    j["brute"]["detect"] = dc.detect;
                    j["brute"]["correct"] = dc.correct;
                } else {
                    j["brute"]["skipped"] = "message count exceeds budget";
                }
            }
            std::cout << j.dump(2) << "\n";
        } else if (*cmd_decode) {
            Blueprint bp = load_blueprint(de_bp);
            DecoderCtx ctx = make_decoder_ctx(bp);
            std::vector<u32> e1 = parse_u32_list(de_e1), e2 = parse_u32_list(de_e2);
            if (e1.size() != bp.triplet.n || e2.size() != bp.triplet.n)
                throw domain_error("decode: e1/e2 must have n entries");
            DecodeResult dr = decode_error(ctx, e1, e2);
            nlohmann::json j;
            j["success"] = dr.ok;
            if (dr.ok) {
                j["e1"] = dr.e1;
                j["e2"] = dr.e2;
            } else {
                j["reason"] = dr.reason;
            }
            std::cout << j.dump(2) << "\n";
        } else if (*cmd_simulate) {
            Blueprint bp = load_blueprint(si_bp);
            ChannelParams params;
            params.trials = si_trials;
            params.seed = si_seed;
            if (si_model == "depolarizing-split")
                params.model = ChannelModel::DepolarizingSplit;
            else if (si_model == "independent-xz")
                params.model = ChannelModel::IndependentXZ;
            else
                throw domain_error("simulate: unknown model " + si_model);
            u32 maxw = si_maxw == 0 ? bp.triplet.n : si_maxw;
            SyndromeTable table = build_syndrome_table(bp, maxw);
            std::string code_id = "[[" + std::to_string(bp.triplet.n) + "," +
                                  std::to_string(bp.k) + "]]";
            std::ostringstream os;
            os << "code,prob,trials,errors,qber,stderr\n";
            for (const auto& pt :
                 run_qber(table, code_id, params, parse_probs(si_probs), workers)) {
                os << pt.code_id << ',' << pt.prob << ',' << pt.trials << ','
                   << pt.errors << ',' << pt.qber << ',' << pt.stderr_ << "\n";
            }
            emit(os.str(), si_out);
        } else if (*cmd_threshold) {
            auto a = read_qber_csv(th_a), b = read_qber_csv(th_b);
            auto x = find_threshold(a, b);
            if (x)
                std::cout << "crossing at prob = " << *x << "\n";
            else
                std::cout << "no crossing on grid\n";
        } else if (*cmd_table1) {
            std::ostringstream os;
            os << table1_csv_header() << "\n";
            for (const auto& row : table1_manifest())
                os << table1_csv_line(run_table1_row(row, ta_budget, workers)) << "\n";
            emit(os.str(), ta_out);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
