#ifndef QCS_TABLE1_HPP
#define QCS_TABLE1_HPP

#include "qcs/distance.hpp"

// The 13 reference binary codes (p = 2, m = -1) with their published factor
// selections, consecutive root runs and distance columns.  Factor names in
// the manifest follow the published root labeling; a relabeling exponent s
// maps them onto the canonical primitive root chosen internally.

namespace qcs {

struct Table1Row {
    u32 n = 0, k = 0;
    std::vector<u32> g_names;  // indices of the g_i factors over F_p
    std::vector<u32> h_names;  // indices of the h_i factors over F_{p^2}
    u32 run_start = 0, run_len = 0;
    u32 bound_detect = 0, bound_correct = 0;
    u32 brute_detect = 0, brute_correct = 0;
};

const std::vector<Table1Row>& table1_manifest();

struct Table1Result {
    Table1Row row;
    Blueprint bp;
    u32 relabel_s = 1;  // published root = (canonical root)^s
    u32 k = 0;
    u32 bound_detect = 0, bound_correct = 0;
    bool brute_done = false;
    u64 brute_messages = 0;
    u32 brute_detect = 0, brute_correct = 0;
};

// Reconstructs one row.  Throws algebra_error when the constructed k or the
// consecutive root run disagrees with the manifest.
Table1Result run_table1_row(const Table1Row& row, u64 budget, u32 workers);

std::string table1_csv_header();
std::string table1_csv_line(const Table1Result& r);

}  // namespace qcs

#endif
