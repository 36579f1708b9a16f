#ifndef PAREQ_REPORT_HPP
#define PAREQ_REPORT_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace pareq {

// One measured conversion compared against its advertised state bound.
struct BoundsRow {
    std::string conversion;
    int input_n = 0;  // input state count, or variable count for grammars
    int input_m = 0;  // alphabet size
    long long states = 0;
    std::string bound_name;
    long long bound_value = 0;
    std::string status;  // PASS / FAIL (hard), WARN (soft), INFO (reported)
};

// Runs every conversion on a small seed-determined instance family and
// measures the output sizes against the advertised bounds. Hard bounds
// mark violations FAIL, soft bounds mark them WARN, and reported-only
// quantities are INFO rows. Same seed, same rows.
std::vector<BoundsRow> standard_report(std::uint64_t seed);

// One line per row: "A_0 states = 13 ≤ n(m+1)+1 = 13 PASS". INFO rows
// read "... = 3 (p(n), reported only) INFO".
std::string report_text(const std::vector<BoundsRow>& rows);

// Header "conversion,input_n,input_m,states,bound_name,bound_value,status";
// fields containing commas or quotes are double-quoted.
std::string report_csv(const std::vector<BoundsRow>& rows);

}  // namespace pareq

#endif
