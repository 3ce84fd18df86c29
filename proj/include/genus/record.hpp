#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "genus/embed_oracle.hpp"
#include "genus/graphfam.hpp"
#include "genus/seqcore.hpp"

namespace genus {

// One serialized distribution. Counts are decimal strings: they exceed 64
// bits quickly and must round-trip losslessly.
struct OutputRecord {
    std::string subject;
    int n = 0;
    std::string method;
    int min_genus = 0;
    std::vector<std::string> counts;
    bool unimodal = false;
    bool log_concave = false;
    ModeInterval modes;
    std::vector<std::string> checks;  // cross-checks that passed for this record
};

OutputRecord make_record(const std::string& subject, int n, const std::string& method,
                         const GenusDistribution& dist);

// Canonical field order: subject, n, method, min_genus, counts, unimodal,
// log_concave, modes, checks. parse + reserialize is byte-identical.
std::string to_json(const OutputRecord& rec);
std::string to_json(const std::vector<OutputRecord>& recs);

// "# subject n=... method=..." header comment, then one "genus,count" line
// per entry.
void write_csv(std::ostream& os, const OutputRecord& rec, bool header);
void write_table(std::ostream& os, const OutputRecord& rec);

// Partial-polynomial file: one block per line,
//   part <j> / <min_degree> / <c0> <c1> ...
// with decimal coefficients; '#' starts a comment; missing parts are zero.
// Throws ParseError on duplicate part ids, bad numbers or negative
// coefficients.
PartialPolySet parse_partials(std::istream& in);

// Edge list: one "u v" pair per line, 0-based ids, duplicates meaning
// parallel edges; '#' comments allowed. Vertex count is 1 + max id.
Multigraph parse_edge_list(std::istream& in);

}  // namespace genus
