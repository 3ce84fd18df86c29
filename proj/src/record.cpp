#include "genus/record.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <array>
#include <cctype>
#include <istream>
#include <ostream>
#include <sstream>

namespace genus {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json record_json(const OutputRecord& rec) {
    ordered_json j;
    j["subject"] = rec.subject;
    j["n"] = rec.n;
    j["method"] = rec.method;
    j["min_genus"] = rec.min_genus;
    j["counts"] = rec.counts;
    j["unimodal"] = rec.unimodal;
    j["log_concave"] = rec.log_concave;
    j["modes"] = {rec.modes.l, rec.modes.m};
    j["checks"] = rec.checks;
    return j;
}

}  // namespace

OutputRecord make_record(const std::string& subject, int n, const std::string& method,
                         const GenusDistribution& dist) {
    OutputRecord rec;
    rec.subject = subject;
    rec.n = n;
    rec.method = method;
    rec.min_genus = dist.offset();
    for (const BigInt& c : dist.counts()) rec.counts.push_back(c.str());
    ModeSearch ms = mode_interval(dist);
    rec.unimodal = ms.argmax_contiguous && is_unimodal(dist);
    rec.log_concave = is_log_concave(dist);
    rec.modes = ms.modes;
    return rec;
}

std::string to_json(const OutputRecord& rec) { return record_json(rec).dump(2) + "\n"; }

std::string to_json(const std::vector<OutputRecord>& recs) {
    ordered_json arr = ordered_json::array();
    for (const OutputRecord& r : recs) arr.push_back(record_json(r));
    return arr.dump(2) + "\n";
}

void write_csv(std::ostream& os, const OutputRecord& rec, bool header) {
    os << "# " << rec.subject << " n=" << rec.n << " method=" << rec.method << "\n";
    if (header) os << "genus,count\n";
    for (std::size_t k = 0; k < rec.counts.size(); ++k) {
        os << rec.min_genus + static_cast<int>(k) << "," << rec.counts[k] << "\n";
    }
}

void write_table(std::ostream& os, const OutputRecord& rec) {
    os << rec.subject << " n=" << rec.n << " method=" << rec.method
       << " min_genus=" << rec.min_genus << " modes=[" << rec.modes.l << "," << rec.modes.m
       << "]" << (rec.unimodal ? " unimodal" : " NOT-unimodal")
       << (rec.log_concave ? " log-concave" : "");
    for (const std::string& chk : rec.checks) os << " [" << chk << "]";
    os << "\n  counts:";
    for (const std::string& c : rec.counts) os << " " << c;
    os << "\n";
}

namespace {

std::string strip_comment(std::string line) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    return line;
}

BigInt parse_bigint(const std::string& tok, const char* what) {
    if (tok.empty()) throw ParseError(std::string(what) + ": empty number");
    std::size_t start = (tok[0] == '-' || tok[0] == '+') ? 1 : 0;
    if (start == tok.size() ||
        !std::all_of(tok.begin() + static_cast<std::ptrdiff_t>(start), tok.end(),
                     [](unsigned char ch) { return std::isdigit(ch); })) {
        throw ParseError(std::string(what) + ": bad number '" + tok + "'");
    }
    return BigInt(tok);
}

}  // namespace

PartialPolySet parse_partials(std::istream& in) {
    PartialPolySet set;
    std::array<bool, 11> seen{};
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = strip_comment(raw);
        // fields are separated by '/': "part <j> / <min_degree> / <coeffs>"
        std::replace(line.begin(), line.end(), '/', ' ');
        std::istringstream ls(line);
        std::string kw;
        if (!(ls >> kw)) continue;  // blank line
        const std::string at = " (line " + std::to_string(lineno) + ")";
        if (kw != "part") throw ParseError("partials: expected 'part'" + at);
        int j = 0;
        long long min_degree = -1;
        if (!(ls >> j) || j < 1 || j > 11) throw ParseError("partials: bad part id" + at);
        if (seen[static_cast<std::size_t>(j - 1)]) {
            throw ParseError("partials: duplicate part " + std::to_string(j) + at);
        }
        seen[static_cast<std::size_t>(j - 1)] = true;
        if (!(ls >> min_degree) || min_degree < 0) {
            throw ParseError("partials: bad min_degree" + at);
        }
        std::vector<BigInt> coeffs;
        std::string tok;
        while (ls >> tok) {
            BigInt c = parse_bigint(tok, "partials");
            if (c < 0) throw ParseError("partials: negative coefficient" + at);
            coeffs.push_back(std::move(c));
        }
        if (coeffs.empty()) throw ParseError("partials: no coefficients" + at);
        bool all_zero = std::all_of(coeffs.begin(), coeffs.end(),
                                    [](const BigInt& c) { return c == 0; });
        if (all_zero) continue;  // explicit zero polynomial: leave the part absent
        set.set_part(j, GenusDistribution(static_cast<int>(min_degree), std::move(coeffs)));
    }
    if (!set.any()) throw ParseError("partials: every part is zero or missing");
    return set;
}

Multigraph parse_edge_list(std::istream& in) {
    std::vector<std::pair<int, int>> edges;
    int max_vertex = -1;
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        std::istringstream ls(strip_comment(raw));
        long long u, v;
        if (!(ls >> u)) continue;
        if (!(ls >> v) || u < 0 || v < 0) {
            throw ParseError("edge list: bad edge (line " + std::to_string(lineno) + ")");
        }
        std::string extra;
        if (ls >> extra) {
            throw ParseError("edge list: trailing tokens (line " + std::to_string(lineno) + ")");
        }
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
        max_vertex = std::max({max_vertex, static_cast<int>(u), static_cast<int>(v)});
    }
    if (edges.empty()) throw ParseError("edge list: no edges");
    return Multigraph::from_edges(max_vertex + 1, std::move(edges));
}

}  // namespace genus
