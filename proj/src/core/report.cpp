#include "report.hpp"

#include <algorithm>
#include <array>
#include <vector>

#include <json.hpp>

namespace dio {

std::string profile_to_json(const DnProfile& p) {
    nlohmann::ordered_json doc;
    doc["n"] = p.n;
    doc["edge_count"] = p.edge_count;
    doc["full_degree_count"] = p.full_degree_count;
    doc["clique_number"] = p.clique_number;
    doc["independence_number"] = p.independence_number;
    doc["min_degree"] = p.min_degree;
    doc["degree_sequence"] = p.degree_sequence.counts;
    return doc.dump();
}

std::string degree_sequence_tuple(const DegreeSequence& s) {
    std::string out = "(";
    for (std::size_t i = 0; i < s.counts.size(); ++i) {
        if (i)
            out += ',';
        out += std::to_string(s.counts[i]);
    }
    out += ')';
    return out;
}

std::string render_table(const PrimeTable& tbl, u64 from, u64 to, bool csv,
                         const ProfileOptions& opts) {
    if (from < 1 || from > to)
        throw ArgumentError("table: need 1 <= from <= to");

    std::vector<DnProfile> rows;
    rows.reserve(to - from + 1);
    for (u64 n = from; n <= to; ++n)
        rows.push_back(profile(tbl, n, opts));

    std::string out;
    if (csv) {
        out = "n,E,F,Cl,alpha,delta,S\n";
        for (const DnProfile& p : rows) {
            out += std::to_string(p.n) + ',' + std::to_string(p.edge_count) + ',' +
                   std::to_string(p.full_degree_count) + ',' +
                   std::to_string(p.clique_number) + ',' +
                   std::to_string(p.independence_number) + ',' +
                   std::to_string(p.min_degree) + ",\"" +
                   degree_sequence_tuple(p.degree_sequence) + "\"\n";
        }
        return out;
    }

    const char* headers[6] = {"n", "E", "F", "Cl", "alpha", "delta"};
    std::vector<std::array<std::string, 6>> cells;
    std::array<std::size_t, 6> width{};
    for (int c = 0; c < 6; ++c)
        width[c] = std::char_traits<char>::length(headers[c]);
    for (const DnProfile& p : rows) {
        std::array<std::string, 6> row = {
            std::to_string(p.n),
            std::to_string(p.edge_count),
            std::to_string(p.full_degree_count),
            std::to_string(p.clique_number),
            std::to_string(p.independence_number),
            std::to_string(p.min_degree),
        };
        for (int c = 0; c < 6; ++c)
            width[c] = std::max(width[c], row[c].size());
        cells.push_back(std::move(row));
    }

    auto pad = [](const std::string& s, std::size_t w) {
        return std::string(w - s.size(), ' ') + s;
    };
    for (int c = 0; c < 6; ++c) {
        out += pad(headers[c], width[c]);
        out += "  ";
    }
    out += "S\n";
    for (std::size_t r = 0; r < rows.size(); ++r) {
        for (int c = 0; c < 6; ++c) {
            out += pad(cells[r][c], width[c]);
            out += "  ";
        }
        out += degree_sequence_tuple(rows[r].degree_sequence);
        out += '\n';
    }
    return out;
}

} // namespace dio
