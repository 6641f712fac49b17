#pragma once

#include <string>

#include "maximal.hpp"

namespace dio {

// Compact JSON with fixed key order: n, edge_count, full_degree_count,
// clique_number, independence_number, min_degree, degree_sequence.
std::string profile_to_json(const DnProfile& p);

// Degree sequence as the parenthesized tuple "(d_0,d_1,...,d_{n-1})".
std::string degree_sequence_tuple(const DegreeSequence& s);

// Rows n = from..to of the D_n bounds table. CSV mode emits a fixed header
// and quotes the degree-sequence tuple; text mode aligns columns.
std::string render_table(const PrimeTable& tbl, u64 from, u64 to, bool csv,
                         const ProfileOptions& opts = {});

} // namespace dio
