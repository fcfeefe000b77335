#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

#include "coverkit/hypergraph.hpp"

namespace coverkit {

// Text model format:
//
//   n <n_vertices>
//   <v> <v> ...      one line per edge, vertex indices separated by spaces
//
// Blank lines and lines starting with '#' are ignored. Serialization writes
// each edge's vertices in increasing order and keeps edge order.

CoverageModel read_model(std::istream& in);
CoverageModel parse_model(std::string_view text);
CoverageModel load_model(const std::filesystem::path& path);

void write_model(std::ostream& out, const CoverageModel& model);
std::string serialize_model(const CoverageModel& model);

}  // namespace coverkit
