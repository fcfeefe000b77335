#include "coverkit/model_io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "coverkit/error.hpp"

namespace coverkit {

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::size_t to_index(std::string_view token, std::size_t line_no) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw InputError("model line " + std::to_string(line_no) + ": '" + std::string(token) +
                     "' is not a non-negative integer");
  }
  return value;
}

}  // namespace

CoverageModel read_model(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  std::size_t n_vertices = 0;
  bool have_header = false;
  std::vector<std::vector<std::size_t>> edges;

  while (std::getline(in, line)) {
    ++line_no;
    auto tokens = split_ws(line);
    if (tokens.empty() || tokens.front().front() == '#') continue;
    if (!have_header) {
      if (tokens.size() != 2 || tokens[0] != "n") {
        throw InputError("model line " + std::to_string(line_no) + ": expected 'n <n_vertices>'");
      }
      n_vertices = to_index(tokens[1], line_no);
      have_header = true;
      continue;
    }
    std::vector<std::size_t> edge;
    edge.reserve(tokens.size());
    for (auto tok : tokens) edge.push_back(to_index(tok, line_no));
    edges.push_back(std::move(edge));
  }
  if (!have_header) throw InputError("model text has no 'n <n_vertices>' header");
  return CoverageModel::from_lists(n_vertices, edges);
}

CoverageModel parse_model(std::string_view text) {
  std::istringstream in{std::string(text)};
  return read_model(in);
}

CoverageModel load_model(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open model file " + path.string());
  return read_model(in);
}

void write_model(std::ostream& out, const CoverageModel& model) {
  out << "n " << model.n_vertices() << '\n';
  for (const auto& edge : model.edges()) {
    bool first = true;
    for (std::size_t v : edge.elements()) {
      if (!first) out << ' ';
      out << v;
      first = false;
    }
    out << '\n';
  }
}

std::string serialize_model(const CoverageModel& model) {
  std::ostringstream out;
  write_model(out, model);
  return out.str();
}

}  // namespace coverkit
