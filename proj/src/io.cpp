#include "trace_turan/io.hpp"

#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <vector>

namespace trace_turan {

namespace {

/// Reads the next non-blank, non-comment line split into integers.
class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  std::optional<std::vector<long long>> next() {
    std::string line;
    while (std::getline(in_, line)) {
      ++line_;
      auto first = line.find_first_not_of(" \t\r");
      if (first == std::string::npos || line[first] == '#') continue;
      std::istringstream tokens(line);
      std::vector<long long> values;
      std::string token;
      while (tokens >> token) {
        try {
          std::size_t used = 0;
          long long v = std::stoll(token, &used);
          if (used != token.size()) throw std::invalid_argument(token);
          values.push_back(v);
        } catch (const std::exception&) {
          throw ParseError(line_, "expected an integer, got '" + token + "'");
        }
      }
      return values;
    }
    return std::nullopt;
  }

  int line() const { return line_; }

 private:
  std::istream& in_;
  int line_ = 0;
};

std::pair<long long, long long> read_header(LineReader& reader) {
  auto header = reader.next();
  if (!header) throw ParseError(reader.line() + 1, "missing header line \"n m\"");
  if (header->size() != 2) throw ParseError(reader.line(), "header must be \"n m\"");
  auto [n, m] = std::pair{(*header)[0], (*header)[1]};
  if (n < 0 || m < 0) throw ParseError(reader.line(), "negative count in header");
  return {n, m};
}

}  // namespace

Hypergraph3 read_hypergraph(std::istream& in) {
  LineReader reader(in);
  auto [n, m] = read_header(reader);
  if (n > 1'000'000) throw ParseError(reader.line(), "vertex count too large");
  Hypergraph3 h(static_cast<int>(n));
  for (long long i = 0; i < m; ++i) {
    auto row = reader.next();
    if (!row) throw ParseError(reader.line() + 1, "expected " + std::to_string(m) + " edges");
    if (row->size() != 3) throw ParseError(reader.line(), "edge line must have 3 vertices");
    for (long long v : *row) {
      if (v < 0 || v >= n) throw ParseError(reader.line(), "vertex out of range");
    }
    Triple e;
    try {
      e = make_triple(static_cast<Vertex>((*row)[0]), static_cast<Vertex>((*row)[1]),
                      static_cast<Vertex>((*row)[2]));
    } catch (const std::invalid_argument&) {
      throw ParseError(reader.line(), "edge has repeated vertices");
    }
    if (!h.add_edge(e)) throw ParseError(reader.line(), "duplicate edge " + to_string(e));
  }
  if (reader.next()) throw ParseError(reader.line(), "trailing data after the last edge");
  return h;
}

Hypergraph3 read_hypergraph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_hypergraph(in);
}

void write_hypergraph(std::ostream& out, const Hypergraph3& h) {
  out << h.order() << ' ' << h.size() << '\n';
  for (const Triple& e : h.edges()) out << e[0] << ' ' << e[1] << ' ' << e[2] << '\n';
}

std::string format_hypergraph(const Hypergraph3& h) {
  std::ostringstream os;
  write_hypergraph(os, h);
  return os.str();
}

Graph read_graph(std::istream& in) {
  LineReader reader(in);
  auto [n, m] = read_header(reader);
  Graph g(static_cast<int>(n));
  for (long long i = 0; i < m; ++i) {
    auto row = reader.next();
    if (!row) throw ParseError(reader.line() + 1, "expected " + std::to_string(m) + " edges");
    if (row->size() != 2) throw ParseError(reader.line(), "edge line must have 2 vertices");
    auto a = (*row)[0];
    auto b = (*row)[1];
    if (a < 0 || b < 0 || a >= n || b >= n) throw ParseError(reader.line(), "vertex out of range");
    if (a == b) throw ParseError(reader.line(), "loops are not allowed");
    if (!g.add_edge(static_cast<Vertex>(a), static_cast<Vertex>(b))) {
      throw ParseError(reader.line(), "duplicate edge");
    }
  }
  return g;
}

void write_graph(std::ostream& out, const Graph& g) {
  out << g.order() << ' ' << g.size() << '\n';
  for (auto [a, b] : g.edges()) out << a << ' ' << b << '\n';
}

}  // namespace trace_turan
