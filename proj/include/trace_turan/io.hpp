#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "trace_turan/constructions.hpp"
#include "trace_turan/hypergraph.hpp"

namespace trace_turan {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// Text format: a header line "n m", then m lines "a b c" (0-based, any
/// order within a line). Blank lines and lines starting with '#' are skipped.
Hypergraph3 read_hypergraph(std::istream& in);
Hypergraph3 read_hypergraph_file(const std::string& path);

/// Writes the header and edges in sorted canonical order.
void write_hypergraph(std::ostream& out, const Hypergraph3& h);
std::string format_hypergraph(const Hypergraph3& h);

/// Graph variant: header "n m", then m lines "a b".
Graph read_graph(std::istream& in);
void write_graph(std::ostream& out, const Graph& g);

}  // namespace trace_turan
