#pragma once

// Text renderings of graphs and sequence tables. Arcs always come out in
// (tail, head) lexicographic order, indices are 1-based, lines end in '\n'.

#include <sstream>
#include <string>
#include <string_view>

#include "json.hpp"

#include "jaco/errors.hpp"
#include "jaco/graph.hpp"
#include "jaco/sequences.hpp"

namespace jaco {

enum class ExportFormat { dot, json, csv, tsv_seq };

inline ExportFormat parse_export_format(std::string_view name) {
  if (name == "dot") return ExportFormat::dot;
  if (name == "json") return ExportFormat::json;
  if (name == "csv") return ExportFormat::csv;
  if (name == "tsv-seq") return ExportFormat::tsv_seq;
  throw DomainError("unknown export format '" + std::string(name) + "'");
}

inline std::string to_dot(const JacoGraph& g) {
  std::ostringstream out;
  out << "digraph jaco_a" << g.order().value() << "_n" << g.size() << " {\n";
  if (g.size() == 1) out << "  v1;\n";
  for (Int i = 1; i <= g.size(); ++i)
    for (Int j : g.out_neighbors(i)) out << "  v" << i << " -> v" << j << ";\n";
  out << "}\n";
  return out.str();
}

inline std::string to_json(const JacoGraph& g) {
  using nlohmann::ordered_json;
  const DegreeProfile profile = degree_profile(g);
  const JaconianInfo info = jaconian(g);

  ordered_json edges = ordered_json::array();
  for (Int i = 1; i <= g.size(); ++i)
    for (Int j : g.out_neighbors(i)) edges.push_back({i, j});

  ordered_json in = ordered_json::array(), out = ordered_json::array(),
               total = ordered_json::array();
  for (const VertexDegree& v : profile.vertices) {
    in.push_back(v.in);
    out.push_back(v.out);
    total.push_back(v.total);
  }

  ordered_json doc;
  doc["a"] = g.order().value();
  doc["n"] = g.size();
  doc["edges"] = std::move(edges);
  doc["in_degree"] = std::move(in);
  doc["out_degree"] = std::move(out);
  doc["total_degree"] = std::move(total);
  doc["delta"] = info.delta;
  doc["jaconian"] = info.jaconian;
  doc["prime"] = info.prime;
  doc["hope"] = info.hope.empty() ? ordered_json(nullptr)
                                  : ordered_json::array({info.hope.front(), info.hope.back()});
  return doc.dump() + "\n";
}

inline std::string to_csv(const JacoGraph& g) {
  std::ostringstream out;
  out << "tail,head\n";
  for (Int i = 1; i <= g.size(); ++i)
    for (Int j : g.out_neighbors(i)) out << i << ',' << j << '\n';
  return out.str();
}

inline std::string seq_dump(const SequenceTable& t) {
  std::ostringstream out;
  out << "n\tc\td_minus\td_plus\treach\n";
  for (Int n = 0; n <= t.horizon(); ++n)
    out << n << '\t' << t.c(n) << '\t' << t.d_minus(n) << '\t' << t.d_plus(n) << '\t'
        << t.reach(n) << '\n';
  return out.str();
}

// Graph formats only; tsv-seq renders the graph's sequence table.
inline std::string render(const JacoGraph& g, ExportFormat format) {
  switch (format) {
    case ExportFormat::dot: return to_dot(g);
    case ExportFormat::json: return to_json(g);
    case ExportFormat::csv: return to_csv(g);
    case ExportFormat::tsv_seq: return seq_dump(g.sequence());
  }
  return {};
}

}  // namespace jaco
