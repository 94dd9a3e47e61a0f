#pragma once

#include "pp4q/counts.hpp"
#include "pp4q/pyramid.hpp"

#include <string>
#include <vector>

namespace pp4q {

// All renderers are byte-deterministic: fixed column order, '\n' newlines,
// no locale-dependent formatting. Big integers are rendered as decimal
// strings (JSON included, to avoid 64-bit readers truncating them).

enum class OutputFormat { Csv, Json, Table };

OutputFormat parse_format(const std::string& name);  // "csv", "json", "table"

std::string render_counts_csv(const std::vector<CountVector>& rows);
std::string render_counts_json(int q, const std::vector<CountVector>& rows);
std::string render_counts_table(const std::vector<CountVector>& rows);

std::string render_sums_csv(const std::vector<SumVector>& rows);
std::string render_sums_json(int q, const std::vector<SumVector>& rows);
std::string render_sums_table(const std::vector<SumVector>& rows);

/// One line per vertex of the level, canonical order:
///   (row=m, i=idx, h=k) kind label
std::string render_labels_text(const LevelGraph& g);

/// JSON document with level metadata plus a vertex array; each vertex
/// carries row, index, height, type (letter), label (decimal string) and
/// the canonical indices of its ascendants.
std::string render_level_json(const LevelGraph& g);

/// CSV flattening of the same listing: row,index,height,type,label.
std::string render_level_csv(const LevelGraph& g);

/// Graphviz digraph of the edges from `prev` into `next` (ascendant arrows
/// reversed, so arrows point down the pyramid). Vertex shapes by kind:
/// One=plaintext, A=circle, B=diamond, C=square, D=hexagon, E=pentagon.
std::string render_transition_dot(const LevelGraph& prev, const LevelGraph& next);

}  // namespace pp4q
