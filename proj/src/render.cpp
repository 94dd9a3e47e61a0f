#include "pp4q/render.hpp"

#include "json.hpp"

#include <algorithm>
#include <stdexcept>

namespace pp4q {

namespace {

using nlohmann::json;

std::string join_csv(const std::vector<std::string>& cells) {
    std::string line;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i) line += ',';
        line += cells[i];
    }
    return line + '\n';
}

// Right-aligned fixed-width text table.
std::string layout_table(const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::size_t> w;
    for (const auto& row : rows) {
        if (w.size() < row.size()) w.resize(row.size(), 0);
        for (std::size_t i = 0; i < row.size(); ++i) w[i] = std::max(w[i], row[i].size());
    }
    std::string out;
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out += "  ";
            out.append(w[i] - row[i].size(), ' ');
            out += row[i];
        }
        out += '\n';
    }
    return out;
}

std::vector<std::vector<std::string>> count_cells(const std::vector<CountVector>& rows) {
    std::vector<std::vector<std::string>> cells;
    cells.push_back({"n", "a_n", "b_n", "c_n", "d_n", "e_n", "s_n"});
    for (const auto& r : rows)
        cells.push_back({std::to_string(r.n), dec(r.a), dec(r.b), dec(r.c), dec(r.d),
                         dec(r.e), dec(r.s)});
    return cells;
}

std::vector<std::vector<std::string>> sum_cells(const std::vector<SumVector>& rows) {
    std::vector<std::vector<std::string>> cells;
    cells.push_back({"n", "a_hat_n", "b_hat_n", "c_hat_n", "d_hat_n", "e_hat_n", "s_hat_n"});
    for (const auto& r : rows)
        cells.push_back({std::to_string(r.n), dec(r.a), dec(r.b), dec(r.c), dec(r.d),
                         dec(r.e), dec(r.s)});
    return cells;
}

std::string cells_to_csv(const std::vector<std::vector<std::string>>& cells) {
    std::string out;
    for (const auto& row : cells) out += join_csv(row);
    return out;
}

const char* dot_shape(VertexKind k) {
    switch (k) {
        case VertexKind::One: return "plaintext";
        case VertexKind::A: return "circle";
        case VertexKind::B: return "diamond";
        case VertexKind::C: return "square";
        case VertexKind::D: return "hexagon";
        case VertexKind::E: return "pentagon";
    }
    return "plaintext";
}

}  // namespace

OutputFormat parse_format(const std::string& name) {
    if (name == "csv") return OutputFormat::Csv;
    if (name == "json") return OutputFormat::Json;
    if (name == "table") return OutputFormat::Table;
    throw std::invalid_argument("unknown format '" + name + "' (use csv, json or table)");
}

std::string render_counts_csv(const std::vector<CountVector>& rows) {
    return cells_to_csv(count_cells(rows));
}

std::string render_counts_json(int q, const std::vector<CountVector>& rows) {
    json doc;
    doc["q"] = q;
    doc["rows"] = json::array();
    for (const auto& r : rows)
        doc["rows"].push_back({{"n", r.n},
                               {"a", dec(r.a)},
                               {"b", dec(r.b)},
                               {"c", dec(r.c)},
                               {"d", dec(r.d)},
                               {"e", dec(r.e)},
                               {"s", dec(r.s)}});
    return doc.dump(2) + "\n";
}

std::string render_counts_table(const std::vector<CountVector>& rows) {
    return layout_table(count_cells(rows));
}

std::string render_sums_csv(const std::vector<SumVector>& rows) {
    return cells_to_csv(sum_cells(rows));
}

std::string render_sums_json(int q, const std::vector<SumVector>& rows) {
    json doc;
    doc["q"] = q;
    doc["rows"] = json::array();
    for (const auto& r : rows)
        doc["rows"].push_back({{"n", r.n},
                               {"a", dec(r.a)},
                               {"b", dec(r.b)},
                               {"c", dec(r.c)},
                               {"d", dec(r.d)},
                               {"e", dec(r.e)},
                               {"v", dec(r.v)},
                               {"s", dec(r.s)}});
    return doc.dump(2) + "\n";
}

std::string render_sums_table(const std::vector<SumVector>& rows) {
    return layout_table(sum_cells(rows));
}

std::string render_labels_text(const LevelGraph& g) {
    std::string out;
    for (std::size_t idx = 0; idx < g.size(); ++idx) {
        const unsigned m = g.hpt_row_of(idx);
        out += "(row=" + std::to_string(m) + ", i=" + std::to_string(g.index_in_row(idx)) +
               ", h=" + std::to_string(g.level - m) + ") ";
        out += kind_letter(g.kinds[idx]);
        out += ' ' + dec(g.labels[idx]) + '\n';
    }
    return out;
}

std::string render_level_json(const LevelGraph& g) {
    json doc;
    doc["q"] = g.q;
    doc["level"] = g.level;
    doc["size"] = g.size();
    doc["vertices"] = json::array();
    for (std::size_t idx = 0; idx < g.size(); ++idx) {
        const unsigned m = g.hpt_row_of(idx);
        json v;
        v["level"] = g.level;
        v["row"] = m;
        v["index"] = g.index_in_row(idx);
        v["height"] = g.level - m;
        v["type"] = std::string(1, kind_letter(g.kinds[idx]));
        v["label"] = dec(g.labels[idx]);
        v["ascendants"] = json::array();
        for (std::uint32_t p : g.ascendants(idx)) v["ascendants"].push_back(p);
        doc["vertices"].push_back(std::move(v));
    }
    return doc.dump(2) + "\n";
}

std::string render_level_csv(const LevelGraph& g) {
    std::string out = "row,index,height,type,label\n";
    for (std::size_t idx = 0; idx < g.size(); ++idx) {
        const unsigned m = g.hpt_row_of(idx);
        out += join_csv({std::to_string(m), std::to_string(g.index_in_row(idx)),
                         std::to_string(g.level - m), std::string(1, kind_letter(g.kinds[idx])),
                         dec(g.labels[idx])});
    }
    return out;
}

std::string render_transition_dot(const LevelGraph& prev, const LevelGraph& next) {
    if (next.q != prev.q || next.level != prev.level + 1)
        throw std::invalid_argument("transition rendering needs consecutive levels of one pyramid");
    std::string out = "digraph levels {\n";
    out += "  rankdir=TB;\n";
    auto emit_nodes = [&out](const LevelGraph& g, char prefix) {
        for (std::size_t i = 0; i < g.size(); ++i) {
            out += "  ";
            out += prefix;
            out += std::to_string(i) + " [label=\"" + dec(g.labels[i]) + "\", shape=" +
                   dot_shape(g.kinds[i]) + "];\n";
        }
    };
    emit_nodes(prev, 'p');
    emit_nodes(next, 'n');
    for (std::size_t i = 0; i < next.size(); ++i)
        for (std::uint32_t p : next.ascendants(i))
            out += "  p" + std::to_string(p) + " -> n" + std::to_string(i) + ";\n";
    out += "}\n";
    return out;
}

}  // namespace pp4q
