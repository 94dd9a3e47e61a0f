#include "CLI11.hpp"

#include "pp4q/analytic.hpp"
#include "pp4q/pyramid.hpp"
#include "pp4q/render.hpp"
#include "pp4q/sequences.hpp"
#include "pp4q/verify.hpp"

#include "json.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

namespace {

using namespace pp4q;

std::size_t resolve_cap(std::size_t flag_cap) {
    if (flag_cap != 0) return flag_cap;
    if (const char* env = std::getenv("PP4Q_CAP_VERTICES")) {
        const std::string s(env);
        std::size_t pos = 0;
        const unsigned long long v = std::stoull(s, &pos);
        if (pos != s.size() || v == 0)
            throw std::invalid_argument("PP4Q_CAP_VERTICES must be a positive integer");
        return static_cast<std::size_t>(v);
    }
    return kDefaultVertexCap;
}

void emit(const std::string& text, const std::string& output_path) {
    if (output_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(output_path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open " + output_path + " for writing");
    f << text;
}

// ascending presentation, natural for series denominators: 1 - 8x + 19x^2 - 14x^3
std::string gf_poly_str(const IntPoly& p) {
    std::string s;
    for (std::size_t d = 0; d < p.c.size(); ++d) {
        const Int& v = p.c[d];
        if (v == 0) continue;
        if (!s.empty()) s += v < 0 ? " - " : " + ";
        else if (v < 0) s += "-";
        const Int av = boost::multiprecision::abs(v);
        if (av != 1 || d == 0) s += av.str();
        if (d >= 1) s += "x";
        if (d >= 2) s += "^" + std::to_string(d);
    }
    return s.empty() ? "0" : s;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"counts, label sums and structure of the {4,q} Pascal pyramid"};
    app.require_subcommand(1);

    int rc = 0;

    // counts / sums ----------------------------------------------------------
    int seq_q = 5;
    unsigned seq_n = 10;
    std::string seq_format = "table";
    std::string seq_output;
    for (const char* name : {"counts", "sums"}) {
        CLI::App* sub = app.add_subcommand(
            name, name[0] == 'c' ? "per-level vertex counts by type"
                                 : "per-level sums of vertex labels by type");
        sub->add_option("--q,-q", seq_q, "mosaic parameter (>= 4)")->capture_default_str();
        sub->add_option("--n,-n", seq_n, "last level")->capture_default_str();
        sub->add_option("--format,-f", seq_format, "csv, json or table")->capture_default_str();
        sub->add_option("--output,-o", seq_output, "write to file instead of stdout");
        const bool is_counts = name[0] == 'c';
        sub->callback([&, is_counts] {
            const OutputFormat fmt = parse_format(seq_format);
            std::string text;
            if (is_counts) {
                const auto rows = counts_by_recurrence(seq_q, seq_n);
                text = fmt == OutputFormat::Csv    ? render_counts_csv(rows)
                       : fmt == OutputFormat::Json ? render_counts_json(seq_q, rows)
                                                   : render_counts_table(rows);
            } else {
                const auto rows = sums_by_recurrence(seq_q, seq_n);
                text = fmt == OutputFormat::Csv    ? render_sums_csv(rows)
                       : fmt == OutputFormat::Json ? render_sums_json(seq_q, rows)
                                                   : render_sums_table(rows);
            }
            emit(text, seq_output);
        });
    }

    // labels ------------------------------------------------------------------
    int lab_q = 5;
    unsigned lab_level = 4;
    std::size_t lab_cap = 0;
    {
        CLI::App* sub = app.add_subcommand("labels", "list the labelled vertices of one level");
        sub->add_option("--q,-q", lab_q, "mosaic parameter (>= 4)")->capture_default_str();
        sub->add_option("--level,-l", lab_level, "level to build")->capture_default_str();
        sub->add_option("--cap", lab_cap, "vertex capacity (0 = PP4Q_CAP_VERTICES or default)");
        sub->callback([&] {
            const LevelGraph g = build_level(lab_q, lab_level, resolve_cap(lab_cap));
            emit(render_labels_text(g), "");
        });
    }

    // verify -------------------------------------------------------------------
    int ver_q = 5;
    unsigned ver_n = 10;
    bool ver_json = false;
    bool ver_printed_d = false;
    std::size_t ver_cap = 0;
    {
        CLI::App* sub =
            app.add_subcommand("verify", "cross-check every independent computation route");
        sub->add_option("--q,-q", ver_q, "mosaic parameter (>= 4)")->capture_default_str();
        sub->add_option("--n,-n", ver_n, "last level to check")->capture_default_str();
        sub->add_flag("--json", ver_json, "machine-readable report");
        sub->add_flag("--printed-d-feed", ver_printed_d,
                      "debug: feed the sum system's d^ line with plain vertex counts");
        sub->add_option("--cap", ver_cap, "vertex capacity (0 = PP4Q_CAP_VERTICES or default)");
        sub->callback([&] {
            const DhatReading reading =
                ver_printed_d ? DhatReading::PrintedUnhatted : DhatReading::Hatted;
            const VerifyReport rep = run_verify(ver_q, ver_n, resolve_cap(ver_cap), reading);
            emit(ver_json ? verify_json(rep) : verify_text(rep), "");
            rc = verify_exit_code(rep);
        });
    }

    // export -------------------------------------------------------------------
    int exp_q = 5;
    unsigned exp_level = 4;
    std::string exp_format = "json";
    std::string exp_output;
    std::size_t exp_cap = 0;
    {
        CLI::App* sub = app.add_subcommand("export", "dump one level as json, csv or dot");
        sub->add_option("--q,-q", exp_q, "mosaic parameter (>= 4)")->capture_default_str();
        sub->add_option("--level,-l", exp_level, "level to build")->capture_default_str();
        sub->add_option("--format,-f", exp_format, "json, csv or dot")->capture_default_str();
        sub->add_option("--output,-o", exp_output, "write to file instead of stdout");
        sub->add_option("--cap", exp_cap, "vertex capacity (0 = PP4Q_CAP_VERTICES or default)");
        sub->callback([&] {
            const std::size_t cap = resolve_cap(exp_cap);
            if (exp_format == "dot" && exp_level == 0)
                throw std::invalid_argument("dot output needs --level >= 1");
            HptFace face(exp_q, cap);
            LevelGraph g = build_level0(exp_q);
            LevelGraph prev;
            for (unsigned i = 1; i <= exp_level; ++i) {
                prev = std::move(g);
                g = build_next_level(prev, face, cap);
            }
            std::string text;
            if (exp_format == "json") text = render_level_json(g);
            else if (exp_format == "csv") text = render_level_csv(g);
            else if (exp_format == "dot") text = render_transition_dot(prev, g);
            else throw std::invalid_argument("unknown format '" + exp_format + "'");
            emit(text, exp_output);
        });
    }

    // gf -----------------------------------------------------------------------
    int gf_q = 5;
    std::string gf_which = "shat";
    unsigned gf_terms = 11;
    std::string gf_format = "text";
    {
        CLI::App* sub = app.add_subcommand(
            "gf", "rational generating function of a level total, with series prefix");
        sub->add_option("--q,-q", gf_q, "mosaic parameter (>= 4)")->capture_default_str();
        sub->add_option("--which,-w", gf_which, "s (counts) or shat (label sums)")
            ->capture_default_str();
        sub->add_option("--terms,-t,--n", gf_terms, "series terms to print")->capture_default_str();
        sub->add_option("--format,-f", gf_format, "text or json")->capture_default_str();
        sub->callback([&] {
            if (gf_which != "s" && gf_which != "shat")
                throw std::invalid_argument("--which must be s or shat");
            const RationalGF gf = gf_which == "s" ? s_gf(gf_q) : shat_gf(gf_q);
            const auto series = gf_series(gf, gf_terms);
            if (gf_format == "json") {
                nlohmann::json doc;
                doc["q"] = gf_q;
                doc["which"] = gf_which;
                doc["numerator"] = nlohmann::json::array();
                for (const auto& c : gf.num.c) doc["numerator"].push_back(dec(c));
                doc["denominator"] = nlohmann::json::array();
                for (const auto& c : gf.den.c) doc["denominator"].push_back(dec(c));
                doc["series"] = nlohmann::json::array();
                for (const auto& c : series) doc["series"].push_back(dec(c));
                emit(doc.dump(2) + "\n", "");
            } else if (gf_format == "text") {
                std::string text = "which: " + gf_which + " (q = " + std::to_string(gf_q) + ")\n";
                text += "numerator: " + gf_poly_str(gf.num) + "\n";
                text += "denominator: " + gf_poly_str(gf.den) + "\n";
                text += "series:";
                for (const auto& c : series) text += " " + dec(c);
                text += "\n";
                emit(text, "");
            } else {
                throw std::invalid_argument("unknown format '" + gf_format + "'");
            }
        });
    }

    // ratio --------------------------------------------------------------------
    int rat_q = 5;
    unsigned rat_n = 20;
    {
        CLI::App* sub =
            app.add_subcommand("ratio", "asymptotic level-sum growth ratio, exact and observed");
        sub->add_option("--q,-q", rat_q, "mosaic parameter (>= 4)")->capture_default_str();
        sub->add_option("--n,-n", rat_n, "level for the observed ratio")->capture_default_str();
        sub->callback([&] {
            std::string text = "q: " + std::to_string(rat_q) + "\n";
            if (rat_q == 4) {
                text += "exact: 3\n";
                text += "decimal: 3.0\n";
                text += "observed (n=" + std::to_string(rat_n) + "): " +
                        empirical_ratio(4, rat_n) + "\n";
            } else {
                const GrowthRatio gr = growth_ratio(rat_q);
                text += "exact: " + gr.exact + "\n";
                text += "decimal: " + gr.decimal + "\n";
                text += "observed (n=" + std::to_string(rat_n) + "): " +
                        empirical_ratio(rat_q, rat_n) + "\n";
            }
            text += "references: euclidean layer ratio 3, planar {4,5} mosaic ratio ~10.351\n";
            emit(text, "");
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return rc;
}
