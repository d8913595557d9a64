// Command-line front end.
//
// Subcommands: verify | stats | graph | distinguish | orbits | classes |
//              catalog | generate
// Exit codes for verify: 0 = validated unextendible matrix, 1 = extendible
// (witness reported), 2 = parse or validation failure.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "upb/upb.hpp"

namespace {

struct InputOptions {
  std::string path;
  std::string catalog;
};

void add_input_options(CLI::App* cmd, InputOptions& in) {
  cmd->add_option("input", in.path, "matrix file in the UOM text format");
  cmd->add_option("--catalog", in.catalog, "use a built-in matrix instead of a file");
}

upb::Uom load_input(const InputOptions& in) {
  if (!in.catalog.empty()) return upb::builtin(in.catalog).uom;
  if (in.path.empty())
    throw upb::DomainError("no input: pass a file or --catalog <name>");
  std::ifstream f(in.path);
  if (!f) throw upb::DomainError("cannot open " + in.path);
  std::ostringstream buf;
  buf << f.rdbuf();
  return upb::Uom::parse(buf.str());
}

void write_output(const std::string& out_path, const std::string& data) {
  if (out_path.empty()) {
    std::cout << data;
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) throw upb::DomainError("cannot write " + out_path);
  f << data;
}

std::string column_set_text(const std::vector<int>& cols) {
  std::string s = "{";
  for (std::size_t i = 0; i < cols.size(); ++i) {
    if (i) s.push_back(',');
    s += std::to_string(cols[i] + 1);
  }
  s.push_back('}');
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"symbolic toolkit for multiqubit unextendible product bases"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags are accepted after the subcommand too

  std::string format = "text";
  std::string out_path;
  app.add_option("--format", format, "output format: text or records")
      ->check(CLI::IsMember({"text", "records"}));
  app.add_option("--out", out_path, "write output to a file instead of stdout");

  InputOptions verify_in, stats_in, graph_in, dist_in, orbits_in, classes_in;

  CLI::App* verify = app.add_subcommand("verify", "validate and decide unextendibility");
  add_input_options(verify, verify_in);

  CLI::App* stats = app.add_subcommand("stats", "per-column orthogonality statistics");
  add_input_options(stats, stats_in);

  CLI::App* graph = app.add_subcommand("graph", "DOT export of the orthogonality graph");
  add_input_options(graph, graph_in);
  int graph_column = 0;
  bool graph_full = false;
  graph->add_option("--column", graph_column, "emit one column subgraph (1-based)");
  graph->add_flag("--full", graph_full, "emit the full labelled multigraph");

  CLI::App* dist = app.add_subcommand("distinguish", "bipartition reducibility audit");
  add_input_options(dist, dist_in);
  int side_k = 2;
  dist->add_option("--k", side_k, "size of the column subset S (default 2)");

  CLI::App* orb = app.add_subcommand("orbits", "column orbit partition");
  add_input_options(orb, orbits_in);

  CLI::App* classes = app.add_subcommand("classes", "column graph isomorphism classes");
  add_input_options(classes, classes_in);

  CLI::App* cat = app.add_subcommand("catalog", "built-in matrices");
  CLI::App* cat_list = cat->add_subcommand("list", "list catalog names");
  CLI::App* cat_show = cat->add_subcommand("show", "print a catalog matrix");
  std::string cat_name;
  cat_show->add_option("name", cat_name, "catalog entry name")->required();
  cat->require_subcommand(1);

  CLI::App* gen = app.add_subcommand("generate", "generate a circulant matrix");
  int odd_q = 0;
  gen->add_option("--odd-q", odd_q, "odd local count q >= 3")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (verify->parsed()) {
      upb::Uom u;
      try {
        u = load_input(verify_in);
      } catch (const upb::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
      }
      upb::ReportBundle bundle = upb::make_report(u);
      write_output(out_path, format == "records" ? upb::render_records(bundle)
                                                 : upb::render_text(bundle));
      return bundle.upb ? 0 : 1;
    }

    if (stats->parsed()) {
      upb::Uom u = load_input(stats_in);
      std::string out;
      if (format == "records") {
        for (int j = 0; j < u.cols(); ++j) {
          upb::ColumnStats st = upb::column_stats(u, j);
          out += "col." + std::to_string(j + 1) + ".sigma=" + std::to_string(st.sigma) + "\n";
          out += "col." + std::to_string(j + 1) + ".p=" + std::to_string(st.p) + "\n";
        }
        upb::PairBound b = upb::pair_bound(u);
        out += "sum_p=" + std::to_string(b.lhs) + "\n";
        out += "bound.rhs=" + std::to_string(b.rhs) + "\n";
        out += std::string("bound.holds=") + (b.holds ? "true" : "false") + "\n";
      } else {
        for (int j = 0; j < u.cols(); ++j) {
          upb::ColumnStats st = upb::column_stats(u, j);
          out += "col " + std::to_string(j + 1) + ": sigma=" + std::to_string(st.sigma) +
                 " p=" + std::to_string(st.p) + "\n";
        }
        upb::PairBound b = upb::pair_bound(u);
        out += "sum p: " + std::to_string(b.lhs) + "  bound m(m-1)/2: " +
               std::to_string(b.rhs) + "  holds: " + (b.holds ? "yes" : "no") + "\n";
      }
      write_output(out_path, out);
      return 0;
    }

    if (graph->parsed()) {
      upb::Uom u = load_input(graph_in);
      upb::OrthoGraph g = upb::build_graph(u);
      std::string out;
      if (graph_full || graph_column == 0) {
        out = upb::dot_export(g);
      } else {
        out = upb::dot_export(upb::column_subgraph(g, graph_column - 1),
                              "column" + std::to_string(graph_column));
      }
      write_output(out_path, out);
      return 0;
    }

    if (dist->parsed()) {
      upb::Uom u = load_input(dist_in);
      std::vector<upb::BipartitionReport> reports = upb::audit_all_pairs(u, side_k);
      std::string out;
      for (const upb::BipartitionReport& r : reports) {
        out += "S=" + column_set_text(r.s) + " | side1=" +
               (r.reducible_on_s ? "reducible" : "irreducible") + " | side2=" +
               (r.reducible_on_complement ? "reducible" : "irreducible") +
               " | verdict=" + upb::verdict_name(r.verdict) + "\n";
      }
      upb::AuditSummary s = upb::summarize(reports);
      out += "summary: " + std::to_string(s.total) + " subsets, " +
             std::to_string(s.indistinguishable) + " indistinguishable, " +
             std::to_string(s.distinguishable_hint) + " with a reducible side\n";
      write_output(out_path, out);
      return 0;
    }

    if (orb->parsed()) {
      upb::Uom u = load_input(orbits_in);
      std::string out;
      for (const auto& cls : upb::orbits(u))
        out += column_set_text(cls) + " signature " +
               upb::signature_string(upb::column_signature(u, cls[0])) + "\n";
      write_output(out_path, out);
      return 0;
    }

    if (classes->parsed()) {
      upb::Uom u = load_input(classes_in);
      std::string out;
      for (const auto& cls : upb::iso_classes(u)) out += column_set_text(cls) + "\n";
      write_output(out_path, out);
      return 0;
    }

    if (cat->parsed()) {
      if (cat_list->parsed()) {
        std::string out;
        for (const std::string& n : upb::catalog_names()) out += n + "\n";
        write_output(out_path, out);
        return 0;
      }
      upb::CatalogEntry e = upb::builtin(cat_name);
      std::string out;
      if (format == "records") {
        out += "name=" + e.name + "\n";
        out += "provenance=" + e.provenance + "\n";
        out += "rows=" + std::to_string(e.uom.rows()) + "\n";
        out += "cols=" + std::to_string(e.uom.cols()) + "\n";
        out += e.uom.serialize();
      } else {
        out += "# " + e.name + ": " + e.provenance + "\n";
        out += e.uom.serialize();
      }
      write_output(out_path, out);
      return 0;
    }

    if (gen->parsed()) {
      upb::Uom u = upb::gen_odd_q(odd_q);
      write_output(out_path, u.serialize());
      return 0;
    }
  } catch (const upb::DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const upb::IndexError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const upb::UnknownName& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const upb::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
