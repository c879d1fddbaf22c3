#include "cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "gvz/chartheory.hpp"
#include "gvz/fixtures.hpp"
#include "gvz/io.hpp"
#include "gvz/verify.hpp"

namespace gvz {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  for (std::string item; std::getline(ss, item, ',');)
    if (!item.empty()) out.push_back(item);
  return out;
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot write " + path);
  f << text;
}

}  // namespace

int cli_main(int argc, char** argv) { return cli_main(argc, argv, std::cout, std::cerr); }

int cli_main(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact character tables and central-type analysis of finite groups"};
  app.require_subcommand(1);

  std::string input, output, statements_arg, normal_arg, fixtures, family;
  std::vector<std::string> params;
  bool as_json = false;
  std::size_t cap = kDefaultOrderCap;
  unsigned threads = 0;

  auto* table = app.add_subcommand("table", "Print the character table of a GRP file");
  table->add_option("file", input, "GRP file")->required();
  table->add_flag("--json", as_json, "JSON output");
  table->add_option("-o,--output", output, "Output path (default stdout)");
  table->add_option("--cap", cap, "Order cap");

  auto* analyze = app.add_subcommand("analyze", "Central-type analysis of a GRP file");
  analyze->add_option("file", input, "GRP file")->required();
  analyze->add_flag("--json", as_json, "JSON output");
  analyze->add_option("-o,--output", output, "Output path (default stdout)");
  analyze->add_option("--cap", cap, "Order cap");

  auto* verify = app.add_subcommand("verify", "Check every statement over the builtin corpus");
  verify->add_option("--statements", statements_arg, "Comma-separated statement ids");
  verify->add_option("--fixtures", fixtures, "Directory of smallgroup_<order>_<id>.grp files");
  verify->add_flag("--json", as_json, "JSON array of verdict records");
  verify->add_option("-o,--output", output, "Output path (default stdout)");
  verify->add_option("--threads", threads, "Worker threads (0: all cores)");
  std::string ids = "Statement ids:";
  for (auto s : all_statements()) ids += " " + std::string(statement_id(s));
  verify->footer(ids);

  auto* camina = app.add_subcommand("camina", "Camina-pair test for the normal closure of elements");
  camina->add_option("file", input, "GRP file")->required();
  camina->add_option("--normal", normal_arg, "Comma-separated element indices")->required();
  camina->add_flag("--json", as_json, "JSON output");
  camina->add_option("--cap", cap, "Order cap");

  auto* make = app.add_subcommand("make", "Write a builtin family member as a GRP file");
  make->add_option("family", family, "cyclic, dihedral, quaternion, extraspecial, frobenius, symmetric, elementary")
      ->required();
  make->add_option("params", params, "Family parameters");
  make->add_option("-o,--output", output, "Output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return 2;
  }

  try {
    if (*table) {
      auto g = std::make_shared<Group>(load_grp_file(input, cap));
      const auto t = character_table(g);
      if (as_json) {
        emit(dump(table_json(t)), output, out);
      } else {
        std::ostringstream os;
        write_table_text(os, t);
        emit(os.str(), output, out);
      }
      return 0;
    }
    if (*analyze) {
      auto g = std::make_shared<Group>(load_grp_file(input, cap));
      const auto a = analyze_group(character_table(g));
      if (as_json) {
        emit(dump(analysis_json(a)), output, out);
      } else {
        std::ostringstream os;
        write_analysis_text(os, a);
        emit(os.str(), output, out);
      }
      return 0;
    }
    if (*verify) {
      RunOptions opts;
      opts.threads = threads;
      if (!statements_arg.empty()) {
        opts.statements.clear();
        for (const auto& id : split_list(statements_arg)) {
          const auto s = parse_statement(id);
          if (!s) throw UsageError("unknown statement id '" + id + "'");
          opts.statements.push_back(*s);
        }
      }
      std::optional<std::string> dir;
      if (!fixtures.empty()) {
        fixture_paths(fixtures, &err);
        dir = fixtures;
      }
      const auto report = run_corpus(builtin_corpus(dir), opts);
      if (as_json) {
        emit(dump(report_json(report)), output, out);
        std::ostringstream summary;
        write_report_text(summary, report);
        err << summary.str();
      } else {
        std::ostringstream os;
        write_report_text(os, report);
        emit(os.str(), output, out);
      }
      return report.exit_code();
    }
    if (*camina) {
      auto g = std::make_shared<Group>(load_grp_file(input, cap));
      std::vector<Elem> elems;
      for (const auto& tok : split_list(normal_arg)) {
        std::size_t pos = 0;
        unsigned long v = 0;
        try {
          v = std::stoul(tok, &pos);
        } catch (const std::exception&) {
          pos = 0;
        }
        if (pos != tok.size() || v >= g->order())
          throw UsageError("--normal: '" + tok + "' is not an element index below " + std::to_string(g->order()));
        elems.push_back(static_cast<Elem>(v));
      }
      const auto n = normal_closure(*g, elems);
      const auto t = character_table(g);
      const auto r = camina_ops(t, n);
      nlohmann::json ram = nlohmann::json::array();
      if (r.is_camina_pair && !n.is_trivial()) {
        NormalRestriction res(t, n);
        for (auto c : irr_over(t, n)) {
          const auto rep = res.report(c);
          ram.push_back({{"chi", c},
                         {"e", rep.e ? nlohmann::json(*rep.e) : nlohmann::json(nullptr)},
                         {"fully_ramified", rep.fully_ramified}});
        }
      }
      if (as_json) {
        out << dump({{"normal_order", n.size()},
                     {"is_camina_pair", r.is_camina_pair},
                     {"is_central_camina", r.is_central_camina},
                     {"ramification", ram}});
      } else {
        out << "normal_order " << n.size() << "\nis_camina_pair " << std::boolalpha << r.is_camina_pair
            << "\nis_central_camina " << r.is_central_camina << '\n';
        for (const auto& x : ram)
          out << "chi" << x["chi"].get<std::size_t>() << " e=" << x["e"].dump()
              << " fully_ramified=" << x["fully_ramified"].get<bool>() << '\n';
      }
      return 0;
    }
    if (*make) {
      const auto g = builtin_family(family, params);
      emit(write_grp(g), output, out);
      return 0;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace gvz
