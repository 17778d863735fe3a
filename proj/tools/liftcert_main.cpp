// liftcert: partition values, lift scans, matrix classification, tree free
// energies, and certification suites from one binary.
//
// Usage sketch (see README.md for the full flag reference):
//   liftcert z --graph g.edges --model ind
//   liftcert z --graph g.edges --rc --q 2 --w 1
//   liftcert z --graph g.edges --hom h.edges
//   liftcert counts --graph g.edges --lambda 1/2
//   liftcert lift apply --graph g.edges --signs +-+
//   liftcert lift enumerate --graph g.edges
//   liftcert lift extremal-search --graph g.edges --model wr --claim union
//   liftcert girth-boost --graph g.edges --target 6
//   liftcert classify --model wr.json
//   liftcert bethe --model ind --d 3
//   liftcert bethe --hardcore 0.5 --hardcore 1 --d 3
//   liftcert bethe --beta 0.3 --field 0 --d 3
//   liftcert verify --suite all --out report.json
//
// Exit codes: 0 success, 1 verification violations / claim failed,
// 2 file not found, 3 parse error, 4 cap exceeded, 5 domain error.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "CLI11.hpp"
#include "json.hpp"
#include "liftcert/bethe.hpp"
#include "liftcert/catalog.hpp"
#include "liftcert/config.hpp"
#include "liftcert/errors.hpp"
#include "liftcert/graph.hpp"
#include "liftcert/lift_classes.hpp"
#include "liftcert/model.hpp"
#include "liftcert/partition.hpp"
#include "liftcert/verifier.hpp"

namespace {

using nlohmann::ordered_json;

struct FileNotFound : std::runtime_error {
  explicit FileNotFound(const std::string& path) : std::runtime_error(path) {}
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FileNotFound(path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FileNotFound(path);
  out << text;
}

liftcert::Graph load_graph(const std::string& path) {
  std::string text = read_file(path);
  std::size_t first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{')
    return liftcert::parse_graph_json(text);
  return liftcert::parse_graph(text);
}

// A model argument is either a JSON file on disk or a built-in name.
liftcert::SpinModel load_model(const std::string& arg) {
  if (std::filesystem::exists(arg)) return liftcert::parse_model_json(read_file(arg));
  return liftcert::named_model(arg);
}

// Exact when the text parses as an integer/ratio/decimal, float otherwise.
liftcert::Scalar parse_scalar_flag(const std::string& text) {
  try {
    return liftcert::Scalar::parse_exact(text);
  } catch (const liftcert::ParseError&) {
    try {
      std::size_t used = 0;
      double v = std::stod(text, &used);
      if (used != text.size()) throw std::invalid_argument("trailing");
      return liftcert::Scalar::real(v);
    } catch (const std::exception&) {
      throw liftcert::ParseError("not a number: '" + text + "'");
    }
  }
}

ordered_json scalar_json(const liftcert::Scalar& s) {
  if (s.is_exact()) return s.str();  // exact values serialize as "num/den" strings
  return s.to_double();
}

double parse_double_flag(const std::string& text) {
  try {
    std::size_t used = 0;
    double v = std::stod(text, &used);
    if (used != text.size()) throw std::invalid_argument("trailing");
    return v;
  } catch (const std::exception&) {
    throw liftcert::ParseError("not a number: '" + text + "'");
  }
}

void print_value(const liftcert::Config& cfg, const liftcert::Scalar& value) {
  if (cfg.format == "json") {
    ordered_json doc;
    doc["value"] = scalar_json(value);
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << value.str() << "\n";
  }
}

std::vector<liftcert::NamedGraph> load_catalog(const std::string& path) {
  std::vector<liftcert::NamedGraph> out;
  std::istringstream in(read_file(path));
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::size_t b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos) continue;
    std::size_t e = line.find_last_not_of(" \t\r");
    std::string entry = line.substr(b, e - b + 1);
    auto trim = [](std::string s) {
      std::size_t lo = s.find_first_not_of(" \t");
      std::size_t hi = s.find_last_not_of(" \t");
      return lo == std::string::npos ? std::string() : s.substr(lo, hi - lo + 1);
    };
    if (auto eq = entry.find('='); eq != std::string::npos) {
      std::string name = trim(entry.substr(0, eq));
      std::string file = trim(entry.substr(eq + 1));
      if (name.empty() || file.empty())
        throw liftcert::ParseError("catalog line " + std::to_string(lineno) +
                                   ": need name=graphfile");
      out.push_back({name, load_graph(file)});
    } else {
      out.push_back({entry, liftcert::catalog_graph(entry)});
    }
    out.back().graph.check();
  }
  if (out.empty())
    throw liftcert::ParseError("catalog file " + path + " lists no graphs");
  return out;
}

ordered_json row_json(const liftcert::ScanRow& row) {
  ordered_json j;
  j["suite"] = row.suite;
  j["graph"] = row.graph;
  j["model"] = row.model;
  j["claim"] = row.claim;
  j["scanned"] = row.scanned;
  j["exhaustive"] = row.exhaustive;
  j["margin"] = row.margin;
  j["status"] = row.status;
  j["violations"] = row.violations;
  return j;
}

void print_row(const liftcert::Config& cfg, const liftcert::ScanRow& row) {
  if (cfg.format == "json") {
    std::cout << row_json(row).dump(2) << "\n";
    return;
  }
  std::cout << "claim=" << row.claim << " status=" << row.status << " scanned=" << row.scanned
            << " exhaustive=" << (row.exhaustive ? "true" : "false")
            << " margin=" << row.margin << "\n";
  for (const std::string& v : row.violations) std::cout << "  violation: " << v << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"2-lift extremality toolkit"};
  app.require_subcommand(1);

  std::string config_path, format_flag;
  int threads_flag = -1;
  std::uint64_t seed_flag = 0;
  bool seed_given = false;
  app.add_option("--config", config_path, "key=value configuration file");
  app.add_option("--threads", threads_flag, "worker threads (0 = library default)");
  app.add_option("--seed", seed_flag, "seed for sampled scans and generators")
      ->each([&](const std::string&) { seed_given = true; });
  app.add_option("--format", format_flag, "output format")
      ->check(CLI::IsMember({"text", "json", "csv"}));

  // z: partition values, random-cluster values, homomorphism counts.
  auto* z_cmd = app.add_subcommand("z", "evaluate a partition function");
  std::string z_graph, z_model, z_q, z_w, z_hom;
  bool z_rc = false;
  z_cmd->add_option("--graph", z_graph, "edge-list or JSON graph file")->required();
  z_cmd->add_option("--model", z_model, "model name or JSON file");
  z_cmd->add_flag("--rc", z_rc, "evaluate the random-cluster value");
  z_cmd->add_option("--q", z_q, "random-cluster q");
  z_cmd->add_option("--w", z_w, "random-cluster w");
  z_cmd->add_option("--hom", z_hom, "count homomorphisms into this graph file");

  auto* counts_cmd = app.add_subcommand("counts", "independent-set and matching counts");
  std::string counts_graph;
  std::vector<std::string> counts_lambda;
  counts_cmd->add_option("--graph", counts_graph, "edge-list or JSON graph file")->required();
  counts_cmd->add_option("--lambda", counts_lambda,
                         "also evaluate the independence polynomial here (repeatable)");

  auto* lift_cmd = app.add_subcommand("lift", "2-lift operations");
  lift_cmd->require_subcommand(1);
  auto* apply_cmd = lift_cmd->add_subcommand("apply", "build one 2-lift");
  std::string apply_graph, apply_signs;
  std::optional<std::uint64_t> apply_index;
  apply_cmd->add_option("--graph", apply_graph, "base graph file")->required();
  apply_cmd->add_option("--signs", apply_signs, "one +/- per edge");
  apply_cmd->add_option("--index", apply_index, "signing index (lexicographic)");
  auto* enum_cmd = lift_cmd->add_subcommand("enumerate", "list all 2-lifts");
  std::string enum_graph;
  enum_cmd->add_option("--graph", enum_graph, "base graph file")->required();
  auto* search_cmd = lift_cmd->add_subcommand("extremal-search", "scan lifts against a claim");
  std::string search_graph, search_model, search_claim;
  search_cmd->add_option("--graph", search_graph, "base graph file")->required();
  search_cmd->add_option("--model", search_model, "model name or JSON file")->required();
  search_cmd->add_option("--claim", search_claim, "which lift is claimed maximal")
      ->required()
      ->check(CLI::IsMember({"union", "cross"}));

  auto* girth_cmd = app.add_subcommand("girth-boost", "iterate 2-lifts toward a target girth");
  std::string girth_graph;
  int girth_target = 0;
  std::uint64_t girth_budget = 4096;
  girth_cmd->add_option("--graph", girth_graph, "base graph file")->required();
  girth_cmd->add_option("--target", girth_target, "target girth")->required();
  girth_cmd->add_option("--budget", girth_budget, "sampling rounds per step")->capture_default_str();

  auto* classify_cmd = app.add_subcommand("classify", "certify a matrix class");
  std::string classify_model;
  classify_cmd->add_option("--model", classify_model, "model name or JSON file")->required();

  auto* bethe_cmd = app.add_subcommand("bethe", "tree free energies");
  std::string bethe_model;
  int bethe_d = 0, bethe_restarts = 50;
  double bethe_tol = 1e-12;
  std::vector<std::string> bethe_lambda;
  std::vector<double> bethe_beta, bethe_field;
  bethe_cmd->add_option("--model", bethe_model, "model name or JSON file for a BP solve");
  bethe_cmd->add_option("--d", bethe_d, "tree degree")->required();
  bethe_cmd->add_option("--restarts", bethe_restarts, "BP restarts")->capture_default_str();
  bethe_cmd->add_option("--tol", bethe_tol, "BP residual tolerance")->capture_default_str();
  bethe_cmd->add_option("--hardcore", bethe_lambda, "hard-core activities (repeatable)");
  bethe_cmd->add_option("--beta", bethe_beta, "two-state coupling grid (repeatable)");
  bethe_cmd->add_option("--field", bethe_field, "two-state field grid (repeatable)");

  auto* verify_cmd = app.add_subcommand("verify", "run certification suites");
  std::string verify_suite = "all", verify_catalog, verify_out;
  std::optional<std::uint64_t> verify_cap;
  verify_cmd->add_option("--suite", verify_suite, "suite name")->capture_default_str();
  verify_cmd->add_option("--catalog", verify_catalog, "catalog file (names or name=graphfile)");
  verify_cmd->add_option("--cap", verify_cap, "exhaustive scan limit override");
  verify_cmd->add_option("--out", verify_out, "write the JSON report here");

  // Global flags may appear before or after the subcommand.
  std::function<void(CLI::App*)> allow_global = [&](CLI::App* cmd) {
    cmd->fallthrough();
    for (CLI::App* sub : cmd->get_subcommands(nullptr)) allow_global(sub);
  };
  allow_global(&app);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    liftcert::Config cfg;
    if (!config_path.empty()) cfg = liftcert::parse_config(read_file(config_path));
    if (threads_flag >= 0) cfg.threads = threads_flag;
    if (seed_given) cfg.seed = seed_flag;
    if (!format_flag.empty()) cfg.format = format_flag;
    cfg.validate();
#ifdef _OPENMP
    if (cfg.threads > 0) omp_set_num_threads(cfg.threads);
#endif

    if (z_cmd->parsed()) {
      liftcert::Graph g = load_graph(z_graph);
      int modes = (z_model.empty() ? 0 : 1) + (z_rc ? 1 : 0) + (z_hom.empty() ? 0 : 1);
      if (modes != 1)
        throw liftcert::DomainError("z: pick exactly one of --model, --rc, --hom");
      liftcert::Scalar value;
      if (!z_model.empty()) {
        value = liftcert::partition_value(g, load_model(z_model), cfg.caps());
      } else if (z_rc) {
        if (z_q.empty() || z_w.empty()) throw liftcert::DomainError("z: --rc needs --q and --w");
        value = liftcert::random_cluster(
            g, {parse_scalar_flag(z_q), parse_scalar_flag(z_w)}, cfg.caps());
      } else {
        value = liftcert::hom_count(g, load_graph(z_hom), cfg.caps());
      }
      print_value(cfg, value);
      return 0;
    }

    if (counts_cmd->parsed()) {
      liftcert::Graph g = load_graph(counts_graph);
      liftcert::CountVector ic = liftcert::independent_set_counts(g);
      liftcert::CountVector mc = liftcert::matching_counts(g);
      if (cfg.format == "json") {
        ordered_json doc;
        doc["independent_sets"] = ordered_json::array();
        for (const auto& c : ic) doc["independent_sets"].push_back(c.str());
        doc["matchings"] = ordered_json::array();
        for (const auto& c : mc) doc["matchings"].push_back(c.str());
        doc["independence_polynomial"] = ordered_json::array();
        for (const std::string& text : counts_lambda) {
          liftcert::Scalar lam = parse_scalar_flag(text);
          ordered_json entry;
          entry["lambda"] = scalar_json(lam);
          entry["value"] = scalar_json(liftcert::eval_I(g, lam));
          doc["independence_polynomial"].push_back(std::move(entry));
        }
        std::cout << doc.dump(2) << "\n";
      } else {
        std::cout << "independent_sets:";
        for (const auto& c : ic) std::cout << ' ' << c.str();
        std::cout << "\nmatchings:";
        for (const auto& c : mc) std::cout << ' ' << c.str();
        std::cout << "\n";
        for (const std::string& text : counts_lambda) {
          liftcert::Scalar lam = parse_scalar_flag(text);
          std::cout << "I(" << lam.str() << ") = " << liftcert::eval_I(g, lam).str() << "\n";
        }
      }
      return 0;
    }

    if (apply_cmd->parsed()) {
      liftcert::Graph g = load_graph(apply_graph);
      int m = g.edge_count();
      std::vector<std::int8_t> signs;
      if (!apply_signs.empty() && apply_index.has_value())
        throw liftcert::DomainError("lift apply: give --signs or --index, not both");
      if (!apply_signs.empty()) {
        if (static_cast<int>(apply_signs.size()) != m)
          throw liftcert::DomainError("lift apply: need one sign per edge");
        for (char c : apply_signs) {
          if (c != '+' && c != '-') throw liftcert::DomainError("lift apply: signs are + or -");
          signs.push_back(c == '+' ? 1 : -1);
        }
      } else if (apply_index.has_value()) {
        if (m < 64 && *apply_index >= (std::uint64_t(1) << m))
          throw liftcert::DomainError("lift apply: index out of range");
        signs = liftcert::signs_from_index(m, *apply_index);
      } else {
        throw liftcert::DomainError("lift apply: need --signs or --index");
      }
      liftcert::Graph h = liftcert::apply_lift(g, signs);
      if (cfg.format == "json")
        std::cout << liftcert::graph_json(h) << "\n";
      else
        std::cout << liftcert::format_graph(h);
      return 0;
    }

    if (enum_cmd->parsed()) {
      liftcert::Graph g = load_graph(enum_graph);
      liftcert::SigningEnumerator en(g, cfg.signings_cap);
      ordered_json rows = ordered_json::array();
      while (auto s = en.next()) {
        liftcert::Graph h = liftcert::apply_lift(*s);
        std::string signs;
        for (std::int8_t x : s->signs) signs += x > 0 ? '+' : '-';
        auto gh = liftcert::girth(h);
        if (cfg.format == "json") {
          ordered_json row;
          row["index"] = liftcert::index_from_signs(s->signs);
          row["signs"] = signs;
          if (gh)
            row["girth"] = *gh;
          else
            row["girth"] = nullptr;
          row["components"] = liftcert::component_count(h);
          rows.push_back(std::move(row));
        } else {
          std::cout << liftcert::index_from_signs(s->signs) << ' ' << signs << " girth="
                    << (gh ? std::to_string(*gh) : std::string("inf"))
                    << " components=" << liftcert::component_count(h) << "\n";
        }
      }
      if (cfg.format == "json") std::cout << rows.dump(2) << "\n";
      return 0;
    }

    if (search_cmd->parsed()) {
      liftcert::Graph g = load_graph(search_graph);
      liftcert::SpinModel m = load_model(search_model);
      liftcert::LiftClaim claim = search_claim == "union" ? liftcert::LiftClaim::UnionMax
                                                          : liftcert::LiftClaim::CrossMax;
      liftcert::ScanRow row =
          liftcert::verify_two_lift_extremal(g, m, claim, cfg.scan_options(), search_graph,
                                             search_model);
      print_row(cfg, row);
      return row.failed() ? 1 : 0;
    }

    if (girth_cmd->parsed()) {
      liftcert::Graph g = load_graph(girth_graph);
      liftcert::GirthBoostResult res =
          liftcert::girth_boost(g, girth_target, girth_budget, cfg.seed);
      if (cfg.format == "json") {
        ordered_json doc;
        doc["girths"] = ordered_json::array();
        for (const auto& gi : res.girths) {
          if (gi)
            doc["girths"].push_back(*gi);
          else
            doc["girths"].push_back(nullptr);
        }
        doc["reached"] = res.reached;
        doc["graph"] = ordered_json::parse(liftcert::graph_json(res.sequence.back()));
        std::cout << doc.dump(2) << "\n";
      } else {
        std::cout << "girths:";
        for (const auto& gi : res.girths)
          std::cout << ' ' << (gi ? std::to_string(*gi) : std::string("inf"));
        std::cout << "\nreached: " << (res.reached ? "true" : "false") << "\n";
        std::cout << liftcert::format_graph(res.sequence.back());
      }
      return res.reached ? 0 : 1;
    }

    if (classify_cmd->parsed()) {
      liftcert::SpinModel m = load_model(classify_model);
      liftcert::Classification c = liftcert::classify(m);
      liftcert::PairMatrices pm = liftcert::build_pair_matrices(m);
      ordered_json doc;
      doc["verdict"] = liftcert::verdict_name(c.verdict);
      if (c.s_full) {
        doc["certificate"] = ordered_json::array();
        for (int s : *c.s_full) doc["certificate"].push_back(s);
      } else {
        doc["certificate"] = nullptr;
      }
      doc["tp2"] = liftcert::tp2_check(m);
      doc["tn2"] = liftcert::tn2_check(m);
      doc["d1"] = ordered_json::array();
      for (int r = 0; r < pm.d1.n; ++r) {
        ordered_json row = ordered_json::array();
        for (int col = 0; col < pm.d1.n; ++col) row.push_back(scalar_json(pm.d1.at(r, col)));
        doc["d1"].push_back(std::move(row));
      }
      std::cout << doc.dump(2) << "\n";
      return 0;
    }

    if (bethe_cmd->parsed()) {
      int modes = (bethe_model.empty() ? 0 : 1) + (bethe_lambda.empty() ? 0 : 1) +
                  (bethe_beta.empty() ? 0 : 1);
      if (modes != 1)
        throw liftcert::DomainError("bethe: pick exactly one of --model, --hardcore, --beta");
      ordered_json doc;
      if (!bethe_model.empty()) {
        liftcert::SpinModel m = load_model(bethe_model);
        liftcert::BpOptions opt;
        opt.restarts = bethe_restarts;
        opt.seed = cfg.seed;
        opt.tol = bethe_tol;
        std::vector<liftcert::BetheSolution> sols = liftcert::solve_bp(m, bethe_d, opt);
        doc["solutions"] = ordered_json::array();
        for (const liftcert::BetheSolution& s : sols) {
          ordered_json j;
          j["h_tilde"] = s.h_tilde;
          j["value"] = s.value;
          j["residual"] = s.residual;
          j["iterations"] = s.iterations;
          j["converged"] = s.converged;
          doc["solutions"].push_back(std::move(j));
        }
        doc["product_bound"] = liftcert::sidorenko_bound(m, bethe_d);
        if (cfg.format != "json") {
          for (const liftcert::BetheSolution& s : sols) {
            std::cout << "value=" << s.value << " residual=" << s.residual << " h_tilde=[";
            for (std::size_t i = 0; i < s.h_tilde.size(); ++i)
              std::cout << (i ? "," : "") << s.h_tilde[i];
            std::cout << "]\n";
          }
          std::cout << "product_bound=" << liftcert::sidorenko_bound(m, bethe_d) << "\n";
          return 0;
        }
      } else if (!bethe_lambda.empty()) {
        doc["hardcore"] = ordered_json::array();
        for (const std::string& text : bethe_lambda) {
          double lam = parse_double_flag(text);
          ordered_json j;
          j["lambda"] = lam;
          j["alpha"] = liftcert::hardcore_alpha(lam, bethe_d);
          j["phi"] = liftcert::hardcore_phi(lam, bethe_d);
          doc["hardcore"].push_back(std::move(j));
        }
        if (cfg.format != "json") {
          for (const auto& j : doc["hardcore"])
            std::cout << "lambda=" << j["lambda"] << " alpha=" << j["alpha"]
                      << " phi=" << j["phi"] << "\n";
          return 0;
        }
      } else {
        if (bethe_field.empty()) bethe_field.push_back(0.0);
        doc["two_state"] = ordered_json::array();
        for (double beta : bethe_beta) {
          for (double field : bethe_field) {
            ordered_json j;
            j["beta"] = beta;
            j["field"] = field;
            j["h_star"] = liftcert::ising_hstar(beta, field, bethe_d);
            j["phi"] = liftcert::ising_phi(beta, field, bethe_d);
            doc["two_state"].push_back(std::move(j));
          }
        }
        if (cfg.format != "json") {
          for (const auto& j : doc["two_state"])
            std::cout << "beta=" << j["beta"] << " field=" << j["field"]
                      << " h_star=" << j["h_star"] << " phi=" << j["phi"] << "\n";
          return 0;
        }
      }
      std::cout << doc.dump(2) << "\n";
      return 0;
    }

    if (verify_cmd->parsed()) {
      std::vector<std::string> names = liftcert::suite_names();
      if (std::find(names.begin(), names.end(), verify_suite) == names.end())
        throw liftcert::DomainError("verify: unknown suite '" + verify_suite + "'");
      std::vector<liftcert::NamedGraph> catalog =
          verify_catalog.empty() ? liftcert::default_catalog() : load_catalog(verify_catalog);
      liftcert::ScanOptions opt = cfg.scan_options();
      if (verify_cap) opt.exhaustive_limit = *verify_cap;
      std::vector<liftcert::SuiteReport> reports;
      if (verify_suite == "all")
        reports = liftcert::run_all(catalog, opt);
      else
        reports.push_back(liftcert::run_suite(verify_suite, catalog, opt));
      if (!verify_out.empty()) write_file(verify_out, liftcert::report_json(reports));
      if (cfg.format == "json")
        std::cout << liftcert::report_json(reports);
      else if (cfg.format == "csv")
        std::cout << liftcert::report_csv(reports);
      else
        std::cout << liftcert::report_summary(reports);
      return liftcert::reports_all_pass(reports) ? 0 : 1;
    }

    std::cerr << "no subcommand given\n";
    return 5;
  } catch (const FileNotFound& e) {
    std::cerr << "file not found: " << e.what() << "\n";
    return 2;
  } catch (const liftcert::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 3;
  } catch (const liftcert::CapExceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return 4;
  } catch (const liftcert::DomainError& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return 5;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 5;
  }
}
