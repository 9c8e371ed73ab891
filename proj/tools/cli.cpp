#include "cli.hpp"

#include "modelhom/barcode.hpp"
#include "modelhom/distance.hpp"
#include "modelhom/error.hpp"
#include "modelhom/fixtures.hpp"
#include "modelhom/model_io.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <filesystem>
#include <optional>
#include <ostream>

namespace modelhom {

namespace {

// Bad input files and flag values: exit status 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

ParsedModel load_model(const std::string& path, bool auto_close, std::ostream& err) {
  try {
    ParseOptions opts;
    opts.auto_close = auto_close;
    opts.source = path;
    auto parsed = parse_model(read_file(path), opts);
    for (const auto& w : parsed.warnings) err << path << ": warning: " << w << '\n';
    return parsed;
  } catch (const InputError& e) {
    throw UsageError(e.what());
  }
}

template <class F>
auto usage(F&& f) {
  try {
    return f();
  } catch (const InputError& e) {
    throw UsageError(e.what());
  }
}

struct OrderFlags {
  std::optional<int> max_dim;
  std::optional<std::uint64_t> seed;

  void attach(CLI::App* app) {
    app->add_option("--max-dim", max_dim, "Dimension cap m of the reference complex (default: top model dimension)")
        ->check(CLI::NonNegativeNumber);
    app->add_option("--seed", seed, "Use a seeded permuted flat filtration instead of shortlex");
  }

  FiltrationOrder make(const UniversePtr& u, const std::vector<const LabelledComplex*>& models) const {
    int m = 0;
    for (const auto* k : models) m = std::max(m, k->dimension());
    if (max_dim) {
      if (*max_dim < m) throw UsageError("--max-dim " + std::to_string(*max_dim) + " is below the model dimension " +
                                         std::to_string(m));
      m = *max_dim;
    }
    auto order = FiltrationOrder::shortlex(u, m);
    if (seed) order = FiltrationOrder::permuted(order, *seed);
    return order;
  }
};

Mode mode_flag(const std::string& s) {
  return usage([&] { return parse_mode(s); });
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Compare models encoded as labelled simplicial complexes", "modelhom"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for every subcommand");

  int status = 0;

  // build
  auto* build = app.add_subcommand("build", "Validate a model and print simplex counts per dimension");
  std::string build_path;
  bool auto_close = false;
  build->add_option("model", build_path, "Model document")->required();
  build->add_flag("--auto-close", auto_close, "Add missing faces to explicit simplex lists");
  build->callback([&] {
    const auto parsed = load_model(build_path, auto_close, err);
    const auto& k = parsed.complex;
    const auto report = validate(k);
    if (!report.ok()) throw OperationError(report.describe(*k.universe()));
    const auto counts = k.count_by_dimension();
    const int last = std::min(k.max_dim(), k.dimension() + 1);
    for (int d = 0; d <= last; ++d) {
      const std::size_t c = d < static_cast<int>(counts.size()) ? counts[static_cast<std::size_t>(d)] : 0;
      out << (d ? " " : "") << d << ':' << c;
    }
    out << '\n';
  });

  // barcode
  auto* barcode = app.add_subcommand("barcode", "Persistence barcode under a flat filtration");
  std::string barcode_path, format = "json", barcode_out;
  OrderFlags barcode_order;
  barcode->add_option("model", barcode_path, "Model document")->required();
  barcode->add_option("--format", format, "json, svg or text")->capture_default_str();
  barcode->add_option("--out", barcode_out, "Write to a file instead of standard output");
  barcode_order.attach(barcode);
  barcode->callback([&] {
    const auto fmt = usage([&] { return parse_barcode_format(format); });
    const auto parsed = load_model(barcode_path, false, err);
    const auto order = barcode_order.make(parsed.complex.universe(), {&parsed.complex});
    const auto doc = export_barcode(compute_persistence(parsed.complex, order, parsed.document.name), fmt);
    if (barcode_out.empty())
      out << doc;
    else
      write_file(barcode_out, doc);
  });

  // distance
  auto* distance = app.add_subcommand("distance", "Distance between two models");
  std::string dist_a, dist_b, dist_mode = "simplicial";
  OrderFlags dist_order;
  distance->add_option("a", dist_a, "First model")->required();
  distance->add_option("b", dist_b, "Second model")->required();
  distance->add_option("--mode", dist_mode, "simplicial or persistence")->capture_default_str();
  dist_order.attach(distance);
  distance->callback([&] {
    const auto mode = usage([&] { return parse_distance_mode(dist_mode); });
    const auto a = load_model(dist_a, false, err), b = load_model(dist_b, false, err);
    if (mode == DistanceMode::Simplicial) {
      out << d_simplicial(a.complex, b.complex) << '\n';
      return;
    }
    if (!same_universe(a.complex.universe(), b.complex.universe()))
      throw InputError("models use different universes");
    const auto order = dist_order.make(a.complex.universe(), {&a.complex, &b.complex});
    out << d_persistence(compute_persistence(a.complex, order), compute_persistence(b.complex, order)) << '\n';
  });

  // matrix
  auto* matrix = app.add_subcommand("matrix", "Pairwise distances between every model in a directory");
  std::string matrix_dir, matrix_mode = "simplicial", matrix_out = "csv";
  OrderFlags matrix_order;
  matrix->add_option("dir", matrix_dir, "Directory of model documents (*.json)")->required();
  matrix->add_option("--mode", matrix_mode, "simplicial or persistence")->capture_default_str();
  matrix->add_option("--out", matrix_out, "csv or json")->capture_default_str();
  matrix_order.attach(matrix);
  matrix->callback([&] {
    const auto mode = usage([&] { return parse_distance_mode(matrix_mode); });
    if (matrix_out != "csv" && matrix_out != "json") throw UsageError("--out must be csv or json");
    namespace fs = std::filesystem;
    if (!fs::is_directory(matrix_dir)) throw UsageError("'" + matrix_dir + "' is not a directory");
    std::vector<std::string> paths;
    for (const auto& entry : fs::directory_iterator(matrix_dir))
      if (entry.is_regular_file() && entry.path().extension() == ".json") paths.push_back(entry.path().string());
    std::sort(paths.begin(), paths.end());
    std::vector<LabelledComplex> models;
    std::vector<std::string> names;
    for (const auto& p : paths) {
      auto parsed = load_model(p, false, err);
      names.push_back(parsed.document.name);
      models.push_back(std::move(parsed.complex));
    }
    std::optional<FiltrationOrder> order;
    if (mode == DistanceMode::Persistence && !models.empty()) {
      for (const auto& k : models)
        if (!same_universe(models.front().universe(), k.universe()))
          throw InputError("models use different universes");
      std::vector<const LabelledComplex*> ptrs;
      for (const auto& k : models) ptrs.push_back(&k);
      order = matrix_order.make(models.front().universe(), ptrs);
    }
    const auto result = distance_matrix(models, names, mode, order);
    out << (matrix_out == "csv" ? result.to_csv() : result.to_json());
  });

  // rank
  auto* rank = app.add_subcommand("rank", "Rank of a simplex in a flat filtration");
  std::string rank_simplex, rank_universe;
  OrderFlags rank_order;
  rank->add_option("simplex", rank_simplex, "Comma-separated labels, or a JSON array of labels")->required();
  rank->add_option("--universe", rank_universe, "Universe document")->required();
  rank_order.attach(rank);
  rank->callback([&] {
    const auto u = usage([&] { return parse_universe(read_file(rank_universe), rank_universe); });
    std::vector<std::string> labels;
    if (!rank_simplex.empty() && rank_simplex.front() == '[') {
      labels = usage([&] {
        try {
          return nlohmann::json::parse(rank_simplex).get<std::vector<std::string>>();
        } catch (const nlohmann::json::exception&) {
          throw InputError("simplex must be a JSON array of labels");
        }
      });
    } else {
      std::size_t start = 0;
      while (start <= rank_simplex.size()) {
        const auto comma = rank_simplex.find(',', start);
        labels.push_back(rank_simplex.substr(start, comma == std::string::npos ? std::string::npos : comma - start));
        if (comma == std::string::npos) break;
        start = comma + 1;
      }
    }
    const Simplex s = usage([&] {
      std::vector<Vertex> vs;
      for (const auto& l : labels) vs.push_back(u->index(l));
      return Simplex(std::move(vs));
    });
    if (!rank_order.max_dim) rank_order.max_dim = s.dimension();
    const LabelledComplex empty(u, {}, 0);
    const auto order = rank_order.make(u, {&empty});
    out << usage([&] { return order.rank(s); }) << '\n';
  });

  // equiv
  auto* equiv = app.add_subcommand("equiv", "Model equivalence through admissible operations");
  equiv->require_subcommand(1);

  auto* verify = equiv->add_subcommand("verify", "Check an operation script taking one model to another");
  std::string ver_a, ver_b, ver_script, ver_decl, ver_mode = "strict";
  verify->add_option("a", ver_a, "Source model")->required();
  verify->add_option("b", ver_b, "Target model")->required();
  verify->add_option("script", ver_script, "Operation script")->required();
  verify->add_option("--decl", ver_decl, "Concept declaration")->required();
  verify->add_option("--mode", ver_mode, "strict or quotient")->capture_default_str();
  verify->callback([&] {
    const Mode mode = mode_flag(ver_mode);
    const auto a = load_model(ver_a, false, err), b = load_model(ver_b, false, err);
    const auto script = usage([&] { return parse_script(read_file(ver_script), ver_script); });
    const auto decl = usage([&] { return parse_declaration(read_file(ver_decl), ver_decl); });
    const auto verdict = verify_script(a.complex, script, b.complex, decl, mode);
    for (const auto& step : verdict.trace) {
      out << "step " << step.index + 1 << ": " << step.op;
      if (step.admissible && step.invertible)
        out << " ok " << step.fingerprint << '\n';
      else
        out << " rejected: " << step.note << '\n';
    }
    if (verdict.accepted) {
      out << "accepted (" << verdict.trace.size() << " steps, " << mode_name(mode) << ")\n";
    } else {
      out << "rejected: " << verdict.reason << '\n';
      status = 1;
    }
  });

  auto* invert_cmd = equiv->add_subcommand("invert", "Print the reversed inverse of a script");
  std::string inv_a, inv_script, inv_decl, inv_mode = "strict";
  invert_cmd->add_option("a", inv_a, "Model the script starts from")->required();
  invert_cmd->add_option("script", inv_script, "Operation script")->required();
  invert_cmd->add_option("--decl", inv_decl, "Concept declaration")->required();
  invert_cmd->add_option("--mode", inv_mode, "strict or quotient")->capture_default_str();
  invert_cmd->callback([&] {
    const Mode mode = mode_flag(inv_mode);
    const auto a = load_model(inv_a, false, err);
    const auto script = usage([&] { return parse_script(read_file(inv_script), inv_script); });
    const auto decl = usage([&] { return parse_declaration(read_file(inv_decl), inv_decl); });
    out << serialize_script(invert_script(a.complex, script, decl, mode));
  });

  auto* search = equiv->add_subcommand("search", "Breadth-first search for a shortest script");
  std::string s_a, s_b, s_decl, s_mode = "strict", s_out;
  std::size_t max_ops = 4, max_states = 200000;
  search->add_option("a", s_a, "Source model")->required();
  search->add_option("b", s_b, "Target model")->required();
  search->add_option("--decl", s_decl, "Concept declaration")->required();
  search->add_option("--max-ops", max_ops, "Longest script considered")->capture_default_str();
  search->add_option("--max-states", max_states, "Distinct complexes explored before giving up")
      ->capture_default_str();
  search->add_option("--mode", s_mode, "strict or quotient")->capture_default_str();
  search->add_option("--out", s_out, "Also write a found script to this file");
  search->callback([&] {
    SearchOptions opts;
    opts.max_ops = max_ops;
    opts.max_states = max_states;
    opts.mode = mode_flag(s_mode);
    const auto a = load_model(s_a, false, err), b = load_model(s_b, false, err);
    const auto decl = usage([&] { return parse_declaration(read_file(s_decl), s_decl); });
    const auto result = search_equivalence(a.complex, b.complex, decl, opts);
    if (!result.found) {
      out << "not-found-within-bound (max_ops=" << max_ops << ", states=" << result.states << ")\n";
      return;
    }
    const auto doc = serialize_script(result.script);
    out << doc;
    if (!s_out.empty()) write_file(s_out, doc);
  });

  // fixtures
  auto* fixtures = app.add_subcommand("fixtures", "Write the built-in model corpus to a directory");
  std::string fixtures_dir;
  fixtures->add_option("dir", fixtures_dir, "Output directory")->required();
  fixtures->callback([&] {
    for (const auto& p : export_fixtures(fixtures_dir)) out << p << '\n';
  });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return status;
}

}  // namespace modelhom
