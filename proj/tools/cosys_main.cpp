#include <CLI11.hpp>
#include <chrono>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "cosys/catalog.hpp"
#include "cosys/cosystole.hpp"
#include "cosys/errors.hpp"
#include "cosys/graph.hpp"
#include "cosys/matroid.hpp"
#include "cosys/verify.hpp"

namespace {

using nlohmann::ordered_json;

int exit_code_for(cosys::ErrorKind k) {
  switch (k) {
    case cosys::ErrorKind::NoAdmissibleTriple:
    case cosys::ErrorKind::NoCocircuits:
    case cosys::ErrorKind::Acyclic:
      return 3;  // the invariant is undefined on this input
    case cosys::ErrorKind::ZeroTotalWeight:
    case cosys::ErrorKind::InvalidWeight:
      return 4;
    default:
      return 2;
  }
}

std::string slurp(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw cosys::Error(cosys::ErrorKind::Parse, "cannot read " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

struct MatroidSource {
  std::string name, file;
  std::vector<std::string> deletes, contracts;

  void add_options(CLI::App* cmd, const std::string& prefix = "") {
    auto* n = cmd->add_option("--" + prefix + "name", name, "catalog entry name");
    auto* f = cmd->add_option("--" + prefix + "file", file, "matroid text file");
    n->excludes(f);
  }
  void add_minor_options(CLI::App* cmd, const std::string& prefix = "") {
    cmd->add_option("--" + prefix + "delete", deletes, "element to delete (repeatable)");
    cmd->add_option("--" + prefix + "contract", contracts,
                    "element to contract (repeatable)");
  }

  // identifier for reports: catalog name, file path, or the matroid's own name
  std::string describe() const { return !name.empty() ? name : file; }

  cosys::BinaryMatroid load() const {
    if (name.empty() == file.empty())
      throw cosys::Error(cosys::ErrorKind::Parse,
                         "exactly one of --name/--file is required");
    cosys::BinaryMatroid m = !name.empty()
                                 ? cosys::catalog_get(name).matroid
                                 : cosys::matroid_from_text(slurp(file));
    for (const auto& e : deletes) m = m.deletion(e);
    for (const auto& e : contracts) m = m.contraction(e);
    return m;
  }
};

ordered_json weights_json(const cosys::WeightVector& w) {
  ordered_json j = ordered_json::object();
  for (std::size_t i = 0; i < w.labels.size(); ++i)
    j[w.labels[i]] = w.values[i].str();
  return j;
}

int cmd_invariant(const MatroidSource& src, const std::string& kind,
                  const std::string& weights_file, bool as_json) {
  cosys::BinaryMatroid m = src.load();
  auto t0 = std::chrono::steady_clock::now();
  auto elapsed = [&t0] {
    return (long)std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - t0)
        .count();
  };
  if (!weights_file.empty()) {
    cosys::WeightVector mu = cosys::parse_weight_file(m, slurp(weights_file));
    cosys::Rational v =
        kind == "sys3" ? cosys::sys3_weighted(m, mu) : cosys::sys_weighted(m, mu);
    if (as_json) {
      ordered_json j;
      j["matroid"] = src.describe();
      j["invariant"] = kind == "sys3" ? "sys3_weighted" : "sys_weighted";
      j["value"] = v.str();
      j["weights"] = weights_json(mu);
      j["dual"] = ordered_json::array();
      j["elapsed_ms"] = elapsed();
      std::cout << j.dump() << "\n";
    } else {
      std::cout << "value " << v.str() << "\n";
    }
    return 0;
  }
  cosys::InvariantResult res =
      kind == "sys3" ? cosys::sys3_star(m) : cosys::sys_star(m);
  if (as_json) {
    ordered_json j;
    j["matroid"] = src.describe();
    j["invariant"] = kind == "sys3" ? "sys3_star" : "sys_star";
    j["value"] = res.value.str();
    j["weights"] = weights_json(res.optimal_weights);
    ordered_json dual = ordered_json::array();
    const auto& cocs = m.cocircuits();
    for (const auto& d : res.dual) {
      ordered_json entry;
      ordered_json sets = ordered_json::array();
      for (int ci : d.cocircuits) {
        ordered_json labels = ordered_json::array();
        for (const auto& l : m.labels_of(cocs[(std::size_t)ci])) labels.push_back(l);
        sets.push_back(labels);
      }
      entry["cocircuits"] = sets;
      entry["multiplier"] = d.multiplier.str();
      dual.push_back(entry);
    }
    j["dual"] = dual;
    j["elapsed_ms"] = elapsed();
    std::cout << j.dump() << "\n";
  } else {
    std::cout << cosys::certificate_text(m, res);
  }
  return 0;
}

int run(int argc, char** argv) {
  CLI::App app{"exact weighted girth invariants of binary matroids"};
  app.require_subcommand(1);

  // catalog
  auto* cat = app.add_subcommand("catalog", "list or export the named matroids");
  cat->require_subcommand(1);
  auto* cat_list = cat->add_subcommand("list", "print all entries");
  std::string export_name;
  auto* cat_export = cat->add_subcommand("export", "write a matroid text file to stdout");
  cat_export->add_option("name", export_name, "entry name")->required();

  // invariant
  auto* inv = app.add_subcommand("invariant", "compute sys* or sys3*");
  std::string inv_kind, inv_weights;
  bool inv_json = false;
  inv->add_option("kind", inv_kind, "sys or sys3")
      ->required()
      ->check(CLI::IsMember({"sys", "sys3"}));
  MatroidSource inv_src;
  inv_src.add_options(inv);
  inv->add_option("--weights", inv_weights, "weight file (evaluate instead of maximize)");
  inv->add_flag("--json", inv_json, "emit JSON");

  // cocircuits
  auto* coc = app.add_subcommand("cocircuits", "print all cocircuits");
  MatroidSource coc_src;
  coc_src.add_options(coc);

  // minor
  auto* minor = app.add_subcommand("minor", "delete/contract elements, print the result");
  MatroidSource minor_src;
  minor_src.add_options(minor);
  minor_src.add_minor_options(minor);

  // iso
  auto* iso = app.add_subcommand("iso", "search for a cocircuit-preserving bijection");
  MatroidSource a_src, b_src;
  a_src.add_options(iso, "a-");
  a_src.add_minor_options(iso, "a-");
  b_src.add_options(iso, "b-");
  b_src.add_minor_options(iso, "b-");

  // census
  auto* census = app.add_subcommand("census", "3-edge-connected non-planar cubic graphs");
  int census_n = 0;
  census->add_option("--vertices", census_n, "8 or 10")->required();

  // verify
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  std::string suite;
  verify->add_option("suite", suite, "values|monotonicity|census|lemmaG7|all")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;  // bad usage is an input error; --help stays 0
  }

  if (cat_list->parsed()) {
    for (const auto& name : cosys::catalog_names()) {
      cosys::CatalogEntry e = cosys::catalog_get(name);
      std::cout << name << " rank=" << e.matroid.rank()
                << " elements=" << e.matroid.size() << " sys3="
                << (e.expected_sys3 ? e.expected_sys3->str() : "-") << " cogirth="
                << (e.expected_cogirth ? std::to_string(*e.expected_cogirth) : "-")
                << "\n";
    }
    return 0;
  }
  if (cat_export->parsed()) {
    std::cout << cosys::to_text(cosys::catalog_get(export_name).matroid);
    return 0;
  }
  if (inv->parsed()) return cmd_invariant(inv_src, inv_kind, inv_weights, inv_json);
  if (coc->parsed()) {
    cosys::BinaryMatroid m = coc_src.load();
    for (const auto& c : m.cocircuits()) std::cout << cosys::render(c, m) << "\n";
    return 0;
  }
  if (minor->parsed()) {
    std::cout << cosys::to_text(minor_src.load());
    return 0;
  }
  if (iso->parsed()) {
    cosys::BinaryMatroid a = a_src.load(), b = b_src.load();
    auto bij = cosys::isomorphism(a, b);
    if (!bij) {
      std::cout << "not isomorphic\n";
    } else {
      for (const auto& [la, lb] : *bij) std::cout << la << " -> " << lb << "\n";
    }
    return 0;
  }
  if (census->parsed()) {
    bool first = true;
    for (const auto& g : cosys::census_msr_cographic(census_n)) {
      if (!first) std::cout << "\n";
      std::cout << cosys::to_text(g);
      first = false;
    }
    return 0;
  }
  if (verify->parsed()) {
    cosys::VerificationReport report = cosys::run_suite(suite);
    std::cout << cosys::report_text(report);
    return report.overall() ? 0 : 1;
  }
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const cosys::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
