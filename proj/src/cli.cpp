#include "halfshift/cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <iomanip>
#include <map>
#include <sstream>

#include "halfshift/boundary.hpp"
#include "halfshift/chain.hpp"
#include "halfshift/json_io.hpp"
#include "halfshift/render.hpp"
#include "halfshift/shapes.hpp"

namespace halfshift::cli {

namespace {

struct Options {
  std::string family = "C";
  int n = 2;
  int k = -1;
  std::string output = "text";
  bool json_flag = false;
  std::size_t cell_cap = kDefaultCellCap;
  unsigned seed = 12345;
  bool strict_rank = false;
  int random_words = 0;
  std::string alpha_str, lambda_str;
  int dtype = -1;

  std::string mode() const { return json_flag ? "json" : output; }
};

std::vector<int> parse_parts(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(std::stoi(item));
  return out;
}

int rank_minimum(Family f) {
  switch (f) {
    case Family::B: return 3;
    case Family::C: return 2;
    case Family::D: return 4;
  }
  return 1;
}

// Returns 0, or 2 when --strict-rank rejects a small rank.
int check_rank(const GrassmannianSpec& spec, const Options& opt,
               std::ostream& err) {
  if (spec.n >= rank_minimum(spec.family)) return 0;
  err << "warning: family " << family_char(spec.family)
      << " is usually taken with n >= " << rank_minimum(spec.family)
      << " (got n=" << spec.n << ")\n";
  return opt.strict_rank ? 2 : 0;
}

std::string group_string(const HomologyGroup& g) {
  std::ostringstream out;
  bool any = false;
  if (g.betti > 0) {
    out << "Z";
    if (g.betti > 1) out << "^" << g.betti;
    any = true;
  }
  for (long long t : g.torsion) {
    if (any) out << " + ";
    out << "Z/" << t;
    any = true;
  }
  if (!any) out << "0";
  return out.str();
}

int cmd_homology(const GrassmannianSpec& spec, const Options& opt,
                 std::ostream& out) {
  const auto groups = homology(spec, opt.cell_cap);
  const std::string mode = opt.mode();
  if (mode == "json") {
    out << homology_to_json(groups).dump() << "\n";
  } else if (mode == "csv") {
    out << "degree,betti,torsion\n";
    for (const auto& g : groups) {
      out << g.degree << "," << g.betti << ",";
      for (size_t i = 0; i < g.torsion.size(); ++i)
        out << (i ? ";" : "") << g.torsion[i];
      out << "\n";
    }
  } else {
    out << "homology of " << spec.manifold_name() << "  [family "
        << family_char(spec.family) << ", n=" << spec.n << ", k=" << spec.k
        << "]\n";
    for (const auto& g : groups)
      out << "  H_" << g.degree << " = " << group_string(g) << "\n";
  }
  return 0;
}

int cmd_boundary(const GrassmannianSpec& spec, const Options& opt,
                 std::ostream& out) {
  const ChainComplex cx = build_complex(spec, opt.cell_cap);
  const std::string mode = opt.mode();
  if (mode == "json") {
    out << complex_to_json(cx).dump() << "\n";
    return 0;
  }
  if (mode == "csv") {
    out << "d,row,col,value\n";
    for (int d = 1; d <= cx.top_dimension(); ++d)
      for (const Triplet& t : cx.boundaries[d].entries)
        out << d << "," << t.row << "," << t.col << "," << t.value << "\n";
    return 0;
  }
  out << "chain complex of " << spec.manifold_name() << ": cells per dimension";
  for (const auto& cells : cx.cells) out << " " << cells.size();
  out << "\n";
  for (int d = 1; d <= cx.top_dimension(); ++d) {
    const BoundaryMatrix& b = cx.boundaries[d];
    out << "boundary d=" << d << " (" << b.rows << "x" << b.cols << ", "
        << b.entries.size() << " nonzero)\n";
    for (const Triplet& t : b.entries)
      out << "  " << cx.cells[d][t.col] << " -> " << cx.cells[d - 1][t.row]
          << " : " << (t.value > 0 ? "+" : "") << t.value << "\n";
  }
  return 0;
}

int cmd_enumerate(const GrassmannianSpec& spec, const Options& opt,
                  std::ostream& out) {
  const auto by_dim = cells_by_dimension(spec);
  const std::string mode = opt.mode();
  if (mode == "json") {
    Json j;
    j["spec"] = spec_to_json(spec);
    j["cells"] = Json::array();
    for (const auto& cells : by_dim)
      for (const auto& p : cells)
        j["cells"].push_back(partition_to_json(spec, p));
    out << j.dump() << "\n";
    return 0;
  }
  if (mode == "csv") {
    out << "dimension,cell\n";
    for (size_t d = 0; d < by_dim.size(); ++d)
      for (const auto& p : by_dim[d])
        out << d << "," << p.display() << "\n";
    return 0;
  }
  std::size_t total = 0;
  for (const auto& cells : by_dim) total += cells.size();
  out << spec.manifold_name() << ": " << total << " cells, top dimension "
      << by_dim.size() - 1 << "\n";
  for (size_t d = 0; d < by_dim.size(); ++d) {
    out << "  d " << d << " (" << by_dim[d].size() << "):";
    for (const auto& p : by_dim[d]) out << " " << p.display();
    out << "\n";
  }
  return 0;
}

int cmd_diagram(const GrassmannianSpec& spec, const Options& opt,
                std::ostream& out) {
  DoublePartition p(parse_parts(opt.alpha_str), parse_parts(opt.lambda_str),
                    opt.dtype);
  if (spec.family == Family::D && p.dtype < 0) {
    // Fill in the forced tag when it is unambiguous.
    const int r = p.rows();
    if (spec.k == 0)
      p.dtype = (r % 2 == 0) ? 1 : 2;
    else if (p.alpha_part(spec.k) == r)
      p.dtype = 0;
    else
      throw std::invalid_argument("alpha_k > len(lambda): pass --dtype 1|2");
  }
  validate_shape(spec, p);
  if (opt.mode() == "json") {
    const SignedPermutation w = partition_to_permutation(spec, p);
    Json j;
    j["cell"] = partition_to_json(spec, p);
    j["permutation"] = w.values();
    j["word"] = row_reading_word(spec, p);
    out << j.dump() << "\n";
    return 0;
  }
  out << render_diagram(spec, p);
  return 0;
}

struct VerifyStats {
  long long pairs = 0;
  long long removal_pairs = 0;
  long long mismatches = 0;
};

// Every covering pair: the closed form, the inversion-sum oracle and the
// sigma oracle must produce the same kappa on box removals; the covering
// pairs beyond the removal taxonomy are checked oracle against oracle.
void verify_spec(const GrassmannianSpec& spec, VerifyStats& stats,
                 std::ostream& err) {
  for (const DoublePartition& cell : enumerate_cells(spec)) {
    std::map<DoublePartition, Removal> removals;
    for (const auto& [rem, result] : enumerate_removals(spec, cell))
      removals.emplace(result, rem);
    for (const auto& [result, beta] : enumerate_coverings(spec, cell)) {
      ++stats.pairs;
      const auto [phi_kappa, phi_beta] = kappa_phi_oracle(spec, cell, result);
      const auto sigma = kappa_sigma_oracle(spec, cell, result);
      bool ok = phi_kappa == sigma.kappa && phi_beta == beta;
      int closed = phi_kappa;
      if (auto it = removals.find(result); it != removals.end()) {
        ++stats.removal_pairs;
        closed = kappa_closed_form(spec, cell, it->second);
        ok = ok && closed == phi_kappa;
      }
      if (!ok) {
        ++stats.mismatches;
        err << "mismatch at " << cell.display() << " -> "
            << result.display() << ": closed-form " << closed
            << ", phi-oracle " << phi_kappa << " (beta " << phi_beta
            << "), sigma-oracle " << sigma.kappa << "\n";
      }
    }
  }
}

int cmd_verify(const GrassmannianSpec& spec, bool all_k, const Options& opt,
               std::ostream& out, std::ostream& err) {
  const auto start = std::chrono::steady_clock::now();
  VerifyStats stats;
  std::vector<GrassmannianSpec> specs;
  if (all_k) {
    for (int k = 0; k < spec.n; ++k)
      specs.push_back({spec.family, spec.n, k});
  } else {
    specs.push_back(spec);
  }
  for (const auto& s : specs) {
    if (s.expected_cell_count() > static_cast<long long>(opt.cell_cap))
      throw CellCapExceeded(s.expected_cell_count(), opt.cell_cap);
    verify_spec(s, stats, err);
  }

  bool words_ok = true;
  if (opt.random_words > 0) {
    for (const auto& s : specs) {
      const auto reference = homology(s, opt.cell_cap);
      for (int trial = 0; trial < opt.random_words; ++trial) {
        const auto rand_cx =
            build_complex_randomized(s, opt.seed + trial, opt.cell_cap);
        if (!(homology(rand_cx) == reference)) {
          words_ok = false;
          err << "homology changed under randomized words, " << s.manifold_name()
              << " seed " << opt.seed + trial << "\n";
        }
      }
    }
  }

  const double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  if (opt.mode() == "json") {
    Json j;
    j["spec"] = spec_to_json(spec);
    if (all_k) j["spec"].erase("k");
    j["pairs"] = stats.pairs;
    j["removal_pairs"] = stats.removal_pairs;
    j["mismatches"] = stats.mismatches;
    if (opt.random_words > 0) j["word_trials_stable"] = words_ok;
    j["elapsed_seconds"] = elapsed;
    out << j.dump() << "\n";
  } else {
    out << "pairs: " << stats.pairs << ", mismatches: " << stats.mismatches
        << "\n";
    out << "removal pairs: " << stats.removal_pairs
        << ", additional coverings: " << stats.pairs - stats.removal_pairs
        << "\n";
    if (opt.random_words > 0)
      out << "word trials: " << opt.random_words
          << (words_ok ? ", homology stable" : ", HOMOLOGY CHANGED") << "\n";
    out << std::fixed << std::setprecision(2) << "time: " << elapsed << " s\n";
  }
  return (stats.mismatches == 0 && words_ok) ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Cellular integer homology of real isotropic and orthogonal "
               "Grassmannians via half-shifted Young diagrams"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&](CLI::App* cmd, bool need_k) {
    cmd->add_option("--family", opt.family, "B, C or D")->required();
    cmd->add_option("--n", opt.n, "rank parameter")->required();
    auto* kopt = cmd->add_option("--k", opt.k, "deleted simple root index");
    if (need_k) kopt->required();
    cmd->add_option("--output", opt.output, "text, json or csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    cmd->add_flag("--json", opt.json_flag, "shorthand for --output json");
    cmd->add_option("--cell-cap", opt.cell_cap, "maximum total cell count");
    cmd->add_flag("--strict-rank", opt.strict_rank,
                  "reject n below the family minimum instead of warning");
  };

  CLI::App* homology_cmd =
      app.add_subcommand("homology", "Betti numbers and torsion per degree");
  add_common(homology_cmd, true);
  CLI::App* boundary_cmd =
      app.add_subcommand("boundary", "boundary matrices of the chain complex");
  add_common(boundary_cmd, true);
  CLI::App* enumerate_cmd =
      app.add_subcommand("enumerate", "Schubert cells by dimension");
  add_common(enumerate_cmd, true);
  CLI::App* diagram_cmd =
      app.add_subcommand("diagram", "render one half-shifted diagram");
  add_common(diagram_cmd, true);
  diagram_cmd->add_option("--alpha", opt.alpha_str, "top partition, e.g. 5,5,4");
  diagram_cmd->add_option("--lambda", opt.lambda_str,
                          "strict bottom partition, e.g. 8,7,4,1");
  diagram_cmd->add_option("--dtype", opt.dtype, "family D type tag (0, 1 or 2)")
      ->check(CLI::Range(0, 2));
  CLI::App* verify_cmd = app.add_subcommand(
      "verify", "closed form vs phi and sigma oracles on every covering pair");
  add_common(verify_cmd, false);
  verify_cmd->add_option("--random-words", opt.random_words,
                         "also recheck homology under N random reduced words");
  verify_cmd->add_option("--seed", opt.seed, "seed for randomized word checks");

  std::vector<const char*> argv;
  argv.push_back("halfshift");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      out << app.help();
      return 0;
    }
    err << e.what() << "\n";
    return 2;
  }

  try {
    GrassmannianSpec spec{family_from_string(opt.family), opt.n,
                          std::max(opt.k, 0)};
    const bool all_k = opt.k < 0;
    if (!all_k) spec.k = opt.k;
    spec.validate();
    if (int rc = check_rank(spec, opt, err); rc != 0) return rc;

    if (homology_cmd->parsed()) return cmd_homology(spec, opt, out);
    if (boundary_cmd->parsed()) return cmd_boundary(spec, opt, out);
    if (enumerate_cmd->parsed()) return cmd_enumerate(spec, opt, out);
    if (diagram_cmd->parsed()) return cmd_diagram(spec, opt, out);
    if (verify_cmd->parsed()) return cmd_verify(spec, all_k, opt, out, err);
  } catch (const CellCapExceeded& e) {
    err << "error: " << e.what() << " (raise with --cell-cap)\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

int run_main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, std::cout, std::cerr);
}

}  // namespace halfshift::cli
