// Command-line front end for the projgap library.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or input error,
// 3 search budget refusal.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>

#include "projgap/balanced_order.hpp"
#include "projgap/compressions.hpp"
#include "projgap/errors.hpp"
#include "projgap/extremal.hpp"
#include "projgap/geometry.hpp"
#include "projgap/io.hpp"
#include "projgap/search.hpp"
#include "projgap/verify.hpp"

namespace {

using namespace projgap;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

struct InputArgs {
  std::string path = "-";
  std::optional<std::size_t> dim;
};

void add_input(CLI::App* cmd, InputArgs& in) {
  cmd->add_option("file", in.path, "Point-set file ('-' for stdin)")->required();
  cmd->add_option("--dim", in.dim, "Dimension to assume when the file has no points");
}

PointSet load(const InputArgs& in) {
  if (in.path == "-") {
    std::string text{std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    return parse_pointset(text, in.dim);
  }
  return parse_pointset(read_text_file(in.path), in.dim);
}

std::string join(const std::vector<std::int64_t>& v) {
  std::string s;
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + std::to_string(v[k]);
  return s;
}

const char* yes_no(bool b) { return b ? "true" : "false"; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Projection-gap toolkit for weak antichains in Z^n"};
  app.require_subcommand(1);
  std::string output_path;
  app.add_option("--output", output_path, "Write results to FILE instead of standard output");

  InputArgs in;
  std::size_t axis = 1;
  std::size_t n = 2;
  std::int64_t m = 0;
  std::int64_t big_n = 1;
  std::int64_t m_from = 0, m_to = 0;
  std::string op = "ci";
  std::vector<std::int64_t> coords;

  SearchOptions search_opts;
  std::string mode = "downsets";
  std::optional<coord_t> bound;
  std::optional<std::uint64_t> node_limit;
  bool symmetry = false;

  VerifyConfig verify_cfg;
  std::string suite = "all";

  auto* gap_cmd = app.add_subcommand("gap", "Projection sizes and gap of a point set");
  add_input(gap_cmd, in);

  auto* check_cmd = app.add_subcommand("check", "Structural predicates and the Loomis-Whitney check");
  add_input(check_cmd, in);

  auto* project_cmd = app.add_subcommand("project", "Projection along one axis");
  add_input(project_cmd, in);
  project_cmd->add_option("--axis", axis, "Axis to drop (1-based)")->required();

  auto* compress_cmd = app.add_subcommand("compress", "Apply C_i, CC_i or CCC_i");
  add_input(compress_cmd, in);
  compress_cmd->add_option("--op", op, "ci | cci | ccci")
      ->check(CLI::IsMember({"ci", "cci", "ccci"}));
  compress_cmd->add_option("--axis", axis, "Axis (1-based)")->required();

  auto* reduce_cmd = app.add_subcommand("reduce", "Reduce a weak antichain to a down-set in X_n");
  add_input(reduce_cmd, in);

  auto* seg_cmd = app.add_subcommand("initial-segment", "First m points of X_n in the balanced order");
  seg_cmd->add_option("--n", n, "Dimension")->required();
  seg_cmd->add_option("--m", m, "Size")->required();

  auto* an_cmd = app.add_subcommand("a-n", "The set A_N in dimension n");
  an_cmd->add_option("--n", n, "Dimension")->required();
  an_cmd->add_option("--N", big_n, "Side length N")->required();

  auto* rank_cmd = app.add_subcommand("rank", "0-based position of a point of X_n in the balanced order");
  rank_cmd->add_option("coords", coords, "Coordinates of the point")->required();

  auto* s_cmd = app.add_subcommand("s-set", "The set S(A) of a subset of X_n");
  add_input(s_cmd, in);

  auto* gexact_cmd = app.add_subcommand("g-exact", "g(n,m) from the initial segment");
  gexact_cmd->add_option("--n", n, "Dimension")->required();
  gexact_cmd->add_option("--m", m, "Size")->required();

  auto add_search_flags = [&](CLI::App* cmd) {
    cmd->add_option("--n", n, "Dimension")->required();
    cmd->add_option("--m", m, "Size")->required();
    cmd->add_option("--workers", search_opts.worker_count, "Worker threads")->check(CLI::PositiveNumber);
    cmd->add_option("--mode", mode, "downsets | antichains")
        ->check(CLI::IsMember({"downsets", "antichains"}));
    cmd->add_option("--bound", bound, "Largest coordinate value considered");
    cmd->add_option("--node-limit", node_limit, "Maximum search nodes (lifts the size budget)");
    cmd->add_flag("--symmetry", symmetry, "Skip sets that are not canonical under coordinate permutations");
  };
  auto* gbrute_cmd = app.add_subcommand("g-brute", "Exhaustive minimum gap");
  add_search_flags(gbrute_cmd);
  auto* sbrute_cmd = app.add_subcommand("s-brute", "Exhaustive maximum |S| over down-sets in X_n");
  add_search_flags(sbrute_cmd);

  auto* table_cmd = app.add_subcommand("table", "CSV of exact values against the lower bound");
  table_cmd->add_option("--n", n, "Dimension")->required();
  table_cmd->add_option("--from", m_from, "First size")->required();
  table_cmd->add_option("--to", m_to, "Last size")->required();

  auto* witness_cmd = app.add_subcommand("witness", "A_N plus a block, the near-extremal construction");
  witness_cmd->add_option("--n", n, "Dimension")->required();
  witness_cmd->add_option("--m", m, "Size")->required();

  auto* verify_cmd = app.add_subcommand("verify", "Run the property suites");
  verify_cmd->add_option("--suite", suite, "lemmas | extremal | all")
      ->check(CLI::IsMember({"lemmas", "extremal", "all"}));
  verify_cmd->add_option("--n-max", verify_cfg.n_max, "Largest dimension");
  verify_cmd->add_option("--m-max", verify_cfg.m_max, "Largest size for oracle comparisons");
  verify_cmd->add_option("--seed", verify_cfg.seed, "Random seed");
  verify_cmd->add_option("--cases", verify_cfg.cases, "Random cases per property and dimension");
  verify_cmd->add_option("--workers", verify_cfg.workers, "Worker threads for the oracle")
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  std::ostringstream out;
  int status = kExitOk;
  try {
    if (*gap_cmd) {
      const GapReport r = gap(load(in));
      out << "size=" << r.size << " projections=" << join(r.projection_sizes) << " gap=" << r.gap << '\n';
    } else if (*check_cmd) {
      const PointSet a = load(in);
      out << "dimension=" << a.dim() << " size=" << a.size() << '\n';
      if (a.dim() >= 2) out << "weak_antichain=" << yes_no(is_weak_antichain(a)) << '\n';
      const bool in_x = is_subset_of_X(a);
      out << "subset_of_X=" << yes_no(in_x) << '\n';
      const bool nonneg = std::all_of(a.begin(), a.end(), [](const Point& p) { return p.all_nonnegative(); });
      if (nonneg) out << "down_set=" << yes_no(is_down_set(a)) << '\n';
      if (in_x && a.dim() >= 2) out << "initial_segment=" << yes_no(is_initial_segment(a)) << '\n';
      if (a.dim() >= 2) {
        const LoomisWhitneyReport lw = loomis_whitney_check(a);
        out << "loomis_whitney lhs=" << lw.lhs << " rhs=" << lw.rhs << " holds=" << yes_no(lw.holds) << '\n';
      }
    } else if (*project_cmd) {
      out << serialize_pointset(project(load(in), axis));
    } else if (*compress_cmd) {
      const PointSet a = load(in);
      const PointSet r = op == "ci" ? i_compress(a, axis)
                         : op == "cci" ? complete_compress(a, axis)
                                       : balanced_compress(a, axis);
      out << serialize_pointset(r);
    } else if (*reduce_cmd) {
      out << serialize_pointset(reduce_to_downset(load(in)));
    } else if (*seg_cmd) {
      if (n < 2) throw domain_error("initial-segment: n must be at least 2");
      out << serialize_pointset(initial_segment(n, m));
    } else if (*an_cmd) {
      out << serialize_pointset(construct_A_N(n, big_n));
    } else if (*rank_cmd) {
      out << rank(Point(coords)) << '\n';
    } else if (*s_cmd) {
      out << serialize_pointset(compute_S(load(in)));
    } else if (*gexact_cmd) {
      out << serialize_certificate(g_exact(n, m));
    } else if (*gbrute_cmd || *sbrute_cmd) {
      search_opts.mode = mode == "downsets" ? SearchMode::downsets_in_X : SearchMode::all_weak_antichains;
      search_opts.coordinate_bound = bound;
      search_opts.node_limit = node_limit;
      search_opts.symmetry_reduction = symmetry;
      out << serialize_certificate(*gbrute_cmd ? min_gap_bruteforce(n, m, search_opts)
                                               : max_S_bruteforce(n, m, search_opts));
    } else if (*table_cmd) {
      out << to_csv(gap_table(n, m_from, m_to));
    } else if (*witness_cmd) {
      out << serialize_certificate(witness_construction(n, m));
    } else if (*verify_cmd) {
      verify_cfg.suite = suite == "lemmas" ? Suite::lemmas : suite == "extremal" ? Suite::extremal : Suite::all;
      const VerifyReport report = run_verify(verify_cfg);
      out << report.text();
      status = report.all_passed() ? kExitOk : kExitVerifyFailed;
    }
  } catch (const budget_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitBudget;
  } catch (const parse_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::overflow_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  if (output_path.empty()) {
    std::cout << out.str();
  } else {
    std::ofstream file(output_path, std::ios::binary);
    if (!file) {
      std::cerr << "error: cannot write " << output_path << '\n';
      return kExitUsage;
    }
    file << out.str();
  }
  return status;
}
