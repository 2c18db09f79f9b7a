// pants-atlas: generate curve families, verify universality, evaluate lower
// bounds, and run seeded scaling experiments.
//
// Exit codes: 0 success/universal, 1 verification failure, 2 usage or parse
// error, 3 construction failure.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "pantsatlas/genus.hpp"
#include "pantsatlas/json_io.hpp"
#include "pantsatlas/labelled_sphere.hpp"
#include "pantsatlas/polygon.hpp"
#include "pantsatlas/type_census.hpp"
#include "pantsatlas/unlabelled_sphere.hpp"
#include "pantsatlas/util.hpp"

using namespace pantsatlas;

namespace {

void write_output(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(Errc::bad_parameters, "cannot open output file " + path);
  out << text;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  require(bool(in), Errc::parse_error, "cannot open family file " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

double covering_bound(int n) { return 8.0 * std::pow(n, 4.0 / 3.0) * std::pow(std::log(n), 2.0 / 3.0); }

// --- types -----------------------------------------------------------------------

struct TypesConfig {
  std::string mode = "labelled";
  int n = 0;
  int g = 0;
  bool pants = false;
  bool dual_graphs = false;
  bool essential_only = true;
  std::string format = "plain";
  std::string out;
};

int cmd_types(const TypesConfig& cfg) {
  std::ostringstream text;
  if (cfg.dual_graphs) {
    require(cfg.g >= 2, Errc::bad_parameters, "--dual-graphs needs --g");
    const auto graphs = enum_dual_graphs(cfg.g);
    if (cfg.format == "dot") {
      for (const MultiGraph& g : graphs) text << to_dot(g);
    } else if (cfg.format == "json") {
      text << "[";
      for (size_t i = 0; i < graphs.size(); ++i) text << (i ? "," : "") << to_json(graphs[i]);
      text << "]";
    } else {
      text << graphs.size() << "\n";
    }
  } else if (cfg.pants) {
    require(cfg.n >= 3, Errc::bad_parameters, "--pants needs --n >= 3");
    const auto types = enum_pants_types(cfg.n, cfg.essential_only);
    if (cfg.format == "json") {
      text << "[";
      for (size_t i = 0; i < types.size(); ++i)
        text << (i ? "," : "") << "[" << types[i].k1 << "," << types[i].k2 << "," << types[i].k3
             << "]";
      text << "]";
    } else {
      text << types.size() << "\n";
    }
  } else if (cfg.mode == "labelled") {
    require(cfg.n >= 3, Errc::bad_parameters, "types need --n >= 3");
    if (cfg.format == "json") {
      require(cfg.n <= 9, Errc::bad_parameters, "tree listings are capped at n = 9");
      text << "[";
      bool first = true;
      enum_labelled_trees(cfg.n, [&](const LabelledTree& t) {
        text << (first ? "" : ",") << to_json(t);
        first = false;
      });
      text << "]";
    } else {
      text << count_labelled_trees(cfg.n) << "\n";
    }
  } else if (cfg.mode == "unlabelled") {
    require(cfg.n >= 3, Errc::bad_parameters, "types need --n >= 3");
    const auto classes = enum_unlabelled_classes(cfg.n);
    if (cfg.format == "json") {
      text << "[";
      for (size_t i = 0; i < classes.size(); ++i)
        text << (i ? "," : "") << '"' << classes[i] << '"';
      text << "]";
    } else {
      text << classes.size() << "\n";
    }
  } else {
    fail(Errc::bad_parameters, "unknown mode " + cfg.mode);
  }
  write_output(cfg.out, text.str());
  return 0;
}

// --- family ----------------------------------------------------------------------

struct FamilyConfig {
  bool labelled_sphere = false;
  bool random_pants = false;
  bool greedy_pants = false;
  bool all_pairs = false;
  bool chords = false;
  bool random_chords = false;
  bool genus1 = false;
  bool genus2 = false;
  bool closed = false;
  int n = 0;
  int m = 0;
  int g = 0;
  double c = 2.0;
  uint64_t seed = 0;
  bool essential_only = true;
  std::string out;
};

int cmd_family(const FamilyConfig& cfg) {
  FamilyFile file;
  std::ostringstream note;
  uint64_t size = 0;

  if (cfg.labelled_sphere) {
    file.kind = "labelled_sphere";
    file.n = cfg.n;
    file.codes = gen_lambda(cfg.n, 2, cfg.n);
    size = file.codes.size();
    const uint64_t bound = lambda_closed_form(cfg.n);
    note << "size " << size << "\n";
    note << "bound (3^n-2n-1)/4 = " << bound << ": " << (size == bound ? "pass" : "fail") << "\n";
    note << "note: essential index range [2," << cfg.n - 2 << "] has size "
         << gen_lambda(cfg.n, 2, cfg.n - 2).size() << "\n";
  } else if (cfg.random_pants || cfg.greedy_pants) {
    file.kind = "unlabelled_sphere";
    file.n = cfg.n;
    IndexFamily fam = cfg.greedy_pants ? greedy_index_set(cfg.n, cfg.essential_only)
                                       : random_index_set(cfg.n, cfg.c, cfg.seed);
    file.index_meta = fam;
    // The interval model is mask-based (n <= 64); beyond that the index set
    // alone describes the family and verification goes through coverage.
    if (cfg.n <= 64) file.intervals = fam.curves();
    size = fam.family_size();
    const auto uncovered = covers_pants_types(fam, cfg.essential_only);
    const auto total = enum_pants_types(cfg.n, cfg.essential_only).size();
    const double bound = covering_bound(cfg.n);
    note << "size " << size << "\n";
    note << "bound 8*n^{4/3}*ln^{2/3}(n) = " << uint64_t(bound) << ": "
         << (double(size) <= bound ? "pass" : "fail") << "\n";
    note << "covered " << total - uncovered.size() << "/" << total << "\n";
    note << "seed " << fam.seed << "\n";
  } else if (cfg.all_pairs) {
    file.kind = "unlabelled_sphere";
    file.n = cfg.n;
    IndexFamily fam;
    fam.n = cfg.n;
    for (int i = 0; i < cfg.n; ++i) fam.s.push_back(i);
    file.index_meta = fam;
    file.intervals = all_pairs_family(cfg.n);
    size = file.intervals.size();
    const uint64_t bound = uint64_t(cfg.n) * (cfg.n - 1);
    note << "size " << size << "\n";
    note << "bound n(n-1) = " << bound << ": " << (size == bound ? "pass" : "fail") << "\n";
  } else if (cfg.chords || cfg.random_chords) {
    file.kind = "polygon";
    file.n = cfg.n;
    const ChordGraph g =
        cfg.chords ? all_chords(cfg.n) : random_edge_set(cfg.n, cfg.c, cfg.seed);
    file.edges = g.edges;
    size = g.edges.size();
    if (cfg.chords) {
      const uint64_t bound = uint64_t(cfg.n) * (cfg.n - 1) / 2;
      note << "size " << size << "\n";
      note << "bound n(n-1)/2 = " << bound << ": " << (size == bound ? "pass" : "fail") << "\n";
    } else {
      const double bound = covering_bound(cfg.n);
      note << "size " << size << "\n";
      note << "bound 8*n^{4/3}*ln^{2/3}(n) = " << uint64_t(bound) << ": "
           << (double(size) <= bound ? "pass" : "fail") << "\n";
    }
  } else if (cfg.genus1 || cfg.genus2) {
    file.kind = cfg.genus1 ? "genus1" : "genus2";
    file.n = cfg.m;
    file.concat_codes = cfg.genus1 ? genus1_family(cfg.m) : genus2_family(cfg.m);
    size = file.concat_codes.size();
    const uint64_t quarter = (pow3(cfg.m) - 2 * uint64_t(cfg.m) - 1) / 4;
    const uint64_t bound =
        cfg.genus1 ? quarter + (uint64_t(1) << cfg.m) : 3 * (uint64_t(1) << cfg.m) + 2 * quarter;
    note << "size " << size << "\n";
    note << "bound " << (cfg.genus1 ? "2^m + (3^m-2m-1)/4" : "3*2^m + (3^m-2m-1)/2") << " = "
         << bound << ": " << (size == bound ? "pass" : "fail") << "\n";
  } else if (cfg.closed) {
    const ClosedFamily fam = closed_universal_family(cfg.g);
    file.kind = "closed";
    file.genus = cfg.g;
    file.n = 2 * cfg.g;
    file.codes = fam.sphere_codes;
    size = fam.size();
    note << "size " << size << "\n";
    note << "bound 3^{2g-1} = " << fam.bound() << ": " << (size <= fam.bound() ? "pass" : "fail")
         << "\n";
  } else {
    fail(Errc::bad_parameters, "pick a family kind");
  }

  if (!cfg.out.empty()) write_output(cfg.out, to_json(file));
  std::cout << note.str();
  return 0;
}

// --- verify ----------------------------------------------------------------------

std::string dual_desc(const DualGraph& g) {
  std::ostringstream out;
  out << "dual m=" << g.m << " edges=";
  for (size_t i = 0; i < g.edges.size(); ++i)
    out << (i ? ";" : "") << g.edges[i].first << "-" << g.edges[i].second;
  return out.str();
}

int cmd_verify(const std::string& path, uint64_t budget, const std::string& out) {
  const FamilyFile file = family_file_from_json(read_file(path));
  uint64_t total = 0, realized = 0;
  std::vector<std::string> failures;

  if (file.kind == "labelled_sphere") {
    const VerifyReport rep = verify_universal_labelled(file.codes, file.n);
    total = rep.total;
    realized = rep.realized;
    failures = rep.failures;
  } else if (file.kind == "unlabelled_sphere") {
    if (file.n <= 10) {
      const UnlabelledReport rep =
          budget ? verify_universal_unlabelled(file.intervals, file.n, budget)
                 : verify_universal_unlabelled(file.intervals, file.n);
      total = rep.total;
      realized = rep.realized;
      failures = rep.failures;
    } else {
      // Shape enumeration is infeasible here; universality reduces to pants
      // type coverage of the index set.
      require(file.index_meta.has_value(), Errc::parse_error,
              "large unlabelled families need index metadata");
      total = enum_pants_types(file.n).size();
      for (const PantsType& t : covers_pants_types(*file.index_meta)) {
        std::ostringstream row;
        row << "(" << t.k1 << "," << t.k2 << "," << t.k3 << ")";
        failures.push_back(row.str());
      }
      realized = total - failures.size();
    }
  } else if (file.kind == "polygon") {
    const TriangulationReport rep =
        verify_universal_triangulations(make_chord_graph(file.n, file.edges));
    total = rep.total;
    realized = rep.realized;
    failures = rep.failures;
  } else if (file.kind == "genus1") {
    const std::set<ConcatCode> family(file.concat_codes.begin(), file.concat_codes.end());
    enum_unicyclic_duals(file.n, [&](const DualGraph& g) {
      ++total;
      const GenusRecognition rec = genus1_recognize(g);
      bool ok = genus1_verify_structural(rec, g);
      for (const ConcatCode& cc : rec.codes) ok = ok && family.count(cc) == 1;
      if (ok)
        ++realized;
      else
        failures.push_back(dual_desc(g));
    });
  } else if (file.kind == "genus2") {
    const std::set<ConcatCode> family(file.concat_codes.begin(), file.concat_codes.end());
    enum_cyclomatic2_duals(file.n, [&](const DualGraph& g) {
      ++total;
      const GenusRecognition rec = genus2_recognize(g);
      bool ok = int(rec.codes.size()) == file.n + 3;
      for (const ConcatCode& cc : rec.codes) {
        const bool small_theta3 =
            cc.flags == std::vector<Flag>{Flag::Theta3} && cc.planar.s.size() <= 1;
        ok = ok && (small_theta3 || family.count(cc) == 1);
      }
      for (size_t i = 0; ok && i < rec.codes.size(); ++i)
        for (size_t j = i + 1; ok && j < rec.codes.size(); ++j) {
          const CurveCode& a = rec.codes[i].planar;
          const CurveCode& b = rec.codes[j].planar;
          if (a.s.size() >= 2 && b.s.size() >= 2) ok = disjoint(a, b);
        }
      if (ok)
        ++realized;
      else
        failures.push_back(dual_desc(g));
    });
  } else if (file.kind == "closed") {
    const std::set<CurveCode> census(file.codes.begin(), file.codes.end());
    for (const MultiGraph& mg : enum_dual_graphs(file.genus)) {
      ++total;
      bool ok = true;
      for (const CurveCode& c : realize_closed_type(mg)) ok = ok && census.count(c) == 1;
      if (ok)
        ++realized;
      else
        failures.push_back("type " + to_json(mg));
    }
  } else {
    fail(Errc::parse_error, "unknown family kind " + file.kind);
  }

  write_output(out, report_json(total, realized, failures));
  return realized == total ? 0 : 1;
}

// --- bounds ----------------------------------------------------------------------

struct BoundsConfig {
  bool labelled = false;
  bool pants_dec = false;
  int n = 0;
  int genus = 0;
  long long size = -1;
  std::string out;
};

int cmd_bounds(const BoundsConfig& cfg) {
  std::ostringstream text;
  long long bound = -1;
  if (cfg.labelled) {
    require(cfg.n >= 3, Errc::bad_parameters, "--labelled needs --n >= 3");
    bound = (long long)(required_bipartitions(cfg.n));
    text << bound << "\n";
    text << "bipartition classes 2^{n-1}-n-1 for n=" << cfg.n << "\n";
  } else if (cfg.pants_dec) {
    require(cfg.n >= 3, Errc::bad_parameters, "--pants-dec needs --n >= 3");
    bound = lower_bound_sum(cfg.n);
    text << bound << "\n";
    text << "separating-edge sum over i=2..n/2 of floor(n/i) for n=" << cfg.n << "\n";
  } else if (cfg.genus >= 2) {
    bound = counting_lower_bound(cfg.genus);
    text << bound << "\n";
    text << "smallest N with C(N,3g-3) >= #types for g=" << cfg.genus << "\n";
  } else {
    fail(Errc::bad_parameters, "pick --labelled, --pants-dec, or --genus");
  }
  if (cfg.size >= 0)
    text << "family size " << cfg.size << (cfg.size >= bound ? " meets" : " is below")
         << " the lower bound " << bound << "\n";
  write_output(cfg.out, text.str());
  return 0;
}

// --- experiment --------------------------------------------------------------------

struct ExperimentConfig {
  std::vector<int> ns;
  double c = 2.0;
  int seeds = 20;
  bool greedy = false;
  bool essential_only = true;
  std::string out;
};

int cmd_experiment(const ExperimentConfig& cfg) {
  require(!cfg.ns.empty(), Errc::bad_parameters, "--n list required");
  require(cfg.seeds >= 1, Errc::bad_parameters, "--seeds must be positive");
  std::ostringstream csv;
  csv << "n,c,seed,set_size,family_size,covered,total,runtime_ms\n";
  std::vector<double> log_n, log_size;
  for (int n : cfg.ns) {
    const uint64_t total = enum_pants_types(n, cfg.essential_only).size();
    for (int seed = 0; seed < cfg.seeds; ++seed) {
      const auto start = std::chrono::steady_clock::now();
      const IndexFamily fam = random_index_set(n, cfg.c, uint64_t(seed));
      const uint64_t covered = total - covers_pants_types(fam, cfg.essential_only).size();
      const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - start)
                          .count();
      csv << n << "," << cfg.c << "," << seed << "," << fam.s.size() << ","
          << fam.family_size() << "," << covered << "," << total << "," << ms << "\n";
      if (fam.family_size() > 0) {
        log_n.push_back(std::log(double(n)));
        log_size.push_back(std::log(double(fam.family_size())));
      }
    }
    if (cfg.greedy) {
      const auto start = std::chrono::steady_clock::now();
      const IndexFamily fam = greedy_index_set(n, cfg.essential_only);
      const uint64_t covered = total - covers_pants_types(fam, cfg.essential_only).size();
      const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - start)
                          .count();
      csv << n << "," << cfg.c << ",-1," << fam.s.size() << "," << fam.family_size() << ","
          << covered << "," << total << "," << ms << "\n";
    }
  }
  // Least-squares log-log slope of family size against n over the random runs.
  if (log_n.size() >= 2) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (size_t i = 0; i < log_n.size(); ++i) {
      sx += log_n[i];
      sy += log_size[i];
      sxx += log_n[i] * log_n[i];
      sxy += log_n[i] * log_size[i];
    }
    const double k = double(log_n.size());
    const double denom = k * sxx - sx * sx;
    if (denom > 0) {
      std::ostringstream slope;
      slope.setf(std::ios::fixed);
      slope.precision(4);
      slope << (k * sxy - sx * sy) / denom;
      csv << "# slope," << slope.str() << "\n";
    }
  }
  write_output(cfg.out, csv.str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"universal curve families on punctured spheres and small-genus surfaces"};
  app.require_subcommand(1);

  TypesConfig tc;
  CLI::App* types = app.add_subcommand("types", "enumerate decomposition types");
  types->add_option("--mode", tc.mode, "labelled|unlabelled")
      ->check(CLI::IsMember({"labelled", "unlabelled"}));
  types->add_option("--n", tc.n, "puncture count");
  types->add_option("--g", tc.g, "genus for --dual-graphs");
  types->add_flag("--pants", tc.pants, "count pants types instead of trees");
  types->add_flag("--dual-graphs", tc.dual_graphs, "count closed-surface types");
  types->add_flag("--essential-only,!--no-essential-only", tc.essential_only,
                  "restrict pants types to k1 >= 1");
  types->add_option("--format", tc.format, "plain|json|dot")
      ->check(CLI::IsMember({"plain", "json", "dot"}));
  types->add_option("--out", tc.out, "output path (default stdout)");

  FamilyConfig fc;
  CLI::App* family = app.add_subcommand("family", "construct a universal family");
  family->add_flag("--labelled-sphere", fc.labelled_sphere, "full wiggle census");
  family->add_flag("--random-pants", fc.random_pants, "seeded random index set");
  family->add_flag("--greedy-pants", fc.greedy_pants, "greedy index set");
  family->add_flag("--all-pairs", fc.all_pairs, "all ordered intervals");
  family->add_flag("--all-chords", fc.chords, "complete chord graph");
  family->add_flag("--random-chords", fc.random_chords, "seeded random chord set");
  family->add_flag("--genus1", fc.genus1, "genus-1 concatenated family");
  family->add_flag("--genus2", fc.genus2, "genus-2 concatenated family");
  family->add_flag("--closed", fc.closed, "closed-surface family");
  family->add_option("--n", fc.n, "puncture/vertex count");
  family->add_option("--m", fc.m, "puncture count on the genus surface");
  family->add_option("--g", fc.g, "genus for --closed");
  family->add_option("--c", fc.c, "sampling constant");
  family->add_option("--seed", fc.seed, "sampling seed");
  family->add_flag("--essential-only,!--no-essential-only", fc.essential_only,
                   "coverage over essential pants types");
  family->add_option("--out", fc.out, "family file path");

  std::string verify_path, verify_out;
  uint64_t verify_budget = 0;
  CLI::App* verify = app.add_subcommand("verify", "check a family file for universality");
  verify->add_option("file", verify_path, "family file")->required();
  verify->add_option("--budget", verify_budget, "backtracking budget override");
  verify->add_option("--out", verify_out, "report path (default stdout)");

  BoundsConfig bc;
  CLI::App* bounds = app.add_subcommand("bounds", "evaluate lower-bound certificates");
  bounds->add_flag("--labelled", bc.labelled, "bipartition lower bound");
  bounds->add_flag("--pants-dec", bc.pants_dec, "separating-edge lower bound");
  bounds->add_option("--n", bc.n, "puncture count");
  bounds->add_option("--genus", bc.genus, "counting bound for closed genus");
  bounds->add_option("--size", bc.size, "candidate family size to compare");
  bounds->add_option("--out", bc.out, "output path (default stdout)");

  ExperimentConfig ec;
  CLI::App* experiment = app.add_subcommand("experiment", "seeded scaling runs (CSV)");
  experiment->add_option("--n", ec.ns, "puncture counts (repeatable)")->required();
  experiment->add_option("--c", ec.c, "sampling constant");
  experiment->add_option("--seeds", ec.seeds, "seeds per n (0..k-1)");
  experiment->add_flag("--greedy", ec.greedy, "append greedy comparison rows (seed -1)");
  experiment->add_flag("--essential-only,!--no-essential-only", ec.essential_only,
                       "coverage over essential pants types");
  experiment->add_option("--out", ec.out, "CSV path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (types->parsed()) return cmd_types(tc);
    if (family->parsed()) return cmd_family(fc);
    if (verify->parsed()) return cmd_verify(verify_path, verify_budget, verify_out);
    if (bounds->parsed()) return cmd_bounds(bc);
    if (experiment->parsed()) return cmd_experiment(ec);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code() == Errc::parse_error || e.code() == Errc::bad_parameters ? 2 : 3;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
  return 2;
}
