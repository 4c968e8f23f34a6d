// Command-line surface for the squarefree-powers toolkit: invariant tables,
// exact Betti data as JSON, verification suites over graph corpora, and the
// path-vs-cycle comparison table.
//
// Exit codes: 0 computed/verified, 1 mathematical counterexample found,
// 2 usage or input error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "sqfpow/admissible.hpp"
#include "sqfpow/betti.hpp"
#include "sqfpow/corpus.hpp"
#include "sqfpow/forest.hpp"
#include "sqfpow/monomial.hpp"
#include "sqfpow/splitting.hpp"

namespace {

using nlohmann::json;
using namespace sqfpow;

struct GraphSource {
  std::string file;
  std::string family;
  std::uint64_t seed = 1;
};

Graph load_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open graph file: " + path);
  std::string line;
  int n = 0;
  std::vector<Edge> edges;
  std::vector<std::pair<int, int>> raw;
  bool first_data_line = true;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string head;
    if (!(ls >> head)) continue;
    if (first_data_line && head == "n") {
      if (!(ls >> n) || n < 1) throw std::invalid_argument("bad vertex count line");
      first_data_line = false;
      continue;
    }
    first_data_line = false;
    int u = 0, v = 0;
    try {
      u = std::stoi(head);
    } catch (...) {
      throw std::invalid_argument("bad edge line: " + line);
    }
    if (!(ls >> v)) throw std::invalid_argument("bad edge line: " + line);
    raw.push_back({u, v});
  }
  if (n == 0)
    for (auto [u, v] : raw) n = std::max({n, u, v});
  for (auto [u, v] : raw) edges.push_back({u, v});
  return Graph::from_edges(n, edges);
}

Graph graph_from_family(const std::string& spec, std::uint64_t seed) {
  const auto colon = spec.find(':');
  const std::string kind = spec.substr(0, colon);
  int n = 0;
  if (colon == std::string::npos) {
    if (kind != "random-forest") throw std::invalid_argument("family needs a size, e.g. path:7");
    n = 8;
  } else {
    n = std::stoi(spec.substr(colon + 1));
  }
  if (kind == "random-forest") return random_forest(n, seed);
  return make_family(kind, n);
}

Graph resolve_graph(const GraphSource& src) {
  if (!src.file.empty() && !src.family.empty())
    throw std::invalid_argument("give exactly one of --graph and --family");
  if (!src.file.empty()) return load_graph_file(src.file);
  if (!src.family.empty()) return graph_from_family(src.family, src.seed);
  throw std::invalid_argument("a graph is required: --graph FILE or --family SPEC");
}

FieldSpec default_field() {
  if (const char* env = std::getenv("SQFPOW_FIELD")) return FieldSpec::parse(env);
  return FieldSpec::gf(2);
}

std::string edges_str(const Graph& g) {
  std::string out;
  for (auto [u, v] : g.edges()) {
    if (!out.empty()) out += " ";
    out += std::to_string(u) + "-" + std::to_string(v);
  }
  return out.empty() ? "(edgeless)" : out;
}

void print_counterexample(const Graph& g, int k, const std::string& expected,
                          const std::string& got) {
  std::cout << "COUNTEREXAMPLE\n";
  std::cout << "  graph: n=" << g.vertex_count() << " edges: " << edges_str(g) << "\n";
  std::cout << "  k: " << k << "\n";
  std::cout << "  expected: " << expected << "\n";
  std::cout << "  got: " << got << "\n";
}

int cmd_profile(const GraphSource& src, std::optional<int> only_k, const FieldSpec& field,
                const std::string& format) {
  const Graph g = resolve_graph(src);
  const ProfileReport report = build_profile(g, field);
  if (format == "json") {
    json rows = json::array();
    for (const auto& r : report.rows) {
      if (only_k && r.k != *only_k) continue;
      json row{{"k", r.k},     {"d_k", r.d_k}, {"depth", r.depth},
               {"g", r.g},     {"reg", r.reg}, {"source", r.source}};
      if (r.aim) {
        row["aim"] = *r.aim;
        row["aim_plus_k"] = *r.aim + r.k;
      }
      rows.push_back(row);
    }
    json out{{"n", report.ambient}, {"forest", report.forest}, {"rows", rows}};
    std::cout << out.dump() << "\n";
    return 0;
  }
  std::cout << "n=" << report.ambient << (report.forest ? " (forest)" : "") << "\n";
  std::cout << "k\td_k\tdepth\tg\treg\taim\taim+k\tsource\n";
  for (const auto& r : report.rows) {
    if (only_k && r.k != *only_k) continue;
    std::cout << r.k << "\t" << r.d_k << "\t" << r.depth << "\t" << r.g << "\t" << r.reg << "\t";
    if (r.aim)
      std::cout << *r.aim << "\t" << (*r.aim + r.k);
    else
      std::cout << "-\t-";
    std::cout << "\t" << r.source << "\n";
  }
  return 0;
}

int cmd_betti(const GraphSource& src, int power, const FieldSpec& field) {
  const Graph g = resolve_graph(src);
  const MonomialIdeal ideal = edge_ideal(g);
  const MonomialIdeal target = squarefree_power(ideal, power);
  if (target.is_zero())
    throw std::invalid_argument("power " + std::to_string(power) +
                                " exceeds the matching number; the ideal is zero");
  const BettiTable table = betti_table(target, field);
  const HomologicalInvariants inv = invariants(target, field);

  json cells = json::array();
  for (const auto& [ij, beta] : table.entries())
    cells.push_back(json{{"i", ij.first}, {"j", ij.second}, {"beta", beta}});
  std::string gens;
  for (const auto& m : target.generators()) {
    if (!gens.empty()) gens += ", ";
    gens += m.str();
  }
  json out{{"n", target.ambient()},   {"ideal", gens},
           {"field", field.name()},   {"betti", cells},
           {"projdim", inv.projdim},  {"reg", inv.reg},
           {"depth_quotient", inv.depth_quotient}};
  std::cout << out.dump() << "\n";
  return 0;
}

int cmd_explore_cycles(int n_max, const FieldSpec& field) {
  const CycleQuestionReport report = cycle_question(n_max, field);
  std::cout << "n\tk\tg(path)\tg(cycle)\tequal\n";
  for (const auto& row : report.rows) {
    std::cout << row.n << "\t" << row.k << "\t" << row.g_path << "\t" << row.g_cycle << "\t"
              << (row.g_path == row.g_cycle ? "yes" : "no") << "\n";
  }
  return 0;
}

// Whether every squarefree power of an edge ideal splits at some vertex is
// open for non-forests; this searches the x-partitions and reports what it
// finds, never failing.
int cmd_explore_splittings(const GraphSource& src, const FieldSpec& field) {
  const Graph g = resolve_graph(src);
  const MonomialIdeal ideal = edge_ideal(g);
  const int nu = monomial_grade(ideal);
  std::cout << "k\tvertex\tsplits\tdegenerate\n";
  for (int k = 1; k <= nu; ++k) {
    const MonomialIdeal power = squarefree_power(ideal, k);
    bool any = false;
    for (int v = 1; v <= g.vertex_count(); ++v) {
      const Splitting s = x_partition(power, v);
      if (s.part2.is_zero()) continue;
      const BettiSplitVerdict verdict = verify_betti_splitting(s, field);
      std::cout << k << "\tx" << v << "\t" << (verdict.holds ? "yes" : "no") << "\t"
                << (verdict.degenerate ? "yes" : "no") << "\n";
      any = any || verdict.holds;
    }
    std::cout << "# k=" << k << ": " << (any ? "some vertex splitting holds" : "no vertex splitting found")
              << "\n";
  }
  return 0;
}

std::vector<Graph> suite_corpus(const GraphSource& src, int n_max, int trials,
                                std::uint64_t seed, bool forests_only) {
  std::vector<Graph> corpus;
  if (!src.file.empty() || src.family.rfind("random-forest", 0) == 0) {
    if (!src.file.empty()) {
      corpus.push_back(load_graph_file(src.file));
    } else {
      for (int t = 0; t < std::max(1, trials); ++t)
        corpus.push_back(graph_from_family(src.family, seed + static_cast<std::uint64_t>(t)));
    }
  } else if (!src.family.empty()) {
    corpus.push_back(graph_from_family(src.family, seed));
  } else {
    corpus = all_forests_up_to(n_max);
  }
  if (forests_only)
    for (const auto& g : corpus)
      if (!is_forest(g)) throw std::invalid_argument("this suite needs forests");
  return corpus;
}

int suite_path(int n_max, const FieldSpec& field) {
  for (int n = 3; n <= n_max; ++n) {
    const Graph p = path_graph(n);
    const MonomialIdeal ideal = edge_ideal(p);
    for (int k = 1; k <= n / 2; ++k) {
      const int oracle = normalized_depth(ideal, k, field);
      const int closed = path_g_closed_form(n, k);
      if (oracle != closed) {
        print_counterexample(p, k, "g = " + std::to_string(closed),
                             "g = " + std::to_string(oracle));
        return 1;
      }
    }
    std::cout << "ok path n=" << n << "\n";
  }
  return 0;
}

int suite_splitting(const std::vector<Graph>& corpus, const FieldSpec& field) {
  for (const Graph& g : corpus) {
    if (!is_forest(g)) throw std::invalid_argument("splitting suite needs forests");
    if (matching_number(g) < 3 || !find_setup_distant_edge(g)) continue;
    const int nu = matching_number(g);
    for (int k = 1; k <= nu; ++k) {
      const ForestPowerSplitting fps = forest_power_splitting(g, k);
      if (!fps.all_identities_hold()) {
        print_counterexample(g, k, "all splitting set identities hold", "an identity failed");
        return 1;
      }
      const BettiSplitVerdict v = verify_betti_splitting(fps.splitting, field);
      if (!v.holds) {
        const auto& f = *v.failure;
        print_counterexample(g, k, "betti splitting identity",
                             "beta(" + std::to_string(f.i) + "," + std::to_string(f.j) +
                                 "): " + std::to_string(f.whole) + " != " +
                                 std::to_string(f.part1) + "+" + std::to_string(f.part2) +
                                 "+" + std::to_string(f.intersection));
        return 1;
      }
      if (fps.t() > 0 && !fps.splitting.intersection.is_zero()) {
        Splitting inner{fps.splitting.intersection, fps.j1, fps.j2,
                        ideal_intersection(fps.j1, fps.j2)};
        const BettiSplitVerdict vj = verify_betti_splitting(inner, field);
        if (!vj.holds) {
          print_counterexample(g, k, "betti splitting of the intersection", "failed");
          return 1;
        }
      }
    }
    std::cout << "ok splitting n=" << g.vertex_count() << " edges=" << edges_str(g) << "\n";
  }
  return 0;
}

int suite_forest_recursion(const std::vector<Graph>& corpus, const FieldSpec& field) {
  for (const Graph& g : corpus) {
    const MonomialIdeal ideal = edge_ideal(g);
    const int nu = matching_number(g);
    for (int k = 1; k <= nu; ++k) {
      const int og = normalized_depth(ideal, k, field);
      const int rg = g_forest(g, k);
      if (og != rg) {
        print_counterexample(g, k, "g = " + std::to_string(og) + " (oracle)",
                             "g = " + std::to_string(rg) + " (recursion)");
        return 1;
      }
      const int oreg = reg_of_power(ideal, k, field);
      const int rreg = reg_forest(g, k);
      if (oreg != rreg) {
        print_counterexample(g, k, "reg = " + std::to_string(oreg) + " (oracle)",
                             "reg = " + std::to_string(rreg) + " (recursion)");
        return 1;
      }
    }
  }
  std::cout << "ok forest recursion on " << corpus.size() << " graphs\n";
  return 0;
}

int suite_section4(const std::vector<Graph>& corpus, const FieldSpec& field) {
  for (const Graph& g : corpus) {
    const Section4Verdict v = verify_section4(g, field);
    if (!v.holds()) {
      print_counterexample(g, 0, "all admissible-matching statements", v.detail);
      return 1;
    }
  }
  std::cout << "ok section4 on " << corpus.size() << " forests\n";
  return 0;
}

int suite_char_independence(const std::vector<Graph>& corpus) {
  const std::vector<FieldSpec> fields{FieldSpec::gf(2), FieldSpec::gf(3),
                                      FieldSpec::rationals()};
  for (const Graph& g : corpus) {
    const CharIndependenceVerdict v = char_independence(g, fields);
    if (!v.identical) {
      print_counterexample(g, v.failing_k, "identical betti tables over gf2, gf3, q", v.detail);
      return 1;
    }
  }
  std::cout << "ok char independence on " << corpus.size() << " forests\n";
  return 0;
}

int suite_nonincreasing(const std::vector<Graph>& corpus, const FieldSpec& field) {
  for (const Graph& g : corpus) {
    if (matching_number(g) == 0) continue;
    const MonotonicityVerdict v = check_nonincreasing(g, field);
    if (!v.holds) {
      std::string values;
      for (int x : v.g_values) values += std::to_string(x) + " ";
      print_counterexample(g, v.failing_k.value_or(0), "non-increasing g", "g values: " + values);
      return 1;
    }
  }
  std::cout << "ok nonincreasing on " << corpus.size() << " forests\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact invariants of squarefree powers of edge ideals"};
  app.require_subcommand(1);

  GraphSource src;
  FieldSpec field = FieldSpec::gf(2);
  std::string field_name;
  std::string format = "table";
  std::optional<int> only_k;
  int power = 1;
  int n_max = -1;
  int trials = 1;
  std::string suite;

  auto add_graph_opts = [&](CLI::App* cmd) {
    cmd->add_option("--graph", src.file, "graph file: optional 'n <count>' line, then 'u v' lines");
    cmd->add_option("--family", src.family, "path:N | cycle:N | star:N | random-forest:N");
    cmd->add_option("--seed", src.seed, "seed for random families");
    cmd->add_option("--field", field_name, "gf2 | gf3 | q (default from SQFPOW_FIELD or gf2)");
  };

  CLI::App* profile = app.add_subcommand("profile", "per-power invariant table");
  add_graph_opts(profile);
  int k_opt = 0;
  profile->add_option("--k", k_opt, "restrict to one power");
  profile->add_option("--format", format, "table | json");

  CLI::App* betti = app.add_subcommand("betti", "graded Betti numbers as JSON");
  add_graph_opts(betti);
  betti->add_option("--power", power, "squarefree power (default 1)");

  CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
  add_graph_opts(verify);
  verify->add_option("--suite", suite,
                     "splitting | forest-recursion | path | section4 | char-independence | "
                     "nonincreasing")
      ->required();
  verify->add_option("--n-max", n_max, "corpus size cap");
  verify->add_option("--trials", trials, "number of random graphs when --family random-forest");

  CLI::App* cycles = app.add_subcommand("explore-cycles", "compare g for paths and cycles");
  cycles->add_option("--n-max", n_max, "largest n (default 8)");
  cycles->add_option("--field", field_name, "gf2 | gf3 | q");

  CLI::App* xsplits = app.add_subcommand("explore-splittings",
                                         "report which vertex partitions split, any graph");
  add_graph_opts(xsplits);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    field = field_name.empty() ? default_field() : FieldSpec::parse(field_name);
    const bool n_max_given = verify->count("--n-max") || cycles->count("--n-max");
    if (n_max_given && (n_max < 1 || n_max > kMaxVertices))
      throw std::invalid_argument("--n-max must be between 1 and " +
                                  std::to_string(kMaxVertices));
    if (trials < 1) throw std::invalid_argument("--trials must be positive");
    if (profile->parsed()) {
      if (profile->count("--k")) only_k = k_opt;
      return cmd_profile(src, only_k, field, format);
    }
    if (betti->parsed()) return cmd_betti(src, power, field);
    if (cycles->parsed()) return cmd_explore_cycles(n_max < 0 ? 8 : n_max, field);
    if (xsplits->parsed()) return cmd_explore_splittings(src, field);

    if (suite == "path") return suite_path(n_max < 0 ? 10 : n_max, field);
    if (suite == "splitting")
      return suite_splitting(suite_corpus(src, n_max < 0 ? 6 : n_max, trials, src.seed, true),
                             field);
    if (suite == "forest-recursion")
      return suite_forest_recursion(
          suite_corpus(src, n_max < 0 ? 7 : n_max, trials, src.seed, true), field);
    if (suite == "section4")
      return suite_section4(suite_corpus(src, n_max < 0 ? 7 : n_max, trials, src.seed, true),
                            field);
    if (suite == "char-independence")
      return suite_char_independence(
          suite_corpus(src, n_max < 0 ? 6 : n_max, trials, src.seed, true));
    if (suite == "nonincreasing")
      return suite_nonincreasing(
          suite_corpus(src, n_max < 0 ? 7 : n_max, trials, src.seed, true), field);
    throw std::invalid_argument("unknown suite: " + suite);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
}
