#include "cli.h"

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "ndcolor/class_check.h"
#include "ndcolor/coloring.h"
#include "ndcolor/covering_ilp.h"
#include "ndcolor/dimacs.h"
#include "ndcolor/errors.h"
#include "ndcolor/mis.h"
#include "ndcolor/nd_decomposition.h"
#include "ndcolor/pipeline.h"
#include "ndcolor/solver.h"
#include "ndcolor/testkit/generators.h"
#include "ndcolor/testkit/oracles.h"
#include "ndcolor/type_graph.h"

namespace ndcolor::cli {
namespace {

// Opens `path`, or hands out the process input for "-".
class Input {
 public:
  Input(const std::string& path, std::istream& stdin_stream) {
    if (path == "-") {
      stream_ = &stdin_stream;
      return;
    }
    file_.open(path);
    if (!file_) throw Error("cannot open '" + path + "'");
    stream_ = &file_;
  }
  std::istream& get() { return *stream_; }

 private:
  std::ifstream file_;
  std::istream* stream_ = nullptr;
};

int64_t resolve_budget(const std::optional<int64_t>& flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("NDCOLOR_BUDGET")) {
    try {
      size_t used = 0;
      const long long value = std::stoll(env, &used);
      if (used == std::string(env).size() && value > 0) return value;
    } catch (const std::exception&) {
    }
    throw Error("NDCOLOR_BUDGET must be a positive integer");
  }
  return SolverOptions{}.node_budget;
}

void write_decomposition(const NdDecomposition& dec, std::ostream& out) {
  out << "k " << dec.size() << '\n';
  for (int i = 0; i < dec.size(); ++i) {
    out << (dec.kinds[i] == ClassKind::kClique ? "clique" : "independent");
    for (const int v : dec.classes[i]) out << ' ' << v + 1;
    out << '\n';
  }
}

void write_family(const MisFamily& family, std::ostream& out) {
  for (const auto& set : family.sets) {
    for (size_t t = 0; t < set.size(); ++t) {
      out << (t ? " " : "") << set[t] + 1;
    }
    out << '\n';
  }
}

void write_report(const ClassReport& r, std::ostream& out) {
  auto yes = [](bool b) { return b ? "yes" : "no"; };
  out << "4k1-free " << yes(r.is_4k1_free) << '\n'
      << "c4-free " << yes(r.is_c4_free) << '\n'
      << "c6-free " << yes(r.is_c6_free) << '\n'
      << "has-c7 " << yes(r.has_c7) << '\n'
      << "in-class " << yes(r.in_class()) << '\n';
  for (const Pattern p : kAllPatterns) {
    if (const auto& w = r.witness(p)) {
      out << "w " << pattern_name(p);
      for (const int v : *w) out << ' ' << v + 1;
      out << '\n';
    }
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact graph coloring via neighborhood diversity"};
  app.name("ndcolor");
  app.require_subcommand(1, 1);

  std::string input = "-";
  std::function<void()> action;

  // color
  auto* color = app.add_subcommand("color", "Compute chi(G) and an optimal coloring");
  bool from_typegraph = false;
  bool dump_ilp = false;
  std::string ilp_out;
  std::optional<int64_t> budget;
  color->add_flag("--from-typegraph", from_typegraph,
                  "Input is a type graph; color its blow-up");
  color->add_flag("--dump-ilp", dump_ilp,
                  "Print the covering ILP instead of solving it");
  color->add_option("--ilp-out", ilp_out, "Also write the covering ILP here");
  color->add_option("--budget", budget, "Branch-and-bound node budget")
      ->check(CLI::PositiveNumber);
  color->add_option("input", input, "Graph file or - for stdin");
  color->callback([&] {
    action = [&] {
      Input source(input, in);
      SolverOptions options;
      options.node_budget = resolve_budget(budget);
      std::optional<TypeGraph> t;
      std::optional<Graph> g;
      if (from_typegraph) {
        t = parse_type_graph(source.get());
      } else {
        g = parse_dimacs(source.get());
      }
      if (dump_ilp || !ilp_out.empty()) {
        if (!t) t = build_type_graph(*g, compute_nd_decomposition(*g));
        const CoveringIlp ilp = build_coloring_ilp(*t, enumerate_mis(*t));
        if (dump_ilp) {
          write_ilp(ilp, out);
          return;
        }
        std::ofstream file(ilp_out);
        if (!file) throw Error("cannot write '" + ilp_out + "'");
        write_ilp(ilp, file);
      }
      const PipelineResult result =
          g ? color_graph(*g, options) : color_type_graph(*t, options);
      write_coloring(result.coloring, out);
    };
  });

  auto* nd = app.add_subcommand("nd", "Print the minimum nd-decomposition");
  nd->add_option("input", input, "Graph file or -");
  nd->callback([&] {
    action = [&] {
      Input source(input, in);
      write_decomposition(compute_nd_decomposition(parse_dimacs(source.get())),
                          out);
    };
  });

  auto* typegraph = app.add_subcommand("typegraph", "Print the type graph T(G)");
  typegraph->add_option("input", input, "Graph file or -");
  typegraph->callback([&] {
    action = [&] {
      Input source(input, in);
      const Graph g = parse_dimacs(source.get());
      write_type_graph(build_type_graph(g, compute_nd_decomposition(g)), out);
    };
  });

  auto* mis = app.add_subcommand(
      "mis", "List the maximal independent sets of a type graph");
  mis->add_option("input", input, "Type graph file or -");
  mis->callback([&] {
    action = [&] {
      Input source(input, in);
      write_family(enumerate_mis(parse_type_graph(source.get())), out);
    };
  });

  auto* check = app.add_subcommand(
      "check-class", "Test (4K1, C4, C6)-freeness and presence of a C7");
  check->add_option("input", input, "Graph file or -");
  check->callback([&] {
    action = [&] {
      Input source(input, in);
      write_report(check_class(parse_dimacs(source.get())), out);
    };
  });

  auto* verify = app.add_subcommand("verify", "Check a coloring of a graph");
  std::string graph_path;
  std::string coloring_path;
  verify->add_option("graph", graph_path, "Graph file or -")->required();
  verify->add_option("coloring", coloring_path, "Coloring file or -")
      ->required();
  int verify_status = kOk;
  verify->callback([&] {
    action = [&] {
      if (graph_path == "-" && coloring_path == "-") {
        throw Error("graph and coloring cannot both come from stdin");
      }
      Graph g;
      {
        Input source(graph_path, in);
        g = parse_dimacs(source.get());
      }
      Input source(coloring_path, in);
      const ColoringCheck check = verify_coloring(g, parse_coloring(source.get()));
      if (check) {
        out << "ok\n";
      } else if (check.conflict) {
        out << "fail edge " << check.conflict->first + 1 << ' '
            << check.conflict->second + 1 << '\n';
        verify_status = kDomainError;
      } else {
        out << "fail unused-color " << *check.unused_color << '\n';
        verify_status = kDomainError;
      }
    };
  });

  auto* gen = app.add_subcommand("gen", "Generate a seeded test instance");
  std::string kind_name;
  uint64_t seed = 0;
  std::optional<int> gen_n;
  std::optional<double> gen_p;
  std::optional<int> k_min;
  std::optional<int> k_max;
  std::optional<int64_t> w_min;
  std::optional<int64_t> w_max;
  std::optional<double> loop_probability;
  std::optional<int> attempts;
  std::string shape_path;
  std::string typegraph_out;
  std::string manifest_path;
  gen->add_option("--kind", kind_name,
                  "random_gnp | blow_up_random | paper_class_like")
      ->required();
  gen->add_option("--seed", seed, "64-bit seed")->required();
  gen->add_option("--n", gen_n, "Vertex count (paper_class_like: maximum)");
  gen->add_option("--p", gen_p, "Edge / attachment probability");
  gen->add_option("--k-min", k_min, "Smallest type graph size");
  gen->add_option("--k-max", k_max, "Largest type graph size");
  gen->add_option("--w-min", w_min, "Smallest class weight");
  gen->add_option("--w-max", w_max, "Largest class weight");
  gen->add_option("--loop-prob", loop_probability, "Probability of a clique class");
  gen->add_option("--attempts", attempts, "Rejection-sampling attempt budget");
  gen->add_option("--shape", shape_path,
                  "blow_up_random: fixed type graph whose weights are redrawn");
  gen->add_option("--typegraph-out", typegraph_out,
                  "Write the sampled type graph here");
  gen->add_option("--manifest", manifest_path, "Append a manifest line here");
  gen->callback([&] {
    action = [&] {
      const auto kind = testkit::generator_kind_from_name(kind_name);
      if (!kind) throw Error("unknown generator kind '" + kind_name + "'");
      testkit::GeneratorSpec spec = testkit::default_spec(*kind, seed);
      if (gen_n) spec.n = *gen_n;
      if (gen_p) spec.p = *gen_p;
      if (k_min) spec.k_min = *k_min;
      if (k_max) spec.k_max = *k_max;
      if (w_min) spec.w_min = *w_min;
      if (w_max) spec.w_max = *w_max;
      if (loop_probability) spec.loop_probability = *loop_probability;
      if (attempts) spec.max_attempts = *attempts;
      if (!shape_path.empty()) {
        Input source(shape_path, in);
        spec.shape = parse_type_graph(source.get());
      }
      const testkit::GeneratedInstance instance = testkit::generate(spec);
      write_dimacs(instance.graph, out);
      if (!typegraph_out.empty()) {
        if (!instance.type_graph) {
          throw Error("--typegraph-out needs a blow-up based kind");
        }
        std::ofstream file(typegraph_out);
        if (!file) throw Error("cannot write '" + typegraph_out + "'");
        write_type_graph(*instance.type_graph, file);
      }
      if (!manifest_path.empty()) {
        std::ofstream file(manifest_path, std::ios::app);
        if (!file) throw Error("cannot write '" + manifest_path + "'");
        file << testkit::manifest_line(spec, instance.graph) << '\n';
      }
    };
  });

  auto* oracle = app.add_subcommand("oracle", "Brute-force reference answers");
  std::string which;
  oracle->add_option("which", which, "chi | nd | mis | ilp")
      ->required()
      ->check(CLI::IsMember({"chi", "nd", "mis", "ilp"}));
  oracle->add_option("input", input, "Input file or -");
  oracle->callback([&] {
    action = [&] {
      Input source(input, in);
      if (which == "chi") {
        out << "chi " << testkit::oracle_chromatic(parse_dimacs(source.get()))
            << '\n';
      } else if (which == "nd") {
        write_decomposition(testkit::oracle_nd(parse_dimacs(source.get())),
                            out);
      } else if (which == "mis") {
        write_family(testkit::oracle_mis(parse_type_graph(source.get())), out);
      } else {
        out << "opt " << testkit::oracle_ilp(parse_ilp(source.get())) << '\n';
      }
    };
  });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();  // program name
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "ndcolor: " << e.what() << "\n\n" << app.help();
    return kDomainError;
  }

  try {
    action();
  } catch (const ResourceError& e) {
    err << "ndcolor: " << e.what() << '\n';
    return kResourceLimit;
  } catch (const Error& e) {
    err << "ndcolor: " << e.what() << '\n';
    return kDomainError;
  }
  return verify_status;
}

}  // namespace ndcolor::cli
