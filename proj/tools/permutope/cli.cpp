#include "cli.hpp"

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "permutope/permutope.hpp"

namespace permutope::cli {

namespace {

std::size_t parse_count(std::string_view text) {
  if (text.empty() || !std::all_of(text.begin(), text.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
    throw std::invalid_argument("expected a non-negative integer, got '" + std::string(text) + "'");
  }
  return std::stoull(std::string(text));
}

std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (true) {
    const std::size_t next = text.find(sep, pos);
    out.emplace_back(text.substr(pos, next == std::string_view::npos ? text.npos : next - pos));
    if (next == std::string_view::npos) break;
    pos = next + 1;
  }
  return out;
}

struct Context {
  Caps caps;
  bool as_float = false;
  unsigned threads = 1;
  std::ostream* out = nullptr;

  std::string fmt(const Rational& r) const { return as_float ? to_decimal_string(r, 12) : to_string(r); }
  CycleEnumerationOptions cycles() const { return {caps.cycles}; }
  CountingOptions counting() const {
    CountingOptions o;
    o.enumeration_max_n = caps.classical;
    return o;
  }
};

/// The graph a polytope verb works on: OV_k or a JSON file.
struct Source {
  std::optional<OverlapGraph> overlap;
  Multigraph graph;
};

Source load_source(const Context& ctx, std::optional<std::size_t> k, const std::string& graph_path) {
  Source s;
  if (!graph_path.empty()) {
    s.graph = graph_from_json(read_text_file(graph_path));
  } else {
    if (!k) throw std::invalid_argument("either --k or --graph is required");
    s.overlap = build_overlap_graph(*k, ctx.caps.k);
    s.graph = s.overlap->graph;
  }
  return s;
}

std::string edge_name(const Multigraph& g, EdgeId e) {
  const std::string& label = g.edge(e).label;
  return label.empty() ? "e" + std::to_string(e) : label;
}

std::string cycle_text(const Multigraph& g, const SimpleCycle& c) {
  std::string out;
  for (EdgeId e : c.edges()) {
    if (!out.empty()) out += ' ';
    out += edge_name(g, e);
  }
  return out;
}

EdgeId find_edge(const Multigraph& g, const std::string& name) {
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (edge_name(g, e) == name) return e;
  }
  throw IndexError("no edge named '" + name + "'");
}

/// "uniform", "cycle:<edge>,<edge>,...", a JSON file (pattern vector or
/// array), or a comma list of rationals in edge order.
std::vector<Rational> parse_vector(const std::string& spec, const Source& src) {
  const Multigraph& g = src.graph;
  if (spec == "uniform") {
    if (g.edge_count() == 0) throw EmptyError("graph has no edges");
    return std::vector<Rational>(g.edge_count(), Rational(1, static_cast<long long>(g.edge_count())));
  }
  if (spec.rfind("cycle:", 0) == 0) {
    std::vector<EdgeId> edges;
    for (const auto& name : split(std::string_view(spec).substr(6), ',')) edges.push_back(find_edge(g, name));
    return cycle_vector(g, SimpleCycle(g, std::move(edges))).entries;
  }
  std::error_code ec;
  if (std::filesystem::is_regular_file(spec, ec)) {
    const std::string text = read_text_file(spec);
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') {
      const PatternVector v = PatternVector::from_json(text);
      if (!src.overlap || v.k() != src.overlap->k) throw IndexError("pattern vector does not match the graph");
      return v.to_vector();
    }
    nlohmann::json doc;
    try {
      doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(spec + ": " + e.what());
    }
    if (!doc.is_array()) throw ParseError(spec + ": expected a JSON array or pattern vector");
    std::vector<Rational> out;
    for (const auto& item : doc) {
      if (item.is_string()) {
        out.push_back(parse_rational(item.get<std::string>()));
      } else if (item.is_number_integer()) {
        out.emplace_back(item.get<long long>());
      } else {
        throw ParseError(spec + ": entries must be rational strings or integers");
      }
    }
    if (out.size() != g.edge_count()) throw IndexError(spec + ": wrong number of entries");
    return out;
  }
  std::vector<Rational> out;
  for (const auto& token : split(spec, ',')) out.push_back(parse_rational(token));
  if (out.size() != g.edge_count()) {
    throw IndexError("vector has " + std::to_string(out.size()) + " entries, expected " +
                     std::to_string(g.edge_count()));
  }
  return out;
}

PatternVector pattern_target(const std::string& spec, std::size_t k, const Context& ctx) {
  Source src;
  src.overlap = build_overlap_graph(k, ctx.caps.k);
  src.graph = src.overlap->graph;
  const auto x = parse_vector(spec, src);
  for (const Rational& v : x) {
    if (v < 0 || v > 1) throw NotInPolytopeError("target entries must lie in [0, 1]");
  }
  return PatternVector::from_vector(k, x);
}

std::shared_ptr<RealizationPlan> make_plan(std::size_t k, const std::string& spec, const Context& ctx) {
  FeasibleRegion region(k, ctx.caps.k);
  const PatternVector target = pattern_target(spec, k, ctx);
  RealizationOptions options;
  options.max_size = ctx.caps.size;
  return std::make_shared<RealizationPlan>(plan_realization(region, target, options));
}

Generator parse_witness(const std::string& spec) {
  const auto parts = split(spec, ':');
  if (parts.size() == 2 && parts[0] == "sum") return sum_witness(Permutation::parse(parts[1]));
  if (parts.size() == 2 && parts[0] == "layered") return layered_witness(parse_count(parts[1]));
  throw std::invalid_argument("witness must be sum:<perm> or layered:<size>");
}

void print_pattern_vector(const Context& ctx, const PatternVector& v) {
  for (const auto& [pi, value] : v.entries()) *ctx.out << pi.to_string() << ' ' << ctx.fmt(value) << '\n';
}

void print_decomposition(const Context& ctx, const Multigraph& g, const std::vector<WeightedCycle>& d) {
  for (const auto& wc : d) *ctx.out << ctx.fmt(wc.weight) << ' ' << cycle_text(g, wc.cycle) << '\n';
}

void write_or_print(const Context& ctx, const std::string& path, const std::string& text) {
  if (path == "-") {
    *ctx.out << text;
  } else {
    write_text_file(path, text);
  }
}

}  // namespace

Caps parse_caps(std::string_view text) {
  Caps caps;
  if (text.empty()) return caps;
  if (text.find('=') == std::string_view::npos) {
    caps.k = parse_count(text);
    return caps;
  }
  for (const auto& item : split(text, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("PERMUTOPE_CAP entry '" + item + "' lacks '='");
    const std::string key = item.substr(0, eq);
    const std::size_t value = parse_count(std::string_view(item).substr(eq + 1));
    if (key == "k") caps.k = value;
    else if (key == "cycles") caps.cycles = value;
    else if (key == "mix") caps.mix = value;
    else if (key == "classical") caps.classical = value;
    else if (key == "faces") caps.faces = value;
    else if (key == "size") caps.size = value;
    else throw std::invalid_argument("unknown PERMUTOPE_CAP key '" + key + "'");
  }
  return caps;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        std::optional<std::string> cap_env) {
  Context ctx;
  ctx.out = &out;
  try {
    if (!cap_env) {
      if (const char* env = std::getenv("PERMUTOPE_CAP")) cap_env = env;
    }
    if (cap_env) ctx.caps = parse_caps(*cap_env);
  } catch (const std::exception& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  }

  CLI::App app{"Pattern statistics, overlap graphs and cycle polytopes of permutations", "permutope"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--float", ctx.as_float, "Print decimals (12 significant digits) instead of exact rationals");
  app.add_option("--threads", ctx.threads, "Worker threads for parallel verbs")->check(CLI::PositiveNumber);

  std::optional<std::size_t> k;
  std::string perm, kind = "consecutive", graph_path, vector_spec = "uniform", dot_path, json_path;
  std::string witness, b_perm, m_list, classical_target;
  std::size_t m = 100, q = 0, max_size = 100'000;
  bool windows = false, as_json = false, by_rank = false, plan_json = false, no_perm = false;

  auto add_source = [&](CLI::App* sub) {
    sub->add_option("--k", k, "Pattern size (works on OV_k)");
    sub->add_option("--graph", graph_path, "Multigraph JSON file instead of OV_k");
  };

  auto* stats = app.add_subcommand("stats", "Pattern proportion vector of a permutation");
  stats->add_option("--perm", perm, "Permutation, digits or comma separated")->required();
  stats->add_option("--k", k, "Pattern size")->required();
  stats->add_option("--kind", kind, "consecutive or classical")->check(CLI::IsMember({"consecutive", "classical"}));
  stats->add_flag("--windows", windows, "Divide consecutive counts by n-k+1 instead of n");
  stats->add_flag("--json", as_json, "Print the vector as JSON");

  auto* overlap = app.add_subcommand("overlap", "Build OV_k and export it");
  overlap->add_option("--k", k, "Pattern size")->required();
  overlap->add_option("--dot", dot_path, "Write Graphviz DOT ('-' for stdout)");
  overlap->add_option("--json", json_path, "Write graph JSON ('-' for stdout)");

  auto* vertices = app.add_subcommand("vertices", "Simple cycles, i.e. vertices of P(G)");
  add_source(vertices);
  vertices->add_flag("--json", as_json, "Print the polytope as JSON");

  auto* dim = app.add_subcommand("dim", "Dimension of P(G)");
  add_source(dim);
  dim->add_flag("--by-rank", by_rank, "Use the rank of the equation system");

  auto* member = app.add_subcommand("member", "Exact membership test with certificate");
  add_source(member);
  member->add_option("--vector", vector_spec, "uniform | cycle:<e>,... | file | comma list");

  auto* decompose = app.add_subcommand("decompose", "Convex decomposition into cycle vectors");
  add_source(decompose);
  decompose->add_option("--vector", vector_spec, "uniform | cycle:<e>,... | file | comma list");

  auto* realize_cmd = app.add_subcommand("realize", "Permutation whose consecutive proportions approach a target");
  realize_cmd->add_option("--k", k, "Pattern size")->required();
  realize_cmd->add_option("--vector", vector_spec, "Target point of P_k");
  realize_cmd->add_option("--m", m, "Size parameter")->check(CLI::PositiveNumber);
  realize_cmd->add_flag("--plan", plan_json, "Print the realization plan as JSON");
  realize_cmd->add_flag("--no-perm", no_perm, "Omit the permutation itself");

  auto* mix_cmd = app.add_subcommand("mix", "Substitute a consecutive realization into a classical witness");
  mix_cmd->add_option("--k", k, "Pattern size")->required();
  mix_cmd->add_option("--vector", vector_spec, "Consecutive target (side A)");
  mix_cmd->add_option("--m", m, "Size parameter for side A")->check(CLI::PositiveNumber);
  auto* b_opt = mix_cmd->add_option("--b", b_perm, "Side B permutation");
  auto* w_opt = mix_cmd->add_option("--witness", witness, "Side B generator: sum:<perm> or layered:<size>");
  mix_cmd->add_option("--q", q, "Parameter of the side B generator")->needs(w_opt);
  b_opt->excludes(w_opt);
  mix_cmd->add_flag("--no-perm", no_perm, "Omit the mixed permutation");

  auto* universal = app.add_subcommand("universal", "Permutation containing every k-pattern once consecutively");
  universal->add_option("--k", k, "Pattern size")->required();

  auto* faces = app.add_subcommand("faces", "Face poset via full subgraphs");
  add_source(faces);

  auto* report = app.add_subcommand("report", "CSV convergence report of a realization");
  report->add_option("--k", k, "Pattern size")->required();
  report->add_option("--vector", vector_spec, "Consecutive target");
  report->add_option("--m", m_list, "Comma list of m values (default: powers of two)");
  report->add_option("--max-size", max_size, "Largest permutation for the default schedule");
  report->add_option("--witness", witness, "Mix each row into this classical witness (same m)");
  report->add_option("--classical-target", classical_target, "Classical target for linf_class");

  std::vector<std::string> argv_storage{"permutope"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_storage) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (stats->parsed()) {
      const Permutation sigma = Permutation::parse(perm);
      CountingOptions options = ctx.counting();
      if (windows) options.denominator = ConsecutiveDenominator::kWindows;
      const PatternVector v = proportion_vector(
          *k, sigma, kind == "classical" ? PatternKind::kClassical : PatternKind::kConsecutive, options);
      if (as_json) {
        out << v.to_json();
      } else {
        print_pattern_vector(ctx, v);
      }
    } else if (overlap->parsed()) {
      const OverlapGraph ov = build_overlap_graph(*k, ctx.caps.k);
      if (!dot_path.empty()) write_or_print(ctx, dot_path, graph_to_dot(ov.graph, "OV_" + std::to_string(*k)));
      if (!json_path.empty()) write_or_print(ctx, json_path, graph_to_json(ov.graph));
      if (dot_path.empty() && json_path.empty()) {
        out << "k " << *k << "\nvertices " << ov.graph.vertex_count() << "\nedges " << ov.graph.edge_count()
            << "\nstrongly_connected " << (is_strongly_connected(ov.graph) ? "true" : "false") << '\n';
      }
    } else if (vertices->parsed()) {
      const Source src = load_source(ctx, k, graph_path);
      const CyclePolytope polytope(src.graph);
      if (as_json) {
        out << polytope.to_json(ctx.cycles());
      } else {
        const auto cycles = simple_cycles(src.graph, ctx.cycles());
        out << "vertices " << cycles.size() << '\n';
        for (const auto& c : cycles) out << cycle_text(src.graph, c) << '\n';
      }
    } else if (dim->parsed()) {
      const Source src = load_source(ctx, k, graph_path);
      const CyclePolytope polytope(src.graph);
      out << (by_rank ? polytope.dimension_by_equation_rank() : polytope.dimension()) << '\n';
    } else if (member->parsed() || decompose->parsed()) {
      const Source src = load_source(ctx, k, graph_path);
      const CyclePolytope polytope(src.graph);
      const auto x = parse_vector(vector_spec, src);
      if (decompose->parsed()) {
        print_decomposition(ctx, src.graph, polytope.convex_decomposition(x));
      } else {
        const auto cert = polytope.membership(x);
        out << (cert.member ? "true" : "false") << '\n';
        if (cert.member) {
          print_decomposition(ctx, src.graph, cert.decomposition);
        } else {
          out << cert.violation->describe(src.graph) << '\n';
        }
      }
    } else if (realize_cmd->parsed()) {
      const auto plan = make_plan(*k, vector_spec, ctx);
      if (plan_json) {
        out << plan->to_json();
      } else {
        const Permutation sigma = plan->generate(m);
        const PatternVector stats_v = proportion_vector(*k, sigma, PatternKind::kConsecutive);
        out << "size " << sigma.size() << '\n';
        out << "linf_consec " << ctx.fmt(linf_distance(stats_v, plan->target())) << '\n';
        out << "bound " << ctx.fmt(plan->error_bound(m)) << '\n';
        if (!no_perm) out << "sigma " << sigma.to_string() << '\n';
      }
    } else if (mix_cmd->parsed()) {
      const auto plan = make_plan(*k, vector_spec, ctx);
      const Permutation a = plan->generate(m);
      Permutation b = Permutation::identity(1);
      if (!b_perm.empty()) {
        b = Permutation::parse(b_perm);
      } else if (!witness.empty()) {
        if (q == 0) throw std::invalid_argument("--witness needs --q >= 1");
        b = parse_witness(witness)(q);
      } else {
        throw std::invalid_argument("mix needs --b or --witness");
      }
      MixOptions options;
      options.max_size = ctx.caps.mix;
      const Permutation c = mix(a, b, options);
      const auto counting = ctx.counting();
      Rational consec_dev, class_dev;
      for (const Permutation& pi : all_permutations(*k)) {
        consec_dev = std::max(consec_dev, Rational(abs(cocc_proportion(pi, c) - cocc_proportion(pi, a))));
        if (b.size() >= *k) {
          class_dev = std::max(class_dev, Rational(abs(occ_proportion(pi, c, counting) - occ_proportion(pi, b, counting))));
        }
      }
      const Rational consec_bound = Rational(static_cast<long long>(*k), static_cast<long long>(a.size()));
      const Rational class_bound = mix_classical_bound(*k, b);
      out << "size_a " << a.size() << "\nsize_b " << b.size() << "\nsize_c " << c.size() << '\n';
      out << "consec_deviation " << ctx.fmt(consec_dev) << "\nconsec_bound " << ctx.fmt(consec_bound) << '\n';
      if (b.size() >= *k) {
        out << "class_deviation " << ctx.fmt(class_dev) << "\nclass_bound " << ctx.fmt(class_bound) << '\n';
      }
      out << "bounds_hold " << (consec_dev <= consec_bound && class_dev <= class_bound ? "true" : "false") << '\n';
      if (!no_perm) out << "sigma " << c.to_string() << '\n';
    } else if (universal->parsed()) {
      out << eulerian_universal_permutation(*k, ctx.caps.k).to_string() << '\n';
    } else if (faces->parsed()) {
      const Source src = load_source(ctx, k, graph_path);
      const CyclePolytope polytope(src.graph);
      FacePosetOptions options;
      options.max_edges = ctx.caps.faces;
      options.threads = ctx.threads;
      const FacePoset poset = polytope.face_poset(options);
      out << "faces " << poset.faces.size() << '\n';
      for (std::size_t i = 0; i < poset.faces.size(); ++i) {
        out << poset.dimensions[i];
        for (EdgeId e : poset.faces[i].edges) out << ' ' << edge_name(src.graph, e);
        out << '\n';
      }
      out << "facets " << poset.facets().size() << '\n';
    } else if (report->parsed()) {
      const auto plan = make_plan(*k, vector_spec, ctx);
      Generator generator = plan_generator(plan);
      std::function<BigInt(std::size_t)> size_of = [plan](std::size_t mm) { return plan->size(mm); };
      if (!witness.empty()) {
        Generator side_b = parse_witness(witness);
        MixOptions options;
        options.max_size = ctx.caps.mix;
        generator = [generator, side_b, options](std::size_t mm) { return mix(generator, side_b, mm, options); };
        size_of = [plan, side_b](std::size_t mm) { return plan->size(mm) * side_b(mm).size(); };
      }
      std::vector<std::size_t> ms;
      if (!m_list.empty()) {
        for (const auto& token : split(m_list, ',')) ms.push_back(parse_count(token));
      } else {
        ms = powers_of_two_schedule(size_of, max_size);
      }
      ReportOptions options;
      options.consecutive_target = plan->target();
      if (!classical_target.empty()) options.classical_target = pattern_target(classical_target, *k, ctx);
      options.counting = ctx.counting();
      options.threads = ctx.threads;
      out << convergence_report(generator, *k, ms, options).to_csv();
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace permutope::cli
