#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "udgroute/errors.hpp"
#include "udgroute/generators.hpp"
#include "udgroute/hierarchical.hpp"
#include "udgroute/simulate.hpp"
#include "udgroute/verify.hpp"

using namespace udgroute;
using json = nlohmann::json;

namespace {

UnitDiskGraph load_graph(const std::string& path) { return build_udg(load_sites(path)); }

json summary_json(const SimulationReport& rep) {
  return {
      {"scheme", rep.scheme},
      {"n", rep.n},
      {"pairs", rep.pairs.size()},
      {"all_pairs", rep.all_pairs},
      {"sample_seed", rep.sample_seed},
      {"step_cap", rep.cap},
      {"max_stretch", rep.max_stretch},
      {"mean_stretch", rep.mean_stretch},
      {"min_stretch", rep.min_stretch},
      {"max_excess", rep.max_excess},
      {"max_hops", rep.max_hops},
      {"audited_hops", rep.audited_hops},
      {"violations", rep.violations},
      {"violation_log", rep.violation_log},
      {"label_bits", {{"max", rep.max_label_bits}, {"mean", rep.mean_label_bits}, {"total", rep.total_label_bits}}},
  };
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::kInvalidInput, "cannot write " + path);
  out << text;
}

int cmd_gen(const std::string& kind, std::size_t n, std::uint64_t seed, const GeneratorParams& params,
            const std::string& out) {
  const Instance inst = generate(parse_kind(kind), n, seed, params);
  save_sites(out, inst.sites);
  std::cout << inst.name << " -> " << out << '\n';
  return 0;
}

int cmd_build(const std::string& instance, double eps, bool uncalibrated, std::uint64_t seed, const std::string& out) {
  const UnitDiskGraph g = load_graph(instance);
  PreprocessOptions opt;
  opt.calibrated = !uncalibrated;
  opt.seed = seed;
  const HierarchicalScheme scheme = HierarchicalScheme::preprocess(g, eps, opt);
  save_label_store(out, scheme);
  const SchemeConfig& c = scheme.config();
  std::cout << "n=" << g.size() << " D=" << format_double(c.diameter) << " eps_target=" << format_double(c.epsilon_target)
            << " eps=" << format_double(c.epsilon) << " kappa_total=" << format_double(c.kappa_total) << " levels="
            << c.k0 << ".." << c.k_max << " lowdiam_fallbacks=" << scheme.lowdiam_fallbacks() << " -> " << out << '\n';
  return 0;
}

int cmd_route(const std::string& labels, const std::string& instance, std::uint64_t port_seed, VertexId s, VertexId t) {
  const LabelStore store = load_label_store(labels);
  const UnitDiskGraph g = load_graph(instance);
  if (store.n != g.size()) throw Error(ErrorKind::kIncompatibleLabels, "label store and instance sizes differ");
  if (s >= g.size() || t >= g.size()) throw Error(ErrorKind::kInvalidInput, "vertex id out of range");
  const Network net(g, port_seed);
  const StoredLabelRouter router(store);
  const auto path = route_path(router, net, s, t, step_cap(g.size(), store.config.level_count()));
  double total = 0.0;
  std::cout << "hop 0: " << path[0] << '\n';
  for (std::size_t i = 1; i < path.size(); ++i) {
    const double w = distance(g.site(path[i - 1]), g.site(path[i]));
    total += w;
    std::cout << "hop " << i << ": " << path[i] << " port=" << net.broadcast(path[i - 1])(path[i])
              << " w=" << format_double(w) << '\n';
  }
  const double d = dijkstra(g.topology(), s).dist[t];
  std::cout << "length=" << format_double(total) << " shortest=" << format_double(d)
            << " stretch=" << format_double(s == t ? 1.0 : total / d) << '\n';
  return 0;
}

struct BenchArgs {
  std::string instance;
  std::string scheme = "hierarchical";
  double eps = 1.0;
  bool uncalibrated = false;
  std::string pairs = "all";
  std::uint64_t sample_seed = 1;
  std::uint64_t port_seed = 1;
  std::string csv;
  std::string json_out;
  bool timings = false;
  std::size_t suffix_checks = 0;
};

int cmd_bench(const BenchArgs& a) {
  using Clock = std::chrono::steady_clock;
  const auto t0 = Clock::now();
  const UnitDiskGraph g = load_graph(a.instance);
  const DistanceMatrix oracle = all_pairs(g.topology());
  const Network net(g, a.port_seed);

  SimulationOptions opt;
  opt.suffix_checks = a.suffix_checks;
  opt.sample_seed = a.sample_seed;
  if (a.pairs != "all") {
    opt.all_pairs = false;
    opt.sample = std::stoul(a.pairs);
  } else if (g.size() > 512) {
    opt.all_pairs = false;  // exhaustive only at desk scale
  }

  json out;
  out["instance"] = a.instance;
  out["port_seed"] = a.port_seed;
  SimulationReport rep;
  bool ok = true;
  const auto t1 = Clock::now();
  double build_seconds = 0.0;
  if (a.scheme == "hierarchical") {
    PreprocessOptions pre;
    pre.calibrated = !a.uncalibrated;
    const HierarchicalScheme scheme = HierarchicalScheme::preprocess(g, a.eps, pre);
    build_seconds = std::chrono::duration<double>(Clock::now() - t1).count();
    rep = simulate(HierarchicalRouter(scheme), net, oracle, opt);
    const SchemeConfig& c = scheme.config();
    double kappa = 0.0;
    for (const PairResult& r : rep.pairs) {
      const int k = dispatch(scheme.label(r.s), scheme.label(r.t)).k;
      kappa = std::max(kappa, (r.routed - r.shortest) / (c.epsilon * std::ldexp(1.0, k)));
    }
    std::size_t overlap = 0;
    for (const Level& level : scheme.levels()) overlap = std::max(overlap, level.cover.overlap);
    out["config"] = {{"eps_target", c.epsilon_target}, {"eps", c.epsilon},         {"calibrated", c.calibrated},
                     {"kappa_total", c.kappa_total},   {"diameter", c.diameter},   {"k0", c.k0},
                     {"k_max", c.k_max},               {"lowdiam_fallbacks", scheme.lowdiam_fallbacks()}};
    out["constants"] = {{"beta", scheme.measured_beta()}, {"kappa", kappa}, {"overlap", overlap},
                        {"spanner_stretch", scheme.spanner().stretch}};
    if (c.calibrated && rep.max_stretch > 1.0 + c.epsilon_target) ok = false;
  } else if (a.scheme == "additive") {
    const AdditiveScheme scheme(g, a.eps);
    build_seconds = std::chrono::duration<double>(Clock::now() - t1).count();
    rep = simulate(AdditiveRouter(scheme, g.size()), net, oracle, opt);
    const DecompositionTree& tree = scheme.decomposition();
    out["constants"] = {{"kappa_a", additive_constant(rep, a.eps, scheme.diameter())},
                        {"tree_height", tree.height()},
                        {"max_portals", tree.max_portals()},
                        {"cycle_splits", tree.cycle_splits()},
                        {"median_splits", tree.median_splits()}};
  } else if (a.scheme == "lowdiam") {
    const LowDiamScheme scheme(g, a.eps);
    build_seconds = std::chrono::duration<double>(Clock::now() - t1).count();
    rep = simulate(LowDiamRouter(scheme, g.size()), net, oracle, opt);
    out["constants"] = {{"cluster_vertices", scheme.sets().cluster.size()},
                        {"skeleton_vertices", scheme.sets().skeleton.size()}};
    if (rep.max_stretch > 1.0 + 64.0 * a.eps) ok = false;
  } else {
    throw Error(ErrorKind::kInvalidInput, "unknown scheme '" + a.scheme + "'");
  }
  out["report"] = summary_json(rep);
  if (a.timings) {
    out["seconds"] = {{"build", build_seconds},
                      {"total", std::chrono::duration<double>(Clock::now() - t0).count()}};
  }
  if (rep.violations > 0) ok = false;
  out["passed"] = ok;

  if (!a.csv.empty()) {
    std::ofstream csv(a.csv);
    write_pairs_csv(csv, rep);
  }
  const std::string text = out.dump(2) + "\n";
  if (a.json_out.empty()) {
    std::cout << text;
  } else {
    write_text(a.json_out, text);
  }
  return ok ? 0 : 1;
}

int cmd_verify(const std::string& instance, std::vector<std::string> components, const VerifyOptions& opt,
               const std::string& dump) {
  const SiteSet sites = load_sites(instance);
  const UnitDiskGraph g = build_udg(sites);
  if (components.empty() || (components.size() == 1 && components[0] == "all")) components = verify_components();
  bool ok = true;
  for (const std::string& c : components) {
    for (const Check& check : verify(g, c, opt)) {
      ok = ok && check.passed;
      std::cout << (check.passed ? "PASS " : "FAIL ") << check.name;
      if (!check.detail.empty()) std::cout << "  " << check.detail;
      std::cout << '\n';
    }
  }
  if (!ok && !dump.empty()) {
    save_sites(dump, sites);
    std::cout << "counterexample instance written to " << dump << '\n';
  }
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Compact headerless routing in unit disk graphs"};
  app.require_subcommand(1);

  std::string kind = "uniform-square", out;
  std::size_t n = 128;
  std::uint64_t seed = 1;
  GeneratorParams params;
  auto* gen = app.add_subcommand("gen", "Generate a connected instance");
  gen->add_option("--kind", kind, "uniform-square | clustered-gaussian | grid-perturbed | snake | line-path");
  gen->add_option("-n,--n", n, "Number of sites")->required();
  gen->add_option("--seed", seed, "Random seed");
  gen->add_option("--density", params.density, "Sites per unit area");
  gen->add_option("--spacing", params.spacing, "Spacing along the path (line-path, snake)");
  gen->add_option("-o,--out", out, "Instance file")->required();

  std::string instance, labels;
  double eps = 1.0;
  bool uncalibrated = false;
  auto* build = app.add_subcommand("build", "Preprocess the 1+eps scheme into a label store");
  build->add_option("-i,--instance", instance)->required();
  build->add_option("--eps", eps, "Target stretch parameter in (0, 1]");
  build->add_flag("--uncalibrated", uncalibrated, "Use the target directly as the internal parameter");
  build->add_option("--seed", seed, "Seed recorded in the store header");
  build->add_option("-o,--out", out, "Label store file")->required();

  VertexId s = 0, t = 0;
  std::uint64_t port_seed = 1;
  auto* route = app.add_subcommand("route", "Print the hop trace of one route");
  route->add_option("-l,--labels", labels)->required();
  route->add_option("-i,--instance", instance)->required();
  route->add_option("--port-seed", port_seed, "Seed of the port permutation");
  route->add_option("-s", s)->required();
  route->add_option("-t", t)->required();

  BenchArgs bench_args;
  auto* bench = app.add_subcommand("bench", "Route many pairs and report stretch, hops and label sizes");
  bench->add_option("-i,--instance", bench_args.instance)->required();
  bench->add_option("--scheme", bench_args.scheme, "hierarchical | additive | lowdiam");
  bench->add_option("--eps", bench_args.eps, "Target (hierarchical) or scheme parameter");
  bench->add_flag("--uncalibrated", bench_args.uncalibrated);
  bench->add_option("--pairs", bench_args.pairs, "'all' or a sample size");
  bench->add_option("--sample-seed", bench_args.sample_seed);
  bench->add_option("--port-seed", bench_args.port_seed);
  bench->add_option("--suffix-checks", bench_args.suffix_checks, "Routes replayed from every hop");
  bench->add_option("--csv", bench_args.csv, "Per-pair CSV output");
  bench->add_option("--json", bench_args.json_out, "Aggregate JSON output (stdout when absent)");
  bench->add_flag("--timings", bench_args.timings, "Include wall-clock times in the JSON");

  std::vector<std::string> components;
  VerifyOptions vopt;
  std::string dump;
  auto* verify_cmd = app.add_subcommand("verify", "Check component properties against brute-force oracles");
  verify_cmd->add_option("-i,--instance", instance)->required();
  verify_cmd->add_option("-c,--component", components, "spanner cover lowdiam decomposition additive hierarchical all");
  verify_cmd->add_option("--eps", vopt.epsilon, "Parameter for lowdiam, decomposition, additive");
  verify_cmd->add_option("--eps-target", vopt.eps_target, "Target for hierarchical");
  verify_cmd->add_flag("--uncalibrated", uncalibrated);
  verify_cmd->add_option("--radius", vopt.cover_radius, "Cover radius");
  verify_cmd->add_option("--port-seed", vopt.port_seed);
  verify_cmd->add_option("--dump", dump, "Where to write the instance when a check fails");

  CLI11_PARSE(app, argc, argv);
  try {
    if (*gen) return cmd_gen(kind, n, seed, params, out);
    if (*build) return cmd_build(instance, eps, uncalibrated, seed, out);
    if (*route) return cmd_route(labels, instance, port_seed, s, t);
    if (*bench) return cmd_bench(bench_args);
    if (*verify_cmd) {
      vopt.calibrated = !uncalibrated;
      return cmd_verify(instance, components, vopt, dump);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
