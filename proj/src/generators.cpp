#include "udgroute/generators.hpp"

#include <array>
#include <cmath>
#include <random>

#include "udgroute/errors.hpp"

namespace udgroute {

namespace {

constexpr std::array<std::pair<GeneratorKind, std::string_view>, 5> kNames{{
    {GeneratorKind::kUniformSquare, "uniform-square"},
    {GeneratorKind::kClusteredGaussian, "clustered-gaussian"},
    {GeneratorKind::kGridPerturbed, "grid-perturbed"},
    {GeneratorKind::kSnake, "snake"},
    {GeneratorKind::kLinePath, "line-path"},
}};

bool connected(const SiteSet& sites) {
  try {
    build_udg(sites);
    return true;
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::kDisconnectedGraph) return false;
    throw;
  }
}

SiteSet uniform_square(std::size_t n, double side, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> coord(0.0, side);
  SiteSet sites(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double x = coord(rng);
    sites[i] = {static_cast<VertexId>(i), x, coord(rng)};
  }
  return sites;
}

SiteSet clustered(std::size_t n, double side, double sigma, std::mt19937_64& rng) {
  const std::size_t blobs = std::max<std::size_t>(1, n / 32);
  std::uniform_real_distribution<double> coord(0.0, side);
  std::vector<std::pair<double, double>> centers(blobs);
  for (auto& [cx, cy] : centers) {
    cx = coord(rng);
    cy = coord(rng);
  }
  std::uniform_int_distribution<std::size_t> pick(0, blobs - 1);
  std::normal_distribution<double> offset(0.0, sigma);
  SiteSet sites(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& [cx, cy] = centers[pick(rng)];
    const double x = cx + offset(rng);
    sites[i] = {static_cast<VertexId>(i), x, cy + offset(rng)};
  }
  return sites;
}

// Neighbours sit at most 0.7 + 2 * 0.1 apart, so the grid is always connected.
SiteSet grid_perturbed(std::size_t n, std::mt19937_64& rng) {
  const double pitch = 0.7;
  const auto cols = static_cast<std::size_t>(std::ceil(std::sqrt(static_cast<double>(n))));
  std::uniform_real_distribution<double> jitter(-0.1, 0.1);
  SiteSet sites(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double x = static_cast<double>(i % cols) * pitch + jitter(rng);
    sites[i] = {static_cast<VertexId>(i), x, static_cast<double>(i / cols) * pitch + jitter(rng)};
  }
  return sites;
}

// Serpentine polyline: horizontal lanes lane_gap apart joined at alternating
// ends, sampled at `spacing` along its length. Lanes are too far apart to be
// adjacent, so graph distance follows the polyline.
SiteSet snake(std::size_t n, const GeneratorParams& p, std::mt19937_64& rng) {
  const double length = static_cast<double>(n - 1) * p.spacing;
  const double lanes = std::max(1.0, std::round(std::sqrt(length / p.lane_gap)));
  const double lane_len = std::max(p.spacing, (length - (lanes - 1) * p.lane_gap) / lanes);
  const double period = lane_len + p.lane_gap;
  std::uniform_real_distribution<double> jitter(-0.02, 0.02);
  SiteSet sites(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double along = static_cast<double>(i) * p.spacing;
    const double lane = std::floor(along / period);
    const double off = along - lane * period;
    const bool forward = static_cast<long long>(lane) % 2 == 0;
    double x, y;
    if (off <= lane_len) {
      x = forward ? off : lane_len - off;
      y = lane * p.lane_gap;
    } else {
      x = forward ? lane_len : 0.0;
      y = lane * p.lane_gap + (off - lane_len);
    }
    x += jitter(rng);
    y += jitter(rng);
    sites[i] = {static_cast<VertexId>(i), x, y};
  }
  return sites;
}

SiteSet line_path(std::size_t n, double spacing) {
  SiteSet sites(n);
  for (std::size_t i = 0; i < n; ++i) sites[i] = {static_cast<VertexId>(i), static_cast<double>(i) * spacing, 0.0};
  return sites;
}

}  // namespace

std::string_view kind_name(GeneratorKind kind) {
  for (const auto& [k, name] : kNames) {
    if (k == kind) return name;
  }
  return "unknown";
}

GeneratorKind parse_kind(std::string_view name) {
  for (const auto& [k, n] : kNames) {
    if (n == name) return k;
  }
  throw Error(ErrorKind::kInvalidInput, "unknown generator kind '" + std::string(name) + "'");
}

Instance generate(GeneratorKind kind, std::size_t n, std::uint64_t seed, const GeneratorParams& params) {
  if (n < 2) throw Error(ErrorKind::kInvalidInput, "instances need at least two sites");
  Instance inst;
  inst.kind = kind;
  inst.n = n;
  inst.seed = seed;
  inst.params = params;
  inst.name = std::string(kind_name(kind)) + "-n" + std::to_string(n) + "-s" + std::to_string(seed);

  std::mt19937_64 rng(seed);
  double side = std::sqrt(static_cast<double>(n) / params.density);
  for (int attempt = 0; attempt < params.max_attempts; ++attempt) {
    SiteSet sites;
    switch (kind) {
      case GeneratorKind::kUniformSquare:
        sites = uniform_square(n, side, rng);
        break;
      case GeneratorKind::kClusteredGaussian:
        sites = clustered(n, side, params.cluster_sigma, rng);
        break;
      case GeneratorKind::kGridPerturbed:
        sites = grid_perturbed(n, rng);
        break;
      case GeneratorKind::kSnake:
        sites = snake(n, params, rng);
        break;
      case GeneratorKind::kLinePath:
        sites = line_path(n, params.spacing);
        break;
    }
    if (connected(sites)) {
      inst.sites = std::move(sites);
      return inst;
    }
    if (attempt % 5 == 4) side *= 0.95;
  }
  throw Error(ErrorKind::kGenerationFailed,
              "no connected " + std::string(kind_name(kind)) + " instance after " +
                  std::to_string(params.max_attempts) + " attempts");
}

}  // namespace udgroute
