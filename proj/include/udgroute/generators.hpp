#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "udgroute/geometry.hpp"

namespace udgroute {

enum class GeneratorKind { kUniformSquare, kClusteredGaussian, kGridPerturbed, kSnake, kLinePath };

std::string_view kind_name(GeneratorKind kind);
/// Accepts the names printed by kind_name; throws InvalidInput otherwise.
GeneratorKind parse_kind(std::string_view name);

struct GeneratorParams {
  double density = 4.0;       // expected sites per unit area (uniform, clustered)
  double spacing = 0.8;       // along-path spacing (line, snake); grid pitch uses 0.7
  double lane_gap = 1.15;     // snake: distance between neighbouring lanes
  double cluster_sigma = 1.0; // clustered: standard deviation per blob
  int max_attempts = 200;
};

struct Instance {
  std::string name;
  GeneratorKind kind = GeneratorKind::kUniformSquare;
  std::size_t n = 0;
  std::uint64_t seed = 0;
  GeneratorParams params;
  SiteSet sites;
};

/// Deterministic under (kind, n, seed, params); always yields a connected
/// unit disk graph. Random kinds redraw on failure and tighten the layout by
/// 5% every few attempts. Throws InvalidInput for n < 2 and GenerationFailed
/// when the attempt budget runs out.
Instance generate(GeneratorKind kind, std::size_t n, std::uint64_t seed, const GeneratorParams& params = {});

}  // namespace udgroute
