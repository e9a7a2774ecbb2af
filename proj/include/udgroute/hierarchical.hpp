#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "udgroute/additive.hpp"
#include "udgroute/bits.hpp"
#include "udgroute/cover.hpp"
#include "udgroute/geometry.hpp"
#include "udgroute/lowdiam.hpp"
#include "udgroute/spanner.hpp"

namespace udgroute {

/// Constants the stretch argument is parameterized by: the cover diameter
/// factor, the additive scheme's excess per eps D and the oracle's.
struct MeasuredConstants {
  double beta = kCoverDiameterFactor;
  double kappa_a = 4.0;
  double kappa_theta = 3.0;
};

/// The loose worst-case accounting: cover factor 2^6 and c_0 = 2^6.
inline MeasuredConstants worst_case_constants() { return {64.0, 64.0, 64.0}; }

/// kappa_total = max(64, 8 kappa) with kappa = max(2 kappa_a beta, 64 beta).
double calibration_factor(const MeasuredConstants& constants);

/// eps_target / kappa_total. Throws InvalidEpsilon for eps_target outside
/// (0, 1], CalibrationFailed for non-positive or non-finite constants.
double calibrate(double eps_target, const MeasuredConstants& constants);

/// k0 = ceil(log2(8 / eps)).
int first_level(double eps);

struct SchemeConfig {
  double epsilon_target = 1.0;
  double epsilon = 1.0;       // internal parameter used by every sub-scheme
  bool calibrated = true;
  double kappa_total = 1.0;   // epsilon_target / epsilon
  MeasuredConstants constants;
  double diameter = 0.0;
  int k0 = 0;
  int k_max = 0;              // levels are k0..k_max
  std::uint64_t seed = 0;     // recorded with the label store

  std::size_t level_count() const { return static_cast<std::size_t>(k_max - k0 + 1); }
};

struct PreprocessOptions {
  bool calibrated = true;
  MeasuredConstants constants;
  std::uint64_t seed = 0;
};

using SubLabel = std::variant<std::shared_ptr<const LowDiamLabel>, std::shared_ptr<const AdditiveLabel>>;

struct LevelTuple {
  int k = 0;
  std::uint32_t cluster = 0;
  bool home = false;
  SubLabel label;
};

struct TopLabel {
  VertexId self = kNoVertex;
  std::vector<LevelTuple> tuples;  // sorted by (k, cluster)

  const LevelTuple* find(int k, std::uint32_t cluster) const;
};

bool operator==(const TopLabel& a, const TopLabel& b);

/// Level and cluster chosen for a packet at s heading to t: the smallest k
/// whose home cluster of t also holds s.
struct Dispatch {
  int k = 0;
  std::uint32_t cluster = 0;
  const LevelTuple* at_s = nullptr;
  const LevelTuple* at_t = nullptr;
};

/// Throws NoCommonLevel when no level qualifies.
Dispatch dispatch(const TopLabel& s, const TopLabel& t);
VertexId hierarchical_next_vertex(const TopLabel& s, const TopLabel& t, const Broadcast& beta);
Port sigma(const TopLabel& s, const TopLabel& t, const Broadcast& beta);

/// One cluster of one level with the sub-scheme that serves it.
struct ClusterScheme {
  std::vector<VertexId> vertices;
  double diameter = 0.0;
  std::variant<std::shared_ptr<const LowDiamScheme>, std::shared_ptr<const AdditiveScheme>> scheme;

  bool is_additive() const { return scheme.index() == 1; }
};

struct Level {
  int k = 0;
  bool clamped = false;  // 2^k >= 4D: a single cluster holding everything
  SparseCover cover;
  std::vector<ClusterScheme> clusters;
};

/// Spanner, covers at radii 2^k for k in k0..k_max, a sub-scheme per cluster
/// and the assembled labels.
class HierarchicalScheme {
 public:
  static HierarchicalScheme preprocess(const UnitDiskGraph& g, double eps_target, const PreprocessOptions& options = {});

  const SchemeConfig& config() const { return config_; }
  const PlanarSpanner& spanner() const { return spanner_; }
  const std::vector<Level>& levels() const { return levels_; }
  const Level& level(int k) const { return levels_[static_cast<std::size_t>(k - config_.k0)]; }
  const TopLabel& label(VertexId v) const { return labels_[v]; }
  const std::vector<TopLabel>& labels() const { return labels_; }
  /// Additive-level clusters that had to use the low-diameter scheme because
  /// eps * diam <= 1 there.
  std::size_t lowdiam_fallbacks() const { return fallbacks_; }
  /// Largest cluster diameter over radius in the (non-clamped) covers.
  double measured_beta() const;

  /// Level monotonicity for the hop s -> v toward t, plus the additive
  /// sub-scheme's own invariants when that level dispatched the hop.
  std::optional<std::string> audit_hop(VertexId s, VertexId v, VertexId t) const;

 private:
  const UnitDiskGraph* g_ = nullptr;
  SchemeConfig config_;
  PlanarSpanner spanner_;
  std::vector<Level> levels_;
  std::vector<TopLabel> labels_;
  std::size_t fallbacks_ = 0;
};

void encode(BitWriter& out, const TopLabel& label, const BitLayout& layout);
TopLabel decode_top_label(BitReader& in, const BitLayout& layout);
std::size_t encoded_bits(const TopLabel& label, const BitLayout& layout);

/// Label store: versioned header (n, eps_target, internal eps, kappa_total,
/// seed, k0, k_max) followed by one record per vertex (id, byte length,
/// canonical label bytes).
struct LabelStore {
  SchemeConfig config;
  std::size_t n = 0;
  std::vector<TopLabel> labels;
};

void save_label_store(const std::string& path, const HierarchicalScheme& scheme);
LabelStore load_label_store(const std::string& path);

}  // namespace udgroute
