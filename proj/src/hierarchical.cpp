#include "udgroute/hierarchical.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <cstring>
#include <fstream>

#include "udgroute/errors.hpp"

namespace udgroute {

double calibration_factor(const MeasuredConstants& c) {
  const double kappa = std::max(2.0 * c.kappa_a * c.beta, 64.0 * c.beta);
  return std::max(64.0, 8.0 * kappa);
}

double calibrate(double eps_target, const MeasuredConstants& c) {
  if (!(eps_target > 0.0 && eps_target <= 1.0)) {
    throw Error(ErrorKind::kInvalidEpsilon, "target stretch parameter must lie in (0, 1]");
  }
  for (double k : {c.beta, c.kappa_a, c.kappa_theta}) {
    if (!(k > 0.0) || !std::isfinite(k)) {
      throw Error(ErrorKind::kCalibrationFailed, "measured constants must be positive and finite");
    }
  }
  return eps_target / calibration_factor(c);
}

int first_level(double eps) { return static_cast<int>(std::ceil(std::log2(8.0 / eps))); }

const LevelTuple* TopLabel::find(int k, std::uint32_t cluster) const {
  const auto it = std::lower_bound(tuples.begin(), tuples.end(), std::pair{k, cluster},
                                   [](const LevelTuple& x, const std::pair<int, std::uint32_t>& key) {
                                     return std::pair{x.k, x.cluster} < key;
                                   });
  return it != tuples.end() && it->k == k && it->cluster == cluster ? &*it : nullptr;
}

bool operator==(const TopLabel& a, const TopLabel& b) {
  if (a.self != b.self || a.tuples.size() != b.tuples.size()) return false;
  for (std::size_t i = 0; i < a.tuples.size(); ++i) {
    const LevelTuple& x = a.tuples[i];
    const LevelTuple& y = b.tuples[i];
    if (x.k != y.k || x.cluster != y.cluster || x.home != y.home || x.label.index() != y.label.index()) return false;
    const bool same = std::visit(
        [&](const auto& px) {
          using Ptr = std::decay_t<decltype(px)>;
          return *px == *std::get<Ptr>(y.label);
        },
        x.label);
    if (!same) return false;
  }
  return true;
}

Dispatch dispatch(const TopLabel& s, const TopLabel& t) {
  for (const LevelTuple& tt : t.tuples) {
    if (!tt.home) continue;
    if (const LevelTuple* ts = s.find(tt.k, tt.cluster)) return {tt.k, tt.cluster, ts, &tt};
  }
  throw Error(ErrorKind::kNoCommonLevel,
              "no level where the home cluster of " + std::to_string(t.self) + " holds " + std::to_string(s.self));
}

VertexId hierarchical_next_vertex(const TopLabel& s, const TopLabel& t, const Broadcast& beta) {
  const Dispatch d = dispatch(s, t);
  if (d.at_s->label.index() != d.at_t->label.index()) {
    throw Error(ErrorKind::kIncompatibleLabels, "sub-labels of one cluster use different schemes");
  }
  if (d.at_s->label.index() == 0) {
    return lowdiam_next_vertex(*std::get<0>(d.at_s->label), *std::get<0>(d.at_t->label), beta);
  }
  return additive_next_vertex(*std::get<1>(d.at_s->label), *std::get<1>(d.at_t->label));
}

Port sigma(const TopLabel& s, const TopLabel& t, const Broadcast& beta) {
  const VertexId next = hierarchical_next_vertex(s, t, beta);
  const Port p = beta(next);
  if (p == beta.sentinel()) {
    throw Error(ErrorKind::kNotANeighbor,
                "next vertex " + std::to_string(next) + " is not adjacent to " + std::to_string(s.self));
  }
  return p;
}

HierarchicalScheme HierarchicalScheme::preprocess(const UnitDiskGraph& g, double eps_target,
                                                  const PreprocessOptions& options) {
  if (!(eps_target > 0.0 && eps_target <= 1.0)) {
    throw Error(ErrorKind::kInvalidEpsilon, "target stretch parameter must lie in (0, 1]");
  }
  HierarchicalScheme h;
  h.g_ = &g;
  SchemeConfig& cfg = h.config_;
  cfg.epsilon_target = eps_target;
  cfg.calibrated = options.calibrated;
  cfg.constants = options.constants;
  cfg.epsilon = options.calibrated ? calibrate(eps_target, options.constants) : eps_target;
  cfg.kappa_total = eps_target / cfg.epsilon;
  cfg.seed = options.seed;
  cfg.diameter = diameter(g);
  cfg.k0 = first_level(cfg.epsilon);
  cfg.k_max = std::max(cfg.k0, static_cast<int>(std::ceil(std::log2(4.0 * cfg.diameter))));

  h.spanner_ = build_spanner(g);
  const std::size_t n = g.size();
  h.labels_.resize(n);
  for (VertexId v = 0; v < n; ++v) h.labels_[v].self = v;

  for (int k = cfg.k0; k <= cfg.k_max; ++k) {
    Level level;
    level.k = k;
    const double r = std::ldexp(1.0, k);
    level.clamped = r >= 4.0 * cfg.diameter;
    if (level.clamped) {
      level.cover.radius = r;
      level.cover.centers = {0};
      level.cover.clusters.emplace_back(n);
      for (VertexId v = 0; v < n; ++v) level.cover.clusters[0][v] = v;
      level.cover.home.assign(n, 0);
      level.cover.overlap = 1;
    } else {
      level.cover = build_cover(h.spanner_.graph, r);
    }

    for (std::uint32_t i = 0; i < level.cover.clusters.size(); ++i) {
      ClusterScheme cs;
      cs.vertices = level.cover.clusters[i];
      const Region region(n, cs.vertices);
      cs.diameter = level.clamped ? cfg.diameter : diameter(g.topology(), &region);
      const bool additive = k > cfg.k0 && cfg.epsilon * cs.diameter > 1.0;
      if (k > cfg.k0 && !additive) ++h.fallbacks_;
      if (additive) {
        auto scheme = std::make_shared<const AdditiveScheme>(g, region, cfg.epsilon, cs.diameter);
        for (VertexId v : cs.vertices) {
          h.labels_[v].tuples.push_back(
              {k, i, level.cover.home[v] == i, std::shared_ptr<const AdditiveLabel>(scheme, &scheme->label(v))});
        }
        cs.scheme = std::move(scheme);
      } else {
        auto scheme = std::make_shared<const LowDiamScheme>(g, region, cfg.epsilon);
        for (VertexId v : cs.vertices) {
          h.labels_[v].tuples.push_back(
              {k, i, level.cover.home[v] == i, std::shared_ptr<const LowDiamLabel>(scheme, &scheme->label(v))});
        }
        cs.scheme = std::move(scheme);
      }
      level.clusters.push_back(std::move(cs));
    }
    h.levels_.push_back(std::move(level));
  }
  return h;
}

double HierarchicalScheme::measured_beta() const {
  double worst = 0.0;
  for (const Level& level : levels_) {
    if (!level.clamped) worst = std::max(worst, cover_diameter_ratio(spanner_.graph, level.cover));
  }
  return worst;
}

std::optional<std::string> HierarchicalScheme::audit_hop(VertexId s, VertexId v, VertexId t) const {
  const Dispatch here = dispatch(labels_[s], labels_[t]);
  if (v != t) {
    const Dispatch next = dispatch(labels_[v], labels_[t]);
    const std::string hop = "hop " + std::to_string(s) + "->" + std::to_string(v) + " toward " + std::to_string(t);
    if (next.k > here.k) {
      return hop + ": level rose from " + std::to_string(here.k) + " to " + std::to_string(next.k);
    }
    if (next.k == here.k && next.cluster != here.cluster) {
      return hop + ": cluster changed at level " + std::to_string(here.k);
    }
  }
  const ClusterScheme& cs = level(here.k).clusters[here.cluster];
  if (cs.is_additive()) return std::get<1>(cs.scheme)->audit_hop(s, v, t);
  return std::nullopt;
}

namespace {

unsigned tuple_count_width(const BitLayout& layout) { return layout.count + 6; }

}  // namespace

void encode(BitWriter& out, const TopLabel& label, const BitLayout& layout) {
  out.write(label.self, layout.id);
  out.write(label.tuples.size(), tuple_count_width(layout));
  for (const LevelTuple& t : label.tuples) {
    out.write(static_cast<std::uint64_t>(t.k), 8);
    out.write(t.cluster, layout.id);
    out.write_bit(t.home);
    out.write_bit(t.label.index() == 1);
    std::visit([&](const auto& p) { encode(out, *p, layout); }, t.label);
  }
}

TopLabel decode_top_label(BitReader& in, const BitLayout& layout) {
  TopLabel lab;
  lab.self = static_cast<VertexId>(in.read(layout.id));
  const auto count = in.read(tuple_count_width(layout));
  for (std::uint64_t j = 0; j < count; ++j) {
    LevelTuple t;
    t.k = static_cast<int>(in.read(8));
    t.cluster = static_cast<std::uint32_t>(in.read(layout.id));
    t.home = in.read_bit();
    if (in.read_bit()) {
      t.label = std::make_shared<const AdditiveLabel>(decode_additive_label(in, layout));
    } else {
      t.label = std::make_shared<const LowDiamLabel>(decode_lowdiam_label(in, layout));
    }
    lab.tuples.push_back(std::move(t));
  }
  return lab;
}

std::size_t encoded_bits(const TopLabel& label, const BitLayout& layout) {
  BitWriter w;
  encode(w, label, layout);
  return w.bit_count();
}

namespace {

constexpr std::array<char, 8> kMagic{'U', 'D', 'G', 'L', 'A', 'B', 'E', 'L'};
constexpr std::uint32_t kStoreVersion = 1;

// Fixed-width little-endian fields, so stores are portable across hosts.
void put(std::ostream& out, std::uint64_t value, int bytes) {
  for (int i = 0; i < bytes; ++i) out.put(static_cast<char>((value >> (8 * i)) & 0xff));
}
void put_double(std::ostream& out, double v) { put(out, std::bit_cast<std::uint64_t>(v), 8); }

std::uint64_t get(std::istream& in, int bytes) {
  std::uint64_t value = 0;
  for (int i = 0; i < bytes; ++i) {
    const int c = in.get();
    if (c == std::char_traits<char>::eof()) throw Error(ErrorKind::kMalformedData, "label store is truncated");
    value |= static_cast<std::uint64_t>(static_cast<unsigned char>(c)) << (8 * i);
  }
  return value;
}
double get_double(std::istream& in) { return std::bit_cast<double>(get(in, 8)); }

}  // namespace

void save_label_store(const std::string& path, const HierarchicalScheme& scheme) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::kInvalidInput, "cannot write " + path);
  const SchemeConfig& c = scheme.config();
  const std::size_t n = scheme.labels().size();
  out.write(kMagic.data(), kMagic.size());
  put(out, kStoreVersion, 4);
  put(out, n, 8);
  put_double(out, c.epsilon_target);
  put_double(out, c.epsilon);
  put_double(out, c.kappa_total);
  put(out, c.seed, 8);
  put(out, static_cast<std::uint32_t>(c.k0), 4);
  put(out, static_cast<std::uint32_t>(c.k_max), 4);
  put(out, c.calibrated ? 1 : 0, 1);
  put_double(out, c.diameter);
  const BitLayout layout = BitLayout::for_graph(n);
  for (const TopLabel& label : scheme.labels()) {
    BitWriter w;
    encode(w, label, layout);
    put(out, label.self, 4);
    put(out, w.bytes().size(), 4);
    out.write(reinterpret_cast<const char*>(w.bytes().data()), static_cast<std::streamsize>(w.bytes().size()));
  }
  if (!out) throw Error(ErrorKind::kInvalidInput, "failed writing " + path);
}

LabelStore load_label_store(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::kInvalidInput, "cannot open " + path);
  std::array<char, 8> magic{};
  in.read(magic.data(), magic.size());
  if (!in || magic != kMagic) throw Error(ErrorKind::kMalformedData, path + " is not a label store");
  if (get(in, 4) != kStoreVersion) throw Error(ErrorKind::kMalformedData, "unsupported label store version");
  LabelStore store;
  store.n = get(in, 8);
  SchemeConfig& c = store.config;
  c.epsilon_target = get_double(in);
  c.epsilon = get_double(in);
  c.kappa_total = get_double(in);
  c.seed = get(in, 8);
  c.k0 = static_cast<int>(static_cast<std::int32_t>(get(in, 4)));
  c.k_max = static_cast<int>(static_cast<std::int32_t>(get(in, 4)));
  c.calibrated = get(in, 1) != 0;
  c.diameter = get_double(in);
  const BitLayout layout = BitLayout::for_graph(store.n);
  store.labels.resize(store.n);
  for (std::size_t j = 0; j < store.n; ++j) {
    const auto id = static_cast<VertexId>(get(in, 4));
    const auto len = get(in, 4);
    if (id >= store.n) throw Error(ErrorKind::kMalformedData, "record id out of range");
    std::vector<std::uint8_t> bytes(len);
    in.read(reinterpret_cast<char*>(bytes.data()), static_cast<std::streamsize>(len));
    if (!in) throw Error(ErrorKind::kMalformedData, "label store is truncated");
    BitReader reader(bytes);
    store.labels[id] = decode_top_label(reader, layout);
    if (store.labels[id].self != id) throw Error(ErrorKind::kMalformedData, "record id does not match its label");
  }
  return store;
}

}  // namespace udgroute
