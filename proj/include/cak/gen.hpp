#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "cak/graph.hpp"
#include "cak/leafroot.hpp"

namespace cak {

/// SplitMix64 stream. Streams keyed by (seed, index) are independent of the
/// order in which instances are produced.
class Rng {
 public:
  explicit Rng(std::uint64_t seed, std::uint64_t stream = 0);

  std::uint64_t next();
  /// Uniform in [lo, hi].
  int uniform(int lo, int hi);
  double unit();
  bool bernoulli(double p) { return unit() < p; }
  /// Uniform random permutation of 0..n-1.
  std::vector<int> permutation(int n);

 private:
  std::uint64_t state_;
};

enum class Variant { chordal, strongly_chordal, ptolemaic, leaf_power, planted, planted_sun };

std::string_view variant_name(Variant v);
/// Throws PreconditionError for unknown names.
Variant parse_variant(std::string_view name);

struct GenConfig {
  int n = 10;
  std::uint64_t seed = 0;
  std::uint64_t index = 0;
  double density = 0.4;
  Variant variant = Variant::chordal;
  int k = 4;        // leaf_power threshold
  int pattern = 1;  // planted G_pattern
  int sun_k = 3;    // planted_sun size
  int max_attempts = 20000;
};

/// Intersection graph of random subtrees of a random host tree.
Graph random_chordal(const GenConfig& cfg);
/// Rejection-filtered random_chordal, or the planted variants when asked.
/// Throws GenerationError after cfg.max_attempts rejections.
Graph random_strongly_chordal(const GenConfig& cfg);
/// G_pattern padded with simplicial vertices up to cfg.n, randomly
/// relabelled, and filtered to stay strongly chordal.
Graph planted_pattern(const GenConfig& cfg);
/// A cfg.sun_k-sun padded with simplicial vertices; chordal, never strongly chordal.
Graph planted_sun(const GenConfig& cfg);
Graph random_ptolemaic(const GenConfig& cfg);

struct LeafPowerInstance {
  Graph graph;
  LeafRootModel model;
};
/// Random tree with n leaves, internal degree >= 3 and weights in {1, 2};
/// the graph is its k-leaf power.
LeafPowerInstance random_leaf_power(int n, int k, std::uint64_t seed, std::uint64_t index = 0);

/// Dispatches on cfg.variant.
Graph generate(const GenConfig& cfg);

/// Writes `count` instances (indices 0..count-1) as graph files plus a
/// manifest.json recording each file's configuration. Returns the file names.
std::vector<std::string> write_corpus(const std::string& dir, GenConfig cfg, int count);

}  // namespace cak
