#ifndef NDCOLOR_TESTKIT_GENERATORS_H_
#define NDCOLOR_TESTKIT_GENERATORS_H_

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>

#include "ndcolor/graph.h"
#include "ndcolor/type_graph.h"

namespace ndcolor::testkit {

// All randomness comes from std::mt19937_64 seeded with `seed`. Integers in
// [lo, hi] are drawn by rejection sampling on raw 64-bit outputs and Bernoulli
// trials compare (raw >> 11) * 2^-53 against p, so streams do not depend on
// the standard library's distribution implementations.
class Rng {
 public:
  explicit Rng(uint64_t seed) : engine_(seed) {}
  uint64_t next() { return engine_(); }
  int64_t uniform(int64_t lo, int64_t hi);
  double unit();  // [0, 1)
  bool bernoulli(double p) { return unit() < p; }

 private:
  std::mt19937_64 engine_;
};

enum class GeneratorKind { kRandomGnp, kBlowUpRandom, kPaperClassLike };

std::string_view generator_kind_name(GeneratorKind kind);
std::optional<GeneratorKind> generator_kind_from_name(std::string_view name);

struct GeneratorSpec {
  GeneratorKind kind = GeneratorKind::kRandomGnp;
  uint64_t seed = 0;
  // random_gnp: vertex count. paper_class_like: upper end of the total
  // vertex count (drawn log-uniformly from [k, n]).
  int n = 10;
  // Edge probability (random_gnp: graph; blow_up_random: type graph;
  // paper_class_like: extra-vertex attachment).
  double p = 0.5;
  int k_min = 2;
  int k_max = 6;
  int64_t w_min = 1;
  int64_t w_max = 3;
  double loop_probability = 0.5;
  // Rejection-sampling attempts before giving up with an error.
  int max_attempts = 10'000;
  // blow_up_random only: fixed type graph (edges and loops kept) whose
  // weights are redrawn from [w_min, w_max].
  std::optional<TypeGraph> shape;
};

// Defaults per kind: gnp n=10 p=0.5; blow-up k in [2,6], weights in [1,3];
// paper_class_like k in [7,13], total n up to 1000, attachment p=0.6.
GeneratorSpec default_spec(GeneratorKind kind, uint64_t seed);

struct GeneratedInstance {
  Graph graph;
  std::optional<TypeGraph> type_graph;
  int attempts = 1;
};

// Throws ValidationError on out-of-range parameters and Error when the
// attempt budget is exhausted.
GeneratedInstance generate(const GeneratorSpec& spec);

// `<seed> <kind> <params...> <sha256 of write_dimacs(graph)>`.
std::string manifest_line(const GeneratorSpec& spec, const Graph& graph);
std::string sha256_hex(std::string_view data);

}  // namespace ndcolor::testkit

#endif  // NDCOLOR_TESTKIT_GENERATORS_H_
