#include "ndcolor/testkit/generators.h"

#include <openssl/evp.h>

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "ndcolor/class_check.h"
#include "ndcolor/dimacs.h"
#include "ndcolor/errors.h"
#include "ndcolor/induced.h"

namespace ndcolor::testkit {
namespace {

constexpr int kPaperMinK = 7;
constexpr int kPaperMaxK = 13;
// Random neighborhoods tried per added vertex before an attempt restarts.
constexpr int kExtensionTries = 300;

void require(bool condition, const std::string& what) {
  if (!condition) throw ValidationError("generator: " + what);
}

bool twin_free(const Graph& h) {
  for (int u = 0; u < h.num_vertices(); ++u) {
    for (int v = u + 1; v < h.num_vertices(); ++v) {
      std::vector<int> a;
      std::vector<int> b;
      for (const int x : h.neighbors(u)) {
        if (x != v) a.push_back(x);
      }
      for (const int x : h.neighbors(v)) {
        if (x != u) b.push_back(x);
      }
      if (a == b) return false;
    }
  }
  return true;
}

bool pattern_free(const Graph& h) {
  return !contains_induced(h, Pattern::k4K1) &&
         !contains_induced(h, Pattern::kC4) &&
         !contains_induced(h, Pattern::kC6);
}

// k-1 sorted cut points split `total` into k weights of at least 1.
std::vector<int64_t> split_weights(Rng& rng, int k, int64_t total) {
  const int64_t extra = total - k;
  std::vector<int64_t> cuts(k - 1);
  for (auto& c : cuts) c = rng.uniform(0, extra);
  std::sort(cuts.begin(), cuts.end());
  std::vector<int64_t> weights(k);
  int64_t previous = 0;
  for (int i = 0; i < k; ++i) {
    const int64_t cut = i + 1 < k ? cuts[i] : extra;
    weights[i] = 1 + cut - previous;
    previous = cut;
  }
  return weights;
}

GeneratedInstance random_gnp(const GeneratorSpec& spec, Rng& rng) {
  std::vector<Edge> edges;
  for (int u = 0; u < spec.n; ++u) {
    for (int v = u + 1; v < spec.n; ++v) {
      if (rng.bernoulli(spec.p)) edges.emplace_back(u, v);
    }
  }
  return {Graph(spec.n, edges), std::nullopt, 1};
}

GeneratedInstance blow_up_random(const GeneratorSpec& spec, Rng& rng) {
  if (spec.shape) {
    std::vector<int64_t> weights(spec.shape->size());
    for (auto& w : weights) w = rng.uniform(spec.w_min, spec.w_max);
    TypeGraph t(std::move(weights), spec.shape->loops(), spec.shape->edges());
    Graph g = blow_up(t).graph;
    return {std::move(g), std::move(t), 1};
  }
  for (int attempt = 1; attempt <= spec.max_attempts; ++attempt) {
    const int k = static_cast<int>(rng.uniform(spec.k_min, spec.k_max));
    std::vector<Edge> edges;
    for (int a = 0; a < k; ++a) {
      for (int b = a + 1; b < k; ++b) {
        if (rng.bernoulli(spec.p)) edges.emplace_back(a, b);
      }
    }
    std::vector<bool> loops(k);
    for (int i = 0; i < k; ++i) loops[i] = rng.bernoulli(spec.loop_probability);
    std::vector<int64_t> weights(k);
    for (auto& w : weights) w = rng.uniform(spec.w_min, spec.w_max);
    TypeGraph t(std::move(weights), std::move(loops), std::move(edges));
    if (has_mergeable_pair(t)) continue;
    Graph g = blow_up(t).graph;
    return {std::move(g), std::move(t), attempt};
  }
  throw Error("blow_up_random: no twin-free type graph within " +
              std::to_string(spec.max_attempts) + " attempts");
}

// Grows a twin-free (4K1, C4, C6)-free graph from an induced C7 by adding
// vertices with random neighborhoods, then blows it up with all loops.
GeneratedInstance paper_class_like(const GeneratorSpec& spec, Rng& rng) {
  const int k_lo = std::max(spec.k_min, kPaperMinK);
  const int k_hi = std::min(spec.k_max, kPaperMaxK);
  require(k_lo <= k_hi, "paper_class_like needs k range within [7, 13]");
  require(spec.n >= k_hi, "paper_class_like needs n >= k_max");
  for (int attempt = 1; attempt <= spec.max_attempts; ++attempt) {
    const int k = static_cast<int>(rng.uniform(k_lo, k_hi));
    std::vector<Edge> edges;
    for (int v = 0; v < kPaperMinK; ++v) {
      edges.emplace_back(v, (v + 1) % kPaperMinK);
    }
    int size = kPaperMinK;
    while (size < k) {
      bool extended = false;
      for (int t = 0; t < kExtensionTries && !extended; ++t) {
        std::vector<Edge> trial = edges;
        for (int u = 0; u < size; ++u) {
          if (rng.bernoulli(spec.p)) trial.emplace_back(u, size);
        }
        const Graph h(size + 1, trial);
        if (pattern_free(h) && twin_free(h)) {
          edges = std::move(trial);
          extended = true;
        }
      }
      if (!extended) break;
      ++size;
    }
    if (size < k) continue;

    const double log_lo = std::log(static_cast<double>(k));
    const double log_hi = std::log(static_cast<double>(spec.n));
    const int64_t total = std::clamp<int64_t>(
        std::llround(std::exp(log_lo + rng.unit() * (log_hi - log_lo))), k,
        spec.n);
    TypeGraph t(split_weights(rng, k, total), std::vector<bool>(k, true),
                edges);
    Graph g = blow_up(t).graph;
    if (!check_class(g).in_class()) continue;
    return {std::move(g), std::move(t), attempt};
  }
  throw Error("paper_class_like: no certified in-class instance within " +
              std::to_string(spec.max_attempts) + " attempts");
}

std::string format_double(double v) {
  std::ostringstream out;
  out << v;
  return out.str();
}

}  // namespace

int64_t Rng::uniform(int64_t lo, int64_t hi) {
  const uint64_t range = static_cast<uint64_t>(hi) - static_cast<uint64_t>(lo) + 1;
  if (range == 0) return static_cast<int64_t>(next());
  const uint64_t limit =
      std::numeric_limits<uint64_t>::max() -
      std::numeric_limits<uint64_t>::max() % range;
  uint64_t r;
  do {
    r = next();
  } while (r >= limit);
  return lo + static_cast<int64_t>(r % range);
}

double Rng::unit() {
  return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

std::string_view generator_kind_name(GeneratorKind kind) {
  switch (kind) {
    case GeneratorKind::kRandomGnp:
      return "random_gnp";
    case GeneratorKind::kBlowUpRandom:
      return "blow_up_random";
    case GeneratorKind::kPaperClassLike:
      return "paper_class_like";
  }
  return "";
}

std::optional<GeneratorKind> generator_kind_from_name(std::string_view name) {
  for (const auto kind :
       {GeneratorKind::kRandomGnp, GeneratorKind::kBlowUpRandom,
        GeneratorKind::kPaperClassLike}) {
    if (generator_kind_name(kind) == name) return kind;
  }
  return std::nullopt;
}

GeneratorSpec default_spec(GeneratorKind kind, uint64_t seed) {
  GeneratorSpec spec;
  spec.kind = kind;
  spec.seed = seed;
  if (kind == GeneratorKind::kPaperClassLike) {
    spec.n = 1000;
    spec.p = 0.6;
    spec.k_min = kPaperMinK;
    spec.k_max = kPaperMaxK;
    spec.loop_probability = 1.0;
  }
  return spec;
}

GeneratedInstance generate(const GeneratorSpec& spec) {
  require(spec.n >= 0, "n must be nonnegative");
  require(spec.p >= 0.0 && spec.p <= 1.0, "p must lie in [0, 1]");
  require(spec.loop_probability >= 0.0 && spec.loop_probability <= 1.0,
          "loop probability must lie in [0, 1]");
  require(spec.k_min >= 1 && spec.k_min <= spec.k_max, "bad k range");
  require(spec.w_min >= 1 && spec.w_min <= spec.w_max, "bad weight range");
  require(spec.max_attempts >= 1, "max_attempts must be positive");
  Rng rng(spec.seed);
  switch (spec.kind) {
    case GeneratorKind::kRandomGnp:
      return random_gnp(spec, rng);
    case GeneratorKind::kBlowUpRandom:
      return blow_up_random(spec, rng);
    case GeneratorKind::kPaperClassLike:
      return paper_class_like(spec, rng);
  }
  throw ValidationError("generator: unknown kind");
}

std::string sha256_hex(std::string_view data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  if (EVP_Digest(data.data(), data.size(), digest, &length, EVP_sha256(),
                 nullptr) != 1) {
    throw Error("sha256 failed");
  }
  std::ostringstream out;
  out << std::hex << std::setfill('0');
  for (unsigned int i = 0; i < length; ++i) {
    out << std::setw(2) << static_cast<int>(digest[i]);
  }
  return out.str();
}

std::string manifest_line(const GeneratorSpec& spec, const Graph& graph) {
  std::ostringstream out;
  out << spec.seed << ' ' << generator_kind_name(spec.kind);
  switch (spec.kind) {
    case GeneratorKind::kRandomGnp:
      out << " n=" << spec.n << " p=" << format_double(spec.p);
      break;
    case GeneratorKind::kBlowUpRandom:
      if (spec.shape) {
        out << " shape=" << sha256_hex(write_type_graph(*spec.shape)).substr(0, 16);
      } else {
        out << " k=" << spec.k_min << ".." << spec.k_max
            << " p=" << format_double(spec.p)
            << " loops=" << format_double(spec.loop_probability);
      }
      out << " w=" << spec.w_min << ".." << spec.w_max;
      break;
    case GeneratorKind::kPaperClassLike:
      out << " n=" << spec.n << " k=" << spec.k_min << ".." << spec.k_max
          << " p=" << format_double(spec.p);
      break;
  }
  out << ' ' << sha256_hex(write_dimacs(graph));
  return out.str();
}

}  // namespace ndcolor::testkit
