#ifndef NDCOLOR_TESTKIT_ORACLES_H_
#define NDCOLOR_TESTKIT_ORACLES_H_

#include <cstdint>

#include "ndcolor/covering_ilp.h"
#include "ndcolor/graph.h"
#include "ndcolor/mis.h"
#include "ndcolor/nd_decomposition.h"
#include "ndcolor/type_graph.h"

// Brute-force ground truth for each pipeline stage. None of these share
// search code with the routines they check; each rebuilds its own adjacency
// from the edge list. Size caps are hard RangeErrors.
namespace ndcolor::testkit {

inline constexpr int kOracleChromaticMaxN = 20;
inline constexpr int kOracleNdMaxN = 200;
inline constexpr int kOracleMisMaxK = 16;
inline constexpr int kOracleIlpMaxColumns = 12;
inline constexpr int64_t kOracleIlpMaxRhs = 8;

// DSATUR-ordered backtracking with a greedy clique lower bound.
int oracle_chromatic(const Graph& g);

// Pairwise comparison of N(u)\{v} and N(v)\{u}.
NdDecomposition oracle_nd(const Graph& g);

// Filters all 2^k subsets for independence and maximality.
MisFamily oracle_mis(const TypeGraph& t);

// Minimum sum(x) over x in {0..max rhs}^d, enumerated column by column and
// cut only where the partial sum already reaches the best value found or a
// row can no longer be met.
int64_t oracle_ilp(const CoveringIlp& p);

}  // namespace ndcolor::testkit

#endif  // NDCOLOR_TESTKIT_ORACLES_H_
