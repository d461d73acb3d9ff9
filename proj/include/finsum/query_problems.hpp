// Finite query problems for the lower-bound lab: the multi-chain
// prefix-verification problem, the matrix-detection problem, the two-query
// reduction between them, and the strong weighted adversary bound evaluated
// by exact enumeration.
#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <vector>

#include "finsum/vec.hpp"

namespace finsum {

struct McpInstance {
  long long n = 0;  // number of hidden strings
  long long k = 0;  // bits per string
  std::vector<std::vector<std::uint8_t>> bits;  // n rows of k bits
};

// Query (i, j, s) with 1-based i in [n], j in [k], |s| = j: returns 1 iff s
// is exactly the length-j prefix of row i.
int mcp_query(const McpInstance& inst, long long i, long long j,
              const std::vector<std::uint8_t>& s);

struct MdpInstance {
  long long n = 0;
  long long k = 0;
  std::vector<std::vector<std::uint8_t>> choices;  // n rows of k choices
  // Candidate vectors v_{i,j,0} and v_{i,j,1}; the element a_{i,j} equals
  // candidates[choice]. They carry no query semantics beyond the choice bit.
  std::vector<std::vector<std::array<Vector, 2>>> candidates;
};

McpInstance make_mcp(long long n, long long k,
                     const std::vector<std::vector<std::uint8_t>>& bits);
MdpInstance make_mdp(long long n, long long k,
                     const std::vector<std::vector<std::uint8_t>>& choices,
                     std::uint64_t seed);

struct MdpAnswer {
  int found = 0;
  int value = 0;
};

// Query (i, j, m) with 1-based i, prefix length j in [0, k-1], |m| = j:
// (1, choices[i][j+1]) when m matches the first j choices of row i, else
// (0, 0). j = k is rejected (there is no element j+1).
MdpAnswer mdp_query(const MdpInstance& inst, long long i, long long j,
                    const std::vector<std::uint8_t>& m);

using McpOracle =
    std::function<int(long long, long long, const std::vector<std::uint8_t>&)>;

// Implements one matrix-detection query with exactly two prefix queries at
// length j+1 (suffix bits 0 and 1): found iff either answers 1; the value is
// 0 when the 0-suffix query answered 1 and 1 otherwise.
MdpAnswer mdp_via_mcp(long long i, long long j,
                      const std::vector<std::uint8_t>& m,
                      const McpOracle& oracle);

// A finite query problem: inputs and queries are indexed densely, the
// response function xi maps (input, query) to a bit, and f is the target.
struct QueryProblem {
  long long num_inputs = 0;
  long long num_queries = 0;
  std::function<int(long long, long long)> response;     // xi(x, q)
  std::function<long long(long long)> target;            // f(x)
};

struct WeightScheme {
  std::function<double(long long, long long)> w;             // w(x, y)
  std::function<double(long long, long long, long long)> w_prime;  // w'(x,y,q)
};

// Validates the scheme by full enumeration (symmetry, the zero conditions,
// and w'(x,y,q)*w'(y,x,q) >= w(x,y)^2 on distinguishing triples), then
// returns the exact minimum of sqrt(mu(x)mu(y)/(nu(x,q)nu(y,q))) over
// admissible triples. Throws on an invalid or degenerate scheme.
double adversary_bound(const QueryProblem& problem, const WeightScheme& scheme);

// The multi-chain problem as a query problem: inputs are all 2^(nk) bit
// matrices, queries are all (i, t, s) with t in [k] and |s| = t, f = identity.
QueryProblem mcp_query_problem(long long n, long long k);

// Hamming-distance-1 weight scheme: w(x,y) = 1 iff d(x,y) = 1, and
// w'(x,y,q) = 1 iff additionally xi(x,q) != xi(y,q). Enumeration budget
// guard: n*k <= 20.
WeightScheme mcp_weight_scheme(long long n, long long k);

// ceil(n(k+1) + (8 R^2/c^2) log2(2 n k N^3)), the dimension needed for the
// information-hiding argument (constant h = 1, logs base 2).
long long dimension_requirement(long long n, long long k, double c, double R,
                                long long N);

}  // namespace finsum
