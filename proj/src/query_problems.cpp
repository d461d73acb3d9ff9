#include "finsum/query_problems.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <memory>
#include <stdexcept>
#include <string>

#include "finsum/rng.hpp"

namespace finsum {

namespace {

void check_bits(const std::vector<std::vector<std::uint8_t>>& rows,
                long long n, long long k, const char* what) {
  if (static_cast<long long>(rows.size()) != n) {
    throw std::invalid_argument(std::string(what) + ": row count mismatch");
  }
  for (const auto& row : rows) {
    if (static_cast<long long>(row.size()) != k) {
      throw std::invalid_argument(std::string(what) + ": row length mismatch");
    }
    for (auto b : row) {
      if (b > 1) throw std::invalid_argument(std::string(what) + ": non-bit entry");
    }
  }
}

}  // namespace

McpInstance make_mcp(long long n, long long k,
                     const std::vector<std::vector<std::uint8_t>>& bits) {
  check_bits(bits, n, k, "make_mcp");
  return {n, k, bits};
}

MdpInstance make_mdp(long long n, long long k,
                     const std::vector<std::vector<std::uint8_t>>& choices,
                     std::uint64_t seed) {
  check_bits(choices, n, k, "make_mdp");
  MdpInstance inst;
  inst.n = n;
  inst.k = k;
  inst.choices = choices;
  Rng rng(seed);
  inst.candidates.resize(static_cast<std::size_t>(n));
  for (auto& row : inst.candidates) {
    row.resize(static_cast<std::size_t>(k));
    for (auto& pair : row) {
      for (auto& v : pair) {
        v = rng.gaussian(4);
        scale(v, 1.0 / norm2(v));
      }
    }
  }
  return inst;
}

int mcp_query(const McpInstance& inst, long long i, long long j,
              const std::vector<std::uint8_t>& s) {
  if (i < 1 || i > inst.n || j < 1 || j > inst.k ||
      static_cast<long long>(s.size()) != j) {
    throw std::invalid_argument("mcp_query: malformed (i, j, s)");
  }
  const auto& row = inst.bits[static_cast<std::size_t>(i - 1)];
  for (long long p = 0; p < j; ++p) {
    if (row[static_cast<std::size_t>(p)] != s[static_cast<std::size_t>(p)]) {
      return 0;
    }
  }
  return 1;
}

MdpAnswer mdp_query(const MdpInstance& inst, long long i, long long j,
                    const std::vector<std::uint8_t>& m) {
  if (i < 1 || i > inst.n || j < 0 || j >= inst.k ||
      static_cast<long long>(m.size()) != j) {
    throw std::invalid_argument("mdp_query: malformed (i, j, m)");
  }
  const auto& row = inst.choices[static_cast<std::size_t>(i - 1)];
  for (long long p = 0; p < j; ++p) {
    if (row[static_cast<std::size_t>(p)] != m[static_cast<std::size_t>(p)]) {
      return {0, 0};
    }
  }
  return {1, row[static_cast<std::size_t>(j)]};
}

MdpAnswer mdp_via_mcp(long long i, long long j,
                      const std::vector<std::uint8_t>& m,
                      const McpOracle& oracle) {
  std::vector<std::uint8_t> s = m;
  s.push_back(0);
  int hit0 = oracle(i, j + 1, s);
  s.back() = 1;
  int hit1 = oracle(i, j + 1, s);
  if (hit0 == 0 && hit1 == 0) return {0, 0};
  return {1, hit0 == 1 ? 0 : 1};
}

namespace {

struct McpQueryCode {
  long long i;  // 0-based row
  long long t;  // prefix length, 1..k
  long long s;  // prefix bits packed little-endian
};

std::vector<McpQueryCode> enumerate_queries(long long n, long long k) {
  std::vector<McpQueryCode> q;
  for (long long i = 0; i < n; ++i) {
    for (long long t = 1; t <= k; ++t) {
      for (long long s = 0; s < (1LL << t); ++s) q.push_back({i, t, s});
    }
  }
  return q;
}

}  // namespace

QueryProblem mcp_query_problem(long long n, long long k) {
  if (n < 1 || k < 1) {
    throw std::invalid_argument("mcp_query_problem: n, k must be >= 1");
  }
  auto queries = std::make_shared<std::vector<McpQueryCode>>(
      enumerate_queries(n, k));
  QueryProblem p;
  p.num_inputs = 1LL << (n * k);
  p.num_queries = static_cast<long long>(queries->size());
  // Input encoding: bit j of row i sits at position i*k + j.
  p.response = [queries, k](long long x, long long qi) {
    const McpQueryCode& q = (*queries)[static_cast<std::size_t>(qi)];
    long long row = (x >> (q.i * k)) & ((1LL << k) - 1);
    long long prefix = row & ((1LL << q.t) - 1);
    return prefix == q.s ? 1 : 0;
  };
  p.target = [](long long x) { return x; };
  return p;
}

WeightScheme mcp_weight_scheme(long long n, long long k) {
  if (n * k > 20) {
    throw std::invalid_argument(
        "mcp_weight_scheme: enumeration budget exceeded (need n*k <= 20)");
  }
  QueryProblem p = mcp_query_problem(n, k);
  auto response = p.response;
  WeightScheme scheme;
  scheme.w = [](long long x, long long y) {
    unsigned long long diff =
        static_cast<unsigned long long>(x) ^ static_cast<unsigned long long>(y);
    return __builtin_popcountll(diff) == 1 ? 1.0 : 0.0;
  };
  scheme.w_prime = [response](long long x, long long y, long long q) {
    unsigned long long diff =
        static_cast<unsigned long long>(x) ^ static_cast<unsigned long long>(y);
    if (__builtin_popcountll(diff) != 1) return 0.0;
    return response(x, q) != response(y, q) ? 1.0 : 0.0;
  };
  return scheme;
}

double adversary_bound(const QueryProblem& problem,
                       const WeightScheme& scheme) {
  const long long S = problem.num_inputs;
  const long long Q = problem.num_queries;
  if (S < 2 || Q < 1) {
    throw std::invalid_argument("adversary_bound: degenerate problem");
  }
  if (S * S * (Q + 1) > 400000000LL) {
    throw std::invalid_argument("adversary_bound: enumeration budget exceeded");
  }

  // Pass 1: validate w and accumulate mu.
  std::vector<double> mu(static_cast<std::size_t>(S), 0.0);
  bool any_positive = false;
  for (long long x = 0; x < S; ++x) {
    for (long long y = 0; y < S; ++y) {
      double wxy = scheme.w(x, y);
      if (wxy < 0.0) {
        throw std::invalid_argument(
            "adversary_bound: negative w at (" + std::to_string(x) + "," +
            std::to_string(y) + ")");
      }
      if (wxy != scheme.w(y, x)) {
        throw std::invalid_argument(
            "adversary_bound: asymmetric w at (" + std::to_string(x) + "," +
            std::to_string(y) + ")");
      }
      if (problem.target(x) == problem.target(y) && wxy != 0.0) {
        throw std::invalid_argument(
            "adversary_bound: w > 0 on equal targets at (" +
            std::to_string(x) + "," + std::to_string(y) + ")");
      }
      mu[static_cast<std::size_t>(x)] += wxy;
      if (wxy > 0.0) any_positive = true;
    }
  }
  if (!any_positive) {
    throw std::invalid_argument("adversary_bound: all-zero weight scheme");
  }

  // Pass 2: validate w' and accumulate nu(x, q).
  std::vector<double> nu(static_cast<std::size_t>(S * Q), 0.0);
  for (long long x = 0; x < S; ++x) {
    for (long long y = 0; y < S; ++y) {
      double wxy = scheme.w(x, y);
      bool same_target = problem.target(x) == problem.target(y);
      for (long long q = 0; q < Q; ++q) {
        double wp = scheme.w_prime(x, y, q);
        if (wp < 0.0) {
          throw std::invalid_argument("adversary_bound: negative w'");
        }
        bool same_response = problem.response(x, q) == problem.response(y, q);
        if ((same_response || same_target) && wp != 0.0) {
          throw std::invalid_argument(
              "adversary_bound: w' > 0 on a non-distinguishing triple (" +
              std::to_string(x) + "," + std::to_string(y) + "," +
              std::to_string(q) + ")");
        }
        if (!same_response && !same_target) {
          if (wp * scheme.w_prime(y, x, q) < wxy * wxy) {
            throw std::invalid_argument(
                "adversary_bound: w'(x,y,q)w'(y,x,q) < w(x,y)^2 at (" +
                std::to_string(x) + "," + std::to_string(y) + "," +
                std::to_string(q) + ")");
          }
        }
        nu[static_cast<std::size_t>(x * Q + q)] += wp;
      }
    }
  }

  // Pass 3: exact minimum of the displayed ratio over admissible triples.
  double best = std::numeric_limits<double>::infinity();
  for (long long x = 0; x < S; ++x) {
    for (long long y = 0; y < S; ++y) {
      if (scheme.w(x, y) <= 0.0) continue;
      for (long long q = 0; q < Q; ++q) {
        if (problem.response(x, q) == problem.response(y, q)) continue;
        double nx = nu[static_cast<std::size_t>(x * Q + q)];
        double ny = nu[static_cast<std::size_t>(y * Q + q)];
        double val = std::sqrt(mu[static_cast<std::size_t>(x)] *
                               mu[static_cast<std::size_t>(y)] / (nx * ny));
        best = std::min(best, val);
      }
    }
  }
  if (!std::isfinite(best)) {
    throw std::invalid_argument("adversary_bound: no admissible triple");
  }
  return best;
}

long long dimension_requirement(long long n, long long k, double c, double R,
                                long long N) {
  if (n < 1 || k < 1 || c <= 0.0 || R <= 0.0 || N < 1) {
    throw std::invalid_argument("dimension_requirement: all inputs positive");
  }
  double nd = static_cast<double>(n);
  double kd = static_cast<double>(k);
  double Nd = static_cast<double>(N);
  double val = nd * (kd + 1.0) +
               (8.0 * R * R / (c * c)) * std::log2(2.0 * nd * kd * Nd * Nd * Nd);
  return static_cast<long long>(std::ceil(val));
}

}  // namespace finsum
