#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "yotl/scalars.hpp"
#include "yotl/yhecke.hpp"

namespace yotl {

// Markov trace on the tower of algebras, valued in polynomials over z and
// the framing parameters x_1, ..., x_{d-1}.
TracePolynomial trace(const AlgebraElement& a);

// E^{(s)} = (1/d) sum_m x_m x_{(s-m) mod d}, with x_0 = 1.
TracePolynomial E(int s, int d);

// Condition forced on z by requiring the trace to kill a linear relation:
// z2*z^2 + z1*z + z0 = 0 with z-free polynomial coefficients.  Derived by
// evaluating the implemented trace on the relation element.
struct ZQuadratic {
  int d = 1;
  TracePolynomial z2, z1, z0;
  TracePolynomial full;
  std::string str() const { return full.str(); }
};

ZQuadratic z_quadratic(int d);

struct TraceParams {
  int d = 1;
  Rational u;
  std::vector<Rational> x;  // x[s-1] assigns x_s; size d-1
};

struct ZRootsResult {
  int d = 1;
  Rational lead, lin, cst;  // the quadratic after substitution
  QuadRoots roots;
  std::string quadratic;
};

ZRootsResult z_roots(const TraceParams& params);

// Value of trace(w * r_i) at the assignment (u, x, z = root); zero exactly
// when the trace respects the relation against this particular word.
QuadExtScalar obstruction(const AlgebraElement& w, int i, const TraceParams& params,
                          const QuadExtScalar& root);

enum class RootChoice { one, both };

struct ScanEntry {
  std::string word;
  int relation_index = 1;
  int root_id = 0;
  QuadExtScalar value;
  bool is_zero = true;
};

struct ObstructionReport {
  int d = 1;
  int n = 0;
  TraceParams params;
  std::string quadratic;
  std::vector<std::string> roots;
  std::vector<ScanEntry> entries;
  std::size_t nonzero_count = 0;
  std::vector<std::string> witnesses;
};

ObstructionReport factoring_scan(int d, int n, const TraceParams& params,
                                 RootChoice roots = RootChoice::both);

// Symbolic cross-check of the closed forms for the traces of the framed word
// t_1^{k1} t_2^{k2} t_3^k g_1 g_2 g_1 and of its five-term rewriting, over
// every exponent triple mod d.
struct Tr9Tr10Report {
  int d = 1;
  bool all_match = false;
  bool zero_case_matches_quadratic = false;
  std::vector<std::string> mismatches;
};

Tr9Tr10Report identity_tr9_tr10(int d);

struct TraceRuleCheck {
  std::string name;
  bool holds = false;
};

struct TraceRulesReport {
  int d = 1;
  int n = 0;
  std::size_t pairs = 0;
  std::uint64_t seed = 0;
  bool all_hold = false;
  std::vector<TraceRuleCheck> checks;
};

// Defining rules of the trace as randomized exact checks: normalization,
// linearity, the framing rule, the Markov rule, and tr(ab) = tr(ba) on
// `pairs` random basis-word pairs.
TraceRulesReport verify_trace_rules(int d, int n, std::size_t pairs = 200,
                                    std::uint64_t seed = 0x6d61726b6f76ULL);

// Substitution of u and the x parameters only; the result is a polynomial in
// z with rational coefficients, keyed by z exponent.
std::map<long, Rational> substitute_u_x(const TracePolynomial& p, const Rational& u0,
                                        const std::vector<Rational>& xvals);
std::string z_poly_str(const std::map<long, Rational>& poly);

// Default scan assignment: u = 2 and x_s = 1/(s+1).
TraceParams default_params(int d);

}  // namespace yotl
