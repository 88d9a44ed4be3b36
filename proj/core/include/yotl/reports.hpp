#pragma once

#include <string>

#include "yotl/jtrace.hpp"
#include "yotl/ytl.hpp"

namespace yotl {

// Inputs echoed together with a computed product.
struct MulReport {
  int d = 1;
  int n = 0;
  std::string lhs, rhs;
  AlgebraElement product;
};

struct TraceReport {
  int d = 1;
  int n = 0;
  std::string word;
  TracePolynomial value;
  bool has_params = false;
  TraceParams params;
  std::map<long, Rational> substituted;  // polynomial in z after u, x
};

struct ReduceReport {
  int d = 1;
  int n = 0;
  std::string word;
  AlgebraElement input;
  AlgebraElement reduced;
};

// Every renderer emits one self-contained report; json=false gives the
// human-readable text layout.
std::string render_dim(const DimensionReport& r, bool json);
std::string render_mul(const MulReport& r, bool json);
std::string render_trace(const TraceReport& r, bool json);
std::string render_reduce(const ReduceReport& r, bool json);
std::string render_zroots(const ZRootsResult& r, bool json);
std::string render_scan(const ObstructionReport& r, bool json);
std::string render_presentation(const PresentationReport& r, bool json);
std::string render_lrelations(const LPresentationReport& r, bool json);
std::string render_tr9tr10(const Tr9Tr10Report& r, bool json);
std::string render_trace_rules(const TraceRulesReport& r, bool json);

// Field-by-field description of every JSON report, for --help-schemas.
std::string schemas_text();

}  // namespace yotl
