#include "yotl/reports.hpp"

#include <json.hpp>

#include <sstream>

namespace yotl {

namespace {

using Json = nlohmann::ordered_json;

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json params_json(const TraceParams& p) {
  Json x = Json::object();
  for (std::size_t s = 0; s < p.x.size(); ++s)
    x["x" + std::to_string(s + 1)] = rational_str(p.x[s]);
  return Json{{"u", rational_str(p.u)}, {"x", std::move(x)}};
}

std::string params_text(const TraceParams& p) {
  std::string out = "u = " + rational_str(p.u);
  for (std::size_t s = 0; s < p.x.size(); ++s)
    out += ", x" + std::to_string(s + 1) + " = " + rational_str(p.x[s]);
  return out;
}

Json element_json(const AlgebraElement& a) { return Json::parse(element_to_json(a)); }

const char* yesno(bool b) { return b ? "yes" : "no"; }

Json checks_json(const std::vector<std::string>& names, const std::vector<bool>& holds) {
  Json arr = Json::array();
  for (std::size_t i = 0; i < names.size(); ++i)
    arr.push_back(Json{{"name", names[i]}, {"holds", static_cast<bool>(holds[i])}});
  return arr;
}

template <typename Check>
void split_checks(const std::vector<Check>& checks, std::vector<std::string>& names,
                  std::vector<bool>& holds) {
  for (const auto& c : checks) {
    names.push_back(c.name);
    holds.push_back(c.holds);
  }
}

template <typename Check>
std::string checks_text(const std::string& title, bool all_hold,
                        const std::vector<Check>& checks) {
  std::ostringstream os;
  os << title << "\n";
  for (const auto& c : checks) os << "  [" << (c.holds ? "ok" : "FAIL") << "] " << c.name << "\n";
  os << "all hold: " << yesno(all_hold) << "\n";
  return os.str();
}

}  // namespace

std::string render_dim(const DimensionReport& r, bool json) {
  if (json) {
    Json samples = Json::array();
    for (const auto& s : r.samples)
      samples.push_back(Json{{"u", rational_str(s.u_value)}, {"rank", s.rank}});
    return dump(Json{{"d", r.d},
                     {"n", r.n},
                     {"full_dim", r.full_dim},
                     {"dim_formula", r.dim_formula},
                     {"dim_rank", r.dim_rank},
                     {"ideal_rank", r.ideal_rank},
                     {"agree", r.agree},
                     {"rank_stable", r.rank_stable},
                     {"symbolic_anchor", r.symbolic_anchor},
                     {"seed", r.seed},
                     {"samples", std::move(samples)}});
  }
  std::ostringstream os;
  os << "quotient dimension for d = " << r.d << ", n = " << r.n << "\n";
  os << "  formula:     " << r.dim_formula << "\n";
  os << "  rank oracle: " << r.dim_rank << " (ideal rank " << r.ideal_rank << " inside "
     << r.full_dim << ")\n";
  os << "  agree: " << yesno(r.agree) << ", rank stable: " << yesno(r.rank_stable)
     << ", symbolic anchor: " << yesno(r.symbolic_anchor) << "\n";
  if (!r.samples.empty()) {
    os << "  samples (seed " << r.seed << "):";
    for (const auto& s : r.samples) os << " u=" << rational_str(s.u_value) << " rank " << s.rank;
    os << "\n";
  }
  return os.str();
}

std::string render_mul(const MulReport& r, bool json) {
  if (json)
    return dump(Json{{"d", r.d},
                     {"n", r.n},
                     {"lhs", r.lhs},
                     {"rhs", r.rhs},
                     {"product", element_json(r.product)},
                     {"rendered", r.product.str()}});
  std::ostringstream os;
  os << "(" << r.lhs << ") * (" << r.rhs << ") in d = " << r.d << ", n = " << r.n << "\n";
  os << "  = " << r.product.str() << "\n";
  return os.str();
}

std::string render_trace(const TraceReport& r, bool json) {
  if (json) {
    Json j{{"d", r.d}, {"n", r.n}, {"word", r.word}, {"trace", r.value.str()}};
    if (r.has_params) {
      j["params"] = params_json(r.params);
      j["substituted"] = z_poly_str(r.substituted);
    }
    return dump(j);
  }
  std::ostringstream os;
  os << "trace of " << r.word << " in d = " << r.d << ", n = " << r.n << "\n";
  os << "  = " << r.value.str() << "\n";
  if (r.has_params)
    os << "  at " << params_text(r.params) << ": " << z_poly_str(r.substituted) << "\n";
  return os.str();
}

std::string render_reduce(const ReduceReport& r, bool json) {
  if (json)
    return dump(Json{{"d", r.d},
                     {"n", r.n},
                     {"word", r.word},
                     {"input", element_json(r.input)},
                     {"reduced", element_json(r.reduced)},
                     {"rendered", r.reduced.str()}});
  std::ostringstream os;
  os << "image of " << r.word << " over the sigma basis, d = " << r.d << ", n = " << r.n << "\n";
  os << "  = " << r.reduced.str() << "\n";
  return os.str();
}

std::string render_zroots(const ZRootsResult& r, bool json) {
  if (json)
    return dump(Json{{"d", r.d},
                     {"quadratic", r.quadratic},
                     {"lead", rational_str(r.lead)},
                     {"lin", rational_str(r.lin)},
                     {"cst", rational_str(r.cst)},
                     {"rational_roots", r.roots.rational},
                     {"roots", Json::array({r.roots.first.str(), r.roots.second.str()})}});
  std::ostringstream os;
  os << "trace-factoring quadratic for d = " << r.d << ": " << r.quadratic << "\n";
  os << "  substituted: " << rational_str(r.lead) << "*z^2 + " << rational_str(r.lin) << "*z + "
     << rational_str(r.cst) << "\n";
  os << "  roots (" << (r.roots.rational ? "rational" : "irrational") << "): "
     << r.roots.first.str() << ", " << r.roots.second.str() << "\n";
  return os.str();
}

std::string render_scan(const ObstructionReport& r, bool json) {
  if (json) {
    Json entries = Json::array();
    for (const auto& e : r.entries)
      entries.push_back(Json{{"word", e.word},
                             {"relation_index", e.relation_index},
                             {"root", e.root_id},
                             {"value", e.value.str()},
                             {"is_zero", e.is_zero}});
    Json j{{"d", r.d},       {"n", r.n},
           {"u", rational_str(r.params.u)},
           {"x", params_json(r.params)["x"]},
           {"quadratic", r.quadratic},
           {"roots", r.roots},
           {"entries", std::move(entries)},
           {"nonzero_count", r.nonzero_count},
           {"witnesses", r.witnesses}};
    return dump(j);
  }
  std::ostringstream os;
  os << "obstruction scan over d = " << r.d << ", n = " << r.n << " at " << params_text(r.params)
     << "\n";
  os << "  quadratic: " << r.quadratic << "\n";
  os << "  roots:";
  for (const auto& root : r.roots) os << "  " << root;
  os << "\n";
  os << "  entries: " << r.entries.size() << ", nonzero: " << r.nonzero_count << "\n";
  if (r.witnesses.empty()) {
    os << "  every obstruction vanishes; the trace respects the relations here\n";
  } else {
    os << "  witnesses:";
    for (const auto& w : r.witnesses) os << "  " << w;
    os << "\n";
  }
  return os.str();
}

std::string render_presentation(const PresentationReport& r, bool json) {
  if (json) {
    std::vector<std::string> names;
    std::vector<bool> holds;
    split_checks(r.checks, names, holds);
    return dump(Json{{"d", r.d},
                     {"n", r.n},
                     {"triples", r.triples},
                     {"seed", r.seed},
                     {"all_hold", r.all_hold},
                     {"checks", checks_json(names, holds)}});
  }
  std::ostringstream os;
  os << "defining relations, d = " << r.d << ", n = " << r.n << " (" << r.triples
     << " random triples, seed " << r.seed << ")";
  return checks_text(os.str(), r.all_hold, r.checks);
}

std::string render_lrelations(const LPresentationReport& r, bool json) {
  if (json) {
    std::vector<std::string> names;
    std::vector<bool> holds;
    split_checks(r.checks, names, holds);
    return dump(Json{{"d", r.d},
                     {"n", r.n},
                     {"all_hold", r.all_hold},
                     {"checks", checks_json(names, holds)}});
  }
  std::ostringstream os;
  os << "non-invertible generator relations, d = " << r.d << ", n = " << r.n;
  return checks_text(os.str(), r.all_hold, r.checks);
}

std::string render_tr9tr10(const Tr9Tr10Report& r, bool json) {
  if (json)
    return dump(Json{{"d", r.d},
                     {"all_match", r.all_match},
                     {"zero_case_matches_quadratic", r.zero_case_matches_quadratic},
                     {"mismatches", r.mismatches}});
  std::ostringstream os;
  os << "closed-form trace identities, d = " << r.d << "\n";
  os << "  all " << r.d * r.d * r.d << " exponent triples match: " << yesno(r.all_match) << "\n";
  os << "  zero case reproduces the z-quadratic: " << yesno(r.zero_case_matches_quadratic)
     << "\n";
  for (const auto& m : r.mismatches) os << "  mismatch: " << m << "\n";
  return os.str();
}

std::string render_trace_rules(const TraceRulesReport& r, bool json) {
  if (json) {
    std::vector<std::string> names;
    std::vector<bool> holds;
    split_checks(r.checks, names, holds);
    return dump(Json{{"d", r.d},
                     {"n", r.n},
                     {"pairs", r.pairs},
                     {"seed", r.seed},
                     {"all_hold", r.all_hold},
                     {"checks", checks_json(names, holds)}});
  }
  std::ostringstream os;
  os << "trace rules, d = " << r.d << ", n = " << r.n << " (" << r.pairs
     << " random pairs, seed " << r.seed << ")";
  return checks_text(os.str(), r.all_hold, r.checks);
}

std::string schemas_text() {
  return R"schema(JSON report schemas (all fields always present unless marked optional)

dim:
  {d, n, full_dim, dim_formula, dim_rank, ideal_rank, agree, rank_stable,
   symbolic_anchor, seed, samples: [{u: "p/q", rank}]}
  With --method formula only {d, n, dim_formula} is emitted.

mul:
  {d, n, lhs, rhs, product: <element>, rendered}
  <element> = {d, n, terms: [{framing: [int], word: [int], coeff: "<scalar>"}]}
  The same element object is accepted anywhere a word is read from JSON.

trace:
  {d, n, word, trace, params?: {u, x: {x1: "p/q", ...}}, substituted?: "<poly in z>"}

ytl-reduce:
  {d, n, word, input: <element>, reduced: <element>, rendered}

zroots:
  {d, quadratic, lead, lin, cst, rational_roots, roots: [string, string]}

scan:
  {d, n, u, x, quadratic, roots: [string], entries:
   [{word, relation_index, root, value, is_zero}], nonzero_count, witnesses: [word]}

verify --suite presentation:
  {d, n, triples, seed, all_hold, checks: [{name, holds}]}
verify --suite l-relations:
  {d, n, all_hold, checks: [{name, holds}]}
verify --suite tr9tr10:
  {d, all_match, zero_case_matches_quadratic, mismatches: [string]}
verify --suite markov:
  {d, n, pairs, seed, all_hold, checks: [{name, holds}]}

Scalar strings follow the coefficient grammar, e.g. "2*u^-1 - 1" or
"(u + 1)/(u^2 + 1)"; trace values are polynomials in z and x1..x_{d-1}.
)schema";
}

}  // namespace yotl
