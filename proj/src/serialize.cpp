#include "cwe/serialize.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace cwe {

using nlohmann::json;

namespace {

std::uint64_t weight_of(const Composition& comp) {
  std::uint64_t n = 0;
  for (auto v : comp) n += v;
  return n - comp[0];
}

std::vector<std::pair<Composition, std::uint64_t>> by_weight(const CompleteWeightEnumerator& cwe) {
  std::vector<std::pair<Composition, std::uint64_t>> rows(cwe.counts.begin(), cwe.counts.end());
  std::stable_sort(rows.begin(), rows.end(),
                   [](const auto& x, const auto& y) { return weight_of(x.first) < weight_of(y.first); });
  return rows;
}

}  // namespace

json field_json(const FieldCtx& ctx) {
  std::vector<std::uint32_t> modulus(ctx.modulus().begin(), ctx.modulus().end());
  return json{{"p", ctx.p()},
              {"e", ctx.e()},
              {"q", ctx.q()},
              {"modulus", modulus},
              {"modulus_text", ctx.modulus_string()},
              {"theta", element_json(ctx, ctx.theta())},
              {"theta_order", ctx.q() - 1}};
}

json element_json(const FieldCtx& ctx, FqElem x) {
  json j{{"coeffs", ctx.coeffs(x)}};
  const auto l = ctx.log(x);
  j["theta_power"] = l ? json(*l) : json(nullptr);
  return j;
}

json params_json(const CodeParams& params) {
  return json{{"p", params.p()}, {"e", params.e()}, {"q", params.q()},
              {"k", params.k()}, {"d", params.d()}, {"m", params.m()},
              {"s", params.s()}, {"a", element_json(params.ctx(), params.a())}, {"c", params.c().value}};
}

json case_json(const CaseClass& cls) {
  return json{{"case", cls.number()},
              {"condition_holds", cls.condition_holds},
              {"c_zero", cls.c_zero},
              {"degenerate", to_string(cls.degenerate)},
              {"source", cls.source()}};
}

json we_json(const WeightEnumerator& we) {
  json arr = json::array();
  for (const auto& [w, n] : we.counts) arr.push_back(json::array({w, n}));
  return arr;
}

json cwe_json(const CompleteWeightEnumerator& cwe) {
  json arr = json::array();
  for (const auto& [comp, n] : by_weight(cwe)) arr.push_back(json{{"composition", comp}, {"count", n}});
  return arr;
}

std::string cwe_to_string(const CompleteWeightEnumerator& cwe) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [comp, n] : by_weight(cwe)) {
    if (!first) os << " + ";
    first = false;
    bool wrote = false;
    if (n != 1) {
      os << n;
      wrote = true;
    }
    for (std::size_t j = 0; j < comp.size(); ++j) {
      if (comp[j] == 0) continue;
      if (wrote) os << ' ';
      os << 'w' << j << '^' << comp[j];
      wrote = true;
    }
    if (!wrote) os << '1';
  }
  return os.str();
}

json summary_json(const CodeSummary& s) {
  return json{{"length", s.length},
              {"dimension", s.dimension},
              {"min_distance", s.min_distance},
              {"multiplicity", s.multiplicity},
              {"we", we_json(s.we)},
              {"we_text", s.we.to_string()},
              {"cwe", cwe_json(s.cwe)}};
}

json prediction_json(const Prediction& pr) {
  json terms = json::array();
  for (const CweTerm& t : pr.terms) {
    terms.push_back(json{{"label", t.label}, {"composition", t.composition}, {"frequency", t.frequency}});
  }
  return json{{"case", case_json(pr.cls)},
              {"length", pr.length},
              {"dimension", pr.dimension},
              {"min_distance", pr.we.min_nonzero()},
              {"multiplicity", pr.multiplicity},
              {"we", we_json(pr.we)},
              {"we_text", pr.we.to_string()},
              {"cwe", cwe_json(pr.cwe)},
              {"cwe_terms", terms}};
}

json check_json(const CheckResult& c, bool with_timing) {
  json j{{"name", c.name},     {"locus", c.locus},   {"status", to_string(c.status)},
         {"expected", c.expected}, {"actual", c.actual}, {"detail", c.detail}};
  if (with_timing) j["wall_us"] = c.wall_us;
  return j;
}

json report_json(const VerifyReport& r, bool with_timing) {
  json checks = json::array();
  for (const CheckResult& c : r.checks) checks.push_back(check_json(c, with_timing));
  return json{{"params", r.params}, {"checks", checks}, {"passed", r.passed()}};
}

json sweep_json(const SweepResult& res, bool with_timing) {
  json points = json::array();
  for (const SweepEntry& e : res.entries) {
    json j{{"spec", json{{"p", e.spec.p}, {"e", e.spec.e}, {"k", e.spec.k}, {"a", e.spec.a}, {"c", e.spec.c}}}};
    if (e.report) j["report"] = report_json(*e.report, with_timing);
    if (!e.diagnostic.empty()) j["diagnostic"] = e.diagnostic;
    points.push_back(std::move(j));
  }
  return json{{"points", points},
              {"summary", res.summary},
              {"invalid_points", res.invalid_points},
              {"all_pass", res.all_pass()}};
}

json cwe_diff(const std::vector<CweTerm>& predicted, const CompleteWeightEnumerator& enumerated) {
  std::map<Composition, std::uint64_t> pred;
  std::map<Composition, std::vector<std::string>> labels;
  for (const CweTerm& t : predicted) {
    pred[t.composition] += t.frequency;
    labels[t.composition].push_back(t.label);
  }
  std::set<Composition> keys;
  for (const auto& [k, v] : pred) keys.insert(k);
  for (const auto& [k, v] : enumerated.counts) keys.insert(k);
  json diff = json::array();
  for (const Composition& k : keys) {
    const std::uint64_t a = pred.count(k) ? pred.at(k) : 0;
    const std::uint64_t b = enumerated.counts.count(k) ? enumerated.counts.at(k) : 0;
    if (a == b) continue;
    diff.push_back(json{{"composition", k}, {"predicted", a}, {"enumerated", b},
                        {"terms", labels.count(k) ? json(labels.at(k)) : json::array()}});
  }
  return diff;
}

}  // namespace cwe
