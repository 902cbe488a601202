#include <doctest.h>

#include "cwe/serialize.hpp"

using namespace cwe;
using nlohmann::json;

TEST_CASE("enumerator text and JSON forms") {
  const FieldCtx ctx = build_field(3, 6);
  const CodeSummary s = build_code(CodeParams::make(ctx, 1, ctx.theta_pow(2), {0}));
  CHECK(cwe_to_string(s.cwe) == "w0^296 + 32 w0^134 w1^81 w2^81 + 648 w0^98 w1^99 w2^99 + 48 w0^80 w1^108 w2^108");
  CHECK(we_json(s.we).dump() == "[[0,1],[162,32],[198,648],[216,48]]");
  const json j = summary_json(s);
  CHECK(json::parse(j.dump()).dump() == j.dump());
  CHECK(j["cwe"][0]["composition"] == json::array({296, 0, 0}));
}

TEST_CASE("cwe_diff reports only differing compositions") {
  CompleteWeightEnumerator e;
  e.counts = {{{4, 0, 0}, 1}, {{2, 1, 1}, 8}};
  std::vector<CweTerm> pred{{"A", {4, 0, 0}, 1}, {"B", {2, 1, 1}, 6}, {"C", {0, 2, 2}, 2}};
  const json d = cwe_diff(pred, e);
  REQUIRE(d.size() == 2);
  CHECK(d[0]["composition"] == json::array({0, 2, 2}));
  CHECK(d[0]["enumerated"] == 0);
  CHECK(d[1]["terms"] == json::array({"B"}));
  CHECK(d[1]["predicted"] == 6);
}
