#pragma once

// JSON documents shared by the verifier and the command-line tool. Objects use
// nlohmann::json's sorted keys, so dump() output is canonical; enumerators are
// arrays in ascending weight order.

#include <json.hpp>

#include "cwe/closedform.hpp"
#include "cwe/codes.hpp"
#include "cwe/galois.hpp"
#include "cwe/verify.hpp"

namespace cwe {

nlohmann::json field_json(const FieldCtx& ctx);
nlohmann::json element_json(const FieldCtx& ctx, FqElem x);
nlohmann::json params_json(const CodeParams& params);
nlohmann::json case_json(const CaseClass& cls);

/// [[weight, count], ...]
nlohmann::json we_json(const WeightEnumerator& we);
/// [{"composition": [...], "count": n}, ...] ordered by weight, then composition.
nlohmann::json cwe_json(const CompleteWeightEnumerator& cwe);
/// Text form, e.g. "w0^296 + 32 w0^134 w1^81 w2^81".
std::string cwe_to_string(const CompleteWeightEnumerator& cwe);

nlohmann::json summary_json(const CodeSummary& summary);
nlohmann::json prediction_json(const Prediction& prediction);
nlohmann::json check_json(const CheckResult& check, bool with_timing);
nlohmann::json report_json(const VerifyReport& report, bool with_timing);
nlohmann::json sweep_json(const SweepResult& result, bool with_timing);

/// Compositions whose counts differ, each tagged with the predicting term labels.
nlohmann::json cwe_diff(const std::vector<CweTerm>& predicted, const CompleteWeightEnumerator& enumerated);

}  // namespace cwe
