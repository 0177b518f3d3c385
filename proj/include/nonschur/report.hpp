#pragma once

#include "nonschur/chow.hpp"
#include "nonschur/gluing.hpp"
#include "nonschur/pipeline.hpp"
#include "nonschur/symfunc.hpp"

#include "json.hpp"

#include <string>

namespace nonschur {

inline constexpr int kSchemaVersion = 1;

using Json = nlohmann::ordered_json;

// Integers that do not fit in 64 bits are emitted as decimal strings.
Json integer_json(const Integer& x);
Json terms_json(const SymExpr& e);
Json terms_json(const SchubertClass& c);
Json class_json(const SchubertClass& c);  // terms plus box

Json report_json(const AnalysisReport& rep);
std::string report_text(const AnalysisReport& rep);

Json decomposition_json(const KroneckerDecomposition& kd);
std::string decomposition_text(const KroneckerDecomposition& kd);

Json gluing_json(const Split& split, const GluingReport& rep);
std::string gluing_text(const Split& split, const GluingReport& rep);

}  // namespace nonschur
