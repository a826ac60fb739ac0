#pragma once

#include <json.hpp>

#include "bbwlab/certificate.hpp"
#include "bbwlab/ktheory.hpp"
#include "bbwlab/ledger.hpp"
#include "bbwlab/lefschetz.hpp"

namespace bbwlab {

// Certificate payloads carry schema "bbwlab/1" at the top level and embed the
// alpha sequences and summand lists needed for third-party re-checking.
inline constexpr const char* kSchema = "bbwlab/1";

nlohmann::json to_json(const Weight& w);
nlohmann::json to_json(const WeightMultiset& ms);
nlohmann::json to_json(const CohomologyOutcome& o);
nlohmann::json to_json(const Certificate& c);
nlohmann::json to_json(const GridCheck& g);
nlohmann::json to_json(const GramMatrix& g);
nlohmann::json to_json(const RankReport& r);
nlohmann::json to_json(const DeductionResult& r);

nlohmann::json with_schema(nlohmann::json payload);

}  // namespace bbwlab
