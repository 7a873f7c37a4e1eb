#ifndef MIXPORT_SERIALIZE_HPP
#define MIXPORT_SERIALIZE_HPP

#include <json.hpp>

#include "mixport/block_props.hpp"
#include "mixport/teleport.hpp"
#include "mixport/verify.hpp"

namespace mixport {
namespace serialize {

using json = nlohmann::json;

// Matrices serialize as nested arrays of [re, im] pairs, row-major.
json matrix_to_json(const ComplexMatrix& m);

json outcome_to_json(const teleport::TeleportOutcome& outcome);
json run_to_json(const teleport::TeleportRun& run);

json property_report_to_json(const blockprops::PropertyReport& report);
json suite_result_to_json(const verify::SuiteResult& suite);
json verify_report_to_json(const verify::VerifyReport& report);

} // namespace serialize
} // namespace mixport

#endif
