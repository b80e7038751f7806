#pragma once

#include <json.hpp>

#include "gaf/backbone.hpp"
#include "gaf/bounds.hpp"
#include "gaf/constraints.hpp"
#include "gaf/energysim.hpp"
#include "gaf/partition.hpp"

namespace gaf {

nlohmann::json partition_to_json(const Partition& partition);
Partition partition_from_json(const nlohmann::json& j);

nlohmann::json req_report_to_json(const ReqReport& report);
nlohmann::json backbone_to_json(const BackboneGraph& graph);
nlohmann::json sim_result_to_json(const SimResult& result);
nlohmann::json chain_verification_to_json(const ChainVerification& report);

}  // namespace gaf
