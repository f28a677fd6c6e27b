#pragma once

#include <json.hpp>

#include "msod/euler.hpp"
#include "msod/lattice.hpp"
#include "msod/sod.hpp"
#include "msod/verify.hpp"

namespace msod::io {

using nlohmann::json;

json to_json(const ActionSpec& spec);
ActionSpec spec_from_json(const json& doc);

json to_json(const InertiaComponent& c);
InertiaComponent component_from_json(const json& doc, int rank);

/// Report document: spec, components, order, total_rank, grouping, flags.
json to_json(const SodReport& report);
/// Inverse of to_json(SodReport). Throws InputError.
SodReport report_from_json(const json& doc);

json to_json(const MutationPlan& plan);

json to_json(const ExceptionalSequence& seq);
ExceptionalSequence sequence_from_json(const json& doc);

/// Mutation script: {"moves": [{"block": 4, "direction": "left"}, ...]} or a
/// bare array of moves.
std::vector<Move> moves_from_json(const json& doc);
json to_json(const std::vector<Move>& moves);
json to_json(const std::vector<MoveRecord>& records);

json to_json(const GramResult& gram);
json to_json(const CheckResult& check);

}  // namespace msod::io
