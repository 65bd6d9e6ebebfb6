#pragma once

#include <string>

#include <json.hpp>

#include "plh/map.hpp"

namespace plh {

using Json = nlohmann::json;

inline constexpr int kFormatVersion = 1;

Json to_json(const Rat& r);
Rat rat_from_json(const Json& j);
Json to_json(const IntervalQ& j);
IntervalQ interval_from_json(const Json& j);
Json to_json(const ETPL& f);
ETPL etpl_from_json(const Json& j);
Json to_json(const Map& f);
Map map_from_json(const Json& j);

/// {"format_version", "kind", "payload"}; kind is map, word, presentation,
/// bundle or certificate.
Json make_artifact(const std::string& kind, Json payload);
/// Checks the version and kind, returns the payload.
Json artifact_payload(const Json& artifact, const std::string& kind);

Json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j);

}  // namespace plh
