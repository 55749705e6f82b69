#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "laz/bounds.hpp"
#include "laz/construct.hpp"
#include "laz/hgen.hpp"
#include "laz/verify.hpp"

namespace laz {

using nlohmann::json;

/// Rounds to `digits` significant decimal digits so report output is stable.
double round_sig(double x, int digits = 9);

/// {"length", "size", "phase_mode": "rational"|"float", "members": [[[num, den] | angle, ...], ...]}
json to_json(const SequenceSet& set);
SequenceSet sequence_set_from_json(const json& j);

json to_json(const LazParams& p);
LazParams laz_params_from_json(const json& j);

json to_json(const BoundReport& r);
json to_json(const HReport& r);
json to_json(const ThetaReport& r);
json to_json(const DistinctReport& r);
json to_json(const LazCertificate& c);

json read_json_file(const std::filesystem::path& path);
/// Pretty-printed, trailing newline.
void write_json_file(const std::filesystem::path& path, const json& j);

SequenceSet read_sequence_set(const std::filesystem::path& path);
void write_sequence_set(const std::filesystem::path& path, const SequenceSet& set);

/// set.json -> set.meta.json
std::filesystem::path meta_path_for(const std::filesystem::path& set_path);

}  // namespace laz
