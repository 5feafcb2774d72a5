#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "tristar/model.hpp"

namespace tristar {

// %.15g, locale-free; used for every number the tools print.
std::string fmt_double(double x);

// Deterministic two-space-indent serializer. nlohmann's object backing is
// std::map, so keys come out sorted; numbers go through fmt_double so the
// same report is byte-identical across runs and platforms.
std::string fixed_dump(const nlohmann::json& j);

nlohmann::json matrix_json(const Mat& m);
nlohmann::json state_json(const State& s);

State state_from_json(const nlohmann::json& j);
std::vector<State> states_from_json(const nlohmann::json& j);

std::string spectrum_csv(const std::vector<LevelEntry>& levels);

}  // namespace tristar
