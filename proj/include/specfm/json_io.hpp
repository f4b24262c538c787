#pragma once

#include <string>

#include <json.hpp>

#include "specfm/spectral.hpp"

namespace specfm {

using Json = nlohmann::ordered_json;

// file formats ---------------------------------------------------------------
// family: {"a2": "...", "a4": "...", "a6": "..."}            (polynomials in t)
// cover:  {"gens": ["..."], "vars": ["x","y","t"]?,
//          "infinity_components": [{"type": "section"}]?}
// ideal:  {"vars": ["x","y"], "gens": ["..."]}

WeierstrassFamily family_from_json(const Json& j);
Json family_to_json(const WeierstrassFamily& fam);

SpectralCover cover_from_json(const WeierstrassFamily& fam, const Json& j);
Json cover_to_json(const SpectralCover& cover);

Ideal ideal_from_json(const Json& j);
Json ideal_to_json(const Ideal& ideal);

Json torsion_to_json(const TorsionModuleDescriptor& d);
Json sheaf_to_json(const SheafDescriptor& s);
Json local_type_to_json(const LocalModuleType& t);
Json fibre_analysis_to_json(const FibreAnalysis& fa);
Json report_to_json(const DegenerationReport& report);

Json load_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j);

}  // namespace specfm
