#pragma once

#include "golden.hpp"
#include "moduli.hpp"
#include "polyid.hpp"
#include "solver.hpp"

#include <json.hpp>

namespace modrep {

using ojson = nlohmann::ordered_json;

ojson cyc_json(const Cyc& v);
ojson table_json(const CharacterTable& t);
std::string table_tsv(const CharacterTable& t);
ojson decomposition_json(const Decomposition& d);
ojson picard_json(const PicardStructure& ps);
ojson modular_json(const ModularData& md);
ojson census_json(const ModuliCensus& c);
ojson exponents_json(i64 p);
ojson su3_json(i64 p);
ojson solve_json(const ClassSpec& spec, const SolveReport& rep, i64 p, i64 k, int rank);
ojson identities_json(const std::vector<IdentityReport>& reps);
ojson golden_json(const std::vector<GoldenDiff>& diffs);
ojson series_json(const PowerSeries& s);

} // namespace modrep
