#pragma once

#include <string>
#include <vector>

#include "renflow/birkhoff.hpp"
#include "renflow/double_loop.hpp"

namespace renflow {

// JSON schemas (all output is deterministic: sorted keys, canonical decimal
// strings for rationals):
//
//   series:    {"min_exp":int,"trunc":int,"terms":[{"exp":int,"coeff":[
//               {"pi2":int,"a":int,"s":int,"t":int,"num":"dec","den":"dec"}]}]}
//   character: {"metadata":{"max_degree":int,"min_trunc":int,"symbols":[...]},
//               "trees":[{"tree":"[...]","series":{...}}]}
//   locality:  {"is_local":bool,"checked_degree":int,
//               "witnesses":[{"forest":str,"coeff":{series}}]}
//
// A trunc value of 2^30 (LaurentSeries::kExactTrunc) marks an exact series.

std::string series_to_json(const LaurentSeries& x, int indent = -1);
LaurentSeries series_from_json(const std::string& text);

// Dumps tree values up to max_degree.
std::string character_to_json(const Character& phi, int max_degree, int indent = -1);
// Reads a character dump; evaluation beyond the dumped trees throws Config.
Character character_from_json(const std::string& text);

std::string forests_to_json(const std::vector<Forest>& forests, int indent = -1);

std::string locality_to_json(const LocalityReport& report, int indent = -1);

std::string structure_constants_to_json(int cutoff, int indent = -1);

// {"coproduct":..., "reduced":..., "antipode":...} for one forest, keyed by
// bracket strings.
std::string hopf_dump_to_json(const Forest& f, int indent = -1);

}  // namespace renflow
