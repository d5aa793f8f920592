#pragma once

#include "aialo/lp_model.hpp"

#include <iosfwd>
#include <string>

namespace aialo {

// Instance JSON:
//   {"n":int,"m":int,"c":[...],"A":[[...]],"b":[...],"R":float,
//    "unknown":"b"|"c","sigma":float|[...],"known_rows":[int,...]}
// "known_rows" is optional. Doubles are written in shortest round-trip form.
std::string instance_to_json(const LPInstance& inst);
LPInstance instance_from_json(const std::string& text);

LPInstance load_instance(const std::string& path);
void save_instance(const LPInstance& inst, const std::string& path);

}  // namespace aialo
