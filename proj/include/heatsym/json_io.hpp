#pragma once

#include <json.hpp>

#include "heatsym/burgers.hpp"
#include "heatsym/gensym.hpp"
#include "heatsym/pointgroup.hpp"
#include "heatsym/subalg.hpp"

namespace heatsym {

using Json = nlohmann::json;

// rationals travel as "p/q" strings; ScalarExt as {"r","s","q"} (plain string
// when rational); object keys are emitted in sorted order, so output is
// byte-stable for identical input
Json rat_to_json(const Rat& r);
Rat rat_from_json(const Json& j);

Json scalar_to_json(const ScalarExt& s);
ScalarExt scalar_from_json(const Json& j);

Json ess_to_json(const EssQ& e);
EssQ ess_from_json(const Json& j);

Json full_to_json(const FullElement& f);
FullElement full_from_json(const Json& j);

Json alg_to_json(const AlgElement& x);
AlgElement alg_from_json(const Json& j);

Json gensym_to_json(const GenSymOp& p);
GenSymOp gensym_from_json(const Json& j);

Json burgers_to_json(const BurgQ& b);
BurgQ burgers_from_json(const Json& j);

Json canonical_to_json(const CanonicalForm& c);

Json solution_to_json(const SolutionSum& s);
SolutionSum solution_from_json(const Json& j);

}  // namespace heatsym
