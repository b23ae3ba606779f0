#pragma once

#include "reducts/acceptance.hpp"
#include "reducts/anf.hpp"
#include "reducts/classifier.hpp"
#include "reducts/finite_models.hpp"
#include "reducts/identities.hpp"
#include "reducts/lattice.hpp"

#include <json.hpp>

namespace reducts::cli {

using Json = nlohmann::ordered_json;

Json to_json(const Anf& f);
Json to_json(ReductNode node);
Json to_json(const Trace& trace);
Json to_json(const IdentityCheck& check);
Json to_json(const CriterionResult& result);
Json to_json(const Permutation& p);
std::string verdict_key(Verdict v);
Json lattice_json();

} // namespace reducts::cli
