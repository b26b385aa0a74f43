#pragma once

#include "qosp/cgc.hpp"
#include "qosp/covspace.hpp"
#include "qosp/group_algebra.hpp"

#include "json.hpp"

namespace qosp {

using Json = nlohmann::json;

// Half-integers travel as strings "3/2", "-1/2", "1".
std::string half_to_string(int doubled);
int half_from_string(const std::string& s);

Json to_json(const RadicalScalar& v);
RadicalScalar radical_from_json(const Json& j);
Json to_json(const RepLabel& l);
RepLabel label_from_json(const Json& j);

Json to_json(const CGTable& t);
CGTable cgtable_from_json(const Json& j);

Json to_json(const NCElement& u);
NCElement ncelement_from_json(const Json& j);

Json to_json(const ZetaPoly& p);

Json to_json(const Alphabet& a, const FreeElement& u);
Json to_json(const RewriteSystem& sys);
RewriteSystem rewrite_system_from_json(const Json& j);

}  // namespace qosp
