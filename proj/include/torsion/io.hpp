#pragma once

#include "torsion/errors.hpp"
#include "torsion/identities.hpp"
#include "torsion/surgery.hpp"

#include <json.hpp>

#include <string>

namespace torsion {

using Json = nlohmann::ordered_json;

// {"link": {"pd": ..} | {"braid": ..} | {"conway": ..} | "<literal>", "framings": [..]}.
// Framings may be omitted when only Alexander data is wanted.
SurgeryInput parse_input(const std::string& text);
SurgeryInput read_input_file(const std::string& path);

// {"vars": m, "terms": [{"e": [..], "c": "int"}]}, terms in lex order.
Json polynomial_to_json(const LaurentPolynomial& p);
LaurentPolynomial polynomial_from_json(const Json& j);

Json element_to_json(const GroupElement& h);
Json group_to_json(const AbelianGroup& g);
Json group_ring_to_json(const GroupRingElement& x);

Json compute_report(const TorsionResult& r);
Json verify_report(const Verification& v);
Json catalog_report(const CatalogEntry& e, const CatalogCheck& c);
// Delta and nabla of the link, plus the sublink table when framings allow.
Json alexander_report(const SurgeryInput& input);

// {"error": {"kind": .., "message": .., "exit_code": ..}}
Json error_json(ErrorKind kind, const std::string& message);
int exit_code(ErrorKind kind);

}  // namespace torsion
