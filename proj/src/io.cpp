#include "torsion/io.hpp"

#include <algorithm>
#include <climits>
#include <fstream>
#include <sstream>

namespace torsion {

namespace {

[[noreturn]] void schema_error(const std::string& what) { throw Error(ErrorKind::Syntax, what); }

long long as_integer(const Json& j, const std::string& what) {
  if (j.is_number_integer()) return j.get<long long>();
  if (j.is_string()) return to_int64(parse_integer(j.get<std::string>()));
  schema_error(what + " must be an integer");
}

std::vector<int> int_list(const Json& j, const std::string& what) {
  if (!j.is_array()) schema_error(what + " must be an array of integers");
  std::vector<int> out;
  for (const auto& x : j) {
    const long long v = as_integer(x, what);
    if (v < INT_MIN || v > INT_MAX) schema_error(what + " entry out of range");
    out.push_back(static_cast<int>(v));
  }
  return out;
}

std::vector<std::array<int, 4>> pd_tuples(const Json& j) {
  if (!j.is_array()) schema_error("link.pd must be an array of 4-tuples");
  std::vector<std::array<int, 4>> tuples;
  for (const auto& x : j) {
    const std::vector<int> t = int_list(x, "PD crossing");
    if (t.size() != 4) schema_error("a PD crossing needs exactly 4 arc labels");
    tuples.push_back({t[0], t[1], t[2], t[3]});
  }
  return tuples;
}

// Optional "components" maps arc labels (object keys) to component indices.
PDCode pd_from_json(const Json& link) {
  std::map<int, int> component_of;
  if (link.contains("components")) {
    const Json& comps = link.at("components");
    if (!comps.is_object()) schema_error("link.components must map arc labels to component indices");
    for (const auto& [label, comp] : comps.items()) {
      component_of[static_cast<int>(to_int64(parse_integer(label)))] =
          static_cast<int>(as_integer(comp, "component index"));
    }
  }
  return PDCode::from_tuples(pd_tuples(link.at("pd")), component_of);
}

PDCode braid_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("w")) {
    schema_error("link.braid needs fields n and w");
  }
  BraidWord b;
  b.strands = static_cast<int>(as_integer(j.at("n"), "braid.n"));
  b.word = int_list(j.at("w"), "braid.w");
  if (j.contains("components")) b.components = int_list(j.at("components"), "braid.components");
  return PDCode::from_braid(b);
}

ConwayData conway_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("components") || !j.contains("table")) {
    schema_error("link.conway needs fields components and table");
  }
  ConwayData cd;
  cd.components = int_list(j.at("components"), "conway.components");
  if (!std::is_sorted(cd.components.begin(), cd.components.end()) ||
      std::adjacent_find(cd.components.begin(), cd.components.end()) != cd.components.end()) {
    schema_error("conway.components must be strictly increasing");
  }
  if (!j.at("table").is_array()) schema_error("conway.table must be an array");
  for (const auto& entry : j.at("table")) {
    if (!entry.is_object() || !entry.contains("subset") || !entry.contains("nabla")) {
      schema_error("conway.table entries need subset and nabla");
    }
    std::vector<int> subset = int_list(entry.at("subset"), "conway subset");
    std::sort(subset.begin(), subset.end());
    ConwayEntry e{polynomial_from_json(entry.at("nabla")), false};
    if (e.nabla.num_vars() != subset.size()) {
      schema_error("nabla for a subset of size " + std::to_string(subset.size()) + " has " +
                   std::to_string(e.nabla.num_vars()) + " variables");
    }
    if (entry.contains("sign_pinned")) {
      if (!entry.at("sign_pinned").is_boolean()) schema_error("sign_pinned must be a boolean");
      e.sign_pinned = entry.at("sign_pinned").get<bool>();
    }
    if (!cd.table.emplace(subset, std::move(e)).second) schema_error("duplicate conway subset");
  }
  return cd;
}

Json matrix_to_json(const IntMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

Json rational_list(const std::vector<Rational>& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

}  // namespace

SurgeryInput parse_input(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw SyntaxError(e.byte == 0 ? 0 : e.byte - 1, "invalid JSON");
  }
  if (!j.is_object() || !j.contains("link")) schema_error("input must be an object with a link field");
  const Json& link = j.at("link");

  SurgeryInput input;
  if (link.is_string()) {
    input.link = parse_link(link.get<std::string>());
  } else if (link.is_object() && link.contains("pd")) {
    input.link = pd_from_json(link);
  } else if (link.is_object() && link.contains("braid")) {
    input.link = braid_from_json(link.at("braid"));
  } else if (link.is_object() && link.contains("conway")) {
    input.link = conway_from_json(link.at("conway"));
  } else {
    schema_error("link must be a literal string or contain pd, braid or conway");
  }

  if (j.contains("framings")) {
    if (!j.at("framings").is_array()) schema_error("framings must be an array");
    for (const auto& f : j.at("framings")) input.framings.push_back(as_integer(f, "framing"));
  }
  return input;
}

SurgeryInput read_input_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Io, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_input(ss.str());
}

Json polynomial_to_json(const LaurentPolynomial& p) {
  Json terms = Json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back({{"e", e}, {"c", c.str()}});
  return {{"vars", p.num_vars()}, {"terms", std::move(terms)}};
}

LaurentPolynomial polynomial_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("vars") || !j.contains("terms")) {
    schema_error("a polynomial needs fields vars and terms");
  }
  const long long vars = as_integer(j.at("vars"), "vars");
  if (vars < 0 || vars > 64) schema_error("vars out of range");
  LaurentPolynomial p(static_cast<std::size_t>(vars));
  if (!j.at("terms").is_array()) schema_error("terms must be an array");
  for (const auto& t : j.at("terms")) {
    if (!t.is_object() || !t.contains("e") || !t.contains("c")) schema_error("a term needs e and c");
    const std::vector<int> e = int_list(t.at("e"), "exponent");
    if (e.size() != p.num_vars()) schema_error("exponent length does not match vars");
    const Json& c = t.at("c");
    Integer coeff;
    if (c.is_string()) {
      coeff = parse_integer(c.get<std::string>());
    } else if (c.is_number_integer()) {
      coeff = c.get<long long>();
    } else {
      schema_error("coefficient must be an integer string");
    }
    p.add_term(e, coeff);
  }
  return p;
}

Json element_to_json(const GroupElement& h) { return {{"free", h.free}, {"tors", h.tors}}; }

Json group_to_json(const AbelianGroup& g) {
  return {{"rank", g.rank()}, {"torsion", g.invariant_factors()}};
}

Json group_ring_to_json(const GroupRingElement& x) {
  Json terms = Json::array();
  for (const auto& [h, c] : x.terms()) {
    terms.push_back({{"free", h.free}, {"tors", h.tors}, {"c", to_string(c)}});
  }
  return terms;
}

namespace {

const char* sign_source_name(SignSource s) {
  switch (s) {
    case SignSource::Unpinned: return "unpinned";
    case SignSource::ZeroTorsion: return "zero_torsion";
    case SignSource::PinnedData: return "conway_data";
    case SignSource::CubeSquare: return "cup_square_positivity";
    case SignSource::User: return "user";
  }
  return "unpinned";
}

}  // namespace

Json compute_report(const TorsionResult& r) {
  Json support = Json::array();
  for (const auto& [k, v] : r.tmap) support.push_back({{"charge", k}, {"T", v.str()}});
  return {
      {"H1", group_to_json(*r.group)},
      {"sign_pinned", r.sign_pinned},
      {"sign_source", sign_source_name(r.sign_source)},
      {"support", std::move(support)},
      {"tau", {{"reference_charge", r.reference}, {"terms", group_ring_to_json(r.tau)}}},
  };
}

Json verify_report(const Verification& v) {
  Json duality = {{"ok", v.duality_ok}, {"h0", v.h0 ? element_to_json(*v.h0) : Json(nullptr)}};
  if (v.zero_torsion) duality["note"] = "ZeroTorsion";
  Json moments = Json::array();
  for (const auto& m : v.moments) {
    moments.push_back({{"m", m.m}, {"value", to_string(m.value)}, {"expected_zero", m.expected_zero}});
  }
  Json bounds = Json::array();
  for (const auto& b : v.bounds) bounds.push_back({{"s", rational_list(b.s)}, {"bound", to_string(b.bound)}});
  return {
      {"duality", std::move(duality)},
      {"moments", std::move(moments)},
      {"lescop", to_string(v.lescop)},
      {"cup_square", v.cup_square ? Json(to_string(*v.cup_square)) : Json(nullptr)},
      {"thurston_bounds", std::move(bounds)},
      {"sign_pinned", v.sign_pinned},
      {"failures", v.failures},
  };
}

Json catalog_report(const CatalogEntry& e, const CatalogCheck& c) {
  return {
      {"genus", e.genus},
      {"euler", e.euler},
      {"H1", group_to_json(*e.group)},
      {"fiber", element_to_json(e.fiber)},
      {"tau", group_ring_to_json(e.tau)},
      {"duality",
       {{"ok", c.duality_ok},
        {"h0", c.h0 ? element_to_json(*c.h0) : Json(nullptr)},
        {"expected_h0", element_to_json(e.expected_h0)}}},
      {"thurston_bound",
       {{"s", rational_list(c.s)},
        {"bound", to_string(c.bound)},
        {"expected", to_string(c.expected_bound)},
        {"fiber_pairing", to_string(c.fiber_pairing)}}},
      {"norm_note",
       "for g >= 2 the bound (2g-2)|<t,s>| exceeds the fiber pairing |<t,s>|; recorded, not asserted"},
      {"failures", c.failures},
  };
}

Json alexander_report(const SurgeryInput& input) {
  Json out;
  if (const auto* d = std::get_if<PDCode>(&input.link)) {
    const std::size_t m = d->num_components();
    const LaurentPolynomial delta = alexander_multi(*d);
    out["components"] = d->components();
    out["crossings"] = d->crossings().size();
    std::vector<long long> framings = input.framings;
    if (framings.empty()) framings.assign(m, 0);
    out["linking_matrix"] = matrix_to_json(linking_matrix(*d, framings));
    out["delta"] = polynomial_to_json(delta);
    if (m >= 2) {
      const ConwayNormalization n = conway_normalize(delta, static_cast<int>(m));
      out["nabla"] = polynomial_to_json(n.nabla);
      out["sign_pinned"] = n.sign_pinned;
    } else {
      out["nabla"] = nullptr;
      out["sign_pinned"] = false;
    }
    if (input.framings.empty()) return out;
  } else {
    out["components"] = std::get<ConwayData>(input.link).components;
  }
  Json table = Json::array();
  for (const auto& [subset, entry] : conway_data(input).table) {
    table.push_back({{"subset", subset},
                     {"nabla", polynomial_to_json(entry.nabla)},
                     {"sign_pinned", entry.sign_pinned}});
  }
  out["sublinks"] = std::move(table);
  return out;
}

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotAlgebraicallySplit: return 3;
    case ErrorKind::BettiOutOfScope:
    case ErrorKind::BettiMismatch: return 4;
    case ErrorKind::Syntax:
    case ErrorKind::Topology:
    case ErrorKind::OddCrossingParity:
    case ErrorKind::EmptyResult:
    case ErrorKind::BadParity:
    case ErrorKind::BadGenus:
    case ErrorKind::InvalidArgument:
    case ErrorKind::Io: return 2;
    default: return 5;
  }
}

Json error_json(ErrorKind kind, const std::string& message) {
  return {{"error", {{"kind", error_kind_name(kind)}, {"message", message}, {"exit_code", exit_code(kind)}}}};
}

}  // namespace torsion
