#include "toric/io.hpp"

#include <fstream>
#include <sstream>

#include "toric/errors.hpp"

namespace toric::io {

namespace {

std::string at(const std::string& location, const std::string& key) {
  return location.empty() ? key : location + "." + key;
}

std::string at(const std::string& location, std::size_t i) {
  return location + "[" + std::to_string(i) + "]";
}

const Json& field(const Json& object, const std::string& key, const std::string& location) {
  if (!object.is_object()) throw ParseError(location.empty() ? "<root>" : location, "expected an object");
  const auto it = object.find(key);
  if (it == object.end()) throw ParseError(at(location, key), "missing");
  return *it;
}

const Json& array(const Json& value, const std::string& location) {
  if (!value.is_array()) throw ParseError(location, "expected an array");
  return value;
}

std::size_t count(const Json& value, const std::string& location) {
  if (!value.is_number_integer() || value.get<std::int64_t>() < 0)
    throw ParseError(location, "expected a nonnegative integer");
  return value.get<std::size_t>();
}

Integer parse_integer_text(const std::string& text, const std::string& location) {
  const std::size_t start = !text.empty() && (text[0] == '-' || text[0] == '+') ? 1 : 0;
  if (start == text.size() || text.find_first_not_of("0123456789", start) != std::string::npos)
    throw ParseError(location, "'" + text + "' is not an integer");
  return Integer(text[0] == '+' ? text.substr(1) : text);
}

Integer parse_integer(const Json& value, const std::string& location) {
  if (value.is_number_unsigned()) return Integer(value.get<std::uint64_t>());
  if (value.is_number_integer()) return Integer(value.get<std::int64_t>());
  if (value.is_string()) return parse_integer_text(value.get<std::string>(), location);
  throw ParseError(location, "expected an integer");
}

LatticeVector parse_lattice_vector(const Json& value, const std::string& location) {
  LatticeVector out;
  for (std::size_t i = 0; i < array(value, location).size(); ++i)
    out.push_back(parse_integer(value[i], at(location, i)));
  return out;
}

RationalVector parse_rational_vector(const Json& value, const std::string& location) {
  RationalVector out;
  for (std::size_t i = 0; i < array(value, location).size(); ++i)
    out.push_back(parse_rational(value[i], at(location, i)));
  return out;
}

PolyhedralDomain parse_domain(const Json& doc) {
  const std::size_t n = count(field(doc, "ambient_dim", ""), "ambient_dim");
  std::vector<Polyhedron> cells;
  const Json& raw_cells = array(field(doc, "cells", ""), "cells");
  for (std::size_t c = 0; c < raw_cells.size(); ++c) {
    const std::string cell_at = at("cells", c);
    const std::string hs_at = at(cell_at, "halfspaces");
    const Json& raw = array(field(raw_cells[c], "halfspaces", cell_at), hs_at);
    std::vector<Halfspace> halfspaces;
    for (std::size_t i = 0; i < raw.size(); ++i) {
      const std::string h_at = at(hs_at, i);
      halfspaces.push_back({parse_lattice_vector(field(raw[i], "normal", h_at), at(h_at, "normal")),
                            parse_rational(field(raw[i], "offset", h_at), at(h_at, "offset"))});
    }
    try {
      cells.emplace_back(n, std::move(halfspaces));
    } catch (const InputError& e) {
      throw ParseError(cell_at, e.what());
    }
  }
  std::optional<BoundingBox> box;
  if (doc.contains("bounding_box") && !doc["bounding_box"].is_null()) {
    box.emplace();
    const Json& raw = array(doc["bounding_box"], "bounding_box");
    for (std::size_t i = 0; i < raw.size(); ++i) {
      const std::string b_at = at("bounding_box", i);
      if (!raw[i].is_array() || raw[i].size() != 2) throw ParseError(b_at, "expected [lo, hi]");
      box->push_back({parse_rational(raw[i][0], at(b_at, 0)), parse_rational(raw[i][1], at(b_at, 1))});
    }
  }
  return PolyhedralDomain(n, std::move(cells), std::move(box));
}

SimplicialComplex parse_complex(const Json& doc) {
  const std::size_t k = count(field(doc, "vertices", ""), "vertices");
  std::vector<std::vector<std::int64_t>> maximal;
  const Json& raw = array(field(doc, "maximal_simplices", ""), "maximal_simplices");
  for (std::size_t i = 0; i < raw.size(); ++i) {
    const std::string s_at = at("maximal_simplices", i);
    std::vector<std::int64_t> s;
    for (std::size_t j = 0; j < array(raw[i], s_at).size(); ++j) {
      if (!raw[i][j].is_number_integer()) throw ParseError(at(s_at, j), "expected a vertex index");
      s.push_back(raw[i][j].get<std::int64_t>());
    }
    maximal.push_back(std::move(s));
  }
  SimplicialComplex complex = [&] {
    try {
      return abstract_complex(k, maximal);
    } catch (const InputError& e) {
      throw ParseError("maximal_simplices", e.what());
    }
  }();
  if (doc.contains("coordinates") && !doc["coordinates"].is_null()) {
    std::vector<RationalVector> coordinates;
    const Json& rc = array(doc["coordinates"], "coordinates");
    for (std::size_t i = 0; i < rc.size(); ++i)
      coordinates.push_back(parse_rational_vector(rc[i], at("coordinates", i)));
    return SimplicialComplex(k, complex.maximal_simplices(), std::move(coordinates));
  }
  return complex;
}

}  // namespace

Rational parse_rational(const Json& value, const std::string& location) {
  if (value.is_number_unsigned()) return Rational(value.get<std::uint64_t>());
  if (value.is_number_integer()) return Rational(value.get<std::int64_t>());
  if (!value.is_string()) throw ParseError(location, "expected a rational \"p/q\"");
  const std::string text = value.get<std::string>();
  const auto slash = text.find('/');
  if (slash == std::string::npos) return Rational(parse_integer_text(text, location));
  const Integer num = parse_integer_text(text.substr(0, slash), location);
  const Integer den = parse_integer_text(text.substr(slash + 1), location);
  if (den == 0) throw ParseError(location, "'" + text + "' has a zero denominator");
  if (den < 0) throw ParseError(location, "'" + text + "' has a negative denominator");
  return Rational(num, den);
}

std::string format_rational(const Rational& q) { return q.str(); }

Input parse_input(const Json& document) {
  if (!document.is_object()) throw ParseError("<root>", "expected an object");
  if (document.contains("cells")) return parse_domain(document);
  if (document.contains("maximal_simplices")) return parse_complex(document);
  throw ParseError("<root>", "neither a domain (\"cells\") nor a complex (\"maximal_simplices\")");
}

Input load_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path, "cannot open file");
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ParseError(path + " (byte " + std::to_string(e.byte) + ")", "invalid JSON");
  }
  return parse_input(doc);
}

Json to_json(const RationalVector& x) {
  Json out = Json::array();
  for (const auto& c : x) out.push_back(format_rational(c));
  return out;
}

Json to_json(const LatticeVector& v) {
  Json out = Json::array();
  for (const auto& c : v) {
    // Small entries as JSON numbers, huge ones as strings.
    if (c >= std::numeric_limits<std::int64_t>::min() && c <= std::numeric_limits<std::int64_t>::max())
      out.push_back(static_cast<std::int64_t>(c));
    else
      out.push_back(c.str());
  }
  return out;
}

Json to_json(const StratumReport& r) {
  Json normals = Json::array();
  for (const auto& v : r.normals) normals.push_back(to_json(v));
  Json out;
  out["cell"] = r.face.cell;
  out["active"] = r.face.active;
  out["dimension"] = r.face.dimension;
  out["face_codimension"] = r.face.codimension;
  out["codimension"] = r.codimension;
  out["point"] = to_json(r.face.relative_interior_point);
  out["normals"] = std::move(normals);
  out["elementary_divisors"] = to_json(r.elementary_divisors);
  out["unimodular"] = r.unimodular;
  if (!r.reason.empty()) out["reason"] = r.reason;
  return out;
}

Json to_json(const CohGroupPresentation& p) {
  Json out;
  out["degree"] = p.degree;
  out["coefficients"] = p.coefficients.tag();
  out["free_rank"] = p.free_rank;
  out["torsion"] = to_json(p.torsion);
  out["real_dim"] = p.real_dim;
  out["orientation"] = "simplices ordered by ascending vertex index";
  return out;
}

Json to_json(const CohClass& c) {
  Json out;
  out["free"] = to_json(c.free);
  out["torsion"] = to_json(c.torsion);
  out["real"] = to_json(c.real);
  return out;
}

Json to_json(const AxiomCheck& a) {
  Json out;
  out["pass"] = a.pass;
  out["witnesses"] = a.witnesses;
  out["failures"] = a.failures;
  return out;
}

Json to_json(const TorsorReport& r) {
  Json out;
  out["picard"] = to_json(r.picard);
  if (r.stm_count)
    out["stm_count"] = to_json(LatticeVector{*r.stm_count})[0];
  else
    out["stm_count"] = "infinite";
  Json axioms;
  axioms["identity"] = to_json(r.identity);
  axioms["compatibility"] = to_json(r.compatibility);
  axioms["freeness"] = to_json(r.freeness);
  axioms["transitivity"] = to_json(r.transitivity);
  out["torsor_axioms"] = std::move(axioms);
  out["mode"] = r.mode();
  if (!r.exhaustive) out["samples"] = r.samples;
  out["pass"] = r.all_pass();
  return out;
}

Json to_json(const local::LocalReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    Json entry;
    entry["name"] = c.name;
    entry["value"] = c.value;
    entry[c.upper_bound ? "max" : "min"] = c.threshold;
    entry["pass"] = c.pass;
    checks.push_back(std::move(entry));
  }
  Json out;
  out["checks"] = std::move(checks);
  out["pass"] = r.pass();
  return out;
}

}  // namespace toric::io
