#pragma once

// JSON input and output. Rationals travel as strings "p/q" (or "p", or a
// JSON integer); floating-point numbers are rejected on input so that every
// geometric datum stays exact.

#include <string>
#include <variant>

#include <json.hpp>

#include "toric/errors.hpp"

#include "toric/cohomology.hpp"
#include "toric/complexes.hpp"
#include "toric/domain.hpp"
#include "toric/localmodels.hpp"
#include "toric/torsor.hpp"

namespace toric::io {

using Json = nlohmann::ordered_json;

/// Malformed input, with a path such as cells[0].halfspaces[2].offset.
class ParseError : public InputError {
 public:
  ParseError(const std::string& location, const std::string& message)
      : InputError(location + ": " + message), location_(location) {}
  const std::string& location() const { return location_; }

 private:
  std::string location_;
};

using Input = std::variant<PolyhedralDomain, SimplicialComplex>;

Rational parse_rational(const Json& value, const std::string& location);
std::string format_rational(const Rational& q);

/// A domain (object with "cells") or an abstract complex (object with
/// "maximal_simplices").
Input parse_input(const Json& document);
/// Reads and parses a file; unreadable files and JSON syntax errors are
/// ParseErrors located at the path.
Input load_input(const std::string& path);

Json to_json(const RationalVector& x);
Json to_json(const LatticeVector& v);
Json to_json(const StratumReport& r);
Json to_json(const CohGroupPresentation& p);
Json to_json(const CohClass& c);
Json to_json(const AxiomCheck& a);
Json to_json(const TorsorReport& r);
Json to_json(const local::LocalReport& r);

}  // namespace toric::io
