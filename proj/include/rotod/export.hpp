#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "rotod/diagram.hpp"
#include "rotod/perron.hpp"

namespace rotod {

using Json = nlohmann::ordered_json;

/// Integers that fit in 64 bits become JSON numbers, larger ones strings.
Json to_json(const BigInt& v);
Json to_json(const std::vector<BigInt>& v);  // also polynomials
Json to_json(const BigRational& v);  // "num/den" string
Json to_json(const IntegerMatrix& m);
Json to_json(const Substitution& s);

/// Diagram as DOT: a root node, one rank per level, edges labelled by
/// their order rank among the incoming edges of their target.
std::string export_dot(const OrderedDiagram& d);

}  // namespace rotod
