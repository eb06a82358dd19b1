#include "rotod/export.hpp"

#include <limits>
#include <sstream>

namespace rotod {

Json to_json(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return Json(v.convert_to<std::int64_t>());
  return Json(v.str());
}

Json to_json(const std::vector<BigInt>& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(to_json(x));
  return a;
}

Json to_json(const BigRational& v) {
  return Json(boost::multiprecision::numerator(v).str() + "/" + boost::multiprecision::denominator(v).str());
}

Json to_json(const IntegerMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.size(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.size(); ++j) row.push_back(to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json to_json(const Substitution& s) {
  Json a = Json::array();
  for (const auto& w : s.words()) a.push_back(word_to_string(w, s.alphabet_size()));
  return a;
}

std::string export_dot(const OrderedDiagram& d) {
  std::ostringstream os;
  os << "digraph bratteli {\n";
  os << "  rankdir=TB;\n";
  os << "  node [shape=circle];\n";
  os << "  root [label=\"v0\"];\n";
  for (std::size_t k = 1; k <= d.depth(); ++k) {
    os << "  { rank=same;";
    for (Letter v : d.vertices(k)) os << " L" << k << "_" << v;
    os << " }\n";
    for (Letter v : d.vertices(k)) os << "  L" << k << "_" << v << " [label=\"" << v << "\"];\n";
  }
  for (Letter v : d.vertices(1)) os << "  root -> L1_" << v << ";\n";
  for (std::size_t k = 1; k < d.depth(); ++k)
    for (const auto& e : d.edges(k))
      os << "  L" << k << "_" << e.source << " -> L" << (k + 1) << "_" << e.target << " [label=\"" << e.rank
         << "\"];\n";
  os << "}\n";
  return os.str();
}

}  // namespace rotod
