#include "stacky/json_io.hpp"

#include <fstream>
#include <limits>
#include <sstream>

namespace stacky {

namespace {

Int parse_int(const OrderedJson& value, const char* what) {
  if (value.is_number_integer()) return Int(value.get<long long>());
  if (value.is_string()) {
    try {
      return Int(value.get<std::string>());
    } catch (const std::exception&) {
      throw FanError("bad-document", std::string(what) + " is not an integer");
    }
  }
  throw FanError("bad-document", std::string(what) + " is not an integer");
}

std::vector<Int> parse_int_vector(const OrderedJson& value, const char* what) {
  if (!value.is_array()) throw FanError("bad-document", std::string(what) + " is not a list");
  std::vector<Int> out;
  for (const auto& entry : value) out.push_back(parse_int(entry, what));
  return out;
}

}  // namespace

StackyFan parse_fan(const OrderedJson& document) {
  if (!document.is_object()) throw FanError("bad-document", "fan document is not an object");
  if (!document.contains("dim") || !document["dim"].is_number_integer())
    throw FanError("bad-document", "missing integer field 'dim'");
  const int dim = document["dim"].get<int>();

  if (!document.contains("rays") || !document["rays"].is_array())
    throw FanError("bad-document", "missing list field 'rays'");
  std::vector<std::vector<Int>> rays;
  for (const auto& entry : document["rays"]) rays.push_back(parse_int_vector(entry, "ray entry"));

  std::vector<Int> levels;
  if (document.contains("levels")) levels = parse_int_vector(document["levels"], "level");

  if (!document.contains("max_cones") || !document["max_cones"].is_array())
    throw FanError("bad-document", "missing list field 'max_cones'");
  std::vector<std::vector<int>> max_cones;
  for (const auto& entry : document["max_cones"]) {
    if (!entry.is_array()) throw FanError("bad-document", "cone entry is not a list");
    std::vector<int> cone;
    for (const auto& idx : entry) {
      if (!idx.is_number_integer()) throw FanError("bad-document", "cone index is not an integer");
      cone.push_back(idx.get<int>());
    }
    max_cones.push_back(std::move(cone));
  }

  return StackyFan::from_data(dim, std::move(rays), std::move(levels), std::move(max_cones));
}

StackyFan parse_fan_text(const std::string& text) {
  OrderedJson document = OrderedJson::parse(text, nullptr, false);
  if (document.is_discarded()) throw FanError("bad-document", "fan document is not valid JSON");
  return parse_fan(document);
}

StackyFan parse_fan_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FanError("bad-document", "cannot read fan document: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_fan_text(buffer.str());
}

OrderedJson fan_to_json(const StackyFan& fan) {
  OrderedJson doc;
  doc["dim"] = fan.dim();
  doc["rays"] = OrderedJson::array();
  for (const Ray& r : fan.rays()) {
    OrderedJson vec = OrderedJson::array();
    for (const Int& x : r.v) vec.push_back(json_int(x));
    doc["rays"].push_back(std::move(vec));
  }
  doc["levels"] = OrderedJson::array();
  for (const Ray& r : fan.rays()) doc["levels"].push_back(json_int(r.level));
  doc["max_cones"] = OrderedJson::array();
  for (const Cone& c : fan.max_cones()) doc["max_cones"].push_back(c.ray_indices);
  return doc;
}

OrderedJson json_int(const Int& value) {
  static const Int kMin = std::numeric_limits<long long>::min();
  static const Int kMax = std::numeric_limits<long long>::max();
  if (value >= kMin && value <= kMax) return value.convert_to<long long>();
  return value.str();
}

OrderedJson matrix_to_json(const IntMatrix& m) {
  OrderedJson rows = OrderedJson::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    OrderedJson row = OrderedJson::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(json_int(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

OrderedJson invariants_to_json(const AbelianInvariants& g) {
  OrderedJson out;
  out["free_rank"] = g.free_rank;
  out["torsion"] = OrderedJson::array();
  for (const Int& t : g.torsion) out["torsion"].push_back(json_int(t));
  return out;
}

OrderedJson piece_to_json(const GradedPiece& piece) {
  OrderedJson out;
  out["degree"] = piece.degree;
  out["basis"] = OrderedJson::array();
  for (const Monomial& m : piece.basis) out["basis"].push_back(m.exponents);
  out["free_rank"] = piece.invariants.free_rank;
  out["torsion"] = OrderedJson::array();
  for (const Int& t : piece.invariants.torsion) out["torsion"].push_back(json_int(t));
  return out;
}

}  // namespace stacky
