#include "spherelevels/arrangement_io.hpp"

#include <fstream>
#include <json.hpp>
#include <sstream>

#include "spherelevels/errors.hpp"

namespace spherelevels {

using nlohmann::json;

GreatSphereArrangement parse_arrangement(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(e.what());
  }
  if (!doc.is_object() || !doc.contains("dimension") || !doc.contains("normals")) {
    throw ParseError("expected an object with 'dimension' and 'normals'");
  }
  if (!doc["dimension"].is_number_integer()) throw ParseError("'dimension' must be an integer");
  if (!doc["normals"].is_array()) throw ParseError("'normals' must be an array");

  GreatSphereArrangement arr;
  arr.dimension = doc["dimension"].get<int>();
  if (arr.dimension < 1) throw ParseError("'dimension' must be >= 1");
  const auto width = static_cast<std::size_t>(arr.dimension) + 1;
  std::size_t index = 0;
  for (const auto& row : doc["normals"]) {
    if (!row.is_array() || row.size() != width) {
      throw ParseError("normal " + std::to_string(index) + " must have " +
                       std::to_string(width) + " coordinates");
    }
    std::vector<double> coords;
    coords.reserve(width);
    for (const auto& x : row) {
      if (!x.is_number()) throw ParseError("normal coordinates must be numbers");
      coords.push_back(x.get<double>());
    }
    try {
      arr.normals.push_back(UnitVector::from_unit(std::move(coords)));
    } catch (const PreconditionError& e) {
      throw ParseError("normal " + std::to_string(index) + ": " + e.what());
    }
    ++index;
  }
  return arr;
}

GreatSphereArrangement load_arrangement(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return parse_arrangement(buf.str());
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

std::string serialize_arrangement(const GreatSphereArrangement& arr) {
  json doc;
  doc["dimension"] = arr.dimension;
  doc["normals"] = json::array();
  for (const auto& u : arr.normals) {
    doc["normals"].push_back(std::vector<double>(u.coords().begin(), u.coords().end()));
  }
  return doc.dump(2) + "\n";
}

void save_arrangement(const GreatSphereArrangement& arr, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path.string());
  out << serialize_arrangement(arr);
  if (!out) throw Error("write failed for " + path.string());
}

GreatSphereArrangement random_arrangement(int d, int n, RandomSeed seed) {
  if (n < 0) throw PreconditionError("n must be >= 0");
  Rng rng(seed);
  GreatSphereArrangement arr;
  arr.dimension = d;
  arr.normals.reserve(n);
  for (int i = 0; i < n; ++i) arr.normals.push_back(sample_unit_vector(d, rng));
  return arr;
}

}  // namespace spherelevels
