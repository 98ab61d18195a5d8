#include "isbell/io.hpp"

#include <fstream>
#include <sstream>

#include "isbell/errors.hpp"

namespace isbell {

Json to_json(ExtNonNeg v) {
  if (!v.finite()) return Json("inf");
  return Json(v.value());
}

ExtNonNeg extnn_from_json(const Json& j) {
  if (j.is_string()) {
    if (j.get<std::string>() == "inf") return ExtNonNeg::infinity();
    throw ShapeMismatch("expected a number or \"inf\", got \"" +
                        j.get<std::string>() + "\"");
  }
  if (!j.is_number())
    throw ShapeMismatch("expected a number or \"inf\"");
  double v = j.get<double>();
  if (!(v >= 0.0)) throw ShapeMismatch("distances and values must be >= 0");
  return ExtNonNeg(v);
}

Json to_json(const Space& space) {
  Json d = Json::array();
  for (std::size_t i = 0; i < space.size(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < space.size(); ++j)
      row.push_back(to_json(space.d(i, j)));
    d.push_back(std::move(row));
  }
  return Json{{"points", space.labels()}, {"d", std::move(d)}};
}

Space space_from_json(const Json& j, double tol) {
  if (!j.is_object() || !j.contains("points") || !j.contains("d"))
    throw ShapeMismatch("space JSON needs \"points\" and \"d\"");
  std::vector<std::string> labels =
      j.at("points").get<std::vector<std::string>>();
  std::vector<std::vector<ExtNonNeg>> table;
  for (const Json& row : j.at("d")) {
    std::vector<ExtNonNeg> r;
    for (const Json& cell : row) r.push_back(extnn_from_json(cell));
    table.push_back(std::move(r));
  }
  return Space::validated(std::move(labels), table, tol);
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  std::stringstream ss(line);
  while (std::getline(ss, cell, ',')) {
    std::size_t begin = cell.find_first_not_of(" \t\r");
    std::size_t end = cell.find_last_not_of(" \t\r");
    cells.push_back(begin == std::string::npos
                        ? ""
                        : cell.substr(begin, end - begin + 1));
  }
  return cells;
}

ExtNonNeg parse_cell(const std::string& cell) {
  if (cell == "inf") return ExtNonNeg::infinity();
  try {
    return ExtNonNeg(std::stod(cell));
  } catch (const std::exception&) {
    throw ShapeMismatch("bad CSV cell \"" + cell + "\"");
  }
}

}  // namespace

Space space_from_csv(const std::string& text, double tol) {
  std::stringstream ss(text);
  std::string line;
  std::vector<std::string> labels;
  std::vector<std::vector<ExtNonNeg>> table;
  bool header = true;
  while (std::getline(ss, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    auto cells = split_csv_line(line);
    if (header) {
      labels = cells;
      header = false;
      continue;
    }
    std::vector<ExtNonNeg> row;
    for (const auto& cell : cells) row.push_back(parse_cell(cell));
    table.push_back(std::move(row));
  }
  return Space::validated(std::move(labels), table, tol);
}

Space read_space_file(const std::filesystem::path& path, double tol) {
  std::ifstream in(path);
  if (!in) throw ShapeMismatch("cannot open " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  if (path.extension() == ".csv") return space_from_csv(buffer.str(), tol);
  return space_from_json(Json::parse(buffer.str()), tol);
}

Json to_json(const Functional& f) {
  Json values = Json::array();
  for (ExtNonNeg v : f.values()) values.push_back(to_json(v));
  return values;
}

std::vector<ExtNonNeg> table_from_json(const Json& j) {
  const Json& arr = (j.is_object() && j.contains("values")) ? j.at("values") : j;
  if (!arr.is_array()) throw ShapeMismatch("expected an array of values");
  std::vector<ExtNonNeg> out;
  for (const Json& cell : arr) out.push_back(extnn_from_json(cell));
  return out;
}

Functional functional_from_json(const Json& j, const SpaceRef& base, Role role,
                                double tol) {
  return Functional::with_role(base, table_from_json(j), role, tol);
}

Json to_json(const IsbellPoint& p) {
  return Json{{"f", to_json(p.f())}, {"g", to_json(p.g())}};
}

IsbellPoint isbell_point_from_json(const Json& j, const SpaceRef& base,
                                   double tol) {
  if (j.is_object() && j.contains("f")) {
    Functional f = Functional::raw(base, table_from_json(j.at("f")));
    if (j.contains("g")) {
      Functional g = Functional::raw(base, table_from_json(j.at("g")));
      return IsbellPoint::from_pair(std::move(f), std::move(g), tol);
    }
    return IsbellPoint::from_presheaf(std::move(f), tol);
  }
  return IsbellPoint::from_presheaf(
      Functional::raw(base, table_from_json(j)), tol);
}

Json to_json(const WeightedDiagram& d) {
  Json legs = Json::array();
  for (std::size_t i = 0; i < d.shape()->size(); ++i)
    legs.push_back(d.target()->label(d.j(i)));
  Json weights = Json::array();
  for (ExtNonNeg w : d.weight.values()) weights.push_back(to_json(w));
  return Json{{"shape", to_json(*d.shape())},
              {"J", std::move(legs)},
              {"W", std::move(weights)}};
}

WeightedDiagram weighted_diagram_from_json(const Json& j,
                                           const SpaceRef& target,
                                           bool for_colimit, double tol) {
  if (!j.is_object() || !j.contains("shape") || !j.contains("J") ||
      !j.contains("W"))
    throw ShapeMismatch("diagram JSON needs \"shape\", \"J\" and \"W\"");
  SpaceRef shape = share(space_from_json(j.at("shape"), tol));
  std::vector<std::string> images = j.at("J").get<std::vector<std::string>>();
  ShortMap map = ShortMap::checked_by_labels(shape, target, images, tol);
  Functional weight = functional_from_json(
      j.at("W"), shape, for_colimit ? Role::presheaf : Role::copresheaf, tol);
  return make_weighted_diagram(std::move(map), std::move(weight));
}

Json to_json(const VerifyReport& report) {
  return Json{{"theorem", report.theorem},
              {"passed", report.passed},
              {"checks", report.checks},
              {"detail", report.detail}};
}

}  // namespace isbell
