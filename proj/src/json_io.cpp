#include "heckefill/json_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace heckefill {

Json toJson(const Partition& p) { return Json(p.parts()); }

Json toJson(const IncreasingTableau& t) { return Json(t.rows()); }

Json toJson(const SetValuedTableau& t) { return Json(t.rows()); }

Json toJson(const HeckePair& pair) {
  return Json{{"P", toJson(pair.p)}, {"Q", toJson(pair.q)}};
}

Json toJson(const Polyomino& p) {
  // rowspec form when rows are left-justified, cells otherwise
  bool leftJustified = !p.empty();
  for (int r = 1; r <= p.maxRow() && leftJustified; ++r) {
    auto span = p.rowSpan(r);
    if (!span || span->first != 1 ||
        static_cast<int>(p.rowCells(r).size()) != span->second)
      leftJustified = false;
  }
  if (leftJustified)
    return Json{{"kind", "rowspec"}, {"lengths", p.rowLengths()}};
  Json cells = Json::array();
  for (auto [r, c] : p.cells()) cells.push_back(Json::array({r, c}));
  return Json{{"kind", "cells"}, {"cells", cells}};
}

Json toJson(const Filling& f) {
  Json j = toJson(f.shape);
  Json ones = Json::array();
  for (auto [r, c] : f.ones) ones.push_back(Json::array({r, c}));
  j["ones"] = ones;
  return j;
}

Json toJson(const RectangleFilling& f) {
  Json ones = Json::array();
  for (auto [r, c] : f.ones) ones.push_back(Json::array({r, c}));
  return Json{{"height", f.height}, {"width", f.width}, {"ones", ones}};
}

Json toJson(const GenPoly& g) {
  Json out = Json::array();
  for (const auto& [key, count] : g)
    out.push_back(
        Json{{"ne", key.first}, {"se", key.second}, {"count", count}});
  return out;
}

Json toJson(const LinkedPartition& p) {
  return Json{{"n", p.n}, {"blocks", p.blocks}};
}

Partition partitionFromJson(const Json& j) {
  return Partition(j.get<std::vector<int>>());
}

IncreasingTableau increasingTableauFromJson(const Json& j) {
  return IncreasingTableau(j.get<std::vector<std::vector<int>>>());
}

SetValuedTableau setValuedTableauFromJson(const Json& j) {
  return SetValuedTableau(j.get<std::vector<std::vector<std::vector<int>>>>());
}

Polyomino polyominoFromJson(const Json& j) {
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "rowspec")
    return Polyomino::fromRowSpec(j.at("lengths").get<std::vector<int>>());
  if (kind == "cells") {
    std::set<PolyCell> cells;
    for (const auto& cell : j.at("cells"))
      cells.insert({cell.at(0).get<int>(), cell.at(1).get<int>()});
    return Polyomino::fromCells(std::move(cells));
  }
  throw std::invalid_argument("polyominoFromJson: unknown kind " + kind);
}

Filling fillingFromJson(const Json& j) {
  Filling f;
  f.shape = polyominoFromJson(j);
  for (const auto& cell : j.at("ones"))
    f.ones.insert({cell.at(0).get<int>(), cell.at(1).get<int>()});
  f.requireValid("fillingFromJson");
  return f;
}

RectangleFilling rectangleFillingFromJson(const Json& j) {
  RectangleFilling f;
  f.height = j.at("height").get<int>();
  f.width = j.at("width").get<int>();
  for (const auto& cell : j.at("ones"))
    f.ones.insert({cell.at(0).get<int>(), cell.at(1).get<int>()});
  return f;
}

GenPoly genPolyFromJson(const Json& j) {
  GenPoly g;
  for (const auto& term : j)
    g[{term.at("ne").get<int>(), term.at("se").get<int>()}] +=
        term.at("count").get<long long>();
  return g;
}

Word parseWord(const std::string& text) {
  std::string cleaned = text;
  for (char& c : cleaned)
    if (c == ',') c = ' ';
  Word w;
  std::stringstream ss(cleaned);
  int x;
  while (ss >> x) w.push_back(x);
  return w;
}

std::string fixturesDir() {
#ifdef HECKEFILL_FIXTURES_DIR
  return HECKEFILL_FIXTURES_DIR;
#else
  return "fixtures";
#endif
}

Json loadFixture(const std::string& name) {
  std::string path = fixturesDir() + "/" + name;
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open fixture " + path);
  Json j;
  in >> j;
  return j;
}

}  // namespace heckefill
