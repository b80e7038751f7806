#include "gaf/json_io.hpp"

#include <stdexcept>

namespace gaf {

using nlohmann::json;

namespace {

json point_to_json(const Point& p) { return json::array({p.x, p.y}); }

Point point_from_json(const json& j) {
  return {j.at(0).get<double>(), j.at(1).get<double>()};
}

json shape_to_json(const CellShape& shape) {
  if (const auto* r = std::get_if<Rect>(&shape)) {
    return {{"kind", "rect"},
            {"origin", point_to_json(r->origin)},
            {"width", r->width},
            {"height", r->height}};
  }
  const auto& t = std::get<Triangle>(shape);
  return {{"kind", t.up ? "tri-up" : "tri-down"},
          {"anchor", point_to_json(t.anchor)},
          {"base", t.base}};
}

CellShape shape_from_json(const json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "rect") {
    return Rect{point_from_json(j.at("origin")), j.at("width").get<double>(),
                j.at("height").get<double>()};
  }
  if (kind == "tri-up" || kind == "tri-down") {
    return Triangle{point_from_json(j.at("anchor")), j.at("base").get<double>(),
                    kind == "tri-up"};
  }
  throw std::invalid_argument("unknown cell shape kind '" + kind + "'");
}

std::string cell_type_name(CellType type) {
  switch (type) {
    case CellType::uniform: return "uniform";
    case CellType::type_a: return "A";
    case CellType::type_b: return "B";
  }
  return "uniform";
}

CellType cell_type_from_name(const std::string& name) {
  if (name == "uniform") return CellType::uniform;
  if (name == "A") return CellType::type_a;
  if (name == "B") return CellType::type_b;
  throw std::invalid_argument("unknown cell type '" + name + "'");
}

}  // namespace

json partition_to_json(const Partition& partition) {
  json cells = json::array();
  for (const Cell& c : partition.cells) {
    json jc = {{"id", c.id},
               {"col", c.col},
               {"row", c.row},
               {"type", cell_type_name(c.type)}};
    jc.update(shape_to_json(c.shape));
    cells.push_back(std::move(jc));
  }
  json adjacency = json::array();
  for (const auto& [a, b] : partition.adjacency) {
    adjacency.push_back(json::array({a, b}));
  }
  return {{"field",
           {{"width", partition.field.width},
            {"height", partition.field.height},
            {"radio_range", partition.field.radio_range}}},
          {"scheme", scheme_name(partition.params.scheme)},
          {"params",
           {{"r", partition.params.r},
            {"d", partition.params.d},
            {"k", partition.params.k}}},
          {"grid_offset", point_to_json(partition.grid_offset)},
          {"col_base", partition.col_base},
          {"row_base", partition.row_base},
          {"cells", std::move(cells)},
          {"adjacency", std::move(adjacency)}};
}

Partition partition_from_json(const json& j) {
  Partition p;
  const json& field = j.at("field");
  p.field = {field.at("width").get<double>(), field.at("height").get<double>(),
             field.at("radio_range").get<double>()};
  p.params.scheme = scheme_from_name(j.at("scheme").get<std::string>());
  const json& params = j.at("params");
  p.params.r = params.at("r").get<double>();
  p.params.d = params.at("d").get<double>();
  p.params.k = params.at("k").get<int>();
  p.grid_offset = point_from_json(j.at("grid_offset"));
  p.col_base = j.at("col_base").get<int>();
  p.row_base = j.at("row_base").get<int>();

  for (const json& jc : j.at("cells")) {
    Cell c;
    c.id = jc.at("id").get<int>();
    c.col = jc.at("col").get<int>();
    c.row = jc.at("row").get<int>();
    c.shape = shape_from_json(jc);
    c.type = cell_type_from_name(jc.at("type").get<std::string>());
    if (c.id != static_cast<int>(p.cells.size())) {
      throw std::invalid_argument("partition cells must be listed in id order");
    }
    p.index.emplace((static_cast<long long>(c.col) << 32) |
                        static_cast<long long>(
                            static_cast<unsigned int>(c.row)),
                    c.id);
    p.cells.push_back(std::move(c));
  }
  for (const json& pair : j.at("adjacency")) {
    p.adjacency.emplace_back(pair.at(0).get<int>(), pair.at(1).get<int>());
  }
  return p;
}

json req_report_to_json(const ReqReport& report) {
  return {{"scheme", scheme_name(report.params.scheme)},
          {"params",
           {{"r", report.params.r},
            {"d", report.params.d},
            {"k", report.params.k}}},
          {"radio_range", report.radio_range},
          {"req1_worst", report.req1_worst},
          {"req2_worst", report.req2_worst},
          {"feasible", report.feasible},
          {"binding", binding_name(report.binding)}};
}

json backbone_to_json(const BackboneGraph& graph) {
  json vertices = json::array();
  for (const BackboneVertex& v : graph.vertices) {
    vertices.push_back({{"cell", v.cell_id},
                        {"node", v.node_id},
                        {"position", point_to_json(v.position)}});
  }
  auto edges_to_json = [](const std::vector<BackboneEdge>& edges) {
    json out = json::array();
    for (const BackboneEdge& e : edges) {
      out.push_back(
          {{"cells", json::array({e.cell_a, e.cell_b})}, {"length", e.length}});
    }
    return out;
  };
  return {{"vertices", std::move(vertices)},
          {"edges", edges_to_json(graph.edges)},
          {"violations", edges_to_json(graph.violations)},
          {"component_count", graph.component_count}};
}

json sim_result_to_json(const SimResult& result) {
  return {{"lifetime", result.lifetime},
          {"mean_active_count", result.mean_active_count},
          {"active_counts", result.active_counts},
          {"final_energies", result.final_energies},
          {"populated_cells", result.populated_cells},
          {"active_node_rounds", result.active_node_rounds},
          {"sleep_node_rounds", result.sleep_node_rounds}};
}

json chain_verification_to_json(const ChainVerification& report) {
  return {{"n", report.n},
          {"spacing", report.spacing},
          {"analytic", report.analytic},
          {"estimate", report.estimate},
          {"std_error", report.std_error},
          {"pass", report.pass},
          {"increment_analytic", report.increment_analytic},
          {"increment_estimate", report.increment_estimate},
          {"increment_std_error", report.increment_std_error},
          {"increment_pass", report.increment_pass}};
}

}  // namespace gaf
