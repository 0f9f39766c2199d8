#include "canvas_forge/export.hpp"

#include "canvas_forge/serialize.hpp"
#include "canvas_forge/surgery.hpp"
#include "json_io.hpp"

namespace canvas_forge {

ExportFormat parse_export_format(std::string_view name) {
  if (name == "json") return ExportFormat::kJson;
  if (name == "dot") return ExportFormat::kDot;
  if (name == "csv") return ExportFormat::kCsv;
  throw ArgumentError("unknown export format '" + std::string(name) + "'");
}

std::string graph_to_csv(const PlaneGraph& g) {
  std::string out = "edge,u,v\n";
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    auto [u, v] = g.ends(e);
    out += std::to_string(e) + "," + std::to_string(u) + "," + std::to_string(v) + "\n";
  }
  return out;
}

std::string export_graph(const PlaneGraph& g, ExportFormat format) {
  switch (format) {
    case ExportFormat::kJson: return graph_to_json(g) + "\n";
    case ExportFormat::kDot: return to_dot(g);
    case ExportFormat::kCsv: return graph_to_csv(g);
  }
  return {};
}

std::string export_document(std::string_view text, ExportFormat format, int distance_parameter, double c1,
                            double c2) {
  detail::Json j;
  try {
    j = detail::Json::parse(text);
  } catch (const detail::Json::exception& e) {
    throw ArgumentError(std::string("malformed JSON: ") + e.what());
  }
  if (!j.is_object()) throw ArgumentError("expected a JSON object");
  if (j.contains("sets")) {
    MainInstance inst = main_instance_from_json(text);
    SurgeryRun run = run_surgery(inst);
    switch (format) {
      case ExportFormat::kJson: return surgery_to_json(run.result) + "\n";
      case ExportFormat::kDot: return to_dot(run.result.g0, "G0");
      case ExportFormat::kCsv: {
        const int d = distance_parameter > 0 ? distance_parameter : static_cast<int>(solve_D_inequality(c1, c2).d);
        return ledger_csv_header() + "\n" + ledger_csv_row(build_ledger(inst, run, d, c1, c2)) + "\n";
      }
    }
  }
  if (j.contains("scaffold")) {
    Canvas c = canvas_from_json(text);
    if (format == ExportFormat::kJson) return canvas_to_json(c) + "\n";
    return export_graph(c.graph, format);
  }
  return export_graph(graph_from_json(text), format);
}

}  // namespace canvas_forge
