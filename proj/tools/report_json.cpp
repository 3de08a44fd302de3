#include "report_json.hpp"

namespace ssc::cli {

Json to_json(const RationalMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (const auto& v : m.row(i)) row.push_back(to_string(v));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json to_json(std::span<const Rational> v) {
  Json out = Json::array();
  for (const auto& r : v) out.push_back(to_string(r));
  return out;
}

Json to_json(const ColorTrace& trace) {
  Json changes = Json::array();
  for (const auto& c : trace.changes)
    changes.push_back(Json::array({c.forcer + 1, c.forced + 1}));
  Json black = Json::array();
  for (auto v : trace.black) black.push_back(v + 1);
  return Json{{"changes", std::move(changes)}, {"black", std::move(black)}};
}

Json to_json(const AnalysisReport& report) {
  auto trace = [](const ConditionResult& c) {
    return c.trace ? to_json(*c.trace) : Json(nullptr);
  };
  Json out;
  out["verdict"] = report.verdict;
  out["condition1"] = report.condition1.holds;
  out["condition2"] = report.condition2.holds;
  out["shortcut_used"] = report.shortcut_used;
  out["trace1"] = trace(report.condition1);
  out["trace2"] = trace(report.condition2);
  if (report.witness) {
    out["witness"] = Json{{"A0", to_json(report.witness->a0)},
                          {"B0", to_json(report.witness->b0)}};
    out["lambda"] = to_string(report.witness->lambda);
    out["x"] = to_json(report.witness->x);
  } else {
    out["witness"] = nullptr;
    out["lambda"] = nullptr;
    out["x"] = nullptr;
  }
  return out;
}

Json to_json(const OracleVerdict& verdict) {
  Json out;
  out["mode"] = verdict.mode == OracleMode::kMonteCarlo ? "monte_carlo"
                                                        : "exhaustive";
  out["trials"] = verdict.trials;
  if (verdict.counterexample) {
    out["counterexample"] = Json{{"A0", to_json(verdict.counterexample->a)},
                                 {"B0", to_json(verdict.counterexample->b)}};
  } else {
    out["counterexample"] = nullptr;
  }
  out["agrees"] = verdict.agrees;
  return out;
}

}  // namespace ssc::cli
