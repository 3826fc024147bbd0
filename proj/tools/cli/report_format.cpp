#include "report_format.hpp"

#include <nlohmann/json.hpp>
#include <sstream>

#include "quatype/expression.hpp"

namespace quatype::cli {

namespace {

struct Tally {
  int pass = 0, fail = 0, skipped = 0;
};

Tally tally(const std::vector<CheckReport>& reports) {
  Tally t;
  for (const auto& r : reports) {
    switch (r.status) {
      case Status::Pass: ++t.pass; break;
      case Status::Fail: ++t.fail; break;
      case Status::Skipped: ++t.skipped; break;
    }
  }
  return t;
}

}  // namespace

std::string strategy_name(Strategy s) {
  return s == Strategy::Exhaustive ? "exhaustive" : "random";
}

std::string format_text(const SuiteRun& run) {
  std::ostringstream out;
  const CheckConfig& cfg = run.cfg;
  out << cfg.sig.to_string() << "  suite " << run.suite << "  seed " << cfg.seed
      << "  samples " << cfg.samples << "  tol " << cfg.tol << "  strategy "
      << strategy_name(cfg.strategy) << "\n";
  for (const auto& r : run.reports) {
    out << status_name(r.status) << "  " << r.name << "  (" << r.cases_run << " cases)";
    if (!r.notes.empty()) out << "  " << r.notes;
    out << "\n";
    if (r.counterexample) {
      const Counterexample& c = *r.counterexample;
      out << "    counterexample: " << c.operation << "(" << c.lhs << ", " << c.rhs
          << ") has nonzero " << c.projection << ", magnitude " << format_decimal(c.magnitude)
          << "\n";
    }
  }
  const Tally t = tally(run.reports);
  out << t.pass << " passed, " << t.fail << " failed, " << t.skipped << " skipped\n";
  return out.str();
}

std::string format_json(const SuiteRun& run) {
  using Json = nlohmann::ordered_json;
  const CheckConfig& cfg = run.cfg;
  Json doc;
  doc["signature"] = {{"p", cfg.sig.p()}, {"q", cfg.sig.q()}};
  doc["suite"] = run.suite;
  doc["seed"] = cfg.seed;
  doc["samples"] = cfg.samples;
  doc["tol"] = cfg.tol;
  doc["strategy"] = strategy_name(cfg.strategy);
  Json reports = Json::array();
  for (const auto& r : run.reports) {
    Json item;
    item["name"] = r.name;
    item["status"] = std::string(status_name(r.status));
    item["cases"] = r.cases_run;
    if (r.counterexample) {
      const Counterexample& c = *r.counterexample;
      item["counterexample"] = {{"lhs", c.lhs},
                                {"rhs", c.rhs},
                                {"operation", c.operation},
                                {"projection", c.projection},
                                {"magnitude", c.magnitude}};
    } else {
      item["counterexample"] = nullptr;
    }
    item["max_residual"] = r.max_residual;
    item["notes"] = r.notes;
    reports.push_back(std::move(item));
  }
  doc["reports"] = std::move(reports);
  const Tally t = tally(run.reports);
  doc["summary"] = {{"pass", t.pass}, {"fail", t.fail}, {"skipped", t.skipped}};
  return doc.dump(2) + "\n";
}

}  // namespace quatype::cli
