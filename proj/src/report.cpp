#include <sstream>

#include "json.hpp"
#include "tetracenters/theorems.hpp"

namespace tc {

namespace {

using ojson = nlohmann::ordered_json;

ojson edges_json(const EdgeLengths& e) {
  ojson j;
  for (const char* key : {"a", "b"}) {
    ojson arr = ojson::array();
    for (const auto& x : key[0] == 'a' ? e.a : e.b) arr.push_back(x.str());
    j[key] = arr;
  }
  return j;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

std::string md_cell(const std::string& s) {
  std::string out;
  for (char c : s) out += c == '|' ? std::string("\\|") : std::string(1, c);
  return out;
}

// Short matrix entry for the markdown table.
std::string short_status(const CellReport& c, int n) {
  if (c.holds_exact == n) return "holds (exact)";
  if (c.holds_exact + c.holds_numeric == n) return "holds (interval)";
  if (c.fails > 0) return "fails " + std::to_string(c.fails) + "/" + std::to_string(n);
  if (c.errors == n) return "error";
  return "inconclusive";
}

}  // namespace

ReportFormat parse_format(const std::string& s) {
  if (s == "json") return ReportFormat::Json;
  if (s == "csv") return ReportFormat::Csv;
  if (s == "md" || s == "markdown") return ReportFormat::Markdown;
  throw Error(ErrorCode::InvalidArgument, "unknown format '" + s + "' (json, csv, md)");
}

std::string render(const ScreenReport& r, ReportFormat f, bool timing) {
  int n = static_cast<int>(r.instances.size());
  std::ostringstream out;
  if (f == ReportFormat::Json) {
    ojson j;
    j["family"] = r.family;
    j["seed"] = r.seed;
    j["instances"] = n;
    j["precision_cap"] = r.precision_cap;
    j["centers"] = r.centers;
    ojson props = ojson::array();
    for (auto p : r.properties) props.push_back(to_string(p));
    j["properties"] = props;
    ojson inst = ojson::array();
    for (const auto& e : r.instances) inst.push_back(edges_json(e));
    j["instance_data"] = inst;
    ojson cells = ojson::array();
    for (const auto& c : r.cells) {
      ojson k;
      k["center"] = c.center;
      k["property"] = to_string(c.property);
      k["status"] = c.status;
      k["holds_exact"] = c.holds_exact;
      k["holds_numeric"] = c.holds_numeric;
      k["fails"] = c.fails;
      k["undecided"] = c.undecided;
      k["errors"] = c.errors;
      k["degenerate"] = c.degenerate;
      k["escalated"] = c.escalated;
      if (c.holds_numeric) k["max_width"] = c.max_width;
      if (!c.payload.empty()) k["payload"] = c.payload;
      if (c.counterexample) {
        k["counterexample"] = {{"instance", c.counterexample->index},
                               {"edges", edges_json(c.counterexample->instance)},
                               {"witness", c.counterexample->witness}};
      }
      if (!c.error_messages.empty()) k["error_messages"] = c.error_messages;
      if (timing) k["seconds"] = c.seconds;
      cells.push_back(k);
    }
    j["cells"] = cells;
    if (timing) j["seconds"] = r.seconds;
    out << j.dump(2) << "\n";
  } else if (f == ReportFormat::Csv) {
    out << "center,property,status,holds_exact,holds_numeric,fails,undecided,errors,degenerate,escalated,payload,"
           "counterexample,witness";
    if (timing) out << ",seconds";
    out << "\n";
    for (const auto& c : r.cells) {
      out << csv_field(c.center) << "," << to_string(c.property) << "," << csv_field(c.status) << "," << c.holds_exact
          << "," << c.holds_numeric << "," << c.fails << "," << c.undecided << "," << c.errors << "," << c.degenerate
          << "," << c.escalated << "," << csv_field(c.payload) << ","
          << csv_field(c.counterexample ? c.counterexample->instance.str() : "") << ","
          << csv_field(c.counterexample ? c.counterexample->witness : "");
      if (timing) out << "," << c.seconds;
      out << "\n";
    }
  } else {
    out << "# Screen: " << r.family << ", " << n << " instances, seed " << r.seed << "\n\n";
    out << "| center |";
    for (auto p : r.properties) out << " " << to_string(p) << " |";
    out << "\n|---|";
    for (std::size_t i = 0; i < r.properties.size(); ++i) out << "---|";
    out << "\n";
    for (std::size_t ci = 0; ci < r.centers.size(); ++ci) {
      out << "| " << md_cell(r.centers[ci]) << " |";
      for (std::size_t pi = 0; pi < r.properties.size(); ++pi)
        out << " " << short_status(r.cells[ci * r.properties.size() + pi], n) << " |";
      out << "\n";
    }
    bool header = false;
    for (const auto& c : r.cells) {
      if (!c.counterexample && c.error_messages.empty()) continue;
      if (!header) out << "\n## Counterexamples and errors\n\n";
      header = true;
      out << "- " << md_cell(c.center) << " / " << to_string(c.property) << ": ";
      if (c.counterexample)
        out << "instance " << c.counterexample->index << " " << c.counterexample->instance.str() << ", "
            << md_cell(c.counterexample->witness);
      else
        out << md_cell(c.error_messages.front());
      out << "\n";
    }
    if (timing) out << "\nTotal time: " << r.seconds << " s\n";
  }
  return out.str();
}

std::string render_verification(const std::vector<TheoremResult>& results, ReportFormat f, bool timing) {
  int pass = 0, fail = 0, skip = 0;
  for (const auto& r : results) (r.status == CaseStatus::Pass ? pass : r.status == CaseStatus::Fail ? fail : skip)++;
  std::ostringstream out;
  if (f == ReportFormat::Json) {
    ojson j;
    ojson cases = ojson::array();
    for (const auto& r : results) {
      ojson c{{"id", r.id}, {"statement", r.statement}, {"status", to_string(r.status)},
              {"mode", r.mode}, {"instances", r.instances}, {"evidence", r.evidence}};
      if (timing) c["seconds"] = r.seconds;
      cases.push_back(c);
    }
    j["cases"] = cases;
    j["summary"] = {{"pass", pass}, {"fail", fail}, {"excluded", skip}};
    out << j.dump(2) << "\n";
  } else if (f == ReportFormat::Csv) {
    out << "id,status,mode,instances,statement,evidence" << (timing ? ",seconds" : "") << "\n";
    for (const auto& r : results) {
      out << r.id << "," << to_string(r.status) << "," << csv_field(r.mode) << "," << r.instances << ","
          << csv_field(r.statement) << "," << csv_field(r.evidence);
      if (timing) out << "," << r.seconds;
      out << "\n";
    }
  } else {
    out << "| case | status | mode | n | statement | evidence |" << (timing ? " seconds |" : "") << "\n";
    out << "|---|---|---|---|---|---|" << (timing ? "---|" : "") << "\n";
    for (const auto& r : results) {
      out << "| " << r.id << " | " << to_string(r.status) << " | " << r.mode << " | " << r.instances << " | "
          << md_cell(r.statement) << " | " << md_cell(r.evidence) << " |";
      if (timing) out << " " << r.seconds << " |";
      out << "\n";
    }
    out << "\n" << pass << " pass, " << fail << " fail, " << skip << " excluded\n";
  }
  return out.str();
}

std::string render_hunt(const HuntResult& r, ReportFormat f, bool timing) {
  std::ostringstream out;
  if (f == ReportFormat::Json) {
    ojson j{{"claim", r.claim}, {"statement", r.statement}, {"outcome", to_string(r.outcome)},
            {"budget", r.budget}, {"seed", r.seed}};
    ojson findings = ojson::array();
    for (const auto& h : r.findings) {
      ojson k{{"center", h.center}, {"found", h.found}, {"tried", h.tried}};
      if (h.instance) k["edges"] = edges_json(*h.instance);
      if (!h.witness.empty()) k["witness"] = h.witness;
      findings.push_back(k);
    }
    j["findings"] = findings;
    j["excluded"] = r.excluded;
    if (timing) j["seconds"] = r.seconds;
    out << j.dump(2) << "\n";
  } else if (f == ReportFormat::Csv) {
    out << "claim,outcome,center,found,tried,instance,witness\n";
    for (const auto& h : r.findings)
      out << r.claim << "," << to_string(r.outcome) << "," << csv_field(h.center) << "," << (h.found ? "yes" : "no")
          << "," << h.tried << "," << csv_field(h.instance ? h.instance->str() : "") << "," << csv_field(h.witness)
          << "\n";
  } else {
    out << "# Hunt: " << r.claim << "\n\n" << r.statement << "\n\nOutcome: " << to_string(r.outcome) << " (budget "
        << r.budget << ", seed " << r.seed << ")\n\n";
    out << "| center | found | tried | instance | witness |\n|---|---|---|---|---|\n";
    for (const auto& h : r.findings)
      out << "| " << md_cell(h.center) << " | " << (h.found ? "yes" : "no") << " | " << h.tried << " | "
          << (h.instance ? h.instance->str() : "") << " | " << md_cell(h.witness) << " |\n";
    if (!r.excluded.empty()) {
      out << "\nExcluded:\n";
      for (const auto& x : r.excluded) out << "- " << x << "\n";
    }
    if (timing) out << "\nTime: " << r.seconds << " s\n";
  }
  return out.str();
}

}  // namespace tc
