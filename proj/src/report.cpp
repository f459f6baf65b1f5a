#include "latmod/report.hpp"

#include <sstream>

#include "json.hpp"

namespace latmod {
namespace {

using Json = nlohmann::ordered_json;

Json audit_json(const AuditRecord& rec) {
  Json a = Json::object();
  a["verdict"] = rec.verified() ? "verified-up-to-sampling" : "counterexample";
  a["trials"] = rec.trials;
  a["seed"] = rec.seed;
  if (rec.witness) a["witness"] = rec.witness->str();
  if (rec.escaped) a["escaped"] = rec.escaped->str();
  return a;
}

Json report_json(const CheckReport& rep, bool include_runtime) {
  Json j = Json::object();
  j["check"] = rep.check_id;
  j["inputs"] = rep.inputs_digest;
  j["verdict"] = rep.pass ? "pass" : "fail";
  j["consistent"] = rep.consistent;
  if (!rep.note.empty()) j["note"] = rep.note;
  if (rep.audit) j["audit"] = audit_json(*rep.audit);
  Json tables = Json::array();
  for (const auto& t : rep.tables) {
    Json rows = Json::array();
    for (const auto& [k, v] : t.rows) rows.push_back(Json::array({k, v}));
    tables.push_back(Json::object({{"name", t.name}, {"rows", std::move(rows)}}));
  }
  j["tables"] = std::move(tables);
  if (include_runtime) j["runtime_ms"] = rep.runtime_ms;
  return j;
}

}  // namespace

std::uint64_t fnv1a64(std::string_view text) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

std::string hex64(std::uint64_t v) {
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = digits[v & 0xf];
    v >>= 4;
  }
  return out;
}

std::string render_report(const CheckReport& rep, bool include_runtime) {
  return report_json(rep, include_runtime).dump(2) + "\n";
}

std::string render_reports(const std::vector<CheckReport>& reps, bool include_runtime) {
  Json arr = Json::array();
  for (const auto& r : reps) arr.push_back(report_json(r, include_runtime));
  return arr.dump(2) + "\n";
}

std::string format_report_text(const CheckReport& rep) {
  std::ostringstream out;
  out << "[" << (rep.pass ? "PASS" : "FAIL") << "] " << rep.check_id;
  if (!rep.consistent) out << " (CONSISTENCY VIOLATION)";
  if (!rep.note.empty()) out << " -- " << rep.note;
  out << "\n";
  if (rep.audit) {
    out << "  audit: " << (rep.audit->verified() ? "verified-up-to-sampling" : "counterexample")
        << " (trials=" << rep.audit->trials << ", seed=" << rep.audit->seed << ")\n";
    if (rep.audit->witness) out << "  audit witness: " << rep.audit->witness->str() << "\n";
    if (rep.audit->escaped) out << "  escaped cyclic subspace: " << rep.audit->escaped->str() << "\n";
  }
  for (const auto& t : rep.tables) {
    out << "  " << t.name << ":\n";
    for (const auto& [k, v] : t.rows) out << "    " << k << " = " << v << "\n";
  }
  return out.str();
}

}  // namespace latmod
