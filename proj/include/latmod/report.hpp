#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "latmod/algebra.hpp"

namespace latmod {

// Two-column named table; everything is pre-rendered to strings so reports
// compare byte-for-byte.
struct ReportTable {
  std::string name;
  std::vector<std::pair<std::string, std::string>> rows;

  void add(std::string label, std::string value) {
    rows.emplace_back(std::move(label), std::move(value));
  }
};

struct CheckReport {
  std::string check_id;
  std::string inputs_digest;  // fnv1a-64 over the canonical document and options
  std::optional<AuditRecord> audit;
  std::vector<ReportTable> tables;
  bool pass = false;
  bool consistent = true;
  std::string note;  // one-line detail, e.g. the violation message
  double runtime_ms = 0.0;
};

std::uint64_t fnv1a64(std::string_view text);
std::string hex64(std::uint64_t v);

// Canonical JSON rendering with a fixed key order. Runtime is excluded
// unless asked for, so identical inputs and seeds reproduce identical bytes.
std::string render_report(const CheckReport& rep, bool include_runtime = false);
std::string render_reports(const std::vector<CheckReport>& reps, bool include_runtime = false);

// Terminal rendering: one verdict line plus the tables.
std::string format_report_text(const CheckReport& rep);

}  // namespace latmod
