#pragma once

#include <filesystem>
#include <iosfwd>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "equil/bench/runner.hpp"

namespace equil::bench {

enum class ReportFormat { csv, json };

ReportFormat parse_report_format(std::string_view s);

// Fixed CSV column order.
inline constexpr std::string_view kCsvHeader =
    "scenario,N,d_eff,D_G,epsilon,mean_D,stderr,bound_thm5,bound_thm3,suff_thm1,nec_thm2,verdict,seed";

void write_csv(std::ostream& os, const std::vector<RunRecord>& records);
void write_json(std::ostream& os, const std::vector<RunRecord>& records);

nlohmann::json to_json(const RunRecord& r);
RunRecord record_from_json(const nlohmann::json& j);
std::vector<RunRecord> records_from_json(const nlohmann::json& j);

// Writes to `path`, throwing IoError if it cannot be opened or written.
void emit_report(const std::vector<RunRecord>& records, ReportFormat format,
                 const std::filesystem::path& path);
void emit_report(const std::vector<RunRecord>& records, ReportFormat format, std::ostream& os);

}  // namespace equil::bench
