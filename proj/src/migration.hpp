#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "swift_codegen.hpp"
#include "translator.hpp"

namespace uimigrate {

enum class FileStatus { Migrated, Partial, Failed };

const char* to_string(FileStatus status);

struct FileReport {
    std::string source_xml;     // relative to the res root
    std::string target_swift;   // relative to the out dir, empty when failed
    FileStatus status = FileStatus::Migrated;
    TranslationStats stats;
    std::vector<UnmigratedRecord> unmigrated;
    std::vector<LintFinding> lint_findings;
    std::vector<std::string> warnings;
    std::string error;          // parse failure message for Failed
};

struct AssetReport {
    std::string source;
    std::string target;  // empty when not migrated
    std::string action;
    std::string status;  // "ok" or the reason it was skipped
};

struct StageTimings {
    double parse_ms = 0.0;
    double translate_ms = 0.0;
    double generate_ms = 0.0;
    double total_ms = 0.0;
};

struct ReportTotals {
    int xml_total = 0;
    int xml_migrated = 0;
    int layouts_total = 0;
    int layouts_migrated = 0;
    int views_total = 0;
    int views_migrated = 0;
    int lint_findings = 0;

    bool operator==(const ReportTotals&) const = default;
};

struct MigrationReport {
    std::string app_name;
    std::vector<FileReport> files;
    std::vector<AssetReport> assets;
    std::vector<std::string> skipped_variants;
    std::vector<std::string> resource_warnings;
    ReportTotals totals;
    StageTimings elapsed;
};

struct MigrationConfig {
    std::filesystem::path res_root;
    std::filesystem::path out_dir;
    std::filesystem::path report_path;  // default: <out_dir>/migration_report.json
    PreviewDialect preview_dialect = PreviewDialect::Macro;
    bool resize_images = false;
    bool dump_model = false;
};

// Drives parse -> resolve -> translate -> generate -> report over a res
// directory. Per-file errors are isolated as failed entries; throws Error
// only on fatal conditions (unreadable res root, unwritable output).
MigrationReport run_migration(const MigrationConfig& config);

ReportTotals recompute_totals(const MigrationReport& report);

nlohmann::ordered_json report_to_json(const MigrationReport& report);

std::string report_to_markdown(const MigrationReport& report);

// Validates totals against the files array, then writes stable-key-ordered
// JSON. Re-running on unchanged input is byte-identical except elapsed_ms.
void write_report(const MigrationReport& report, const std::filesystem::path& path);

} // namespace uimigrate
