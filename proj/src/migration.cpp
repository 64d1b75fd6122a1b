#include "migration.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <thread>

#include "android_model.hpp"
#include "error.hpp"
#include "logging.hpp"
#include "resource_table.hpp"

namespace fs = std::filesystem;

namespace uimigrate {

const char* to_string(FileStatus status) {
    switch (status) {
        case FileStatus::Migrated: return "migrated";
        case FileStatus::Partial: return "partial";
        case FileStatus::Failed: return "failed";
    }
    return "?";
}

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::string relative_to(const fs::path& path, const fs::path& base) {
    std::error_code ec;
    fs::path rel = fs::relative(path, base, ec);
    return ec ? path.generic_string() : rel.generic_string();
}

void write_text(const fs::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorKind::Io, "cannot write " + path.string());
    out << content;
    if (!out) throw Error(ErrorKind::Io, "write failed for " + path.string());
}

struct LayoutOutcome {
    FileReport report;
    std::string swift_content;         // empty when failed
    nlohmann::ordered_json model_json; // set when dump_model
    double parse_ms = 0.0;
    double translate_ms = 0.0;
    double generate_ms = 0.0;
};

// Per-file isolation: any failure here becomes a failed report entry and
// never aborts the run (workers have no other way to surface exceptions).
LayoutOutcome process_layout(const fs::path& path, const fs::path& res_root,
                             const std::map<std::string, fs::path>& layouts,
                             const ResourceTable& table, const TranslatorRegistry& registry,
                             PreviewDialect dialect, bool dump_model) {
    LayoutOutcome outcome;
    outcome.report.source_xml = relative_to(path, res_root);

    auto parse_start = Clock::now();
    try {
        SkeletonBuildResult skeleton = build_skeleton(path, layouts);
        ModelBuildResult model = build_android_model(skeleton.root, table);
        outcome.parse_ms = ms_since(parse_start);
        outcome.report.warnings = std::move(skeleton.warnings);
        outcome.report.warnings.insert(outcome.report.warnings.end(), model.warnings.begin(),
                                       model.warnings.end());
        if (dump_model) outcome.model_json = model_to_json(model.model);

        auto translate_start = Clock::now();
        TranslationResult translation = translate(model.model, registry);
        outcome.translate_ms = ms_since(translate_start);

        outcome.report.stats = translation.stats;
        outcome.report.unmigrated = translation.records;
        outcome.report.warnings.insert(outcome.report.warnings.end(), translation.notes.begin(),
                                       translation.notes.end());

        auto generate_start = Clock::now();
        order_modifiers_recursive(translation.view);
        GeneratedFile file = generate_file(translation.view, outcome.report.source_xml, dialect);
        outcome.report.lint_findings = lint_generated(file.content);
        outcome.generate_ms = ms_since(generate_start);

        outcome.report.target_swift = "Views/" + file.file_name;
        outcome.swift_content = std::move(file.content);
        outcome.report.status =
            translation.records.empty() ? FileStatus::Migrated : FileStatus::Partial;
    } catch (const std::exception& e) {
        outcome = LayoutOutcome{};
        outcome.report.source_xml = relative_to(path, res_root);
        outcome.report.status = FileStatus::Failed;
        outcome.report.error = e.what();
        outcome.parse_ms = ms_since(parse_start);
    }
    return outcome;
}

void migrate_assets(const ResDirectoryIndex& index, const fs::path& out_dir,
                    MigrationReport& report) {
    const fs::path assets_dir = out_dir / "Assets";

    auto migrate_one = [&](const fs::path& path, bool qualified) {
        AssetReport asset;
        asset.source = path.generic_string();
        FileClassification classified = classify_resource_file(path);
        asset.action = to_string(classified.action);
        if (qualified) {
            asset.status = "skipped: qualified resource variant";
            report.assets.push_back(std::move(asset));
            return;
        }
        try {
            switch (classified.action) {
                case MigrationAction::CopyImage:
                case MigrationAction::CopyRawMedia: {
                    fs::create_directories(assets_dir);
                    const fs::path target = assets_dir / path.filename();
                    fs::copy_file(path, target, fs::copy_options::overwrite_existing);
                    asset.target = relative_to(target, out_dir);
                    asset.status = "ok";
                    break;
                }
                case MigrationAction::ConvertVectorToSvg: {
                    const std::string svg = convert_vector_to_svg(read_text_file(path));
                    fs::create_directories(assets_dir);
                    const fs::path target = assets_dir / (path.stem().string() + ".svg");
                    write_text(target, svg);
                    asset.target = relative_to(target, out_dir);
                    asset.status = "ok";
                    break;
                }
                case MigrationAction::ReportOnly:
                    asset.status = classified.reason.empty() ? "not migrated" : classified.reason;
                    break;
                case MigrationAction::TranslateLayout:
                    // handled by the layout pipeline
                    return;
            }
        } catch (const std::exception& e) {
            asset.action = to_string(MigrationAction::ReportOnly);
            asset.status = e.what();
        }
        report.assets.push_back(std::move(asset));
    };

    for (const auto& path : index.drawable_files) {
        migrate_one(path, path.parent_path().filename() != "drawable");
    }
    for (const auto& path : index.raw_files) {
        migrate_one(path, path.parent_path().filename() != "raw");
    }
    for (const auto& path : index.other_files) {
        migrate_one(path, false);
    }
}

} // namespace

MigrationReport run_migration(const MigrationConfig& config) {
    auto total_start = Clock::now();

    std::error_code ec;
    if (!fs::is_directory(config.res_root, ec)) {
        throw Error(ErrorKind::Io,
                    "res directory not found or unreadable: " + config.res_root.string());
    }
    const fs::path res_canonical = fs::weakly_canonical(config.res_root, ec);
    const fs::path out_canonical = fs::weakly_canonical(config.out_dir, ec);
    if (config.out_dir.empty() || res_canonical == out_canonical) {
        throw Error(ErrorKind::InvalidArgument,
                    "output directory must differ from the res directory");
    }

    MigrationReport report;
    report.app_name = config.res_root.filename() == "res" && config.res_root.has_parent_path()
                          ? config.res_root.parent_path().filename().string()
                          : config.res_root.filename().string();
    if (report.app_name.empty()) report.app_name = config.res_root.string();

    // Parse stage: index, values, file-backed resources.
    auto parse_start = Clock::now();
    const ResDirectoryIndex index = index_res_directory(config.res_root);

    std::vector<fs::path> base_values;
    for (const auto& path : index.values_files) {
        if (path.parent_path().filename() == "values") {
            base_values.push_back(path);
        } else {
            report.skipped_variants.push_back(relative_to(path, config.res_root));
        }
    }
    ValuesParseResult values = parse_values_files(base_values);
    std::vector<RawResourceEntry> entries = std::move(values.entries);
    for (auto& entry : index_file_resources(index)) entries.push_back(std::move(entry));
    ResourceTable table = resolve_references(entries);

    report.resource_warnings = std::move(values.warnings);
    report.resource_warnings.insert(report.resource_warnings.end(), table.warnings.begin(),
                                    table.warnings.end());
    report.elapsed.parse_ms += ms_since(parse_start);

    fs::create_directories(config.out_dir);
    migrate_assets(index, config.out_dir, report);

    // Layout stage: unqualified layouts only, path-sorted.
    std::vector<fs::path> layout_paths;
    for (const auto& path : index.layout_files) {
        if (path.parent_path().filename() == "layout" && path.extension() == ".xml") {
            layout_paths.push_back(path);
        } else {
            report.skipped_variants.push_back(relative_to(path, config.res_root));
        }
    }
    std::sort(report.skipped_variants.begin(), report.skipped_variants.end());

    const std::map<std::string, fs::path> layouts = layouts_by_name(index);
    const TranslatorRegistry registry = TranslatorRegistry::standard();

    std::vector<LayoutOutcome> outcomes(layout_paths.size());
    const unsigned worker_count =
        std::min({std::max(1u, std::thread::hardware_concurrency()), 8u,
                  static_cast<unsigned>(layout_paths.size())});
    if (layout_paths.size() < 2 || worker_count < 2) {
        for (size_t i = 0; i < layout_paths.size(); ++i) {
            outcomes[i] = process_layout(layout_paths[i], config.res_root, layouts, table,
                                         registry, config.preview_dialect, config.dump_model);
        }
    } else {
        std::atomic<size_t> next{0};
        auto worker = [&] {
            for (;;) {
                const size_t i = next.fetch_add(1);
                if (i >= layout_paths.size()) return;
                outcomes[i] = process_layout(layout_paths[i], config.res_root, layouts, table,
                                             registry, config.preview_dialect, config.dump_model);
            }
        };
        std::vector<std::thread> threads;
        for (unsigned t = 0; t < worker_count; ++t) threads.emplace_back(worker);
        for (auto& thread : threads) thread.join();
    }

    // Single-writer reduction in path-sorted order.
    const fs::path views_dir = config.out_dir / "Views";
    const fs::path models_dir = config.out_dir / "Models";
    for (auto& outcome : outcomes) {
        report.elapsed.parse_ms += outcome.parse_ms;
        report.elapsed.translate_ms += outcome.translate_ms;
        report.elapsed.generate_ms += outcome.generate_ms;

        if (!outcome.swift_content.empty()) {
            fs::create_directories(views_dir);
            write_text(config.out_dir / outcome.report.target_swift, outcome.swift_content);
        }
        if (config.dump_model && !outcome.model_json.is_null()) {
            fs::create_directories(models_dir);
            const fs::path target =
                models_dir / (fs::path(outcome.report.source_xml).stem().string() + ".json");
            write_text(target, outcome.model_json.dump(2) + "\n");
        }

        report.totals.xml_total += 1;
        if (outcome.report.status == FileStatus::Migrated) report.totals.xml_migrated += 1;
        report.totals.layouts_total += outcome.report.stats.layouts_total;
        report.totals.layouts_migrated += outcome.report.stats.layouts_migrated;
        report.totals.views_total += outcome.report.stats.views_total;
        report.totals.views_migrated += outcome.report.stats.views_migrated;
        report.totals.lint_findings += static_cast<int>(outcome.report.lint_findings.size());
        report.files.push_back(std::move(outcome.report));
    }

    report.elapsed.total_ms = ms_since(total_start);

    const fs::path report_path = config.report_path.empty()
                                     ? config.out_dir / "migration_report.json"
                                     : config.report_path;
    write_report(report, report_path);
    log_info("migrated " + std::to_string(report.totals.xml_migrated) + "/" +
             std::to_string(report.totals.xml_total) + " layout files from " +
             config.res_root.string());
    return report;
}

ReportTotals recompute_totals(const MigrationReport& report) {
    ReportTotals totals;
    for (const auto& file : report.files) {
        totals.xml_total += 1;
        if (file.status == FileStatus::Migrated) totals.xml_migrated += 1;
        totals.layouts_total += file.stats.layouts_total;
        totals.layouts_migrated += file.stats.layouts_migrated;
        totals.views_total += file.stats.views_total;
        totals.views_migrated += file.stats.views_migrated;
        totals.lint_findings += static_cast<int>(file.lint_findings.size());
    }
    return totals;
}

namespace {

nlohmann::ordered_json record_to_json(const UnmigratedRecord& record) {
    nlohmann::ordered_json j;
    j["kind"] = record.kind;
    j["reason"] = to_string(record.reason);
    j["source"] = record.location.to_string();
    j["substituted_with"] = record.substituted_with;
    if (!record.detail.empty()) j["detail"] = record.detail;
    return j;
}

} // namespace

nlohmann::ordered_json report_to_json(const MigrationReport& report) {
    nlohmann::ordered_json j;
    j["app_name"] = report.app_name;

    auto files = nlohmann::ordered_json::array();
    for (const auto& file : report.files) {
        nlohmann::ordered_json f;
        f["source_xml"] = file.source_xml;
        f["target_swift"] = file.target_swift;
        f["status"] = to_string(file.status);
        f["layouts_total"] = file.stats.layouts_total;
        f["layouts_migrated"] = file.stats.layouts_migrated;
        f["views_total"] = file.stats.views_total;
        f["views_migrated"] = file.stats.views_migrated;
        auto unmigrated = nlohmann::ordered_json::array();
        for (const auto& record : file.unmigrated) unmigrated.push_back(record_to_json(record));
        f["unmigrated"] = std::move(unmigrated);
        auto findings = nlohmann::ordered_json::array();
        for (const auto& finding : file.lint_findings) {
            findings.push_back({{"line", finding.line}, {"message", finding.message}});
        }
        f["lint_findings"] = std::move(findings);
        f["warnings"] = file.warnings;
        if (!file.error.empty()) f["error"] = file.error;
        files.push_back(std::move(f));
    }
    j["files"] = std::move(files);

    auto assets = nlohmann::ordered_json::array();
    for (const auto& asset : report.assets) {
        nlohmann::ordered_json a;
        a["source"] = asset.source;
        if (!asset.target.empty()) a["target"] = asset.target;
        a["action"] = asset.action;
        a["status"] = asset.status;
        assets.push_back(std::move(a));
    }
    j["assets"] = std::move(assets);
    j["skipped_variants"] = report.skipped_variants;
    j["resource_warnings"] = report.resource_warnings;

    j["totals"] = {{"xml_total", report.totals.xml_total},
                   {"xml_migrated", report.totals.xml_migrated},
                   {"layouts_total", report.totals.layouts_total},
                   {"layouts_migrated", report.totals.layouts_migrated},
                   {"views_total", report.totals.views_total},
                   {"views_migrated", report.totals.views_migrated},
                   {"lint_findings", report.totals.lint_findings}};
    j["elapsed_ms"] = {{"parse", report.elapsed.parse_ms},
                       {"translate", report.elapsed.translate_ms},
                       {"generate", report.elapsed.generate_ms},
                       {"total", report.elapsed.total_ms}};
    return j;
}

std::string report_to_markdown(const MigrationReport& report) {
    auto percentage = [](int part, int whole) {
        if (whole == 0) return std::string("-");
        char buffer[32];
        std::snprintf(buffer, sizeof(buffer), "%.2f%%", 100.0 * part / whole);
        return std::string(buffer);
    };

    std::string out;
    out += "| App | XML Migd | Layouts Migd | Views Migd | Syntax Errs |\n";
    out += "| --- | --- | --- | --- | --- |\n";
    out += "| " + report.app_name;
    out += " | " + std::to_string(report.totals.xml_migrated) + " (" +
           percentage(report.totals.xml_migrated, report.totals.xml_total) + ")";
    out += " | " + std::to_string(report.totals.layouts_migrated) + " (" +
           percentage(report.totals.layouts_migrated, report.totals.layouts_total) + ")";
    out += " | " + std::to_string(report.totals.views_migrated) + " (" +
           percentage(report.totals.views_migrated, report.totals.views_total) + ")";
    out += " | " + std::to_string(report.totals.lint_findings) + " |\n";
    return out;
}

void write_report(const MigrationReport& report, const fs::path& path) {
    if (recompute_totals(report) != report.totals) {
        throw Error(ErrorKind::Internal, "report totals do not match the files array");
    }
    if (path.has_parent_path()) fs::create_directories(path.parent_path());
    write_text(path, report_to_json(report).dump(2) + "\n");
}

} // namespace uimigrate
