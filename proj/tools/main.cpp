#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "uimigrate.h"

namespace {

int fail_with_last_error(const std::string& prefix) {
    std::cerr << prefix << ": " << uim_last_error() << "\n";
    return 1;
}

bool read_file(const std::string& path, std::string& out) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return false;
    std::ostringstream buffer;
    buffer << in.rdbuf();
    out = buffer.str();
    return true;
}

struct OptionsDeleter {
    void operator()(uim_options* o) const { uim_options_free(o); }
};

struct ReportDeleter {
    void operator()(uim_report* r) const { uim_report_free(r); }
};

int run_migrate(const std::string& res_dir, const std::string& out_dir,
                const std::string& report_path, const std::string& dialect, bool dump_model,
                bool markdown) {
    std::unique_ptr<uim_options, OptionsDeleter> options(uim_options_new());
    uim_options_set_res_root(options.get(), res_dir.c_str());
    uim_options_set_out_dir(options.get(), out_dir.c_str());
    if (!report_path.empty()) uim_options_set_report_path(options.get(), report_path.c_str());
    if (uim_options_set_preview_dialect(options.get(), dialect.c_str()) != UIM_OK) {
        return fail_with_last_error("uimigrate");
    }
    uim_options_set_dump_model(options.get(), dump_model ? 1 : 0);

    uim_report* raw_report = nullptr;
    if (uim_migrate(options.get(), &raw_report) != UIM_OK) {
        return fail_with_last_error("uimigrate");
    }
    std::unique_ptr<uim_report, ReportDeleter> report(raw_report);

    uim_totals totals{};
    uim_report_totals(report.get(), &totals);
    std::printf("migrated %d/%d layout files (%d partial, %d failed)\n", totals.xml_migrated,
                totals.xml_total, totals.xml_total - totals.xml_migrated - totals.files_failed,
                totals.files_failed);
    std::printf("layouts %d/%d, views %d/%d, lint findings %d\n", totals.layouts_migrated,
                totals.layouts_total, totals.views_migrated, totals.views_total,
                totals.lint_findings);

    if (markdown) {
        char* table = uim_report_markdown(report.get());
        if (table != nullptr) {
            std::printf("%s", table);
            uim_string_free(table);
        }
    }
    return 0;
}

int run_eval_code(const std::string& original_path, const std::string& migrated_path, bool json) {
    std::string original, migrated;
    if (!read_file(original_path, original)) {
        std::cerr << "uimigrate: cannot read " << original_path << "\n";
        return 1;
    }
    if (!read_file(migrated_path, migrated)) {
        std::cerr << "uimigrate: cannot read " << migrated_path << "\n";
        return 1;
    }
    double crc_value = 0.0, ccr_value = 0.0;
    if (uim_eval_code(original.c_str(), migrated.c_str(), &crc_value, &ccr_value) != UIM_OK) {
        return fail_with_last_error("uimigrate");
    }
    if (json) {
        std::printf("{\"crc\": %.6f, \"ccr\": %.6f}\n", crc_value, ccr_value);
    } else {
        std::printf("CRC: %.2f%%\n", crc_value * 100.0);
        std::printf("CCR: %.2f%%\n", ccr_value * 100.0);
    }
    return 0;
}

int run_eval_ssim(const std::string& image_a, const std::string& image_b, bool resize, bool json) {
    double value = 0.0, raw = 0.0;
    if (uim_eval_ssim_files(image_a.c_str(), image_b.c_str(), resize ? 1 : 0, &value, &raw) !=
        UIM_OK) {
        return fail_with_last_error("uimigrate");
    }
    if (json) {
        std::printf("{\"ssim\": %.6f, \"ssim_raw\": %.6f}\n", value, raw);
    } else {
        std::printf("SSIM: %.2f%%\n", value * 100.0);
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Android layout XML to SwiftUI source converter"};
    app.set_version_flag("--version", uim_version());
    app.require_subcommand(1);

    // migrate
    auto* migrate = app.add_subcommand("migrate", "Convert a res directory to SwiftUI sources");
    std::string res_dir, out_dir, report_path;
    std::string dialect = "macro";
    bool dump_model = false, markdown = false, list_rules = false;
    migrate->add_option("res-dir", res_dir, "Android res directory");
    migrate->add_option("-o,--out", out_dir, "output directory");
    migrate->add_option("--report", report_path, "report path (default <out>/migration_report.json)");
    migrate->add_option("--preview-dialect", dialect, "preview section dialect: macro|provider")
        ->check(CLI::IsMember({"macro", "provider"}));
    migrate->add_flag("--dump-model", dump_model, "write intermediate models as JSON");
    migrate->add_flag("--markdown", markdown, "print a Markdown summary table");
    migrate->add_flag("--list-rules", list_rules, "print supported kinds and properties, then exit");

    // eval
    auto* eval = app.add_subcommand("eval", "Evaluation metrics");
    eval->require_subcommand(1);

    auto* eval_code = eval->add_subcommand("code", "CRC/CCR between two source files");
    std::string original_path, migrated_path;
    bool code_json = false;
    eval_code->add_option("--original", original_path, "original source file")->required();
    eval_code->add_option("--migrated", migrated_path, "migrated source file")->required();
    eval_code->add_flag("--json", code_json, "emit a JSON metric report");

    auto* eval_ssim = eval->add_subcommand("ssim", "structural similarity between two PNG images");
    std::string image_a, image_b;
    bool resize = false, ssim_json = false;
    eval_ssim->add_option("image-a", image_a, "first image")->required();
    eval_ssim->add_option("image-b", image_b, "second image")->required();
    eval_ssim->add_flag("--resize", resize, "resize the second image to the first's dimensions");
    eval_ssim->add_flag("--json", ssim_json, "emit a JSON metric report");

    CLI11_PARSE(app, argc, argv);

    if (migrate->parsed()) {
        if (list_rules) {
            char* rules = uim_list_rules();
            std::printf("%s", rules);
            uim_string_free(rules);
            return 0;
        }
        if (res_dir.empty() || out_dir.empty()) {
            std::cerr << "uimigrate: migrate requires <res-dir> and --out\n";
            return 1;
        }
        return run_migrate(res_dir, out_dir, report_path, dialect, dump_model, markdown);
    }
    if (eval_code->parsed()) return run_eval_code(original_path, migrated_path, code_json);
    if (eval_ssim->parsed()) return run_eval_ssim(image_a, image_b, resize, ssim_json);
    return 0;
}
