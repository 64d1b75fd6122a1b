#include "uimigrate.h"

#include <cstring>
#include <memory>
#include <string>

#include "error.hpp"
#include "metrics.hpp"
#include "migration.hpp"
#include "translator.hpp"

using namespace uimigrate;

struct uim_options {
    MigrationConfig config;
};

struct uim_report {
    MigrationReport report;
    std::string json;
};

namespace {

thread_local std::string g_last_error;

uim_status status_from(const Error& error) {
    switch (error.kind()) {
        case ErrorKind::InvalidArgument: return UIM_ERROR_INVALID_ARGUMENT;
        case ErrorKind::Io: return UIM_ERROR_IO;
        case ErrorKind::Parse: return UIM_ERROR_PARSE;
        case ErrorKind::Unsupported: return UIM_ERROR_UNSUPPORTED;
        case ErrorKind::Internal: return UIM_ERROR_INTERNAL;
    }
    return UIM_ERROR_INTERNAL;
}

uim_status fail(uim_status status, std::string message) {
    g_last_error = std::move(message);
    return status;
}

template <typename Fn>
uim_status guarded(Fn&& fn) {
    try {
        fn();
        g_last_error.clear();
        return UIM_OK;
    } catch (const Error& e) {
        return fail(status_from(e), e.what());
    } catch (const std::exception& e) {
        return fail(UIM_ERROR_INTERNAL, e.what());
    } catch (...) {
        return fail(UIM_ERROR_INTERNAL, "unknown error");
    }
}

char* copy_string(const std::string& text) {
    char* out = new char[text.size() + 1];
    std::memcpy(out, text.c_str(), text.size() + 1);
    return out;
}

} // namespace

extern "C" {

const char* uim_version(void) { return "0.1.0"; }

const char* uim_last_error(void) { return g_last_error.c_str(); }

void uim_string_free(char* text) { delete[] text; }

uim_options* uim_options_new(void) { return new uim_options(); }

void uim_options_free(uim_options* options) { delete options; }

uim_status uim_options_set_res_root(uim_options* options, const char* path) {
    if (options == nullptr || path == nullptr) {
        return fail(UIM_ERROR_INVALID_ARGUMENT, "null argument");
    }
    options->config.res_root = path;
    return UIM_OK;
}

uim_status uim_options_set_out_dir(uim_options* options, const char* path) {
    if (options == nullptr || path == nullptr) {
        return fail(UIM_ERROR_INVALID_ARGUMENT, "null argument");
    }
    options->config.out_dir = path;
    return UIM_OK;
}

uim_status uim_options_set_report_path(uim_options* options, const char* path) {
    if (options == nullptr || path == nullptr) {
        return fail(UIM_ERROR_INVALID_ARGUMENT, "null argument");
    }
    options->config.report_path = path;
    return UIM_OK;
}

uim_status uim_options_set_preview_dialect(uim_options* options, const char* dialect) {
    if (options == nullptr || dialect == nullptr) {
        return fail(UIM_ERROR_INVALID_ARGUMENT, "null argument");
    }
    if (std::strcmp(dialect, "macro") == 0) {
        options->config.preview_dialect = PreviewDialect::Macro;
    } else if (std::strcmp(dialect, "provider") == 0) {
        options->config.preview_dialect = PreviewDialect::Provider;
    } else {
        return fail(UIM_ERROR_INVALID_ARGUMENT,
                    std::string("unknown preview dialect '") + dialect + "'");
    }
    return UIM_OK;
}

uim_status uim_options_set_dump_model(uim_options* options, int enabled) {
    if (options == nullptr) return fail(UIM_ERROR_INVALID_ARGUMENT, "null argument");
    options->config.dump_model = enabled != 0;
    return UIM_OK;
}

uim_status uim_migrate(const uim_options* options, uim_report** out_report) {
    if (options == nullptr || out_report == nullptr) {
        return fail(UIM_ERROR_INVALID_ARGUMENT, "null argument");
    }
    *out_report = nullptr;
    return guarded([&] {
        auto report = std::make_unique<uim_report>();
        report->report = run_migration(options->config);
        report->json = report_to_json(report->report).dump(2) + "\n";
        *out_report = report.release();
    });
}

const char* uim_report_json(const uim_report* report) {
    return report == nullptr ? nullptr : report->json.c_str();
}

char* uim_report_markdown(const uim_report* report) {
    if (report == nullptr) return nullptr;
    return copy_string(report_to_markdown(report->report));
}

uim_status uim_report_totals(const uim_report* report, uim_totals* out_totals) {
    if (report == nullptr || out_totals == nullptr) {
        return fail(UIM_ERROR_INVALID_ARGUMENT, "null argument");
    }
    const ReportTotals& totals = report->report.totals;
    out_totals->xml_total = totals.xml_total;
    out_totals->xml_migrated = totals.xml_migrated;
    out_totals->layouts_total = totals.layouts_total;
    out_totals->layouts_migrated = totals.layouts_migrated;
    out_totals->views_total = totals.views_total;
    out_totals->views_migrated = totals.views_migrated;
    out_totals->lint_findings = totals.lint_findings;
    int failed = 0;
    for (const auto& file : report->report.files) {
        if (file.status == FileStatus::Failed) ++failed;
    }
    out_totals->files_failed = failed;
    return UIM_OK;
}

void uim_report_free(uim_report* report) { delete report; }

char* uim_list_rules(void) {
    const TranslatorRegistry registry = TranslatorRegistry::standard();
    std::string out;
    out += "layouts:\n";
    for (const auto& kind : registry.layout_kinds()) out += "  " + kind + "\n";
    out += "views:\n";
    for (const auto& kind : registry.view_kinds()) out += "  " + kind + "\n";
    out += "properties:\n";
    for (const auto& name : supported_property_names()) out += "  " + name + "\n";
    return copy_string(out);
}

uim_status uim_eval_code(const char* original, const char* migrated, double* out_crc,
                         double* out_ccr) {
    if (original == nullptr || migrated == nullptr) {
        return fail(UIM_ERROR_INVALID_ARGUMENT, "null argument");
    }
    return guarded([&] {
        if (out_crc != nullptr) *out_crc = crc(original, migrated);
        if (out_ccr != nullptr) *out_ccr = ccr(original, migrated);
    });
}

uim_status uim_eval_ssim_files(const char* image_a, const char* image_b, int resize_b_to_a,
                               double* out_ssim, double* out_raw_ssim) {
    if (image_a == nullptr || image_b == nullptr || out_ssim == nullptr) {
        return fail(UIM_ERROR_INVALID_ARGUMENT, "null argument");
    }
    return guarded([&] {
        GrayImage a = load_image_as_gray(image_a);
        GrayImage b = load_image_as_gray(image_b);
        if (resize_b_to_a != 0 && (a.width != b.width || a.height != b.height)) {
            b = bilinear_resize(b, a.width, a.height);
        }
        SsimResult result = ssim(a, b);
        *out_ssim = result.value;
        if (out_raw_ssim != nullptr) *out_raw_ssim = result.raw;
    });
}

} // extern "C"
