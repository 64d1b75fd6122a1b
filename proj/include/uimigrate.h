/*
 * uimigrate - Android layout XML to SwiftUI source converter.
 *
 * C API for the shared library. All functions returning uim_status set a
 * thread-local error message readable through uim_last_error() on failure.
 * Strings returned as char* are owned by the caller and released with
 * uim_string_free(); const char* results are borrowed from the owning handle.
 */
#ifndef UIMIGRATE_H
#define UIMIGRATE_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum uim_status {
    UIM_OK = 0,
    UIM_ERROR_INVALID_ARGUMENT = 1,
    UIM_ERROR_IO = 2,
    UIM_ERROR_PARSE = 3,
    UIM_ERROR_UNSUPPORTED = 4,
    UIM_ERROR_INTERNAL = 5,
} uim_status;

typedef struct uim_options uim_options;  /* migration configuration */
typedef struct uim_report uim_report;    /* migration report */

const char* uim_version(void);

/* Message for the most recent failing call on this thread; empty otherwise. */
const char* uim_last_error(void);

void uim_string_free(char* text);

/* ---- migration -------------------------------------------------------- */

uim_options* uim_options_new(void);
void uim_options_free(uim_options* options);

uim_status uim_options_set_res_root(uim_options* options, const char* path);
uim_status uim_options_set_out_dir(uim_options* options, const char* path);
uim_status uim_options_set_report_path(uim_options* options, const char* path);
/* dialect: "macro" (default) or "provider" */
uim_status uim_options_set_preview_dialect(uim_options* options, const char* dialect);
uim_status uim_options_set_dump_model(uim_options* options, int enabled);

/* Runs the pipeline; writes Swift files, assets, and the report JSON.
 * Partial migrations still return UIM_OK; only fatal conditions fail. */
uim_status uim_migrate(const uim_options* options, uim_report** out_report);

/* Borrowed JSON text, valid until uim_report_free. */
const char* uim_report_json(const uim_report* report);

/* Summary table in Markdown. */
char* uim_report_markdown(const uim_report* report);

typedef struct uim_totals {
    int xml_total;
    int xml_migrated;
    int layouts_total;
    int layouts_migrated;
    int views_total;
    int views_migrated;
    int lint_findings;
    int files_failed;
} uim_totals;

uim_status uim_report_totals(const uim_report* report, uim_totals* out_totals);

void uim_report_free(uim_report* report);

/* Supported layout kinds, view kinds, and properties as display text. */
char* uim_list_rules(void);

/* ---- evaluation metrics ------------------------------------------------ */

/* Code Relative Change and Code Change Rate between two source texts. */
uim_status uim_eval_code(const char* original, const char* migrated, double* out_crc,
                         double* out_ccr);

/* Mean structural similarity between two PNG files. When resize_b_to_a is
 * nonzero, the second image is bilinearly resized to the first image's
 * dimensions. out_raw_ssim (optional) receives the unclamped mean. */
uim_status uim_eval_ssim_files(const char* image_a, const char* image_b, int resize_b_to_a,
                               double* out_ssim, double* out_raw_ssim);

#ifdef __cplusplus
}
#endif

#endif /* UIMIGRATE_H */
