#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <set>
#include <unistd.h>

#include "error.hpp"
#include "migration.hpp"
#include "png_io.hpp"

using namespace uimigrate;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() /
               fs::path("uimigrate_pipe_" + std::to_string(::getpid()) + "_" +
                        std::to_string(counter()++));
        fs::create_directories(path);
    }
    ~TempDir() {
        std::error_code ec;
        fs::remove_all(path, ec);
    }
    static int& counter() {
        static int n = 0;
        return n;
    }
};

void write_file(const fs::path& path, const std::string& content) {
    fs::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary);
    out << content;
}

std::string read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

// Copies the checked-in corpus and adds the binary assets the repository
// cannot carry as text.
fs::path stage_mini_corpus(const TempDir& tmp) {
    const fs::path source = fs::path(TEST_DATA_DIR) / "mini_res";
    const fs::path res = tmp.path / "mini_app" / "res";
    fs::create_directories(res.parent_path());
    fs::copy(source, res, fs::copy_options::recursive);

    ImageRGBA logo;
    logo.width = 8;
    logo.height = 8;
    logo.pixels.assign(8 * 8 * 4, 0);
    for (size_t i = 0; i < logo.pixels.size(); i += 4) {
        logo.pixels[i] = 0;
        logo.pixels[i + 1] = 0;
        logo.pixels[i + 2] = 128;
        logo.pixels[i + 3] = 255;
    }
    write_png_rgba(res / "drawable/logo.png", logo);
    write_file(res / "raw/beep.mp3", std::string("ID3fakeaudio"));
    return res;
}

nlohmann::ordered_json strip_elapsed(nlohmann::ordered_json j) {
    j.erase("elapsed_ms");
    return j;
}

} // namespace

TEST_CASE("mini corpus migrates fully with one swift file per layout") {
    TempDir tmp;
    const fs::path res = stage_mini_corpus(tmp);
    MigrationConfig config;
    config.res_root = res;
    config.out_dir = tmp.path / "out";

    MigrationReport report = run_migration(config);

    CHECK(report.app_name == "mini_app");
    CHECK(report.totals.xml_total == 15);
    CHECK(report.totals.xml_migrated == 15);
    CHECK(report.totals.lint_findings == 0);
    CHECK(report.totals.layouts_migrated == report.totals.layouts_total);
    CHECK(report.totals.views_migrated == report.totals.views_total);
    CHECK(report.totals.views_total > 0);

    for (const auto& file : report.files) {
        CAPTURE(file.source_xml);
        CHECK(file.status == FileStatus::Migrated);
        CHECK(file.unmigrated.empty());
        CHECK(file.lint_findings.empty());
        CHECK(fs::exists(config.out_dir / file.target_swift));
        // file stem equals the source XML stem
        CHECK(fs::path(file.target_swift).stem() == fs::path(file.source_xml).stem());
    }

    // one .swift per successfully parsed .xml
    size_t swift_count = 0;
    for (const auto& entry : fs::directory_iterator(config.out_dir / "Views")) {
        if (entry.path().extension() == ".swift") ++swift_count;
    }
    CHECK(swift_count == 15);

    // assets: png and mp3 copied, vector converted
    CHECK(fs::exists(config.out_dir / "Assets/logo.png"));
    CHECK(fs::exists(config.out_dir / "Assets/beep.mp3"));
    CHECK(fs::exists(config.out_dir / "Assets/ic_arrow.svg"));

    // report written and totals recompute
    CHECK(fs::exists(config.out_dir / "migration_report.json"));
    CHECK(recompute_totals(report) == report.totals);

    auto parsed = nlohmann::ordered_json::parse(read_file(config.out_dir /
                                                          "migration_report.json"));
    CHECK(parsed["totals"]["xml_migrated"] == 15);
    CHECK(parsed["files"].size() == 15);
}

TEST_CASE("empty res directory reports zero totals") {
    TempDir tmp;
    fs::create_directories(tmp.path / "res");
    MigrationConfig config;
    config.res_root = tmp.path / "res";
    config.out_dir = tmp.path / "out";
    MigrationReport report = run_migration(config);
    CHECK(report.totals.xml_total == 0);
    CHECK(report.totals.views_total == 0);
    CHECK(report.files.empty());
    CHECK(fs::exists(config.out_dir / "migration_report.json"));
}

TEST_CASE("a third-party view makes its file partial, the rest still migrate") {
    TempDir tmp;
    const fs::path res = stage_mini_corpus(tmp);
    write_file(res / "layout/widgety.xml",
               "<LinearLayout xmlns:android=\"http://schemas.android.com/apk/res/android\" "
               "android:orientation=\"vertical\">"
               "<com.kyleduo.switchbutton.SwitchButton/></LinearLayout>");
    MigrationConfig config;
    config.res_root = res;
    config.out_dir = tmp.path / "out";

    MigrationReport report = run_migration(config);
    CHECK(report.totals.xml_total == 16);
    CHECK(report.totals.xml_migrated == 15);

    bool found = false;
    for (const auto& file : report.files) {
        if (file.source_xml.find("widgety") == std::string::npos) {
            CHECK(file.status == FileStatus::Migrated);
            continue;
        }
        found = true;
        CHECK(file.status == FileStatus::Partial);
        REQUIRE(file.unmigrated.size() == 1);
        CHECK(file.unmigrated[0].kind == "com.kyleduo.switchbutton.SwitchButton");
        CHECK(file.unmigrated[0].reason == UnmigratedReason::ThirdParty);
        // the placeholder file still renders and lints clean
        CHECK(file.lint_findings.empty());
    }
    CHECK(found);
}

TEST_CASE("a malformed layout is isolated as a failed entry") {
    TempDir tmp;
    const fs::path res = stage_mini_corpus(tmp);
    write_file(res / "layout/broken.xml", "<LinearLayout><TextView</LinearLayout>");
    MigrationConfig config;
    config.res_root = res;
    config.out_dir = tmp.path / "out";

    MigrationReport report = run_migration(config);
    CHECK(report.totals.xml_total == 16);
    CHECK(report.totals.xml_migrated == 15);

    int failed = 0;
    for (const auto& file : report.files) {
        if (file.status == FileStatus::Failed) {
            ++failed;
            CHECK(file.source_xml.find("broken") != std::string::npos);
            CHECK(file.target_swift.empty());
            CHECK(file.error.find("broken.xml") != std::string::npos);
        }
    }
    CHECK(failed == 1);

    // failed files emit no swift output: 15 files for 15 parsed layouts
    size_t swift_count = 0;
    for (const auto& entry : fs::directory_iterator(config.out_dir / "Views")) {
        if (entry.path().extension() == ".swift") ++swift_count;
    }
    CHECK(swift_count == 15);
}

TEST_CASE("two runs produce byte-identical swift files and reports modulo elapsed") {
    TempDir tmp;
    const fs::path res = stage_mini_corpus(tmp);

    MigrationConfig first;
    first.res_root = res;
    first.out_dir = tmp.path / "out1";
    MigrationConfig second;
    second.res_root = res;
    second.out_dir = tmp.path / "out2";

    run_migration(first);
    run_migration(second);

    std::set<std::string> names;
    for (const auto& entry : fs::directory_iterator(first.out_dir / "Views")) {
        names.insert(entry.path().filename().string());
    }
    REQUIRE(!names.empty());
    for (const auto& name : names) {
        CAPTURE(name);
        CHECK(read_file(first.out_dir / "Views" / name) ==
              read_file(second.out_dir / "Views" / name));
    }

    auto report1 =
        nlohmann::ordered_json::parse(read_file(first.out_dir / "migration_report.json"));
    auto report2 =
        nlohmann::ordered_json::parse(read_file(second.out_dir / "migration_report.json"));
    CHECK(strip_elapsed(report1).dump(2) == strip_elapsed(report2).dump(2));
}

TEST_CASE("qualified variants are listed, not migrated") {
    TempDir tmp;
    const fs::path res = stage_mini_corpus(tmp);
    write_file(res / "layout-land/login.xml", "<LinearLayout/>");
    write_file(res / "values-night/colors.xml",
               "<resources><color name=\"account\">#FFFFFF</color></resources>");
    MigrationConfig config;
    config.res_root = res;
    config.out_dir = tmp.path / "out";

    MigrationReport report = run_migration(config);
    CHECK(report.totals.xml_total == 15);
    REQUIRE(report.skipped_variants.size() == 2);
    CHECK(report.skipped_variants[0].find("layout-land") != std::string::npos);
    CHECK(report.skipped_variants[1].find("values-night") != std::string::npos);

    // base colors still apply: the night variant must not override
    bool login_checked = false;
    for (const auto& file : report.files) {
        if (file.source_xml != "layout/login.xml") continue;
        login_checked = true;
        std::string swift = read_file(config.out_dir / file.target_swift);
        CHECK(swift.find("Color(red: 0.0, green: 0.0, blue: 0.50196)") != std::string::npos);
    }
    CHECK(login_checked);
}

TEST_CASE("res root equal to out dir is rejected") {
    TempDir tmp;
    fs::create_directories(tmp.path / "res");
    MigrationConfig config;
    config.res_root = tmp.path / "res";
    config.out_dir = tmp.path / "res";
    CHECK_THROWS_AS(run_migration(config), Error);
}

TEST_CASE("missing res root is fatal") {
    TempDir tmp;
    MigrationConfig config;
    config.res_root = tmp.path / "absent";
    config.out_dir = tmp.path / "out";
    CHECK_THROWS_AS(run_migration(config), Error);
}

TEST_CASE("report writing guards the totals invariant") {
    TempDir tmp;
    MigrationReport report;
    report.app_name = "x";
    FileReport file;
    file.source_xml = "layout/a.xml";
    file.status = FileStatus::Migrated;
    file.stats.views_total = 2;
    file.stats.views_migrated = 2;
    report.files.push_back(file);
    report.totals.xml_total = 1;
    report.totals.xml_migrated = 1;
    report.totals.views_total = 99;  // inconsistent on purpose
    report.totals.views_migrated = 2;
    CHECK_THROWS_AS(write_report(report, tmp.path / "r.json"), Error);
    CHECK_FALSE(fs::exists(tmp.path / "r.json"));

    report.totals.views_total = 2;
    write_report(report, tmp.path / "r.json");
    CHECK(fs::exists(tmp.path / "r.json"));
}

TEST_CASE("markdown summary mirrors the totals columns") {
    MigrationReport report;
    report.app_name = "demo";
    report.totals = {10, 9, 20, 19, 30, 27, 3};
    std::string markdown = report_to_markdown(report);
    CHECK(markdown.find("| App | XML Migd | Layouts Migd | Views Migd | Syntax Errs |") !=
          std::string::npos);
    CHECK(markdown.find("| demo | 9 (90.00%) | 19 (95.00%) | 27 (90.00%) | 3 |") !=
          std::string::npos);
}

TEST_CASE("dump-model writes one JSON model per layout") {
    TempDir tmp;
    const fs::path res = stage_mini_corpus(tmp);
    MigrationConfig config;
    config.res_root = res;
    config.out_dir = tmp.path / "out";
    config.dump_model = true;
    run_migration(config);
    CHECK(fs::exists(config.out_dir / "Models/login.json"));
    auto model = nlohmann::ordered_json::parse(read_file(config.out_dir / "Models/login.json"));
    CHECK(model["kind"] == "RelativeLayout");
}

TEST_CASE("provider preview dialect flows through the pipeline") {
    TempDir tmp;
    const fs::path res = stage_mini_corpus(tmp);
    MigrationConfig config;
    config.res_root = res;
    config.out_dir = tmp.path / "out";
    config.preview_dialect = PreviewDialect::Provider;
    MigrationReport report = run_migration(config);
    CHECK(report.totals.lint_findings == 0);
    std::string swift = read_file(config.out_dir / "Views/login.swift");
    CHECK(swift.find("PreviewProvider") != std::string::npos);
}
