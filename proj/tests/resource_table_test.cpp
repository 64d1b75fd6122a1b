#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <random>
#include <unistd.h>

#include "error.hpp"
#include "resource_table.hpp"

using namespace uimigrate;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() /
               fs::path("uimigrate_res_" + std::to_string(::getpid()) + "_" +
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

RawResourceEntry color_entry(std::string name, std::string value) {
    return {ResourceKind::Color, std::move(name), std::move(value), {}, "test"};
}

} // namespace

// ---- adapt_color ----------------------------------------------------------

TEST_CASE("adapt_color worked values") {
    ColorRGBA navy = adapt_color("#000080");
    CHECK(navy.red == 0.0);
    CHECK(navy.green == 0.0);
    CHECK(navy.blue == doctest::Approx(128.0 / 255.0).epsilon(1e-12));
    CHECK(navy.alpha == 1.0);

    ColorRGBA white = adapt_color("#FFFFFF");
    CHECK(white == ColorRGBA{1.0, 1.0, 1.0, 1.0});

    // each channel divided by 255, alpha first in 8-digit form
    ColorRGBA argb = adapt_color("#80FF8040");
    CHECK(argb.alpha == doctest::Approx(0.50196).epsilon(1e-5));
    CHECK(argb.red == 1.0);
    CHECK(argb.green == doctest::Approx(0.50196).epsilon(1e-5));
    CHECK(argb.blue == doctest::Approx(0.25098).epsilon(1e-5));
}

TEST_CASE("adapt_color shorthand expands nibbles") {
    ColorRGBA c = adapt_color("#F80");
    CHECK(c.red == 1.0);
    CHECK(c.green == doctest::Approx(0x88 / 255.0).epsilon(1e-12));
    CHECK(c.blue == 0.0);
    CHECK(adapt_color("#abc") == adapt_color("#AABBCC"));
}

TEST_CASE("adapt_color rejects malformed input naming the value") {
    for (const char* bad : {"", "000080", "#0008", "#00008", "#GGGGGG", "#0000800", "red"}) {
        try {
            adapt_color(bad);
            FAIL_CHECK("expected error for ", bad);
        } catch (const Error& e) {
            CHECK(std::string(e.what()).find(bad) != std::string::npos);
        }
    }
}

TEST_CASE("color round-trip through x255 and rounding") {
    std::mt19937 rng(424242);
    std::uniform_int_distribution<int> byte(0, 255);
    for (int i = 0; i < 1000; ++i) {
        int r = byte(rng), g = byte(rng), b = byte(rng);
        char hex[8];
        std::snprintf(hex, sizeof(hex), "#%02X%02X%02X", r, g, b);
        ColorRGBA c = adapt_color(hex);
        CHECK(static_cast<int>(std::lround(c.red * 255.0)) == r);
        CHECK(static_cast<int>(std::lround(c.green * 255.0)) == g);
        CHECK(static_cast<int>(std::lround(c.blue * 255.0)) == b);
        CHECK(c.alpha == 1.0);
    }
}

// ---- adapt_dimension --------------------------------------------------------

TEST_CASE("adapt_dimension maps units 1:1") {
    CHECK(adapt_dimension("14dp") == Dimension{14.0, DimensionUnit::Dp});
    CHECK(adapt_dimension("0dp") == Dimension{0.0, DimensionUnit::Dp});
    CHECK(adapt_dimension("12.5sp") == Dimension{12.5, DimensionUnit::Sp});
    CHECK(adapt_dimension("3dip") == Dimension{3.0, DimensionUnit::Dp});
    CHECK(adapt_dimension("7px") == Dimension{7.0, DimensionUnit::Px});
    CHECK(adapt_dimension("42") == Dimension{42.0, DimensionUnit::None});
    CHECK(adapt_dimension("-8dp") == Dimension{-8.0, DimensionUnit::Dp});
}

TEST_CASE("adapt_dimension rejects non-numeric prefixes") {
    for (const char* bad : {"", "dp", "abcdp", "12qq", "--3dp"}) {
        CHECK_THROWS_AS(adapt_dimension(bad), Error);
    }
}

// ---- parse_values_files -----------------------------------------------------

TEST_CASE("parse_values_files extracts color/string/dimen/style entries") {
    TempDir tmp;
    write_file(tmp.path / "values/colors.xml", R"(<resources>
    <color name="account">#000080</color>
    <color name="textColor">@color/account</color>
</resources>)");
    write_file(tmp.path / "values/dimens.xml", R"(<resources>
    <dimen name="pad">14dp</dimen>
    <bool name="flag">true</bool>
</resources>)");
    write_file(tmp.path / "values/styles.xml", R"(<resources>
    <style name="Title" parent="Base">
        <item name="android:textSize">18sp</item>
    </style>
    <style name="Base">
        <item name="android:textColor">#FF0000</item>
    </style>
</resources>)");

    ValuesParseResult result = parse_values_files(
        {tmp.path / "values/colors.xml", tmp.path / "values/dimens.xml",
         tmp.path / "values/styles.xml"});
    REQUIRE(result.entries.size() == 5);
    CHECK(result.entries[0].kind == ResourceKind::Color);
    CHECK(result.entries[0].name == "account");
    CHECK(result.entries[0].raw_value == "#000080");
    CHECK(result.entries[1].raw_value == "@color/account");
    CHECK(result.entries[2].kind == ResourceKind::Dimen);
    CHECK(result.entries[2].raw_value == "14dp");
    CHECK(result.entries[3].kind == ResourceKind::Style);
    CHECK(result.entries[3].raw_value == "Base");
    REQUIRE(result.entries[3].style_items.size() == 1);
    CHECK(result.entries[3].style_items[0] ==
          std::pair<std::string, std::string>{"android:textSize", "18sp"});
    // the <bool> element is skipped with a warning
    REQUIRE(result.warnings.size() == 1);
    CHECK(result.warnings[0].find("bool") != std::string::npos);
}

TEST_CASE("empty values file yields no entries") {
    TempDir tmp;
    write_file(tmp.path / "values/empty.xml", "<resources/>");
    ValuesParseResult result = parse_values_files({tmp.path / "values/empty.xml"});
    CHECK(result.entries.empty());
    CHECK(result.warnings.empty());
}

TEST_CASE("malformed values file is isolated per file") {
    TempDir tmp;
    write_file(tmp.path / "values/bad.xml", "<resources><color name=");
    write_file(tmp.path / "values/good.xml",
               "<resources><color name=\"c\">#112233</color></resources>");
    ValuesParseResult result = parse_values_files(
        {tmp.path / "values/bad.xml", tmp.path / "values/good.xml"});
    CHECK(result.entries.size() == 1);
    REQUIRE(result.warnings.size() == 1);
    CHECK(result.warnings[0].find("bad.xml") != std::string::npos);
}

// ---- resolve_references ------------------------------------------------------

TEST_CASE("nested reference resolves to the concrete color") {
    ResourceTable table = resolve_references({
        color_entry("account", "#000080"),
        color_entry("textColor", "@color/account"),
    });
    const auto* value = table.find(ResourceKind::Color, "textColor");
    REQUIRE(value != nullptr);
    const auto* color = std::get_if<ColorRGBA>(value);
    REQUIRE(color != nullptr);
    CHECK(color->blue == doctest::Approx(128.0 / 255.0));
    CHECK(table.warnings.empty());
}

TEST_CASE("chain of length 3 resolves through substitution") {
    ResourceTable table = resolve_references({
        color_entry("a", "#FF0000"),
        color_entry("b", "@color/a"),
        color_entry("c", "@color/b"),
    });
    const auto* color = std::get_if<ColorRGBA>(table.find(ResourceKind::Color, "c"));
    REQUIRE(color != nullptr);
    CHECK(color->red == 1.0);
    CHECK(color->green == 0.0);
}

TEST_CASE("self-reference is a length-1 cycle with magenta fallback") {
    ResourceTable table = resolve_references({color_entry("a", "@color/a")});
    const auto* color = std::get_if<ColorRGBA>(table.find(ResourceKind::Color, "a"));
    REQUIRE(color != nullptr);
    CHECK(*color == ColorRGBA{1.0, 0.0, 1.0, 1.0});
    REQUIRE(table.warnings.size() == 1);
    CHECK(table.warnings[0].find("cycle") != std::string::npos);
}

TEST_CASE("three-cycle falls back on every member") {
    ResourceTable table = resolve_references({
        color_entry("a", "@color/b"),
        color_entry("b", "@color/c"),
        color_entry("c", "@color/a"),
    });
    for (const char* name : {"a", "b", "c"}) {
        const auto* color = std::get_if<ColorRGBA>(table.find(ResourceKind::Color, name));
        REQUIRE(color != nullptr);
        CHECK(*color == ColorRGBA{1.0, 0.0, 1.0, 1.0});
    }
    CHECK(table.warnings.size() == 3);
}

TEST_CASE("missing references use documented fallbacks") {
    ResourceTable table = resolve_references({
        color_entry("c", "@color/missing"),
        {ResourceKind::String, "s", "@string/missing", {}, "test"},
        {ResourceKind::Dimen, "d", "@dimen/missing", {}, "test"},
    });
    CHECK(*std::get_if<ColorRGBA>(table.find(ResourceKind::Color, "c")) ==
          ColorRGBA{1.0, 0.0, 1.0, 1.0});
    CHECK(std::get_if<TextValue>(table.find(ResourceKind::String, "s"))->value ==
          "@string/missing");
    CHECK(std::get_if<Dimension>(table.find(ResourceKind::Dimen, "d"))->value == 0.0);
    CHECK(table.warnings.size() == 3);
}

TEST_CASE("duplicate entries: last parsed wins with a warning") {
    ResourceTable table = resolve_references({
        color_entry("c", "#FF0000"),
        color_entry("c", "#00FF00"),
    });
    const auto* color = std::get_if<ColorRGBA>(table.find(ResourceKind::Color, "c"));
    REQUIRE(color != nullptr);
    CHECK(color->green == 1.0);
    CHECK(color->red == 0.0);
    REQUIRE(table.warnings.size() == 1);
    CHECK(table.warnings[0].find("duplicate") != std::string::npos);
}

TEST_CASE("across files, the lexicographically last one wins regardless of call order") {
    TempDir tmp;
    write_file(tmp.path / "values/a_colors.xml",
               "<resources><color name=\"c\">#111111</color></resources>");
    write_file(tmp.path / "values/z_colors.xml",
               "<resources><color name=\"c\">#222222</color></resources>");

    // pass the paths in reverse order; parse_values_files sorts them
    ValuesParseResult parsed = parse_values_files(
        {tmp.path / "values/z_colors.xml", tmp.path / "values/a_colors.xml"});
    ResourceTable table = resolve_references(parsed.entries);
    const auto* color = std::get_if<ColorRGBA>(table.find(ResourceKind::Color, "c"));
    REQUIRE(color != nullptr);
    CHECK(std::lround(color->red * 255.0) == 0x22);
    REQUIRE(table.warnings.size() == 1);
    CHECK(table.warnings[0].find("z_colors.xml overrides") != std::string::npos);
}

TEST_CASE("style parent chains flatten with child overrides") {
    ResourceTable table = resolve_references({
        {ResourceKind::Style, "Base", "", {{"android:textSize", "12sp"},
                                           {"android:textColor", "#FF0000"}}, "test"},
        {ResourceKind::Style, "Title", "Base", {{"android:textSize", "18sp"}}, "test"},
    });
    const auto* style = std::get_if<StyleSet>(table.find(ResourceKind::Style, "Title"));
    REQUIRE(style != nullptr);
    REQUIRE(style->items.size() == 2);
    const auto* size = style->item("android:textSize");
    REQUIRE(size != nullptr);
    CHECK(std::get<Dimension>(*size).value == 18.0);
    CHECK(std::get<ColorRGBA>(*style->item("android:textColor")).red == 1.0);
}

TEST_CASE("style items resolve references") {
    ResourceTable table = resolve_references({
        color_entry("brand", "#336699"),
        {ResourceKind::Style, "S", "", {{"android:textColor", "@color/brand"}}, "test"},
    });
    const auto* style = std::get_if<StyleSet>(table.find(ResourceKind::Style, "S"));
    REQUIRE(style != nullptr);
    const auto* item = style->item("android:textColor");
    REQUIRE(item != nullptr);
    CHECK(std::get<ColorRGBA>(*item).blue == doctest::Approx(0x99 / 255.0));
}

TEST_CASE("resolution is idempotent over literal-only tables") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> byte(0, 255);
    std::vector<RawResourceEntry> entries;
    for (int i = 0; i < 20; ++i) {
        char hex[10];
        std::snprintf(hex, sizeof(hex), "#%02X%02X%02X", byte(rng), byte(rng), byte(rng));
        entries.push_back(color_entry("c" + std::to_string(i), hex));
        entries.push_back(
            {ResourceKind::Dimen, "d" + std::to_string(i), std::to_string(i) + "dp", {}, "t"});
        entries.push_back({ResourceKind::String, "s" + std::to_string(i),
                           "value " + std::to_string(i), {}, "t"});
    }
    ResourceTable first = resolve_references(entries);

    // Serialize resolved values back to literals and re-resolve.
    std::vector<RawResourceEntry> round;
    for (const auto& [key, value] : first.entries) {
        RawResourceEntry entry;
        entry.kind = key.kind;
        entry.name = key.name;
        entry.source = "round";
        if (const auto* color = std::get_if<ColorRGBA>(&value)) {
            char hex[10];
            std::snprintf(hex, sizeof(hex), "#%02X%02X%02X",
                          static_cast<int>(std::lround(color->red * 255.0)),
                          static_cast<int>(std::lround(color->green * 255.0)),
                          static_cast<int>(std::lround(color->blue * 255.0)));
            entry.raw_value = hex;
        } else if (const auto* dimension = std::get_if<Dimension>(&value)) {
            char text[64];
            std::snprintf(text, sizeof(text), "%.17gdp", dimension->value);
            entry.raw_value = text;
        } else if (const auto* text = std::get_if<TextValue>(&value)) {
            entry.raw_value = text->value;
        }
        round.push_back(std::move(entry));
    }
    ResourceTable second = resolve_references(round);
    CHECK(second.entries == first.entries);
    CHECK(second.warnings.empty());
}

TEST_CASE("no resolved output contains a reference pattern") {
    ResourceTable table = resolve_references({
        color_entry("base", "#010203"),
        color_entry("alias", "@color/base"),
        {ResourceKind::String, "s", "hello", {}, "t"},
        {ResourceKind::Dimen, "d", "4dp", {}, "t"},
        {ResourceKind::Dimen, "dref", "@dimen/d", {}, "t"},
    });
    for (const auto& [key, value] : table.entries) {
        if (const auto* text = std::get_if<TextValue>(&value)) {
            for (const char* kind : {"color", "string", "dimen", "style", "drawable", "raw"}) {
                CHECK(text->value.find("@" + std::string(kind) + "/") == std::string::npos);
            }
        }
    }
    CHECK(table.warnings.empty());
}

// ---- classify_resource_file ---------------------------------------------------

TEST_CASE("classification follows the file migration rules") {
    TempDir tmp;
    write_file(tmp.path / "res/drawable/logo.png", "fake");
    write_file(tmp.path / "res/drawable/photo.jpg", "fake");
    write_file(tmp.path / "res/drawable/ic_arrow.xml",
               R"(<vector xmlns:android="http://schemas.android.com/apk/res/android"
    android:viewportWidth="24" android:viewportHeight="24">
    <path android:pathData="M0,0 L24,24"/>
</vector>)");
    write_file(tmp.path / "res/drawable/shape.xml", "<shape/>");
    write_file(tmp.path / "res/layout/main.xml", "<LinearLayout/>");
    write_file(tmp.path / "res/raw/beep.mp3", "fake");
    write_file(tmp.path / "res/raw/notes.txt", "fake");

    CHECK(classify_resource_file(tmp.path / "res/drawable/logo.png").action ==
          MigrationAction::CopyImage);
    CHECK(classify_resource_file(tmp.path / "res/drawable/photo.jpg").action ==
          MigrationAction::CopyImage);
    CHECK(classify_resource_file(tmp.path / "res/drawable/ic_arrow.xml").action ==
          MigrationAction::ConvertVectorToSvg);
    FileClassification shape = classify_resource_file(tmp.path / "res/drawable/shape.xml");
    CHECK(shape.action == MigrationAction::ReportOnly);
    CHECK(shape.reason.find("shape") != std::string::npos);
    CHECK(classify_resource_file(tmp.path / "res/layout/main.xml").action ==
          MigrationAction::TranslateLayout);
    CHECK(classify_resource_file(tmp.path / "res/raw/beep.mp3").action ==
          MigrationAction::CopyRawMedia);
    CHECK(classify_resource_file(tmp.path / "res/raw/notes.txt").action ==
          MigrationAction::ReportOnly);
}

TEST_CASE("classification is total over odd paths") {
    CHECK(classify_resource_file("/does/not/exist.xml").action == MigrationAction::ReportOnly);
    CHECK(classify_resource_file("").action == MigrationAction::ReportOnly);
    CHECK(classify_resource_file("whatever.bin").action == MigrationAction::ReportOnly);
}

// ---- convert_vector_to_svg -----------------------------------------------------

TEST_CASE("vector drawable converts field by field") {
    const std::string vector = R"(<vector xmlns:android="http://schemas.android.com/apk/res/android"
    android:viewportWidth="24"
    android:viewportHeight="24">
    <path android:pathData="M0,0 L24,24" android:fillColor="#FF0000"/>
</vector>)";
    const std::string svg = convert_vector_to_svg(vector);
    CHECK(svg.find("viewBox=\"0 0 24 24\"") != std::string::npos);
    CHECK(svg.find("d=\"M0,0 L24,24\"") != std::string::npos);
    CHECK(svg.find("fill=\"#FF0000\"") != std::string::npos);
}

TEST_CASE("vector with zero paths gives an empty svg body") {
    const std::string svg = convert_vector_to_svg(
        "<vector android:viewportWidth=\"10\" android:viewportHeight=\"20\" "
        "xmlns:android=\"x\"/>");
    CHECK(svg.find("viewBox=\"0 0 10 20\"") != std::string::npos);
    CHECK(svg.find("<path") == std::string::npos);
}

TEST_CASE("vector with alpha fill emits fill-opacity") {
    const std::string svg = convert_vector_to_svg(
        "<vector android:viewportWidth=\"1\" android:viewportHeight=\"1\" xmlns:android=\"x\">"
        "<path android:pathData=\"M0,0\" android:fillColor=\"#80FF0000\"/></vector>");
    CHECK(svg.find("fill=\"#FF0000\"") != std::string::npos);
    CHECK(svg.find("fill-opacity=") != std::string::npos);
}

TEST_CASE("unsupported vector children are conversion errors") {
    CHECK_THROWS_AS(convert_vector_to_svg(
                        "<vector android:viewportWidth=\"1\" android:viewportHeight=\"1\" "
                        "xmlns:android=\"x\"><group/></vector>"),
                    Error);
    CHECK_THROWS_AS(convert_vector_to_svg("<shape/>"), Error);
}

// ---- file-backed resources -----------------------------------------------------

TEST_CASE("file resources register as asset entries by stem") {
    TempDir tmp;
    write_file(tmp.path / "res/drawable/logo.png", "fake");
    write_file(tmp.path / "res/drawable-hdpi/logo.png", "fake");
    write_file(tmp.path / "res/raw/beep.mp3", "fake");
    ResDirectoryIndex index = index_res_directory(tmp.path / "res");
    std::vector<RawResourceEntry> entries = index_file_resources(index);
    REQUIRE(entries.size() == 2);  // qualified drawable dir excluded

    ResourceTable table = resolve_references(entries);
    const auto* logo = std::get_if<AssetRef>(table.find(ResourceKind::Drawable, "logo"));
    REQUIRE(logo != nullptr);
    CHECK(logo->name == "logo");
    const auto* beep = std::get_if<AssetRef>(table.find(ResourceKind::Raw, "beep"));
    REQUIRE(beep != nullptr);
    CHECK(beep->kind == ResourceKind::Raw);
}

TEST_CASE("android string unescaping") {
    CHECK(unescape_android_string("Don\\'t") == "Don't");
    CHECK(unescape_android_string("line\\nbreak") == "line\nbreak");
    CHECK(unescape_android_string("tab\\there") == "tab\there");
    CHECK(unescape_android_string("back\\\\slash") == "back\\slash");
    CHECK(unescape_android_string("at\\@sign") == "at@sign");
    CHECK(unescape_android_string("plain") == "plain");
}
