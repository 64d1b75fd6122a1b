#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <random>
#include <unistd.h>

#include "error.hpp"
#include "metrics.hpp"
#include "png_io.hpp"

using namespace uimigrate;
namespace fs = std::filesystem;

// ---- oracles (kept independent of the implementation path) ---------------------

namespace {

// Brute-force longest-common-substring matcher: scans every start pair and
// extends, taking the first strictly-longer block, then recurses.
size_t oracle_matching_chars(std::string_view a, std::string_view b) {
    if (a.empty() || b.empty()) return 0;
    size_t best_i = 0, best_j = 0, best_len = 0;
    for (size_t i = 0; i < a.size(); ++i) {
        for (size_t j = 0; j < b.size(); ++j) {
            size_t len = 0;
            while (i + len < a.size() && j + len < b.size() && a[i + len] == b[j + len]) ++len;
            if (len > best_len) {
                best_len = len;
                best_i = i;
                best_j = j;
            }
        }
    }
    if (best_len == 0) return 0;
    return best_len + oracle_matching_chars(a.substr(0, best_i), b.substr(0, best_j)) +
           oracle_matching_chars(a.substr(best_i + best_len), b.substr(best_j + best_len));
}

std::string random_string(std::mt19937& rng, size_t max_len, std::string_view alphabet) {
    std::uniform_int_distribution<size_t> len(0, max_len);
    size_t n = len(rng);
    std::string out;
    for (size_t i = 0; i < n; ++i) out += alphabet[rng() % alphabet.size()];
    return out;
}

} // namespace

// ---- crc -------------------------------------------------------------------------

TEST_CASE("crc hand-computed cases") {
    // identical
    CHECK(crc("a\nb\nc\n", "a\nb\nc\n") == 0.0);
    // one line of three changed: LCS = 2, (3-2)/3
    CHECK(crc("a\nb\nc\n", "a\nx\nc\n") == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
    // everything removed
    CHECK(crc("a\nb\n", "") == 1.0);
    // empty original is 0 by convention
    CHECK(crc("", "anything\n") == 0.0);
}

TEST_CASE("crc normalization removes blank lines and trailing whitespace") {
    CHECK(crc("a\n\n\nb\n", "a\nb\n") == 0.0);
    CHECK(crc("a   \nb\t\n", "a\nb\n") == 0.0);
    CHECK(crc("a\r\nb\r\n", "a\nb\n") == 0.0);  // CRLF input
    CHECK(normalize_code_lines("x \n\n y\n").size() == 2);
}

TEST_CASE("crc longer hand cases") {
    // 5 lines, 2 modified: LCS over [a b c d e] vs [a x c y e] is 3
    CHECK(crc("a\nb\nc\nd\ne\n", "a\nx\nc\ny\ne\n") == doctest::Approx(2.0 / 5.0));
    // insertion only: all original lines survive
    CHECK(crc("a\nb\n", "a\nnew\nb\n") == 0.0);
    // reordering: [a b c] vs [c a b], LCS = 2
    CHECK(crc("a\nb\nc\n", "c\na\nb\n") == doctest::Approx(1.0 / 3.0));
    // 10-line case, 4 survive: LCS([0..9], [0 2 4 6]) = 4
    CHECK(crc("0\n1\n2\n3\n4\n5\n6\n7\n8\n9\n", "0\n2\n4\n6\n") ==
          doctest::Approx(6.0 / 10.0));
}

// ---- ccr -------------------------------------------------------------------------

TEST_CASE("ccr hand-computed cases") {
    CHECK(ccr("same", "same") == 0.0);
    // "abcd" vs "abce": M=3, 1 - 6/8
    CHECK(ccr("abcd", "abce") == doctest::Approx(0.25).epsilon(1e-12));
    CHECK(ccr("", "xyz") == 1.0);
    CHECK(ccr("xyz", "") == 1.0);
    CHECK(ccr("", "") == 0.0);
}

TEST_CASE("ccr is symmetric") {
    std::mt19937 rng(99);
    for (int i = 0; i < 200; ++i) {
        std::string a = random_string(rng, 80, "abcdef \n");
        std::string b = random_string(rng, 80, "abcdef \n");
        CHECK(ccr(a, b) == ccr(b, a));
    }
}

TEST_CASE("ccr equals the brute-force matcher on 1000 random pairs") {
    std::mt19937 rng(123456);
    for (int i = 0; i < 1000; ++i) {
        const size_t max_len = (i % 10 == 0) ? 200 : 60;
        std::string a = random_string(rng, max_len, "abcdefg {}();\n");
        std::string b = random_string(rng, max_len, "abcdefg {}();\n");
        const size_t expected = oracle_matching_chars(a, b);
        CHECK(matching_chars(a, b) == expected);
        // ccr matches in canonical argument order; mirror that for the oracle
        std::string_view first = a, second = b;
        if (second < first) std::swap(first, second);
        const size_t canonical = oracle_matching_chars(first, second);
        const size_t total = a.size() + b.size();
        const double expected_ccr =
            total == 0 ? 0.0 : 1.0 - 2.0 * static_cast<double>(canonical) / total;
        CHECK(ccr(a, b) == doctest::Approx(expected_ccr).epsilon(1e-15));
    }
}

TEST_CASE("ccr is zero iff sequences are identical") {
    std::mt19937 rng(5);
    for (int i = 0; i < 100; ++i) {
        std::string a = random_string(rng, 50, "abc");
        CHECK(ccr(a, a) == 0.0);
        std::string b = a + "!";
        CHECK(ccr(a, b) > 0.0);
    }
}

// ---- ssim ------------------------------------------------------------------------

namespace {

GrayImage constant_image(int width, int height, double value) {
    GrayImage image;
    image.width = width;
    image.height = height;
    image.pixels.assign(static_cast<size_t>(width) * height, value);
    return image;
}

GrayImage random_image(std::mt19937& rng, int width, int height) {
    GrayImage image = constant_image(width, height, 0);
    std::uniform_real_distribution<double> dist(0.0, 255.0);
    for (double& px : image.pixels) px = dist(rng);
    return image;
}

} // namespace

TEST_CASE("ssim of an image with itself is exactly 1") {
    std::mt19937 rng(2025);
    for (int round = 0; round < 5; ++round) {
        GrayImage image = random_image(rng, 32 + round * 7, 24 + round * 5);
        SsimResult result = ssim(image, image);
        CHECK(std::abs(result.value - 1.0) <= 1e-9);
        CHECK(result.value == 1.0);
    }
}

TEST_CASE("constant 0 vs constant 255 matches the closed form") {
    GrayImage black = constant_image(64, 64, 0.0);
    GrayImage white = constant_image(64, 64, 255.0);
    const double c1 = (0.01 * 255.0) * (0.01 * 255.0);
    const double expected = c1 / (255.0 * 255.0 + c1);
    SsimResult result = ssim(black, white);
    CHECK(result.value == doctest::Approx(expected).epsilon(1e-7));
}

TEST_CASE("ssim is symmetric") {
    std::mt19937 rng(31415);
    for (int round = 0; round < 5; ++round) {
        GrayImage a = random_image(rng, 40, 30);
        GrayImage b = random_image(rng, 40, 30);
        SsimResult ab = ssim(a, b);
        SsimResult ba = ssim(b, a);
        CHECK(std::abs(ab.value - ba.value) <= 1e-9);
    }
}

TEST_CASE("dimension mismatch is an input error") {
    GrayImage a = constant_image(20, 20, 1.0);
    GrayImage b = constant_image(30, 20, 1.0);
    CHECK_THROWS_AS(ssim(a, b), Error);
}

TEST_CASE("images smaller than the window fall back to a global window") {
    GrayImage a = constant_image(8, 8, 10.0);
    GrayImage b = constant_image(8, 8, 10.0);
    SsimResult result = ssim(a, b);
    CHECK(result.global_fallback);
    CHECK(result.value == 1.0);
}

TEST_CASE("values stay in [0,1] after clamping") {
    std::mt19937 rng(8844);
    for (int round = 0; round < 10; ++round) {
        GrayImage a = random_image(rng, 24, 24);
        GrayImage b = random_image(rng, 24, 24);
        SsimResult result = ssim(a, b);
        CHECK(result.value >= 0.0);
        CHECK(result.value <= 1.0);
    }
}

TEST_CASE("bilinear resize preserves constant images and dimensions") {
    GrayImage constant = constant_image(33, 17, 42.0);
    GrayImage resized = bilinear_resize(constant, 64, 64);
    CHECK(resized.width == 64);
    CHECK(resized.height == 64);
    for (double px : resized.pixels) CHECK(px == doctest::Approx(42.0).epsilon(1e-12));

    // identity resize
    std::mt19937 rng(6);
    GrayImage image = random_image(rng, 21, 13);
    GrayImage same = bilinear_resize(image, 21, 13);
    for (size_t i = 0; i < image.pixels.size(); ++i) {
        CHECK(same.pixels[i] == doctest::Approx(image.pixels[i]).epsilon(1e-12));
    }
}

// ---- PNG loading -------------------------------------------------------------------

namespace {

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() /
               fs::path("uimigrate_png_" + std::to_string(::getpid()) + "_" +
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

ImageRGBA solid_rgba(int width, int height, unsigned char r, unsigned char g, unsigned char b,
                     unsigned char a = 255) {
    ImageRGBA image;
    image.width = width;
    image.height = height;
    image.pixels.resize(static_cast<size_t>(width) * height * 4);
    for (size_t i = 0; i < image.pixels.size(); i += 4) {
        image.pixels[i] = r;
        image.pixels[i + 1] = g;
        image.pixels[i + 2] = b;
        image.pixels[i + 3] = a;
    }
    return image;
}

} // namespace

TEST_CASE("pure white PNG loads as all 255") {
    TempDir tmp;
    const fs::path path = tmp.path / "white.png";
    write_png_rgba(path, solid_rgba(4, 3, 255, 255, 255));
    GrayImage gray = load_image_as_gray(path);
    CHECK(gray.width == 4);
    CHECK(gray.height == 3);
    for (double px : gray.pixels) CHECK(px == doctest::Approx(255.0).epsilon(1e-12));
}

TEST_CASE("pure red PNG loads as 0.299 x 255") {
    TempDir tmp;
    const fs::path path = tmp.path / "red.png";
    write_png_rgba(path, solid_rgba(5, 5, 255, 0, 0));
    GrayImage gray = load_image_as_gray(path);
    for (double px : gray.pixels) CHECK(px == doctest::Approx(0.299 * 255.0).epsilon(1e-9));
}

TEST_CASE("2x1 black|white PNG loads as [0, 255]") {
    TempDir tmp;
    ImageRGBA image = solid_rgba(2, 1, 0, 0, 0);
    image.pixels[4] = image.pixels[5] = image.pixels[6] = 255;
    const fs::path path = tmp.path / "bw.png";
    write_png_rgba(path, image);
    GrayImage gray = load_image_as_gray(path);
    REQUIRE(gray.pixels.size() == 2);
    CHECK(gray.pixels[0] == 0.0);
    CHECK(gray.pixels[1] == 255.0);
}

TEST_CASE("alpha composites over white") {
    TempDir tmp;
    const fs::path path = tmp.path / "half.png";
    write_png_rgba(path, solid_rgba(2, 2, 0, 0, 0, 0));  // fully transparent black
    GrayImage gray = load_image_as_gray(path);
    for (double px : gray.pixels) CHECK(px == doctest::Approx(255.0).epsilon(1e-9));
}

TEST_CASE("unreadable or undecodable files are input errors") {
    CHECK_THROWS_AS(load_image_as_gray("/nonexistent/image.png"), Error);
    TempDir tmp;
    const fs::path path = tmp.path / "not_a_png.png";
    {
        std::ofstream out(path, std::ios::binary);
        out << "this is not a png";
    }
    CHECK_THROWS_AS(load_image_as_gray(path), Error);
}

TEST_CASE("ssim through files: generated screenshots compare sanely") {
    TempDir tmp;
    ImageRGBA a = solid_rgba(32, 32, 200, 200, 200);
    ImageRGBA b = solid_rgba(32, 32, 200, 200, 200);
    // draw a dark square into b
    for (int y = 8; y < 16; ++y) {
        for (int x = 8; x < 16; ++x) {
            size_t i = (static_cast<size_t>(y) * 32 + x) * 4;
            b.pixels[i] = b.pixels[i + 1] = b.pixels[i + 2] = 30;
        }
    }
    write_png_rgba(tmp.path / "a.png", a);
    write_png_rgba(tmp.path / "b.png", b);
    GrayImage ga = load_image_as_gray(tmp.path / "a.png");
    GrayImage gb = load_image_as_gray(tmp.path / "b.png");
    double same = ssim(ga, ga).value;
    double different = ssim(ga, gb).value;
    CHECK(same == 1.0);
    CHECK(different < 1.0);
    CHECK(different > 0.0);
}
