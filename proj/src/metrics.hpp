#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace uimigrate {

// Blank lines removed, trailing whitespace trimmed.
std::vector<std::string> normalize_code_lines(std::string_view text);

// Modified-line ratio: (|original lines| - LCS) / |original lines| after
// normalization. Empty original is 0 by convention.
double crc(std::string_view original, std::string_view migrated);

// Matching characters via recursive longest-common-substring matching
// (the sequence-matcher ratio). Order-sensitive when maximal blocks tie;
// exposed for the metric and its tests.
std::size_t matching_chars(std::string_view a, std::string_view b);

// 1 - 2M/(|a|+|b|), so that lower means smaller differences. Both empty is 0.
// Arguments are matched in canonical order, making the metric symmetric.
double ccr(std::string_view original, std::string_view migrated);

struct GrayImage {
    int width = 0;
    int height = 0;
    std::vector<double> pixels;  // row-major luminance in [0,255]

    double at(int x, int y) const { return pixels[static_cast<size_t>(y) * width + x]; }
};

struct SsimResult {
    double value = 0.0;  // clamped to [0,1]
    double raw = 0.0;    // unclamped mean
    bool global_fallback = false;  // image smaller than the window
};

// Mean SSIM over sliding 11x11 Gaussian windows (sigma 1.5),
// C1=(0.01*255)^2, C2=(0.03*255)^2. Dimensions must match; images smaller
// than the window fall back to a single global window.
SsimResult ssim(const GrayImage& a, const GrayImage& b);

GrayImage bilinear_resize(const GrayImage& source, int width, int height);

// PNG decode + luminance 0.299R + 0.587G + 0.114B, alpha composited over
// white.
GrayImage load_image_as_gray(const std::filesystem::path& path);

} // namespace uimigrate
