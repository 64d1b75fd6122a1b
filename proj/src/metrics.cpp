#include "metrics.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>

#include "error.hpp"
#include "logging.hpp"
#include "png_io.hpp"

namespace uimigrate {

std::vector<std::string> normalize_code_lines(std::string_view text) {
    std::vector<std::string> lines;
    size_t begin = 0;
    while (begin <= text.size()) {
        size_t end = text.find('\n', begin);
        std::string_view line =
            text.substr(begin, end == std::string_view::npos ? text.size() - begin : end - begin);
        size_t last = line.size();
        while (last > 0 && std::isspace(static_cast<unsigned char>(line[last - 1]))) --last;
        if (last > 0) lines.emplace_back(line.substr(0, last));
        if (end == std::string_view::npos) break;
        begin = end + 1;
    }
    return lines;
}

namespace {

size_t lcs_length(const std::vector<std::string>& a, const std::vector<std::string>& b) {
    if (a.empty() || b.empty()) return 0;
    std::vector<size_t> previous(b.size() + 1, 0);
    std::vector<size_t> current(b.size() + 1, 0);
    for (size_t i = 1; i <= a.size(); ++i) {
        for (size_t j = 1; j <= b.size(); ++j) {
            if (a[i - 1] == b[j - 1]) {
                current[j] = previous[j - 1] + 1;
            } else {
                current[j] = std::max(previous[j], current[j - 1]);
            }
        }
        std::swap(previous, current);
    }
    return previous[b.size()];
}

} // namespace

double crc(std::string_view original, std::string_view migrated) {
    const std::vector<std::string> original_lines = normalize_code_lines(original);
    const std::vector<std::string> migrated_lines = normalize_code_lines(migrated);
    if (original_lines.empty()) return 0.0;
    const size_t common = lcs_length(original_lines, migrated_lines);
    return static_cast<double>(original_lines.size() - common) /
           static_cast<double>(original_lines.size());
}

namespace {

struct MatchBlock {
    size_t a_begin = 0;
    size_t b_begin = 0;
    size_t size = 0;
};

// Longest common substring inside [alo,ahi) x [blo,bhi); ties resolved to the
// lowest start in a, then the lowest start in b.
MatchBlock find_longest_match(std::string_view a, std::string_view b, size_t alo, size_t ahi,
                              size_t blo, size_t bhi) {
    MatchBlock best{alo, blo, 0};
    const size_t b_span = bhi - blo;
    std::vector<size_t> j2len(b_span, 0);
    std::vector<size_t> new_j2len(b_span, 0);
    for (size_t i = alo; i < ahi; ++i) {
        std::fill(new_j2len.begin(), new_j2len.end(), 0);
        for (size_t j = blo; j < bhi; ++j) {
            if (a[i] != b[j]) continue;
            const size_t k = (j > blo ? j2len[j - blo - 1] : 0) + 1;
            new_j2len[j - blo] = k;
            if (k > best.size) {
                best = {i - k + 1, j - k + 1, k};
            }
        }
        std::swap(j2len, new_j2len);
    }
    return best;
}

} // namespace

std::size_t matching_chars(std::string_view a, std::string_view b) {
    size_t total = 0;
    // Worklist of unmatched spans, recursing around each longest match.
    std::vector<std::array<size_t, 4>> pending = {{0, a.size(), 0, b.size()}};
    while (!pending.empty()) {
        auto [alo, ahi, blo, bhi] = pending.back();
        pending.pop_back();
        if (alo >= ahi || blo >= bhi) continue;
        MatchBlock match = find_longest_match(a, b, alo, ahi, blo, bhi);
        if (match.size == 0) continue;
        total += match.size;
        pending.push_back({alo, match.a_begin, blo, match.b_begin});
        pending.push_back({match.a_begin + match.size, ahi, match.b_begin + match.size, bhi});
    }
    return total;
}

double ccr(std::string_view original, std::string_view migrated) {
    const size_t total = original.size() + migrated.size();
    if (total == 0) return 0.0;
    // Greedy matching is order-sensitive when maximal blocks tie; canonical
    // argument order keeps the metric symmetric.
    std::string_view first = original, second = migrated;
    if (second < first) std::swap(first, second);
    const size_t matched = matching_chars(first, second);
    return 1.0 - 2.0 * static_cast<double>(matched) / static_cast<double>(total);
}

namespace {

constexpr int kWindowSize = 11;
constexpr double kGaussianSigma = 1.5;
constexpr double kC1 = (0.01 * 255.0) * (0.01 * 255.0);
constexpr double kC2 = (0.03 * 255.0) * (0.03 * 255.0);

const std::vector<double>& gaussian_window() {
    static const std::vector<double> window = [] {
        std::vector<double> w(kWindowSize * kWindowSize);
        const double center = (kWindowSize - 1) / 2.0;
        double sum = 0.0;
        for (int y = 0; y < kWindowSize; ++y) {
            for (int x = 0; x < kWindowSize; ++x) {
                const double dx = x - center;
                const double dy = y - center;
                const double value =
                    std::exp(-(dx * dx + dy * dy) / (2.0 * kGaussianSigma * kGaussianSigma));
                w[y * kWindowSize + x] = value;
                sum += value;
            }
        }
        for (double& value : w) value /= sum;
        return w;
    }();
    return window;
}

double ssim_term(double mu1, double mu2, double sigma1_sq, double sigma2_sq, double sigma12) {
    const double numerator = (2.0 * mu1 * mu2 + kC1) * (2.0 * sigma12 + kC2);
    const double denominator =
        (mu1 * mu1 + mu2 * mu2 + kC1) * (sigma1_sq + sigma2_sq + kC2);
    return numerator / denominator;
}

double global_ssim(const GrayImage& a, const GrayImage& b) {
    const size_t n = a.pixels.size();
    double sum_a = 0.0, sum_b = 0.0, sum_aa = 0.0, sum_bb = 0.0, sum_ab = 0.0;
    for (size_t i = 0; i < n; ++i) {
        const double pa = a.pixels[i];
        const double pb = b.pixels[i];
        sum_a += pa;
        sum_b += pb;
        sum_aa += pa * pa;
        sum_bb += pb * pb;
        sum_ab += pa * pb;
    }
    const double inv = 1.0 / static_cast<double>(n);
    const double mu1 = sum_a * inv;
    const double mu2 = sum_b * inv;
    return ssim_term(mu1, mu2, sum_aa * inv - mu1 * mu1, sum_bb * inv - mu2 * mu2,
                     sum_ab * inv - mu1 * mu2);
}

} // namespace

SsimResult ssim(const GrayImage& a, const GrayImage& b) {
    if (a.width != b.width || a.height != b.height) {
        throw Error(ErrorKind::InvalidArgument,
                    "image dimensions differ (" + std::to_string(a.width) + "x" +
                        std::to_string(a.height) + " vs " + std::to_string(b.width) + "x" +
                        std::to_string(b.height) + "); use --resize to match them");
    }
    if (a.width <= 0 || a.height <= 0) {
        throw Error(ErrorKind::InvalidArgument, "empty image");
    }

    SsimResult result;
    if (a.width < kWindowSize || a.height < kWindowSize) {
        log_warn("image smaller than the " + std::to_string(kWindowSize) + "x" +
                 std::to_string(kWindowSize) + " window; using a single global window");
        result.global_fallback = true;
        result.raw = global_ssim(a, b);
        result.value = std::clamp(result.raw, 0.0, 1.0);
        return result;
    }

    const auto& window = gaussian_window();
    const int out_width = a.width - kWindowSize + 1;
    const int out_height = a.height - kWindowSize + 1;
    double sum = 0.0;
    for (int y0 = 0; y0 < out_height; ++y0) {
        for (int x0 = 0; x0 < out_width; ++x0) {
            double mu1 = 0.0, mu2 = 0.0, s11 = 0.0, s22 = 0.0, s12 = 0.0;
            for (int wy = 0; wy < kWindowSize; ++wy) {
                const double* row_a = a.pixels.data() + static_cast<size_t>(y0 + wy) * a.width + x0;
                const double* row_b = b.pixels.data() + static_cast<size_t>(y0 + wy) * b.width + x0;
                const double* w = window.data() + static_cast<size_t>(wy) * kWindowSize;
                for (int wx = 0; wx < kWindowSize; ++wx) {
                    const double weight = w[wx];
                    const double pa = row_a[wx];
                    const double pb = row_b[wx];
                    mu1 += weight * pa;
                    mu2 += weight * pb;
                    s11 += weight * pa * pa;
                    s22 += weight * pb * pb;
                    s12 += weight * pa * pb;
                }
            }
            sum += ssim_term(mu1, mu2, s11 - mu1 * mu1, s22 - mu2 * mu2, s12 - mu1 * mu2);
        }
    }
    result.raw = sum / (static_cast<double>(out_width) * out_height);
    result.value = std::clamp(result.raw, 0.0, 1.0);
    return result;
}

GrayImage bilinear_resize(const GrayImage& source, int width, int height) {
    if (width <= 0 || height <= 0 || source.width <= 0 || source.height <= 0) {
        throw Error(ErrorKind::InvalidArgument, "invalid resize dimensions");
    }
    GrayImage out;
    out.width = width;
    out.height = height;
    out.pixels.resize(static_cast<size_t>(width) * height);

    const double x_scale = static_cast<double>(source.width) / width;
    const double y_scale = static_cast<double>(source.height) / height;
    for (int y = 0; y < height; ++y) {
        const double sy = std::clamp((y + 0.5) * y_scale - 0.5, 0.0,
                                     static_cast<double>(source.height - 1));
        const int y0 = static_cast<int>(sy);
        const int y1 = std::min(y0 + 1, source.height - 1);
        const double fy = sy - y0;
        for (int x = 0; x < width; ++x) {
            const double sx = std::clamp((x + 0.5) * x_scale - 0.5, 0.0,
                                         static_cast<double>(source.width - 1));
            const int x0 = static_cast<int>(sx);
            const int x1 = std::min(x0 + 1, source.width - 1);
            const double fx = sx - x0;
            const double top = source.at(x0, y0) * (1.0 - fx) + source.at(x1, y0) * fx;
            const double bottom = source.at(x0, y1) * (1.0 - fx) + source.at(x1, y1) * fx;
            out.pixels[static_cast<size_t>(y) * width + x] = top * (1.0 - fy) + bottom * fy;
        }
    }
    return out;
}

GrayImage load_image_as_gray(const std::filesystem::path& path) {
    const ImageRGBA rgba = load_png_rgba(path);
    GrayImage gray;
    gray.width = rgba.width;
    gray.height = rgba.height;
    gray.pixels.resize(static_cast<size_t>(rgba.width) * rgba.height);
    for (size_t i = 0; i < gray.pixels.size(); ++i) {
        const unsigned char* px = rgba.pixels.data() + i * 4;
        const double alpha = px[3] / 255.0;
        const double red = px[0] * alpha + 255.0 * (1.0 - alpha);
        const double green = px[1] * alpha + 255.0 * (1.0 - alpha);
        const double blue = px[2] * alpha + 255.0 * (1.0 - alpha);
        gray.pixels[i] = 0.299 * red + 0.587 * green + 0.114 * blue;
    }
    return gray;
}

} // namespace uimigrate
