#pragma once

#include <filesystem>
#include <vector>

namespace uimigrate {

struct ImageRGBA {
    int width = 0;
    int height = 0;
    std::vector<unsigned char> pixels;  // row-major RGBA8
};

// Decodes any PNG color type to RGBA8. Throws Error(Io) on unreadable files
// and Error(Parse) on undecodable content.
ImageRGBA load_png_rgba(const std::filesystem::path& path);

void write_png_rgba(const std::filesystem::path& path, const ImageRGBA& image);

} // namespace uimigrate
