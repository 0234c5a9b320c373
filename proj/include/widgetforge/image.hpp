#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace wf::img {

// 8-bit RGBA, row-major, tightly packed.
struct Image {
    int width { 0 };
    int height { 0 };
    std::vector<uint8_t> rgba;

    static Image blank(int w, int h, std::array<uint8_t, 4> fill = { 0, 0, 0, 255 });

    size_t pixel_count() const { return static_cast<size_t>(width) * height; }
    uint8_t* px(int x, int y) { return rgba.data() + (static_cast<size_t>(y) * width + x) * 4; }
    const uint8_t* px(int x, int y) const
    {
        return rgba.data() + (static_cast<size_t>(y) * width + x) * 4;
    }
    void set(int x, int y, std::array<uint8_t, 4> c)
    {
        uint8_t* p = px(x, y);
        p[0] = c[0];
        p[1] = c[1];
        p[2] = c[2];
        p[3] = c[3];
    }
};

// PNG decode/encode. Throws Error{UndecodableImage|IoError}.
Image load_png(const std::string& path);
void save_png(const Image& image, const std::string& path);

// BT.601 luma of the RGB channels, scaled to [0, 1]. Alpha is ignored.
std::vector<float> luminance(const Image& image);

// h in [0, 360), s and v in [0, 1].
std::array<double, 3> rgb_to_hsv(uint8_t r, uint8_t g, uint8_t b);

Image resize_bilinear(const Image& image, int out_w, int out_h);

} // namespace wf::img
