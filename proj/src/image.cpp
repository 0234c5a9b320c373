#include "widgetforge/image.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <memory>

#include <png.h>

#include "widgetforge/error.hpp"

namespace wf::img {

namespace {

struct FileCloser {
    void operator()(FILE* f) const
    {
        if (f)
            std::fclose(f);
    }
};

using FilePtr = std::unique_ptr<FILE, FileCloser>;

} // namespace

Image Image::blank(int w, int h, std::array<uint8_t, 4> fill)
{
    Image img;
    img.width = w;
    img.height = h;
    img.rgba.resize(static_cast<size_t>(w) * h * 4);
    for (size_t i = 0; i < img.rgba.size(); i += 4) {
        img.rgba[i] = fill[0];
        img.rgba[i + 1] = fill[1];
        img.rgba[i + 2] = fill[2];
        img.rgba[i + 3] = fill[3];
    }
    return img;
}

Image load_png(const std::string& path)
{
    FilePtr fp(std::fopen(path.c_str(), "rb"));
    if (!fp)
        throw Error(ErrorCode::IoError, "cannot open " + path);

    png_byte header[8];
    if (std::fread(header, 1, 8, fp.get()) != 8 || png_sig_cmp(header, 0, 8) != 0)
        throw Error(ErrorCode::UndecodableImage, "not a PNG file: " + path);

    png_structp png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    if (!png)
        throw Error(ErrorCode::UndecodableImage, "png reader init failed");
    png_infop info = png_create_info_struct(png);
    if (!info) {
        png_destroy_read_struct(&png, nullptr, nullptr);
        throw Error(ErrorCode::UndecodableImage, "png reader init failed");
    }
    if (setjmp(png_jmpbuf(png))) {
        png_destroy_read_struct(&png, &info, nullptr);
        throw Error(ErrorCode::UndecodableImage, "corrupt PNG: " + path);
    }

    png_init_io(png, fp.get());
    png_set_sig_bytes(png, 8);
    png_read_info(png, info);

    png_uint_32 w = png_get_image_width(png, info);
    png_uint_32 h = png_get_image_height(png, info);
    int bit_depth = png_get_bit_depth(png, info);
    int color_type = png_get_color_type(png, info);

    if (bit_depth == 16)
        png_set_strip_16(png);
    if (color_type == PNG_COLOR_TYPE_PALETTE)
        png_set_palette_to_rgb(png);
    if (color_type == PNG_COLOR_TYPE_GRAY && bit_depth < 8)
        png_set_expand_gray_1_2_4_to_8(png);
    if (png_get_valid(png, info, PNG_INFO_tRNS))
        png_set_tRNS_to_alpha(png);
    if (color_type == PNG_COLOR_TYPE_RGB || color_type == PNG_COLOR_TYPE_GRAY
        || color_type == PNG_COLOR_TYPE_PALETTE)
        png_set_filler(png, 0xFF, PNG_FILLER_AFTER);
    if (color_type == PNG_COLOR_TYPE_GRAY || color_type == PNG_COLOR_TYPE_GRAY_ALPHA)
        png_set_gray_to_rgb(png);
    png_read_update_info(png, info);

    Image img;
    img.width = static_cast<int>(w);
    img.height = static_cast<int>(h);
    img.rgba.resize(static_cast<size_t>(w) * h * 4);

    std::vector<png_bytep> rows(h);
    for (png_uint_32 y = 0; y < h; ++y)
        rows[y] = img.rgba.data() + static_cast<size_t>(y) * w * 4;
    png_read_image(png, rows.data());
    png_read_end(png, nullptr);
    png_destroy_read_struct(&png, &info, nullptr);
    return img;
}

void save_png(const Image& image, const std::string& path)
{
    FilePtr fp(std::fopen(path.c_str(), "wb"));
    if (!fp)
        throw Error(ErrorCode::IoError, "cannot write " + path);

    png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    if (!png)
        throw Error(ErrorCode::IoError, "png writer init failed");
    png_infop info = png_create_info_struct(png);
    if (!info) {
        png_destroy_write_struct(&png, nullptr);
        throw Error(ErrorCode::IoError, "png writer init failed");
    }
    if (setjmp(png_jmpbuf(png))) {
        png_destroy_write_struct(&png, &info);
        throw Error(ErrorCode::IoError, "png write failed: " + path);
    }

    png_init_io(png, fp.get());
    png_set_IHDR(png, info, image.width, image.height, 8, PNG_COLOR_TYPE_RGBA, PNG_INTERLACE_NONE,
                 PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
    png_write_info(png, info);

    std::vector<png_bytep> rows(image.height);
    for (int y = 0; y < image.height; ++y)
        rows[y] = const_cast<png_bytep>(image.rgba.data() + static_cast<size_t>(y) * image.width * 4);
    png_write_image(png, rows.data());
    png_write_end(png, nullptr);
    png_destroy_write_struct(&png, &info);
}

std::vector<float> luminance(const Image& image)
{
    std::vector<float> out(image.pixel_count());
    const uint8_t* p = image.rgba.data();
    for (size_t i = 0; i < out.size(); ++i, p += 4)
        out[i] = (0.299f * p[0] + 0.587f * p[1] + 0.114f * p[2]) / 255.0f;
    return out;
}

std::array<double, 3> rgb_to_hsv(uint8_t r8, uint8_t g8, uint8_t b8)
{
    double r = r8 / 255.0;
    double g = g8 / 255.0;
    double b = b8 / 255.0;
    double mx = std::max({ r, g, b });
    double mn = std::min({ r, g, b });
    double d = mx - mn;

    double h = 0.0;
    if (d > 0.0) {
        if (mx == r)
            h = 60.0 * std::fmod((g - b) / d, 6.0);
        else if (mx == g)
            h = 60.0 * ((b - r) / d + 2.0);
        else
            h = 60.0 * ((r - g) / d + 4.0);
        if (h < 0.0)
            h += 360.0;
    }
    double s = mx > 0.0 ? d / mx : 0.0;
    return { h, s, mx };
}

Image resize_bilinear(const Image& image, int out_w, int out_h)
{
    if (out_w <= 0 || out_h <= 0)
        throw Error(ErrorCode::BadParameter, "resize target must be positive");
    if (out_w == image.width && out_h == image.height)
        return image;

    Image out;
    out.width = out_w;
    out.height = out_h;
    out.rgba.resize(static_cast<size_t>(out_w) * out_h * 4);

    const double sx = static_cast<double>(image.width) / out_w;
    const double sy = static_cast<double>(image.height) / out_h;
    for (int y = 0; y < out_h; ++y) {
        double fy = (y + 0.5) * sy - 0.5;
        int y0 = static_cast<int>(std::floor(fy));
        double wy = fy - y0;
        int y1 = std::min(y0 + 1, image.height - 1);
        y0 = std::clamp(y0, 0, image.height - 1);
        y1 = std::clamp(y1, 0, image.height - 1);
        for (int x = 0; x < out_w; ++x) {
            double fx = (x + 0.5) * sx - 0.5;
            int x0 = static_cast<int>(std::floor(fx));
            double wx = fx - x0;
            int x1 = std::min(x0 + 1, image.width - 1);
            x0 = std::clamp(x0, 0, image.width - 1);
            x1 = std::clamp(x1, 0, image.width - 1);

            const uint8_t* p00 = image.px(x0, y0);
            const uint8_t* p10 = image.px(x1, y0);
            const uint8_t* p01 = image.px(x0, y1);
            const uint8_t* p11 = image.px(x1, y1);
            uint8_t* dst = out.px(x, y);
            for (int c = 0; c < 4; ++c) {
                double top = p00[c] * (1.0 - wx) + p10[c] * wx;
                double bot = p01[c] * (1.0 - wx) + p11[c] * wx;
                double v = top * (1.0 - wy) + bot * wy;
                dst[c] = static_cast<uint8_t>(std::lround(std::clamp(v, 0.0, 255.0)));
            }
        }
    }
    return out;
}

} // namespace wf::img
