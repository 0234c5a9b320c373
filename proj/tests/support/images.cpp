#include "images.hpp"

#include <algorithm>
#include <random>

namespace wf::test {

void fill_rect(img::Image& image, int x0, int y0, int x1, int y1, Rgba c)
{
    x0 = std::max(0, x0);
    y0 = std::max(0, y0);
    x1 = std::min(image.width, x1);
    y1 = std::min(image.height, y1);
    for (int y = y0; y < y1; ++y)
        for (int x = x0; x < x1; ++x)
            image.set(x, y, c);
}

img::Image solid(int w, int h, Rgba c)
{
    return img::Image::blank(w, h, c);
}

img::Image checker(int w, int h, int cell, Rgba a, Rgba b)
{
    img::Image out = img::Image::blank(w, h, a);
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x)
            if (((x / cell) + (y / cell)) % 2 == 1)
                out.set(x, y, b);
    return out;
}

img::Image hgradient(int w, int h, Rgba from, Rgba to)
{
    img::Image out = img::Image::blank(w, h, from);
    for (int x = 0; x < w; ++x) {
        double t = w > 1 ? static_cast<double>(x) / (w - 1) : 0.0;
        Rgba c;
        for (int i = 0; i < 4; ++i)
            c[i] = static_cast<uint8_t>(from[i] + t * (to[i] - from[i]) + 0.5);
        for (int y = 0; y < h; ++y)
            out.set(x, y, c);
    }
    return out;
}

img::Image noise(std::uint64_t seed, int w, int h)
{
    std::mt19937_64 rng(seed);
    img::Image out = img::Image::blank(w, h, { 0, 0, 0, 255 });
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x) {
            std::uint64_t v = rng();
            out.set(x, y,
                    { static_cast<uint8_t>(v & 0xff), static_cast<uint8_t>((v >> 8) & 0xff),
                      static_cast<uint8_t>((v >> 16) & 0xff), 255 });
        }
    return out;
}

img::Image color_blocks(std::uint64_t seed, int w, int h, int n)
{
    static const Rgba palette[] = {
        { 255, 255, 255, 255 }, { 0, 122, 255, 255 },  { 255, 59, 48, 255 },
        { 52, 199, 89, 255 },   { 255, 149, 0, 255 },  { 88, 86, 214, 255 },
        { 28, 28, 30, 255 },    { 229, 229, 234, 255 },
    };
    std::mt19937_64 rng(seed);
    img::Image out = img::Image::blank(w, h, palette[0]);
    for (int i = 1; i < n; ++i) {
        int x0 = static_cast<int>(rng() % (w / 2));
        int y0 = static_cast<int>(rng() % (h / 2));
        int bw = 4 + static_cast<int>(rng() % (w / 2));
        int bh = 4 + static_cast<int>(rng() % (h / 2));
        fill_rect(out, x0, y0, x0 + bw, y0 + bh, palette[i % std::size(palette)]);
    }
    return out;
}

img::Image widget_fixture(std::uint64_t seed, int w, int h)
{
    std::mt19937_64 rng(seed);
    auto pick = [&](int lo, int hi) { return lo + static_cast<int>(rng() % (hi - lo + 1)); };

    Rgba bg = { 242, 242, 247, 255 };
    Rgba card = { 255, 255, 255, 255 };
    Rgba ink = { static_cast<uint8_t>(pick(10, 60)), static_cast<uint8_t>(pick(10, 60)),
                 static_cast<uint8_t>(pick(10, 60)), 255 };
    Rgba accent = { static_cast<uint8_t>(pick(0, 255)), static_cast<uint8_t>(pick(60, 200)),
                    static_cast<uint8_t>(pick(90, 255)), 255 };

    img::Image out = img::Image::blank(w, h, bg);
    int m = std::max(2, w / 16);
    fill_rect(out, m, m, w - m, h - m, card);
    fill_rect(out, 2 * m, 2 * m, w - 2 * m, 2 * m + std::max(2, h / 12), ink);

    int bars = pick(3, 6);
    int plot_top = h / 2;
    int slot = (w - 4 * m) / std::max(1, bars);
    for (int i = 0; i < bars; ++i) {
        int bh = pick(h / 12, h / 2 - 2 * m);
        int x0 = 2 * m + i * slot;
        fill_rect(out, x0 + slot / 5, h - 2 * m - bh, x0 + slot - slot / 5, h - 2 * m, accent);
    }
    int dots = pick(2, 5);
    for (int i = 0; i < dots; ++i) {
        int r = std::max(1, h / 24);
        int cx = 2 * m + i * 3 * r;
        fill_rect(out, cx, plot_top - 4 * r, cx + r, plot_top - 3 * r, ink);
    }
    return out;
}

} // namespace wf::test
