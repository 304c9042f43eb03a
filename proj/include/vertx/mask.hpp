#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "vertx/errors.hpp"

namespace vertx {

/// Image domain. Coordinates are (x, y), origin top-left, y grows downward.
struct Grid {
    int width = 1;
    int height = 1;

    Grid() = default;
    Grid(int w, int h) : width(w), height(h) {
        if (w < 1 || h < 1) throw ConfigInvalid("grid dimensions must be >= 1");
    }

    std::int64_t size() const { return static_cast<std::int64_t>(width) * height; }
    bool contains(int x, int y) const { return x >= 0 && x < width && y >= 0 && y < height; }

    friend bool operator==(const Grid&, const Grid&) = default;
};

/// Inclusive pixel-aligned bounding box.
struct Box {
    int x0 = 0, y0 = 0, x1 = -1, y1 = -1;
    int width() const { return x1 - x0 + 1; }
    int height() const { return y1 - y0 + 1; }
};

/// Binary raster mask over a fixed grid. Pixel membership is exact.
class Mask {
public:
    Mask() : Mask(Grid{}) {}
    explicit Mask(Grid grid) : grid_(grid), bits_(static_cast<std::size_t>(grid.size()), 0) {}

    static Mask from_pixels(Grid grid, const std::vector<std::pair<int, int>>& pixels);

    const Grid& grid() const { return grid_; }
    int width() const { return grid_.width; }
    int height() const { return grid_.height; }

    bool at(int x, int y) const { return bits_[index(x, y)] != 0; }
    void set(int x, int y, bool value = true) {
        std::uint8_t& b = bits_[index(x, y)];
        area_ += (value ? 1 : 0) - (b ? 1 : 0);
        b = value ? 1 : 0;
    }

    std::int64_t area() const { return area_; }
    bool empty() const { return area_ == 0; }

    /// Row-major backing store, one byte per pixel (0 or 1).
    const std::vector<std::uint8_t>& data() const { return bits_; }

    /// Tight bounding box of the foreground; nullopt for an empty mask.
    std::optional<Box> bounding_box() const;

    std::vector<std::pair<int, int>> pixels() const;

    bool intersects(const Mask& other) const;
    std::int64_t intersection_area(const Mask& other) const;

    friend Mask operator&(const Mask& a, const Mask& b);
    friend Mask operator|(const Mask& a, const Mask& b);
    /// Set difference a \ b.
    friend Mask operator-(const Mask& a, const Mask& b);

    friend bool operator==(const Mask& a, const Mask& b) {
        return a.grid_ == b.grid_ && a.bits_ == b.bits_;
    }

    std::size_t index(int x, int y) const {
        return static_cast<std::size_t>(y) * grid_.width + x;
    }

private:
    Grid grid_;
    std::vector<std::uint8_t> bits_;
    std::int64_t area_ = 0;
};

/// Run-length encoded mask: row-major scan, alternating background/foreground
/// run lengths starting with background. A zero is legal only as the first run.
struct RleMask {
    Grid grid;
    std::vector<std::int64_t> runs;
};

RleMask rle_encode(const Mask& mask);
Mask rle_decode(const RleMask& rle);

/// 8-connected foreground components, ordered by their top-most then
/// left-most pixel. Empty input yields an empty list.
std::vector<Mask> connected_components(const Mask& mask);

/// 2|A∩B| / (|A|+|B|); 1.0 when both masks are empty.
double dice(const Mask& a, const Mask& b);
/// |A∩B| / |A∪B|; 1.0 when both masks are empty.
double iou(const Mask& a, const Mask& b);

struct Centroid {
    double x = 0.0;
    double y = 0.0;
};

/// Arithmetic mean of the foreground pixel coordinates. Throws EmptyMask.
Centroid centroid(const Mask& mask);

/// Exact squared Euclidean distance from every grid cell to the nearest
/// foreground pixel of `sites` (kNoSite everywhere when `sites` is empty).
inline constexpr std::int64_t kNoSite = INT64_C(0x3FFFFFFFFFFFFFFF);
std::vector<std::int64_t> squared_distance_field(const Mask& sites);

/// Splits `region` into |seeds| disjoint masks whose union is exactly
/// `region`. Each region pixel goes to the seed whose nearest foreground
/// pixel is closest (exact Euclidean); ties go to the lowest seed index.
std::vector<Mask> nearest_seed_partition(const Mask& region, const std::vector<Mask>& seeds);

/// Euclidean disc morphology (radius in pixels, exact).
Mask dilate(const Mask& mask, int radius);
Mask erode(const Mask& mask, int radius);

}  // namespace vertx
