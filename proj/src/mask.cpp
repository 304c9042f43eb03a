#include "vertx/mask.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace vertx {

Mask Mask::from_pixels(Grid grid, const std::vector<std::pair<int, int>>& pixels) {
    Mask m(grid);
    for (const auto& [x, y] : pixels) {
        if (!grid.contains(x, y)) throw ConfigInvalid("pixel outside grid bounds");
        m.set(x, y);
    }
    return m;
}

std::optional<Box> Mask::bounding_box() const {
    if (empty()) return std::nullopt;
    Box box{grid_.width, grid_.height, -1, -1};
    for (int y = 0; y < grid_.height; ++y) {
        const std::uint8_t* row = bits_.data() + static_cast<std::size_t>(y) * grid_.width;
        for (int x = 0; x < grid_.width; ++x) {
            if (!row[x]) continue;
            box.x0 = std::min(box.x0, x);
            box.x1 = std::max(box.x1, x);
            box.y0 = std::min(box.y0, y);
            box.y1 = std::max(box.y1, y);
        }
    }
    return box;
}

std::vector<std::pair<int, int>> Mask::pixels() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<std::size_t>(area_));
    for (int y = 0; y < grid_.height; ++y)
        for (int x = 0; x < grid_.width; ++x)
            if (at(x, y)) out.emplace_back(x, y);
    return out;
}

bool Mask::intersects(const Mask& other) const {
    if (grid_ != other.grid_) throw GridMismatch("mask grids differ");
    for (std::size_t i = 0; i < bits_.size(); ++i)
        if (bits_[i] && other.bits_[i]) return true;
    return false;
}

std::int64_t Mask::intersection_area(const Mask& other) const {
    if (grid_ != other.grid_) throw GridMismatch("mask grids differ");
    std::int64_t n = 0;
    for (std::size_t i = 0; i < bits_.size(); ++i) n += bits_[i] & other.bits_[i];
    return n;
}

Mask operator&(const Mask& a, const Mask& b) {
    if (a.grid_ != b.grid_) throw GridMismatch("mask grids differ");
    Mask out(a.grid_);
    for (std::size_t i = 0; i < a.bits_.size(); ++i) out.bits_[i] = a.bits_[i] & b.bits_[i];
    out.area_ = std::count(out.bits_.begin(), out.bits_.end(), std::uint8_t{1});
    return out;
}

Mask operator|(const Mask& a, const Mask& b) {
    if (a.grid_ != b.grid_) throw GridMismatch("mask grids differ");
    Mask out(a.grid_);
    for (std::size_t i = 0; i < a.bits_.size(); ++i) out.bits_[i] = a.bits_[i] | b.bits_[i];
    out.area_ = std::count(out.bits_.begin(), out.bits_.end(), std::uint8_t{1});
    return out;
}

Mask operator-(const Mask& a, const Mask& b) {
    if (a.grid_ != b.grid_) throw GridMismatch("mask grids differ");
    Mask out(a.grid_);
    for (std::size_t i = 0; i < a.bits_.size(); ++i)
        out.bits_[i] = static_cast<std::uint8_t>(a.bits_[i] & ~b.bits_[i] & 1);
    out.area_ = std::count(out.bits_.begin(), out.bits_.end(), std::uint8_t{1});
    return out;
}

RleMask rle_encode(const Mask& mask) {
    RleMask rle{mask.grid(), {}};
    const auto& bits = mask.data();
    std::uint8_t current = 0;  // scan starts on background
    std::int64_t run = 0;
    for (std::uint8_t b : bits) {
        if (b == current) {
            ++run;
        } else {
            rle.runs.push_back(run);
            current = b;
            run = 1;
        }
    }
    rle.runs.push_back(run);
    return rle;
}

Mask rle_decode(const RleMask& rle) {
    std::int64_t total = 0;
    for (std::size_t i = 0; i < rle.runs.size(); ++i) {
        const std::int64_t r = rle.runs[i];
        if (r < 0) throw RleMalformed("negative run length");
        if (r == 0 && i != 0)
            throw RleMalformed("zero run length at position " + std::to_string(i) +
                               " (only the first run may be zero)");
        total += r;
    }
    if (total != rle.grid.size())
        throw RleLengthMismatch("runs sum to " + std::to_string(total) + ", expected " +
                                std::to_string(rle.grid.size()));

    Mask mask(rle.grid);
    std::int64_t pos = 0;
    bool foreground = false;
    for (std::int64_t r : rle.runs) {
        if (foreground) {
            for (std::int64_t i = 0; i < r; ++i) {
                const std::int64_t p = pos + i;
                mask.set(static_cast<int>(p % rle.grid.width),
                         static_cast<int>(p / rle.grid.width));
            }
        }
        pos += r;
        foreground = !foreground;
    }
    return mask;
}

std::vector<Mask> connected_components(const Mask& mask) {
    const Grid grid = mask.grid();
    const auto& bits = mask.data();
    std::vector<std::uint8_t> visited(bits.size(), 0);
    std::vector<Mask> components;
    std::vector<std::size_t> stack;

    static constexpr int dx[8] = {-1, 0, 1, -1, 1, -1, 0, 1};
    static constexpr int dy[8] = {-1, -1, -1, 0, 0, 1, 1, 1};

    for (std::size_t start = 0; start < bits.size(); ++start) {
        if (!bits[start] || visited[start]) continue;
        // Row-major scan hits each component first at its top-most,
        // left-most pixel, which fixes the output order.
        Mask comp(grid);
        stack.clear();
        stack.push_back(start);
        visited[start] = 1;
        while (!stack.empty()) {
            const std::size_t idx = stack.back();
            stack.pop_back();
            const int x = static_cast<int>(idx % grid.width);
            const int y = static_cast<int>(idx / grid.width);
            comp.set(x, y);
            for (int k = 0; k < 8; ++k) {
                const int nx = x + dx[k];
                const int ny = y + dy[k];
                if (!grid.contains(nx, ny)) continue;
                const std::size_t nidx = comp.index(nx, ny);
                if (bits[nidx] && !visited[nidx]) {
                    visited[nidx] = 1;
                    stack.push_back(nidx);
                }
            }
        }
        components.push_back(std::move(comp));
    }
    return components;
}

double dice(const Mask& a, const Mask& b) {
    if (a.grid() != b.grid()) throw GridMismatch("dice: mask grids differ");
    const std::int64_t denom = a.area() + b.area();
    if (denom == 0) return 1.0;
    return 2.0 * static_cast<double>(a.intersection_area(b)) / static_cast<double>(denom);
}

double iou(const Mask& a, const Mask& b) {
    if (a.grid() != b.grid()) throw GridMismatch("iou: mask grids differ");
    const std::int64_t inter = (a.area() || b.area()) ? a.intersection_area(b) : 0;
    const std::int64_t uni = a.area() + b.area() - inter;
    if (uni == 0) return 1.0;
    return static_cast<double>(inter) / static_cast<double>(uni);
}

Centroid centroid(const Mask& mask) {
    if (mask.empty()) throw EmptyMask("centroid of empty mask");
    std::int64_t sx = 0, sy = 0;
    for (int y = 0; y < mask.height(); ++y)
        for (int x = 0; x < mask.width(); ++x)
            if (mask.at(x, y)) {
                sx += x;
                sy += y;
            }
    const double n = static_cast<double>(mask.area());
    return {static_cast<double>(sx) / n, static_cast<double>(sy) / n};
}

namespace {

// 1D squared-distance lower envelope (Felzenszwalb & Huttenlocher). All final
// values are evaluated in integer arithmetic, so results are exact.
void edt_1d(const std::vector<std::int64_t>& f, std::vector<std::int64_t>& d,
            std::vector<int>& v, std::vector<double>& z, int n) {
    int k = -1;
    for (int q = 0; q < n; ++q) {
        if (f[q] >= kNoSite) continue;
        while (k >= 0) {
            const double s =
                (static_cast<double>(f[q] - f[v[k]]) +
                 static_cast<double>(static_cast<std::int64_t>(q) * q -
                                     static_cast<std::int64_t>(v[k]) * v[k])) /
                (2.0 * (q - v[k]));
            if (s <= z[k]) {
                --k;
            } else {
                break;
            }
        }
        if (k < 0) {
            k = 0;
            v[0] = q;
            z[0] = -std::numeric_limits<double>::infinity();
        } else {
            ++k;
            v[k] = q;
            z[k] = (static_cast<double>(f[q] - f[v[k - 1]]) +
                    static_cast<double>(static_cast<std::int64_t>(q) * q -
                                        static_cast<std::int64_t>(v[k - 1]) * v[k - 1])) /
                   (2.0 * (q - v[k - 1]));
        }
    }
    if (k < 0) {
        std::fill(d.begin(), d.begin() + n, kNoSite);
        return;
    }
    int j = 0;
    for (int q = 0; q < n; ++q) {
        while (j < k && z[j + 1] < q) ++j;
        const std::int64_t dx = q - v[j];
        d[q] = dx * dx + f[v[j]];
    }
}

}  // namespace

std::vector<std::int64_t> squared_distance_field(const Mask& sites) {
    const int w = sites.width();
    const int h = sites.height();
    std::vector<std::int64_t> field(static_cast<std::size_t>(w) * h, kNoSite);
    if (sites.empty()) return field;

    // Column pass: squared vertical distance to the nearest site in the column.
    for (int x = 0; x < w; ++x) {
        int last = -1;
        for (int y = 0; y < h; ++y) {
            if (sites.at(x, y)) last = y;
            if (last >= 0) {
                const std::int64_t dyv = y - last;
                field[sites.index(x, y)] = dyv * dyv;
            }
        }
        last = -1;
        for (int y = h - 1; y >= 0; --y) {
            if (sites.at(x, y)) last = y;
            if (last >= 0) {
                const std::int64_t dyv = last - y;
                const std::size_t idx = sites.index(x, y);
                field[idx] = std::min(field[idx], dyv * dyv);
            }
        }
    }

    // Row pass: lower envelope over columns.
    std::vector<std::int64_t> f(w), d(w);
    std::vector<int> v(w);
    std::vector<double> z(static_cast<std::size_t>(w) + 1);
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) f[x] = field[static_cast<std::size_t>(y) * w + x];
        edt_1d(f, d, v, z, w);
        for (int x = 0; x < w; ++x) field[static_cast<std::size_t>(y) * w + x] = d[x];
    }
    return field;
}

std::vector<Mask> nearest_seed_partition(const Mask& region, const std::vector<Mask>& seeds) {
    if (seeds.empty()) throw NoSeeds("nearest_seed_partition requires at least one seed");
    for (const Mask& seed : seeds) {
        if (seed.grid() != region.grid())
            throw GridMismatch("seed grid differs from region grid");
        if (!seed.intersects(region))
            throw SeedOutsideRegion("seed does not intersect the region");
    }
    for (std::size_t i = 0; i < seeds.size(); ++i)
        for (std::size_t j = i + 1; j < seeds.size(); ++j)
            if ((seeds[i] & region).intersects(seeds[j] & region))
                throw std::invalid_argument("seeds overlap inside the region");

    std::vector<std::vector<std::int64_t>> fields;
    fields.reserve(seeds.size());
    for (const Mask& seed : seeds) fields.push_back(squared_distance_field(seed));

    std::vector<Mask> parts(seeds.size(), Mask(region.grid()));
    for (int y = 0; y < region.height(); ++y) {
        for (int x = 0; x < region.width(); ++x) {
            if (!region.at(x, y)) continue;
            const std::size_t idx = region.index(x, y);
            std::size_t best = 0;
            std::int64_t best_d = fields[0][idx];
            for (std::size_t s = 1; s < seeds.size(); ++s) {
                if (fields[s][idx] < best_d) {
                    best_d = fields[s][idx];
                    best = s;
                }
            }
            parts[best].set(x, y);
        }
    }
    return parts;
}

Mask dilate(const Mask& mask, int radius) {
    if (radius < 0) throw ConfigInvalid("dilate: negative radius");
    if (radius == 0 || mask.empty()) return mask;
    const auto field = squared_distance_field(mask);
    const std::int64_t r2 = static_cast<std::int64_t>(radius) * radius;
    Mask out(mask.grid());
    for (int y = 0; y < mask.height(); ++y)
        for (int x = 0; x < mask.width(); ++x)
            if (field[mask.index(x, y)] <= r2) out.set(x, y);
    return out;
}

Mask erode(const Mask& mask, int radius) {
    if (radius < 0) throw ConfigInvalid("erode: negative radius");
    if (radius == 0 || mask.empty()) return mask;
    Mask complement(mask.grid());
    for (int y = 0; y < mask.height(); ++y)
        for (int x = 0; x < mask.width(); ++x)
            if (!mask.at(x, y)) complement.set(x, y);
    if (complement.empty()) return mask;  // full-grid mask has no boundary inside
    const auto field = squared_distance_field(complement);
    const std::int64_t r2 = static_cast<std::int64_t>(radius) * radius;
    Mask out(mask.grid());
    for (int y = 0; y < mask.height(); ++y)
        for (int x = 0; x < mask.width(); ++x)
            if (mask.at(x, y) && field[mask.index(x, y)] > r2) out.set(x, y);
    return out;
}

}  // namespace vertx
