#include "gwbox/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace gwbox {

namespace {

constexpr double kPiSquared = 9.869604401089358618834491;

struct Extents {
    double x1, y1, x2, y2;
    double w, h;     // side lengths derived from the corners
    double area;     // w * h
};

Extents extents(double cx, double cy, double w, double h) {
    Extents e;
    e.x1 = cx - w / 2.0;
    e.y1 = cy - h / 2.0;
    e.x2 = cx + w / 2.0;
    e.y2 = cy + h / 2.0;
    // Widths are re-derived from the corners so that identical boxes produce
    // bit-identical intersection and union terms.
    e.w = e.x2 - e.x1;
    e.h = e.y2 - e.y1;
    e.area = e.w * e.h;
    return e;
}

double intersection_area(const Extents& a, const Extents& b) {
    const double iw = std::min(a.x2, b.x2) - std::max(a.x1, b.x1);
    if (iw <= 0.0) return 0.0;
    const double ih = std::min(a.y2, b.y2) - std::max(a.y1, b.y1);
    if (ih <= 0.0) return 0.0;
    return iw * ih;
}

// (A - I) + (B - I) + I. Every term is nonnegative, each operation is
// symmetric in a and b, and for a == b the result is exactly the shared area.
double union_area(const Extents& a, const Extents& b, double inter) {
    return ((a.area - inter) + (b.area - inter)) + inter;
}

double iou_impl(const Extents& a, const Extents& b) {
    const double inter = intersection_area(a, b);
    if (inter <= 0.0) return 0.0;
    return inter / union_area(a, b, inter);
}

}  // namespace

bool is_valid(const Box& b) {
    return std::isfinite(b.cx) && std::isfinite(b.cy) && std::isfinite(b.w) &&
           std::isfinite(b.h) && b.cx >= 0.0 && b.cx <= 1.0 && b.cy >= 0.0 &&
           b.cy <= 1.0 && b.w > 0.0 && b.w <= 1.0 && b.h > 0.0 && b.h <= 1.0;
}

void validate_box(const Box& b) {
    auto bad = [](const char* name, double v) {
        throw std::invalid_argument(std::string("box component ") + name +
                                    " out of range: " + std::to_string(v));
    };
    if (!(std::isfinite(b.cx) && b.cx >= 0.0 && b.cx <= 1.0)) bad("cx", b.cx);
    if (!(std::isfinite(b.cy) && b.cy >= 0.0 && b.cy <= 1.0)) bad("cy", b.cy);
    if (!(std::isfinite(b.w) && b.w > 0.0 && b.w <= 1.0)) bad("w", b.w);
    if (!(std::isfinite(b.h) && b.h > 0.0 && b.h <= 1.0)) bad("h", b.h);
}

CornerBox to_corners(const Box& b) {
    return CornerBox{b.cx - b.w / 2.0, b.cy - b.h / 2.0, b.cx + b.w / 2.0,
                     b.cy + b.h / 2.0};
}

Box to_box(const CornerBox& c) {
    return Box{(c.x1 + c.x2) / 2.0, (c.y1 + c.y2) / 2.0, c.x2 - c.x1, c.y2 - c.y1};
}

double iou(const Box& a, const Box& b) {
    return iou_impl(extents(a.cx, a.cy, a.w, a.h), extents(b.cx, b.cy, b.w, b.h));
}

double giou(const Box& a, const Box& b) {
    const Extents ea = extents(a.cx, a.cy, a.w, a.h);
    const Extents eb = extents(b.cx, b.cy, b.w, b.h);
    const double inter = intersection_area(ea, eb);
    const double cw = std::max(ea.x2, eb.x2) - std::min(ea.x1, eb.x1);
    const double ch = std::max(ea.y2, eb.y2) - std::min(ea.y1, eb.y1);
    const double enclosing = cw * ch;
    // (C - |A u B|) arranged as (C - I) - ((A - I) + (B - I)): symmetric, and
    // exactly zero under containment, where C coincides with the larger box.
    const double pen =
        (enclosing - inter) - ((ea.area - inter) + (eb.area - inter));
    return iou_impl(ea, eb) - std::max(0.0, pen) / enclosing;
}

double diou(const Box& a, const Box& b) {
    const Extents ea = extents(a.cx, a.cy, a.w, a.h);
    const Extents eb = extents(b.cx, b.cy, b.w, b.h);
    const double cw = std::max(ea.x2, eb.x2) - std::min(ea.x1, eb.x1);
    const double ch = std::max(ea.y2, eb.y2) - std::min(ea.y1, eb.y1);
    const double diag_sq = cw * cw + ch * ch;
    const double dist_sq =
        (a.cx - b.cx) * (a.cx - b.cx) + (a.cy - b.cy) * (a.cy - b.cy);
    return iou_impl(ea, eb) - dist_sq / diag_sq;
}

double ciou(const Box& a, const Box& b) {
    const double d = diou(a, b);
    const double da = std::atan(a.w / a.h) - std::atan(b.w / b.h);
    const double v = 4.0 / kPiSquared * da * da;
    if (v == 0.0) return d;
    const double alpha = v / ((1.0 - iou(a, b)) + v);
    return d - alpha * v;
}

namespace detail {

double iou_raw(double acx, double acy, double aw, double ah, double bcx,
               double bcy, double bw, double bh) {
    return iou_impl(extents(acx, acy, aw, ah), extents(bcx, bcy, bw, bh));
}

}  // namespace detail

}  // namespace gwbox
