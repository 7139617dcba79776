#pragma once

namespace gwbox {

/// Axis-aligned bounding box in normalized center/size form.
/// Valid boxes satisfy cx, cy in [0, 1] and w, h in (0, 1].
struct Box {
    double cx = 0.0;
    double cy = 0.0;
    double w = 0.0;
    double h = 0.0;
};

/// Corner form (x1, y1) top-left, (x2, y2) bottom-right, with x1 < x2, y1 < y2.
struct CornerBox {
    double x1 = 0.0;
    double y1 = 0.0;
    double x2 = 0.0;
    double y2 = 0.0;
};

bool is_valid(const Box& b);

/// Throws std::invalid_argument naming the offending component.
void validate_box(const Box& b);

CornerBox to_corners(const Box& b);
Box to_box(const CornerBox& c);

/// Intersection over union, in [0, 1]. Symmetric; 1 exactly iff a == b.
double iou(const Box& a, const Box& b);

/// Generalized IoU: IoU minus the enclosing-box penalty (|C| - |A u B|)/|C|.
/// In (-1, 1]; equals IoU whenever one box contains the other.
double giou(const Box& a, const Box& b);

/// Distance IoU: IoU minus squared center distance over squared enclosing diagonal.
double diou(const Box& a, const Box& b);

/// Complete IoU: DIoU minus the aspect-ratio consistency term alpha * v,
/// v = (4/pi^2) (atan(w_a/h_a) - atan(w_b/h_b))^2, alpha = v / ((1 - IoU) + v).
/// Coincides with DIoU when the aspect ratios are equal.
double ciou(const Box& a, const Box& b);

namespace detail {

/// IoU on raw center/size rectangles with no validity checks. Both sizes must
/// be positive; coordinates may lie outside the unit frame.
double iou_raw(double acx, double acy, double aw, double ah,
               double bcx, double bcy, double bw, double bh);

}  // namespace detail

}  // namespace gwbox
