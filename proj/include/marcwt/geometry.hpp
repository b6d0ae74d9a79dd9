#pragma once

#include <vector>

namespace marcwt {

// { (r1, r2) : r1, r2 >= 0, r1 <= r1_cap, r2 <= r2_cap, r1 + r2 <= sum_cap }.
// Empty exactly when some cap is negative (strict reading of the constraint set).
struct RatePentagon {
    double r1_cap = 0, r2_cap = 0, sum_cap = 0;

    bool is_empty() const;
    RatePentagon normalized() const;  // clamps sum_cap into [max(r1,r2) form, r1+r2]
};

struct RatePoint {
    double x = 0, y = 0;
};

// Convex polygon in the nonnegative quadrant containing the origin.
// Canonical form: counterclockwise, starting at (0,0), no three consecutive
// collinear vertices. An empty region has no vertices at all and is distinct
// from the degenerate region {(0,0)}.
class RateRegion {
public:
    RateRegion() = default;
    static RateRegion empty_region() { return RateRegion{}; }
    static RateRegion from_points(std::vector<RatePoint> pts);  // hull + canonicalize

    const std::vector<RatePoint>& vertices() const { return verts_; }
    bool is_empty() const { return verts_.empty(); }

private:
    std::vector<RatePoint> verts_;
};

RateRegion pentagon_vertices(const RatePentagon& p);
RateRegion hull_union(const std::vector<RateRegion>& regions);
double area(const RateRegion& r);  // shoelace, bits^2
// True iff every vertex of `inner` lies in `outer` dilated by tol (Euclidean).
bool contains(const RateRegion& outer, const RateRegion& inner, double tol);
// max over vertices of the dot product with (dx, dy); 0 for the empty region.
double support(const RateRegion& r, double dx, double dy);

}  // namespace marcwt
