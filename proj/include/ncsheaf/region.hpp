#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "ncsheaf/rational.hpp"

namespace ncsheaf {

enum class Space { real, complex };
enum class SetOp { unite, intersect };

std::string space_name(Space s);
Space space_from_name(std::string_view name);

/// Extended-rational endpoint of an open interval.
struct Bound {
    enum Kind { neg_inf = 0, finite = 1, pos_inf = 2 };
    Kind kind = finite;
    Rational value;

    static Bound minus_infinity() { return {neg_inf, Rational(0)}; }
    static Bound plus_infinity() { return {pos_inf, Rational(0)}; }
    static Bound at(Rational v) { return {finite, std::move(v)}; }

    bool is_finite() const { return kind == finite; }
    Bound shifted(const Rational& c) const {
        return is_finite() ? at(value + c) : *this;
    }

    friend bool operator==(const Bound& a, const Bound& b) {
        return a.kind == b.kind && (a.kind != finite || a.value == b.value);
    }
    friend bool operator<(const Bound& a, const Bound& b) {
        if (a.kind != b.kind) return a.kind < b.kind;
        return a.kind == finite && a.value < b.value;
    }
    friend bool operator<=(const Bound& a, const Bound& b) { return a < b || a == b; }
};

/// Strictly below / above a finite point.
bool bound_below(const Bound& lo, const Rational& x);
bool bound_above(const Bound& hi, const Rational& x);

struct OpenInterval {
    Bound lo, hi;  // lo < hi

    bool contains(const Rational& x) const { return bound_below(lo, x) && bound_above(hi, x); }
    bool subset_of(const OpenInterval& o) const { return o.lo <= lo && hi <= o.hi; }
    bool overlaps(const OpenInterval& o) const {
        return std::max(lo, o.lo) < std::min(hi, o.hi);
    }
    friend bool operator==(const OpenInterval&, const OpenInterval&) = default;
};

/// Finite union of open intervals with extended-rational endpoints, kept
/// normalized: sorted, pairwise disjoint, merged only where the union of two
/// overlapping intervals is again an interval (touching endpoints stay split,
/// the shared point is not in the set). The parts are the connected components.
class RealOpenSet {
public:
    RealOpenSet() = default;

    static RealOpenSet empty() { return {}; }
    static RealOpenSet whole();
    static RealOpenSet interval(Bound lo, Bound hi);
    static RealOpenSet interval(const Rational& lo, const Rational& hi);
    static RealOpenSet from_intervals(std::vector<OpenInterval> parts);

    bool is_empty() const { return parts_.empty(); }
    bool is_whole() const;
    const std::vector<OpenInterval>& intervals() const { return parts_; }
    int component_count() const { return static_cast<int>(parts_.size()); }
    const OpenInterval& component(int k) const { return parts_.at(static_cast<size_t>(k)); }

    bool member(const Rational& x) const;
    std::optional<int> component_of(const Rational& x) const;
    /// An interior rational point of component k.
    Rational component_rep(int k) const;

    RealOpenSet shifted(const Rational& c) const;
    bool subset_of(const RealOpenSet& other) const;

    friend RealOpenSet set_union(const RealOpenSet& a, const RealOpenSet& b);
    friend RealOpenSet set_intersect(const RealOpenSet& a, const RealOpenSet& b);
    friend bool operator==(const RealOpenSet&, const RealOpenSet&) = default;

private:
    std::vector<OpenInterval> parts_;
};

struct ClosedInterval {
    Rational lo, hi;  // lo <= hi; single points allowed

    bool contains(const Rational& x) const { return lo <= x && x <= hi; }
    friend bool operator==(const ClosedInterval&, const ClosedInterval&) = default;
};

/// Finite union of closed rational intervals, normalized (sorted, disjoint,
/// touching intervals merged).
class RealCompactSet {
public:
    RealCompactSet() = default;

    static RealCompactSet empty() { return {}; }
    static RealCompactSet interval(const Rational& lo, const Rational& hi);
    static RealCompactSet from_intervals(std::vector<ClosedInterval> parts);

    bool is_empty() const { return parts_.empty(); }
    const std::vector<ClosedInterval>& intervals() const { return parts_; }
    int component_count() const { return static_cast<int>(parts_.size()); }
    const ClosedInterval& component(int k) const { return parts_.at(static_cast<size_t>(k)); }

    bool member(const Rational& x) const;
    /// Every component has nonempty interior (no isolated points).
    bool has_dense_interior() const;

    RealCompactSet shifted(const Rational& c) const;
    bool subset_of(const RealCompactSet& other) const;
    /// Containment in an open set.
    bool inside(const RealOpenSet& open) const;

    friend RealCompactSet set_union(const RealCompactSet& a, const RealCompactSet& b);
    friend RealCompactSet set_intersect(const RealCompactSet& a, const RealCompactSet& b);
    friend bool operator==(const RealCompactSet&, const RealCompactSet&) = default;

private:
    std::vector<ClosedInterval> parts_;
};

struct OpenRect {
    Rational x_lo, x_hi, y_lo, y_hi;  // open, bounded, nonempty

    bool contains(const GaussianRational& z) const {
        return x_lo < z.re && z.re < x_hi && y_lo < z.im && z.im < y_hi;
    }
    bool subset_of(const OpenRect& o) const {
        return o.x_lo <= x_lo && x_hi <= o.x_hi && o.y_lo <= y_lo && y_hi <= o.y_hi;
    }
    bool overlaps(const OpenRect& o) const {
        return std::max(x_lo, o.x_lo) < std::min(x_hi, o.x_hi) &&
               std::max(y_lo, o.y_lo) < std::min(y_hi, o.y_hi);
    }
    friend bool operator==(const OpenRect&, const OpenRect&) = default;
};

/// Finite union of open axis-aligned rectangles, stored as the (unique) family
/// of inclusion-maximal open boxes contained in the set, sorted. Exactly closed
/// under union and intersection.
class RectUnion {
public:
    RectUnion() = default;

    static RectUnion from_rects(std::vector<OpenRect> rects);

    bool is_empty() const { return rects_.empty(); }
    const std::vector<OpenRect>& rects() const { return rects_; }

    bool member(const GaussianRational& z) const;
    RectUnion shifted(const GaussianRational& c) const;
    bool subset_of(const RectUnion& other) const;

    int component_count() const;
    std::optional<int> component_of(const GaussianRational& z) const;
    GaussianRational component_rep(int comp) const;
    /// Rect indices of one component.
    std::vector<int> component_rects(int comp) const;

    friend RectUnion set_union(const RectUnion& a, const RectUnion& b);
    friend RectUnion set_intersect(const RectUnion& a, const RectUnion& b);
    friend bool operator==(const RectUnion&, const RectUnion&) = default;

private:
    std::vector<OpenRect> rects_;
    std::vector<int> rect_component() const;  // component id per rect
};

struct Disk {
    GaussianRational center;
    Rational radius;  // > 0

    bool contains(const GaussianRational& z) const {
        return (z - center).norm_sq() < radius * radius;
    }
    /// Exact disk-in-disk test: |c1 - c2| <= r2 - r1, decided by squaring.
    bool subset_of(const Disk& o) const {
        return radius <= o.radius &&
               (center - o.center).norm_sq() <= (o.radius - radius) * (o.radius - radius);
    }
    bool overlaps(const Disk& o) const {
        return (center - o.center).norm_sq() < (radius + o.radius) * (radius + o.radius);
    }
    friend bool operator==(const Disk&, const Disk&) = default;
};

/// Finite union of open disks. Normalized: disks contained in another disk are
/// dropped, remainder sorted. Supports union only; the subset test is the
/// conservative per-disk containment check (sound, may report false negatives).
class DiskUnion {
public:
    DiskUnion() = default;

    static DiskUnion from_disks(std::vector<Disk> disks);

    bool is_empty() const { return disks_.empty(); }
    const std::vector<Disk>& disks() const { return disks_; }

    bool member(const GaussianRational& z) const;
    DiskUnion shifted(const GaussianRational& c) const;
    bool subset_of(const DiskUnion& other) const;

    int component_count() const;
    std::optional<int> component_of(const GaussianRational& z) const;
    GaussianRational component_rep(int comp) const;
    std::vector<int> component_disks(int comp) const;

    friend DiskUnion set_union(const DiskUnion& a, const DiskUnion& b);
    friend bool operator==(const DiskUnion&, const DiskUnion&) = default;

private:
    std::vector<Disk> disks_;
    std::vector<int> disk_component() const;
};

enum class ComplexKind { rect_union, disk_union };

/// Open subset of the plane: either a rectangle union (full exact boolean
/// algebra) or a disk union (union only). The empty region is kind-neutral and
/// canonicalized as an empty rectangle union.
class ComplexRegion {
public:
    ComplexRegion() : v_(RectUnion()) {}

    static ComplexRegion rects(RectUnion r);
    static ComplexRegion disks(DiskUnion d);
    static ComplexRegion empty() { return {}; }

    ComplexKind kind() const {
        return std::holds_alternative<RectUnion>(v_) ? ComplexKind::rect_union
                                                     : ComplexKind::disk_union;
    }
    bool is_empty() const;
    const RectUnion& as_rects() const;
    const DiskUnion& as_disks() const;

    bool member(const GaussianRational& z) const;
    ComplexRegion shifted(const GaussianRational& c) const;
    bool subset_of(const ComplexRegion& other) const;

    int component_count() const;
    std::optional<int> component_of(const GaussianRational& z) const;
    GaussianRational component_rep(int comp) const;

    friend ComplexRegion region_union(const ComplexRegion& a, const ComplexRegion& b);
    friend ComplexRegion region_intersect(const ComplexRegion& a, const ComplexRegion& b);
    friend bool operator==(const ComplexRegion&, const ComplexRegion&) = default;

    friend bool complex_components_overlap(const ComplexRegion& a, int ca,
                                           const ComplexRegion& b, int cb);

private:
    std::variant<RectUnion, DiskUnion> v_;
};

/// Space-tagged open region; the level type of OmegaOpen and the entry type of
/// DomainTuple.
class Region {
public:
    Region() : v_(RealOpenSet()) {}
    Region(RealOpenSet s) : v_(std::move(s)) {}      // NOLINT(google-explicit-constructor)
    Region(ComplexRegion c) : v_(std::move(c)) {}    // NOLINT(google-explicit-constructor)

    static Region empty(Space s);
    static Region whole_real() { return Region(RealOpenSet::whole()); }

    Space space() const {
        return std::holds_alternative<RealOpenSet>(v_) ? Space::real : Space::complex;
    }
    bool is_empty() const;
    /// The whole real line; complex regions are always bounded.
    bool is_whole() const;
    const RealOpenSet& real() const;
    const ComplexRegion& complex() const;

    friend bool operator==(const Region&, const Region&) = default;

private:
    std::variant<RealOpenSet, ComplexRegion> v_;
};

Region region_combine(const Region& a, const Region& b, SetOp op);
Region region_shift(const Region& a, const GaussianRational& c);
bool region_subset(const Region& a, const Region& b);
bool region_member(const Region& a, const GaussianRational& x);

int region_component_count(const Region& a);
std::optional<int> region_component_of(const Region& a, const GaussianRational& x);
GaussianRational region_component_rep(const Region& a, int comp);
/// Whether component ca of a and component cb of b intersect (a, b same kind).
bool region_components_overlap(const Region& a, int ca, const Region& b, int cb);

}  // namespace ncsheaf
