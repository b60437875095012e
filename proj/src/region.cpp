#include "ncsheaf/region.hpp"

#include <algorithm>
#include <numeric>

namespace ncsheaf {

std::string space_name(Space s) { return s == Space::real ? "real" : "complex"; }

Space space_from_name(std::string_view name) {
    if (name == "real") return Space::real;
    if (name == "complex") return Space::complex;
    throw ParseError("unknown space tag: " + std::string(name));
}

bool bound_below(const Bound& lo, const Rational& x) {
    return lo.kind == Bound::neg_inf || (lo.kind == Bound::finite && lo.value < x);
}

bool bound_above(const Bound& hi, const Rational& x) {
    return hi.kind == Bound::pos_inf || (hi.kind == Bound::finite && x < hi.value);
}

namespace {

// union-find over n nodes with edges given by a predicate; component ids are
// assigned in first-occurrence order so normalized inputs get a stable order.
template <typename Overlap>
std::vector<int> components_by(int n, Overlap&& overlap) {
    std::vector<int> parent(static_cast<size_t>(n));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int a) {
        while (parent[static_cast<size_t>(a)] != a) {
            parent[static_cast<size_t>(a)] =
                parent[static_cast<size_t>(parent[static_cast<size_t>(a)])];
            a = parent[static_cast<size_t>(a)];
        }
        return a;
    };
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (overlap(i, j)) {
                int ri = find(i), rj = find(j);
                if (ri != rj) parent[static_cast<size_t>(std::max(ri, rj))] = std::min(ri, rj);
            }
    std::vector<int> id(static_cast<size_t>(n), -1);
    int next = 0;
    for (int i = 0; i < n; ++i) {
        int r = find(i);
        if (id[static_cast<size_t>(r)] < 0) id[static_cast<size_t>(r)] = next++;
        id[static_cast<size_t>(i)] = id[static_cast<size_t>(r)];
    }
    return id;
}

}  // namespace

// ---------------------------------------------------------------- RealOpenSet

RealOpenSet RealOpenSet::whole() {
    return interval(Bound::minus_infinity(), Bound::plus_infinity());
}

RealOpenSet RealOpenSet::interval(Bound lo, Bound hi) {
    RealOpenSet s;
    if (lo < hi) s.parts_.push_back({std::move(lo), std::move(hi)});
    return s;
}

RealOpenSet RealOpenSet::interval(const Rational& lo, const Rational& hi) {
    return interval(Bound::at(lo), Bound::at(hi));
}

RealOpenSet RealOpenSet::from_intervals(std::vector<OpenInterval> parts) {
    std::erase_if(parts, [](const OpenInterval& iv) { return !(iv.lo < iv.hi); });
    std::sort(parts.begin(), parts.end(), [](const OpenInterval& a, const OpenInterval& b) {
        return a.lo < b.lo || (a.lo == b.lo && a.hi < b.hi);
    });
    RealOpenSet s;
    for (auto& iv : parts) {
        // merge only on strict overlap; touching open intervals stay two components
        if (!s.parts_.empty() && iv.lo < s.parts_.back().hi) {
            if (s.parts_.back().hi < iv.hi) s.parts_.back().hi = iv.hi;
        } else {
            s.parts_.push_back(std::move(iv));
        }
    }
    return s;
}

bool RealOpenSet::is_whole() const {
    return parts_.size() == 1 && parts_[0].lo.kind == Bound::neg_inf &&
           parts_[0].hi.kind == Bound::pos_inf;
}

bool RealOpenSet::member(const Rational& x) const {
    for (const auto& iv : parts_)
        if (iv.contains(x)) return true;
    return false;
}

std::optional<int> RealOpenSet::component_of(const Rational& x) const {
    for (size_t k = 0; k < parts_.size(); ++k)
        if (parts_[k].contains(x)) return static_cast<int>(k);
    return std::nullopt;
}

Rational RealOpenSet::component_rep(int k) const {
    const OpenInterval& iv = component(k);
    if (iv.lo.is_finite() && iv.hi.is_finite()) return (iv.lo.value + iv.hi.value) / 2;
    if (iv.lo.is_finite()) return iv.lo.value + 1;
    if (iv.hi.is_finite()) return iv.hi.value - 1;
    return Rational(0);
}

RealOpenSet RealOpenSet::shifted(const Rational& c) const {
    RealOpenSet s;
    s.parts_.reserve(parts_.size());
    for (const auto& iv : parts_) s.parts_.push_back({iv.lo.shifted(c), iv.hi.shifted(c)});
    return s;
}

bool RealOpenSet::subset_of(const RealOpenSet& other) const {
    for (const auto& a : parts_) {
        bool covered = false;
        for (const auto& b : other.parts_)
            if (a.subset_of(b)) {
                covered = true;
                break;
            }
        if (!covered) return false;
    }
    return true;
}

RealOpenSet set_union(const RealOpenSet& a, const RealOpenSet& b) {
    std::vector<OpenInterval> parts = a.parts_;
    parts.insert(parts.end(), b.parts_.begin(), b.parts_.end());
    return RealOpenSet::from_intervals(std::move(parts));
}

RealOpenSet set_intersect(const RealOpenSet& a, const RealOpenSet& b) {
    std::vector<OpenInterval> parts;
    for (const auto& x : a.parts_)
        for (const auto& y : b.parts_) {
            Bound lo = std::max(x.lo, y.lo);
            Bound hi = std::min(x.hi, y.hi);
            if (lo < hi) parts.push_back({lo, hi});
        }
    return RealOpenSet::from_intervals(std::move(parts));
}

// ------------------------------------------------------------- RealCompactSet

RealCompactSet RealCompactSet::interval(const Rational& lo, const Rational& hi) {
    RealCompactSet s;
    if (lo <= hi) s.parts_.push_back({lo, hi});
    return s;
}

RealCompactSet RealCompactSet::from_intervals(std::vector<ClosedInterval> parts) {
    std::erase_if(parts, [](const ClosedInterval& iv) { return iv.hi < iv.lo; });
    std::sort(parts.begin(), parts.end(), [](const ClosedInterval& a, const ClosedInterval& b) {
        return a.lo < b.lo || (a.lo == b.lo && a.hi < b.hi);
    });
    RealCompactSet s;
    for (auto& iv : parts) {
        if (!s.parts_.empty() && iv.lo <= s.parts_.back().hi) {
            if (s.parts_.back().hi < iv.hi) s.parts_.back().hi = iv.hi;
        } else {
            s.parts_.push_back(std::move(iv));
        }
    }
    return s;
}

bool RealCompactSet::member(const Rational& x) const {
    for (const auto& iv : parts_)
        if (iv.contains(x)) return true;
    return false;
}

bool RealCompactSet::has_dense_interior() const {
    for (const auto& iv : parts_)
        if (!(iv.lo < iv.hi)) return false;
    return true;
}

RealCompactSet RealCompactSet::shifted(const Rational& c) const {
    RealCompactSet s;
    s.parts_.reserve(parts_.size());
    for (const auto& iv : parts_) s.parts_.push_back({iv.lo + c, iv.hi + c});
    return s;
}

bool RealCompactSet::subset_of(const RealCompactSet& other) const {
    for (const auto& a : parts_) {
        bool covered = false;
        for (const auto& b : other.parts_)
            if (b.lo <= a.lo && a.hi <= b.hi) {
                covered = true;
                break;
            }
        if (!covered) return false;
    }
    return true;
}

bool RealCompactSet::inside(const RealOpenSet& open) const {
    for (const auto& a : parts_) {
        bool covered = false;
        for (const auto& b : open.intervals())
            if (bound_below(b.lo, a.lo) && bound_above(b.hi, a.hi)) {
                covered = true;
                break;
            }
        if (!covered) return false;
    }
    return true;
}

RealCompactSet set_union(const RealCompactSet& a, const RealCompactSet& b) {
    std::vector<ClosedInterval> parts = a.parts_;
    parts.insert(parts.end(), b.parts_.begin(), b.parts_.end());
    return RealCompactSet::from_intervals(std::move(parts));
}

RealCompactSet set_intersect(const RealCompactSet& a, const RealCompactSet& b) {
    std::vector<ClosedInterval> parts;
    for (const auto& x : a.parts_)
        for (const auto& y : b.parts_) {
            Rational lo = std::max(x.lo, y.lo);
            Rational hi = std::min(x.hi, y.hi);
            if (lo <= hi) parts.push_back({lo, hi});
        }
    return RealCompactSet::from_intervals(std::move(parts));
}

// ------------------------------------------------------------------ RectUnion

namespace {

// Piece decomposition of an axis: for sorted cuts x_0 < ... < x_{n-1}, piece 2k
// is the point {x_k} and piece 2k+1 the open gap (x_k, x_{k+1}). Any set built
// from open rects with edges on the cuts is a union of piece products.
struct Axis {
    std::vector<Rational> cuts;

    int pieces() const { return cuts.empty() ? 0 : static_cast<int>(2 * cuts.size() - 1); }
    Rational rep(int piece) const {
        size_t k = static_cast<size_t>(piece) / 2;
        if (piece % 2 == 0) return cuts[k];
        return (cuts[k] + cuts[k + 1]) / 2;
    }
};

Axis make_axis(std::vector<Rational> values) {
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    return Axis{std::move(values)};
}

struct PieceGrid {
    Axis x, y;
    std::vector<char> on;  // row-major: x piece * ny + y piece

    bool at(int px, int py) const {
        return on[static_cast<size_t>(px) * static_cast<size_t>(y.pieces()) +
                  static_cast<size_t>(py)] != 0;
    }
};

template <typename Member>
PieceGrid make_grid(Axis x, Axis y, Member&& member) {
    PieceGrid g{std::move(x), std::move(y), {}};
    int nx = g.x.pieces(), ny = g.y.pieces();
    g.on.assign(static_cast<size_t>(nx) * static_cast<size_t>(ny), 0);
    for (int px = 0; px < nx; ++px) {
        Rational rx = g.x.rep(px);
        for (int py = 0; py < ny; ++py)
            g.on[static_cast<size_t>(px) * static_cast<size_t>(ny) + static_cast<size_t>(py)] =
                member(rx, g.y.rep(py)) ? 1 : 0;
    }
    return g;
}

// All inclusion-maximal open boxes of the (open) set described by the grid.
std::vector<OpenRect> maximal_rects(const PieceGrid& g) {
    int nx = static_cast<int>(g.x.cuts.size());
    int ny = static_cast<int>(g.y.cuts.size());
    std::vector<OpenRect> cands;
    std::vector<char> colmask(static_cast<size_t>(std::max(g.y.pieces(), 0)));
    for (int a = 0; a + 1 < nx; ++a) {
        std::fill(colmask.begin(), colmask.end(), 1);
        for (int b = a + 1; b < nx; ++b) {
            // extend the x-range to (cuts[a], cuts[b]): add pieces 2b-2 and 2b-1
            for (int py = 0; py < g.y.pieces(); ++py) {
                bool add = g.at(2 * b - 1, py) && (b == a + 1 || g.at(2 * b - 2, py));
                colmask[static_cast<size_t>(py)] =
                    colmask[static_cast<size_t>(py)] && add ? 1 : 0;
            }
            for (int c = 0; c + 1 < ny; ++c) {
                if (!colmask[static_cast<size_t>(2 * c + 1)]) continue;
                bool left_extendable = c > 0 && colmask[static_cast<size_t>(2 * c - 1)] &&
                                       colmask[static_cast<size_t>(2 * c)];
                if (left_extendable) continue;
                int d = c + 1;
                while (d + 1 < ny && colmask[static_cast<size_t>(2 * d)] &&
                       colmask[static_cast<size_t>(2 * d + 1)])
                    ++d;
                cands.push_back({g.x.cuts[static_cast<size_t>(a)],
                                 g.x.cuts[static_cast<size_t>(b)],
                                 g.y.cuts[static_cast<size_t>(c)],
                                 g.y.cuts[static_cast<size_t>(d)]});
            }
        }
    }
    std::vector<OpenRect> keep;
    for (const auto& r : cands) {
        bool dominated = false;
        for (const auto& s : cands)
            if (!(s == r) && r.subset_of(s)) {
                dominated = true;
                break;
            }
        if (!dominated) keep.push_back(r);
    }
    std::sort(keep.begin(), keep.end(), [](const OpenRect& a, const OpenRect& b) {
        if (a.x_lo != b.x_lo) return a.x_lo < b.x_lo;
        if (a.y_lo != b.y_lo) return a.y_lo < b.y_lo;
        if (a.x_hi != b.x_hi) return a.x_hi < b.x_hi;
        return a.y_hi < b.y_hi;
    });
    return keep;
}

Axis rect_axis_x(const std::vector<OpenRect>& rs, const std::vector<OpenRect>& more = {}) {
    std::vector<Rational> v;
    for (const auto& r : rs) {
        v.push_back(r.x_lo);
        v.push_back(r.x_hi);
    }
    for (const auto& r : more) {
        v.push_back(r.x_lo);
        v.push_back(r.x_hi);
    }
    return make_axis(std::move(v));
}

Axis rect_axis_y(const std::vector<OpenRect>& rs, const std::vector<OpenRect>& more = {}) {
    std::vector<Rational> v;
    for (const auto& r : rs) {
        v.push_back(r.y_lo);
        v.push_back(r.y_hi);
    }
    for (const auto& r : more) {
        v.push_back(r.y_lo);
        v.push_back(r.y_hi);
    }
    return make_axis(std::move(v));
}

bool rects_member(const std::vector<OpenRect>& rs, const Rational& x, const Rational& y) {
    GaussianRational z{x, y};
    for (const auto& r : rs)
        if (r.contains(z)) return true;
    return false;
}

}  // namespace

RectUnion RectUnion::from_rects(std::vector<OpenRect> rects) {
    std::erase_if(rects, [](const OpenRect& r) { return !(r.x_lo < r.x_hi && r.y_lo < r.y_hi); });
    RectUnion u;
    if (rects.empty()) return u;
    PieceGrid g = make_grid(rect_axis_x(rects), rect_axis_y(rects),
                            [&](const Rational& x, const Rational& y) {
                                return rects_member(rects, x, y);
                            });
    u.rects_ = maximal_rects(g);
    return u;
}

bool RectUnion::member(const GaussianRational& z) const {
    for (const auto& r : rects_)
        if (r.contains(z)) return true;
    return false;
}

RectUnion RectUnion::shifted(const GaussianRational& c) const {
    RectUnion u;
    u.rects_.reserve(rects_.size());
    for (const auto& r : rects_)
        u.rects_.push_back({r.x_lo + c.re, r.x_hi + c.re, r.y_lo + c.im, r.y_hi + c.im});
    return u;
}

bool RectUnion::subset_of(const RectUnion& other) const {
    if (is_empty()) return true;
    Axis ax = rect_axis_x(rects_, other.rects_);
    Axis ay = rect_axis_y(rects_, other.rects_);
    for (int px = 0; px < ax.pieces(); ++px) {
        Rational rx = ax.rep(px);
        for (int py = 0; py < ay.pieces(); ++py) {
            Rational ry = ay.rep(py);
            if (rects_member(rects_, rx, ry) && !rects_member(other.rects_, rx, ry))
                return false;
        }
    }
    return true;
}

std::vector<int> RectUnion::rect_component() const {
    return components_by(static_cast<int>(rects_.size()), [&](int i, int j) {
        return rects_[static_cast<size_t>(i)].overlaps(rects_[static_cast<size_t>(j)]);
    });
}

int RectUnion::component_count() const {
    auto id = rect_component();
    int n = 0;
    for (int c : id) n = std::max(n, c + 1);
    return n;
}

std::optional<int> RectUnion::component_of(const GaussianRational& z) const {
    auto id = rect_component();
    for (size_t k = 0; k < rects_.size(); ++k)
        if (rects_[k].contains(z)) return id[k];
    return std::nullopt;
}

GaussianRational RectUnion::component_rep(int comp) const {
    auto id = rect_component();
    for (size_t k = 0; k < rects_.size(); ++k)
        if (id[k] == comp)
            return {(rects_[k].x_lo + rects_[k].x_hi) / 2, (rects_[k].y_lo + rects_[k].y_hi) / 2};
    throw DomainError("rect union: no such component");
}

std::vector<int> RectUnion::component_rects(int comp) const {
    auto id = rect_component();
    std::vector<int> out;
    for (size_t k = 0; k < rects_.size(); ++k)
        if (id[k] == comp) out.push_back(static_cast<int>(k));
    return out;
}

RectUnion set_union(const RectUnion& a, const RectUnion& b) {
    if (a.is_empty()) return b;
    if (b.is_empty()) return a;
    PieceGrid g = make_grid(rect_axis_x(a.rects_, b.rects_), rect_axis_y(a.rects_, b.rects_),
                            [&](const Rational& x, const Rational& y) {
                                return rects_member(a.rects_, x, y) ||
                                       rects_member(b.rects_, x, y);
                            });
    RectUnion u;
    u.rects_ = maximal_rects(g);
    return u;
}

RectUnion set_intersect(const RectUnion& a, const RectUnion& b) {
    if (a.is_empty() || b.is_empty()) return {};
    PieceGrid g = make_grid(rect_axis_x(a.rects_, b.rects_), rect_axis_y(a.rects_, b.rects_),
                            [&](const Rational& x, const Rational& y) {
                                return rects_member(a.rects_, x, y) &&
                                       rects_member(b.rects_, x, y);
                            });
    RectUnion u;
    u.rects_ = maximal_rects(g);
    return u;
}

// ------------------------------------------------------------------ DiskUnion

DiskUnion DiskUnion::from_disks(std::vector<Disk> disks) {
    for (const auto& d : disks)
        if (!(d.radius > 0)) throw ValueRangeError("disk radius must be positive");
    std::vector<char> drop(disks.size(), 0);
    for (size_t i = 0; i < disks.size(); ++i)
        for (size_t j = 0; j < disks.size(); ++j) {
            if (i == j || drop[j]) continue;
            if (disks[i].subset_of(disks[j]) && (!(disks[j] == disks[i]) || j < i)) {
                drop[i] = 1;
                break;
            }
        }
    DiskUnion u;
    for (size_t i = 0; i < disks.size(); ++i)
        if (!drop[i]) u.disks_.push_back(disks[i]);
    std::sort(u.disks_.begin(), u.disks_.end(), [](const Disk& a, const Disk& b) {
        if (a.center.re != b.center.re) return a.center.re < b.center.re;
        if (a.center.im != b.center.im) return a.center.im < b.center.im;
        return a.radius < b.radius;
    });
    return u;
}

bool DiskUnion::member(const GaussianRational& z) const {
    for (const auto& d : disks_)
        if (d.contains(z)) return true;
    return false;
}

DiskUnion DiskUnion::shifted(const GaussianRational& c) const {
    DiskUnion u;
    u.disks_.reserve(disks_.size());
    for (const auto& d : disks_) u.disks_.push_back({d.center + c, d.radius});
    return u;
}

bool DiskUnion::subset_of(const DiskUnion& other) const {
    // conservative: every disk must fit in a single disk of the other side
    for (const auto& d : disks_) {
        bool covered = false;
        for (const auto& e : other.disks_)
            if (d.subset_of(e)) {
                covered = true;
                break;
            }
        if (!covered) return false;
    }
    return true;
}

std::vector<int> DiskUnion::disk_component() const {
    return components_by(static_cast<int>(disks_.size()), [&](int i, int j) {
        return disks_[static_cast<size_t>(i)].overlaps(disks_[static_cast<size_t>(j)]);
    });
}

int DiskUnion::component_count() const {
    auto id = disk_component();
    int n = 0;
    for (int c : id) n = std::max(n, c + 1);
    return n;
}

std::optional<int> DiskUnion::component_of(const GaussianRational& z) const {
    auto id = disk_component();
    for (size_t k = 0; k < disks_.size(); ++k)
        if (disks_[k].contains(z)) return id[k];
    return std::nullopt;
}

GaussianRational DiskUnion::component_rep(int comp) const {
    auto id = disk_component();
    for (size_t k = 0; k < disks_.size(); ++k)
        if (id[k] == comp) return disks_[k].center;
    throw DomainError("disk union: no such component");
}

std::vector<int> DiskUnion::component_disks(int comp) const {
    auto id = disk_component();
    std::vector<int> out;
    for (size_t k = 0; k < disks_.size(); ++k)
        if (id[k] == comp) out.push_back(static_cast<int>(k));
    return out;
}

DiskUnion set_union(const DiskUnion& a, const DiskUnion& b) {
    std::vector<Disk> ds = a.disks_;
    ds.insert(ds.end(), b.disks_.begin(), b.disks_.end());
    return DiskUnion::from_disks(std::move(ds));
}

// -------------------------------------------------------------- ComplexRegion

ComplexRegion ComplexRegion::rects(RectUnion r) {
    ComplexRegion c;
    if (!r.is_empty()) c.v_ = std::move(r);
    return c;
}

ComplexRegion ComplexRegion::disks(DiskUnion d) {
    ComplexRegion c;
    if (!d.is_empty()) c.v_ = std::move(d);
    return c;
}

bool ComplexRegion::is_empty() const {
    if (const auto* r = std::get_if<RectUnion>(&v_)) return r->is_empty();
    return std::get<DiskUnion>(v_).is_empty();
}

const RectUnion& ComplexRegion::as_rects() const {
    if (const auto* r = std::get_if<RectUnion>(&v_)) return *r;
    throw UnsupportedOpError("complex region is a disk union, not a rectangle union");
}

const DiskUnion& ComplexRegion::as_disks() const {
    if (const auto* d = std::get_if<DiskUnion>(&v_)) return *d;
    throw UnsupportedOpError("complex region is a rectangle union, not a disk union");
}

bool ComplexRegion::member(const GaussianRational& z) const {
    return std::visit([&](const auto& u) { return u.member(z); }, v_);
}

ComplexRegion ComplexRegion::shifted(const GaussianRational& c) const {
    return std::visit(
        [&](const auto& u) {
            ComplexRegion out;
            if (!u.is_empty()) out.v_ = u.shifted(c);
            return out;
        },
        v_);
}

bool ComplexRegion::subset_of(const ComplexRegion& other) const {
    if (is_empty()) return true;
    if (other.is_empty()) return false;
    if (kind() != other.kind())
        throw UnsupportedOpError("subset test across rectangle and disk unions");
    if (kind() == ComplexKind::rect_union) return as_rects().subset_of(other.as_rects());
    return as_disks().subset_of(other.as_disks());
}

int ComplexRegion::component_count() const {
    return std::visit([](const auto& u) { return u.component_count(); }, v_);
}

std::optional<int> ComplexRegion::component_of(const GaussianRational& z) const {
    return std::visit([&](const auto& u) { return u.component_of(z); }, v_);
}

GaussianRational ComplexRegion::component_rep(int comp) const {
    return std::visit([&](const auto& u) { return u.component_rep(comp); }, v_);
}

ComplexRegion region_union(const ComplexRegion& a, const ComplexRegion& b) {
    if (a.is_empty()) return b;
    if (b.is_empty()) return a;
    if (a.kind() != b.kind())
        throw UnsupportedOpError("union across rectangle and disk unions");
    if (a.kind() == ComplexKind::rect_union)
        return ComplexRegion::rects(set_union(a.as_rects(), b.as_rects()));
    return ComplexRegion::disks(set_union(a.as_disks(), b.as_disks()));
}

ComplexRegion region_intersect(const ComplexRegion& a, const ComplexRegion& b) {
    if (a.is_empty() || b.is_empty()) return ComplexRegion::empty();
    if (a.kind() != b.kind())
        throw UnsupportedOpError("intersection across rectangle and disk unions");
    if (a.kind() == ComplexKind::disk_union)
        throw UnsupportedOpError("intersection of disk unions is not supported");
    return ComplexRegion::rects(set_intersect(a.as_rects(), b.as_rects()));
}

bool complex_components_overlap(const ComplexRegion& a, int ca, const ComplexRegion& b, int cb) {
    if (a.is_empty() || b.is_empty()) return false;
    if (a.kind() != b.kind())
        throw UnsupportedOpError("overlap test across rectangle and disk unions");
    if (a.kind() == ComplexKind::rect_union) {
        auto ra = a.as_rects().component_rects(ca);
        auto rb = b.as_rects().component_rects(cb);
        for (int i : ra)
            for (int j : rb)
                if (a.as_rects().rects()[static_cast<size_t>(i)].overlaps(
                        b.as_rects().rects()[static_cast<size_t>(j)]))
                    return true;
        return false;
    }
    auto da = a.as_disks().component_disks(ca);
    auto db = b.as_disks().component_disks(cb);
    for (int i : da)
        for (int j : db)
            if (a.as_disks().disks()[static_cast<size_t>(i)].overlaps(
                    b.as_disks().disks()[static_cast<size_t>(j)]))
                return true;
    return false;
}

// --------------------------------------------------------------------- Region

Region Region::empty(Space s) {
    if (s == Space::real) return Region(RealOpenSet::empty());
    return Region(ComplexRegion::empty());
}

bool Region::is_empty() const {
    if (const auto* r = std::get_if<RealOpenSet>(&v_)) return r->is_empty();
    return std::get<ComplexRegion>(v_).is_empty();
}

bool Region::is_whole() const {
    if (const auto* r = std::get_if<RealOpenSet>(&v_)) return r->is_whole();
    return false;
}

const RealOpenSet& Region::real() const {
    if (const auto* r = std::get_if<RealOpenSet>(&v_)) return *r;
    throw DomainError("expected a real region");
}

const ComplexRegion& Region::complex() const {
    if (const auto* c = std::get_if<ComplexRegion>(&v_)) return *c;
    throw DomainError("expected a complex region");
}

namespace {

void require_same_space(const Region& a, const Region& b) {
    if (a.space() != b.space())
        throw PreconditionError("region space mismatch: " + space_name(a.space()) + " vs " +
                                space_name(b.space()));
}

}  // namespace

Region region_combine(const Region& a, const Region& b, SetOp op) {
    require_same_space(a, b);
    if (a.space() == Space::real) {
        return op == SetOp::unite ? Region(set_union(a.real(), b.real()))
                                  : Region(set_intersect(a.real(), b.real()));
    }
    return op == SetOp::unite ? Region(region_union(a.complex(), b.complex()))
                              : Region(region_intersect(a.complex(), b.complex()));
}

Region region_shift(const Region& a, const GaussianRational& c) {
    if (a.space() == Space::real) {
        if (!c.is_real()) throw FieldMismatchError("complex shift of a real region");
        return Region(a.real().shifted(c.re));
    }
    return Region(a.complex().shifted(c));
}

bool region_subset(const Region& a, const Region& b) {
    require_same_space(a, b);
    if (a.space() == Space::real) return a.real().subset_of(b.real());
    return a.complex().subset_of(b.complex());
}

bool region_member(const Region& a, const GaussianRational& x) {
    if (a.space() == Space::real) {
        if (!x.is_real()) throw FieldMismatchError("complex point in a real region");
        return a.real().member(x.re);
    }
    return a.complex().member(x);
}

int region_component_count(const Region& a) {
    if (a.space() == Space::real) return a.real().component_count();
    return a.complex().component_count();
}

std::optional<int> region_component_of(const Region& a, const GaussianRational& x) {
    if (a.space() == Space::real) {
        if (!x.is_real()) return std::nullopt;
        return a.real().component_of(x.re);
    }
    return a.complex().component_of(x);
}

GaussianRational region_component_rep(const Region& a, int comp) {
    if (a.space() == Space::real) return GaussianRational(a.real().component_rep(comp));
    return a.complex().component_rep(comp);
}

bool region_components_overlap(const Region& a, int ca, const Region& b, int cb) {
    require_same_space(a, b);
    if (a.space() == Space::real) {
        return a.real().component(ca).overlaps(b.real().component(cb));
    }
    return complex_components_overlap(a.complex(), ca, b.complex(), cb);
}

}  // namespace ncsheaf
