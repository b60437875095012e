#include "ncsheaf/omega.hpp"

#include <algorithm>

namespace ncsheaf {

std::string tail_name(Tail t) { return t == Tail::empty ? "empty" : "full"; }

Tail tail_from_name(std::string_view name) {
    if (name == "empty") return Tail::empty;
    if (name == "full") return Tail::full;
    throw ParseError("unknown tail tag: " + std::string(name));
}

OmegaOpen OmegaOpen::whole_real() { return {Space::real, {}, Tail::full}; }

OmegaOpen OmegaOpen::real_levels(std::vector<RealOpenSet> vs) {
    OmegaOpen v{Space::real, {}, Tail::empty};
    v.levels.reserve(vs.size());
    for (auto& s : vs) v.levels.emplace_back(std::move(s));
    return v;
}

OmegaOpen OmegaOpen::complex_levels(std::vector<ComplexRegion> vs) {
    OmegaOpen v{Space::complex, {}, Tail::empty};
    v.levels.reserve(vs.size());
    for (auto& s : vs) v.levels.emplace_back(std::move(s));
    return v;
}

Region OmegaOpen::effective_level(int q) const {
    if (q >= 0 && q < level_count()) return levels[static_cast<size_t>(q)];
    if (tail == Tail::full && space == Space::real) return Region::whole_real();
    return Region::empty(space);
}

OmegaOpen OmegaOpen::normalized() const {
    OmegaOpen v = *this;
    if (v.tail == Tail::empty) {
        while (!v.levels.empty() && v.levels.back().is_empty()) v.levels.pop_back();
    } else {
        bool all_whole = true;
        for (const auto& l : v.levels) all_whole = all_whole && l.is_whole();
        if (all_whole) v.levels.clear();
    }
    return v;
}

bool operator==(const OmegaOpen& a, const OmegaOpen& b) {
    OmegaOpen na = a.normalized(), nb = b.normalized();
    return na.space == nb.space && na.tail == nb.tail && na.levels == nb.levels;
}

OmegaValidation omega_validate(const OmegaOpen& v) {
    for (int q = 0; q < v.level_count(); ++q)
        if (v.levels[static_cast<size_t>(q)].space() != v.space) return {false, q};
    if (v.tail == Tail::full) {
        // only the whole real line can continue forever
        if (v.space != Space::real) return {false, 0};
        for (int q = 0; q < v.level_count(); ++q)
            if (!v.levels[static_cast<size_t>(q)].is_whole()) return {false, q};
        return {true, -1};
    }
    GaussianRational one{Rational(1)};
    for (int q = 0; q + 1 < v.level_count(); ++q) {
        const Region& cur = v.levels[static_cast<size_t>(q)];
        const Region& next = v.levels[static_cast<size_t>(q + 1)];
        if (next.is_empty()) continue;
        if (!region_subset(next, cur)) return {false, q};
        if (!region_subset(next, region_shift(cur, one))) return {false, q};
    }
    return {true, -1};
}

OmegaOpen omega_combine(const OmegaOpen& a, const OmegaOpen& b, SetOp op) {
    if (a.space != b.space)
        throw PreconditionError("level sequences live in different spaces");
    if (auto va = omega_validate(a); !va)
        throw InvalidOmegaError(va.level, "left operand violates the level condition at level " +
                                              std::to_string(va.level));
    if (auto vb = omega_validate(b); !vb)
        throw InvalidOmegaError(vb.level, "right operand violates the level condition at level " +
                                              std::to_string(vb.level));

    OmegaOpen r{a.space, {}, Tail::empty};
    if (op == SetOp::unite)
        r.tail = (a.tail == Tail::full || b.tail == Tail::full) ? Tail::full : Tail::empty;
    else
        r.tail = (a.tail == Tail::full && b.tail == Tail::full) ? Tail::full : Tail::empty;

    int n = std::max(a.level_count(), b.level_count());
    for (int q = 0; q < n; ++q)
        r.levels.push_back(region_combine(a.effective_level(q), b.effective_level(q), op));
    r = r.normalized();

    if (auto vr = omega_validate(r); !vr)
        throw InvalidOmegaError(vr.level, "combined level sequence failed validation at level " +
                                              std::to_string(vr.level));
    return r;
}

bool omega_member(const OmegaOpen& v, const GaussianRational& r, int q) {
    if (q < 0) return false;
    Region level = v.effective_level(q);
    if (level.is_empty()) return false;
    if (level.is_whole()) return true;
    return region_member(level, r);
}

bool omega_subset(const OmegaOpen& w, const OmegaOpen& v) {
    if (w.space != v.space) return false;
    int n = std::max(w.level_count(), v.level_count()) + 1;
    for (int q = 0; q < n; ++q) {
        Region lw = w.effective_level(q);
        if (lw.is_empty()) continue;
        Region lv = v.effective_level(q);
        if (lv.is_whole()) continue;
        if (lw.is_whole() || !region_subset(lw, lv)) return false;
    }
    if (w.tail == Tail::full && v.tail != Tail::full) return false;
    return true;
}

size_t tri_index(int p, int i, int j) {
    // 1-based (i, j), i <= j: row-major offset in the upper triangle
    int row_start = (i - 1) * p - (i - 1) * (i - 2) / 2;
    return static_cast<size_t>(row_start + (j - i));
}

DomainTuple DomainTuple::make(int p, Space s) {
    DomainTuple t;
    t.p = p;
    t.space = s;
    t.entries.assign(static_cast<size_t>(p) * (static_cast<size_t>(p) + 1) / 2,
                     Region::empty(s));
    return t;
}

const Region& DomainTuple::at(int i, int j) const { return entries[tri_index(p, i, j)]; }
Region& DomainTuple::at(int i, int j) { return entries[tri_index(p, i, j)]; }

CompactTuple CompactTuple::make(int p) {
    CompactTuple t;
    t.p = p;
    t.entries.assign(static_cast<size_t>(p) * (static_cast<size_t>(p) + 1) / 2,
                     RealCompactSet::empty());
    return t;
}

const RealCompactSet& CompactTuple::at(int i, int j) const {
    return entries[tri_index(p, i, j)];
}
RealCompactSet& CompactTuple::at(int i, int j) { return entries[tri_index(p, i, j)]; }

TupleCheck tuple_condition_check(const DomainTuple& t) {
    for (int i = 1; i <= t.p; ++i)
        for (int j = i; j <= t.p; ++j)
            for (int k = j; k <= t.p; ++k) {
                const Region& ik = t.at(i, k);
                if (ik.is_empty()) continue;
                if (!region_subset(ik, t.at(i, j)) || !region_subset(ik, t.at(j, k)))
                    return {false, i, j, k};
            }
    return {};
}

TupleCheck tuple_condition_check(const CompactTuple& t) {
    for (int i = 1; i <= t.p; ++i)
        for (int j = i; j <= t.p; ++j)
            for (int k = j; k <= t.p; ++k) {
                const RealCompactSet& ik = t.at(i, k);
                if (ik.is_empty()) continue;
                if (!ik.subset_of(t.at(i, j)) || !ik.subset_of(t.at(j, k)))
                    return {false, i, j, k};
            }
    return {};
}

DomainTuple build_w_tuple(const OmegaOpen& v, int q) {
    if (auto val = omega_validate(v); !val)
        throw InvalidOmegaError(val.level, "level sequence violates the level condition at level " +
                                               std::to_string(val.level));
    if (q < 0) throw ValueRangeError("negative level");
    DomainTuple t = DomainTuple::make(q + 1, v.space);
    for (int i = 1; i <= q + 1; ++i)
        for (int j = i; j <= q + 1; ++j) {
            GaussianRational shift{Rational(i - q - 1)};
            t.at(i, j) = region_shift(v.effective_level(j - i), shift);
        }
    return t;
}

OmegaOpen base_open(const GaussianRational& lambda, int p, const Rational& eps) {
    if (!(eps > 0 && eps < 1)) throw ValueRangeError("disk radius must lie in (0, 1)");
    if (p < 0) throw ValueRangeError("negative support level");
    std::vector<ComplexRegion> levels;
    levels.reserve(static_cast<size_t>(p) + 1);
    for (int q = 0; q <= p; ++q) {
        std::vector<Disk> disks;
        for (int k = 0; k <= p - q; ++k)
            disks.push_back({lambda - GaussianRational(Rational(k)), eps});
        levels.push_back(ComplexRegion::disks(DiskUnion::from_disks(std::move(disks))));
    }
    return OmegaOpen::complex_levels(std::move(levels));
}

bool is_base_element(const OmegaOpen& v) {
    if (v.space != Space::complex || v.tail != Tail::empty) return false;
    OmegaOpen n = v.normalized();
    if (n.levels.empty()) return false;
    int p = n.level_count() - 1;
    const Region& top = n.levels.back();
    if (top.complex().kind() != ComplexKind::disk_union) return false;
    const auto& top_disks = top.complex().as_disks().disks();
    if (top_disks.size() != 1) return false;
    GaussianRational lambda = top_disks[0].center;
    Rational eps = top_disks[0].radius;
    if (!(eps > 0 && eps < 1)) return false;
    return n == base_open(lambda, p, eps);
}

bool polynomial_density_certified(const OmegaOpen& v) {
    if (v.space == Space::real) return true;
    OmegaOpen n = v.normalized();
    return n.levels.empty() || is_base_element(n);
}

CompactTuple exhaust(const CompactTuple& k, const DomainTuple& w) {
    if (k.p != w.p) throw PreconditionError("tuple orders differ");
    if (w.space != Space::real)
        throw PreconditionError("compact interpolation is implemented for real tuples");
    if (auto c = tuple_condition_check(w); !c)
        throw PreconditionError("open tuple violates its inclusion condition at (" +
                                std::to_string(c.i) + "," + std::to_string(c.j) + "," +
                                std::to_string(c.k) + ")");
    for (int i = 1; i <= k.p; ++i)
        for (int j = i; j <= k.p; ++j)
            if (!k.at(i, j).inside(w.at(i, j).real()))
                throw PreconditionError("compact entry (" + std::to_string(i) + "," +
                                        std::to_string(j) + ") is not inside its open entry");

    CompactTuple out = CompactTuple::make(k.p);
    for (int i1 = 1; i1 <= k.p; ++i1)
        for (int k1 = i1; k1 <= k.p; ++k1) {
            const RealCompactSet& kk = k.at(i1, k1);
            if (kk.is_empty()) continue;
            RealOpenSet g = RealOpenSet::whole();
            for (int j = i1; j <= k1; ++j) {
                g = set_intersect(g, w.at(i1, j).real());
                g = set_intersect(g, w.at(j, k1).real());
            }
            for (int c = 0; c < kk.component_count(); ++c) {
                const ClosedInterval& comp = kk.component(c);
                auto host = g.component_of(comp.lo);
                if (!host) throw PreconditionError("compact component escaped its open hull");
                const OpenInterval& hull = g.component(*host);
                // fatten the component strictly inside the hull interval
                Rational lo = hull.lo.is_finite() ? (hull.lo.value + comp.lo) / 2
                                                  : comp.lo - 1;
                Rational hi = hull.hi.is_finite() ? (hull.hi.value + comp.hi) / 2
                                                  : comp.hi + 1;
                RealCompactSet fat = RealCompactSet::interval(lo, hi);
                for (int i = i1; i <= k1; ++i)
                    for (int j = i; j <= k1; ++j)
                        out.at(i, j) = set_union(out.at(i, j), fat);
            }
        }
    return out;
}

std::vector<RealCompactSet> cover_compacts(const CompactTuple& k, int q) {
    if (k.p != q + 1) throw PreconditionError("compact tuple order must be q + 1");
    std::vector<RealCompactSet> m(static_cast<size_t>(q) + 1);
    for (int i = 1; i <= k.p; ++i)
        for (int j = i; j <= k.p; ++j) {
            const RealCompactSet& e = k.at(i, j);
            if (e.is_empty()) continue;
            auto& slot = m[static_cast<size_t>(j - i)];
            slot = set_union(slot, e.shifted(Rational(q + 1 - i)));
        }
    return m;
}

}  // namespace ncsheaf
