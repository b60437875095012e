#pragma once

#include <vector>

#include "ncsheaf/region.hpp"

namespace ncsheaf {

enum class Tail { empty, full };

std::string tail_name(Tail t);
Tail tail_from_name(std::string_view name);

/// Open subset of the representation space: a finite level sequence (V_0..V_p)
/// of regions plus a tail marker for the levels beyond. Valid sequences satisfy
/// V_{q+1} contained in V_q and in V_q + 1 for every q; a full tail is only
/// admissible when every level is the whole real line.
struct OmegaOpen {
    Space space = Space::real;
    std::vector<Region> levels;
    Tail tail = Tail::empty;

    static OmegaOpen whole_real();
    static OmegaOpen empty_set(Space s) { return {s, {}, Tail::empty}; }
    static OmegaOpen real_levels(std::vector<RealOpenSet> vs);
    static OmegaOpen complex_levels(std::vector<ComplexRegion> vs);

    /// V_q with the tail rule applied beyond the stored levels.
    Region effective_level(int q) const;
    int level_count() const { return static_cast<int>(levels.size()); }
    /// true when every level is eventually empty (finite support).
    bool finitely_supported() const { return tail == Tail::empty; }

    /// Trims trailing empty levels (empty tail) and collapses an all-whole full
    /// tail to the canonical empty level list.
    OmegaOpen normalized() const;

    friend bool operator==(const OmegaOpen& a, const OmegaOpen& b);
};

struct OmegaValidation {
    bool valid = true;
    /// First index q whose pair (V_q, V_{q+1}) violates the condition; -1 if valid.
    int level = -1;
    explicit operator bool() const { return valid; }
};

OmegaValidation omega_validate(const OmegaOpen& v);

/// Level-wise union or intersection; both inputs must validate, and the result
/// validates again (the level condition is closed under both operations).
OmegaOpen omega_combine(const OmegaOpen& a, const OmegaOpen& b, SetOp op);

/// Whether the representation with parameter r at level q lies in the open set.
bool omega_member(const OmegaOpen& v, const GaussianRational& r, int q);

/// Whether W is contained in V level-wise.
bool omega_subset(const OmegaOpen& w, const OmegaOpen& v);

/// Upper-triangular tuple of regions indexed by 1 <= i <= j <= p, subject to
/// the condition W_ik inside W_ij and W_jk for i <= j <= k.
struct DomainTuple {
    int p = 0;
    Space space = Space::real;
    std::vector<Region> entries;  // row-major upper triangle, size p(p+1)/2

    static DomainTuple make(int p, Space s);
    const Region& at(int i, int j) const;  // 1-based
    Region& at(int i, int j);

    friend bool operator==(const DomainTuple&, const DomainTuple&) = default;
};

/// Compact counterpart (real case); entries may be empty.
struct CompactTuple {
    int p = 0;
    std::vector<RealCompactSet> entries;

    static CompactTuple make(int p);
    const RealCompactSet& at(int i, int j) const;
    RealCompactSet& at(int i, int j);

    friend bool operator==(const CompactTuple&, const CompactTuple&) = default;
};

struct TupleCheck {
    bool ok = true;
    int i = -1, j = -1, k = -1;  // first violating triple
    explicit operator bool() const { return ok; }
};

TupleCheck tuple_condition_check(const DomainTuple& t);
TupleCheck tuple_condition_check(const CompactTuple& t);

/// Domains of the order-(q+1) triangular representation over V:
/// entry (i, j) is level j-i shifted by i - q - 1.
DomainTuple build_w_tuple(const OmegaOpen& v, int q);

/// Upper-triangle index helpers (1-based matrix indices).
size_t tri_index(int p, int i, int j);

/// Disk-union open set centered at lambda: level q is the union of radius-eps
/// disks centered at lambda, lambda-1, ..., lambda-(p-q); level p is a single
/// disk. Requires 0 < eps < 1.
OmegaOpen base_open(const GaussianRational& lambda, int p, const Rational& eps);

/// Whether V has the structure produced by base_open (finite support, one
/// radius, integer-chained disk centers).
bool is_base_element(const OmegaOpen& v);

/// True when polynomials are dense in every level algebra: all real open sets,
/// and the structural disk-base elements in the complex case.
bool polynomial_density_certified(const OmegaOpen& v);

/// Compact interpolation: returns K' with K inside K' inside W, satisfying the
/// tuple condition with dense-interior entries. Real case. The construction
/// fattens each component of K_{i'k'} inside the intersection of all W_{i'j}
/// and W_{jk'} and spreads it over the index square i' <= i <= k <= k'.
CompactTuple exhaust(const CompactTuple& k, const DomainTuple& w);

/// M_k = union over j-i = k of (K_ij + q + 1 - i), for K of order q+1.
std::vector<RealCompactSet> cover_compacts(const CompactTuple& k, int q);

}  // namespace ncsheaf
