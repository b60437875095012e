#pragma once

#include "ncsheaf/omega.hpp"
#include "ncsheaf/pbw.hpp"

namespace ncsheaf {

inline Field field_of(Space s) { return s == Space::real ? Field::real : Field::complex; }

/// Locally polynomial section over an open level sequence: one polynomial per
/// connected component of each level. Levels beyond the stored ones are zero.
class Section {
public:
    /// Normalizes the parent, pads the stored levels to the parent's level
    /// count (empty tail) and trims trailing zero levels past it (full tail).
    static Section make(OmegaOpen parent, std::vector<std::vector<Polynomial>> levels);
    static Section zero(const OmegaOpen& parent);

    const OmegaOpen& parent() const { return parent_; }
    Field field() const { return field_; }
    int level_count() const { return static_cast<int>(levels_.size()); }
    const std::vector<std::vector<Polynomial>>& levels() const { return levels_; }
    /// Component polynomial; the zero polynomial beyond the stored levels.
    Polynomial polynomial_at(int q, int component) const;

    friend bool operator==(const Section& a, const Section& b) {
        return a.parent_ == b.parent_ && a.field_ == b.field_ && a.levels_ == b.levels_;
    }
    friend bool operator!=(const Section& a, const Section& b) { return !(a == b); }

private:
    OmegaOpen parent_;
    Field field_ = Field::real;
    std::vector<std::vector<Polynomial>> levels_;
};

/// a = sum_q f_q(e1) e2^q maps to the section whose level-q value is the global
/// polynomial f_q on every component.
Section embed_u(const PBWElement& a, const OmegaOpen& v);

/// Product in the section algebra over a valid v: on a component C of level q,
/// (s t)_q = sum_{i+j=q} s_i t_j(. - i), with s_i read off the component of
/// level i containing C and t_j off the component of level j containing C - i
/// (both exist for valid v). Throws InvalidOmegaError naming the violating
/// level otherwise; the product is not defined on invalid level sequences.
Section nc_mul(const OmegaOpen& v, const Section& s, const Section& t);

/// Restriction homomorphism: each component of a level of w inherits the
/// polynomial of the unique containing component of v's level.
Section tau_restrict(const OmegaOpen& v, const OmegaOpen& w, const Section& s);

/// Glues a compatible family into the unique section over the union of the
/// cover. Members must agree exactly (polynomial equality) wherever their
/// components overlap.
Section glue(const std::vector<OmegaOpen>& cover, const std::vector<Section>& sections);

/// Exact evaluation at a point of level q. Throws OutOfDomainError when the
/// point is not a member.
GaussianRational section_eval(const Section& s, int q, const GaussianRational& x);

}  // namespace ncsheaf
