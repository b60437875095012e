#include "ncsheaf/section.hpp"

#include <algorithm>

namespace ncsheaf {

namespace {

void require_valid(const OmegaOpen& v, const char* who) {
    if (auto val = omega_validate(v); !val)
        throw InvalidOmegaError(val.level, std::string(who) +
                                               " violates the level condition at level " +
                                               std::to_string(val.level));
}

bool level_is_zero(const std::vector<Polynomial>& polys) {
    return std::all_of(polys.begin(), polys.end(),
                       [](const Polynomial& p) { return p.is_zero(); });
}

int component_of_or_throw(const Region& level, const GaussianRational& x, const char* what) {
    if (level.is_whole()) return 0;
    auto c = region_component_of(level, x);
    if (!c)
        throw DomainError(std::string("internal: ") + what +
                          " lookup left the expected level (derived inclusion violated)");
    return *c;
}

}  // namespace

Section Section::make(OmegaOpen parent, std::vector<std::vector<Polynomial>> levels) {
    Section s;
    s.parent_ = parent.normalized();
    s.field_ = field_of(s.parent_.space);

    int base = s.parent_.level_count();
    if (s.parent_.tail == Tail::empty) {
        for (int q = base; q < static_cast<int>(levels.size()); ++q)
            if (!level_is_zero(levels[static_cast<size_t>(q)]))
                throw DomainError("section carries data beyond its domain's levels");
        levels.resize(static_cast<size_t>(base));
    } else {
        while (static_cast<int>(levels.size()) > base && level_is_zero(levels.back()))
            levels.pop_back();
    }
    if (static_cast<int>(levels.size()) < base) levels.resize(static_cast<size_t>(base));

    for (int q = 0; q < static_cast<int>(levels.size()); ++q) {
        Region lev = s.parent_.effective_level(q);
        size_t want = static_cast<size_t>(region_component_count(lev));
        auto& polys = levels[static_cast<size_t>(q)];
        if (polys.empty() && want > 0)
            polys.assign(want, Polynomial::zero(s.field_));
        if (polys.size() != want)
            throw DomainError("level " + std::to_string(q) + " carries " +
                              std::to_string(polys.size()) + " component polynomials, domain has " +
                              std::to_string(want) + " components");
        for (const auto& p : polys)
            if (p.field() != s.field_)
                throw FieldMismatchError("section polynomial field does not match its space");
    }
    s.levels_ = std::move(levels);
    return s;
}

Section Section::zero(const OmegaOpen& parent) { return make(parent, {}); }

Polynomial Section::polynomial_at(int q, int component) const {
    if (q < 0 || q >= level_count()) return Polynomial::zero(field_);
    return levels_[static_cast<size_t>(q)].at(static_cast<size_t>(component));
}

Section embed_u(const PBWElement& a, const OmegaOpen& v) {
    require_valid(v, "the open set");
    OmegaOpen parent = v.normalized();
    if (a.field() != field_of(parent.space))
        throw FieldMismatchError("element field does not match the space of the open set");

    int n = parent.level_count();
    if (parent.tail == Tail::full) n = std::max(n, a.e2_degree() + 1);
    std::vector<std::vector<Polynomial>> levels(static_cast<size_t>(n));
    for (int q = 0; q < n; ++q) {
        Region lev = parent.effective_level(q);
        levels[static_cast<size_t>(q)].assign(
            static_cast<size_t>(region_component_count(lev)), a.level(q));
    }
    return Section::make(std::move(parent), std::move(levels));
}

Section nc_mul(const OmegaOpen& v, const Section& s, const Section& t) {
    if (auto val = omega_validate(v); !val)
        throw InvalidOmegaError(
            val.level, "multiplication is undefined: the level condition fails at level " +
                           std::to_string(val.level));
    OmegaOpen parent = v.normalized();
    if (s.parent() != parent || t.parent() != parent)
        throw PreconditionError("both sections must live over the given open set");

    int n = parent.level_count();
    if (parent.tail == Tail::full)
        n = std::max(n, std::max(s.level_count() + t.level_count() - 1, 0));

    std::vector<std::vector<Polynomial>> out(static_cast<size_t>(n));
    for (int q = 0; q < n; ++q) {
        Region lev = parent.effective_level(q);
        int nc = region_component_count(lev);
        auto& row = out[static_cast<size_t>(q)];
        row.assign(static_cast<size_t>(nc), Polynomial::zero(s.field()));
        for (int comp = 0; comp < nc; ++comp) {
            GaussianRational x = region_component_rep(lev, comp);
            Polynomial acc = Polynomial::zero(s.field());
            for (int i = 0; i <= q && i < s.level_count(); ++i) {
                int j = q - i;
                if (j >= t.level_count()) continue;
                Region li = parent.effective_level(i);
                int ci = component_of_or_throw(li, x, "left factor");
                Polynomial si = s.polynomial_at(i, ci);
                if (si.is_zero()) continue;
                GaussianRational xi = x - GaussianRational(Rational(i));
                Region lj = parent.effective_level(j);
                int cj = component_of_or_throw(lj, xi, "right factor");
                Polynomial tj = t.polynomial_at(j, cj);
                if (tj.is_zero()) continue;
                acc += si * poly_shift(tj, GaussianRational(Rational(-i)));
            }
            row[static_cast<size_t>(comp)] = std::move(acc);
        }
    }
    return Section::make(std::move(parent), std::move(out));
}

Section tau_restrict(const OmegaOpen& v, const OmegaOpen& w, const Section& s) {
    require_valid(v, "the source open set");
    require_valid(w, "the target open set");
    OmegaOpen pv = v.normalized(), pw = w.normalized();
    if (s.parent() != pv)
        throw PreconditionError("the section does not live over the source open set");
    if (!omega_subset(pw, pv))
        throw NotASubsetError("the target open set is not contained in the source");

    int n = pw.level_count();
    if (pw.tail == Tail::full) n = std::max(n, s.level_count());
    std::vector<std::vector<Polynomial>> out(static_cast<size_t>(n));
    for (int q = 0; q < n; ++q) {
        Region lw = pw.effective_level(q);
        int nc = region_component_count(lw);
        auto& row = out[static_cast<size_t>(q)];
        row.reserve(static_cast<size_t>(nc));
        Region lv = pv.effective_level(q);
        for (int comp = 0; comp < nc; ++comp) {
            GaussianRational x = region_component_rep(lw, comp);
            int cv = component_of_or_throw(lv, x, "restriction");
            row.push_back(s.polynomial_at(q, cv));
        }
    }
    return Section::make(std::move(pw), std::move(out));
}

Section glue(const std::vector<OmegaOpen>& cover, const std::vector<Section>& sections) {
    if (cover.empty()) throw PreconditionError("empty cover");
    if (cover.size() != sections.size())
        throw PreconditionError("cover and section counts differ");
    std::vector<OmegaOpen> members;
    members.reserve(cover.size());
    for (size_t m = 0; m < cover.size(); ++m) {
        if (auto val = omega_validate(cover[m]); !val)
            throw InvalidOmegaError(val.level, "cover member " + std::to_string(m) +
                                                   " violates the level condition at level " +
                                                   std::to_string(val.level));
        members.push_back(cover[m].normalized());
        if (sections[m].parent() != members.back())
            throw PreconditionError("section " + std::to_string(m) +
                                    " does not live over cover member " + std::to_string(m));
    }

    OmegaOpen u = members[0];
    for (size_t m = 1; m < members.size(); ++m) u = omega_combine(u, members[m], SetOp::unite);

    int n = u.level_count();
    if (u.tail == Tail::full)
        for (const auto& s : sections) n = std::max(n, s.level_count());

    std::vector<std::vector<Polynomial>> out(static_cast<size_t>(n));
    Field field = field_of(u.space);
    for (int q = 0; q < n; ++q) {
        Region lu = u.effective_level(q);
        int nc = region_component_count(lu);
        // contributors per union component: (member, member component, polynomial)
        struct Contribution {
            int member;
            int component;
            Polynomial poly;
        };
        std::vector<std::vector<Contribution>> contributions(static_cast<size_t>(nc));
        for (size_t m = 0; m < members.size(); ++m) {
            Region lm = members[m].effective_level(q);
            int mc = region_component_count(lm);
            for (int d = 0; d < mc; ++d) {
                GaussianRational x = region_component_rep(lm, d);
                int cu = component_of_or_throw(lu, x, "glue");
                contributions[static_cast<size_t>(cu)].push_back(
                    {static_cast<int>(m), d, sections[m].polynomial_at(q, d)});
            }
        }
        auto& row = out[static_cast<size_t>(q)];
        row.assign(static_cast<size_t>(nc), Polynomial::zero(field));
        for (int cu = 0; cu < nc; ++cu) {
            const auto& parts = contributions[static_cast<size_t>(cu)];
            if (parts.empty())
                throw DomainError("internal: union component without cover contribution");
            for (size_t a = 0; a < parts.size(); ++a)
                for (size_t b = a + 1; b < parts.size(); ++b) {
                    if (parts[a].poly == parts[b].poly) continue;
                    Region la = members[static_cast<size_t>(parts[a].member)].effective_level(q);
                    Region lb = members[static_cast<size_t>(parts[b].member)].effective_level(q);
                    bool touch = parts[a].member == parts[b].member
                                     ? false
                                     : region_components_overlap(la, parts[a].component, lb,
                                                                 parts[b].component);
                    if (touch)
                        throw IncompatibleSectionsError(
                            parts[a].member, parts[b].member, q, cu,
                            "sections " + std::to_string(parts[a].member) + " and " +
                                std::to_string(parts[b].member) + " disagree at level " +
                                std::to_string(q) + ", union component " + std::to_string(cu));
                }
            // a connected union component forces one polynomial on all contributors
            for (size_t a = 1; a < parts.size(); ++a)
                if (!(parts[a].poly == parts[0].poly))
                    throw IncompatibleSectionsError(
                        parts[0].member, parts[a].member, q, cu,
                        "sections " + std::to_string(parts[0].member) + " and " +
                            std::to_string(parts[a].member) +
                            " carry different polynomials on a connected component at level " +
                            std::to_string(q));
            row[static_cast<size_t>(cu)] = parts[0].poly;
        }
    }
    return Section::make(std::move(u), std::move(out));
}

GaussianRational section_eval(const Section& s, int q, const GaussianRational& x) {
    if (!omega_member(s.parent(), x, q))
        throw OutOfDomainError("evaluation point is outside level " + std::to_string(q));
    Region lev = s.parent().effective_level(q);
    int comp = component_of_or_throw(lev, x, "evaluation");
    return poly_eval(s.polynomial_at(q, comp), x);
}

}  // namespace ncsheaf
