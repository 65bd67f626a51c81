/**
 * Rational polyhedral fans with an explicit lineality space: construction
 * with geometric face closure, two-level validation, skeletons, exact
 * support membership and containment, and extraction of the link of the
 * origin as a face poset.
 *
 * The link is handled purely combinatorially (the poset of cones above the
 * minimal cone); coordinates only enter support-membership tests, so no
 * quotient by the lineality space is ever computed.
 */
#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "troplink/complex.hpp"
#include "troplink/halfspaces.hpp"
#include "troplink/linalg.hpp"

namespace troplink {

/** A cone, stored as sorted indices into the fan-wide ray list. */
struct Cone {
    std::vector<int> rays;  // sorted, no duplicates
    int dim = 0;            // rank of (rays ∪ lineality basis)
};

enum class ValidationLevel { Combinatorial, Geometric };

struct ValidationReport {
    ValidationLevel level = ValidationLevel::Combinatorial;
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

class Fan {
  public:
    int ambient_rank = 0;
    std::vector<IntVector> lineality;  // basis, possibly empty
    std::vector<IntVector> rays;       // fan-wide primitive rays
    std::vector<Cone> cones;           // sorted by (dim, ray list); cones[0] is minimal
    std::vector<std::pair<int, int>> face_relation;  // (child, parent), child != parent

    int lineality_dim() const {
        if (lineality.empty()) return 0;
        return static_cast<int>(rank_int_rows(lineality, static_cast<std::size_t>(ambient_rank)));
    }

    int max_cone_dim() const {
        int d = lineality_dim();
        for (const Cone& c : cones) d = std::max(d, c.dim);
        return d;
    }

    bool pure() const {
        std::set<int> max_dims;
        std::vector<bool> is_face(cones.size(), false);
        for (auto [child, parent] : face_relation)
            if (child != parent) is_face[static_cast<std::size_t>(child)] = true;
        for (std::size_t i = 0; i < cones.size(); ++i)
            if (!is_face[i]) max_dims.insert(cones[i].dim);
        return max_dims.size() <= 1;
    }

    int cone_dim(const std::vector<int>& ray_ids) const {
        std::vector<IntVector> rows = lineality;
        for (int r : ray_ids) rows.push_back(rays[static_cast<std::size_t>(r)]);
        return static_cast<int>(rank_int_rows(rows, static_cast<std::size_t>(ambient_rank)));
    }

    bool simplicial() const {
        const int ell = lineality_dim();
        for (const Cone& c : cones)
            if (c.dim != ell + static_cast<int>(c.rays.size())) return false;
        return true;
    }

    std::vector<int> maximal_cones() const {
        std::vector<bool> is_face(cones.size(), false);
        for (auto [child, parent] : face_relation)
            is_face[static_cast<std::size_t>(child)] = true;
        std::vector<int> out;
        for (std::size_t i = 0; i < cones.size(); ++i)
            if (!is_face[i]) out.push_back(static_cast<int>(i));
        return out;
    }

    HRep cone_hrep_of(int cone_idx) const {
        const Cone& c = cones[static_cast<std::size_t>(cone_idx)];
        std::vector<IntVector> cr;
        for (int r : c.rays) cr.push_back(rays[static_cast<std::size_t>(r)]);
        return cone_hrep(cr, lineality, static_cast<std::size_t>(ambient_rank));
    }

    /** Cones as sets of ray vectors (index-free), for structural comparison. */
    std::set<std::set<IntVector>> cone_ray_sets() const {
        std::set<std::set<IntVector>> out;
        for (const Cone& c : cones) {
            std::set<IntVector> s;
            for (int r : c.rays) s.insert(rays[static_cast<std::size_t>(r)]);
            out.insert(std::move(s));
        }
        return out;
    }

    /**
     * Builds a face-closed fan from generating cones (usually the maximal
     * ones), computing faces geometrically. Ray vectors are deduplicated
     * verbatim, so generators must use consistent representatives mod
     * lineality. Cone indices are re-sorted deterministically.
     */
    static Fan from_generating_cones(int ambient, std::vector<IntVector> lin,
                                     const std::vector<std::vector<IntVector>>& generating) {
        Fan f;
        f.ambient_rank = ambient;
        f.lineality = std::move(lin);
        std::set<std::vector<IntVector>> seen;  // cones as sorted ray-vector lists
        std::vector<std::vector<IntVector>> queue;
        auto push = [&](std::vector<IntVector> rays_of_cone) {
            std::sort(rays_of_cone.begin(), rays_of_cone.end(), lex_less);
            if (seen.insert(rays_of_cone).second) queue.push_back(std::move(rays_of_cone));
        };
        for (const auto& g : generating) {
            std::vector<IntVector> prim;
            for (const IntVector& r : g) prim.push_back(primitive(r));
            push(std::move(prim));
        }
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            const std::vector<IntVector> cone_rays = queue[qi];
            if (cone_rays.empty()) continue;
            // simplicial shortcut: faces are the ray subsets
            std::vector<IntVector> rows = f.lineality;
            rows.insert(rows.end(), cone_rays.begin(), cone_rays.end());
            const std::size_t rk = rank_int_rows(rows, static_cast<std::size_t>(ambient));
            const std::size_t ell = f.lineality.empty()
                ? 0 : rank_int_rows(f.lineality, static_cast<std::size_t>(ambient));
            if (rk == ell + cone_rays.size()) {
                const std::size_t k = cone_rays.size();
                for (std::size_t mask = 0; mask < (std::size_t(1) << k); ++mask) {
                    std::vector<IntVector> sub;
                    for (std::size_t i = 0; i < k; ++i)
                        if (mask & (std::size_t(1) << i)) sub.push_back(cone_rays[i]);
                    push(std::move(sub));
                }
            } else {
                HRep h = cone_hrep(cone_rays, f.lineality, static_cast<std::size_t>(ambient));
                for (const IntVector& n : h.inequalities) {
                    std::vector<IntVector> tight;
                    for (const IntVector& r : cone_rays)
                        if (dot(n, r) == 0) tight.push_back(r);
                    push(std::move(tight));
                }
            }
        }
        push({});  // minimal cone
        f.adopt_cone_ray_lists(std::vector<std::vector<IntVector>>(seen.begin(), seen.end()));
        return f;
    }

    /**
     * Builds a fan from combinatorial data already closed under faces
     * (e.g. all chains of flats). Face relation = ray-subset relation.
     */
    static Fan from_closed_cone_list(int ambient, std::vector<IntVector> lin,
                                     std::vector<std::vector<IntVector>> cone_ray_lists) {
        Fan f;
        f.ambient_rank = ambient;
        f.lineality = std::move(lin);
        for (auto& c : cone_ray_lists) std::sort(c.begin(), c.end(), lex_less);
        std::sort(cone_ray_lists.begin(), cone_ray_lists.end());
        cone_ray_lists.erase(std::unique(cone_ray_lists.begin(), cone_ray_lists.end()),
                             cone_ray_lists.end());
        f.adopt_cone_ray_lists(std::move(cone_ray_lists));
        return f;
    }

  private:
    void adopt_cone_ray_lists(std::vector<std::vector<IntVector>> cone_lists) {
        std::set<IntVector> ray_set;
        for (const auto& c : cone_lists)
            for (const IntVector& r : c) ray_set.insert(r);
        rays.assign(ray_set.begin(), ray_set.end());
        std::sort(rays.begin(), rays.end(), lex_less);
        std::map<IntVector, int> ray_idx;
        for (std::size_t i = 0; i < rays.size(); ++i) ray_idx[rays[i]] = static_cast<int>(i);
        cones.clear();
        for (const auto& c : cone_lists) {
            Cone cone;
            for (const IntVector& r : c) cone.rays.push_back(ray_idx.at(r));
            std::sort(cone.rays.begin(), cone.rays.end());
            cone.dim = cone_dim(cone.rays);
            cones.push_back(std::move(cone));
        }
        std::sort(cones.begin(), cones.end(), [](const Cone& a, const Cone& b) {
            if (a.dim != b.dim) return a.dim < b.dim;
            return a.rays < b.rays;
        });
        face_relation.clear();
        for (std::size_t i = 0; i < cones.size(); ++i)
            for (std::size_t j = 0; j < cones.size(); ++j) {
                if (i == j) continue;
                if (std::includes(cones[j].rays.begin(), cones[j].rays.end(),
                                  cones[i].rays.begin(), cones[i].rays.end()))
                    face_relation.emplace_back(static_cast<int>(i), static_cast<int>(j));
            }
    }
};

// ---------------------------------------------------------------------------
// Validation
// ---------------------------------------------------------------------------

inline ValidationReport validate_fan(const Fan& f, ValidationLevel level,
                                     bool require_pure = false) {
    ValidationReport rep;
    rep.level = level;
    auto flag = [&](std::string msg) { rep.violations.push_back(std::move(msg)); };

    const std::size_t dim = static_cast<std::size_t>(f.ambient_rank);
    for (const IntVector& l : f.lineality)
        if (l.size() != dim) flag("lineality vector of wrong length");
    for (const IntVector& r : f.rays)
        if (r.size() != dim) flag("ray of wrong length");
    if (!rep.violations.empty()) return rep;  // malformed vectors: stop here
    if (!f.lineality.empty() &&
        rank_int_rows(f.lineality, dim) != f.lineality.size())
        flag("lineality basis is linearly dependent");
    RowEchelon lin_rref = rref_int(f.lineality, dim);

    for (std::size_t i = 0; i < f.rays.size(); ++i) {
        const IntVector& r = f.rays[i];
        if (troplink::is_zero(r) || !is_primitive(r))
            flag("ray " + std::to_string(i) + " " + to_string(r) + " is not primitive");
        else if (in_span(r, lin_rref))
            flag("ray " + std::to_string(i) + " " + to_string(r) + " lies in the lineality span");
        for (std::size_t j = i + 1; j < f.rays.size(); ++j)
            if (!troplink::is_zero(r) && !troplink::is_zero(f.rays[j]) &&
                proportional(r, f.rays[j]))
                flag("rays " + std::to_string(i) + " and " + std::to_string(j) +
                     " are proportional");
    }

    bool has_minimal = false;
    std::set<std::vector<int>> cone_keys;
    for (std::size_t i = 0; i < f.cones.size(); ++i) {
        const Cone& c = f.cones[i];
        for (int r : c.rays)
            if (r < 0 || r >= static_cast<int>(f.rays.size()))
                flag("cone " + std::to_string(i) + " references a missing ray");
        if (!std::is_sorted(c.rays.begin(), c.rays.end()) ||
            std::adjacent_find(c.rays.begin(), c.rays.end()) != c.rays.end())
            flag("cone " + std::to_string(i) + " ray list is not sorted/unique");
        if (!cone_keys.insert(c.rays).second)
            flag("duplicate cone with rays of cone " + std::to_string(i));
        if (c.rays.empty()) has_minimal = true;
        if (c.dim != f.cone_dim(c.rays))
            flag("cone " + std::to_string(i) + " has inconsistent dimension");
    }
    if (!has_minimal) flag("minimal cone (lineality space) is missing");

    for (auto [child, parent] : f.face_relation) {
        const Cone& a = f.cones[static_cast<std::size_t>(child)];
        const Cone& b = f.cones[static_cast<std::size_t>(parent)];
        if (!std::includes(b.rays.begin(), b.rays.end(), a.rays.begin(), a.rays.end()))
            flag("declared face " + std::to_string(child) + " of " + std::to_string(parent) +
                 " is not a ray subset");
        else if (a.dim >= b.dim)
            flag("face relation " + std::to_string(child) + " < " + std::to_string(parent) +
                 " violates dimension monotonicity");
    }

    // combinatorial face closure: simplicial cones must have all ray subsets
    const int ell = f.lineality_dim();
    for (std::size_t i = 0; i < f.cones.size(); ++i) {
        const Cone& c = f.cones[i];
        if (c.dim != ell + static_cast<int>(c.rays.size())) continue;  // non-simplicial
        const std::size_t k = c.rays.size();
        if (k == 0 || k > 20) continue;
        for (std::size_t mask = 0; mask < (std::size_t(1) << k); ++mask) {
            std::vector<int> sub;
            for (std::size_t t = 0; t < k; ++t)
                if (mask & (std::size_t(1) << t)) sub.push_back(c.rays[t]);
            if (!cone_keys.count(sub)) {
                flag("fan is not face-closed: subset face of cone " + std::to_string(i) +
                     " is missing");
                break;
            }
        }
    }

    if (require_pure && !f.pure()) flag("fan flagged tropical is not pure-dimensional");

    if (level == ValidationLevel::Geometric) {
        std::vector<HRep> hreps(f.cones.size());
        for (std::size_t i = 0; i < f.cones.size(); ++i)
            hreps[i] = f.cone_hrep_of(static_cast<int>(i));

        // declared faces must be genuine faces (tight locus of a supporting normal)
        std::set<std::pair<int, int>> declared(f.face_relation.begin(), f.face_relation.end());
        for (auto [child, parent] : declared) {
            const Cone& a = f.cones[static_cast<std::size_t>(child)];
            const Cone& b = f.cones[static_cast<std::size_t>(parent)];
            if (!std::includes(b.rays.begin(), b.rays.end(), a.rays.begin(), a.rays.end()))
                continue;  // reported above
            if (a.rays.size() == b.rays.size()) continue;
            bool genuine = false;
            // single supporting normal: some nonneg combination of facet normals
            // tight exactly on a's rays; test each facet normal and, failing
            // that, the sum of all normals vanishing on a.
            std::vector<IntVector> candidates = hreps[static_cast<std::size_t>(parent)].inequalities;
            IntVector sum(static_cast<std::size_t>(f.ambient_rank), Int(0));
            bool any = false;
            for (const IntVector& n : hreps[static_cast<std::size_t>(parent)].inequalities) {
                bool vanishes_on_a = true;
                for (int r : a.rays)
                    if (dot(n, f.rays[static_cast<std::size_t>(r)]) != 0) vanishes_on_a = false;
                if (vanishes_on_a) {
                    any = true;
                    for (std::size_t t = 0; t < sum.size(); ++t) sum[t] += n[t];
                }
            }
            if (any) candidates.push_back(sum);
            for (const IntVector& n : candidates) {
                bool supports = true;
                std::vector<int> tight;
                for (int r : b.rays) {
                    Int v = dot(n, f.rays[static_cast<std::size_t>(r)]);
                    if (v < 0) {
                        supports = false;
                        break;
                    }
                    if (v == 0) tight.push_back(r);
                }
                if (supports && tight == a.rays) {
                    genuine = true;
                    break;
                }
            }
            if (!genuine)
                flag("declared face " + std::to_string(child) + " of " +
                     std::to_string(parent) + " is not a genuine face");
        }

        // relative interiors of distinct cones are disjoint
        for (std::size_t i = 0; i < f.cones.size(); ++i)
            for (std::size_t j = i + 1; j < f.cones.size(); ++j) {
                std::vector<Constraint> sys = hreps[i].relint_system();
                std::vector<Constraint> sysj = hreps[j].relint_system();
                sys.insert(sys.end(), sysj.begin(), sysj.end());
                if (cone_system_feasible(std::move(sys), dim))
                    flag("relative interiors of cones " + std::to_string(i) + " and " +
                         std::to_string(j) + " intersect");
            }

        // pairwise intersection is a common declared face
        std::set<std::set<IntVector>> canonical_cones;
        std::map<std::set<IntVector>, int> cone_of_key;
        RowEchelon lr = rref_int(f.lineality, dim);
        auto canonical_key = [&](const std::vector<IntVector>& rs) {
            std::set<IntVector> key;
            for (const IntVector& r : rs) {
                RatVector red = reduce_mod_subspace(to_rat(r), lr);
                if (!troplink::is_zero(red)) key.insert(to_primitive_int(red));
            }
            return key;
        };
        for (std::size_t i = 0; i < f.cones.size(); ++i) {
            std::vector<IntVector> rs;
            for (int r : f.cones[i].rays) rs.push_back(f.rays[static_cast<std::size_t>(r)]);
            cone_of_key[canonical_key(rs)] = static_cast<int>(i);
        }
        for (std::size_t i = 0; i < f.cones.size(); ++i)
            for (std::size_t j = i + 1; j < f.cones.size(); ++j) {
                HRep inter;
                inter.dim = dim;
                inter.equalities = hreps[i].equalities;
                inter.equalities.insert(inter.equalities.end(), hreps[j].equalities.begin(),
                                        hreps[j].equalities.end());
                inter.inequalities = hreps[i].inequalities;
                inter.inequalities.insert(inter.inequalities.end(),
                                          hreps[j].inequalities.begin(),
                                          hreps[j].inequalities.end());
                VRep v = cone_vrep(inter);
                std::set<IntVector> key(v.rays.begin(), v.rays.end());
                auto it = cone_of_key.find(key);
                bool ok_pair = false;
                if (it != cone_of_key.end()) {
                    int k = it->second;
                    auto is_face_of = [&](int child, int parent) {
                        if (child == parent) return true;
                        return std::count(f.face_relation.begin(), f.face_relation.end(),
                                          std::make_pair(child, parent)) > 0;
                    };
                    ok_pair = is_face_of(k, static_cast<int>(i)) &&
                              is_face_of(k, static_cast<int>(j));
                }
                if (!ok_pair)
                    flag("cones " + std::to_string(i) + " and " + std::to_string(j) +
                         " do not intersect in a common declared face");
            }
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Skeleton, support, link
// ---------------------------------------------------------------------------

/** Subfan of all cones of codimension >= c (relative to the maximal cone dim). */
inline Fan skeleton(const Fan& f, int c) {
    const int maxdim = f.max_cone_dim();
    const int ell = f.lineality_dim();
    if (c < 0 || c > maxdim - ell)
        throw std::invalid_argument("skeleton: codimension out of range");
    std::vector<std::vector<IntVector>> keep;
    for (const Cone& cone : f.cones) {
        if (cone.dim > maxdim - c) continue;
        std::vector<IntVector> rs;
        for (int r : cone.rays) rs.push_back(f.rays[static_cast<std::size_t>(r)]);
        keep.push_back(std::move(rs));
    }
    return Fan::from_closed_cone_list(f.ambient_rank, f.lineality, std::move(keep));
}

/**
 * Exact membership of w in |f|, by Caratheodory over ray subsets: w lies in a
 * cone iff some linearly independent subset of its rays plus the lineality
 * space expresses w with nonnegative ray coefficients.
 */
inline bool support_contains(const Fan& f, const RatVector& w) {
    if (w.size() != static_cast<std::size_t>(f.ambient_rank))
        throw std::invalid_argument("support_contains: vector length mismatch");
    const std::size_t dim = w.size();
    const std::size_t ell = f.lineality.empty() ? 0 : rank_int_rows(f.lineality, dim);
    for (const Cone& cone : f.cones) {
        const std::size_t k = cone.rays.size();
        const std::size_t free_dim = static_cast<std::size_t>(cone.dim) - ell;
        if (k > 25) throw std::runtime_error("support_contains: cone has too many rays");
        for (std::size_t mask = 0; mask < (std::size_t(1) << k); ++mask) {
            if (static_cast<std::size_t>(__builtin_popcountll(mask)) > free_dim) continue;
            std::vector<IntVector> gens;
            std::size_t nsub = 0;
            for (std::size_t i = 0; i < k; ++i)
                if (mask & (std::size_t(1) << i)) {
                    gens.push_back(f.rays[static_cast<std::size_t>(cone.rays[i])]);
                    ++nsub;
                }
            if (rank_int_rows(gens, dim) != nsub) continue;  // dependent subset
            std::vector<IntVector> all = gens;
            all.insert(all.end(), f.lineality.begin(), f.lineality.end());
            if (rank_int_rows(all, dim) != nsub + ell) continue;
            auto sol = solve_combination_int(all, w);
            if (!sol) continue;
            bool nonneg = true;
            for (std::size_t i = 0; i < nsub; ++i)
                if ((*sol)[i] < 0) {
                    nonneg = false;
                    break;
                }
            if (nonneg) return true;
        }
    }
    return false;
}

/** Deterministic relative-interior sample: sum of rays plus sum of lineality basis. */
inline RatVector relint_sample(const Fan& f, const Cone& c) {
    RatVector s(static_cast<std::size_t>(f.ambient_rank), Rat(0));
    for (int r : c.rays)
        for (std::size_t j = 0; j < s.size(); ++j)
            s[j] += Rat(f.rays[static_cast<std::size_t>(r)][j]);
    for (const IntVector& l : f.lineality)
        for (std::size_t j = 0; j < s.size(); ++j) s[j] += Rat(l[j]);
    return s;
}

/**
 * Exact support containment |f| ⊆ |g|: every cone's deterministic interior
 * sample must be in |g|, and the Fourier–Motzkin region subtraction of the
 * maximal cones of g from each cone of f must come up empty.
 */
inline bool support_contained_in(const Fan& f, const Fan& g) {
    if (f.ambient_rank != g.ambient_rank)
        throw std::invalid_argument("support_contained_in: ambient rank mismatch");
    const std::size_t dim = static_cast<std::size_t>(f.ambient_rank);
    for (const Cone& c : f.cones)
        if (!support_contains(g, relint_sample(f, c))) return false;
    std::vector<HRep> g_max;
    for (int i : g.maximal_cones()) g_max.push_back(g.cone_hrep_of(i));
    for (std::size_t i = 0; i < f.cones.size(); ++i) {
        HRep h = f.cone_hrep_of(static_cast<int>(i));
        if (!region_covered_by(h.closed_system(), g_max, dim)) return false;
    }
    return true;
}

/** Exact completeness test: |f| = R^ambient, by region subtraction. */
inline bool is_complete(const Fan& f) {
    std::vector<HRep> max_cones;
    for (int i : f.maximal_cones()) max_cones.push_back(f.cone_hrep_of(i));
    return region_covered_by({}, max_cones, static_cast<std::size_t>(f.ambient_rank));
}

/**
 * The link of the origin: the poset of cones strictly above the minimal
 * cone, graded by dim(cone) - dim(lineality) - 1.
 */
inline FacePoset link_poset(const Fan& f) {
    const int ell = f.lineality_dim();
    std::vector<FacePoset::Element> elems;
    std::vector<int> poset_index(f.cones.size(), -1);
    for (std::size_t i = 0; i < f.cones.size(); ++i) {
        if (f.cones[i].rays.empty()) continue;  // minimal cone
        poset_index[i] = static_cast<int>(elems.size());
        elems.push_back({f.cones[i].dim - ell - 1, "cone " + std::to_string(i)});
    }
    std::vector<std::pair<int, int>> pairs;
    for (auto [child, parent] : f.face_relation) {
        int a = poset_index[static_cast<std::size_t>(child)];
        int b = poset_index[static_cast<std::size_t>(parent)];
        if (a >= 0 && b >= 0) pairs.emplace_back(a, b);
    }
    return FacePoset(std::move(elems), std::move(pairs));
}

/**
 * Crosscut complex of a simplicial fan: vertices are the rays, simplices the
 * ray sets spanning cones. Same reduced Betti numbers as the order complex
 * of the link poset (tested barycentric-subdivision invariance).
 */
inline SimplicialComplex crosscut_complex(const Fan& f) {
    if (!f.simplicial())
        throw std::invalid_argument("crosscut_complex: fan is not simplicial");
    std::vector<std::vector<int>> facets;
    for (const Cone& c : f.cones)
        if (!c.rays.empty()) facets.push_back(c.rays);
    std::vector<std::string> labels;
    for (const IntVector& r : f.rays) labels.push_back(to_string(r));
    return SimplicialComplex(static_cast<int>(f.rays.size()), std::move(facets),
                             std::move(labels));
}

/**
 * Reduced Betti numbers of the link of the origin. Simplicial fans go
 * through the crosscut complex; general fans through the order complex of
 * the link poset. Returns the empty vector for an empty link.
 */
inline std::vector<long long> link_betti(const Fan& f) {
    bool has_nonminimal = false;
    for (const Cone& c : f.cones)
        if (!c.rays.empty()) has_nonminimal = true;
    if (!has_nonminimal) return {};
    if (f.simplicial()) return reduced_betti(crosscut_complex(f));
    return reduced_betti(order_complex(link_poset(f)));
}

}  // namespace troplink
