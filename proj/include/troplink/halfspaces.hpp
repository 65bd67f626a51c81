/**
 * Exact polyhedral-cone machinery: homogeneous linear systems with weak,
 * strict and equality constraints, Fourier–Motzkin feasibility, dual
 * descriptions of cones (facet and extreme-ray enumeration, brute force at
 * desk scale), and region subtraction for support-containment tests.
 *
 * Fourier–Motzkin is exponential in the worst case; every caller that can
 * see large inputs gates it behind an explicit flag. A hard row cap guards
 * against runaway growth.
 */
#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "troplink/linalg.hpp"
#include "troplink/numbers.hpp"

namespace troplink {

enum class Rel { GE, GT, EQ };  // a·x >= 0, a·x > 0, a·x = 0

struct Constraint {
    IntVector a;
    Rel rel;
};

namespace detail {

/** Normalizes to primitive; drops trivial rows. Returns false on 0 > 0. */
inline bool normalize_system(std::vector<Constraint>& sys) {
    std::map<std::pair<IntVector, bool>, bool> seen;  // (vector, is_eq) -> strict
    std::vector<Constraint> out;
    for (Constraint& c : sys) {
        if (troplink::is_zero(c.a)) {
            if (c.rel == Rel::GT) return false;
            continue;
        }
        c.a = primitive(c.a);
        bool is_eq = c.rel == Rel::EQ;
        auto key = std::make_pair(c.a, is_eq);
        auto it = seen.find(key);
        if (it == seen.end()) {
            seen[key] = c.rel == Rel::GT;
            out.push_back(c);
        } else if (c.rel == Rel::GT && !it->second) {
            it->second = true;  // strict subsumes weak
            for (Constraint& o : out)
                if (o.a == c.a && o.rel == Rel::GE) o.rel = Rel::GT;
        }
    }
    sys = std::move(out);
    return true;
}

}  // namespace detail

/**
 * Decides whether {x : a·x >= 0 (weak), a·x > 0 (strict), a·x = 0 (eq)} has a
 * solution over Q, by Gaussian substitution of the equalities followed by
 * Fourier–Motzkin elimination. Homogeneous systems only.
 */
inline bool cone_system_feasible(std::vector<Constraint> sys, std::size_t dim,
                                 std::size_t row_cap = 200000) {
    // Substitute out equalities first.
    for (;;) {
        if (!detail::normalize_system(sys)) return false;
        std::size_t eq_idx = sys.size();
        std::size_t eq_col = 0;
        for (std::size_t i = 0; i < sys.size(); ++i) {
            if (sys[i].rel != Rel::EQ) continue;
            for (std::size_t j = 0; j < dim; ++j)
                if (sys[i].a[j] != 0) {
                    eq_idx = i;
                    eq_col = j;
                    break;
                }
            if (eq_idx != sys.size()) break;
        }
        if (eq_idx == sys.size()) break;
        const Constraint eq = sys[eq_idx];
        sys.erase(sys.begin() + static_cast<std::ptrdiff_t>(eq_idx));
        for (Constraint& c : sys) {
            if (c.a[eq_col] == 0) continue;
            // c.a := eq.a[eq_col] * c.a - c.a[eq_col] * eq.a, sign-corrected so
            // the inequality direction is preserved.
            Int s = eq.a[eq_col] > 0 ? eq.a[eq_col] : -eq.a[eq_col];
            Int t = c.a[eq_col] * (eq.a[eq_col] > 0 ? 1 : -1);
            IntVector na(dim);
            for (std::size_t j = 0; j < dim; ++j) na[j] = s * c.a[j] - t * eq.a[j];
            c.a = std::move(na);
        }
    }

    // Fourier–Motzkin on the remaining weak/strict rows.
    for (std::size_t var = 0; var < dim; ++var) {
        std::vector<Constraint> pos, neg, zero;
        for (Constraint& c : sys) {
            if (c.a[var] > 0)
                pos.push_back(std::move(c));
            else if (c.a[var] < 0)
                neg.push_back(std::move(c));
            else
                zero.push_back(std::move(c));
        }
        if (pos.empty() || neg.empty()) {
            // Variable unbounded on one side: all rows involving it are
            // satisfiable independently; drop them.
            sys = std::move(zero);
        } else {
            sys = std::move(zero);
            for (const Constraint& p : pos)
                for (const Constraint& n : neg) {
                    IntVector a(dim);
                    const Int pp = p.a[var], nn = -n.a[var];
                    for (std::size_t j = 0; j < dim; ++j)
                        a[j] = nn * p.a[j] + pp * n.a[j];
                    Rel r = (p.rel == Rel::GT || n.rel == Rel::GT) ? Rel::GT : Rel::GE;
                    sys.push_back({std::move(a), r});
                }
            if (sys.size() > row_cap)
                throw std::runtime_error("fourier-motzkin row cap exceeded");
        }
        if (!detail::normalize_system(sys)) return false;
    }
    return true;  // only trivially-true rows survived
}

/** H-representation of a rational cone: {x : eq·x = 0 for all eq, ineq·x >= 0}. */
struct HRep {
    std::vector<IntVector> equalities;
    std::vector<IntVector> inequalities;  // facet normals, primitive
    std::size_t dim = 0;                  // ambient dimension

    std::vector<Constraint> closed_system() const {
        std::vector<Constraint> sys;
        for (const IntVector& e : equalities) sys.push_back({e, Rel::EQ});
        for (const IntVector& a : inequalities) sys.push_back({a, Rel::GE});
        return sys;
    }
    std::vector<Constraint> relint_system() const {
        std::vector<Constraint> sys;
        for (const IntVector& e : equalities) sys.push_back({e, Rel::EQ});
        for (const IntVector& a : inequalities) sys.push_back({a, Rel::GT});
        return sys;
    }
};

namespace detail {

/** Lexicographic successor of a fixed-size index subset of {0..n-1}. */
inline bool next_subset(std::vector<std::size_t>& idx, std::size_t n) {
    const std::size_t k = idx.size();
    if (k == 0 || k > n) return false;
    std::size_t i = k;
    while (i-- > 0) {
        if (idx[i] < n - k + i) {
            ++idx[i];
            for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
            return true;
        }
    }
    return false;
}

}  // namespace detail

/**
 * Facet enumeration (V-representation -> H-representation) by brute force
 * over ray subsets spanning candidate facet hyperplanes. Intended for desk
 * scale (a handful of rays per cone).
 */
inline HRep cone_hrep(const std::vector<IntVector>& rays,
                      const std::vector<IntVector>& lineality, std::size_t dim) {
    HRep h;
    h.dim = dim;
    std::vector<IntVector> span_rows = rays;
    span_rows.insert(span_rows.end(), lineality.begin(), lineality.end());
    h.equalities = null_space_int(span_rows, dim);
    const std::size_t d = dim - h.equalities.size();  // dim of the cone's span
    const std::size_t ell = lineality.empty() ? 0 : rank_int_rows(lineality, dim);
    if (rays.empty() || d == ell) return h;  // a linear subspace: no facets

    const std::size_t need = d - ell - 1;  // rays per candidate facet hyperplane
    std::set<IntVector> normals;
    std::vector<std::size_t> idx(need);
    for (std::size_t i = 0; i < need; ++i) idx[i] = i;
    bool more = need <= rays.size();
    if (need == 0) more = true;
    while (more) {
        std::vector<IntVector> rows;
        for (std::size_t i : idx) rows.push_back(rays[i]);
        rows.insert(rows.end(), lineality.begin(), lineality.end());
        rows.insert(rows.end(), h.equalities.begin(), h.equalities.end());
        std::vector<IntVector> ns = null_space_int(rows, dim);
        if (ns.size() == 1) {
            IntVector n = ns.front();
            int sign = 0;
            bool supporting = true;
            for (const IntVector& r : rays) {
                Int v = dot(n, r);
                if (v == 0) continue;
                int s = v > 0 ? 1 : -1;
                if (sign == 0)
                    sign = s;
                else if (sign != s) {
                    supporting = false;
                    break;
                }
            }
            if (supporting && sign != 0) {
                if (sign < 0) n = negate(n);
                // facet check: tight rays must span a (d-1)-dim face
                std::vector<IntVector> tight = lineality;
                for (const IntVector& r : rays)
                    if (dot(n, r) == 0) tight.push_back(r);
                if (rank_int_rows(tight, dim) == d - 1) normals.insert(n);
            }
        }
        if (need == 0) break;
        more = detail::next_subset(idx, rays.size());
    }
    h.inequalities.assign(normals.begin(), normals.end());
    return h;
}

/**
 * Extreme-ray enumeration (H-representation -> V-representation). Returns the
 * primitive extreme rays, canonically reduced modulo the cone's lineality
 * space, plus the lineality basis. Brute force over inequality subsets.
 */
struct VRep {
    std::vector<IntVector> rays;       // canonical mod lineality, deduplicated
    std::vector<IntVector> lineality;  // primitive basis
};

inline VRep cone_vrep(const HRep& h) {
    VRep v;
    const std::size_t dim = h.dim;
    std::vector<IntVector> all_rows = h.equalities;
    all_rows.insert(all_rows.end(), h.inequalities.begin(), h.inequalities.end());
    v.lineality = null_space_int(all_rows, dim);
    const std::size_t ell = v.lineality.size();
    RowEchelon lin_rref = rref_int(v.lineality, dim);

    // dim of the cone = dim - rank(equalities ∪ tight-at-relint rows); the
    // span is cut out by the equalities alone only if no inequality is
    // implicitly tight, so compute the span rank via feasibility of > 0.
    // Simpler: rays live in {eq = 0}; candidate rays come from subsets of
    // inequalities turned tight.
    const std::size_t span_rank = dim - rank_int_rows(h.equalities, dim);
    if (span_rank == ell) return v;  // subspace only
    const std::size_t need_rank = span_rank - ell - 1;
    const std::size_t eq_rank = rank_int_rows(h.equalities, dim);

    std::set<IntVector> found;
    const std::size_t m = h.inequalities.size();
    // choose subsets of inequalities of size need_rank - possibly fewer if
    // rows are dependent; sizes up to need_rank suffice since any tight set
    // of rank need_rank contains an independent subset of that size.
    std::vector<std::size_t> idx(need_rank);
    for (std::size_t i = 0; i < need_rank; ++i) idx[i] = i;
    bool more = need_rank <= m;
    if (need_rank == 0) more = true;
    while (more) {
        std::vector<IntVector> rows = h.equalities;
        for (std::size_t i : idx) rows.push_back(h.inequalities[i]);
        if (rank_int_rows(rows, dim) == eq_rank + need_rank) {
            std::vector<IntVector> ns = null_space_int(rows, dim);
            if (ns.size() == ell + 1) {
                for (const IntVector& cand : ns) {
                    RatVector red = reduce_mod_subspace(to_rat(cand), lin_rref);
                    if (troplink::is_zero(red)) continue;
                    IntVector x = to_primitive_int(red);
                    for (int s = 0; s < 2; ++s) {
                        bool inside = true;
                        std::vector<IntVector> tight = h.equalities;
                        for (const IntVector& a : h.inequalities) {
                            Int val = dot(a, x);
                            if (val < 0) {
                                inside = false;
                                break;
                            }
                            if (val == 0) tight.push_back(a);
                        }
                        if (inside) {
                            // extreme iff the full tight set has nullity ell+1
                            if (dim - rank_int_rows(tight, dim) == ell + 1)
                                found.insert(x);
                            break;
                        }
                        x = negate(x);
                    }
                    break;  // one representative of the nullspace line suffices
                }
            }
        }
        if (need_rank == 0) break;
        more = detail::next_subset(idx, m);
    }
    v.rays.assign(found.begin(), found.end());
    return v;
}

/**
 * Region-subtraction test: is the region (given as a homogeneous constraint
 * system) covered by the union of the listed cones (given as H-reps)?
 * Splits the region along each cone's complement and prunes empty pieces.
 */
inline bool region_covered_by(const std::vector<Constraint>& region,
                              const std::vector<HRep>& cones, std::size_t dim) {
    std::vector<std::vector<Constraint>> pieces;
    if (cone_system_feasible(region, dim)) pieces.push_back(region);
    for (const HRep& h : cones) {
        if (pieces.empty()) return true;
        std::vector<std::vector<Constraint>> next;
        for (const std::vector<Constraint>& piece : pieces) {
            // complement of {eq=0, ineq>=0} = union of strict violations
            auto emit = [&](IntVector a) {
                std::vector<Constraint> p = piece;
                p.push_back({std::move(a), Rel::GT});
                if (cone_system_feasible(p, dim)) next.push_back(std::move(p));
            };
            for (const IntVector& a : h.inequalities) emit(negate(a));
            for (const IntVector& e : h.equalities) {
                emit(e);
                emit(negate(e));
            }
        }
        pieces = std::move(next);
    }
    return pieces.empty();
}

/**
 * Exact feasibility of {lambda >= 0 : A lambda = b} by phase-one simplex with
 * Bland's rule (always terminates, exact rational arithmetic).
 */
inline bool nonnegative_solution_exists(const std::vector<RatVector>& a_rows,
                                        const RatVector& b) {
    const std::size_t m = a_rows.size();
    const std::size_t n = m == 0 ? 0 : a_rows.front().size();
    if (b.size() != m) throw std::invalid_argument("nonnegative_solution_exists: size mismatch");
    // tableau: m rows, n + m + 1 columns (vars, artificials, rhs)
    std::vector<RatVector> t(m, RatVector(n + m + 1, Rat(0)));
    for (std::size_t i = 0; i < m; ++i) {
        const int s = b[i] < 0 ? -1 : 1;
        for (std::size_t j = 0; j < n; ++j) t[i][j] = s * a_rows[i][j];
        t[i][n + i] = 1;
        t[i][n + m] = s * b[i];
    }
    std::vector<std::size_t> basis(m);
    for (std::size_t i = 0; i < m; ++i) basis[i] = n + i;
    // objective: minimize sum of artificials; reduced-cost row
    RatVector z(n + m + 1, Rat(0));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j <= n + m; ++j) z[j] -= t[i][j];
    for (std::size_t i = 0; i < m; ++i) z[n + i] = 0;

    for (;;) {
        std::size_t enter = n + m;
        for (std::size_t j = 0; j < n + m; ++j)
            if (z[j] < 0) {
                enter = j;
                break;  // Bland: smallest index
            }
        if (enter == n + m) break;
        std::size_t leave = m;
        Rat best;
        for (std::size_t i = 0; i < m; ++i) {
            if (t[i][enter] <= 0) continue;
            Rat ratio = t[i][n + m] / t[i][enter];
            if (leave == m || ratio < best ||
                (ratio == best && basis[i] < basis[leave]))
            {
                leave = i;
                best = ratio;
            }
        }
        if (leave == m) return false;  // unbounded phase-1 cannot happen; defensive
        const Rat piv = t[leave][enter];
        for (std::size_t j = 0; j <= n + m; ++j) t[leave][j] /= piv;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == leave || t[i][enter] == 0) continue;
            const Rat f = t[i][enter];
            for (std::size_t j = 0; j <= n + m; ++j) t[i][j] -= f * t[leave][j];
        }
        if (z[enter] != 0) {
            const Rat f = z[enter];
            for (std::size_t j = 0; j <= n + m; ++j) z[j] -= f * t[leave][j];
        }
        basis[leave] = enter;
    }
    return -z[n + m] == 0;  // optimum of sum(artificials)
}

}  // namespace troplink
