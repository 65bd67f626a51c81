/**
 * Lattice polytopes at desk scale: brute-force certified convex hulls,
 * normal fans (MIN convention throughout: the cone of a face F consists of
 * the directions whose minimum over the polytope is attained exactly on F),
 * and Newton polytopes of Laurent polynomials.
 */
#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include "troplink/fan.hpp"
#include "troplink/halfspaces.hpp"
#include "troplink/linalg.hpp"

namespace troplink {

/**
 * The subset of the given lattice points that are vertices of their convex
 * hull, in lexicographic order. A point is certified as a vertex iff it is
 * not a convex combination of the other points (exact phase-one simplex).
 */
inline std::vector<IntVector> convex_hull_vertices(const std::vector<IntVector>& points) {
    if (points.empty())
        throw std::invalid_argument("convex_hull_vertices: empty point list");
    const std::size_t dim = points.front().size();
    for (const IntVector& p : points)
        if (p.size() != dim)
            throw std::invalid_argument("convex_hull_vertices: mixed dimensions");
    std::vector<IntVector> uniq = points;
    std::sort(uniq.begin(), uniq.end(), lex_less);
    uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());

    std::vector<IntVector> verts;
    for (std::size_t i = 0; i < uniq.size(); ++i) {
        // feasibility of: lambda >= 0, sum lambda_j q_j = p, sum lambda_j = 1
        std::vector<RatVector> rows(dim + 1);
        RatVector b(dim + 1);
        std::vector<const IntVector*> others;
        for (std::size_t j = 0; j < uniq.size(); ++j)
            if (j != i) others.push_back(&uniq[j]);
        for (std::size_t d = 0; d < dim; ++d) {
            rows[d].resize(others.size());
            for (std::size_t j = 0; j < others.size(); ++j)
                rows[d][j] = Rat((*others[j])[d]);
            b[d] = Rat(uniq[i][d]);
        }
        rows[dim].assign(others.size(), Rat(1));
        b[dim] = 1;
        if (!nonnegative_solution_exists(rows, b)) verts.push_back(uniq[i]);
    }
    return verts;
}

/**
 * A lattice polytope given by a generating point set; the vertex set is the
 * certified minimal generating subset.
 */
class LatticePolytope {
  public:
    explicit LatticePolytope(std::vector<IntVector> points, int ambient_rank = -1)
        : points_(std::move(points)) {
        if (points_.empty())
            throw std::invalid_argument("polytope needs at least one point");
        ambient_rank_ = ambient_rank >= 0 ? ambient_rank
                                          : static_cast<int>(points_.front().size());
        for (const IntVector& p : points_)
            if (p.size() != static_cast<std::size_t>(ambient_rank_))
                throw std::invalid_argument("polytope: mixed dimensions");
        vertices_ = convex_hull_vertices(points_);
    }

    int ambient_rank() const { return ambient_rank_; }
    const std::vector<IntVector>& points() const { return points_; }
    const std::vector<IntVector>& vertices() const { return vertices_; }

    /** Dimension of the polytope (rank of the difference lattice). */
    int dim() const {
        std::vector<IntVector> diffs;
        for (std::size_t i = 1; i < vertices_.size(); ++i) {
            IntVector d(vertices_[i].size());
            for (std::size_t j = 0; j < d.size(); ++j)
                d[j] = vertices_[i][j] - vertices_[0][j];
            diffs.push_back(std::move(d));
        }
        return static_cast<int>(rank_int_rows(diffs, static_cast<std::size_t>(ambient_rank_)));
    }

  private:
    int ambient_rank_;
    std::vector<IntVector> points_;
    std::vector<IntVector> vertices_;
};

/**
 * Complete normal fan in the dual space, MIN convention: the maximal cone of
 * a vertex v is {w : <w, v> <= <w, u> for all vertices u}. Lineality is the
 * orthogonal complement of the polytope's affine span directions, so
 * lower-dimensional polytopes give fans with nontrivial lineality.
 */
inline Fan normal_fan(const LatticePolytope& p) {
    const std::size_t dim = static_cast<std::size_t>(p.ambient_rank());
    const std::vector<IntVector>& verts = p.vertices();

    std::vector<IntVector> diffs;  // all pairwise difference directions from v0
    for (std::size_t i = 1; i < verts.size(); ++i) {
        IntVector d(dim);
        for (std::size_t j = 0; j < dim; ++j) d[j] = verts[i][j] - verts[0][j];
        diffs.push_back(std::move(d));
    }
    std::vector<IntVector> lin = null_space_int(diffs, dim);
    RowEchelon lin_rref = rref_int(lin, dim);

    std::vector<std::vector<IntVector>> max_cones;
    for (std::size_t vi = 0; vi < verts.size(); ++vi) {
        HRep h;
        h.dim = dim;
        for (std::size_t ui = 0; ui < verts.size(); ++ui) {
            if (ui == vi) continue;
            IntVector row(dim);
            bool zero = true;
            for (std::size_t j = 0; j < dim; ++j) {
                row[j] = verts[ui][j] - verts[vi][j];
                if (row[j] != 0) zero = false;
            }
            if (!zero) h.inequalities.push_back(primitive(row));
        }
        VRep v = cone_vrep(h);
        // canonicalize rays mod the fan lineality so shared faces share vectors
        std::vector<IntVector> rays;
        for (const IntVector& r : v.rays) {
            RatVector red = reduce_mod_subspace(to_rat(r), lin_rref);
            rays.push_back(to_primitive_int(red));
        }
        max_cones.push_back(std::move(rays));
    }
    return Fan::from_generating_cones(static_cast<int>(dim), std::move(lin), max_cones);
}

// ---------------------------------------------------------------------------
// Laurent polynomials
// ---------------------------------------------------------------------------

/**
 * A Laurent polynomial: exponents pairwise distinct, no zero coefficients,
 * at least one term. Terms are kept sorted by exponent (lexicographically
 * decreasing) so printing and iteration are deterministic.
 */
class LaurentPolynomial {
  public:
    using Term = std::pair<IntVector, Rat>;

    /** Combines like terms and drops zeros; throws if nothing remains. */
    static LaurentPolynomial make(std::vector<Term> raw_terms, int rank = -1) {
        if (raw_terms.empty())
            throw std::invalid_argument("polynomial needs at least one term");
        std::size_t r = rank >= 0 ? static_cast<std::size_t>(rank) : 0;
        for (const Term& t : raw_terms) r = std::max(r, t.first.size());
        std::map<IntVector, Rat> acc;
        for (Term& t : raw_terms) {
            t.first.resize(r, Int(0));
            acc[t.first] += t.second;
        }
        LaurentPolynomial f;
        f.rank_ = static_cast<int>(r);
        for (auto it = acc.rbegin(); it != acc.rend(); ++it)
            if (it->second != 0) f.terms_.push_back({it->first, it->second});
        if (f.terms_.empty())
            throw std::invalid_argument("polynomial is zero after combining terms");
        return f;
    }

    int rank() const { return rank_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_monomial() const { return terms_.size() == 1; }

  private:
    int rank_ = 0;
    std::vector<Term> terms_;
};

/** Newton polytope: the hull of the exponent vectors. */
inline LatticePolytope newton_polytope(const LaurentPolynomial& f) {
    std::vector<IntVector> exps;
    for (const auto& [e, c] : f.terms()) exps.push_back(e);
    return LatticePolytope(std::move(exps), f.rank());
}

}  // namespace troplink
