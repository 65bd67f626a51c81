/**
 * Combinatorial topology: face posets, order complexes, simplicial and
 * Δ-complexes with explicit boundary data, chain complexes, and reduced
 * rational homology.
 *
 * Homology is always over Q. Reduced Betti numbers use the augmented chain
 * complex (empty simplex in degree -1); the empty complex, whose only
 * reduced homology is b~_{-1} = 1, is reported as an empty Betti vector and
 * flagged by callers as a degenerate input.
 */
#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "troplink/linalg.hpp"

namespace troplink {

// ---------------------------------------------------------------------------
// Chain complexes
// ---------------------------------------------------------------------------

/**
 * A chain complex C_D -> ... -> C_1 -> C_0 (-> C_{-1} if augmented), given by
 * ranks and boundary matrices. boundaries[d] is the matrix of
 * ∂_d : C_d -> C_{d-1} (rows indexed by C_{d-1}); boundaries[0] is the
 * augmentation when `augmented` is set, otherwise a 0 x rank(C_0) matrix.
 */
struct ChainComplex {
    std::vector<std::size_t> ranks;           // ranks[d] = dim C_d
    std::vector<RationalMatrix> boundaries;   // size = ranks.size()
    bool augmented = false;

    /** Throws if consecutive boundary matrices do not compose to zero. */
    void verify() const {
        if (boundaries.size() != ranks.size())
            throw std::invalid_argument("chain complex: boundary count mismatch");
        for (std::size_t d = 0; d < ranks.size(); ++d) {
            if (boundaries[d].cols() != ranks[d])
                throw std::invalid_argument("chain complex: boundary shape mismatch");
            if (d + 1 < ranks.size() && boundaries[d + 1].rows() != ranks[d])
                throw std::invalid_argument("chain complex: boundary shape mismatch");
        }
        for (std::size_t d = 0; d + 1 < ranks.size(); ++d) {
            if (!boundaries[d].multiply(boundaries[d + 1]).is_zero())
                throw std::invalid_argument("invalid boundary data");
        }
    }

    /** Homology dimensions in degrees 0..D, exact. */
    std::vector<long long> homology() const {
        verify();
        const std::size_t D = ranks.size();
        std::vector<long long> h(D);
        std::vector<std::size_t> brank(D + 1, 0);
        for (std::size_t d = 0; d < D; ++d) brank[d] = rank(boundaries[d]);
        for (std::size_t d = 0; d < D; ++d)
            h[d] = static_cast<long long>(ranks[d]) -
                   static_cast<long long>(brank[d]) -
                   static_cast<long long>(d + 1 < D ? brank[d + 1] : 0);
        return h;
    }
};

/** Dimension of homology in each degree; errors if ∂∘∂ != 0. */
inline std::vector<long long> homology_of_chain_complex(const ChainComplex& cc) {
    return cc.homology();
}

// ---------------------------------------------------------------------------
// Simplicial complexes
// ---------------------------------------------------------------------------

/**
 * Abstract simplicial complex on vertices 0..n-1, stored by facets. Facets
 * are kept sorted, deduplicated and inclusion-maximal; vertices not covered
 * by any declared facet become singleton facets, so every vertex is a face.
 */
class SimplicialComplex {
  public:
    SimplicialComplex() = default;

    SimplicialComplex(int n_vertices, std::vector<std::vector<int>> facets,
                      std::vector<std::string> vertex_labels = {})
        : n_vertices_(n_vertices), labels_(std::move(vertex_labels)) {
        std::set<std::vector<int>> cleaned;
        std::vector<bool> covered(static_cast<std::size_t>(n_vertices), false);
        for (std::vector<int>& f : facets) {
            std::sort(f.begin(), f.end());
            f.erase(std::unique(f.begin(), f.end()), f.end());
            for (int v : f) {
                if (v < 0 || v >= n_vertices)
                    throw std::invalid_argument("simplicial complex: vertex out of range");
                covered[static_cast<std::size_t>(v)] = true;
            }
            if (!f.empty()) cleaned.insert(f);
        }
        for (int v = 0; v < n_vertices; ++v)
            if (!covered[static_cast<std::size_t>(v)]) cleaned.insert({v});
        // drop faces contained in other faces
        for (const std::vector<int>& f : cleaned) {
            bool maximal = true;
            for (const std::vector<int>& g : cleaned) {
                if (f.size() >= g.size() || f == g) continue;
                if (std::includes(g.begin(), g.end(), f.begin(), f.end())) {
                    maximal = false;
                    break;
                }
            }
            if (maximal) facets_.push_back(f);
        }
        std::sort(facets_.begin(), facets_.end());
    }

    int n_vertices() const { return n_vertices_; }
    const std::vector<std::vector<int>>& facets() const { return facets_; }
    const std::vector<std::string>& vertex_labels() const { return labels_; }

    bool empty() const { return n_vertices_ == 0; }

    int dim() const {
        int d = -1;
        for (const auto& f : facets_) d = std::max(d, static_cast<int>(f.size()) - 1);
        return d;
    }

    /** All faces grouped by dimension, each list sorted lexicographically. */
    std::vector<std::vector<std::vector<int>>> faces_by_dim() const {
        std::set<std::vector<int>> all;
        for (const auto& f : facets_) {
            // enumerate nonempty subsets
            const std::size_t k = f.size();
            for (std::size_t mask = 1; mask < (std::size_t(1) << k); ++mask) {
                std::vector<int> sub;
                for (std::size_t i = 0; i < k; ++i)
                    if (mask & (std::size_t(1) << i)) sub.push_back(f[i]);
                all.insert(std::move(sub));
            }
        }
        std::vector<std::vector<std::vector<int>>> by_dim(
            static_cast<std::size_t>(dim() + 1));
        for (const auto& f : all) by_dim[f.size() - 1].push_back(f);
        return by_dim;
    }

    std::vector<long long> f_vector() const {
        std::vector<long long> fv;
        for (const auto& dimfaces : faces_by_dim())
            fv.push_back(static_cast<long long>(dimfaces.size()));
        return fv;
    }

    /**
     * The (augmented) simplicial chain complex, boundary signs by the global
     * vertex order.
     */
    ChainComplex chain_complex() const {
        ChainComplex cc;
        cc.augmented = true;
        auto by_dim = faces_by_dim();
        const std::size_t D = by_dim.size();
        if (D == 0) return cc;
        std::vector<std::map<std::vector<int>, std::size_t>> index(D);
        for (std::size_t d = 0; d < D; ++d)
            for (std::size_t i = 0; i < by_dim[d].size(); ++i) index[d][by_dim[d][i]] = i;
        cc.ranks.resize(D);
        cc.boundaries.resize(D);
        for (std::size_t d = 0; d < D; ++d) cc.ranks[d] = by_dim[d].size();
        // augmentation: each vertex maps to the empty simplex
        cc.boundaries[0] = RationalMatrix(1, cc.ranks[0]);
        for (std::size_t j = 0; j < cc.ranks[0]; ++j) cc.boundaries[0](0, j) = 1;
        for (std::size_t d = 1; d < D; ++d) {
            RationalMatrix b(cc.ranks[d - 1], cc.ranks[d]);
            for (std::size_t j = 0; j < by_dim[d].size(); ++j) {
                const std::vector<int>& face = by_dim[d][j];
                int sign = 1;
                for (std::size_t k = 0; k < face.size(); ++k) {
                    std::vector<int> sub = face;
                    sub.erase(sub.begin() + static_cast<std::ptrdiff_t>(k));
                    b(index[d - 1].at(sub), j) += sign;
                    sign = -sign;
                }
            }
            cc.boundaries[d] = std::move(b);
        }
        return cc;
    }

  private:
    int n_vertices_ = 0;
    std::vector<std::vector<int>> facets_;
    std::vector<std::string> labels_;
};

// ---------------------------------------------------------------------------
// Face posets
// ---------------------------------------------------------------------------

/**
 * A finite poset of cells graded by cell dimension; the combinatorial model
 * of links and of face lattices. Stores the full strict order.
 */
class FacePoset {
  public:
    struct Element {
        int dim;            // cell dimension
        std::string label;  // provenance (cone index, flat, ...)
    };

    FacePoset() = default;

    FacePoset(std::vector<Element> elements, std::vector<std::pair<int, int>> strict_pairs)
        : elements_(std::move(elements)) {
        const int n = static_cast<int>(elements_.size());
        below_.assign(static_cast<std::size_t>(n), {});
        for (auto [a, b] : strict_pairs) {
            if (a < 0 || a >= n || b < 0 || b >= n || a == b)
                throw std::invalid_argument("face poset: bad order pair");
            below_[static_cast<std::size_t>(b)].insert(a);
        }
        // transitive closure (desk scale)
        bool changed = true;
        while (changed) {
            changed = false;
            for (int b = 0; b < n; ++b) {
                std::set<int> add;
                for (int a : below_[static_cast<std::size_t>(b)])
                    for (int c : below_[static_cast<std::size_t>(a)])
                        if (!below_[static_cast<std::size_t>(b)].count(c)) add.insert(c);
                if (!add.empty()) {
                    changed = true;
                    below_[static_cast<std::size_t>(b)].insert(add.begin(), add.end());
                }
            }
        }
        for (int b = 0; b < n; ++b)
            if (below_[static_cast<std::size_t>(b)].count(b))
                throw std::invalid_argument("face poset: order relation has a cycle");
    }

    std::size_t size() const { return elements_.size(); }
    const std::vector<Element>& elements() const { return elements_; }
    bool less(int a, int b) const { return below_[static_cast<std::size_t>(b)].count(a) > 0; }

    std::vector<int> maximal_elements() const {
        const int n = static_cast<int>(size());
        std::vector<bool> has_parent(static_cast<std::size_t>(n), false);
        for (int b = 0; b < n; ++b)
            for (int a : below_[static_cast<std::size_t>(b)])
                has_parent[static_cast<std::size_t>(a)] = true;
        std::vector<int> out;
        for (int i = 0; i < n; ++i)
            if (!has_parent[static_cast<std::size_t>(i)]) out.push_back(i);
        return out;
    }

    /** Hasse covering relation, derived from the full order. */
    std::vector<std::pair<int, int>> covers() const {
        std::vector<std::pair<int, int>> out;
        const int n = static_cast<int>(size());
        for (int b = 0; b < n; ++b)
            for (int a : below_[static_cast<std::size_t>(b)]) {
                bool direct = true;
                for (int c : below_[static_cast<std::size_t>(b)])
                    if (c != a && less(a, c)) {
                        direct = false;
                        break;
                    }
                if (direct) out.emplace_back(a, b);
            }
        return out;
    }

    /** True iff cell dimension strictly increases along the order. */
    bool graded_by_dim() const {
        const int n = static_cast<int>(size());
        for (int b = 0; b < n; ++b)
            for (int a : below_[static_cast<std::size_t>(b)])
                if (elements_[static_cast<std::size_t>(a)].dim >=
                    elements_[static_cast<std::size_t>(b)].dim)
                    return false;
        return true;
    }

    /** All maximal chains, each as an increasing list of element indices. */
    std::vector<std::vector<int>> maximal_chains() const {
        const int n = static_cast<int>(size());
        std::vector<std::vector<int>> up(static_cast<std::size_t>(n));
        std::vector<bool> has_lower(static_cast<std::size_t>(n), false);
        auto cov = covers();
        for (auto [a, b] : cov) {
            up[static_cast<std::size_t>(a)].push_back(b);
            has_lower[static_cast<std::size_t>(b)] = true;
        }
        std::vector<std::vector<int>> chains;
        std::vector<int> cur;
        auto dfs = [&](auto&& self, int v) -> void {
            cur.push_back(v);
            if (up[static_cast<std::size_t>(v)].empty()) {
                chains.push_back(cur);
            } else {
                for (int w : up[static_cast<std::size_t>(v)]) self(self, w);
            }
            cur.pop_back();
        };
        for (int v = 0; v < n; ++v)
            if (!has_lower[static_cast<std::size_t>(v)]) dfs(dfs, v);
        std::sort(chains.begin(), chains.end());
        chains.erase(std::unique(chains.begin(), chains.end()), chains.end());
        return chains;
    }

  private:
    std::vector<Element> elements_;
    std::vector<std::set<int>> below_;  // below_[b] = {a : a < b}
};

/**
 * Order complex: vertices are the poset elements, simplices its chains,
 * facets its maximal chains.
 */
inline SimplicialComplex order_complex(const FacePoset& p) {
    std::vector<std::string> labels;
    labels.reserve(p.size());
    for (const auto& e : p.elements()) labels.push_back(e.label);
    return SimplicialComplex(static_cast<int>(p.size()), p.maximal_chains(),
                             std::move(labels));
}

/** Face poset of a simplicial complex (all nonempty faces ordered by inclusion). */
inline FacePoset face_poset(const SimplicialComplex& c) {
    auto by_dim = c.faces_by_dim();
    std::vector<FacePoset::Element> elems;
    std::map<std::vector<int>, int> idx;
    for (std::size_t d = 0; d < by_dim.size(); ++d)
        for (const auto& f : by_dim[d]) {
            idx[f] = static_cast<int>(elems.size());
            std::string label = "{";
            for (std::size_t i = 0; i < f.size(); ++i)
                label += (i ? "," : "") + std::to_string(f[i]);
            label += "}";
            elems.push_back({static_cast<int>(d), label});
        }
    std::vector<std::pair<int, int>> pairs;
    for (const auto& [f, fi] : idx)
        for (const auto& [g, gi] : idx)
            if (f.size() < g.size() &&
                std::includes(g.begin(), g.end(), f.begin(), f.end()))
                pairs.emplace_back(fi, gi);
    return FacePoset(std::move(elems), std::move(pairs));
}

/** Barycentric subdivision: the order complex of the face poset. */
inline SimplicialComplex barycentric_subdivision(const SimplicialComplex& c) {
    return order_complex(face_poset(c));
}

// ---------------------------------------------------------------------------
// Δ-complexes
// ---------------------------------------------------------------------------

/**
 * Δ-complex with explicit signed boundary data. Unlike a simplicial complex,
 * several cells may share one vertex set (dual complexes need this). The
 * producer supplies the signs; ∂∘∂ = 0 is verified, not trusted.
 */
struct DeltaComplex {
    // cells[d] = global ids of the d-cells, in order
    std::vector<std::vector<long long>> cells;
    // boundary of each cell of dim >= 1: ordered facet list with signs
    std::map<long long, std::vector<std::pair<long long, int>>> boundary;
    std::map<long long, std::string> labels;

    int dim() const { return static_cast<int>(cells.size()) - 1; }

    bool empty() const {
        for (const auto& c : cells)
            if (!c.empty()) return false;
        return true;
    }

    ChainComplex chain_complex() const {
        ChainComplex cc;
        cc.augmented = true;
        // trim trailing empty dimensions
        std::size_t D = cells.size();
        while (D > 0 && cells[D - 1].empty()) --D;
        if (D == 0) return cc;
        for (std::size_t d = 0; d < D; ++d)
            if (cells[d].empty())
                throw std::invalid_argument("invalid boundary data");  // gap in dimensions
        std::vector<std::map<long long, std::size_t>> index(D);
        for (std::size_t d = 0; d < D; ++d) {
            for (std::size_t i = 0; i < cells[d].size(); ++i) {
                if (index[d].count(cells[d][i]))
                    throw std::invalid_argument("delta complex: duplicate cell id");
                index[d][cells[d][i]] = i;
            }
        }
        cc.ranks.resize(D);
        cc.boundaries.resize(D);
        for (std::size_t d = 0; d < D; ++d) cc.ranks[d] = cells[d].size();
        cc.boundaries[0] = RationalMatrix(1, cc.ranks[0]);
        for (std::size_t j = 0; j < cc.ranks[0]; ++j) cc.boundaries[0](0, j) = 1;
        for (std::size_t d = 1; d < D; ++d) {
            RationalMatrix b(cc.ranks[d - 1], cc.ranks[d]);
            for (std::size_t j = 0; j < cells[d].size(); ++j) {
                auto it = boundary.find(cells[d][j]);
                if (it == boundary.end() || it->second.size() != d + 1)
                    throw std::invalid_argument("invalid boundary data");
                for (const auto& [facet, sign] : it->second) {
                    auto fit = index[d - 1].find(facet);
                    if (fit == index[d - 1].end())
                        throw std::invalid_argument("invalid boundary data");
                    b(fit->second, j) += sign;
                }
            }
            cc.boundaries[d] = std::move(b);
        }
        cc.verify();  // throws "invalid boundary data" on ∂∘∂ != 0
        return cc;
    }
};

// ---------------------------------------------------------------------------
// Reduced Betti numbers
// ---------------------------------------------------------------------------

namespace detail {

inline std::vector<long long> reduced_betti_of(const ChainComplex& cc) {
    if (cc.ranks.empty()) return {};  // empty complex: b~_{-1} = 1, see callers
    return cc.homology();
}

}  // namespace detail

/** Reduced rational Betti numbers b~_0..b~_d; empty vector for the empty complex. */
inline std::vector<long long> reduced_betti(const SimplicialComplex& c) {
    return detail::reduced_betti_of(c.chain_complex());
}

inline std::vector<long long> reduced_betti(const DeltaComplex& c) {
    return detail::reduced_betti_of(c.chain_complex());
}

/** Reduced Euler characteristic from cell counts alone (no linear algebra). */
inline long long reduced_euler_characteristic(const std::vector<long long>& cells_per_dim) {
    long long chi = -1;
    long long sign = 1;
    for (long long n : cells_per_dim) {
        chi += sign * n;
        sign = -sign;
    }
    return chi;
}

}  // namespace troplink
