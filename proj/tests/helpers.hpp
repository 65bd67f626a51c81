/**
 * Shared test utilities: independent oracles (naive rational elimination
 * rank, minimizing-face enumeration, Euler characteristic bookkeeping) and
 * deterministic random generators. Oracles here must stay independent of
 * the implementation paths they check.
 */
#pragma once

#include <random>
#include <vector>

#include "troplink/complex.hpp"
#include "troplink/linalg.hpp"
#include "troplink/numbers.hpp"

namespace oracle {

/** Naive rational Gaussian elimination rank, independent of Bareiss. */
inline std::size_t naive_rank(std::vector<troplink::RatVector> rows, std::size_t cols) {
    using troplink::Rat;
    std::size_t rk = 0;
    for (std::size_t col = 0; col < cols; ++col) {
        std::size_t piv = rk;
        while (piv < rows.size() && rows[piv][col] == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[rk], rows[piv]);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == rk || rows[i][col] == 0) continue;
            Rat f = rows[i][col] / rows[rk][col];
            for (std::size_t j = 0; j < cols; ++j) rows[i][j] -= f * rows[rk][j];
        }
        ++rk;
        if (rk == rows.size()) break;
    }
    return rk;
}

/**
 * Minimizing-face oracle for normal fans: the set of points of `points` at
 * which <w,.> attains its minimum.
 */
inline std::vector<troplink::IntVector> minimizing_face(
    const std::vector<troplink::IntVector>& points, const troplink::IntVector& w) {
    using troplink::Int;
    Int best;
    bool first = true;
    for (const auto& p : points) {
        Int v = troplink::dot(w, p);
        if (first || v < best) {
            best = v;
            first = false;
        }
    }
    std::vector<troplink::IntVector> face;
    for (const auto& p : points)
        if (troplink::dot(w, p) == best) face.push_back(p);
    return face;
}

/** Reduced Euler characteristic of a Betti vector (alternating sum). */
inline long long euler_of_betti(const std::vector<long long>& betti) {
    long long chi = 0, sign = 1;
    for (long long b : betti) {
        chi += sign * b;
        sign = -sign;
    }
    return chi;
}

}  // namespace oracle

namespace gen {

/** Random integer matrix with entries in [lo, hi]. */
inline troplink::RationalMatrix random_int_matrix(std::mt19937_64& rng, std::size_t rows,
                                                  std::size_t cols, int lo, int hi) {
    std::uniform_int_distribution<int> d(lo, hi);
    troplink::RationalMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = troplink::Rat(d(rng));
    return m;
}

/** Random simplicial complex on at most `max_vertices` vertices. */
inline troplink::SimplicialComplex random_complex(std::mt19937_64& rng, int max_vertices,
                                                  int max_facets, int max_facet_size) {
    std::uniform_int_distribution<int> nv(1, max_vertices);
    const int n = nv(rng);
    std::uniform_int_distribution<int> nf(1, max_facets);
    std::uniform_int_distribution<int> fs(1, std::min(max_facet_size, n));
    std::uniform_int_distribution<int> vtx(0, n - 1);
    std::vector<std::vector<int>> facets;
    const int count = nf(rng);
    for (int i = 0; i < count; ++i) {
        std::vector<int> f;
        const int size = fs(rng);
        for (int j = 0; j < size; ++j) f.push_back(vtx(rng));
        facets.push_back(std::move(f));
    }
    return troplink::SimplicialComplex(n, std::move(facets));
}

/** Random pure simplicial complex of dimension `dim` (all facets dim-sized). */
inline troplink::SimplicialComplex random_pure_complex(std::mt19937_64& rng, int n_vertices,
                                                       int dim, int n_facets) {
    std::uniform_int_distribution<int> vtx(0, n_vertices - 1);
    std::set<std::vector<int>> facets;
    int guard = 0;
    while (static_cast<int>(facets.size()) < n_facets && ++guard < 200) {
        std::set<int> f;
        while (static_cast<int>(f.size()) < dim + 1) f.insert(vtx(rng));
        facets.insert(std::vector<int>(f.begin(), f.end()));
    }
    return troplink::SimplicialComplex(
        n_vertices, std::vector<std::vector<int>>(facets.begin(), facets.end()));
}

/** Cone over a complex: a fresh apex joined to every facet. */
inline troplink::SimplicialComplex cone_over(const troplink::SimplicialComplex& c) {
    const int apex = c.n_vertices();
    std::vector<std::vector<int>> facets;
    for (std::vector<int> f : c.facets()) {
        f.push_back(apex);
        facets.push_back(std::move(f));
    }
    return troplink::SimplicialComplex(c.n_vertices() + 1, std::move(facets));
}

}  // namespace gen
