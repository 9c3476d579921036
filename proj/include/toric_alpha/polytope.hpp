#pragma once

// Exact rational polytopes carried in both half-space and vertex form.
//
// Vertex enumeration intersects every d-subset of boundary hyperplanes and
// facet enumeration spans every d-subset of points; both are exact and fine
// for the small bodies this library works with.
//
// gamma(P in B) = sup{t >= 0 : P + t(B - B) in B}. For a full-dimensional
// polytope with facets <m, e> + l >= 0 the containment P + t(v - w) in B for
// all v, w in B reads  <P, e> + l - t * width(B; e) >= 0  facet by facet, so
//     gamma(P in B) = min over facets of (<P, e> + l) / width(B; e).

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <vector>

#include "toric_alpha/errors.hpp"
#include "toric_alpha/exact.hpp"

namespace toric_alpha {

/// {m : <m, normal> + offset >= 0}
struct HalfSpace {
    LatticeVector normal;
    Rational offset;

    /// Rescales (normal, offset) by a positive factor so the normal becomes
    /// a primitive integer vector.
    static HalfSpace canonical(const QVector& normal, const Rational& offset) {
        auto [primitive, factor] = primitiveScaling(normal);
        return {std::move(primitive), offset * factor};
    }

    Rational evaluate(const QVector& m) const { return dot(m, normal) + offset; }

    friend bool operator==(const HalfSpace&, const HalfSpace&) = default;
    friend bool operator<(const HalfSpace& a, const HalfSpace& b) {
        if (a.normal != b.normal) return a.normal < b.normal;
        return a.offset < b.offset;
    }
};

enum class LatticeMode { Interior, Closed };

namespace detail {

inline bool lexLess(const QVector& a, const QVector& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

inline void sortUnique(std::vector<QVector>& pts) {
    std::sort(pts.begin(), pts.end(), lexLess);
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
}

/// Calls f on every k-subset of {0..n-1}, in lexicographic order.
inline void forEachSubset(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& f) {
    if (k > n) return;
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        f(idx);
        if (k == 0) return;
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + (i - 1)) --i;
        if (i == 0) return;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

/// Affine dimension of a point set (-1 for the empty set).
inline long affineDimension(const std::vector<QVector>& pts) {
    if (pts.empty()) return -1;
    if (pts.size() == 1) return 0;
    std::vector<QVector> diffs;
    for (std::size_t i = 1; i < pts.size(); ++i) diffs.push_back(subtract(pts[i], pts[0]));
    return static_cast<long>(rank(QMatrix::fromRows(diffs)));
}

/// Vertices of {m in Q^dim : <m, normals[i]> + offsets[i] >= 0}, assumed
/// pointed. Empty if infeasible.
inline std::vector<QVector> enumerateVertices(const std::vector<QVector>& normals,
                                              const std::vector<Rational>& offsets, std::size_t dim) {
    std::vector<QVector> out;
    if (dim == 0) return out;
    forEachSubset(normals.size(), dim, [&](const std::vector<std::size_t>& idx) {
        QMatrix m(dim, dim);
        QVector rhs(dim);
        for (std::size_t r = 0; r < dim; ++r) {
            for (std::size_t c = 0; c < dim; ++c) m(r, c) = normals[idx[r]][c];
            rhs[r] = -offsets[idx[r]];
        }
        if (determinant(m) == 0) return;
        QVector p = solveLinear(m, rhs);
        for (std::size_t i = 0; i < normals.size(); ++i)
            if (dot(p, normals[i]) + offsets[i] < 0) return;
        out.push_back(std::move(p));
    });
    sortUnique(out);
    return out;
}

/// True if some nonzero y has <y, n> >= 0 for every normal n, i.e. the
/// region is unbounded (normals are assumed to span).
inline bool hasRecessionDirection(const std::vector<QVector>& normals, std::size_t dim) {
    bool found = false;
    forEachSubset(normals.size(), dim - 1, [&](const std::vector<std::size_t>& idx) {
        if (found) return;
        QMatrix m(dim - 1, dim);
        for (std::size_t r = 0; r + 1 < dim; ++r)
            for (std::size_t c = 0; c < dim; ++c) m(r, c) = normals[idx[r]][c];
        auto kernel = nullspace(m);
        if (kernel.size() != 1) return;
        for (int sign : {1, -1}) {
            QVector y = scale(Rational(sign), kernel[0]);
            if (std::all_of(normals.begin(), normals.end(), [&](const QVector& n) { return dot(y, n) >= 0; }))
                found = true;
        }
    });
    return found;
}

}  // namespace detail

class Polytope {
public:
    /// Intersection of half-spaces. Throws DomainError "empty" or
    /// "not-a-polytope" (unbounded).
    static Polytope fromHalfSpaces(std::size_t dim, std::vector<HalfSpace> halfSpaces) {
        if (dim == 0) throw std::invalid_argument("dimension must be positive");
        std::vector<QVector> normals;
        std::vector<Rational> offsets;
        for (const auto& h : halfSpaces) {
            if (h.normal.size() != dim) throw std::invalid_argument("half-space normal has the wrong dimension");
            if (isZero(h.normal)) throw std::invalid_argument("half-space normal must be nonzero");
            normals.push_back(toQ(h.normal));
            offsets.push_back(h.offset);
        }
        if (normals.empty() || rank(QMatrix::fromRows(normals)) < dim)
            throw DomainError("not-a-polytope", "half-spaces do not cut out a bounded region");
        auto verts = detail::enumerateVertices(normals, offsets, dim);
        if (verts.empty()) throw DomainError("empty", "half-spaces have empty intersection");
        if (detail::hasRecessionDirection(normals, dim))
            throw DomainError("not-a-polytope", "half-spaces cut out an unbounded region");

        Polytope p;
        p.dim_ = dim;
        p.vertices_ = std::move(verts);
        p.halfSpaces_ = std::move(halfSpaces);
        p.finish();
        return p;
    }

    /// Convex hull of a finite point set (non-extreme points are discarded).
    static Polytope fromVertices(std::size_t dim, std::vector<QVector> points) {
        if (dim == 0) throw std::invalid_argument("dimension must be positive");
        if (points.empty()) throw DomainError("empty", "no points given");
        for (const auto& pt : points)
            if (pt.size() != dim) throw std::invalid_argument("point has the wrong dimension");
        detail::sortUnique(points);

        Polytope p;
        p.dim_ = dim;
        if (detail::affineDimension(points) < static_cast<long>(dim)) {
            p.vertices_ = std::move(points);
            p.finish();
            return p;
        }

        std::set<HalfSpace> facets;
        detail::forEachSubset(points.size(), dim, [&](const std::vector<std::size_t>& idx) {
            std::vector<QVector> diffs;
            for (std::size_t i = 1; i < idx.size(); ++i) diffs.push_back(subtract(points[idx[i]], points[idx[0]]));
            QVector normal;
            if (dim == 1) {
                normal = QVector{Rational(1)};
            } else {
                auto kernel = nullspace(QMatrix::fromRows(diffs));
                if (kernel.size() != 1) return;
                normal = kernel[0];
            }
            Rational offset = -dot(points[idx[0]], normal);
            bool anyPos = false, anyNeg = false;
            for (const auto& pt : points) {
                Rational s = dot(pt, normal) + offset;
                if (s > 0) anyPos = true;
                if (s < 0) anyNeg = true;
            }
            if (anyPos && anyNeg) return;
            if (anyNeg) {
                normal = scale(Rational(-1), normal);
                offset = -offset;
            }
            facets.insert(HalfSpace::canonical(normal, offset));
        });

        p.halfSpaces_.assign(facets.begin(), facets.end());
        // Extreme points are those where the tight facet normals span.
        for (const auto& pt : points) {
            std::vector<QVector> tight;
            for (const auto& h : p.halfSpaces_)
                if (h.evaluate(pt) == 0) tight.push_back(toQ(h.normal));
            if (tight.size() >= dim && rank(QMatrix::fromRows(tight)) == dim) p.vertices_.push_back(pt);
        }
        p.finish();
        return p;
    }

    std::size_t dim() const noexcept { return dim_; }
    const std::vector<QVector>& vertices() const noexcept { return vertices_; }
    /// Every half-space of the H-description (as given, or the facets when
    /// built from points).
    const std::vector<HalfSpace>& halfSpaces() const noexcept { return halfSpaces_; }
    /// redundant()[i] is true when halfSpaces()[i] does not define a facet.
    const std::vector<bool>& redundant() const noexcept { return redundant_; }
    /// Irredundant, deduplicated, canonical half-spaces. Empty unless full-dimensional.
    const std::vector<HalfSpace>& facets() const noexcept { return facets_; }
    long affineDimension() const noexcept { return affineDim_; }
    bool isFullDimensional() const noexcept { return affineDim_ == static_cast<long>(dim_); }
    bool isSimplex() const noexcept { return static_cast<long>(vertices_.size()) == affineDim_ + 1; }

    bool contains(const QVector& m) const {
        if (m.size() != dim_) throw std::invalid_argument("point has the wrong dimension");
        if (isFullDimensional())
            return std::all_of(facets_.begin(), facets_.end(), [&](const HalfSpace& h) { return h.evaluate(m) >= 0; });
        auto local = chartCoordinates(m);
        if (!local) return false;
        if (affineDim_ == 0) return true;
        return chart_->contains(*local);
    }

    /// Interior in the full-dimensional sense (relative interior otherwise).
    bool containsInRelativeInterior(const QVector& m) const {
        if (isFullDimensional())
            return std::all_of(facets_.begin(), facets_.end(), [&](const HalfSpace& h) { return h.evaluate(m) > 0; });
        auto local = chartCoordinates(m);
        if (!local) return false;
        if (affineDim_ == 0) return true;
        return chart_->containsInRelativeInterior(*local);
    }

    /// Affine coordinates of m in the chart of the affine hull; nullopt if m
    /// is off the hull. Only meaningful for lower-dimensional bodies.
    std::optional<QVector> chartCoordinates(const QVector& m) const {
        if (affineDim_ == 0) return m == vertices_.front() ? std::optional<QVector>(QVector{}) : std::nullopt;
        return solveInSpan(chartBasis_, subtract(m, vertices_.front()));
    }

    /// The polytope expressed in affine-hull coordinates (full-dimensional there).
    const Polytope& chart() const {
        if (!chart_) throw std::logic_error("chart requested for a full-dimensional or 0-dimensional polytope");
        return *chart_;
    }

    friend bool operator==(const Polytope& a, const Polytope& b) {
        return a.dim_ == b.dim_ && a.vertices_ == b.vertices_;
    }

private:
    void finish() {
        affineDim_ = detail::affineDimension(vertices_);
        redundant_.assign(halfSpaces_.size(), true);
        if (isFullDimensional()) {
            std::set<HalfSpace> facetSet;
            for (std::size_t i = 0; i < halfSpaces_.size(); ++i) {
                std::vector<QVector> tight;
                for (const auto& v : vertices_)
                    if (halfSpaces_[i].evaluate(v) == 0) tight.push_back(v);
                if (detail::affineDimension(tight) == static_cast<long>(dim_) - 1) {
                    HalfSpace c = HalfSpace::canonical(toQ(halfSpaces_[i].normal), halfSpaces_[i].offset);
                    if (facetSet.insert(c).second) redundant_[i] = false;
                }
            }
            facets_.assign(facetSet.begin(), facetSet.end());
        } else if (affineDim_ > 0) {
            std::vector<QVector> basis;
            for (std::size_t i = 1; i < vertices_.size() && basis.size() < static_cast<std::size_t>(affineDim_); ++i) {
                auto trial = basis;
                trial.push_back(subtract(vertices_[i], vertices_.front()));
                if (rank(QMatrix::fromRows(trial)) == trial.size()) basis = std::move(trial);
            }
            chartBasis_ = QMatrix::fromColumns(basis);
            std::vector<QVector> local;
            for (const auto& v : vertices_) local.push_back(*solveInSpan(chartBasis_, subtract(v, vertices_.front())));
            chart_ = std::make_shared<const Polytope>(fromVertices(static_cast<std::size_t>(affineDim_), local));
        }
    }

    std::size_t dim_ = 0;
    long affineDim_ = -1;
    std::vector<QVector> vertices_;
    std::vector<HalfSpace> halfSpaces_;
    std::vector<bool> redundant_;
    std::vector<HalfSpace> facets_;
    QMatrix chartBasis_;
    std::shared_ptr<const Polytope> chart_;
};

// ---------------------------------------------------------------------------
// Operations

template <typename Direction>
Rational width(const Polytope& body, const Direction& e) {
    Rational lo, hi;
    bool first = true;
    for (const auto& v : body.vertices()) {
        Rational s = dot(v, e);
        if (first || s < lo) lo = s;
        if (first || s > hi) hi = s;
        first = false;
    }
    return hi - lo;
}

inline Polytope scaled(const Polytope& body, const Rational& t) {
    std::vector<QVector> pts;
    for (const auto& v : body.vertices()) pts.push_back(scale(t, v));
    return Polytope::fromVertices(body.dim(), std::move(pts));
}

inline Polytope translated(const Polytope& body, const QVector& shift) {
    std::vector<QVector> pts;
    for (const auto& v : body.vertices()) pts.push_back(add(v, shift));
    return Polytope::fromVertices(body.dim(), std::move(pts));
}

/// {y : <y, v> + 1 >= 0 for every v in the body}; requires 0 in the interior.
inline Polytope dual(const Polytope& body) {
    if (!body.containsInRelativeInterior(QVector(body.dim())) || !body.isFullDimensional())
        throw DomainError("dual-unbounded", "the origin is not an interior point, so the dual is unbounded");
    std::vector<HalfSpace> hs;
    for (const auto& v : body.vertices()) hs.push_back(HalfSpace::canonical(v, Rational(1)));
    return Polytope::fromHalfSpaces(body.dim(), std::move(hs));
}

inline Rational gammaPoint(const QVector& point, const Polytope& body) {
    if (!body.contains(point))
        throw DomainError("not-contained", "point does not belong to the polytope");
    if (body.isFullDimensional()) {
        std::optional<Rational> best;
        for (const auto& f : body.facets()) {
            Rational g = f.evaluate(point) / width(body, f.normal);
            if (!best || g < *best) best = g;
        }
        return *best;
    }
    if (body.affineDimension() == 0)
        throw DomainError("degenerate", "gamma is not defined for a single point");
    return gammaPoint(*body.chartCoordinates(point), body.chart());
}

/// Coefficient of asymmetry 1/gamma - 1.
inline Rational asymmetry(const QVector& point, const Polytope& body) {
    Rational g = gammaPoint(point, body);
    if (g == 0) throw DomainError("infinite-asymmetry", "point lies on the relative boundary");
    return Rational(1) / g - 1;
}

/// Barycentric coordinates of `point` with respect to affinely independent
/// vertices; nullopt when the point is off their affine hull.
inline std::optional<QVector> barycentricCoordinates(const std::vector<QVector>& vertices, const QVector& point) {
    if (vertices.empty()) throw std::invalid_argument("no vertices");
    if (detail::affineDimension(vertices) + 1 != static_cast<long>(vertices.size()))
        throw DomainError("degenerate-simplex", "simplex vertices are affinely dependent");
    std::vector<QVector> cols;
    for (const auto& v : vertices) {
        QVector c = v;
        c.push_back(Rational(1));
        cols.push_back(std::move(c));
    }
    QVector target = point;
    target.push_back(Rational(1));
    return solveInSpan(QMatrix::fromColumns(cols), target);
}

/// min of the barycentric coordinates of point in the simplex.
inline Rational barycentricGamma(const Polytope& simplex, const QVector& point) {
    if (!simplex.isSimplex()) throw DomainError("degenerate-simplex", "polytope is not a simplex");
    auto coords = barycentricCoordinates(simplex.vertices(), point);
    if (!coords) throw DomainError("not-contained", "point is off the affine hull of the simplex");
    Rational m = *std::min_element(coords->begin(), coords->end());
    if (m < 0) throw DomainError("not-contained", "point does not belong to the simplex");
    return m;
}

namespace detail {

struct Constraint {
    QVector coeffs;
    Rational constant;
};

inline void enumerateSlices(const std::vector<Constraint>& cons, LatticeVector& prefix, std::size_t remaining,
                            LatticeMode mode, std::vector<LatticeVector>& out) {
    const bool strict = mode == LatticeMode::Interior;
    if (remaining == 1) {
        std::optional<Rational> lo, hi;
        for (const auto& c : cons) {
            const Rational& a = c.coeffs[0];
            if (a == 0) {
                if (c.constant < 0 || (strict && c.constant == 0)) return;
                continue;
            }
            Rational bound = -c.constant / a;
            if (a > 0) {
                if (!lo || bound > *lo) lo = bound;
            } else if (!hi || bound < *hi) {
                hi = bound;
            }
        }
        if (!lo || !hi) throw std::logic_error("slice is unbounded");
        for (Integer t = ceilOf(*lo); t <= floorOf(*hi); ++t) {
            if (strict && (Rational(t) == *lo || Rational(t) == *hi)) continue;
            prefix.push_back(t);
            out.push_back(prefix);
            prefix.pop_back();
        }
        return;
    }

    std::vector<QVector> normals;
    std::vector<Rational> offsets;
    for (const auto& c : cons) {
        if (isZero(c.coeffs)) {
            if (c.constant < 0 || (strict && c.constant == 0)) return;
            continue;
        }
        normals.push_back(c.coeffs);
        offsets.push_back(c.constant);
    }
    auto verts = enumerateVertices(normals, offsets, remaining);
    if (verts.empty()) return;
    Rational lo = verts.front()[0], hi = verts.front()[0];
    for (const auto& v : verts) {
        lo = std::min(lo, v[0]);
        hi = std::max(hi, v[0]);
    }
    for (Integer t = ceilOf(lo); t <= floorOf(hi); ++t) {
        std::vector<Constraint> sub;
        sub.reserve(cons.size());
        for (const auto& c : cons)
            sub.push_back({QVector(c.coeffs.begin() + 1, c.coeffs.end()), c.constant + c.coeffs[0] * Rational(t)});
        prefix.push_back(t);
        enumerateSlices(sub, prefix, remaining - 1, mode, out);
        prefix.pop_back();
    }
}

}  // namespace detail

/// Lattice points of the interior (or of the closed body), in lexicographic
/// order. Coordinates are scanned slice by slice, so the cost tracks the
/// body itself rather than its bounding box.
inline std::vector<LatticeVector> latticePoints(const Polytope& body, LatticeMode mode) {
    std::vector<LatticeVector> out;
    if (!body.isFullDimensional()) {
        if (mode == LatticeMode::Interior) return out;
        // Lower-dimensional closed body: scan the bounding box.
        const std::size_t d = body.dim();
        LatticeVector lo(d), hi(d);
        for (std::size_t i = 0; i < d; ++i) {
            Rational a = body.vertices().front()[i], b = a;
            for (const auto& v : body.vertices()) {
                a = std::min(a, v[i]);
                b = std::max(b, v[i]);
            }
            lo[i] = ceilOf(a);
            hi[i] = floorOf(b);
            if (lo[i] > hi[i]) return out;
        }
        LatticeVector cur = lo;
        while (true) {
            if (body.contains(toQ(cur))) out.push_back(cur);
            std::size_t i = d;
            while (i > 0) {
                --i;
                if (cur[i] < hi[i]) {
                    ++cur[i];
                    for (std::size_t j = i + 1; j < d; ++j) cur[j] = lo[j];
                    break;
                }
                if (i == 0) return out;
            }
        }
    }
    std::vector<detail::Constraint> cons;
    for (const auto& f : body.facets()) cons.push_back({toQ(f.normal), f.offset});
    LatticeVector prefix;
    detail::enumerateSlices(cons, prefix, body.dim(), mode, out);
    return out;
}

namespace detail {

/// Pulling triangulation: cone the first vertex of a face over the
/// triangulations of its facets not containing that vertex.
inline void pullTriangulate(const std::vector<QVector>& verts, const std::vector<std::vector<std::size_t>>& facetVerts,
                            const std::vector<std::size_t>& face, long faceDim, std::vector<std::size_t>& apexes,
                            std::vector<std::vector<std::size_t>>& out) {
    if (faceDim == 0) {
        auto simplex = apexes;
        simplex.push_back(face.front());
        out.push_back(std::move(simplex));
        return;
    }
    const std::size_t apex = face.front();
    std::set<std::vector<std::size_t>> subfaces;
    for (const auto& fv : facetVerts) {
        std::vector<std::size_t> inter;
        std::set_intersection(face.begin(), face.end(), fv.begin(), fv.end(), std::back_inserter(inter));
        if (inter.size() == face.size()) continue;
        std::vector<QVector> pts;
        for (auto i : inter) pts.push_back(verts[i]);
        if (affineDimension(pts) == faceDim - 1) subfaces.insert(std::move(inter));
    }
    for (const auto& sub : subfaces) {
        if (std::binary_search(sub.begin(), sub.end(), apex)) continue;
        apexes.push_back(apex);
        pullTriangulate(verts, facetVerts, sub, faceDim - 1, apexes, out);
        apexes.pop_back();
    }
}

}  // namespace detail

/// Simplices (as vertex-index tuples) of a triangulation using no new vertices.
inline std::vector<std::vector<std::size_t>> triangulate(const Polytope& body) {
    if (!body.isFullDimensional()) throw DomainError("degenerate", "triangulation needs a full-dimensional polytope");
    const auto& verts = body.vertices();
    std::vector<std::vector<std::size_t>> facetVerts;
    for (const auto& f : body.facets()) {
        std::vector<std::size_t> idx;
        for (std::size_t i = 0; i < verts.size(); ++i)
            if (f.evaluate(verts[i]) == 0) idx.push_back(i);
        facetVerts.push_back(std::move(idx));
    }
    std::vector<std::size_t> all(verts.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    std::vector<std::size_t> apexes;
    std::vector<std::vector<std::size_t>> out;
    detail::pullTriangulate(verts, facetVerts, all, static_cast<long>(body.dim()), apexes, out);
    return out;
}

/// Euclidean volume (unit lattice cell has volume 1). Lower-dimensional
/// bodies have volume 0.
inline Rational normalizedVolume(const Polytope& body) {
    if (!body.isFullDimensional()) return Rational(0);
    const auto& verts = body.vertices();
    const std::size_t d = body.dim();
    Rational total(0);
    for (const auto& simplex : triangulate(body)) {
        std::vector<QVector> edges;
        for (std::size_t i = 1; i < simplex.size(); ++i) edges.push_back(subtract(verts[simplex[i]], verts[simplex[0]]));
        total += abs(determinant(QMatrix::fromRows(edges)));
    }
    return total / Rational(factorial(d));
}

/// True when the vertex set is invariant under the point reflection at p.
inline bool isCentrallySymmetricAbout(const Polytope& body, const QVector& p) {
    std::vector<QVector> reflected;
    for (const auto& v : body.vertices()) reflected.push_back(subtract(scale(Rational(2), p), v));
    detail::sortUnique(reflected);
    return reflected == body.vertices();
}

struct VanDerCorputReport {
    std::size_t interiorPoints = 0;
    Rational gamma;
    Rational volume;
    Rational lowerBound;  // gamma^d * volume
    bool pass = false;
};

/// |Z^d in int(B)| >= gamma(0 in B)^d vol(B), both sides exact.
inline VanDerCorputReport vanDerCorputCheck(const Polytope& body) {
    VanDerCorputReport r;
    QVector origin(body.dim());
    if (!body.containsInRelativeInterior(origin) || !body.isFullDimensional())
        throw DomainError("not-interior", "the origin must be an interior point");
    r.interiorPoints = latticePoints(body, LatticeMode::Interior).size();
    r.gamma = gammaPoint(origin, body);
    r.volume = normalizedVolume(body);
    r.lowerBound = power(r.gamma, body.dim()) * r.volume;
    r.pass = Rational(static_cast<long>(r.interiorPoints)) >= r.lowerBound;
    return r;
}

}  // namespace toric_alpha
