/*
 * polytope.cpp
 * ------------
 * Exact convex hulls and face lattices by brute-force facet enumeration
 * (adequate and fully deterministic at the dimensions this library
 * targets), plus the lattice-geometric quantities built on them.
 */
#include "minf/polytope.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <stdexcept>

namespace minf {

bool FaceLattice::is_subface(int sub, int super) const {
    const auto& a = faces[sub].vertex_indices;
    const auto& b = faces[super].vertex_indices;
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

std::vector<int> FaceLattice::faces_of_dim(int d) const {
    std::vector<int> out;
    for (std::size_t i = 0; i < faces.size(); ++i)
        if (faces[i].dim == d) out.push_back(static_cast<int>(i));
    return out;
}

namespace {

// Enumerate all size-k index subsets of {0..m-1}, calling fn on each.
template <typename Fn>
void for_each_subset(int m, int k, Fn&& fn) {
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    if (k > m) return;
    while (true) {
        fn(idx);
        int i = k - 1;
        while (i >= 0 && idx[i] == m - k + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

}  // namespace

LatticePolytope LatticePolytope::convex_hull(const std::vector<Vec>& points) {
    if (points.empty()) throw std::invalid_argument("convex_hull: empty point list");
    const int n = static_cast<int>(points[0].size());
    for (const Vec& p : points)
        if (static_cast<int>(p.size()) != n)
            throw std::invalid_argument("convex_hull: dimension mismatch");

    std::vector<Vec> pts = points;
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

    LatticePolytope poly;
    poly.ambient_dim_ = n;
    const Vec base = pts.front();  // lexicographically smallest, always extreme

    Mat diffs;
    for (const Vec& p : pts) diffs.push_back(sub(p, base));
    poly.frame_ = SublatticeFrame::from_generators(diffs, n);
    const int d = poly.frame_.rank();
    poly.dim_ = d;

    std::vector<Vec> coords;
    coords.reserve(pts.size());
    for (const Vec& p : pts) coords.push_back(*poly.frame_.to_coords(sub(p, base)));

    if (d == 0) {
        poly.vertices_ = {base};
        poly.vcoords_ = {Vec{}};
        return poly;
    }

    // Facet enumeration: every facet hyperplane is spanned by some d of the
    // candidate points; collect the oriented inequalities that are valid for
    // the whole point set.
    std::set<std::pair<Vec, Int>> facet_set;
    const int m = static_cast<int>(pts.size());
    for_each_subset(m, d, [&](const std::vector<int>& idx) {
        Mat rows;
        for (int j = 1; j < d; ++j) rows.push_back(sub(coords[idx[j]], coords[idx[0]]));
        if (!rows.empty() && rank(rows) != d - 1) return;
        Vec u;
        try {
            u = corank_one_kernel(rows, d);
        } catch (const std::invalid_argument&) {
            return;
        }
        const Int c = dot(u, coords[idx[0]]);
        bool all_le = true, all_ge = true;
        for (const Vec& y : coords) {
            const Int v = dot(u, y);
            if (v > c) all_le = false;
            if (v < c) all_ge = false;
        }
        if (all_le) facet_set.emplace(u, c);
        if (all_ge) {
            Vec nu(u.size());
            for (std::size_t t = 0; t < u.size(); ++t) nu[t] = -u[t];
            facet_set.emplace(std::move(nu), -c);
        }
    });

    for (const auto& [u, c] : facet_set) poly.facets_.push_back({u, c});

    // Vertices: points whose active facet normals span the full frame space.
    std::vector<Vec> verts;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        Mat active;
        for (const auto& f : poly.facets_)
            if (dot(f.normal, coords[i]) == f.offset) active.push_back(f.normal);
        if (!active.empty() && rank(active) == d) verts.push_back(pts[i]);
    }
    std::sort(verts.begin(), verts.end());
    poly.vertices_ = std::move(verts);
    poly.vcoords_.clear();
    for (const Vec& p : poly.vertices_)
        poly.vcoords_.push_back(*poly.frame_.to_coords(sub(p, base)));
    assert(poly.vertices_.front() == base);
    return poly;
}

bool LatticePolytope::contains_scaled(const Vec& ambient_point, const Int& k) const {
    Vec shifted = ambient_point;
    for (int j = 0; j < ambient_dim_; ++j) shifted[j] -= k * vertices_.front()[j];
    const auto c = frame_.to_coords(shifted);
    if (!c) return false;
    if (dim_ == 0) return true;  // shifted must be 0, which to_coords verified
    for (const auto& f : facets_)
        if (dot(f.normal, *c) > k * f.offset) return false;
    return true;
}

std::vector<Vec> LatticePolytope::lattice_points(const Int& k, bool interior_only) const {
    if (k < 0) throw std::invalid_argument("lattice_points: negative dilation");
    std::vector<Vec> out;
    if (dim_ == 0) {
        out.push_back(scale(vertices_.front(), k));
        return out;
    }
    if (k == 0) {
        if (!interior_only) out.push_back(Vec(ambient_dim_, 0));
        return out;
    }
    const int d = dim_;
    Vec lo(d), hi(d);
    for (int j = 0; j < d; ++j) {
        Int mn = Int(k * vcoords_[0][j]), mx = mn;
        for (const Vec& y : vcoords_) {
            mn = std::min(mn, Int(k * y[j]));
            mx = std::max(mx, Int(k * y[j]));
        }
        lo[j] = mn;
        hi[j] = mx;
    }
    Vec y = lo;
    const Vec kbase = scale(vertices_.front(), k);
    const std::size_t nf = facets_.size();
    // Incrementally maintained facet values dot(normal, y); the odometer
    // updates them in O(#facets) per step instead of O(#facets * d) dots.
    std::vector<Int> vals(nf), bounds(nf);
    for (std::size_t f = 0; f < nf; ++f) {
        vals[f] = dot(facets_[f].normal, y);
        bounds[f] = k * facets_[f].offset;
    }
    while (true) {
        bool ok = true;
        for (std::size_t f = 0; f < nf; ++f) {
            if (interior_only ? (vals[f] >= bounds[f]) : (vals[f] > bounds[f])) {
                ok = false;
                break;
            }
        }
        if (ok) out.push_back(add(kbase, frame_.from_coords(y)));
        int j = d - 1;
        while (j >= 0 && y[j] == hi[j]) {
            const Int span = hi[j] - lo[j];
            for (std::size_t f = 0; f < nf; ++f)
                vals[f] -= facets_[f].normal[j] * span;
            y[j] = lo[j];
            --j;
        }
        if (j < 0) break;
        ++y[j];
        for (std::size_t f = 0; f < nf; ++f) vals[f] += facets_[f].normal[j];
    }
    std::sort(out.begin(), out.end());
    return out;
}

const FaceLattice& LatticePolytope::face_lattice() const {
    std::call_once(memo_->once, [this] { build_face_lattice(); });
    return *memo_->lattice;
}

void LatticePolytope::build_face_lattice() const {
    auto lat = std::make_shared<FaceLattice>();
    const int nv = static_cast<int>(vertices_.size());
    const Vec origin(ambient_dim_, 0);
    const bool origin_in_poly = contains_scaled(origin, 1);

    Face empty;
    empty.dim = -1;
    lat->faces.push_back(empty);

    std::vector<int> all(nv);
    for (int i = 0; i < nv; ++i) all[i] = i;

    if (dim_ == 0) {
        Face whole;
        whole.dim = 0;
        whole.vertex_indices = all;
        whole.supporting_functional = Vec(ambient_dim_, 0);
        whole.contains_origin = origin_in_poly;
        whole.is_whole_polytope = true;
        lat->faces.push_back(whole);
        memo_->lattice = lat;
        return;
    }

    // Vertex sets of faces = closure of facet vertex sets under intersection.
    std::set<std::vector<int>> sets;
    sets.insert(all);
    std::vector<std::vector<int>> facet_verts;
    for (const auto& f : facets_) {
        std::vector<int> s;
        for (int i = 0; i < nv; ++i)
            if (dot(f.normal, vcoords_[i]) == f.offset) s.push_back(i);
        facet_verts.push_back(s);
        sets.insert(std::move(s));
    }
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<std::vector<int>> cur(sets.begin(), sets.end());
        for (std::size_t a = 0; a < cur.size(); ++a)
            for (std::size_t b = a + 1; b < cur.size(); ++b) {
                std::vector<int> inter;
                std::set_intersection(cur[a].begin(), cur[a].end(), cur[b].begin(),
                                      cur[b].end(), std::back_inserter(inter));
                if (!inter.empty() && sets.insert(inter).second) grew = true;
            }
    }

    for (const auto& s : sets) {
        Face f;
        f.vertex_indices = s;
        Mat diffs;
        for (std::size_t i = 1; i < s.size(); ++i)
            diffs.push_back(sub(vcoords_[s[i]], vcoords_[s[0]]));
        f.dim = diffs.empty() ? 0 : rank(diffs);
        f.is_whole_polytope = (static_cast<int>(s.size()) == nv && f.dim == dim_);
        if (f.is_whole_polytope) {
            f.supporting_functional = Vec(ambient_dim_, 0);
            f.supporting_value = 0;
            f.contains_origin = origin_in_poly;
        } else {
            // Sum of active facet normals lies in the relative interior of
            // the normal cone, hence supports exactly this face.
            Vec sum(dim_, 0);
            for (std::size_t fi = 0; fi < facets_.size(); ++fi) {
                if (std::includes(facet_verts[fi].begin(), facet_verts[fi].end(),
                                  s.begin(), s.end()))
                    sum = add(sum, facets_[fi].normal);
            }
            f.supporting_functional = frame_.lift_covector(sum);
            Int mx = dot(f.supporting_functional, vertices_[0]);
            for (const Vec& v : vertices_) mx = std::max(mx, dot(f.supporting_functional, v));
            f.supporting_value = mx;
            // The extremum must be attained exactly on this face's vertices.
            for (int i = 0; i < nv; ++i) {
                const bool on_face = std::binary_search(s.begin(), s.end(), i);
                const bool tight = dot(f.supporting_functional, vertices_[i]) == mx;
                if (on_face != tight)
                    throw std::logic_error("face_lattice: supporting functional mismatch");
            }
            f.contains_origin = origin_in_poly && f.supporting_value == 0;
        }
        lat->faces.push_back(std::move(f));
    }
    std::sort(lat->faces.begin(), lat->faces.end(), [](const Face& a, const Face& b) {
        if (a.dim != b.dim) return a.dim < b.dim;
        return a.vertex_indices < b.vertex_indices;
    });
    memo_->lattice = lat;
}

LatticePolytope LatticePolytope::face_polytope(const Face& f) const {
    std::vector<Vec> pts;
    for (int i : f.vertex_indices) pts.push_back(vertices_[i]);
    return convex_hull(pts);
}

std::vector<std::vector<int>> triangulate(const LatticePolytope& p) {
    std::vector<std::vector<int>> out;
    if (p.dim() == 0) {
        out.push_back({0});
        return out;
    }
    const auto& lat = p.face_lattice();
    // Cone from vertex 0 over the triangulated facets avoiding it.
    for (int fi : lat.faces_of_dim(p.dim() - 1)) {
        const Face& f = lat.faces[fi];
        if (std::binary_search(f.vertex_indices.begin(), f.vertex_indices.end(), 0))
            continue;
        const LatticePolytope fp = p.face_polytope(f);
        // Map facet-polytope vertex indices back to parent indices.
        std::vector<int> back;
        for (const Vec& v : fp.vertices()) {
            const auto it = std::lower_bound(p.vertices().begin(), p.vertices().end(), v);
            back.push_back(static_cast<int>(it - p.vertices().begin()));
        }
        for (const auto& simplex : triangulate(fp)) {
            std::vector<int> s = {0};
            for (int i : simplex) s.push_back(back[i]);
            std::sort(s.begin(), s.end());
            out.push_back(std::move(s));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

Int normalized_volume(const LatticePolytope& p) {
    if (p.dim() == 0) return 1;
    Int vol = 0;
    for (const auto& simplex : triangulate(p)) {
        Mat edges;
        for (std::size_t i = 1; i < simplex.size(); ++i)
            edges.push_back(sub(p.vertex_coords()[simplex[i]], p.vertex_coords()[simplex[0]]));
        Int dv = det(edges);
        vol += (dv < 0) ? -dv : dv;
    }
    return vol;
}

Int normalized_volume(const LatticePolytope& parent, const Face& f) {
    if (f.dim <= 0) return 1;
    return normalized_volume(parent.face_polytope(f));
}

FaceAtInfinity face_at_infinity_data(const LatticePolytope& parent, const Face& f) {
    if (f.contains_origin || f.dim < 0)
        throw std::invalid_argument("face_at_infinity_data: face contains the origin");
    FaceAtInfinity g;
    g.face = f;
    g.gamma_dim = f.dim;

    std::vector<Vec> pts;
    pts.push_back(Vec(parent.ambient_dim(), 0));
    for (int i : f.vertex_indices) pts.push_back(parent.vertices()[i]);
    g.delta = LatticePolytope::convex_hull(pts);
    if (g.delta.dim() != f.dim + 1)
        throw std::logic_error("face_at_infinity_data: origin in affine hull of face");

    const int r = g.delta.dim();
    // Frame coordinates of the γ-vertices (base of Δ_γ is the origin).
    std::vector<Vec> ycoords;
    for (int i : f.vertex_indices)
        ycoords.push_back(*g.delta.frame().to_coords(parent.vertices()[i]));
    Mat rows;
    for (std::size_t i = 1; i < ycoords.size(); ++i)
        rows.push_back(sub(ycoords[i], ycoords[0]));
    g.ell = corank_one_kernel(rows, r);
    Int c = dot(g.ell, ycoords[0]);
    if (c < 0) {
        for (auto& x : g.ell) x = -x;
        c = -c;
    }
    if (c == 0) throw std::logic_error("face_at_infinity_data: zero lattice distance");
    for (const Vec& y : ycoords)
        if (dot(g.ell, y) != c)
            throw std::logic_error("face_at_infinity_data: functional not constant on face");
    g.d = c;

    for (int i : f.vertex_indices)
        for (int j = 0; j < parent.ambient_dim(); ++j)
            if (parent.vertices()[i][j] != 0) g.s_set.insert(j);
    g.s = static_cast<int>(g.s_set.size());
    g.m = g.s - g.gamma_dim - 1;
    if (g.m < 0) throw std::logic_error("face_at_infinity_data: negative m");
    g.interior = (g.s == parent.ambient_dim());
    return g;
}

Int lattice_distance(const LatticePolytope& parent, const Face& f) {
    return face_at_infinity_data(parent, f).d;
}

Int height(const Vec& v, const FaceAtInfinity& g) {
    const auto c = g.delta.frame().to_coords(v);
    if (!c) throw std::invalid_argument("height: vector not in the sublattice M_gamma");
    return g.d - dot(g.ell, *c);
}

bool is_prime(const LatticePolytope& p) {
    const int d = p.dim();
    if (d == 0) return true;
    const auto& lat = p.face_lattice();
    const auto edges = lat.faces_of_dim(1);
    for (std::size_t w = 0; w < p.vertices().size(); ++w) {
        Mat dirs;
        for (int ei : edges) {
            const Face& e = lat.faces[ei];
            if (!std::binary_search(e.vertex_indices.begin(), e.vertex_indices.end(),
                                    static_cast<int>(w)))
                continue;
            // Edge direction away from w in frame coordinates.
            const Vec a = p.vertex_coords()[e.vertex_indices.front()];
            const Vec b = p.vertex_coords()[e.vertex_indices.back()];
            Vec dir = (e.vertex_indices.front() == static_cast<int>(w)) ? sub(b, a)
                                                                        : sub(a, b);
            dirs.push_back(make_primitive(dir));
        }
        if (static_cast<int>(dirs.size()) != d) return false;
        Int dv = det(dirs);
        if (dv != 1 && dv != -1) return false;
    }
    return true;
}

bool is_pseudo_prime(const LatticePolytope& p) {
    const int d = p.dim();
    const auto& lat = p.face_lattice();
    for (int ei : lat.faces_of_dim(1)) {
        int count = 0;
        for (int fi : lat.faces_of_dim(2))
            if (lat.is_subface(ei, fi)) ++count;
        if (count != d - 1) return false;
    }
    return true;
}

}  // namespace minf
