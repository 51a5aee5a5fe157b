/*
 * polytope.hpp
 * ------------
 * Lattice polytopes with exact face lattices: convex hulls, supporting
 * functionals, normalized volumes, lattice distances and heights of faces
 * at infinity, and lattice point enumeration of dilates.
 *
 * A polytope carries an intrinsic chart: the lexicographically smallest
 * vertex as base point plus a saturated frame of the linear span of the
 * vertex differences. Facet inequalities live in frame coordinates, so
 * lower-dimensional polytopes work everywhere with "dim" meaning intrinsic
 * dimension.
 */
#pragma once

#include <memory>
#include <mutex>
#include <set>
#include <string>
#include <vector>

#include "minf/linalg.hpp"

namespace minf {

class LatticePolytope;

/*
 * A face of a polytope. dim == -1 encodes the empty face. The supporting
 * functional is a primitive ambient covector attaining its maximum over
 * the polytope exactly on the face (zero covector for the polytope itself
 * and for the empty face).
 */
struct Face {
    int dim = -1;
    std::vector<int> vertex_indices;    // sorted indices into parent vertices
    Vec supporting_functional;          // ambient, primitive (or zero)
    Int supporting_value = 0;           // max over the polytope
    bool contains_origin = false;
    bool is_whole_polytope = false;
};

struct FaceLattice {
    std::vector<Face> faces;  // graded: empty face first, then by dim, lex

    // Γ' ≺ Γ, by vertex-set inclusion (valid for polytope face lattices).
    bool is_subface(int sub, int super) const;
    std::vector<int> faces_of_dim(int d) const;
};

class LatticePolytope {
public:
    // Exact convex hull; keeps only extreme points, lexicographically sorted.
    static LatticePolytope convex_hull(const std::vector<Vec>& points);

    int ambient_dim() const { return ambient_dim_; }
    int dim() const { return dim_; }  // intrinsic dimension
    const std::vector<Vec>& vertices() const { return vertices_; }
    const Vec& base_vertex() const { return vertices_.front(); }
    const SublatticeFrame& frame() const { return frame_; }
    const std::vector<Vec>& vertex_coords() const { return vcoords_; }

    struct FacetIneq {
        Vec normal;  // frame coordinates, primitive
        Int offset;  // <normal, y> <= offset for all y in the polytope
    };
    const std::vector<FacetIneq>& facet_inequalities() const { return facets_; }

    // Memoized face lattice (idempotent; concurrent calls compute identical
    // results).
    const FaceLattice& face_lattice() const;

    // Face as a standalone polytope (hull of its vertices).
    LatticePolytope face_polytope(const Face& f) const;

    // Membership of an ambient point in the k-th dilate (closed).
    bool contains_scaled(const Vec& ambient_point, const Int& k) const;

    // All integral points of kP, or of its relative interior.
    // k = 0 yields {0} for the closed case and for interior when dim == 0,
    // otherwise the empty list. Results are lexicographically sorted.
    std::vector<Vec> lattice_points(const Int& k, bool interior_only) const;

private:
    int ambient_dim_ = 0;
    int dim_ = 0;
    std::vector<Vec> vertices_;
    SublatticeFrame frame_;
    std::vector<Vec> vcoords_;
    std::vector<FacetIneq> facets_;

    // Shared memo keeps the polytope copyable; copies share the (immutable)
    // computed lattice.
    struct Memo {
        std::once_flag once;
        std::shared_ptr<const FaceLattice> lattice;
    };
    std::shared_ptr<Memo> memo_ = std::make_shared<Memo>();

    void build_face_lattice() const;
};

// Vol_Z of a face: (dim)!-normalized volume in the lattice Z^n ∩ L(γ),
// computed by triangulation and determinants in frame coordinates.
// A 0-dimensional face has volume 1.
Int normalized_volume(const LatticePolytope& parent, const Face& f);
Int normalized_volume(const LatticePolytope& p);

// Triangulation of a polytope into lattice simplices given by vertex index
// tuples (dim+1 vertices per simplex); deterministic.
std::vector<std::vector<int>> triangulate(const LatticePolytope& p);

/*
 * Data of a face at infinity γ (0 ∉ γ) of a polytope having 0 as a vertex:
 * the cone polytope Δ_γ = conv({0} ∪ γ), the lattice M_γ = Z^n ∩ L(Δ_γ)
 * as Δ_γ's frame, the primitive functional ℓ on M_γ with ℓ(0) = 0 and
 * ℓ ≡ d_γ on γ, and the coordinate subspace data (S_γ, s_γ, m_γ).
 */
struct FaceAtInfinity {
    Face face;                  // within the parent polytope
    LatticePolytope delta;      // Δ_γ = conv({0} ∪ γ)
    int gamma_dim = 0;          // dim γ = delta.dim() - 1
    Int d = 0;                  // lattice distance d_γ > 0
    Vec ell;                    // functional in delta frame coordinates
    std::set<int> s_set;        // S_γ (0-based coordinate indices)
    int s = 0;                  // s_γ = #S_γ
    int m = 0;                  // m_γ = s_γ - dim γ - 1 >= 0
    bool interior = false;      // rel.int(γ) ⊂ Int(R^n_+), i.e. s_γ = n
};

// Build the face-at-infinity data; requires 0 to be a vertex of `parent`
// and 0 ∉ f.
FaceAtInfinity face_at_infinity_data(const LatticePolytope& parent, const Face& f);

// d_γ of a face at infinity.
Int lattice_distance(const LatticePolytope& parent, const Face& f);

// ht(v, γ) = d_γ − ℓ(v) for v ∈ M_γ; throws if v is outside the sublattice.
Int height(const Vec& v, const FaceAtInfinity& g);

// Def 2.10-style conditions, with "n" = intrinsic dimension:
// prime: every vertex cone is generated by a lattice basis;
// pseudo-prime: every 1-face lies in exactly (dim − 1) two-faces.
bool is_prime(const LatticePolytope& p);
bool is_pseudo_prime(const LatticePolytope& p);

}  // namespace minf
