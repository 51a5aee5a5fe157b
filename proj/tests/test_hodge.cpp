/*
 * Unit tests for the equivariant Hodge-Deligne tables: fixture values on
 * the unit triangle, Lefschetz twists, closure/affine tables, row sums,
 * and antidiagonal sums.
 */
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "minf/hodge.hpp"

using namespace minf;

namespace {

const RootOfUnity kOne = RootOfUnity::one();

int whole_face_index(const FacePhiCache& cache) {
    const auto& faces = cache.lattice().faces;
    for (std::size_t i = 0; i < faces.size(); ++i)
        if (faces[i].is_whole_polytope) return static_cast<int>(i);
    throw std::runtime_error("no whole face");
}

FaceAtInfinity far_edge(const LatticePolytope& parent) {
    const auto& lat = parent.face_lattice();
    for (int fi : lat.faces_of_dim(1)) {
        const Face& f = lat.faces[static_cast<std::size_t>(fi)];
        if (!f.contains_origin && !f.is_whole_polytope)
            return face_at_infinity_data(parent, f);
    }
    throw std::runtime_error("no far edge");
}

}  // namespace

TEST_CASE("EPolynomial and RowSumTable bookkeeping") {
    EPolynomial e;
    e.add(0, 0, kOne, 2);
    e.add(0, 0, kOne, -2);  // cancels to zero
    e.add(1, 2, kOne, 5);
    CHECK(e.at(0, 0, kOne) == 0);
    CHECK(e.at(1, 2, kOne) == 5);
    CHECK(e.row_sum(1, kOne) == 5);
    CHECK(e.antidiag_sum(3, kOne) == 5);
    CHECK(e.antidiag_sum(2, kOne) == 0);
    CHECK(e.max_pq() >= 2);
    EPolynomial f;
    f.add(1, 2, kOne, -5);
    e.add_table(f);
    CHECK(e.at(1, 2, kOne) == 0);

    RowSumTable r;
    r.add(0, RootOfUnity(1, 2), 3);
    CHECK(r.at(0, RootOfUnity(1, 2)) == 3);
    CHECK(r.at(1, RootOfUnity(1, 2)) == 0);
    CHECK(r.alphas() == std::vector<RootOfUnity>{RootOfUnity(1, 2)});
}

TEST_CASE("Lefschetz twist") {
    EPolynomial e;
    e.add(0, 0, kOne, 1);
    const EPolynomial t1 = lefschetz_twist(e, 1);
    CHECK(t1.at(0, 0, kOne) == 1);
    CHECK(t1.at(1, 1, kOne) == -1);
    const EPolynomial t2 = lefschetz_twist(e, 2);
    CHECK(t2.at(0, 0, kOne) == 1);
    CHECK(t2.at(1, 1, kOne) == -2);
    CHECK(t2.at(2, 2, kOne) == 1);
    // m = 0 is the identity.
    CHECK(lefschetz_twist(e, 0).entries() == e.entries());

    RowSumTable r;
    r.add(0, kOne, 1);
    const RowSumTable rt = lefschetz_twist_rows(r, 1);
    CHECK(rt.at(0, kOne) == 1);
    CHECK(rt.at(1, kOne) == -1);
}

TEST_CASE("high range values") {
    // For N = 2 the only nonzero entries with p + q > 1 sit on the diagonal
    // at the trivial eigenvalue.
    CHECK(e_high_range(2, 1, 1, kOne) == 1);
    CHECK(e_high_range(2, 1, 1, RootOfUnity(1, 2)) == 0);
    CHECK(e_high_range(2, 2, 1, kOne) == 0);
    CHECK(e_high_range(3, 2, 2, kOne) == 1);
    CHECK(e_high_range(3, 2, 1, kOne) == 0);
}

TEST_CASE("unit triangle: affine and closure tables at the trivial twist") {
    const auto tri =
        LatticePolytope::convex_hull({Vec{0, 0}, Vec{1, 0}, Vec{0, 1}});
    const FacePhiCache cache(tri, TwistedCharacter::trivial(tri));

    // The affine hypersurface is a projective line minus three points.
    const EPolynomial aff = e_affine_from_closures(cache, kOne);
    CHECK(aff.at(0, 0, kOne) == -2);
    CHECK(aff.at(1, 1, kOne) == 1);
    for (const auto& [key, c] : aff.entries()) {
        const auto& [p, q, a] = key;
        if (!(p == 0 && q == 0) && !(p == 1 && q == 1)) CHECK(c == 0);
    }

    // Its closure is a projective line.
    const EPolynomial clo = e_closure_eigenone_pseudoprime(cache);
    CHECK(clo.at(0, 0, kOne) == 1);
    CHECK(clo.at(1, 1, kOne) == 1);

    // Row sums from the Ehrhart data agree with the full table.
    const RowSumTable rows = e_row_sums(tri, TwistedCharacter::trivial(tri));
    CHECK(rows.at(0, kOne) == aff.row_sum(0, kOne));
    CHECK(rows.at(1, kOne) == aff.row_sum(1, kOne));

    // Direct corner formulas.
    CHECK(e_00(tri, TwistedCharacter::trivial(tri), kOne) == -2);
    CHECK(e_p0(tri, TwistedCharacter::trivial(tri), kOne, 1) == 0);
}

TEST_CASE("twisted tables on the distance-6 cone polytope") {
    const auto parent =
        LatticePolytope::convex_hull({Vec{0, 0}, Vec{2, 0}, Vec{0, 3}});
    const FaceAtInfinity g = far_edge(parent);
    REQUIRE(g.d == 6);
    const auto tau = TwistedCharacter::from_heights(g);
    const FacePhiCache cache(g.delta, tau);
    const EhrhartTwistData& top = cache.data(whole_face_index(cache));

    for (const RootOfUnity& a : top.alphas()) {
        if (a.is_one()) continue;
        // Closure table lives on the antidiagonal p + q = N - 1 only.
        const EPolynomial clo = e_closure_pseudoprime(cache, a);
        for (const auto& [key, c] : clo.entries()) {
            const auto& [p, q, aa] = key;
            if (c != 0) CHECK(p + q == g.delta.dim() - 1);
        }
        // Affine table antidiagonal sums match the direct formula.
        const EPolynomial aff = e_affine_from_closures(cache, a);
        for (int r = 0; r <= g.delta.dim() - 1; ++r)
            CHECK(aff.antidiag_sum(r, a) == antidiag_sums_nontrivial(cache, a, r));
        // Row sums from the Ehrhart data agree with the full table.
        const RowSumTable rows = e_row_sums(top);
        for (int p = 0; p <= g.delta.dim() - 1; ++p)
            CHECK(rows.at(p, a) == aff.row_sum(p, a));
    }

    // The dimension-1 count of blocks at the far edge: the twisted phi
    // table has exactly one interior point at each of heights 1 and 5.
    CHECK(top.phi_at(RootOfUnity(1, 6), 2) + top.phi_at(RootOfUnity(1, 6), 1) == 1);
    CHECK(top.phi_at(RootOfUnity(5, 6), 2) + top.phi_at(RootOfUnity(5, 6), 1) == 1);
}

TEST_CASE("pseudo-prime hypothesis is enforced") {
    // Cone over the octahedron is 4-dimensional and not pseudo-prime.
    const std::vector<Vec> oct = {Vec{1, 1, 0}, Vec{1, 0, 1}, Vec{0, 1, 1},
                                  Vec{1, 1, 2}, Vec{1, 2, 1}, Vec{2, 1, 1}};
    std::vector<Vec> pts = {Vec{0, 0, 0, 0}};
    for (const Vec& v : oct) pts.push_back(Vec{v[0], v[1], v[2], 1});
    const auto cone = LatticePolytope::convex_hull(pts);
    REQUIRE(!is_pseudo_prime(cone));
    const FacePhiCache cache(cone, TwistedCharacter::trivial(cone));
    CHECK_THROWS_AS(e_closure_eigenone_pseudoprime(cache), NotPseudoPrime);
}

TEST_CASE("FacePhiCache memoizes per-face data") {
    const auto tri =
        LatticePolytope::convex_hull({Vec{0, 0}, Vec{2, 0}, Vec{0, 2}});
    const FacePhiCache cache(tri, TwistedCharacter::trivial(tri));
    const int w = whole_face_index(cache);
    const EhrhartTwistData& a = cache.data(w);
    const EhrhartTwistData& b = cache.data(w);
    CHECK(&a == &b);
    // Vertex faces have the point tables.
    for (int fi : cache.lattice().faces_of_dim(0)) {
        const EhrhartTwistData& d = cache.data(fi);
        CHECK(d.n == 0);
        CHECK(d.psi_at(kOne, 0) == 1);
    }
}
