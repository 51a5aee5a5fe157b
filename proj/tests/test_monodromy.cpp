/*
 * Unit tests for the invariants at infinity: zeta function, characteristic
 * polynomial, Jordan tables via all pipelines, Hodge class, and spectrum.
 */
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "minf/monodromy.hpp"

using namespace minf;

namespace {

const RootOfUnity kOne = RootOfUnity::one();

SupportSpec spec_of(int n, std::vector<Vec> support) {
    SupportSpec s;
    s.n = n;
    s.support = std::move(support);
    return s;
}

const SupportSpec kF1 = spec_of(2, {Vec{1, 0}, Vec{0, 1}});           // x+y
const SupportSpec kF2 = spec_of(2, {Vec{2, 0}, Vec{0, 3}});           // x^2+y^3
const SupportSpec kF3 =
    spec_of(2, {Vec{3, 0}, Vec{0, 3}, Vec{2, 2}});                    // x^3+y^3+x^2y^2

std::map<Int, Int> factors_of(const ZetaFactorization& z) { return z.factors(); }

}  // namespace

TEST_CASE("support validation") {
    CHECK_NOTHROW(kF2.validate());
    CHECK_THROWS(spec_of(1, {Vec{2}}).validate());               // n < 2
    CHECK_THROWS(spec_of(2, {}).validate());                     // empty
    CHECK_THROWS(spec_of(2, {Vec{1}}).validate());               // bad arity
    CHECK_THROWS(spec_of(2, {Vec{-1, 2}}).validate());           // negative
    CHECK_THROWS(spec_of(2, {Vec{0, 0}}).validate());            // zero vector
    CHECK_THROWS(spec_of(2, {Vec{1, 0}, Vec{1, 0}}).validate()); // duplicate
    SupportSpec s = kF2;
    s.coefficients = std::vector<Rat>{1};                        // misaligned
    CHECK_THROWS(s.validate());
    s.coefficients = std::vector<Rat>{1, 0};                     // zero coeff
    CHECK_THROWS(s.validate());
}

TEST_CASE("zeta factorization arithmetic") {
    ZetaFactorization z;
    z.multiply(2, 1);
    z.multiply(3, 1);
    z.multiply(2, -1);
    CHECK(factors_of(z) == std::map<Int, Int>{{3, 1}});
    CHECK(z.degree() == 3);
    z.multiply(3, -1);
    CHECK(z.degree() == 0);
    CHECK(z.expand_polynomial() == std::vector<Int>{1});

    // (1-t)(1-t^6) / ((1-t^2)(1-t^3)) = 1 - t + t^2.
    ZetaFactorization cp;
    cp.multiply(1, 1);
    cp.multiply(6, 1);
    cp.multiply(2, -1);
    cp.multiply(3, -1);
    CHECK(cp.degree() == 2);
    CHECK(cp.expand_polynomial() == std::vector<Int>{1, -1, 1});

    // (1-t^3)/(1-t^2) is not a polynomial.
    ZetaFactorization bad;
    bad.multiply(3, 1);
    bad.multiply(2, -1);
    CHECK_THROWS_AS(bad.expand_polynomial(), std::domain_error);
}

TEST_CASE("newton polyhedron construction and convenience") {
    const auto newton = build_gamma_infinity(kF3);
    CHECK(newton.polytope.vertices().size() == 4);  // 0,(3,0),(0,3),(2,2)
    CHECK(newton.faces_at_infinity.size() == 5);    // 3 vertices + 2 edges
    CHECK(newton.interior_vertex_ids.size() == 1);
    // Both far edges touch the interior of the positive quadrant.
    CHECK(newton.interior_edge_ids.size() == 2);
    CHECK(check_convenient(newton));

    // Missing the x-axis: not convenient.
    const auto bad = build_gamma_infinity(spec_of(2, {Vec{2, 1}, Vec{0, 2}}));
    CHECK(!check_convenient(bad));
    CHECK_THROWS_AS(zeta_at_infinity(bad), NotConvenient);
}

TEST_CASE("non-degeneracy verification on low-dimensional faces") {
    // (x+y)^2 as a support with coefficients 1,2,1: the far edge restriction
    // has a double root, refuting non-degeneracy.
    SupportSpec dg = spec_of(2, {Vec{2, 0}, Vec{1, 1}, Vec{0, 2}});
    dg.coefficients = std::vector<Rat>{1, 2, 1};
    const auto statuses = check_nondegenerate_partial(build_gamma_infinity(dg));
    CHECK(std::count(statuses.begin(), statuses.end(), NondegStatus::refuted) == 1);

    // With generic coefficients 1,1,1 the same support is verified.
    dg.coefficients = std::vector<Rat>{1, 1, 1};
    const auto ok = check_nondegenerate_partial(build_gamma_infinity(dg));
    for (const auto s : ok) CHECK(s == NondegStatus::verified);

    // Without coefficients everything is assumed.
    dg.coefficients.reset();
    const auto assumed = check_nondegenerate_partial(build_gamma_infinity(dg));
    for (const auto s : assumed) CHECK(s == NondegStatus::assumed);
}

TEST_CASE("fixture x+y") {
    const auto newton = build_gamma_infinity(kF1);
    const auto z = zeta_at_infinity(newton);
    CHECK(factors_of(z) == std::map<Int, Int>{{1, 1}});
    const auto cp = char_poly_from_zeta(z, 2);
    CHECK(cp.degree() == 0);
    CHECK(cp.expand_polynomial() == std::vector<Int>{1});
    CHECK(assemble_jordan_table(newton).eigenvalues.empty());
    const auto sp = spectrum_via_hodge(newton);
    CHECK(sp.terms.empty());
    CHECK(sp == spectrum_via_cones(newton));
    const auto h = hodge_class_at_infinity(newton);
    CHECK(h.full);
    CHECK(h.table.at(1, 1, kOne) == 1);
    CHECK(h.table.at(0, 0, kOne) == 0);
}

TEST_CASE("fixture x^2+y^3") {
    const auto newton = build_gamma_infinity(kF2);
    const auto z = zeta_at_infinity(newton);
    CHECK(factors_of(z) == std::map<Int, Int>{{2, 1}, {3, 1}, {6, -1}});
    const auto cp = char_poly_from_zeta(z, 2);
    CHECK(factors_of(cp) == std::map<Int, Int>{{1, 1}, {2, -1}, {3, -1}, {6, 1}});
    CHECK(cp.degree() == 2);
    CHECK(cp.expand_polynomial() == std::vector<Int>{1, -1, 1});

    CHECK(eigenvalue_multiplicity(cp, RootOfUnity(1, 6)) == 1);
    CHECK(eigenvalue_multiplicity(cp, RootOfUnity(5, 6)) == 1);
    CHECK(eigenvalue_multiplicity(cp, kOne) == 0);
    CHECK(eigenvalue_multiplicity(cp, RootOfUnity(1, 2)) == 0);

    const auto jt = assemble_jordan_table(newton);
    REQUIRE(jt.eigenvalues.size() == 2);
    for (const auto& alpha : {RootOfUnity(1, 6), RootOfUnity(5, 6)}) {
        const auto& e = jt.eigenvalues.at(alpha);
        CHECK(e.multiplicity == 1);
        CHECK(e.complete);
        CHECK(e.blocks == std::map<int, Int>{{1, 1}});
    }

    const auto sp = spectrum_via_hodge(newton);
    CHECK(sp.terms == std::map<Rat, Int>{{Rat(5, 6), 1}, {Rat(7, 6), 1}});
    CHECK(sp == spectrum_via_cones(newton));
    CHECK(sp.total_mass() == cp.degree());
}

TEST_CASE("fixture x^3+y^3+x^2y^2") {
    const auto newton = build_gamma_infinity(kF3);
    const auto z = zeta_at_infinity(newton);
    CHECK(factors_of(z) == std::map<Int, Int>{{3, 2}, {6, -2}});
    const auto cp = char_poly_from_zeta(z, 2);
    CHECK(cp.degree() == 7);

    const auto jt = assemble_jordan_table(newton);
    REQUIRE(jt.eigenvalues.size() == 4);
    const auto& e0 = jt.eigenvalues.at(kOne);
    CHECK(e0.multiplicity == 1);
    CHECK(e0.blocks == std::map<int, Int>{{1, 1}});
    const auto& eh = jt.eigenvalues.at(RootOfUnity(1, 2));
    CHECK(eh.multiplicity == 2);
    CHECK(eh.blocks == std::map<int, Int>{{2, 1}});
    for (const auto& alpha : {RootOfUnity(1, 6), RootOfUnity(5, 6)}) {
        const auto& e = jt.eigenvalues.at(alpha);
        CHECK(e.multiplicity == 2);
        CHECK(e.blocks == std::map<int, Int>{{1, 2}});
    }
    for (const auto& [alpha, entry] : jt.eigenvalues) CHECK(entry.complete);

    const auto sp = spectrum_via_hodge(newton);
    CHECK(sp.terms == std::map<Rat, Int>{{Rat(1, 2), 1},
                                         {Rat(5, 6), 2},
                                         {Rat(1), 1},
                                         {Rat(7, 6), 2},
                                         {Rat(3, 2), 1}});
    CHECK(sp == spectrum_via_cones(newton));
    CHECK(sp.total_mass() == 7);
}

TEST_CASE("closed-form Jordan operations") {
    const auto n3 = build_gamma_infinity(kF3);
    // One interior vertex (2,2) with d = 2.
    CHECK(jordan_top_nontrivial(n3, RootOfUnity(1, 2)) == 1);
    CHECK(jordan_top_nontrivial(n3, RootOfUnity(1, 3)) == 0);
    CHECK(jordan_subtop_nontrivial(n3, RootOfUnity(1, 2)) == 0);
    // (2,2) is the only strictly positive lattice point on the low skeleton.
    CHECK(jordan_top_eigenone(n3) == 1);

    const auto n2 = build_gamma_infinity(kF2);
    CHECK(jordan_top_eigenone(n2) == 0);
    CHECK(jordan_top_nontrivial(n2, RootOfUnity(1, 6)) == 0);

    // x^4+y^4+z^4: six doubled interior points on interior 2-faces.
    const auto n444 =
        build_gamma_infinity(spec_of(3, {Vec{4, 0, 0}, Vec{0, 4, 0}, Vec{0, 0, 4}}));
    CHECK(jordan_subtop_eigenone(n444) == 6);
    CHECK(jordan_top_eigenone(n444) == 0);
}

TEST_CASE("Jordan pipelines agree") {
    for (const SupportSpec& spec :
         {kF2, kF3, spec_of(3, {Vec{4, 0, 0}, Vec{0, 4, 0}, Vec{0, 0, 4}})}) {
        const auto newton = build_gamma_infinity(spec);
        const auto caches = build_face_caches(newton);
        const auto h = hodge_class_at_infinity(newton, caches);
        REQUIRE(h.full);
        const auto cp = char_poly_from_zeta(zeta_at_infinity(newton), spec.n);
        bool all_prime = true;
        for (const auto& g : newton.faces_at_infinity)
            all_prime = all_prime && is_prime(g.delta);
        for (const auto& [d, e] : cp.factors()) {
            if (e <= 0) continue;
            for (const RootOfUnity& alpha : roots_of_unity_dividing(d)) {
                for (int k = 1; k <= spec.n; ++k) {
                    const auto general = jordan_counts_general(newton, h, alpha, k);
                    REQUIRE(general.has_value());
                    if (!alpha.is_one() && all_prime)
                        CHECK(*general == jordan_closed_prime(newton, caches, alpha, k));
                    if (k == spec.n && !alpha.is_one())
                        CHECK(*general == jordan_top_nontrivial(newton, alpha));
                }
            }
        }
    }
}

TEST_CASE("closed prime formula rejects the trivial eigenvalue") {
    const auto newton = build_gamma_infinity(kF2);
    CHECK_THROWS(jordan_closed_prime(newton, kOne, 1));
}

TEST_CASE("hodge class row sums match the full table") {
    for (const SupportSpec& spec : {kF2, kF3}) {
        const auto newton = build_gamma_infinity(spec);
        const auto h = hodge_class_at_infinity(newton);
        REQUIRE(h.full);
        for (const auto& [key, c] : h.rows.entries()) {
            const auto& [p, alpha] = key;
            CHECK(c == h.table.row_sum(p, alpha));
        }
    }
}

TEST_CASE("shared face caches give identical results") {
    const auto newton = build_gamma_infinity(kF3);
    const auto caches = build_face_caches(newton);
    REQUIRE(caches.size() == newton.faces_at_infinity.size());
    const auto h1 = hodge_class_at_infinity(newton);
    const auto h2 = hodge_class_at_infinity(newton, caches);
    CHECK(h1.table.entries() == h2.table.entries());
    CHECK(h1.rows.entries() == h2.rows.entries());
    CHECK(h1.full == h2.full);
    const auto jt1 = assemble_jordan_table(newton);
    const auto jt2 = assemble_jordan_table(newton, caches);
    REQUIRE(jt1.eigenvalues.size() == jt2.eigenvalues.size());
    for (const auto& [alpha, e] : jt1.eigenvalues) {
        const auto& f = jt2.eigenvalues.at(alpha);
        CHECK(e.multiplicity == f.multiplicity);
        CHECK(e.blocks == f.blocks);
        CHECK(e.complete == f.complete);
    }
    CHECK(spectrum_via_hodge(newton) == spectrum_via_hodge(newton, h2));
}
