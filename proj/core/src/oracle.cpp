#include "minf/oracle.hpp"

#include <random>
#include <set>
#include <sstream>

namespace minf {

namespace {

std::string vec_to_string(const Vec& v) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << ",";
        os << v[i];
    }
    os << ")";
    return os.str();
}

std::string spec_to_string(const SupportSpec& spec) {
    std::ostringstream os;
    os << "n=" << spec.n << " support={";
    for (std::size_t i = 0; i < spec.support.size(); ++i) {
        if (i) os << ",";
        os << vec_to_string(spec.support[i]);
    }
    os << "}";
    return os.str();
}

// Closed lattice points of kP in ambient coordinates, by triangulating P
// and enumerating each simplex with exact barycentric (Cramer) tests.
std::set<Vec> points_by_simplices(const LatticePolytope& p, const Int& k) {
    std::set<Vec> pts;
    if (p.dim() == 0) {
        pts.insert(scale(p.base_vertex(), k));
        return pts;
    }
    if (k == 0) {
        pts.insert(Vec(p.ambient_dim(), 0));
        return pts;
    }
    const int d = p.dim();
    const Vec kbase = scale(p.base_vertex(), k);
    for (const std::vector<int>& simplex : triangulate(p)) {
        std::vector<Vec> w;  // scaled frame coordinates of the simplex
        for (int idx : simplex) w.push_back(scale(p.vertex_coords()[idx], k));
        Mat m(d, Vec(d));  // columns are w_i - w_0
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) m[j][i] = w[i + 1][j] - w[0][j];
        const Int dd = det(m);
        if (dd == 0) throw std::logic_error("oracle: degenerate simplex");
        const int sgn = (dd > 0) ? 1 : -1;
        Vec lo(d), hi(d);
        for (int j = 0; j < d; ++j) {
            Int mn = w[0][j], mx = w[0][j];
            for (const Vec& y : w) {
                mn = std::min(mn, y[j]);
                mx = std::max(mx, y[j]);
            }
            lo[j] = mn;
            hi[j] = mx;
        }
        Vec y = lo;
        while (true) {
            // Barycentric coordinates via Cramer: replace column i of m by
            // (y - w_0); the point is in the simplex iff all numerators have
            // the sign of det(m) and they sum to at most det(m).
            Vec rhs(d);
            for (int j = 0; j < d; ++j) rhs[j] = y[j] - w[0][j];
            bool inside = true;
            Int num_sum = 0;
            for (int i = 0; i < d && inside; ++i) {
                Mat mi = m;
                for (int j = 0; j < d; ++j) mi[j][i] = rhs[j];
                const Int num = det(mi);
                if (Int(sgn) * num < 0) inside = false;
                num_sum += num;
            }
            if (inside && Int(sgn) * num_sum > Int(sgn) * dd) inside = false;
            if (inside) pts.insert(add(kbase, p.frame().from_coords(y)));
            int j = d - 1;
            while (j >= 0 && y[j] == hi[j]) {
                y[j] = lo[j];
                --j;
            }
            if (j < 0) break;
            ++y[j];
        }
    }
    return pts;
}

std::set<Vec> points_by_triangulation(const LatticePolytope& p, const Int& k,
                                      bool interior_only) {
    if (!interior_only || p.dim() == 0) return points_by_simplices(p, k);
    if (k == 0) return {};
    std::set<Vec> pts = points_by_simplices(p, k);
    const FaceLattice& fl = p.face_lattice();
    for (int fi : fl.faces_of_dim(p.dim() - 1)) {
        const LatticePolytope facet = p.face_polytope(fl.faces[fi]);
        for (const Vec& v : points_by_simplices(facet, k)) pts.erase(v);
    }
    return pts;
}

}  // namespace

Int count_by_triangulation(const LatticePolytope& p, const Int& k,
                           bool interior_only) {
    if (k < 0) throw std::invalid_argument("count_by_triangulation: negative dilation");
    if (k > 4) throw ResourceCapExceeded("count_by_triangulation: k > 4");
    if (p.dim() > 4) throw ResourceCapExceeded("count_by_triangulation: dim > 4");
    return static_cast<Int>(points_by_triangulation(p, k, interior_only).size());
}

SupportSpec random_convenient_support(int n, int max_coord, std::uint64_t seed) {
    if (n < 2 || n > 4)
        throw std::invalid_argument("random_convenient_support: n must be 2, 3 or 4");
    if (max_coord < 1)
        throw std::invalid_argument("random_convenient_support: max_coord must be >= 1");
    std::mt19937_64 rng(seed);
    const auto uni = [&rng](int lo, int hi) {
        return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
    };
    SupportSpec spec;
    spec.n = n;
    std::set<Vec> seen;
    for (int i = 0; i < n; ++i) {
        Vec v(n, 0);
        v[i] = uni(1, max_coord);
        seen.insert(v);
        spec.support.push_back(std::move(v));
    }
    const int extra = uni(0, n + 1);
    for (int t = 0; t < extra; ++t) {
        Vec v(n);
        for (int i = 0; i < n; ++i) v[i] = uni(0, max_coord);
        if (is_zero(v) || !seen.insert(v).second) continue;
        spec.support.push_back(std::move(v));
    }
    spec.validate();
    return spec;
}

std::vector<CheckReport> cross_check_suite(const SupportSpec& spec) {
    std::vector<CheckReport> reports;
    const std::string inst = spec_to_string(spec);
    const auto report = [&](const std::string& check, bool pass,
                            const std::string& left, const std::string& right) {
        reports.push_back({check, inst, pass, left, right});
    };

    const NewtonAtInfinity newton = build_gamma_infinity(spec);
    const int n = spec.n;
    report("convenient", check_convenient(newton), "", "");
    if (!check_convenient(newton)) return reports;
    const FaceCacheList caches = build_face_caches(newton);
    const auto top_data = [](const FacePhiCache& cache) -> const EhrhartTwistData& {
        const FaceLattice& lat = cache.lattice();
        for (int i = 0; i < static_cast<int>(lat.faces.size()); ++i)
            if (lat.faces[i].is_whole_polytope) return cache.data(i);
        throw std::logic_error("face lattice without a top face");
    };

    // Per-face checks: reciprocity, duality, and count agreement.
    for (std::size_t gi = 0; gi < newton.faces_at_infinity.size(); ++gi) {
        const FaceAtInfinity& g = newton.faces_at_infinity[gi];
        const TwistedCharacter chi = TwistedCharacter::from_heights(g);
        const std::string where = " face " + vec_to_string(g.face.supporting_functional);
        for (Int k = 1; k <= 2; ++k) {
            const bool ok = ehrhart_reciprocity_check(g.delta, chi, k);
            report("ehrhart_reciprocity(k=" + k.str() + ")" + where, ok, "", "");
        }
        const EhrhartTwistData& data = top_data(*caches[gi]);
        bool dual = true;
        std::string bad;
        const int nn = data.n;
        for (const RootOfUnity& a : data.alphas()) {
            for (int i = 0; i <= nn + 1; ++i) {
                const Int l = data.phi_at(a, i);
                const Int r = data.psi_at(a.inverse(), Int(nn + 1 - i));
                if (l != r) {
                    dual = false;
                    bad = "alpha=" + a.to_string() + " i=" + std::to_string(i) + " " +
                          l.str() + "!=" + r.str();
                }
            }
        }
        report("phi_psi_duality" + where, dual, bad, "");
        if (g.delta.dim() <= 4) {
            for (Int k = 0; k <= 2; ++k) {
                for (bool interior : {false, true}) {
                    const Int box = static_cast<Int>(
                        g.delta.lattice_points(k, interior).size());
                    const Int tri = count_by_triangulation(g.delta, k, interior);
                    report("count_agreement(k=" + k.str() +
                               (interior ? ",interior)" : ",closed)") + where,
                           box == tri, box.str(), tri.str());
                }
            }
        }
    }

    // Zeta / characteristic polynomial consistency.
    const ZetaFactorization zeta = zeta_at_infinity(newton);
    const ZetaFactorization cp = char_poly_from_zeta(zeta, n);
    bool cp_poly = true;
    std::string cp_msg;
    try {
        (void)cp.expand_polynomial();
    } catch (const std::exception& ex) {
        cp_poly = false;
        cp_msg = ex.what();
    }
    report("charpoly_is_polynomial", cp_poly, cp_msg, "");
    {
        std::set<RootOfUnity> all;
        for (const auto& [d, e] : cp.factors())
            for (const RootOfUnity& a : roots_of_unity_dividing(d)) all.insert(a);
        Int mult_sum = 0;
        for (const RootOfUnity& a : all) mult_sum += eigenvalue_multiplicity(cp, a);
        report("multiplicities_sum_to_degree", mult_sum == cp.degree(),
               mult_sum.str(), cp.degree().str());
    }

    // Spectrum: two routes, symmetry, support, and mass.
    const HodgeClass h = hodge_class_at_infinity(newton, caches);
    const SpectrumPoly sh = spectrum_via_hodge(newton, h);
    const SpectrumPoly sc = spectrum_via_cones(newton);
    report("spectrum_double_path", sh == sc,
           std::to_string(sh.terms.size()) + " terms",
           std::to_string(sc.terms.size()) + " terms");
    {
        bool sym = true, supp = true;
        for (const auto& [e, c] : sh.terms) {
            auto it = sh.terms.find(Rat(n) - e);
            if (it == sh.terms.end() || it->second != c) sym = false;
            if (e <= 0 || e >= n) supp = false;
        }
        report("spectrum_symmetry", sym, "", "");
        report("spectrum_support_in_(0,n)", supp, "", "");
        report("spectrum_mass_equals_degree", sh.total_mass() == cp.degree(),
               sh.total_mass().str(), cp.degree().str());
    }

    // Hodge class: weight symmetry and row-sum consistency.
    if (h.full) {
        bool sym = true, unit = true, rows_ok = true;
        for (const auto& [key, val] : h.table.entries()) {
            const auto& [p, q, a] = key;
            if (a.is_one()) {
                if (p == n - 1 && q == n - 1) continue;
                if (p > n - 2 || q > n - 2 ||
                    val != h.table.at(n - 2 - q, n - 2 - p, a))
                    sym = false;
            } else {
                if (p > n - 1 || q > n - 1 ||
                    val != h.table.at(n - 1 - q, n - 1 - p, a))
                    sym = false;
            }
        }
        unit = (h.table.at(n - 1, n - 1, RootOfUnity::one()) == 1);
        for (const auto& [key, val] : h.rows.entries())
            if (h.table.row_sum(key.first, key.second) != val) rows_ok = false;
        report("hodge_weight_symmetry", sym, "", "");
        report("hodge_unit_top_entry", unit,
               h.table.at(n - 1, n - 1, RootOfUnity::one()).str(), "1");
        report("hodge_row_sum_consistency", rows_ok, "", "");
    }

    // Jordan assembly: pipelines agree, bounds hold, sizes add up.
    try {
        const JordanTable jt = assemble_jordan_table(newton, caches);
        bool ok = true;
        std::string bad;
        for (const auto& [alpha, entry] : jt.eigenvalues) {
            const int max_size = alpha.is_one() ? n - 1 : n;
            Int weighted = 0;
            for (const auto& [size, cnt] : entry.blocks) {
                if (size < 1 || size > max_size || cnt < 0) {
                    ok = false;
                    bad = "alpha=" + alpha.to_string();
                }
                weighted += Int(size) * cnt;
            }
            if (entry.complete && weighted != entry.multiplicity) {
                ok = false;
                bad = "alpha=" + alpha.to_string();
            }
            if (alpha.is_one() && n == 3) {
                // Size n-2 block count for eigenvalue 1 must be even.
                Int c = 0;
                if (auto it = entry.blocks.find(n - 2); it != entry.blocks.end())
                    c = it->second;
                if (c % 2 != 0) {
                    ok = false;
                    bad = "odd size-(n-2) count for eigenvalue 1";
                }
            }
        }
        report("jordan_table_consistency", ok, bad, "");
    } catch (const std::exception& ex) {
        report("jordan_table_consistency", false, ex.what(), "");
    }

    return reports;
}

}  // namespace minf
