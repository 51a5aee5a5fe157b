#include "minf/monodromy.hpp"

#include <algorithm>
#include <set>

namespace minf {

namespace {

void require_convenient(const NewtonAtInfinity& newton) {
    if (!check_convenient(newton))
        throw NotConvenient("the support does not meet every coordinate axis");
}

int sign_pow(int k) { return (k % 2 == 0) ? 1 : -1; }

}  // namespace

void SupportSpec::validate() const {
    if (n < 2) throw std::invalid_argument("SupportSpec: dimension must be >= 2");
    if (support.empty()) throw std::invalid_argument("SupportSpec: empty support");
    std::set<Vec> seen;
    for (const Vec& v : support) {
        if (static_cast<int>(v.size()) != n)
            throw std::invalid_argument("SupportSpec: exponent of wrong dimension");
        bool all_zero = true;
        for (const Int& c : v) {
            if (c < 0) throw std::invalid_argument("SupportSpec: negative exponent");
            if (c != 0) all_zero = false;
        }
        if (all_zero)
            throw std::invalid_argument("SupportSpec: the zero exponent is not allowed");
        if (!seen.insert(v).second)
            throw std::invalid_argument("SupportSpec: duplicate exponent");
    }
    if (coefficients) {
        if (coefficients->size() != support.size())
            throw std::invalid_argument(
                "SupportSpec: coefficient list does not match the support");
        for (const Rat& a : *coefficients)
            if (a == 0)
                throw std::invalid_argument("SupportSpec: zero coefficient");
    }
}

void ZetaFactorization::multiply(const Int& d, const Int& e) {
    if (d <= 0) throw std::invalid_argument("ZetaFactorization: nonpositive degree");
    if (e == 0) return;
    auto it = factors_.find(d);
    if (it == factors_.end()) {
        factors_.emplace(d, e);
    } else {
        it->second += e;
        if (it->second == 0) factors_.erase(it);
    }
}

Int ZetaFactorization::degree() const {
    Int deg = 0;
    for (const auto& [d, e] : factors_) deg += d * e;
    return deg;
}

std::vector<Int> ZetaFactorization::expand_polynomial() const {
    const Int deg = degree();
    if (deg < 0)
        throw std::domain_error("ZetaFactorization: negative degree, not a polynomial");
    std::vector<Int> poly{1};
    // Multiply in all positive powers first so every division below is
    // performed against an honest polynomial numerator.
    for (const auto& [d_big, e] : factors_) {
        if (e <= 0) continue;
        const std::size_t d = static_cast<std::size_t>(d_big);
        for (Int i = 0; i < e; ++i) {
            std::vector<Int> next(poly.size() + d, 0);
            for (std::size_t j = 0; j < poly.size(); ++j) {
                next[j] += poly[j];
                next[j + d] -= poly[j];
            }
            poly = std::move(next);
        }
    }
    for (const auto& [d_big, e] : factors_) {
        if (e >= 0) continue;
        const std::size_t d = static_cast<std::size_t>(d_big);
        for (Int i = 0; i > e; --i) {
            // poly(t) = q(t) * (1 - t^d)  =>  q_j = p_j + q_{j-d}.
            if (poly.size() < d + 1)
                throw std::domain_error("ZetaFactorization: inexact division");
            std::vector<Int> q(poly.size() - d, 0);
            for (std::size_t j = 0; j < poly.size(); ++j) {
                Int val = poly[j];
                if (j >= d && j - d < q.size()) val += q[j - d];
                if (j < q.size()) {
                    q[j] = val;
                } else if (val != 0) {
                    throw std::domain_error("ZetaFactorization: inexact division");
                }
            }
            poly = std::move(q);
        }
    }
    if (static_cast<Int>(poly.size()) != deg + 1 || poly.back() == 0)
        throw std::logic_error("ZetaFactorization: expansion degree mismatch");
    return poly;
}

NewtonAtInfinity build_gamma_infinity(const SupportSpec& spec) {
    spec.validate();
    NewtonAtInfinity newton;
    newton.spec = spec;
    std::vector<Vec> pts = spec.support;
    pts.push_back(Vec(spec.n, 0));
    newton.polytope = LatticePolytope::convex_hull(pts);
    const FaceLattice& fl = newton.polytope.face_lattice();
    for (const Face& f : fl.faces) {
        if (f.dim < 0 || f.is_whole_polytope || f.contains_origin) continue;
        FaceAtInfinity fai = face_at_infinity_data(newton.polytope, f);
        const int id = static_cast<int>(newton.faces_at_infinity.size());
        if (fai.interior && fai.gamma_dim == 0) newton.interior_vertex_ids.push_back(id);
        if (fai.interior && fai.gamma_dim == 1) newton.interior_edge_ids.push_back(id);
        newton.faces_at_infinity.push_back(std::move(fai));
    }
    return newton;
}

bool check_convenient(const NewtonAtInfinity& newton) {
    const int n = newton.spec.n;
    for (int i = 0; i < n; ++i) {
        bool found = false;
        for (const Vec& v : newton.spec.support) {
            if (v[i] <= 0) continue;
            bool axis = true;
            for (int j = 0; j < n && axis; ++j)
                if (j != i && v[j] != 0) axis = false;
            if (axis) { found = true; break; }
        }
        if (!found) return false;
    }
    return true;
}

std::vector<NondegStatus> check_nondegenerate_partial(const NewtonAtInfinity& newton) {
    std::vector<NondegStatus> out(newton.faces_at_infinity.size(), NondegStatus::assumed);
    if (!newton.spec.coefficients) return out;

    std::map<Vec, Rat> coeff;
    for (std::size_t i = 0; i < newton.spec.support.size(); ++i)
        coeff[newton.spec.support[i]] = (*newton.spec.coefficients)[i];

    for (std::size_t i = 0; i < newton.faces_at_infinity.size(); ++i) {
        const FaceAtInfinity& g = newton.faces_at_infinity[i];
        if (g.gamma_dim == 0) {
            // A single monomial has no critical points in the torus.
            out[i] = NondegStatus::verified;
        } else if (g.gamma_dim == 1) {
            // Restrict to the edge: the face polynomial is a univariate
            // polynomial in the primitive edge parameter; non-degeneracy
            // holds iff it has no repeated root (all roots are nonzero
            // because the endpoints carry nonzero coefficients).
            const Face& f = g.face;
            const Vec& a = newton.polytope.vertices()[f.vertex_indices.front()];
            const Vec& b = newton.polytope.vertices()[f.vertex_indices.back()];
            Vec dir = sub(b, a);
            Int gl = 0;
            for (const Int& c : dir) gl = gcd_int(gl, c);
            const Int len = gl;
            Vec p(dir.size());
            for (std::size_t j = 0; j < dir.size(); ++j) p[j] = dir[j] / len;
            std::vector<Rat> upoly;
            for (Int j = 0; j <= len; ++j) {
                const Vec pt = add(a, scale(p, j));
                auto it = coeff.find(pt);
                upoly.push_back(it == coeff.end() ? Rat(0) : it->second);
            }
            // Squarefree test over Q via gcd(P, P').
            auto trim = [](std::vector<Rat>& q) {
                while (!q.empty() && q.back() == 0) q.pop_back();
            };
            std::vector<Rat> P = upoly;
            std::vector<Rat> D;
            for (std::size_t j = 1; j < upoly.size(); ++j)
                D.push_back(upoly[j] * Rat(static_cast<long>(j)));
            trim(P);
            trim(D);
            while (!D.empty()) {
                // P mod D
                std::vector<Rat> r = P;
                while (r.size() >= D.size()) {
                    const Rat q = r.back() / D.back();
                    const std::size_t off = r.size() - D.size();
                    for (std::size_t j = 0; j < D.size(); ++j) r[off + j] -= q * D[j];
                    trim(r);
                    if (r.size() >= D.size() && r.back() == 0) trim(r);
                    if (r.empty()) break;
                }
                P = std::move(D);
                D = std::move(r);
            }
            // gcd(P, P') constant <=> squarefree <=> non-degenerate edge.
            out[i] = (P.size() <= 1) ? NondegStatus::verified : NondegStatus::refuted;
        }
    }
    return out;
}

ZetaFactorization zeta_at_infinity(const NewtonAtInfinity& newton) {
    require_convenient(newton);
    const int n = newton.spec.n;
    ZetaFactorization zeta;
    for (int mask = 1; mask < (1 << n); ++mask) {
        std::vector<int> s_idx;
        for (int i = 0; i < n; ++i)
            if (mask & (1 << i)) s_idx.push_back(i);
        const int s = static_cast<int>(s_idx.size());
        std::vector<Vec> pts;
        pts.push_back(Vec(s, 0));
        for (const Vec& v : newton.spec.support) {
            bool inside = true;
            for (int i = 0; i < n && inside; ++i)
                if (!(mask & (1 << i)) && v[i] != 0) inside = false;
            if (!inside) continue;
            Vec proj(s);
            for (int j = 0; j < s; ++j) proj[j] = v[s_idx[j]];
            pts.push_back(std::move(proj));
        }
        const LatticePolytope gs = LatticePolytope::convex_hull(pts);
        if (gs.dim() != s)
            throw NotConvenient("restricted Newton polytope is not full-dimensional");
        const int sign = sign_pow(s - 1);
        for (const Face& f : gs.face_lattice().faces) {
            if (f.dim != s - 1 || f.is_whole_polytope || f.contains_origin) continue;
            const Int d = lattice_distance(gs, f);
            const Int vol = normalized_volume(gs, f);
            zeta.multiply(d, sign * vol);
        }
    }
    return zeta;
}

ZetaFactorization char_poly_from_zeta(const ZetaFactorization& zeta, int n) {
    const int sign = sign_pow(n - 1);
    ZetaFactorization cp;
    for (const auto& [d, e] : zeta.factors())
        if (d != 1) cp.multiply(d, sign * e);
    Int e1 = 0;
    if (auto it = zeta.factors().find(1); it != zeta.factors().end()) e1 = it->second;
    cp.multiply(1, sign * (e1 - 1));
    // Must expand exactly; surfaces any inconsistency early.
    (void)cp.expand_polynomial();
    return cp;
}

Int eigenvalue_multiplicity(const ZetaFactorization& cp, const RootOfUnity& alpha) {
    Int m = 0;
    for (const auto& [d, e] : cp.factors())
        if (alpha.power_is_one(d)) m += e;
    if (m < 0) throw std::logic_error("eigenvalue_multiplicity: negative multiplicity");
    return m;
}

Int jordan_top_nontrivial(const NewtonAtInfinity& newton, const RootOfUnity& alpha) {
    require_convenient(newton);
    if (alpha.is_one())
        throw std::invalid_argument("jordan_top_nontrivial: eigenvalue must differ from 1");
    Int count = 0;
    for (int id : newton.interior_vertex_ids)
        if (alpha.power_is_one(newton.faces_at_infinity[id].d)) ++count;
    return count;
}

Int jordan_subtop_nontrivial(const NewtonAtInfinity& newton, const RootOfUnity& alpha) {
    require_convenient(newton);
    if (alpha.is_one())
        throw std::invalid_argument("jordan_subtop_nontrivial: eigenvalue must differ from 1");
    Int count = 0;
    for (int id : newton.interior_edge_ids) {
        const FaceAtInfinity& g = newton.faces_at_infinity[id];
        if (!alpha.power_is_one(g.d)) continue;
        const Int k = alpha.num() * (g.d / alpha.den());
        for (const Vec& v : g.delta.lattice_points(1, /*interior_only=*/true)) {
            const Int h = height(v, g);
            if (h == k) ++count;
            if (h == g.d - k) ++count;
        }
    }
    return count;
}

Int jordan_top_eigenone(const NewtonAtInfinity& newton) {
    require_convenient(newton);
    std::set<Vec> pts;
    for (const FaceAtInfinity& g : newton.faces_at_infinity) {
        if (g.gamma_dim > 1) continue;
        const LatticePolytope gamma =
            newton.polytope.face_polytope(g.face);
        for (const Vec& v : gamma.lattice_points(1, /*interior_only=*/false)) {
            bool positive = true;
            for (const Int& c : v)
                if (c <= 0) { positive = false; break; }
            if (positive) pts.insert(v);
        }
    }
    return static_cast<Int>(pts.size());
}

Int jordan_subtop_eigenone(const NewtonAtInfinity& newton) {
    require_convenient(newton);
    if (newton.spec.n < 3)
        throw std::invalid_argument("jordan_subtop_eigenone: requires dimension >= 3");
    Int total = 0;
    for (const FaceAtInfinity& g : newton.faces_at_infinity) {
        if (g.gamma_dim != 2 || !g.interior) continue;
        const LatticePolytope gamma = newton.polytope.face_polytope(g.face);
        total += 2 * static_cast<Int>(
                     gamma.lattice_points(1, /*interior_only=*/true).size());
    }
    return total;
}

FaceCacheList build_face_caches(const NewtonAtInfinity& newton) {
    FaceCacheList caches;
    caches.reserve(newton.faces_at_infinity.size());
    for (const FaceAtInfinity& g : newton.faces_at_infinity)
        caches.push_back(std::make_shared<const FacePhiCache>(
            g.delta, TwistedCharacter::from_heights(g)));
    return caches;
}

namespace {

int whole_face_index(const FacePhiCache& cache) {
    const FaceLattice& lat = cache.lattice();
    for (int i = 0; i < static_cast<int>(lat.faces.size()); ++i)
        if (lat.faces[i].is_whole_polytope) return i;
    throw std::logic_error("face lattice without a top face");
}

}  // namespace

HodgeClass hodge_class_at_infinity(const NewtonAtInfinity& newton) {
    return hodge_class_at_infinity(newton, build_face_caches(newton));
}

HodgeClass hodge_class_at_infinity(const NewtonAtInfinity& newton,
                                   const FaceCacheList& caches) {
    require_convenient(newton);
    HodgeClass h;
    h.full = true;
    for (const FaceAtInfinity& g : newton.faces_at_infinity)
        if (!is_pseudo_prime(g.delta)) h.full = false;
    for (std::size_t i = 0; i < newton.faces_at_infinity.size(); ++i) {
        const FaceAtInfinity& g = newton.faces_at_infinity[i];
        const FacePhiCache& cache = *caches[i];
        h.rows.add_table(lefschetz_twist_rows(
            e_row_sums(cache.data(whole_face_index(cache))), g.m));
        if (h.full) {
            // Only characters that actually occur in some face's φ/ψ data
            // can contribute a nonzero table (plus α = 1 with its binomial
            // terms).
            std::set<RootOfUnity> alphas{RootOfUnity::one()};
            const int nfaces = static_cast<int>(cache.lattice().faces.size());
            for (int fi = 0; fi < nfaces; ++fi) {
                if (cache.lattice().faces[fi].dim < 0) continue;
                for (const RootOfUnity& a : cache.data(fi).alphas())
                    alphas.insert(a);
            }
            for (const RootOfUnity& alpha : alphas) {
                const EPolynomial tbl = e_affine_from_closures(cache, alpha);
                h.table.add_table(lefschetz_twist(tbl, g.m));
            }
        }
    }
    return h;
}

std::optional<Int> jordan_counts_general(const NewtonAtInfinity& newton,
                                         const HodgeClass& h,
                                         const RootOfUnity& alpha, int k) {
    if (k < 1) throw std::invalid_argument("jordan_counts_general: k must be >= 1");
    if (!h.full) return std::nullopt;
    const int n = newton.spec.n;
    int r1, r2;
    if (alpha.is_one()) {
        r1 = n - 2 - k;
        r2 = n - 1 - k;
    } else {
        r1 = n - 2 + k;
        r2 = n - 1 + k;
    }
    const Int sum = h.table.antidiag_sum(r1, alpha) + h.table.antidiag_sum(r2, alpha);
    return Int(sign_pow(n - 1)) * sum;
}

Int jordan_closed_prime(const NewtonAtInfinity& newton, const RootOfUnity& alpha,
                        int k) {
    return jordan_closed_prime(newton, build_face_caches(newton), alpha, k);
}

Int jordan_closed_prime(const NewtonAtInfinity& newton, const FaceCacheList& caches,
                        const RootOfUnity& alpha, int k) {
    require_convenient(newton);
    if (alpha.is_one())
        throw std::invalid_argument("jordan_closed_prime: eigenvalue must differ from 1");
    if (k < 1) throw std::invalid_argument("jordan_closed_prime: k must be >= 1");
    for (const FaceAtInfinity& g : newton.faces_at_infinity)
        if (!is_prime(newton.polytope.face_polytope(g.face)))
            throw NonPrimeFace("a face at infinity is not prime");
    const int n = newton.spec.n;
    Int total = 0;
    for (std::size_t i = 0; i < newton.faces_at_infinity.size(); ++i) {
        const FaceAtInfinity& g = newton.faces_at_infinity[i];
        if (!alpha.power_is_one(g.d)) continue;
        const FacePhiCache& cache = *caches[i];
        std::map<int, Int> e_at_r;  // signed antidiagonal sums, memoized
        auto e_r = [&](int r) -> const Int& {
            auto it = e_at_r.find(r);
            if (it == e_at_r.end())
                it = e_at_r.emplace(r, antidiag_sums_nontrivial(cache, alpha, r)).first;
            return it->second;
        };
        for (int kk : {k, k + 1}) {
            for (int r = 0; r <= g.gamma_dim; ++r) {
                if ((n - 2 + kk - r) % 2 != 0) continue;
                const int dkr = (n - 2 + kk - r) / 2;
                if (dkr < 0) continue;
                total += Int(sign_pow(dkr)) * binomial(g.m, dkr) * e_r(r);
            }
        }
    }
    return Int(sign_pow(n - 1)) * total;
}

namespace {

// Turn "number of blocks of size >= k" values for k = 1..max_size into
// exact per-size counts; validates monotonicity and nonnegativity.
std::map<int, Int> counts_from_tails(const std::vector<Int>& geq, int max_size) {
    std::map<int, Int> blocks;
    Int prev = 0;
    for (int kk = max_size; kk >= 1; --kk) {
        const Int& cur = geq[static_cast<std::size_t>(kk - 1)];
        if (cur < prev)
            throw PipelineMismatch("jordan: tail counts are not monotone");
        const Int exact = cur - prev;
        if (exact != 0) blocks[kk] = exact;
        prev = cur;
    }
    return blocks;
}

void check_expected(const std::map<int, Int>& blocks, int size, const Int& expected) {
    Int got = 0;
    if (auto it = blocks.find(size); it != blocks.end()) got = it->second;
    if (got != expected)
        throw PipelineMismatch("jordan: closed-form block count disagrees");
}

}  // namespace

JordanTable assemble_jordan_table(const NewtonAtInfinity& newton) {
    return assemble_jordan_table(newton, build_face_caches(newton));
}

JordanTable assemble_jordan_table(const NewtonAtInfinity& newton,
                                  const FaceCacheList& caches) {
    require_convenient(newton);
    const int n = newton.spec.n;
    const ZetaFactorization cp = char_poly_from_zeta(zeta_at_infinity(newton), n);
    const HodgeClass h = hodge_class_at_infinity(newton, caches);

    bool all_prime = true;
    for (const FaceAtInfinity& g : newton.faces_at_infinity)
        if (!is_prime(newton.polytope.face_polytope(g.face))) all_prime = false;

    std::set<RootOfUnity> candidates;
    for (const auto& [d, e] : cp.factors())
        for (const RootOfUnity& a : roots_of_unity_dividing(d)) candidates.insert(a);

    JordanTable table;
    for (const RootOfUnity& alpha : candidates) {
        const Int mult = eigenvalue_multiplicity(cp, alpha);
        if (mult == 0) continue;
        JordanEntry entry;
        entry.multiplicity = mult;
        const int max_size = alpha.is_one() ? n - 1 : n;

        std::optional<std::vector<Int>> geq_general;
        if (h.full) {
            std::vector<Int> geq;
            for (int kk = 1; kk <= max_size; ++kk)
                geq.push_back(*jordan_counts_general(newton, h, alpha, kk));
            geq_general = std::move(geq);
        }
        std::optional<std::vector<Int>> geq_prime;
        if (all_prime && !alpha.is_one()) {
            std::vector<Int> geq;
            for (int kk = 1; kk <= max_size; ++kk)
                geq.push_back(jordan_closed_prime(newton, caches, alpha, kk));
            geq_prime = std::move(geq);
        }
        if (geq_general && geq_prime && *geq_general != *geq_prime)
            throw PipelineMismatch("jordan: general and prime-face pipelines disagree");

        if (geq_general || geq_prime) {
            const std::vector<Int>& geq = geq_general ? *geq_general : *geq_prime;
            entry.blocks = counts_from_tails(geq, max_size);
            Int weighted = 0;
            for (const auto& [size, cnt] : entry.blocks) weighted += Int(size) * cnt;
            if (weighted != mult)
                throw PipelineMismatch(
                    "jordan: block sizes do not add up to the multiplicity");
            entry.complete = true;
            // Cross-check against the closed-form top/subtop counts.
            if (alpha.is_one()) {
                check_expected(entry.blocks, n - 1, jordan_top_eigenone(newton));
                if (n >= 3)
                    check_expected(entry.blocks, n - 2, jordan_subtop_eigenone(newton));
            } else {
                check_expected(entry.blocks, n, jordan_top_nontrivial(newton, alpha));
                check_expected(entry.blocks, n - 1,
                               jordan_subtop_nontrivial(newton, alpha));
            }
        } else {
            // Only the closed-form top and subtop counts are available.
            Int top, subtop = 0;
            int top_size, subtop_size = 0;
            if (alpha.is_one()) {
                top = jordan_top_eigenone(newton);
                top_size = n - 1;
                if (n >= 3) {
                    subtop = jordan_subtop_eigenone(newton);
                    subtop_size = n - 2;
                }
            } else {
                top = jordan_top_nontrivial(newton, alpha);
                top_size = n;
                subtop = jordan_subtop_nontrivial(newton, alpha);
                subtop_size = n - 1;
            }
            if (top != 0) entry.blocks[top_size] = top;
            if (subtop_size > 0 && subtop != 0) entry.blocks[subtop_size] = subtop;
            Int weighted = 0;
            for (const auto& [size, cnt] : entry.blocks) weighted += Int(size) * cnt;
            if (weighted > mult)
                throw PipelineMismatch("jordan: partial blocks exceed the multiplicity");
            entry.complete = (weighted == mult);
        }
        table.eigenvalues.emplace(alpha, std::move(entry));
    }
    return table;
}

Int SpectrumPoly::total_mass() const {
    Int m = 0;
    for (const auto& [e, c] : terms) m += c;
    return m;
}

namespace {

void spectrum_add(SpectrumPoly& sp, const Rat& expo, const Int& coeff) {
    if (coeff == 0) return;
    auto it = sp.terms.find(expo);
    if (it == sp.terms.end()) {
        sp.terms.emplace(expo, coeff);
    } else {
        it->second += coeff;
        if (it->second == 0) sp.terms.erase(it);
    }
}

}  // namespace

SpectrumPoly spectrum_via_hodge(const NewtonAtInfinity& newton) {
    return spectrum_via_hodge(newton, hodge_class_at_infinity(newton));
}

SpectrumPoly spectrum_via_hodge(const NewtonAtInfinity& newton, const HodgeClass& h) {
    require_convenient(newton);
    const int n = newton.spec.n;
    SpectrumPoly sp;
    const Int sign = sign_pow(n - 1);
    for (const auto& [key, val] : h.rows.entries()) {
        const auto& [p, alpha] = key;
        const Rat beta =
            alpha.is_one() ? Rat(1) : Rat(alpha.num(), alpha.den());
        spectrum_add(sp, Rat(p) + beta, sign * val);
    }
    spectrum_add(sp, Rat(n), Int(sign_pow(n)));
    return sp;
}

SpectrumPoly spectrum_via_cones(const NewtonAtInfinity& newton) {
    require_convenient(newton);
    const int n = newton.spec.n;
    // The cone of each face is sliced at height n + 2: every coefficient of
    // the assembled series with exponent <= n + 2 is then exact, and the
    // true spectrum is supported inside (0, n).
    const Int cutoff = n + 2;
    SpectrumPoly sp;
    for (const FaceAtInfinity& g : newton.faces_at_infinity) {
        const int sign = sign_pow(n - 1 - g.gamma_dim);
        // (1 - t)^{s_gamma} expansion coefficients.
        std::vector<Int> binom(static_cast<std::size_t>(g.s) + 1);
        for (int j = 0; j <= g.s; ++j)
            binom[static_cast<std::size_t>(j)] = Int(sign_pow(j)) * binomial(g.s, j);
        for (const Vec& v : g.delta.lattice_points(cutoff, /*interior_only=*/false)) {
            const auto coords = g.delta.frame().to_coords(v);
            const Rat hval(dot(g.ell, *coords), g.d);
            for (int j = 0; j <= g.s; ++j)
                spectrum_add(sp, hval + Rat(j),
                             Int(sign) * binom[static_cast<std::size_t>(j)]);
        }
    }
    spectrum_add(sp, Rat(0), Int(sign_pow(n)));
    for (auto it = sp.terms.begin(); it != sp.terms.end();) {
        if (it->first > cutoff) {
            // Truncation artifacts beyond the exact band.
            it = sp.terms.erase(it);
        } else if (it->first <= 0 || it->first >= n) {
            throw PipelineMismatch(
                "spectrum: nonzero coefficient outside the open interval (0, n)");
        } else {
            ++it;
        }
    }
    return sp;
}

}  // namespace minf
