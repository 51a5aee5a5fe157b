/*
 * ehrhart.cpp
 * -----------
 * Twisted Ehrhart counting by direct enumeration of dilates.
 */
#include "minf/ehrhart.hpp"

#include <algorithm>

namespace minf {

TwistedCountVector twisted_count(const LatticePolytope& delta,
                                 const TwistedCharacter& chi, const Int& k,
                                 bool interior_only, const Vec& w) {
    if (std::find(delta.vertices().begin(), delta.vertices().end(), w) ==
        delta.vertices().end())
        throw std::invalid_argument("twisted_count: base point is not a vertex");
    TwistedCountVector out;
    const Vec kw = scale(w, k);
    // Points of the dilate lie in the span of Δ's frame, as does k(w - w'),
    // so the unchecked span evaluation is exact here.
    for (const Vec& x : delta.lattice_points(k, interior_only))
        out[chi.eval_span(sub(x, kw))] += 1;
    return out;
}

Int EhrhartTwistData::phi_at(const RootOfUnity& alpha, const Int& i) const {
    if (i < 0 || i > n + 1) return 0;
    const auto it = phi.find(alpha);
    if (it == phi.end()) return 0;
    return it->second[static_cast<std::size_t>(i)];
}

Int EhrhartTwistData::psi_at(const RootOfUnity& alpha, const Int& i) const {
    if (i < 0 || i > n + 1) return 0;
    const auto it = psi.find(alpha);
    if (it == psi.end()) return 0;
    return it->second[static_cast<std::size_t>(i)];
}

std::vector<RootOfUnity> EhrhartTwistData::alphas() const {
    std::vector<RootOfUnity> out;
    for (const auto& [a, v] : phi) out.push_back(a);
    for (const auto& [a, v] : psi)
        if (!phi.count(a)) out.push_back(a);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<RootOfUnity> roots_of_unity_dividing(const Int& d) {
    std::vector<RootOfUnity> out;
    for (Int j = 0; j < d; ++j) out.emplace_back(j, d);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

EhrhartTwistData phi_psi_coefficients(const LatticePolytope& delta,
                                      const TwistedCharacter& chi) {
    const int n = delta.dim();
    const Vec& w = delta.base_vertex();
    const std::vector<RootOfUnity> alphas = roots_of_unity_dividing(chi.modulus());

    // Counts at k = 0..N+2 (the last one only feeds the guard).
    std::vector<TwistedCountVector> closed(n + 3), interior(n + 3);
    for (int k = 0; k <= n + 2; ++k) {
        closed[k] = twisted_count(delta, chi, k, false, w);
        // Series convention: no interior contribution at k = 0.
        if (k > 0) interior[k] = twisted_count(delta, chi, k, true, w);
    }
    const auto at = [](const TwistedCountVector& v, const RootOfUnity& a) -> Int {
        const auto it = v.find(a);
        return it == v.end() ? Int(0) : it->second;
    };

    EhrhartTwistData data;
    data.n = n;
    for (const RootOfUnity& a : alphas) {
        std::vector<Int> phi(n + 2, 0), psi(n + 2, 0);
        bool phi_nonzero = false, psi_nonzero = false;
        for (int i = 0; i <= n + 1; ++i) {
            for (int j = 0; j <= i; ++j) {
                const Int c = ((j % 2) ? -1 : 1) * binomial(n + 1, j);
                phi[i] += c * at(interior[i - j], a);
                psi[i] += c * at(closed[i - j], a);
            }
            if (phi[i] != 0) phi_nonzero = true;
            if (psi[i] != 0) psi_nonzero = true;
        }
        // Guard: coefficient N+2 of both series must vanish (the counting
        // functions are genuine polynomials of degree ≤ N when the character
        // is valid for Δ).
        Int guard_p = 0, guard_q = 0;
        for (int j = 0; j <= n + 1; ++j) {
            const Int c = ((j % 2) ? -1 : 1) * binomial(n + 1, j);
            guard_p += c * at(interior[n + 2 - j], a);
            guard_q += c * at(closed[n + 2 - j], a);
        }
        if (guard_p != 0 || guard_q != 0)
            throw InvalidCharacter("phi_psi_coefficients: polynomiality guard failed");
        if (phi_nonzero) data.phi.emplace(a, std::move(phi));
        if (psi_nonzero) data.psi.emplace(a, std::move(psi));
    }
    return data;
}

namespace {

// Lagrange evaluation at x of the polynomial through (0,y0)..(m,ym).
Rat lagrange_eval(const std::vector<Int>& ys, const Rat& x) {
    const int m = static_cast<int>(ys.size()) - 1;
    Rat total = 0;
    for (int j = 0; j <= m; ++j) {
        Rat term = ys[j];
        for (int i = 0; i <= m; ++i) {
            if (i == j) continue;
            term *= (x - i);
            term /= (j - i);
        }
        total += term;
    }
    return total;
}

}  // namespace

bool ehrhart_reciprocity_check(const LatticePolytope& delta,
                               const TwistedCharacter& chi, const Int& k) {
    if (k < 1) throw std::invalid_argument("ehrhart_reciprocity_check: k must be >= 1");
    const int n = delta.dim();
    const Vec& w = delta.base_vertex();
    const std::vector<RootOfUnity> alphas = roots_of_unity_dividing(chi.modulus());
    const auto at = [](const TwistedCountVector& v, const RootOfUnity& a) -> Int {
        const auto it = v.find(a);
        return it == v.end() ? Int(0) : it->second;
    };
    std::vector<TwistedCountVector> closed(n + 2);
    for (int j = 0; j <= n + 1; ++j) closed[j] = twisted_count(delta, chi, j, false, w);
    const TwistedCountVector lstar = twisted_count(delta, chi, k, true, w);
    for (const RootOfUnity& a : alphas) {
        // h_{Δ,α}(j) = l(jΔ)_{α^{-1}}.
        std::vector<Int> ys;
        for (int j = 0; j <= n + 1; ++j) ys.push_back(at(closed[j], a.inverse()));
        const Rat lhs = lagrange_eval(ys, Rat(-k));
        const Int rhs = ((n % 2) ? -1 : 1) * at(lstar, a);
        if (lhs != Rat(rhs)) return false;
    }
    return true;
}

Int tilde_phi(const EhrhartTwistData& data, const RootOfUnity& alpha) {
    if (alpha.is_one()) throw std::invalid_argument("tilde_phi: alpha must be nontrivial");
    Int s = 0;
    for (int i = 0; i <= data.n; ++i) s += data.phi_at(alpha, i);
    return s;
}

Int tilde_phi(const LatticePolytope& gamma, const TwistedCharacter& chi,
              const RootOfUnity& alpha) {
    return tilde_phi(phi_psi_coefficients(gamma, chi), alpha);
}

Int skeleton_count(const LatticePolytope& delta, const TwistedCharacter& chi,
                   const RootOfUnity& alpha) {
    const Vec& w = delta.base_vertex();
    std::set<Vec> skeleton;
    const auto& lat = delta.face_lattice();
    for (int d = 0; d <= std::min(1, delta.dim()); ++d) {
        for (int fi : lat.faces_of_dim(d)) {
            const LatticePolytope fp = delta.face_polytope(lat.faces[fi]);
            for (const Vec& x : fp.lattice_points(1, false)) skeleton.insert(x);
        }
    }
    Int count = 0;
    for (const Vec& x : skeleton)
        if (chi.eval(sub(x, w)) == alpha) ++count;
    return count;
}

}  // namespace minf
