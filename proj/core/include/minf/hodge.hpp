/*
 * hodge.hpp
 * ---------
 * Equivariant Hodge–Deligne numbers e^{p,q}(·)_α of non-degenerate twisted
 * toric hypersurfaces, derived purely from polytope/character data:
 * E-polynomial tables with Lefschetz twists, row sums, closure/affine
 * tables for pseudo-prime polytopes, and antidiagonal sums.
 *
 * Throughout, N denotes the intrinsic dimension of the polytope Δ; the
 * hypersurface Z* lives in an N-torus and its closure Z̄* in the toric
 * variety of Δ.
 */
#pragma once

#include <map>
#include <tuple>

#include "minf/ehrhart.hpp"

namespace minf {

struct NotPseudoPrime : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Triple-indexed integer table (p, q, alpha) -> e.
class EPolynomial {
public:
    using Key = std::tuple<int, int, RootOfUnity>;

    void add(int p, int q, const RootOfUnity& alpha, const Int& c);
    Int at(int p, int q, const RootOfUnity& alpha) const;
    Int row_sum(int p, const RootOfUnity& alpha) const;
    Int antidiag_sum(int r, const RootOfUnity& alpha) const;
    void add_table(const EPolynomial& other);
    const std::map<Key, Int>& entries() const { return entries_; }
    std::vector<RootOfUnity> alphas() const;
    int max_pq() const;

private:
    std::map<Key, Int> entries_;
};

class RowSumTable {
public:
    void add(int p, const RootOfUnity& alpha, const Int& c);
    Int at(int p, const RootOfUnity& alpha) const;
    void add_table(const RowSumTable& other);
    const std::map<std::pair<int, RootOfUnity>, Int>& entries() const { return entries_; }
    std::vector<RootOfUnity> alphas() const;

private:
    std::map<std::pair<int, RootOfUnity>, Int> entries_;
};

// Multiplication by (1 − L)^m: e^{p,q} picks up Σ_j (−1)^j C(m,j) from
// (p−j, q−j); equivalently each entry is pushed up the diagonal.
EPolynomial lefschetz_twist(const EPolynomial& e, int m);
RowSumTable lefschetz_twist_rows(const RowSumTable& rows, int m);

// Values of e^{p,q}(Z*)_α in the range p + q > N − 1: zero except the
// diagonal α = 1 entries (−1)^{N+p+1} C(N, p+1).
Int e_high_range(int n, int p, int q, const RootOfUnity& alpha);

// Σ_q e^{p,q}(Z*)_α for p = 0..N−1 (zero outside):
//   α = 1: (−1)^{p+N+1} C(N, p+1) + (−1)^{N+1} φ_{1, N−p}
//   α ≠ 1: (−1)^{N+1} φ_{α, N−p}
RowSumTable e_row_sums(const LatticePolytope& delta, const TwistedCharacter& chi);
RowSumTable e_row_sums(const EhrhartTwistData& data);

// e^{p,0}(Z*)_α = (−1)^{N−1} Σ_{dim Γ = p+1} l*(Γ)_α (p > 0).
Int e_p0(const LatticePolytope& delta, const TwistedCharacter& chi,
         const RootOfUnity& alpha, int p);

// e^{0,0}(Z*)_α via 1-skeleton counts:
//   α = 1: (−1)^{N−1} (Π(Δ)_1 − 1);  α ≠ 1: (−1)^{N−1} Π(Δ)_{α^{-1}}.
Int e_00(const LatticePolytope& delta, const TwistedCharacter& chi,
         const RootOfUnity& alpha);

/*
 * Per-face Ehrhart data cache for the closure/affine formulas: each face Γ
 * of Δ is treated as its own polytope with the restricted character.
 */
class FacePhiCache {
public:
    FacePhiCache(const LatticePolytope& delta, const TwistedCharacter& chi);
    const LatticePolytope& delta() const { return delta_; }
    const TwistedCharacter& chi() const { return chi_; }
    const EhrhartTwistData& data(int face_index) const;
    const FaceLattice& lattice() const { return delta_.face_lattice(); }

private:
    LatticePolytope delta_;
    TwistedCharacter chi_;
    mutable std::map<int, EhrhartTwistData> cache_;
};

// Closure table for α ≠ 1 (pseudo-prime Δ):
// e^{p,q}(Z̄*)_α = −Σ_{Γ≼Δ} (−1)^{dim Γ} φ_{α, dim Γ − p}(Γ) on p+q = N−1,
// zero elsewhere.
EPolynomial e_closure_pseudoprime(const FacePhiCache& cache, const RootOfUnity& alpha);

// Affine table for α ≠ 1 (pseudo-prime Δ):
// e^{p,q}(Z*)_α = (−1)^{N+p+q} Σ_{dim Γ = p+q+1} Σ_{Γ'≼Γ} (−1)^{dim Γ'}
//                 φ_{α, dim Γ' − p}(Γ').
EPolynomial e_affine_pseudoprime(const FacePhiCache& cache, const RootOfUnity& alpha);

// Closure table for α = 1 (pseudo-prime Δ), with the max{p,q} off-diagonal
// rule on p + q = N − 1 and the three-case diagonal rule split on 2p vs N−1.
EPolynomial e_closure_eigenone_pseudoprime(const FacePhiCache& cache);

// Affine table for any α by face-lattice Möbius inversion of closures:
// e(Z*_Δ) = Σ_{Γ≼Δ} (−1)^{dim Δ − dim Γ} e(Z̄*_Γ).
EPolynomial e_affine_from_closures(const FacePhiCache& cache, const RootOfUnity& alpha);

// Σ_{p+q=r} e^{p,q}(Z*)_α = (−1)^{N+r} Σ_{dim Γ = r+1} Σ_{Γ'≼Γ}
//                           (−1)^{dim Γ'} φ̃_α(Γ')  (α ≠ 1, 0 ≤ r ≤ N−1).
Int antidiag_sums_nontrivial(const FacePhiCache& cache, const RootOfUnity& alpha, int r);

}  // namespace minf
