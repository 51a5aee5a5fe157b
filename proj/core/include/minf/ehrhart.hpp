/*
 * ehrhart.hpp
 * -----------
 * Character-twisted Ehrhart counting: twisted lattice point histograms
 * l(kΔ)_α and l*(kΔ)_α, the coefficient tables φ_{α,i} / ψ_{α,i} of the
 * polynomials P_α = (1−t)^{N+1} Σ l*(kΔ)_α t^k and Q_α (same with l),
 * reciprocity checks, φ̃ sums and 1-skeleton counts.
 */
#pragma once

#include <map>
#include <vector>

#include "minf/character.hpp"

namespace minf {

// Histogram over character values; missing keys mean count 0.
using TwistedCountVector = std::map<RootOfUnity, Int>;

// Thrown when the per-alpha polynomiality guard fails, signalling a
// character that is not constant-one on vertex differences.
struct InvalidCharacter : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Histogram of chi over the integral points of k(Δ − w) (closed or
// relative-interior). Independent of the choice of the vertex w.
TwistedCountVector twisted_count(const LatticePolytope& delta,
                                 const TwistedCharacter& chi, const Int& k,
                                 bool interior_only, const Vec& w);

struct EhrhartTwistData {
    int n = 0;  // intrinsic dimension N of Δ
    // Coefficient vectors indexed 0..N+1; absent α means all-zero.
    std::map<RootOfUnity, std::vector<Int>> phi, psi;

    Int phi_at(const RootOfUnity& alpha, const Int& i) const;
    Int psi_at(const RootOfUnity& alpha, const Int& i) const;
    std::vector<RootOfUnity> alphas() const;
};

// φ/ψ from enumerated counts at k = 0..N+1 by binomial convolution with
// (1−t)^{N+1}, with a polynomiality guard at k = N+2.
//
// Series convention: the k = 0 term of the interior series is 0 (the
// relative interior of the degenerate dilate contributes nothing); this is
// what makes the φ/ψ duality exact in every dimension including 0.
EhrhartTwistData phi_psi_coefficients(const LatticePolytope& delta,
                                      const TwistedCharacter& chi);

// h_{Δ,α}(−k) = (−1)^N l*(kΔ)_α, with h interpolated from k = 0..N+1.
bool ehrhart_reciprocity_check(const LatticePolytope& delta,
                               const TwistedCharacter& chi, const Int& k);

// φ̃_α(Γ) = Σ_{i=0}^{dim Γ} φ_{α,i}(Γ); requires α ≠ 1.
Int tilde_phi(const EhrhartTwistData& data, const RootOfUnity& alpha);
Int tilde_phi(const LatticePolytope& gamma, const TwistedCharacter& chi,
              const RootOfUnity& alpha);

// Π(Δ)_α: lattice points on the 0/1-skeleton of Δ − w with chi-value α.
Int skeleton_count(const LatticePolytope& delta, const TwistedCharacter& chi,
                   const RootOfUnity& alpha);

// All reduced fractions with denominator dividing d (candidate characters'
// values), sorted.
std::vector<RootOfUnity> roots_of_unity_dividing(const Int& d);

}  // namespace minf
