/*
 * monodromy.hpp
 * -------------
 * Top-level invariants of a convenient polynomial non-degenerate at
 * infinity, computed from its Newton polyhedron at infinity: the zeta
 * function at infinity, the characteristic polynomial of the top monodromy
 * operator, Jordan block tables (via several independent pipelines), the
 * Hodge class at infinity, and the spectrum at infinity by two routes.
 */
#pragma once

#include <optional>

#include "minf/hodge.hpp"

namespace minf {

struct NotConvenient : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NonPrimeFace : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct PipelineMismatch : std::logic_error {
    using std::logic_error::logic_error;
};

// Exponent support (plus optional exact coefficients) of f = Σ a_v x^v.
struct SupportSpec {
    int n = 0;                               // ambient dimension >= 2
    std::vector<Vec> support;                // exponents in Z^n_+
    std::optional<std::vector<Rat>> coefficients;  // aligned with support

    void validate() const;
};

// Exact product Π_d (1 − t^d)^{e_d}; exponents may be negative.
class ZetaFactorization {
public:
    const std::map<Int, Int>& factors() const { return factors_; }
    void multiply(const Int& d, const Int& e);
    Int degree() const;  // Σ d·e_d

    // Expand to dense polynomial coefficients; throws if any division is
    // inexact (i.e. the product is not a polynomial).
    std::vector<Int> expand_polynomial() const;

    bool operator==(const ZetaFactorization& o) const { return factors_ == o.factors_; }

private:
    std::map<Int, Int> factors_;
};

// Γ∞(f) with cached face-at-infinity data.
struct NewtonAtInfinity {
    SupportSpec spec;
    LatticePolytope polytope;                  // Γ∞(f)
    std::vector<FaceAtInfinity> faces_at_infinity;
    std::vector<int> interior_vertex_ids;      // indices into faces_at_infinity
    std::vector<int> interior_edge_ids;        // indices into faces_at_infinity
};

NewtonAtInfinity build_gamma_infinity(const SupportSpec& spec);

// One Ehrhart cache per face at infinity (Δ_γ with the height character
// τ_γ), shareable across the Hodge, Jordan and spectrum pipelines. All
// per-face data is computed lazily and memoized inside the caches, so
// passing the same list to several functions avoids recomputation.
using FaceCacheList = std::vector<std::shared_ptr<const FacePhiCache>>;
FaceCacheList build_face_caches(const NewtonAtInfinity& newton);

bool check_convenient(const NewtonAtInfinity& newton);

enum class NondegStatus { verified, assumed, refuted };

// Per face at infinity: exact verification in dims 0 and 1 when
// coefficients are present, `assumed` otherwise and in dims >= 2.
std::vector<NondegStatus> check_nondegenerate_partial(const NewtonAtInfinity& newton);

ZetaFactorization zeta_at_infinity(const NewtonAtInfinity& newton);

// det(id − tΦ_{n−1}) = (ζ_f^∞ / (1−t))^{(−1)^{n−1}}; must be a polynomial.
ZetaFactorization char_poly_from_zeta(const ZetaFactorization& zeta, int n);

// Order of vanishing at t = α^{-1}: Σ_{d : α^d = 1} e_d.
Int eigenvalue_multiplicity(const ZetaFactorization& cp, const RootOfUnity& alpha);

// Jordan block counts from the closed-form theorems.
Int jordan_top_nontrivial(const NewtonAtInfinity& newton, const RootOfUnity& alpha);
Int jordan_subtop_nontrivial(const NewtonAtInfinity& newton, const RootOfUnity& alpha);
Int jordan_top_eigenone(const NewtonAtInfinity& newton);
Int jordan_subtop_eigenone(const NewtonAtInfinity& newton);  // n >= 3 only

// [H_f^∞] = Σ_γ (1 − L)^{m_γ} [Z*_{Δ_γ}] with the height character τ_γ.
// Row sums are always available; the full table is present iff every Δ_γ
// is pseudo-prime.
struct HodgeClass {
    EPolynomial table;
    RowSumTable rows;
    bool full = false;
};

HodgeClass hodge_class_at_infinity(const NewtonAtInfinity& newton);
HodgeClass hodge_class_at_infinity(const NewtonAtInfinity& newton,
                                   const FaceCacheList& caches);

// Number of Jordan blocks of size >= k for eigenvalue α, from signed
// antidiagonal sums of the Hodge class; nullopt when indeterminate.
std::optional<Int> jordan_counts_general(const NewtonAtInfinity& newton,
                                         const HodgeClass& h,
                                         const RootOfUnity& alpha, int k);

// Same count via the closed prime-face formula (α ≠ 1); requires every
// face at infinity to be prime.
Int jordan_closed_prime(const NewtonAtInfinity& newton, const RootOfUnity& alpha,
                        int k);
Int jordan_closed_prime(const NewtonAtInfinity& newton, const FaceCacheList& caches,
                        const RootOfUnity& alpha, int k);

struct JordanEntry {
    Int multiplicity = 0;           // from the characteristic polynomial
    std::map<int, Int> blocks;      // size -> count (only determined sizes)
    bool complete = false;
};

struct JordanTable {
    std::map<RootOfUnity, JordanEntry> eigenvalues;
};

// Aggregates all pipelines, difference "size >= k" counts into exact block
// counts, cross-checks them, and flags determinacy.
JordanTable assemble_jordan_table(const NewtonAtInfinity& newton);
JordanTable assemble_jordan_table(const NewtonAtInfinity& newton,
                                  const FaceCacheList& caches);

struct SpectrumPoly {
    std::map<Rat, Int> terms;  // exponent -> coefficient, zeros removed

    bool operator==(const SpectrumPoly& o) const { return terms == o.terms; }
    Int total_mass() const;
};

SpectrumPoly spectrum_via_hodge(const NewtonAtInfinity& newton);
SpectrumPoly spectrum_via_hodge(const NewtonAtInfinity& newton, const HodgeClass& h);
SpectrumPoly spectrum_via_cones(const NewtonAtInfinity& newton);

}  // namespace minf
