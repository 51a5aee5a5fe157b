/*
 * character.hpp
 * -------------
 * Root-of-unity characters on a sublattice M, stored as an integer
 * functional modulo d in frame coordinates: chi(v) = (ell(v) mod d)/d.
 */
#pragma once

#include "minf/polytope.hpp"
#include "minf/root_of_unity.hpp"

namespace minf {

class TwistedCharacter {
public:
    TwistedCharacter() = default;

    TwistedCharacter(SublatticeFrame frame, Vec functional, Int modulus)
        : frame_(std::move(frame)), functional_(std::move(functional)),
          modulus_(std::move(modulus)) {
        if (modulus_ <= 0)
            throw std::invalid_argument("TwistedCharacter: nonpositive modulus");
        pullback_ = frame_.covector_pullback(functional_);
    }

    // The trivial character on the lattice of a polytope's span.
    static TwistedCharacter trivial(const LatticePolytope& p) {
        return TwistedCharacter(p.frame(), Vec(p.frame().rank(), 0), 1);
    }

    // tau_gamma: v -> zeta_{d}^{ht(v, gamma)} on M_gamma. Heights are affine
    // with ht(0) = d, hence linear mod d: chi(v) = (-ell(v) mod d)/d.
    static TwistedCharacter from_heights(const FaceAtInfinity& g) {
        Vec f(g.ell.size());
        for (std::size_t i = 0; i < g.ell.size(); ++i) f[i] = -g.ell[i];
        return TwistedCharacter(g.delta.frame(), std::move(f), g.d);
    }

    const Int& modulus() const { return modulus_; }

    // chi of an ambient lattice vector in M; throws if outside the span.
    RootOfUnity eval(const Vec& ambient) const {
        const auto c = frame_.to_coords(ambient);
        if (!c)
            throw std::invalid_argument("TwistedCharacter: vector outside the lattice");
        return RootOfUnity(dot(functional_, *c), modulus_);
    }

    // chi(v - w).
    RootOfUnity eval_diff(const Vec& v, const Vec& w) const { return eval(sub(v, w)); }

    // Fast path for vectors already known to lie in the span: a single
    // ambient dot product, no membership check.
    RootOfUnity eval_span(const Vec& ambient) const {
        return RootOfUnity(dot(pullback_, ambient), modulus_);
    }

    // Validity for a polytope: chi(v - w) = 1 for all vertex pairs.
    bool valid_for(const LatticePolytope& p) const {
        const Vec& w = p.vertices().front();
        for (const Vec& v : p.vertices())
            if (!eval_diff(v, w).is_one()) return false;
        return true;
    }

private:
    SublatticeFrame frame_;
    Vec functional_;
    Int modulus_ = 1;
    Vec pullback_;  // ambient covector representing the functional on the span
};

}  // namespace minf
