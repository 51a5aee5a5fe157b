/*
 * oracle.hpp
 * ----------
 * Independent brute-force validators: triangulation-based lattice point
 * counting (algorithmically independent of the box scan), seeded random
 * instance generation, and an invariant cross-check suite.
 */
#pragma once

#include <cstdint>
#include <string>

#include "minf/monodromy.hpp"

namespace minf {

struct ResourceCapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CheckReport {
    std::string check;     // invariant name
    std::string instance;  // instance description
    bool pass = false;
    std::string left;      // computed value (or counterexample)
    std::string right;     // expected value
};

// Lattice point count of kP (or its relative interior) by simplex
// decomposition plus per-simplex barycentric enumeration.
// Caps: k <= 4 and intrinsic dim <= 4; exceeding either is a hard error.
Int count_by_triangulation(const LatticePolytope& p, const Int& k,
                           bool interior_only);

// Deterministic-from-seed convenient support: one axis point per axis plus
// a few random extra points with coordinates in [0, max_coord].
SupportSpec random_convenient_support(int n, int max_coord, std::uint64_t seed);

// Runs every cross-checkable invariant on one instance; failures carry the
// counterexample values.
std::vector<CheckReport> cross_check_suite(const SupportSpec& spec);

}  // namespace minf
