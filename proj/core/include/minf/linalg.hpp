/*
 * linalg.hpp
 * ----------
 * Exact integer linear algebra over arbitrary-precision integers:
 * determinants (fraction-free Bareiss), rank, Smith normal form with
 * unimodular transforms, and lattice frames (saturated bases of the
 * sublattice Z^n intersected with a rational linear span).
 *
 * All arithmetic is exact; no floating point anywhere.
 */
#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace minf {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;
using Vec = std::vector<Int>;
// Row-major integer matrix: Mat[i] is row i.
using Mat = std::vector<Vec>;

inline Int gcd_int(const Int& a, const Int& b) {
    return boost::multiprecision::gcd(a, b);
}

Int dot(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec add(const Vec& a, const Vec& b);
Vec scale(const Vec& a, const Int& c);
bool is_zero(const Vec& a);

// Divide a nonzero vector by the gcd of its entries; sign unchanged.
// The zero vector is returned unchanged.
Vec make_primitive(const Vec& a);

// Exact determinant of a square matrix (Bareiss fraction-free elimination).
Int det(Mat m);

// Rank over Q.
int rank(Mat m);

// Result of the Smith normal form decomposition U * A * V = D with
// U (rows x rows) and V (cols x cols) unimodular and D diagonal with
// d_1 | d_2 | ... | d_r, d_i > 0, remaining diagonal entries zero.
struct SmithResult {
    Mat u;       // unimodular, rows(A) x rows(A)
    Mat v;       // unimodular, cols(A) x cols(A)
    Mat d;       // diagonal, same shape as A
    int rank;    // number of nonzero diagonal entries
};

SmithResult smith_normal_form(const Mat& a);

// Inverse of a unimodular integer matrix (entries stay integral).
Mat unimodular_inverse(const Mat& m);

Mat identity_matrix(int n);
Mat transpose(const Mat& m);
Mat mat_mul(const Mat& a, const Mat& b);
Vec row_times_mat(const Vec& v, const Mat& m);

/*
 * A saturated basis of the lattice Z^n ∩ span_Q(generators).
 *
 * `basis` rows form a lattice basis of that saturation, so every integral
 * point of the linear span has integer coordinates in this frame.
 * Coordinates are extracted through the unimodular column transform of the
 * Smith normal form of the generator matrix.
 */
class SublatticeFrame {
public:
    // Build the frame from spanning (row) vectors; rank may be anything.
    static SublatticeFrame from_generators(const Mat& generators, int ambient_dim);

    int rank() const { return rank_; }
    int ambient_dim() const { return ambient_dim_; }
    const Mat& basis() const { return basis_; }

    // Frame coordinates of an ambient vector, or nullopt if the vector is
    // not in the linear span (membership is exact; integral points of the
    // span always have integral coordinates by saturation).
    std::optional<Vec> to_coords(const Vec& ambient) const;

    // Inverse of to_coords on the lattice.
    Vec from_coords(const Vec& coords) const;

    // Lift a covector given in frame coordinates to an ambient integer
    // covector agreeing with it on the span (then reduced to be primitive
    // in the ambient dual lattice).
    Vec lift_covector(const Vec& frame_covector) const;

    // Ambient covector w with dot(w, v) = dot(frame_covector, to_coords(v))
    // for every v in the span (no primitivity reduction).
    Vec covector_pullback(const Vec& frame_covector) const;

private:
    int ambient_dim_ = 0;
    int rank_ = 0;
    Mat basis_;       // rank_ x ambient_dim_
    Mat coord_map_;   // ambient_dim_ x rank_: coords(v) = v * coord_map_
};

// Primitive integer kernel covector of a rank-(d-1) collection of rows in
// Z^d (the unique-up-to-sign primitive u with rows * u = 0).
// Throws if the rows do not have corank exactly 1.
Vec corank_one_kernel(const Mat& rows, int d);

// Exact binomial coefficient; zero when b < 0 or b > a >= 0.
Int binomial(const Int& a, const Int& b);

}  // namespace minf
