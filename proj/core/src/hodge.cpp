/*
 * hodge.cpp
 * ---------
 * E-polynomial arithmetic and the combinatorial formulas for equivariant
 * Hodge–Deligne numbers of non-degenerate twisted toric hypersurfaces.
 */
#include "minf/hodge.hpp"

#include <algorithm>

namespace minf {

void EPolynomial::add(int p, int q, const RootOfUnity& alpha, const Int& c) {
    if (c == 0) return;
    const Key k{p, q, alpha};
    auto it = entries_.find(k);
    if (it == entries_.end()) {
        entries_.emplace(k, c);
    } else {
        it->second += c;
        if (it->second == 0) entries_.erase(it);
    }
}

Int EPolynomial::at(int p, int q, const RootOfUnity& alpha) const {
    const auto it = entries_.find(Key{p, q, alpha});
    return it == entries_.end() ? Int(0) : it->second;
}

Int EPolynomial::row_sum(int p, const RootOfUnity& alpha) const {
    Int s = 0;
    for (const auto& [k, v] : entries_)
        if (std::get<0>(k) == p && std::get<2>(k) == alpha) s += v;
    return s;
}

Int EPolynomial::antidiag_sum(int r, const RootOfUnity& alpha) const {
    Int s = 0;
    for (const auto& [k, v] : entries_)
        if (std::get<0>(k) + std::get<1>(k) == r && std::get<2>(k) == alpha) s += v;
    return s;
}

void EPolynomial::add_table(const EPolynomial& other) {
    for (const auto& [k, v] : other.entries_)
        add(std::get<0>(k), std::get<1>(k), std::get<2>(k), v);
}

std::vector<RootOfUnity> EPolynomial::alphas() const {
    std::vector<RootOfUnity> out;
    for (const auto& [k, v] : entries_) out.push_back(std::get<2>(k));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

int EPolynomial::max_pq() const {
    int m = 0;
    for (const auto& [k, v] : entries_)
        m = std::max({m, std::get<0>(k), std::get<1>(k)});
    return m;
}

void RowSumTable::add(int p, const RootOfUnity& alpha, const Int& c) {
    if (c == 0) return;
    const auto k = std::make_pair(p, alpha);
    auto it = entries_.find(k);
    if (it == entries_.end()) {
        entries_.emplace(k, c);
    } else {
        it->second += c;
        if (it->second == 0) entries_.erase(it);
    }
}

Int RowSumTable::at(int p, const RootOfUnity& alpha) const {
    const auto it = entries_.find(std::make_pair(p, alpha));
    return it == entries_.end() ? Int(0) : it->second;
}

void RowSumTable::add_table(const RowSumTable& other) {
    for (const auto& [k, v] : other.entries_) add(k.first, k.second, v);
}

std::vector<RootOfUnity> RowSumTable::alphas() const {
    std::vector<RootOfUnity> out;
    for (const auto& [k, v] : entries_) out.push_back(k.second);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

EPolynomial lefschetz_twist(const EPolynomial& e, int m) {
    EPolynomial out;
    for (const auto& [k, v] : e.entries())
        for (int j = 0; j <= m; ++j)
            out.add(std::get<0>(k) + j, std::get<1>(k) + j, std::get<2>(k),
                    ((j % 2) ? -1 : 1) * binomial(m, j) * v);
    return out;
}

RowSumTable lefschetz_twist_rows(const RowSumTable& rows, int m) {
    RowSumTable out;
    for (const auto& [k, v] : rows.entries())
        for (int j = 0; j <= m; ++j)
            out.add(k.first + j, k.second, ((j % 2) ? -1 : 1) * binomial(m, j) * v);
    return out;
}

Int e_high_range(int n, int p, int q, const RootOfUnity& alpha) {
    if (p + q <= n - 1)
        throw std::invalid_argument("e_high_range: p+q must exceed N-1");
    if (!alpha.is_one() || p != q) return 0;
    return (((n + p + 1) % 2) ? -1 : 1) * binomial(n, p + 1);
}

RowSumTable e_row_sums(const EhrhartTwistData& data) {
    const int n = data.n;
    RowSumTable out;
    const Int sign_np1 = ((n + 1) % 2) ? -1 : 1;
    std::vector<RootOfUnity> alphas = data.alphas();
    if (std::find(alphas.begin(), alphas.end(), RootOfUnity::one()) == alphas.end())
        alphas.push_back(RootOfUnity::one());
    for (const RootOfUnity& a : alphas) {
        for (int p = 0; p <= n - 1; ++p) {
            Int v = sign_np1 * data.phi_at(a, n - p);
            if (a.is_one()) v += (((p + n + 1) % 2) ? -1 : 1) * binomial(n, p + 1);
            out.add(p, a, v);
        }
    }
    return out;
}

RowSumTable e_row_sums(const LatticePolytope& delta, const TwistedCharacter& chi) {
    return e_row_sums(phi_psi_coefficients(delta, chi));
}

Int e_p0(const LatticePolytope& delta, const TwistedCharacter& chi,
         const RootOfUnity& alpha, int p) {
    if (p <= 0) throw std::invalid_argument("e_p0: requires p > 0");
    const int n = delta.dim();
    const auto& lat = delta.face_lattice();
    Int total = 0;
    for (int fi : lat.faces_of_dim(p + 1)) {
        const LatticePolytope fp = delta.face_polytope(lat.faces[fi]);
        const TwistedCountVector counts =
            twisted_count(fp, chi, 1, true, fp.base_vertex());
        const auto it = counts.find(alpha);
        if (it != counts.end()) total += it->second;
    }
    return (((n - 1) % 2) ? -1 : 1) * total;
}

Int e_00(const LatticePolytope& delta, const TwistedCharacter& chi,
         const RootOfUnity& alpha) {
    const int n = delta.dim();
    const Int sign = ((n - 1) % 2) ? -1 : 1;
    if (alpha.is_one()) return sign * (skeleton_count(delta, chi, alpha) - 1);
    return sign * skeleton_count(delta, chi, alpha.inverse());
}

FacePhiCache::FacePhiCache(const LatticePolytope& delta, const TwistedCharacter& chi)
    : delta_(delta), chi_(chi) {}

const EhrhartTwistData& FacePhiCache::data(int face_index) const {
    auto it = cache_.find(face_index);
    if (it == cache_.end()) {
        const Face& f = delta_.face_lattice().faces[face_index];
        it = cache_.emplace(face_index,
                            phi_psi_coefficients(delta_.face_polytope(f), chi_))
                 .first;
    }
    return it->second;
}

namespace {

void require_pseudo_prime(const LatticePolytope& p) {
    if (!is_pseudo_prime(p))
        throw NotPseudoPrime("polytope is not pseudo-prime; only row sums available");
}

}  // namespace

namespace {

// Closure table of the face with index `gi`, using the parent cache for all
// of its subfaces; `n` is the face's own intrinsic dimension.
EPolynomial closure_of_face(const FacePhiCache& cache, int gi, const RootOfUnity& alpha) {
    const auto& lat = cache.lattice();
    const int n = lat.faces[gi].dim;
    EPolynomial out;
    for (int p = 0; p <= n - 1; ++p) {
        const int q = n - 1 - p;
        Int v = 0;
        for (std::size_t fj = 0; fj < lat.faces.size(); ++fj) {
            const int dg = lat.faces[fj].dim;
            if (dg < 0 || !lat.is_subface(static_cast<int>(fj), gi)) continue;
            v += ((dg % 2) ? -1 : 1) * cache.data(static_cast<int>(fj)).phi_at(alpha, dg - p);
        }
        out.add(p, q, alpha, -v);
    }
    return out;
}

EPolynomial closure_eigenone_of_face(const FacePhiCache& cache, int gi) {
    const auto& lat = cache.lattice();
    const int n = lat.faces[gi].dim;
    const RootOfUnity one = RootOfUnity::one();
    EPolynomial out;
    // Off-diagonal entries live on p + q = n - 1 only.
    for (int p = 0; p <= n - 1; ++p) {
        const int q = n - 1 - p;
        if (p == q) continue;
        const int mx = std::max(p, q);
        Int v = 0;
        for (std::size_t fj = 0; fj < lat.faces.size(); ++fj) {
            const int dg = lat.faces[fj].dim;
            if (dg < 0 || !lat.is_subface(static_cast<int>(fj), gi)) continue;
            v += ((dg % 2) ? -1 : 1) * cache.data(static_cast<int>(fj)).phi_at(one, dg - mx);
        }
        out.add(p, q, one, -v);
    }
    // Diagonal entries, three cases split on 2p vs n - 1.
    for (int p = 0; p <= n; ++p) {
        Int v = 0;
        for (std::size_t fj = 0; fj < lat.faces.size(); ++fj) {
            const int dg = lat.faces[fj].dim;
            if (dg < 0 || !lat.is_subface(static_cast<int>(fj), gi)) continue;
            const Int sgn = (dg % 2) ? -1 : 1;
            if (2 * p > n - 1) {
                v += sgn * binomial(dg, p + 1);
            } else if (2 * p < n - 1) {
                v += sgn * binomial(dg, n - p);
            } else {
                v += sgn * ((((p + 1) % 2) ? -1 : 1) * binomial(dg, p + 1) -
                            cache.data(static_cast<int>(fj)).phi_at(one, dg - p));
            }
        }
        if (2 * p > n - 1) {
            v *= ((p + 1) % 2) ? -1 : 1;
        } else if (2 * p < n - 1) {
            v *= ((n - p) % 2) ? -1 : 1;
        }
        out.add(p, p, one, v);
    }
    return out;
}

int whole_polytope_index(const FaceLattice& lat) {
    for (std::size_t i = 0; i < lat.faces.size(); ++i)
        if (lat.faces[i].is_whole_polytope) return static_cast<int>(i);
    throw std::logic_error("face lattice without top face");
}

}  // namespace

EPolynomial e_closure_pseudoprime(const FacePhiCache& cache, const RootOfUnity& alpha) {
    if (alpha.is_one())
        throw std::invalid_argument("e_closure_pseudoprime: alpha must be nontrivial");
    require_pseudo_prime(cache.delta());
    return closure_of_face(cache, whole_polytope_index(cache.lattice()), alpha);
}

EPolynomial e_affine_pseudoprime(const FacePhiCache& cache, const RootOfUnity& alpha) {
    if (alpha.is_one())
        throw std::invalid_argument("e_affine_pseudoprime: alpha must be nontrivial");
    require_pseudo_prime(cache.delta());
    const int n = cache.delta().dim();
    const auto& lat = cache.lattice();
    EPolynomial out;
    for (int r = 0; r <= n - 1; ++r) {
        for (int p = 0; p <= r; ++p) {
            const int q = r - p;
            Int v = 0;
            for (int gi : lat.faces_of_dim(r + 1)) {
                for (std::size_t fj = 0; fj < lat.faces.size(); ++fj) {
                    const int dg = lat.faces[fj].dim;
                    if (dg < 0 || !lat.is_subface(static_cast<int>(fj), gi)) continue;
                    v += ((dg % 2) ? -1 : 1) *
                         cache.data(static_cast<int>(fj)).phi_at(alpha, dg - p);
                }
            }
            out.add(p, q, alpha, (((n + r) % 2) ? -1 : 1) * v);
        }
    }
    return out;
}

EPolynomial e_closure_eigenone_pseudoprime(const FacePhiCache& cache) {
    require_pseudo_prime(cache.delta());
    return closure_eigenone_of_face(cache, whole_polytope_index(cache.lattice()));
}

EPolynomial e_affine_from_closures(const FacePhiCache& cache, const RootOfUnity& alpha) {
    require_pseudo_prime(cache.delta());
    const int n = cache.delta().dim();
    const auto& lat = cache.lattice();
    EPolynomial out;
    for (std::size_t fi = 0; fi < lat.faces.size(); ++fi) {
        const int dg = lat.faces[fi].dim;
        if (dg < 0) continue;
        const int gi = static_cast<int>(fi);
        const EPolynomial closure = alpha.is_one() ? closure_eigenone_of_face(cache, gi)
                                                   : closure_of_face(cache, gi, alpha);
        const Int sign = ((n - dg) % 2) ? -1 : 1;
        for (const auto& [k, v] : closure.entries())
            out.add(std::get<0>(k), std::get<1>(k), std::get<2>(k), sign * v);
    }
    return out;
}

Int antidiag_sums_nontrivial(const FacePhiCache& cache, const RootOfUnity& alpha, int r) {
    if (alpha.is_one())
        throw std::invalid_argument("antidiag_sums_nontrivial: alpha must be nontrivial");
    require_pseudo_prime(cache.delta());
    const int n = cache.delta().dim();
    if (r < 0 || r > n - 1) return 0;
    const auto& lat = cache.lattice();
    Int total = 0;
    for (int gi : lat.faces_of_dim(r + 1)) {
        for (std::size_t fj = 0; fj < lat.faces.size(); ++fj) {
            const int dg = lat.faces[fj].dim;
            if (dg < 0 || !lat.is_subface(static_cast<int>(fj), gi)) continue;
            total += ((dg % 2) ? -1 : 1) *
                     tilde_phi(cache.data(static_cast<int>(fj)), alpha);
        }
    }
    return (((n + r) % 2) ? -1 : 1) * total;
}

}  // namespace minf
