/*
 * linalg.cpp
 * ----------
 * Implementation of exact integer linear algebra: Bareiss determinants,
 * rank, Smith normal form with transforms, saturated lattice frames.
 */
#include "minf/linalg.hpp"

#include <algorithm>
#include <cassert>

namespace minf {

Int dot(const Vec& a, const Vec& b) {
    assert(a.size() == b.size());
    Int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Vec sub(const Vec& a, const Vec& b) {
    assert(a.size() == b.size());
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

Vec add(const Vec& a, const Vec& b) {
    assert(a.size() == b.size());
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

Vec scale(const Vec& a, const Int& c) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] * c;
    return r;
}

bool is_zero(const Vec& a) {
    return std::all_of(a.begin(), a.end(), [](const Int& x) { return x == 0; });
}

Vec make_primitive(const Vec& a) {
    Int g = 0;
    for (const Int& x : a) g = gcd_int(g, x);
    if (g == 0 || g == 1) return a;
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] / g;
    return r;
}

Int det(Mat m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    for (const Vec& row : m) {
        if (row.size() != n) throw std::invalid_argument("det: matrix not square");
    }
    Int prev = 1;
    Int sign = 1;
    for (std::size_t k = 0; k < n; ++k) {
        // Pivot search.
        std::size_t piv = k;
        while (piv < n && m[piv][k] == 0) ++piv;
        if (piv == n) return 0;
        if (piv != k) {
            std::swap(m[piv], m[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

int rank(Mat m) {
    if (m.empty()) return 0;
    const std::size_t rows = m.size();
    const std::size_t cols = m[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && m[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[piv], m[r]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (m[i][c] == 0) continue;
            const Int a = m[r][c];
            const Int b = m[i][c];
            const Int g = gcd_int(a, b);
            const Int fa = b / g;
            const Int fb = a / g;
            for (std::size_t j = c; j < cols; ++j) {
                m[i][j] = m[i][j] * fb - m[r][j] * fa;
            }
        }
        ++r;
    }
    return static_cast<int>(r);
}

Mat identity_matrix(int n) {
    Mat m(n, Vec(n, 0));
    for (int i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

Mat transpose(const Mat& m) {
    if (m.empty()) return {};
    Mat t(m[0].size(), Vec(m.size()));
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m[0].size(); ++j) t[j][i] = m[i][j];
    return t;
}

Mat mat_mul(const Mat& a, const Mat& b) {
    if (a.empty() || b.empty()) return {};
    const std::size_t n = a.size(), k = b.size(), p = b[0].size();
    Mat c(n, Vec(p, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            if (a[i][j] == 0) continue;
            for (std::size_t l = 0; l < p; ++l) c[i][l] += a[i][j] * b[j][l];
        }
    return c;
}

Vec row_times_mat(const Vec& v, const Mat& m) {
    assert(!m.empty() && v.size() == m.size());
    Vec r(m[0].size(), 0);
    for (std::size_t j = 0; j < v.size(); ++j) {
        if (v[j] == 0) continue;
        for (std::size_t l = 0; l < r.size(); ++l) r[l] += v[j] * m[j][l];
    }
    return r;
}

namespace {

// Elementary operations acting on A while mirroring into U (rows) / V (cols).
struct SnfWork {
    Mat a, u, v;

    void row_swap(int i, int j) {
        std::swap(a[i], a[j]);
        std::swap(u[i], u[j]);
    }
    void row_add(int dst, int src, const Int& c) {  // row dst += c * row src
        for (std::size_t l = 0; l < a[dst].size(); ++l) a[dst][l] += c * a[src][l];
        for (std::size_t l = 0; l < u[dst].size(); ++l) u[dst][l] += c * u[src][l];
    }
    void row_negate(int i) {
        for (auto& x : a[i]) x = -x;
        for (auto& x : u[i]) x = -x;
    }
    void col_swap(int i, int j) {
        for (auto& row : a) std::swap(row[i], row[j]);
        for (auto& row : v) std::swap(row[i], row[j]);
    }
    void col_add(int dst, int src, const Int& c) {  // col dst += c * col src
        for (auto& row : a) row[dst] += c * row[src];
        for (auto& row : v) row[dst] += c * row[src];
    }
    void col_negate(int i) {
        for (auto& row : a) row[i] = -row[i];
        for (auto& row : v) row[i] = -row[i];
    }
};

}  // namespace

SmithResult smith_normal_form(const Mat& a0) {
    const int rows = static_cast<int>(a0.size());
    const int cols = rows ? static_cast<int>(a0[0].size()) : 0;
    SnfWork w{a0, identity_matrix(rows), identity_matrix(cols)};

    const int limit = std::min(rows, cols);
    int t = 0;
    for (; t < limit; ++t) {
        // Find a nonzero pivot in the remaining block.
        int pi = -1, pj = -1;
        for (int i = t; i < rows && pi < 0; ++i)
            for (int j = t; j < cols; ++j)
                if (w.a[i][j] != 0) {
                    pi = i;
                    pj = j;
                    break;
                }
        if (pi < 0) break;  // remaining block is zero
        if (pi != t) w.row_swap(pi, t);
        if (pj != t) w.col_swap(pj, t);

        // Clear row t and column t (Euclidean reduction until clean).
        bool dirty = true;
        while (dirty) {
            dirty = false;
            for (int i = t + 1; i < rows; ++i) {
                if (w.a[i][t] == 0) continue;
                const Int q = w.a[i][t] / w.a[t][t];
                w.row_add(i, t, -q);
                if (w.a[i][t] != 0) {
                    w.row_swap(i, t);
                    dirty = true;
                }
            }
            for (int j = t + 1; j < cols; ++j) {
                if (w.a[t][j] == 0) continue;
                const Int q = w.a[t][j] / w.a[t][t];
                w.col_add(j, t, -q);
                if (w.a[t][j] != 0) {
                    w.col_swap(j, t);
                    dirty = true;
                }
            }
        }
        if (w.a[t][t] < 0) w.row_negate(t);

        // Enforce divisibility of later entries: if some a[i][j] (i,j > t) is
        // not divisible by the pivot, mix its row in and redo this step.
        bool redo = false;
        for (int i = t + 1; i < rows && !redo; ++i)
            for (int j = t + 1; j < cols; ++j)
                if (w.a[i][j] % w.a[t][t] != 0) {
                    w.row_add(t, i, 1);
                    redo = true;
                    break;
                }
        if (redo) --t;
    }
    SmithResult res;
    res.u = std::move(w.u);
    res.v = std::move(w.v);
    res.d = std::move(w.a);
    res.rank = 0;
    for (int i = 0; i < limit; ++i)
        if (res.d[i][i] != 0) ++res.rank;
    return res;
}

Mat unimodular_inverse(const Mat& m) {
    const int n = static_cast<int>(m.size());
    const Int d = det(m);
    if (d != 1 && d != -1) throw std::invalid_argument("unimodular_inverse: |det| != 1");
    // Adjugate via cofactors (matrices here are tiny).
    Mat inv(n, Vec(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Mat minor;
            minor.reserve(n - 1);
            for (int r = 0; r < n; ++r) {
                if (r == i) continue;
                Vec row;
                row.reserve(n - 1);
                for (int c = 0; c < n; ++c)
                    if (c != j) row.push_back(m[r][c]);
                minor.push_back(std::move(row));
            }
            Int cof = det(std::move(minor));
            if ((i + j) % 2 == 1) cof = -cof;
            inv[j][i] = cof / d;  // adjugate transposes indices
        }
    return inv;
}

SublatticeFrame SublatticeFrame::from_generators(const Mat& generators, int ambient_dim) {
    SublatticeFrame f;
    f.ambient_dim_ = ambient_dim;
    Mat gens = generators;
    if (gens.empty()) gens.push_back(Vec(ambient_dim, 0));
    const SmithResult snf = smith_normal_form(gens);
    f.rank_ = snf.rank;
    if (f.rank_ == ambient_dim) {
        // The saturation of a full-rank span is the whole lattice; use the
        // standard basis (the SNF transform can be badly skewed).
        f.basis_ = identity_matrix(ambient_dim);
        f.coord_map_ = identity_matrix(ambient_dim);
        return f;
    }
    const Mat vinv = unimodular_inverse(snf.v);
    f.basis_.assign(vinv.begin(), vinv.begin() + snf.rank);
    // coord_map_: ambient_dim x rank, the first `rank` columns of V.
    f.coord_map_.assign(ambient_dim, Vec(snf.rank));
    for (int i = 0; i < ambient_dim; ++i)
        for (int j = 0; j < snf.rank; ++j) f.coord_map_[i][j] = snf.v[i][j];
    // Membership is tested by reconstructing from coords.
    return f;
}

std::optional<Vec> SublatticeFrame::to_coords(const Vec& ambient) const {
    Vec c = row_times_mat(ambient, coord_map_);
    // Verify span membership by reconstruction.
    if (from_coords(c) != ambient) return std::nullopt;
    return c;
}

Vec SublatticeFrame::from_coords(const Vec& coords) const {
    assert(static_cast<int>(coords.size()) == rank_);
    Vec v(ambient_dim_, 0);
    for (int i = 0; i < rank_; ++i)
        for (int j = 0; j < ambient_dim_; ++j) v[j] += coords[i] * basis_[i][j];
    return v;
}

Vec SublatticeFrame::lift_covector(const Vec& frame_covector) const {
    assert(static_cast<int>(frame_covector.size()) == rank_);
    Vec a(ambient_dim_, 0);
    for (int j = 0; j < ambient_dim_; ++j)
        for (int k = 0; k < rank_; ++k) a[j] += coord_map_[j][k] * frame_covector[k];
    return make_primitive(a);
}

Vec SublatticeFrame::covector_pullback(const Vec& frame_covector) const {
    assert(static_cast<int>(frame_covector.size()) == rank_);
    Vec a(ambient_dim_, 0);
    for (int j = 0; j < ambient_dim_; ++j)
        for (int k = 0; k < rank_; ++k) a[j] += coord_map_[j][k] * frame_covector[k];
    return a;
}

Vec corank_one_kernel(const Mat& rows, int d) {
    // Select d-1 independent rows greedily.
    Mat sel;
    for (const Vec& r : rows) {
        Mat trial = sel;
        trial.push_back(r);
        if (rank(trial) > static_cast<int>(sel.size())) sel = std::move(trial);
        if (static_cast<int>(sel.size()) == d - 1) break;
    }
    if (static_cast<int>(sel.size()) != d - 1)
        throw std::invalid_argument("corank_one_kernel: rows do not have corank 1");
    Vec u(d);
    for (int j = 0; j < d; ++j) {
        Mat minor;
        minor.reserve(d - 1);
        for (const Vec& r : sel) {
            Vec row;
            row.reserve(d - 1);
            for (int c = 0; c < d; ++c)
                if (c != j) row.push_back(r[c]);
            minor.push_back(std::move(row));
        }
        Int m = det(std::move(minor));
        if (j % 2 == 1) m = -m;
        u[j] = m;
    }
    u = make_primitive(u);
    for (const Vec& r : rows)
        if (dot(r, u) != 0) throw std::invalid_argument("corank_one_kernel: not a kernel vector");
    return u;
}

Int binomial(const Int& a, const Int& b) {
    if (b < 0 || a < 0 || b > a) return 0;
    Int num = 1, den = 1;
    const Int k = (b * 2 > a) ? a - b : b;
    for (Int i = 0; i < k; ++i) {
        num *= (a - i);
        den *= (i + 1);
    }
    return num / den;
}

}  // namespace minf
