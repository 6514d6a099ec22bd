#include "matgf.hpp"

#include <algorithm>

namespace ffgroup {

Mat Mat::identity(FieldPtr ctx, unsigned n) {
    Mat m(std::move(ctx), n);
    for (unsigned i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

bool Mat::is_identity() const {
    for (unsigned i = 0; i < n_; ++i)
        for (unsigned j = 0; j < n_; ++j)
            if (at(i, j) != (i == j ? 1u : 0u)) return false;
    return true;
}

namespace {

void require_compatible(const Mat& a, const Mat& b) {
    require_same_field(a.ctx(), b.ctx());
    if (a.dim() != b.dim()) fail(Errc::DimensionMismatch, "matrix dimensions differ");
}

}  // namespace

Mat operator*(const Mat& a, const Mat& b) {
    require_compatible(a, b);
    const auto& f = *a.ctx();
    const unsigned n = a.dim();
    Mat r(a.ctx(), n);
    for (unsigned i = 0; i < n; ++i) {
        for (unsigned k = 0; k < n; ++k) {
            const Elem aik = a.at(i, k);
            if (aik == 0) continue;
            for (unsigned j = 0; j < n; ++j) {
                const Elem bkj = b.at(k, j);
                if (bkj == 0) continue;
                r.at(i, j) = f.add(r.at(i, j), f.mul(aik, bkj));
            }
        }
    }
    return r;
}

Mat operator+(const Mat& a, const Mat& b) {
    require_compatible(a, b);
    const auto& f = *a.ctx();
    Mat r(a.ctx(), a.dim());
    for (unsigned i = 0; i < a.dim(); ++i)
        for (unsigned j = 0; j < a.dim(); ++j) r.at(i, j) = f.add(a.at(i, j), b.at(i, j));
    return r;
}

Mat operator-(const Mat& a, const Mat& b) {
    require_compatible(a, b);
    const auto& f = *a.ctx();
    Mat r(a.ctx(), a.dim());
    for (unsigned i = 0; i < a.dim(); ++i)
        for (unsigned j = 0; j < a.dim(); ++j) r.at(i, j) = f.sub(a.at(i, j), b.at(i, j));
    return r;
}

Mat companion(const Poly& f) {
    if (f.is_zero()) fail(Errc::ZeroPolynomial, "companion of the zero polynomial");
    if (f.degree() < 1) fail(Errc::DegreeZero, "companion needs degree >= 1");
    const Poly g = f.monic();
    const auto& fld = *g.ctx();
    const unsigned n = static_cast<unsigned>(g.degree());
    Mat m(g.ctx(), n);
    for (unsigned i = 0; i + 1 < n; ++i) m.at(i + 1, i) = 1;
    for (unsigned i = 0; i < n; ++i) m.at(i, n - 1) = fld.neg(g.coeff(i));
    return m;
}

std::vector<Elem> Mat::apply(const std::vector<Elem>& v) const {
    const auto& f = *ctx_;
    std::vector<Elem> out(n_, 0);
    for (unsigned j = 0; j < n_; ++j) {
        const Elem vj = v[j];
        if (vj == 0) continue;
        for (unsigned i = 0; i < n_; ++i) {
            const Elem aij = at(i, j);
            if (aij == 0) continue;
            out[i] = f.add(out[i], f.mul(aij, vj));
        }
    }
    return out;
}

Elem det(const Mat& a) {
    const auto& f = *a.ctx();
    const unsigned n = a.dim();
    Mat m = a;
    Elem d = 1;
    for (unsigned col = 0; col < n; ++col) {
        unsigned pivot = col;
        while (pivot < n && m.at(pivot, col) == 0) ++pivot;
        if (pivot == n) return 0;
        if (pivot != col) {
            for (unsigned j = 0; j < n; ++j) std::swap(m.at(pivot, j), m.at(col, j));
            d = f.neg(d);
        }
        const Elem pv = m.at(col, col);
        d = f.mul(d, pv);
        const Elem pv_inv = f.inv(pv);
        for (unsigned i = col + 1; i < n; ++i) {
            const Elem c = f.mul(m.at(i, col), pv_inv);
            if (c == 0) continue;
            for (unsigned j = col; j < n; ++j)
                m.at(i, j) = f.sub(m.at(i, j), f.mul(c, m.at(col, j)));
        }
    }
    return d;
}

Mat inverse(const Mat& a) {
    const auto& f = *a.ctx();
    const unsigned n = a.dim();
    Mat m = a;
    Mat inv = Mat::identity(a.ctx(), n);
    for (unsigned col = 0; col < n; ++col) {
        unsigned pivot = col;
        while (pivot < n && m.at(pivot, col) == 0) ++pivot;
        if (pivot == n) fail(Errc::SingularMatrix, "matrix is singular");
        if (pivot != col)
            for (unsigned j = 0; j < n; ++j) {
                std::swap(m.at(pivot, j), m.at(col, j));
                std::swap(inv.at(pivot, j), inv.at(col, j));
            }
        const Elem pv_inv = f.inv(m.at(col, col));
        for (unsigned j = 0; j < n; ++j) {
            m.at(col, j) = f.mul(m.at(col, j), pv_inv);
            inv.at(col, j) = f.mul(inv.at(col, j), pv_inv);
        }
        for (unsigned i = 0; i < n; ++i) {
            if (i == col) continue;
            const Elem c = m.at(i, col);
            if (c == 0) continue;
            for (unsigned j = 0; j < n; ++j) {
                m.at(i, j) = f.sub(m.at(i, j), f.mul(c, m.at(col, j)));
                inv.at(i, j) = f.sub(inv.at(i, j), f.mul(c, inv.at(col, j)));
            }
        }
    }
    return inv;
}

unsigned rank(Mat m) {
    const auto& f = *m.ctx();
    const unsigned n = m.dim();
    unsigned r = 0;
    for (unsigned col = 0; col < n && r < n; ++col) {
        unsigned pivot = r;
        while (pivot < n && m.at(pivot, col) == 0) ++pivot;
        if (pivot == n) continue;
        if (pivot != r)
            for (unsigned j = 0; j < n; ++j) std::swap(m.at(pivot, j), m.at(r, j));
        const Elem pv_inv = f.inv(m.at(r, col));
        for (unsigned i = r + 1; i < n; ++i) {
            const Elem c = f.mul(m.at(i, col), pv_inv);
            if (c == 0) continue;
            for (unsigned j = col; j < n; ++j)
                m.at(i, j) = f.sub(m.at(i, j), f.mul(c, m.at(r, j)));
        }
        ++r;
    }
    return r;
}

Mat mat_pow(Mat a, Bigint e) {
    Mat r = Mat::identity(a.ctx(), a.dim());
    while (e > 0) {
        if ((e & 1) != 0) r = r * a;
        a = a * a;
        e >>= 1;
    }
    return r;
}

namespace {

// Characteristic polynomial of an upper Hessenberg matrix by the standard
// column recurrence on det(xI - H).
Poly hessenberg_charpoly(Mat h) {
    const auto ctx = h.ctx();
    const auto& f = *ctx;
    const unsigned n = h.dim();
    std::vector<Poly> p;
    p.reserve(n + 1);
    p.push_back(Poly::constant(ctx, 1));
    const Poly x = Poly::x(ctx);
    for (unsigned m = 1; m <= n; ++m) {
        Poly cur = (x - Poly::constant(ctx, h.at(m - 1, m - 1))) * p[m - 1];
        Elem beta = 1;
        for (unsigned i = 1; i < m; ++i) {
            beta = f.mul(beta, h.at(m - i, m - i - 1));
            const Elem c = f.mul(h.at(m - 1 - i, m - 1), beta);
            if (c != 0) cur = cur - Poly::constant(ctx, c) * p[m - 1 - i];
        }
        p.push_back(std::move(cur));
    }
    return p[n];
}

Poly charpoly(const Mat& a) {
    const auto& f = *a.ctx();
    const unsigned n = a.dim();
    Mat h = a;
    // Similarity reduction to Hessenberg form; exact over the field.
    for (unsigned col = 0; col + 2 < n; ++col) {
        unsigned pivot = col + 1;
        while (pivot < n && h.at(pivot, col) == 0) ++pivot;
        if (pivot == n) continue;
        if (pivot != col + 1) {
            for (unsigned j = 0; j < n; ++j) std::swap(h.at(pivot, j), h.at(col + 1, j));
            for (unsigned i = 0; i < n; ++i) std::swap(h.at(i, pivot), h.at(i, col + 1));
        }
        const Elem pv_inv = f.inv(h.at(col + 1, col));
        for (unsigned i = col + 2; i < n; ++i) {
            const Elem c = f.mul(h.at(i, col), pv_inv);
            if (c == 0) continue;
            for (unsigned j = 0; j < n; ++j) h.at(i, j) = f.sub(h.at(i, j), f.mul(c, h.at(col + 1, j)));
            for (unsigned r = 0; r < n; ++r) h.at(r, col + 1) = f.add(h.at(r, col + 1), f.mul(c, h.at(r, i)));
        }
    }
    return hessenberg_charpoly(std::move(h));
}

// Least-degree monic relation on the Krylov iterates of v under a.
Poly krylov_minpoly(const Mat& a, std::vector<Elem> v) {
    const auto ctx = a.ctx();
    const auto& f = *ctx;
    const unsigned n = a.dim();
    // Reduced rows with bookkeeping of the combination that produced them.
    struct Row {
        std::vector<Elem> vec;
        std::vector<Elem> comb;  // coefficients over v, Av, A^2 v, ...
        unsigned pivot;
    };
    std::vector<Row> rows;
    std::vector<Elem> cur = std::move(v);
    for (unsigned step = 0;; ++step) {
        std::vector<Elem> w = cur;
        std::vector<Elem> comb(step + 1, 0);
        comb[step] = 1;
        for (const Row& r : rows) {
            const Elem c = w[r.pivot];
            if (c == 0) continue;
            for (unsigned j = 0; j < n; ++j) w[j] = f.sub(w[j], f.mul(c, r.vec[j]));
            for (unsigned j = 0; j < r.comb.size(); ++j)
                comb[j] = f.sub(comb[j], f.mul(c, r.comb[j]));
        }
        unsigned pivot = 0;
        while (pivot < n && w[pivot] == 0) ++pivot;
        if (pivot == n) return Poly(ctx, std::move(comb));  // relation found; leading 1
        const Elem s = f.inv(w[pivot]);
        for (unsigned j = 0; j < n; ++j) w[j] = f.mul(w[j], s);
        for (auto& c : comb) c = f.mul(c, s);
        rows.push_back(Row{std::move(w), std::move(comb), pivot});
        cur = a.apply(cur);
    }
}

}  // namespace

std::pair<Poly, Poly> min_char_poly(const Mat& a) {
    const auto ctx = a.ctx();
    const unsigned n = a.dim();
    Poly minimal = Poly::constant(ctx, 1);
    for (unsigned i = 0; i < n; ++i) {
        std::vector<Elem> e(n, 0);
        e[i] = 1;
        minimal = lcm(minimal, krylov_minpoly(a, std::move(e)));
        if (minimal.degree() == static_cast<int>(n)) break;
    }
    Poly characteristic =
        minimal.degree() == static_cast<int>(n) ? minimal : charpoly(a);
    return {std::move(minimal), std::move(characteristic)};
}

namespace {

// Prime factorization of |GL_n(q)| assembled from the small factors of p and
// each q^i - 1.
std::vector<std::pair<Bigint, unsigned>> gl_order_factorization(unsigned n, const Field& fld) {
    std::vector<std::pair<Bigint, unsigned>> acc;
    auto merge = [&](const Bigint& prime, unsigned e) {
        for (auto& [r, re] : acc)
            if (r == prime) {
                re += e;
                return;
            }
        acc.emplace_back(prime, e);
    };
    merge(fld.p(), fld.k() * n * (n - 1) / 2);
    for (unsigned i = 1; i <= n; ++i) {
        Bigint m = bigint_pow(fld.q(), i) - 1;
        for (const auto& [r, e] : factor_integer(m)) merge(r, e);
    }
    std::sort(acc.begin(), acc.end());
    return acc;
}

}  // namespace

std::uint64_t matrix_order(const Mat& a) {
    if (det(a) == 0) fail(Errc::SingularMatrix, "order of a singular matrix");
    const unsigned n = a.dim();
    const Field& fld = *a.ctx();

    Bigint gl = 1;
    const Bigint qn = bigint_pow(fld.q(), n);
    for (unsigned i = 0; i < n; ++i) gl *= qn - bigint_pow(fld.q(), i);

    if (gl <= 65536) {
        Mat m = a;
        std::uint64_t ord = 1;
        while (!m.is_identity()) {
            m = m * a;
            ++ord;
        }
        return ord;
    }

    Bigint m = gl;
    const Mat id = Mat::identity(a.ctx(), n);
    for (const auto& [r, e] : gl_order_factorization(n, fld)) {
        for (unsigned i = 0; i < e; ++i) {
            if (m % r != 0) break;
            if (mat_pow(a, m / r) == id)
                m /= r;
            else
                break;
        }
    }
    return m.convert_to<std::uint64_t>();
}

std::uint64_t fixed_point_count(const Mat& a) {
    const unsigned n = a.dim();
    Mat d = a - Mat::identity(a.ctx(), n);
    const unsigned r = rank(std::move(d));
    std::uint64_t out = 1;
    for (unsigned i = 0; i < n - r; ++i) out *= a.ctx()->q();
    return out;
}

}  // namespace ffgroup
