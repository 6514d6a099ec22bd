#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "poly.hpp"

namespace ffgroup {

/// Dense square matrix over a field context, row-major, acting on column
/// vectors from the left.
class Mat {
public:
    Mat(FieldPtr ctx, unsigned n) : ctx_(std::move(ctx)), n_(n), e_(std::size_t(n) * n, 0) {}

    static Mat identity(FieldPtr ctx, unsigned n);

    unsigned dim() const { return n_; }
    const FieldPtr& ctx() const { return ctx_; }

    Elem at(unsigned i, unsigned j) const { return e_[std::size_t(i) * n_ + j]; }
    Elem& at(unsigned i, unsigned j) { return e_[std::size_t(i) * n_ + j]; }
    const std::vector<Elem>& entries() const { return e_; }

    bool is_identity() const;

    /// Matrix-vector product (left action on column vectors).
    std::vector<Elem> apply(const std::vector<Elem>& v) const;

    bool operator==(const Mat& o) const {
        return ctx_.get() == o.ctx_.get() && n_ == o.n_ && e_ == o.e_;
    }

private:
    FieldPtr ctx_;
    unsigned n_;
    std::vector<Elem> e_;
};

Mat operator*(const Mat& a, const Mat& b);
Mat operator+(const Mat& a, const Mat& b);
Mat operator-(const Mat& a, const Mat& b);

/// Companion matrix of f, normalized to monic first: subdiagonal ones, last
/// column the negated low coefficients.
Mat companion(const Poly& f);

Elem det(const Mat& a);
Mat inverse(const Mat& a);
unsigned rank(Mat a);
Mat mat_pow(Mat a, Bigint e);

/// (minimal, characteristic) polynomial pair, both monic, computed exactly:
/// characteristic by Hessenberg reduction over the field, minimal as the lcm
/// of Krylov relations over the standard basis vectors.
std::pair<Poly, Poly> min_char_poly(const Mat& a);

/// Least m >= 1 with a^m = I. Brute iteration when |GL_n(q)| <= 2^16,
/// otherwise factor-stripping on |GL_n(q)|.
std::uint64_t matrix_order(const Mat& a);

/// Number of vectors fixed by a (zero vector included): q^{n - rank(a - I)}.
std::uint64_t fixed_point_count(const Mat& a);

}  // namespace ffgroup
