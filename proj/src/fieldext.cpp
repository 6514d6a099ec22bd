#include "fieldext.hpp"

#include <algorithm>

namespace ffgroup {

ExtensionFrame ExtensionFrame::make(FieldPtr base, unsigned a, unsigned d,
                                    std::uint64_t point_budget) {
    if (a < 1 || d < 1) fail(Errc::InvalidArgument, "frame needs a >= 1 and d >= 1");
    ExtensionFrame fr;
    fr.base_ = base;
    fr.a_ = a;
    fr.d_ = d;
    fr.prime_ = Field::make(base->p(), 1, point_budget);
    fr.ext_ = Field::make(base->p(), base->k() * d, point_budget);
    const Field& K = *fr.ext_;

    // Embedding of the base field: the least-code root in K of the base modulus.
    const unsigned k = base->k();
    fr.iota_pow_.assign(k, 0);
    fr.iota_pow_[0] = 1;
    if (k > 1) {
        Elem root = 0;
        bool found = false;
        for (std::uint64_t c = 0; c < K.q() && !found; ++c) {
            Elem acc = 0;
            for (std::size_t i = base->modulus().size(); i-- > 0;)
                acc = K.add(K.mul(acc, static_cast<Elem>(c)), base->modulus()[i]);
            if (acc == 0) {
                root = static_cast<Elem>(c);
                found = true;
            }
        }
        if (!found) fail(Errc::FrameMismatch, "base modulus has no root in the extension");
        for (unsigned i = 1; i < k; ++i) fr.iota_pow_[i] = K.mul(fr.iota_pow_[i - 1], root);
    }

    // alpha: least-code root of the canonical primitive degree-d polynomial,
    // with coefficients carried into K through the embedding.
    fr.f_ = enumerate_primitive(base, d, point_budget).front();
    std::vector<Elem> fc(fr.f_.coeffs().size());
    for (std::size_t i = 0; i < fc.size(); ++i) fc[i] = fr.embed_scalar(fr.f_.coeff(i));
    {
        bool found = false;
        for (std::uint64_t c = 0; c < K.q() && !found; ++c) {
            Elem acc = 0;
            for (std::size_t i = fc.size(); i-- > 0;)
                acc = K.add(K.mul(acc, static_cast<Elem>(c)), fc[i]);
            if (acc == 0) {
                fr.alpha_ = static_cast<Elem>(c);
                found = true;
            }
        }
        if (!found) fail(Errc::FrameMismatch, "primitive polynomial has no root in the extension");
    }
    fr.alpha_pow_.assign(d, 1);
    for (unsigned j = 1; j < d; ++j) fr.alpha_pow_[j] = K.mul(fr.alpha_pow_[j - 1], fr.alpha_);

    // F_p basis matrix with columns the digit vectors of iota(s^i) alpha^j;
    // its invertibility is the independence check for the frame basis.
    const unsigned kd = k * d;
    Mat basis(fr.prime_, kd);
    for (unsigned j = 0; j < d; ++j)
        for (unsigned i = 0; i < k; ++i) {
            const Elem w = K.mul(fr.iota_pow_[i], fr.alpha_pow_[j]);
            const auto digits = K.decompose(w);
            for (unsigned r = 0; r < kd; ++r) basis.at(r, j * k + i) = digits[r];
        }
    fr.basis_inv_ = inverse(basis);
    return fr;
}

Elem ExtensionFrame::embed_scalar(Elem base_elem) const {
    if (base_->k() == 1) return base_elem;
    const Field& K = *ext_;
    const auto digits = base_->decompose(base_elem);
    Elem acc = 0;
    for (unsigned i = 0; i < base_->k(); ++i)
        acc = K.add(acc, K.mul(digits[i], iota_pow_[i]));
    return acc;
}

std::vector<Elem> ExtensionFrame::coords(Elem ext_elem) const {
    const unsigned k = base_->k();
    const unsigned kd = k * d_;
    const auto digits = ext_->decompose(ext_elem);
    const Field& P = *prime_;
    std::vector<Elem> lambda(kd, 0);
    for (unsigned r = 0; r < kd; ++r) {
        Elem acc = 0;
        for (unsigned c = 0; c < kd; ++c)
            acc = P.add(acc, P.mul(basis_inv_.at(r, c), digits[c]));
        lambda[r] = acc;
    }
    std::vector<Elem> out(d_);
    for (unsigned j = 0; j < d_; ++j) {
        std::vector<Elem> chunk(lambda.begin() + j * k, lambda.begin() + (j + 1) * k);
        out[j] = base_->compose(chunk);
    }
    return out;
}

Mat ExtensionFrame::mult_matrix(Elem beta) const {
    Mat m(base_, d_);
    for (unsigned j = 0; j < d_; ++j) {
        const auto col = coords(ext_->mul(beta, alpha_pow_[j]));
        for (unsigned i = 0; i < d_; ++i) m.at(i, j) = col[i];
    }
    return m;
}

Mat embed_linear(const ExtensionFrame& frame, const Mat& m_over_ext) {
    if (m_over_ext.ctx().get() != frame.ext().get())
        fail(Errc::FrameMismatch, "matrix is not over the frame extension field");
    if (m_over_ext.dim() != frame.a())
        fail(Errc::DimensionMismatch, "matrix dimension does not match the frame");
    if (det(m_over_ext) == 0) fail(Errc::SingularMatrix, "embedding of a singular map");
    const unsigned a = frame.a(), d = frame.d();
    Mat out(frame.base(), a * d);
    for (unsigned bi = 0; bi < a; ++bi)
        for (unsigned bj = 0; bj < a; ++bj) {
            const Elem entry = m_over_ext.at(bi, bj);
            if (entry == 0) continue;
            const Mat blk = frame.mult_matrix(entry);
            for (unsigned i = 0; i < d; ++i)
                for (unsigned j = 0; j < d; ++j) out.at(bi * d + i, bj * d + j) = blk.at(i, j);
        }
    return out;
}

Mat frobenius_matrix(const ExtensionFrame& frame) {
    const unsigned a = frame.a(), d = frame.d();
    const Field& K = *frame.ext();
    Mat blk(frame.base(), d);
    for (unsigned j = 0; j < d; ++j) {
        const auto col = frame.coords(K.pow_u(frame.alpha(), std::uint64_t(j) * frame.base()->q()));
        for (unsigned i = 0; i < d; ++i) blk.at(i, j) = col[i];
    }
    Mat out(frame.base(), a * d);
    for (unsigned b = 0; b < a; ++b)
        for (unsigned i = 0; i < d; ++i)
            for (unsigned j = 0; j < d; ++j) out.at(b * d + i, b * d + j) = blk.at(i, j);
    return out;
}

std::pair<Poly, Mat> singer_generator(const FieldPtr& ctx, unsigned n, std::uint64_t point_budget) {
    Poly f = enumerate_primitive(ctx, n, point_budget).front();
    Mat s = companion(f);
    return {std::move(f), std::move(s)};
}

std::vector<Mat> enumerate_gl(const FieldPtr& ctx, unsigned a) {
    if (a < 1 || a > 2)
        fail(Errc::InvalidArgument, "brute-force GL enumeration supports a <= 2");
    std::vector<Mat> out;
    const std::uint64_t q = ctx->q();
    if (a == 1) {
        out.reserve(q - 1);
        for (std::uint64_t c = 1; c < q; ++c) {
            Mat m(ctx, 1);
            m.at(0, 0) = static_cast<Elem>(c);
            out.push_back(std::move(m));
        }
        return out;
    }
    const Bigint total = bigint_pow(q, 4);
    if (total > (1u << 27))
        fail(Errc::BudgetExceeded, "GL_2(" + std::to_string(q) + ") scan too large");
    const std::uint64_t limit = total.convert_to<std::uint64_t>();
    for (std::uint64_t code = 0; code < limit; ++code) {
        std::uint64_t c = code;
        Mat m(ctx, 2);
        m.at(0, 0) = static_cast<Elem>(c % q);
        c /= q;
        m.at(0, 1) = static_cast<Elem>(c % q);
        c /= q;
        m.at(1, 0) = static_cast<Elem>(c % q);
        c /= q;
        m.at(1, 1) = static_cast<Elem>(c % q);
        if (det(m) != 0) out.push_back(std::move(m));
    }
    return out;
}

StandardExtSubgroup::StandardExtSubgroup(ExtensionFrame frame)
    : frame_(std::move(frame)),
      z_(frame_.base(), frame_.n()),
      frob_(frobenius_matrix(frame_)) {
    Mat scalar(frame_.ext(), frame_.a());
    for (unsigned i = 0; i < frame_.a(); ++i) scalar.at(i, i) = frame_.alpha();
    z_ = embed_linear(frame_, scalar);

    Mat p = Mat::identity(frame_.base(), frame_.n());
    const Bigint zord = bigint_pow(frame_.base()->q(), frame_.d()) - 1;
    for (Bigint i = 0; i < zord; ++i) {
        p = p * z_;
        zpow_set_.insert(p.entries());
    }
}

bool StandardExtSubgroup::contains(const Mat& m) const {
    if (m.ctx().get() != frame_.base().get())
        fail(Errc::FrameMismatch, "matrix is not over the frame base field");
    if (m.dim() != frame_.n()) fail(Errc::DimensionMismatch, "dimension mismatch");
    const Mat conj = m * z_ * inverse(m);
    return zpow_set_.count(conj.entries()) > 0;
}

Bigint StandardExtSubgroup::order() const {
    return Bigint(frame_.d()) * gl_order(frame_.a(), bigint_pow(frame_.base()->q(), frame_.d())
                                                         .convert_to<std::uint64_t>());
}

std::vector<Mat> StandardExtSubgroup::elements() const {
    std::vector<Mat> out;
    for_each_element([&](const Mat& m, bool) { out.push_back(m); });
    return out;
}

void StandardExtSubgroup::for_each_element(const std::function<void(const Mat&, bool)>& fn) const {
    const auto gl = enumerate_gl(frame_.ext(), frame_.a());
    std::vector<Mat> frob_pow;
    frob_pow.push_back(Mat::identity(frame_.base(), frame_.n()));
    for (unsigned j = 1; j < frame_.d(); ++j) frob_pow.push_back(frob_pow.back() * frob_);
    for (const Mat& m : gl) {
        const Mat emb = embed_linear(frame_, m);
        const bool emb_is_id = emb.is_identity();
        for (unsigned j = 0; j < frame_.d(); ++j)
            fn(j == 0 ? emb : emb * frob_pow[j], emb_is_id && j == 0);
    }
}

bool in_standard_ext_subgroup(const StandardExtSubgroup& e, const Mat& m) {
    if (det(m) == 0) fail(Errc::SingularMatrix, "membership of a singular matrix");
    return e.contains(m);
}

Bigint ext_subgroup_order(const StandardExtSubgroup& e) { return e.order(); }

}  // namespace ffgroup
