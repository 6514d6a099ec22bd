#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <unordered_set>
#include <utility>
#include <vector>

#include "permgrp.hpp"

namespace ffgroup {

/// Coordinate frame for W = K^a over F = F_q, where K = F_{q^d} is realized as
/// the flattened field F_{p^{kd}}. The ordered F-basis of W is alpha^j e_i with
/// index (i-1)d + j (1 <= i <= a, 0 <= j < d), where alpha is the least-code
/// root in K of the canonical primitive degree-d polynomial over F. With that
/// power basis the embedding of multiplication-by-alpha is literally the
/// companion matrix of the defining polynomial.
class ExtensionFrame {
public:
    static ExtensionFrame make(FieldPtr base, unsigned a, unsigned d,
                               std::uint64_t point_budget = kDefaultPointBudget);

    const FieldPtr& base() const { return base_; }
    const FieldPtr& ext() const { return ext_; }
    unsigned a() const { return a_; }
    unsigned d() const { return d_; }
    unsigned n() const { return a_ * d_; }

    /// Canonical primitive degree-d polynomial over the base field; alpha is
    /// its least-code root in ext.
    const Poly& defining_poly() const { return f_; }
    Elem alpha() const { return alpha_; }

    /// Embedding of the base field into ext (identifies the Frobenius-fixed
    /// subfield).
    Elem embed_scalar(Elem base_elem) const;

    /// Coordinates of an ext element in the F-basis {1, alpha, ..., alpha^{d-1}}.
    std::vector<Elem> coords(Elem ext_elem) const;

    /// d x d base-field matrix of multiplication-by-beta on K.
    Mat mult_matrix(Elem beta) const;

private:
    ExtensionFrame() = default;

    FieldPtr base_;
    FieldPtr ext_;
    unsigned a_ = 0, d_ = 0;
    Poly f_{nullptr};
    Elem alpha_ = 0;
    std::vector<Elem> alpha_pow_;   // alpha^j, j < d
    std::vector<Elem> iota_pow_;    // images of the base power basis in ext
    Mat basis_inv_{nullptr, 0};     // inverse of the F_p basis matrix, over F_p
    FieldPtr prime_;
};

/// F-matrix of the K-linear map v -> Mv on W = K^a; block (i, i') is the
/// multiplication matrix of M[i, i']. M must be invertible over ext.
Mat embed_linear(const ExtensionFrame& frame, const Mat& m_over_ext);

/// F-matrix of the componentwise q-power map on W: block-diagonal with a
/// identical d x d blocks.
Mat frobenius_matrix(const ExtensionFrame& frame);

/// Canonical Singer pair: the first primitive degree-n polynomial and its
/// companion matrix, a cyclic generator of order q^n - 1.
std::pair<Poly, Mat> singer_generator(const FieldPtr& ctx, unsigned n,
                                      std::uint64_t point_budget = kDefaultPointBudget);

/// All elements of GL_a(K) by brute-force invertibility filter, code order.
/// Supported for a <= 2.
std::vector<Mat> enumerate_gl(const FieldPtr& ctx, unsigned a);

/// The standard field-extension subgroup E of degree d in GL_{ad}(q): the
/// image of the semilinear group of K^a under the frame basis map. Membership
/// is decided through the normalizer of the embedded scalar group Z = <z>,
/// which the frame materializes once.
class StandardExtSubgroup {
public:
    explicit StandardExtSubgroup(ExtensionFrame frame);

    const ExtensionFrame& frame() const { return frame_; }
    const Mat& z() const { return z_; }
    const Mat& frob() const { return frob_; }

    /// True iff m normalizes Z, i.e. m z m^{-1} is a power of z.
    bool contains(const Mat& m) const;

    /// |E| = d * |GL_a(q^d)|.
    Bigint order() const;

    /// Full element list embed(M) frob^j, M over GL_a(K) in code order, j minor.
    /// Needs a <= 2.
    std::vector<Mat> elements() const;

    /// Streaming variant of elements(); fn(element, is_identity).
    void for_each_element(const std::function<void(const Mat&, bool)>& fn) const;

private:
    struct EntriesHash {
        std::size_t operator()(const std::vector<Elem>& v) const {
            std::size_t h = 1469598103934665603ull;
            for (Elem e : v) {
                h ^= e;
                h *= 1099511628211ull;
            }
            return h;
        }
    };

    ExtensionFrame frame_;
    Mat z_;
    Mat frob_;
    std::unordered_set<std::vector<Elem>, EntriesHash> zpow_set_;
};

bool in_standard_ext_subgroup(const StandardExtSubgroup& e, const Mat& m);
Bigint ext_subgroup_order(const StandardExtSubgroup& e);

}  // namespace ffgroup
