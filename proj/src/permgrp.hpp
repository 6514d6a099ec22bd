#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "matgf.hpp"

namespace ffgroup {

/// Permutation of {0, ..., N-1}. Point i stands for the nonzero vector whose
/// index value is i + 1 (index values run over [1, q^n - 1], the zero vector is
/// never a point).
struct Perm {
    std::vector<std::uint32_t> img;

    static Perm identity(std::size_t n);
    std::size_t size() const { return img.size(); }
    std::uint32_t operator[](std::uint32_t x) const { return img[x]; }
    bool is_identity() const;
    bool operator==(const Perm& o) const { return img == o.img; }
};

/// (a * b)(x) = a(b(x)): apply b first, matching left matrix action.
Perm compose(const Perm& a, const Perm& b);
Perm inverse(const Perm& a);

/// Little-endian base-q digits of the index value (1-based); digit i is
/// coordinate i+1 of the vector.
std::vector<Elem> point_to_vector(std::uint64_t value, const FieldPtr& ctx, unsigned n);
std::uint64_t vector_to_point(const std::vector<Elem>& v, const FieldPtr& ctx);

/// Number of points q^n - 1, after checking q^n against the budget.
std::uint64_t point_count(const FieldPtr& ctx, unsigned n, std::uint64_t point_budget);

/// Faithful action of an invertible matrix on the nonzero vectors.
Perm matrix_to_perm(const Mat& a, std::uint64_t point_budget = kDefaultPointBudget);

/// Recovers the matrix from its permutation via the images of the basis points.
Mat perm_to_matrix(const Perm& p, const FieldPtr& ctx, unsigned n);

/// |GL_n(q)| = prod_{i<n} (q^n - q^i).
Bigint gl_order(unsigned n, std::uint64_t q);

/// Transvection E_12(1), the canonical primitive companion, and (for q > 2) a
/// diagonal matrix with one primitive entry. Known generating set of GL_n(q)
/// used by sanity checks and full-group scans.
std::vector<Mat> standard_generators(const FieldPtr& ctx, unsigned n,
                                     std::uint64_t point_budget = kDefaultPointBudget);

/// Base and strong generating set built by a deterministic (non-randomized)
/// Schreier-Sims run; base points are chosen greedily as the least point moved
/// at each level. When an order bound is supplied (the order of an ambient
/// group known to contain the generators), construction stops as soon as the
/// product of transversal sizes reaches the bound: at that moment the product
/// is both a lower bound for the group order and equal to an upper bound, so
/// the chain is complete and the order exact.
class BSGS {
public:
    explicit BSGS(const std::vector<Perm>& gens);
    BSGS(const std::vector<Perm>& gens, const Bigint& order_bound);

    const Bigint& order() const { return order_; }
    std::vector<std::uint64_t> transversal_sizes() const;
    std::vector<std::uint32_t> base() const;
    bool contains(const Perm& p) const;
    void for_each_element(const std::function<void(const Perm&)>& fn) const;

private:
    struct Level {
        std::uint32_t base_point;
        std::vector<std::uint32_t> orbit;           // discovery order; orbit[0] = base
        std::vector<std::int32_t> pos;              // point -> orbit index or -1
        std::vector<Perm> trans;                    // trans[i] maps base -> orbit[i]
        std::vector<Perm> trans_inv;
        std::vector<std::size_t> progress;          // per global generator: points scanned
    };

    void build(const std::vector<Perm>& gens, const Bigint* bound);
    bool insert(Perm h);  // sift and add the residue; true if the chain grew
    void add_orbit_point(Level& lv, std::uint32_t y, const Perm& via, std::size_t from_idx);
    std::pair<Perm, std::size_t> strip(Perm g, std::size_t from) const;
    Bigint current_product() const;

    std::size_t n_points_ = 0;
    std::vector<Level> levels_;
    std::vector<Perm> gens_;
    std::vector<std::size_t> tags_;  // deepest level whose prefix of base points the gen fixes
    Bigint order_ = 1;
};

/// Exact order of the group generated by the given permutations.
Bigint group_order(const std::vector<Perm>& gens);

/// As group_order, with a known ambient order used as an early-out certificate.
Bigint group_order_bounded(const std::vector<Perm>& gens, const Bigint& order_bound);

/// Full element list by breadth-first multiplication; nullopt once the closure
/// exceeds cap. Independent correctness oracle for group_order.
std::optional<std::vector<Perm>> closure_oracle(const std::vector<Perm>& gens, std::size_t cap);

}  // namespace ffgroup
