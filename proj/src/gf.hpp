#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "bigint.hpp"
#include "error.hpp"

namespace ffgroup {

/// Field element, encoded as the base-p integer of its coordinate vector in the
/// power basis of the field modulus (plain residue for prime fields). Codes run
/// over [0, q).
using Elem = std::uint32_t;

inline constexpr std::uint64_t kDefaultPointBudget = 4096;
inline constexpr std::uint64_t kDefaultScanBudget = 25000;

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/// A finite field F_{p^k}. Construction is canonical: for k > 1 the modulus is
/// the first monic irreducible of degree k over F_p in ascending base-p code
/// order, so make(p, k) yields the same field on every run and platform.
/// Instances are cached and immutable; all operations are pure.
class Field {
public:
    static FieldPtr make(std::uint64_t p, unsigned k,
                         std::uint64_t point_budget = kDefaultPointBudget);

    std::uint64_t p() const { return p_; }
    unsigned k() const { return k_; }
    std::uint64_t q() const { return q_; }

    /// Modulus coefficients over F_p, low-degree-first, k+1 entries; empty for k == 1.
    const std::vector<Elem>& modulus() const { return modulus_; }

    /// "p" for prime fields, "p^k" otherwise.
    std::string descriptor() const;

    Elem add(Elem a, Elem b) const;
    Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
    Elem neg(Elem a) const { return neg_[a]; }
    Elem mul(Elem a, Elem b) const {
        if (a == 0 || b == 0) return 0;
        return exp_[log_[a] + log_[b]];
    }
    Elem inv(Elem a) const {
        if (a == 0) fail(Errc::DivisionByZero, "inverse of zero");
        return exp_[q_ - 1 - log_[a]];
    }
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

    Elem pow(Elem a, const Bigint& e) const;
    Elem pow_u(Elem a, std::uint64_t e) const;

    /// x -> x^{q0} for q0 = p^j with j | k: a power of the Frobenius automorphism.
    Elem frobenius(Elem a, std::uint64_t subfield_order) const;

    /// Least m >= 1 with a^m = 1, by factoring q-1 and stripping primes.
    std::uint64_t multiplicative_order(Elem a) const;

    bool is_primitive_element(Elem a) const {
        if (a == 0) fail(Errc::ZeroElement, "primitivity of zero");
        return multiplicative_order(a) == q_ - 1;
    }

    /// Canonical generator of the unit group: the least code of full order.
    Elem generator() const { return gen_; }

    /// Prime factorization of q - 1, cached.
    const std::vector<std::pair<std::uint64_t, unsigned>>& unit_order_factors() const {
        return unit_factors_;
    }

    /// Coordinates of a in the power basis: k residues mod p, low-degree-first.
    std::vector<Elem> decompose(Elem a) const;
    Elem compose(const std::vector<Elem>& digits) const;

    Field(const Field&) = delete;
    Field& operator=(const Field&) = delete;

private:
    Field() = default;
    void build_tables();

    std::uint64_t p_ = 0;
    unsigned k_ = 0;
    std::uint64_t q_ = 0;
    std::vector<Elem> modulus_;

    Elem gen_ = 0;
    std::vector<Elem> exp_;   // exp_[i] = gen^i, doubled so log sums need no reduction
    std::vector<Elem> log_;   // defined for codes 1..q-1
    std::vector<Elem> neg_;
    std::vector<Elem> add_;   // q*q table for small extension fields, else empty
    std::vector<std::pair<std::uint64_t, unsigned>> unit_factors_;
};

/// Checks that two operands belong to the same field context.
inline void require_same_field(const FieldPtr& a, const FieldPtr& b) {
    if (a.get() != b.get())
        fail(Errc::MixedFields, "operands from different field contexts");
}

/// Splits q into (p, k) with p prime; throws NotPrimePower otherwise.
std::pair<std::uint64_t, unsigned> split_prime_power(std::uint64_t q);

/// make_field on a prime-power order: make(p, k) for q = p^k.
FieldPtr make_field_q(std::uint64_t q, std::uint64_t point_budget = kDefaultPointBudget);

}  // namespace ffgroup
