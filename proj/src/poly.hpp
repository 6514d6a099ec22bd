#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "gf.hpp"

namespace ffgroup {

/// Polynomial over a field context, coefficients low-degree-first with a
/// nonzero leading entry; the zero polynomial has no coefficients.
class Poly {
public:
    explicit Poly(FieldPtr ctx) : ctx_(std::move(ctx)) {}
    Poly(FieldPtr ctx, std::vector<Elem> coeffs);

    static Poly zero(FieldPtr ctx) { return Poly(std::move(ctx)); }
    static Poly constant(FieldPtr ctx, Elem c);
    static Poly x(FieldPtr ctx);

    const FieldPtr& ctx() const { return ctx_; }
    const std::vector<Elem>& coeffs() const { return c_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }
    Elem coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
    Elem leading() const { return c_.empty() ? 0 : c_.back(); }
    Elem constant_term() const { return coeff(0); }

    Elem eval(Elem x) const;
    Poly monic() const;

    /// Coefficient vector read as an ascending base-q integer; total order used
    /// by every enumeration and report.
    std::uint64_t code() const;

    bool operator==(const Poly& o) const { return ctx_.get() == o.ctx_.get() && c_ == o.c_; }

private:
    FieldPtr ctx_;
    std::vector<Elem> c_;
};

Poly operator+(const Poly& u, const Poly& v);
Poly operator-(const Poly& u, const Poly& v);
Poly operator*(const Poly& u, const Poly& v);

/// Quotient and remainder; v must be nonzero.
std::pair<Poly, Poly> divmod(const Poly& u, const Poly& v);
Poly rem(const Poly& u, const Poly& v);

/// Monic gcd (gcd(0, 0) = 0).
Poly gcd(Poly u, Poly v);
Poly lcm(const Poly& u, const Poly& v);

Poly powmod(const Poly& base, Bigint e, const Poly& mod);

/// Rabin criterion: x^{q^n} = x mod f and gcd(x^{q^{n/r}} - x, f) = 1 for each
/// prime r dividing n = deg f.
bool is_irreducible(const Poly& f);

/// True iff f is irreducible of degree n and x mod f has multiplicative order
/// q^n - 1, decided by factoring q^n - 1 and stripping primes.
bool is_primitive_poly(const Poly& f);

/// All monic primitive polynomials of degree n, ascending by code.
std::vector<Poly> enumerate_primitive(const FieldPtr& ctx, unsigned n,
                                      std::uint64_t point_budget = kDefaultPointBudget);

/// All monic degree-n polynomials with nonzero constant term, ascending by code.
std::vector<Poly> enumerate_nonzero_const(const FieldPtr& ctx, unsigned n,
                                          std::uint64_t point_budget = kDefaultPointBudget);

/// Prime factorization by trial division, ascending primes; 1 -> {}.
std::vector<std::pair<Bigint, unsigned>> factor_integer(Bigint m);

/// Euler phi from a factorization of m.
Bigint euler_phi(const Bigint& m);

}  // namespace ffgroup
