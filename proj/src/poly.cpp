#include "poly.hpp"

#include <algorithm>

namespace ffgroup {

Poly::Poly(FieldPtr ctx, std::vector<Elem> coeffs) : ctx_(std::move(ctx)), c_(std::move(coeffs)) {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly Poly::constant(FieldPtr ctx, Elem c) { return Poly(std::move(ctx), {c}); }

Poly Poly::x(FieldPtr ctx) { return Poly(std::move(ctx), {0, 1}); }

Elem Poly::eval(Elem x) const {
    Elem acc = 0;
    for (std::size_t i = c_.size(); i-- > 0;) acc = ctx_->add(ctx_->mul(acc, x), c_[i]);
    return acc;
}

Poly Poly::monic() const {
    if (is_zero()) fail(Errc::ZeroPolynomial, "cannot normalize the zero polynomial");
    if (is_monic()) return *this;
    Elem s = ctx_->inv(leading());
    std::vector<Elem> out(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) out[i] = ctx_->mul(c_[i], s);
    return Poly(ctx_, std::move(out));
}

std::uint64_t Poly::code() const {
    std::uint64_t out = 0;
    for (std::size_t i = c_.size(); i-- > 0;) out = out * ctx_->q() + c_[i];
    return out;
}

Poly operator+(const Poly& u, const Poly& v) {
    require_same_field(u.ctx(), v.ctx());
    const auto& f = *u.ctx();
    std::vector<Elem> out(std::max(u.coeffs().size(), v.coeffs().size()), 0);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = f.add(u.coeff(i), v.coeff(i));
    return Poly(u.ctx(), std::move(out));
}

Poly operator-(const Poly& u, const Poly& v) {
    require_same_field(u.ctx(), v.ctx());
    const auto& f = *u.ctx();
    std::vector<Elem> out(std::max(u.coeffs().size(), v.coeffs().size()), 0);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = f.sub(u.coeff(i), v.coeff(i));
    return Poly(u.ctx(), std::move(out));
}

Poly operator*(const Poly& u, const Poly& v) {
    require_same_field(u.ctx(), v.ctx());
    if (u.is_zero() || v.is_zero()) return Poly::zero(u.ctx());
    const auto& f = *u.ctx();
    std::vector<Elem> out(u.coeffs().size() + v.coeffs().size() - 1, 0);
    for (std::size_t i = 0; i < u.coeffs().size(); ++i) {
        if (u.coeff(i) == 0) continue;
        for (std::size_t j = 0; j < v.coeffs().size(); ++j)
            out[i + j] = f.add(out[i + j], f.mul(u.coeff(i), v.coeff(j)));
    }
    return Poly(u.ctx(), std::move(out));
}

std::pair<Poly, Poly> divmod(const Poly& u, const Poly& v) {
    require_same_field(u.ctx(), v.ctx());
    if (v.is_zero()) fail(Errc::DivisionByZero, "polynomial division by zero");
    const auto& f = *u.ctx();
    std::vector<Elem> r(u.coeffs());
    const int dv = v.degree();
    if (static_cast<int>(r.size()) - 1 < dv) return {Poly::zero(u.ctx()), u};
    std::vector<Elem> q(r.size() - dv, 0);
    const Elem lead_inv = f.inv(v.leading());
    for (std::size_t i = r.size(); static_cast<int>(i) - 1 >= dv; --i) {
        Elem c = f.mul(r[i - 1], lead_inv);
        if (c != 0) {
            q[i - 1 - dv] = c;
            for (int j = 0; j <= dv; ++j)
                r[i - 1 - dv + j] = f.sub(r[i - 1 - dv + j], f.mul(c, v.coeff(j)));
        }
        r.pop_back();
    }
    return {Poly(u.ctx(), std::move(q)), Poly(u.ctx(), std::move(r))};
}

Poly rem(const Poly& u, const Poly& v) { return divmod(u, v).second; }

Poly gcd(Poly u, Poly v) {
    require_same_field(u.ctx(), v.ctx());
    while (!v.is_zero()) {
        Poly r = rem(u, v);
        u = std::move(v);
        v = std::move(r);
    }
    if (u.is_zero()) return u;
    return u.monic();
}

Poly lcm(const Poly& u, const Poly& v) {
    if (u.is_zero() || v.is_zero()) return Poly::zero(u.ctx());
    Poly g = gcd(u, v);
    return divmod(u * v, g).first.monic();
}

Poly powmod(const Poly& base, Bigint e, const Poly& mod) {
    require_same_field(base.ctx(), mod.ctx());
    if (mod.is_zero()) fail(Errc::DivisionByZero, "powmod modulus is zero");
    Poly r = Poly::constant(base.ctx(), 1);
    Poly b = rem(base, mod);
    while (e > 0) {
        if ((e & 1) != 0) r = rem(r * b, mod);
        b = rem(b * b, mod);
        e >>= 1;
    }
    return r;
}

bool is_irreducible(const Poly& f) {
    if (f.degree() < 1) fail(Errc::ConstantPolynomial, "irreducibility needs degree >= 1");
    const unsigned n = static_cast<unsigned>(f.degree());
    if (n == 1) return true;
    const auto ctx = f.ctx();
    const Poly x = Poly::x(ctx);
    const std::uint64_t q = ctx->q();

    if (powmod(x, bigint_pow(q, n), f) != rem(x, f)) return false;

    unsigned m = n;
    auto check = [&](unsigned r) {
        Poly u = powmod(x, bigint_pow(q, n / r), f) - rem(x, f);
        Poly g = gcd(u, f);
        return g.degree() == 0;
    };
    for (unsigned r = 2; r * r <= m; ++r) {
        if (m % r) continue;
        while (m % r == 0) m /= r;
        if (!check(r)) return false;
    }
    if (m > 1 && !check(m)) return false;
    return true;
}

bool is_primitive_poly(const Poly& f) {
    if (f.degree() < 1) fail(Errc::ConstantPolynomial, "primitivity needs degree >= 1");
    if (!f.is_monic()) fail(Errc::NotMonic, "primitivity is defined for monic polynomials");
    if (f.constant_term() == 0) fail(Errc::ZeroConstantTerm, "f(0) = 0");
    if (!is_irreducible(f)) return false;

    const unsigned n = static_cast<unsigned>(f.degree());
    const Bigint m = bigint_pow(f.ctx()->q(), n) - 1;
    const Poly x = Poly::x(f.ctx());
    const Poly one = Poly::constant(f.ctx(), 1);
    for (const auto& [r, e] : factor_integer(m)) {
        (void)e;
        if (powmod(x, m / r, f) == one) return false;
    }
    return true;
}

namespace {

void check_point_budget(const FieldPtr& ctx, unsigned n, std::uint64_t budget) {
    if (n < 1) fail(Errc::InvalidArgument, "degree must be >= 1");
    if (bigint_pow(ctx->q(), n) > budget)
        fail(Errc::BudgetExceeded, "q^n exceeds point budget " + std::to_string(budget));
}

// Visits monic degree-n polynomials with nonzero constant term in code order.
template <typename Fn>
void scan_monic_nonzero_const(const FieldPtr& ctx, unsigned n, Fn&& fn) {
    const std::uint64_t q = ctx->q();
    std::uint64_t total = 1;
    for (unsigned i = 0; i < n; ++i) total *= q;
    std::vector<Elem> coeffs(n + 1, 0);
    coeffs[n] = 1;
    for (std::uint64_t low = 0; low < total; ++low) {
        if (low % q == 0) continue;  // constant term zero
        std::uint64_t c = low;
        for (unsigned i = 0; i < n; ++i) {
            coeffs[i] = static_cast<Elem>(c % q);
            c /= q;
        }
        fn(Poly(ctx, coeffs));
    }
}

}  // namespace

std::vector<Poly> enumerate_primitive(const FieldPtr& ctx, unsigned n, std::uint64_t budget) {
    check_point_budget(ctx, n, budget);
    std::vector<Poly> out;
    scan_monic_nonzero_const(ctx, n, [&](Poly f) {
        if (is_primitive_poly(f)) out.push_back(std::move(f));
    });
    return out;
}

std::vector<Poly> enumerate_nonzero_const(const FieldPtr& ctx, unsigned n, std::uint64_t budget) {
    check_point_budget(ctx, n, budget);
    std::vector<Poly> out;
    scan_monic_nonzero_const(ctx, n, [&](Poly f) { out.push_back(std::move(f)); });
    return out;
}

std::vector<std::pair<Bigint, unsigned>> factor_integer(Bigint m) {
    if (m < 1) fail(Errc::InvalidArgument, "factor_integer needs m >= 1");
    std::vector<std::pair<Bigint, unsigned>> out;
    for (Bigint d = 2; d * d <= m; ++d) {
        if (m % d != 0) continue;
        unsigned e = 0;
        while (m % d == 0) {
            m /= d;
            ++e;
        }
        out.emplace_back(d, e);
    }
    if (m > 1) out.emplace_back(m, 1);
    return out;
}

Bigint euler_phi(const Bigint& m) {
    Bigint phi = 1;
    for (const auto& [r, e] : factor_integer(m)) {
        Bigint pe = 1;
        for (unsigned i = 0; i + 1 < e; ++i) pe *= r;
        phi *= pe * (r - 1);
    }
    return phi;
}

}  // namespace ffgroup
