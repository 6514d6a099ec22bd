#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "poly.hpp"
#include "textio.hpp"

using namespace ffgroup;

namespace {

// Independent irreducibility oracle: trial division by every monic polynomial
// of degree 1 .. deg(f)/2.
bool brute_irreducible(const Poly& f) {
    const auto ctx = f.ctx();
    const unsigned n = static_cast<unsigned>(f.degree());
    for (unsigned d = 1; 2 * d <= n; ++d) {
        std::uint64_t total = 1;
        for (unsigned i = 0; i < d; ++i) total *= ctx->q();
        for (std::uint64_t code = 0; code < total; ++code) {
            std::vector<Elem> c(d + 1, 0);
            std::uint64_t v = code;
            for (unsigned i = 0; i < d; ++i) {
                c[i] = static_cast<Elem>(v % ctx->q());
                v /= ctx->q();
            }
            c[d] = 1;
            if (rem(f, Poly(ctx, c)).is_zero()) return false;
        }
    }
    return true;
}

std::uint64_t phi_u64(std::uint64_t m) {
    std::uint64_t out = m;
    for (std::uint64_t d = 2; d * d <= m; ++d) {
        if (m % d) continue;
        out -= out / d;
        while (m % d == 0) m /= d;
    }
    if (m > 1) out -= out / m;
    return out;
}

Poly P(const FieldPtr& ctx, const std::string& s) { return parse_poly(ctx, s); }

}  // namespace

TEST_CASE("arithmetic examples over F_2") {
    auto f2 = Field::make(2, 1);
    CHECK((P(f2, "X+1") * P(f2, "X+1")) == P(f2, "X^2+1"));
    CHECK(gcd(P(f2, "X^2+1"), P(f2, "X+1")) == P(f2, "X+1"));
    CHECK(rem(P(f2, "X^2"), P(f2, "X^2+X+1")) == P(f2, "X+1"));
}

TEST_CASE("divmod and gcd invariants") {
    auto f3 = Field::make(3, 1);
    const Poly u = P(f3, "X^4+2X^2+X+1");
    const Poly v = P(f3, "X^2+2");
    const auto [q, r] = divmod(u, v);
    CHECK(q * v + r == u);
    CHECK(r.degree() < v.degree());
    CHECK_THROWS_AS(divmod(u, Poly::zero(f3)), Error);

    const Poly g = gcd(u * v, v);
    CHECK(g.is_monic());
    CHECK(rem(v, g).is_zero());

    const Poly l = lcm(u, v);
    CHECK(rem(l, u).is_zero());
    CHECK(rem(l, v).is_zero());
    CHECK(l * gcd(u, v) == (u * v).monic());  // u, v monic here
    CHECK(gcd(u, v) == parse_poly(f3, "X+1"));
}

TEST_CASE("irreducibility examples") {
    auto f2 = Field::make(2, 1);
    auto f3 = Field::make(3, 1);
    CHECK(is_irreducible(P(f2, "X^2+X+1")));
    CHECK_FALSE(is_irreducible(P(f2, "X^2+1")));  // (X+1)^2
    CHECK(is_irreducible(P(f3, "X^2+1")));
    CHECK_THROWS_AS(is_irreducible(Poly::constant(f2, 1)), Error);
}

TEST_CASE("irreducibility agrees with the brute-force oracle for q^n <= 256") {
    for (std::uint64_t q : {2ull, 3ull, 4ull, 5ull, 7ull, 8ull, 9ull, 16ull}) {
        auto [p, k] = split_prime_power(q);
        auto ctx = Field::make(p, k);
        for (unsigned n = 1; n <= 8; ++n) {
            std::uint64_t pts = 1;
            bool fits = true;
            for (unsigned i = 0; i < n && fits; ++i) {
                pts *= q;
                if (pts > 256) fits = false;
            }
            if (!fits) continue;
            std::uint64_t total = 1;
            for (unsigned i = 0; i < n; ++i) total *= q;
            for (std::uint64_t code = 0; code < total; ++code) {
                std::vector<Elem> c(n + 1, 0);
                std::uint64_t v = code;
                for (unsigned i = 0; i < n; ++i) {
                    c[i] = static_cast<Elem>(v % q);
                    v /= q;
                }
                c[n] = 1;
                const Poly f(ctx, c);
                CHECK(is_irreducible(f) == brute_irreducible(f));
            }
        }
    }
}

TEST_CASE("primitivity examples") {
    auto f2 = Field::make(2, 1);
    auto f3 = Field::make(3, 1);
    CHECK(is_primitive_poly(P(f2, "X^2+X+1")));
    CHECK_FALSE(is_primitive_poly(P(f3, "X^2+1")));  // root order 4, not 8
    CHECK(is_primitive_poly(P(f3, "X^2+X+2")));
    CHECK_THROWS_AS(is_primitive_poly(P(f3, "2X^2+1")), Error);   // not monic
    CHECK_THROWS_AS(is_primitive_poly(P(f3, "X^2+X")), Error);    // zero constant term
}

TEST_CASE("enumeration examples and ordering") {
    auto f2 = Field::make(2, 1);
    auto f3 = Field::make(3, 1);

    const auto p22 = enumerate_primitive(f2, 2);
    REQUIRE(p22.size() == 1);
    CHECK(poly_text(p22[0]) == "1,1,1");

    const auto p23 = enumerate_primitive(f2, 3);
    REQUIRE(p23.size() == 2);
    CHECK(poly_text(p23[0]) == "1,1,0,1");
    CHECK(poly_text(p23[1]) == "1,0,1,1");

    CHECK(enumerate_primitive(f3, 2).size() == 2);

    const auto nz22 = enumerate_nonzero_const(f2, 2);
    REQUIRE(nz22.size() == 2);
    CHECK(poly_text(nz22[0]) == "1,0,1");
    CHECK(poly_text(nz22[1]) == "1,1,1");
    CHECK(enumerate_nonzero_const(f3, 2).size() == 6);
    CHECK(enumerate_nonzero_const(f2, 3).size() == 4);

    CHECK_THROWS_AS(enumerate_primitive(f2, 13), Error);  // budget
}

TEST_CASE("enumeration invariants across the small grid") {
    for (std::uint64_t q : {2ull, 3ull, 4ull, 5ull, 7ull, 8ull, 9ull}) {
        auto [p, k] = split_prime_power(q);
        auto ctx = Field::make(p, k);
        for (unsigned n = 1; n <= 12; ++n) {
            Bigint pts = bigint_pow(q, n);
            if (pts > 4096) continue;
            const auto prim = enumerate_primitive(ctx, n);
            const auto nzc = enumerate_nonzero_const(ctx, n);

            // counts
            const std::uint64_t m = pts.convert_to<std::uint64_t>() - 1;
            CHECK(prim.size() == phi_u64(m) / n);
            Bigint expect_nzc = (Bigint(q) - 1) * bigint_pow(q, n - 1);
            CHECK(Bigint(nzc.size()) == expect_nzc);

            // ordering and membership
            for (std::size_t i = 1; i < nzc.size(); ++i) CHECK(nzc[i - 1].code() < nzc[i].code());
            std::size_t j = 0;
            for (const auto& f : prim) {
                CHECK(is_primitive_poly(f));
                CHECK(is_irreducible(f));
                CHECK(f.constant_term() != 0);
                while (j < nzc.size() && !(nzc[j] == f)) ++j;
                CHECK(j < nzc.size());  // primitive list is a sub-list of nonzero-const
            }
        }
    }
}

TEST_CASE("factor_integer examples") {
    using FV = std::vector<std::pair<Bigint, unsigned>>;
    CHECK(factor_integer(15) == FV{{3, 1}, {5, 1}});
    CHECK(factor_integer(63) == FV{{3, 2}, {7, 1}});
    CHECK(factor_integer(1) == FV{});
    CHECK(factor_integer(Bigint("36893488147419103232")) == FV{{2, 65}});
    CHECK(euler_phi(8) == 4);
    CHECK(euler_phi(1) == 1);
}
