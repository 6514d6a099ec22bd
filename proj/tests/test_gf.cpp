#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gf.hpp"

using namespace ffgroup;

namespace {

// Test-side brute force: order by successive powers.
std::uint64_t order_by_powers(const Field& f, Elem x) {
    Elem acc = x;
    std::uint64_t ord = 1;
    while (acc != 1) {
        acc = f.mul(acc, x);
        ++ord;
    }
    return ord;
}

// Test-side Euler phi by trial-division factorization.
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

const std::uint64_t kSmallPrimePowers[] = {2,  3,  4,  5,  7,  8,  9,  11, 13, 16, 17, 19,
                                           23, 25, 27, 29, 31, 32, 37, 41, 43, 47, 49, 53,
                                           59, 61, 64};

}  // namespace

TEST_CASE("prime field construction") {
    auto f2 = Field::make(2, 1);
    CHECK(f2->q() == 2);
    CHECK(f2->modulus().empty());
    CHECK_THROWS_AS(Field::make(6, 1), Error);
    CHECK_THROWS_AS(Field::make(1, 1), Error);
    CHECK_THROWS_AS(Field::make(2, 13), Error);  // 2^13 over the default budget
}

TEST_CASE("canonical modulus is the first irreducible in scan order") {
    // Only irreducible monic quadratic over F_2 is t^2 + t + 1.
    auto f4 = Field::make(2, 2);
    CHECK(f4->modulus() == std::vector<Elem>{1, 1, 1});

    // Over F_3 the scan passes t^2 (reducible) and lands on t^2 + 1.
    auto f9 = Field::make(3, 2);
    CHECK(f9->modulus() == std::vector<Elem>{1, 0, 1});

    // Cross-check against an exhaustive root/product test for degree 2: a monic
    // quadratic is reducible iff it has a root.
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull}) {
        auto fp = Field::make(p, 1);
        auto fext = Field::make(p, 2);
        bool seen_irreducible = false;
        for (std::uint64_t code = 0; code < p * p && !seen_irreducible; ++code) {
            const Elem a0 = static_cast<Elem>(code % p);
            const Elem a1 = static_cast<Elem>(code / p);
            bool has_root = false;
            for (Elem x = 0; x < p && !has_root; ++x)
                has_root = fp->add(fp->mul(x, x), fp->add(fp->mul(a1, x), a0)) == 0;
            if (!has_root) {
                CHECK(fext->modulus() == std::vector<Elem>{a0, a1, 1});
                seen_irreducible = true;
            }
        }
        CHECK(seen_irreducible);
    }
}

TEST_CASE("field caching is canonical") {
    CHECK(Field::make(3, 2).get() == Field::make(3, 2).get());
    CHECK(Field::make(3, 2).get() != Field::make(3, 1).get());
}

TEST_CASE("basic arithmetic examples") {
    auto f5 = Field::make(5, 1);
    CHECK(f5->add(3, 4) == 2);

    auto f4 = Field::make(2, 2);
    const Elem t = 2;  // residue class of the modulus variable
    CHECK(f4->mul(t, t) == 3);             // t^2 = t + 1
    CHECK(f4->inv(t) == 3);                // t (t+1) = 1
    CHECK(f4->mul(t, f4->inv(t)) == 1);
    CHECK_THROWS_AS(f4->inv(0), Error);
    CHECK_THROWS_AS(f4->div(1, 0), Error);
}

TEST_CASE("pow and frobenius examples") {
    auto f5 = Field::make(5, 1);
    CHECK(f5->pow_u(2, 4) == 1);  // Fermat

    auto f4 = Field::make(2, 2);
    CHECK(f4->frobenius(2, 2) == 3);                    // t -> t^2 = t + 1
    CHECK(f4->frobenius(f4->frobenius(2, 2), 2) == 2);  // squared Frobenius is identity
    CHECK_THROWS_AS(f4->frobenius(2, 3), Error);
    CHECK_THROWS_AS(f4->frobenius(2, 8), Error);

    auto f8 = Field::make(2, 3);
    for (Elem x = 0; x < 8; ++x) CHECK(f8->frobenius(f8->frobenius(f8->frobenius(x, 2), 2), 2) == x);
}

TEST_CASE("multiplicative order and primitivity examples") {
    auto f5 = Field::make(5, 1);
    CHECK(f5->multiplicative_order(1) == 1);
    CHECK(f5->multiplicative_order(2) == 4);
    CHECK(f5->is_primitive_element(2));
    CHECK_FALSE(f5->is_primitive_element(1));
    CHECK_THROWS_AS(f5->multiplicative_order(0), Error);

    auto f9 = Field::make(3, 2);
    const Elem t = 3;  // code of the residue class over F_3
    CHECK(f9->multiplicative_order(t) == 4);  // t^2 = -1
    CHECK_FALSE(f9->is_primitive_element(t));
}

TEST_CASE("field axioms, exhaustively for q <= 64") {
    for (std::uint64_t q : kSmallPrimePowers) {
        auto [p, k] = split_prime_power(q);
        auto f = Field::make(p, k);
        REQUIRE(f->q() == q);
        for (Elem x = 0; x < q; ++x) {
            CHECK(f->add(x, f->neg(x)) == 0);
            if (x != 0) CHECK(f->mul(x, f->inv(x)) == 1);
            for (Elem y = 0; y < q; ++y) {
                CHECK(f->add(x, y) == f->add(y, x));
                CHECK(f->mul(x, y) == f->mul(y, x));
            }
        }
        // associativity and distributivity on all triples for the smaller
        // fields, sampled stride for the largest to keep runtime sane
        const Elem stride = q > 32 ? 3 : 1;
        for (Elem x = 0; x < q; x += stride)
            for (Elem y = 0; y < q; ++y)
                for (Elem z = 0; z < q; ++z) {
                    CHECK(f->add(f->add(x, y), z) == f->add(x, f->add(y, z)));
                    CHECK(f->mul(f->mul(x, y), z) == f->mul(x, f->mul(y, z)));
                    CHECK(f->mul(x, f->add(y, z)) == f->add(f->mul(x, y), f->mul(x, z)));
                }
    }
}

TEST_CASE("frobenius is a field automorphism, exhaustively for q <= 64") {
    for (std::uint64_t q : kSmallPrimePowers) {
        auto [p, k] = split_prime_power(q);
        if (k == 1) continue;
        auto f = Field::make(p, k);
        for (Elem x = 0; x < q; ++x)
            for (Elem y = 0; y < q; ++y) {
                CHECK(f->frobenius(f->add(x, y), p) == f->add(f->frobenius(x, p), f->frobenius(y, p)));
                CHECK(f->frobenius(f->mul(x, y), p) == f->mul(f->frobenius(x, p), f->frobenius(y, p)));
            }
    }
}

TEST_CASE("primitive element count is phi(q - 1)") {
    for (std::uint64_t q : kSmallPrimePowers) {
        auto [p, k] = split_prime_power(q);
        auto f = Field::make(p, k);
        std::uint64_t count = 0;
        for (Elem x = 1; x < q; ++x) {
            CHECK((q - 1) % f->multiplicative_order(x) == 0);
            CHECK(f->multiplicative_order(x) == order_by_powers(*f, x));
            if (f->is_primitive_element(x)) ++count;
        }
        CHECK(count == phi_u64(q - 1));
    }
}

TEST_CASE("element encoding round-trips") {
    auto f27 = Field::make(3, 3);
    for (Elem x = 0; x < 27; ++x) {
        const auto digits = f27->decompose(x);
        CHECK(digits.size() == 3);
        CHECK(f27->compose(digits) == x);
    }
    CHECK(f27->descriptor() == "3^3");
    CHECK(Field::make(7, 1)->descriptor() == "7");
}
