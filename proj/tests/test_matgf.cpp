#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>
#include <random>

#include "matgf.hpp"
#include "textio.hpp"

using namespace ffgroup;

namespace {

Poly P(const FieldPtr& ctx, const std::string& s) { return parse_poly(ctx, s); }

Mat M(const FieldPtr& ctx, unsigned n, const std::string& s) { return parse_mat(ctx, n, s); }

// Independent characteristic-polynomial oracle: cofactor expansion of
// det(xI - A) over the polynomial ring, fine for small n.
Poly brute_charpoly(const Mat& a) {
    const auto ctx = a.ctx();
    const unsigned n = a.dim();
    std::vector<std::vector<Poly>> m(n, std::vector<Poly>(n, Poly::zero(ctx)));
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j) {
            std::vector<Elem> c{ctx->neg(a.at(i, j))};
            if (i == j) c.push_back(1);
            m[i][j] = Poly(ctx, c);
        }
    std::function<Poly(std::vector<std::vector<Poly>>)> det_rec =
        [&](std::vector<std::vector<Poly>> mm) -> Poly {
        const std::size_t k = mm.size();
        if (k == 1) return mm[0][0];
        Poly acc = Poly::zero(ctx);
        for (std::size_t r = 0; r < k; ++r) {
            std::vector<std::vector<Poly>> minor;
            for (std::size_t i = 0; i < k; ++i) {
                if (i == r) continue;
                std::vector<Poly> row(mm[i].begin() + 1, mm[i].end());
                minor.push_back(std::move(row));
            }
            Poly term = mm[r][0] * det_rec(minor);
            if (r % 2 == 1) term = Poly::zero(ctx) - term;
            acc = acc + term;
        }
        return acc;
    };
    return det_rec(m);
}

Mat random_invertible(const FieldPtr& ctx, unsigned n, std::mt19937& rng) {
    std::uniform_int_distribution<std::uint32_t> dist(0, static_cast<std::uint32_t>(ctx->q() - 1));
    while (true) {
        Mat m(ctx, n);
        for (unsigned i = 0; i < n; ++i)
            for (unsigned j = 0; j < n; ++j) m.at(i, j) = dist(rng);
        if (det(m) != 0) return m;
    }
}

}  // namespace

TEST_CASE("companion matrix examples") {
    auto f2 = Field::make(2, 1);
    CHECK(companion(P(f2, "X^2+X+1")) == M(f2, 2, "0 1\n1 1"));

    auto f3 = Field::make(3, 1);
    CHECK(companion(P(f3, "X^2-1")) == M(f3, 2, "0 1\n1 0"));

    auto f5 = Field::make(5, 1);
    CHECK(companion(P(f5, "X-3")) == M(f5, 1, "3"));

    // non-monic input is normalized first
    CHECK(companion(P(f3, "2X^2+2X+2")) == companion(P(f3, "X^2+X+1")));

    CHECK_THROWS_AS(companion(Poly::zero(f2)), Error);
    CHECK_THROWS_AS(companion(Poly::constant(f2, 1)), Error);
}

TEST_CASE("matrix arithmetic examples") {
    auto f2 = Field::make(2, 1);
    const Mat c = M(f2, 2, "0 1\n1 1");
    CHECK(inverse(c) == M(f2, 2, "1 1\n1 0"));
    CHECK(c * c == M(f2, 2, "1 1\n1 0"));
    CHECK(det(Mat::identity(f2, 3)) == 1);
    CHECK(inverse(c) * c == Mat::identity(f2, 2));

    CHECK_THROWS_AS(inverse(M(f2, 2, "1 1\n1 1")), Error);
    auto f3 = Field::make(3, 1);
    CHECK_THROWS_AS(c * Mat::identity(f3, 2), Error);
    CHECK_THROWS_AS(c * Mat::identity(f2, 3), Error);
}

TEST_CASE("min/char polynomial examples") {
    auto f2 = Field::make(2, 1);
    const auto [m1, c1] = min_char_poly(companion(P(f2, "X^2+X+1")));
    CHECK(m1 == P(f2, "X^2+X+1"));
    CHECK(c1 == P(f2, "X^2+X+1"));

    const auto [m2, c2] = min_char_poly(Mat::identity(f2, 2));
    CHECK(m2 == P(f2, "X+1"));
    CHECK(c2 == P(f2, "X^2+1"));

    const auto [m3, c3] = min_char_poly(M(f2, 2, "0 1\n1 0"));
    CHECK(m3 == P(f2, "X^2+1"));
    CHECK(c3 == P(f2, "X^2+1"));
}

TEST_CASE("characteristic polynomial agrees with cofactor expansion") {
    std::mt19937 rng(20240817);
    for (std::uint64_t q : {2ull, 3ull, 4ull, 5ull}) {
        auto [p, k] = split_prime_power(q);
        auto ctx = Field::make(p, k);
        for (unsigned n = 1; n <= 4; ++n) {
            for (int rep = 0; rep < 25; ++rep) {
                std::uniform_int_distribution<std::uint32_t> dist(
                    0, static_cast<std::uint32_t>(q - 1));
                Mat a(ctx, n);
                for (unsigned i = 0; i < n; ++i)
                    for (unsigned j = 0; j < n; ++j) a.at(i, j) = dist(rng);
                const auto [minimal, characteristic] = min_char_poly(a);
                CHECK(characteristic == brute_charpoly(a));
                // minimal divides characteristic and annihilates a
                CHECK(rem(characteristic, minimal).is_zero());
                Mat acc(ctx, n);
                for (int d = minimal.degree(); d >= 0; --d)
                    acc = acc * a + [&] {
                        Mat s(ctx, n);
                        for (unsigned i = 0; i < n; ++i)
                            s.at(i, i) = minimal.coeff(static_cast<std::size_t>(d));
                        return s;
                    }();
                for (unsigned i = 0; i < n; ++i)
                    for (unsigned j = 0; j < n; ++j) CHECK(acc.at(i, j) == 0);
            }
        }
    }
}

TEST_CASE("companion round-trip, exhaustively for q^n <= 256") {
    for (std::uint64_t q : {2ull, 3ull, 4ull, 5ull, 7ull, 8ull, 9ull, 16ull}) {
        auto [p, k] = split_prime_power(q);
        auto ctx = Field::make(p, k);
        for (unsigned n = 1; n <= 8; ++n) {
            if (bigint_pow(q, n) > 256) continue;
            for (const Poly& f : enumerate_nonzero_const(ctx, n)) {
                const Mat c = companion(f);
                const auto [minimal, characteristic] = min_char_poly(c);
                CHECK(minimal == f);
                CHECK(characteristic == f);
                // det(C_f) = (-1)^n a_0
                Elem expected = f.constant_term();
                if (n % 2 == 1) expected = ctx->neg(expected);
                CHECK(det(c) == expected);
            }
        }
    }
}

TEST_CASE("conjugation invariance of min/char polynomials") {
    std::mt19937 rng(987654321);
    for (std::uint64_t q : {2ull, 3ull, 4ull}) {
        auto [p, k] = split_prime_power(q);
        auto ctx = Field::make(p, k);
        const unsigned n = 3;
        const auto fs = enumerate_nonzero_const(ctx, n);
        const Poly& f = fs[fs.size() / 2];
        const Mat c = companion(f);
        for (int rep = 0; rep < 100; ++rep) {
            const Mat m = random_invertible(ctx, n, rng);
            const auto [minimal, characteristic] = min_char_poly(m * c * inverse(m));
            CHECK(minimal == f);
            CHECK(characteristic == f);
        }
    }
}

TEST_CASE("matrix order examples") {
    auto f2 = Field::make(2, 1);
    CHECK(matrix_order(Mat::identity(f2, 3)) == 1);
    CHECK(matrix_order(companion(P(f2, "X^2+X+1"))) == 3);
    CHECK(matrix_order(M(f2, 2, "0 1\n1 0")) == 2);
    CHECK_THROWS_AS(matrix_order(M(f2, 2, "1 1\n1 1")), Error);

    // above the brute-iteration threshold: |GL_8(2)| > 2^16
    auto f28 = Field::make(2, 1);
    const Mat big = companion(enumerate_primitive(f28, 8).front());
    CHECK(matrix_order(big) == 255);
}

TEST_CASE("matrix order iff primitive, exhaustively for q^n <= 1024") {
    for (std::uint64_t q : {2ull, 3ull, 4ull, 5ull}) {
        auto [p, k] = split_prime_power(q);
        auto ctx = Field::make(p, k);
        for (unsigned n = 2; n <= 10; ++n) {
            Bigint pts = bigint_pow(q, n);
            if (pts > 1024) continue;
            const std::uint64_t full = pts.convert_to<std::uint64_t>() - 1;
            for (const Poly& f : enumerate_nonzero_const(ctx, n))
                CHECK((matrix_order(companion(f)) == full) == is_primitive_poly(f));
        }
    }
}

TEST_CASE("fixed point count examples") {
    auto f2 = Field::make(2, 1);
    CHECK(fixed_point_count(Mat::identity(f2, 2)) == 4);

    // C_f^{-1} C_g for f = X^2+X+1, g = X^2+1 is a transvection fixing q^{n-1}
    const Mat t = inverse(companion(P(f2, "X^2+X+1"))) * companion(P(f2, "X^2+1"));
    CHECK(t == M(f2, 2, "1 1\n0 1"));
    CHECK(fixed_point_count(t) == 2);

    auto f5 = Field::make(5, 1);
    Mat scalar(f5, 3);
    for (unsigned i = 0; i < 3; ++i) scalar.at(i, i) = 2;
    CHECK(fixed_point_count(scalar) == 1);
}

TEST_CASE("two-companion fixed points meet the bound, exhaustively for q^n <= 256") {
    for (std::uint64_t q : {2ull, 3ull, 4ull, 5ull}) {
        auto [p, k] = split_prime_power(q);
        auto ctx = Field::make(p, k);
        for (unsigned n = 2; n <= 8; ++n) {
            Bigint pts = bigint_pow(q, n);
            if (pts > 256) continue;
            std::uint64_t bound = 1;
            for (unsigned i = 0; i + 1 < n; ++i) bound *= q;
            const auto gs = enumerate_nonzero_const(ctx, n);
            for (std::size_t i = 0; i < gs.size(); ++i)
                for (std::size_t j = 0; j < gs.size(); ++j) {
                    if (i == j) continue;
                    const Mat t = inverse(companion(gs[i])) * companion(gs[j]);
                    CHECK(fixed_point_count(t) >= bound);
                }
        }
    }
}
