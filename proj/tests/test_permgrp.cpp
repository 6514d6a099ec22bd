#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "permgrp.hpp"
#include "textio.hpp"

using namespace ffgroup;

namespace {

Poly P(const FieldPtr& ctx, const std::string& s) { return parse_poly(ctx, s); }

// Brute-force count of invertible matrices, the gl_order oracle.
std::uint64_t brute_gl_count(const FieldPtr& ctx, unsigned n) {
    std::uint64_t total = 1;
    for (unsigned i = 0; i < n * n; ++i) total *= ctx->q();
    std::uint64_t count = 0;
    for (std::uint64_t code = 0; code < total; ++code) {
        Mat m(ctx, n);
        std::uint64_t c = code;
        for (unsigned i = 0; i < n; ++i)
            for (unsigned j = 0; j < n; ++j) {
                m.at(i, j) = static_cast<Elem>(c % ctx->q());
                c /= ctx->q();
            }
        if (det(m) != 0) ++count;
    }
    return count;
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

template <typename T>
void fisher_yates(std::vector<T>& v, std::mt19937& rng) {
    for (std::size_t i = v.size(); i > 1; --i) {
        std::uniform_int_distribution<std::size_t> dist(0, i - 1);
        std::swap(v[i - 1], v[dist(rng)]);
    }
}

}  // namespace

TEST_CASE("point/vector indexing") {
    auto f3 = Field::make(3, 1);
    CHECK(point_to_vector(1, f3, 2) == std::vector<Elem>{1, 0});
    CHECK(point_to_vector(5, f3, 2) == std::vector<Elem>{2, 1});
    for (std::uint64_t v = 1; v <= 8; ++v) CHECK(vector_to_point(point_to_vector(v, f3, 2), f3) == v);
    CHECK_THROWS_AS(point_count(f3, 9, kDefaultPointBudget), Error);
}

TEST_CASE("matrix_to_perm examples") {
    auto f2 = Field::make(2, 1);
    CHECK(matrix_to_perm(Mat::identity(f2, 2)).is_identity());

    const Perm c = matrix_to_perm(companion(P(f2, "X^2+X+1")));
    // a 3-cycle on the 3 nonzero vectors
    CHECK_FALSE(c.is_identity());
    CHECK_FALSE(compose(c, c).is_identity());
    CHECK(compose(c, compose(c, c)).is_identity());

    CHECK_THROWS_AS(matrix_to_perm(parse_mat(f2, 2, "1 1\n1 1")), Error);
}

TEST_CASE("matrix_to_perm is a faithful homomorphism") {
    std::mt19937 rng(424242);
    for (std::uint64_t q : {2ull, 3ull, 4ull}) {
        auto [p, k] = split_prime_power(q);
        auto ctx = Field::make(p, k);
        const unsigned n = q == 2 ? 3 : 2;
        for (int rep = 0; rep < 200; ++rep) {
            const Mat a = random_invertible(ctx, n, rng);
            const Mat b = random_invertible(ctx, n, rng);
            CHECK(matrix_to_perm(a * b) == compose(matrix_to_perm(a), matrix_to_perm(b)));
            if (!(a == b)) CHECK_FALSE(matrix_to_perm(a) == matrix_to_perm(b));
        }
    }
}

TEST_CASE("perm_to_matrix inverts matrix_to_perm") {
    std::mt19937 rng(777);
    auto f4 = Field::make(2, 2);
    for (int rep = 0; rep < 50; ++rep) {
        const Mat a = random_invertible(f4, 2, rng);
        CHECK(perm_to_matrix(matrix_to_perm(a), f4, 2) == a);
    }
}

TEST_CASE("group_order examples") {
    auto f2 = Field::make(2, 1);
    const Perm c3 = matrix_to_perm(companion(P(f2, "X^2+X+1")));
    CHECK(group_order({c3}) == 3);

    const Perm cg = matrix_to_perm(companion(P(f2, "X^2+1")));
    CHECK(group_order({c3, cg}) == 6);

    std::vector<Perm> gl32;
    for (const Mat& m : standard_generators(f2, 3)) gl32.push_back(matrix_to_perm(m));
    CHECK(group_order(gl32) == 168);

    CHECK_THROWS_AS(group_order({}), Error);
    CHECK(group_order({Perm::identity(5)}) == 1);
}

TEST_CASE("closure oracle examples") {
    auto f2 = Field::make(2, 1);
    CHECK(closure_oracle({Perm::identity(4)}, 10)->size() == 1);

    const Perm cf = matrix_to_perm(companion(P(f2, "X^2+X+1")));
    const Perm cg = matrix_to_perm(companion(P(f2, "X^2+1")));
    CHECK(closure_oracle({cf, cg}, 100)->size() == 6);

    auto f3 = Field::make(3, 1);
    std::vector<Perm> gl23;
    for (const Mat& m : standard_generators(f3, 2)) gl23.push_back(matrix_to_perm(m));
    CHECK_FALSE(closure_oracle(gl23, 10).has_value());  // order 48 overflows cap 10
    CHECK(closure_oracle(gl23, 48)->size() == 48);
}

TEST_CASE("gl_order examples and oracle") {
    CHECK(gl_order(2, 2) == 6);
    CHECK(gl_order(2, 3) == 48);
    CHECK(gl_order(1, 7) == 6);
    CHECK(gl_order(3, 3) == 11232);
    CHECK(gl_order(4, 2) == 20160);

    CHECK(gl_order(2, 2) == brute_gl_count(Field::make(2, 1), 2));
    CHECK(gl_order(2, 3) == brute_gl_count(Field::make(3, 1), 2));
    CHECK(gl_order(3, 2) == brute_gl_count(Field::make(2, 1), 3));
    CHECK(gl_order(2, 4) == brute_gl_count(Field::make(2, 2), 2));
}

TEST_CASE("standard generators span GL_n(q) on the sanity grid") {
    struct Case {
        unsigned n;
        std::uint64_t q;
    };
    for (const auto& [n, q] : {Case{2, 2}, Case{2, 3}, Case{3, 2}, Case{2, 4}, Case{2, 5}}) {
        auto [p, k] = split_prime_power(q);
        auto ctx = Field::make(p, k);
        std::vector<Perm> gens;
        for (const Mat& m : standard_generators(ctx, n)) gens.push_back(matrix_to_perm(m));
        CHECK(group_order(gens) == gl_order(n, q));
        CHECK(group_order_bounded(gens, gl_order(n, q)) == gl_order(n, q));
    }
}

TEST_CASE("group order does not depend on generator order") {
    auto f3 = Field::make(3, 1);
    std::vector<Perm> gens;
    for (const Mat& m : standard_generators(f3, 2)) gens.push_back(matrix_to_perm(m));
    const Bigint expected = group_order(gens);
    std::mt19937 rng(13);
    for (int rep = 0; rep < 20; ++rep) {
        fisher_yates(gens, rng);
        CHECK(group_order(gens) == expected);
    }
}

TEST_CASE("group_order agrees with closure cardinality on small subgroups") {
    auto f2 = Field::make(2, 1);
    auto f3 = Field::make(3, 1);
    std::mt19937 rng(555);
    for (const FieldPtr& ctx : {f2, f3}) {
        const unsigned n = 3;
        for (int rep = 0; rep < 10; ++rep) {
            const Perm a = matrix_to_perm(random_invertible(ctx, n, rng));
            const Perm b = matrix_to_perm(random_invertible(ctx, n, rng));
            const auto closed = closure_oracle({a, b}, 15000);
            if (!closed) continue;
            CHECK(group_order({a, b}) == closed->size());
        }
    }
}

TEST_CASE("BSGS structure invariants") {
    auto f2 = Field::make(2, 1);
    std::vector<Perm> gens;
    for (const Mat& m : standard_generators(f2, 3)) gens.push_back(matrix_to_perm(m));
    const BSGS chain(gens);
    CHECK(chain.order() == 168);

    Bigint prod = 1;
    for (std::uint64_t t : chain.transversal_sizes()) prod *= t;
    CHECK(prod == chain.order());
    CHECK(chain.base().size() == chain.transversal_sizes().size());

    // membership
    std::mt19937 rng(99);
    const Mat m = random_invertible(f2, 3, rng);
    CHECK(chain.contains(matrix_to_perm(m)));
    Perm outsider = Perm::identity(7);
    outsider.img = {1, 0, 2, 3, 4, 5, 6};  // swaps vectors e_1 and e_2's index... not linear
    CHECK_FALSE(chain.contains(outsider));

    // enumeration yields each element exactly once
    std::size_t count = 0;
    std::vector<Perm> seen;
    chain.for_each_element([&](const Perm& p) {
        ++count;
        for (const Perm& s : seen) CHECK_FALSE(s == p);
        if (seen.size() < 40) seen.push_back(p);
        CHECK(chain.contains(p));
    });
    CHECK(count == 168);
}
