#include <catch2/catch_amalgamated.hpp>

#include "endotype/linalg.hpp"
#include "endotype/rational.hpp"
#include "test_support.hpp"

using namespace endotype;

TEST_CASE("gaussian rational arithmetic is exact") {
    GaussianRational a(Rational(1, 3), Rational(2));
    GaussianRational b(Rational(-1, 2), Rational(1, 5));
    CHECK(a + b - b == a);
    CHECK(a * b == b * a);
    CHECK((a / b) * b == a);
    CHECK(a * a.conj() == GaussianRational(a.normSq()));
    CHECK(GaussianRational::i() * GaussianRational::i() == GaussianRational(-1));
    CHECK(a.pow(3) == a * a * a);
    CHECK_THROWS_AS(a / GaussianRational(0), std::domain_error);
}

TEST_CASE("parse and print round-trip on the query grammar") {
    for (const char* s : {"0", "3", "-3", "3/2", "-5/2", "1+1i", "-5/2-2i", "0+1i", "7/3-4/9i"}) {
        auto v = parseGaussianRational(s);
        REQUIRE(v.has_value());
        CHECK(toString(*v) == s);
    }
    CHECK(!parseGaussianRational("").has_value());
    CHECK(!parseGaussianRational("2i").has_value());   // real part is mandatory
    CHECK(!parseGaussianRational("1+i").has_value());  // coefficient is mandatory
    CHECK(!parseGaussianRational("1/0").has_value());
    CHECK(!parseGaussianRational("1+2i junk").has_value());

    test::Rng rng(test::seedFromEnv(0x9e3779b9));
    for (int k = 0; k < 200; ++k) {
        GaussianRational z = test::randomGaussianRational(rng);
        auto back = parseGaussianRational(toString(z));
        REQUIRE(back.has_value());
        CHECK(*back == z);
    }
}

TEST_CASE("signature: examples") {
    QMatrix g(2, 2);
    g.at(0, 0) = 1;
    g.at(1, 1) = -1;
    CHECK(signature(g) == Signature{1, 1});

    QMatrix z(3, 3);
    CHECK(signature(z) == Signature{0, 0});

    // hyperbolic plane hidden off the diagonal
    QMatrix h(2, 2);
    h.at(0, 1) = h.at(1, 0) = Rational(1, 2);
    CHECK(signature(h) == Signature{1, 1});

    QMatrix bad(2, 2);
    bad.at(0, 1) = 1;
    CHECK_THROWS_AS(signature(bad), std::invalid_argument);
}

TEST_CASE("signature: invariant under rational congruence") {
    test::Rng rng(test::seedFromEnv(0x51ac5e11));
    for (int trial = 0; trial < 6; ++trial) {
        int n = 2 + static_cast<int>(rng() % 4);
        QMatrix g(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j <= i; ++j) {
                Rational v = test::randomRational(rng, 5);
                g.at(i, j) = g.at(j, i) = v;
            }
        Signature expected = signature(g);
        for (int rep = 0; rep < 50; ++rep) {
            QMatrix a = test::randomUnimodular(rng, n);
            Signature got = signature(a.transposed() * g * a);
            REQUIRE(got == expected);
        }
    }
}

TEST_CASE("kernel and inverse basics") {
    GMatrix m(2, 3);
    m.at(0, 0) = 1;
    m.at(0, 2) = GaussianRational::i();
    m.at(1, 1) = 2;
    auto ker = kernelBasis(m);
    REQUIRE(ker.size() == 1);
    CHECK(ker[0][0] == -GaussianRational::i());
    CHECK(ker[0][1] == GaussianRational(0));
    CHECK(ker[0][2] == GaussianRational(1));

    GMatrix s(2, 2);
    s.at(0, 0) = GaussianRational(1, 2);
    s.at(0, 1) = GaussianRational::i();
    s.at(1, 1) = GaussianRational(3);
    CHECK(inverse(s) * s == GMatrix::identity(2));
    CHECK(rank(s) == 2);
}
