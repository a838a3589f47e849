#include <catch2/catch_amalgamated.hpp>

#include "endotype/algebra.hpp"
#include "test_support.hpp"

using namespace endotype;

namespace {

Weight wt(const AlgebraModel& mod, std::initializer_list<GaussianRational> coords) {
    Weight w = Weight::zero(mod);
    int c = 0;
    for (auto& v : coords) w.coord(c++) = v;
    return w;
}

} // namespace

TEST_CASE("build_algebra: layouts and rejection of degenerate sizes") {
    AlgebraModel gl11(Family::GL, 1, 1);
    CHECK(gl11.dim() == 4);
    std::vector<int> par;
    for (int k = 0; k < 4; ++k) par.push_back(gl11.basisParity(k));
    CHECK(par == std::vector<int>{0, 1, 1, 0});

    AlgebraModel q2(Family::Q, 0, 2);
    CHECK(q2.dim() == 8);
    // even part: diagonal blocks; odd part: anti-diagonal blocks
    GMatrix evenGen = AlgebraElement::basis(q2, q2.basisQ(false, 0, 1)).toMatrix();
    CHECK(evenGen.at(0, 1) == GaussianRational(1));
    CHECK(evenGen.at(2, 3) == GaussianRational(1));
    CHECK(evenGen.at(0, 3).isZero());
    GMatrix oddGen = AlgebraElement::basis(q2, q2.basisQ(true, 0, 1)).toMatrix();
    CHECK(oddGen.at(0, 3) == GaussianRational(1));
    CHECK(oddGen.at(2, 1) == GaussianRational(1));
    CHECK(oddGen.at(0, 1).isZero());

    AlgebraModel gl12(Family::GL, 1, 2);
    auto pos = positiveRoots(gl12, BorelShuffle::standard(gl12));
    REQUIRE(pos.size() == 3);
    CHECK(pos[0].parityIn(gl12) == 1);
    CHECK(pos[1].parityIn(gl12) == 1);
    CHECK((Root{1, 2}.parityIn(gl12)) == 0);
    CHECK(pos[0].isIsotropicIn(gl12));
    CHECK(!Root{1, 2}.isIsotropicIn(gl12));

    CHECK_THROWS_AS(AlgebraModel(Family::Q, 0, 0), ParseError);
    CHECK_THROWS_AS(AlgebraModel(Family::GL, 0, 0), ParseError);
}

TEST_CASE("superbracket: defining examples in gl(1|1)") {
    AlgebraModel mod(Family::GL, 1, 1);
    auto E = [&](int i, int j) { return AlgebraElement::basis(mod, mod.basisE(i, j)); };
    CHECK(superbracket(E(0, 1), E(1, 0)) == E(0, 0) + E(1, 1)); // odd-odd anticommutator
    CHECK(superbracket(E(0, 0), E(0, 1)) == E(0, 1));
}

TEST_CASE("superbracket: [h, e_a] = a(h) e_a over gl(2|2)") {
    AlgebraModel mod(Family::GL, 2, 2);
    for (int c = 0; c < 4; ++c) {
        AlgebraElement h = AlgebraElement::basis(mod, mod.basisE(c, c));
        for (int a = 0; a < 4; ++a)
            for (int b = 0; b < 4; ++b) {
                if (a == b) continue;
                Root alpha{a, b};
                AlgebraElement e = alpha.vectorIn(mod);
                GaussianRational val((a == c ? 1 : 0) - (b == c ? 1 : 0));
                CHECK(superbracket(h, e) == e.scaled(val));
            }
    }
}

TEST_CASE("superbracket: super Jacobi on all basis triples of gl(2|2) and q(2)") {
    for (AlgebraModel mod : {AlgebraModel(Family::GL, 2, 2), AlgebraModel(Family::Q, 0, 2)}) {
        int d = mod.dim();
        for (int x = 0; x < d; ++x)
            for (int y = 0; y < d; ++y)
                for (int z = 0; z < d; ++z) {
                    AlgebraElement X = AlgebraElement::basis(mod, x);
                    AlgebraElement Y = AlgebraElement::basis(mod, y);
                    AlgebraElement Z = AlgebraElement::basis(mod, z);
                    int px = mod.basisParity(x), py = mod.basisParity(y), pz = mod.basisParity(z);
                    auto sgn = [](int p) { return p ? GaussianRational(-1) : GaussianRational(1); };
                    AlgebraElement lhs = superbracket(X, superbracket(Y, Z)).scaled(sgn(px * pz)) +
                                         superbracket(Y, superbracket(Z, X)).scaled(sgn(px * py)) +
                                         superbracket(Z, superbracket(X, Y)).scaled(sgn(py * pz));
                    REQUIRE(lhs.isZero());
                }
    }
}

TEST_CASE("fundamental systems from shuffles") {
    AlgebraModel gl11(Family::GL, 1, 1);
    auto fs = fundamentalSystem(gl11, {"ed"});
    REQUIRE(fs.simple.size() == 1);
    CHECK(fs.simple[0] == Root{0, 1});
    CHECK(fs.simple[0].isIsotropicIn(gl11));

    AlgebraModel gl12(Family::GL, 1, 2);
    auto fs2 = fundamentalSystem(gl12, {"edd"});
    CHECK(fs2.simple == std::vector<Root>{{0, 1}, {1, 2}}); // eps1-delta1, delta1-delta2

    AlgebraModel gl22(Family::GL, 2, 2);
    auto fs3 = fundamentalSystem(gl22, {"eded"});
    CHECK(fs3.simple == std::vector<Root>{{0, 2}, {2, 1}, {1, 3}});
}

TEST_CASE("odd reflection: examples and involution property") {
    AlgebraModel gl11(Family::GL, 1, 1);
    auto pi = fundamentalSystem(gl11, {"ed"});
    auto r = oddReflection(gl11, pi, {0, 1});
    CHECK(r.simple == std::vector<Root>{{1, 0}});

    AlgebraModel gl12(Family::GL, 1, 2);
    auto pi2 = fundamentalSystem(gl12, {"edd"});
    auto r2 = oddReflection(gl12, pi2, {0, 1});
    CHECK(r2.simple == std::vector<Root>{{1, 0}, {0, 2}}); // delta1-eps1, eps1-delta2
    CHECK(r2 == fundamentalSystem(gl12, {"ded"}));

    CHECK_THROWS_AS(oddReflection(gl12, pi2, Root{1, 2}), PreconditionError); // not isotropic
    CHECK_THROWS_AS(oddReflection(gl12, pi2, Root{0, 2}), PreconditionError); // not simple

    // r_{-a} after r_a restores the original system, for every isotropic
    // simple root of every shuffle with m+n <= 5
    for (int m = 1; m <= 4; ++m)
        for (int n = 1; m + n <= 5; ++n) {
            AlgebraModel mod(Family::GL, m, n);
            for (const std::string& word : test::allShuffles(m, n)) {
                auto base = fundamentalSystem(mod, {word});
                for (const Root& alpha : base.simple) {
                    if (!alpha.isIsotropicIn(mod)) continue;
                    auto once = oddReflection(mod, base, alpha);
                    auto twice = oddReflection(mod, once, alpha.negated());
                    REQUIRE(twice == base);
                }
            }
        }
}

TEST_CASE("odd reflection chains between shuffles have bubble-sort length") {
    test::Rng rng(test::seedFromEnv(0xabcdef12));
    for (int m = 1; m <= 4; ++m)
        for (int n = 1; m + n <= 5; ++n) {
            AlgebraModel mod(Family::GL, m, n);
            if (mod.isSl22Like()) continue;
            auto shuffles = test::allShuffles(m, n);
            for (const std::string& from : shuffles)
                for (const std::string& to : shuffles) {
                    auto chain = oddReflectionChain(mod, {from}, {to});
                    // adjacent-transposition distance = crossing inversions
                    int inversions = 0;
                    auto posOf = [](const std::string& w) {
                        std::vector<std::pair<char, int>> lab;
                        int e = 0, d = 0;
                        for (char c : w) lab.push_back({c, c == 'e' ? e++ : d++});
                        return lab;
                    };
                    auto fl = posOf(from), tl = posOf(to);
                    for (size_t x = 0; x < fl.size(); ++x)
                        for (size_t y = x + 1; y < fl.size(); ++y) {
                            auto ix = std::find(tl.begin(), tl.end(), fl[x]) - tl.begin();
                            auto iy = std::find(tl.begin(), tl.end(), fl[y]) - tl.begin();
                            if (ix > iy) ++inversions;
                        }
                    REQUIRE(static_cast<int>(chain.size()) == inversions);
                    // replaying the chain lands on the target fundamental system
                    auto pi = fundamentalSystem(mod, {from});
                    for (const Root& alpha : chain) pi = oddReflection(mod, pi, alpha);
                    REQUIRE(pi == fundamentalSystem(mod, {to}));
                }
        }
}

TEST_CASE("highest-weight shift across isotropic reflections") {
    AlgebraModel gl11(Family::GL, 1, 1);
    GaussianRational a(3), b(-3);
    CHECK(shiftedHighestWeight(wt(gl11, {a, b}), {0, 1}, gl11) == wt(gl11, {a, b}));
    CHECK(shiftedHighestWeight(wt(gl11, {a, GaussianRational(4)}), {0, 1}, gl11) ==
          wt(gl11, {GaussianRational(2), GaussianRational(5)}));

    // gl(1|2), a1+b1 != 0 and a1+b2 = 1: only the first reflection shifts
    AlgebraModel gl12(Family::GL, 1, 2);
    GaussianRational a1(2), b1(5), b2(-1);
    Weight l = wt(gl12, {a1, b1, b2});
    Weight l1 = shiftedHighestWeight(l, {0, 1}, gl12);
    CHECK(l1 == wt(gl12, {GaussianRational(1), GaussianRational(6), b2}));
    Weight l2 = shiftedHighestWeight(l1, {0, 2}, gl12);
    CHECK(l2 == l1);
}

TEST_CASE("sl(2|2) rank-based shift replaces the Clifford rule") {
    AlgebraModel sl22(Family::SL, 2, 2);
    Root alpha{0, 2}; // eps1 - delta1

    Weight l0 = wt(sl22, {GaussianRational(1), GaussianRational(0), GaussianRational(-1), GaussianRational(0)});
    auto s0 = sl22Shift(sl22, l0, alpha);
    CHECK(s0.rank == 0);
    CHECK(s0.weight == l0);
    CHECK(s0.raisingFactors.empty());

    Weight l1 = wt(sl22, {GaussianRational(0), GaussianRational(1), GaussianRational(0), GaussianRational(0)});
    auto s1 = sl22Shift(sl22, l1, alpha);
    CHECK(s1.rank == 1);
    CHECK(s1.weight == wt(sl22, {GaussianRational(-1), GaussianRational(1), GaussianRational(1), GaussianRational(0)}));
    REQUIRE(s1.raisingFactors.size() == 1);
    CHECK(s1.raisingFactors[0] == alpha.sl22Partner());

    Weight l2 = wt(sl22, {GaussianRational(1), GaussianRational(1), GaussianRational(0), GaussianRational(0)});
    auto s2 = sl22Shift(sl22, l2, alpha);
    CHECK(s2.rank == 2);
    CHECK(s2.weight == wt(sl22, {GaussianRational(-1), GaussianRational(1), GaussianRational(2), GaussianRational(0)}));
    CHECK(s2.raisingFactors == std::vector<Root>{alpha, alpha.sl22Partner()});

    CHECK_THROWS_AS(shiftedHighestWeight(l2, alpha, sl22), PreconditionError);
    CHECK_THROWS_AS(BorelShuffle{"eedd"}.validateFor(sl22), PreconditionError);
}

TEST_CASE("PSL weights compare modulo the supertrace span") {
    AlgebraModel psl(Family::PSL, 2, 2);
    Weight u = wt(psl, {GaussianRational(3), GaussianRational(1), GaussianRational(0), GaussianRational(-4)});
    Weight v = u;
    for (int c = 0; c < 2; ++c) v.coord(c) += GaussianRational(2);
    for (int c = 2; c < 4; ++c) v.coord(c) -= GaussianRational(2);
    CHECK(weightsEqual(psl, u, v));
    v.coord(0) += GaussianRational(1);
    CHECK(!weightsEqual(psl, u, v));
    CHECK(u.identityValue() == GaussianRational(0));

    AlgebraModel gl(Family::GL, 2, 2);
    CHECK(!weightsEqual(gl, u, u + wt(gl, {GaussianRational(1), GaussianRational(1), GaussianRational(-1), GaussianRational(-1)})));
}
