#include "doctest.h"

#include "treealg/dendriform.hpp"
#include "treealg/hopf.hpp"
#include "treealg/suite.hpp"

using namespace treealg;

namespace {

YPoly P(const char* s) { return parseTreePoly(s); }
Tree T(const char* s) { return parseTree(s); }

const char* kUp = "(o (o o))";
const char* kDown = "((o o) o)";
const char* kOne = "(((o o) o) o)";
const char* kTwo = "((o (o o)) o)";
const char* kThree = "((o o) (o o))";
const char* kFour = "(o ((o o) o))";
const char* kFive = "(o (o (o o)))";

std::vector<Tree> upToDegree(int n) {
    std::vector<Tree> out;
    for (int k = 0; k <= n; ++k)
        for (const auto& t : enumerateBinaryTrees(k)) out.push_back(t);
    return out;
}

}  // namespace

TEST_SUITE("dendriform") {

TEST_CASE("star of two Y trees") {
    const YPoly y(yTree());
    CHECK(star(y, y) == P(kUp) + P(kDown));
    CHECK(star(YPoly(stump()), y) == y);
    CHECK(veeV(yTree()) == T(kUp));
    CHECK(veeArrow(std::vector<Tree>{yTree()}) == T(kDown));
}

TEST_CASE("dendriform axioms and associativity") {
    const auto trees = upToDegree(3);
    for (const auto& x : trees) {
        if (x == stump()) continue;
        for (const auto& y : trees) {
            if (y == stump()) continue;
            CHECK(prec(x, y) + succ(x, y) == star(x, y));
            for (const auto& z : trees) {
                if (z == stump()) continue;
                const YPoly X(x), Y(y), Z(z);
                CHECK(prec(prec(X, Y), Z) == prec(X, star(Y, Z)));
                CHECK(prec(succ(X, Y), Z) == succ(X, prec(Y, Z)));
                CHECK(succ(star(X, Y), Z) == succ(X, succ(Y, Z)));
            }
        }
    }
    for (const auto& r : runSuite("dendriform.star-associative", 4)) CHECK(r.pass);
}

TEST_CASE("Loday-Ronco reduced coproducts") {
    const YPoly f = P(kUp) - P(kDown);
    CHECK(f == 2 * YPoly(veeV(yTree())) - star(YPoly(yTree()), YPoly(yTree())));
    CHECK(reducedCoproduct(CoproductKind::LodayRonco, f).isZero());
    const YPoly y(yTree());
    CHECK(reducedCoproduct(CoproductKind::LodayRonco, YPoly(join(yTree(), yTree()))) ==
          tensor(star(y, y), y) + tensor(y, star(y, y)));
    const YPoly h = P(kFour) - P(kTwo);
    CHECK(reducedCoproduct(CoproductKind::LodayRonco, h) == tensor(y, f) - tensor(f, y));
    CHECK(reducedCoproduct(CoproductKind::LodayRonco, P(kFive) + P(kOne) - P(kThree)).isZero());
}

TEST_CASE("Loday-Ronco coproduct of right combs") {
    for (int n = 0; n <= 5; ++n) {
        TreeTensor combs;
        for (int j = 0; j <= n; ++j) combs.add({veeArrow(std::vector<Tree>(n - j, stump())), veeArrow(std::vector<Tree>(j, stump()))}, 1);
        CHECK(deltaLR(veeArrow(std::vector<Tree>(n, stump()))) == combs);
    }
}

TEST_CASE("Brouder-Frabetti golden values") {
    const YPoly y(yTree()), up(T(kUp)), down(T(kDown)), stumpPoly(stump());
    CHECK(circAlpha(yTree(), yTree()) == T(kDown));
    CHECK(deltaBF(T(kDown)) == tensor(stumpPoly, down) + tensor(down, stumpPoly) + 2 * tensor(y, y));
    const YPoly four(T(kFour));
    CHECK(deltaBF(T(kFour)) == tensor(four, stumpPoly) + tensor(stumpPoly, four) + tensor(y, up));
    const YPoly three(T(kThree));
    CHECK(deltaBF(T(kThree)) == tensor(three, stumpPoly) + tensor(stumpPoly, three) + tensor(y, up) + tensor(up, y));
    const Tree v = veeV(T(kOne));
    CHECK(deltaBF(v) == tensor(YPoly(v), stumpPoly) + tensor(stumpPoly, YPoly(v)) + 2 * tensor(y, four) + tensor(down, up));
    for (int n = 1; n <= 5; ++n) CHECK(isPrimitive(CoproductKind::BrouderFrabetti, YPoly(rightComb(n))));
}

TEST_CASE("Brouder-Frabetti closed form on grafted trees") {
    for (int n = 0; n <= 4; ++n)
        for (const auto& t : enumerateBinaryTrees(n)) CHECK(deltaBFClosedForm(veeV(t)) == deltaBF(veeV(t)));
    CHECK(checkBFClosedForm(5).pass);
}

TEST_CASE("planar Connes-Kreimer golden values") {
    const ForestPoly f = parseForestPoly("2*[(o)] - [o; o]");
    CHECK(reducedCoproduct(f).isZero());
    const ForestPoly h = parseForestPoly("2*[(o o)] - [((o))] - [(o); o]");
    const ForestPoly dot = parseForestPoly("[o]");
    CHECK(reducedCoproduct(h) == tensor(dot, f) - tensor(f, dot));
    CHECK(deltaCK(parseTree("o")) == parseForestTensor("[o] (x) [] + [] (x) [o]"));
}

TEST_CASE("Connes-Kreimer coproduct equals the sum over admissible cuts") {
    for (int n = 1; n <= 5; ++n)
        for (const auto& f : enumerateForests(n)) CHECK(deltaCK(f) == deltaCKByCuts(f));
    CHECK(checkCutsFormula(5).pass);
}

TEST_CASE("Gamma on leaves is primitive and its coproduct factors") {
    const YPoly bar(stump());
    for (int n = 1; n <= 5; ++n)
        CHECK(isPrimitive(CoproductKind::LodayRonco, gammaOp(std::vector<YPoly>(static_cast<std::size_t>(n), bar))));
    CHECK(gammaOp({bar}) == YPoly(join(stump(), stump())));
    CHECK_THROWS_AS(gammaOp({}), Error);
    // Delta Gamma(S1, S2) - Gamma (x) | = sum S1' * S2' (x) Gamma(S1'', S2'')
    for (const auto& s1 : upToDegree(2))
        for (const auto& s2 : upToDegree(2)) {
            const YPoly g = gammaOp({YPoly(s1), YPoly(s2)});
            TreeTensor lhs = deltaLR(g) - tensor(g, bar);
            TreeTensor rhs;
            for (const auto& [a, ca] : deltaLR(s1))
                for (const auto& [b, cb] : deltaLR(s2))
                    rhs += (ca * cb) * tensor(star(YPoly(a[0]), YPoly(b[0])), gammaOp({YPoly(a[1]), YPoly(b[1])}));
            CHECK(lhs == rhs);
        }
}

}  // TEST_SUITE
