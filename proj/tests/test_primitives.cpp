#include "doctest.h"

#include "treealg/primitives.hpp"

using namespace treealg;

namespace {

TreePoly P(const char* s) { return parseTreePoly(s); }

bool inSpan(const std::vector<TreePoly>& basis, const TreePoly& f) {
    auto family = basis;
    const auto before = polyRank(family);
    family.push_back(f);
    return polyRank(family) == before;
}

// Primitive highest weight vectors of multidegree (3,1), as displayed in the literature.
const char* kWeightThreeOne[] = {
    "(x2 (x1 (x1 x1))) - 3*(x1 (x2 (x1 x1))) + 3*(x1 (x1 (x2 x1))) - (x1 (x1 (x1 x2)))",
    "((x1 x1) (x2 x1)) - (x1 (x1 (x2 x1))) + (x1 (x1 (x1 x2))) - ((x1 x1) (x1 x2))",
    "(x2 (x1 (x1 x1))) - (x2 ((x1 x1) x1)) + (x1 (x2 (x1 x1))) - ((x1 x2) (x1 x1)) + 2*(x1 ((x1 x2) x1))"
    " - 2*(x1 (x1 (x2 x1))) - (x1 ((x1 x1) x2)) + ((x1 x1) (x1 x2))",
    "(x2 (x1 (x1 x1))) - (x2 ((x1 x1) x1)) - (((x1 x1) x2) x1) + ((x1 (x1 x2)) x1) - (x1 (x1 (x1 x2)))"
    " + (x1 ((x1 x1) x2)) - ((x1 (x1 x1)) x2) + (((x1 x1) x1) x2)",
    "4*(x2 (x1 (x1 x1))) - 3*(x2 ((x1 x1) x1)) - 3*((x1 x2) (x1 x1)) + 3*(((x1 x1) x2) x1)"
    " - 4*(x1 (x1 (x1 x2))) + 3*(x1 ((x1 x1) x2)) + 3*((x1 x1) (x1 x2)) - 3*(((x1 x1) x1) x2)",
    "4*(x2 (x1 (x1 x1))) - 3*(x2 ((x1 x1) x1)) - ((x2 x1) (x1 x1)) - 2*((x1 x2) (x1 x1))"
    " + 2*(((x1 x2) x1) x1) - 4*(x1 (x1 (x1 x2))) + 3*(x1 ((x1 x1) x2)) + 3*((x1 x1) (x1 x2))"
    " - 2*(((x1 x1) x1) x2)",
    "(x2 (x1 (x1 x1))) - (x2 ((x1 x1) x1)) - (x1 (x2 (x1 x1))) + ((x1 x2) (x1 x1)) + 2*((x1 (x2 x1)) x1)"
    " - 2*(((x1 x2) x1) x1) + (x1 ((x1 x1) x2)) - ((x1 x1) (x1 x2)) - 2*((x1 (x1 x1)) x2)"
    " + 2*(((x1 x1) x1) x2)",
    "2*(x2 (x1 (x1 x1))) - (x2 ((x1 x1) x1)) - ((x2 x1) (x1 x1)) - 2*(x1 (x2 (x1 x1)))"
    " + 2*(x1 ((x2 x1) x1)) - (x1 ((x1 x1) x2)) + ((x1 x1) (x1 x2))",
    "4*(x2 (x1 (x1 x1))) - 3*(x2 ((x1 x1) x1)) - 3*((x2 x1) (x1 x1)) + 2*(((x2 x1) x1) x1)"
    " - 4*(x1 (x1 (x1 x2))) + 3*(x1 ((x1 x1) x2)) + 3*((x1 x1) (x1 x2)) - 2*(((x1 x1) x1) x2)",
    "2*(x2 (x1 (x1 x1))) - 2*(x2 ((x1 x1) x1)) - ((x2 x1) (x1 x1)) + ((x2 (x1 x1)) x1)"
    " - 2*(x1 (x1 (x1 x2))) + 2*(x1 ((x1 x1) x2)) + ((x1 x1) (x1 x2)) - ((x1 (x1 x1)) x2)",
};

}  // namespace

TEST_SUITE("primitives") {

TEST_CASE("named primitives") {
    const auto named = namedPrimitives();
    REQUIRE(named.size() == 5);
    for (const auto& p : named) {
        INFO(p.name);
        CHECK(p.primitive);
    }
    CHECK_FALSE(isPrimitive(CoproductKind::Coadd, dot(variable(1), dot(variable(2), variable(3)))));
    CHECK(associatorTernary(variable(1), variable(2), variable(3)) == P("((x1 x2) x3) - (x1 x2 x3)"));
}

TEST_CASE("non-associative Jacobi identity") {
    const auto j = jacobiCheck();
    CHECK(j.identity);
    CHECK(j.antisymmetry);
    CHECK(j.rightNormed);
    CHECK(j.classical);
}

TEST_CASE("multilinear primitive dimensions") {
    const std::vector<std::size_t> mag{1, 1, 8, 78};
    const std::vector<std::size_t> magw{1, 1, 14};
    for (int n = 1; n <= 4; ++n) {
        const auto r = primDim(Operad::Mag, n);
        REQUIRE(r.primDim.has_value());
        CHECK(*r.primDim == mag[n - 1]);
        CHECK(r.match);
    }
    for (int n = 1; n <= 3; ++n) CHECK(*primDim(Operad::Magw, n).primDim == magw[n - 1]);
    CHECK(primDimFormula(Operad::Mag, 5) == 1104);
    CHECK(primDimFormula(Operad::Magw, 4) == 198);
    CHECK_FALSE(primDim(Operad::Mag, 5, 4).primDim.has_value());
}

TEST_CASE("half-degree criterion equals the full kernel") {
    for (int n = 1; n <= 4; ++n) {
        const auto c = GradedComponent::multilinearMagma(Operad::Mag, n);
        CHECK(primBasis(c, CoproductKind::Coadd, PrimMethod::HalfDegree).size() ==
              primBasis(c, CoproductKind::Coadd, PrimMethod::FullKernel).size());
    }
    for (int n = 1; n <= 5; ++n) {
        const auto c = GradedComponent::magma(Operad::Magw, {n});
        CHECK(primBasis(c, CoproductKind::Coadd, PrimMethod::HalfDegree).size() ==
              primBasis(c, CoproductKind::Coadd, PrimMethod::FullKernel).size());
    }
}

TEST_CASE("primitives are closed under the bracket and the associator") {
    const auto prim2 = primBasis(GradedComponent::magma(Operad::Mag, {1, 1}), CoproductKind::Coadd);
    REQUIRE(prim2.size() == 1);
    const TreePoly x3 = variable(3);
    CHECK(isPrimitive(CoproductKind::Coadd, commutator(prim2[0], x3)));
    CHECK(isPrimitive(CoproductKind::Coadd, associatorBinary(prim2[0], x3, variable(4))));
}

TEST_CASE("primitives of the tree Hopf algebras") {
    const std::vector<std::size_t> catalan{1, 1, 2, 5};
    for (int n = 1; n <= 4; ++n) {
        CHECK(primBasis(GradedComponent::binaryTrees(AlgebraKind::LodayRonco, n), CoproductKind::LodayRonco).size() ==
              catalan[n - 1]);
        CHECK(primBasis(GradedComponent::binaryTrees(AlgebraKind::BF, n), CoproductKind::BrouderFrabetti).size() ==
              catalan[n - 1]);
        CHECK(primBasisForests(GradedComponent::planarForests(n)).size() == catalan[n - 1]);
    }
    CHECK_THROWS_AS(primBasis(GradedComponent::planarForests(2), CoproductKind::Coadd), Error);
}

TEST_CASE("PBW in one variable") {
    const std::vector<std::size_t> shuffles{1, 1, 2, 5, 15};
    const std::vector<std::size_t> prims{0, 1, 3, 9, 27};
    for (int n = 2; n <= 6; ++n) {
        const auto r = pbwCheckOneVariable(Operad::Mag, n);
        CHECK(r.pass());
        CHECK(r.shuffleMonomials == shuffles[n - 2]);
        CHECK(r.primDim == prims[n - 2]);
    }
}

TEST_CASE("PBW multilinear") {
    const auto mag3 = pbwCheckMultilinear(Operad::Mag, 3);
    CHECK(mag3.pass());
    CHECK(mag3.shuffleMonomials == 4);
    CHECK(mag3.primDim == 8);
    CHECK(mag3.ambientDim == 12);
    const auto magw3 = pbwCheckMultilinear(Operad::Magw, 3);
    CHECK(magw3.pass());
    CHECK(magw3.shuffleMonomials + magw3.primDim == 18);
}

TEST_CASE("PBW series identity") {
    CHECK(pbwSeriesIdentity({1, 0, 1, 3, 9, 27}, {1, 1, 2, 5, 14, 42}, false));
    CHECK(pbwSeriesIdentity({1, 1, 8, 78}, {1, 2, 12, 120}, true));
    CHECK(pbwSeriesIdentity({1, 1, 14, 198}, {1, 2, 18, 264}, true));
    CHECK_FALSE(pbwSeriesIdentity({1, 0, 1, 2}, {1, 1, 2, 5}, false));
}

TEST_CASE("variable substitution") {
    CHECK(substituteVariables(P("(x1 x2) - x3"), {2, 2, 1}) == P("(x2 x2) - x1"));
}

TEST_CASE("highest weight vectors in one variable") {
    const auto basis = highestWeightBasis(Operad::Mag, {4}, WeightConstraint::Primitive);
    CHECK(basis.size() == 3);
    const auto named = namedPrimitives();
    CHECK(inSpan(basis, substituteVariables(named[3].value, {1, 1, 1, 1})));
    CHECK(inSpan(basis, P("(x1 ((x1 x1) x1)) - 3*((x1 (x1 x1)) x1) + 2*(((x1 x1) x1) x1)")));
    CHECK(inSpan(basis, P("(x1 (x1 (x1 x1))) - 4*((x1 (x1 x1)) x1) + 3*(((x1 x1) x1) x1)")));
    CHECK(highestWeightBasis(Operad::Mag, {4}, WeightConstraint::Constant).size() == 3);
}

TEST_CASE("highest weight vectors of weight (3,1)") {
    const auto basis = highestWeightBasis(Operad::Mag, {3, 1}, WeightConstraint::Primitive);
    CHECK(basis.size() == 10);
    std::vector<TreePoly> displayed;
    for (const char* text : kWeightThreeOne) {
        const TreePoly f = P(text);
        CHECK(inSpan(basis, f));
        CHECK(partialKJ(2, 1, f).isZero());
        displayed.push_back(f);
    }
    CHECK(polyRank(displayed) == 10);
    for (const auto& f : basis) {
        CHECK(partialKJ(2, 1, f).isZero());
        CHECK(isPrimitive(CoproductKind::Coadd, f));
    }
}

}  // TEST_SUITE
