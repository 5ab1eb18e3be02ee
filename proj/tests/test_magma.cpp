#include "doctest.h"

#include "treealg/hopf.hpp"

#include <random>

using namespace treealg;

namespace {

TreePoly P(const char* s) { return parseTreePoly(s); }

// The mixed-arity monomial of degree eight used in several examples.
const char* kEight = "((x1 (x2 x2 x2)) ((x2 x2 x1) x2))";

TreePoly randomPoly(std::mt19937& rng, int maxDegree, int variables) {
    TreePoly f;
    std::uniform_int_distribution<int> deg(1, maxDegree), var(1, variables), coeff(-3, 3);
    for (int k = 0; k < 4; ++k) {
        const int n = deg(rng);
        std::vector<Label> labels;
        for (int i = 0; i < n; ++i) labels.push_back(Label::var(var(rng)));
        const auto shapes = enumerateTrees(n, false, labels);
        f.add(shapes[std::uniform_int_distribution<std::size_t>(0, shapes.size() - 1)(rng)], coeff(rng));
    }
    return f;
}

}  // namespace

TEST_SUITE("magma") {

TEST_CASE("products normalize the unit") {
    CHECK(dot(unitPoly(), variable(1)) == variable(1));
    CHECK(dot(variable(1), variable(2)) == P("(x1 x2)"));
    CHECK(commutator(variable(1), variable(2)) == P("(x1 x2) - (x2 x1)"));
    CHECK(vee({variable(1), unitPoly(), variable(2), variable(3)}) == P("(x1 x2 x3)"));
    CHECK(isMagElement(P("(x1 (x2 x3))")));
    CHECK_FALSE(isMagElement(P("(x1 x2 x3)")));
}

TEST_CASE("partial derivatives of a binary monomial") {
    const TreePoly f = P("(x1 ((x1 x2) x2))");
    CHECK(partialK(2, f) == P("2*(x1 (x1 x2))"));
    CHECK(partialK(1, f) == P("(x1 (x2 x2)) + ((x1 x2) x2)"));
}

TEST_CASE("substitution and derivative of the degree-eight monomial") {
    const TreePoly f = P(kEight);
    CHECK(partialKJ(1, 2, f) == P("((x2 (x2 x2 x2)) ((x2 x2 x1) x2)) + ((x1 (x2 x2 x2)) ((x2 x2 x2) x2))"));
    CHECK(partialK(1, f) == P("((x2 x2 x2) ((x2 x2 x1) x2)) + ((x1 (x2 x2 x2)) ((x2 x2) x2))"));
}

TEST_CASE("generalized derivatives") {
    const TreePoly f = P(kEight);
    CHECK(partialTree(parseTree("(x2 x2 x2 x2)"), f).isZero());
    const TreePoly d = partialTree(parseTree("((x2 x2 x2) x2)"), f);
    CHECK(d == P("(x1 (x2 x2 x1)) + 2*(x1 ((x2 x1) x2))"));
    // every term also occurs in the fourth power of d_2
    TreePoly fourth = f;
    for (int i = 0; i < 4; ++i) fourth = partialK(2, fourth);
    for (const auto& [t, c] : d) CHECK(fourth.coefficient(t) != 0);
}

TEST_CASE("partial derivatives commute") {
    std::mt19937 rng(11);
    for (int k = 0; k < 20; ++k) {
        const TreePoly f = randomPoly(rng, 5, 3);
        CHECK(partialK(1, partialK(2, f)) == partialK(2, partialK(1, f)));
        const Tree s = parseTree("(x1 x2)");
        const Tree t = parseTree("x3");
        CHECK(partialTree(s, partialTree(t, f)) == partialTree(t, partialTree(s, f)));
    }
}

TEST_CASE("mu counts agree on binary trees") {
    for (const auto& t : enumerateTrees(5, true, std::vector<Label>(5, Label::var(1))))
        for (int k = 1; k <= 5; ++k)
            for (const auto& s : enumerateTrees(k, true, std::vector<Label>(k, Label::var(1))))
                CHECK(muCount(s, t) == muCountBinary(s, t));
}

TEST_CASE("right multiplication") {
    CHECK(rightMultiply(unitPoly(), {3}) == P("((x1 x1) x1)"));
    CHECK(rightMultiply(variable(2), {1, 1}) == P("((x2 x1) x2)"));
}

TEST_CASE("Taylor expansions of two cubic monomials") {
    const auto binary = taylorRight(P("(x1 (x1 x1))"), 1);
    CHECK(binary.coefficients.size() == 2);
    CHECK(binary.coefficients.at({0}) == P("(x1 (x1 x1)) - ((x1 x1) x1)"));
    CHECK(binary.coefficients.at({3}) == unitPoly());
    const auto ternary = taylorRight(P("(x1 x1 x1)"), 1);
    CHECK(ternary.coefficients.size() == 2);
    CHECK(ternary.coefficients.at({0}) == P("(x1 x1 x1) - ((x1 x1) x1)"));
    CHECK(ternary.coefficients.at({3}) == unitPoly());
}

TEST_CASE("Taylor reconstruction with constant coefficients") {
    std::mt19937 rng(5);
    for (int k = 0; k < 40; ++k) {
        const TreePoly f = randomPoly(rng, 5, 3);
        const auto e = taylorRight(f, 3);
        CHECK(reconstruct(e) == f);
        for (const auto& [j, a] : e.coefficients) CHECK(isConstant(a, 3));
        CHECK(constantsProjector(constantsProjector(f, 3), 3) == constantsProjector(f, 3));
    }
}

TEST_CASE("one-variable constants") {
    const std::vector<std::size_t> expected{1, 0, 0, 1, 3, 9};
    for (int n = 0; n <= 5; ++n) CHECK(constantsBasis(Operad::Mag, {n}).size() == expected[n]);
    for (int n = 3; n <= 5; ++n) CHECK(polyRank(oneVariableConstantsByProjector(n)) == expected[n]);
}

TEST_CASE("component bases") {
    CHECK(componentBasis(Operad::Mag, {2, 1}).size() == 6);
    CHECK(componentBasis(Operad::Magw, {2, 1}).size() == 9);
    CHECK(multilinearBasis(Operad::Mag, 3).size() == 12);
    CHECK(multidegree(parseTree("(x1 (x3 x1))"), 3) == Multidegree{2, 0, 1});
}

}  // TEST_SUITE
