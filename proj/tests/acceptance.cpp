// Acceptance run: one PASS/FAIL line per criterion, with its runtime against the budget.
// Pass --mag5 to include the exact degree-5 kernel for Mag.

#include "treealg/isos.hpp"
#include "treealg/primitives.hpp"
#include "treealg/suite.hpp"

#include <chrono>
#include <cstring>
#include <functional>
#include <iomanip>
#include <iostream>
#include <algorithm>

using namespace treealg;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string& what) {
        if (!ok && pass) detail = what;
        pass = pass && ok;
    }
};

TreePoly P(const char* s) { return parseTreePoly(s); }

bool sameValues(const std::vector<mpz_class>& got, const std::vector<long>& want) {
    if (got.size() != want.size()) return false;
    for (std::size_t i = 0; i < want.size(); ++i)
        if (got[i] != want[i]) return false;
    return true;
}

bool inSpan(const std::vector<TreePoly>& basis, const TreePoly& f) {
    auto family = basis;
    const auto before = polyRank(family);
    family.push_back(f);
    return polyRank(family) == before;
}

Outcome sequences() {
    Outcome o;
    o.require(sameValues(sequence(SequenceKind::Catalan, 9).values, {1, 1, 2, 5, 14, 42, 132, 429, 1430}), "catalan");
    o.require(sameValues(sequence(SequenceKind::SuperCatalan, 10).values,
                         {1, 1, 3, 11, 45, 197, 903, 4279, 20793, 103049}),
              "super-catalan");
    o.require(sameValues(sequence(SequenceKind::LogCatalan, 10).values,
                         {1, 1, 4, 13, 46, 166, 610, 2269, 8518, 32206}),
              "log-catalan");
    o.require(sameValues(sequence(SequenceKind::LogSuperCatalan, 7).values, {1, 1, 7, 33, 171, 901, 4831}),
              "log-super-catalan");
    return o;
}

Outcome evenArityCensus() {
    Outcome o;
    const auto logCatalan = sequence(SequenceKind::LogCatalan, 7).values;
    const std::vector<long> oddExpected{0, 1, 2, 7, 24, 86, 314};
    for (int n = 1; n <= 7; ++n) {
        long even = 0, odd = 0;
        std::function<void(const Tree&)> visit = [&](const Tree& t) {
            (t.arity() % 2 == 0 ? even : odd) += 1;
            if (t.isNode())
                for (const auto& c : t.children()) visit(c);
        };
        for (const auto& t : enumeratePlanarTrees(n)) visit(t);
        o.require(logCatalan[n - 1] == even, "even arity count n=" + std::to_string(n));
        o.require(odd == oddExpected[n - 1], "odd arity count n=" + std::to_string(n));
    }
    return o;
}

Outcome coproductGoldens() {
    Outcome o;
    o.require(coaddition(parseTree("(x1 x2)")) ==
                  parseTreeTensor("(x1 x2) (x) 1 + 1 (x) (x1 x2) + x1 (x) x2 + x2 (x) x1"),
              "co-addition of x1.x2");
    o.require(coaddition(parseTree("((x1 x2) x3)")) ==
                  parseTreeTensor("((x1 x2) x3) (x) 1 + 1 (x) ((x1 x2) x3) + (x1 x2) (x) x3 + x1 (x) (x2 x3)"
                                  " + x2 (x) (x1 x3) + x3 (x) (x1 x2) + (x2 x3) (x) x1 + (x1 x3) (x) x2"),
              "co-addition of (x1.x2).x3");

    const ForestPoly dot = parseForestPoly("[o]");
    const ForestPoly ckF = parseForestPoly("2*[(o)] - [o; o]");
    const ForestPoly ckH = parseForestPoly("2*[(o o)] - [((o))] - [(o); o]");
    o.require(reducedCoproduct(ckF).isZero(), "CK f");
    o.require(reducedCoproduct(ckH) == tensor(dot, ckF) - tensor(ckF, dot), "CK h");

    const YPoly bar(stump()), y(yTree());
    const YPoly up = P("(o (o o))"), down = P("((o o) o)"), four = P("(o ((o o) o))");
    o.require(deltaBF(circAlpha(yTree(), yTree())) == tensor(bar, down) + tensor(down, bar) + 2 * tensor(y, y),
              "BF of Y o Y");
    o.require(deltaBF(parseTree("(o ((o o) o))")) == tensor(four, bar) + tensor(bar, four) + tensor(y, up),
              "BF of the four-leaf tree");

    const YPoly f = up - down;
    const YPoly h = four - P("((o (o o)) o)");
    o.require(reducedCoproduct(CoproductKind::LodayRonco, f).isZero(), "LR f");
    o.require(reducedCoproduct(CoproductKind::LodayRonco, YPoly(join(yTree(), yTree()))) ==
                  tensor(star(y, y), y) + tensor(y, star(y, y)),
              "LR Y v Y");
    o.require(reducedCoproduct(CoproductKind::LodayRonco, h) == tensor(y, f) - tensor(f, y), "LR h");
    return o;
}

Outcome coassociativity() {
    Outcome o;
    for (const auto& r : {checkCoassociative(CoproductKind::Coadd, 5, Operad::Mag),
                          checkCoassociative(CoproductKind::Coadd, 5, Operad::Magw),
                          checkCoassociative(CoproductKind::LodayRonco, 5),
                          checkCoassociative(CoproductKind::ConnesKreimerPlanar, 5),
                          checkCoassociative(CoproductKind::BrouderFrabetti, 5)})
        o.require(r.pass, r.name + ": " + r.detail);
    return o;
}

Outcome derivatives() {
    Outcome o;
    const TreePoly f = P("(x1 ((x1 x2) x2))");
    o.require(partialK(2, f) == P("2*(x1 (x1 x2))"), "d2");
    o.require(partialK(1, f) == P("(x1 (x2 x2)) + ((x1 x2) x2)"), "d1");
    const TreePoly g = P("((x1 (x2 x2 x2)) ((x2 x2 x1) x2))");
    o.require(partialKJ(1, 2, g) ==
                  P("((x2 (x2 x2 x2)) ((x2 x2 x1) x2)) + ((x1 (x2 x2 x2)) ((x2 x2 x2) x2))"),
              "d12 of the degree-eight monomial");
    o.require(partialK(1, g) == P("((x2 x2 x2) ((x2 x2 x1) x2)) + ((x1 (x2 x2 x2)) ((x2 x2) x2))"),
              "d1 of the degree-eight monomial");
    o.require(partialTree(parseTree("(x2 x2 x2 x2)"), g).isZero(), "d_T for the quaternary corolla");
    o.require(partialTree(parseTree("((x2 x2 x2) x2)"), g) == P("(x1 (x2 x2 x1)) + 2*(x1 ((x2 x1) x2))"),
              "d_T for ((x2 x2 x2) x2)");
    return o;
}

Outcome antipodes() {
    Outcome o;
    o.require(antipodeLeft(P("(x1 (x1 x1))")) == P("2*(x1 (x1 x1)) - 3*((x1 x1) x1)"), "left of x.(x.x)");
    o.require(antipodeLeft(P("((x1 x1) x1)")) == P("3*(x1 (x1 x1)) - 4*((x1 x1) x1)"), "left of (x.x).x");
    o.require(antipodeRight(P("(x1 (x1 x1))")) == P("3*((x1 x1) x1) - 4*(x1 (x1 x1))"), "right of x.(x.x)");
    o.require(antipodeRight(P("((x1 x1) x1)")) == P("2*((x1 x1) x1) - 3*(x1 (x1 x1))"), "right of (x.x).x");
    const auto r = checkAntipodeIdentities(5);
    o.require(r.pass, r.detail);
    return o;
}

Outcome taylor() {
    Outcome o;
    const auto a = taylorRight(P("(x1 (x1 x1))"), 1);
    o.require(a.coefficients.size() == 2 && a.coefficients.at({0}) == P("(x1 (x1 x1)) - ((x1 x1) x1)") &&
                  a.coefficients.at({3}) == unitPoly(),
              "expansion of x.(x.x)");
    const auto b = taylorRight(P("(x1 x1 x1)"), 1);
    o.require(b.coefficients.size() == 2 && b.coefficients.at({0}) == P("(x1 x1 x1) - ((x1 x1) x1)") &&
                  b.coefficients.at({3}) == unitPoly(),
              "expansion of the ternary corolla");
    const auto r = checkTaylorReconstruction(200, 5, 3, 2024);
    o.require(r.pass && r.checked >= 200, r.detail);
    return o;
}

Outcome primitiveDimensions(bool withMag5) {
    Outcome o;
    const std::vector<long> mag{1, 1, 8, 78, 1104};
    const std::vector<long> magw{1, 1, 14, 198};
    const int magTop = withMag5 ? 5 : 4;
    for (int n = 1; n <= magTop; ++n) {
        const auto r = primDim(Operad::Mag, n, 5);
        o.require(r.primDim && static_cast<long>(*r.primDim) == mag[n - 1] && r.formulaDim == mag[n - 1],
                  "Mag n=" + std::to_string(n));
    }
    if (!withMag5) o.require(primDimFormula(Operad::Mag, 5) == mag[4], "Mag formula n=5");
    for (int n = 1; n <= 4; ++n) {
        const auto r = primDim(Operad::Magw, n, 4);
        o.require(r.primDim && static_cast<long>(*r.primDim) == magw[n - 1] && r.formulaDim == magw[n - 1],
                  "Mag_omega n=" + std::to_string(n));
    }
    return o;
}

Outcome namedPrimitiveCheck() {
    Outcome o;
    for (const auto& p : namedPrimitives()) o.require(p.primitive, p.name + " is not primitive");
    o.require(jacobiCheck().pass(), "Jacobi identity");
    return o;
}

Outcome pbw() {
    Outcome o;
    auto series = [&o](const std::vector<PbwReport>& reports, bool multilinear, const std::string& what) {
        std::vector<std::size_t> prim{1}, ambient{1};
        for (const auto& r : reports) {
            o.require(r.pass(), what + ": " + r.component);
            prim.push_back(r.primDim);
            ambient.push_back(r.ambientDim);
        }
        o.require(pbwSeriesIdentity(prim, ambient, multilinear), what + " series identity");
    };
    std::vector<PbwReport> one, mag, magw;
    for (int n = 2; n <= 6; ++n) one.push_back(pbwCheckOneVariable(Operad::Mag, n));
    for (int n = 2; n <= 4; ++n) mag.push_back(pbwCheckMultilinear(Operad::Mag, n));
    for (int n = 2; n <= 3; ++n) magw.push_back(pbwCheckMultilinear(Operad::Magw, n));
    series(one, false, "Mag one variable");
    series(mag, true, "Mag multilinear");
    series(magw, true, "Mag_omega multilinear");
    return o;
}

Outcome highestWeights() {
    Outcome o;
    const auto one = highestWeightBasis(Operad::Mag, {4}, WeightConstraint::Primitive);
    o.require(one.size() == 3, "one variable, degree 4: " + std::to_string(one.size()));
    const auto two = highestWeightBasis(Operad::Mag, {3, 1}, WeightConstraint::Primitive);
    o.require(two.size() == 10, "weight (3,1): " + std::to_string(two.size()));
    const TreePoly f1 = P("(x2 (x1 (x1 x1))) - 3*(x1 (x2 (x1 x1))) + 3*(x1 (x1 (x2 x1))) - (x1 (x1 (x1 x2)))");
    o.require(inSpan(two, f1), "f1 outside the computed space");
    return o;
}

Outcome isomorphisms() {
    Outcome o;
    const auto t = verifyHopfMorphism(thetaMap(), lodayRoncoModel(), connesKreimerModel(), 5);
    o.require(t.pass(), t.firstFailure);
    const auto p = verifyHopfMorphism(psiMap(), brouderFrabettiModel(), lodayRoncoModel(), 4);
    o.require(p.pass(), p.firstFailure);
    for (int n = 0; n <= 5; ++n)
        for (const auto& f : enumerateForests(n))
            o.require(theta(xi(f)) == ForestPoly(f), "theta(xi(" + printForest(f) + "))");
    o.require(psi(parseTree("(o (o o))")) == P("(o (o o)) - ((o o) o)"), "psi of the up tree");
    return o;
}

Outcome shuffles() {
    Outcome o;
    const TreePoly s = shuffleMul(P("(x1 x2 x3)"), P("x4"));
    o.require(s.size() == 12 &&
                  s == P("(x1 x2 x3 x4) + (x1 x2 x4 x3) + (x1 x4 x2 x3) + (x4 x1 x2 x3)"
                         " + ((x1 x4) x2 x3) + (x1 (x2 x4) x3) + (x1 x2 (x3 x4))"
                         " + ((x4 x1) x2 x3) + (x1 (x4 x2) x3) + (x1 x2 (x4 x3))"
                         " + ((x1 x2 x3) x4) + (x4 (x1 x2 x3))"),
              "ternary corolla shuffle x4");
    TreePoly expected;
    std::vector<int> perm{1, 2, 3};
    do {
        std::vector<Label> labels;
        for (int k : perm) labels.push_back(Label::var(k));
        for (const auto& t : enumerateTrees(3, false, labels)) expected.add(t, 1);
    } while (std::next_permutation(perm.begin(), perm.end()));
    const TreePoly triple = shuffleMul(shuffleMul(P("x1"), P("x2")), P("x3"));
    o.require(triple.size() == 18 && triple == expected, "x1 sh x2 sh x3");
    for (const auto& r : {checkShuffleAdjunction(Operad::Mag, 5), checkShuffleAdjunction(Operad::Magw, 5)})
        o.require(r.pass, r.name + ": " + r.detail);
    return o;
}

Outcome constants() {
    Outcome o;
    const std::vector<std::size_t> expected{1, 0, 0, 1, 3, 9};
    for (int n = 0; n <= 5; ++n)
        o.require(constantsBasis(Operad::Mag, {n}).size() == expected[n], "one-variable constants n=" + std::to_string(n));
    for (auto op : {Operad::Mag, Operad::Magw})
        for (int d1 = 0; d1 <= 4; ++d1)
            for (int d2 = 0; d1 + d2 <= 4; ++d2) {
                std::size_t sum = 0;
                for (int j1 = 0; j1 <= d1; ++j1)
                    for (int j2 = 0; j2 <= d2; ++j2) sum += constantsBasis(op, {j1, j2}).size();
                o.require(componentBasis(op, {d1, d2}).size() == sum,
                          "Hilbert relation at (" + std::to_string(d1) + "," + std::to_string(d2) + ")");
            }
    return o;
}

}  // namespace

int main(int argc, char** argv) {
    bool withMag5 = false;
    for (int i = 1; i < argc; ++i)
        if (std::strcmp(argv[i], "--mag5") == 0) withMag5 = true;

    struct Criterion {
        int id;
        std::string title;
        double budgetSeconds;
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria{
        {1, "integer sequences", 1, sequences},
        {2, "even-arity census", 10, evenArityCensus},
        {3, "coproduct golden values", 1, coproductGoldens},
        {4, "coassociativity to degree 5", 60, coassociativity},
        {5, "derivative golden values", 1, derivatives},
        {6, "antipodes", 10, antipodes},
        {7, "Taylor expansion", 30, taylor},
        {8, withMag5 ? "primitive dimensions (with Mag n=5)" : "primitive dimensions", withMag5 ? 900.0 : 60.0,
         [withMag5] { return primitiveDimensions(withMag5); }},
        {9, "named primitives and Jacobi identity", 5, namedPrimitiveCheck},
        {10, "PBW bases and series identity", 300, pbw},
        {11, "highest weight vectors", 30, highestWeights},
        {12, "Hopf isomorphisms", 120, isomorphisms},
        {13, "shuffle product", 60, shuffles},
        {14, "constants and Hilbert series", 60, constants},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome out;
        try {
            out = c.run();
        } catch (const std::exception& e) {
            out.pass = false;
            out.detail = std::string("exception: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (out.pass && secs > c.budgetSeconds) {
            out.pass = false;
            out.detail = "over the time budget";
        }
        if (!out.pass) ++failures;
        std::cout << (out.pass ? "PASS" : "FAIL") << " criterion " << std::setw(2) << c.id << ": " << c.title << " ("
                  << std::fixed << std::setprecision(2) << secs << " s, budget " << std::setprecision(0)
                  << c.budgetSeconds << " s)";
        if (!out.pass) std::cout << " -- " << out.detail;
        std::cout << std::endl;
    }
    std::cout << (criteria.size() - static_cast<std::size_t>(failures)) << "/" << criteria.size() << " criteria passed"
              << std::endl;
    return failures == 0 ? 0 : 1;
}
