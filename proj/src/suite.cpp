#include "treealg/suite.hpp"

#include "treealg/dendriform.hpp"
#include "treealg/isos.hpp"
#include "treealg/primitives.hpp"

#include <algorithm>
#include <random>

namespace treealg {

namespace {

CheckReport named(std::string name) {
    CheckReport r;
    r.name = std::move(name);
    return r;
}

void note(CheckReport& r, bool ok, const std::string& what) {
    ++r.checked;
    if (!ok) {
        r.pass = false;
        if (r.detail.empty()) r.detail = what;
    }
}

std::vector<Label> labelsUpTo(int n) {
    std::vector<Label> v;
    for (int i = 1; i <= n; ++i) v.push_back(Label::var(i));
    return v;
}

std::vector<Label> singleLabel(int n) { return std::vector<Label>(static_cast<std::size_t>(n), Label::var(1)); }

CheckReport fromMorphism(const MorphismReport& m) {
    CheckReport r;
    r.name = m.name;
    r.pass = m.pass();
    r.checked = m.checked;
    r.detail = m.firstFailure;
    return r;
}

CheckReport checkEnumerationCounts(int maxDegree) {
    CheckReport r = named("trees.counts");
    const int top = std::max(maxDegree + 1, 2);
    const auto cat = sequence(SequenceKind::Catalan, top);
    const auto super = sequence(SequenceKind::SuperCatalan, top);
    for (int n = 1; n <= top; ++n) {
        const auto i = static_cast<std::size_t>(n - 1);
        note(r, cat.values[i] == static_cast<unsigned long>(enumerateTrees(n, true).size()), "binary count n=" + std::to_string(n));
        note(r, super.values[i] == static_cast<unsigned long>(enumerateTrees(n, false).size()), "reduced count n=" + std::to_string(n));
        note(r, cat.values[i] == static_cast<unsigned long>(enumerateBinaryTrees(n - 1).size()), "YTree count n=" + std::to_string(n));
    }
    return r;
}

CheckReport checkRoundTrip(int maxDegree) {
    CheckReport r = named("trees.round-trip");
    for (int n = 1; n <= maxDegree; ++n)
        for (const auto& t : enumerateTrees(n, false, labelsUpTo(n))) {
            note(r, parseTree(printTree(t)) == t, "tree " + printTree(t));
            const TreeTensor d = coaddition(t);
            note(r, parseTreeTensor(printPoly(d)) == d, "tensor of " + printTree(t));
        }
    for (int n = 0; n <= maxDegree; ++n)
        for (const auto& f : enumerateForests(n)) note(r, parseForest(printForest(f)) == f, "forest " + printForest(f));
    return r;
}

CheckReport checkShuffleEnumeration(int maxDegree) {
    CheckReport r = named("trees.shuffle-merge");
    for (int a = 1; a < maxDegree; ++a)
        for (int b = 1; a + b <= maxDegree; ++b)
            for (const auto& s : enumerateTrees(a, false, singleLabel(a)))
                for (const auto& t : enumerateTrees(b, false, singleLabel(b))) {
                    const auto fast = enumerateShuffles(s, t);
                    const auto slow = enumerateShufflesBruteForce(s, t);
                    bool same = fast.size() == slow.size();
                    for (std::size_t i = 0; same && i < fast.size(); ++i)
                        same = fast[i].tree == slow[i].tree && fast[i].multiplicity == slow[i].multiplicity;
                    note(r, same, printTree(s) + " with " + printTree(t));
                }
    return r;
}

CheckReport checkStarAssociative(int maxDegree) {
    CheckReport r = named("dendriform.star-associative");
    for (int a = 1; a <= maxDegree; ++a)
        for (int b = 1; a + b <= maxDegree; ++b)
            for (int c = 1; a + b + c <= maxDegree; ++c)
                for (const auto& x : enumerateBinaryTrees(a))
                    for (const auto& y : enumerateBinaryTrees(b))
                        for (const auto& z : enumerateBinaryTrees(c)) {
                            const YPoly lhs = star(star(YPoly(x), YPoly(y)), YPoly(z));
                            const YPoly rhs = star(YPoly(x), star(YPoly(y), YPoly(z)));
                            note(r, lhs == rhs && prec(prec(YPoly(x), YPoly(y)), YPoly(z)) ==
                                                      prec(YPoly(x), star(YPoly(y), YPoly(z))),
                                 printTree(x) + " " + printTree(y) + " " + printTree(z));
                        }
    return r;
}

CheckReport checkJacobi(int) {
    CheckReport r = named("primitives.jacobi");
    const auto j = jacobiCheck();
    note(r, j.identity, "cyclic sum of brackets differs from the associator sum");
    note(r, j.antisymmetry, "antisymmetry");
    note(r, j.rightNormed, "right-normed form of a(x1,x2,x3)");
    note(r, j.classical, "cyclic sum of a(x1,x2,x3)");
    return r;
}

CheckReport checkNamed(int) {
    CheckReport r = named("primitives.named");
    for (const auto& p : namedPrimitives()) note(r, p.primitive, p.name + " is not primitive");
    return r;
}

CheckReport checkPrimDims(int maxDegree) {
    CheckReport r = named("primitives.dimensions");
    for (Operad op : {Operad::Mag, Operad::Magw})
        for (int n = 1; n <= std::min(maxDegree, 4); ++n) {
            const auto d = primDim(op, n);
            note(r, d.match, d.component + ": kernel " + std::to_string(d.primDim.value_or(0)) + ", formula " +
                                 d.formulaDim.get_str());
        }
    return r;
}

CheckReport checkHalfDegree(int maxDegree) {
    CheckReport r = named("primitives.half-degree");
    for (Operad op : {Operad::Mag, Operad::Magw})
        for (int n = 1; n <= std::min(maxDegree, 4); ++n)
            for (const auto& c : {GradedComponent::magma(op, {n}), GradedComponent::multilinearMagma(op, n)}) {
                const auto half = primBasis(c, CoproductKind::Coadd, PrimMethod::HalfDegree);
                const auto full = primBasis(c, CoproductKind::Coadd, PrimMethod::FullKernel);
                auto both = half;
                both.insert(both.end(), full.begin(), full.end());
                note(r, half.size() == full.size() && polyRank(both) == half.size(), c.describe());
            }
    return r;
}

CheckReport checkPbw(int maxDegree) {
    CheckReport r = named("primitives.pbw");
    std::vector<std::size_t> prim, ambient;
    for (int n = 2; n <= std::max(maxDegree, 2); ++n) {
        const auto rep = pbwCheckOneVariable(Operad::Mag, n);
        note(r, rep.pass(), rep.component);
    }
    for (int n = 1; n <= std::max(maxDegree, 2); ++n) {
        const auto c = GradedComponent::magma(Operad::Mag, {n});
        prim.push_back(primBasis(c, CoproductKind::Coadd).size());
        ambient.push_back(c.dimension());
    }
    note(r, pbwSeriesIdentity(prim, ambient, false), "one-variable series identity");
    for (Operad op : {Operad::Mag, Operad::Magw})
        for (int n = 2; n <= std::min(maxDegree, op == Operad::Mag ? 4 : 3); ++n) {
            const auto rep = pbwCheckMultilinear(op, n);
            note(r, rep.pass(), rep.component);
        }
    return r;
}

CheckReport checkHighestWeight(int) {
    CheckReport r = named("primitives.highest-weight");
    note(r, highestWeightBasis(Operad::Mag, {3, 1}, WeightConstraint::Primitive).size() == 10, "multidegree (3,1)");
    note(r, highestWeightBasis(Operad::Mag, {4}, WeightConstraint::Primitive).size() == 3, "one variable, degree 4");
    return r;
}

CheckReport checkPrimClosedUnderBracket(int maxDegree) {
    CheckReport r = named("primitives.bracket-closed");
    std::vector<std::vector<TreePoly>> prim;
    for (int n = 1; n <= maxDegree; ++n) prim.push_back(primBasis(GradedComponent::magma(Operad::Magw, {n}), CoproductKind::Coadd));
    for (int a = 1; a < maxDegree; ++a)
        for (int b = a; a + b <= maxDegree; ++b)
            for (const auto& f : prim[static_cast<std::size_t>(a - 1)])
                for (const auto& g : prim[static_cast<std::size_t>(b - 1)])
                    note(r, isPrimitive(CoproductKind::Coadd, commutator(f, g)), "[" + printPoly(f) + ", " + printPoly(g) + "]");
    return r;
}

CheckReport checkThetaInverse(int maxDegree) {
    CheckReport r = named("isos.theta-inverse");
    for (int n = 0; n <= maxDegree; ++n) {
        for (const auto& f : enumerateForests(n)) note(r, theta(xi(f)) == ForestPoly(f), "theta(xi(" + printForest(f) + "))");
        for (const auto& t : enumerateBinaryTrees(n)) note(r, xi(theta(t)) == YPoly(t), "xi(theta(" + printTree(t) + "))");
    }
    return r;
}

}  // namespace

CheckReport checkShuffleAdjunction(Operad operad, int maxDegree) {
    CheckReport r = named(std::string("shuffle.adjunction ") + (operad == Operad::Mag ? "mag" : "magw"));
    const bool binary = operad == Operad::Mag;
    for (int a = 1; a < maxDegree; ++a)
        for (int b = 1; a + b <= maxDegree; ++b) {
            // one variable stresses multiplicities; disjoint variables give the multilinear case
            for (bool single : {true, false}) {
                std::vector<Label> left = single ? singleLabel(a) : labelsUpTo(a), right;
                for (int i = 1; i <= b; ++i) right.push_back(single ? Label::var(1) : Label::var(a + i));
                Multidegree md = single ? Multidegree{a + b} : Multidegree(static_cast<std::size_t>(a + b), 1);
                const auto hosts = componentBasis(operad, md);
                for (const auto& s : enumerateTrees(a, binary, left))
                    for (const auto& t : enumerateTrees(b, binary, right)) {
                        const TreePoly sh = shuffleMul(TreePoly(s), TreePoly(t), operad);
                        const TreeTensor st({s, t});
                        bool ok = true;
                        for (const auto& h : hosts)
                            if (pairing(sh, TreePoly(h)) != pairing(st, coaddition(h))) ok = false;
                        note(r, ok, printTree(s) + " with " + printTree(t));
                    }
            }
        }
    return r;
}

CheckReport checkAntipodeIdentities(int maxDegree) {
    CheckReport r = named("hopf.antipode");
    auto test = [&r](const Tree& t) {
        const TreePoly f(t);
        note(r, leftAntipodeComposite(f).isZero() && rightAntipodeComposite(f).isZero(), printTree(t));
    };
    for (int n = 1; n <= maxDegree; ++n) {
        for (const auto& t : enumerateTrees(n, false, singleLabel(n))) test(t);
        for (const auto& t : enumerateTrees(n, false, labelsUpTo(n))) test(t);
    }
    return r;
}

CheckReport checkTaylorReconstruction(int samples, int maxDegree, int maxVariables, unsigned seed) {
    CheckReport r = named("magma.taylor");
    std::mt19937 rng(seed);
    auto pick = [&rng](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
    for (int s = 0; s < samples; ++s) {
        const int m = pick(1, maxVariables);
        TreePoly f;
        const int terms = pick(1, 4);
        for (int k = 0; k < terms; ++k) {
            const int n = pick(0, maxDegree);
            if (n == 0) {
                f.add(Tree(), pick(-3, 3));
                continue;
            }
            const auto& shapes = enumerateTrees(n, false);
            std::vector<Label> labels;
            for (int i = 0; i < n; ++i) labels.push_back(Label::var(pick(1, m)));
            f.add(relabel(shapes[static_cast<std::size_t>(pick(0, static_cast<int>(shapes.size()) - 1))], labels), pick(-3, 3));
        }
        const auto e = taylorRight(f, m);
        bool constants = true;
        for (const auto& [j, a] : e.coefficients) constants = constants && isConstant(a, m);
        note(r, reconstruct(e) == f && constants, printPoly(f));
    }
    return r;
}

CheckReport checkCutsFormula(int maxDegree) {
    CheckReport r = named("dendriform.ck-cuts");
    for (int n = 0; n <= maxDegree; ++n)
        for (const auto& f : enumerateForests(n)) note(r, deltaCK(f) == deltaCKByCuts(f), printForest(f));
    return r;
}

CheckReport checkBFClosedForm(int maxDegree) {
    CheckReport r = named("dendriform.bf-closed-form");
    for (int n = 1; n <= maxDegree; ++n)
        for (const auto& t : enumerateBinaryTrees(n))
            if (t.child(0).isLeaf()) note(r, deltaBF(t) == deltaBFClosedForm(t), printTree(t));
    return r;
}

const std::vector<SuiteCheck>& suiteChecks() {
    static const std::vector<SuiteCheck> checks = {
        {"trees.counts", checkEnumerationCounts},
        {"trees.round-trip", checkRoundTrip},
        {"trees.shuffle-merge", checkShuffleEnumeration},
        {"hopf.coassociative.coadd-mag", [](int d) { return checkCoassociative(CoproductKind::Coadd, d, Operad::Mag); }},
        {"hopf.coassociative.coadd-magw", [](int d) { return checkCoassociative(CoproductKind::Coadd, d, Operad::Magw); }},
        {"hopf.coassociative.lr", [](int d) { return checkCoassociative(CoproductKind::LodayRonco, d); }},
        {"hopf.coassociative.ck", [](int d) { return checkCoassociative(CoproductKind::ConnesKreimerPlanar, d); }},
        {"hopf.coassociative.bf", [](int d) { return checkCoassociative(CoproductKind::BrouderFrabetti, d); }},
        {"hopf.antipode", checkAntipodeIdentities},
        {"shuffle.adjunction-mag", [](int d) { return checkShuffleAdjunction(Operad::Mag, d); }},
        {"shuffle.adjunction-magw", [](int d) { return checkShuffleAdjunction(Operad::Magw, d); }},
        {"magma.taylor", [](int d) { return checkTaylorReconstruction(50, d, 3, 7); }},
        {"dendriform.star-associative", checkStarAssociative},
        {"dendriform.ck-cuts", checkCutsFormula},
        {"dendriform.bf-closed-form", checkBFClosedForm},
        {"primitives.jacobi", checkJacobi},
        {"primitives.named", checkNamed},
        {"primitives.dimensions", checkPrimDims},
        {"primitives.half-degree", checkHalfDegree},
        {"primitives.bracket-closed", checkPrimClosedUnderBracket},
        {"primitives.pbw", checkPbw},
        {"primitives.highest-weight", checkHighestWeight},
        {"isos.theta", [](int d) { return fromMorphism(verifyHopfMorphism(thetaMap(), lodayRoncoModel(), connesKreimerModel(), d)); }},
        {"isos.psi", [](int d) { return fromMorphism(verifyHopfMorphism(psiMap(), brouderFrabettiModel(), lodayRoncoModel(), std::min(d, 4))); }},
        // psi loses injectivity in degree 5, so only the morphism properties are checked beyond degree 4
        {"isos.psi-morphism", [](int d) {
             auto m = verifyHopfMorphism(psiMap(), brouderFrabettiModel(), lodayRoncoModel(), d);
             m.bijective = true;
             if (m.firstFailure.rfind("not bijective", 0) == 0) m.firstFailure.clear();
             return fromMorphism(m);
         }},
        {"isos.theta-inverse", checkThetaInverse},
    };
    return checks;
}

namespace {

bool selects(const std::string& group, const std::string& name) {
    if (group == "all" || name == group || name.rfind(group + ".", 0) == 0) return true;
    // the part after the first dot also works, e.g. "jacobi" for "primitives.jacobi"
    const auto dot = name.find('.');
    return dot != std::string::npos && name.compare(dot + 1, std::string::npos, group) == 0;
}

}  // namespace

std::vector<std::string> suiteGroups() {
    std::vector<std::string> groups{"all"};
    auto addUnique = [&groups](const std::string& g) {
        if (std::find(groups.begin(), groups.end(), g) == groups.end()) groups.push_back(g);
    };
    for (const auto& c : suiteChecks()) {
        const auto dot = c.name.find('.');
        addUnique(c.name.substr(0, dot));
        addUnique(c.name);
        addUnique(c.name.substr(dot + 1));
    }
    return groups;
}

std::vector<CheckReport> runSuite(const std::string& group, int maxDegree) {
    std::vector<CheckReport> out;
    for (const auto& c : suiteChecks()) {
        if (!selects(group, c.name)) continue;
        CheckReport r = c.run(maxDegree);
        r.name = c.name;
        out.push_back(std::move(r));
    }
    return out;
}

}  // namespace treealg
