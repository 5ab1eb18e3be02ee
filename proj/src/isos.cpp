#include "treealg/isos.hpp"

namespace treealg {

YPoly xi(const Tree& t) {
    if (t.empty()) return YPoly(stump());
    thread_local std::map<Tree, YPoly> cache;
    if (auto it = cache.find(t); it != cache.end()) return it->second;
    YPoly out = veeV(xi(degraft(t)));
    cache.emplace(t, out);
    return out;
}

YPoly xi(const Forest& f) {
    YPoly out(stump());
    for (const auto& t : f.trees()) out = star(out, xi(t));
    return out;
}

YPoly xi(const ForestPoly& f) {
    return linearMap(f, [](const Forest& x) { return xi(x); });
}

namespace {

const std::map<Tree, ForestPoly>& thetaTable(int degree) {
    static std::mutex mu;
    static std::map<int, std::map<Tree, ForestPoly>> tables;
    std::lock_guard lock(mu);
    if (auto it = tables.find(degree); it != tables.end()) return it->second;

    const auto forests = enumerateForests(degree);
    const BasisIndex<Tree> trees(enumerateBinaryTrees(degree));
    if (forests.size() != trees.size())
        throw Error(ErrorCode::InternalInconsistency, "forest and tree counts differ in degree " + std::to_string(degree));
    RationalMatrix m(trees.size(), forests.size());
    for (std::size_t j = 0; j < forests.size(); ++j) {
        const auto v = trees.coordinates(xi(forests[j]));
        for (std::size_t i = 0; i < v.size(); ++i) m(i, j) = v[i];
    }
    std::map<Tree, ForestPoly> table;
    for (std::size_t i = 0; i < trees.size(); ++i) {
        std::vector<Rational> unit(trees.size());
        unit[i] = 1;
        auto x = solveExact(m, unit);
        if (!x) throw Error(ErrorCode::InternalInconsistency, "xi is not invertible in degree " + std::to_string(degree));
        ForestPoly image;
        for (std::size_t j = 0; j < forests.size(); ++j) image.add(forests[j], (*x)[j]);
        table.emplace(trees.basis()[i], std::move(image));
    }
    return tables.emplace(degree, std::move(table)).first->second;
}

}  // namespace

ForestPoly theta(const Tree& t) {
    if (t.empty() || !isBinary(t)) throw Error(ErrorCode::NotBinary, "expected a planar binary tree, got " + printTree(t));
    return thetaTable(t.internalCount()).at(t);
}

ForestPoly theta(const YPoly& f) {
    return linearMap(f, [](const Tree& t) { return theta(t); });
}

YPoly psi(const Tree& t) {
    if (t.empty() || !isBinary(t)) throw Error(ErrorCode::NotBinary, "expected a planar binary tree, got " + printTree(t));
    if (t.isLeaf() || t == yTree()) return YPoly(t);
    thread_local std::map<Tree, YPoly> cache;
    if (auto it = cache.find(t); it != cache.end()) return it->second;
    YPoly out;
    const Tree& left = t.child(0);
    const Tree& right = t.child(1);
    if (left.isLeaf()) {
        // right = veeArrow(A1..An), and the arguments of Gamma run from An down to A1
        const auto parts = rightCombPresentation(right);
        std::vector<YPoly> args;
        for (auto it = parts.rbegin(); it != parts.rend(); ++it) args.push_back(psi(*it));
        const YPoly g = gammaOp(args);
        out = veeV(g) - join(g, YPoly(stump()));
    } else {
        out = star(psi(veeV(right)), psi(left));
    }
    cache.emplace(t, out);
    return out;
}

YPoly psi(const YPoly& f) {
    return linearMap(f, [](const Tree& t) { return psi(t); });
}

HopfModel<Tree> lodayRoncoModel() {
    return {"Loday-Ronco", enumerateBinaryTrees, [](const Tree& a, const Tree& b) { return star(a, b); },
            [](const Tree& t) { return deltaLR(t); }};
}

HopfModel<Tree> brouderFrabettiModel() {
    return {"Brouder-Frabetti", enumerateBinaryTrees,
            [](const Tree& a, const Tree& b) { return YPoly(circAlpha(a, b)); },
            [](const Tree& t) { return deltaBF(t); }};
}

HopfModel<Forest> connesKreimerModel() {
    return {"planar Connes-Kreimer", enumerateForests,
            [](const Forest& a, const Forest& b) { return ForestPoly(concat(a, b)); },
            [](const Forest& f) { return deltaCK(f); }};
}

GradedLinearMap<Forest, Tree> xiMap() {
    return {"xi", [](const Forest& f) { return xi(f); }};
}

GradedLinearMap<Tree, Forest> thetaMap() {
    return {"theta", [](const Tree& t) { return theta(t); }};
}

GradedLinearMap<Tree, Tree> psiMap() {
    return {"psi", [](const Tree& t) { return psi(t); }};
}

}  // namespace treealg
