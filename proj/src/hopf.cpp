#include "treealg/hopf.hpp"

#include "treealg/dendriform.hpp"

#include <bit>
#include <map>

namespace treealg {

std::string coproductKindName(CoproductKind kind) {
    switch (kind) {
        case CoproductKind::Coadd: return "coadd";
        case CoproductKind::LodayRonco: return "lr";
        case CoproductKind::ConnesKreimerPlanar: return "ck";
        case CoproductKind::BrouderFrabetti: return "bf";
    }
    return "?";
}

// ---- co-addition ---------------------------------------------------------------------------

TreeTensor coaddition(const Tree& t) {
    if (t.empty()) return TreeTensor({t, t});
    const int n = t.leafCount();
    if (n > 20) throw Error(ErrorCode::DimensionMismatch, "co-addition limited to 20 leaves");
    TreeTensor out;
    const std::uint64_t full = LeafSet::all(n).bits();
    for (std::uint64_t mask = 0; mask <= full; ++mask)
        out.add({restrictReduced(t, LeafSet(mask)), restrictReduced(t, LeafSet(full & ~mask))}, 1);
    return out;
}

TreeTensor coaddition(const TreePoly& f) {
    return linearMap(f, [](const Tree& t) { return coaddition(t); });
}

TreeTensor coadditionLowDegree(const Tree& t, int maxLeftDegree) {
    TreeTensor out;
    const int n = t.leafCount();
    const std::uint64_t full = LeafSet::all(n).bits();
    for (std::uint64_t mask = 1; mask < full; ++mask) {
        if (std::popcount(mask) > maxLeftDegree) continue;
        out.add({restrictReduced(t, LeafSet(mask)), restrictReduced(t, LeafSet(full & ~mask))}, 1);
    }
    return out;
}

namespace {

Tree unitOf(CoproductKind kind) { return kind == CoproductKind::Coadd ? Tree() : stump(); }

TreeTensor fullCoproduct(CoproductKind kind, const TreePoly& f) {
    switch (kind) {
        case CoproductKind::Coadd: return coaddition(f);
        case CoproductKind::LodayRonco: return deltaLR(f);
        case CoproductKind::BrouderFrabetti: return deltaBF(f);
        case CoproductKind::ConnesKreimerPlanar: break;
    }
    throw Error(ErrorCode::DimensionMismatch, "the planar Connes-Kreimer coproduct acts on forests");
}

}  // namespace

TreeTensor reducedCoproduct(CoproductKind kind, const TreePoly& f) {
    const Tree unit = unitOf(kind);
    if (sgn(f.coefficient(unit)) != 0) throw Error(ErrorCode::UnitTerm, "reduced coproduct of an element with unit term");
    TreeTensor d = fullCoproduct(kind, f);
    for (const auto& [t, c] : f) {
        d.add({t, unit}, -c);
        d.add({unit, t}, -c);
    }
    return d;
}

ForestTensor reducedCoproduct(const ForestPoly& f) {
    if (sgn(f.coefficient(Forest())) != 0) throw Error(ErrorCode::UnitTerm, "reduced coproduct of an element with unit term");
    ForestTensor d = deltaCK(f);
    for (const auto& [x, c] : f) {
        d.add({x, Forest()}, -c);
        d.add({Forest(), x}, -c);
    }
    return d;
}

// ---- shuffle -----------------------------------------------------------------------------------

TreePoly shuffleMul(const TreePoly& f, const TreePoly& g, Operad operad) {
    TreePoly out = bilinearMap(f, g, [](const Tree& a, const Tree& b) {
        TreePoly p;
        for (const auto& w : enumerateShuffles(a, b)) p.add(w.tree, w.multiplicity);
        return p;
    });
    return operad == Operad::Mag ? projectToMag(out) : out;
}

TreeTensor shuffleTensor(const TreeTensor& a, const TreeTensor& b, Operad operad) {
    TreeTensor out;
    for (const auto& [x, cx] : a)
        for (const auto& [y, cy] : b)
            out += tensor(shuffleMul(TreePoly(x[0]), TreePoly(y[0]), operad),
                          shuffleMul(TreePoly(x[1]), TreePoly(y[1]), operad)) *
                   (cx * cy);
    return out;
}

TreeTensor nablaTwo(const Tree& t) {
    if (t.empty()) return TreeTensor({t, t});
    TreeTensor out({t, Tree()});
    out.add({Tree(), t}, 1);
    if (t.isNode() && t.arity() == 2) out.add({t.child(0), t.child(1)}, 1);
    return out;
}

TreeTensor nablaTwo(const TreePoly& f) {
    return linearMap(f, [](const Tree& t) { return nablaTwo(t); });
}

// ---- antipodes -------------------------------------------------------------------------------

namespace {

TreePoly antipodeMonomial(const Tree& t, bool left) {
    if (t.empty()) return TreePoly(t);
    thread_local std::map<std::pair<Tree, bool>, TreePoly> cache;
    auto key = std::pair{t, left};
    if (auto it = cache.find(key); it != cache.end()) return it->second;
    TreePoly out(t, -1);
    for (const auto& [x, c] : reducedCoproduct(CoproductKind::Coadd, TreePoly(t))) {
        if (left)
            out.addScaled(dot(antipodeMonomial(x[0], true), TreePoly(x[1])), -c);
        else
            out.addScaled(dot(TreePoly(x[0]), antipodeMonomial(x[1], false)), -c);
    }
    cache.emplace(std::move(key), out);
    return out;
}

void requireNoUnit(const TreePoly& f) {
    if (sgn(f.coefficient(Tree())) != 0) throw Error(ErrorCode::UnitTerm, "antipode recursion needs zero unit coefficient");
}

}  // namespace

TreePoly antipodeLeft(const TreePoly& f) {
    requireNoUnit(f);
    return linearMap(f, [](const Tree& t) { return antipodeMonomial(t, true); });
}

TreePoly antipodeRight(const TreePoly& f) {
    requireNoUnit(f);
    return linearMap(f, [](const Tree& t) { return antipodeMonomial(t, false); });
}

TreePoly leftAntipodeComposite(const TreePoly& f) {
    TreePoly out;
    for (const auto& [x, c] : coaddition(f)) out.addScaled(dot(antipodeMonomial(x[0], true), TreePoly(x[1])), c);
    return out;
}

TreePoly rightAntipodeComposite(const TreePoly& f) {
    TreePoly out;
    for (const auto& [x, c] : coaddition(f)) out.addScaled(dot(TreePoly(x[0]), antipodeMonomial(x[1], false)), c);
    return out;
}

// ---- primitivity ----------------------------------------------------------------------------------

bool isPrimitive(CoproductKind kind, const TreePoly& f) {
    if (sgn(f.coefficient(unitOf(kind))) != 0) return false;
    return reducedCoproduct(kind, f).isZero();
}

bool isPrimitive(const ForestPoly& f) {
    if (sgn(f.coefficient(Forest())) != 0) return false;
    return reducedCoproduct(f).isZero();
}

bool isPrimitiveCoaddFast(const TreePoly& f) {
    if (sgn(f.coefficient(Tree())) != 0) return false;
    std::map<int, TreeTensor> byDegree;
    for (const auto& [t, c] : f) {
        const int n = t.leafCount();
        byDegree[n].addScaled(coadditionLowDegree(t, n / 2), c);
    }
    for (const auto& [n, d] : byDegree)
        if (!d.isZero()) return false;
    return true;
}

// ---- coassociativity ---------------------------------------------------------------------------------

namespace {

template <class B, class Delta>
bool coassociativeOn(const B& b, Delta&& delta) {
    const auto d = delta(b);
    return applyLeft(d, delta) == applyRight(d, delta);
}

template <class B, class Delta>
void sweep(CheckReport& report, const std::vector<B>& basis, Delta&& delta, std::string (*show)(const B&)) {
    for (const auto& b : basis) {
        ++report.checked;
        if (!coassociativeOn(b, delta)) {
            report.pass = false;
            if (report.detail.empty()) report.detail = "fails on " + show(b);
        }
    }
}

std::string showTree(const Tree& t) { return printTree(t); }
std::string showForest(const Forest& f) { return printForest(f); }

}  // namespace

CheckReport checkCoassociative(CoproductKind kind, int maxDegree, Operad operad) {
    CheckReport report;
    report.name = "coassociativity " + coproductKindName(kind) + " up to degree " + std::to_string(maxDegree);
    auto treeDelta = [kind](const Tree& t) { return fullCoproduct(kind, TreePoly(t)); };
    switch (kind) {
        case CoproductKind::Coadd:
            for (int n = 1; n <= maxDegree; ++n) {
                std::vector<Label> distinct, single(static_cast<std::size_t>(n), Label::var(1));
                for (int i = 1; i <= n; ++i) distinct.push_back(Label::var(i));
                sweep(report, enumerateTrees(n, operad == Operad::Mag, distinct), treeDelta, showTree);
                sweep(report, enumerateTrees(n, operad == Operad::Mag, single), treeDelta, showTree);
            }
            break;
        case CoproductKind::LodayRonco:
        case CoproductKind::BrouderFrabetti:
            for (int n = 0; n <= maxDegree; ++n) sweep(report, enumerateBinaryTrees(n), treeDelta, showTree);
            break;
        case CoproductKind::ConnesKreimerPlanar:
            for (int n = 0; n <= maxDegree; ++n)
                sweep(report, enumerateForests(n), [](const Forest& f) { return deltaCK(f); }, showForest);
            break;
    }
    return report;
}

}  // namespace treealg
