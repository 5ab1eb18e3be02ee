#include "treealg/dendriform.hpp"

#include <map>

namespace treealg {

namespace {

void requireBinary(const Tree& t) {
    if (t.empty() || !isBinary(t)) throw Error(ErrorCode::NotBinary, "expected a planar binary tree, got " + printTree(t));
}

const Tree& leftOf(const Tree& t) { return t.child(0); }
const Tree& rightOf(const Tree& t) { return t.child(1); }

}  // namespace

Tree stump() { return Tree::leaf(); }
Tree yTree() { return Tree::node({stump(), stump()}); }
Tree join(const Tree& left, const Tree& right) { return Tree::node({left, right}); }

YPoly join(const YPoly& left, const YPoly& right) {
    return bilinearMap(left, right, [](const Tree& a, const Tree& b) { return YPoly(join(a, b)); });
}

// ---- dendriform operations ---------------------------------------------------------------

YPoly star(const Tree& x, const Tree& y) {
    if (x.isLeaf()) return YPoly(y);
    if (y.isLeaf()) return YPoly(x);
    thread_local std::map<std::pair<Tree, Tree>, YPoly> cache;
    auto key = std::pair{x, y};
    if (auto it = cache.find(key); it != cache.end()) return it->second;
    YPoly r = prec(x, y) + succ(x, y);
    cache.emplace(std::move(key), r);
    return r;
}

YPoly prec(const Tree& x, const Tree& y) {
    requireBinary(x);
    requireBinary(y);
    if (x.isLeaf() && y.isLeaf()) throw Error(ErrorCode::UnitUnit, "| < | is undefined");
    if (x.isLeaf()) return YPoly();
    if (y.isLeaf()) return YPoly(x);
    return join(YPoly(leftOf(x)), star(rightOf(x), y));
}

YPoly succ(const Tree& x, const Tree& y) {
    requireBinary(x);
    requireBinary(y);
    if (x.isLeaf() && y.isLeaf()) throw Error(ErrorCode::UnitUnit, "| > | is undefined");
    if (y.isLeaf()) return YPoly();
    if (x.isLeaf()) return YPoly(y);
    return join(star(x, leftOf(y)), YPoly(rightOf(y)));
}

YPoly prec(const YPoly& x, const YPoly& y) {
    return bilinearMap(x, y, [](const Tree& a, const Tree& b) { return prec(a, b); });
}
YPoly succ(const YPoly& x, const YPoly& y) {
    return bilinearMap(x, y, [](const Tree& a, const Tree& b) { return succ(a, b); });
}
YPoly star(const YPoly& x, const YPoly& y) {
    return bilinearMap(x, y, [](const Tree& a, const Tree& b) { return star(a, b); });
}

// ---- grafting at extreme leaves -------------------------------------------------------------

Tree under(const Tree& t, const Tree& s) {
    if (t.isLeaf()) return s;
    std::vector<Tree> kids = t.children();
    kids.back() = under(kids.back(), s);
    return Tree::node(std::move(kids));
}

Tree circAlpha(const Tree& t, const Tree& s) {
    if (t.isLeaf()) return s;
    std::vector<Tree> kids = t.children();
    kids.front() = circAlpha(kids.front(), s);
    return Tree::node(std::move(kids));
}

Tree over(const Tree& t, const Tree& s) { return circAlpha(s, t); }

YPoly circAlpha(const YPoly& t, const YPoly& s) {
    return bilinearMap(t, s, [](const Tree& a, const Tree& b) { return YPoly(circAlpha(a, b)); });
}

Tree veeV(const Tree& t) { return join(stump(), t); }

YPoly veeV(const YPoly& t) {
    return linearMap(t, [](const Tree& a) { return YPoly(veeV(a)); });
}

Tree veeArrow(const std::vector<Tree>& parts) { return rightCombGraft(parts); }

YPoly veeArrow(const std::vector<YPoly>& parts) {
    YPoly out;
    std::vector<Tree> current(parts.size());
    auto rec = [&](auto&& self, std::size_t i, const Rational& coeff) -> void {
        if (i == parts.size()) {
            out.add(veeArrow(current), coeff);
            return;
        }
        for (const auto& [t, c] : parts[i]) {
            current[i] = t;
            self(self, i + 1, coeff * c);
        }
    };
    rec(rec, 0, Rational(1));
    return out;
}

YPoly gammaOp(const std::vector<YPoly>& parts) {
    if (parts.empty()) throw Error(ErrorCode::EmptyArgument, "Gamma needs at least one argument");
    const YPoly bar(stump());
    // Gamma(T1..Tn) = T1 v Gamma(T2..Tn) - (T1 * Gamma(T2..Tn)) v |, starting from Gamma(Tn) = Tn v |
    YPoly g = join(parts.back(), bar);
    for (std::size_t j = parts.size() - 1; j-- > 0;) g = join(parts[j], g) - join(star(parts[j], g), bar);
    return g;
}

// ---- tensors ---------------------------------------------------------------------------------

TreeTensor starTensor(const TreeTensor& a, const TreeTensor& b) {
    TreeTensor out;
    for (const auto& [x, cx] : a)
        for (const auto& [y, cy] : b) {
            const YPoly left = star(x[0], y[0]);
            const YPoly right = star(x[1], y[1]);
            for (const auto& [l, cl] : left)
                for (const auto& [r, cr] : right) out.add({l, r}, cx * cy * cl * cr);
        }
    return out;
}

TreeTensor circAlphaTensor(const TreeTensor& a, const TreeTensor& b) {
    TreeTensor out;
    for (const auto& [x, cx] : a)
        for (const auto& [y, cy] : b) out.add({circAlpha(x[0], y[0]), circAlpha(x[1], y[1])}, cx * cy);
    return out;
}

// ---- Loday-Ronco ------------------------------------------------------------------------------

TreeTensor deltaLR(const Tree& t) {
    requireBinary(t);
    if (t.isLeaf()) return TreeTensor({t, t});
    thread_local std::map<Tree, TreeTensor> cache;
    if (auto it = cache.find(t); it != cache.end()) return it->second;
    TreeTensor out({t, stump()});
    const TreeTensor dl = deltaLR(leftOf(t));
    const TreeTensor dr = deltaLR(rightOf(t));
    for (const auto& [a, ca] : dl)
        for (const auto& [b, cb] : dr) {
            const Tree second = join(a[1], b[1]);
            for (const auto& [s, cs] : star(a[0], b[0])) out.add({s, second}, ca * cb * cs);
        }
    cache.emplace(t, out);
    return out;
}

TreeTensor deltaLR(const YPoly& f) {
    return linearMap(f, [](const Tree& t) { return deltaLR(t); });
}

// ---- Brouder-Frabetti ---------------------------------------------------------------------------

TreeTensor deltaBF(const Tree& t) {
    requireBinary(t);
    if (t.isLeaf()) return TreeTensor({t, t});
    thread_local std::map<Tree, TreeTensor> cache;
    if (auto it = cache.find(t); it != cache.end()) return it->second;
    TreeTensor out;
    if (leftOf(t).isLeaf()) {
        const Tree& inner = rightOf(t);
        if (inner.isLeaf()) {
            out.add({t, stump()}, 1);
            out.add({stump(), t}, 1);
        } else {
            TreeTensor head = deltaBF(veeV(rightOf(inner)));
            head.add({veeV(rightOf(inner)), stump()}, -1);
            const TreeTensor prod = circAlphaTensor(head, deltaBF(leftOf(inner)));
            out.add({t, stump()}, 1);
            for (const auto& [x, c] : prod) out.add({x[0], veeV(x[1])}, c);
        }
    } else {
        // t = V(t_r) o_alpha t_l
        out = circAlphaTensor(deltaBF(veeV(rightOf(t))), deltaBF(leftOf(t)));
    }
    cache.emplace(t, out);
    return out;
}

TreeTensor deltaBF(const YPoly& f) {
    return linearMap(f, [](const Tree& t) { return deltaBF(t); });
}

TreeTensor deltaBFClosedForm(const Tree& t) {
    requireBinary(t);
    if (t.isLeaf() || !leftOf(t).isLeaf()) throw Error(ErrorCode::NotBinary, "closed form needs a tree | v T");
    const Tree& inner = rightOf(t);
    TreeTensor out({t, stump()});
    if (inner.isLeaf()) {
        out.add({stump(), t}, 1);
        return out;
    }
    const auto parts = rightCombPresentation(inner);  // inner = veeArrow(parts)
    std::vector<TreeTensor> deltas;
    for (const auto& p : parts) deltas.push_back(deltaBF(p));
    const std::size_t n = parts.size();
    std::vector<Tree> firsts(n), seconds(n);
    auto rec = [&](auto&& self, std::size_t i, const Rational& coeff) -> void {
        if (i == n) {
            Tree first = stump();
            for (std::size_t k = n; k-- > 0;) first = circAlpha(first, firsts[k]);
            out.add({first, veeV(veeArrow(seconds))}, coeff);
            return;
        }
        for (const auto& [x, c] : deltas[i]) {
            firsts[i] = x[0];
            seconds[i] = x[1];
            self(self, i + 1, coeff * c);
        }
    };
    rec(rec, 0, Rational(1));
    return out;
}

// ---- planar Connes-Kreimer ------------------------------------------------------------------------

ForestPoly forestProduct(const ForestPoly& a, const ForestPoly& b) {
    return bilinearMap(a, b, [](const Forest& x, const Forest& y) { return ForestPoly(concat(x, y)); });
}

ForestTensor forestTensorProduct(const ForestTensor& a, const ForestTensor& b) {
    ForestTensor out;
    for (const auto& [x, cx] : a)
        for (const auto& [y, cy] : b) out.add({concat(x[0], y[0]), concat(x[1], y[1])}, cx * cy);
    return out;
}

ForestTensor deltaCK(const Tree& t) {
    if (t.empty()) throw Error(ErrorCode::EmptyTree, "coproduct of the empty tree");
    thread_local std::map<Tree, ForestTensor> cache;
    if (auto it = cache.find(t); it != cache.end()) return it->second;
    ForestTensor inner({Forest(), Forest()});
    for (const auto& c : t.children()) inner = forestTensorProduct(inner, deltaCK(c));
    ForestTensor out({Forest{t}, Forest()});
    for (const auto& [x, c] : inner) out.add({x[0], Forest{graft(x[1])}}, c);
    cache.emplace(t, out);
    return out;
}

ForestTensor deltaCK(const Forest& f) {
    ForestTensor out({Forest(), Forest()});
    for (const auto& t : f.trees()) out = forestTensorProduct(out, deltaCK(t));
    return out;
}

ForestTensor deltaCK(const ForestPoly& f) {
    return linearMap(f, [](const Forest& x) { return deltaCK(x); });
}

ForestTensor deltaCKByCuts(const Forest& f) {
    ForestTensor out({Forest(), Forest()});
    for (const auto& t : f.trees()) {
        ForestTensor d;
        for (const auto& cut : admissibleCuts(t))
            d.add({cut.branches, cut.trunk.empty() ? Forest() : Forest{cut.trunk}}, 1);
        out = forestTensorProduct(out, d);
    }
    return out;
}

}  // namespace treealg
