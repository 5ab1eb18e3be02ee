#include "treealg/magma.hpp"

#include <algorithm>
#include <bit>

namespace treealg {

namespace {

// Next mask with the same popcount (Gosper).
std::uint64_t nextCombination(std::uint64_t x) {
    std::uint64_t c = x & -x;
    std::uint64_t r = x + c;
    return (((r ^ x) >> 2) / c) | r;
}

template <class F>
void forEachSubset(int n, int size, F&& visit) {
    if (size == 0) {
        visit(std::uint64_t{0});
        return;
    }
    if (size > n) return;
    const std::uint64_t limit = std::uint64_t{1} << n;
    for (std::uint64_t m = (std::uint64_t{1} << size) - 1; m < limit; m = nextCombination(m)) visit(m);
}

std::vector<int> labelCounts(const Tree& t, int variables) {
    std::vector<int> counts(static_cast<std::size_t>(variables));
    for (auto l : leafLabels(t)) {
        if (l.isAnonymous()) continue;
        if (l.index() > static_cast<int>(counts.size())) counts.resize(static_cast<std::size_t>(l.index()));
        ++counts[static_cast<std::size_t>(l.index() - 1)];
    }
    return counts;
}

}  // namespace

TreePoly variable(int k) { return TreePoly(Tree::var(k)); }
TreePoly unitPoly() { return TreePoly(Tree()); }

Tree veeMonomial(const std::vector<Tree>& args) {
    std::vector<Tree> kept;
    for (const auto& a : args)
        if (!a.empty()) kept.push_back(a);
    if (kept.empty()) return Tree();
    if (kept.size() == 1) return kept.front();
    return Tree::node(std::move(kept));
}

TreePoly vee(const std::vector<TreePoly>& args) {
    TreePoly out;
    std::vector<Tree> current(args.size());
    auto rec = [&](auto&& self, std::size_t i, const Rational& coeff) -> void {
        if (i == args.size()) {
            out.add(veeMonomial(current), coeff);
            return;
        }
        for (const auto& [t, c] : args[i]) {
            current[i] = t;
            self(self, i + 1, coeff * c);
        }
    };
    rec(rec, 0, Rational(1));
    return out;
}

TreePoly dot(const TreePoly& a, const TreePoly& b) { return vee({a, b}); }

TreePoly commutator(const TreePoly& a, const TreePoly& b) { return dot(a, b) - dot(b, a); }

bool isMagElement(const TreePoly& f) {
    return std::all_of(f.begin(), f.end(), [](const auto& term) { return isBinary(term.first); });
}

Multidegree multidegree(const Tree& t, int variables) { return labelCounts(t, variables); }

TreePoly homogeneousPart(const TreePoly& f, int degree) {
    return f.filter([degree](const Tree& t) { return t.leafCount() == degree; });
}

TreePoly projectToMag(const TreePoly& f) {
    return f.filter([](const Tree& t) { return isBinary(t); });
}

// ---- derivations -----------------------------------------------------------------------

TreePoly partialK(int k, const TreePoly& f) {
    TreePoly out;
    for (const auto& [t, c] : f) {
        const auto labels = leafLabels(t);
        const int n = t.leafCount();
        for (int pos = 0; pos < n; ++pos)
            if (labels[static_cast<std::size_t>(pos)].index() == k)
                out.add(restrictReduced(t, LeafSet(LeafSet::all(n).bits() & ~(std::uint64_t{1} << pos))), c);
    }
    return out;
}

TreePoly partialKJ(int k, int j, const TreePoly& f) {
    TreePoly out;
    const Label target = Label::var(j);
    for (const auto& [t, c] : f) {
        auto labels = leafLabels(t);
        for (auto& l : labels) {
            if (l.index() != k) continue;
            const Label saved = l;
            l = target;
            out.add(relabel(t, labels), c);
            l = saved;
        }
    }
    return out;
}

TreePoly partialTree(const Tree& s, const TreePoly& f) {
    if (s.empty()) return f;
    TreePoly out;
    const int m = s.leafCount();
    const auto wanted = labelCounts(s, 0);
    for (const auto& [t, c] : f) {
        const int n = t.leafCount();
        if (n < m) continue;
        const auto labels = leafLabels(t);
        forEachSubset(n, m, [&](std::uint64_t mask) {
            std::vector<int> counts(wanted.size());
            for (int pos = 0; pos < n; ++pos) {
                if (!((mask >> pos) & 1u)) continue;
                int idx = labels[static_cast<std::size_t>(pos)].index();
                if (idx < 1 || idx > static_cast<int>(counts.size())) return;
                ++counts[static_cast<std::size_t>(idx - 1)];
            }
            if (counts != wanted) return;
            if (restrictReduced(t, LeafSet(mask)) != s) return;
            out.add(restrictReduced(t, LeafSet(mask).complement(n)), c);
        });
    }
    return out;
}

TreePoly partialTree(const TreePoly& s, const TreePoly& f) {
    TreePoly out;
    for (const auto& [t, c] : s) out.addScaled(partialTree(t, f), c);
    return out;
}

long muCount(const Tree& s, const Tree& t) {
    if (s.leafCount() > t.leafCount()) return 0;
    long count = 0;
    forEachSubset(t.leafCount(), s.leafCount(), [&](std::uint64_t mask) {
        if (restrictReduced(t, LeafSet(mask)) == s) ++count;
    });
    return count;
}

long muCountBinary(const Tree& s, const Tree& t) {
    if (s.empty()) return 1;
    if (t.isLeaf()) return s == t ? 1 : 0;
    if (!isBinary(s) || !isBinary(t)) throw Error(ErrorCode::NotBinary, "binary recursion needs binary trees");
    long total = muCountBinary(s, t.child(0)) + muCountBinary(s, t.child(1));
    if (s.isNode()) total += muCountBinary(s.child(0), t.child(0)) * muCountBinary(s.child(1), t.child(1));
    return total;
}

// ---- Taylor expansion ---------------------------------------------------------------------

TreePoly rightMultiply(const TreePoly& a, const std::vector<int>& powers) {
    TreePoly out = a;
    for (std::size_t k = 0; k < powers.size(); ++k) {
        const TreePoly x = variable(static_cast<int>(k) + 1);
        for (int i = 0; i < powers[k]; ++i) out = dot(out, x);
    }
    return out;
}

namespace {

std::map<int, TreePoly> expandIn(int k, const TreePoly& f) {
    std::map<int, TreePoly> coeffs;
    TreePoly rest = f;
    while (!rest.isZero()) {
        TreePoly top = rest;
        int n = 0;
        for (TreePoly d = partialK(k, top); !d.isZero(); d = partialK(k, top)) {
            top = std::move(d);
            ++n;
        }
        TreePoly a = top * (1 / factorial(n));
        std::vector<int> powers(static_cast<std::size_t>(k));
        powers.back() = n;
        rest -= rightMultiply(a, powers);
        coeffs[n] += a;
    }
    return coeffs;
}

}  // namespace

TaylorExpansion taylorRight(const TreePoly& f, int variables) {
    TaylorExpansion e;
    e.variables = variables;
    if (variables == 0) {
        if (!f.isZero()) e.coefficients[{}] = f;
        return e;
    }
    for (const auto& [j, a] : expandIn(variables, f)) {
        for (auto& [idx, b] : taylorRight(a, variables - 1).coefficients) {
            auto full = idx;
            full.push_back(j);
            e.coefficients[full] += b;
        }
    }
    return e;
}

TreePoly reconstruct(const TaylorExpansion& e) {
    TreePoly out;
    for (const auto& [j, a] : e.coefficients) out += rightMultiply(a, j);
    return out;
}

TreePoly constantsProjector(const TreePoly& f, int variables) {
    const auto e = taylorRight(f, variables);
    auto it = e.coefficients.find(std::vector<int>(static_cast<std::size_t>(variables), 0));
    return it == e.coefficients.end() ? TreePoly() : it->second;
}

bool isConstant(const TreePoly& f, int variables) {
    for (int k = 1; k <= variables; ++k)
        if (!partialK(k, f).isZero()) return false;
    return true;
}

// ---- graded components ------------------------------------------------------------------------

std::vector<Tree> componentBasis(Operad operad, const Multidegree& degree) {
    std::vector<Label> labels;
    for (std::size_t k = 0; k < degree.size(); ++k)
        for (int i = 0; i < degree[k]; ++i) labels.push_back(Label::var(static_cast<int>(k) + 1));
    if (labels.empty()) return {Tree()};
    const auto& shapes = enumerateTrees(static_cast<int>(labels.size()), operad == Operad::Mag);
    std::vector<Tree> out;
    do {
        for (const auto& s : shapes) out.push_back(relabel(s, labels));
    } while (std::next_permutation(labels.begin(), labels.end()));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Tree> multilinearBasis(Operad operad, int n) {
    return componentBasis(operad, Multidegree(static_cast<std::size_t>(n), 1));
}

std::vector<TreePoly> constantsBasis(Operad operad, const Multidegree& degree) {
    const auto basis = componentBasis(operad, degree);
    const int m = static_cast<int>(degree.size());
    return kernelOfMap(basis, [m](const Tree& t) {
        // tag each derivative's output with its variable so the images stay separate
        LinComb<Tensor<Tree, 2>> img;
        for (int k = 1; k <= m; ++k)
            for (const auto& [s, c] : partialK(k, TreePoly(t))) img.add({Tree::var(k), s}, c);
        return img;
    });
}

std::vector<TreePoly> oneVariableConstantsByProjector(int degree) {
    if (degree == 0) return {unitPoly()};
    std::vector<TreePoly> out;
    if (degree < 2) return out;
    for (const auto& t : enumerateTrees(degree, true, std::vector<Label>(static_cast<std::size_t>(degree), Label::var(1))))
        if (!t.child(1).isLeaf()) out.push_back(constantsProjector(TreePoly(t), 1));
    return out;
}

}  // namespace treealg
