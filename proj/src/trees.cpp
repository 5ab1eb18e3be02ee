#include "treealg/trees.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <mutex>

namespace treealg {

struct Tree::Rep {
    Label label;
    std::vector<Tree> children;
    int leaves = 0;
    int vertices = 0;
    std::size_t hash = 0;
};

namespace {

std::size_t mix(std::size_t h, std::size_t v) {
    return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

const std::vector<Tree>& noChildren() {
    static const std::vector<Tree> none;
    return none;
}

}  // namespace

Label Label::var(int k) {
    if (k < 1) throw Error(ErrorCode::BadPosition, "variable index must be >= 1");
    Label l;
    l.index_ = k;
    return l;
}

Tree Tree::leaf(Label label) {
    auto rep = std::make_shared<Rep>();
    rep->label = label;
    rep->leaves = 1;
    rep->vertices = 1;
    rep->hash = mix(0x51ed27, static_cast<std::size_t>(label.index()));
    return Tree(std::move(rep));
}

Tree Tree::node(std::vector<Tree> children) {
    if (children.empty()) throw Error(ErrorCode::EmptyArgument, "internal vertex needs children");
    auto rep = std::make_shared<Rep>();
    std::size_t h = mix(0xa11ce, children.size());
    int leaves = 0, vertices = 1;
    for (const auto& c : children) {
        if (c.empty()) throw Error(ErrorCode::EmptyArgument, "empty tree as child");
        leaves += c.leafCount();
        vertices += c.vertexCount();
        h = mix(h, c.hash());
    }
    rep->children = std::move(children);
    rep->leaves = leaves;
    rep->vertices = vertices;
    rep->hash = h;
    return Tree(std::move(rep));
}

bool Tree::isLeaf() const { return rep_ && rep_->children.empty(); }
bool Tree::isNode() const { return rep_ && !rep_->children.empty(); }
Label Tree::label() const { return rep_ ? rep_->label : Label{}; }
const std::vector<Tree>& Tree::children() const { return rep_ ? rep_->children : noChildren(); }
int Tree::leafCount() const { return rep_ ? rep_->leaves : 0; }
int Tree::vertexCount() const { return rep_ ? rep_->vertices : 0; }
std::size_t Tree::hash() const { return rep_ ? rep_->hash : 0; }

bool operator==(const Tree& a, const Tree& b) {
    if (a.rep_ == b.rep_) return true;
    if (!a.rep_ || !b.rep_) return false;
    if (a.rep_->hash != b.rep_->hash) return false;
    return (a <=> b) == 0;
}

std::strong_ordering operator<=>(const Tree& a, const Tree& b) {
    if (a.rep_ == b.rep_) return std::strong_ordering::equal;
    if (auto c = a.leafCount() <=> b.leafCount(); c != 0) return c;
    if (auto c = a.vertexCount() <=> b.vertexCount(); c != 0) return c;
    // both non-empty here
    if (auto c = a.isNode() <=> b.isNode(); c != 0) return c;
    if (a.isLeaf()) return a.label() <=> b.label();
    const auto& ca = a.children();
    const auto& cb = b.children();
    if (auto c = ca.size() <=> cb.size(); c != 0) return c;
    for (std::size_t i = 0; i < ca.size(); ++i)
        if (auto c = ca[i] <=> cb[i]; c != 0) return c;
    return std::strong_ordering::equal;
}

// ---- Forest -------------------------------------------------------------------

Forest::Forest(std::vector<Tree> trees) : trees_(std::move(trees)) {
    for (const auto& t : trees_)
        if (t.empty()) throw Error(ErrorCode::EmptyArgument, "empty tree inside a forest");
}

int Forest::degree() const {
    int d = 0;
    for (const auto& t : trees_) d += t.vertexCount();
    return d;
}

std::strong_ordering operator<=>(const Forest& a, const Forest& b) {
    if (auto c = a.degree() <=> b.degree(); c != 0) return c;
    if (auto c = a.size() <=> b.size(); c != 0) return c;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (auto c = a.trees_[i] <=> b.trees_[i]; c != 0) return c;
    return std::strong_ordering::equal;
}

Forest concat(const Forest& a, const Forest& b) {
    std::vector<Tree> v = a.trees();
    v.insert(v.end(), b.trees().begin(), b.trees().end());
    return Forest(std::move(v));
}

// ---- LeafSet ------------------------------------------------------------------

LeafSet LeafSet::of(std::initializer_list<int> positions) {
    std::uint64_t bits = 0;
    for (int p : positions) {
        if (p < 1 || p > 64) throw Error(ErrorCode::BadPosition, "leaf position out of range");
        bits |= std::uint64_t{1} << (p - 1);
    }
    return LeafSet(bits);
}

LeafSet LeafSet::all(int leafCount) {
    return LeafSet(leafCount >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << leafCount) - 1);
}

LeafSet LeafSet::complement(int leafCount) const { return LeafSet(all(leafCount).bits() & ~bits_); }

int LeafSet::size() const { return std::popcount(bits_); }

// ---- predicates -----------------------------------------------------------------

bool isReduced(const Tree& t) {
    if (!t.isNode()) return true;
    if (t.arity() == 1) return false;
    return std::all_of(t.children().begin(), t.children().end(), [](const Tree& c) { return isReduced(c); });
}

bool isBinary(const Tree& t) {
    if (!t.isNode()) return true;
    if (t.arity() != 2) return false;
    return isBinary(t.child(0)) && isBinary(t.child(1));
}

bool isUnlabeled(const Tree& t) {
    if (t.isLeaf()) return t.label().isAnonymous();
    return std::all_of(t.children().begin(), t.children().end(), [](const Tree& c) { return isUnlabeled(c); });
}

// ---- structural operations ---------------------------------------------------------

Tree graft(const Forest& children) {
    if (children.empty()) return Tree::leaf();
    return Tree::node(children.trees());
}

Forest degraft(const Tree& t) {
    if (t.empty()) throw Error(ErrorCode::EmptyTree, "degraft of the empty tree");
    return Forest(t.children());
}

namespace {

Tree substituteRec(const Tree& t, int& remaining, const Tree& insert) {
    if (t.isLeaf()) return --remaining == 0 ? insert : t;
    std::vector<Tree> kids;
    kids.reserve(t.arity());
    for (const auto& c : t.children()) {
        if (remaining <= 0 || remaining > c.leafCount()) {
            if (remaining > 0) remaining -= c.leafCount();
            kids.push_back(c);
        } else {
            kids.push_back(substituteRec(c, remaining, insert));
        }
    }
    return Tree::node(std::move(kids));
}

Tree restrictRec(const Tree& t, std::uint64_t keep, int& offset, bool reduceAlong) {
    if (t.isLeaf()) {
        bool kept = (keep >> offset) & 1u;
        ++offset;
        return kept ? t : Tree();
    }
    std::vector<Tree> kids;
    for (const auto& c : t.children()) {
        Tree r = restrictRec(c, keep, offset, reduceAlong);
        if (!r.empty()) kids.push_back(std::move(r));
    }
    if (kids.empty()) return Tree();
    if (reduceAlong && kids.size() == 1) return kids.front();
    return Tree::node(std::move(kids));
}

void checkPositions(const Tree& t, LeafSet keep) {
    if ((keep.bits() & ~LeafSet::all(t.leafCount()).bits()) != 0)
        throw Error(ErrorCode::BadPosition, "leaf position exceeds leaf count");
}

}  // namespace

Tree substituteAtLeaf(const Tree& t1, int leafPosition, const Tree& t2) {
    if (t1.empty()) throw Error(ErrorCode::EmptyArgument, "substitution into the empty tree");
    if (t2.empty()) throw Error(ErrorCode::EmptyArgument, "substituting the empty tree");
    if (leafPosition < 1 || leafPosition > t1.leafCount())
        throw Error(ErrorCode::BadPosition, "no leaf at position " + std::to_string(leafPosition));
    int remaining = leafPosition;
    return substituteRec(t1, remaining, t2);
}

Tree mirror(const Tree& t) {
    if (!t.isNode()) return t;
    std::vector<Tree> kids;
    kids.reserve(t.arity());
    for (auto it = t.children().rbegin(); it != t.children().rend(); ++it) kids.push_back(mirror(*it));
    return Tree::node(std::move(kids));
}

Tree reduce(const Tree& t) {
    if (!t.isNode()) return t;
    if (t.arity() == 1) return reduce(t.child(0));
    std::vector<Tree> kids;
    kids.reserve(t.arity());
    for (const auto& c : t.children()) kids.push_back(reduce(c));
    return Tree::node(std::move(kids));
}

Tree leafRestrict(const Tree& t, LeafSet keep) {
    checkPositions(t, keep);
    int offset = 0;
    return restrictRec(t, keep.bits(), offset, false);
}

Tree restrictReduced(const Tree& t, LeafSet keep) {
    int offset = 0;
    return restrictRec(t, keep.bits(), offset, true);
}

std::pair<Tree, Tree> leafSplit(const Tree& t, LeafSet keep) {
    if (!isReduced(t)) throw Error(ErrorCode::NotReduced, "leaf split needs a reduced tree");
    checkPositions(t, keep);
    return {restrictReduced(t, keep), restrictReduced(t, keep.complement(t.leafCount()))};
}

std::vector<Label> leafLabels(const Tree& t) {
    std::vector<Label> out;
    std::function<void(const Tree&)> walk = [&](const Tree& s) {
        if (s.isLeaf()) out.push_back(s.label());
        for (const auto& c : s.children()) walk(c);
    };
    walk(t);
    return out;
}

namespace {

Tree relabelRec(const Tree& t, const std::vector<Label>& labels, std::size_t& next) {
    if (t.isLeaf()) return Tree::leaf(labels[next++]);
    std::vector<Tree> kids;
    kids.reserve(t.arity());
    for (const auto& c : t.children()) kids.push_back(relabelRec(c, labels, next));
    return Tree::node(std::move(kids));
}

}  // namespace

Tree relabel(const Tree& t, const std::vector<Label>& labels) {
    if (static_cast<int>(labels.size()) != t.leafCount())
        throw Error(ErrorCode::LabelCountMismatch, "label count differs from leaf count");
    if (t.empty()) return t;
    std::size_t next = 0;
    return relabelRec(t, labels, next);
}

// ---- shuffles -----------------------------------------------------------------------

namespace {

using ShuffleMap = std::map<Tree, long>;

ShuffleMap shuffleRec(const Tree& a, const Tree& b);

// Pieces each side contributes to the children of the new root: either the whole tree
// (its root is absorbed into a single child) or its own children (root shared with the new root).
std::vector<std::vector<Tree>> pieceModes(const Tree& t) {
    std::vector<std::vector<Tree>> modes{{t}};
    if (t.isNode() && t.arity() >= 2) modes.push_back(t.children());
    return modes;
}

void mergePieces(const std::vector<Tree>& p, std::size_t i, const std::vector<Tree>& q, std::size_t j,
                 int totalLeaves, std::vector<Tree>& kids, long weight, ShuffleMap& out) {
    if (i == p.size() && j == q.size()) {
        if (kids.size() >= 2) out[Tree::node(kids)] += weight;
        return;
    }
    if (i < p.size()) {
        kids.push_back(p[i]);
        mergePieces(p, i + 1, q, j, totalLeaves, kids, weight, out);
        kids.pop_back();
    }
    if (j < q.size()) {
        kids.push_back(q[j]);
        mergePieces(p, i, q, j + 1, totalLeaves, kids, weight, out);
        kids.pop_back();
    }
    // mixing two whole trees would leave a root of arity 1
    const bool bothWhole = p.size() == 1 && q.size() == 1 && p[0].leafCount() + q[0].leafCount() == totalLeaves;
    if (i < p.size() && j < q.size() && !bothWhole) {
        for (const auto& [mixed, m] : shuffleRec(p[i], q[j])) {
            kids.push_back(mixed);
            mergePieces(p, i + 1, q, j + 1, totalLeaves, kids, weight * m, out);
            kids.pop_back();
        }
    }
}

ShuffleMap shuffleRec(const Tree& a, const Tree& b) {
    if (a.empty()) return {{b, 1}};
    if (b.empty()) return {{a, 1}};
    ShuffleMap out;
    std::vector<Tree> kids;
    for (const auto& p : pieceModes(a))
        for (const auto& q : pieceModes(b)) mergePieces(p, 0, q, 0, a.leafCount() + b.leafCount(), kids, 1, out);
    return out;
}

std::vector<WeightedTree> toWeighted(const ShuffleMap& m) {
    std::vector<WeightedTree> v;
    v.reserve(m.size());
    for (const auto& [t, c] : m) v.push_back({t, c});
    return v;
}

void requireShuffleArgs(const Tree& t1, const Tree& t2) {
    if (!isReduced(t1) || !isReduced(t2)) throw Error(ErrorCode::NotReduced, "shuffle of non-reduced trees");
}

}  // namespace

std::vector<WeightedTree> enumerateShuffles(const Tree& t1, const Tree& t2) {
    requireShuffleArgs(t1, t2);
    return toWeighted(shuffleRec(t1, t2));
}

std::vector<WeightedTree> enumerateShufflesBruteForce(const Tree& t1, const Tree& t2) {
    requireShuffleArgs(t1, t2);
    const int n1 = t1.leafCount(), n2 = t2.leafCount(), n = n1 + n2;
    if (n1 == 0 || n2 == 0) return {{n1 == 0 ? t2 : t1, 1}};
    const auto labels1 = leafLabels(t1), labels2 = leafLabels(t2);
    ShuffleMap out;
    for (const auto& shape : enumerateTrees(n, false)) {
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
            if (std::popcount(mask) != n1) continue;
            std::vector<Label> labels;
            std::size_t i1 = 0, i2 = 0;
            for (int pos = 0; pos < n; ++pos)
                labels.push_back((mask >> pos) & 1u ? labels1[i1++] : labels2[i2++]);
            Tree candidate = relabel(shape, labels);
            auto [left, right] = leafSplit(candidate, LeafSet(mask));
            if (left == t1 && right == t2) out[candidate] += 1;
        }
    }
    return toWeighted(out);
}

// ---- admissible cuts ----------------------------------------------------------------------

std::vector<Cut> admissibleCuts(const Tree& t) {
    if (t.empty()) throw Error(ErrorCode::EmptyTree, "cuts of the empty tree");
    std::vector<Cut> partial{{Forest(), Tree()}};
    // combine the cuts of the children; an empty trunk means the child was removed entirely
    std::vector<std::vector<Tree>> trunks{{}};
    for (const auto& c : t.children()) {
        auto childCuts = admissibleCuts(c);
        std::vector<Cut> nextPartial;
        std::vector<std::vector<Tree>> nextTrunks;
        for (std::size_t k = 0; k < partial.size(); ++k) {
            for (const auto& cc : childCuts) {
                nextPartial.push_back({concat(partial[k].branches, cc.branches), Tree()});
                auto tr = trunks[k];
                if (!cc.trunk.empty()) tr.push_back(cc.trunk);
                nextTrunks.push_back(std::move(tr));
            }
        }
        partial = std::move(nextPartial);
        trunks = std::move(nextTrunks);
    }
    std::vector<Cut> out;
    out.reserve(partial.size() + 1);
    for (std::size_t k = 0; k < partial.size(); ++k) {
        Tree trunk = trunks[k].empty() ? (t.isLeaf() ? t : Tree::leaf()) : Tree::node(trunks[k]);
        out.push_back({partial[k].branches, trunk});
    }
    out.push_back({Forest{t}, Tree()});
    return out;
}

long countAdmissibleCutsByEdges(const Tree& t) {
    if (t.empty()) throw Error(ErrorCode::EmptyTree, "cuts of the empty tree");
    // collect edges (parent vertex id -> child vertex id), then brute force over subsets
    std::vector<int> parent;
    std::vector<bool> isLeafVertex;
    std::function<void(const Tree&, int)> walk = [&](const Tree& s, int p) {
        int id = static_cast<int>(parent.size());
        parent.push_back(p);
        isLeafVertex.push_back(!s.isNode());
        for (const auto& c : s.children()) walk(c, id);
    };
    walk(t, -1);
    const int edges = static_cast<int>(parent.size()) - 1;  // edge k ends at vertex k+1
    long count = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << edges); ++mask) {
        bool ok = true;
        for (std::size_t v = 0; v < parent.size() && ok; ++v) {
            if (!isLeafVertex[v]) continue;
            int chosen = 0;
            for (int u = static_cast<int>(v); parent[u] >= 0; u = parent[u])
                if ((mask >> (u - 1)) & 1u) ++chosen;
            ok = chosen <= 1;
        }
        if (ok) ++count;
    }
    return count + 1;
}

// ---- right combs ---------------------------------------------------------------------------

Tree rightComb(int n) {
    std::vector<Tree> parts(static_cast<std::size_t>(n), Tree::leaf());
    return rightCombGraft(parts);
}

Tree leftComb(int n) {
    Tree t = Tree::leaf();
    for (int i = 0; i < n; ++i) t = Tree::node({t, Tree::leaf()});
    return t;
}

Tree rightCombGraft(const std::vector<Tree>& parts) {
    Tree acc = Tree::leaf();
    for (auto it = parts.rbegin(); it != parts.rend(); ++it) acc = Tree::node({*it, acc});
    return acc;
}

std::vector<Tree> rightCombPresentation(const Tree& t) {
    if (t.empty() || !isBinary(t)) throw Error(ErrorCode::NotBinary, "right comb presentation needs a binary tree");
    std::vector<Tree> parts;
    const Tree* cur = &t;
    while (cur->isNode()) {
        parts.push_back(cur->child(0));
        cur = &cur->child(1);
    }
    return parts;
}

Forest phiR(const Tree& t) {
    std::vector<Tree> out;
    for (const auto& part : rightCombPresentation(t)) out.push_back(graft(phiR(part)));
    return Forest(std::move(out));
}

Tree phiRInverse(const Forest& f) {
    std::vector<Tree> parts;
    for (const auto& t : f.trees()) parts.push_back(phiRInverse(Forest(t.children())));
    return rightCombGraft(parts);
}

// ---- enumeration -------------------------------------------------------------------------------

namespace {

std::vector<Tree> sorted(std::vector<Tree> v) {
    std::sort(v.begin(), v.end());
    return v;
}

// Every sequence of shapes (at least minParts of them) whose leaf counts sum to n.
void sequencesOf(int n, bool binaryOnly, std::vector<Tree>& prefix, std::size_t minParts, std::size_t maxParts,
                 std::vector<std::vector<Tree>>& out);

std::vector<Tree> shapesUncached(int n, bool binaryOnly) {
    if (n == 1) return {Tree::leaf()};
    std::vector<std::vector<Tree>> seqs;
    std::vector<Tree> prefix;
    sequencesOf(n, binaryOnly, prefix, 2, binaryOnly ? 2 : static_cast<std::size_t>(n), seqs);
    std::vector<Tree> out;
    out.reserve(seqs.size());
    for (auto& s : seqs) out.push_back(Tree::node(std::move(s)));
    return sorted(std::move(out));
}

const std::vector<Tree>& shapes(int n, bool binaryOnly) {
    static std::mutex mu;
    static std::map<std::pair<int, bool>, std::vector<Tree>> cache;
    {
        std::lock_guard lock(mu);
        if (auto it = cache.find({n, binaryOnly}); it != cache.end()) return it->second;
    }
    auto computed = shapesUncached(n, binaryOnly);
    std::lock_guard lock(mu);
    return cache.emplace(std::pair{n, binaryOnly}, std::move(computed)).first->second;
}

void sequencesOf(int n, bool binaryOnly, std::vector<Tree>& prefix, std::size_t minParts, std::size_t maxParts,
                 std::vector<std::vector<Tree>>& out) {
    if (n == 0) {
        if (prefix.size() >= minParts) out.push_back(prefix);
        return;
    }
    if (prefix.size() == maxParts) return;
    for (int k = 1; k <= n; ++k) {
        if (prefix.size() + 1 < minParts && k == n) break;
        for (const auto& s : shapes(k, binaryOnly)) {
            prefix.push_back(s);
            sequencesOf(n - k, binaryOnly, prefix, minParts, maxParts, out);
            prefix.pop_back();
        }
    }
}

}  // namespace

std::vector<Tree> enumerateTrees(int leafCount, bool binaryOnly, const std::optional<std::vector<Label>>& labels) {
    if (leafCount < 1) throw Error(ErrorCode::BadPosition, "leaf count must be >= 1");
    if (labels && static_cast<int>(labels->size()) != leafCount)
        throw Error(ErrorCode::LabelCountMismatch, "label count differs from leaf count");
    const auto& base = shapes(leafCount, binaryOnly);
    if (!labels) return base;
    std::vector<Tree> out;
    out.reserve(base.size());
    for (const auto& s : base) out.push_back(relabel(s, *labels));
    return sorted(std::move(out));
}

namespace {

std::vector<std::vector<Tree>> treeSequences(int vertices);

const std::vector<Tree>& planarTrees(int n) {
    static std::mutex mu;
    static std::map<int, std::vector<Tree>> cache;
    {
        std::lock_guard lock(mu);
        if (auto it = cache.find(n); it != cache.end()) return it->second;
    }
    std::vector<Tree> out;
    for (auto& seq : treeSequences(n - 1)) out.push_back(graft(Forest(std::move(seq))));
    out = sorted(std::move(out));
    std::lock_guard lock(mu);
    return cache.emplace(n, std::move(out)).first->second;
}

std::vector<std::vector<Tree>> treeSequences(int vertices) {
    if (vertices == 0) return {{}};
    std::vector<std::vector<Tree>> out;
    for (int k = 1; k <= vertices; ++k)
        for (const auto& first : planarTrees(k))
            for (auto& rest : treeSequences(vertices - k)) {
                rest.insert(rest.begin(), first);
                out.push_back(std::move(rest));
            }
    return out;
}

}  // namespace

std::vector<Tree> enumeratePlanarTrees(int vertexCount) {
    if (vertexCount < 1) throw Error(ErrorCode::BadPosition, "vertex count must be >= 1");
    return planarTrees(vertexCount);
}

std::vector<Forest> enumerateForests(int vertexCount) {
    std::vector<Forest> out;
    for (auto& seq : treeSequences(vertexCount)) out.emplace_back(std::move(seq));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Tree> enumerateBinaryTrees(int internalCount) { return enumerateTrees(internalCount + 1, true); }

}  // namespace treealg
