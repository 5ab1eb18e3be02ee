/// @file trees.hpp
/// Planar rooted trees, forests, structural operations and enumeration.
#pragma once

#include "treealg/error.hpp"

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace treealg {

/// Leaf mark: index 0 is the anonymous vertex "o", index k >= 1 is x_k.
class Label {
public:
    constexpr Label() = default;
    static constexpr Label anonymous() { return Label{}; }
    static Label var(int k);

    constexpr int index() const { return index_; }
    constexpr bool isAnonymous() const { return index_ == 0; }

    friend constexpr auto operator<=>(const Label&, const Label&) = default;

private:
    int index_ = 0;
};

/// Immutable planar rooted tree. A default-constructed Tree is the empty tree 1.
/// Internal vertices are unlabeled; arity-1 vertices are allowed.
class Tree {
public:
    Tree() = default;

    static Tree leaf(Label label = Label::anonymous());
    static Tree var(int k) { return leaf(Label::var(k)); }
    /// Internal vertex over the given children; none of them may be empty.
    static Tree node(std::vector<Tree> children);

    bool empty() const { return rep_ == nullptr; }
    bool isLeaf() const;
    bool isNode() const;

    Label label() const;
    const std::vector<Tree>& children() const;
    std::size_t arity() const { return children().size(); }
    const Tree& child(std::size_t i) const { return children().at(i); }

    int leafCount() const;
    int vertexCount() const;
    int internalCount() const { return vertexCount() - leafCount(); }
    std::size_t hash() const;

    friend bool operator==(const Tree& a, const Tree& b);
    friend std::strong_ordering operator<=>(const Tree& a, const Tree& b);

private:
    struct Rep;
    explicit Tree(std::shared_ptr<const Rep> rep) : rep_(std::move(rep)) {}
    std::shared_ptr<const Rep> rep_;
};

struct TreeHash {
    std::size_t operator()(const Tree& t) const { return t.hash(); }
};

/// Ordered sequence of non-empty trees; the empty sequence is the unit forest.
class Forest {
public:
    Forest() = default;
    explicit Forest(std::vector<Tree> trees);
    Forest(std::initializer_list<Tree> trees) : Forest(std::vector<Tree>(trees)) {}

    const std::vector<Tree>& trees() const { return trees_; }
    std::size_t size() const { return trees_.size(); }
    bool empty() const { return trees_.empty(); }
    /// Total number of vertices.
    int degree() const;

    friend bool operator==(const Forest&, const Forest&) = default;
    friend std::strong_ordering operator<=>(const Forest& a, const Forest& b);

private:
    std::vector<Tree> trees_;
};

Forest concat(const Forest& a, const Forest& b);

/// Set of leaf positions (1-based, left to right) of some host tree.
class LeafSet {
public:
    constexpr LeafSet() = default;
    constexpr explicit LeafSet(std::uint64_t bits) : bits_(bits) {}
    static LeafSet of(std::initializer_list<int> positions);
    static LeafSet all(int leafCount);

    bool contains(int position) const { return (bits_ >> (position - 1)) & 1u; }
    LeafSet complement(int leafCount) const;
    int size() const;
    constexpr std::uint64_t bits() const { return bits_; }

    friend constexpr bool operator==(const LeafSet&, const LeafSet&) = default;

private:
    std::uint64_t bits_ = 0;
};

// ---- predicates -------------------------------------------------------------

bool isReduced(const Tree& t);
bool isBinary(const Tree& t);
/// Every leaf anonymous.
bool isUnlabeled(const Tree& t);

// ---- structural operations --------------------------------------------------

/// Joins a forest under a new root; the empty forest gives the single vertex o.
Tree graft(const Forest& children);
/// Removes the root. Throws EmptyTree on the empty tree.
Forest degraft(const Tree& t);
/// Replaces the leaf at a 1-based position by the root of t2.
Tree substituteAtLeaf(const Tree& t1, int leafPosition, const Tree& t2);
Tree mirror(const Tree& t);
/// Removes every arity-1 vertex.
Tree reduce(const Tree& t);
/// Deletes every bracket pair that encloses no kept leaf. Result may have arity-1 vertices.
Tree leafRestrict(const Tree& t, LeafSet keep);
/// reduce(leafRestrict(t, keep)) in one pass.
Tree restrictReduced(const Tree& t, LeafSet keep);
/// (red(t|I), red(t|I^c)) for reduced t.
std::pair<Tree, Tree> leafSplit(const Tree& t, LeafSet keep);
/// Labels of the leaves, left to right.
std::vector<Label> leafLabels(const Tree& t);
/// Replaces leaf labels positionally.
Tree relabel(const Tree& t, const std::vector<Label>& labels);

/// A shuffle of two trees together with its multiplicity.
struct WeightedTree {
    Tree tree;
    long multiplicity = 0;
    friend bool operator==(const WeightedTree&, const WeightedTree&) = default;
};

/// All reduced trees T with leafSplit(T, I) = (t1, t2) for some I, with the number of such I.
/// Computed by recursive merge; sorted by canonical tree order.
std::vector<WeightedTree> enumerateShuffles(const Tree& t1, const Tree& t2);
/// Same result by filtering every tree shape and leaf subset.
std::vector<WeightedTree> enumerateShufflesBruteForce(const Tree& t1, const Tree& t2);

struct Cut {
    Forest branches;
    Tree trunk;
    friend bool operator==(const Cut&, const Cut&) = default;
};

/// All admissible cuts including the empty cut ([], t) and the full cut ([t], 1).
std::vector<Cut> admissibleCuts(const Tree& t);
/// Edge-subset count (at most one chosen edge on every root-to-leaf path) plus the full cut.
long countAdmissibleCutsByEdges(const Tree& t);

// ---- right combs -------------------------------------------------------------

/// (o (o (... (o o)))) with n internal vertices; n = 0 gives o.
Tree rightComb(int n);
/// ((... (o o) ...) o) with n internal vertices.
Tree leftComb(int n);
/// (T1 (T2 (... (Tn o)))); the empty sequence gives o.
Tree rightCombGraft(const std::vector<Tree>& parts);
/// Inverse of rightCombGraft on binary trees.
std::vector<Tree> rightCombPresentation(const Tree& t);
/// Bijection from binary trees with n internal vertices to planar forests with n vertices.
Forest phiR(const Tree& t);
Tree phiRInverse(const Forest& f);

// ---- enumeration -------------------------------------------------------------

/// Reduced planar trees with the given number of leaves, in canonical order.
/// With labels, leaves are labelled positionally (throws LabelCountMismatch).
std::vector<Tree> enumerateTrees(int leafCount, bool binaryOnly,
                                 const std::optional<std::vector<Label>>& labels = std::nullopt);
/// All planar trees (arity 1 allowed, anonymous leaves) with n vertices.
std::vector<Tree> enumeratePlanarTrees(int vertexCount);
/// All planar forests with n vertices in total.
std::vector<Forest> enumerateForests(int vertexCount);
/// Binary anonymous trees with n internal vertices.
std::vector<Tree> enumerateBinaryTrees(int internalCount);

// ---- grammar -------------------------------------------------------------------

Tree parseTree(std::string_view text);
Forest parseForest(std::string_view text);
std::string printTree(const Tree& t);
std::string printForest(const Forest& f);
/// Binary trees as nested products, e.g. x1.(x2.x3); leaves print as themselves.
std::string printMalcev(const Tree& t);

/// Incremental reader shared with the polynomial grammar.
class TextCursor {
public:
    explicit TextCursor(std::string_view text) : text_(text) {}
    void skipSpace();
    bool atEnd();
    char peek();
    bool consume(char c);
    bool consume(std::string_view token);
    void expect(char c);
    std::size_t offset() const { return pos_; }
    void seek(std::size_t pos) { pos_ = pos; }
    [[noreturn]] void fail(const std::string& expected) const;
    Tree readTree();
    Forest readForest();

private:
    std::string_view text_;
    std::size_t pos_ = 0;
};

// ---- integer sequences -----------------------------------------------------------

enum class SequenceKind { Catalan, SuperCatalan, LogCatalan, LogSuperCatalan, OddArity, OneVarConstants };

struct SequenceTable {
    SequenceKind kind;
    std::vector<mpz_class> values;  // values[0] is n = 1
};

SequenceTable sequence(SequenceKind kind, int count);
std::optional<SequenceKind> sequenceKindFromName(std::string_view name);
std::string sequenceKindName(SequenceKind kind);
/// b_n with sum b_n t^n = t d/dt log(1 + sum a_n t^n); input and output start at n = 1.
std::vector<mpz_class> logarithmicDerivation(const std::vector<mpz_class>& a);

}  // namespace treealg
