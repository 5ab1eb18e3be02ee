/// @file magma.hpp
/// Free Mag and Mag_omega algebras on x1, x2, ...: products, derivations, Taylor expansion, constants.
#pragma once

#include "treealg/linear.hpp"

#include <map>
#include <vector>

namespace treealg {

enum class Operad { Mag, Magw };

/// Leaf counts per variable: entry i is the number of x_{i+1} leaves.
using Multidegree = std::vector<int>;

TreePoly variable(int k);
TreePoly unitPoly();

/// Grafting with unit normalization: empty arguments are dropped, a single survivor is returned as is.
Tree veeMonomial(const std::vector<Tree>& args);
TreePoly vee(const std::vector<TreePoly>& args);
TreePoly dot(const TreePoly& a, const TreePoly& b);
TreePoly commutator(const TreePoly& a, const TreePoly& b);

bool isMagElement(const TreePoly& f);
Multidegree multidegree(const Tree& t, int variables = 0);
TreePoly homogeneousPart(const TreePoly& f, int degree);
/// Drops every non-binary term.
TreePoly projectToMag(const TreePoly& f);

/// Derivation sending x_k to 1 and the other variables to 0.
TreePoly partialK(int k, const TreePoly& f);
/// Derivation sending x_k to x_j.
TreePoly partialKJ(int k, int j, const TreePoly& f);
/// Coefficient operator of s in the co-addition: Delta_a(f) = sum_s s (x) partial_s(f).
TreePoly partialTree(const Tree& s, const TreePoly& f);
TreePoly partialTree(const TreePoly& s, const TreePoly& f);

/// Number of leaf subsets I of t with red(t|I) = s.
long muCount(const Tree& s, const Tree& t);
/// Same count for binary trees via the grafting recursion.
long muCountBinary(const Tree& s, const Tree& t);

/// Iterated binary right multiplication: x_1 first, j_k times x_k.
TreePoly rightMultiply(const TreePoly& a, const std::vector<int>& powers);

struct TaylorExpansion {
    int variables = 0;
    std::map<std::vector<int>, TreePoly> coefficients;
};

/// Unique expansion f = sum_j [a_j] x^j with constant coefficients, variables expanded from x_m down to x_1.
TaylorExpansion taylorRight(const TreePoly& f, int variables);
TreePoly reconstruct(const TaylorExpansion& e);
/// Coefficient a_0 of the Taylor expansion.
TreePoly constantsProjector(const TreePoly& f, int variables);
bool isConstant(const TreePoly& f, int variables);

/// Monomials of the given multidegree in canonical order.
std::vector<Tree> componentBasis(Operad operad, const Multidegree& degree);
/// Monomials in which each of x1..xn appears exactly once.
std::vector<Tree> multilinearBasis(Operad operad, int n);
/// Basis of the constants (all partial derivatives vanish) in a graded component.
std::vector<TreePoly> constantsBasis(Operad operad, const Multidegree& degree);
/// The one-variable basis {Phi(T1 . T2) : T2 not in {1, x1}} of the degree-n constants in Mag.
std::vector<TreePoly> oneVariableConstantsByProjector(int degree);

}  // namespace treealg
