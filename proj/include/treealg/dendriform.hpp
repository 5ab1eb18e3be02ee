/// @file dendriform.hpp
/// One-generator free dendriform algebra on planar binary trees and the
/// Loday-Ronco, planar Connes-Kreimer and Brouder-Frabetti coproducts.
///
/// Binary trees here are unlabeled; the single leaf o (also written |) is the unit,
/// and the degree of a tree is its number of internal vertices.
#pragma once

#include "treealg/linear.hpp"

#include <vector>

namespace treealg {

using YPoly = TreePoly;

/// The unit leaf |.
Tree stump();
/// The two-leaf tree (o o).
Tree yTree();
/// t_left v t_right.
Tree join(const Tree& left, const Tree& right);
YPoly join(const YPoly& left, const YPoly& right);

YPoly prec(const Tree& x, const Tree& y);
YPoly succ(const Tree& x, const Tree& y);
YPoly star(const Tree& x, const Tree& y);
YPoly prec(const YPoly& x, const YPoly& y);
YPoly succ(const YPoly& x, const YPoly& y);
YPoly star(const YPoly& x, const YPoly& y);

/// Grafts s onto the last leaf of t.
Tree under(const Tree& t, const Tree& s);
/// Grafts s onto the first leaf of t.
Tree circAlpha(const Tree& t, const Tree& s);
/// Grafts t onto the first leaf of s.
Tree over(const Tree& t, const Tree& s);
YPoly circAlpha(const YPoly& t, const YPoly& s);

/// | v t.
Tree veeV(const Tree& t);
YPoly veeV(const YPoly& t);
/// (T1 (T2 (... (Tn |)))).
Tree veeArrow(const std::vector<Tree>& parts);
YPoly veeArrow(const std::vector<YPoly>& parts);
/// Gamma(T1..Tn) = T1 v Gamma(T2..Tn) - (T1 * Gamma(T2..Tn)) v |, with Gamma(Tn) = Tn v |.
YPoly gammaOp(const std::vector<YPoly>& parts);

/// Componentwise * on two-fold tensors.
TreeTensor starTensor(const TreeTensor& a, const TreeTensor& b);
/// Componentwise circ_alpha on two-fold tensors.
TreeTensor circAlphaTensor(const TreeTensor& a, const TreeTensor& b);

TreeTensor deltaLR(const Tree& t);
TreeTensor deltaLR(const YPoly& f);

TreeTensor deltaBF(const Tree& t);
TreeTensor deltaBF(const YPoly& f);
/// Right-comb closed form, valid for trees of the form | v T.
TreeTensor deltaBFClosedForm(const Tree& t);

// ---- planar forests --------------------------------------------------------------------

ForestPoly forestProduct(const ForestPoly& a, const ForestPoly& b);
ForestTensor forestTensorProduct(const ForestTensor& a, const ForestTensor& b);
ForestTensor deltaCK(const Tree& t);
ForestTensor deltaCK(const Forest& f);
ForestTensor deltaCK(const ForestPoly& f);
/// Sum over admissible cuts of branches (x) trunk.
ForestTensor deltaCKByCuts(const Forest& f);

}  // namespace treealg
