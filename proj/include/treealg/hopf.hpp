/// @file hopf.hpp
/// Co-addition, shuffle product, the co-magma map nabla_2, antipodes and generic checkers.
#pragma once

#include "treealg/magma.hpp"

#include <string>

namespace treealg {

enum class CoproductKind { Coadd, LodayRonco, ConnesKreimerPlanar, BrouderFrabetti };

std::string coproductKindName(CoproductKind kind);

/// Sum over leaf subsets I of red(t|I) (x) red(t|I^c).
TreeTensor coaddition(const Tree& t);
TreeTensor coaddition(const TreePoly& f);
/// Only the terms whose left factor has between 1 and maxLeftDegree leaves.
TreeTensor coadditionLowDegree(const Tree& t, int maxLeftDegree);

/// Delta(f) - f (x) 1 - 1 (x) f, with the unit of the algebra the kind lives on.
TreeTensor reducedCoproduct(CoproductKind kind, const TreePoly& f);
ForestTensor reducedCoproduct(const ForestPoly& f);

/// Dual of the co-addition; the Mag variant drops non-binary terms.
TreePoly shuffleMul(const TreePoly& f, const TreePoly& g, Operad operad = Operad::Magw);
TreeTensor shuffleTensor(const TreeTensor& a, const TreeTensor& b, Operad operad = Operad::Magw);

TreeTensor nablaTwo(const Tree& t);
TreeTensor nablaTwo(const TreePoly& f);

/// Recursion sigma(w) = -w - sum' sigma(w_(1)) . w_(2) with the binary product.
TreePoly antipodeLeft(const TreePoly& f);
/// Recursion sigma(w) = -w - sum' w_(1) . sigma(w_(2)).
TreePoly antipodeRight(const TreePoly& f);
/// mu o (sigma_l (x) id) o Delta_a, expected to vanish in positive degree.
TreePoly leftAntipodeComposite(const TreePoly& f);
TreePoly rightAntipodeComposite(const TreePoly& f);

bool isPrimitive(CoproductKind kind, const TreePoly& f);
bool isPrimitive(const ForestPoly& f);
/// Half-degree criterion: for homogeneous f of degree n, partial_T f = 0 whenever deg T < (n+1)/2.
bool isPrimitiveCoaddFast(const TreePoly& f);

struct CheckReport {
    std::string name;
    bool pass = true;
    long checked = 0;
    std::string detail;
};

/// (Delta (x) id) Delta = (id (x) Delta) Delta on every basis element up to the given degree.
/// Co-addition uses multilinear monomials of the chosen operad.
CheckReport checkCoassociative(CoproductKind kind, int maxDegree, Operad operad = Operad::Magw);

}  // namespace treealg
