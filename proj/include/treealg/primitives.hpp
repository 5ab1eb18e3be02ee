/// @file primitives.hpp
/// Primitive subspaces, dimension formulas, PBW shuffle bases, the non-associative
/// Jacobi identity and highest weight vectors.
#pragma once

#include "treealg/hopf.hpp"

#include <optional>
#include <string>
#include <vector>

namespace treealg {

enum class AlgebraKind { Mag, Magw, LodayRonco, CKPlanar, BF };

std::string algebraKindName(AlgebraKind kind);

/// One graded piece of an algebra together with its canonical monomial basis.
struct GradedComponent {
    AlgebraKind algebra = AlgebraKind::Mag;
    int degree = 0;
    /// Set for the free magma algebras only.
    Multidegree multidegree;
    bool multilinear = false;
    std::vector<Tree> basis;
    /// Used instead of basis for planar forests.
    std::vector<Forest> forests;

    std::size_t dimension() const { return algebra == AlgebraKind::CKPlanar ? forests.size() : basis.size(); }
    std::string describe() const;

    static GradedComponent magma(Operad operad, const Multidegree& degree);
    static GradedComponent multilinearMagma(Operad operad, int n);
    static GradedComponent binaryTrees(AlgebraKind algebra, int degree);
    static GradedComponent planarForests(int degree);
};

AlgebraKind algebraOf(Operad operad);

enum class PrimMethod { HalfDegree, FullKernel };

/// Basis of the kernel of the reduced coproduct on the component.
/// HalfDegree applies only to co-addition and uses left factors of degree <= n/2.
std::vector<TreePoly> primBasis(const GradedComponent& component, CoproductKind kind,
                                PrimMethod method = PrimMethod::HalfDegree);
std::vector<ForestPoly> primBasisForests(const GradedComponent& component);

struct PrimDimReport {
    std::string component;
    std::size_t ambientDim = 0;
    std::optional<std::size_t> primDim;
    Integer formulaDim;
    bool match = false;
    std::vector<std::string> basisSample;
};

/// Default caps for the exact kernel: n <= 5 for Mag, n <= 4 for Mag_omega.
int defaultPrimCap(Operad operad);
/// (n-1)! times the log-Catalan (Mag) or log-super-Catalan (Mag_omega) number.
Integer primDimFormula(Operad operad, int n);
PrimDimReport primDim(Operad operad, int n, std::optional<int> cap = std::nullopt);

struct JacobiReport {
    bool identity = false;
    bool antisymmetry = false;
    bool rightNormed = false;
    bool classical = false;

    bool pass() const { return identity && antisymmetry && rightNormed && classical; }
};

/// (f,g,h)_b = (f.g).h - f.(g.h).
TreePoly associatorBinary(const TreePoly& f, const TreePoly& g, const TreePoly& h);
/// (f,g,h)_t = (f.g).h - v3(f,g,h).
TreePoly associatorTernary(const TreePoly& f, const TreePoly& g, const TreePoly& h);

JacobiReport jacobiCheck();

struct NamedPrimitive {
    std::string name;
    TreePoly value;
    bool primitive = false;
};

std::vector<NamedPrimitive> namedPrimitives();

/// Replaces every x_k by x_{target[k-1]}.
TreePoly substituteVariables(const TreePoly& f, const std::vector<int>& target);

struct PbwReport {
    std::string component;
    std::size_t ambientDim = 0;
    std::size_t primDim = 0;
    std::size_t shuffleMonomials = 0;
    std::size_t shuffleRank = 0;
    bool independent = false;
    bool complement = false;
    bool orthogonal = false;

    bool pass() const { return independent && complement && orthogonal; }
};

/// Shuffle monomials of at least two lower-degree primitives, one variable, degree n.
PbwReport pbwCheckOneVariable(Operad operad, int n);
/// Same on the multilinear component in n variables.
PbwReport pbwCheckMultilinear(Operad operad, int n);

/// Compares the dimensions with the free commutative algebra on the primitives:
/// one variable: prod (1 - t^n)^(-p_n) = 1 + sum a_n t^n;
/// multilinear: exp(sum p_n t^n / n!) - 1 = sum a_n t^n / n!.
/// Entry k of both vectors is degree k + 1.
bool pbwSeriesIdentity(const std::vector<std::size_t>& primDims, const std::vector<std::size_t>& ambientDims,
                       bool multilinear);

enum class WeightConstraint { Primitive, Constant };

/// Basis of {f : d_ij f = 0 for all i > j} intersected with the primitives or the constants.
std::vector<TreePoly> highestWeightBasis(Operad operad, const Multidegree& degree, WeightConstraint constraint);

}  // namespace treealg
