#include "treealg/primitives.hpp"

#include "treealg/dendriform.hpp"

#include <algorithm>
#include <functional>

namespace treealg {

std::string algebraKindName(AlgebraKind kind) {
    switch (kind) {
        case AlgebraKind::Mag: return "mag";
        case AlgebraKind::Magw: return "magw";
        case AlgebraKind::LodayRonco: return "lodayRonco";
        case AlgebraKind::CKPlanar: return "ckPlanar";
        case AlgebraKind::BF: return "bf";
    }
    return "?";
}

AlgebraKind algebraOf(Operad operad) { return operad == Operad::Mag ? AlgebraKind::Mag : AlgebraKind::Magw; }

namespace {

bool isMagmaKind(AlgebraKind kind) { return kind == AlgebraKind::Mag || kind == AlgebraKind::Magw; }

std::string joinInts(const std::vector<int>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s;
}

}  // namespace

std::string GradedComponent::describe() const {
    std::string s = algebraKindName(algebra);
    if (multilinear) return s + " multilinear n=" + std::to_string(degree);
    if (isMagmaKind(algebra)) return s + " multidegree (" + joinInts(multidegree) + ")";
    return s + " degree " + std::to_string(degree);
}

GradedComponent GradedComponent::magma(Operad operad, const Multidegree& degree) {
    GradedComponent c;
    c.algebra = algebraOf(operad);
    c.multidegree = degree;
    for (int d : degree) c.degree += d;
    c.basis = componentBasis(operad, degree);
    return c;
}

GradedComponent GradedComponent::multilinearMagma(Operad operad, int n) {
    GradedComponent c = magma(operad, Multidegree(static_cast<std::size_t>(n), 1));
    c.multilinear = true;
    return c;
}

GradedComponent GradedComponent::binaryTrees(AlgebraKind algebra, int degree) {
    if (algebra != AlgebraKind::LodayRonco && algebra != AlgebraKind::BF)
        throw Error(ErrorCode::DimensionMismatch, "binary tree components belong to lodayRonco or bf");
    GradedComponent c;
    c.algebra = algebra;
    c.degree = degree;
    c.basis = enumerateBinaryTrees(degree);
    return c;
}

GradedComponent GradedComponent::planarForests(int degree) {
    GradedComponent c;
    c.algebra = AlgebraKind::CKPlanar;
    c.degree = degree;
    c.forests = enumerateForests(degree);
    return c;
}

// ---- primitive subspaces ------------------------------------------------------------------------

std::vector<TreePoly> primBasis(const GradedComponent& component, CoproductKind kind, PrimMethod method) {
    if (component.algebra == AlgebraKind::CKPlanar)
        throw Error(ErrorCode::DimensionMismatch, "use primBasisForests for planar forests");
    if (component.basis.empty()) throw Error(ErrorCode::EmptyArgument, "empty component");
    const bool magma = isMagmaKind(component.algebra);
    if (magma != (kind == CoproductKind::Coadd) || kind == CoproductKind::ConnesKreimerPlanar)
        throw Error(ErrorCode::DimensionMismatch,
                    coproductKindName(kind) + " does not act on " + algebraKindName(component.algebra));
    // the unit is never primitive
    if (component.degree == 0) return {};
    if (kind == CoproductKind::Coadd && method == PrimMethod::HalfDegree) {
        const int half = component.degree / 2;
        return kernelOfMap(component.basis, [half](const Tree& t) { return coadditionLowDegree(t, half); });
    }
    return kernelOfMap(component.basis, [kind](const Tree& t) { return reducedCoproduct(kind, TreePoly(t)); });
}

std::vector<ForestPoly> primBasisForests(const GradedComponent& component) {
    if (component.algebra != AlgebraKind::CKPlanar) throw Error(ErrorCode::DimensionMismatch, "expected a forest component");
    if (component.forests.empty()) throw Error(ErrorCode::EmptyArgument, "empty component");
    if (component.degree == 0) return {};
    return kernelOfMap(component.forests, [](const Forest& f) { return reducedCoproduct(ForestPoly(f)); });
}

int defaultPrimCap(Operad operad) { return operad == Operad::Mag ? 5 : 4; }

Integer primDimFormula(Operad operad, int n) {
    if (n < 1) throw Error(ErrorCode::BadPosition, "degree must be >= 1");
    const auto seq = sequence(operad == Operad::Mag ? SequenceKind::LogCatalan : SequenceKind::LogSuperCatalan, n);
    Integer f = 1;
    for (int k = 2; k < n; ++k) f *= k;
    return f * seq.values.back();
}

PrimDimReport primDim(Operad operad, int n, std::optional<int> cap) {
    PrimDimReport r;
    r.formulaDim = primDimFormula(operad, n);
    const auto component = GradedComponent::multilinearMagma(operad, n);
    r.component = component.describe();
    r.ambientDim = component.dimension();
    if (n <= cap.value_or(defaultPrimCap(operad))) {
        const auto basis = primBasis(component, CoproductKind::Coadd);
        r.primDim = basis.size();
        r.match = Integer(static_cast<unsigned long>(basis.size())) == r.formulaDim;
        for (std::size_t i = 0; i < basis.size() && i < 3; ++i) r.basisSample.push_back(printPoly(basis[i]));
    }
    return r;
}

// ---- associators and the Jacobi relation -----------------------------------------------------------

TreePoly associatorBinary(const TreePoly& f, const TreePoly& g, const TreePoly& h) {
    return dot(dot(f, g), h) - dot(f, dot(g, h));
}

TreePoly associatorTernary(const TreePoly& f, const TreePoly& g, const TreePoly& h) {
    return dot(dot(f, g), h) - vee({f, g, h});
}

JacobiReport jacobiCheck() {
    const TreePoly x1 = variable(1), x2 = variable(2), x3 = variable(3);
    auto bracket2 = [](const TreePoly& a, const TreePoly& b, const TreePoly& c) {
        return commutator(commutator(a, b), c);
    };
    auto ab = [](const TreePoly& a, const TreePoly& b, const TreePoly& c) { return associatorBinary(a, b, c); };
    JacobiReport r;
    const TreePoly cyclic = bracket2(x1, x2, x3) + bracket2(x3, x1, x2) + bracket2(x2, x3, x1);
    const TreePoly alternating = ab(x1, x2, x3) - ab(x2, x1, x3) + ab(x3, x1, x2) - ab(x1, x3, x2) +
                                 ab(x2, x3, x1) - ab(x3, x2, x1);
    r.identity = cyclic == alternating;
    r.antisymmetry = bracket2(x2, x1, x3) == -bracket2(x1, x2, x3);

    auto a = [&](const TreePoly& p, const TreePoly& q, const TreePoly& s) {
        return bracket2(p, q, s) - ab(p, q, s) + ab(q, p, s);
    };
    const TreePoly rightNormed = dot(x3, dot(x2, x1)) - dot(x3, dot(x1, x2)) + dot(x1, dot(x2, x3)) - dot(x2, dot(x1, x3));
    r.rightNormed = a(x1, x2, x3) == rightNormed;
    r.classical = (a(x1, x2, x3) + a(x3, x1, x2) + a(x2, x3, x1)).isZero();
    return r;
}

std::vector<NamedPrimitive> namedPrimitives() {
    const TreePoly x1 = variable(1), x2 = variable(2), x3 = variable(3), x4 = variable(4);
    std::vector<NamedPrimitive> out;
    out.push_back({"[x1,x2]", commutator(x1, x2)});
    out.push_back({"(x1,x2,x3)_b", associatorBinary(x1, x2, x3)});
    out.push_back({"(x1,x2,x3)_t", associatorTernary(x1, x2, x3)});
    out.push_back({"p(x1,x2,x3,x4)", dot(associatorBinary(x1, x3, x4), x2) + dot(associatorBinary(x2, x3, x4), x1) -
                                         associatorBinary(dot(x1, x2), x3, x4)});
    out.push_back({"q(x1,x2,x3,x4)", dot(dot(x1, x2), dot(x3, x4)) - dot(x1, dot(x2, dot(x3, x4))) -
                                         dot(x3, associatorBinary(x1, x2, x4)) - dot(x4, associatorBinary(x1, x2, x3))});
    for (auto& p : out) p.primitive = isPrimitive(CoproductKind::Coadd, p.value);
    return out;
}

TreePoly substituteVariables(const TreePoly& f, const std::vector<int>& target) {
    return linearMap(f, [&target](const Tree& t) {
        auto labels = leafLabels(t);
        for (auto& l : labels) {
            const auto k = static_cast<std::size_t>(l.index());
            if (k >= 1 && k <= target.size()) l = Label::var(target[k - 1]);
        }
        return TreePoly(relabel(t, labels));
    });
}

// ---- PBW -----------------------------------------------------------------------------------------

namespace {

PbwReport finishPbw(const GradedComponent& component, const std::vector<TreePoly>& prim,
                    const std::vector<TreePoly>& shuffles) {
    PbwReport r;
    r.component = component.describe();
    r.ambientDim = component.dimension();
    r.primDim = prim.size();
    r.shuffleMonomials = shuffles.size();
    r.shuffleRank = polyRank(shuffles);
    r.independent = r.shuffleRank == shuffles.size();
    std::vector<TreePoly> all = shuffles;
    all.insert(all.end(), prim.begin(), prim.end());
    r.complement = r.shuffleRank + prim.size() == r.ambientDim && polyRank(all) == r.ambientDim;
    r.orthogonal = true;
    for (const auto& p : prim)
        for (const auto& s : shuffles)
            if (sgn(pairing(p, s)) != 0) r.orthogonal = false;
    return r;
}

}  // namespace

PbwReport pbwCheckOneVariable(Operad operad, int n) {
    if (n < 2) throw Error(ErrorCode::BadPosition, "PBW check needs degree >= 2");
    std::vector<std::vector<TreePoly>> prim(static_cast<std::size_t>(n));
    for (int k = 1; k < n; ++k) prim[static_cast<std::size_t>(k)] = primBasis(GradedComponent::magma(operad, {k}), CoproductKind::Coadd);

    // non-increasing sequences of (degree, index) with at least two factors
    std::vector<TreePoly> shuffles;
    auto rec = [&](auto&& self, int remaining, int maxDeg, std::size_t maxIdx, const TreePoly& acc, int factors) -> void {
        if (remaining == 0) {
            if (factors >= 2) shuffles.push_back(acc);
            return;
        }
        for (int d = std::min(remaining, maxDeg); d >= 1; --d) {
            const auto& basis = prim[static_cast<std::size_t>(d)];
            const std::size_t top = d == maxDeg ? std::min(maxIdx, basis.size()) : basis.size();
            for (std::size_t i = 0; i < top; ++i)
                self(self, remaining - d, d, i + 1, factors == 0 ? basis[i] : shuffleMul(acc, basis[i], operad), factors + 1);
        }
    };
    rec(rec, n, n - 1, static_cast<std::size_t>(-1), TreePoly(), 0);
    const auto component = GradedComponent::magma(operad, {n});
    return finishPbw(component, primBasis(component, CoproductKind::Coadd), shuffles);
}

PbwReport pbwCheckMultilinear(Operad operad, int n) {
    if (n < 2) throw Error(ErrorCode::BadPosition, "PBW check needs degree >= 2");
    std::vector<std::vector<TreePoly>> prim(static_cast<std::size_t>(n));
    for (int k = 1; k < n; ++k)
        prim[static_cast<std::size_t>(k)] = primBasis(GradedComponent::multilinearMagma(operad, k), CoproductKind::Coadd);

    // set partitions of {1..n}: the block holding the smallest remaining element is chosen first
    std::vector<TreePoly> shuffles;
    auto rec = [&](auto&& self, std::vector<int> rest, const TreePoly& acc, int factors) -> void {
        if (rest.empty()) {
            if (factors >= 2) shuffles.push_back(acc);
            return;
        }
        const int first = rest.front();
        const std::vector<int> others(rest.begin() + 1, rest.end());
        const std::size_t m = others.size();
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
            std::vector<int> block{first}, remaining;
            for (std::size_t i = 0; i < m; ++i) ((mask >> i) & 1u ? block : remaining).push_back(others[i]);
            const int k = static_cast<int>(block.size());
            if (k == n) continue;
            for (const auto& p : prim[static_cast<std::size_t>(k)]) {
                const TreePoly piece = substituteVariables(p, block);
                self(self, remaining, factors == 0 ? piece : shuffleMul(acc, piece, operad), factors + 1);
            }
        }
    };
    std::vector<int> all;
    for (int i = 1; i <= n; ++i) all.push_back(i);
    rec(rec, all, TreePoly(), 0);
    const auto component = GradedComponent::multilinearMagma(operad, n);
    return finishPbw(component, primBasis(component, CoproductKind::Coadd), shuffles);
}

bool pbwSeriesIdentity(const std::vector<std::size_t>& primDims, const std::vector<std::size_t>& ambientDims,
                       bool multilinear) {
    const std::size_t order = std::min(primDims.size(), ambientDims.size());
    PowerSeries generator(order);
    for (std::size_t n = 1; n <= order; ++n) {
        const Rational p(static_cast<unsigned long>(primDims[n - 1]));
        if (multilinear) {
            generator[n] += p / factorial(static_cast<int>(n));
        } else {
            // log prod (1 - t^n)^(-p) = p sum_k t^(nk) / k
            for (std::size_t k = 1; n * k <= order; ++k) generator[n * k] += p / Rational(static_cast<unsigned long>(k));
        }
    }
    const PowerSeries e = generator.exp();
    for (std::size_t n = 1; n <= order; ++n) {
        Rational expected(static_cast<unsigned long>(ambientDims[n - 1]));
        if (multilinear) expected /= factorial(static_cast<int>(n));
        if (e[n] != expected) return false;
    }
    return true;
}

// ---- highest weight vectors ------------------------------------------------------------------------

std::vector<TreePoly> highestWeightBasis(Operad operad, const Multidegree& degree, WeightConstraint constraint) {
    const auto basis = componentBasis(operad, degree);
    int total = 0;
    for (int d : degree) total += d;
    if (total == 0) return constraint == WeightConstraint::Constant ? std::vector<TreePoly>{unitPoly()} : std::vector<TreePoly>{};
    const int m = static_cast<int>(degree.size());
    using Key = std::pair<int, Tensor<Tree, 2>>;
    // tag 0 holds the constraint, tags above enumerate the lowering operators
    return kernelOfMap(basis, [&](const Tree& t) {
        LinComb<Key> img;
        if (constraint == WeightConstraint::Primitive) {
            for (const auto& [x, c] : coadditionLowDegree(t, total / 2)) img.add({0, x}, c);
        } else {
            for (int k = 1; k <= m; ++k)
                for (const auto& [s, c] : partialK(k, TreePoly(t))) img.add({0, {Tree::var(k), s}}, c);
        }
        int tag = 1;
        for (int i = 1; i <= m; ++i)
            for (int j = 1; j < i; ++j, ++tag)
                for (const auto& [s, c] : partialKJ(i, j, TreePoly(t))) img.add({tag, {Tree(), s}}, c);
        return img;
    });
}

}  // namespace treealg
