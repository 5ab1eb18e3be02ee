/// @file isos.hpp
/// Isomorphisms between the Loday-Ronco, planar Connes-Kreimer and Brouder-Frabetti
/// Hopf algebras, and a generic checker for graded Hopf morphisms.
#pragma once

#include "treealg/dendriform.hpp"

#include <functional>
#include <map>
#include <mutex>
#include <string>

namespace treealg {

/// Algebra homomorphism forests -> (binary trees, *) with xi(T) = | v xi(degraft T).
YPoly xi(const Forest& f);
YPoly xi(const Tree& t);
YPoly xi(const ForestPoly& f);

/// Inverse of xi, solved degree by degree.
ForestPoly theta(const Tree& t);
ForestPoly theta(const YPoly& f);

/// Algebra homomorphism (binary trees, o_alpha) -> (binary trees, *).
YPoly psi(const Tree& t);
YPoly psi(const YPoly& f);

/// A graded Hopf algebra given by its basis in each degree.
template <class B>
struct HopfModel {
    std::string name;
    std::function<std::vector<B>(int)> basis;
    std::function<LinComb<B>(const B&, const B&)> product;
    std::function<LinComb<Tensor<B, 2>>(const B&)> coproduct;
};

HopfModel<Tree> lodayRoncoModel();
HopfModel<Tree> brouderFrabettiModel();
HopfModel<Forest> connesKreimerModel();

/// Linear map given on basis elements, with memoized images.
template <class S, class D>
class GradedLinearMap {
public:
    using Rule = std::function<LinComb<D>(const S&)>;

    GradedLinearMap(std::string name, Rule rule) : name_(std::move(name)), rule_(std::move(rule)) {}

    const std::string& name() const { return name_; }

    LinComb<D> operator()(const S& b) const {
        {
            std::lock_guard lock(mu_);
            if (auto it = cache_.find(b); it != cache_.end()) return it->second;
        }
        LinComb<D> image = rule_(b);
        std::lock_guard lock(mu_);
        cache_.emplace(b, image);
        return image;
    }

    LinComb<D> operator()(const LinComb<S>& f) const {
        return linearMap(f, [this](const S& b) { return (*this)(b); });
    }

    LinComb<Tensor<D, 2>> onTensor(const LinComb<Tensor<S, 2>>& f) const {
        LinComb<Tensor<D, 2>> out;
        for (const auto& [x, c] : f) out.addScaled(tensor((*this)(x[0]), (*this)(x[1])), c);
        return out;
    }

    /// Columns are the coordinates of the images of `source` in `target`.
    RationalMatrix matrix(const std::vector<S>& source, const BasisIndex<D>& target) const {
        RationalMatrix m(target.size(), source.size());
        for (std::size_t j = 0; j < source.size(); ++j) {
            const auto v = target.coordinates((*this)(source[j]));
            for (std::size_t i = 0; i < v.size(); ++i) m(i, j) = v[i];
        }
        return m;
    }

private:
    std::string name_;
    Rule rule_;
    mutable std::mutex mu_;
    mutable std::map<S, LinComb<D>> cache_;
};

GradedLinearMap<Forest, Tree> xiMap();
GradedLinearMap<Tree, Forest> thetaMap();
GradedLinearMap<Tree, Tree> psiMap();

struct MorphismReport {
    std::string name;
    bool multiplicative = true;
    bool intertwining = true;
    bool bijective = true;
    long checked = 0;
    std::string firstFailure;

    bool pass() const { return multiplicative && intertwining && bijective; }
};

template <class S, class D>
MorphismReport verifyHopfMorphism(const GradedLinearMap<S, D>& map, const HopfModel<S>& src,
                                  const HopfModel<D>& dst, int maxDegree) {
    MorphismReport report;
    report.name = map.name() + ": " + src.name + " -> " + dst.name;
    auto fail = [&report](bool& flag, const std::string& what) {
        flag = false;
        if (report.firstFailure.empty()) report.firstFailure = what;
    };
    std::vector<std::vector<S>> bases;
    for (int n = 0; n <= maxDegree; ++n) bases.push_back(src.basis(n));

    for (int n = 0; n <= maxDegree; ++n) {
        const auto& basis = bases[static_cast<std::size_t>(n)];
        const BasisIndex<D> target(dst.basis(n));
        try {
            const RationalMatrix m = map.matrix(basis, target);
            if (basis.size() != target.size() || rank(m) != basis.size())
                fail(report.bijective, "not bijective in degree " + std::to_string(n));
        } catch (const Error&) {
            fail(report.bijective, "image leaves degree " + std::to_string(n));
        }
        for (const auto& b : basis) {
            ++report.checked;
            if (map.onTensor(src.coproduct(b)) != linearMap(map(b), dst.coproduct))
                fail(report.intertwining, "coproduct differs on " + printPoly(LinComb<S>(b)));
        }
    }
    for (int i = 1; i < maxDegree; ++i)
        for (int j = 1; i + j <= maxDegree; ++j)
            for (const auto& a : bases[static_cast<std::size_t>(i)])
                for (const auto& b : bases[static_cast<std::size_t>(j)]) {
                    ++report.checked;
                    const auto lhs = map(src.product(a, b));
                    const auto rhs = bilinearMap(map(a), map(b), dst.product);
                    if (lhs != rhs)
                        fail(report.multiplicative,
                             "product differs on " + printPoly(LinComb<S>(a)) + " and " + printPoly(LinComb<S>(b)));
                }
    return report;
}

}  // namespace treealg
