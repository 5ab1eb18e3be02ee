/// @file linear.hpp
/// Exact rationals, formal linear combinations over tree and forest bases,
/// tensor combinations and a dense exact elimination engine.
#pragma once

#include "treealg/trees.hpp"

#include <array>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace treealg {

using Integer = mpz_class;
using Rational = mpq_class;

std::string toString(const Rational& q);
Rational factorial(int n);

/// Finite rational combination of basis elements; zero coefficients are never stored.
template <class Basis>
class LinComb {
public:
    using Terms = std::map<Basis, Rational>;

    LinComb() = default;
    explicit LinComb(const Basis& b, const Rational& c = 1) { add(b, c); }

    void add(const Basis& b, const Rational& c) {
        if (sgn(c) == 0) return;
        auto [it, inserted] = terms_.try_emplace(b, c);
        if (!inserted) {
            it->second += c;
            if (sgn(it->second) == 0) terms_.erase(it);
        }
    }

    Rational coefficient(const Basis& b) const {
        auto it = terms_.find(b);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    bool isZero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const Terms& terms() const { return terms_; }
    auto begin() const { return terms_.begin(); }
    auto end() const { return terms_.end(); }

    LinComb& operator+=(const LinComb& o) {
        for (const auto& [b, c] : o.terms_) add(b, c);
        return *this;
    }
    LinComb& operator-=(const LinComb& o) {
        for (const auto& [b, c] : o.terms_) add(b, -c);
        return *this;
    }
    LinComb& operator*=(const Rational& s) {
        if (sgn(s) == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [b, c] : terms_) c *= s;
        return *this;
    }
    void addScaled(const LinComb& o, const Rational& s) {
        if (sgn(s) == 0) return;
        for (const auto& [b, c] : o.terms_) add(b, c * s);
    }

    friend LinComb operator+(LinComb a, const LinComb& b) { return a += b; }
    friend LinComb operator-(LinComb a, const LinComb& b) { return a -= b; }
    friend LinComb operator-(LinComb a) { return a *= Rational(-1); }
    friend LinComb operator*(const Rational& s, LinComb a) { return a *= s; }
    friend LinComb operator*(LinComb a, const Rational& s) { return a *= s; }
    friend bool operator==(const LinComb& a, const LinComb& b) { return a.terms_ == b.terms_; }

    /// Keeps only terms satisfying the predicate.
    template <class Pred>
    LinComb filter(Pred keep) const {
        LinComb out;
        for (const auto& [b, c] : terms_)
            if (keep(b)) out.terms_.emplace_hint(out.terms_.end(), b, c);
        return out;
    }

private:
    Terms terms_;
};

template <class B, std::size_t N>
using Tensor = std::array<B, N>;

using TreePoly = LinComb<Tree>;
using ForestPoly = LinComb<Forest>;
using TreeTensor = LinComb<Tensor<Tree, 2>>;
using TreeTensor3 = LinComb<Tensor<Tree, 3>>;
using ForestTensor = LinComb<Tensor<Forest, 2>>;
using ForestTensor3 = LinComb<Tensor<Forest, 3>>;

/// Linear extension of a map defined on basis elements.
template <class In, class F>
auto linearMap(const LinComb<In>& p, F&& onBasis) {
    decltype(onBasis(std::declval<const In&>())) out;
    for (const auto& [b, c] : p) out.addScaled(onBasis(b), c);
    return out;
}

/// Bilinear extension of a map defined on pairs of basis elements.
template <class A, class B, class F>
auto bilinearMap(const LinComb<A>& p, const LinComb<B>& q, F&& onBasis) {
    decltype(onBasis(std::declval<const A&>(), std::declval<const B&>())) out;
    for (const auto& [a, ca] : p)
        for (const auto& [b, cb] : q) out.addScaled(onBasis(a, b), ca * cb);
    return out;
}

template <class B>
LinComb<Tensor<B, 2>> tensor(const LinComb<B>& p, const LinComb<B>& q) {
    LinComb<Tensor<B, 2>> out;
    for (const auto& [a, ca] : p)
        for (const auto& [b, cb] : q) out.add({a, b}, ca * cb);
    return out;
}

template <class B>
LinComb<Tensor<B, 2>> swapFactors(const LinComb<Tensor<B, 2>>& p) {
    LinComb<Tensor<B, 2>> out;
    for (const auto& [t, c] : p) out.add({t[1], t[0]}, c);
    return out;
}

/// (D (x) id) applied to a two-fold tensor, giving a three-fold one.
template <class B, class D>
LinComb<Tensor<B, 3>> applyLeft(const LinComb<Tensor<B, 2>>& p, D&& delta) {
    LinComb<Tensor<B, 3>> out;
    for (const auto& [t, c] : p)
        for (const auto& [s, d] : delta(t[0])) out.add({s[0], s[1], t[1]}, c * d);
    return out;
}

/// (id (x) D) applied to a two-fold tensor.
template <class B, class D>
LinComb<Tensor<B, 3>> applyRight(const LinComb<Tensor<B, 2>>& p, D&& delta) {
    LinComb<Tensor<B, 3>> out;
    for (const auto& [t, c] : p)
        for (const auto& [s, d] : delta(t[1])) out.add({t[0], s[0], s[1]}, c * d);
    return out;
}

/// <p, q> with the basis orthonormal.
template <class B>
Rational pairing(const LinComb<B>& p, const LinComb<B>& q) {
    Rational s = 0;
    const auto& small = p.size() <= q.size() ? p : q;
    const auto& large = p.size() <= q.size() ? q : p;
    for (const auto& [b, c] : small) s += c * large.coefficient(b);
    return s;
}

// ---- text form -------------------------------------------------------------------

std::string printPoly(const TreePoly& p);
std::string printPoly(const ForestPoly& p);
std::string printPoly(const TreeTensor& p);
std::string printPoly(const TreeTensor3& p);
std::string printPoly(const ForestTensor& p);
std::string printPoly(const ForestTensor3& p);

TreePoly parseTreePoly(std::string_view text);
ForestPoly parseForestPoly(std::string_view text);
TreeTensor parseTreeTensor(std::string_view text);
TreeTensor3 parseTreeTensor3(std::string_view text);
ForestTensor parseForestTensor(std::string_view text);

// ---- dense matrices ----------------------------------------------------------------

class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::vector<Rational> apply(const std::vector<Rational>& v) const;
    void appendRow(const std::vector<Rational>& row);

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Rational> data_;
};

/// Reduced row echelon form with first-nonzero pivoting; returns the pivot columns.
std::vector<std::size_t> rowReduce(RationalMatrix& m);
std::size_t rank(RationalMatrix m);
std::vector<std::vector<Rational>> kernelBasis(RationalMatrix m);
/// Some exact solution of m x = rhs, or nullopt.
std::optional<std::vector<Rational>> solveExact(RationalMatrix m, const std::vector<Rational>& rhs);
Rational determinant(RationalMatrix m);

/// Coordinates of polynomials in a fixed basis; rows of the result are the coordinate vectors.
template <class B>
class BasisIndex {
public:
    BasisIndex() = default;
    explicit BasisIndex(std::vector<B> basis) : basis_(std::move(basis)) {
        for (std::size_t i = 0; i < basis_.size(); ++i) index_.emplace(basis_[i], i);
    }
    const std::vector<B>& basis() const { return basis_; }
    std::size_t size() const { return basis_.size(); }
    std::optional<std::size_t> find(const B& b) const {
        auto it = index_.find(b);
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }
    /// Throws DimensionMismatch if p has support outside the basis.
    std::vector<Rational> coordinates(const LinComb<B>& p) const {
        std::vector<Rational> v(basis_.size());
        for (const auto& [b, c] : p) {
            auto i = find(b);
            if (!i) throw Error(ErrorCode::DimensionMismatch, "term outside the basis");
            v[*i] = c;
        }
        return v;
    }
    LinComb<B> combination(const std::vector<Rational>& v) const {
        LinComb<B> p;
        for (std::size_t i = 0; i < v.size(); ++i) p.add(basis_[i], v[i]);
        return p;
    }

private:
    std::vector<B> basis_;
    std::map<B, std::size_t> index_;
};

/// Rank of a family of polynomials.
template <class B>
std::size_t polyRank(const std::vector<LinComb<B>>& family) {
    std::map<B, std::size_t> cols;
    for (const auto& p : family)
        for (const auto& [b, c] : p) cols.emplace(b, 0);
    std::size_t k = 0;
    for (auto& [b, i] : cols) i = k++;
    RationalMatrix m(family.size(), cols.size());
    for (std::size_t r = 0; r < family.size(); ++r)
        for (const auto& [b, c] : family[r]) m(r, cols[b]) = c;
    return rank(std::move(m));
}

/// Kernel of the linear map b -> image(b) on span(domain), returned as combinations of domain elements.
template <class B, class F>
std::vector<LinComb<B>> kernelOfMap(const std::vector<B>& domain, F&& image) {
    using Out = std::decay_t<decltype(image(std::declval<const B&>()))>;
    std::vector<Out> images;
    images.reserve(domain.size());
    for (const auto& b : domain) images.push_back(image(b));
    using Key = typename Out::Terms::key_type;
    std::map<Key, std::size_t> rowOf;
    for (const auto& img : images)
        for (const auto& [k, c] : img) rowOf.emplace(k, 0);
    std::size_t next = 0;
    for (auto& [k, r] : rowOf) r = next++;
    RationalMatrix m(rowOf.size(), domain.size());
    for (std::size_t col = 0; col < domain.size(); ++col)
        for (const auto& [k, c] : images[col]) m(rowOf[k], col) = c;
    std::vector<LinComb<B>> out;
    for (const auto& v : kernelBasis(std::move(m))) {
        LinComb<B> p;
        for (std::size_t i = 0; i < v.size(); ++i) p.add(domain[i], v[i]);
        out.push_back(std::move(p));
    }
    return out;
}

// ---- truncated power series ----------------------------------------------------------

/// Coefficients c[0..n] of a truncated rational power series.
class PowerSeries {
public:
    explicit PowerSeries(std::size_t order) : c_(order + 1) {}
    explicit PowerSeries(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {}

    std::size_t order() const { return c_.size() - 1; }
    Rational& operator[](std::size_t i) { return c_[i]; }
    const Rational& operator[](std::size_t i) const { return c_[i]; }
    const std::vector<Rational>& coefficients() const { return c_; }

    friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b);
    friend PowerSeries operator+(const PowerSeries& a, const PowerSeries& b);
    friend PowerSeries operator-(const PowerSeries& a, const PowerSeries& b);
    friend bool operator==(const PowerSeries&, const PowerSeries&) = default;

    /// Requires a nonzero constant term.
    PowerSeries inverse() const;
    PowerSeries derivative() const;
    PowerSeries integral() const;
    /// log(self), requires constant term 1.
    PowerSeries log() const;
    /// exp(self), requires constant term 0.
    PowerSeries exp() const;
    /// t * d/dt.
    PowerSeries eulerDerivative() const;

private:
    std::vector<Rational> c_;
};

}  // namespace treealg
