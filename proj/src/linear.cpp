#include "treealg/linear.hpp"

#include <algorithm>
#include <cctype>

namespace treealg {

std::string toString(const Rational& q) { return q.get_str(); }

Rational factorial(int n) {
    Integer f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return Rational(f);
}

// ---- text form ------------------------------------------------------------------------

namespace {

std::string basisText(const Tree& t) { return printTree(t); }
std::string basisText(const Forest& f) { return printForest(f); }

template <class B, std::size_t N>
std::string basisText(const Tensor<B, N>& t) {
    std::string s;
    for (std::size_t i = 0; i < N; ++i) {
        if (i) s += " (x) ";
        s += basisText(t[i]);
    }
    return s;
}

template <class B>
std::string printGeneric(const LinComb<B>& p) {
    if (p.isZero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [b, c] : p) {
        Rational mag = abs(c);
        if (first) {
            if (sgn(c) < 0) out += '-';
        } else {
            out += sgn(c) < 0 ? " - " : " + ";
        }
        first = false;
        if (mag != 1) out += toString(mag) + "*";
        out += basisText(b);
    }
    return out;
}

template <class B, class Reader>
LinComb<B> parseGeneric(std::string_view text, Reader read) {
    TextCursor cur(text);
    LinComb<B> out;
    if (cur.consume('0') && cur.atEnd()) return out;
    cur.seek(0);
    bool first = true;
    while (!cur.atEnd()) {
        Rational sign = 1;
        if (cur.consume('-'))
            sign = -1;
        else if (!cur.consume('+') && !first)
            cur.fail("'+' or '-' between terms");
        first = false;
        Rational coeff = 1;
        cur.skipSpace();
        std::size_t save = cur.offset();
        std::string number;
        while (std::isdigit(static_cast<unsigned char>(cur.peek())) || cur.peek() == '/') {
            number += cur.peek();
            cur.seek(cur.offset() + 1);
        }
        if (!number.empty() && cur.consume('*')) {
            try {
                coeff = Rational(number);
                coeff.canonicalize();
            } catch (const std::exception&) {
                cur.seek(save);
                cur.fail("rational coefficient");
            }
            if (coeff.get_den() == 0) {
                cur.seek(save);
                cur.fail("nonzero denominator");
            }
        } else {
            cur.seek(save);
        }
        out.add(read(cur), sign * coeff);
    }
    if (first) cur.fail("polynomial");
    return out;
}

Tree readTreeBasis(TextCursor& c) { return c.readTree(); }
Forest readForestBasis(TextCursor& c) { return c.readForest(); }

template <std::size_t N, class B, class R>
auto tensorReader(R readOne) {
    return [readOne](TextCursor& c) {
        Tensor<B, N> t;
        for (std::size_t i = 0; i < N; ++i) {
            if (i && !c.consume("(x)")) c.fail("'(x)'");
            t[i] = readOne(c);
        }
        return t;
    };
}

}  // namespace

std::string printPoly(const TreePoly& p) { return printGeneric(p); }
std::string printPoly(const ForestPoly& p) { return printGeneric(p); }
std::string printPoly(const TreeTensor& p) { return printGeneric(p); }
std::string printPoly(const TreeTensor3& p) { return printGeneric(p); }
std::string printPoly(const ForestTensor& p) { return printGeneric(p); }
std::string printPoly(const ForestTensor3& p) { return printGeneric(p); }

TreePoly parseTreePoly(std::string_view text) { return parseGeneric<Tree>(text, readTreeBasis); }
ForestPoly parseForestPoly(std::string_view text) { return parseGeneric<Forest>(text, readForestBasis); }
TreeTensor parseTreeTensor(std::string_view text) {
    return parseGeneric<Tensor<Tree, 2>>(text, tensorReader<2, Tree>(readTreeBasis));
}
TreeTensor3 parseTreeTensor3(std::string_view text) {
    return parseGeneric<Tensor<Tree, 3>>(text, tensorReader<3, Tree>(readTreeBasis));
}
ForestTensor parseForestTensor(std::string_view text) {
    return parseGeneric<Tensor<Forest, 2>>(text, tensorReader<2, Forest>(readForestBasis));
}

// ---- matrices ----------------------------------------------------------------------------

RationalMatrix::RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw Error(ErrorCode::DimensionMismatch, "ragged matrix literal");
        data_.insert(data_.end(), r.begin(), r.end());
    }
}

std::vector<Rational> RationalMatrix::apply(const std::vector<Rational>& v) const {
    if (v.size() != cols_) throw Error(ErrorCode::DimensionMismatch, "vector length differs from column count");
    std::vector<Rational> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            if (sgn((*this)(r, c)) != 0 && sgn(v[c]) != 0) out[r] += (*this)(r, c) * v[c];
    return out;
}

void RationalMatrix::appendRow(const std::vector<Rational>& row) {
    if (rows_ == 0 && cols_ == 0) cols_ = row.size();
    if (row.size() != cols_) throw Error(ErrorCode::DimensionMismatch, "row length differs from column count");
    data_.insert(data_.end(), row.begin(), row.end());
    ++rows_;
}

std::vector<std::size_t> rowReduce(RationalMatrix& m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    std::vector<std::size_t> pivots;
    std::vector<std::size_t> support;
    Rational factor;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t r = rank;
        while (r < rows && sgn(m(r, c)) == 0) ++r;
        if (r == rows) continue;
        if (r != rank)
            for (std::size_t j = c; j < cols; ++j) swap(m(r, j), m(rank, j));
        Rational inv = 1 / m(rank, c);
        support.clear();
        for (std::size_t j = c + 1; j < cols; ++j)
            if (sgn(m(rank, j)) != 0) {
                m(rank, j) *= inv;
                support.push_back(j);
            }
        m(rank, c) = 1;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == rank || sgn(m(i, c)) == 0) continue;
            factor = m(i, c);
            for (std::size_t j : support) m(i, j) -= factor * m(rank, j);
            m(i, c) = 0;
        }
        pivots.push_back(c);
        ++rank;
    }
    return pivots;
}

std::size_t rank(RationalMatrix m) { return rowReduce(m).size(); }

std::vector<std::vector<Rational>> kernelBasis(RationalMatrix m) {
    const auto pivots = rowReduce(m);
    std::vector<bool> isPivot(m.cols(), false);
    for (auto p : pivots) isPivot[p] = true;
    std::vector<std::vector<Rational>> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (isPivot[f]) continue;
        std::vector<Rational> v(m.cols());
        v[f] = 1;
        for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -m(k, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<std::vector<Rational>> solveExact(RationalMatrix m, const std::vector<Rational>& rhs) {
    if (rhs.size() != m.rows()) throw Error(ErrorCode::DimensionMismatch, "right-hand side length differs from row count");
    RationalMatrix aug(m.rows(), m.cols() + 1);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
        aug(r, m.cols()) = rhs[r];
    }
    const auto pivots = rowReduce(aug);
    std::vector<Rational> x(m.cols());
    for (std::size_t k = 0; k < pivots.size(); ++k) {
        if (pivots[k] == m.cols()) return std::nullopt;
        x[pivots[k]] = aug(k, m.cols());
    }
    return x;
}

Rational determinant(RationalMatrix m) {
    if (m.rows() != m.cols()) throw Error(ErrorCode::DimensionMismatch, "determinant of a non-square matrix");
    const std::size_t n = m.rows();
    Rational det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t r = c;
        while (r < n && sgn(m(r, c)) == 0) ++r;
        if (r == n) return 0;
        if (r != c) {
            for (std::size_t j = 0; j < n; ++j) swap(m(r, j), m(c, j));
            det = -det;
        }
        det *= m(c, c);
        for (std::size_t i = c + 1; i < n; ++i) {
            if (sgn(m(i, c)) == 0) continue;
            Rational f = m(i, c) / m(c, c);
            for (std::size_t j = c; j < n; ++j) m(i, j) -= f * m(c, j);
        }
    }
    return det;
}

// ---- power series ------------------------------------------------------------------------

PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
    const std::size_t n = std::min(a.order(), b.order());
    PowerSeries out(n);
    for (std::size_t i = 0; i <= n; ++i)
        for (std::size_t j = 0; i + j <= n; ++j) out[i + j] += a[i] * b[j];
    return out;
}

PowerSeries operator+(const PowerSeries& a, const PowerSeries& b) {
    const std::size_t n = std::min(a.order(), b.order());
    PowerSeries out(n);
    for (std::size_t i = 0; i <= n; ++i) out[i] = a[i] + b[i];
    return out;
}

PowerSeries operator-(const PowerSeries& a, const PowerSeries& b) {
    const std::size_t n = std::min(a.order(), b.order());
    PowerSeries out(n);
    for (std::size_t i = 0; i <= n; ++i) out[i] = a[i] - b[i];
    return out;
}

PowerSeries PowerSeries::inverse() const {
    if (sgn(c_[0]) == 0) throw Error(ErrorCode::DimensionMismatch, "series without constant term has no inverse");
    PowerSeries out(order());
    out[0] = 1 / c_[0];
    for (std::size_t n = 1; n <= order(); ++n) {
        Rational s = 0;
        for (std::size_t k = 1; k <= n; ++k) s += c_[k] * out[n - k];
        out[n] = -s / c_[0];
    }
    return out;
}

PowerSeries PowerSeries::derivative() const {
    PowerSeries out(order());
    for (std::size_t i = 1; i <= order(); ++i) out[i - 1] = c_[i] * static_cast<long>(i);
    return out;
}

PowerSeries PowerSeries::integral() const {
    PowerSeries out(order());
    for (std::size_t i = 1; i <= order(); ++i) out[i] = c_[i - 1] / static_cast<long>(i);
    return out;
}

PowerSeries PowerSeries::log() const {
    if (c_[0] != 1) throw Error(ErrorCode::DimensionMismatch, "log needs constant term 1");
    PowerSeries d = derivative() * inverse();
    d[order()] = 0;  // the top coefficient of the derivative is unknown at this order
    return d.integral();
}

PowerSeries PowerSeries::exp() const {
    if (sgn(c_[0]) != 0) throw Error(ErrorCode::DimensionMismatch, "exp needs constant term 0");
    PowerSeries out(order());
    out[0] = 1;
    for (std::size_t n = 1; n <= order(); ++n) {
        Rational s = 0;
        for (std::size_t k = 1; k <= n; ++k) s += c_[k] * static_cast<long>(k) * out[n - k];
        out[n] = s / static_cast<long>(n);
    }
    return out;
}

PowerSeries PowerSeries::eulerDerivative() const {
    PowerSeries out(order());
    for (std::size_t i = 0; i <= order(); ++i) out[i] = c_[i] * static_cast<long>(i);
    return out;
}

}  // namespace treealg
