#include "zarchow/linalg.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace zarchow {

Vec Vec::from_ints(std::initializer_list<long long> init) {
    std::vector<Rational> e;
    e.reserve(init.size());
    for (long long v : init)
        e.emplace_back(v);
    return Vec(std::move(e));
}

Vec Vec::unit(std::size_t dim, std::size_t i) {
    Vec v(dim);
    v[i] = Rational(1);
    return v;
}

bool Vec::is_zero() const {
    for (const auto& x : e_)
        if (!x.is_zero())
            return false;
    return true;
}

bool Vec::is_integral() const {
    for (const auto& x : e_)
        if (!x.is_integer())
            return false;
    return true;
}

Vec& Vec::operator+=(const Vec& o) {
    if (size() != o.size())
        throw std::invalid_argument("Vec: dimension mismatch");
    for (std::size_t i = 0; i < e_.size(); ++i)
        e_[i] += o.e_[i];
    return *this;
}

Vec& Vec::operator-=(const Vec& o) {
    if (size() != o.size())
        throw std::invalid_argument("Vec: dimension mismatch");
    for (std::size_t i = 0; i < e_.size(); ++i)
        e_[i] -= o.e_[i];
    return *this;
}

Vec Vec::operator-() const {
    Vec r(size());
    for (std::size_t i = 0; i < e_.size(); ++i)
        r[i] = -e_[i];
    return r;
}

Vec operator*(const Rational& s, const Vec& v) {
    Vec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        r[i] = s * v[i];
    return r;
}

bool operator<(const Vec& a, const Vec& b) {
    return std::lexicographical_compare(a.e_.begin(), a.e_.end(), b.e_.begin(), b.e_.end());
}

std::string Vec::str() const {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < e_.size(); ++i) {
        if (i)
            os << ", ";
        os << e_[i];
    }
    os << ")";
    return os.str();
}

Rational dot(const Vec& a, const Vec& b) {
    if (a.size() != b.size())
        throw std::invalid_argument("dot: dimension mismatch");
    Rational s;
    for (std::size_t i = 0; i < a.size(); ++i)
        s += a[i] * b[i];
    return s;
}

Vec primitive(const Vec& v) {
    if (v.is_zero())
        return v;
    Integer den_lcm = 1;
    for (std::size_t i = 0; i < v.size(); ++i)
        den_lcm = lcm_int(den_lcm, v[i].denominator());
    Integer num_gcd = 0;
    for (std::size_t i = 0; i < v.size(); ++i)
        num_gcd = gcd_int(num_gcd, v[i].numerator() * (den_lcm / v[i].denominator()));
    num_gcd = abs(num_gcd);
    Rational scale(den_lcm, num_gcd);
    return scale * v;
}

Mat Mat::identity(std::size_t n) {
    Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = Rational(1);
    return m;
}

Mat Mat::from_rows(const std::vector<std::vector<long long>>& rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r ? rows[0].size() : 0;
    Mat m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c)
            throw std::invalid_argument("Mat: ragged rows");
        for (std::size_t j = 0; j < c; ++j)
            m(i, j) = Rational(rows[i][j]);
    }
    return m;
}

Mat Mat::from_row_vecs(const std::vector<Vec>& rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r ? rows[0].size() : 0;
    Mat m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c)
            throw std::invalid_argument("Mat: ragged rows");
        for (std::size_t j = 0; j < c; ++j)
            m(i, j) = rows[i][j];
    }
    return m;
}

bool Mat::is_symmetric() const {
    if (rows_ != cols_)
        return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i + 1; j < cols_; ++j)
            if ((*this)(i, j) != (*this)(j, i))
                return false;
    return true;
}

Mat Mat::transposed() const {
    Mat t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            t(j, i) = (*this)(i, j);
    return t;
}

Vec Mat::row(std::size_t i) const {
    Vec v(cols_);
    for (std::size_t j = 0; j < cols_; ++j)
        v[j] = (*this)(i, j);
    return v;
}

Vec Mat::col(std::size_t j) const {
    Vec v(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        v[i] = (*this)(i, j);
    return v;
}

Vec operator*(const Mat& m, const Vec& v) {
    if (m.cols() != v.size())
        throw std::invalid_argument("Mat*Vec: dimension mismatch");
    Vec r(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Rational s;
        for (std::size_t j = 0; j < m.cols(); ++j)
            s += m(i, j) * v[j];
        r[i] = s;
    }
    return r;
}

Mat operator*(const Mat& a, const Mat& b) {
    if (a.cols() != b.rows())
        throw std::invalid_argument("Mat*Mat: dimension mismatch");
    Mat r(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a(i, k).is_zero())
                continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                r(i, j) += a(i, k) * b(k, j);
        }
    return r;
}

bool operator==(const Mat& a, const Mat& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
}

namespace {

// Row echelon form of [A|b] (b optional). Pivot = first row with a nonzero
// entry in the current column, for determinism. Returns pivot columns.
struct Echelon {
    Mat m;                          // reduced rows
    std::vector<std::size_t> pivot; // pivot column per pivot row
};

Echelon echelon(Mat m) {
    Echelon e{std::move(m), {}};
    std::size_t row = 0;
    for (std::size_t col = 0; col < e.m.cols() && row < e.m.rows(); ++col) {
        std::size_t p = row;
        while (p < e.m.rows() && e.m(p, col).is_zero())
            ++p;
        if (p == e.m.rows())
            continue;
        if (p != row)
            for (std::size_t j = 0; j < e.m.cols(); ++j)
                std::swap(e.m(row, j), e.m(p, j));
        const Rational inv = Rational(1) / e.m(row, col);
        for (std::size_t j = col; j < e.m.cols(); ++j)
            e.m(row, j) *= inv;
        for (std::size_t i = 0; i < e.m.rows(); ++i) {
            if (i == row || e.m(i, col).is_zero())
                continue;
            const Rational f = e.m(i, col);
            for (std::size_t j = col; j < e.m.cols(); ++j)
                e.m(i, j) -= f * e.m(row, j);
        }
        e.pivot.push_back(col);
        ++row;
    }
    return e;
}

Mat augment(const Mat& a, const Vec& b) {
    Mat m(a.rows(), a.cols() + 1);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j)
            m(i, j) = a(i, j);
        m(i, a.cols()) = b[i];
    }
    return m;
}

} // namespace

SolveResult solve_linear(const Mat& a, const Vec& b) {
    if (a.rows() != b.size())
        throw std::invalid_argument("solve_linear: dimension mismatch");
    const Echelon e = echelon(augment(a, b));
    // Inconsistent iff some pivot lands in the augmented column.
    for (std::size_t k = 0; k < e.pivot.size(); ++k)
        if (e.pivot[k] == a.cols())
            return {SolveStatus::inconsistent, Vec()};
    if (e.pivot.size() < a.cols())
        return {SolveStatus::underdetermined, Vec()};
    Vec x(a.cols());
    for (std::size_t k = 0; k < e.pivot.size(); ++k)
        x[e.pivot[k]] = e.m(k, a.cols());
    return {SolveStatus::unique, x};
}

std::optional<Vec> solve_any(const Mat& a, const Vec& b) {
    if (a.rows() != b.size())
        throw std::invalid_argument("solve_any: dimension mismatch");
    const Echelon e = echelon(augment(a, b));
    for (std::size_t k = 0; k < e.pivot.size(); ++k)
        if (e.pivot[k] == a.cols())
            return std::nullopt;
    Vec x(a.cols());
    for (std::size_t k = 0; k < e.pivot.size(); ++k)
        x[e.pivot[k]] = e.m(k, a.cols());
    return x;
}

std::size_t rank(const Mat& a) { return echelon(a).pivot.size(); }

Rational det(const Mat& a) {
    if (a.rows() != a.cols())
        throw std::invalid_argument("det: square matrix required");
    Mat m = a;
    const std::size_t n = m.rows();
    Rational d(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t p = col;
        while (p < n && m(p, col).is_zero())
            ++p;
        if (p == n)
            return Rational(0);
        if (p != col) {
            for (std::size_t j = 0; j < n; ++j)
                std::swap(m(col, j), m(p, j));
            d = -d;
        }
        d *= m(col, col);
        const Rational inv = Rational(1) / m(col, col);
        for (std::size_t i = col + 1; i < n; ++i) {
            if (m(i, col).is_zero())
                continue;
            const Rational f = m(i, col) * inv;
            for (std::size_t j = col; j < n; ++j)
                m(i, j) -= f * m(col, j);
        }
    }
    return d;
}

std::vector<Vec> nullspace(const Mat& a) {
    const Echelon e = echelon(a);
    std::vector<bool> is_pivot(a.cols(), false);
    for (std::size_t c : e.pivot)
        is_pivot[c] = true;
    std::vector<Vec> basis;
    for (std::size_t free = 0; free < a.cols(); ++free) {
        if (is_pivot[free])
            continue;
        Vec v(a.cols());
        v[free] = Rational(1);
        for (std::size_t k = 0; k < e.pivot.size(); ++k)
            v[e.pivot[k]] = -e.m(k, free);
        basis.push_back(primitive(v));
    }
    return basis;
}

bool is_negative_definite(const Mat& a) {
    if (!a.is_symmetric())
        throw std::invalid_argument("is_negative_definite: symmetric matrix required");
    const std::size_t n = a.rows();
    for (std::size_t k = 1; k <= n; ++k) {
        Mat minor(k, k);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j)
                minor(i, j) = a(i, j);
        Rational m = det(minor);
        if (k % 2 == 1)
            m = -m;
        if (!(m > Rational(0)))
            return false;
    }
    return true;
}

std::size_t rank_of(const std::vector<Vec>& vecs) {
    if (vecs.empty())
        return 0;
    return rank(Mat::from_row_vecs(vecs));
}

std::vector<std::size_t> independent_subset(const std::vector<Vec>& vecs) {
    std::vector<std::size_t> chosen;
    std::vector<Vec> current;
    for (std::size_t i = 0; i < vecs.size(); ++i) {
        current.push_back(vecs[i]);
        if (rank_of(current) == current.size())
            chosen.push_back(i);
        else
            current.pop_back();
    }
    return chosen;
}

} // namespace zarchow
