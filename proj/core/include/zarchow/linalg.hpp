#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "zarchow/rational.hpp"

namespace zarchow {

/// Fixed-dimension vector of exact rationals.
class Vec {
public:
    Vec() = default;
    explicit Vec(std::size_t dim) : e_(dim) {}
    Vec(std::initializer_list<Rational> init) : e_(init) {}
    explicit Vec(std::vector<Rational> entries) : e_(std::move(entries)) {}

    static Vec from_ints(std::initializer_list<long long> init);
    static Vec unit(std::size_t dim, std::size_t i);

    std::size_t size() const { return e_.size(); }
    const Rational& operator[](std::size_t i) const { return e_[i]; }
    Rational& operator[](std::size_t i) { return e_[i]; }

    bool is_zero() const;
    bool is_integral() const;

    Vec& operator+=(const Vec& o);
    Vec& operator-=(const Vec& o);
    friend Vec operator+(Vec a, const Vec& b) { return a += b; }
    friend Vec operator-(Vec a, const Vec& b) { return a -= b; }
    Vec operator-() const;
    friend Vec operator*(const Rational& s, const Vec& v);

    friend bool operator==(const Vec& a, const Vec& b) { return a.e_ == b.e_; }
    friend bool operator!=(const Vec& a, const Vec& b) { return !(a == b); }
    /// Lexicographic order (for deterministic sorting and map keys).
    friend bool operator<(const Vec& a, const Vec& b);

    std::string str() const; // "(3/2, -1, 0)"

private:
    std::vector<Rational> e_;
};

Rational dot(const Vec& a, const Vec& b);

/// Scales a rational vector to the primitive integer vector on the same ray
/// (direction preserved). Zero stays zero.
Vec primitive(const Vec& v);

/// Dense exact matrix, row-major.
class Mat {
public:
    Mat() = default;
    Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

    static Mat identity(std::size_t n);
    static Mat from_rows(const std::vector<std::vector<long long>>& rows);
    static Mat from_row_vecs(const std::vector<Vec>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
    Rational& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }

    bool is_symmetric() const;
    Mat transposed() const;
    Vec row(std::size_t i) const;
    Vec col(std::size_t j) const;

    friend Vec operator*(const Mat& m, const Vec& v);
    friend Mat operator*(const Mat& a, const Mat& b);
    friend bool operator==(const Mat& a, const Mat& b);

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Rational> a_;
};

enum class SolveStatus { unique, inconsistent, underdetermined };

struct SolveResult {
    SolveStatus status;
    Vec solution; // valid only when status == unique
};

/// Exact Gaussian elimination on the augmented system. Distinguishes a unique
/// solution from inconsistent and underdetermined systems.
SolveResult solve_linear(const Mat& a, const Vec& b);

/// Any particular solution of A x = b (free variables set to zero), or
/// nullopt when the system is inconsistent.
std::optional<Vec> solve_any(const Mat& a, const Vec& b);

std::size_t rank(const Mat& a);
Rational det(const Mat& a);

/// Basis of { x : A x = 0 }, reduced, deterministic, primitive integer rows.
std::vector<Vec> nullspace(const Mat& a);

/// Sylvester criterion in exact arithmetic: (-1)^k * (k-th leading principal
/// minor) > 0 for k = 1..n. Rejects non-symmetric input.
bool is_negative_definite(const Mat& a);

/// Rank of a list of vectors.
std::size_t rank_of(const std::vector<Vec>& vecs);

/// Indices of a maximal linearly independent subset, scanned left to right.
std::vector<std::size_t> independent_subset(const std::vector<Vec>& vecs);

} // namespace zarchow
