#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "polycal/errors.hpp"

namespace polycal {

/// Exact rational scalar. mpq_class keeps values in canonical form
/// (gcd(|num|, den) = 1, den > 0) through all arithmetic.
using Rat = mpq_class;

/// Parse "p/q" or "p". Rejects empty strings, junk, and zero denominators.
Rat rat_from_string(const std::string& s);

/// Canonical text form: "p/q" with coprime p,q and q > 1, else "p".
std::string rat_to_string(const Rat& r);

/// The two-argument mpq constructor does not canonicalize; this helper does.
inline Rat rat(long num, long den = 1) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

/// Dense exact vector with explicit dimension (the dimension is the size).
class RatVec {
public:
    RatVec() = default;
    explicit RatVec(int dim) : v_(static_cast<size_t>(dim)) {}
    RatVec(std::initializer_list<Rat> xs) : v_(xs) {}
    explicit RatVec(std::vector<Rat> xs) : v_(std::move(xs)) {}

    int dim() const { return static_cast<int>(v_.size()); }
    const Rat& operator[](int i) const { return v_[static_cast<size_t>(i)]; }
    Rat& operator[](int i) { return v_[static_cast<size_t>(i)]; }

    bool operator==(const RatVec& o) const { return v_ == o.v_; }
    bool operator!=(const RatVec& o) const { return v_ != o.v_; }

    bool is_zero() const;

    const std::vector<Rat>& data() const { return v_; }

private:
    std::vector<Rat> v_;
};

RatVec operator+(const RatVec& a, const RatVec& b);
RatVec operator-(const RatVec& a, const RatVec& b);
RatVec operator-(const RatVec& a);
RatVec operator*(const Rat& s, const RatVec& a);
Rat dot(const RatVec& a, const RatVec& b);

/// Concatenate two vectors (used for product-space points).
RatVec concat(const RatVec& a, const RatVec& b);
/// Subvector [from, from+len).
RatVec subvec(const RatVec& a, int from, int len);

/// Scale to the unique integer vector with coprime entries and the same
/// direction (zero stays zero). Canonicalizes generators and rays.
RatVec primitive(const RatVec& a);

RatVec zero_vec(int dim);
RatVec unit_vec(int dim, int i);

/// Dense exact matrix, row-major.
class RatMat {
public:
    RatMat() : rows_(0), cols_(0) {}
    RatMat(int rows, int cols) : rows_(rows), cols_(cols), m_(static_cast<size_t>(rows) * cols) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const Rat& operator()(int r, int c) const { return m_[static_cast<size_t>(r) * cols_ + c]; }
    Rat& operator()(int r, int c) { return m_[static_cast<size_t>(r) * cols_ + c]; }

    RatVec row(int r) const;
    static RatMat identity(int n);
    static RatMat from_rows(const std::vector<RatVec>& rows);

    bool operator==(const RatMat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && m_ == o.m_; }

private:
    int rows_, cols_;
    std::vector<Rat> m_;
};

RatVec matvec(const RatMat& M, const RatVec& x);

} // namespace polycal
