#include "polycal/rat.hpp"

#include <cctype>

namespace polycal {

namespace {

bool is_integer_token(const std::string& s, bool allow_sign) {
    if (s.empty()) return false;
    size_t i = 0;
    if (allow_sign && (s[0] == '-' || s[0] == '+')) i = 1;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

} // namespace

Rat rat_from_string(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) {
        if (!is_integer_token(s, true))
            throw MalformedInstanceError("not a rational literal: \"" + s + "\"");
    } else {
        std::string num = s.substr(0, slash);
        std::string den = s.substr(slash + 1);
        if (!is_integer_token(num, true) || !is_integer_token(den, false))
            throw MalformedInstanceError("not a rational literal: \"" + s + "\"");
        if (mpz_class(den) == 0)
            throw MalformedInstanceError("zero denominator in \"" + s + "\"");
    }
    Rat r(s);
    r.canonicalize();
    return r;
}

std::string rat_to_string(const Rat& r) {
    return r.get_str();
}

bool RatVec::is_zero() const {
    for (const auto& x : v_)
        if (x != 0) return false;
    return true;
}

RatVec operator+(const RatVec& a, const RatVec& b) {
    if (a.dim() != b.dim()) throw DimensionMismatchError();
    RatVec r(a.dim());
    for (int i = 0; i < a.dim(); ++i) r[i] = a[i] + b[i];
    return r;
}

RatVec operator-(const RatVec& a, const RatVec& b) {
    if (a.dim() != b.dim()) throw DimensionMismatchError();
    RatVec r(a.dim());
    for (int i = 0; i < a.dim(); ++i) r[i] = a[i] - b[i];
    return r;
}

RatVec operator-(const RatVec& a) {
    RatVec r(a.dim());
    for (int i = 0; i < a.dim(); ++i) r[i] = -a[i];
    return r;
}

RatVec operator*(const Rat& s, const RatVec& a) {
    RatVec r(a.dim());
    for (int i = 0; i < a.dim(); ++i) r[i] = s * a[i];
    return r;
}

Rat dot(const RatVec& a, const RatVec& b) {
    if (a.dim() != b.dim()) throw DimensionMismatchError();
    Rat s = 0;
    for (int i = 0; i < a.dim(); ++i) s += a[i] * b[i];
    return s;
}

RatVec concat(const RatVec& a, const RatVec& b) {
    RatVec r(a.dim() + b.dim());
    for (int i = 0; i < a.dim(); ++i) r[i] = a[i];
    for (int i = 0; i < b.dim(); ++i) r[a.dim() + i] = b[i];
    return r;
}

RatVec subvec(const RatVec& a, int from, int len) {
    RatVec r(len);
    for (int i = 0; i < len; ++i) r[i] = a[from + i];
    return r;
}

RatVec primitive(const RatVec& a) {
    if (a.is_zero()) return a;
    mpz_class den_lcm = 1;
    for (int i = 0; i < a.dim(); ++i)
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), a[i].get_den().get_mpz_t());
    mpz_class num_gcd = 0;
    std::vector<mpz_class> ints(static_cast<size_t>(a.dim()));
    for (int i = 0; i < a.dim(); ++i) {
        Rat scaled = a[i] * Rat(den_lcm);
        ints[static_cast<size_t>(i)] = scaled.get_num(); // den is 1 after scaling
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), ints[static_cast<size_t>(i)].get_mpz_t());
    }
    RatVec r(a.dim());
    for (int i = 0; i < a.dim(); ++i) r[i] = Rat(ints[static_cast<size_t>(i)] / num_gcd);
    return r;
}

RatVec zero_vec(int dim) { return RatVec(dim); }

RatVec unit_vec(int dim, int i) {
    RatVec r(dim);
    r[i] = 1;
    return r;
}

RatVec RatMat::row(int r) const {
    RatVec out(cols_);
    for (int c = 0; c < cols_; ++c) out[c] = (*this)(r, c);
    return out;
}

RatMat RatMat::identity(int n) {
    RatMat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

RatMat RatMat::from_rows(const std::vector<RatVec>& rows) {
    if (rows.empty()) return RatMat(0, 0);
    RatMat m(static_cast<int>(rows.size()), rows[0].dim());
    for (int r = 0; r < m.rows(); ++r) {
        if (rows[static_cast<size_t>(r)].dim() != m.cols()) throw DimensionMismatchError();
        for (int c = 0; c < m.cols(); ++c) m(r, c) = rows[static_cast<size_t>(r)][c];
    }
    return m;
}

RatVec matvec(const RatMat& M, const RatVec& x) {
    if (M.cols() != x.dim()) throw DimensionMismatchError();
    RatVec r(M.rows());
    for (int i = 0; i < M.rows(); ++i) {
        Rat s = 0;
        for (int j = 0; j < M.cols(); ++j) s += M(i, j) * x[j];
        r[i] = s;
    }
    return r;
}

} // namespace polycal
