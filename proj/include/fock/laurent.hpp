#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace fock {

struct SingularMatrix : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Element of Z[q, q^-1], stored densely from the lowest nonzero exponent.
class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(long c) {
        if (c != 0) c_.emplace_back(c);
    }
    LaurentPoly(const mpz_class& c) {
        if (c != 0) c_.push_back(c);
    }

    static LaurentPoly monomial(int e, const mpz_class& c = 1) {
        LaurentPoly r(c);
        r.lo_ = e;
        return r;
    }
    static LaurentPoly q(int e = 1) { return monomial(e); }
    static LaurentPoly from_terms(const std::map<int, mpz_class>& t) {
        LaurentPoly r;
        if (t.empty()) return r;
        r.lo_ = t.begin()->first;
        r.c_.assign(t.rbegin()->first - r.lo_ + 1, 0);
        for (auto& [e, c] : t) r.c_[e - r.lo_] += c;
        r.trim();
        return r;
    }

    bool is_zero() const { return c_.empty(); }
    explicit operator bool() const { return !c_.empty(); }
    int min_exp() const { return lo_; }
    int max_exp() const { return lo_ + int(c_.size()) - 1; }
    std::size_t length() const { return c_.size(); }
    mpz_class coeff(int e) const {
        if (e < lo_ || e > max_exp()) return 0;
        return c_[e - lo_];
    }
    bool is_monomial() const {
        return !c_.empty() && std::count_if(c_.begin(), c_.end(), [](auto& x) { return x != 0; }) == 1;
    }
    bool is_one() const { return c_.size() == 1 && lo_ == 0 && c_[0] == 1; }

    std::map<int, mpz_class> terms() const {
        std::map<int, mpz_class> t;
        for (std::size_t i = 0; i < c_.size(); ++i)
            if (c_[i] != 0) t[lo_ + int(i)] = c_[i];
        return t;
    }
    std::size_t nonzero_terms() const {
        return std::count_if(c_.begin(), c_.end(), [](auto& x) { return x != 0; });
    }

    LaurentPoly operator-() const {
        LaurentPoly r = *this;
        for (auto& x : r.c_) x = -x;
        return r;
    }
    LaurentPoly& operator+=(const LaurentPoly& o) { return add(o, 1); }
    LaurentPoly& operator-=(const LaurentPoly& o) { return add(o, -1); }
    LaurentPoly& operator*=(const LaurentPoly& o) {
        *this = *this * o;
        return *this;
    }
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r;
        if (a.is_zero() || b.is_zero()) return r;
        r.lo_ = a.lo_ + b.lo_;
        r.c_.assign(a.c_.size() + b.c_.size() - 1, 0);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                if (b.c_[j] != 0) mpz_addmul(r.c_[i + j].get_mpz_t(), a.c_[i].get_mpz_t(), b.c_[j].get_mpz_t());
        }
        r.trim();
        return r;
    }
    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        return a.c_ == b.c_ && (a.c_.empty() || a.lo_ == b.lo_);
    }
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }
    // arbitrary but total, used only for deterministic containers
    friend bool operator<(const LaurentPoly& a, const LaurentPoly& b) {
        if (a.lo_ != b.lo_) return a.lo_ < b.lo_;
        return a.c_ < b.c_;
    }

    LaurentPoly shifted(int e) const {
        LaurentPoly r = *this;
        if (!r.c_.empty()) r.lo_ += e;
        return r;
    }
    LaurentPoly bar() const {
        LaurentPoly r;
        if (c_.empty()) return r;
        r.c_.assign(c_.rbegin(), c_.rend());
        r.lo_ = -max_exp();
        return r;
    }
    mpz_class content() const {
        mpz_class g = 0;
        for (auto& x : c_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
        return g;
    }
    LaurentPoly divided_by_integer(const mpz_class& d) const {
        LaurentPoly r = *this;
        for (auto& x : r.c_) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), d.get_mpz_t());
        return r;
    }

    // exact quotient in Z[q,q^-1], or nothing if d does not divide *this
    std::optional<LaurentPoly> divide_exact(const LaurentPoly& d) const {
        if (d.is_zero()) throw std::domain_error("division by zero Laurent polynomial");
        if (is_zero()) return LaurentPoly();
        if (c_.size() < d.c_.size()) return std::nullopt;
        std::vector<mpz_class> rem = c_;
        std::size_t qlen = c_.size() - d.c_.size() + 1;
        std::vector<mpz_class> quo(qlen);
        const mpz_class& lead = d.c_.back();
        mpz_class t;
        for (std::size_t k = qlen; k-- > 0;) {
            mpz_class& top = rem[k + d.c_.size() - 1];
            if (top == 0) continue;
            if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t())) return std::nullopt;
            mpz_divexact(t.get_mpz_t(), top.get_mpz_t(), lead.get_mpz_t());
            quo[k] = t;
            for (std::size_t j = 0; j < d.c_.size(); ++j)
                if (d.c_[j] != 0) mpz_submul(rem[k + j].get_mpz_t(), t.get_mpz_t(), d.c_[j].get_mpz_t());
        }
        for (auto& x : rem)
            if (x != 0) return std::nullopt;
        LaurentPoly r;
        r.c_ = std::move(quo);
        r.lo_ = lo_ - d.lo_;
        r.trim();
        return r;
    }

    // value at q = x modulo a prime, for rank probes
    std::uint64_t eval_mod(std::uint64_t x, std::uint64_t p) const;

    std::string str() const {
        if (c_.empty()) return "0";
        std::string out;
        bool first = true;
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (c_[i] == 0) continue;
            int e = lo_ + int(i);
            mpz_class a = abs(c_[i]);
            bool neg = c_[i] < 0;
            if (first)
                out += neg ? "-" : "";
            else
                out += neg ? " - " : " + ";
            first = false;
            if (e == 0) {
                out += a.get_str();
            } else {
                if (a != 1) out += a.get_str() + "*";
                out += "q";
                if (e != 1) out += "^" + std::to_string(e);
            }
        }
        return out;
    }

    static LaurentPoly parse(const std::string& text, char var = 'q');

private:
    int lo_ = 0;
    std::vector<mpz_class> c_;

    void trim() {
        std::size_t a = 0;
        while (a < c_.size() && c_[a] == 0) ++a;
        if (a == c_.size()) {
            c_.clear();
            lo_ = 0;
            return;
        }
        std::size_t b = c_.size();
        while (c_[b - 1] == 0) --b;
        if (a > 0 || b < c_.size()) c_ = std::vector<mpz_class>(c_.begin() + a, c_.begin() + b);
        lo_ += int(a);
    }
    LaurentPoly& add(const LaurentPoly& o, int sign) {
        if (o.is_zero()) return *this;
        if (is_zero()) {
            *this = sign > 0 ? o : -o;
            return *this;
        }
        int lo = std::min(lo_, o.lo_), hi = std::max(max_exp(), o.max_exp());
        if (lo < lo_ || hi > max_exp()) {
            std::vector<mpz_class> nc(hi - lo + 1);
            for (std::size_t i = 0; i < c_.size(); ++i) nc[lo_ - lo + i] = std::move(c_[i]);
            c_ = std::move(nc);
            lo_ = lo;
        }
        for (std::size_t i = 0; i < o.c_.size(); ++i) {
            if (sign > 0)
                c_[o.lo_ - lo_ + i] += o.c_[i];
            else
                c_[o.lo_ - lo_ + i] -= o.c_[i];
        }
        trim();
        return *this;
    }
};

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>((unsigned __int128)a * b % p);
}
inline std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

inline std::uint64_t LaurentPoly::eval_mod(std::uint64_t x, std::uint64_t p) const {
    if (c_.empty()) return 0;
    std::uint64_t acc = 0;
    const mpz_class pm(static_cast<unsigned long>(p));
    mpz_class r;
    for (std::size_t i = c_.size(); i-- > 0;) {
        mpz_fdiv_r(r.get_mpz_t(), c_[i].get_mpz_t(), pm.get_mpz_t());
        acc = (mulmod(acc, x, p) + r.get_ui()) % p;
    }
    if (lo_ >= 0) return mulmod(acc, powmod(x, lo_, p), p);
    std::uint64_t inv = powmod(x, p - 2, p);
    return mulmod(acc, powmod(inv, std::uint64_t(-std::int64_t(lo_)), p), p);
}

inline LaurentPoly LaurentPoly::parse(const std::string& text, char var) {
    std::map<int, mpz_class> t;
    std::size_t i = 0;
    auto skip = [&] {
        while (i < text.size() && std::isspace((unsigned char)text[i])) ++i;
    };
    auto fail = [&] { throw std::invalid_argument("cannot parse Laurent polynomial: '" + text + "'"); };
    skip();
    if (i == text.size()) fail();
    if (text.compare(i, std::string::npos, "0") == 0) return {};
    bool first = true;
    while (true) {
        skip();
        if (i == text.size()) break;
        int sign = 1;
        if (text[i] == '+' || text[i] == '-') {
            sign = text[i] == '-' ? -1 : 1;
            ++i;
            skip();
        } else if (!first) {
            fail();
        }
        first = false;
        mpz_class c = 1;
        bool have_c = false;
        std::size_t j = i;
        while (j < text.size() && std::isdigit((unsigned char)text[j])) ++j;
        if (j > i) {
            c = mpz_class(text.substr(i, j - i));
            have_c = true;
            i = j;
            skip();
        }
        int e = 0;
        if (i < text.size() && text[i] == '*') {
            if (!have_c) fail();
            ++i;
            skip();
        }
        if (i < text.size() && text[i] == var) {
            ++i;
            e = 1;
            if (i < text.size() && text[i] == '^') {
                ++i;
                std::size_t k = i;
                if (k < text.size() && (text[k] == '-' || text[k] == '+')) ++k;
                std::size_t m = k;
                while (m < text.size() && std::isdigit((unsigned char)text[m])) ++m;
                if (m == k) fail();
                e = std::stoi(text.substr(i, m - i));
                i = m;
            }
        } else if (!have_c) {
            fail();
        }
        t[e] += sign * c;
    }
    return from_terms(t);
}

inline LaurentPoly bar_conjugate(const LaurentPoly& f) { return f.bar(); }

// f is read as a Laurent polynomial in p and rewritten through p = -q^-1
inline LaurentPoly p_substitute(const LaurentPoly& f) {
    std::map<int, mpz_class> t;
    for (auto& [e, c] : f.terms()) t[-e] = (e % 2 != 0) ? mpz_class(-c) : c;
    return LaurentPoly::from_terms(t);
}

inline std::ostream& operator<<(std::ostream& os, const LaurentPoly& f) { return os << f.str(); }

// Quotient of Laurent polynomials with content and monomial factors cleared
// from the denominator. Not reduced by polynomial gcd.
class RationalFunction {
public:
    RationalFunction() : den_(1) {}
    RationalFunction(const LaurentPoly& num) : num_(num), den_(1) {}
    RationalFunction(LaurentPoly num, LaurentPoly den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) throw std::domain_error("zero denominator");
        normalize();
    }
    const LaurentPoly& numerator() const { return num_; }
    const LaurentPoly& denominator() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    std::optional<LaurentPoly> as_laurent() const { return num_.divide_exact(den_); }

    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
        if (a.den_ == b.den_) return {a.num_ + b.num_, a.den_};
        return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
    }
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
        if (a.den_ == b.den_) return {a.num_ - b.num_, a.den_};
        return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
    }
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
        return {a.num_ * b.num_, a.den_ * b.den_};
    }
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
        if (b.is_zero()) throw std::domain_error("division by zero rational function");
        return {a.num_ * b.den_, a.den_ * b.num_};
    }
    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ * b.den_ == b.num_ * a.den_;
    }
    RationalFunction bar() const { return {num_.bar(), den_.bar()}; }
    std::string str() const {
        if (den_.is_one()) return num_.str();
        return "(" + num_.str() + ")/(" + den_.str() + ")";
    }

private:
    LaurentPoly num_, den_;

    void normalize() {
        if (num_.is_zero()) {
            den_ = 1;
            return;
        }
        mpz_class g = gcd(num_.content(), den_.content());
        if (den_.coeff(den_.max_exp()) < 0) g = -g;
        if (g != 1) {
            num_ = num_.divided_by_integer(g);
            den_ = den_.divided_by_integer(g);
        }
        int s = den_.min_exp();
        num_ = num_.shifted(-s);
        den_ = den_.shifted(-s);
        if (auto e = num_.divide_exact(den_); e && !den_.is_one()) {
            num_ = *e;
            den_ = 1;
        }
    }
};

template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t r, std::size_t c) : rows_(r), cols_(c), a_(r * c) {}
    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    T& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
    friend bool operator==(const Matrix& x, const Matrix& y) {
        return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
    }
    friend Matrix operator*(const Matrix& x, const Matrix& y) {
        if (x.cols_ != y.rows_) throw std::invalid_argument("matrix shape mismatch");
        Matrix r(x.rows_, y.cols_);
        for (std::size_t i = 0; i < x.rows_; ++i)
            for (std::size_t k = 0; k < x.cols_; ++k) {
                if (x(i, k).is_zero()) continue;
                for (std::size_t j = 0; j < y.cols_; ++j)
                    if (!y(k, j).is_zero()) r(i, j) = r(i, j) + x(i, k) * y(k, j);
            }
        return r;
    }
    Matrix bar() const {
        Matrix r = *this;
        for (auto& x : r.a_) x = x.bar();
        return r;
    }
    bool is_square() const { return rows_ == cols_; }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<T> a_;
};

using LaurentMatrix = Matrix<LaurentPoly>;
using RationalMatrix = Matrix<RationalFunction>;

// Fraction-free Gauss-Jordan. Returns (adj, det) with C * adj = det * I.
inline std::pair<LaurentMatrix, LaurentPoly> adjugate_and_det(const LaurentMatrix& C) {
    if (!C.is_square()) throw std::invalid_argument("square matrix required");
    std::size_t n = C.rows();
    LaurentMatrix M(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) M(i, j) = C(i, j);
        M(i, n + i) = 1;
    }
    LaurentPoly prev = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = n;
        for (std::size_t r = k; r < n; ++r) {
            if (M(r, k).is_zero()) continue;
            if (piv == n || M(r, k).length() < M(piv, k).length()) piv = r;
        }
        if (piv == n) throw SingularMatrix("matrix is singular");
        if (piv != k) {
            for (std::size_t j = 0; j < 2 * n; ++j) std::swap(M(k, j), M(piv, j));
        }
        const LaurentPoly p = M(k, k);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == k) continue;
            const LaurentPoly f = M(r, k);
            for (std::size_t j = 0; j < 2 * n; ++j) {
                if (j == k) continue;
                LaurentPoly v = p * M(r, j) - f * M(k, j);
                auto d = v.divide_exact(prev);
                if (!d) throw std::logic_error("Bareiss division was not exact");
                M(r, j) = std::move(*d);
            }
            M(r, k) = 0;
        }
        prev = p;
    }
    // now M = [d*I | d*C^-1] with d = +-det(C)
    LaurentPoly det = M(n - 1, n - 1);
    LaurentMatrix adj(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) adj(i, j) = M(i, n + j);
    return {adj, det};
}

inline LaurentMatrix bar_conjugate(const LaurentMatrix& m) { return m.bar(); }

// C^-1 over the fraction field.
inline RationalMatrix solve_unitriangular(const LaurentMatrix& C) {
    auto [adj, det] = adjugate_and_det(C);
    std::size_t n = C.rows();
    RationalMatrix r(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) r(i, j) = RationalFunction(adj(i, j), det);
    return r;
}

inline RationalMatrix solve_unitriangular(const RationalMatrix& C) {
    if (!C.is_square()) throw std::invalid_argument("square matrix required");
    std::size_t n = C.rows();
    // clear denominators row by row, invert the polynomial matrix, rescale columns
    LaurentMatrix P(n, n);
    std::vector<LaurentPoly> rowden(n, 1);
    for (std::size_t i = 0; i < n; ++i) {
        LaurentPoly d = 1;
        for (std::size_t j = 0; j < n; ++j)
            if (!C(i, j).denominator().is_one() && !d.divide_exact(C(i, j).denominator())) d *= C(i, j).denominator();
        rowden[i] = d;
        for (std::size_t j = 0; j < n; ++j) {
            auto v = (C(i, j).numerator() * d).divide_exact(C(i, j).denominator());
            if (!v) throw std::logic_error("denominator clearing failed");
            P(i, j) = *v;
        }
    }
    RationalMatrix inv = solve_unitriangular(P);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = inv(i, j) * RationalFunction(rowden[j]);
    return inv;
}

// A = C * D^-1 where every entry is asserted to be Laurent.
inline LaurentMatrix right_divide(const LaurentMatrix& C, const LaurentMatrix& D) {
    auto [adj, det] = adjugate_and_det(D);
    LaurentMatrix P = C * adj;
    for (std::size_t i = 0; i < P.rows(); ++i)
        for (std::size_t j = 0; j < P.cols(); ++j) {
            auto v = P(i, j).divide_exact(det);
            if (!v) throw std::logic_error("bar matrix entry is not a Laurent polynomial");
            P(i, j) = *v;
        }
    return P;
}

}  // namespace fock
