/**
 * qsqrt2.hpp
 * The ordered field Q(sqrt 2): numbers a + b*sqrt(2) with rational a, b.
 * All arithmetic and comparisons are exact; sign tests reduce to integer
 * comparisons of a^2 against 2 b^2.
 */
#ifndef GPTLAB_QSQRT2_HPP
#define GPTLAB_QSQRT2_HPP

#include <stdexcept>
#include <string>

#include "gptlab/rational.hpp"

namespace gptlab {

/** Element a + b*sqrt(2) of Q(sqrt 2). */
struct Rt2 {
    Rat a;  // rational part
    Rat b;  // coefficient of sqrt(2)

    Rt2() : a(0), b(0) {}
    Rt2(const Rat& a_) : a(a_), b(0) {}
    Rt2(long n) : a(rat(n)), b(0) {}
    Rt2(const Rat& a_, const Rat& b_) : a(a_), b(b_) {}

    /** -1, 0, or +1: the sign of a + b*sqrt(2). */
    int sign() const {
        const int sa = rat_sign(a), sb = rat_sign(b);
        if (sb == 0) return sa;
        if (sa == 0) return sb;
        if (sa == sb) return sa;
        // Opposite signs: compare |a| with |b|*sqrt(2) via squares.
        const int cmp = rat_sign(a * a - 2 * b * b);  // sign of a^2 - 2b^2
        if (cmp == 0) throw std::logic_error("Rt2: sqrt(2) rational?");
        return cmp > 0 ? sa : sb;
    }

    bool is_zero() const { return a == 0 && b == 0; }

    Rt2 operator-() const { return Rt2(-a, -b); }
    Rt2 operator+(const Rt2& o) const { return Rt2(a + o.a, b + o.b); }
    Rt2 operator-(const Rt2& o) const { return Rt2(a - o.a, b - o.b); }
    Rt2 operator*(const Rt2& o) const {
        return Rt2(a * o.a + 2 * b * o.b, a * o.b + b * o.a);
    }
    Rt2 operator/(const Rt2& o) const {
        // Multiply by the conjugate: norm (c + d r2)(c - d r2) = c^2 - 2 d^2.
        const Rat norm = o.a * o.a - 2 * o.b * o.b;
        if (norm == 0) {
            if (o.is_zero()) throw std::domain_error("Rt2: division by zero");
            throw std::logic_error("Rt2: zero norm for nonzero element");
        }
        const Rt2 num = *this * Rt2(o.a, -o.b);
        return Rt2(num.a / norm, num.b / norm);
    }
    Rt2& operator+=(const Rt2& o) { return *this = *this + o; }
    Rt2& operator-=(const Rt2& o) { return *this = *this - o; }
    Rt2& operator*=(const Rt2& o) { return *this = *this * o; }
    Rt2& operator/=(const Rt2& o) { return *this = *this / o; }

    bool operator==(const Rt2& o) const { return a == o.a && b == o.b; }
    bool operator!=(const Rt2& o) const { return !(*this == o); }
    bool operator<(const Rt2& o) const { return (*this - o).sign() < 0; }
    bool operator>(const Rt2& o) const { return (*this - o).sign() > 0; }
    bool operator<=(const Rt2& o) const { return (*this - o).sign() <= 0; }
    bool operator>=(const Rt2& o) const { return (*this - o).sign() >= 0; }
};

inline Rt2 sqrt2() { return Rt2(rat(0), rat(1)); }

inline double rt2_dbl(const Rt2& x) {
    return rat_dbl(x.a) + rat_dbl(x.b) * 1.41421356237309504880168872420969808;
}

/**
 * Serialize as "p/q" when b = 0, otherwise "p/q+r/s*rt2" (or "...-r/s*rt2").
 */
inline std::string rt2_str(const Rt2& x) {
    if (x.b == 0) return rat_str(x.a);
    std::string out;
    if (x.a != 0) out += rat_str(x.a);
    if (rat_sign(x.b) > 0 && x.a != 0) out += "+";
    if (x.b == -1) out += "-";
    else if (x.b != 1) out += rat_str(x.b) + "*";
    out += "rt2";
    return out;
}

/** Parse the rt2_str format back. Accepts plain rationals too. */
inline Rt2 rt2_parse(const std::string& s) {
    const auto pos = s.find("rt2");
    if (pos == std::string::npos) return Rt2(rat_parse(s));
    std::string head = s.substr(0, pos);  // "<a><sign>" or "<coef>*" forms
    // Split off the b coefficient: it starts at the last '+' or '-' that is
    // not the leading sign of the a part.
    std::string astr, bstr;
    if (head.empty()) {
        astr = "0"; bstr = "1";
    } else if (head.back() == '*') {
        head.pop_back();
        std::size_t cut = std::string::npos;
        for (std::size_t i = head.size(); i-- > 1;) {
            if (head[i] == '+' || head[i] == '-') {
                if (head[i - 1] != '/' && head[i - 1] != '+' && head[i - 1] != '-') {
                    cut = i;
                    break;
                }
            }
        }
        if (cut == std::string::npos) {
            astr = "0"; bstr = head;
        } else {
            astr = head.substr(0, cut);
            bstr = (head[cut] == '+') ? head.substr(cut + 1) : head.substr(cut);
        }
    } else {
        // Forms like "-rt2", "1/2+rt2", "1/2-rt2".
        if (head == "-") { astr = "0"; bstr = "-1"; }
        else if (head == "+") { astr = "0"; bstr = "1"; }
        else if (head.back() == '+') { astr = head.substr(0, head.size() - 1); bstr = "1"; }
        else if (head.back() == '-') { astr = head.substr(0, head.size() - 1); bstr = "-1"; }
        else throw std::invalid_argument("rt2_parse: malformed '" + s + "'");
        if (astr.empty()) astr = "0";
    }
    return Rt2(rat_parse(astr), rat_parse(bstr));
}

}  // namespace gptlab

#endif
