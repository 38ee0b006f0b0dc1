#include "perimal/laurent.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "perimal/error.hpp"

namespace perimal {

void Laurent::trim() {
    size_t begin = 0, end = coef_.size();
    while (begin < end && coef_[begin] == 0) ++begin;
    while (end > begin && coef_[end - 1] == 0) --end;
    if (begin == end) {
        coef_.clear();
        low_ = 0;
        return;
    }
    low_ += static_cast<i64>(begin);
    coef_.erase(coef_.begin() + static_cast<std::ptrdiff_t>(end), coef_.end());
    coef_.erase(coef_.begin(), coef_.begin() + static_cast<std::ptrdiff_t>(begin));
}

Laurent Laurent::constant(i64 c) { return monomial(c, 0); }
Laurent Laurent::t_power(i64 k) { return monomial(1, k); }

Laurent Laurent::monomial(i64 c, i64 k) {
    Laurent p;
    if (c != 0) {
        p.low_ = k;
        p.coef_ = {c};
    }
    return p;
}

i64 Laurent::low() const {
    if (is_zero()) fail(errc::internal, "low() of zero polynomial");
    return low_;
}

i64 Laurent::high() const {
    if (is_zero()) fail(errc::internal, "high() of zero polynomial");
    return low_ + static_cast<i64>(coef_.size()) - 1;
}

i64 Laurent::coeff(i64 exp) const {
    if (is_zero() || exp < low_ || exp > high()) return 0;
    return coef_[static_cast<size_t>(exp - low_)];
}

i64 Laurent::leading() const { return coef_.at(coef_.size() - 1); }

Laurent Laurent::operator+(const Laurent& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    i64 lo = std::min(low_, o.low_);
    i64 hi = std::max(high(), o.high());
    Laurent r;
    r.low_ = lo;
    r.coef_.assign(static_cast<size_t>(hi - lo + 1), 0);
    for (size_t i = 0; i < coef_.size(); ++i)
        r.coef_[static_cast<size_t>(low_ - lo) + i] += coef_[i];
    for (size_t i = 0; i < o.coef_.size(); ++i)
        r.coef_[static_cast<size_t>(o.low_ - lo) + i] =
            checked_add(r.coef_[static_cast<size_t>(o.low_ - lo) + i], o.coef_[i]);
    r.trim();
    return r;
}

Laurent Laurent::operator-() const {
    Laurent r = *this;
    for (auto& c : r.coef_) c = -c;
    return r;
}

Laurent Laurent::operator-(const Laurent& o) const { return *this + (-o); }

Laurent Laurent::operator*(const Laurent& o) const {
    if (is_zero() || o.is_zero()) return {};
    Laurent r;
    r.low_ = low_ + o.low_;
    r.coef_.assign(coef_.size() + o.coef_.size() - 1, 0);
    for (size_t i = 0; i < coef_.size(); ++i)
        for (size_t j = 0; j < o.coef_.size(); ++j)
            r.coef_[i + j] = checked_add(r.coef_[i + j], checked_mul(coef_[i], o.coef_[j]));
    r.trim();
    return r;
}

Laurent Laurent::substitute_power(i64 a) const {
    if (a == 0) fail(errc::internal, "substitute_power(0)");
    Laurent r;
    for (size_t i = 0; i < coef_.size(); ++i)
        if (coef_[i] != 0)
            r = r + monomial(coef_[i], (low_ + static_cast<i64>(i)) * a);
    return r;
}

i64 Laurent::evaluate(i64 t) const {
    if (is_zero()) return 0;
    if (t == 0) fail(errc::internal, "evaluate at 0 undefined for Laurent");
    // Horner on the ordinary-polynomial part; the t^low prefix must be a unit
    // contribution only when low < 0, so restrict to |t| == 1 there.
    i64 acc = 0;
    for (auto it = coef_.rbegin(); it != coef_.rend(); ++it)
        acc = checked_add(checked_mul(acc, t), *it);
    if (low_ > 0)
        for (i64 i = 0; i < low_; ++i) acc = checked_mul(acc, t);
    if (low_ < 0) {
        if (t != 1 && t != -1)
            fail(errc::internal, "evaluate with negative exponents needs |t| = 1");
        if (t == -1 && (low_ & 1)) acc = -acc;
    }
    return acc;
}

i64 Laurent::content() const {
    i64 g = 0;
    for (i64 c : coef_) g = gcd_i64(g, c);
    return g;
}

Laurent Laurent::primitive() const {
    if (is_zero()) return {};
    i64 g = content();
    Laurent r = *this;
    for (auto& c : r.coef_) c /= g;
    return r;
}

Laurent Laurent::normalized() const {
    if (is_zero()) return {};
    Laurent r = *this;
    r.low_ = 0;
    if (r.leading() < 0)
        for (auto& c : r.coef_) c = -c;
    return r;
}

std::optional<Laurent> Laurent::divide_exact(const Laurent& divisor) const {
    if (divisor.is_zero()) fail(errc::internal, "division by zero polynomial");
    if (is_zero()) return Laurent{};
    Laurent rem = *this;
    Laurent quot;
    i64 dlead = divisor.leading();
    while (!rem.is_zero() && rem.coef_.size() >= divisor.coef_.size()) {
        i64 rl = rem.leading();
        if (rl % dlead != 0) return std::nullopt;
        Laurent term = monomial(rl / dlead, rem.high() - divisor.high());
        quot = quot + term;
        rem = rem - term * divisor;
    }
    if (!rem.is_zero()) return std::nullopt;
    return quot;
}

Laurent Laurent::gcd(Laurent a, Laurent b) {
    // Primitive polynomial remainder sequence over Z.
    if (a.is_zero()) return b.normalized();
    if (b.is_zero()) return a.normalized();
    i64 content_gcd = gcd_i64(a.content(), b.content());
    a = a.primitive();
    b = b.primitive();
    a.low_ = 0;
    b.low_ = 0;
    while (!b.is_zero()) {
        // Pseudo-remainder of a by b: scale a so long division stays integral.
        i64 steps = static_cast<i64>(a.coef_.size()) - static_cast<i64>(b.coef_.size()) + 1;
        if (steps < 1) { std::swap(a, b); continue; }
        Laurent scaled = a;
        i64 lead = b.leading();
        for (i64 i = 0; i < steps; ++i)
            scaled = scaled * constant(lead);
        Laurent rem = scaled;
        while (!rem.is_zero() && rem.coef_.size() >= b.coef_.size()) {
            i64 q = rem.leading() / b.leading();
            Laurent term = monomial(q, rem.high() - b.high());
            rem = rem - term * b;
        }
        a = b;
        b = rem.is_zero() ? Laurent{} : rem.primitive();
        if (!b.is_zero()) b.low_ = 0;
    }
    Laurent g = a.normalized();
    return (constant(content_gcd) * g).normalized();
}

std::string Laurent::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < coef_.size(); ++i) {
        i64 c = coef_[i];
        if (c == 0) continue;
        i64 e = low_ + static_cast<i64>(i);
        if (first) {
            if (c < 0) os << '-';
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        i64 mag = c < 0 ? -c : c;
        if (mag != 1 || e == 0) os << mag;
        if (e != 0) {
            if (mag != 1) os << '*';
            os << var;
            if (e != 1) os << '^' << e;
        }
        first = false;
    }
    return os.str();
}

} // namespace perimal
