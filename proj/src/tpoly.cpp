#include "rectsym/tpoly.hpp"

#include <algorithm>
#include <sstream>

namespace rectsym {

TPoly::TPoly(const Integer& constant) {
    if (constant != 0) coeffs_.push_back(constant);
}

TPoly::TPoly(std::vector<Integer> ascending) : coeffs_(std::move(ascending)) { normalize(); }

TPoly TPoly::monomial(int degree, const Integer& coefficient) {
    std::vector<Integer> c(static_cast<std::size_t>(degree) + 1, 0);
    c.back() = coefficient;
    return TPoly(std::move(c));
}

TPoly TPoly::t_integer(int r) { return TPoly(std::vector<Integer>(static_cast<std::size_t>(std::max(r, 0)), 1)); }

void TPoly::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Integer TPoly::coefficient(int degree) const {
    if (degree < 0 || degree >= static_cast<int>(coeffs_.size())) return 0;
    return coeffs_[static_cast<std::size_t>(degree)];
}

Integer TPoly::evaluate(const Integer& t) const {
    Integer value = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) value = value * t + *it;
    return value;
}

TPoly& TPoly::operator+=(const TPoly& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), 0);
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    normalize();
    return *this;
}

TPoly& TPoly::operator-=(const TPoly& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), 0);
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    normalize();
    return *this;
}

TPoly operator*(const TPoly& a, const TPoly& b) {
    if (a.is_zero() || b.is_zero()) return TPoly();
    std::vector<Integer> product(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) product[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return TPoly(std::move(product));
}

TPoly& TPoly::operator*=(const TPoly& rhs) { return *this = *this * rhs; }

TPoly operator-(TPoly a) {
    for (auto& c : a.coeffs_) c = -c;
    return a;
}

std::optional<TPoly> TPoly::exact_quotient(const TPoly& dividend, const TPoly& divisor) {
    if (divisor.is_zero()) return std::nullopt;
    if (dividend.is_zero()) return TPoly();
    if (dividend.degree() < divisor.degree()) return std::nullopt;
    std::vector<Integer> remainder = dividend.coeffs_;
    std::vector<Integer> quotient(static_cast<std::size_t>(dividend.degree() - divisor.degree()) + 1, 0);
    const Integer& lead = divisor.coeffs_.back();
    for (int shift = dividend.degree() - divisor.degree(); shift >= 0; --shift) {
        Integer& top = remainder[static_cast<std::size_t>(shift + divisor.degree())];
        if (top == 0) continue;
        if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t())) return std::nullopt;
        const Integer q = top / lead;
        quotient[static_cast<std::size_t>(shift)] = q;
        for (std::size_t j = 0; j < divisor.coeffs_.size(); ++j)
            remainder[static_cast<std::size_t>(shift) + j] -= q * divisor.coeffs_[j];
    }
    if (std::any_of(remainder.begin(), remainder.end(), [](const Integer& c) { return c != 0; }))
        return std::nullopt;
    return TPoly(std::move(quotient));
}

std::string TPoly::to_string() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const Integer& c = coeffs_[i];
        if (c == 0) continue;
        Integer magnitude = abs(c);
        if (first) {
            if (c < 0) os << '-';
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (i == 0) {
            os << magnitude;
            continue;
        }
        if (magnitude != 1) os << magnitude << '*';
        os << 't';
        if (i > 1) os << '^' << i;
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const TPoly& p) { return os << p.to_string(); }

}  // namespace rectsym
