#include "admgraph/polynomial.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "admgraph/error.hpp"

namespace admgraph {

bool MonomialLess::operator()(const Monomial& a, const Monomial& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
}

MultiPoly::MultiPoly(const Rational& constant) {
    if (!constant.is_zero()) terms_[{}] = constant;
}

MultiPoly MultiPoly::variable(const std::string& name) { return monomial({name}); }

MultiPoly MultiPoly::monomial(Monomial m, const Rational& coefficient) {
    MultiPoly p;
    p.add_term(std::move(m), coefficient);
    return p;
}

Rational MultiPoly::coefficient(const Monomial& m) const {
    Monomial key = m;
    std::sort(key.begin(), key.end());
    auto it = terms_.find(key);
    return it == terms_.end() ? Rational() : it->second;
}

std::set<std::string> MultiPoly::variables() const {
    std::set<std::string> out;
    for (const auto& [m, c] : terms_) out.insert(m.begin(), m.end());
    return out;
}

int MultiPoly::degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m.size()));
    return d;
}

bool MultiPoly::is_homogeneous() const {
    if (terms_.empty()) return true;
    const std::size_t d = terms_.begin()->first.size();
    for (const auto& [m, c] : terms_)
        if (m.size() != d) return false;
    return true;
}

bool MultiPoly::is_multilinear() const {
    for (const auto& [m, c] : terms_)
        if (std::adjacent_find(m.begin(), m.end()) != m.end()) return false;
    return true;
}

void MultiPoly::add_term(Monomial m, const Rational& coefficient) {
    if (coefficient.is_zero()) return;
    std::sort(m.begin(), m.end());
    auto [it, inserted] = terms_.try_emplace(std::move(m), coefficient);
    if (inserted) return;
    it->second += coefficient;
    if (it->second.is_zero()) terms_.erase(it);
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) {
    *this = *this * o;
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly out;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) {
            Monomial m;
            m.reserve(ma.size() + mb.size());
            std::merge(ma.begin(), ma.end(), mb.begin(), mb.end(), std::back_inserter(m));
            out.add_term(std::move(m), ca * cb);
        }
    return out;
}

MultiPoly operator-(const MultiPoly& a) {
    MultiPoly out;
    for (const auto& [m, c] : a.terms_) out.terms_[m] = -c;
    return out;
}

Rational MultiPoly::evaluate(const std::map<std::string, Rational>& values) const {
    Rational total;
    for (const auto& [m, c] : terms_) {
        Rational term = c;
        for (const auto& x : m) {
            auto it = values.find(x);
            if (it == values.end() || it->second.is_zero()) {
                term = Rational();
                break;
            }
            term *= it->second;
        }
        total += term;
    }
    return total;
}

MultiPoly MultiPoly::specialize_zero(const std::string& var) const {
    MultiPoly out;
    for (const auto& [m, c] : terms_)
        if (std::find(m.begin(), m.end(), var) == m.end()) out.terms_.emplace(m, c);
    return out;
}

MultiPoly MultiPoly::coefficient_poly(const std::string& var) const {
    MultiPoly out;
    for (const auto& [m, c] : terms_) {
        const auto n = std::count(m.begin(), m.end(), var);
        if (n == 0) continue;
        if (n > 1) throw Error(ErrorCode::NotMultilinear, "variable \"" + var + "\" appears with degree above one");
        Monomial rest;
        for (const auto& x : m)
            if (x != var) rest.push_back(x);
        out.terms_.emplace(std::move(rest), c);
    }
    return out;
}

MultiPoly MultiPoly::rename(const std::map<std::string, std::string>& names) const {
    MultiPoly out;
    for (const auto& [m, c] : terms_) {
        Monomial renamed;
        for (const auto& x : m) {
            auto it = names.find(x);
            renamed.push_back(it == names.end() ? x : it->second);
        }
        out.add_term(std::move(renamed), c);
    }
    return out;
}

std::string MultiPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        const bool unit = c == Rational(1) && !m.empty();
        if (!unit) os << (c.sign() < 0 ? "(" + c.to_string() + ")" : c.to_string());
        for (std::size_t i = 0; i < m.size(); ++i) os << (i == 0 && unit ? "" : "*") << m[i];
    }
    return os.str();
}

MultiPoly elementary_symmetric(const std::vector<std::string>& vars, int k) {
    if (k < 0 || k > static_cast<int>(vars.size())) return MultiPoly();
    MultiPoly out;
    Monomial chosen;
    std::function<void(std::size_t)> walk = [&](std::size_t start) {
        if (static_cast<int>(chosen.size()) == k) {
            out.add_term(chosen, Rational(1));
            return;
        }
        for (std::size_t i = start; i < vars.size(); ++i) {
            chosen.push_back(vars[i]);
            walk(i + 1);
            chosen.pop_back();
        }
    };
    walk(0);
    return out;
}

RationalFn::RationalFn(MultiPoly numerator, MultiPoly denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
    if (den_.is_zero()) throw Error(ErrorCode::DivisionByZero, "rational function with zero denominator");
}

Rational RationalFn::evaluate(const std::map<std::string, Rational>& values) const {
    const Rational d = den_.evaluate(values);
    if (d.is_zero()) throw Error(ErrorCode::PoleAtSpecialization, "denominator vanishes at the evaluation point");
    return num_.evaluate(values) / d;
}

RationalFn RationalFn::specialize_zero(const std::string& var) const {
    MultiPoly num = num_, den = den_;
    while (den.specialize_zero(var).is_zero()) {
        if (!num.specialize_zero(var).is_zero())
            throw Error(ErrorCode::PoleAtSpecialization, "pole along " + var + " = 0");
        if (num.is_zero()) return RationalFn(MultiPoly());
        // both sides are divisible by var
        MultiPoly n2, d2;
        for (const auto& [m, c] : num.terms()) {
            Monomial r = m;
            r.erase(std::find(r.begin(), r.end(), var));
            n2.add_term(std::move(r), c);
        }
        for (const auto& [m, c] : den.terms()) {
            Monomial r = m;
            r.erase(std::find(r.begin(), r.end(), var));
            d2.add_term(std::move(r), c);
        }
        num = std::move(n2);
        den = std::move(d2);
    }
    return RationalFn(num.specialize_zero(var), den.specialize_zero(var));
}

bool operator==(const RationalFn& a, const RationalFn& b) { return a.num_ * b.den_ == b.num_ * a.den_; }

}  // namespace admgraph
