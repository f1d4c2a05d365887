#include "zarchow/poly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace zarchow {

MultiPoly MultiPoly::constant(std::size_t arity, const Integer& c) {
    MultiPoly p(arity);
    p.add_term(ExpVec(arity, 0), c);
    return p;
}

MultiPoly MultiPoly::monomial(ExpVec e, const Integer& c) {
    MultiPoly p(e.size());
    p.add_term(e, c);
    return p;
}

void MultiPoly::add_term(const ExpVec& e, const Integer& c) {
    if (e.size() != arity_)
        throw std::invalid_argument("MultiPoly: exponent arity mismatch");
    if (c.is_zero())
        return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

Integer MultiPoly::coefficient(const ExpVec& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Integer(0) : it->second;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    for (const auto& [e, c] : o.terms_)
        add_term(e, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    for (const auto& [e, c] : o.terms_)
        add_term(e, -c);
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    if (a.arity() != b.arity())
        throw std::invalid_argument("MultiPoly: arity mismatch");
    MultiPoly r(a.arity());
    for (const auto& [ea, ca] : a.terms())
        for (const auto& [eb, cb] : b.terms()) {
            ExpVec e(a.arity());
            for (std::size_t i = 0; i < e.size(); ++i)
                e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    return r;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r(arity_);
    for (const auto& [e, c] : terms_)
        r.terms_.emplace(e, -c);
    return r;
}

MultiPoly MultiPoly::shifted(const ExpVec& e) const {
    if (e.size() != arity_)
        throw std::invalid_argument("MultiPoly: shift arity mismatch");
    MultiPoly r(arity_);
    for (const auto& [old_e, c] : terms_) {
        ExpVec ne(arity_);
        for (std::size_t i = 0; i < arity_; ++i)
            ne[i] = old_e[i] + e[i];
        r.terms_.emplace(ne, c);
    }
    return r;
}

MultiPoly MultiPoly::remapped(const std::vector<std::vector<int>>& m) const {
    const std::size_t out_arity = m.size();
    MultiPoly r(out_arity);
    for (const auto& [e, c] : terms_) {
        ExpVec ne(out_arity, 0);
        for (std::size_t i = 0; i < out_arity; ++i) {
            if (m[i].size() != arity_)
                throw std::invalid_argument("MultiPoly: remap shape mismatch");
            for (std::size_t j = 0; j < arity_; ++j)
                ne[i] += m[i][j] * e[j];
        }
        r.add_term(ne, c);
    }
    return r;
}

bool graded_lex_less(const ExpVec& a, const ExpVec& b) {
    const long da = std::accumulate(a.begin(), a.end(), 0L);
    const long db = std::accumulate(b.begin(), b.end(), 0L);
    if (da != db)
        return da < db;
    return a < b;
}

std::string monomial_str(const ExpVec& e, std::size_t arity) {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0)
            continue;
        if (!first)
            os << "*";
        first = false;
        os << "t";
        if (arity > 1)
            os << (i + 1);
        if (e[i] != 1)
            os << "^" << e[i];
    }
    if (first)
        os << "1";
    return os.str();
}

std::string MultiPoly::str() const {
    if (terms_.empty())
        return "0";
    std::vector<const std::pair<const ExpVec, Integer>*> order;
    for (const auto& t : terms_)
        order.push_back(&t);
    std::sort(order.begin(), order.end(),
              [](const auto* a, const auto* b) { return graded_lex_less(a->first, b->first); });

    std::ostringstream os;
    bool first = true;
    for (const auto* t : order) {
        const Integer& c = t->second;
        const bool negative = c < 0;
        const Integer mag = abs(c);
        if (first) {
            if (negative)
                os << "-";
        } else {
            os << (negative ? " - " : " + ");
        }
        first = false;
        const std::string mono = monomial_str(t->first, arity_);
        if (mono == "1")
            os << mag.str();
        else if (mag == 1)
            os << mono;
        else
            os << mag.str() << "*" << mono;
    }
    return os.str();
}

} // namespace zarchow
