#include "qhopf/poly.hpp"

#include <algorithm>

namespace qhopf {

Monomial Monomial::var(VarId v, int exp) {
    Monomial m;
    if (exp != 0) m.factors.emplace_back(v, exp);
    return m;
}

int Monomial::exponent_of(VarId v) const {
    for (const auto& [w, e] : factors)
        if (w == v) return e;
    return 0;
}

int Monomial::degree() const {
    int d = 0;
    for (const auto& [v, e] : factors) d += e;
    return d;
}

int Monomial::tdegree() const {
    int d = 0;
    for (const auto& [v, e] : factors) d += v.row * e;
    return d;
}

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial out;
    out.factors.reserve(factors.size() + o.factors.size());
    auto a = factors.begin(), b = o.factors.begin();
    while (a != factors.end() && b != o.factors.end()) {
        if (a->first < b->first) {
            out.factors.push_back(*a++);
        } else if (b->first < a->first) {
            out.factors.push_back(*b++);
        } else {
            int e = a->second + b->second;
            if (e != 0) out.factors.emplace_back(a->first, e);
            ++a, ++b;
        }
    }
    out.factors.insert(out.factors.end(), a, factors.end());
    out.factors.insert(out.factors.end(), b, o.factors.end());
    return out;
}

Monomial Monomial::pow(int e) const {
    Monomial out;
    if (e == 0) return out;
    out.factors = factors;
    for (auto& [v, k] : out.factors) k *= e;
    return out;
}

Monomial Monomial::inverse() const { return pow(-1); }

LaurentPoly LaurentPoly::unit(int modulus) { return constant(1, modulus); }

LaurentPoly LaurentPoly::constant(Int c, int modulus) {
    LaurentPoly p(modulus);
    if (c != 0) p.terms_[Monomial::one()] = std::move(c);
    return p;
}

LaurentPoly LaurentPoly::variable(Family f, int row, int spectral, int modulus, int exp) {
    if (row < 1) throw DomainError("variable row must be >= 1");
    VarId v{f, row, reduce_mod(spectral, modulus)};
    return from_monomial(Monomial::var(v, exp), 1, modulus);
}

LaurentPoly LaurentPoly::from_monomial(Monomial m, Int coeff, int modulus) {
    LaurentPoly p(modulus);
    if (coeff != 0) p.terms_[std::move(m)] = std::move(coeff);
    return p;
}

Int LaurentPoly::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Int(0) : it->second;
}

void LaurentPoly::add_term(const Monomial& m, const Int& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

static void require_same_lattice(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.modulus() != b.modulus()) throw DomainError("lattice mismatch");
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    require_same_lattice(*this, o);
    LaurentPoly out = *this;
    for (const auto& [m, c] : o.terms_) out.add_term(m, c);
    return out;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    require_same_lattice(*this, o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    require_same_lattice(*this, o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
    require_same_lattice(*this, o);
    LaurentPoly out = *this;
    for (const auto& [m, c] : o.terms_) out.add_term(m, -c);
    return out;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly out(modulus_);
    for (const auto& [m, c] : terms_) out.terms_[m] = -c;
    return out;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    require_same_lattice(*this, o);
    LaurentPoly out(modulus_);
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_) out.add_term(ma * mb, ca * cb);
    return out;
}

LaurentPoly LaurentPoly::scaled(const Int& c) const {
    LaurentPoly out(modulus_);
    if (c == 0) return out;
    for (const auto& [m, k] : terms_) out.terms_[m] = k * c;
    return out;
}

LaurentPoly LaurentPoly::pow(int e) const {
    if (e < 0) {
        if (terms_.size() != 1) throw DomainError("negative power of a non-monomial");
        const auto& [m, c] = *terms_.begin();
        if (c != 1 && c != -1) throw DomainError("negative power of a non-unit coefficient");
        Int cc = (e % 2 == 0) ? Int(1) : c;
        return from_monomial(m.pow(e), cc, modulus_);
    }
    LaurentPoly out = unit(modulus_);
    for (int i = 0; i < e; ++i) out = out * *this;
    return out;
}

std::map<int, LaurentPoly> LaurentPoly::split_by_degree() const {
    std::map<int, LaurentPoly> out;
    for (const auto& [m, c] : terms_) {
        auto [it, fresh] = out.try_emplace(m.degree(), LaurentPoly(modulus_));
        it->second.add_term(m, c);
    }
    return out;
}

std::map<int, LaurentPoly> LaurentPoly::split_by_tdegree() const {
    std::map<int, LaurentPoly> out;
    for (const auto& [m, c] : terms_) {
        auto [it, fresh] = out.try_emplace(m.tdegree(), LaurentPoly(modulus_));
        it->second.add_term(m, c);
    }
    return out;
}

LaurentPoly substitute(const LaurentPoly& P,
                       const std::function<LaurentPoly(VarId)>& rule,
                       int out_modulus) {
    LaurentPoly out(out_modulus);
    for (const auto& [m, c] : P.terms()) {
        LaurentPoly image = LaurentPoly::constant(c, out_modulus);
        for (const auto& [v, e] : m.factors) {
            LaurentPoly img = rule(v);
            if (img.modulus() != out_modulus) throw DomainError("lattice mismatch");
            if (e < 0 && img.size() != 1)
                throw DomainError("negative exponent on a variable mapped to a non-monomial");
            image = image * img.pow(e);
        }
        out += image;
    }
    return out;
}

TensorPoly TensorPoly::unit(int modulus) {
    return from_pair(Monomial::one(), Monomial::one(), 1, modulus);
}

TensorPoly TensorPoly::from_pair(Monomial a, Monomial b, Int coeff, int modulus) {
    TensorPoly t(modulus);
    if (coeff != 0) t.terms_[{std::move(a), std::move(b)}] = std::move(coeff);
    return t;
}

Int TensorPoly::coeff(const Monomial& a, const Monomial& b) const {
    auto it = terms_.find({a, b});
    return it == terms_.end() ? Int(0) : it->second;
}

void TensorPoly::add_term(const Monomial& a, const Monomial& b, const Int& c) {
    if (c == 0) return;
    Key k{a, b};
    auto [it, inserted] = terms_.emplace(std::move(k), c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

TensorPoly TensorPoly::operator+(const TensorPoly& o) const {
    if (modulus_ != o.modulus_) throw DomainError("lattice mismatch");
    TensorPoly out = *this;
    for (const auto& [k, c] : o.terms_) out.add_term(k.first, k.second, c);
    return out;
}

TensorPoly TensorPoly::operator-(const TensorPoly& o) const {
    if (modulus_ != o.modulus_) throw DomainError("lattice mismatch");
    TensorPoly out = *this;
    for (const auto& [k, c] : o.terms_) out.add_term(k.first, k.second, -c);
    return out;
}

TensorPoly TensorPoly::operator*(const TensorPoly& o) const {
    if (modulus_ != o.modulus_) throw DomainError("lattice mismatch");
    TensorPoly out(modulus_);
    for (const auto& [ka, ca] : terms_)
        for (const auto& [kb, cb] : o.terms_)
            out.add_term(ka.first * kb.first, ka.second * kb.second, ca * cb);
    return out;
}

TensorPoly TensorPoly::scaled(const Int& c) const {
    TensorPoly out(modulus_);
    if (c == 0) return out;
    for (const auto& [k, v] : terms_) out.terms_[k] = v * c;
    return out;
}

}  // namespace qhopf
