#include "isodual/polyring.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "isodual/numutil.hpp"
#include "isodual/zn.hpp"

namespace isodual {

Polynomial::Polynomial(Field f, std::vector<FieldElement> coeffs)
    : field_(std::move(f)), c_(std::move(coeffs)) {
    for (const auto& c : c_)
        if (c.field() != field_)
            throw Error(Errc::field_mismatch, "coefficient from a different field");
    normalize();
}

void Polynomial::normalize() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Polynomial Polynomial::from_ints(const Field& f, const std::vector<std::int64_t>& ints) {
    std::vector<FieldElement> c;
    c.reserve(ints.size());
    for (std::int64_t v : ints) c.push_back(f.from_int(v));
    return Polynomial(f, std::move(c));
}

Polynomial Polynomial::from_indices(const Field& f, const std::vector<std::int64_t>& indices) {
    std::vector<FieldElement> c;
    c.reserve(indices.size());
    for (std::int64_t v : indices) c.push_back(f.from_index(v));
    return Polynomial(f, std::move(c));
}

Polynomial Polynomial::x_pow_minus_one(const Field& f, std::int64_t n) {
    if (n < 1) throw Error(Errc::mismatch, "n must be >= 1");
    std::vector<FieldElement> c(static_cast<std::size_t>(n) + 1, f.zero());
    c[0] = -f.one();
    c[static_cast<std::size_t>(n)] = f.one();
    return Polynomial(f, std::move(c));
}

bool Polynomial::is_monic() const {
    return !c_.empty() && c_.back().is_one();
}

FieldElement Polynomial::coeff(std::int64_t i) const {
    if (i < 0 || i >= static_cast<std::int64_t>(c_.size())) return field_.zero();
    return c_[static_cast<std::size_t>(i)];
}

FieldElement Polynomial::leading() const {
    if (c_.empty()) throw Error(Errc::division_by_zero, "zero polynomial has no leading coefficient");
    return c_.back();
}

FieldElement Polynomial::eval(const FieldElement& x) const {
    FieldElement acc = field_.zero();
    if (x.field() != field_)
        throw Error(Errc::field_mismatch, "evaluation point from a different field");
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
}

std::vector<std::int64_t> Polynomial::to_indices() const {
    std::vector<std::int64_t> out;
    out.reserve(c_.size());
    for (const auto& c : c_) out.push_back(c.index());
    return out;
}

namespace {

void require_same_field(const Polynomial& a, const Polynomial& b) {
    if (!a.field().valid() || a.field() != b.field())
        throw Error(Errc::field_mismatch, "operands over different fields");
}

} // namespace

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    require_same_field(a, b);
    std::vector<FieldElement> c;
    std::int64_t deg = std::max(a.degree(), b.degree());
    c.reserve(static_cast<std::size_t>(deg + 1));
    for (std::int64_t i = 0; i <= deg; ++i) c.push_back(a.coeff(i) + b.coeff(i));
    return Polynomial(a.field(), std::move(c));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    require_same_field(a, b);
    std::vector<FieldElement> c;
    std::int64_t deg = std::max(a.degree(), b.degree());
    c.reserve(static_cast<std::size_t>(deg + 1));
    for (std::int64_t i = 0; i <= deg; ++i) c.push_back(a.coeff(i) - b.coeff(i));
    return Polynomial(a.field(), std::move(c));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    require_same_field(a, b);
    if (a.is_zero() || b.is_zero()) return Polynomial(a.field());
    std::vector<FieldElement> c(a.coeffs().size() + b.coeffs().size() - 1, a.field().zero());
    for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
        if (a.coeffs()[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.coeffs().size(); ++j)
            c[i + j] = c[i + j] + a.coeffs()[i] * b.coeffs()[j];
    }
    return Polynomial(a.field(), std::move(c));
}

Polynomial Polynomial::operator*(const FieldElement& s) const {
    std::vector<FieldElement> c(c_);
    for (auto& v : c) v = v * s;
    return Polynomial(field_, std::move(c));
}

Polynomial Polynomial::operator-() const {
    std::vector<FieldElement> c(c_);
    for (auto& v : c) v = -v;
    return Polynomial(field_, std::move(c));
}

bool Polynomial::operator==(const Polynomial& other) const {
    require_same_field(*this, other);
    return to_indices() == other.to_indices();
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
    require_same_field(a, b);
    if (b.is_zero()) throw Error(Errc::division_by_zero, "division by the zero polynomial");
    const Field& f = a.field();
    std::vector<FieldElement> rem(a.coeffs());
    std::int64_t db = b.degree();
    if (a.degree() < db) return {Polynomial(f), a};
    std::vector<FieldElement> quo(static_cast<std::size_t>(a.degree() - db + 1), f.zero());
    FieldElement lead_inv = b.leading().inverse();
    for (std::int64_t i = a.degree(); i >= db; --i) {
        FieldElement c = rem[static_cast<std::size_t>(i)] * lead_inv;
        if (c.is_zero()) continue;
        quo[static_cast<std::size_t>(i - db)] = c;
        for (std::int64_t j = 0; j <= db; ++j)
            rem[static_cast<std::size_t>(i - db + j)] =
                rem[static_cast<std::size_t>(i - db + j)] - c * b.coeff(j);
    }
    return {Polynomial(f, std::move(quo)), Polynomial(f, std::move(rem))};
}

Polynomial poly_gcd(Polynomial a, Polynomial b) {
    require_same_field(a, b);
    while (!b.is_zero()) {
        Polynomial r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.is_zero() ? a : monic(a);
}

Polynomial monic(const Polynomial& a) {
    if (a.is_zero()) return a;
    return a * a.leading().inverse();
}

Polynomial coset_polynomial(const std::vector<std::int64_t>& Q, const RootOfUnity& theta) {
    const Field& E = theta.ext();
    std::vector<FieldElement> prod = {E.one()};
    for (std::int64_t i : Q) {
        const FieldElement& root = theta.theta_pow(i);
        prod.push_back(E.zero());
        // (X - root) in place: new[j] = old[j-1] - root * old[j], descending
        // so each old coefficient is consumed before it is overwritten.
        for (std::size_t jj = prod.size() - 1; jj > 0; --jj) {
            std::size_t j = jj - 1;
            FieldElement old = prod[j];
            prod[j + 1] = prod[j + 1] + old;
            prod[j] = -(root * old);
        }
    }
    std::vector<FieldElement> base_coeffs;
    base_coeffs.reserve(prod.size());
    for (const auto& c : prod) base_coeffs.push_back(theta.project(c));
    return Polynomial(theta.base(), std::move(base_coeffs));
}

Polynomial defining_polynomial(const std::vector<std::int64_t>& P, const RootOfUnity& theta) {
    const std::int64_t n = theta.n();
    const std::int64_t q = theta.base().order();
    std::set<std::int64_t> members;
    for (std::int64_t i : P) members.insert(mod_norm(i, n));
    CosetPartition cp = cyclotomic_cosets(q, n);
    std::set<int> ids;
    for (std::int64_t i : members) ids.insert(cp.index[i]);
    std::size_t covered = 0;
    for (int id : ids) covered += cp.cosets[id].size();
    if (covered != members.size())
        throw Error(Errc::not_invariant, "P is not a union of q-cyclotomic cosets");
    return coset_polynomial(std::vector<std::int64_t>(members.begin(), members.end()), theta);
}

Polynomial isometry_substitute(const Polynomial& a, std::int64_t s, std::int64_t t,
                               const RootOfUnity& theta) {
    if (a.field() != theta.base())
        throw Error(Errc::field_mismatch, "polynomial is not over GF(q)");
    const std::int64_t n = theta.n();
    const std::int64_t q = theta.base().order();
    QPerm rho = qperm_make(q, n, s, t); // validates s unit, t q-translation
    const std::int64_t s_inv = inv_mod(rho.s, n) % n;

    // Reduce mod X^n - 1: fold exponents into [0, n).
    std::vector<FieldElement> folded(static_cast<std::size_t>(n), a.field().zero());
    for (std::int64_t i = 0; i <= a.degree(); ++i)
        folded[static_cast<std::size_t>(mod_norm(i, n))] =
            folded[static_cast<std::size_t>(mod_norm(i, n))] + a.coeff(i);

    // theta^-t lies in GF(q) because qt = t (mod n).
    FieldElement scale = theta.project(theta.theta_pow(-rho.t));
    std::vector<FieldElement> out(static_cast<std::size_t>(n), a.field().zero());
    FieldElement scale_i = a.field().one(); // scale^i
    for (std::int64_t i = 0; i < n; ++i) {
        out[static_cast<std::size_t>(s_inv * i % n)] =
            folded[static_cast<std::size_t>(i)] * scale_i;
        scale_i = scale_i * scale;
    }
    return Polynomial(a.field(), std::move(out));
}

Polynomial image_defining_polynomial(const Polynomial& fP, std::int64_t s, std::int64_t t,
                                     const RootOfUnity& theta) {
    Polynomial img = isometry_substitute(fP, s, t, theta);
    return poly_gcd(img, Polynomial::x_pow_minus_one(fP.field(), theta.n()));
}

Polynomial alternating(const Polynomial& a) {
    if (!a.is_monic()) throw Error(Errc::not_monic, "alternating polynomial of a non-monic input");
    std::vector<FieldElement> c(a.coeffs());
    const std::int64_t d = a.degree();
    for (std::int64_t i = 0; i <= d; ++i)
        if ((d - i) % 2 != 0) c[static_cast<std::size_t>(i)] = -c[static_cast<std::size_t>(i)];
    return Polynomial(a.field(), std::move(c));
}

Polynomial monic_reciprocal(const Polynomial& a) {
    if (!a.is_monic()) throw Error(Errc::not_monic, "reciprocal of a non-monic input");
    if (a.coeff(0).is_zero())
        throw Error(Errc::zero_constant_term, "reciprocal requires a nonzero constant term");
    std::vector<FieldElement> c(a.coeffs());
    std::reverse(c.begin(), c.end());
    FieldElement a0_inv = a.coeff(0).inverse();
    for (auto& v : c) v = v * a0_inv;
    return Polynomial(a.field(), std::move(c));
}

Polynomial parse_poly(const std::string& text, const Field& f) {
    std::vector<std::int64_t> vals;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        std::size_t b = tok.find_first_not_of(" \t");
        std::size_t e = tok.find_last_not_of(" \t");
        if (b == std::string::npos)
            throw Error(Errc::parse_error, "empty coefficient in: " + text);
        try {
            std::size_t used = 0;
            std::string sub = tok.substr(b, e - b + 1);
            vals.push_back(std::stoll(sub, &used));
            if (used != sub.size()) throw std::invalid_argument(sub);
        } catch (const std::logic_error&) {
            throw Error(Errc::parse_error, "bad coefficient in: " + text);
        }
    }
    if (vals.empty()) throw Error(Errc::parse_error, "empty polynomial text");
    if (f.k() == 1) return Polynomial::from_ints(f, vals);
    return Polynomial::from_indices(f, vals);
}

std::string format_poly(const Polynomial& a) {
    if (a.is_zero()) return "0";
    std::string out;
    for (std::int64_t idx : a.to_indices()) {
        if (!out.empty()) out += ",";
        out += std::to_string(idx);
    }
    return out;
}

std::string pretty_poly(const Polynomial& a) {
    if (a.is_zero()) return "0";
    const Field& f = a.field();
    const bool balanced = f.k() == 1 && f.p() % 2 == 1;
    std::string out;
    for (std::int64_t i = a.degree(); i >= 0; --i) {
        FieldElement c = a.coeff(i);
        if (c.is_zero()) continue;
        std::int64_t v = c.index();
        bool neg = false;
        if (balanced && v > (f.p() - 1) / 2) {
            v -= f.p();
            neg = true;
            v = -v; // magnitude
        }
        if (out.empty()) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        std::string mag = std::to_string(v);
        if (i == 0) {
            out += mag;
        } else {
            if (v != 1) {
                out += mag;
                if (f.k() > 1) out += "*";
            }
            out += "X";
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

Polynomial interpolate(const std::vector<FieldElement>& xs,
                       const std::vector<FieldElement>& ys) {
    if (xs.empty() || xs.size() != ys.size())
        throw Error(Errc::mismatch, "interpolation needs matching nonempty points");
    const Field& f = xs[0].field();
    for (std::size_t i = 0; i < xs.size(); ++i)
        for (std::size_t j = i + 1; j < xs.size(); ++j)
            if (xs[i] == xs[j])
                throw Error(Errc::mismatch, "interpolation nodes must be distinct");
    Polynomial acc(f);
    for (std::size_t i = 0; i < xs.size(); ++i) {
        Polynomial li = Polynomial::from_ints(f, {1});
        FieldElement denom = f.one();
        for (std::size_t j = 0; j < xs.size(); ++j) {
            if (j == i) continue;
            li = li * Polynomial(f, {-xs[j], f.one()});
            denom = denom * (xs[i] - xs[j]);
        }
        acc = acc + li * (ys[i] / denom);
    }
    return acc;
}

} // namespace isodual
