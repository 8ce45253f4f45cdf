#include "isodual/gf.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "isodual/numutil.hpp"

namespace isodual {

const char* errc_name(Errc c) {
    switch (c) {
        case Errc::non_prime_characteristic: return "NonPrimeCharacteristic";
        case Errc::not_prime_power: return "NotPrimePower";
        case Errc::size_bound: return "SizeBound";
        case Errc::not_coprime: return "NotCoprime";
        case Errc::pin_unsatisfiable: return "PinUnsatisfiable";
        case Errc::field_mismatch: return "FieldMismatch";
        case Errc::division_by_zero: return "DivisionByZero";
        case Errc::coefficient_not_in_base_field: return "CoefficientNotInBaseField";
        case Errc::not_invariant: return "NotInvariant";
        case Errc::invalid_permutation: return "InvalidPermutation";
        case Errc::not_monic: return "NotMonic";
        case Errc::zero_constant_term: return "ZeroConstantTerm";
        case Errc::not_unit: return "NotUnit";
        case Errc::not_q_translation: return "NotQTranslation";
        case Errc::mismatch: return "Mismatch";
        case Errc::no_splitting: return "NoSplitting";
        case Errc::dimension_mismatch: return "DimensionMismatch";
        case Errc::length_mismatch: return "LengthMismatch";
        case Errc::too_large: return "TooLarge";
        case Errc::bad_residue: return "BadResidue";
        case Errc::degree_too_high: return "DegreeTooHigh";
        case Errc::parse_error: return "ParseError";
    }
    return "Error";
}

namespace {

// Dense GF(p)[y] arithmetic on ascending coefficient vectors, entries kept
// in [0, p). Used only for field construction; element arithmetic reduces
// against the cached modulus directly.
using PVec = std::vector<std::int64_t>;

void ptrim(PVec& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

PVec pmul(const PVec& a, const PVec& b, std::int64_t p) {
    if (a.empty() || b.empty()) return {};
    PVec c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            c[i + j] = (c[i + j] + a[i] * b[j]) % p;
    }
    ptrim(c);
    return c;
}

// a mod m; m need not be monic.
PVec pmod(PVec a, const PVec& m, std::int64_t p) {
    ptrim(a);
    std::int64_t lead_inv = inv_mod(m.back(), p);
    while (a.size() >= m.size()) {
        std::int64_t c = a.back() * lead_inv % p;
        if (c != 0) {
            std::size_t off = a.size() - m.size();
            for (std::size_t j = 0; j < m.size(); ++j)
                a[off + j] = mod_norm(a[off + j] - c * m[j], p);
        }
        a.pop_back();
        ptrim(a);
    }
    return a;
}

PVec psub(const PVec& a, const PVec& b, std::int64_t p) {
    PVec c(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i) {
        std::int64_t av = i < a.size() ? a[i] : 0;
        std::int64_t bv = i < b.size() ? b[i] : 0;
        c[i] = mod_norm(av - bv, p);
    }
    ptrim(c);
    return c;
}

PVec pgcd(PVec a, PVec b, std::int64_t p) {
    ptrim(a);
    ptrim(b);
    while (!b.empty()) {
        PVec r = pmod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

PVec ppowmod(const PVec& base, std::int64_t e, const PVec& m, std::int64_t p) {
    PVec r = {1};
    PVec b = pmod(base, m, p);
    while (e > 0) {
        if (e & 1) r = pmod(pmul(r, b, p), m, p);
        b = pmod(pmul(b, b, p), m, p);
        e >>= 1;
    }
    return r;
}

bool poly_irreducible(const PVec& m, std::int64_t p, std::int64_t k) {
    // m monic of degree k >= 2. Irreducible iff x^(p^k) = x (mod m) and
    // gcd(x^(p^(k/r)) - x, m) is constant for every prime r | k.
    std::vector<std::int64_t> checkpoints;
    for (std::int64_t r : distinct_prime_factors(k)) checkpoints.push_back(k / r);
    const PVec x = {0, 1};
    PVec fp = pmod(x, m, p); // x^(p^j) mod m, starting at j = 0
    for (std::int64_t j = 1; j <= k; ++j) {
        fp = ppowmod(fp, p, m, p);
        if (std::find(checkpoints.begin(), checkpoints.end(), j) != checkpoints.end()) {
            PVec g = pgcd(psub(fp, x, p), m, p);
            if (g.size() != 1) return false;
        }
    }
    return fp == pmod(x, m, p);
}

// Digits of counter in lexicographic order: coefficient 0 is the most
// significant comparison key, so it comes from the highest-order digit.
PVec lex_coeffs(std::int64_t counter, std::int64_t p, std::int64_t k) {
    PVec c(k, 0);
    for (std::int64_t i = k - 1; i >= 0; --i) {
        c[i] = counter % p;
        counter /= p;
    }
    return c;
}

} // namespace

FieldElement Field::zero() const { return from_int(0); }
FieldElement Field::one() const { return from_int(1); }

FieldElement Field::generator() const {
    return FieldElement(*this, d_->generator);
}

FieldElement Field::from_coeffs(std::vector<std::int64_t> coeffs) const {
    const std::int64_t p = d_->p, k = d_->k;
    for (auto& c : coeffs) c = mod_norm(c, p);
    if (static_cast<std::int64_t>(coeffs.size()) > k) {
        if (k == 1) {
            // GF(p) has no modulus to reduce by; only high zeros may be dropped.
            for (std::size_t i = 1; i < coeffs.size(); ++i)
                if (coeffs[i] != 0)
                    throw Error(Errc::mismatch, "coefficient vector longer than k");
            coeffs.resize(1);
        } else {
            const auto& m = d_->modulus;
            for (std::int64_t i = static_cast<std::int64_t>(coeffs.size()) - 1; i >= k; --i) {
                std::int64_t c = coeffs[i];
                if (c != 0) {
                    for (std::int64_t j = 0; j <= k; ++j)
                        coeffs[i - k + j] = mod_norm(coeffs[i - k + j] - c * m[j], p);
                }
                coeffs.pop_back();
            }
        }
    }
    coeffs.resize(k, 0);
    return FieldElement(*this, std::move(coeffs));
}

FieldElement Field::from_index(std::int64_t index) const {
    const std::int64_t p = d_->p, k = d_->k;
    if (index < 0 || index >= d_->order)
        throw Error(Errc::mismatch, "element index out of range");
    std::vector<std::int64_t> c(k, 0);
    for (std::int64_t i = 0; i < k; ++i) {
        c[i] = index % p;
        index /= p;
    }
    return FieldElement(*this, std::move(c));
}

FieldElement Field::from_int(std::int64_t c) const {
    std::vector<std::int64_t> v(d_->k, 0);
    v[0] = mod_norm(c, d_->p);
    return FieldElement(*this, std::move(v));
}

bool Field::operator==(const Field& other) const {
    if (d_ == other.d_) return true;
    if (!d_ || !other.d_) return false;
    return d_->p == other.d_->p && d_->k == other.d_->k && d_->modulus == other.d_->modulus;
}

std::int64_t FieldElement::index() const {
    std::int64_t idx = 0;
    for (std::size_t i = c_.size(); i-- > 0;) idx = idx * field_.p() + c_[i];
    return idx;
}

bool FieldElement::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](std::int64_t v) { return v == 0; });
}

bool FieldElement::is_one() const {
    if (c_.empty() || c_[0] != 1) return false;
    return std::all_of(c_.begin() + 1, c_.end(), [](std::int64_t v) { return v == 0; });
}

namespace {

void require_same_field(const FieldElement& a, const FieldElement& b) {
    if (!a.field().valid() || !b.field().valid() || a.field() != b.field())
        throw Error(Errc::field_mismatch, "operands from different fields");
}

} // namespace

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
    require_same_field(a, b);
    std::vector<std::int64_t> c(a.coeffs());
    const std::int64_t p = a.field().p();
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = (c[i] + b.coeffs()[i]) % p;
    return a.field().from_coeffs(std::move(c));
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) {
    require_same_field(a, b);
    std::vector<std::int64_t> c(a.coeffs());
    const std::int64_t p = a.field().p();
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = mod_norm(c[i] - b.coeffs()[i], p);
    return a.field().from_coeffs(std::move(c));
}

FieldElement FieldElement::operator-() const {
    std::vector<std::int64_t> c(c_);
    for (auto& v : c) v = mod_norm(-v, field_.p());
    return field_.from_coeffs(std::move(c));
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
    require_same_field(a, b);
    const Field& f = a.field();
    const std::int64_t p = f.p(), k = f.k();
    if (k == 1) return f.from_int(a.coeffs()[0] * b.coeffs()[0] % p);
    std::vector<std::int64_t> c(2 * k - 1, 0);
    for (std::int64_t i = 0; i < k; ++i) {
        if (a.coeffs()[i] == 0) continue;
        for (std::int64_t j = 0; j < k; ++j)
            c[i + j] = (c[i + j] + a.coeffs()[i] * b.coeffs()[j]) % p;
    }
    return f.from_coeffs(std::move(c));
}

FieldElement FieldElement::inverse() const {
    if (is_zero()) throw Error(Errc::division_by_zero, "inverse of zero");
    return pow(field_.order() - 2);
}

FieldElement operator/(const FieldElement& a, const FieldElement& b) {
    require_same_field(a, b);
    return a * b.inverse();
}

FieldElement FieldElement::pow(std::int64_t e) const {
    if (!field_.valid()) throw Error(Errc::field_mismatch, "uninitialized element");
    if (e < 0) return inverse().pow(-e);
    FieldElement r = field_.one();
    FieldElement b = *this;
    while (e > 0) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

bool FieldElement::operator==(const FieldElement& other) const {
    require_same_field(*this, other);
    return c_ == other.c_;
}

Field field_build(std::int64_t p, std::int64_t k, std::int64_t size_bound) {
    if (!is_prime(p))
        throw Error(Errc::non_prime_characteristic, "characteristic " + std::to_string(p) + " is not prime");
    if (k < 1)
        throw Error(Errc::size_bound, "extension degree must be >= 1");
    auto data = std::make_shared<FieldData>();
    data->p = p;
    data->k = k;
    data->order = ipow_checked(p, k, size_bound);
    if (k > 1) {
        // Lexicographically smallest monic irreducible of degree k.
        for (std::int64_t counter = 0;; ++counter) {
            if (counter >= data->order)
                throw Error(Errc::mismatch, "no irreducible polynomial found");
            PVec m = lex_coeffs(counter, p, k);
            m.push_back(1);
            if (poly_irreducible(m, p, k)) {
                data->modulus = std::move(m);
                break;
            }
        }
    }
    data->order_factors = distinct_prime_factors(data->order - 1);

    Field f{std::shared_ptr<const FieldData>(data)};
    // Smallest lexicographic coefficient vector with full order.
    const std::int64_t full = data->order - 1;
    for (std::int64_t counter = 1; counter < data->order; ++counter) {
        FieldElement cand = f.from_coeffs(lex_coeffs(counter, p, k));
        if (cand.is_zero()) continue;
        bool ok = true;
        for (std::int64_t r : data->order_factors) {
            if (cand.pow(full / r).is_one()) { ok = false; break; }
        }
        if (ok) {
            data->generator = cand.coeffs();
            break;
        }
    }
    if (data->generator.empty())
        throw Error(Errc::mismatch, "no multiplicative generator found");
    return f;
}

std::int64_t multiplicative_order(std::int64_t q, std::int64_t n) {
    if (n < 1) throw Error(Errc::mismatch, "n must be >= 1");
    if (n == 1) return 1;
    if (std::gcd(q, n) != 1)
        throw Error(Errc::not_coprime, "gcd(q, n) != 1");
    std::int64_t d = 1, pw = mod_norm(q, n);
    while (pw != 1) {
        pw = pw * mod_norm(q, n) % n;
        ++d;
    }
    return d;
}

bool in_base_field(const FieldElement& x, std::int64_t q) {
    return x.pow(q) == x;
}

PinCondition parse_pin(const std::string& expr) {
    std::string s;
    for (char ch : expr)
        if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
    const std::string head = "theta^";
    if (s.rfind(head, 0) != 0)
        throw Error(Errc::parse_error, "pin must look like theta^E=C: " + expr);
    std::size_t eq = s.find('=', head.size());
    if (eq == std::string::npos)
        throw Error(Errc::parse_error, "pin missing '=': " + expr);
    try {
        std::size_t used = 0;
        PinCondition pin;
        std::string estr = s.substr(head.size(), eq - head.size());
        pin.exponent = std::stoll(estr, &used);
        if (used != estr.size()) throw std::invalid_argument(estr);
        std::string cstr = s.substr(eq + 1);
        pin.value = std::stoll(cstr, &used);
        if (used != cstr.size()) throw std::invalid_argument(cstr);
        return pin;
    } catch (const std::logic_error&) {
        throw Error(Errc::parse_error, "bad integer in pin: " + expr);
    }
}

std::string format_pin(const PinCondition& pin) {
    return "theta^" + std::to_string(pin.exponent) + "=" + std::to_string(pin.value);
}

const FieldElement& RootOfUnity::theta_pow(std::int64_t e) const {
    return powers_[static_cast<std::size_t>(mod_norm(e, n_))];
}

FieldElement RootOfUnity::embed(const FieldElement& x) const {
    if (x.field() != base_)
        throw Error(Errc::field_mismatch, "embed expects an element of the base field");
    if (base_ == ext_) return x;
    if (base_.k() == 1) return ext_.from_int(x.coeffs()[0]);
    std::vector<std::int64_t> out(ext_.k(), 0);
    const std::int64_t p = ext_.p();
    for (std::int64_t i = 0; i < base_.k(); ++i) {
        std::int64_t xi = x.coeffs()[i];
        if (xi == 0) continue;
        for (std::int64_t j = 0; j < ext_.k(); ++j)
            out[j] = (out[j] + xi * embed_cols_[i][j]) % p;
    }
    return ext_.from_coeffs(std::move(out));
}

FieldElement RootOfUnity::project(const FieldElement& x) const {
    if (x.field() != ext_)
        throw Error(Errc::field_mismatch, "project expects an element of the extension");
    if (base_ == ext_) return x;
    if (!in_base_field(x, base_.order()))
        throw Error(Errc::coefficient_not_in_base_field, "element is outside GF(q)");
    const std::int64_t p = ext_.p(), K = ext_.k(), k = base_.k();
    if (k == 1) return base_.from_int(x.coeffs()[0]);
    // Solve sum_i a_i * embed_cols_[i] = x over GF(p).
    std::vector<std::vector<std::int64_t>> m(K, std::vector<std::int64_t>(k + 1, 0));
    for (std::int64_t r = 0; r < K; ++r) {
        for (std::int64_t c = 0; c < k; ++c) m[r][c] = embed_cols_[c][r];
        m[r][k] = x.coeffs()[r];
    }
    std::int64_t row = 0;
    std::vector<std::int64_t> pivot_row(k, -1);
    for (std::int64_t col = 0; col < k && row < K; ++col) {
        std::int64_t pr = -1;
        for (std::int64_t r = row; r < K; ++r)
            if (m[r][col] != 0) { pr = r; break; }
        if (pr < 0) continue;
        std::swap(m[row], m[pr]);
        std::int64_t inv = inv_mod(m[row][col], p);
        for (auto& v : m[row]) v = v * inv % p;
        for (std::int64_t r = 0; r < K; ++r) {
            if (r == row || m[r][col] == 0) continue;
            std::int64_t c0 = m[r][col];
            for (std::int64_t c = col; c <= k; ++c)
                m[r][c] = mod_norm(m[r][c] - c0 * m[row][c], p);
        }
        pivot_row[col] = row;
        ++row;
    }
    std::vector<std::int64_t> a(k, 0);
    for (std::int64_t c = 0; c < k; ++c) {
        if (pivot_row[c] < 0)
            throw Error(Errc::coefficient_not_in_base_field, "embedding matrix is singular");
        a[c] = m[pivot_row[c]][k];
    }
    for (std::int64_t r = row; r < K; ++r)
        if (m[r][k] != 0)
            throw Error(Errc::coefficient_not_in_base_field, "element is outside the embedded subfield");
    return base_.from_coeffs(std::move(a));
}

RootOfUnity root_of_unity(const Field& base, std::int64_t n,
                          const std::vector<PinCondition>& pins,
                          std::int64_t size_bound) {
    if (n < 1) throw Error(Errc::mismatch, "n must be >= 1");
    const std::int64_t q = base.order();
    if (std::gcd(q, n) != 1)
        throw Error(Errc::not_coprime, "gcd(q, n) != 1");
    const std::int64_t d = multiplicative_order(q, n);

    RootOfUnity root;
    root.base_ = base;
    root.n_ = n;
    root.d_ = d;
    if (d == 1) {
        root.ext_ = base;
    } else {
        ipow_checked(q, d, size_bound); // SizeBound before constructing tables
        root.ext_ = field_build(base.p(), base.k() * d, size_bound);
        if (base.k() > 1) {
            // Root of the base modulus inside the subfield of order q picks
            // the embedding; the lexicographically smallest root is chosen.
            const Field& E = root.ext_;
            FieldElement h = E.generator().pow((E.order() - 1) / (q - 1));
            std::vector<FieldElement> roots;
            FieldElement cand = E.zero();
            for (std::int64_t j = -1; j < q - 1; ++j) {
                if (j >= 0) cand = (j == 0) ? E.one() : cand * h;
                // Horner evaluation of the base modulus at cand.
                FieldElement acc = E.zero();
                for (std::size_t i = base.modulus().size(); i-- > 0;)
                    acc = acc * cand + E.from_int(base.modulus()[i]);
                if (acc.is_zero()) roots.push_back(cand);
            }
            const FieldElement* best = nullptr;
            for (const auto& r : roots)
                if (!best || r.coeffs() < best->coeffs()) best = &r;
            if (!best)
                throw Error(Errc::mismatch, "base modulus has no root in the extension");
            root.embed_cols_.resize(base.k());
            FieldElement pw = E.one();
            for (std::int64_t i = 0; i < base.k(); ++i) {
                root.embed_cols_[i] = pw.coeffs();
                pw = pw * *best;
            }
        }
    }

    const Field& E = root.ext_;
    FieldElement theta0 = E.generator().pow((E.order() - 1) / n);
    FieldElement theta = theta0;
    if (!pins.empty()) {
        bool found = false;
        for (std::int64_t j = 1; j < std::max<std::int64_t>(n, 2) && !found; ++j) {
            if (std::gcd(j, n) != 1) continue;
            FieldElement cand = theta0.pow(j);
            bool ok = true;
            for (const auto& pin : pins) {
                if (cand.pow(pin.exponent) != E.from_int(pin.value)) { ok = false; break; }
            }
            if (ok) {
                theta = cand;
                found = true;
            }
        }
        if (!found)
            throw Error(Errc::pin_unsatisfiable, "no primitive n-th root satisfies the pins");
    }

    root.powers_.reserve(n);
    FieldElement pw = E.one();
    for (std::int64_t i = 0; i < n; ++i) {
        root.powers_.push_back(pw);
        pw = pw * theta;
    }
    if (!pw.is_one())
        throw Error(Errc::mismatch, "theta is not an n-th root of unity");
    for (std::int64_t r : distinct_prime_factors(n))
        if (root.theta_pow(n / r).is_one())
            throw Error(Errc::mismatch, "theta is not primitive");
    return root;
}

} // namespace isodual
