#include "isodual/zn.hpp"

#include <algorithm>
#include <numeric>

#include "isodual/numutil.hpp"

namespace isodual {

std::int64_t nu2(std::int64_t m) {
    if (m == 0) return kNu2Infinity;
    if (m < 0) m = -m;
    std::int64_t v = 0;
    while ((m & 1) == 0) { m >>= 1; ++v; }
    return v;
}

QPerm qperm_make(std::int64_t q, std::int64_t n, std::int64_t s, std::int64_t t) {
    if (n < 1) throw Error(Errc::mismatch, "n must be >= 1");
    if (std::gcd(q, n) != 1)
        throw Error(Errc::not_coprime, "gcd(q, n) != 1");
    QPerm rho;
    rho.q = q;
    rho.n = n;
    rho.s = mod_norm(s, n);
    rho.t = mod_norm(t, n);
    if (std::gcd(rho.s, n) != 1)
        throw Error(Errc::not_unit, "s is not a unit mod n");
    if (mod_norm(q * rho.t - rho.t, n) != 0)
        throw Error(Errc::not_q_translation, "qt != t (mod n)");
    return rho;
}

std::int64_t qperm_apply(const QPerm& rho, std::int64_t i) {
    return mod_norm(rho.s * (mod_norm(i, rho.n) + rho.t), rho.n);
}

QPerm qperm_compose(const QPerm& outer, const QPerm& inner) {
    if (outer.n != inner.n || outer.q != inner.q)
        throw Error(Errc::invalid_permutation, "composing permutations of different (q, n)");
    std::int64_t s_inv = inv_mod(inner.s, inner.n);
    return qperm_make(inner.q, inner.n, outer.s * inner.s,
                      inner.t + s_inv * outer.t);
}

QPerm qperm_inverse(const QPerm& rho) {
    std::int64_t s_inv = inv_mod(rho.s, rho.n);
    return qperm_make(rho.q, rho.n, s_inv, -rho.s * rho.t);
}

CosetPartition cyclotomic_cosets(std::int64_t q, std::int64_t n) {
    if (n < 1) throw Error(Errc::mismatch, "n must be >= 1");
    if (std::gcd(q, n) != 1)
        throw Error(Errc::not_coprime, "gcd(q, n) != 1");
    CosetPartition cp;
    cp.q = q;
    cp.n = n;
    cp.index.assign(static_cast<std::size_t>(n), -1);
    for (std::int64_t i = 0; i < n; ++i) {
        if (cp.index[i] >= 0) continue;
        int id = static_cast<int>(cp.cosets.size());
        std::vector<std::int64_t> coset;
        std::int64_t j = i;
        do {
            coset.push_back(j);
            cp.index[j] = id;
            j = mod_norm(j * q, n);
        } while (j != i);
        std::sort(coset.begin(), coset.end());
        cp.cosets.push_back(std::move(coset));
    }
    return cp;
}

int coset_image(const QPerm& rho, int id, const CosetPartition& cp) {
    if (rho.n != cp.n || rho.q != cp.q)
        throw Error(Errc::mismatch, "permutation and partition disagree on (q, n)");
    return cp.index[qperm_apply(rho, cp.cosets[id][0])];
}

std::vector<std::vector<int>> coset_orbits(const QPerm& rho, const CosetPartition& cp) {
    std::vector<std::vector<int>> orbits;
    std::vector<bool> seen(cp.cosets.size(), false);
    // Cosets are ordered by minimum element, so scanning ids ascending
    // starts each orbit at its smallest representative.
    for (int id = 0; id < static_cast<int>(cp.cosets.size()); ++id) {
        if (seen[id]) continue;
        std::vector<int> orbit;
        int j = id;
        do {
            orbit.push_back(j);
            seen[j] = true;
            j = coset_image(rho, j, cp);
        } while (j != id);
        orbits.push_back(std::move(orbit));
    }
    return orbits;
}

bool coset_fixed_direct(const QPerm& rho, int id, const CosetPartition& cp) {
    return coset_image(rho, id, cp) == id;
}

bool coset_fixed_criterion(const QPerm& rho, const std::vector<std::int64_t>& Q) {
    const std::int64_t n = rho.n;
    const std::int64_t st = mod_norm(rho.s * rho.t, n);
    for (std::int64_t k : Q) {
        std::int64_t qj = 1; // q^j mod n
        for (std::size_t j = 0; j < Q.size(); ++j) {
            if (mod_norm((qj - rho.s) * k, n) == st) return true;
            qj = mod_norm(qj * rho.q, n);
        }
    }
    return false;
}

bool coset_fixed_by(const QPerm& rho, const std::vector<std::int64_t>& Q,
                    const CosetPartition& cp) {
    if (Q.empty() || Q[0] < 0 || Q[0] >= cp.n)
        throw Error(Errc::mismatch, "Q is not a coset of the partition");
    int id = cp.index[Q[0]];
    std::vector<std::int64_t> sorted(Q);
    std::sort(sorted.begin(), sorted.end());
    if (cp.cosets[id] != sorted)
        throw Error(Errc::mismatch, "Q is not a coset of the partition");
    bool direct = coset_fixed_direct(rho, id, cp);
    bool criterion = coset_fixed_criterion(rho, cp.cosets[id]);
    if (direct != criterion)
        throw Error(Errc::mismatch, "fixed-coset routes disagree");
    return direct;
}

std::vector<std::int64_t> units_mod(std::int64_t n) {
    std::vector<std::int64_t> out;
    for (std::int64_t s = 0; s < n; ++s)
        if (std::gcd(s, n) == 1) out.push_back(s);
    return out;
}

std::vector<std::int64_t> q_translations(std::int64_t q, std::int64_t n) {
    std::vector<std::int64_t> out;
    for (std::int64_t t = 0; t < n; ++t)
        if (mod_norm(q * t - t, n) == 0) out.push_back(t);
    return out;
}

} // namespace isodual
