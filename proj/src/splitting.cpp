#include "isodual/splitting.hpp"

#include <algorithm>
#include <numeric>

#include "isodual/numutil.hpp"

namespace isodual {

ExistsResult exists_splitting(std::int64_t q, std::int64_t n) {
    std::int64_t p = 0, e = 0;
    if (!prime_power_split(q, p, e))
        throw Error(Errc::not_prime_power, "q = " + std::to_string(q) + " is not a prime power");
    if (n < 1) throw Error(Errc::mismatch, "n must be >= 1");
    if (std::gcd(q, n) != 1)
        throw Error(Errc::not_coprime, "gcd(q, n) != 1");

    ExistsResult r;
    r.v = nu2(n);
    r.w = nu2(q - 1);
    r.n_odd = n >> r.v;
    if (r.v > 0 && r.v < 2 * r.w) {
        r.exists = true;
        r.u = std::max<std::int64_t>(0, r.v - r.w);
        r.t = (std::int64_t{1} << r.u) * r.n_odd;
        r.reason = "0 < nu2(n) = " + std::to_string(r.v) +
                   " < 2*nu2(q-1) = " + std::to_string(2 * r.w);
    } else {
        r.reason = "nu2(n) = " + std::to_string(r.v) +
                   " is not strictly between 0 and 2*nu2(q-1) = " + std::to_string(2 * r.w);
    }
    return r;
}

std::int64_t choose_u(std::int64_t q, std::int64_t n) {
    ExistsResult r = exists_splitting(q, n);
    if (!r.exists)
        throw Error(Errc::no_splitting, r.reason);
    return r.u;
}

bool splitting_given_by(std::int64_t q, std::int64_t n, const QPerm& rho) {
    if (rho.q != q || rho.n != n)
        throw Error(Errc::mismatch, "permutation and (q, n) disagree");
    const std::int64_t v = nu2(n);
    if (v == 0) return false; // Z_1 coset {0} is fixed by everything
    const std::int64_t two_v = std::int64_t{1} << v;
    const std::int64_t t2 = mod_norm(rho.t, two_v);
    if (t2 == 0) return false; // the coset of 0 in the 2-part is fixed
    const std::int64_t m = std::int64_t{1} << (nu2(t2) + 1);
    const std::int64_t s_red = mod_norm(rho.s, m);
    // Need q^j = s (mod m) for all j >= 0; one full period of q mod m
    // suffices (q is a unit mod m).
    std::int64_t pw = 1;
    while (true) {
        if (pw != s_red) return false;
        pw = mod_norm(pw * q, m);
        if (pw == 1) return true;
    }
}

namespace {

Splitting assemble(std::int64_t q, std::int64_t n, const QPerm& rho,
                   const std::vector<std::vector<int>>& orbits,
                   const CosetPartition& cp, std::int64_t choice_mask) {
    Splitting sp;
    sp.q = q;
    sp.n = n;
    sp.rho = rho;
    for (std::size_t oi = 0; oi < orbits.size(); ++oi) {
        const auto& orbit = orbits[oi];
        if (orbit.size() % 2 != 0)
            throw Error(Errc::mismatch, "odd orbit in a splitting-admitting action");
        int start = (oi < 63 && ((choice_mask >> oi) & 1)) ? 1 : 0;
        std::vector<int> chosen;
        for (std::size_t pos = static_cast<std::size_t>(start); pos < orbit.size(); pos += 2)
            chosen.push_back(orbit[pos]);
        for (int id : chosen)
            sp.P.insert(sp.P.end(), cp.cosets[id].begin(), cp.cosets[id].end());
        sp.orbit_choices.push_back(std::move(chosen));
    }
    std::sort(sp.P.begin(), sp.P.end());

    // Partition sanity: Z_n = P | rho(P).
    std::vector<char> hit(static_cast<std::size_t>(n), 0);
    for (std::int64_t i : sp.P) {
        hit[static_cast<std::size_t>(i)] += 1;
        hit[static_cast<std::size_t>(qperm_apply(rho, i))] += 1;
    }
    for (char h : hit)
        if (h != 1) throw Error(Errc::mismatch, "P and rho(P) do not partition Z_n");
    return sp;
}

} // namespace

Splitting build_splitting(std::int64_t q, std::int64_t n) {
    ExistsResult r = exists_splitting(q, n);
    if (!r.exists) throw Error(Errc::no_splitting, r.reason);
    return build_splitting(q, n, qperm_make(q, n, 1, r.t));
}

Splitting build_splitting(std::int64_t q, std::int64_t n, const QPerm& rho) {
    if (!splitting_given_by(q, n, rho))
        throw Error(Errc::no_splitting, "rho gives no Type-I splitting of Z_n");
    CosetPartition cp = cyclotomic_cosets(q, n);
    auto orbits = coset_orbits(rho, cp);
    return assemble(q, n, rho, orbits, cp, 0);
}

std::vector<Splitting> enumerate_splittings(std::int64_t q, std::int64_t n, const QPerm& rho,
                                            std::int64_t cap) {
    std::vector<Splitting> out;
    if (!splitting_given_by(q, n, rho)) return out;
    CosetPartition cp = cyclotomic_cosets(q, n);
    auto orbits = coset_orbits(rho, cp);
    std::int64_t total = cap;
    if (orbits.size() < 63) {
        std::int64_t full = std::int64_t{1} << orbits.size();
        total = std::min(full, cap);
    }
    out.reserve(static_cast<std::size_t>(total));
    for (std::int64_t mask = 0; mask < total; ++mask)
        out.push_back(assemble(q, n, rho, orbits, cp, mask));
    return out;
}

} // namespace isodual
