#include "isodual/oracle.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include <json.hpp>

#include "isodual/numutil.hpp"

namespace isodual {

std::string report_json_line(const OracleReport& r) {
    nlohmann::ordered_json j;
    j["claim"] = r.claim;
    j["instances_checked"] = r.instances_checked;
    j["failures"] = r.failures;
    return j.dump();
}

namespace {

using Matrix = std::vector<std::vector<FieldElement>>;

Matrix generator_matrix(const CyclicCode& C) {
    Matrix g;
    for (std::int64_t row = 0; row < C.dimension; ++row) {
        std::vector<FieldElement> r;
        r.reserve(static_cast<std::size_t>(C.n));
        for (std::int64_t pos = 0; pos < C.n; ++pos)
            r.push_back(C.gen_poly.coeff(pos - row));
        g.push_back(std::move(r));
    }
    return g;
}

Matrix rref(Matrix m) {
    if (m.empty()) return m;
    const std::size_t rows = m.size(), cols = m[0].size();
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t pivot = rows;
        for (std::size_t r = row; r < rows; ++r)
            if (!m[r][col].is_zero()) { pivot = r; break; }
        if (pivot == rows) continue;
        std::swap(m[row], m[pivot]);
        FieldElement inv = m[row][col].inverse();
        for (auto& v : m[row]) v = v * inv;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == row || m[r][col].is_zero()) continue;
            FieldElement c = m[r][col];
            for (std::size_t cc = 0; cc < cols; ++cc)
                m[r][cc] = m[r][cc] - c * m[row][cc];
        }
        ++row;
    }
    m.resize(row, std::vector<FieldElement>()); // drop zero rows
    return m;
}

// Basis of {x : m x^T = 0}, one row per free column of rref(m).
Matrix null_space_basis(const Matrix& m, const Field& f, std::size_t cols) {
    Matrix r = rref(m);
    std::vector<std::int64_t> pivot_col_of_row;
    std::vector<char> is_pivot(cols, 0);
    for (const auto& rr : r) {
        for (std::size_t c = 0; c < cols; ++c) {
            if (!rr[c].is_zero()) {
                pivot_col_of_row.push_back(static_cast<std::int64_t>(c));
                is_pivot[c] = 1;
                break;
            }
        }
    }
    Matrix basis;
    for (std::size_t free_col = 0; free_col < cols; ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<FieldElement> x(cols, f.zero());
        x[free_col] = f.one();
        for (std::size_t rr = 0; rr < r.size(); ++rr)
            x[static_cast<std::size_t>(pivot_col_of_row[rr])] = -r[rr][free_col];
        basis.push_back(std::move(x));
    }
    return basis;
}

bool same_matrix(const Matrix& a, const Matrix& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].size() != b[i].size()) return false;
        for (std::size_t j = 0; j < a[i].size(); ++j)
            if (a[i][j] != b[i][j]) return false;
    }
    return true;
}

} // namespace

OracleReport oracle_dual_basis(const CyclicCode& C) {
    OracleReport rep;
    rep.claim = "null space of the generator matrix spans C_{-complement(P)}";
    rep.instances_checked = 1;
    const Field& f = C.theta.base();
    Matrix g = generator_matrix(C);
    Matrix null_basis = null_space_basis(g, f, static_cast<std::size_t>(C.n));
    Matrix claimed = generator_matrix(dual_code(C));
    if (!same_matrix(rref(std::move(null_basis)), rref(std::move(claimed))))
        rep.failures.push_back("q=" + std::to_string(C.q) + " n=" + std::to_string(C.n) +
                               ": null space differs from C_{-complement(P)}");
    return rep;
}

SplittingSearch oracle_splitting_search(std::int64_t q, std::int64_t n) {
    CosetPartition cp = cyclotomic_cosets(q, n);
    const std::size_t m = cp.cosets.size();
    if (m > 30)
        throw Error(Errc::too_large, "too many cosets for subset enumeration");
    SplittingSearch out;
    const std::uint32_t full = (1u << m) - 1;
    for (std::int64_t t : q_translations(q, n)) {
        for (std::int64_t s : units_mod(n)) {
            QPerm rho = qperm_make(q, n, s, t);
            ++out.pairs_checked;
            // Image of each coset as a bit of a subset mask.
            std::vector<std::uint32_t> image_bit(m);
            for (std::size_t id = 0; id < m; ++id)
                image_bit[id] = 1u << coset_image(rho, static_cast<int>(id), cp);
            for (std::uint32_t mask = 0; mask <= full; ++mask) {
                ++out.subsets_checked;
                std::uint32_t img = 0;
                std::uint32_t rest = mask;
                while (rest) {
                    img |= image_bit[static_cast<std::size_t>(std::countr_zero(rest))];
                    rest &= rest - 1;
                }
                if (img == (full & ~mask)) {
                    out.found = true;
                    out.s = s;
                    out.t = t;
                    for (std::size_t id = 0; id < m; ++id)
                        if (mask & (1u << id))
                            out.P.insert(out.P.end(), cp.cosets[id].begin(), cp.cosets[id].end());
                    std::sort(out.P.begin(), out.P.end());
                    return out;
                }
            }
        }
    }
    return out;
}

OracleReport oracle_weight_equality(const CyclicCode& C, std::int64_t bound) {
    OracleReport rep;
    rep.claim = "C and its Euclidean dual have the same weight distribution";
    rep.instances_checked = 1;
    auto wc = weight_distribution(C, bound);
    auto wd = weight_distribution(dual_code(C), bound);
    if (wc != wd)
        rep.failures.push_back("q=" + std::to_string(C.q) + " n=" + std::to_string(C.n) +
                               ": weight distributions differ");
    return rep;
}

OracleReport oracle_orbit_parity(std::int64_t q, std::int64_t n, const QPerm& rho) {
    OracleReport rep;
    rep.claim = "orbit parity agrees with the valuation criterion";
    CosetPartition cp = cyclotomic_cosets(q, n);
    auto orbits = coset_orbits(rho, cp);
    rep.instances_checked = static_cast<std::int64_t>(orbits.size());
    bool all_even = true;
    for (const auto& orbit : orbits)
        if (orbit.size() % 2 != 0) all_even = false;
    if (all_even != splitting_given_by(q, n, rho))
        rep.failures.push_back("q=" + std::to_string(q) + " n=" + std::to_string(n) +
                               " s=" + std::to_string(rho.s) + " t=" + std::to_string(rho.t) +
                               ": criteria disagree");
    return rep;
}

} // namespace isodual
