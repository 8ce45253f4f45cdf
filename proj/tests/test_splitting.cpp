#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <vector>

#include "isodual/splitting.hpp"
#include "test_util.hpp"

using namespace isodual;
using isodual_test::throws_errc;

namespace {

// P and rho(P) partition Z_n.
bool is_partition(const Splitting& sp) {
    std::vector<std::int64_t> covered = sp.P;
    for (std::int64_t i : sp.P) covered.push_back(qperm_apply(sp.rho, i));
    std::sort(covered.begin(), covered.end());
    if (static_cast<std::int64_t>(covered.size()) != sp.n) return false;
    for (std::int64_t i = 0; i < sp.n; ++i)
        if (covered[static_cast<std::size_t>(i)] != i) return false;
    return true;
}

} // namespace

TEST_SUITE("splitting") {

TEST_CASE("existence criterion") {
    ExistsResult r = exists_splitting(3, 8);
    CHECK_FALSE(r.exists);
    CHECK(r.v == 3);
    CHECK(r.w == 1);

    r = exists_splitting(5, 8);
    CHECK(r.exists);
    CHECK(r.v == 3);
    CHECK(r.w == 2);
    CHECK(r.n_odd == 1);
    CHECK(r.u == 1);
    CHECK(r.t == 2);

    r = exists_splitting(3, 10);
    CHECK(r.exists);
    CHECK(r.u == 0);
    CHECK(r.t == 5);

    r = exists_splitting(13, 4);
    CHECK(r.exists);
    CHECK(r.u == 0);
    CHECK(r.t == 1);

    r = exists_splitting(5, 6);
    CHECK(r.exists);
    CHECK(r.t == 3);

    // Odd length never splits; even q forces odd n, so never splits either.
    CHECK_FALSE(exists_splitting(5, 7).exists);
    CHECK_FALSE(exists_splitting(4, 5).exists);
    CHECK_FALSE(exists_splitting(2, 5).exists);
    CHECK(throws_errc(Errc::not_coprime, [] { exists_splitting(4, 2); }));

    CHECK(throws_errc(Errc::not_prime_power, [] { exists_splitting(6, 5); }));
    CHECK(throws_errc(Errc::not_coprime, [] { exists_splitting(3, 6); }));
}

TEST_CASE("admissible valuation parameter") {
    CHECK(choose_u(5, 8) == 1);
    CHECK(choose_u(3, 10) == 0);
    CHECK(choose_u(13, 4) == 0);
    CHECK(throws_errc(Errc::no_splitting, [] { choose_u(3, 8); }));
}

TEST_CASE("valuation criterion for a given permutation") {
    CHECK(splitting_given_by(5, 8, qperm_make(5, 8, 1, 2)));
    CHECK(splitting_given_by(5, 8, qperm_make(5, 8, 5, 2)));
    CHECK_FALSE(splitting_given_by(5, 8, qperm_make(5, 8, 1, 0)));
    CHECK_FALSE(splitting_given_by(5, 8, qperm_make(5, 8, 1, 4)));
    CHECK_FALSE(splitting_given_by(5, 8, qperm_make(5, 8, 3, 2)));
    CHECK_FALSE(splitting_given_by(3, 5, qperm_make(3, 5, 1, 0)));
    CHECK(splitting_given_by(3, 10, qperm_make(3, 10, 1, 5)));
}

TEST_CASE("canonical construction") {
    Splitting sp = build_splitting(5, 8);
    CHECK(sp.P == std::vector<std::int64_t>{0, 1, 4, 5});
    CHECK(sp.rho.s == 1);
    CHECK(sp.rho.t == 2);
    CHECK(sp.orbit_choices == std::vector<std::vector<int>>{{0, 4}, {1}});
    CHECK(is_partition(sp));

    Splitting sp10 = build_splitting(3, 10);
    CHECK(sp10.P == std::vector<std::int64_t>{0, 1, 3, 7, 9});
    CHECK(sp10.rho.t == 5);
    CHECK(sp10.orbit_choices == std::vector<std::vector<int>>{{0}, {1}});
    CHECK(is_partition(sp10));

    CHECK(throws_errc(Errc::no_splitting, [] { build_splitting(3, 8); }));
    CHECK(throws_errc(Errc::no_splitting,
                      [] { build_splitting(5, 8, qperm_make(5, 8, 1, 0)); }));
}

TEST_CASE("enumeration in binary-counter order") {
    QPerm tau5 = qperm_make(3, 10, 1, 5);
    std::vector<Splitting> all = enumerate_splittings(3, 10, tau5);
    REQUIRE(all.size() == 4);
    CHECK(all[0].P == std::vector<std::int64_t>{0, 1, 3, 7, 9});
    CHECK(all[1].P == std::vector<std::int64_t>{1, 3, 5, 7, 9});
    CHECK(all[2].P == std::vector<std::int64_t>{0, 2, 4, 6, 8});
    CHECK(all[3].P == std::vector<std::int64_t>{2, 4, 5, 6, 8});
    for (const auto& sp : all) CHECK(is_partition(sp));

    CHECK(enumerate_splittings(3, 10, tau5, 2).size() == 2);
    CHECK(enumerate_splittings(5, 8, qperm_make(5, 8, 1, 0)).empty());

    QPerm tau2 = qperm_make(5, 8, 1, 2);
    std::vector<Splitting> e8 = enumerate_splittings(5, 8, tau2);
    REQUIRE(e8.size() == 4);
    CHECK(e8[0].P == std::vector<std::int64_t>{0, 1, 4, 5});
    for (const auto& sp : e8) CHECK(is_partition(sp));
}

TEST_CASE("splittings exist for every nu2(n) = 1 length") {
    for (std::int64_t q : {3, 5, 7, 9, 11, 13}) {
        for (std::int64_t n = 2; n <= 50; n += 4) {
            if (std::gcd(q, n) != 1) continue;
            CHECK(exists_splitting(q, n).exists);
            CHECK(is_partition(build_splitting(q, n)));
        }
    }
}

} // TEST_SUITE
