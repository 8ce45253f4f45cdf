#include <doctest.h>

#include <vector>

#include "isodual/polyring.hpp"
#include "isodual/zn.hpp"
#include "test_util.hpp"

using namespace isodual;
using isodual_test::throws_errc;

namespace {

std::vector<std::int64_t> idx(const Polynomial& a) { return a.to_indices(); }

} // namespace

TEST_SUITE("polyring") {

TEST_CASE("construction and normalization") {
    Field F3 = field_build(3, 1);
    Polynomial a = Polynomial::from_ints(F3, {1, 2, 0, 0});
    CHECK(a.degree() == 1);
    CHECK(a.coeff(0).index() == 1);
    CHECK(a.coeff(5).is_zero());

    Polynomial z(F3);
    CHECK(z.is_zero());
    CHECK(z.degree() == -1);
    CHECK(throws_errc(Errc::division_by_zero, [&] { z.leading(); }));

    CHECK(idx(Polynomial::from_ints(F3, {-1, 1})) == std::vector<std::int64_t>{2, 1});
    CHECK(Polynomial::from_ints(F3, {0, 0, 3}).is_zero());
    CHECK(idx(Polynomial::x_pow_minus_one(F3, 4)) == std::vector<std::int64_t>{2, 0, 0, 0, 1});
}

TEST_CASE("ring arithmetic") {
    Field F3 = field_build(3, 1);
    Polynomial x1 = Polynomial::from_ints(F3, {1, 1});
    Polynomial x2 = Polynomial::from_ints(F3, {2, 1});
    CHECK(idx(x1 * x2) == std::vector<std::int64_t>{2, 0, 1});
    CHECK((x1 - x1).is_zero());
    CHECK(idx(x1 + x2) == std::vector<std::int64_t>{0, 2});
    CHECK(idx(-x1) == std::vector<std::int64_t>{2, 2});
    CHECK(idx(x1 * F3.from_int(2)) == std::vector<std::int64_t>{2, 2});
    CHECK(x1 != x2);
    CHECK(x1 == Polynomial::from_ints(F3, {1, 1}));

    FieldElement at2 = x2.eval(F3.from_int(2));
    CHECK(at2.index() == 1);
    CHECK(x2.eval(F3.from_int(1)).is_zero());
}

TEST_CASE("division and gcd") {
    Field F3 = field_build(3, 1);
    Polynomial num = Polynomial::x_pow_minus_one(F3, 4);
    Polynomial den = Polynomial::from_ints(F3, {1, 0, 1});
    auto [quo, rem] = divmod(num, den);
    CHECK(idx(quo) == std::vector<std::int64_t>{2, 0, 1});
    CHECK(rem.is_zero());

    auto [q2, r2] = divmod(Polynomial::from_ints(F3, {1, 1, 1}), Polynomial::from_ints(F3, {1, 1}));
    CHECK(q2.degree() == 1);
    CHECK(r2.degree() == 0);
    CHECK(throws_errc(Errc::division_by_zero,
                      [&] { divmod(num, Polynomial(F3)); }));

    Field F5 = field_build(5, 1);
    Polynomial g = poly_gcd(Polynomial::from_ints(F5, {-1, 0, 1}),
                            Polynomial::from_ints(F5, {-2, 1, 1}));
    CHECK(idx(g) == std::vector<std::int64_t>{4, 1});

    Polynomial a = Polynomial::from_ints(F5, {2, 4});
    CHECK(poly_gcd(a, Polynomial(F5)) == monic(a));
    CHECK(poly_gcd(Polynomial(F5), Polynomial(F5)).is_zero());
    CHECK(monic(a).leading().is_one());
}

TEST_CASE("parse and format round trip") {
    Field F5 = field_build(5, 1);
    Polynomial a = parse_poly("2,0,2,0,1", F5);
    CHECK(idx(a) == std::vector<std::int64_t>{2, 0, 2, 0, 1});
    CHECK(format_poly(a) == "2,0,2,0,1");
    CHECK(format_poly(Polynomial(F5)) == "0");
    CHECK(idx(parse_poly("-1,1", F5)) == std::vector<std::int64_t>{4, 1});

    CHECK(throws_errc(Errc::parse_error, [&] { parse_poly("2,,1", F5); }));
    CHECK(throws_errc(Errc::parse_error, [&] { parse_poly("abc", F5); }));
}

TEST_CASE("pretty printing with balanced digits") {
    Field F5 = field_build(5, 1);
    CHECK(pretty_poly(Polynomial::from_ints(F5, {2, 0, 2, 0, 1})) == "X^4 + 2X^2 + 2");
    CHECK(pretty_poly(Polynomial::from_ints(F5, {3, 0, 4, 0, 1})) == "X^4 - X^2 - 2");
    CHECK(pretty_poly(Polynomial::from_ints(F5, {4})) == "-1");
    CHECK(pretty_poly(Polynomial(F5)) == "0");

    Field F3 = field_build(3, 1);
    CHECK(pretty_poly(Polynomial::from_ints(F3, {1, 2, 1, 2, 1})) ==
          "X^4 - X^3 + X^2 - X + 1");

    Field F9 = field_build(3, 2);
    CHECK(pretty_poly(Polynomial::from_ints(F9, {2, 0, 1})) == "X^2 + 2");
}

TEST_CASE("coset and defining polynomials") {
    Field F5 = field_build(5, 1);
    RootOfUnity th = root_of_unity(F5, 8, {PinCondition{2, 2}});
    CHECK(idx(coset_polynomial({0}, th)) == std::vector<std::int64_t>{4, 1});
    CHECK(idx(coset_polynomial({1, 5}, th)) == std::vector<std::int64_t>{3, 0, 1});
    CHECK(idx(defining_polynomial({0, 1, 4, 5}, th)) ==
          std::vector<std::int64_t>{2, 0, 2, 0, 1});
    // Residues are normalized mod n.
    CHECK(defining_polynomial({-3, -4, 8, 9, 12, 13}, th) ==
          defining_polynomial({0, 1, 4, 5}, th));
    CHECK(defining_polynomial({}, th).is_monic());
    CHECK(defining_polynomial({}, th).degree() == 0);

    CHECK(throws_errc(Errc::not_invariant, [&] { defining_polynomial({1}, th); }));

    // Product over all cosets reconstructs X^n - 1.
    Field F3 = field_build(3, 1);
    RootOfUnity th10 = root_of_unity(F3, 10);
    Polynomial prod = Polynomial::from_ints(F3, {1});
    for (const auto& Q : cyclotomic_cosets(3, 10).cosets)
        prod = prod * coset_polynomial(Q, th10);
    CHECK(prod == Polynomial::x_pow_minus_one(F3, 10));
    CHECK(idx(coset_polynomial({1, 3, 7, 9}, th10)) ==
          std::vector<std::int64_t>{1, 2, 1, 2, 1});
}

TEST_CASE("isometry substitution and image polynomial") {
    Field F5 = field_build(5, 1);
    RootOfUnity th = root_of_unity(F5, 8, {PinCondition{2, 2}});
    Polynomial fP = defining_polynomial({0, 1, 4, 5}, th);
    CHECK(idx(image_defining_polynomial(fP, 1, 2, th)) ==
          std::vector<std::int64_t>{2, 0, 3, 0, 1});

    // The identity substitution folds back to the input.
    CHECK(isometry_substitute(fP, 1, 0, th) == fP);

    // Substitution matches the image of the support for every valid pair.
    for (std::int64_t t : q_translations(5, 8)) {
        for (std::int64_t s : units_mod(8)) {
            QPerm rho = qperm_make(5, 8, s, t);
            std::vector<std::int64_t> image;
            for (std::int64_t i : {0, 1, 4, 5}) image.push_back(qperm_apply(rho, i));
            CHECK(image_defining_polynomial(fP, s, t, th) ==
                  defining_polynomial(image, th));
        }
    }

    CHECK(throws_errc(Errc::not_unit, [&] { isometry_substitute(fP, 2, 0, th); }));
    CHECK(throws_errc(Errc::not_q_translation, [&] { isometry_substitute(fP, 1, 1, th); }));
}

TEST_CASE("alternating polynomial pairs factors") {
    Field F3 = field_build(3, 1);
    RootOfUnity th = root_of_unity(F3, 10);
    CosetPartition cp = cyclotomic_cosets(3, 10);
    QPerm tau5 = qperm_make(3, 10, 1, 5);
    for (int id = 0; id < static_cast<int>(cp.cosets.size()); ++id) {
        Polynomial f = coset_polynomial(cp.cosets[id], th);
        Polynomial g = coset_polynomial(cp.cosets[coset_image(tau5, id, cp)], th);
        CHECK(alternating(f) == g);
    }
    CHECK(idx(alternating(Polynomial::from_ints(F3, {1, 2, 1, 2, 1}))) ==
          std::vector<std::int64_t>{1, 1, 1, 1, 1});

    CHECK(throws_errc(Errc::not_monic,
                      [&] { alternating(Polynomial::from_ints(F3, {1, 2})); }));
}

TEST_CASE("monic reciprocal") {
    Field F5 = field_build(5, 1);
    Polynomial a = Polynomial::from_ints(F5, {-2, 1});
    Polynomial astar = monic_reciprocal(a);
    CHECK(idx(astar) == std::vector<std::int64_t>{2, 1});
    CHECK(astar.eval(F5.from_int(3)).is_zero()); // root 2 inverts to 3

    Field F3 = field_build(3, 1);
    Polynomial h = Polynomial::from_ints(F3, {2, 2, 1, 2, 1, 1});
    CHECK(monic_reciprocal(h) == h); // symmetric support
    Polynomial halt = alternating(h);
    CHECK(idx(halt) == std::vector<std::int64_t>{1, 2, 2, 2, 2, 1});
    CHECK(monic_reciprocal(halt) == halt);

    CHECK(throws_errc(Errc::zero_constant_term,
                      [&] { monic_reciprocal(Polynomial::from_ints(F5, {0, 1})); }));
    CHECK(throws_errc(Errc::not_monic,
                      [&] { monic_reciprocal(Polynomial::from_ints(F5, {1, 2})); }));
}

TEST_CASE("interpolation") {
    Field F7 = field_build(7, 1);
    std::vector<FieldElement> xs{F7.from_int(0), F7.from_int(1), F7.from_int(2)};
    std::vector<FieldElement> ys{F7.from_int(1), F7.from_int(2), F7.from_int(5)};
    Polynomial a = interpolate(xs, ys);
    CHECK(a.degree() < 3);
    for (std::size_t i = 0; i < xs.size(); ++i) CHECK(a.eval(xs[i]) == ys[i]);
    CHECK(idx(a) == std::vector<std::int64_t>{1, 0, 1});

    std::vector<FieldElement> dup{F7.from_int(1), F7.from_int(1)};
    std::vector<FieldElement> dy{F7.from_int(0), F7.from_int(0)};
    CHECK(throws_errc(Errc::mismatch, [&] { interpolate(dup, dy); }));
}

} // TEST_SUITE
