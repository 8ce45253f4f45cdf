#include "isodual/cli.hpp"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "isodual/codes.hpp"
#include "isodual/error.hpp"
#include "isodual/gf.hpp"
#include "isodual/json_io.hpp"
#include "isodual/numutil.hpp"
#include "isodual/oracle.hpp"
#include "isodual/polyring.hpp"
#include "isodual/splitting.hpp"
#include "isodual/zn.hpp"

namespace isodual {
namespace {

std::string set_str(const std::vector<std::int64_t>& v) {
    std::string out = "{";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ", ";
        out += std::to_string(v[i]);
    }
    return out + "}";
}

Field base_field(std::int64_t q) {
    std::int64_t p = 0, e = 0;
    if (!prime_power_split(q, p, e))
        throw Error(Errc::not_prime_power, "q = " + std::to_string(q) + " is not a prime power");
    return field_build(p, e);
}

std::vector<PinCondition> parse_pins(const std::vector<std::string>& exprs) {
    std::vector<PinCondition> pins;
    pins.reserve(exprs.size());
    for (const auto& e : exprs) pins.push_back(parse_pin(e));
    return pins;
}

std::string join_pins(const std::vector<std::string>& exprs) {
    std::string out;
    for (std::size_t i = 0; i < exprs.size(); ++i) {
        if (i) out += ";";
        out += exprs[i];
    }
    return out;
}

std::vector<std::string> split_pins(const std::string& joined) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (start <= joined.size() && !joined.empty()) {
        std::size_t pos = joined.find(';', start);
        if (pos == std::string::npos) {
            out.push_back(joined.substr(start));
            break;
        }
        out.push_back(joined.substr(start, pos - start));
        start = pos + 1;
    }
    return out;
}

// The translation 2^u * n_odd reduced into [0, n); validates q and n.
std::int64_t translation_for_u(std::int64_t q, std::int64_t n, std::int64_t u) {
    ExistsResult ex = exists_splitting(q, n);
    return mod_norm(pow_mod(2, u, n) * (ex.n_odd % n) % n, n);
}

std::int64_t hamming_weight(const std::vector<FieldElement>& w) {
    std::int64_t c = 0;
    for (const auto& x : w)
        if (!x.is_zero()) ++c;
    return c;
}

std::vector<FieldElement> message_from_counter(const Field& F, std::int64_t dim,
                                               std::int64_t counter) {
    std::vector<FieldElement> msg;
    msg.reserve(static_cast<std::size_t>(dim));
    for (std::int64_t j = 0; j < dim; ++j) {
        msg.push_back(F.from_index(counter % F.order()));
        counter /= F.order();
    }
    return msg;
}

void print_report(const OracleReport& r, bool json, std::ostream& out) {
    if (json) {
        out << report_json_line(r) << "\n";
        return;
    }
    out << (r.ok() ? "ok   " : "FAIL ") << r.claim << " (" << r.instances_checked
        << " instances)\n";
    for (const auto& f : r.failures) out << "     " << f << "\n";
}

int cmd_exists(std::int64_t q, std::int64_t n, bool json, std::ostream& out) {
    ExistsResult r = exists_splitting(q, n);
    if (json) {
        nlohmann::ordered_json j;
        j["q"] = q;
        j["n"] = n;
        j["exists"] = r.exists;
        j["v"] = r.v;
        j["w"] = r.w;
        j["n_odd"] = r.n_odd;
        if (r.exists) {
            j["u"] = r.u;
            j["t"] = r.t;
        }
        j["reason"] = r.reason;
        out << j.dump() << "\n";
    } else {
        out << (r.exists ? "yes" : "no") << ": " << r.reason << "\n";
        if (r.exists) out << "u=" << r.u << " t=" << r.t << "\n";
    }
    return r.exists ? 0 : 1;
}

int cmd_cosets(std::int64_t q, std::int64_t n, bool json, std::ostream& out) {
    CosetPartition cp = cyclotomic_cosets(q, n);
    if (json) {
        nlohmann::ordered_json j;
        j["q"] = q;
        j["n"] = n;
        j["count"] = cp.cosets.size();
        j["cosets"] = cp.cosets;
        out << j.dump() << "\n";
    } else {
        out << "q=" << q << " n=" << n << " cosets=" << cp.cosets.size() << "\n";
        for (const auto& Q : cp.cosets) out << set_str(Q) << "\n";
    }
    return 0;
}

int cmd_factor(std::int64_t q, std::int64_t n, const std::vector<std::string>& pin_exprs,
               bool json, std::ostream& out) {
    Field F = base_field(q);
    RootOfUnity theta = root_of_unity(F, n, parse_pins(pin_exprs));
    CosetPartition cp = cyclotomic_cosets(q, n);
    std::vector<Polynomial> factors;
    factors.reserve(cp.cosets.size());
    for (const auto& Q : cp.cosets) factors.push_back(coset_polynomial(Q, theta));

    // For nu2(n) = 1 the shift i -> i + n/2 pairs each factor with its
    // alternating polynomial (theta^(n/2) = -1).
    std::vector<std::pair<int, int>> pairs;
    if (nu2(n) == 1) {
        QPerm tau = qperm_make(q, n, 1, n / 2);
        for (int i = 0; i < static_cast<int>(cp.cosets.size()); ++i) {
            int j = coset_image(tau, i, cp);
            if (i <= j) pairs.emplace_back(i, j);
        }
    }

    if (json) {
        nlohmann::ordered_json j;
        j["q"] = q;
        j["n"] = n;
        if (!pin_exprs.empty()) j["pin"] = join_pins(pin_exprs);
        auto arr = nlohmann::ordered_json::array();
        for (std::size_t i = 0; i < factors.size(); ++i)
            arr.push_back(nlohmann::ordered_json{{"coset", cp.cosets[i]},
                                                 {"poly", factors[i].to_indices()}});
        j["factors"] = arr;
        if (nu2(n) == 1) {
            auto pa = nlohmann::ordered_json::array();
            for (const auto& pr : pairs) pa.push_back({pr.first, pr.second});
            j["alternating_pairs"] = pa;
        }
        out << j.dump() << "\n";
    } else {
        out << "X^" << n << " - 1 over GF(" << q << "): " << factors.size()
            << " irreducible factors\n";
        for (std::size_t i = 0; i < factors.size(); ++i)
            out << set_str(cp.cosets[i]) << ": " << pretty_poly(factors[i]) << "\n";
        if (nu2(n) == 1) {
            out << "alternating pairs under i -> i + " << n / 2 << ":\n";
            for (const auto& pr : pairs)
                out << set_str(cp.cosets[pr.first]) << " <-> " << set_str(cp.cosets[pr.second])
                    << "\n";
        }
    }
    return 0;
}

int cmd_enumerate(std::int64_t q, std::int64_t n, std::optional<std::int64_t> u_opt,
                  std::int64_t cap, bool json, std::ostream& out) {
    ExistsResult ex = exists_splitting(q, n);
    std::int64_t u = u_opt ? *u_opt : std::max<std::int64_t>(0, ex.v - ex.w);
    std::int64_t t = translation_for_u(q, n, u);
    QPerm rho = qperm_make(q, n, 1, t);
    std::vector<Splitting> all = enumerate_splittings(q, n, rho, cap);

    if (json) {
        nlohmann::ordered_json j;
        j["q"] = q;
        j["n"] = n;
        j["s"] = rho.s;
        j["t"] = rho.t;
        j["count"] = all.size();
        auto arr = nlohmann::ordered_json::array();
        for (const auto& sp : all) arr.push_back(sp.P);
        j["splittings"] = arr;
        out << j.dump() << "\n";
    } else {
        out << "q=" << q << " n=" << n << " s=" << rho.s << " t=" << rho.t << "\n";
        out << "count: " << all.size() << "\n";
        for (const auto& sp : all) out << set_str(sp.P) << "\n";
    }
    return all.empty() ? 1 : 0;
}

int cmd_construct(std::int64_t q, std::int64_t n, std::optional<std::int64_t> u_opt,
                  const std::vector<std::string>& pin_exprs, bool json, std::ostream& out,
                  std::ostream& err) {
    Splitting sp = u_opt
                       ? build_splitting(q, n, qperm_make(q, n, 1, translation_for_u(q, n, *u_opt)))
                       : build_splitting(q, n);
    Field F = base_field(q);
    RootOfUnity theta = root_of_unity(F, n, parse_pins(pin_exprs));
    CyclicCode C = code_from_support(theta, sp.P);
    std::optional<IsoSelfDualCertificate> cert = certify_iso_self_dual(C);
    if (!cert) {
        err << "error: no isometry certificate found for P = " << set_str(C.P) << "\n";
        return 1;
    }

    CodeDescriptor d = make_descriptor(C, cert, join_pins(pin_exprs));
    nlohmann::ordered_json dj = descriptor_to_json(d);
    if (json) {
        out << dj.dump() << "\n";
    } else {
        out << "[" << n << ", " << C.dimension << "] iso-self-dual cyclic code over GF(" << q
            << ")\n";
        out << "P: " << set_str(C.P) << "\n";
        out << "check:      " << pretty_poly(C.check_poly) << "\n";
        out << "generator:  " << pretty_poly(C.gen_poly) << "\n";
        out << "dual check: " << pretty_poly(cert->dual_check_poly) << "\n";
        out << "certificate: s=" << cert->s << " t=" << cert->t << "\n";
        out << "descriptor: " << dj.dump() << "\n";
    }
    return 0;
}

int cmd_mds(std::int64_t q, const std::vector<std::string>& pin_exprs, bool measure,
            std::int64_t bound, bool json, std::ostream& out) {
    MdsCode M = mds_construct(q, parse_pins(pin_exprs));
    std::int64_t design = M.code.n / 2 + 1;
    std::optional<std::int64_t> measured;
    if (measure) measured = min_distance(M.code, bound, 0, true);

    CodeDescriptor d = make_descriptor(M.code, M.cert, join_pins(pin_exprs));
    nlohmann::ordered_json dj = descriptor_to_json(d);
    if (json) {
        nlohmann::ordered_json j;
        j["descriptor"] = dj;
        j["ell"] = M.ell;
        j["design_distance"] = design;
        if (measured) j["measured_distance"] = *measured;
        out << j.dump() << "\n";
    } else {
        out << "[" << M.code.n << ", " << M.code.dimension << ", " << design
            << "] MDS iso-self-dual cyclic code over GF(" << q << ")\n";
        out << "P: " << set_str(M.code.P) << "\n";
        out << "check:      " << pretty_poly(M.code.check_poly) << "\n";
        out << "generator:  " << pretty_poly(M.code.gen_poly) << "\n";
        out << "certificate: s=" << M.cert.s << " t=" << M.cert.t << "\n";
        if (measured) out << "measured distance: " << *measured << "\n";
        out << "descriptor: " << dj.dump() << "\n";
    }
    return measured && *measured != design ? 1 : 0;
}

int cmd_verify_one(const std::string& path, std::int64_t bound, bool json, std::ostream& out) {
    nlohmann::json j;
    try {
        if (path == "-") {
            j = nlohmann::json::parse(std::cin);
        } else {
            std::ifstream f(path);
            if (!f) throw Error(Errc::parse_error, "cannot open " + path);
            j = nlohmann::json::parse(f);
        }
    } catch (const nlohmann::json::parse_error& e) {
        throw Error(Errc::parse_error, e.what());
    }
    CodeDescriptor d = descriptor_from_json(j);

    Field F = base_field(d.q);
    RootOfUnity theta = root_of_unity(F, d.n, parse_pins(split_pins(d.pin)));
    CyclicCode C = code_from_support(theta, d.P);
    CyclicCode D = dual_code(C);

    std::vector<OracleReport> reports;
    {
        OracleReport r;
        r.claim = "descriptor polynomials match reconstruction";
        r.instances_checked = 3;
        if (C.check_poly.to_indices() != d.check_poly) r.failures.push_back("check_poly differs");
        if (C.gen_poly.to_indices() != d.gen_poly) r.failures.push_back("gen_poly differs");
        if (D.check_poly.to_indices() != d.dual_check_poly)
            r.failures.push_back("dual_check_poly differs");
        reports.push_back(std::move(r));
    }

    if (d.has_certificate) {
        OracleReport r;
        r.claim = "certificate maps the support onto its complement";
        r.instances_checked = 2;
        QPerm rho = qperm_make(d.q, d.n, d.cert_s, d.cert_t);
        std::vector<std::int64_t> covered = C.P;
        for (std::int64_t i : C.P) covered.push_back(qperm_apply(rho, i));
        std::sort(covered.begin(), covered.end());
        std::vector<std::int64_t> full(static_cast<std::size_t>(d.n));
        std::iota(full.begin(), full.end(), 0);
        if (covered != full) r.failures.push_back("P and rho(P) do not partition Z_n");
        Polynomial mapped = image_defining_polynomial(C.check_poly, mod_norm(-d.cert_s, d.n),
                                                      d.cert_t, C.theta);
        if (mapped != D.check_poly)
            r.failures.push_back("substitution image differs from the dual check polynomial");
        reports.push_back(std::move(r));
    }

    reports.push_back(oracle_dual_basis(C));

    std::int64_t words = 1;
    bool small = true;
    for (std::int64_t i = 0; i < C.dimension && small; ++i) {
        words *= C.q;
        if (words > bound) small = false;
    }
    if (small) {
        reports.push_back(oracle_weight_equality(C, bound));
    } else if (!json) {
        out << "skip weight distribution equality (q^k exceeds enumeration bound)\n";
    }

    if (d.has_certificate) {
        OracleReport r;
        r.claim = "isometry maps codewords into the dual preserving weight";
        std::int64_t count = small ? words : 64;
        r.instances_checked = count;
        std::int64_t s_inv_map = mod_norm(-d.cert_s, d.n);
        for (std::int64_t c = 0; c < count; ++c) {
            std::vector<FieldElement> w = encode(C, message_from_counter(F, C.dimension, c));
            std::vector<FieldElement> img = isometry_apply_word(w, s_inv_map, d.cert_t, C.theta);
            if (!is_codeword(D, img)) {
                r.failures.push_back("image of word " + std::to_string(c) + " is not in the dual");
                break;
            }
            if (hamming_weight(w) != hamming_weight(img)) {
                r.failures.push_back("weight changed for word " + std::to_string(c));
                break;
            }
        }
        reports.push_back(std::move(r));
    }

    bool all_ok = true;
    for (const auto& r : reports) {
        all_ok = all_ok && r.ok();
        print_report(r, json, out);
    }
    if (!json) out << (all_ok ? "verification passed" : "verification failed") << "\n";
    return all_ok ? 0 : 1;
}

int cmd_verify_grid(std::int64_t max_n, bool json, std::ostream& out) {
    const std::int64_t qs[] = {3, 5, 7, 9, 11, 13};
    bool all_ok = true;
    for (std::int64_t q : qs) {
        OracleReport r;
        r.claim = "splitting existence equivalence q=" + std::to_string(q);
        for (std::int64_t n = 1; n <= max_n; ++n) {
            if (std::gcd(q, n) != 1) continue;
            ++r.instances_checked;
            ExistsResult ex = exists_splitting(q, n);
            SplittingSearch ss = oracle_splitting_search(q, n);
            std::int64_t u = std::max<std::int64_t>(0, ex.v - ex.w);
            QPerm tau = qperm_make(q, n, 1, translation_for_u(q, n, u));
            bool by_tau = splitting_given_by(q, n, tau);
            OracleReport parity = oracle_orbit_parity(q, n, tau);
            if (ex.exists != ss.found || by_tau != ex.exists || !parity.ok())
                r.failures.push_back("n=" + std::to_string(n));
        }
        all_ok = all_ok && r.ok();
        print_report(r, json, out);
    }
    if (!json) out << (all_ok ? "grid passed" : "grid failed") << "\n";
    return all_ok ? 0 : 1;
}

} // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"iso-self-dual cyclic codes over finite fields", "isodual"};
    app.require_subcommand(1);

    std::int64_t q = 0, n = 0, u = 0, max_n = 24, enum_bound = 0;
    std::vector<std::string> pin_exprs;
    bool json = false, grid = false, distance = false;
    std::string in_path = "-";

    auto add_common = [&](CLI::App* sub, bool need_n) {
        sub->add_option("--q", q, "field size, a prime power")
            ->required()
            ->check(CLI::Range(std::int64_t{2}, std::int64_t{1} << 20));
        if (need_n)
            sub->add_option("--n", n, "code length, coprime to q")
                ->required()
                ->check(CLI::PositiveNumber);
        sub->add_flag("--json", json, "machine-readable JSON output");
    };

    CLI::App* sc_exists =
        app.add_subcommand("exists", "decide whether iso-self-dual cyclic codes of length n "
                                     "over GF(q) exist");
    add_common(sc_exists, true);

    CLI::App* sc_cosets = app.add_subcommand("cosets", "list the q-cyclotomic cosets of Z_n");
    add_common(sc_cosets, true);

    CLI::App* sc_factor =
        app.add_subcommand("factor", "factor X^n - 1 over GF(q) by cyclotomic coset");
    add_common(sc_factor, true);
    sc_factor->add_option("--pin-theta", pin_exprs,
                          "root-of-unity pin \"theta^E=C\", repeatable");

    CLI::App* sc_enumerate = app.add_subcommand(
        "enumerate", "enumerate the splittings of Z_n given by the canonical shift");
    add_common(sc_enumerate, true);
    sc_enumerate->add_option("--u", u, "2-adic parameter selecting the shift 2^u * odd part of n")
        ->check(CLI::Range(std::int64_t{0}, std::int64_t{62}));
    sc_enumerate->add_option("--enum-bound", enum_bound, "cap on enumerated splittings")
        ->check(CLI::PositiveNumber);

    CLI::App* sc_construct = app.add_subcommand(
        "construct", "construct an iso-self-dual cyclic code of length n over GF(q)");
    add_common(sc_construct, true);
    sc_construct->add_option("--u", u, "2-adic parameter selecting the shift 2^u * odd part of n")
        ->check(CLI::Range(std::int64_t{0}, std::int64_t{62}));
    sc_construct->add_option("--pin-theta", pin_exprs,
                             "root-of-unity pin \"theta^E=C\", repeatable");

    CLI::App* sc_verify = app.add_subcommand(
        "verify", "verify a code descriptor, or --grid for the existence equivalence grid");
    sc_verify->add_option("file", in_path, "descriptor JSON file, - for stdin");
    sc_verify->add_flag("--grid", grid, "run the existence grid over q in {3,5,7,9,11,13}");
    sc_verify->add_option("--max-n", max_n, "largest length in the grid")
        ->check(CLI::PositiveNumber);
    sc_verify->add_option("--enum-bound", enum_bound, "cap on exhaustive codeword enumeration")
        ->check(CLI::PositiveNumber);
    sc_verify->add_flag("--json", json, "machine-readable JSON output");

    CLI::App* sc_mds = app.add_subcommand(
        "mds", "construct the MDS iso-self-dual cyclic code of length q + 1 for q = 1 mod 4");
    sc_mds->add_option("--q", q, "field size, a prime power with q = 1 mod 4")
        ->required()
        ->check(CLI::Range(std::int64_t{2}, std::int64_t{1} << 20));
    sc_mds->add_flag("--distance", distance, "measure the minimum distance by full enumeration");
    sc_mds->add_option("--pin-theta", pin_exprs, "root-of-unity pin \"theta^E=C\", repeatable");
    sc_mds->add_option("--enum-bound", enum_bound, "cap on exhaustive codeword enumeration")
        ->check(CLI::PositiveNumber);
    sc_mds->add_flag("--json", json, "machine-readable JSON output");

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        std::optional<std::int64_t> u_opt;
        if (sc_enumerate->count("--u") || sc_construct->count("--u")) u_opt = u;

        if (sc_exists->parsed()) return cmd_exists(q, n, json, out);
        if (sc_cosets->parsed()) return cmd_cosets(q, n, json, out);
        if (sc_factor->parsed()) return cmd_factor(q, n, pin_exprs, json, out);
        if (sc_enumerate->parsed()) {
            std::int64_t cap = enum_bound > 0 ? enum_bound : std::int64_t{1} << 16;
            return cmd_enumerate(q, n, u_opt, cap, json, out);
        }
        if (sc_construct->parsed()) return cmd_construct(q, n, u_opt, pin_exprs, json, out, err);
        if (sc_verify->parsed()) {
            if (grid) return cmd_verify_grid(max_n, json, out);
            std::int64_t bound = enum_bound > 0 ? enum_bound : std::int64_t{1} << 10;
            return cmd_verify_one(in_path, bound, json, out);
        }
        if (sc_mds->parsed()) {
            std::int64_t bound = enum_bound > 0 ? enum_bound : kEnumBound;
            return cmd_mds(q, pin_exprs, distance, bound, json, out);
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return e.code() == Errc::no_splitting ? 1 : 2;
    }
    return 2;
}

} // namespace isodual
