#include "isodual/codes.hpp"

#include <algorithm>
#include <iostream>
#include <memory>
#include <mutex>
#include <numeric>
#include <set>
#include <thread>

#include "isodual/numutil.hpp"

namespace isodual {

namespace {

std::vector<std::int64_t> normalize_support(const std::vector<std::int64_t>& P, std::int64_t n) {
    std::set<std::int64_t> s;
    for (std::int64_t i : P) s.insert(mod_norm(i, n));
    return std::vector<std::int64_t>(s.begin(), s.end());
}

std::vector<std::int64_t> complement_support(const std::vector<std::int64_t>& P, std::int64_t n) {
    std::vector<char> in(static_cast<std::size_t>(n), 0);
    for (std::int64_t i : P) in[static_cast<std::size_t>(i)] = 1;
    std::vector<std::int64_t> out;
    for (std::int64_t i = 0; i < n; ++i)
        if (!in[static_cast<std::size_t>(i)]) out.push_back(i);
    return out;
}

std::vector<std::int64_t> negate_support(const std::vector<std::int64_t>& P, std::int64_t n) {
    std::vector<std::int64_t> out;
    out.reserve(P.size());
    for (std::int64_t i : P) out.push_back(mod_norm(-i, n));
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

CyclicCode code_from_support(const RootOfUnity& theta, const std::vector<std::int64_t>& P) {
    CyclicCode C;
    C.q = theta.base().order();
    C.n = theta.n();
    C.P = normalize_support(P, C.n);
    C.dimension = static_cast<std::int64_t>(C.P.size());
    C.theta = theta;
    C.check_poly = defining_polynomial(C.P, theta);          // NotInvariant on bad P
    C.gen_poly = defining_polynomial(complement_support(C.P, C.n), theta);
    if (C.check_poly * C.gen_poly != Polynomial::x_pow_minus_one(theta.base(), C.n))
        throw Error(Errc::mismatch, "f_P * f_complement != X^n - 1");
    return C;
}

CyclicCode dual_code(const CyclicCode& C) {
    return code_from_support(C.theta, negate_support(complement_support(C.P, C.n), C.n));
}

CyclicCode isometry_image(const CyclicCode& C, std::int64_t s, std::int64_t t) {
    QPerm rho = qperm_make(C.q, C.n, s, t);
    std::vector<std::int64_t> img;
    img.reserve(C.P.size());
    for (std::int64_t i : C.P) img.push_back(qperm_apply(rho, i));
    std::sort(img.begin(), img.end());
    return code_from_support(C.theta, img);
}

std::vector<FieldElement> isometry_apply_word(const std::vector<FieldElement>& w,
                                              std::int64_t s, std::int64_t t,
                                              const RootOfUnity& theta) {
    const std::int64_t n = theta.n();
    if (static_cast<std::int64_t>(w.size()) != n)
        throw Error(Errc::length_mismatch, "word length != n");
    QPerm rho = qperm_make(theta.base().order(), n, s, t);
    const std::int64_t s_inv = inv_mod(rho.s, n) % n;
    FieldElement scale = theta.project(theta.theta_pow(-rho.t)); // theta^-t in GF(q)
    std::vector<FieldElement> out(w.size(), theta.base().zero());
    FieldElement scale_i = theta.base().one();
    for (std::int64_t i = 0; i < n; ++i) {
        if (w[static_cast<std::size_t>(i)].field() != theta.base())
            throw Error(Errc::field_mismatch, "word coordinate is not over GF(q)");
        out[static_cast<std::size_t>(s_inv * i % n)] = w[static_cast<std::size_t>(i)] * scale_i;
        scale_i = scale_i * scale;
    }
    return out;
}

std::optional<IsoSelfDualCertificate> certify_iso_self_dual(const CyclicCode& C) {
    if (C.dimension * 2 != C.n)
        throw Error(Errc::dimension_mismatch, "dim C != n/2");
    std::vector<std::int64_t> comp = complement_support(C.P, C.n);
    for (std::int64_t t : q_translations(C.q, C.n)) {
        for (std::int64_t s : units_mod(C.n)) {
            QPerm rho = qperm_make(C.q, C.n, s, t);
            std::vector<std::int64_t> img;
            img.reserve(C.P.size());
            for (std::int64_t i : C.P) img.push_back(qperm_apply(rho, i));
            std::sort(img.begin(), img.end());
            if (img == comp) {
                IsoSelfDualCertificate cert;
                cert.s = s;
                cert.t = t;
                cert.dual_check_poly = defining_polynomial(negate_support(comp, C.n), C.theta);
                return cert;
            }
        }
    }
    return std::nullopt;
}

std::vector<FieldElement> encode(const CyclicCode& C, const std::vector<FieldElement>& message) {
    if (static_cast<std::int64_t>(message.size()) != C.dimension)
        throw Error(Errc::length_mismatch, "message length != dim C");
    std::vector<FieldElement> out(static_cast<std::size_t>(C.n), C.theta.base().zero());
    // message(X) * gen(X) has degree < n when dim > 0; the fold is a no-op
    // then but keeps the map total.
    for (std::size_t i = 0; i < message.size(); ++i) {
        if (message[i].is_zero()) continue;
        for (std::int64_t j = 0; j <= C.gen_poly.degree(); ++j) {
            std::size_t pos = static_cast<std::size_t>((static_cast<std::int64_t>(i) + j) % C.n);
            out[pos] = out[pos] + message[i] * C.gen_poly.coeff(j);
        }
    }
    return out;
}

bool is_codeword(const CyclicCode& C, const std::vector<FieldElement>& w) {
    if (static_cast<std::int64_t>(w.size()) != C.n)
        throw Error(Errc::length_mismatch, "word length != n");
    Polynomial wp(C.theta.base(), w);
    if (C.dimension == 0) return wp.is_zero();
    return divmod(wp, C.gen_poly).second.is_zero();
}

namespace {

// Exhaustive enumeration kernel on element indices with precomputed
// addition and scaled-row tables. Usable whenever q fits the table budget;
// the generic kernel below covers the rest.
struct TableKernel {
    std::int64_t q, n, k;
    std::vector<std::uint16_t> add;        // q*q
    std::vector<std::uint16_t> scaled;     // k*q*n: scaled[(row*q + c)*n + pos]

    TableKernel(const CyclicCode& C) : q(C.q), n(C.n), k(C.dimension) {
        const Field& f = C.theta.base();
        add.resize(static_cast<std::size_t>(q * q));
        for (std::int64_t a = 0; a < q; ++a) {
            FieldElement ea = f.from_index(a);
            for (std::int64_t b = 0; b < q; ++b)
                add[static_cast<std::size_t>(a * q + b)] =
                    static_cast<std::uint16_t>((ea + f.from_index(b)).index());
        }
        scaled.resize(static_cast<std::size_t>(k * q * n));
        for (std::int64_t row = 0; row < k; ++row) {
            for (std::int64_t c = 0; c < q; ++c) {
                FieldElement ec = f.from_index(c);
                for (std::int64_t pos = 0; pos < n; ++pos) {
                    // Row `row` is X^row * gen, degree < n for dim > 0.
                    FieldElement val = C.gen_poly.coeff(pos - row) * ec;
                    scaled[static_cast<std::size_t>((row * q + c) * n + pos)] =
                        static_cast<std::uint16_t>(val.index());
                }
            }
        }
    }

    // Enumerates all messages whose top digit lies in {start, start+stride,
    // ...} and accumulates weights into hist.
    void run(std::int64_t start, std::int64_t stride, std::vector<std::uint64_t>& hist) const {
        std::vector<std::uint16_t> partial(static_cast<std::size_t>((k + 1) * n), 0);
        rec(k - 1, start, stride, partial, hist);
    }

  private:
    void rec(std::int64_t row, std::int64_t start, std::int64_t stride,
             std::vector<std::uint16_t>& partial, std::vector<std::uint64_t>& hist) const {
        const std::uint16_t* prev = partial.data() + (row + 1) * n;
        std::uint16_t* cur = partial.data() + row * n;
        std::int64_t first = (row == k - 1) ? start : 0;
        std::int64_t step = (row == k - 1) ? stride : 1;
        for (std::int64_t c = first; c < q; c += step) {
            const std::uint16_t* srow = scaled.data() + (row * q + c) * n;
            if (row == 0) {
                // Fused leaf: add the last row and count nonzeros directly.
                std::int64_t w = 0;
                for (std::int64_t pos = 0; pos < n; ++pos)
                    w += add[static_cast<std::size_t>(prev[pos]) * q + srow[pos]] != 0;
                ++hist[static_cast<std::size_t>(w)];
            } else {
                for (std::int64_t pos = 0; pos < n; ++pos)
                    cur[pos] = add[static_cast<std::size_t>(prev[pos]) * q + srow[pos]];
                rec(row - 1, start, stride, partial, hist);
            }
        }
    }
};

// Fallback kernel on FieldElement vectors; hit only for fields too large
// for index tables, where the bound forces tiny dimensions anyway.
void generic_enumerate(const CyclicCode& C, std::int64_t start, std::int64_t stride,
                       std::vector<std::uint64_t>& hist) {
    const Field& f = C.theta.base();
    const std::int64_t q = C.q, n = C.n, k = C.dimension;
    std::vector<std::vector<FieldElement>> rows(static_cast<std::size_t>(k));
    for (std::int64_t row = 0; row < k; ++row) {
        rows[static_cast<std::size_t>(row)].reserve(static_cast<std::size_t>(n));
        for (std::int64_t pos = 0; pos < n; ++pos)
            rows[static_cast<std::size_t>(row)].push_back(C.gen_poly.coeff(pos - row));
    }
    std::vector<std::int64_t> digits(static_cast<std::size_t>(k), 0);
    std::vector<FieldElement> word(static_cast<std::size_t>(n), f.zero());
    // Odometer over messages with the top digit restricted to the worker's
    // residue class.
    for (std::int64_t top = start; top < q; top += stride) {
        digits.assign(static_cast<std::size_t>(k), 0);
        digits[static_cast<std::size_t>(k - 1)] = top;
        while (true) {
            for (std::int64_t pos = 0; pos < n; ++pos) word[static_cast<std::size_t>(pos)] = f.zero();
            for (std::int64_t row = 0; row < k; ++row) {
                if (digits[static_cast<std::size_t>(row)] == 0) continue;
                FieldElement c = f.from_index(digits[static_cast<std::size_t>(row)]);
                for (std::int64_t pos = 0; pos < n; ++pos)
                    word[static_cast<std::size_t>(pos)] =
                        word[static_cast<std::size_t>(pos)] + rows[static_cast<std::size_t>(row)][static_cast<std::size_t>(pos)] * c;
            }
            std::int64_t w = 0;
            for (const auto& v : word) w += !v.is_zero();
            ++hist[static_cast<std::size_t>(w)];
            std::int64_t carry = 0;
            while (carry < k - 1 && ++digits[static_cast<std::size_t>(carry)] == q) {
                digits[static_cast<std::size_t>(carry)] = 0;
                ++carry;
            }
            if (carry >= k - 1) break;
        }
    }
}

} // namespace

std::vector<std::uint64_t> weight_distribution(const CyclicCode& C, std::int64_t bound,
                                               int workers, bool progress) {
    std::vector<std::uint64_t> hist(static_cast<std::size_t>(C.n) + 1, 0);
    if (C.dimension == 0) {
        hist[0] = 1;
        return hist;
    }
    std::int64_t total = 1;
    for (std::int64_t i = 0; i < C.dimension; ++i) {
        if (total > bound / C.q)
            throw Error(Errc::too_large, "q^dim exceeds the enumeration bound");
        total *= C.q;
    }
    if (total > bound)
        throw Error(Errc::too_large, "q^dim exceeds the enumeration bound");

    if (workers <= 0) {
        unsigned hw = std::thread::hardware_concurrency();
        workers = hw == 0 ? 1 : static_cast<int>(hw);
    }
    workers = static_cast<int>(std::min<std::int64_t>(workers, C.q));

    const bool report = progress && total > kProgressThreshold;
    std::mutex io_mutex;
    std::int64_t done = 0;

    const bool use_tables = C.q <= 1024;
    TableKernel const* kernel = nullptr;
    std::unique_ptr<TableKernel> kernel_holder;
    if (use_tables) {
        kernel_holder = std::make_unique<TableKernel>(C);
        kernel = kernel_holder.get();
    }

    std::vector<std::vector<std::uint64_t>> parts(
        static_cast<std::size_t>(workers),
        std::vector<std::uint64_t>(static_cast<std::size_t>(C.n) + 1, 0));
    auto work = [&](int tid) {
        for (std::int64_t top = tid; top < C.q; top += workers) {
            if (use_tables)
                kernel->run(top, C.q /* single top digit */, parts[static_cast<std::size_t>(tid)]);
            else
                generic_enumerate(C, top, C.q, parts[static_cast<std::size_t>(tid)]);
            if (report) {
                std::lock_guard<std::mutex> lock(io_mutex);
                ++done;
                std::cerr << "enumeration: " << done << "/" << C.q
                          << " message classes\n";
            }
        }
    };
    if (workers == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (int tid = 0; tid < workers; ++tid) pool.emplace_back(work, tid);
        for (auto& th : pool) th.join();
    }
    // Summation order over workers is fixed; integer addition makes the
    // result independent of scheduling anyway.
    for (const auto& part : parts)
        for (std::size_t i = 0; i < hist.size(); ++i) hist[i] += part[i];
    return hist;
}

std::int64_t min_distance(const CyclicCode& C, std::int64_t bound, int workers, bool progress) {
    auto hist = weight_distribution(C, bound, workers, progress);
    for (std::size_t i = 1; i < hist.size(); ++i)
        if (hist[i] > 0) return static_cast<std::int64_t>(i);
    throw std::domain_error("zero code has no minimum distance");
}

MdsCode mds_construct(std::int64_t q, const std::vector<PinCondition>& pins) {
    std::int64_t p = 0, e = 0;
    if (!prime_power_split(q, p, e))
        throw Error(Errc::not_prime_power, "q = " + std::to_string(q) + " is not a prime power");
    if (mod_norm(q, 4) != 1)
        throw Error(Errc::bad_residue, "q = " + std::to_string(q) + " is not 1 mod 4");
    const std::int64_t n = q + 1;
    const std::int64_t ell = (n - 2) / 4;
    Field fq = field_build(p, e);
    RootOfUnity theta = root_of_unity(fq, n, pins);
    std::vector<std::int64_t> P;
    for (std::int64_t i = -ell; i <= ell; ++i) P.push_back(mod_norm(i, n));
    std::sort(P.begin(), P.end());
    MdsCode out;
    out.code = code_from_support(theta, P);
    out.ell = ell;
    auto cert = certify_iso_self_dual(out.code);
    if (!cert)
        throw Error(Errc::mismatch, "MDS support is not iso-self-dual");
    out.cert = *cert;
    return out;
}

std::vector<FieldElement> grs_codeword(const Polynomial& a, const RootOfUnity& theta,
                                       std::int64_t ell) {
    if (a.field() != theta.ext())
        throw Error(Errc::field_mismatch, "GRS message must be over GF(q^d)");
    const std::int64_t n = theta.n();
    if (n % 2 != 0 || a.degree() >= n / 2)
        throw Error(Errc::degree_too_high, "deg a must be < n/2");
    std::vector<FieldElement> out;
    out.reserve(static_cast<std::size_t>(n));
    for (std::int64_t i = 0; i < n; ++i)
        out.push_back(theta.theta_pow(ell * i) * a.eval(theta.theta_pow(-i)));
    return out;
}

} // namespace isodual
