#include "ffpoints/search.hpp"

#include <algorithm>
#include <atomic>
#include <thread>
#include <tuple>

#include "ffpoints/errors.hpp"

namespace ffp {

namespace {

// monic polynomials of degree <= dd, ordered by degree then counter value
BigInt monic_count(std::uint64_t p, unsigned dd) {
    BigInt total = 0, pw = 1;
    for (unsigned j = 0; j <= dd; ++j) {
        total += pw;
        pw *= static_cast<unsigned long>(p);
    }
    return total;
}

DensePoly decode_monic(const PrimeField& F, unsigned dd, std::uint64_t index) {
    std::uint64_t pw = 1;
    for (unsigned dw = 0; dw <= dd; ++dw) {
        if (index < pw) {
            std::vector<fp_t> c(dw + 1, 0);
            for (unsigned j = 0; j < dw; ++j) {
                c[j] = static_cast<fp_t>(index % F.p());
                index /= F.p();
            }
            c[dw] = 1;
            return DensePoly(F, std::move(c));
        }
        index -= pw;
        pw *= F.p();
    }
    throw PrecondViolation("monic index out of range");
}

DensePoly decode_numerator(const PrimeField& F, unsigned du, fp_t lead, std::uint64_t v) {
    std::vector<fp_t> c(du + 1, 0);
    for (unsigned j = 0; j < du; ++j) {
        c[j] = static_cast<fp_t>(v % F.p());
        v /= F.p();
    }
    c[du] = lead;
    return DensePoly(F, std::move(c));
}

struct Hit {
    std::uint64_t task;
    std::uint64_t sub;
    DenseRational x;
    DenseRational y;
};

}  // namespace

SearchReport exhaustive_search(const CurveModel& curve, const SearchBounds& bounds,
                               const SearchOptions& opts) {
    const PrimeField& F = curve_field(curve);
    const std::uint64_t p = F.p();
    BigInt space = big_pow_ui(p, bounds.max_num_deg + bounds.max_den_deg + 2);
    if (space > opts.budget)
        throw BudgetExceeded("candidate bound p^" +
                             std::to_string(bounds.max_num_deg + bounds.max_den_deg + 2) +
                             " = " + big_to_dec(space) + " exceeds budget " +
                             big_to_dec(opts.budget));

    const std::uint64_t kappa = curve_exponent(curve);
    const std::vector<fp_t> unities = kth_roots_of_unity(kappa, F);
    SearchReport out;

    // x = 0 is its own candidate
    {
        DenseRational zero(DensePoly::zero(F), DensePoly::one(F));
        DenseRational h = rhs_dense(curve, zero, opts.dense_cap);
        if (h.num.is_zero()) {
            out.points.push_back(make_point(curve, zero, zero));
        } else if (auto y0 = is_kth_power_rational(h, kappa)) {
            for (fp_t z : unities) out.points.push_back(make_point(curve, zero, y0->scaled(z)));
        }
        out.candidates = 1;
    }

    BigInt wcount_b = monic_count(p, bounds.max_den_deg);
    BigInt ublk_b = BigInt(static_cast<unsigned long>(bounds.max_num_deg) + 1) *
                    static_cast<unsigned long>(p - 1);
    BigInt tasks_b = wcount_b * ublk_b;
    if (!big_fits_u64(tasks_b) || !big_fits_u64(big_pow_ui(p, bounds.max_num_deg)))
        throw BudgetExceeded("enumeration space does not fit in 64 bits");
    const std::uint64_t ublk = big_to_u64(ublk_b);
    const std::uint64_t tasks = big_to_u64(tasks_b);
    std::atomic<std::uint64_t> next{0};
    std::atomic<std::uint64_t> scanned{0};
    unsigned nthreads = std::max(1u, opts.threads);
    std::vector<std::vector<Hit>> found(nthreads);
    std::vector<std::exception_ptr> errors(nthreads);

    auto worker = [&](unsigned tid) {
        try {
            for (;;) {
                std::uint64_t task = next.fetch_add(1);
                if (task >= tasks) return;
                DensePoly w = decode_monic(F, bounds.max_den_deg, task / ublk);
                std::uint64_t rem = task % ublk;
                unsigned du = static_cast<unsigned>(rem / (p - 1));
                fp_t lead = static_cast<fp_t>(1 + rem % (p - 1));
                std::uint64_t vcount = 1;
                for (unsigned j = 0; j < du; ++j) vcount *= p;
                std::uint64_t local = 0;
                std::uint64_t sub = 0;
                for (std::uint64_t v = 0; v < vcount; ++v) {
                    DensePoly u = decode_numerator(F, du, lead, v);
                    if (w.degree() > 0 && poly_gcd(u, w).degree() != 0) continue;
                    ++local;
                    DenseRational x(u, w);
                    DenseRational h = rhs_dense(curve, x, opts.dense_cap);
                    if (h.num.is_zero()) {
                        found[tid].push_back(
                            {task, sub++, x, DenseRational(DensePoly::zero(F), DensePoly::one(F))});
                    } else if (auto y0 = is_kth_power_rational(h, kappa)) {
                        for (fp_t z : unities)
                            found[tid].push_back({task, sub++, x, y0->scaled(z)});
                    }
                }
                scanned.fetch_add(local);
            }
        } catch (...) {
            errors[tid] = std::current_exception();
            next.store(tasks);  // stop the other workers promptly
        }
    };

    if (nthreads == 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned i = 0; i < nthreads; ++i) pool.emplace_back(worker, i);
        for (auto& th : pool) th.join();
    }
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);

    std::vector<Hit> all;
    for (auto& part : found)
        for (auto& h : part) all.push_back(std::move(h));
    std::sort(all.begin(), all.end(), [](const Hit& a, const Hit& b) {
        return a.task != b.task ? a.task < b.task : a.sub < b.sub;
    });
    for (auto& h : all) out.points.push_back(make_point(curve, std::move(h.x), std::move(h.y)));
    out.candidates += scanned.load();
    return out;
}

ConfirmReport confirm_constructed(const CurveModel& curve, const PointSetReport& constructed,
                                  const SearchBounds& bounds, const SearchOptions& opts) {
    SearchReport oracle = exhaustive_search(curve, bounds, opts);
    ConfirmReport rep;
    for (std::size_t i = 0; i < constructed.points.size(); ++i) {
        const CurvePoint& pt = constructed.points[i];
        std::optional<DenseRational> xde;
        try {
            xde = pt.is_factored() ? fe_to_dense(pt.xf(), opts.dense_cap) : pt.xd();
        } catch (const CapExceeded&) {
            ++rep.out_of_bounds;  // cannot even expand: far outside any searched range
            continue;
        }
        const DenseRational& xd = *xde;
        if (xd.num.degree() > static_cast<int>(bounds.max_num_deg) ||
            xd.den.degree() > static_cast<int>(bounds.max_den_deg)) {
            ++rep.out_of_bounds;
            continue;
        }
        DenseRational yd = pt.is_factored() ? fe_to_dense(pt.yf(), opts.dense_cap) : pt.yd();
        ++rep.checked;
        bool hit = false;
        for (const CurvePoint& s : oracle.points) {
            if (s.xd() == xd && s.yd() == yd) {
                hit = true;
                break;
            }
        }
        if (!hit) {
            rep.ok = false;
            rep.missing.push_back(i);
            std::string xs = pt.is_factored() ? pt.xf().to_string() : xd.num.to_string();
            std::string ys = pt.is_factored() ? pt.yf().to_string() : yd.num.to_string();
            rep.detail.push_back("point " + std::to_string(i) + " (x = " + xs + ", y = " + ys +
                                 ") not found by exhaustive search");
        }
    }
    return rep;
}

}  // namespace ffp
