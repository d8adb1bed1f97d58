#include "tubal/bench.hpp"

#include <chrono>
#include <sstream>

#include "tubal/errors.hpp"
#include "tubal/hotsvd.hpp"
#include "tubal/rng.hpp"

namespace tubal {

namespace {

double now_ms() {
    using clock = std::chrono::steady_clock;
    return std::chrono::duration<double, std::milli>(clock::now().time_since_epoch()).count();
}

std::string dims_label(const std::vector<Index>& dims) {
    std::string s;
    for (size_t i = 0; i < dims.size(); ++i) {
        if (i) s += 'x';
        s += std::to_string(dims[i]);
    }
    return s;
}

std::string fmt6(double v) {
    std::ostringstream os;
    os.precision(6);
    os << v;
    return os.str();
}

} // namespace

void make_bench_instance(const BenchConfig& cfg, int trial, TubalTensor& signal,
                         TubalTensor& observed) {
    if (cfg.dims.size() < 2) throw dimension_error("bench needs at least 2 dims (incl. p)");
    const Index p = cfg.dims.back();
    std::vector<Index> spatial(cfg.dims.begin(), cfg.dims.end() - 1);
    auto transform = Transform::dft(p);

    Rng rng(cfg.seed, static_cast<std::uint64_t>(trial));

    // Factor vectors for all axes including the tubal one, drawn mode by mode.
    const size_t naxes = cfg.dims.size();
    std::vector<Eigen::MatrixXd> factors(naxes);
    for (size_t n = 0; n < naxes; ++n) {
        factors[n].resize(cfg.dims[n], cfg.rank);
        for (int r = 0; r < cfg.rank; ++r)
            for (Index i = 0; i < cfg.dims[n]; ++i) factors[n](i, r) = rng.gaussian();
    }

    Index total = 1;
    for (Index d : cfg.dims) total *= d;
    Eigen::VectorXd sig = Eigen::VectorXd::Zero(total);
    std::vector<Index> idx(naxes, 0);
    for (Index flat = 0; flat < total; ++flat) {
        double v = 0;
        for (int r = 0; r < cfg.rank; ++r) {
            double prod = 1;
            for (size_t n = 0; n < naxes; ++n) prod *= factors[n](idx[n], r);
            v += prod;
        }
        sig(flat) = v;
        for (size_t n = 0; n < naxes; ++n) {
            if (++idx[n] < cfg.dims[n]) break;
            idx[n] = 0;
        }
    }
    sig /= sig.norm();

    Eigen::VectorXd noise(total);
    for (Index i = 0; i < total; ++i) noise(i) = rng.gaussian();
    noise *= cfg.beta / noise.norm();

    signal = TubalTensor(spatial, transform, sig.cast<Complex>(), true);
    observed = TubalTensor(spatial, transform, (sig + noise).cast<Complex>(), true);
}

BenchReport run_bench(const BenchConfig& cfg) {
    const std::string label = dims_label(cfg.dims);
    const std::vector<Index> ranks(cfg.dims.size() - 1, cfg.trunc);

    BenchReport rep;
    for (int t = 0; t < cfg.trials; ++t) {
        TubalTensor signal, observed;
        make_bench_instance(cfg, t, signal, observed);

        for (const char* algo : {"tr", "seq"}) {
            const double t0 = now_ms();
            HotSvdFactors f = (algo[0] == 't') ? tr_hotsvd(observed, ranks)
                                               : seq_tr_hotsvd(observed, ranks);
            TubalTensor rec = reconstruct(f);
            const double elapsed = now_ms() - t0;

            BenchRow row;
            row.config = label;
            row.algo = algo;
            row.trunc = cfg.trunc;
            row.err = frobenius_norm(signal - rec);
            // error_bound caps ||observed - rec||; the extra beta covers the
            // distance from the observed tensor back to the unit-norm signal.
            row.bound = error_bound(f) + cfg.beta;
            row.time_ms = elapsed;
            if (algo[0] == 't') {
                rep.mean_err_tr += row.err;
                rep.mean_time_tr_ms += elapsed;
            } else {
                rep.mean_err_seq += row.err;
                rep.mean_time_seq_ms += elapsed;
            }
            rep.rows.push_back(std::move(row));
        }
    }
    const double n = std::max(cfg.trials, 1);
    rep.mean_err_tr /= n;
    rep.mean_err_seq /= n;
    rep.mean_time_tr_ms /= n;
    rep.mean_time_seq_ms /= n;
    return rep;
}

std::string to_csv(const BenchReport& report) {
    std::string out = "config,algo,trunc,err,bound,time_ms\n";
    auto line = [&](const std::string& config, const std::string& algo, Index trunc, double err,
                    double bound, double time_ms) {
        out += config + ',' + algo + ',' + std::to_string(trunc) + ',' + fmt6(err) + ',' +
               fmt6(bound) + ',' + fmt6(time_ms) + '\n';
    };
    for (const auto& r : report.rows) line(r.config, r.algo, r.trunc, r.err, r.bound, r.time_ms);
    if (!report.rows.empty()) {
        const auto& r0 = report.rows.front();
        double bound_tr = 0, bound_seq = 0;
        int trials = 0;
        for (const auto& r : report.rows) {
            if (r.algo == "tr") {
                bound_tr += r.bound;
                ++trials;
            } else {
                bound_seq += r.bound;
            }
        }
        line(r0.config, "tr_mean", r0.trunc, report.mean_err_tr, bound_tr / trials,
             report.mean_time_tr_ms);
        line(r0.config, "seq_mean", r0.trunc, report.mean_err_seq, bound_seq / trials,
             report.mean_time_seq_ms);
    }
    return out;
}

} // namespace tubal
