#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <json.hpp>

#include "tubal/bench.hpp"
#include "tubal/hilbert.hpp"
#include "tubal/hotsvd.hpp"
#include "tubal/selftest.hpp"
#include "tubal/tensor_file.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace tubal;

namespace {

std::vector<Index> parse_sizes(const std::string& csv, const char* what) {
    std::vector<Index> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const long v = std::stol(item);
        if (v < 1) throw CLI::ValidationError(std::string(what) + " entries must be >= 1");
        out.push_back(v);
    }
    if (out.empty()) throw CLI::ValidationError(std::string(what) + " must be non-empty");
    return out;
}

int cmd_hilbert_demo() {
    return run_hilbert_demo(std::cout).pass ? 0 : 1;
}

int cmd_bench_random(const std::string& dims_csv, int rank, double beta, Index trunc, int trials,
                     std::uint64_t seed, const std::string& out_path) {
    BenchConfig cfg;
    cfg.dims = parse_sizes(dims_csv, "--dims");
    cfg.rank = rank;
    cfg.beta = beta;
    cfg.trunc = trunc;
    cfg.trials = trials;
    cfg.seed = seed;
    if (cfg.dims.size() < 2) throw CLI::ValidationError("--dims needs at least I1 and p");
    for (size_t n = 0; n + 1 < cfg.dims.size(); ++n)
        if (trunc > cfg.dims[n]) throw CLI::ValidationError("--trunc exceeds a mode size");

    const BenchReport rep = run_bench(cfg);
    if (!out_path.empty()) {
        std::ofstream f(out_path);
        if (!f) throw CLI::ValidationError("cannot open " + out_path);
        f << to_csv(rep);
    }
    std::cout.precision(6);
    std::cout << "config " << rep.rows.front().config << " trunc " << trunc << " trials "
              << trials << "\n"
              << "tr-Hot-SVD      mean err " << rep.mean_err_tr << "  mean time "
              << rep.mean_time_tr_ms << " ms\n"
              << "seq-tr-Hot-SVD  mean err " << rep.mean_err_seq << "  mean time "
              << rep.mean_time_seq_ms << " ms\n";
    return 0;
}

int cmd_compress(const std::string& in_path, const std::string& trunc_csv,
                 const std::string& algo, const std::string& out_dir) {
    const TubalTensor a = read_tensor_file(in_path);
    const std::vector<Index> ranks = parse_sizes(trunc_csv, "--trunc");
    if (static_cast<int>(ranks.size()) != a.order())
        throw CLI::ValidationError("--trunc must list one rank per non-tubal mode");

    HotSvdFactors f = (algo == "tr") ? tr_hotsvd(a, ranks) : seq_tr_hotsvd(a, ranks);
    const double norm = frobenius_norm(a);
    const double err = frobenius_norm(a - reconstruct(f)) / norm;
    const double bound = error_bound(f) / norm;

    fs::create_directories(out_dir);
    write_tensor_file((fs::path(out_dir) / "core.tten").string(), f.core);
    for (int n = 0; n < a.order(); ++n)
        write_tensor_file((fs::path(out_dir) / ("factor" + std::to_string(n) + ".tten")).string(),
                          as_tensor(f.factors[n]));

    json manifest;
    manifest["algo"] = algo;
    manifest["order"] = a.order();
    manifest["dims"] = a.dims();
    manifest["p"] = a.p();
    manifest["trunc"] = ranks;
    manifest["err"] = err;
    manifest["bound"] = bound;
    std::ofstream mf(fs::path(out_dir) / "manifest.json");
    mf << manifest.dump(2) << "\n";

    std::cout.precision(12);
    std::cout << "relative reconstruction error " << err << " (bound " << bound << ")\n";
    return 0;
}

int cmd_decompress(const std::string& in_dir, const std::string& out_path) {
    std::ifstream mf(fs::path(in_dir) / "manifest.json");
    if (!mf) throw CLI::ValidationError("missing manifest.json in " + in_dir);
    json manifest;
    mf >> manifest;

    HotSvdFactors f;
    f.core = read_tensor_file((fs::path(in_dir) / "core.tten").string());
    const int order = manifest["order"].get<int>();
    for (int n = 0; n < order; ++n)
        f.factors.push_back(as_matrix(read_tensor_file(
            (fs::path(in_dir) / ("factor" + std::to_string(n) + ".tten")).string())));

    const TubalTensor rec = reconstruct(f);
    write_tensor_file(out_path, rec);
    std::cout.precision(12);
    std::cout << "reconstruction written to " << out_path << "\n"
              << "manifest relative error " << manifest["err"].get<double>() << " (bound "
              << manifest["bound"].get<double>() << ")\n";
    return 0;
}

int cmd_selftest(const std::string& perturb) {
    return report_selftest(run_selftest(perturb), std::cout) ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Tubal tensor calculus: Hot-SVD benchmarks and compression"};
    app.require_subcommand(1);

    app.add_subcommand("hilbert-demo", "Hot-SVD diagnostics on the 2x2x2x2 Hilbert tensor");

    auto* bench = app.add_subcommand("bench-random", "Random low-rank recovery benchmark");
    std::string dims_csv, out_path;
    int rank = 5, trials = 50;
    double beta = 0.1;
    Index trunc = 5;
    std::uint64_t seed = 0;
    bench->add_option("--dims", dims_csv, "Comma-separated sizes I1,...,IN,p (last = tubal)")
        ->required();
    bench->add_option("--rank", rank, "Rank R of the planted signal");
    bench->add_option("--beta", beta, "Noise level");
    bench->add_option("--trunc", trunc, "Core size for every non-tubal mode")->required();
    bench->add_option("--trials", trials, "Number of random instances");
    bench->add_option("--seed", seed, "PRNG seed (required for reproducibility)")->required();
    bench->add_option("--out", out_path, "CSV output path");

    auto* compress = app.add_subcommand("compress", "Truncated Hot-SVD compression of a .tten file");
    std::string in_path, trunc_csv, algo = "seq", out_dir;
    compress->add_option("input", in_path, "Input .tten file")->required();
    compress->add_option("--trunc", trunc_csv, "Comma-separated ranks r1,...,rN")->required();
    compress->add_option("--algo", algo, "tr or seq")->check(CLI::IsMember({"tr", "seq"}));
    compress->add_option("--out", out_dir, "Output factor directory")->required();

    auto* decompress = app.add_subcommand("decompress", "Reconstruct from a factor directory");
    std::string factor_dir, recon_path;
    decompress->add_option("input", factor_dir, "Factor directory")->required();
    decompress->add_option("--out", recon_path, "Output .tten path")->required();

    auto* selftest = app.add_subcommand("selftest", "Run the invariant suite at small sizes");
    std::string perturb;
    selftest->add_option("--perturb", perturb, "Sabotage the named check (negative control)")
        ->group("");  // hidden

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand("hilbert-demo")) return cmd_hilbert_demo();
        if (app.got_subcommand(bench))
            return cmd_bench_random(dims_csv, rank, beta, trunc, trials, seed, out_path);
        if (app.got_subcommand(compress)) return cmd_compress(in_path, trunc_csv, algo, out_dir);
        if (app.got_subcommand(decompress)) return cmd_decompress(factor_dir, recon_path);
        if (app.got_subcommand(selftest)) return cmd_selftest(perturb);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
