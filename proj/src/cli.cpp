#include "tgr/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

#include "tgr/errors.hpp"
#include "tgr/foremost.hpp"
#include "tgr/hardness.hpp"
#include "tgr/io.hpp"
#include "tgr/metrics.hpp"
#include "tgr/oracle.hpp"
#include "tgr/ranged.hpp"

namespace tgr::cli {

namespace {

// Thrown for option combinations CLI11 cannot express.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Metric parse_metric(const std::string& s) {
    if (s == "foremost") return Metric::Foremost;
    if (s == "fastest") return Metric::Fastest;
    if (s == "shortest") return Metric::Shortest;
    throw UsageError("unknown metric '" + s + "' (expected foremost, fastest or shortest)");
}

unsigned thread_count(int flag) {
    if (flag > 0) return static_cast<unsigned>(flag);
    if (const char* env = std::getenv("TGR_THREADS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (*end != '\0' || v < 1) throw UsageError(std::string("TGR_THREADS='") + env + "' is not a positive integer");
        return static_cast<unsigned>(v);
    }
    return 1;
}

// Writes the primary artifact to `path`, or to `out` when path is empty.
void emit(const std::string& path, std::ostream& out, const std::function<void(std::ostream&)>& w) {
    if (path.empty()) {
        w(out);
        return;
    }
    std::ofstream f(path);
    if (!f) throw ValidationError("cannot open '" + path + "' for writing");
    w(f);
    if (!f) throw ValidationError("failed writing '" + path + "'");
}

void result_line(std::ostream& rep, bool yes, std::size_t labels) {
    rep << "RESULT " << (yes ? "YES" : "NO") << " labels=" << labels << '\n';
}

void report_mismatches(std::ostream& rep, const VerifyReport& r) {
    const std::size_t shown = std::min<std::size_t>(r.mismatches.size(), 20);
    for (std::size_t i = 0; i < shown; ++i) {
        const Mismatch& m = r.mismatches[i];
        rep << "  (" << m.u << "," << m.v << "): expected " << m.expected << ", got " << m.got << '\n';
    }
    if (r.mismatches.size() > shown)
        rep << "  ... " << r.mismatches.size() - shown << " more\n";
}

struct Common {
    std::string output;
    bool strict = false;
    bool non_strict = false;
    int threads = 0;

    Semantics semantics() const {
        if (strict && non_strict) throw UsageError("--strict and --non-strict are exclusive");
        return non_strict ? Semantics::NonStrict : Semantics::Strict;
    }
};

void add_semantics(CLI::App* app, Common& c) {
    app->add_flag("--strict", c.strict, "strictly increasing labels along paths (default)");
    app->add_flag("--non-strict", c.non_strict, "non-decreasing labels along paths");
}

class Runner {
public:
    Runner(std::ostream& out, std::ostream& err) : out_(out), err_(err) {}

    int run(const std::vector<std::string>& args) {
        CLI::App app{"temporal graph realization toolkit", "tgr"};
        app.require_subcommand(1);
        app.fallthrough();
        app.add_option("--threads", c_.threads, "worker threads for metric computations (default TGR_THREADS or 1)")
            ->check(CLI::PositiveNumber);

        std::function<int()> action;

        // realize
        auto* realize = app.add_subcommand("realize", "realize a distance matrix");
        std::string r_metric = "foremost", r_matrix, r_prescribed;
        long long r_period = 0;
        bool r_naive = false;
        realize->add_option("--metric", r_metric, "foremost, or shortest together with --period");
        add_semantics(realize, c_);
        realize->add_option("--period", r_period, "period of a periodic realization")->check(CLI::PositiveNumber);
        realize->add_option("--prescribed", r_prescribed, "static graph (.g) the realization must use");
        realize->add_option("-o,--output", c_.output, "output .tg (default stdout)");
        realize->add_flag("--naive", r_naive, "skip the interval index");
        realize->add_option("matrix", r_matrix, "input .dm")->required();
        realize->callback([&] { action = [&] { return do_realize(r_metric, r_matrix, r_period, r_prescribed, r_naive); }; });

        // realize-ranged
        auto* ranged = app.add_subcommand("realize-ranged", "realize a ranged matrix (strict foremost)");
        std::string rr_matrix, rr_determined;
        int rr_max_k = 20;
        ranged->add_option("-o,--output", c_.output, "output .tg (default stdout)");
        ranged->add_option("--determined", rr_determined, "also write the chosen determination (.dm)");
        ranged->add_option("--max-k", rr_max_k, "refuse more undetermined entries than this")->check(CLI::Range(0, 30));
        ranged->add_option("matrix", rr_matrix, "input .rm")->required();
        ranged->callback([&] { action = [&] { return do_realize_ranged(rr_matrix, rr_determined, rr_max_k); }; });

        // metric
        auto* metric = app.add_subcommand("metric", "compute a metric matrix");
        std::string m_metric, m_graph;
        long long m_horizon = 0;
        metric->add_option("--metric", m_metric, "foremost, fastest or shortest")->required();
        add_semantics(metric, c_);
        metric->add_option("--horizon", m_horizon, "unrolling horizon for periodic graphs")->check(CLI::PositiveNumber);
        metric->add_option("-o,--output", c_.output, "output .dm (default stdout)");
        metric->add_option("graph", m_graph, "input .tg")->required();
        metric->callback([&] { action = [&] { return do_metric(m_metric, m_graph, m_horizon); }; });

        // verify
        auto* verify = app.add_subcommand("verify", "check a temporal graph against a matrix");
        std::string v_graph, v_matrix, v_metric, v_ranged;
        verify->add_option("--metric", v_metric, "foremost, fastest or shortest")->required();
        add_semantics(verify, c_);
        verify->add_option("--ranged", v_ranged, "ranged matrix (.rm); foremost values must fall inside");
        verify->add_option("graph", v_graph, "input .tg")->required();
        verify->add_option("matrix", v_matrix, "input .dm");
        verify->callback([&] { action = [&] { return do_verify(v_graph, v_matrix, v_metric, v_ranged); }; });

        // oracle
        auto* oracle = app.add_subcommand("oracle", "exhaustive search (small instances only)");
        std::string o_kind, o_file;
        std::uint64_t o_budget = 0;
        double o_seconds = 0;
        oracle->add_option("kind", o_kind, "foremost, single-label or ranged")->required()
            ->check(CLI::IsMember({"foremost", "single-label", "ranged"}));
        oracle->add_option("file", o_file, "input .dm (.rm for ranged)")->required();
        oracle->add_option("--budget", o_budget, "maximum search nodes")->check(CLI::PositiveNumber);
        oracle->add_option("--time-cap", o_seconds, "wall-clock cap in seconds")->check(CLI::PositiveNumber);
        add_semantics(oracle, c_);
        oracle->add_option("-o,--output", c_.output, "certificate .tg (default stdout)");
        oracle->callback([&] { action = [&] { return do_oracle(o_kind, o_file, o_budget, o_seconds); }; });

        // gen
        auto* gen = app.add_subcommand("gen", "instance generators");
        gen->require_subcommand(1);
        auto* lb = gen->add_subcommand("lbfamily", "matrix family needing quadratically many labels");
        int lb_n = 0;
        std::string lb_graph;
        lb->add_option("N", lb_n, "number of vertices (>= 2)")->required();
        lb->add_option("-o,--output", c_.output, "output .dm (default stdout)");
        lb->add_option("--graph", lb_graph, "also write the generating temporal graph (.tg)");
        lb->callback([&] { action = [&] { return do_gen_lb(lb_n, lb_graph); }; });
        auto* mcc = gen->add_subcommand("mcc", "random multicolored-clique instance with biclique structure");
        int mcc_k = 0, mcc_size = 0;
        bool mcc_plant = false;
        std::uint64_t mcc_seed = 1;
        std::string mcc_clique;
        mcc->add_option("k", mcc_k, "number of classes (>= 2)")->required();
        mcc->add_option("size", mcc_size, "vertices per class (>= 1)")->required();
        mcc->add_flag("--plant", mcc_plant, "plant a multicolored clique");
        mcc->add_option("--seed", mcc_seed, "random seed");
        mcc->add_option("-o,--output", c_.output, "output .mcc (default stdout)");
        mcc->add_option("--clique", mcc_clique, "write the planted clique (.clq)");
        mcc->callback([&] { action = [&] { return do_gen_mcc(mcc_k, mcc_size, mcc_plant, mcc_seed, mcc_clique); }; });

        // reduce
        auto* reduce = app.add_subcommand("reduce", "hardness constructions");
        reduce->require_subcommand(1);
        std::string red_in, red_witness, red_witness_out;
        bool red_periodic = false;
        for (const char* kind : {"sat2foremost1", "sat2ranged", "sat2shortest", "mcc2fastest"}) {
            const std::string k = kind;
            const bool is_mcc = k == "mcc2fastest";
            auto* sub = reduce->add_subcommand(k, is_mcc ? "multicolored clique to fastest" : "SAT to " + k.substr(4));
            sub->add_option("input", red_in, is_mcc ? "input .mcc" : "input DIMACS .cnf")->required();
            sub->add_option("--witness", red_witness, is_mcc ? "clique file (.clq)" : "assignment file (.asg)");
            sub->add_option("--witness-out", red_witness_out, "write the witness temporal graph (.tg)");
            sub->add_option("-o,--output", c_.output, "output matrix (default stdout)");
            if (is_mcc) sub->add_flag("--periodic", red_periodic, "emit the periodic variant");
            sub->callback([&, k] { action = [&, k] { return do_reduce(k, red_in, red_witness, red_witness_out, red_periodic); }; });
        }

        std::vector<std::string> rev(args.rbegin(), args.rend());
        try {
            app.parse(rev);
        } catch (const CLI::ParseError& e) {
            if (e.get_exit_code() == 0) {
                out_ << app.help();
                return kYes;
            }
            err_ << "tgr: " << e.what() << '\n';
            return kUsage;
        }
        try {
            threads_ = thread_count(c_.threads);
            return action();
        } catch (const UsageError& e) {
            err_ << "tgr: " << e.what() << '\n';
        } catch (const GuardExceeded& e) {
            err_ << "tgr: " << e.what() << '\n';
        } catch (const ValidationError& e) {
            err_ << "tgr: " << e.what() << '\n';
        } catch (const std::exception& e) {
            err_ << "tgr: internal error: " << e.what() << '\n';
        }
        return kUsage;
    }

private:
    // Report text goes to stdout unless stdout already carries the artifact.
    std::ostream& rep() { return c_.output.empty() ? err_ : out_; }

    MetricOptions metric_options(std::optional<Time> horizon = std::nullopt) const {
        MetricOptions o;
        o.threads = threads_;
        o.horizon = horizon;
        return o;
    }

    int do_realize(const std::string& metric_name, const std::string& path, long long period,
                   const std::string& prescribed, bool naive) {
        const Metric metric = parse_metric(metric_name);
        const Semantics sem = c_.semantics();
        if (metric == Metric::Fastest)
            throw UsageError("realize supports --metric foremost, or shortest with --period");
        if (metric == Metric::Shortest && period == 0)
            throw UsageError("--metric shortest requires --period (aperiodic shortest realization is NP-hard)");
        if (period > 0 && !prescribed.empty())
            throw UsageError("--period and --prescribed cannot be combined");
        if (period > 0 && metric == Metric::Foremost && sem == Semantics::NonStrict)
            throw UsageError("periodic realization is strict only");
        if (naive && (period > 0 || !prescribed.empty()))
            throw UsageError("--naive applies to the unrestricted aperiodic realizers only");

        const DistanceMatrix d = load_dm(path);
        std::optional<TemporalGraph> g;
        ForemostOptions fo;
        fo.accel = naive ? Acceleration::Naive : Acceleration::Indexed;
        if (metric == Metric::Shortest) {
            g = realize_periodic_shortest(d, period);
        } else if (period > 0) {
            g = realize_periodic_foremost(d, period);
        } else if (!prescribed.empty()) {
            const StaticGraph gp = load_graph(prescribed);
            if (gp.size() != d.size())
                throw ValidationError(prescribed + ": graph has " + std::to_string(gp.size()) +
                                      " vertices, matrix has " + std::to_string(d.size()));
            g = sem == Semantics::Strict ? realize_prescribed_foremost(d, gp)
                                         : realize_prescribed_ns_foremost(d, gp);
        } else {
            g = sem == Semantics::Strict ? realize_foremost(d, fo) : realize_ns_foremost(d, fo);
        }

        std::ostream& r = rep();
        r << "realize: " << to_string(metric) << ' ' << to_string(sem) << ", n=" << d.size();
        if (period > 0) r << ", period=" << period;
        r << '\n';
        if (!g) {
            r << "not realizable\n";
            result_line(r, false, 0);
            return kNo;
        }
        const VerifyReport check = verify_realization(*g, d, metric, sem, metric_options());
        if (!check.equal) throw std::logic_error("realizer output failed verification");
        emit(c_.output, out_, [&](std::ostream& o) { write_tg(o, *g); });
        r << "realizable: " << check.label_count << " labels, at most " << check.max_labels_per_edge
          << " per edge, verified\n";
        result_line(r, true, check.label_count);
        return kYes;
    }

    int do_realize_ranged(const std::string& path, const std::string& determined, int max_k) {
        const RangeMatrix d = load_rm(path);
        RangedOptions opt;
        opt.max_undetermined = max_k;
        auto res = realize_ranged_foremost(d, opt);
        std::ostream& r = rep();
        r << "realize-ranged: n=" << d.size() << ", undetermined=" << d.undetermined().size() << '\n';
        if (!res) {
            r << "not realizable\n";
            result_line(r, false, 0);
            return kNo;
        }
        const VerifyReport check = verify_ranged(res->graph, d, Semantics::Strict, metric_options());
        if (!check.equal) throw std::logic_error("ranged realization failed verification");
        emit(c_.output, out_, [&](std::ostream& o) { write_tg(o, res->graph); });
        if (!determined.empty()) emit(determined, out_, [&](std::ostream& o) { write_dm(o, res->determined); });
        r << "realizable: " << check.label_count << " labels, verified inside all ranges\n";
        result_line(r, true, check.label_count);
        return kYes;
    }

    int do_metric(const std::string& metric_name, const std::string& path, long long horizon) {
        const Metric metric = parse_metric(metric_name);
        const Semantics sem = c_.semantics();
        const TemporalGraph g = load_tg(path);
        if (horizon > 0 && !g.periodic()) throw UsageError("--horizon applies to periodic graphs only");
        const DistanceMatrix d =
            metric_matrix(g, metric, sem, metric_options(horizon > 0 ? std::optional<Time>(horizon) : std::nullopt));
        emit(c_.output, out_, [&](std::ostream& o) { write_dm(o, d); });
        return kYes;
    }

    int do_verify(const std::string& graph, const std::string& matrix, const std::string& metric_name,
                  const std::string& ranged) {
        const Metric metric = parse_metric(metric_name);
        const Semantics sem = c_.semantics();
        if (matrix.empty() == ranged.empty())
            throw UsageError("verify needs exactly one of a matrix file or --ranged");
        if (!ranged.empty() && metric != Metric::Foremost)
            throw UsageError("--ranged verification is defined for the foremost metric only");
        const TemporalGraph g = load_tg(graph);
        VerifyReport r;
        int n = 0;
        if (!ranged.empty()) {
            const RangeMatrix rm = load_rm(ranged);
            n = rm.size();
            if (n == g.size()) r = verify_ranged(g, rm, sem, metric_options());
        } else {
            const DistanceMatrix d = load_dm(matrix);
            n = d.size();
            if (n == g.size()) r = verify_realization(g, d, metric, sem, metric_options());
        }
        if (n != g.size())
            throw ValidationError("graph has " + std::to_string(g.size()) + " vertices, matrix has " +
                                  std::to_string(n));
        out_ << "verify: " << to_string(metric) << ' ' << to_string(sem) << ", n=" << n << '\n';
        if (r.equal) {
            out_ << "equal: " << r.label_count << " labels, at most " << r.max_labels_per_edge << " per edge\n";
        } else {
            out_ << r.mismatches.size() << " mismatching entries\n";
            report_mismatches(out_, r);
        }
        result_line(out_, r.equal, r.label_count);
        return r.equal ? kYes : kNo;
    }

    int do_oracle(const std::string& kind, const std::string& path, std::uint64_t nodes, double seconds) {
        const Semantics sem = c_.semantics();
        SearchBudget b;
        if (nodes > 0) b.max_nodes = nodes;
        if (seconds > 0) b.time_cap = std::chrono::milliseconds(static_cast<long long>(seconds * 1000));
        if (kind != "foremost" && sem == Semantics::NonStrict)
            throw UsageError("oracle " + kind + " is strict only");
        Verdict v;
        std::optional<TemporalGraph> cert;
        std::ostream& r = rep();
        if (kind == "ranged") {
            const RangeMatrix d = load_rm(path);
            auto res = oracle_ranged(d, b);
            v = res.verdict;
            cert = std::move(res.certificate);
            r << "oracle ranged: " << res.determinations << " determinations tried\n";
        } else {
            const DistanceMatrix d = load_dm(path);
            auto res = kind == "foremost" ? oracle_foremost_realizable(d, sem, b) : oracle_single_label_foremost(d, b);
            v = res.verdict;
            cert = std::move(res.certificate);
            r << "oracle " << kind << ": " << res.nodes << " search nodes\n";
        }
        r << "verdict: " << to_string(v) << '\n';
        if (v == Verdict::BudgetExceeded) return kBudget;
        if (v == Verdict::No) {
            result_line(r, false, 0);
            return kNo;
        }
        emit(c_.output, out_, [&](std::ostream& o) { write_tg(o, *cert); });
        result_line(r, true, cert->label_count());
        return kYes;
    }

    int do_gen_lb(int n, const std::string& graph) {
        auto [g, d] = gen_lower_bound_family(n);
        emit(c_.output, out_, [&](std::ostream& o) { write_dm(o, d); });
        if (!graph.empty()) emit(graph, out_, [&](std::ostream& o) { write_tg(o, g); });
        return kYes;
    }

    int do_gen_mcc(int k, int size, bool plant, std::uint64_t seed, const std::string& clique) {
        if (!clique.empty() && !plant) throw UsageError("--clique requires --plant");
        const MccInstance inst = gen_mcc_instance(k, size, plant, seed);
        emit(c_.output, out_, [&](std::ostream& o) { write_mcc(o, inst); });
        if (!clique.empty()) emit(clique, out_, [&](std::ostream& o) { write_clique(o, *inst.clique); });
        return kYes;
    }

    int do_reduce(const std::string& kind, const std::string& in, const std::string& witness,
                  const std::string& witness_out, bool periodic) {
        if (!witness_out.empty() && witness.empty()) throw UsageError("--witness-out requires --witness");
        std::ostream& r = rep();
        std::optional<TemporalGraph> w;
        VerifyReport check;
        if (kind == "mcc2fastest") {
            const MccInstance inst = load_mcc(in);
            DistanceMatrix d = reduce_mcc_to_fastest(inst);
            Time period = 0;
            if (periodic) std::tie(d, period) = lift_fastest_to_periodic(d);
            emit(c_.output, out_, [&](std::ostream& o) { write_dm(o, d); });
            r << "reduce mcc2fastest: n=" << d.size();
            if (periodic) r << ", period=" << period;
            r << '\n';
            if (witness.empty()) return kYes;
            const TemporalGraph flat = witness_fastest(inst, load_clique(witness));
            if (periodic) {
                TemporalGraph pg(flat.size(), period);
                for (const auto& [e, ls] : flat.edges())
                    for (Time t : ls) pg.add_label(e.u, e.v, t);
                w = std::move(pg);
            } else {
                w = flat;
            }
            check = verify_realization(*w, d, Metric::Fastest, Semantics::Strict, metric_options());
        } else {
            const CnfFormula f = load_cnf(in);
            std::optional<Assignment> a;
            if (!witness.empty()) a = load_assignment(witness, f.num_vars);
            if (kind == "sat2ranged") {
                const RangeMatrix d = reduce_sat_to_ranged(f);
                emit(c_.output, out_, [&](std::ostream& o) { write_rm(o, d); });
                r << "reduce sat2ranged: n=" << d.size() << '\n';
                if (!a) return kYes;
                w = witness_ranged(f, *a);
                check = verify_ranged(*w, d, Semantics::Strict, metric_options());
            } else if (kind == "sat2foremost1") {
                const DistanceMatrix d = reduce_sat_to_foremost_single(f);
                emit(c_.output, out_, [&](std::ostream& o) { write_dm(o, d); });
                r << "reduce sat2foremost1: n=" << d.size() << '\n';
                if (!a) return kYes;
                w = witness_foremost_single(f, *a);
                check = verify_realization(*w, d, Metric::Foremost, Semantics::Strict, metric_options());
            } else {
                const DistanceMatrix d = reduce_sat_to_shortest(f);
                emit(c_.output, out_, [&](std::ostream& o) { write_dm(o, d); });
                r << "reduce sat2shortest: n=" << d.size() << '\n';
                if (!a) return kYes;
                w = witness_shortest(f, *a);
                check = verify_realization(*w, d, Metric::Shortest, Semantics::Strict, metric_options());
                if (check.equal) {
                    const VerifyReport ns = verify_realization(*w, d, Metric::Shortest, Semantics::NonStrict, metric_options());
                    if (!ns.equal) {
                        r << "witness fails under non-strict semantics\n";
                        check = ns;
                    }
                }
            }
        }
        if (!witness_out.empty()) emit(witness_out, out_, [&](std::ostream& o) { write_tg(o, *w); });
        if (check.equal) {
            r << "witness verified: " << check.label_count << " labels, at most " << check.max_labels_per_edge
              << " per edge\n";
        } else {
            r << "witness does not verify: " << check.mismatches.size() << " mismatching entries\n";
            report_mismatches(r, check);
        }
        result_line(r, check.equal, check.label_count);
        return check.equal ? kYes : kNo;
    }

    std::ostream& out_;
    std::ostream& err_;
    Common c_;
    unsigned threads_ = 1;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    return Runner(out, err).run(args);
}

}  // namespace tgr::cli
