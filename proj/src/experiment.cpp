#include "romsched/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <thread>

#include "romsched/local_search.hpp"

namespace romsched {

const char* algorithm_name(Algorithm a) {
    switch (a) {
        case Algorithm::Dga: return "dga";
        case Algorithm::Rga: return "rga";
        case Algorithm::Mmas: return "mmas";
        case Algorithm::MmasLocal: return "mmas-local";
    }
    return "?";
}

bool parse_algorithm(const std::string& s, Algorithm& out) {
    if (s == "dga") out = Algorithm::Dga;
    else if (s == "rga") out = Algorithm::Rga;
    else if (s == "mmas") out = Algorithm::Mmas;
    else if (s == "mmas-local") out = Algorithm::MmasLocal;
    else return false;
    return true;
}

namespace {

std::string fmt_double(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

void write_history_csv(const std::string& path, const std::vector<GenerationRecord>& history) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open " + path + " for writing");
    out << "generation,v1,v2,u\n";
    for (const GenerationRecord& g : history)
        out << g.generation << "," << fmt_double(g.best_so_far.v1) << ","
            << fmt_double(g.best_so_far.v2) << "," << fmt_double(g.best_so_far.u) << "\n";
}

void write_swap_log(const std::string& path, const std::vector<SwapRecord>& log) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open " + path + " for writing");
    out << "delivery,reclaimer,index,dv2,du\n";
    for (const SwapRecord& s : log)
        out << s.delivery << "," << s.reclaimer << "," << s.index << ","
            << fmt_double(s.dv2) << "," << fmt_double(s.du) << "\n";
}

}  // namespace

Schedule solve(const Instance& inst, const SolverParams& params) {
    std::ofstream trace_stream;
    std::ostream* trace = nullptr;
    if (!params.trace_log.empty()) {
        trace_stream.open(params.trace_log, std::ios::binary);
        if (!trace_stream) throw IoError("cannot open " + params.trace_log + " for writing");
        trace = &trace_stream;
    }

    switch (params.algorithm) {
        case Algorithm::Dga: {
            DgaPolicy policy;
            return construct(inst, policy, params.seed, trace);
        }
        case Algorithm::Rga: {
            RgaPolicy policy(params.greedy);
            return construct(inst, policy, params.seed, trace);
        }
        case Algorithm::Mmas: {
            ColonyResult res = run_colony(inst, params.mmas, params.seed);
            if (!params.history_csv.empty()) write_history_csv(params.history_csv, res.history);
            return std::move(res.best);
        }
        case Algorithm::MmasLocal: {
            ColonyResult res = run_colony(inst, params.mmas, params.seed);
            if (!params.history_csv.empty()) write_history_csv(params.history_csv, res.history);
            std::vector<SwapRecord> log;
            Schedule improved =
                improve(inst, res.best, params.swap_log.empty() ? nullptr : &log);
            if (!params.swap_log.empty()) write_swap_log(params.swap_log, log);
            return improved;
        }
    }
    throw Error("solve: unknown algorithm");
}

double success_rate(std::span<const RunResult> runs) {
    int total = 0, hits = 0;
    for (const RunResult& r : runs) {
        if (!r.ok) continue;
        ++total;
        if (r.objective.v1 == 0.0) ++hits;
    }
    if (total == 0) return 0.0;
    return 100.0 * double(hits) / double(total);
}

ExperimentResult run_experiment(std::span<const NamedInstance> instances,
                                std::span<const Algorithm> algorithms,
                                const SolverParams& base,
                                const ExperimentConfig& cfg,
                                const std::string& csv_path,
                                const std::string& summary_path) {
    if (cfg.runs < 1) throw Error("experiment: runs must be >= 1");

    struct Task {
        size_t inst_idx, alg_idx;
        int run;
    };
    std::vector<Task> tasks;
    auto runs_for = [&](Algorithm a) { return a == Algorithm::Dga ? 1 : cfg.runs; };
    for (size_t ii = 0; ii < instances.size(); ++ii)
        for (size_t ai = 0; ai < algorithms.size(); ++ai)
            for (int run = 0; run < runs_for(algorithms[ai]); ++run)
                tasks.push_back({ii, ai, run});

    std::vector<std::vector<RunResult>> results(instances.size() * algorithms.size());
    for (size_t ii = 0; ii < instances.size(); ++ii)
        for (size_t ai = 0; ai < algorithms.size(); ++ai)
            results[ii * algorithms.size() + ai].resize(size_t(runs_for(algorithms[ai])));

    std::atomic<size_t> cursor{0};
    auto worker = [&]() {
        for (;;) {
            size_t t = cursor.fetch_add(1);
            if (t >= tasks.size()) return;
            const Task& task = tasks[t];
            const Instance& inst = *instances[task.inst_idx].instance;

            SolverParams p = base;
            p.algorithm = algorithms[task.alg_idx];
            // seeds pair runs across algorithms: mmas-local run i replays
            // mmas run i's colony before the local search
            p.seed = mix_seed(cfg.master_seed, uint64_t(task.inst_idx), uint64_t(task.run));
            p.history_csv.clear();
            p.trace_log.clear();
            p.swap_log.clear();

            RunResult rr;
            rr.run = task.run;
            rr.seed = p.seed;
            auto t0 = std::chrono::steady_clock::now();
            try {
                Schedule s = solve(inst, p);
                rr.objective = evaluate_schedule(inst, s);
                rr.ok = true;
            } catch (const Error& e) {
                rr.ok = false;
                rr.error = e.what();
            }
            auto t1 = std::chrono::steady_clock::now();
            rr.wall_ms = cfg.include_timing
                             ? std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count()
                             : 0;
            results[task.inst_idx * algorithms.size() + task.alg_idx][size_t(task.run)] =
                std::move(rr);
        }
    };

    int nthreads = std::max(1, cfg.threads);
    if (size_t(nthreads) > tasks.size()) nthreads = int(tasks.size());
    std::vector<std::thread> pool;
    for (int i = 1; i < nthreads; ++i) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();

    // results CSV, in deterministic (instance, algorithm, run) order
    std::ofstream csv(csv_path, std::ios::binary);
    if (!csv) throw IoError("cannot open " + csv_path + " for writing");
    csv << "instance,algorithm,run,seed,v1,v2,u,wall_time_ms\n";
    for (size_t ii = 0; ii < instances.size(); ++ii) {
        for (size_t ai = 0; ai < algorithms.size(); ++ai) {
            for (const RunResult& rr : results[ii * algorithms.size() + ai]) {
                csv << instances[ii].name << "," << algorithm_name(algorithms[ai]) << ","
                    << rr.run << "," << rr.seed << ",";
                if (rr.ok)
                    csv << fmt_double(rr.objective.v1) << "," << fmt_double(rr.objective.v2)
                        << "," << fmt_double(rr.objective.u);
                else
                    csv << "nan,nan,nan";
                csv << "," << rr.wall_ms << "\n";
            }
        }
    }
    csv.close();
    if (!csv) throw IoError("failed writing " + csv_path);

    ExperimentResult result;
    for (size_t ii = 0; ii < instances.size(); ++ii) {
        for (size_t ai = 0; ai < algorithms.size(); ++ai) {
            const auto& runs = results[ii * algorithms.size() + ai];
            SummaryRow row;
            row.instance = instances[ii].name;
            row.algorithm = algorithms[ai];
            row.runs = int(runs.size());

            std::vector<const RunResult*> ok;
            for (const RunResult& rr : runs)
                if (rr.ok) ok.push_back(&rr);
                else ++row.failed;
            result.failures += row.failed;

            if (!ok.empty()) {
                std::sort(ok.begin(), ok.end(), [&](const RunResult* a, const RunResult* b) {
                    int c = lexicographic_compare(a->objective, b->objective, base.compare_eps);
                    if (c != 0) return c < 0;
                    return a->run < b->run;
                });
                row.best = ok.front()->objective;
                row.worst = ok.back()->objective;
                row.median = ok[ok.size() / 2]->objective;
                row.sr = success_rate(runs);
            }
            result.summary.push_back(std::move(row));
            result.runs.push_back(runs);
        }
    }

    if (!summary_path.empty()) {
        std::ofstream sum(summary_path, std::ios::binary);
        if (!sum) throw IoError("cannot open " + summary_path + " for writing");
        sum << format_summary(result.summary);
    }
    return result;
}

std::string format_objective(const ObjectiveValue& v) {
    char buf[128];
    std::snprintf(buf, sizeof(buf), "(%.4f, %.4f, %.4f)", v.v1, v.v2, v.u);
    return buf;
}

std::string format_summary(std::span<const SummaryRow> rows) {
    std::ostringstream os;
    char line[256];
    std::snprintf(line, sizeof(line), "%-12s %-11s %5s %7s %8s  %-34s %-34s %-34s\n", "instance",
                  "algorithm", "runs", "failed", "SR(%)", "median", "best", "worst");
    os << line;
    for (const SummaryRow& r : rows) {
        char sr[16];
        std::snprintf(sr, sizeof(sr), "%.2f", r.sr);
        std::snprintf(line, sizeof(line), "%-12s %-11s %5d %7d %8s  %-34s %-34s %-34s\n",
                      r.instance.c_str(), algorithm_name(r.algorithm), r.runs, r.failed, sr,
                      r.runs > r.failed ? format_objective(r.median).c_str() : "-",
                      r.runs > r.failed ? format_objective(r.best).c_str() : "-",
                      r.runs > r.failed ? format_objective(r.worst).c_str() : "-");
        os << line;
    }
    return os.str();
}

}  // namespace romsched
