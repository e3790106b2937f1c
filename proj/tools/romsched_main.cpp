// romsched command line: generate instances, run the solvers, validate and
// evaluate schedules, and drive repeated-trial experiments. Talks to the
// solver library exclusively through its C interface.

#include <cstdio>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "romsched.h"

namespace {

constexpr int kExitFailedRun = 1;
constexpr int kExitBadInput = 2;

struct InstanceHandle {
    rms_instance* ptr = nullptr;
    ~InstanceHandle() { rms_instance_free(ptr); }
};

struct ScheduleHandle {
    rms_schedule* ptr = nullptr;
    ~ScheduleHandle() { rms_schedule_free(ptr); }
};

int fail(rms_status st, const char* what) {
    std::fprintf(stderr, "romsched: %s: %s\n", what, rms_last_error());
    switch (st) {
        case RMS_ERR_INVALID_ARGUMENT:
        case RMS_ERR_PARSE:
        case RMS_ERR_MODEL:
        case RMS_ERR_IO:
            return kExitBadInput;
        default:
            return kExitFailedRun;
    }
}

void print_objective(const double obj[3]) {
    std::printf("(%.4f, %.4f, %.4f)\n", obj[0], obj[1], obj[2]);
}

struct SolverOptions {
    std::string algorithm = "mmas";
    rms_solver_params params{};
    std::string history_csv, trace_log, swap_log;

    void attach(CLI::App* cmd, bool with_algorithm = true) {
        rms_solver_params_defaults(&params);
        if (with_algorithm)
            cmd->add_option("--algorithm,-a", algorithm, "dga, rga, mmas or mmas-local")
                ->check(CLI::IsMember({"dga", "rga", "mmas", "mmas-local"}));
        cmd->add_option("--seed", params.seed, "random seed");
        cmd->add_option("--lambda", params.lambda, "rga greediness exponent");
        cmd->add_option("--sp", params.sp, "selection pressure in (1,2]");
        cmd->add_option("--alpha", params.alpha, "mmas pheromone exponent");
        cmd->add_option("--beta", params.beta, "mmas heuristic exponent");
        cmd->add_option("--rho", params.rho, "mmas evaporation rate in (0,1]");
        cmd->add_option("--ants", params.ants, "colony size");
        cmd->add_option("--generations", params.generations, "mmas generations");
        cmd->add_option_function<std::string>(
               "--depositor",
               [this](const std::string& v) {
                   params.depositor = v == "bsfa" ? RMS_DEPOSIT_BSFA : RMS_DEPOSIT_IBA;
               },
               "pheromone depositor: iba or bsfa")
            ->check(CLI::IsMember({"iba", "bsfa"}));
        cmd->add_option("--compare-eps", params.compare_eps,
                        "objective comparison tolerance (default 0: exact)");
    }

    bool finish() {
        if (algorithm == "dga") params.algorithm = RMS_ALG_DGA;
        else if (algorithm == "rga") params.algorithm = RMS_ALG_RGA;
        else if (algorithm == "mmas") params.algorithm = RMS_ALG_MMAS;
        else if (algorithm == "mmas-local") params.algorithm = RMS_ALG_MMAS_LOCAL;
        else return false;
        params.history_csv = history_csv.empty() ? nullptr : history_csv.c_str();
        params.trace_log = trace_log.empty() ? nullptr : trace_log.c_str();
        params.swap_log = swap_log.empty() ? nullptr : swap_log.c_str();
        return true;
    }
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"run-of-mine stockyard recovery scheduling solver"};
    app.require_subcommand(1);
    app.set_config("--config", "", "read defaults from a config file");

    // generate
    auto* gen = app.add_subcommand("generate", "generate a synthetic instance");
    rms_generator_spec spec{};
    rms_generator_spec_defaults(&spec);
    std::string tightness = "medium";
    std::string gen_out = "instance.json";
    gen->add_option("--deliveries,-d", spec.deliveries, "number of deliveries D (1..10)");
    gen->add_option("--reclaimers,-r", spec.reclaimers, "number of reclaimers R (2 or 3)");
    gen->add_option("--directions,-p", spec.directions, "usable reclaiming directions (1 or 2)");
    gen->add_option("--seed", spec.seed, "generator seed");
    gen->add_option("--minerals", spec.minerals, "minerals per cut (1..8)");
    gen->add_option("--tightness", tightness, "quality bound tightness: loose, medium or tight")
        ->check(CLI::IsMember({"loose", "medium", "tight"}));
    gen->add_option("--reclaim-rate", spec.reclaim_rate, "tonnes per minute");
    gen->add_option("--row-move-cost", spec.row_move_cost, "minutes per row step");
    gen->add_option("--col-move-cost", spec.col_move_cost, "minutes per column step");
    gen->add_option("--dir-change-penalty", spec.dir_change_penalty,
                    "minutes per direction change");
    gen->add_option("--safety-distance", spec.safety_min_columns,
                    "minimum column distance between reclaimers on a shared row");
    gen->add_option("--out,-o", gen_out, "output instance file");

    // solve
    auto* solve = app.add_subcommand("solve", "solve an instance");
    std::string solve_instance, solve_out = "schedule.json";
    SolverOptions solver;
    solve->add_option("--instance,-i", solve_instance, "instance file")->required();
    solver.attach(solve);
    solve->add_option("--out,-o", solve_out, "output schedule file");
    solve->add_option("--history", solver.history_csv, "write per-generation best-so-far CSV");
    solve->add_option("--trace", solver.trace_log, "write construction event trace");
    solve->add_option("--swap-log", solver.swap_log, "write local search swap log CSV");

    // validate
    auto* val = app.add_subcommand("validate", "check a schedule against an instance");
    std::string val_instance, val_schedule;
    val->add_option("--instance,-i", val_instance, "instance file")->required();
    val->add_option("--schedule,-s", val_schedule, "schedule file")->required();

    // evaluate
    auto* eval = app.add_subcommand("evaluate", "print the objective of a schedule");
    std::string eval_instance, eval_schedule;
    eval->add_option("--instance,-i", eval_instance, "instance file")->required();
    eval->add_option("--schedule,-s", eval_schedule, "schedule file")->required();

    // experiment
    auto* exp = app.add_subcommand("experiment", "repeated seeded trials with summary");
    std::vector<std::string> exp_instances;
    std::vector<std::string> exp_algorithms;
    std::string out_dir = ".";
    rms_experiment_opts opts{};
    rms_experiment_opts_defaults(&opts);
    bool no_timing = false;
    SolverOptions exp_solver;
    exp->add_option("--instance,-i", exp_instances, "instance file (repeatable)")->required();
    exp->add_option("--algorithm,-a", exp_algorithms, "algorithms to run (repeatable)")
        ->check(CLI::IsMember({"dga", "rga", "mmas", "mmas-local"}));
    exp->add_option("--runs", opts.runs, "trials per instance and algorithm (default 51)");
    exp->add_option("--threads", opts.threads, "parallel workers");
    exp->add_flag("--no-timing", no_timing,
                  "write wall_time_ms as 0 for byte-reproducible output");
    exp->add_option("--out-dir", out_dir, "directory for results.csv and summary.txt");
    exp_solver.attach(exp, false);
    exp->get_option("--seed")->description("master seed; per-run seeds derive from it");

    CLI11_PARSE(app, argc, argv);

    if (gen->parsed()) {
        if (tightness == "loose") spec.tightness = RMS_TIGHTNESS_LOOSE;
        else if (tightness == "tight") spec.tightness = RMS_TIGHTNESS_TIGHT;
        else spec.tightness = RMS_TIGHTNESS_MEDIUM;
        InstanceHandle inst;
        if (rms_status st = rms_generate_instance(&spec, &inst.ptr); st != RMS_OK)
            return fail(st, "generate");
        if (rms_status st = rms_instance_save(inst.ptr, gen_out.c_str()); st != RMS_OK)
            return fail(st, "generate");
        char name[64];
        rms_instance_name(inst.ptr, name, sizeof(name));
        std::printf("wrote %s: %s, %d cuts, %d reclaimers, %d deliveries\n", gen_out.c_str(),
                    name, rms_instance_cut_count(inst.ptr),
                    rms_instance_reclaimer_count(inst.ptr),
                    rms_instance_delivery_count(inst.ptr));
        return 0;
    }

    if (solve->parsed()) {
        if (!solver.finish()) return kExitBadInput;
        InstanceHandle inst;
        if (rms_status st = rms_instance_load(solve_instance.c_str(), &inst.ptr); st != RMS_OK)
            return fail(st, "load instance");
        ScheduleHandle sched;
        if (rms_status st = rms_solve(inst.ptr, &solver.params, &sched.ptr); st != RMS_OK)
            return fail(st, "solve");
        if (rms_status st = rms_schedule_save(sched.ptr, inst.ptr, solve_out.c_str());
            st != RMS_OK)
            return fail(st, "save schedule");
        double obj[3];
        if (rms_status st = rms_schedule_objective(inst.ptr, sched.ptr, obj); st != RMS_OK)
            return fail(st, "evaluate");
        print_objective(obj);
        return 0;
    }

    if (val->parsed()) {
        InstanceHandle inst;
        if (rms_status st = rms_instance_load(val_instance.c_str(), &inst.ptr); st != RMS_OK)
            return fail(st, "load instance");
        ScheduleHandle sched;
        if (rms_status st = rms_schedule_load(val_schedule.c_str(), inst.ptr, &sched.ptr);
            st != RMS_OK)
            return fail(st, "load schedule");
        char report[1024];
        rms_status st = rms_validate(inst.ptr, sched.ptr, report, sizeof(report));
        if (st == RMS_OK) {
            std::printf("feasible: %d jobs\n", rms_schedule_job_count(sched.ptr));
            return 0;
        }
        if (st == RMS_ERR_INFEASIBLE) {
            std::printf("infeasible: %s\n", report);
            return kExitFailedRun;
        }
        return fail(st, "validate");
    }

    if (eval->parsed()) {
        InstanceHandle inst;
        if (rms_status st = rms_instance_load(eval_instance.c_str(), &inst.ptr); st != RMS_OK)
            return fail(st, "load instance");
        ScheduleHandle sched;
        if (rms_status st = rms_schedule_load(eval_schedule.c_str(), inst.ptr, &sched.ptr);
            st != RMS_OK)
            return fail(st, "load schedule");
        double obj[3];
        if (rms_status st = rms_schedule_objective(inst.ptr, sched.ptr, obj); st != RMS_OK)
            return fail(st, "evaluate");
        print_objective(obj);
        return 0;
    }

    if (exp->parsed()) {
        if (exp_algorithms.empty()) exp_algorithms = {"mmas"};
        std::vector<int> algs;
        for (const std::string& a : exp_algorithms) {
            if (a == "dga") algs.push_back(RMS_ALG_DGA);
            else if (a == "rga") algs.push_back(RMS_ALG_RGA);
            else if (a == "mmas") algs.push_back(RMS_ALG_MMAS);
            else if (a == "mmas-local") algs.push_back(RMS_ALG_MMAS_LOCAL);
            else {
                std::fprintf(stderr, "romsched: unknown algorithm '%s'\n", a.c_str());
                return kExitBadInput;
            }
        }
        if (!exp_solver.finish()) return kExitBadInput;

        std::vector<std::unique_ptr<InstanceHandle>> handles;
        std::vector<const rms_instance*> raw;
        for (const std::string& path : exp_instances) {
            auto h = std::make_unique<InstanceHandle>();
            if (rms_status st = rms_instance_load(path.c_str(), &h->ptr); st != RMS_OK)
                return fail(st, "load instance");
            raw.push_back(h->ptr);
            handles.push_back(std::move(h));
        }

        opts.include_timing = no_timing ? 0 : 1;
        opts.master_seed = exp_solver.params.seed;
        std::string csv = out_dir + "/results.csv";
        std::string summary = out_dir + "/summary.txt";
        int failed = 0;
        rms_status st = rms_run_experiment(raw.data(), int(raw.size()), algs.data(),
                                           int(algs.size()), &exp_solver.params, &opts,
                                           csv.c_str(), summary.c_str(), &failed);
        if (st != RMS_OK && failed == 0) return fail(st, "experiment");

        // echo the summary table
        if (FILE* f = std::fopen(summary.c_str(), "rb")) {
            char buf[4096];
            size_t n;
            while ((n = std::fread(buf, 1, sizeof(buf), f)) > 0) std::fwrite(buf, 1, n, stdout);
            std::fclose(f);
        }
        if (failed > 0) {
            std::fprintf(stderr, "romsched: %d run(s) failed\n", failed);
            return kExitFailedRun;
        }
        return 0;
    }

    return kExitBadInput;
}
