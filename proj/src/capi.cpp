#include "romsched.h"

#include <cstring>
#include <functional>
#include <string>
#include <vector>

#include "romsched/construction.hpp"
#include "romsched/experiment.hpp"
#include "romsched/instance_io.hpp"
#include "romsched/local_search.hpp"
#include "romsched/objective.hpp"

using namespace romsched;

struct rms_instance {
    Instance inst;
};

struct rms_schedule {
    Schedule sched;
};

namespace {

thread_local std::string g_last_error;

rms_status set_error(rms_status code, const std::string& msg) {
    g_last_error = msg;
    return code;
}

rms_status run_guarded(const std::function<rms_status()>& fn) {
    try {
        return fn();
    } catch (const ParseError& e) {
        return set_error(RMS_ERR_PARSE, e.what());
    } catch (const IoError& e) {
        return set_error(RMS_ERR_IO, e.what());
    } catch (const ConstructionError& e) {
        return set_error(RMS_ERR_CONSTRUCTION, e.what());
    } catch (const ModelError& e) {
        return set_error(RMS_ERR_MODEL, e.what());
    } catch (const Error& e) {
        return set_error(RMS_ERR_INTERNAL, e.what());
    } catch (const std::exception& e) {
        return set_error(RMS_ERR_INTERNAL, e.what());
    }
}

GeneratorSpec to_generator_spec(const rms_generator_spec& s) {
    GeneratorSpec spec;
    spec.deliveries = s.deliveries;
    spec.reclaimers = s.reclaimers;
    spec.directions = s.directions;
    spec.seed = s.seed;
    spec.minerals = s.minerals;
    spec.tightness = s.tightness == RMS_TIGHTNESS_LOOSE    ? Tightness::Loose
                     : s.tightness == RMS_TIGHTNESS_TIGHT ? Tightness::Tight
                                                          : Tightness::Medium;
    spec.reclaim_rate = s.reclaim_rate;
    spec.cost.row_move = s.row_move_cost;
    spec.cost.col_move = s.col_move_cost;
    spec.cost.dir_change = s.dir_change_penalty;
    spec.safety_min_columns = s.safety_min_columns;
    return spec;
}

bool to_solver_params(const rms_solver_params& p, SolverParams& out, std::string& err) {
    switch (p.algorithm) {
        case RMS_ALG_DGA: out.algorithm = Algorithm::Dga; break;
        case RMS_ALG_RGA: out.algorithm = Algorithm::Rga; break;
        case RMS_ALG_MMAS: out.algorithm = Algorithm::Mmas; break;
        case RMS_ALG_MMAS_LOCAL: out.algorithm = Algorithm::MmasLocal; break;
        default: err = "unknown algorithm"; return false;
    }
    out.seed = p.seed;
    out.greedy.lambda = p.lambda;
    out.greedy.sp = p.sp;
    out.mmas.alpha = p.alpha;
    out.mmas.beta = p.beta;
    out.mmas.rho = p.rho;
    out.mmas.sp = p.sp;
    out.mmas.ants = p.ants;
    out.mmas.generations = p.generations;
    out.mmas.depositor = p.depositor == RMS_DEPOSIT_BSFA ? Depositor::Bsfa : Depositor::Iba;
    out.compare_eps = p.compare_eps;
    if (p.history_csv) out.history_csv = p.history_csv;
    if (p.trace_log) out.trace_log = p.trace_log;
    if (p.swap_log) out.swap_log = p.swap_log;
    return true;
}

rms_status copy_string(const std::string& s, char* buf, size_t cap) {
    if (!buf || cap == 0) return set_error(RMS_ERR_INVALID_ARGUMENT, "null output buffer");
    size_t n = s.size() < cap - 1 ? s.size() : cap - 1;
    std::memcpy(buf, s.data(), n);
    buf[n] = '\0';
    return RMS_OK;
}

}  // namespace

extern "C" {

const char* rms_version(void) { return "1.0.0"; }

const char* rms_last_error(void) { return g_last_error.c_str(); }

void rms_generator_spec_defaults(rms_generator_spec* spec) {
    if (!spec) return;
    GeneratorSpec d;
    spec->deliveries = d.deliveries;
    spec->reclaimers = d.reclaimers;
    spec->directions = d.directions;
    spec->seed = d.seed;
    spec->minerals = d.minerals;
    spec->tightness = RMS_TIGHTNESS_MEDIUM;
    spec->reclaim_rate = d.reclaim_rate;
    spec->row_move_cost = d.cost.row_move;
    spec->col_move_cost = d.cost.col_move;
    spec->dir_change_penalty = d.cost.dir_change;
    spec->safety_min_columns = d.safety_min_columns;
}

rms_status rms_generate_instance(const rms_generator_spec* spec, rms_instance** out) {
    if (!spec || !out) return set_error(RMS_ERR_INVALID_ARGUMENT, "null argument");
    return run_guarded([&] {
        auto* h = new rms_instance{generate(to_generator_spec(*spec))};
        *out = h;
        return RMS_OK;
    });
}

rms_status rms_instance_load(const char* path, rms_instance** out) {
    if (!path || !out) return set_error(RMS_ERR_INVALID_ARGUMENT, "null argument");
    return run_guarded([&] {
        auto* h = new rms_instance{load_instance(path)};
        *out = h;
        return RMS_OK;
    });
}

rms_status rms_instance_save(const rms_instance* inst, const char* path) {
    if (!inst || !path) return set_error(RMS_ERR_INVALID_ARGUMENT, "null argument");
    return run_guarded([&] {
        save_instance(inst->inst, path);
        return RMS_OK;
    });
}

void rms_instance_free(rms_instance* inst) { delete inst; }

int rms_instance_cut_count(const rms_instance* inst) {
    return inst ? int(inst->inst.cut_count()) : 0;
}

int rms_instance_delivery_count(const rms_instance* inst) {
    return inst ? int(inst->inst.deliveries.size()) : 0;
}

int rms_instance_reclaimer_count(const rms_instance* inst) {
    return inst ? int(inst->inst.reclaimers.size()) : 0;
}

rms_status rms_instance_name(const rms_instance* inst, char* buf, size_t cap) {
    if (!inst) return set_error(RMS_ERR_INVALID_ARGUMENT, "null instance");
    return copy_string(inst->inst.name, buf, cap);
}

void rms_solver_params_defaults(rms_solver_params* params) {
    if (!params) return;
    SolverParams d;
    params->algorithm = RMS_ALG_MMAS;
    params->seed = d.seed;
    params->lambda = d.greedy.lambda;
    params->sp = d.greedy.sp;
    params->alpha = d.mmas.alpha;
    params->beta = d.mmas.beta;
    params->rho = d.mmas.rho;
    params->ants = d.mmas.ants;
    params->generations = d.mmas.generations;
    params->depositor = RMS_DEPOSIT_IBA;
    params->compare_eps = 0.0;
    params->history_csv = nullptr;
    params->trace_log = nullptr;
    params->swap_log = nullptr;
}

rms_status rms_solve(const rms_instance* inst, const rms_solver_params* params,
                     rms_schedule** out) {
    if (!inst || !params || !out) return set_error(RMS_ERR_INVALID_ARGUMENT, "null argument");
    SolverParams p;
    std::string err;
    if (!to_solver_params(*params, p, err)) return set_error(RMS_ERR_INVALID_ARGUMENT, err);
    return run_guarded([&] {
        auto* h = new rms_schedule{solve(inst->inst, p)};
        *out = h;
        return RMS_OK;
    });
}

rms_status rms_improve(const rms_instance* inst, const rms_schedule* in, rms_schedule** out) {
    if (!inst || !in || !out) return set_error(RMS_ERR_INVALID_ARGUMENT, "null argument");
    return run_guarded([&] {
        auto* h = new rms_schedule{improve(inst->inst, in->sched)};
        *out = h;
        return RMS_OK;
    });
}

void rms_schedule_free(rms_schedule* s) { delete s; }

int rms_schedule_job_count(const rms_schedule* s) {
    return s ? int(s->sched.job_count()) : 0;
}

rms_status rms_schedule_objective(const rms_instance* inst, const rms_schedule* s,
                                  double objective[3]) {
    if (!inst || !s || !objective) return set_error(RMS_ERR_INVALID_ARGUMENT, "null argument");
    return run_guarded([&]() -> rms_status {
        FeasibilityReport rep = validate(inst->inst, s->sched);
        if (!rep.ok) return set_error(RMS_ERR_INFEASIBLE, rep.violation);
        ObjectiveValue v = evaluate_schedule_unchecked(inst->inst, s->sched);
        objective[0] = v.v1;
        objective[1] = v.v2;
        objective[2] = v.u;
        return RMS_OK;
    });
}

rms_status rms_validate(const rms_instance* inst, const rms_schedule* s, char* report,
                        size_t cap) {
    if (!inst || !s) return set_error(RMS_ERR_INVALID_ARGUMENT, "null argument");
    return run_guarded([&]() -> rms_status {
        FeasibilityReport rep = validate(inst->inst, s->sched);
        if (report && cap > 0) copy_string(rep.ok ? "" : rep.violation, report, cap);
        if (!rep.ok) return set_error(RMS_ERR_INFEASIBLE, rep.violation);
        return RMS_OK;
    });
}

rms_status rms_schedule_save(const rms_schedule* s, const rms_instance* inst,
                             const char* path) {
    if (!s || !inst || !path) return set_error(RMS_ERR_INVALID_ARGUMENT, "null argument");
    return run_guarded([&] {
        save_schedule(s->sched, inst->inst, path);
        return RMS_OK;
    });
}

rms_status rms_schedule_load(const char* path, const rms_instance* inst, rms_schedule** out) {
    if (!path || !inst || !out) return set_error(RMS_ERR_INVALID_ARGUMENT, "null argument");
    return run_guarded([&] {
        auto* h = new rms_schedule{load_schedule(path, inst->inst)};
        *out = h;
        return RMS_OK;
    });
}

void rms_experiment_opts_defaults(rms_experiment_opts* opts) {
    if (!opts) return;
    opts->runs = 51;
    opts->master_seed = 1;
    opts->threads = 1;
    opts->include_timing = 1;
}

rms_status rms_run_experiment(const rms_instance* const* instances, int n_instances,
                              const int* algorithms, int n_algorithms,
                              const rms_solver_params* params,
                              const rms_experiment_opts* opts, const char* csv_path,
                              const char* summary_path, int* failed_runs) {
    if (!instances || n_instances < 1 || !algorithms || n_algorithms < 1 || !params || !opts ||
        !csv_path)
        return set_error(RMS_ERR_INVALID_ARGUMENT, "null or empty argument");

    SolverParams base;
    std::string err;
    rms_solver_params p = *params;
    p.algorithm = RMS_ALG_DGA;  // replaced per algorithm by the runner
    if (!to_solver_params(p, base, err)) return set_error(RMS_ERR_INVALID_ARGUMENT, err);

    std::vector<NamedInstance> named;
    for (int i = 0; i < n_instances; ++i) {
        if (!instances[i]) return set_error(RMS_ERR_INVALID_ARGUMENT, "null instance");
        named.push_back({instances[i]->inst.name, &instances[i]->inst});
    }
    std::vector<Algorithm> algs;
    for (int i = 0; i < n_algorithms; ++i) {
        switch (algorithms[i]) {
            case RMS_ALG_DGA: algs.push_back(Algorithm::Dga); break;
            case RMS_ALG_RGA: algs.push_back(Algorithm::Rga); break;
            case RMS_ALG_MMAS: algs.push_back(Algorithm::Mmas); break;
            case RMS_ALG_MMAS_LOCAL: algs.push_back(Algorithm::MmasLocal); break;
            default: return set_error(RMS_ERR_INVALID_ARGUMENT, "unknown algorithm");
        }
    }

    ExperimentConfig cfg;
    cfg.runs = opts->runs;
    cfg.master_seed = opts->master_seed;
    cfg.threads = opts->threads;
    cfg.include_timing = opts->include_timing != 0;

    return run_guarded([&]() -> rms_status {
        ExperimentResult res = run_experiment(named, algs, base, cfg, csv_path,
                                              summary_path ? summary_path : "");
        if (failed_runs) *failed_runs = res.failures;
        return res.failures == 0 ? RMS_OK
                                 : set_error(RMS_ERR_CONSTRUCTION,
                                             std::to_string(res.failures) + " run(s) failed");
    });
}

}  // extern "C"
