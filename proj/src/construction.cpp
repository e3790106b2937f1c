#include "romsched/construction.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <ostream>
#include <sstream>

namespace romsched {

bool candidate_key_less(const Candidate& a, const Candidate& b) {
    int n = std::min(a.size, b.size);
    for (int i = 0; i < n; ++i) {
        const CandidateJob& x = a.jobs[size_t(i)];
        const CandidateJob& y = b.jobs[size_t(i)];
        if (x.job.cut != y.job.cut) return x.job.cut < y.job.cut;
        int dx = direction_index(x.job.dir), dy = direction_index(y.job.dir);
        if (dx != dy) return dx < dy;
        if (x.reclaimer != y.reclaimer) return x.reclaimer < y.reclaimer;
    }
    return a.size < b.size;
}

std::vector<Job> eligible_jobs(const Instance& inst,
                               const std::vector<bool>& reclaimed,
                               const std::vector<bool>& claimed,
                               const Reclaimer& r,
                               int material,
                               std::span<const uint32_t> reserved) {
    std::vector<Job> out;
    for (uint32_t id : inst.cuts_of_material(material)) {
        if (claimed[id]) continue;
        const Cut& c = inst.cuts[id];
        if (std::find(r.rows.begin(), r.rows.end(), c.row) == r.rows.end()) continue;
        bool safe = true;
        for (uint32_t q : reserved)
            if (inst.safety_conflict(id, q)) { safe = false; break; }
        if (!safe) continue;
        for (Direction d : r.dirs) {
            bool ready = true;
            for (uint32_t p : inst.predecessors({id, d}))
                if (!reclaimed[p]) { ready = false; break; }
            if (ready) out.push_back({id, d});
        }
    }
    return out;
}

std::vector<std::vector<Job>> joint_job_tuples(const Instance& inst,
                                               std::span<const std::vector<Job>> neighborhoods) {
    std::vector<std::vector<Job>> out;
    std::vector<Job> cur;
    std::function<void(size_t)> rec = [&](size_t i) {
        if (i == neighborhoods.size()) {
            out.push_back(cur);
            return;
        }
        for (const Job& j : neighborhoods[i]) {
            bool ok = true;
            for (const Job& prev : cur)
                if (prev.cut == j.cut || inst.safety_conflict(prev.cut, j.cut)) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            cur.push_back(j);
            rec(i + 1);
            cur.pop_back();
        }
    };
    rec(0);
    return out;
}

namespace {

// Incremental per-delivery assembly view used for candidate scoring: job
// count, per-mineral grade sums, and the committed jobs in completion order.
struct AssemblyState {
    int count = 0;
    std::vector<double> grade_sum;
    std::vector<std::pair<double, uint32_t>> ordered;  // (completion, cut)

    void add(const Instance& inst, uint32_t cut, double completion) {
        ++count;
        const auto& g = inst.cuts[cut].grades;
        for (size_t k = 0; k < g.size(); ++k) grade_sum[k] += g[k];
        auto it = std::upper_bound(ordered.begin(), ordered.end(),
                                   std::make_pair(completion, cut));
        ordered.insert(it, {completion, cut});
    }
};

class Engine {
public:
    Engine(const Instance& inst, SelectionPolicy& policy, uint64_t seed, std::ostream* trace)
        : inst_(inst),
          policy_(policy),
          rng_(seed),
          trace_(trace),
          D_(int(inst.deliveries.size())),
          R_(int(inst.reclaimers.size())),
          reclaimed_(inst.cut_count(), false),
          claimed_(inst.cut_count(), false),
          sched_(int(inst.deliveries.size()), int(inst.reclaimers.size())),
          acc_(inst.deliveries.size() + 2, 0.0),
          assemblies_(inst.deliveries.size()),
          rs_(inst.reclaimers.size()) {
        for (auto& a : assemblies_) a.grade_sum.assign(size_t(inst.minerals), 0.0);
    }

    Schedule run() {
        if (!inst_.finalized())
            throw ModelError("construct: instance not finalized");
        start_initial_jobs();
        while (global_d_ <= D_) {
            double t = next_completion();
            if (!std::isfinite(t)) deadlock();
            now_ = t;
            for (int r = 0; r < R_; ++r)
                if (rs_[size_t(r)].busy && rs_[size_t(r)].completion == t) finish(r);
            if (global_d_ > D_) break;
            selection_phase();
            if (global_d_ <= D_ && !any_busy()) deadlock();
        }
        // Jobs in flight when the last delivery fills still complete and stay
        // on the schedule (non-preemptive).
        while (any_busy()) {
            now_ = next_completion();
            for (int r = 0; r < R_; ++r)
                if (rs_[size_t(r)].busy && rs_[size_t(r)].completion == now_) finish(r);
        }
        return std::move(sched_);
    }

private:
    struct RState {
        bool busy = false;
        Job prev;     // machine position: last completed (or entry) job
        Job current;  // destination while busy
        double start = 0.0;
        double completion = 0.0;
        int delivery = 1;
        bool ahead = false;
    };

    int material_of(int delivery) const {
        return inst_.deliveries[size_t(delivery - 1)].material;
    }

    void start_initial_jobs() {
        for (int r = 0; r < R_; ++r) {
            const Reclaimer& rec = inst_.reclaimers[size_t(r)];
            Job j0{rec.entry_cut, rec.entry_dir};
            RState& st = rs_[size_t(r)];
            st.prev = j0;
            commit(r, j0, 1, false);
        }
    }

    double next_completion() const {
        double t = std::numeric_limits<double>::infinity();
        for (const RState& st : rs_)
            if (st.busy) t = std::min(t, st.completion);
        return t;
    }

    bool any_busy() const {
        for (const RState& st : rs_)
            if (st.busy) return true;
        return false;
    }

    void deadlock() {
        std::ostringstream os;
        os << "construction deadlock at t=" << now_ << ": delivery " << global_d_ << " of "
           << D_ << " unfinished (" << acc_[size_t(global_d_)] << " of "
           << inst_.deliveries[size_t(global_d_ - 1)].tonnage
           << " t), all reclaimers idle with empty neighborhoods";
        throw ConstructionError(os.str(), std::move(sched_));
    }

    void finish(int r) {
        RState& st = rs_[size_t(r)];
        reclaimed_[st.current.cut] = true;
        sched_.segment(st.delivery, r)
            .push_back({st.current.cut, st.current.dir, st.start, st.completion, st.ahead});
        acc_[size_t(st.delivery)] += inst_.cuts[st.current.cut].tonnage;
        while (global_d_ <= D_ &&
               acc_[size_t(global_d_)] > inst_.deliveries[size_t(global_d_ - 1)].tonnage)
            ++global_d_;
        st.prev = st.current;
        st.busy = false;
    }

    void commit(int r, Job job, int delivery, bool ahead) {
        RState& st = rs_[size_t(r)];
        double cost = inst_.job_cost(st.prev, job);
        st.busy = true;
        st.current = job;
        st.start = now_;
        st.completion = now_ + cost;
        st.delivery = delivery;
        st.ahead = ahead;
        claimed_[job.cut] = true;
        assemblies_[size_t(delivery - 1)].add(inst_, job.cut, st.completion);
        if (trace_)
            (*trace_) << "t=" << now_ << " r=" << r << " cut=" << job.cut
                      << " phi=" << direction_label(job.dir) << " d=" << delivery
                      << (ahead ? " ahead" : "") << "\n";
    }

    std::vector<uint32_t> reserved_positions(int except) const {
        std::vector<uint32_t> out;
        for (int r = 0; r < R_; ++r) {
            if (r == except) continue;
            const RState& st = rs_[size_t(r)];
            out.push_back(st.prev.cut);
            if (st.busy) out.push_back(st.current.cut);
        }
        return out;
    }

    // Neighborhood of an idle reclaimer: first delivery from the global
    // counter onward whose material still offers eligible jobs (material
    // exhaustion exception advances past empty ones).
    struct Pending {
        int reclaimer = 0;
        int delivery = 0;
        std::vector<Job> jobs;
    };

    bool neighborhood(int r, Pending& out) {
        auto reserved = reserved_positions(r);
        const Reclaimer& rec = inst_.reclaimers[size_t(r)];
        std::vector<int> scanned_empty;  // material kinds already scanned empty
        for (int dd = global_d_; dd <= D_; ++dd) {
            int m = material_of(dd);
            if (std::find(scanned_empty.begin(), scanned_empty.end(), m) != scanned_empty.end())
                continue;
            auto jobs = eligible_jobs(inst_, reclaimed_, claimed_, rec, m, reserved);
            if (!jobs.empty()) {
                out = {r, dd, std::move(jobs)};
                return true;
            }
            scanned_empty.push_back(m);
        }
        return false;
    }

    void selection_phase() {
        while (true) {
            std::vector<Pending> pend;
            for (int r = 0; r < R_; ++r) {
                if (rs_[size_t(r)].busy) continue;
                Pending p;
                if (neighborhood(r, p)) pend.push_back(std::move(p));
            }
            if (pend.empty()) return;

            // Joint group: idle reclaimers whose local delivery material
            // matches the first pending one; others wait for later rounds.
            int mat = material_of(pend[0].delivery);
            std::vector<Pending*> group;
            for (auto& p : pend)
                if (material_of(p.delivery) == mat) group.push_back(&p);

            size_t product = 1;
            for (auto* p : group) {
                product *= p->jobs.size();
                if (product > kJointTupleLimit) break;
            }
            if (product > kJointTupleLimit) group.resize(1);

            std::vector<Candidate> cands = build_candidates(group);
            if (cands.empty() && group.size() > 1) {
                // duplicate-cut / safety exclusions wiped the whole product
                group.resize(1);
                cands = build_candidates(group);
            }
            if (cands.empty()) return;  // defensive; singleton groups never empty

            size_t pick = policy_.select(cands, rng_);
            for (const CandidateJob& part : cands[pick].parts())
                commit(part.reclaimer, part.job, part.delivery, part.ahead);
        }
    }

    std::vector<Candidate> build_candidates(const std::vector<Pending*>& group) {
        std::vector<std::vector<Job>> lists;
        lists.reserve(group.size());
        for (auto* p : group) lists.push_back(p->jobs);
        auto tuples = joint_job_tuples(inst_, lists);

        std::vector<Candidate> cands;
        cands.reserve(tuples.size());
        for (const auto& tuple : tuples) {
            Candidate c;
            c.size = int(tuple.size());
            for (size_t i = 0; i < tuple.size(); ++i) {
                CandidateJob& cj = c.jobs[i];
                cj.reclaimer = group[i]->reclaimer;
                cj.job = tuple[i];
                cj.delivery = group[i]->delivery;
                cj.ahead = group[i]->delivery > global_d_;
                cj.cost = inst_.job_cost(rs_[size_t(cj.reclaimer)].prev, tuple[i]);
                cj.completion = now_ + cj.cost;
            }
            score(c);
            cands.push_back(c);
        }
        return cands;
    }

    // Delta score of a tuple: v1 of each touched delivery's assembly extended
    // by the tuple, v2 of the trailing windows the new jobs create, and the
    // tuple's summed T/Gamma.
    void score(Candidate& c) {
        double v1 = 0.0, v2 = 0.0, u = 0.0;
        for (const CandidateJob& part : c.parts())
            u += part.cost / inst_.cuts[part.job.cut].tonnage;

        // parts grouped by delivery, in tentative completion order
        std::array<int, 3> order{0, 1, 2};
        std::sort(order.begin(), order.begin() + c.size, [&](int a, int b) {
            const CandidateJob& x = c.jobs[size_t(a)];
            const CandidateJob& y = c.jobs[size_t(b)];
            if (x.completion != y.completion) return x.completion < y.completion;
            return x.reclaimer < y.reclaimer;
        });

        std::array<bool, 3> done{false, false, false};
        for (int i = 0; i < c.size; ++i) {
            if (done[size_t(i)]) continue;
            int delivery = c.jobs[size_t(i)].delivery;
            const AssemblyState& as = assemblies_[size_t(delivery - 1)];
            const Delivery& dl = inst_.deliveries[size_t(delivery - 1)];

            // new cuts for this delivery, tentative order
            std::array<uint32_t, 3> fresh{};
            int nfresh = 0;
            for (int oi = 0; oi < c.size; ++oi) {
                int idx = order[size_t(oi)];
                if (c.jobs[size_t(idx)].delivery != delivery) continue;
                done[size_t(idx)] = true;
                fresh[size_t(nfresh++)] = c.jobs[size_t(idx)].job.cut;
            }

            // sequence tail: up to 2 committed cuts, then the fresh ones
            std::array<uint32_t, 5> tail{};
            int tc = std::min<int>(2, int(as.ordered.size()));
            for (int j = 0; j < tc; ++j)
                tail[size_t(j)] = as.ordered[as.ordered.size() - size_t(tc - j)].second;
            for (int j = 0; j < nfresh; ++j) tail[size_t(tc + j)] = fresh[size_t(j)];

            for (int k = 0; k < inst_.minerals; ++k) {
                const Bounds& b = dl.bounds[size_t(k)];
                double sum = as.grade_sum[size_t(k)];
                for (int j = 0; j < nfresh; ++j)
                    sum += inst_.cuts[fresh[size_t(j)]].grades[size_t(k)];
                v1 += bracket_violation(sum / double(as.count + nfresh), b.lo, b.hi);

                for (int j = 0; j < nfresh; ++j) {
                    int pos = as.count + 1 + j;  // 1-based position in delivery
                    if (pos < 4) continue;
                    int ti = tc + j;
                    double mean = (inst_.cuts[tail[size_t(ti)]].grades[size_t(k)] +
                                   inst_.cuts[tail[size_t(ti - 1)]].grades[size_t(k)] +
                                   inst_.cuts[tail[size_t(ti - 2)]].grades[size_t(k)]) / 3.0;
                    v2 += bracket_violation(mean, b.lo, b.hi);
                }
            }
        }
        c.score = {v1, v2, u};
    }

    const Instance& inst_;
    SelectionPolicy& policy_;
    RandomEngine rng_;
    std::ostream* trace_;
    int D_, R_;
    std::vector<bool> reclaimed_, claimed_;
    Schedule sched_;
    std::vector<double> acc_;
    std::vector<AssemblyState> assemblies_;
    std::vector<RState> rs_;
    double now_ = 0.0;
    int global_d_ = 1;
};

}  // namespace

Schedule construct(const Instance& inst, SelectionPolicy& policy, uint64_t seed,
                   std::ostream* trace) {
    Engine engine(inst, policy, seed, trace);
    return engine.run();
}

// ---------------------------------------------------------------------------
// validate

namespace {

struct SeqJob {
    int delivery = 0;
    TimedJob job;
};

std::vector<SeqJob> sorted_sequence(const Schedule& s, int r) {
    std::vector<SeqJob> seq;
    for (int d = 1; d <= s.deliveries; ++d)
        for (const TimedJob& j : s.segment(d, r)) seq.push_back({d, j});
    std::sort(seq.begin(), seq.end(),
              [](const SeqJob& a, const SeqJob& b) { return a.job.start < b.job.start; });
    return seq;
}

std::string time_str(double t) {
    std::ostringstream os;
    os << "t=" << t;
    return os.str();
}

}  // namespace

FeasibilityReport validate(const Instance& inst, const Schedule& s) {
    auto fail = [](const std::string& msg) { return FeasibilityReport{false, msg}; };

    if (s.deliveries != int(inst.deliveries.size()) || s.reclaimers != int(inst.reclaimers.size()))
        return fail("schedule dimensions do not match the instance");

    // cut uniqueness, material/delivery consistency, row and direction access
    std::vector<int> uses(inst.cut_count(), 0);
    for (int d = 1; d <= s.deliveries; ++d) {
        for (int r = 0; r < s.reclaimers; ++r) {
            const Reclaimer& rec = inst.reclaimers[size_t(r)];
            for (const TimedJob& j : s.segment(d, r)) {
                if (j.cut >= inst.cut_count())
                    return fail("unknown cut id " + std::to_string(j.cut));
                if (++uses[j.cut] > 1)
                    return fail("cut " + std::to_string(j.cut) + " reclaimed more than once");
                if (inst.cuts[j.cut].material != inst.deliveries[size_t(d - 1)].material)
                    return fail("cut " + std::to_string(j.cut) + " material does not match delivery " +
                                std::to_string(d));
                if (!inst.direction_declared(j.dir))
                    return fail("cut " + std::to_string(j.cut) + " uses an undeclared direction");
                if (std::find(rec.dirs.begin(), rec.dirs.end(), j.dir) == rec.dirs.end())
                    return fail("reclaimer " + std::to_string(r) + " cannot reclaim in direction " +
                                std::to_string(direction_label(j.dir)));
                if (std::find(rec.rows.begin(), rec.rows.end(), inst.cuts[j.cut].row) == rec.rows.end())
                    return fail("cut " + std::to_string(j.cut) + " row is outside reclaimer " +
                                std::to_string(r) + "'s reach");
            }
        }
    }

    // per-reclaimer chains: non-preemption, strictly increasing times,
    // durations equal to relocation + reclaim time
    std::vector<std::vector<SeqJob>> seqs(size_t(s.reclaimers));
    for (int r = 0; r < s.reclaimers; ++r) {
        seqs[size_t(r)] = sorted_sequence(s, r);
        Job prev{inst.reclaimers[size_t(r)].entry_cut, inst.reclaimers[size_t(r)].entry_dir};
        double prev_completion = 0.0;
        for (const SeqJob& sj : seqs[size_t(r)]) {
            const TimedJob& j = sj.job;
            if (j.start < prev_completion)
                return fail("reclaimer " + std::to_string(r) + " starts cut " +
                            std::to_string(j.cut) + " at " + time_str(j.start) +
                            " before finishing the previous job at " + time_str(prev_completion));
            double expected = j.start + inst.job_cost(prev, {j.cut, j.dir});
            if (j.completion != expected)
                return fail("reclaimer " + std::to_string(r) + " cut " + std::to_string(j.cut) +
                            ": completion " + time_str(j.completion) + " != start + job cost (" +
                            time_str(expected) + ")");
            if (!(j.completion > j.start))
                return fail("non-increasing job interval on reclaimer " + std::to_string(r));
            prev = {j.cut, j.dir};
            prev_completion = j.completion;
        }
    }

    // precedence: every predecessor completes no later than the job starts
    std::vector<double> completion(inst.cut_count(), std::numeric_limits<double>::quiet_NaN());
    for (const auto& seq : seqs)
        for (const SeqJob& sj : seq) completion[sj.job.cut] = sj.job.completion;
    for (const auto& seq : seqs) {
        for (const SeqJob& sj : seq) {
            for (uint32_t p : inst.predecessors({sj.job.cut, sj.job.dir})) {
                if (std::isnan(completion[p]))
                    return fail("cut " + std::to_string(sj.job.cut) + " reclaimed at " +
                                time_str(sj.job.start) + " but predecessor " + std::to_string(p) +
                                " is never reclaimed");
                if (completion[p] > sj.job.start)
                    return fail("cut " + std::to_string(sj.job.cut) + " starts at " +
                                time_str(sj.job.start) + " before predecessor " + std::to_string(p) +
                                " completes at " + time_str(completion[p]));
            }
        }
    }

    // tonnage accounting: every delivery strictly exceeds its target
    auto acc = s.delivery_tonnage(inst);
    for (int d = 1; d <= s.deliveries; ++d)
        if (!(acc[size_t(d - 1)] > inst.deliveries[size_t(d - 1)].tonnage))
            return fail("delivery " + std::to_string(d) + " accumulates " +
                        std::to_string(acc[size_t(d - 1)]) + " t, target " +
                        std::to_string(inst.deliveries[size_t(d - 1)].tonnage) + " t not exceeded");

    // safety distance and lateral ordering at every event time
    std::vector<double> events;
    for (const auto& seq : seqs)
        for (const SeqJob& sj : seq) {
            events.push_back(sj.job.start);
            events.push_back(sj.job.completion);
        }
    std::sort(events.begin(), events.end());
    events.erase(std::unique(events.begin(), events.end()), events.end());

    std::vector<size_t> next(size_t(s.reclaimers), 0);
    std::vector<uint32_t> last_pos(size_t(s.reclaimers));
    for (int r = 0; r < s.reclaimers; ++r) last_pos[size_t(r)] = inst.reclaimers[size_t(r)].entry_cut;

    uint32_t pos[3][2];
    int npos[3];
    for (double t : events) {
        for (int r = 0; r < s.reclaimers; ++r) {
            const auto& seq = seqs[size_t(r)];
            size_t& i = next[size_t(r)];
            while (i < seq.size() && seq[i].job.completion <= t) {
                last_pos[size_t(r)] = seq[i].job.cut;
                ++i;
            }
            npos[r] = 1;
            pos[r][0] = last_pos[size_t(r)];
            if (i < seq.size() && seq[i].job.start <= t) {
                pos[r][1] = seq[i].job.cut;
                npos[r] = 2;
            }
        }
        for (int a = 0; a < s.reclaimers; ++a) {
            for (int b = a + 1; b < s.reclaimers; ++b) {
                for (int i = 0; i < npos[a]; ++i) {
                    for (int j = 0; j < npos[b]; ++j) {
                        if (inst.safety_conflict(pos[a][i], pos[b][j]))
                            return fail("safety distance violated at " + time_str(t) +
                                        " between reclaimers " + std::to_string(a) + " (cut " +
                                        std::to_string(pos[a][i]) + ") and " + std::to_string(b) +
                                        " (cut " + std::to_string(pos[b][j]) + ")");
                        if (inst.cuts[pos[a][i]].row > inst.cuts[pos[b][j]].row)
                            return fail("lateral ordering violated at " + time_str(t) +
                                        ": reclaimer " + std::to_string(a) + " sits on row " +
                                        std::to_string(inst.cuts[pos[a][i]].row) + " below reclaimer " +
                                        std::to_string(b));
                    }
                }
            }
        }
    }

    return {};
}

// ---------------------------------------------------------------------------
// replay

ReplayResult replay(const Instance& inst, const Schedule& sequences) {
    const int R = int(inst.reclaimers.size());
    const int D = int(inst.deliveries.size());
    if (sequences.deliveries != D || sequences.reclaimers != R)
        return {false, {}, "sequence dimensions do not match the instance"};

    struct Slot {
        int delivery;
        bool ahead;
        Job job;
        double key;
    };
    std::vector<std::vector<Slot>> seq(static_cast<size_t>(R));
    for (int d = 1; d <= D; ++d)
        for (int r = 0; r < R; ++r)
            for (const TimedJob& j : sequences.segment(d, r)) {
                if (j.cut >= inst.cut_count())
                    return {false, {}, "unknown cut id " + std::to_string(j.cut)};
                seq[size_t(r)].push_back({d, j.ahead, {j.cut, j.dir}, j.start});
            }
    for (auto& v : seq)
        std::stable_sort(v.begin(), v.end(),
                         [](const Slot& a, const Slot& b) { return a.key < b.key; });

    std::vector<bool> reclaimed(inst.cut_count(), false), claimed(inst.cut_count(), false);
    struct RState {
        bool busy = false;
        Job prev;
        size_t next = 0;
        double start = 0.0, completion = 0.0;
    };
    std::vector<RState> rs(static_cast<size_t>(R));
    for (int r = 0; r < R; ++r)
        rs[size_t(r)].prev = {inst.reclaimers[size_t(r)].entry_cut,
                              inst.reclaimers[size_t(r)].entry_dir};

    Schedule out(D, R);
    double now = 0.0;

    auto try_starts = [&]() -> std::string {
        for (int r = 0; r < R; ++r) {
            RState& st = rs[size_t(r)];
            if (st.busy || st.next >= seq[size_t(r)].size()) continue;
            const Slot& slot = seq[size_t(r)][st.next];
            if (claimed[slot.job.cut])
                return "cut " + std::to_string(slot.job.cut) + " already claimed when reclaimer " +
                       std::to_string(r) + " frees up at " + time_str(now);
            for (uint32_t p : inst.predecessors(slot.job)) {
                if (!reclaimed[p])
                    return "cut " + std::to_string(slot.job.cut) + ": predecessor " +
                           std::to_string(p) + " not reclaimed when reclaimer " + std::to_string(r) +
                           " frees up at " + time_str(now);
            }
            for (int o = 0; o < R; ++o) {
                if (o == r) continue;
                const RState& ot = rs[size_t(o)];
                if (inst.safety_conflict(slot.job.cut, ot.prev.cut) ||
                    (ot.busy && inst.safety_conflict(slot.job.cut, seq[size_t(o)][ot.next].job.cut)))
                    return "cut " + std::to_string(slot.job.cut) + " violates the safety distance to reclaimer " +
                           std::to_string(o) + " at " + time_str(now);
            }
            st.busy = true;
            st.start = now;
            st.completion = now + inst.job_cost(st.prev, slot.job);
            claimed[slot.job.cut] = true;
        }
        return {};
    };

    if (auto err = try_starts(); !err.empty()) return {false, {}, err};

    auto any_busy = [&]() {
        for (const RState& st : rs)
            if (st.busy) return true;
        return false;
    };

    while (any_busy()) {
        double t = std::numeric_limits<double>::infinity();
        for (const RState& st : rs)
            if (st.busy) t = std::min(t, st.completion);
        now = t;
        for (int r = 0; r < R; ++r) {
            RState& st = rs[size_t(r)];
            if (!st.busy || st.completion != t) continue;
            const Slot& slot = seq[size_t(r)][st.next];
            reclaimed[slot.job.cut] = true;
            out.segment(slot.delivery, r)
                .push_back({slot.job.cut, slot.job.dir, st.start, st.completion, slot.ahead});
            st.prev = slot.job;
            st.busy = false;
            ++st.next;
        }
        if (auto err = try_starts(); !err.empty()) return {false, {}, err};
    }

    for (int r = 0; r < R; ++r)
        if (rs[size_t(r)].next < seq[size_t(r)].size())
            return {false, {}, "reclaimer " + std::to_string(r) + " never started cut " +
                               std::to_string(seq[size_t(r)][rs[size_t(r)].next].job.cut)};

    return {true, std::move(out), {}};
}

}  // namespace romsched
