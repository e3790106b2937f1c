#include "romsched/instance_io.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "romsched/rng.hpp"

namespace romsched {

using ordered_json = nlohmann::ordered_json;

const char* tightness_name(Tightness t) {
    switch (t) {
        case Tightness::Loose: return "loose";
        case Tightness::Medium: return "medium";
        case Tightness::Tight: return "tight";
    }
    return "?";
}

bool parse_tightness(const std::string& s, Tightness& out) {
    if (s == "loose") out = Tightness::Loose;
    else if (s == "medium") out = Tightness::Medium;
    else if (s == "tight") out = Tightness::Tight;
    else return false;
    return true;
}

std::string instance_tuple_name(int deliveries, int reclaimers, int directions) {
    std::ostringstream os;
    os << "(" << deliveries << "-" << reclaimers << "-" << directions << ")";
    return os.str();
}

namespace {

// Fixed stockyard layout of the synthetic generator.
constexpr int kRows = 4;
constexpr int kStockpilesPerRow = 4;
constexpr int kBenches = 4;
constexpr int kCutsPerBench = 10;

// Grade magnitudes differ per mineral by design; relative spreads control
// how much stockpiles and cuts scatter around them.
constexpr double kMagnitude[8] = {62.0, 4.5, 2.4, 0.09, 11.0, 1.3, 27.0, 0.55};
constexpr double kRelBetweenStockpiles = 0.06;
constexpr double kRelWithinStockpile = 0.03;

// Delivery targets may consume at most this share of the accessible tonnage
// of their material, or construction could run out of cuts.
constexpr double kMaterialMargin = 0.8;

double tightness_factor(Tightness t) {
    switch (t) {
        case Tightness::Loose: return 3.0;
        case Tightness::Medium: return 1.0;
        case Tightness::Tight: return 0.35;
    }
    return 1.0;
}

}  // namespace

Instance generate(const GeneratorSpec& spec) {
    if (spec.deliveries < 1 || spec.deliveries > 10)
        throw ModelError("generator: deliveries must be in 1..10");
    if (spec.reclaimers != 2 && spec.reclaimers != 3)
        throw ModelError("generator: reclaimers must be 2 or 3");
    if (spec.deliveries > 9 && spec.reclaimers != 3)
        throw ModelError("generator: more than 9 deliveries require 3 reclaimers");
    if (spec.directions != 1 && spec.directions != 2)
        throw ModelError("generator: directions must be 1 or 2");
    if (spec.minerals < 1 || spec.minerals > 8)
        throw ModelError("generator: minerals must be in 1..8");
    if (!(spec.reclaim_rate > 0.0))
        throw ModelError("generator: reclaim rate must be positive");
    if (!(spec.cut_tonnage_lo > 0.0) || spec.cut_tonnage_hi < spec.cut_tonnage_lo)
        throw ModelError("generator: bad cut tonnage range");
    if (!(spec.delivery_tonnage_lo > 0.0) || spec.delivery_tonnage_hi < spec.delivery_tonnage_lo)
        throw ModelError("generator: bad delivery tonnage range");

    RandomEngine rng(spec.seed);

    Instance inst;
    inst.name = instance_tuple_name(spec.deliveries, spec.reclaimers, spec.directions);
    inst.minerals = spec.minerals;
    inst.directions = spec.directions;
    inst.safety_min_columns = spec.safety_min_columns;
    inst.cuts_per_bench = kCutsPerBench;
    inst.cost = spec.cost;

    // per-stockpile base grade levels
    double base[kRows][kStockpilesPerRow][8];
    for (int row = 0; row < kRows; ++row)
        for (int sp = 0; sp < kStockpilesPerRow; ++sp)
            for (int k = 0; k < spec.minerals; ++k)
                base[row][sp][k] =
                    kMagnitude[k] * (1.0 + kRelBetweenStockpiles * rng.normal());

    auto material_of = [](int row, int sp) { return (row + sp) % 2; };

    for (int row = 0; row < kRows; ++row) {
        for (int sp = 0; sp < kStockpilesPerRow; ++sp) {
            for (int bench = 1; bench <= kBenches; ++bench) {
                for (int pos = 1; pos <= kCutsPerBench; ++pos) {
                    Cut c;
                    c.id = uint32_t(inst.cuts.size());
                    c.row = row;
                    c.stockpile = sp;
                    c.bench = bench;
                    c.position = pos;
                    c.material = material_of(row, sp);
                    c.tonnage = rng.uniform(spec.cut_tonnage_lo, spec.cut_tonnage_hi);
                    c.reclaim_time = c.tonnage / spec.reclaim_rate;
                    c.grades.resize(size_t(spec.minerals));
                    for (int k = 0; k < spec.minerals; ++k) {
                        double g = base[row][sp][k] * (1.0 + kRelWithinStockpile * rng.normal());
                        c.grades[size_t(k)] = std::max(g, kMagnitude[k] * 0.01);
                    }
                    inst.cuts.push_back(std::move(c));
                }
            }
        }
    }

    auto cut_id = [](int row, int sp, int bench, int pos) {
        return uint32_t(((row * kStockpilesPerRow + sp) * kBenches + (bench - 1)) * kCutsPerBench +
                        (pos - 1));
    };

    // reclaimers on overlapping adjacent row pairs; initial jobs on rows that
    // are pairwise distinct so nobody starts inside a safety zone
    for (int r = 0; r < spec.reclaimers; ++r) {
        Reclaimer rec;
        rec.id = r;
        rec.rows = {r, r + 1};
        rec.dirs = spec.directions == 2
                       ? std::vector<Direction>{Direction::Phi1, Direction::Phi2}
                       : std::vector<Direction>{Direction::Phi1};
        int start_row = r == 0 ? rec.rows[0] : rec.rows[1];
        int start_sp = -1;
        for (int sp = 0; sp < kStockpilesPerRow; ++sp)
            if (material_of(start_row, sp) == 0) { start_sp = sp; break; }
        rec.entry_cut = cut_id(start_row, start_sp, 1, 1);  // Phi1 entry
        rec.entry_dir = Direction::Phi1;
        inst.reclaimers.push_back(std::move(rec));
    }

    // deliveries alternate the two material kinds, starting with kind 0
    std::vector<double> targets(size_t(spec.deliveries));
    for (int d = 0; d < spec.deliveries; ++d)
        targets[size_t(d)] = rng.uniform(spec.delivery_tonnage_lo, spec.delivery_tonnage_hi);

    std::vector<int> accessible_rows;
    for (const Reclaimer& r : inst.reclaimers)
        for (int row : r.rows)
            if (std::find(accessible_rows.begin(), accessible_rows.end(), row) ==
                accessible_rows.end())
                accessible_rows.push_back(row);

    for (int m = 0; m < 2; ++m) {
        double avail = 0.0;
        for (const Cut& c : inst.cuts)
            if (c.material == m &&
                std::find(accessible_rows.begin(), accessible_rows.end(), c.row) !=
                    accessible_rows.end())
                avail += c.tonnage;
        double cap = kMaterialMargin * avail;
        double sum = 0.0, nlo = 0.0;
        for (int d = 0; d < spec.deliveries; ++d) {
            if (d % 2 != m) continue;
            sum += targets[size_t(d)];
            nlo += spec.delivery_tonnage_lo;
        }
        if (sum <= cap) continue;
        if (nlo > cap)
            throw ModelError("generator: delivery targets of material " + std::to_string(m) +
                             " exceed the accessible tonnage even at the range minimum");
        // squeeze towards the range minimum to fit under the cap
        double s = (cap - nlo) / (sum - nlo);
        for (int d = 0; d < spec.deliveries; ++d)
            if (d % 2 == m)
                targets[size_t(d)] = spec.delivery_tonnage_lo +
                                     (targets[size_t(d)] - spec.delivery_tonnage_lo) * s;
    }

    // quality bounds: centred on the material's accessible mean grade, wide
    // enough to always cover the instance-wide mean
    double mean_all[8] = {0};
    int n_all = 0;
    double mean_mat[2][8] = {{0}};
    double sd_mat[2][8] = {{0}};
    int n_mat[2] = {0, 0};
    for (const Cut& c : inst.cuts) {
        if (std::find(accessible_rows.begin(), accessible_rows.end(), c.row) ==
            accessible_rows.end())
            continue;
        ++n_all;
        ++n_mat[c.material];
        for (int k = 0; k < spec.minerals; ++k) {
            mean_all[k] += c.grades[size_t(k)];
            mean_mat[c.material][k] += c.grades[size_t(k)];
        }
    }
    for (int k = 0; k < spec.minerals; ++k) {
        mean_all[k] /= double(n_all);
        for (int m = 0; m < 2; ++m) mean_mat[m][k] /= double(n_mat[m]);
    }
    for (const Cut& c : inst.cuts) {
        if (std::find(accessible_rows.begin(), accessible_rows.end(), c.row) ==
            accessible_rows.end())
            continue;
        for (int k = 0; k < spec.minerals; ++k) {
            double dlt = c.grades[size_t(k)] - mean_mat[c.material][k];
            sd_mat[c.material][k] += dlt * dlt;
        }
    }
    for (int m = 0; m < 2; ++m)
        for (int k = 0; k < spec.minerals; ++k)
            sd_mat[m][k] = std::sqrt(sd_mat[m][k] / double(n_mat[m]));

    const double factor = tightness_factor(spec.tightness);
    for (int d = 0; d < spec.deliveries; ++d) {
        Delivery dl;
        dl.id = d + 1;
        dl.material = d % 2;
        dl.tonnage = targets[size_t(d)];
        dl.bounds.resize(size_t(spec.minerals));
        for (int k = 0; k < spec.minerals; ++k) {
            double center = mean_mat[dl.material][k];
            double half = std::max(factor * sd_mat[dl.material][k],
                                   1.02 * std::abs(mean_all[k] - center));
            dl.bounds[size_t(k)] = {center - half, center + half};
        }
        inst.deliveries.push_back(std::move(dl));
    }

    inst.finalize();
    return inst;
}

// ---------------------------------------------------------------------------
// serialization

namespace {

constexpr const char* kInstanceSchema = "romsched-instance/1";
constexpr const char* kScheduleSchema = "romsched-schedule/1";

Direction direction_from_label(int phi, const std::string& where) {
    if (phi == 1) return Direction::Phi1;
    if (phi == 2) return Direction::Phi2;
    throw ParseError(where + ": phi must be 1 or 2, got " + std::to_string(phi));
}

ordered_json parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path);
    try {
        return ordered_json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(path + ": " + e.what());
    }
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open " + path + " for writing");
    out << content;
    if (!out) throw IoError("failed writing " + path);
}

template <typename T>
T field(const ordered_json& j, const char* key, const std::string& where) {
    auto it = j.find(key);
    if (it == j.end()) throw ParseError(where + ": missing field '" + key + "'");
    try {
        return it->get<T>();
    } catch (const nlohmann::json::exception&) {
        throw ParseError(where + ": field '" + key + "' has the wrong type");
    }
}

}  // namespace

std::string instance_to_string(const Instance& inst) {
    ordered_json j;
    j["schema"] = kInstanceSchema;
    j["name"] = inst.name;
    j["minerals"] = inst.minerals;
    j["directions"] = inst.directions;
    j["safety_min_columns"] = inst.safety_min_columns;
    j["cuts_per_bench"] = inst.cuts_per_bench;
    j["cost_model"] = {{"row_move", inst.cost.row_move},
                       {"col_move", inst.cost.col_move},
                       {"dir_change", inst.cost.dir_change}};
    ordered_json cuts = ordered_json::array();
    for (const Cut& c : inst.cuts) {
        ordered_json jc;
        jc["id"] = c.id;
        jc["row"] = c.row;
        jc["stockpile"] = c.stockpile;
        jc["bench"] = c.bench;
        jc["position"] = c.position;
        jc["material"] = c.material;
        jc["gamma"] = c.tonnage;
        jc["tau"] = c.reclaim_time;
        jc["m"] = c.grades;
        cuts.push_back(std::move(jc));
    }
    j["cuts"] = std::move(cuts);
    ordered_json recs = ordered_json::array();
    for (const Reclaimer& r : inst.reclaimers) {
        ordered_json jr;
        jr["id"] = r.id;
        jr["rows"] = r.rows;
        std::vector<int> phis;
        for (Direction d : r.dirs) phis.push_back(direction_label(d));
        jr["phi"] = phis;
        jr["entry_cut"] = r.entry_cut;
        jr["entry_phi"] = direction_label(r.entry_dir);
        recs.push_back(std::move(jr));
    }
    j["reclaimers"] = std::move(recs);
    ordered_json dels = ordered_json::array();
    for (const Delivery& d : inst.deliveries) {
        ordered_json jd;
        jd["id"] = d.id;
        jd["material"] = d.material;
        jd["gamma"] = d.tonnage;
        ordered_json bounds = ordered_json::array();
        for (const Bounds& b : d.bounds) bounds.push_back({b.lo, b.hi});
        jd["bounds"] = std::move(bounds);
        dels.push_back(std::move(jd));
    }
    j["deliveries"] = std::move(dels);
    return j.dump(2) + "\n";
}

void save_instance(const Instance& inst, const std::string& path) {
    write_file(path, instance_to_string(inst));
}

Instance load_instance(const std::string& path) {
    ordered_json j = parse_file(path);
    if (field<std::string>(j, "schema", path) != kInstanceSchema)
        throw ParseError(path + ": unexpected schema, want " + std::string(kInstanceSchema));

    Instance inst;
    inst.name = field<std::string>(j, "name", path);
    inst.minerals = field<int>(j, "minerals", path);
    inst.directions = field<int>(j, "directions", path);
    inst.safety_min_columns = field<int>(j, "safety_min_columns", path);
    inst.cuts_per_bench = field<int>(j, "cuts_per_bench", path);
    const ordered_json& cm = j.at("cost_model");
    inst.cost.row_move = field<double>(cm, "row_move", path + ": cost_model");
    inst.cost.col_move = field<double>(cm, "col_move", path + ": cost_model");
    inst.cost.dir_change = field<double>(cm, "dir_change", path + ": cost_model");

    for (const ordered_json& jc : field<ordered_json>(j, "cuts", path)) {
        std::string where = path + ": cuts[" + std::to_string(inst.cuts.size()) + "]";
        Cut c;
        c.id = field<uint32_t>(jc, "id", where);
        c.row = field<int>(jc, "row", where);
        c.stockpile = field<int>(jc, "stockpile", where);
        c.bench = field<int>(jc, "bench", where);
        c.position = field<int>(jc, "position", where);
        c.material = field<int>(jc, "material", where);
        c.tonnage = field<double>(jc, "gamma", where);
        c.reclaim_time = field<double>(jc, "tau", where);
        c.grades = field<std::vector<double>>(jc, "m", where);
        inst.cuts.push_back(std::move(c));
    }
    for (const ordered_json& jr : field<ordered_json>(j, "reclaimers", path)) {
        std::string where = path + ": reclaimers[" + std::to_string(inst.reclaimers.size()) + "]";
        Reclaimer r;
        r.id = field<int>(jr, "id", where);
        r.rows = field<std::vector<int>>(jr, "rows", where);
        for (int phi : field<std::vector<int>>(jr, "phi", where))
            r.dirs.push_back(direction_from_label(phi, where));
        r.entry_cut = field<uint32_t>(jr, "entry_cut", where);
        r.entry_dir = direction_from_label(field<int>(jr, "entry_phi", where), where);
        inst.reclaimers.push_back(std::move(r));
    }
    for (const ordered_json& jd : field<ordered_json>(j, "deliveries", path)) {
        std::string where = path + ": deliveries[" + std::to_string(inst.deliveries.size()) + "]";
        Delivery d;
        d.id = field<int>(jd, "id", where);
        d.material = field<int>(jd, "material", where);
        d.tonnage = field<double>(jd, "gamma", where);
        for (const ordered_json& jb : field<ordered_json>(jd, "bounds", where)) {
            if (!jb.is_array() || jb.size() != 2)
                throw ParseError(where + ": bounds entries must be [lo, hi] pairs");
            d.bounds.push_back({jb[0].get<double>(), jb[1].get<double>()});
        }
        inst.deliveries.push_back(std::move(d));
    }

    inst.finalize();
    return inst;
}

std::string schedule_to_string(const Schedule& s, const Instance& inst) {
    ordered_json j;
    j["schema"] = kScheduleSchema;
    j["instance"] = inst.name;
    j["deliveries"] = s.deliveries;
    j["reclaimers"] = s.reclaimers;
    ordered_json segs = ordered_json::array();
    for (int d = 1; d <= s.deliveries; ++d) {
        for (int r = 0; r < s.reclaimers; ++r) {
            const auto& seg = s.segment(d, r);
            if (seg.empty()) continue;
            ordered_json js;
            js["delivery"] = d;
            js["reclaimer"] = r;
            ordered_json jobs = ordered_json::array();
            for (const TimedJob& tj : seg) {
                ordered_json jj;
                jj["cut"] = tj.cut;
                jj["phi"] = direction_label(tj.dir);
                jj["start"] = tj.start;
                jj["completion"] = tj.completion;
                if (tj.ahead) jj["ahead"] = true;
                jobs.push_back(std::move(jj));
            }
            js["jobs"] = std::move(jobs);
            segs.push_back(std::move(js));
        }
    }
    j["segments"] = std::move(segs);
    return j.dump(2) + "\n";
}

void save_schedule(const Schedule& s, const Instance& inst, const std::string& path) {
    write_file(path, schedule_to_string(s, inst));
}

Schedule load_schedule(const std::string& path, const Instance& inst) {
    ordered_json j = parse_file(path);
    if (field<std::string>(j, "schema", path) != kScheduleSchema)
        throw ParseError(path + ": unexpected schema, want " + std::string(kScheduleSchema));
    int D = field<int>(j, "deliveries", path);
    int R = field<int>(j, "reclaimers", path);
    if (D != int(inst.deliveries.size()) || R != int(inst.reclaimers.size()))
        throw ParseError(path + ": schedule dimensions do not match the instance");

    Schedule s(D, R);
    for (const ordered_json& js : field<ordered_json>(j, "segments", path)) {
        std::string where = path + ": segment";
        int d = field<int>(js, "delivery", where);
        int r = field<int>(js, "reclaimer", where);
        if (d < 1 || d > D || r < 0 || r >= R)
            throw ParseError(where + ": delivery/reclaimer out of range");
        for (const ordered_json& jj : field<ordered_json>(js, "jobs", where)) {
            TimedJob tj;
            tj.cut = field<uint32_t>(jj, "cut", where);
            if (tj.cut >= inst.cut_count())
                throw ParseError(where + ": unknown cut id " + std::to_string(tj.cut));
            tj.dir = direction_from_label(field<int>(jj, "phi", where), where);
            tj.start = field<double>(jj, "start", where);
            tj.completion = field<double>(jj, "completion", where);
            tj.ahead = jj.value("ahead", false);
            s.segment(d, r).push_back(tj);
        }
    }
    return s;
}

}  // namespace romsched
