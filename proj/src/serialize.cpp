#include "krdom/serialize.hpp"

#include <sstream>

namespace krdom {

using nlohmann::ordered_json;

const char* mode_name(AugmentationMode mode) {
  return mode == AugmentationMode::kLiteral ? "literal" : "economical";
}

ordered_json to_json(const DominationResult& result) {
  ordered_json j;
  j["valid"] = result.valid;
  j["size"] = result.size;
  j["witness"] = result.witness;
  j["deficiency"] = result.deficiency;
  return j;
}

ordered_json to_json(const ConstructionTrace& trace) {
  ordered_json j;
  j["mode"] = mode_name(trace.mode);
  j["p_used"] = trace.p_used;
  j["p_raw"] = trace.p_raw;
  j["p_clamped"] = trace.p_clamped;
  j["min_degree_used"] = trace.min_degree_used;
  j["sampled"] = trace.sampled;
  j["bad_vertices"] = trace.bad_vertices;
  j["augmentation"] = trace.augmentation;
  j["final"] = trace.final_set;
  j["sizes"] = {{"sampled", trace.sampled.size()},
                {"bad", trace.bad_vertices.size()},
                {"augmentation", trace.augmentation.size()},
                {"final", trace.final_set.size()}};
  return j;
}

std::string to_csv_row(const ConstructionTrace& trace) {
  std::ostringstream out;
  out << mode_name(trace.mode) << ',' << trace.p_used << ',' << trace.sampled.size() << ','
      << trace.bad_vertices.size() << ',' << trace.augmentation.size() << ','
      << trace.final_set.size();
  return out.str();
}

namespace {

ordered_json trial_to_json(const TrialRecord& record) {
  ordered_json j;
  j["trial_index"] = record.trial_index;
  j["derived_seed"] = record.derived_seed;
  j["n"] = record.n;
  j["edge_count"] = record.edge_count;
  j["fixed_set_valid"] = record.fixed_set_valid;
  if (record.no_smaller_set) j["no_smaller_set"] = *record.no_smaller_set;
  if (record.gamma_exact) j["gamma_exact"] = *record.gamma_exact;
  j["bad_vertex_count"] = record.bad_vertex_count;
  if (record.literal_size) j["literal_size"] = *record.literal_size;
  if (record.economical_size) j["economical_size"] = *record.economical_size;
  return j;
}

}  // namespace

ordered_json to_json(const ExperimentReport& report, bool include_runtime) {
  ordered_json j;
  j["schema"] = 1;
  j["experiment"] = report.kind;

  ordered_json params;
  params["n"] = report.n;
  params["k"] = report.k;
  params["r"] = report.r;
  params["trials"] = report.trials;
  if (report.kind != "construction") {
    params["p"] = report.p;
    params["p_multiplier"] = report.p_multiplier;
    params["threshold"] = report.threshold;
  }
  params["master_seed"] = report.master_seed;
  if (!report.fixture.empty()) params["fixture"] = report.fixture;
  j["parameters"] = params;

  ordered_json agg;
  agg["success_count"] = report.success_count;
  agg["success_frequency"] = report.success_frequency;
  agg["wilson_lo"] = report.wilson.lo;
  agg["wilson_hi"] = report.wilson.hi;
  if (report.kind != "construction") {
    agg["theoretical_failure_bound"] = report.theoretical_failure_bound;
  }
  if (report.kind == "threshold") {
    agg["enumeration_enabled"] = report.enumeration_enabled;
    agg["gamma_confirmed_count"] = report.gamma_confirmed_count;
  }
  if (report.construction) {
    const ConstructionAggregate& c = *report.construction;
    ordered_json cj;
    cj["literal"] = {{"min", c.literal_min}, {"mean", c.literal_mean}, {"max", c.literal_max}};
    cj["economical"] = {
        {"min", c.economical_min}, {"mean", c.economical_mean}, {"max", c.economical_max}};
    cj["size_bound"] = c.size_bound;
    cj["min_degree"] = c.min_degree;
    if (c.girth) {
      cj["girth"] = *c.girth;
    } else {
      cj["girth"] = nullptr;
    }
    cj["hypotheses_hold"] = c.hypotheses_hold;
    if (c.gamma_exact) cj["gamma_exact"] = *c.gamma_exact;
    cj["all_valid"] = c.all_valid;
    agg["construction"] = cj;
  }
  j["aggregate"] = agg;

  ordered_json trials = ordered_json::array();
  for (const TrialRecord& record : report.trial_records) trials.push_back(trial_to_json(record));
  j["trials"] = trials;

  if (include_runtime) j["runtime_ms"] = report.runtime_ms;
  return j;
}

std::string to_csv(const ExperimentReport& report) {
  std::ostringstream out;
  out << "trial_index,derived_seed,n,edge_count,fixed_set_valid,no_smaller_set,gamma_exact,"
         "bad_vertex_count,literal_size,economical_size\n";
  const auto opt_int = [](const std::optional<int>& v) {
    return v ? std::to_string(*v) : std::string();
  };
  for (const TrialRecord& r : report.trial_records) {
    out << r.trial_index << ',' << r.derived_seed << ',' << r.n << ',' << r.edge_count << ','
        << (r.fixed_set_valid ? 1 : 0) << ','
        << (r.no_smaller_set ? std::to_string(*r.no_smaller_set ? 1 : 0) : std::string()) << ','
        << opt_int(r.gamma_exact) << ',' << r.bad_vertex_count << ',' << opt_int(r.literal_size)
        << ',' << opt_int(r.economical_size) << '\n';
  }
  return out.str();
}

}  // namespace krdom
