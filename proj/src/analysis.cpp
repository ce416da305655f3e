#include "loopforge/analysis.hpp"

#include <chrono>
#include <sstream>

#include <json.hpp>

#include "loopforge/errors.hpp"

namespace loopforge {

namespace {

using ordered_json = nlohmann::ordered_json;

std::vector<int> labels(const std::vector<int>& zero_based) {
  std::vector<int> out;
  out.reserve(zero_based.size());
  for (int v : zero_based) out.push_back(v + 1);
  return out;
}

GroupSummary summarize(std::string name, const PermGroup& G) {
  GroupSummary s;
  s.name = std::move(name);
  s.order = G.order();
  try {
    s.derived_length = derived_length(G);
  } catch (const LoopError&) {
  }
  try {
    s.nilpotency_class = nilpotency_class(G);
  } catch (const LoopError&) {
  }
  if (!G.is_trivial() && is_abelian(G)) {
    int p = static_cast<int>(G.generators().front().order());
    if (is_elementary_abelian(G, p)) s.elementary_abelian_p = p;
  }
  return s;
}

}  // namespace

AnalysisReport analyze(const LoopTable& L, const AnalyzeOptions& options) {
  AnalysisReport rep;
  rep.order = L.size();
  rep.identity_label = L.identity() + 1;

  auto phase = [&](const char* name, auto&& body) {
    auto t0 = std::chrono::steady_clock::now();
    try {
      body();
    } catch (const LoopError& e) {
      rep.errors.push_back(PhaseError{name, errc_name(e.code()), e.what()});
    }
    auto t1 = std::chrono::steady_clock::now();
    rep.timings_ms[name] = std::chrono::duration<double, std::milli>(t1 - t0).count();
  };

  phase("properties", [&] { rep.properties = PropertyFlags::of(L); });

  phase("groups", [&] {
    rep.groups.push_back(summarize("mlt", mlt(L)));
    rep.groups.push_back(summarize("lmlt", lmlt(L)));
    rep.groups.push_back(summarize("rmlt", rmlt(L)));
    rep.groups.push_back(summarize("inn", inn(L)));
    rep.groups.push_back(summarize("linn", linn(L)));
    rep.groups.push_back(summarize("rinn", rinn(L)));
  });

  phase("substructures", [&] {
    rep.nucleus_left_m = labels(nucleus_left(L).members);
    rep.nucleus_middle_m = labels(nucleus_middle(L).members);
    rep.nucleus_right_m = labels(nucleus_right(L).members);
    rep.nucleus_m = labels(nucleus(L).members);
    rep.commutant_m = labels(commutant(L));
    rep.center_m = labels(center_loop(L).members);
    rep.derived_m = labels(derived_subloop(L).members);
    rep.associator_m = labels(associator_subloop(L).members);
  });

  phase("normal_subloops", [&] {
    for (const SubloopSet& N : all_normal_subloops(L, options.normal_cap))
      rep.normal_subloops.push_back(labels(N.members));
  });

  phase("series", [&] {
    rep.solvable = is_solvable(L);
    for (const SubloopSet& Z : upper_central_series(L)) rep.upper_central.push_back(labels(Z.members));
    rep.centrally_nilpotent = rep.upper_central.back().size() == static_cast<std::size_t>(L.size());
  });

  if (options.with_isotopes)
    phase("isotopy", [&] { rep.isotopy = isotopy_classes(L, options.isotopy_cap); });

  return rep;
}

std::string emit_json(const AnalysisReport& rep) {
  ordered_json j;
  j["order"] = rep.order;

  ordered_json props;
  props["identity"] = rep.identity_label;
  props["right_bol"] = rep.properties.right_bol;
  props["left_bol"] = rep.properties.left_bol;
  props["moufang"] = rep.properties.moufang;
  props["bruck"] = rep.properties.bruck;
  props["aip"] = rep.properties.aip;
  props["aaip"] = rep.properties.aaip;
  props["associative"] = rep.properties.associative;
  props["commutative"] = rep.properties.commutative;
  props["power_associative"] = rep.properties.power_associative;
  props["right_power_alternative"] = rep.properties.right_power_alternative;
  props["uniquely_2_divisible"] = rep.properties.uniquely_2_divisible;
  props["exponent"] = rep.properties.exponent;
  j["properties"] = std::move(props);

  ordered_json groups;
  for (const GroupSummary& g : rep.groups) {
    ordered_json e;
    e["order"] = g.order;
    if (g.derived_length) e["derived_length"] = *g.derived_length;
    if (g.nilpotency_class) e["nilpotency_class"] = *g.nilpotency_class;
    if (g.elementary_abelian_p) e["elementary_abelian_p"] = *g.elementary_abelian_p;
    groups[g.name] = std::move(e);
  }
  j["groups"] = std::move(groups);

  ordered_json subs;
  subs["nucleus_left"] = rep.nucleus_left_m;
  subs["nucleus_middle"] = rep.nucleus_middle_m;
  subs["nucleus_right"] = rep.nucleus_right_m;
  subs["nucleus"] = rep.nucleus_m;
  subs["commutant"] = rep.commutant_m;
  subs["center"] = rep.center_m;
  subs["derived"] = rep.derived_m;
  subs["associator"] = rep.associator_m;
  j["substructures"] = std::move(subs);

  j["normal_subloops"] = rep.normal_subloops;

  ordered_json series;
  series["solvable"] = rep.solvable;
  series["centrally_nilpotent"] = rep.centrally_nilpotent;
  series["upper_central"] = rep.upper_central;
  j["series"] = std::move(series);

  if (rep.isotopy) {
    ordered_json iso;
    iso["class_count"] = rep.isotopy->classes.size();
    ordered_json classes = ordered_json::array();
    for (const IsotopyClass& c : rep.isotopy->classes) {
      ordered_json e;
      e["representative"] = c.representative + 1;
      e["members"] = labels(c.members);
      classes.push_back(std::move(e));
    }
    iso["classes"] = std::move(classes);
    j["isotopy"] = std::move(iso);
  }

  if (!rep.errors.empty()) {
    ordered_json errs = ordered_json::array();
    for (const PhaseError& e : rep.errors) {
      ordered_json o;
      o["phase"] = e.phase;
      o["code"] = e.code;
      o["message"] = e.message;
      errs.push_back(std::move(o));
    }
    j["errors"] = std::move(errs);
  }

  j["timings_ms"] = rep.timings_ms;
  return j.dump(2) + "\n";
}

std::string emit_text(const AnalysisReport& rep) {
  std::ostringstream out;
  auto list = [](const std::vector<int>& v) {
    std::ostringstream s;
    s << '{';
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) s << ',';
      s << v[i];
    }
    s << '}';
    return s.str();
  };

  out << "loop of order " << rep.order << ", identity " << rep.identity_label << "\n";
  const PropertyFlags& p = rep.properties;
  out << "properties: right_bol=" << p.right_bol << " left_bol=" << p.left_bol << " moufang=" << p.moufang
      << " bruck=" << p.bruck << " aip=" << p.aip << " aaip=" << p.aaip << " associative=" << p.associative
      << " commutative=" << p.commutative << "\n";
  out << "            power_associative=" << p.power_associative
      << " right_power_alternative=" << p.right_power_alternative
      << " uniquely_2_divisible=" << p.uniquely_2_divisible << " exponent=" << p.exponent << "\n";
  for (const GroupSummary& g : rep.groups) {
    out << "group " << g.name << ": order " << g.order;
    if (g.derived_length) out << ", derived length " << *g.derived_length;
    if (g.nilpotency_class) out << ", nilpotency class " << *g.nilpotency_class;
    if (g.elementary_abelian_p) out << ", elementary abelian (p=" << *g.elementary_abelian_p << ")";
    out << "\n";
  }
  out << "nucleus left " << list(rep.nucleus_left_m) << " middle " << list(rep.nucleus_middle_m) << " right "
      << list(rep.nucleus_right_m) << " full " << list(rep.nucleus_m) << "\n";
  out << "commutant " << list(rep.commutant_m) << ", center " << list(rep.center_m) << "\n";
  out << "derived subloop " << list(rep.derived_m) << ", associator subloop " << list(rep.associator_m) << "\n";
  out << "normal subloops (" << rep.normal_subloops.size() << "):";
  for (const auto& N : rep.normal_subloops) out << ' ' << list(N);
  out << "\n";
  out << "solvable=" << rep.solvable << " centrally_nilpotent=" << rep.centrally_nilpotent
      << " upper central terms:";
  for (const auto& Z : rep.upper_central) out << ' ' << list(Z);
  out << "\n";
  if (rep.isotopy) {
    out << "isotopy classes: " << rep.isotopy->classes.size() << "\n";
    for (const IsotopyClass& c : rep.isotopy->classes)
      out << "  representative " << c.representative + 1 << ", members " << list(labels(c.members)) << "\n";
  }
  for (const PhaseError& e : rep.errors)
    out << "phase " << e.phase << " failed [" << e.code << "]: " << e.message << "\n";
  return out.str();
}

}  // namespace loopforge
