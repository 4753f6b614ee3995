#pragma once

#include <json.hpp>

#include <sstream>
#include <string>
#include <vector>

#include "caysync/asymptotics.hpp"
#include "caysync/bitset.hpp"
#include "caysync/group.hpp"
#include "caysync/measures.hpp"
#include "caysync/numeric.hpp"
#include "caysync/spread.hpp"

namespace caysync {

// Emission always goes through ordered_json so key order (and therefore the
// byte-level output) is stable across runs.
using Json = nlohmann::ordered_json;

inline Json ext_nat_json(const ExtNat& d) {
  if (d.is_finite()) return Json(d.value());
  return Json("inf");
}

inline std::vector<std::string> vertex_labels(const VertexSet& vs,
                                              const std::vector<std::string>& labels) {
  std::vector<std::string> out;
  out.reserve(vs.count());
  vs.for_each([&](std::size_t v) { out.push_back(labels[v]); });
  return out;
}

inline Json trace_json(const SpreadTrace& trace, const std::vector<std::string>& labels) {
  Json arr = Json::array();
  for (const auto& state : trace.states) arr.push_back(vertex_labels(state, labels));
  return arr;
}

// --- Measure tables ---------------------------------------------------------

inline Json measure_entry_json(const MeasureEntry& e) {
  Json j;
  j["s"] = e.s;
  j["t"] = e.t;
  j["p"] = rational_string(e.p);
  j["v"] = rational_string(e.v);
  j["d"] = ext_nat_json(e.d);
  return j;
}

inline Json measure_table_json(const MeasureTable& tab) {
  Json arr = Json::array();
  for (const auto& e : tab.entries) arr.push_back(measure_entry_json(e));
  return arr;
}

inline std::string measure_table_csv(const MeasureTable& tab) {
  std::ostringstream out;
  out << "s,t,p,v,d\n";
  for (const auto& e : tab.entries) {
    out << e.s << "," << e.t << "," << rational_string(e.p) << "," << rational_string(e.v)
        << "," << e.d.str() << "\n";
  }
  return out.str();
}

// One markdown block per measure, rows s, columns t.
inline std::string measure_table_markdown(const MeasureTable& tab) {
  std::ostringstream out;
  auto block = [&](const std::string& name, auto cell) {
    out << "### " << name << "\n\n| s \\ t |";
    for (int t = 1; t <= tab.t_max; ++t) out << " " << t << " |";
    out << "\n|---|";
    for (int t = 1; t <= tab.t_max; ++t) out << "---|";
    out << "\n";
    for (std::size_t s = 1; s < tab.n; ++s) {
      out << "| " << s << " |";
      for (int t = 1; t <= tab.t_max; ++t) out << " " << cell(tab.at(s, t)) << " |";
      out << "\n";
    }
    out << "\n";
  };
  block("p (probability to synchrony)",
        [](const MeasureEntry& e) { return rational_string(e.p); });
  block("v (velocity to synchrony)",
        [](const MeasureEntry& e) { return rational_string(e.v); });
  block("d (higher diameter)", [](const MeasureEntry& e) { return e.d.str(); });
  return out.str();
}

// --- Best generating sets ---------------------------------------------------

inline std::string exponent_set_label(const std::vector<std::size_t>& exps) {
  std::string s = "{";
  for (std::size_t i = 0; i < exps.size(); ++i) {
    if (i) s += ",";
    s += cyclic_label(static_cast<int>(exps[i]));
  }
  return s + "}";
}

inline Json best_h_json(const BestHReport& rep) {
  Json j;
  j["h"] = rep.h;
  j["t"] = rep.t;
  j["s"] = rep.s;
  j["min_d"] = ext_nat_json(rep.min_d);
  Json achievers = Json::array();
  for (const auto& a : rep.achievers) {
    Json labels = Json::array();
    for (auto e : a) labels.push_back(cyclic_label(static_cast<int>(e)));
    achievers.push_back(labels);
  }
  j["achievers"] = achievers;
  Json classes = Json::array();
  for (const auto& cls : rep.classes) {
    Json members = Json::array();
    for (const auto& m : cls) {
      Json labels = Json::array();
      for (auto e : m) labels.push_back(cyclic_label(static_cast<int>(e)));
      members.push_back(labels);
    }
    Json c;
    c["rep"] = members.front();
    c["members"] = members;
    classes.push_back(c);
  }
  j["classes"] = classes;
  return j;
}

// Markdown layout mirroring a smallest-d table: one column group per h,
// sub-columns t = 1..h, rows s; cells blank when s < t.
inline std::string table1_markdown(std::size_t n,
                                   const std::vector<BestHReport>& cells) {
  auto find = [&](std::size_t h, int t, std::size_t s) -> const BestHReport* {
    for (const auto& c : cells) {
      if (c.h == h && c.t == t && c.s == s) return &c;
    }
    return nullptr;
  };
  std::ostringstream out;
  out << "| s |";
  for (std::size_t h = 1; h < n; ++h) {
    for (int t = 1; t <= static_cast<int>(h); ++t) {
      out << " h=" << h << ",t=" << t << " |";
    }
  }
  out << "\n|---|";
  for (std::size_t h = 1; h < n; ++h) {
    for (int t = 1; t <= static_cast<int>(h); ++t) out << "---|";
  }
  out << "\n";
  for (std::size_t s = 1; s < n; ++s) {
    out << "| " << s << " |";
    for (std::size_t h = 1; h < n; ++h) {
      for (int t = 1; t <= static_cast<int>(h); ++t) {
        const auto* cell = find(h, t, s);
        out << " " << (cell && s >= static_cast<std::size_t>(t) ? cell->min_d.str() : "")
            << " |";
      }
    }
    out << "\n";
  }
  return out.str();
}

inline std::string table1_csv(const std::vector<BestHReport>& cells) {
  std::ostringstream out;
  out << "h,t,s,min_d\n";
  for (const auto& c : cells) {
    out << c.h << "," << c.t << "," << c.s << "," << c.min_d.str() << "\n";
  }
  return out.str();
}

// --- Trial reports ------------------------------------------------------------

inline Json trial_report_json(const TrialReport& rep) {
  Json j;
  const bool cayley = rep.config.model == TrialConfig::Model::random_cayley;
  j["model"] = cayley ? "cayley" : "random";
  j["n"] = rep.config.n;
  if (cayley) {
    j["h_or_p"] = rep.config.h;
  } else {
    j["h_or_p"] = rep.config.edge_prob;
  }
  j["s"] = rep.config.s;
  j["t"] = rep.config.t;
  j["trials"] = rep.config.trials;
  j["successes"] = rep.successes;
  j["fraction"] = rep.fraction;
  j["bound"] = rep.bound;
  j["seed"] = rep.config.seed;
  if (!cayley) {
    j["subset_sampling"] = rep.subset_sampled;
    j["subsets_per_trial"] = rep.subsets_per_trial;
  }
  return j;
}

}  // namespace caysync
