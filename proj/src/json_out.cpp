#include "cotan/json_out.hpp"

#include <cstdint>
#include <sstream>

namespace cotan {

std::string fnv1a64_hex(const std::string& bytes) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  std::ostringstream os;
  os << std::hex;
  for (int shift = 60; shift >= 0; shift -= 4) os << ((h >> shift) & 0xf);
  return os.str();
}

Json ring_json(const RingSpec& ring) {
  Json j;
  j["vars"] = ring.var_names;
  j["weights"] = ring.weights;
  return j;
}

Json ideal_json(const IdealPresentation& ideal) {
  Json j;
  Json gens = Json::array();
  for (const Poly& g : ideal.gens) gens.push_back(g.to_string());
  j["gens"] = gens;
  Json flags = Json::object();
  for (const auto& [name, value] : ideal.flags) flags[name] = value;
  j["flags"] = flags;
  return j;
}

Json bounds_json(const ClassifyOptions& opts) {
  Json j;
  j["hom_bound"] = opts.hom_bound;
  j["deg_bound"] = opts.deg_bound;
  j["series_order"] = opts.series_order;
  j["r_max"] = opts.r_max;
  return j;
}

Json series_json(const TruncSeries& s) {
  Json j;
  j["order"] = s.order();
  Json coeffs = Json::array();
  for (const Rat& c : s.coeffs()) coeffs.push_back(rat_to_string(c));
  j["coeffs"] = coeffs;
  return j;
}

Json rat_list_json(const std::vector<Rat>& v) {
  Json j = Json::array();
  for (const Rat& c : v) j.push_back(rat_to_string(c));
  return j;
}

Json int_list_json(const std::vector<Int>& v) {
  Json j = Json::array();
  for (const Int& c : v) j.push_back(c.get_str());
  return j;
}

Json bigraded_json(const std::map<std::pair<int, int>, int>& dims) {
  Json j = Json::array();
  for (const auto& [key, d] : dims) {
    Json row;
    row["i"] = key.first;
    row["t"] = key.second;
    row["dim"] = d;
    j.push_back(std::move(row));
  }
  return j;
}

Json degree_map_json(const std::map<int, int>& dims) {
  Json j = Json::array();
  for (const auto& [t, d] : dims) {
    Json row;
    row["t"] = t;
    row["dim"] = d;
    j.push_back(std::move(row));
  }
  return j;
}

Json check_report_json(const CheckReport& report) {
  Json j;
  j["name"] = report.name;
  j["all_ok"] = report.all_ok;
  Json rows = Json::array();
  for (const DegreeCheck& row : report.rows) {
    if (row.ok) continue;  // keep the document small: failures carry the detail
    Json r;
    r["t"] = row.t;
    r["ok"] = row.ok;
    r["detail"] = row.detail;
    rows.push_back(std::move(r));
  }
  j["failures"] = rows;
  return j;
}

std::string zero_pattern_verdict_name(ZeroPatternVerdict v) {
  switch (v) {
    case ZeroPatternVerdict::kConsistent:
      return "consistent";
    case ZeroPatternVerdict::kInconsistent:
      return "inconsistent";
    default:
      return "inconclusive";
  }
}

Json zero_pattern_json(const ZeroPatternReport& report) {
  Json j;
  j["verdict"] = zero_pattern_verdict_name(report.verdict);
  if (report.verdict == ZeroPatternVerdict::kConsistent) {
    j["r"] = report.r;
    j["i0"] = report.i0;
    j["residues"] = report.residues;
  }
  if (report.verdict == ZeroPatternVerdict::kInconsistent) {
    Json w = Json::array();
    for (const ZeroPatternWitness& witness : report.witnesses) {
      Json row;
      row["r"] = witness.r;
      row["zero_index"] = witness.zero_index;
      row["nonzero_index"] = witness.nonzero_index;
      w.push_back(std::move(row));
    }
    j["witnesses"] = w;
  }
  return j;
}

namespace {

Json resolution_json(const ResolutionSummary& s) {
  Json j;
  j["complete"] = s.complete;
  j["length"] = s.length;
  j["betti"] = s.betti;
  return j;
}

}  // namespace

Json ci_report_json(const CIReport& report) {
  Json j;
  j["verdict"] = report.verdict;
  {
    Json inv;
    inv["mu"] = report.invariants.mu;
    inv["height"] = report.invariants.height;
    inv["dim_s"] = report.invariants.dim_s;
    inv["complete_intersection"] = report.invariants.complete_intersection;
    inv["almost_complete_intersection"] = report.invariants.almost_complete_intersection;
    inv["degenerate"] = report.invariants.degenerate;
    inv["hilbert_s"] = series_json(report.invariants.hilbert_s);
    j["invariants"] = inv;
  }
  j["perfect"] = tri_state_name(report.perfect);
  j["gorenstein"] = tri_state_name(report.gorenstein);
  j["r_resolution"] = resolution_json(report.r_resolution);
  j["tor2"] = degree_map_json(report.tor2);
  {
    Json rows = Json::array();
    for (const VanishingRow& row : report.cotangent) {
      Json r;
      r["i"] = row.i;
      r["vanishes"] = row.vanishes;
      r["dims"] = degree_map_json(row.dims);
      rows.push_back(std::move(r));
    }
    j["cotangent_s"] = rows;
    j["cotangent_all_vanish"] = report.cotangent_all_vanish;
  }
  j["deviations"] = report.deviations;
  j["l_ranks"] = report.l_ranks;
  j["rank_shift_ok"] = report.rank_shift_ok;
  {
    Json tail;
    tail["vanishes"] = report.tail.vanishes;
    if (report.tail.vanishes)
      tail["from"] = report.tail.from;
    else
      tail["positive_through"] = report.tail.positive_through;
    j["deviation_tail"] = tail;
  }
  j["k_resolution"] = resolution_json(report.k_resolution);
  {
    Json p;
    p["ok"] = report.poincare.ok;
    p["product_coeffs"] = int_list_json(report.poincare.product_coeffs);
    p["betti"] = report.poincare.betti;
    j["poincare_check"] = p;
  }
  {
    const MahlerPipeline& mp = report.mahler;
    Json m;
    m["ran"] = mp.ran;
    if (!mp.note.empty()) m["note"] = mp.note;
    if (mp.recurrence_order > 0) {
      m["recurrence_order"] = mp.recurrence_order;
      m["recurrence_coeffs"] = rat_list_json(mp.recurrence_coeffs);
      m["numerator"] = rat_list_json(mp.numerator);
    }
    if (mp.ran) {
      m["extended_len"] = mp.extended_len;
      m["prefix_ok"] = mp.prefix_ok;
      m["alpha"] = int_list_json(mp.alpha);
      m["pattern"] = zero_pattern_json(mp.pattern);
    }
    j["mahler"] = m;
  }
  j["tkos_check"] = check_report_json(report.tkos);
  j["wedge_check"] = check_report_json(report.wedge);
  j["conjecture_consistent"] = report.conjecture_consistent;
  j["notes"] = report.notes;
  return j;
}

Json document_shell(const std::string& source_path, const std::string& source_bytes,
                    const IdealPresentation* ideal, const ClassifyOptions& opts) {
  Json j;
  Json tool;
  tool["name"] = kToolName;
  tool["version"] = kToolVersion;
  j["tool"] = tool;
  Json source;
  source["path"] = source_path;
  source["fnv1a64"] = fnv1a64_hex(source_bytes);
  j["source"] = source;
  if (ideal) {
    j["ring"] = ring_json(*ideal->ring);
    j["ideal"] = ideal_json(*ideal);
  }
  j["bounds"] = bounds_json(opts);
  return j;
}

std::string bigraded_markdown(const std::map<std::pair<int, int>, int>& dims, int i_min, int i_max,
                              int t_max, const std::string& corner) {
  std::ostringstream os;
  os << "| " << corner << " |";
  for (int t = 0; t <= t_max; ++t) os << " " << t << " |";
  os << "\n|";
  for (int t = 0; t <= t_max + 1; ++t) os << "---|";
  os << "\n";
  for (int i = i_min; i <= i_max; ++i) {
    os << "| " << i << " |";
    for (int t = 0; t <= t_max; ++t) {
      auto it = dims.find({i, t});
      os << " " << (it == dims.end() ? 0 : it->second) << " |";
    }
    os << "\n";
  }
  return os.str();
}

std::string ci_report_markdown(const CIReport& report) {
  std::ostringstream os;
  os << "# classification report\n\n";
  os << "- verdict: **" << report.verdict << "**\n";
  os << "- mu = " << report.invariants.mu << ", height = " << report.invariants.height
     << ", dim S = " << report.invariants.dim_s << "\n";
  os << "- perfect: " << tri_state_name(report.perfect)
     << ", gorenstein: " << tri_state_name(report.gorenstein) << "\n";
  os << "- conjecture consistent: " << (report.conjecture_consistent ? "yes" : "no") << "\n\n";

  os << "## cotangent homology of the quotient map, coefficients S\n\n";
  for (const VanishingRow& row : report.cotangent) {
    os << "- i = " << row.i << ": ";
    if (row.vanishes) {
      os << "zero up to the degree bound\n";
    } else {
      os << "nonzero at";
      for (const auto& [t, d] : row.dims) os << " (t=" << t << ", dim=" << d << ")";
      os << "\n";
    }
  }

  os << "\n## deviations and cotangent-complex ranks\n\n";
  os << "| i | eps_i | rank L_i |\n|---|---|---|\n";
  for (size_t i = 1; i < report.deviations.size(); ++i)
    os << "| " << i << " | " << report.deviations[i] << " | " << report.l_ranks[i] << " |\n";
  os << "\nrank shift (rank L_i = eps_(i+1)): " << (report.rank_shift_ok ? "holds" : "fails")
     << "\n";
  if (report.tail.vanishes)
    os << "deviation tail vanishes from i = " << report.tail.from << "\n";
  else
    os << "deviations positive through i = " << report.tail.positive_through << "\n";

  os << "\n## residue field Betti numbers over S\n\n";
  os << "betti:";
  for (int b : report.k_resolution.betti) os << " " << b;
  os << (report.k_resolution.complete ? " (resolution terminates)" : " (trunc)");
  os << "\npoincare product cross-check: " << (report.poincare.ok ? "ok" : "MISMATCH") << "\n";

  os << "\n## rationality probe\n\n";
  const MahlerPipeline& mp = report.mahler;
  if (!mp.ran) {
    os << "not run: " << (mp.note.empty() ? "unavailable" : mp.note) << "\n";
  } else {
    os << "- recurrence order " << mp.recurrence_order << ", extended to " << mp.extended_len
       << " terms, prefix " << (mp.prefix_ok ? "matches" : "MISMATCH") << "\n";
    os << "- zero pattern: " << zero_pattern_verdict_name(mp.pattern.verdict);
    if (mp.pattern.verdict == ZeroPatternVerdict::kConsistent) {
      os << " with r = " << mp.pattern.r << ", i0 = " << mp.pattern.i0 << ", residues {";
      for (size_t k = 0; k < mp.pattern.residues.size(); ++k)
        os << (k ? ", " : "") << mp.pattern.residues[k];
      os << "}";
    }
    os << "\n";
  }

  os << "\n## dimension checks\n\n";
  for (const CheckReport* check : {&report.tkos, &report.wedge}) {
    os << "- " << check->name << ": " << (check->all_ok ? "ok" : "FAIL") << "\n";
    for (const DegreeCheck& row : check->rows)
      if (!row.ok) os << "  - t = " << row.t << ": " << row.detail << "\n";
  }

  if (!report.notes.empty()) {
    os << "\n## notes\n\n";
    for (const std::string& note : report.notes) os << "- " << note << "\n";
  }
  return os.str();
}

}  // namespace cotan
