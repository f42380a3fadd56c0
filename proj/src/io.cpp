#include "chevalley/io.hpp"

#include <sstream>
#include <stdexcept>

namespace chevalley {

Format parse_format(const std::string& text) {
  if (text == "json") return Format::json;
  if (text == "csv") return Format::csv;
  if (text == "md") return Format::md;
  throw std::invalid_argument("unknown format '" + text + "' (expected json, csv or md)");
}

namespace {

Json coords_json(const Root& r) {
  Json out = Json::array();
  for (int c : r.coords()) out.push_back(c);
  return out;
}

Json signed_json(const RootSystem& sys, SignedRoot a) {
  return Json{{"index", a.index}, {"negative", a.negative}, {"coords", coords_json(coords_of(sys, a))}};
}

std::string quoted(const std::string& s) { return "\"" + s + "\""; }

std::string histogram_text(const std::map<Rational, std::size_t>& h) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [phi, n] : h) {
    os << (first ? "" : ", ") << to_string(phi) << ": " << n;
    first = false;
  }
  return os.str();
}

Json histogram_json(const std::map<Rational, std::size_t>& h) {
  Json out = Json::object();
  for (const auto& [phi, n] : h) out[to_string(phi)] = n;
  return out;
}

} // namespace

// ---------------------------------------------------------------------------
// Roots

Json roots_to_json(const RootSystem& sys) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < sys.size(); ++i) {
    rows.push_back({{"index", i}, {"coords", coords_json(sys.root(i))}, {"squared_length", to_string(sys.squared_length(i))}});
  }
  return {{"diagram", sys.diagram().name()}, {"rank", sys.rank()}, {"roots", rows}};
}

std::string emit_roots(const RootSystem& sys, Format format) {
  std::ostringstream os;
  switch (format) {
  case Format::json:
    os << roots_to_json(sys).dump(2) << '\n';
    break;
  case Format::csv:
    os << "index,coords,squared_length\n";
    for (std::size_t i = 0; i < sys.size(); ++i) {
      os << i << ',' << quoted(sys.root(i).to_string()) << ',' << to_string(sys.squared_length(i)) << '\n';
    }
    break;
  case Format::md:
    os << "| index | coords | squared length |\n|---:|:---|---:|\n";
    for (std::size_t i = 0; i < sys.size(); ++i) {
      os << "| " << i << " | " << sys.root(i).to_string() << " | " << to_string(sys.squared_length(i)) << " |\n";
    }
    break;
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Pairs

Json pairs_to_json(const RootSystem& sys, const SumDictionary& dict, const ExtraspecialAssignment& seeds) {
  Json rows = Json::array();
  for (std::size_t gamma : dict.keys()) {
    Json pairs = Json::array();
    for (const auto& p : dict.pairs(gamma)) pairs.push_back({p.i, p.j});
    const auto& seed = seeds.at(gamma);
    rows.push_back({{"gamma", gamma},
                    {"coords", coords_json(sys.root(gamma))},
                    {"pairs", pairs},
                    {"extraspecial", {seed.pair.i, seed.pair.j}},
                    {"constant", seed.value}});
  }
  return {{"diagram", sys.diagram().name()}, {"rank", sys.rank()}, {"sums", rows}};
}

std::string emit_pairs(const RootSystem& sys, const SumDictionary& dict, const ExtraspecialAssignment& seeds,
                       Format format) {
  std::ostringstream os;
  auto pair_list = [&](std::size_t gamma) {
    std::ostringstream ps;
    bool first = true;
    for (const auto& p : dict.pairs(gamma)) {
      ps << (first ? "" : " ") << '(' << p.i << ',' << p.j << ')';
      first = false;
    }
    return ps.str();
  };
  switch (format) {
  case Format::json:
    os << pairs_to_json(sys, dict, seeds).dump(2) << '\n';
    break;
  case Format::csv:
    os << "gamma,coords,pairs,extraspecial,constant\n";
    for (std::size_t gamma : dict.keys()) {
      const auto& seed = seeds.at(gamma);
      os << gamma << ',' << quoted(sys.root(gamma).to_string()) << ',' << quoted(pair_list(gamma)) << ','
         << quoted("(" + std::to_string(seed.pair.i) + "," + std::to_string(seed.pair.j) + ")") << ',' << seed.value
         << '\n';
    }
    break;
  case Format::md:
    os << "| gamma | coords | special pairs | extraspecial | N |\n|---:|:---|:---|:---|---:|\n";
    for (std::size_t gamma : dict.keys()) {
      const auto& seed = seeds.at(gamma);
      os << "| " << gamma << " | " << sys.root(gamma).to_string() << " | " << pair_list(gamma) << " | (" << seed.pair.i
         << "," << seed.pair.j << ") | " << seed.value << " |\n";
    }
    break;
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Quartets

Json quartets_to_json(const RootSystem& sys, bool with_coords) {
  const auto dict = build_sum_dictionary(sys);
  const auto quartets = enumerate_quartets(sys, dict);
  const auto report = quartet_report(sys);
  Json rows = Json::array();
  for (std::size_t k = 0; k < quartets.size(); ++k) {
    const auto& q = quartets[k];
    const auto c = classify_quartet(sys, q);
    Json row = {{"ordinal", k + kFirstQuartetOrdinal},
                {"r1", q.r1},
                {"r", q.r},
                {"s", q.s},
                {"s1", q.s1},
                {"mono", c.mono},
                {"simple", c.simple},
                {"s_minus_r1_is_root", c.s_minus_r1_is_root},
                {"r_minus_r1_is_root", c.r_minus_r1_is_root},
                {"phi", to_string(c.phi)}};
    if (with_coords) {
      row["coords"] = {coords_json(sys.root(q.r1)), coords_json(sys.root(q.r)), coords_json(sys.root(q.s)),
                       coords_json(sys.root(q.s1))};
    }
    rows.push_back(std::move(row));
  }
  Json summary = {{"total", report.total},
                  {"mono", report.mono},
                  {"simple", report.simple},
                  {"non_simple_ordinals", report.non_simple_ordinals},
                  {"phi_by_quartet", histogram_json(report.phi_by_quartet)},
                  {"phi_by_extraspecial_pair", histogram_json(report.phi_by_extraspecial_pair)},
                  {"phi_by_pair_with_quartets", histogram_json(report.phi_by_pair_with_quartets)}};
  return {{"diagram", sys.diagram().name()}, {"rank", sys.rank()}, {"quartets", rows}, {"summary", summary}};
}

std::string emit_quartets(const RootSystem& sys, Format format, bool with_coords) {
  if (format == Format::json) return quartets_to_json(sys, with_coords).dump(2) + "\n";

  const auto dict = build_sum_dictionary(sys);
  const auto quartets = enumerate_quartets(sys, dict);
  const auto report = quartet_report(sys);
  auto flag = [](bool b) { return b ? "yes" : "no"; };
  std::ostringstream os;
  if (format == Format::csv) {
    os << "ordinal,r1,r,s,s1,mono,simple,s_minus_r1_is_root,r_minus_r1_is_root,phi";
    if (with_coords) os << ",r1_coords,r_coords,s_coords,s1_coords";
    os << '\n';
    for (std::size_t k = 0; k < quartets.size(); ++k) {
      const auto& q = quartets[k];
      const auto c = classify_quartet(sys, q);
      os << k + kFirstQuartetOrdinal << ',' << q.r1 << ',' << q.r << ',' << q.s << ',' << q.s1 << ','
         << flag(c.mono) << ',' << flag(c.simple) << ',' << flag(c.s_minus_r1_is_root) << ','
         << flag(c.r_minus_r1_is_root) << ',' << to_string(c.phi);
      if (with_coords) {
        for (auto i : {q.r1, q.r, q.s, q.s1}) os << ',' << quoted(sys.root(i).to_string());
      }
      os << '\n';
    }
    return os.str();
  }

  os << "| # | r1 | r | s | s1 | mono | simple | s-r1 root | r-r1 root | phi |";
  if (with_coords) os << " coords |";
  os << "\n|---:|---:|---:|---:|---:|:---:|:---:|:---:|:---:|---:|";
  if (with_coords) os << ":---|";
  os << '\n';
  for (std::size_t k = 0; k < quartets.size(); ++k) {
    const auto& q = quartets[k];
    const auto c = classify_quartet(sys, q);
    os << "| " << k + kFirstQuartetOrdinal << " | " << q.r1 << " | " << q.r << " | " << q.s << " | " << q.s1 << " | "
       << flag(c.mono) << " | " << flag(c.simple) << " | " << flag(c.s_minus_r1_is_root) << " | "
       << flag(c.r_minus_r1_is_root) << " | " << to_string(c.phi) << " |";
    if (with_coords) {
      os << ' ';
      for (auto i : {q.r1, q.r, q.s, q.s1}) os << sys.root(i).to_string() << ' ';
      os << '|';
    }
    os << '\n';
  }
  os << "\n" << sys.diagram().name() << ": " << report.total << " quartets, " << report.mono << " mono, "
     << report.simple << " simple\n";
  os << "non-simple ordinals:";
  for (auto o : report.non_simple_ordinals) os << ' ' << o;
  os << "\nphi by quartet: " << histogram_text(report.phi_by_quartet) << '\n';
  os << "phi by extraspecial pair: " << histogram_text(report.phi_by_extraspecial_pair) << '\n';
  os << "phi by extraspecial pair with quartets: " << histogram_text(report.phi_by_pair_with_quartets) << '\n';
  return os.str();
}

// ---------------------------------------------------------------------------
// Structure constants

Json matrix_to_json(const RootSystem& sys, const ConstantMatrix& m) {
  Json roots = Json::array();
  for (const auto& r : sys.positive_roots()) roots.push_back(coords_json(r));
  Json entries = Json::array();
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = i + 1; j < m.size(); ++j) {
      const int n = m.at(i, j);
      if (n != 0) entries.push_back({i, j, n});
    }
  }
  return {{"diagram", std::string(1, to_char(sys.diagram().kind))},
          {"rank", sys.rank()},
          {"roots", roots},
          {"entries", entries}};
}

std::string emit_constants(const RootSystem& sys, const ConstantMatrix& m, Format format) {
  if (format == Format::json) return matrix_to_json(sys, m).dump(2) + "\n";
  std::ostringstream os;
  if (format == Format::csv) {
    os << "i,j,coords_i,coords_j,N\n";
  } else {
    os << "| i | j | root i | root j | N |\n|---:|---:|:---|:---|---:|\n";
  }
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = i + 1; j < m.size(); ++j) {
      const int n = m.at(i, j);
      if (n == 0) continue;
      if (format == Format::csv) {
        os << i << ',' << j << ',' << quoted(sys.root(i).to_string()) << ',' << quoted(sys.root(j).to_string()) << ','
           << n << '\n';
      } else {
        os << "| " << i << " | " << j << " | " << sys.root(i).to_string() << " | " << sys.root(j).to_string() << " | "
           << n << " |\n";
      }
    }
  }
  return os.str();
}

ImportedMatrix matrix_from_json(const Json& doc) {
  try {
    const auto kind_text = doc.at("diagram").get<std::string>();
    if (kind_text.size() != 1) throw std::invalid_argument("diagram must be a single letter");
    Diagram d{kind_from_char(kind_text[0]), doc.at("rank").get<int>()};
    ImportedMatrix out{build_root_system(d), ConstantMatrix()};
    const auto& sys = out.system;

    if (doc.contains("roots")) {
      const auto& roots = doc.at("roots");
      if (roots.size() != sys.size()) throw std::invalid_argument("root count does not match " + d.name());
      for (std::size_t i = 0; i < sys.size(); ++i) {
        if (Root(roots[i].get<std::vector<int>>()) != sys.root(i)) {
          throw std::invalid_argument("root " + std::to_string(i) + " differs from the regular ordering of " + d.name());
        }
      }
    }

    ConstantMatrix m(sys.size());
    for (std::size_t i = 0; i < sys.size(); ++i) {
      for (std::size_t j = 0; j < sys.size(); ++j) m.set_cell(i, j, 0);
    }
    std::vector<bool> seen(sys.size() * sys.size(), false);
    for (const auto& e : doc.at("entries")) {
      if (!e.is_array() || e.size() != 3) throw std::invalid_argument("entry must be [i, j, N]");
      const auto i = e[0].get<std::size_t>();
      const auto j = e[1].get<std::size_t>();
      const int n = e[2].get<int>();
      if (i >= sys.size() || j >= sys.size() || i == j) throw std::invalid_argument("entry index out of range");
      if (seen[i * sys.size() + j]) throw std::invalid_argument("duplicate entry for pair " + std::to_string(i) + "," + std::to_string(j));
      seen[i * sys.size() + j] = seen[j * sys.size() + i] = true;
      m.fill(i, j, n);
    }
    out.matrix = std::move(m);
    return out;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed matrix document: ") + e.what());
  }
}

// ---------------------------------------------------------------------------
// Verification reports

Json report_to_json(const RootSystem& sys, const VerificationReport& report) {
  Json checks = Json::array();
  for (const auto& c : report.checks) {
    Json failures = Json::array();
    for (const auto& w : c.failures) {
      Json roots = Json::array();
      for (const auto& r : w.roots) roots.push_back(signed_json(sys, r));
      failures.push_back({{"roots", roots}, {"detail", w.detail}});
    }
    checks.push_back({{"name", c.name},
                      {"population", c.population},
                      {"failure_count", c.failures.size()},
                      {"passed", c.passed()},
                      {"failures", failures}});
  }
  return {{"diagram", sys.diagram().name()}, {"passed", report.passed()}, {"checks", checks}};
}

std::string report_summary(const RootSystem& sys, const VerificationReport& report) {
  constexpr std::size_t kShownWitnesses = 10;
  std::ostringstream os;
  for (const auto& c : report.checks) {
    os << (c.passed() ? "PASS " : "FAIL ") << c.name << ": " << c.failures.size() << " failures over "
       << c.population << '\n';
    for (std::size_t k = 0; k < c.failures.size() && k < kShownWitnesses; ++k) {
      os << "  witness:";
      for (const auto& r : c.failures[k].roots) os << ' ' << (r.negative ? "-" : "+") << sys.root(r.index).to_string();
      os << "  " << c.failures[k].detail << '\n';
    }
    if (c.failures.size() > kShownWitnesses) os << "  ... " << c.failures.size() - kShownWitnesses << " more\n";
  }
  os << sys.diagram().name() << ": " << (report.passed() ? "all checks passed" : "verification FAILED") << '\n';
  return os.str();
}

} // namespace chevalley
