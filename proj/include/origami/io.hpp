#pragma once

// JSON for surfaces, certificates, characters, verdicts and census lines.
// Cell and point labels are one-based on the wire.

#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "origami/census.hpp"
#include "origami/haupt.hpp"
#include "origami/targeting.hpp"

namespace origami {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

// ---------------------------------------------------------------------------
// Surfaces

inline Json to_json(const GridSurface& s) {
  Json j;
  j["rx"] = s.rx();
  j["ry"] = s.ry();
  if (s.rx() == 1 && s.ry() == 1) {
    j["h"] = s.right_perm().to_cycle_string();
    j["v"] = s.top_perm().to_cycle_string();
  }
  Json cells = Json::array();
  for (int c = 0; c < s.num_cells(); ++c) {
    const auto& x = s.cell(c);
    cells.push_back(Json::array({x.a, x.b, x.right + 1, x.top + 1}));
  }
  j["cells"] = std::move(cells);
  return j;
}

inline GridSurface surface_from_json(const Json& j) {
  try {
    if (j.contains("cells")) {
      GridData g;
      g.rx = j.at("rx").get<int>();
      g.ry = j.at("ry").get<int>();
      for (const auto& c : j.at("cells")) {
        if (!c.is_array() || c.size() != 4) throw std::invalid_argument("each cell is [a, b, right, top]");
        g.cells.push_back(Cell{c[0].get<int>(), c[1].get<int>(), c[2].get<int>() - 1, c[3].get<int>() - 1});
      }
      return GridSurface(std::move(g));
    }
    const auto h = j.at("h").get<std::string>();
    const auto v = j.at("v").get<std::string>();
    const int d = j.contains("degree") ? j.at("degree").get<int>() : 0;
    auto hp = Perm::parse_cycles(h, d);
    auto vp = Perm::parse_cycles(v, std::max(d, hp.degree()));
    if (hp.degree() < vp.degree()) hp = Perm::parse_cycles(h, vp.degree());
    return GridSurface::from_permutations(hp, vp);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("surface JSON: ") + e.what());
  }
}

inline Json to_json(const StratumSig& s) { return Json(s.alpha); }

inline Json to_json(const Rational& r) { return to_string(r); }

inline Json to_json(const LatticeBasis& l) {
  Json basis = Json::array();
  for (const auto& v : l.basis) basis.push_back(Json::array({to_string(v[0]), to_string(v[1])}));
  return Json{{"rank", l.rank}, {"covolume", to_string(l.covolume)}, {"basis", basis}};
}

// Exact rationals only: integers or strings "p/q".
inline Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw std::invalid_argument("values must be exact rationals (integers or strings like \"3/2\"); got " + j.dump());
}

inline LatticeBasis lattice_from_json(const Json& j) {
  LatticeBasis l;
  l.rank = j.at("rank").get<int>();
  l.covolume = rational_from_json(j.at("covolume"));
  for (const auto& v : j.at("basis")) l.basis.push_back({rational_from_json(v.at(0)), rational_from_json(v.at(1))});
  return l;
}

// ---------------------------------------------------------------------------
// Certificates

inline Json to_json(const BuildStep& st) {
  Json j;
  j["op"] = st.op;
  for (const auto& [k, v] : st.params) {
    if (k == "kind" && st.op == "minimal_cover") {
      static const char* names[] = {"hyp", "odd", "even"};
      j[k] = names[v];
    } else if (k == "kind" && st.op == "equal_pair_cover") {
      static const char* names[] = {"hyp", "nonhyp", "nonhyp_even"};
      j[k] = names[v];
    } else {
      j[k] = v;
    }
  }
  if (!st.perms.empty()) {
    j["h"] = st.perms[0];
    j["v"] = std::vector<std::vector<int>>(st.perms.begin() + 1, st.perms.end());
  }
  return j;
}

inline BuildStep step_from_json(const Json& j) {
  BuildStep st;
  st.op = j.at("op").get<std::string>();
  for (const auto& [k, v] : j.items()) {
    if (k == "op" || k == "h" || k == "v") continue;
    if (k == "kind" && v.is_string()) {
      const auto s = v.get<std::string>();
      const int code = st.op == "minimal_cover" ? script_kind(parse_minimal_kind(s)) : script_kind(parse_pair_kind(s));
      st.params.push_back({k, code});
    } else {
      st.params.push_back({k, v.get<int>()});
    }
  }
  if (j.contains("h")) {
    st.perms.push_back(j.at("h").get<std::vector<int>>());
    for (const auto& v : j.at("v")) st.perms.push_back(v.get<std::vector<int>>());
  }
  return st;
}

inline Json to_json(const ComponentEvidence& ev) {
  Json j;
  j["kind"] = to_string(ev.kind);
  if (ev.involution) {
    std::vector<int> rho;
    for (int x : ev.involution->rho) rho.push_back(x + 1);
    j["rho"] = rho;
    j["fixed_points"] = ev.involution->fixed_points();
  }
  if (ev.spin) {
    j["parity"] = ev.spin->parity;
    j["indices"] = ev.spin->indices;
    Json curves = Json::array();
    for (const auto& multi : ev.spin->curves) {
      Json m = Json::array();
      for (const auto& p : multi) m.push_back(Json{{"start", p.start + 1}, {"moves", p.moves}});
      curves.push_back(std::move(m));
    }
    j["curves"] = std::move(curves);
  }
  return j;
}

inline ComponentEvidence evidence_from_json(const Json& j) {
  ComponentEvidence ev;
  const auto kind = j.at("kind").get<std::string>();
  if (kind == "involution") {
    ev.kind = EvidenceKind::Involution;
    InvolutionWitness w;
    for (int x : j.at("rho").get<std::vector<int>>()) w.rho.push_back(x - 1);
    ev.involution = w;
  } else if (kind == "spin") {
    ev.kind = EvidenceKind::Spin;
    SpinEvidence s;
    s.parity = j.at("parity").get<int>();
    s.indices = j.at("indices").get<std::vector<long long>>();
    for (const auto& m : j.at("curves")) {
      std::vector<Path> multi;
      for (const auto& p : m) multi.push_back(Path{p.at("start").get<int>() - 1, p.at("moves").get<std::string>()});
      s.curves.push_back(std::move(multi));
    }
    ev.spin = std::move(s);
  } else if (kind == "no_involution") {
    ev.kind = EvidenceKind::NoInvolution;
  } else if (kind == "connected") {
    ev.kind = EvidenceKind::Connected;
  } else {
    throw std::invalid_argument("unknown evidence kind '" + kind + "'");
  }
  return ev;
}

inline Json to_json(const Certificate& c) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["surface"] = to_json(c.surface);
  j["degree"] = c.degree;
  j["stratum"] = to_json(c.stratum);
  j["genus"] = c.stratum.genus();
  j["component"] = to_string(c.component);
  j["evidence"] = Json{{"primitive", to_json(c.primitive_evidence)}, {"component", to_json(c.component_evidence)}};
  Json script = Json::array();
  for (const auto& st : c.script) script.push_back(to_json(st));
  j["script"] = std::move(script);
  return j;
}

inline Certificate certificate_from_json(const Json& j) {
  try {
    const int version = j.at("schema_version").get<int>();
    if (version != kSchemaVersion)
      throw std::invalid_argument("unsupported certificate schema_version " + std::to_string(version));
    std::vector<BuildStep> script;
    for (const auto& st : j.at("script")) script.push_back(step_from_json(st));
    Certificate c{surface_from_json(j.at("surface")),
                  j.at("degree").get<int>(),
                  StratumSig(j.at("stratum").get<std::vector<int>>()),
                  parse_component(j.at("component").get<std::string>()),
                  lattice_from_json(j.at("evidence").at("primitive")),
                  evidence_from_json(j.at("evidence").at("component")),
                  std::move(script)};
    // Fixed-point counts are derived data; an invalid rho is left for verify to reject.
    if (c.component_evidence.involution)
      if (auto w = check_involution(c.surface, c.component_evidence.involution->rho)) c.component_evidence.involution = *w;
    return c;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("certificate JSON: ") + e.what());
  }
}

// ---------------------------------------------------------------------------
// Characters and verdicts

inline Json to_json(const Character& chi) {
  auto vals = [](const std::vector<GaussianRational>& v) {
    Json out = Json::array();
    for (const auto& z : v) out.push_back(Json::array({to_string(z.re), to_string(z.im)}));
    return out;
  };
  return Json{{"genus", chi.genus}, {"a", vals(chi.a)}, {"b", vals(chi.b)}};
}

inline Character character_from_json(const Json& j) {
  try {
    auto vals = [](const Json& arr) {
      std::vector<GaussianRational> out;
      for (const auto& z : arr) {
        if (!z.is_array() || z.size() != 2) throw std::invalid_argument("each value is [re, im]");
        out.push_back({rational_from_json(z[0]), rational_from_json(z[1])});
      }
      return out;
    };
    return Character(j.at("genus").get<int>(), vals(j.at("a")), vals(j.at("b")));
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("character JSON: ") + e.what());
  }
}

inline Json to_json(const HauptVerdict& v) {
  Json j;
  j["verdict"] = v.realizable ? "realizable" : "not_realizable";
  j["reason"] = v.reason;
  j["area"] = to_string(v.area);
  j["lattice"] = to_json(v.lattice);
  j["degree"] = v.degree ? Json(*v.degree) : Json(nullptr);
  return j;
}

inline Json to_json(const Realization& r) {
  Json n = Json::array();
  for (const auto& row : r.normalizing) n.push_back(Json::array({to_string(row[0]), to_string(row[1])}));
  return Json{{"certificate", to_json(r.certificate)}, {"normalizing_matrix", n}, {"note", r.note}};
}

// ---------------------------------------------------------------------------
// Census NDJSON: one "entry" line per class, a "class_done" line after each
// h class, and a closing "summary" line.

inline Json to_json(const CensusEntry& e) {
  Json j;
  j["kind"] = "entry";
  j["h_class"] = e.h_class;
  j["h"] = e.surface.right_perm().to_cycle_string();
  j["v"] = e.surface.top_perm().to_cycle_string();
  j["degree"] = e.surface.degree();
  j["stratum"] = to_json(e.stratum);
  j["genus"] = e.stratum.genus();
  j["component"] = to_string(e.component);
  j["primitive"] = e.primitive;
  j["class_size"] = e.class_size;
  j["hyperelliptic_witness"] = e.hyperelliptic;
  j["spin"] = e.spin >= 0 ? Json(e.spin) : Json(nullptr);
  return j;
}

inline CensusEntry census_entry_from_json(const Json& j) {
  const int d = j.at("degree").get<int>();
  const auto s = GridSurface::from_permutations(Perm::parse_cycles(j.at("h").get<std::string>(), d),
                                                Perm::parse_cycles(j.at("v").get<std::string>(), d));
  return CensusEntry{s,
                     StratumSig(j.at("stratum").get<std::vector<int>>()),
                     parse_component(j.at("component").get<std::string>()),
                     j.at("primitive").get<bool>(),
                     j.at("class_size").get<std::uint64_t>(),
                     j.at("h_class").get<int>(),
                     j.at("hyperelliptic_witness").get<bool>(),
                     j.at("spin").is_null() ? -1 : j.at("spin").get<int>()};
}

}  // namespace origami
