// origami_forge: build, classify, census, haupt, render, verify.
// Exit codes: 0 success (a negative verdict is still success), 1 failed
// verification or no construction found, 2 usage or input errors.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "origami/io.hpp"
#include "origami/svg.hpp"

using namespace origami;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

StratumSig parse_stratum(const std::string& text) {
  std::vector<int> parts;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      std::size_t used = 0;
      const int x = std::stoi(tok, &used);
      if (used != tok.size()) throw std::invalid_argument(tok);
      parts.push_back(x);
    } catch (const std::exception&) {
      throw UsageError("--stratum: '" + tok + "' is not an integer");
    }
  }
  if (parts.empty()) throw UsageError("--stratum: no parts given");
  try {
    return StratumSig(parts);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("--stratum: ") + e.what());
  }
}

Json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw UsageError("'" + path + "' is not valid JSON: " + e.what());
  }
}

// Writes to --out when given, else stdout.
void emit(const std::string& out, const std::string& text) {
  if (out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out, std::ios::binary);
  if (!f) throw UsageError("cannot write '" + out + "'");
  f << text;
}

// ---------------------------------------------------------------------------

int cmd_build(const std::string& stratum_text, const std::string& comp_text, int degree, const std::string& out) {
  const auto st = parse_stratum(stratum_text);
  ComponentLabel comp;
  try {
    comp = parse_component(comp_text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (!has_component(st, comp)) {
    std::string names;
    for (auto c : components_of(st)) names += " " + to_string(c);
    throw UsageError("component '" + comp_text + "' does not exist in " + st.to_string() + "; choose from:" + names);
  }
  if (degree <= st.max_order())
    throw UsageError("--degree must exceed the largest zero order " + std::to_string(st.max_order()));
  Certificate cert = [&] {
    try {
      return build(st, comp, degree);
    } catch (const std::runtime_error& e) {
      std::cerr << "error: " << e.what() << "\n";
      throw;
    }
  }();
  emit(out, to_json(cert).dump(2) + "\n");
  return 0;
}

int cmd_classify(const std::string& h, const std::string& v, int degree, const std::string& in, const std::string& out) {
  GridSurface s = [&] {
    try {
      if (!in.empty()) {
        const auto j = read_json(in);
        return surface_from_json(j.contains("surface") ? j.at("surface") : j);
      }
      if (h.empty() || v.empty()) throw UsageError("classify needs --h and --v, or --in");
      auto hp = Perm::parse_cycles(h, degree);
      auto vp = Perm::parse_cycles(v, std::max(degree, hp.degree()));
      if (hp.degree() < vp.degree()) hp = Perm::parse_cycles(h, vp.degree());
      return GridSurface::from_permutations(hp, vp);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }();
  const auto st = stratum(s);
  const auto pr = is_primitive(s);
  Json j;
  j["degree"] = s.degree();
  j["genus"] = genus(s);
  j["stratum"] = to_json(st);
  j["component"] = to_string(classify_component(s));
  j["components_in_stratum"] = Json::array();
  for (auto c : components_of(st)) j["components_in_stratum"].push_back(to_string(c));
  j["primitive"] = pr.primitive;
  j["lattice"] = to_json(pr.lattice);
  const auto w = st.alpha.empty() ? std::nullopt : hyperelliptic_witness(s);
  j["hyperelliptic_witness"] = w ? Json(w->fixed_points()) : Json(nullptr);
  j["spin"] = !st.alpha.empty() && st.all_even() ? Json(spin_parity(s).parity) : Json(nullptr);
  j["surface"] = to_json(s);
  emit(out, j.dump(2) + "\n");
  return 0;
}

// Reads complete h-class blocks from a partial census file.
std::vector<std::vector<std::string>> resume_blocks(const std::string& path, int degree) {
  std::vector<std::vector<std::string>> blocks;
  std::ifstream in(path);
  if (!in) return blocks;
  std::vector<std::string> cur;
  std::string line;
  while (std::getline(in, line)) {
    Json j;
    try {
      j = Json::parse(line);
    } catch (const nlohmann::json::exception&) {
      break;  // truncated tail
    }
    const auto kind = j.value("kind", "");
    if (j.value("degree", degree) != degree)
      throw UsageError("--resume: '" + path + "' holds a census of degree " + std::to_string(j.value("degree", 0)));
    if (kind == "entry") {
      if (j.value("h_class", -1) != static_cast<int>(blocks.size())) break;
      cur.push_back(line);
    } else if (kind == "class_done") {
      if (j.value("h_class", -1) != static_cast<int>(blocks.size()) ||
          j.value("entries", -1) != static_cast<int>(cur.size()))
        break;
      cur.push_back(line);
      blocks.push_back(std::move(cur));
      cur.clear();
    } else {
      break;
    }
  }
  return blocks;
}

int cmd_census(int degree, const std::string& out, int jobs, bool resume, bool validate) {
  try {
    census_guard();
    if (degree < 1 || degree > census_guard())
      throw std::invalid_argument("--degree " + std::to_string(degree) + " outside 1.." + std::to_string(census_guard()) +
                                  " (set ORIGAMI_FORGE_CENSUS_GUARD to raise the guard)");
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (resume && out.empty()) throw UsageError("--resume needs --out");
  const int nk = static_cast<int>(census_h_classes(degree).size());
  std::vector<std::vector<std::string>> kept;
  if (resume) kept = resume_blocks(out, degree);

  std::ofstream file;
  if (!out.empty()) {
    file.open(out, std::ios::binary | std::ios::trunc);
    if (!file) throw UsageError("cannot write '" + out + "'");
  }
  std::ostream& os = out.empty() ? std::cout : file;
  std::vector<CensusEntry> all;
  for (int k = 0; k < static_cast<int>(kept.size()); ++k) {
    for (const auto& l : kept[k]) {
      os << l << "\n";
      const auto j = Json::parse(l);
      if (j.at("kind") == "entry") all.push_back(census_entry_from_json(j));
    }
  }
  os.flush();
  jobs = std::max(1, jobs);
  for (int k0 = static_cast<int>(kept.size()); k0 < nk; k0 += jobs) {
    const int k1 = std::min(nk, k0 + jobs);
    std::vector<std::vector<CensusEntry>> part(static_cast<std::size_t>(k1 - k0));
    std::vector<std::thread> pool;
    for (int k = k0; k < k1; ++k) pool.emplace_back([&, k] { part[k - k0] = enumerate_h_class(degree, k); });
    for (auto& t : pool) t.join();
    for (int k = k0; k < k1; ++k) {
      for (const auto& e : part[k - k0]) os << to_json(e).dump() << "\n";
      os << Json{{"kind", "class_done"}, {"degree", degree}, {"h_class", k}, {"entries", part[k - k0].size()}}.dump()
         << "\n";
      all.insert(all.end(), part[k - k0].begin(), part[k - k0].end());
    }
    os.flush();
  }
  const auto report = cross_validate(degree, all);
  Json summary{{"kind", "summary"},
               {"degree", degree},
               {"classes", all.size()},
               {"class_size_total", report.class_size_total},
               {"expected_total", report.expected_total},
               {"cross_validation_ok", report.ok()}};
  os << summary.dump() << "\n";
  os.flush();
  if (validate) {
    for (const auto& l : report.lines()) std::cerr << l << "\n";
    if (!report.ok()) return 1;
  }
  return 0;
}

int cmd_haupt(const std::string& chi_path, const std::string& stratum_text, const std::string& comp_text, bool do_realize,
              const std::string& out) {
  const auto st = parse_stratum(stratum_text);
  Character chi;
  try {
    chi = character_from_json(read_json(chi_path));
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  HauptVerdict v;
  try {
    v = haupt_verdict(chi, st);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  Json j = to_json(v);
  if (do_realize && v.realizable) {
    ComponentLabel comp = ComponentLabel::Unique;
    try {
      comp = comp_text.empty() ? components_of(st).front() : parse_component(comp_text);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    if (!has_component(st, comp)) throw UsageError("component '" + comp_text + "' does not exist in " + st.to_string());
    j["realization"] = to_json(realize(chi, st, comp));
  }
  emit(out, j.dump(2) + "\n");
  return 0;
}

int cmd_render(const std::string& in, const std::string& svg) {
  const auto j = read_json(in);
  GridSurface s = [&] {
    try {
      return surface_from_json(j.contains("surface") ? j.at("surface") : j);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }();
  std::string title = "degree " + std::to_string(s.degree()) + ", stratum " + stratum(s).to_string();
  if (j.contains("component")) title += ", " + j.at("component").get<std::string>();
  emit(svg, render_svg(s, title));
  return 0;
}

int cmd_verify(const std::string& in) {
  Certificate cert = [&] {
    try {
      return certificate_from_json(read_json(in));
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }();
  const auto r = verify_report(cert);
  std::cout << Json{{"ok", r.ok}, {"diffs", r.diffs}}.dump(2) << "\n";
  return r.ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"origami_forge: primitive branched torus covers in prescribed components"};
  app.require_subcommand(1);

  std::string stratum_text, comp_text, out, in, h, v, chi_path, svg;
  int degree = 0, jobs = 1;
  bool resume = false, validate = false, do_realize = false;

  auto* b = app.add_subcommand("build", "Build a certified cover");
  b->add_option("--stratum", stratum_text, "Zero orders, comma-separated")->required();
  b->add_option("--component", comp_text, "hyp|even|odd|unique|nonhyp")->required();
  b->add_option("--degree", degree, "Covering degree")->required();
  b->add_option("--out", out, "Output file (default stdout)");

  auto* c = app.add_subcommand("classify", "Classify a cover given by permutations or a JSON file");
  c->set_help_flag("--help", "Print this help message and exit");  // frees -h for --h
  c->add_option("--h", h, "Horizontal permutation in cycle notation");
  c->add_option("--v", v, "Vertical permutation in cycle notation");
  c->add_option("--degree", degree, "Degree when it exceeds the largest point mentioned");
  c->add_option("--in", in, "Surface or certificate JSON");
  c->add_option("--out", out, "Output file (default stdout)");

  auto* s = app.add_subcommand("census", "Enumerate all origamis of a degree as NDJSON");
  s->add_option("--degree", degree, "Degree")->required();
  s->add_option("--out", out, "Output file (default stdout)");
  s->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  s->add_flag("--resume", resume, "Keep complete blocks of an existing --out file");
  s->add_flag("--validate", validate, "Print the cross-validation report; exit 1 if it fails");

  auto* k = app.add_subcommand("haupt", "Realizability verdict for a period character");
  k->add_option("--character", chi_path, "Character JSON")->required();
  k->add_option("--stratum", stratum_text, "Zero orders, comma-separated")->required();
  k->add_option("--component", comp_text, "Component for --realize");
  k->add_flag("--realize", do_realize, "Also build a realizing cover");
  k->add_option("--out", out, "Output file (default stdout)");

  auto* r = app.add_subcommand("render", "SVG figure of a surface or certificate");
  r->add_option("--in", in, "Surface or certificate JSON")->required();
  r->add_option("--svg", svg, "Output SVG (default stdout)");

  auto* f = app.add_subcommand("verify", "Re-check a certificate");
  f->add_option("--in", in, "Certificate JSON")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (b->parsed()) return cmd_build(stratum_text, comp_text, degree, out);
    if (c->parsed()) return cmd_classify(h, v, degree, in, out);
    if (s->parsed()) return cmd_census(degree, out, jobs, resume, validate);
    if (k->parsed()) return cmd_haupt(chi_path, stratum_text, comp_text, do_realize, out);
    if (r->parsed()) return cmd_render(in, svg);
    if (f->parsed()) return cmd_verify(in);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
