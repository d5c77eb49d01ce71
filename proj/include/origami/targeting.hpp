#pragma once

// Targeting: a certified primitive degree-d cover in a prescribed connected
// component of a stratum.  Certificates carry a replayable build script.
//
// build tries, in order: the standard recipe (base cover plus surgeries),
// alternative base covers with the same remaining surgeries, and finally an
// exhaustive search over ry = 1 grids with one cone point per column.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "origami/components.hpp"
#include "origami/constructions.hpp"
#include "origami/invariants.hpp"
#include "origami/surgery.hpp"

namespace origami {

// spin + alpha_1/2 + ... + alpha_{n-1}/2 mod 2, alpha ascending.
inline int theta(const StratumSig& alpha, int spin) {
  if (!alpha.all_even()) throw std::invalid_argument("theta: stratum " + alpha.to_string() + " has an odd part");
  if (alpha.alpha.empty()) throw std::invalid_argument("theta: empty stratum");
  int t = spin & 1;
  for (std::size_t i = 0; i + 1 < alpha.alpha.size(); ++i) t += alpha.alpha[i] / 2;
  return t % 2;
}

struct BuildStep {
  std::string op;
  std::vector<std::pair<std::string, int>> params;
  std::vector<std::vector<int>> perms;  // grid_search only: h, v_0, ..., v_{rx-1}, one-based images

  int param(const std::string& key) const {
    for (const auto& [k, v] : params)
      if (k == key) return v;
    throw std::invalid_argument("build step '" + op + "' lacks parameter '" + key + "'");
  }
  std::string to_string() const {
    std::string out = op + "(";
    for (std::size_t i = 0; i < params.size(); ++i)
      out += (i ? "," : "") + params[i].first + "=" + std::to_string(params[i].second);
    return out + ")";
  }
  friend bool operator==(const BuildStep&, const BuildStep&) = default;
};

enum class EvidenceKind { Involution, Spin, NoInvolution, Connected };

inline std::string to_string(EvidenceKind k) {
  switch (k) {
    case EvidenceKind::Involution: return "involution";
    case EvidenceKind::Spin: return "spin";
    case EvidenceKind::NoInvolution: return "no_involution";
    case EvidenceKind::Connected: return "connected";
  }
  return "?";
}

struct ComponentEvidence {
  EvidenceKind kind = EvidenceKind::Connected;
  std::optional<InvolutionWitness> involution;
  std::optional<SpinEvidence> spin;
};

struct Certificate {
  GridSurface surface;
  int degree = 0;
  StratumSig stratum;
  ComponentLabel component = ComponentLabel::Unique;
  LatticeBasis primitive_evidence;
  ComponentEvidence component_evidence;
  std::vector<BuildStep> script;
};

namespace detail {

inline BuildStep step(std::string op, std::vector<std::pair<std::string, int>> params) {
  return BuildStep{std::move(op), std::move(params), {}};
}

// Cells i*rx + a; the only nontrivial horizontal gluing is across x = 0.
inline GridData grid_from_perms(int rx, const std::vector<int>& h, const std::vector<std::vector<int>>& v) {
  const int d = static_cast<int>(h.size());
  if (rx < 1 || static_cast<int>(v.size()) != rx) throw std::invalid_argument("grid_search: need rx vertical permutations");
  GridData g;
  g.rx = rx;
  g.ry = 1;
  for (int i = 0; i < d; ++i)
    for (int a = 0; a < rx; ++a) {
      const int right = a + 1 < rx ? i * rx + a + 1 : h[i] * rx;
      g.cells.push_back(Cell{a, 0, right, v[a][i] * rx + a});
    }
  return g;
}

inline std::vector<int> zero_based(const std::vector<int>& images, int d) {
  if (static_cast<int>(images.size()) != d) throw std::invalid_argument("grid_search: permutation of wrong degree");
  std::vector<int> out;
  for (int x : images) out.push_back(x - 1);
  static_cast<void>(Perm(out));  // validates
  return out;
}

inline GridSurface apply_step(const std::optional<GridSurface>& cur, const BuildStep& st) {
  auto need_base = [&](bool base) {
    if (base && cur) throw std::invalid_argument("build script: '" + st.op + "' must be the first step");
    if (!base && !cur) throw std::invalid_argument("build script: '" + st.op + "' needs a surface");
  };
  if (st.op == "minimal_cover") {
    need_base(true);
    static const char* kinds[] = {"hyp", "odd", "even"};
    const int k = st.param("kind");
    if (k < 0 || k > 2) throw std::invalid_argument("build script: bad minimal_cover kind");
    return minimal_cover(parse_minimal_kind(kinds[k]), st.param("g"), st.param("d"));
  }
  if (st.op == "odd_shape_cover") {
    need_base(true);
    return odd_shape_cover(st.param("g"), st.param("d"));
  }
  if (st.op == "equal_pair_cover") {
    need_base(true);
    static const char* kinds[] = {"hyp", "nonhyp", "nonhyp_even"};
    const int k = st.param("kind");
    if (k < 0 || k > 2) throw std::invalid_argument("build script: bad equal_pair_cover kind");
    return equal_pair_cover(parse_pair_kind(kinds[k]), st.param("g"), st.param("d"));
  }
  if (st.op == "odd_pair_base") {
    need_base(true);
    return odd_pair_base(st.param("m"), st.param("n"), st.param("d"));
  }
  if (st.op == "grid_search") {
    need_base(true);
    const int rx = st.param("rx");
    if (st.perms.size() != static_cast<std::size_t>(rx) + 1) throw std::invalid_argument("build script: grid_search needs h and rx v's");
    const int d = static_cast<int>(st.perms[0].size());
    std::vector<std::vector<int>> v;
    for (int a = 0; a < rx; ++a) v.push_back(zero_based(st.perms[a + 1], d));
    return GridSurface(grid_from_perms(rx, zero_based(st.perms[0], d), v));
  }
  if (st.op == "add_even_zero") {
    need_base(false);
    return add_even_zero(*cur, st.param("k"));
  }
  if (st.op == "add_odd_pair") {
    need_base(false);
    return add_odd_pair(*cur, st.param("k"), st.param("kp"));
  }
  throw std::invalid_argument("build script: unknown op '" + st.op + "'");
}

}  // namespace detail

inline int script_kind(MinimalKind k) { return k == MinimalKind::Hyp ? 0 : k == MinimalKind::Odd ? 1 : 2; }
inline int script_kind(PairKind k) { return k == PairKind::Hyp ? 0 : k == PairKind::NonHyp ? 1 : 2; }

inline GridSurface replay(const std::vector<BuildStep>& script) {
  if (script.empty()) throw std::invalid_argument("build script is empty");
  std::optional<GridSurface> cur;
  for (const auto& st : script) cur = detail::apply_step(cur, st);
  return *cur;
}

inline ComponentEvidence component_evidence(const GridSurface& s, ComponentLabel c) {
  ComponentEvidence ev;
  switch (c) {
    case ComponentLabel::Hyperelliptic:
      ev.kind = EvidenceKind::Involution;
      ev.involution = hyperelliptic_witness(s);
      if (!ev.involution) throw std::logic_error("component_evidence: no hyperelliptic involution");
      break;
    case ComponentLabel::EvenSpin:
    case ComponentLabel::OddSpin:
      ev.kind = EvidenceKind::Spin;
      ev.spin = spin_parity(s);
      break;
    case ComponentLabel::NonHyperelliptic: ev.kind = EvidenceKind::NoInvolution; break;
    case ComponentLabel::Unique: ev.kind = EvidenceKind::Connected; break;
  }
  return ev;
}

inline Certificate make_certificate(const GridSurface& s, ComponentLabel c, std::vector<BuildStep> script) {
  const auto pr = is_primitive(s);
  return Certificate{s, s.degree(), stratum(s), c, pr.lattice, component_evidence(s, c), std::move(script)};
}

namespace detail {

// Surgeries for the zeros left over once the base covers `used`; even zeros
// one at a time, odd zeros paired largest with next largest.  Largest k first
// unless `ascending`.
inline std::optional<std::vector<BuildStep>> remaining_steps(std::vector<int> rest, bool ascending) {
  std::vector<int> odd;
  std::vector<std::pair<int, BuildStep>> steps;
  for (int a : rest) {
    if (a % 2 == 0)
      steps.push_back({a / 2, step("add_even_zero", {{"k", a / 2}})});
    else
      odd.push_back(a);
  }
  if (odd.size() % 2 != 0) return std::nullopt;
  std::sort(odd.rbegin(), odd.rend());
  for (std::size_t i = 0; i < odd.size(); i += 2) {
    const int k = (odd[i] + 1) / 2;
    steps.push_back({k, step("add_odd_pair", {{"k", k}, {"kp", (odd[i + 1] + 1) / 2}})});
  }
  std::stable_sort(steps.begin(), steps.end(), [&](const auto& x, const auto& y) {
    return ascending ? x.first < y.first : x.first > y.first;
  });
  std::vector<BuildStep> out;
  for (auto& [k, s] : steps) out.push_back(std::move(s));
  return out;
}

inline std::vector<int> minus(std::vector<int> alpha, const std::vector<int>& used) {
  for (int u : used) {
    auto it = std::find(alpha.begin(), alpha.end(), u);
    if (it == alpha.end()) throw std::logic_error("minus: part not present");
    alpha.erase(it);
  }
  return alpha;
}

inline std::vector<BuildStep> with_rest(BuildStep base, const std::vector<int>& alpha, const std::vector<int>& used,
                                        bool ascending = false) {
  std::vector<BuildStep> out{std::move(base)};
  auto rest = remaining_steps(minus(alpha, used), ascending);
  if (!rest) return {};
  out.insert(out.end(), rest->begin(), rest->end());
  return out;
}

// The standard recipe.
inline std::vector<BuildStep> primary_plan(const StratumSig& st, ComponentLabel c, int d) {
  using enum ComponentLabel;
  const auto& a = st.alpha;
  const int n = static_cast<int>(a.size());
  const int top = a.back();
  if (n == 1) {
    const int g = st.genus();
    const auto kind = c == Hyperelliptic ? MinimalKind::Hyp : c == OddSpin ? MinimalKind::Odd : MinimalKind::Even;
    return {step("minimal_cover", {{"kind", script_kind(kind)}, {"g", g}, {"d", d}})};
  }
  if (n == 2 && a[0] == a[1]) {
    const int g = st.genus();
    const auto kind = c == Hyperelliptic ? PairKind::Hyp : c == EvenSpin ? PairKind::NonHypEven : PairKind::NonHyp;
    return {step("equal_pair_cover", {{"kind", script_kind(kind)}, {"g", g}, {"d", d}})};
  }
  if (st.all_even()) {
    const int g = top / 2 + 1;
    const int th = theta(st, c == OddSpin ? 1 : 0);
    auto base = th == 0 ? step("minimal_cover", {{"kind", script_kind(MinimalKind::Even)}, {"g", g}, {"d", d}})
                        : step("odd_shape_cover", {{"g", g}, {"d", d}});
    return with_rest(base, a, {top});
  }
  if (top % 2 == 0) return with_rest(step("odd_shape_cover", {{"g", top / 2 + 1}, {"d", d}}), a, {top});
  int other = 0;
  for (int i = n - 2; i >= 0; --i)
    if (a[i] % 2 == 1) {
      other = a[i];
      break;
    }
  return with_rest(step("odd_pair_base", {{"m", (top + 1) / 2}, {"n", (other + 1) / 2}, {"d", d}}), a, {top, other});
}

// Every base cover that realizes a sub-multiset of alpha, with the rest added
// by surgeries.  Used when the standard recipe fails at small degree.
inline std::vector<std::vector<BuildStep>> alternative_plans(const StratumSig& st, int d) {
  const auto& a = st.alpha;
  std::vector<int> distinct = a;
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  std::reverse(distinct.begin(), distinct.end());
  std::vector<std::pair<BuildStep, std::vector<int>>> bases;
  for (int p : distinct) {
    if (p % 2 == 0) {
      const int g = p / 2 + 1;
      bases.push_back({step("odd_shape_cover", {{"g", g}, {"d", d}}), {p}});
      bases.push_back({step("minimal_cover", {{"kind", 0}, {"g", g}, {"d", d}}), {p}});
      if (g >= 4) bases.push_back({step("minimal_cover", {{"kind", 2}, {"g", g}, {"d", d}}), {p}});
    }
    if (std::count(a.begin(), a.end(), p) >= 2) {
      const int g = p + 1;
      bases.push_back({step("equal_pair_cover", {{"kind", 0}, {"g", g}, {"d", d}}), {p, p}});
      if (g >= 3) bases.push_back({step("equal_pair_cover", {{"kind", 1}, {"g", g}, {"d", d}}), {p, p}});
      if (g >= 5 && g % 2 == 1) bases.push_back({step("equal_pair_cover", {{"kind", 2}, {"g", g}, {"d", d}}), {p, p}});
    }
  }
  for (int p : distinct)
    for (int q : distinct) {
      if (p % 2 == 0 || q % 2 == 0 || q > p || p < 3) continue;
      if (p == q && std::count(a.begin(), a.end(), p) < 2) continue;
      bases.push_back({step("odd_pair_base", {{"m", (p + 1) / 2}, {"n", (q + 1) / 2}, {"d", d}}), {p, q}});
    }
  std::vector<std::vector<BuildStep>> out;
  for (bool asc : {false, true})
    for (const auto& [b, used] : bases) {
      auto plan = with_rest(b, a, used, asc);
      if (!plan.empty() && std::find(out.begin(), out.end(), plan) == out.end()) out.push_back(std::move(plan));
    }
  return out;
}

inline bool lands_in(const GridSurface& s, const StratumSig& st, ComponentLabel c, int d) {
  return s.degree() == d && stratum(s) == st && is_primitive(s).primitive && classify_component(s) == c;
}

// ---------------------------------------------------------------------------
// Exhaustive grid search.  Covers branched over at most rx points on a
// horizontal line are exactly the ry = 1 grids with monodromy h across x = 0
// and v_a up column a; h runs over cycle-type representatives.

inline std::vector<std::vector<int>> partitions(int d, int maxpart) {
  if (d == 0) return {{}};
  std::vector<std::vector<int>> out;
  for (int p = std::min(d, maxpart); p >= 1; --p)
    for (auto rest : partitions(d - p, p)) {
      rest.insert(rest.begin(), p);
      out.push_back(std::move(rest));
    }
  return out;
}

inline std::vector<int> class_rep(const std::vector<int>& parts) {
  std::vector<int> h;
  int start = 0;
  for (int p : parts) {
    for (int j = 0; j < p; ++j) h.push_back(start + (j + 1) % p);
    start += p;
  }
  return h;
}

// Fewest branch points able to carry the zeros at degree d (first-fit
// decreasing; a zero of order a uses a+1 sheets of one fibre).
inline int min_branch_points(const StratumSig& st, int d) {
  std::vector<int> load;
  for (auto it = st.alpha.rbegin(); it != st.alpha.rend(); ++it) {
    bool placed = false;
    for (int& l : load)
      if (l + *it + 1 <= d) {
        l += *it + 1;
        placed = true;
        break;
      }
    if (!placed) load.push_back(*it + 1);
  }
  return std::max<int>(1, static_cast<int>(load.size()));
}

inline constexpr std::uint64_t kGridSearchBudget = 4'000'000;

struct GridSearchHit {
  GridSurface surface;
  BuildStep step;
};

inline std::optional<GridSearchHit> grid_search(const StratumSig& st, ComponentLabel c, int d, int rx) {
  std::vector<std::vector<int>> sym;
  std::vector<int> p(static_cast<std::size_t>(d));
  std::iota(p.begin(), p.end(), 0);
  do sym.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  const int n = d * rx;
  std::vector<int> right(n), top(n), left(n), bottom(n), phi(n), idx(static_cast<std::size_t>(rx));
  std::vector<char> seen(n);
  std::vector<int> orders;
  const std::size_t m = sym.size();
  for (const auto& parts : partitions(d, d)) {
    const auto h = class_rep(parts);
    std::fill(idx.begin(), idx.end(), 0);
    for (bool more = true; more;) {
      for (int i = 0; i < d; ++i)
        for (int a = 0; a < rx; ++a) {
          const int cell = i * rx + a;
          right[cell] = a + 1 < rx ? cell + 1 : h[i] * rx;
          top[cell] = sym[idx[a]][i] * rx + a;
        }
      for (int x = 0; x < n; ++x) {
        left[right[x]] = x;
        bottom[top[x]] = x;
      }
      for (int x = 0; x < n; ++x) phi[x] = top[right[bottom[left[x]]]];
      orders.clear();
      std::fill(seen.begin(), seen.end(), 0);
      for (int x = 0; x < n; ++x) {
        if (seen[x]) continue;
        int len = 0;
        for (int y = x; !seen[y]; y = phi[y]) {
          seen[y] = 1;
          ++len;
        }
        if (len > 1) orders.push_back(len - 1);
      }
      std::sort(orders.begin(), orders.end());
      if (orders == st.alpha) {
        std::vector<std::vector<int>> v;
        for (int a = 0; a < rx; ++a) v.push_back(sym[idx[a]]);
        try {
          GridSurface s(grid_from_perms(rx, h, v));
          if (lands_in(s, st, c, d)) {
            BuildStep bs = step("grid_search", {{"rx", rx}});
            auto one = [](std::vector<int> q) {
              for (int& x : q) ++x;
              return q;
            };
            bs.perms.push_back(one(h));
            for (const auto& va : v) bs.perms.push_back(one(va));
            return GridSearchHit{std::move(s), std::move(bs)};
          }
        } catch (const std::invalid_argument&) {
          // disconnected
        }
      }
      int a = 0;
      while (a < rx && ++idx[a] == static_cast<int>(m)) idx[a++] = 0;
      more = a < rx;
    }
  }
  return std::nullopt;
}

inline std::uint64_t grid_search_cost(int d, int rx) {
  std::uint64_t f = 1;
  for (int i = 2; i <= d; ++i) f *= static_cast<std::uint64_t>(i);
  std::uint64_t cost = partitions(d, d).size();
  for (int a = 0; a < rx; ++a) {
    if (cost > kGridSearchBudget) return cost;
    cost *= f;
  }
  return cost;
}

}  // namespace detail

inline Certificate build(const StratumSig& alpha, ComponentLabel component, int d) {
  if (alpha.alpha.empty()) throw std::invalid_argument("build: empty stratum (unbranched covers of degree > 1 are never primitive)");
  if (!has_component(alpha, component))
    throw std::invalid_argument("build: component '" + to_string(component) + "' does not exist in stratum " + alpha.to_string());
  if (d <= alpha.max_order())
    throw std::invalid_argument("build: degree " + std::to_string(d) + " must exceed the largest zero order " +
                                std::to_string(alpha.max_order()));
  std::vector<std::vector<BuildStep>> plans{detail::primary_plan(alpha, component, d)};
  for (auto& p : detail::alternative_plans(alpha, d))
    if (std::find(plans.begin(), plans.end(), p) == plans.end()) plans.push_back(std::move(p));
  for (const auto& plan : plans) {
    if (plan.empty()) continue;
    try {
      auto s = replay(plan);
      if (detail::lands_in(s, alpha, component, d)) return make_certificate(s, component, plan);
    } catch (const std::invalid_argument&) {
      // recipe not applicable at this degree
    }
  }
  const int n = static_cast<int>(alpha.alpha.size());
  for (int rx = detail::min_branch_points(alpha, d); rx <= n; ++rx) {
    if (detail::grid_search_cost(d, rx) > detail::kGridSearchBudget) break;
    if (auto hit = detail::grid_search(alpha, component, d, rx))
      return make_certificate(hit->surface, component, {hit->step});
  }
  throw std::runtime_error("build: no construction or search result for " + alpha.to_string() + " " +
                           to_string(component) + " at degree " + std::to_string(d));
}

// ---------------------------------------------------------------------------

struct VerifyReport {
  bool ok = true;
  std::vector<std::string> diffs;
  void fail(std::string why) {
    ok = false;
    diffs.push_back(std::move(why));
  }
};

namespace detail {

// Curves must be closed edge paths; their mod-2 classes must form a
// symplectic basis; recomputed indices and parity must match.
inline void check_spin_evidence(const GridSurface& s, const SpinEvidence& ev, VerifyReport& r) {
  const int g = genus(s);
  if (static_cast<int>(ev.curves.size()) != 2 * g || ev.indices.size() != ev.curves.size()) {
    r.fail("spin evidence: expected " + std::to_string(2 * g) + " basis curves");
    return;
  }
  std::vector<DualChain> classes;
  try {
    for (std::size_t i = 0; i < ev.curves.size(); ++i) {
      DualChain x(s.num_cells());
      for (const auto& p : ev.curves[i]) x.add(chain_of(s, p), 1);
      classes.push_back(std::move(x));
      const auto idx = effective_index(s, ev.curves[i]);
      if (idx != ev.indices[i])
        r.fail("spin evidence: curve " + std::to_string(i) + " has index " + std::to_string(idx) + ", certificate says " +
               std::to_string(ev.indices[i]));
    }
  } catch (const std::invalid_argument& e) {
    r.fail(std::string("spin evidence: ") + e.what());
    return;
  }
  for (int i = 0; i < 2 * g; ++i)
    for (int j = 0; j < 2 * g; ++j) {
      const long long want = (i / 2 == j / 2 && i != j) ? 1 : 0;
      const long long got = intersection(s, classes[i], classes[j]);
      if (((got - want) % 2 + 2) % 2 != 0) {
        r.fail("spin evidence: curves are not a symplectic basis mod 2");
        return;
      }
    }
  if (parity_from_indices(ev.indices) != ev.parity) r.fail("spin evidence: parity does not follow from indices");
}

}  // namespace detail

inline VerifyReport verify_report(const Certificate& cert) {
  VerifyReport r;
  const auto& s = cert.surface;
  if (s.degree() != cert.degree)
    r.fail("degree: certificate " + std::to_string(cert.degree) + ", surface " + std::to_string(s.degree()));
  const auto st = stratum(s);
  if (st != cert.stratum) r.fail("stratum: certificate " + cert.stratum.to_string() + ", surface " + st.to_string());
  if (!has_component(st, cert.component))
    r.fail("component: '" + to_string(cert.component) + "' is not a component of " + st.to_string());
  const auto pr = is_primitive(s);
  if (!pr.primitive) r.fail("primitivity: period lattice is not Z^2");
  if (pr.lattice.rank != cert.primitive_evidence.rank || pr.lattice.covolume != cert.primitive_evidence.covolume ||
      pr.lattice.basis != cert.primitive_evidence.basis)
    r.fail("primitivity: lattice basis differs from the recomputed one");
  const auto got = classify_component(s);
  if (got != cert.component) r.fail("component: certificate '" + to_string(cert.component) + "', surface '" + to_string(got) + "'");
  const auto& ev = cert.component_evidence;
  switch (cert.component) {
    case ComponentLabel::Hyperelliptic:
      if (ev.kind != EvidenceKind::Involution || !ev.involution) {
        r.fail("evidence: hyperelliptic component needs an involution");
      } else {
        const auto w = check_involution(s, ev.involution->rho);
        if (!w || w->fixed_points() != 2 * genus(s) + 2) r.fail("evidence: involution is not hyperelliptic");
      }
      break;
    case ComponentLabel::EvenSpin:
    case ComponentLabel::OddSpin:
      if (ev.kind != EvidenceKind::Spin || !ev.spin) {
        r.fail("evidence: spin component needs spin evidence");
      } else {
        detail::check_spin_evidence(s, *ev.spin, r);
        if (ev.spin->parity != (cert.component == ComponentLabel::OddSpin ? 1 : 0))
          r.fail("evidence: spin parity does not match the component");
      }
      break;
    case ComponentLabel::NonHyperelliptic:
      if (ev.kind != EvidenceKind::NoInvolution) r.fail("evidence: expected exhaustive involution search");
      break;
    case ComponentLabel::Unique:
      if (ev.kind != EvidenceKind::Connected) r.fail("evidence: expected connected-stratum citation");
      break;
  }
  try {
    if (canonical_form(replay(cert.script)) != canonical_form(s)) r.fail("script: replay gives a different surface");
  } catch (const std::exception& e) {
    r.fail(std::string("script: ") + e.what());
  }
  return r;
}

inline bool verify(const Certificate& cert) { return verify_report(cert).ok; }

}  // namespace origami
