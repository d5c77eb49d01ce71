#pragma once

// Period characters with Gaussian-rational values: area, period lattice, the
// realizability verdict, and the bridge to covers.

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "origami/intlin.hpp"
#include "origami/invariants.hpp"
#include "origami/targeting.hpp"

namespace origami {

struct GaussianRational {
  Rational re = 0, im = 0;

  GaussianRational() = default;
  GaussianRational(Rational r, Rational i = 0) : re(std::move(r)), im(std::move(i)) {}

  GaussianRational conj() const { return {re, -im}; }
  friend GaussianRational operator+(const GaussianRational& x, const GaussianRational& y) {
    return {x.re + y.re, x.im + y.im};
  }
  friend GaussianRational operator-(const GaussianRational& x, const GaussianRational& y) {
    return {x.re - y.re, x.im - y.im};
  }
  friend GaussianRational operator*(const GaussianRational& x, const GaussianRational& y) {
    return {x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re};
  }
  friend bool operator==(const GaussianRational&, const GaussianRational&) = default;
  std::string to_string() const { return origami::to_string(re) + (im < 0 ? "" : "+") + origami::to_string(im) + "i"; }
};

inline const GaussianRational kI{0, 1};

// Values on a symplectic basis a_1, b_1, ..., a_g, b_g.
struct Character {
  int genus = 0;
  std::vector<GaussianRational> a, b;

  Character() = default;
  Character(int g, std::vector<GaussianRational> av, std::vector<GaussianRational> bv)
      : genus(g), a(std::move(av)), b(std::move(bv)) {
    if (g < 1) throw std::invalid_argument("character: genus must be positive");
    if (static_cast<int>(a.size()) != g || static_cast<int>(b.size()) != g)
      throw std::invalid_argument("character: need exactly g values on a and on b");
  }
};

// Im sum conj(chi(a_i)) chi(b_i).
inline Rational area(const Character& chi) {
  Rational s = 0;
  for (int i = 0; i < chi.genus; ++i) s += (chi.a[i].conj() * chi.b[i]).im;
  return s;
}

inline LatticeBasis period_lattice(const Character& chi) {
  std::vector<PlaneVector> vs;
  for (int i = 0; i < chi.genus; ++i) {
    vs.push_back({chi.a[i].re, chi.a[i].im});
    vs.push_back({chi.b[i].re, chi.b[i].im});
  }
  return lattice_of(vs);
}

struct HauptVerdict {
  bool realizable = false;
  std::string reason;
  Rational area = 0;
  LatticeBasis lattice;
  std::optional<int> degree;  // d_chi when it is a positive integer
};

inline constexpr int kMaxRealizeDegree = 10000;

inline HauptVerdict haupt_verdict(const Character& chi, const StratumSig& alpha) {
  if (alpha.sum() != 2 * chi.genus - 2)
    throw std::invalid_argument("haupt: stratum " + alpha.to_string() + " does not have genus " + std::to_string(chi.genus));
  HauptVerdict v;
  v.area = area(chi);
  v.lattice = period_lattice(chi);
  if (v.area <= 0) {
    v.reason = "area " + to_string(v.area) + " is not positive";
    return v;
  }
  if (v.lattice.rank < 2) {
    v.reason = "period group has rank " + std::to_string(v.lattice.rank) + ", not a lattice";
    return v;
  }
  const Rational d = v.area / v.lattice.covolume;
  if (denominator(d) != 1) {
    v.reason = "area/covolume = " + to_string(d) + " is not an integer: no branched cover induces this pairing";
    return v;
  }
  if (d > kMaxRealizeDegree) {
    v.reason = "degree " + to_string(d) + " exceeds the supported bound " + std::to_string(kMaxRealizeDegree);
    return v;
  }
  v.degree = static_cast<int>(numerator(d));
  if (*v.degree <= alpha.max_order()) {
    v.reason = "degree " + std::to_string(*v.degree) + " does not exceed the largest zero order " +
               std::to_string(alpha.max_order());
    return v;
  }
  v.realizable = true;
  v.reason = "area positive, lattice of covolume " + to_string(v.lattice.covolume) + ", degree " +
             std::to_string(*v.degree) + " > " + std::to_string(alpha.max_order());
  return v;
}

// Holonomy of the homology basis cycles, in unit-torus coordinates.
inline Character character_of(const GridSurface& s) {
  const auto hb = homology_basis(s);
  const int g = hb.genus();
  std::vector<GaussianRational> a, b;
  for (int i = 0; i < g; ++i) {
    const auto x = holonomy(s, hb.cycles[2 * i]);
    const auto y = holonomy(s, hb.cycles[2 * i + 1]);
    a.emplace_back(x[0], x[1]);
    b.emplace_back(y[0], y[1]);
  }
  return Character(g, std::move(a), std::move(b));
}

using Matrix2 = std::array<std::array<Rational, 2>, 2>;

struct Realization {
  Certificate certificate;
  Matrix2 normalizing;  // real-linear map taking the period lattice of chi onto Z[i]
  std::string note;
};

// Realizes a cover with the same lattice, area, stratum and component as chi.
// chi itself is matched only up to the symplectic change of basis, which this
// does not compute.
inline Realization realize(const Character& chi, const StratumSig& alpha, ComponentLabel component) {
  const auto v = haupt_verdict(chi, alpha);
  if (!v.realizable) throw std::invalid_argument("realize: not realizable: " + v.reason);
  auto e1 = v.lattice.basis[0];
  auto e2 = v.lattice.basis[1];
  Rational det = e1[0] * e2[1] - e1[1] * e2[0];
  if (det < 0) {
    e2 = {-e2[0], -e2[1]};
    det = -det;
  }
  // Inverse of the matrix with columns e1, e2.
  Matrix2 n{{{e2[1] / det, -e2[0] / det}, {-e1[1] / det, e1[0] / det}}};
  auto cert = build(alpha, component, *v.degree);
  return Realization{std::move(cert), n,
                     "matches period lattice (after normalizing), area, stratum and component; "
                     "the character itself is not matched basis by basis"};
}

// Applies a real-linear map to every value.
inline Character transform(const Character& chi, const Matrix2& m) {
  auto f = [&](const GaussianRational& z) {
    return GaussianRational{m[0][0] * z.re + m[0][1] * z.im, m[1][0] * z.re + m[1][1] * z.im};
  };
  std::vector<GaussianRational> a, b;
  for (const auto& z : chi.a) a.push_back(f(z));
  for (const auto& z : chi.b) b.push_back(f(z));
  return Character(chi.genus, std::move(a), std::move(b));
}

}  // namespace origami
