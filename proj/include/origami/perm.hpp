#pragma once

// Permutations of {1..d}, stored 0-indexed.
//
// Composition convention (used everywhere in the library): compose(p, q)
// applies q first, then p.  commutator(h, v) = h v h^-1 v^-1 under the same
// convention.  Cycle notation and JSON image arrays are 1-indexed.

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <numeric>
#include <queue>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace origami {

class Perm {
public:
  Perm() = default;

  explicit Perm(std::vector<int> images) : images_(std::move(images)) {
    std::vector<char> seen(images_.size(), 0);
    for (int x : images_) {
      if (x < 0 || static_cast<std::size_t>(x) >= images_.size() || seen[x])
        throw std::invalid_argument("Perm: images do not form a bijection");
      seen[x] = 1;
    }
  }

  static Perm identity(int degree) {
    std::vector<int> im(static_cast<std::size_t>(degree));
    std::iota(im.begin(), im.end(), 0);
    return Perm(std::move(im));
  }

  // 1-indexed images, e.g. {2,1,4,3}.
  static Perm from_one_based(std::span<const int> images) {
    std::vector<int> im;
    im.reserve(images.size());
    for (int x : images) im.push_back(x - 1);
    return Perm(std::move(im));
  }

  // Parses "(1,2)(3,4)" or "(1 2)(3 4)"; "()" or "" is the identity.  The
  // degree is max(degree, largest point mentioned).
  static Perm parse_cycles(std::string_view text, int degree = 0);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int x) const { return images_[static_cast<std::size_t>(x)]; }
  const std::vector<int>& images() const { return images_; }
  std::vector<int> one_based() const {
    std::vector<int> out(images_);
    for (int& x : out) ++x;
    return out;
  }

  Perm inverse() const {
    std::vector<int> inv(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i]] = static_cast<int>(i);
    return Perm(std::move(inv));
  }

  bool is_identity() const {
    for (std::size_t i = 0; i < images_.size(); ++i)
      if (images_[i] != static_cast<int>(i)) return false;
    return true;
  }

  // Cycles (0-indexed), each starting at its smallest point, ordered by that
  // point.  Fixed points included.
  std::vector<std::vector<int>> cycles() const {
    std::vector<std::vector<int>> out;
    std::vector<char> seen(images_.size(), 0);
    for (std::size_t s = 0; s < images_.size(); ++s) {
      if (seen[s]) continue;
      std::vector<int> cyc;
      for (int x = static_cast<int>(s); !seen[x]; x = images_[x]) {
        seen[x] = 1;
        cyc.push_back(x);
      }
      out.push_back(std::move(cyc));
    }
    return out;
  }

  // 1-indexed cycle notation with fixed points omitted; identity prints "()".
  std::string to_cycle_string() const {
    std::ostringstream os;
    bool any = false;
    for (const auto& c : cycles()) {
      if (c.size() < 2) continue;
      any = true;
      os << '(';
      for (std::size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i] + 1;
      os << ')';
    }
    return any ? os.str() : "()";
  }

  friend bool operator==(const Perm&, const Perm&) = default;

private:
  std::vector<int> images_;
};

inline Perm Perm::parse_cycles(std::string_view text, int degree) {
  std::vector<std::vector<int>> cycles;
  int maxpt = 0;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(') throw std::invalid_argument("cycle notation: expected '('");
    ++i;
    std::vector<int> cyc;
    for (;;) {
      skip_ws();
      if (i >= text.size()) throw std::invalid_argument("cycle notation: unterminated cycle");
      if (text[i] == ')') { ++i; break; }
      if (text[i] == ',') { ++i; continue; }
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        throw std::invalid_argument("cycle notation: unexpected character");
      int v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
        v = v * 10 + (text[i++] - '0');
      if (v < 1) throw std::invalid_argument("cycle notation: points are 1-indexed");
      cyc.push_back(v);
      maxpt = std::max(maxpt, v);
    }
    cycles.push_back(std::move(cyc));
    skip_ws();
  }
  const int d = std::max(degree, maxpt);
  std::vector<int> im(static_cast<std::size_t>(d));
  std::iota(im.begin(), im.end(), 0);
  std::vector<char> used(static_cast<std::size_t>(d), 0);
  for (const auto& c : cycles) {
    for (std::size_t k = 0; k < c.size(); ++k) {
      const int x = c[k] - 1;
      if (used[x]) throw std::invalid_argument("cycle notation: point repeated");
      used[x] = 1;
      im[x] = c[(k + 1) % c.size()] - 1;
    }
  }
  return Perm(std::move(im));
}

// Apply q first, then p.
inline Perm compose(const Perm& p, const Perm& q) {
  if (p.degree() != q.degree()) throw std::invalid_argument("compose: degree mismatch");
  std::vector<int> im(static_cast<std::size_t>(p.degree()));
  for (int x = 0; x < p.degree(); ++x) im[x] = p(q(x));
  return Perm(std::move(im));
}

inline Perm commutator(const Perm& h, const Perm& v) {
  if (h.degree() != v.degree()) throw std::invalid_argument("commutator: degree mismatch");
  return compose(h, compose(v, compose(h.inverse(), v.inverse())));
}

// r p r^-1
inline Perm conjugate(const Perm& p, const Perm& r) {
  return compose(r, compose(p, r.inverse()));
}

// Multiset of cycle lengths (fixed points included), sorted descending.
class CycleType {
public:
  CycleType() = default;
  explicit CycleType(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int x : parts_)
      if (x < 1) throw std::invalid_argument("CycleType: parts must be positive");
    std::sort(parts_.begin(), parts_.end(), std::greater<>());
  }
  const std::vector<int>& parts() const { return parts_; }
  int degree() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }
  // Zero orders (length - 1) of the nontrivial cycles, ascending.
  std::vector<int> divisor_data() const {
    std::vector<int> out;
    for (int x : parts_)
      if (x > 1) out.push_back(x - 1);
    std::sort(out.begin(), out.end());
    return out;
  }
  friend bool operator==(const CycleType&, const CycleType&) = default;

private:
  std::vector<int> parts_;
};

inline CycleType cycle_type(const Perm& p) {
  std::vector<int> parts;
  for (const auto& c : p.cycles()) parts.push_back(static_cast<int>(c.size()));
  return CycleType(std::move(parts));
}

// Orbit closure of <h, v> from point 0.
inline bool is_transitive(const Perm& h, const Perm& v) {
  if (h.degree() != v.degree()) return false;
  const int d = h.degree();
  if (d == 0) return false;
  std::vector<char> seen(static_cast<std::size_t>(d), 0);
  std::queue<int> q;
  q.push(0);
  seen[0] = 1;
  int count = 1;
  while (!q.empty()) {
    const int x = q.front();
    q.pop();
    for (int y : {h(x), v(x)}) {
      if (!seen[y]) {
        seen[y] = 1;
        ++count;
        q.push(y);
      }
    }
  }
  return count == d;
}

}  // namespace origami
