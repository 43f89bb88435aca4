#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace cyclojac {

/// Permutation of {0,...,n-1}, acting on the left: (g*h)(x) = g(h(x)).
class Perm {
 public:
  Perm() = default;
  explicit Perm(int degree) : img_(static_cast<std::size_t>(degree)) {
    std::iota(img_.begin(), img_.end(), 0);
  }

  static Perm from_images(std::vector<int> images) {
    std::vector<bool> seen(images.size(), false);
    for (int v : images) {
      if (v < 0 || v >= static_cast<int>(images.size()) || seen[static_cast<std::size_t>(v)])
        throw std::invalid_argument("image sequence is not a bijection");
      seen[static_cast<std::size_t>(v)] = true;
    }
    Perm p;
    p.img_ = std::move(images);
    return p;
  }

  /// One cycle given as a point list, embedded in degree n.
  static Perm cycle(int degree, const std::vector<int>& pts) {
    Perm p(degree);
    for (std::size_t i = 0; i < pts.size(); ++i) {
      const int from = pts[i];
      const int to = pts[(i + 1) % pts.size()];
      if (from < 0 || from >= degree) throw std::invalid_argument("cycle point out of range");
      p.img_[static_cast<std::size_t>(from)] = to;
    }
    return p;
  }

  int degree() const { return static_cast<int>(img_.size()); }
  int operator()(int x) const { return img_[static_cast<std::size_t>(x)]; }
  const std::vector<int>& images() const { return img_; }

  bool is_identity() const {
    for (int i = 0; i < degree(); ++i)
      if (img_[static_cast<std::size_t>(i)] != i) return false;
    return true;
  }

  Perm operator*(const Perm& h) const {
    if (degree() != h.degree()) throw std::invalid_argument("degree mismatch");
    Perm r;
    r.img_.resize(img_.size());
    for (int x = 0; x < degree(); ++x) r.img_[static_cast<std::size_t>(x)] = (*this)(h(x));
    return r;
  }

  Perm inverse() const {
    Perm r;
    r.img_.resize(img_.size());
    for (int x = 0; x < degree(); ++x) r.img_[static_cast<std::size_t>(img_[static_cast<std::size_t>(x)])] = x;
    return r;
  }

  Perm conjugated_by(const Perm& g) const { return g * (*this) * g.inverse(); }

  /// Smallest moved point, or -1 for the identity.
  int first_moved() const {
    for (int i = 0; i < degree(); ++i)
      if ((*this)(i) != i) return i;
    return -1;
  }

  std::vector<int> cycle_type() const {
    std::vector<bool> seen(img_.size(), false);
    std::vector<int> type;
    for (int i = 0; i < degree(); ++i) {
      if (seen[static_cast<std::size_t>(i)]) continue;
      int len = 0, j = i;
      do {
        seen[static_cast<std::size_t>(j)] = true;
        j = (*this)(j);
        ++len;
      } while (j != i);
      type.push_back(len);
    }
    std::sort(type.begin(), type.end());
    return type;
  }

  std::int64_t order() const {
    std::int64_t o = 1;
    for (int len : cycle_type()) o = std::lcm(o, static_cast<std::int64_t>(len));
    return o;
  }

  bool operator==(const Perm& o) const { return img_ == o.img_; }
  bool operator!=(const Perm& o) const { return !(*this == o); }
  bool operator<(const Perm& o) const { return img_ < o.img_; }

  /// Disjoint cycle notation; the identity prints as "()".
  std::string to_cycle_string() const {
    std::ostringstream os;
    std::vector<bool> seen(img_.size(), false);
    bool any = false;
    for (int i = 0; i < degree(); ++i) {
      if (seen[static_cast<std::size_t>(i)] || (*this)(i) == i) continue;
      any = true;
      os << "(";
      int j = i;
      bool first = true;
      do {
        if (!first) os << " ";
        first = false;
        os << j;
        seen[static_cast<std::size_t>(j)] = true;
        j = (*this)(j);
      } while (j != i);
      os << ")";
    }
    return any ? os.str() : "()";
  }

  /// Parses cycle notation like "(0 1 2)(3 4)"; "()" is the identity.
  /// Commas and spaces both separate points.
  static Perm parse_cycles(const std::string& text, int degree) {
    Perm acc(degree);
    std::size_t pos = 0;
    auto skip = [&] {
      while (pos < text.size() && (std::isspace(static_cast<unsigned char>(text[pos])) || text[pos] == ','))
        ++pos;
    };
    skip();
    while (pos < text.size()) {
      if (text[pos] != '(') throw std::invalid_argument("expected '(' in cycle notation");
      ++pos;
      std::vector<int> pts;
      skip();
      while (pos < text.size() && text[pos] != ')') {
        if (!std::isdigit(static_cast<unsigned char>(text[pos])))
          throw std::invalid_argument("expected point number in cycle notation");
        int v = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
          v = v * 10 + (text[pos] - '0');
          ++pos;
        }
        pts.push_back(v);
        skip();
      }
      if (pos == text.size()) throw std::invalid_argument("unterminated cycle");
      ++pos;  // ')'
      // Written product: leftmost cycle applied last.
      if (pts.size() >= 2) acc = acc * Perm::cycle(degree, pts);
      skip();
    }
    return acc;
  }

 private:
  std::vector<int> img_;
};

}  // namespace cyclojac
