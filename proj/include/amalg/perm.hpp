#ifndef AMALG_PERM_HPP
#define AMALG_PERM_HPP

#include <cctype>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace amalg {

/// Permutation of {0, ..., degree-1}, stored as the image sequence.
/// The byte string representation keeps comparisons and hashing cheap;
/// degrees above 255 are out of scope.
class Perm {
public:
  explicit Perm(int degree) : img_(check_degree(degree), '\0') {
    for (int i = 0; i < degree; ++i) img_[i] = static_cast<char>(i);
  }

  static Perm from_images(const std::vector<int>& images) {
    Perm p(static_cast<int>(images.size()));
    std::vector<bool> seen(images.size(), false);
    for (std::size_t i = 0; i < images.size(); ++i) {
      int v = images[i];
      if (v < 0 || v >= static_cast<int>(images.size()) || seen[v])
        throw std::invalid_argument("Perm: image list is not a bijection");
      seen[v] = true;
      p.img_[i] = static_cast<char>(v);
    }
    return p;
  }

  /// Parses cycle notation, e.g. "(0 1)(2 3)" or "(0,1,2)". "()" and the
  /// empty string denote the identity.
  static Perm from_cycles(int degree, const std::string& cycles) {
    Perm p(degree);
    std::size_t i = 0;
    auto skip_ws = [&] {
      while (i < cycles.size() && (std::isspace(static_cast<unsigned char>(cycles[i])) || cycles[i] == ',')) ++i;
    };
    skip_ws();
    while (i < cycles.size()) {
      if (cycles[i] != '(') throw std::invalid_argument("Perm: expected '(' in cycle string");
      ++i;
      std::vector<int> cycle;
      skip_ws();
      while (i < cycles.size() && cycles[i] != ')') {
        if (!std::isdigit(static_cast<unsigned char>(cycles[i])))
          throw std::invalid_argument("Perm: expected point in cycle string");
        int v = 0;
        while (i < cycles.size() && std::isdigit(static_cast<unsigned char>(cycles[i])))
          v = v * 10 + (cycles[i++] - '0');
        if (v >= degree) throw std::invalid_argument("Perm: point exceeds degree");
        cycle.push_back(v);
        skip_ws();
      }
      if (i == cycles.size()) throw std::invalid_argument("Perm: unterminated cycle");
      ++i;  // ')'
      for (std::size_t k = 0; k < cycle.size(); ++k) {
        int from = cycle[k];
        int to = cycle[(k + 1) % cycle.size()];
        if (p.img_[from] != static_cast<char>(from))
          throw std::invalid_argument("Perm: point repeated across cycles");
        p.img_[from] = static_cast<char>(to);
      }
      skip_ws();
    }
    // Repeats within one cycle slip past the per-point check; verify.
    std::vector<bool> seen(degree, false);
    for (int k = 0; k < degree; ++k) {
      int v = p[k];
      if (seen[v]) throw std::invalid_argument("Perm: cycle string is not a bijection");
      seen[v] = true;
    }
    return p;
  }

  int degree() const { return static_cast<int>(img_.size()); }
  int operator[](int x) const { return static_cast<unsigned char>(img_[x]); }

  bool is_identity() const {
    for (int i = 0; i < degree(); ++i)
      if ((*this)[i] != i) return false;
    return true;
  }

  Perm inverse() const {
    Perm r(degree());
    for (int i = 0; i < degree(); ++i) r.img_[(*this)[i]] = static_cast<char>(i);
    return r;
  }

  /// Extends with fixed points up to `degree`.
  Perm padded(int degree) const {
    if (degree < this->degree()) throw std::invalid_argument("Perm: cannot pad to smaller degree");
    Perm r(degree);
    for (int i = 0; i < this->degree(); ++i) r.img_[i] = img_[i];
    return r;
  }

  std::vector<int> images() const {
    std::vector<int> v(degree());
    for (int i = 0; i < degree(); ++i) v[i] = (*this)[i];
    return v;
  }

  std::string cycle_string() const {
    std::string out;
    std::vector<bool> seen(degree(), false);
    for (int i = 0; i < degree(); ++i) {
      if (seen[i] || (*this)[i] == i) continue;
      out += '(';
      int j = i;
      bool first = true;
      while (!seen[j]) {
        seen[j] = true;
        if (!first) out += ' ';
        out += std::to_string(j);
        first = false;
        j = (*this)[j];
      }
      out += ')';
    }
    if (out.empty()) out = "()";
    return out;
  }

  /// (a*b)(x) = a(b(x)); b is applied first.
  friend Perm operator*(const Perm& a, const Perm& b) {
    if (a.degree() != b.degree()) throw std::invalid_argument("Perm: degree mismatch in composition");
    Perm r(a.degree());
    for (int i = 0; i < a.degree(); ++i) r.img_[i] = a.img_[static_cast<unsigned char>(b.img_[i])];
    return r;
  }

  friend bool operator==(const Perm& a, const Perm& b) { return a.img_ == b.img_; }
  friend bool operator!=(const Perm& a, const Perm& b) { return a.img_ != b.img_; }
  friend bool operator<(const Perm& a, const Perm& b) { return a.img_ < b.img_; }

  const std::string& key() const { return img_; }

private:
  static int check_degree(int degree) {
    if (degree < 1 || degree > 255) throw std::invalid_argument("Perm: degree out of range");
    return degree;
  }
  std::string img_;
};

inline Perm compose(const Perm& a, const Perm& b) { return a * b; }

struct PermHash {
  std::size_t operator()(const Perm& p) const { return std::hash<std::string>{}(p.key()); }
};

}  // namespace amalg

#endif  // AMALG_PERM_HPP
