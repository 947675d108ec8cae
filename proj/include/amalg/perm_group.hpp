#ifndef AMALG_PERM_GROUP_HPP
#define AMALG_PERM_GROUP_HPP

#include <algorithm>
#include <cstdint>
#include <memory>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "amalg/perm.hpp"

namespace amalg {

struct CapExceeded : std::runtime_error {
  explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

/// Finite permutation group with its element set fully enumerated.
///
/// Elements are materialized by breadth-first closure over the generators,
/// so element order is a deterministic function of the generator list.
/// elements()[0] is the identity. Values are immutable after construction.
class PermGroup {
public:
  static constexpr std::int64_t kDefaultCap = 10'000'000;

  static PermGroup trivial(int degree) { return generated(degree, {}, 16); }

  /// Breadth-first closure of `gens`. Throws CapExceeded when the element
  /// count would pass `cap`.
  static PermGroup generated(int degree, std::vector<Perm> gens,
                             std::int64_t cap = kDefaultCap) {
    for (const Perm& g : gens)
      if (g.degree() != degree) throw std::invalid_argument("PermGroup: generator degree mismatch");
    PermGroup g;
    g.degree_ = degree;
    g.gens_ = std::move(gens);
    g.close(cap);
    return g;
  }

  /// Wraps an already-enumerated subgroup element set (e.g. an intersection
  /// of two enumerated groups). The caller guarantees closure; a small
  /// generating set is recovered greedily so downstream closures stay cheap.
  static PermGroup from_elements(int degree, std::vector<Perm> elems) {
    if (elems.empty()) throw std::invalid_argument("PermGroup: empty element set");
    PermGroup g;
    g.degree_ = degree;
    g.elems_ = std::move(elems);
    // identity first, keeping the rest of the given order
    for (std::size_t i = 0; i < g.elems_.size(); ++i) {
      if (g.elems_[i].is_identity()) {
        if (i != 0) {
          Perm id = g.elems_[i];
          g.elems_.erase(g.elems_.begin() + static_cast<std::ptrdiff_t>(i));
          g.elems_.insert(g.elems_.begin(), id);
        }
        break;
      }
    }
    if (!g.elems_[0].is_identity())
      throw std::invalid_argument("PermGroup: element set lacks the identity");
    for (std::size_t i = 0; i < g.elems_.size(); ++i) {
      if (g.elems_[i].degree() != degree)
        throw std::invalid_argument("PermGroup: element degree mismatch");
      if (!g.index_.emplace(g.elems_[i].key(), static_cast<int>(i)).second)
        throw std::invalid_argument("PermGroup: duplicate element");
    }
    g.gens_ = g.greedy_generators();
    return g;
  }

  static PermGroup symmetric(int n) {
    std::vector<Perm> gens;
    if (n >= 2) gens.push_back(Perm::from_cycles(n, "(0 1)"));
    if (n >= 3) {
      std::vector<int> img(n);
      for (int i = 0; i < n; ++i) img[i] = (i + 1) % n;
      gens.push_back(Perm::from_images(img));
    }
    return generated(n, std::move(gens));
  }

  static PermGroup cyclic(int n) {
    std::vector<int> img(n);
    for (int i = 0; i < n; ++i) img[i] = (i + 1) % n;
    return generated(n, {Perm::from_images(img)});
  }

  int degree() const { return degree_; }
  std::int64_t order() const { return static_cast<std::int64_t>(elems_.size()); }
  const std::vector<Perm>& elements() const { return elems_; }
  const std::vector<Perm>& generators() const { return gens_; }
  const Perm& identity() const { return elems_[0]; }

  bool contains(const Perm& p) const {
    return p.degree() == degree_ && index_.count(p.key()) > 0;
  }

  /// -1 when absent.
  int index_of(const Perm& p) const {
    auto it = index_.find(p.key());
    return it == index_.end() ? -1 : it->second;
  }

  /// Element as a product of generators: index list g_{i1} * g_{i2} * ...
  /// (rightmost factor applied to points first). Empty for the identity.
  std::vector<int> word_of(int elem_index) const {
    std::vector<int> w;
    while (elem_index != 0) {
      w.push_back(via_gen_[elem_index]);
      elem_index = parent_[elem_index];
    }
    std::reverse(w.begin(), w.end());
    return w;
  }

  bool same_elements(const PermGroup& other) const {
    if (degree_ != other.degree_ || order() != other.order()) return false;
    for (const Perm& p : elems_)
      if (!other.contains(p)) return false;
    return true;
  }

  bool is_subgroup_of(const PermGroup& other) const {
    if (degree_ != other.degree_ || other.order() % order() != 0) return false;
    for (const Perm& p : elems_)
      if (!other.contains(p)) return false;
    return true;
  }

  /// Same abstract group acting on a larger point set, new points fixed.
  PermGroup padded(int degree) const {
    std::vector<Perm> gens;
    gens.reserve(gens_.size());
    for (const Perm& g : gens_) gens.push_back(g.padded(degree));
    return generated(degree, std::move(gens), order() + 1);
  }

private:
  PermGroup() = default;

  void close(std::int64_t cap) {
    elems_.clear();
    index_.clear();
    parent_.assign(1, -1);
    via_gen_.assign(1, -1);
    elems_.emplace_back(degree_);
    index_.emplace(elems_[0].key(), 0);
    for (std::size_t head = 0; head < elems_.size(); ++head) {
      for (std::size_t j = 0; j < gens_.size(); ++j) {
        Perm next = elems_[head] * gens_[j];
        if (index_.count(next.key())) continue;
        if (static_cast<std::int64_t>(elems_.size()) >= cap)
          throw CapExceeded("PermGroup: closure exceeds cap " + std::to_string(cap));
        index_.emplace(next.key(), static_cast<int>(elems_.size()));
        elems_.push_back(std::move(next));
        parent_.push_back(static_cast<int>(head));
        via_gen_.push_back(static_cast<int>(j));
      }
    }
  }

  std::vector<Perm> greedy_generators() const {
    std::vector<Perm> gens;
    std::unordered_map<std::string, int> have;
    have.emplace(elems_[0].key(), 0);
    for (const Perm& p : elems_) {
      if (have.count(p.key())) continue;
      gens.push_back(p);
      // re-close with the enlarged generating set
      std::vector<Perm> closure{elems_[0]};
      have.clear();
      have.emplace(elems_[0].key(), 0);
      for (std::size_t head = 0; head < closure.size(); ++head)
        for (const Perm& g : gens) {
          Perm next = closure[head] * g;
          if (have.emplace(next.key(), 0).second) closure.push_back(std::move(next));
        }
      if (closure.size() == elems_.size()) break;
    }
    return gens;
  }

  int degree_ = 1;
  std::vector<Perm> gens_;
  std::vector<Perm> elems_;
  std::vector<int> parent_;   // BFS provenance; parallel to elems_
  std::vector<int> via_gen_;
  std::unordered_map<std::string, int> index_;
};

using GroupPtr = std::shared_ptr<const PermGroup>;

template <typename... Args>
GroupPtr make_group(Args&&... args) {
  return std::make_shared<const PermGroup>(std::forward<Args>(args)...);
}

/// Elements common to both groups, ordered as in `a`.
inline PermGroup intersect(const PermGroup& a, const PermGroup& b) {
  if (a.degree() != b.degree()) throw std::invalid_argument("intersect: degree mismatch");
  std::vector<Perm> both;
  for (const Perm& p : a.elements())
    if (b.contains(p)) both.push_back(p);
  return PermGroup::from_elements(a.degree(), std::move(both));
}

/// True iff the union of the parts' generators generates exactly `g`.
inline bool is_generated_by(const PermGroup& g, const std::vector<const PermGroup*>& parts,
                            std::int64_t cap = PermGroup::kDefaultCap) {
  std::vector<Perm> gens;
  for (const PermGroup* part : parts) {
    if (part->degree() != g.degree()) throw std::invalid_argument("is_generated_by: degree mismatch");
    for (const Perm& p : part->generators()) gens.push_back(p);
  }
  PermGroup span = PermGroup::generated(g.degree(), std::move(gens), cap);
  return span.same_elements(g);
}

/// A candidate homomorphism given by images of the source generators.
struct Embedding {
  GroupPtr source;
  GroupPtr target;
  std::vector<Perm> gen_images;  // aligned with source->generators()
};

struct EmbeddingCheck {
  bool homomorphism = false;
  bool injective = false;
  /// source element index -> target element index; filled when homomorphism.
  std::vector<int> image_index;
  bool ok() const { return homomorphism && injective; }
};

/// Decides whether the generator images extend to an injective homomorphism,
/// by propagating images over the enumerated source and checking every
/// (element, generator) product. This is a complete check: consistency on
/// all such pairs forces multiplicativity everywhere.
inline EmbeddingCheck analyze_embedding(const Embedding& e) {
  const PermGroup& src = *e.source;
  const PermGroup& tgt = *e.target;
  if (e.gen_images.size() != src.generators().size())
    throw std::invalid_argument("Embedding: one image required per source generator");
  for (const Perm& img : e.gen_images)
    if (img.degree() != tgt.degree())
      throw std::invalid_argument("Embedding: image element degree mismatch");

  EmbeddingCheck res;
  for (const Perm& img : e.gen_images)
    if (!tgt.contains(img)) return res;  // image leaves the target group

  const auto n = static_cast<std::size_t>(src.order());
  std::vector<int> image(n, -1);
  image[0] = 0;
  std::vector<Perm> image_perm(n, tgt.identity());
  // assign images along the BFS provenance, then verify all products
  for (std::size_t i = 1; i < n; ++i) {
    std::vector<int> w = src.word_of(static_cast<int>(i));
    Perm img = tgt.identity();
    for (int gi : w) img = img * e.gen_images[static_cast<std::size_t>(gi)];
    image_perm[i] = img;
    image[i] = tgt.index_of(img);
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < src.generators().size(); ++j) {
      Perm prod = src.elements()[i] * src.generators()[j];
      int k = src.index_of(prod);
      if (image_perm[static_cast<std::size_t>(k)] != image_perm[i] * e.gen_images[j]) return res;
    }
  }
  res.homomorphism = true;
  res.image_index = std::move(image);
  std::size_t kernel = 0;
  for (std::size_t i = 0; i < n; ++i)
    if (res.image_index[i] == 0) ++kernel;
  res.injective = kernel == 1;
  return res;
}

inline bool check_embedding(const Embedding& e) { return analyze_embedding(e).ok(); }

/// The image subgroup of a verified embedding, inside the target group.
inline PermGroup embedding_image(const Embedding& e, const EmbeddingCheck& check) {
  if (!check.homomorphism) throw std::invalid_argument("embedding_image: not a homomorphism");
  std::vector<Perm> elems;
  std::vector<bool> seen(static_cast<std::size_t>(e.target->order()), false);
  for (int idx : check.image_index) {
    if (seen[static_cast<std::size_t>(idx)]) continue;
    seen[static_cast<std::size_t>(idx)] = true;
    elems.push_back(e.target->elements()[static_cast<std::size_t>(idx)]);
  }
  return PermGroup::from_elements(e.target->degree(), std::move(elems));
}

}  // namespace amalg

#endif  // AMALG_PERM_GROUP_HPP
