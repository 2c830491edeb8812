#ifndef INVBANACH_PERM_GROUP_HPP
#define INVBANACH_PERM_GROUP_HPP

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <vector>

#include "invbanach/errors.hpp"
#include "invbanach/types.hpp"

namespace invbanach {

/// A bijection of {1..n}. Stored 0-based; the serialization boundary is
/// 1-based. The coordinate action is fixed once for the whole library:
///
///   apply(g, x)[i] = x[g(i)]
///
/// so composing as compose(g, h) satisfies
/// apply(compose(g, h), x) == apply(g, apply(h, x)).
class Permutation {
 public:
  static Permutation identity(int degree) {
    require(degree >= 1, ErrorCode::InvalidPermutation, "degree must be >= 1");
    std::vector<int> img(degree);
    std::iota(img.begin(), img.end(), 0);
    return Permutation(std::move(img));
  }

  static Permutation from_images_zero_based(std::vector<int> img) {
    check_bijection(img);
    return Permutation(std::move(img));
  }

  static Permutation from_images_one_based(const std::vector<int>& img) {
    std::vector<int> zero(img.size());
    for (std::size_t i = 0; i < img.size(); ++i) zero[i] = img[i] - 1;
    check_bijection(zero);
    return Permutation(std::move(zero));
  }

  /// Transposition (a b), 1-based.
  static Permutation transposition(int degree, int a, int b) {
    Permutation p = identity(degree);
    require(a >= 1 && a <= degree && b >= 1 && b <= degree,
            ErrorCode::InvalidPermutation, "transposition index out of range");
    std::swap(p.images_[a - 1], p.images_[b - 1]);
    return p;
  }

  /// Cycle (c1 c2 ... ck), 1-based: c1 -> c2 -> ... -> ck -> c1.
  static Permutation cycle(int degree, const std::vector<int>& cyc) {
    Permutation p = identity(degree);
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      int from = cyc[i] - 1;
      int to = cyc[(i + 1) % cyc.size()] - 1;
      require(from >= 0 && from < degree && to >= 0 && to < degree,
              ErrorCode::InvalidPermutation, "cycle index out of range");
      p.images_[from] = to;
    }
    check_bijection(p.images_);
    return p;
  }

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[i]; }
  const std::vector<int>& images() const { return images_; }

  std::vector<int> images_one_based() const {
    std::vector<int> out(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) out[i] = images_[i] + 1;
    return out;
  }

  bool is_identity() const {
    for (int i = 0; i < degree(); ++i)
      if (images_[i] != i) return false;
    return true;
  }

  Permutation inverse() const {
    std::vector<int> inv(images_.size());
    for (int i = 0; i < degree(); ++i) inv[images_[i]] = i;
    return Permutation(std::move(inv));
  }

  friend Permutation compose(const Permutation& g, const Permutation& h) {
    require(g.degree() == h.degree(), ErrorCode::DimensionMismatch,
            "compose: degree mismatch");
    std::vector<int> img(g.images_.size());
    for (int i = 0; i < g.degree(); ++i) img[i] = h.images_[g.images_[i]];
    return Permutation(std::move(img));
  }

  Vec apply(const Vec& x) const {
    require(x.size() == degree(), ErrorCode::DimensionMismatch,
            "apply: vector dimension does not match permutation degree");
    Vec y(x.size());
    for (int i = 0; i < degree(); ++i) y[i] = x[images_[i]];
    return y;
  }

  /// Permutation matrix M with M*x == apply(x), i.e. M[i][j] = [j == g(i)].
  Mat matrix() const {
    Mat m = Mat::Zero(degree(), degree());
    for (int i = 0; i < degree(); ++i) m(i, images_[i]) = 1.0;
    return m;
  }

  bool operator==(const Permutation& o) const { return images_ == o.images_; }
  bool operator!=(const Permutation& o) const { return images_ != o.images_; }
  bool operator<(const Permutation& o) const { return images_ < o.images_; }

 private:
  explicit Permutation(std::vector<int> img) : images_(std::move(img)) {}

  static void check_bijection(const std::vector<int>& img) {
    require(!img.empty(), ErrorCode::InvalidPermutation, "empty image list");
    std::vector<bool> seen(img.size(), false);
    for (int v : img) {
      require(v >= 0 && v < static_cast<int>(img.size()),
              ErrorCode::InvalidPermutation, "image out of range");
      require(!seen[v], ErrorCode::InvalidPermutation, "repeated image");
      seen[v] = true;
    }
  }

  std::vector<int> images_;
};

/// Disjoint index sets covering {1..n}; blocks sorted by their minima.
/// At finite degree every block is finite, so the bounded-size predicate
/// is exposed separately (orbit_sizes_bounded).
struct OrbitPartition {
  std::vector<std::vector<int>> blocks;  // 0-based, each sorted ascending
  std::vector<int> block_of;             // index -> position in `blocks`

  std::vector<int> sizes() const {
    std::vector<int> s;
    s.reserve(blocks.size());
    for (const auto& b : blocks) s.push_back(static_cast<int>(b.size()));
    return s;
  }
};

/// Finite permutation group with uniform Haar weight 1/|G|. Finiteness is
/// how compact groups are realized here: every group average is an exact
/// finite sum.
class PermutationGroup {
 public:
  static constexpr int kDefaultCap = 10000;

  static PermutationGroup generate(int degree,
                                   std::vector<Permutation> generators,
                                   int cap = kDefaultCap) {
    require(cap >= 1, ErrorCode::CapExceeded, "cap must be >= 1");
    for (const auto& g : generators)
      require(g.degree() == degree, ErrorCode::InvalidPermutation,
              "generator degree mismatch");

    // Breadth-first closure under right-multiplication by generators.
    // Finite bijections have finite order, so inverses appear on their own.
    std::set<Permutation> seen;
    std::deque<Permutation> queue;
    Permutation id = Permutation::identity(degree);
    seen.insert(id);
    queue.push_back(id);
    while (!queue.empty()) {
      Permutation cur = queue.front();
      queue.pop_front();
      for (const auto& g : generators) {
        Permutation next = compose(cur, g);
        if (seen.insert(next).second) {
          require(static_cast<int>(seen.size()) <= cap, ErrorCode::CapExceeded,
                  "group closure exceeded cap");
          queue.push_back(next);
        }
      }
    }
    return PermutationGroup(degree,
                            std::vector<Permutation>(seen.begin(), seen.end()),
                            std::move(generators));
  }

  static PermutationGroup trivial(int degree) {
    return generate(degree, {});
  }

  static PermutationGroup symmetric(int degree, int cap = kDefaultCap) {
    std::vector<Permutation> gens;
    for (int i = 1; i < degree; ++i)
      gens.push_back(Permutation::transposition(degree, i, i + 1));
    return generate(degree, std::move(gens), cap);
  }

  static PermutationGroup cyclic(int degree) {
    std::vector<int> cyc(degree);
    std::iota(cyc.begin(), cyc.end(), 1);
    return generate(degree, {Permutation::cycle(degree, cyc)});
  }

  /// Product of full symmetric groups on the given (1-based) blocks.
  static PermutationGroup block_symmetric(int degree,
                                          const std::vector<std::vector<int>>& blocks,
                                          int cap = kDefaultCap) {
    std::vector<Permutation> gens;
    for (const auto& b : blocks)
      for (std::size_t i = 0; i + 1 < b.size(); ++i)
        gens.push_back(Permutation::transposition(degree, b[i], b[i + 1]));
    return generate(degree, std::move(gens), cap);
  }

  int degree() const { return degree_; }
  const std::vector<Permutation>& elements() const { return elements_; }
  const std::vector<Permutation>& generators() const { return generators_; }
  std::size_t size() const { return elements_.size(); }
  double haar_weight() const { return 1.0 / static_cast<double>(elements_.size()); }

  const OrbitPartition& orbits() const { return orbits_; }

  /// True iff every orbit block has size strictly below C.
  bool orbit_sizes_bounded(int C) const {
    for (const auto& b : orbits_.blocks)
      if (static_cast<int>(b.size()) >= C) return false;
    return true;
  }

 private:
  PermutationGroup(int degree, std::vector<Permutation> elements,
                   std::vector<Permutation> generators)
      : degree_(degree),
        elements_(std::move(elements)),
        generators_(std::move(generators)) {
    compute_orbits();
  }

  void compute_orbits() {
    // Union-find over generator images; the closure's orbits coincide with
    // the generators' orbits.
    std::vector<int> parent(degree_);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int i) {
      while (parent[i] != i) {
        parent[i] = parent[parent[i]];
        i = parent[i];
      }
      return i;
    };
    auto unite = [&](int a, int b) {
      a = find(a);
      b = find(b);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    };
    for (const auto& g : elements_)
      for (int i = 0; i < degree_; ++i) unite(i, g(i));

    std::vector<std::vector<int>> by_root(degree_);
    for (int i = 0; i < degree_; ++i) by_root[find(i)].push_back(i);
    orbits_.block_of.assign(degree_, -1);
    for (int r = 0; r < degree_; ++r) {
      if (by_root[r].empty()) continue;
      for (int i : by_root[r])
        orbits_.block_of[i] = static_cast<int>(orbits_.blocks.size());
      orbits_.blocks.push_back(std::move(by_root[r]));
    }
  }

  int degree_;
  std::vector<Permutation> elements_;
  std::vector<Permutation> generators_;
  OrbitPartition orbits_;
};

inline Vec apply(const Permutation& g, const Vec& x) { return g.apply(x); }

}  // namespace invbanach

#endif  // INVBANACH_PERM_GROUP_HPP
