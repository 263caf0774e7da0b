#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace ebrauer {

// Permutation of {1..r}, stored as images. Composition is function
// composition: compose(a,b)(x) = a(b(x)).
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(int r);  // identity
  explicit Permutation(std::vector<int> images);

  int degree() const { return static_cast<int>(img_.size()); }
  int operator()(int i) const { return img_[static_cast<std::size_t>(i - 1)]; }
  const std::vector<int>& images() const { return img_; }

  Permutation inverse() const;
  static Permutation compose(const Permutation& a, const Permutation& b);
  static Permutation transposition(int r, int i, int j);

  // All of S_r in lexicographic order of image vectors.
  static std::vector<Permutation> all(int r);

  bool operator==(const Permutation& rhs) const { return img_ == rhs.img_; }
  bool operator<(const Permutation& rhs) const { return img_ < rhs.img_; }

 private:
  std::vector<int> img_;
};

// t disjoint bars on columns {1..r}; columns off the bars are untouched.
struct NormalizedDiagram {
  int r = 0;
  std::vector<std::pair<int, int>> bars;  // each (i < j), list sorted

  int bar_count() const { return static_cast<int>(bars.size()); }
  std::uint32_t support_mask() const;  // bit k-1 set iff column k lies on a bar

  bool operator==(const NormalizedDiagram& rhs) const {
    return r == rhs.r && bars == rhs.bars;
  }
  bool operator<(const NormalizedDiagram& rhs) const {
    return bars < rhs.bars;
  }
};

// Perfect matching on 2r dots: top row T1..Tr (internal 0..r-1), bottom row
// B1..Br (internal r..2r-1). Operators read bottom-to-top: the bottom row is
// the domain.
struct BrauerDiagram {
  int r = 0;
  std::vector<int> match;  // match[d] = partner of dot d

  std::vector<std::pair<int, int>> edges() const;  // (a < b), sorted

  static BrauerDiagram from_permutation(const Permutation& s);
  static BrauerDiagram from_normalized(const NormalizedDiagram& z);

  bool operator==(const BrauerDiagram& rhs) const {
    return r == rhs.r && match == rhs.match;
  }
  bool operator<(const BrauerDiagram& rhs) const { return edges() < rhs.edges(); }
};

// Diagram of the composite operator d1 after d2 (d2's bottom row is the
// domain), plus the number of closed loops swallowed by the gluing.
struct ComposeResult {
  BrauerDiagram diagram;
  int loops = 0;
};
ComposeResult compose(const BrauerDiagram& d1, const BrauerDiagram& d2);

// All (2r-1)!! diagrams, lexicographic in edge lists.
std::vector<BrauerDiagram> enumerate_diagrams(int r);

// Normalized diagrams, bar count ascending then lexicographic bars.
std::vector<NormalizedDiagram> enumerate_normalized(int r);
std::vector<NormalizedDiagram> enumerate_normalized(int r, int t);

// A word s * z acting as: bars first, then places permuted by s.
struct BrauerWord {
  Permutation s;
  NormalizedDiagram z;
};

// Every diagram factors as build(s, z); build is 2^t t!-to-one on words, and
// factorize picks the canonical preimage: bottom bars sorted and matched in
// order to sorted top bars, min end to min end.
BrauerDiagram build(const BrauerWord& w);
BrauerWord factorize(const BrauerDiagram& d);

// Text form "T1-B1 T2-T3 B2-B3": one token per edge, canonical edge order.
std::string render(const BrauerDiagram& d);
BrauerDiagram parse_diagram(const std::string& text);

}  // namespace ebrauer
