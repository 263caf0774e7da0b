#include "ebrauer/diagrams.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace ebrauer {

Permutation::Permutation(int r) : img_(static_cast<std::size_t>(r)) {
  std::iota(img_.begin(), img_.end(), 1);
}

Permutation::Permutation(std::vector<int> images) : img_(std::move(images)) {
  std::vector<char> seen(img_.size(), 0);
  for (int v : img_) {
    if (v < 1 || v > static_cast<int>(img_.size()) || seen[static_cast<std::size_t>(v - 1)]) {
      throw std::invalid_argument("not a permutation");
    }
    seen[static_cast<std::size_t>(v - 1)] = 1;
  }
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(img_.size());
  for (int i = 1; i <= degree(); ++i) inv[static_cast<std::size_t>((*this)(i)-1)] = i;
  return Permutation(std::move(inv));
}

Permutation Permutation::compose(const Permutation& a, const Permutation& b) {
  assert(a.degree() == b.degree());
  std::vector<int> img(static_cast<std::size_t>(a.degree()));
  for (int i = 1; i <= a.degree(); ++i) img[static_cast<std::size_t>(i - 1)] = a(b(i));
  return Permutation(std::move(img));
}

Permutation Permutation::transposition(int r, int i, int j) {
  Permutation s(r);
  std::swap(s.img_[static_cast<std::size_t>(i - 1)], s.img_[static_cast<std::size_t>(j - 1)]);
  return s;
}

std::vector<Permutation> Permutation::all(int r) {
  std::vector<int> img(static_cast<std::size_t>(r));
  std::iota(img.begin(), img.end(), 1);
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation(img));
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

std::uint32_t NormalizedDiagram::support_mask() const {
  std::uint32_t m = 0;
  for (const auto& [i, j] : bars) m |= (1u << (i - 1)) | (1u << (j - 1));
  return m;
}

std::vector<std::pair<int, int>> BrauerDiagram::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(static_cast<std::size_t>(r));
  for (int d = 0; d < 2 * r; ++d) {
    if (match[static_cast<std::size_t>(d)] > d) out.emplace_back(d, match[static_cast<std::size_t>(d)]);
  }
  return out;  // scanning d ascending keeps the list sorted
}

BrauerDiagram BrauerDiagram::from_permutation(const Permutation& s) {
  int r = s.degree();
  BrauerDiagram d{r, std::vector<int>(static_cast<std::size_t>(2 * r))};
  for (int c = 1; c <= r; ++c) {
    int top = s(c) - 1;
    int bot = r + c - 1;
    d.match[static_cast<std::size_t>(top)] = bot;
    d.match[static_cast<std::size_t>(bot)] = top;
  }
  return d;
}

BrauerDiagram BrauerDiagram::from_normalized(const NormalizedDiagram& z) {
  int r = z.r;
  BrauerDiagram d{r, std::vector<int>(static_cast<std::size_t>(2 * r))};
  std::vector<char> barred(static_cast<std::size_t>(r + 1), 0);
  for (const auto& [i, j] : z.bars) {
    barred[static_cast<std::size_t>(i)] = barred[static_cast<std::size_t>(j)] = 1;
    d.match[static_cast<std::size_t>(i - 1)] = j - 1;
    d.match[static_cast<std::size_t>(j - 1)] = i - 1;
    d.match[static_cast<std::size_t>(r + i - 1)] = r + j - 1;
    d.match[static_cast<std::size_t>(r + j - 1)] = r + i - 1;
  }
  for (int c = 1; c <= r; ++c) {
    if (barred[static_cast<std::size_t>(c)]) continue;
    d.match[static_cast<std::size_t>(c - 1)] = r + c - 1;
    d.match[static_cast<std::size_t>(r + c - 1)] = c - 1;
  }
  return d;
}

ComposeResult compose(const BrauerDiagram& d1, const BrauerDiagram& d2) {
  assert(d1.r == d2.r);
  int r = d1.r;
  // Node layout: 0..r-1 result top (d1 top), r..2r-1 glued middle (d1 bottom =
  // d2 top), 2r..3r-1 result bottom (d2 bottom). Every middle node carries one
  // d1 edge and one d2 edge; walks alternate between them.
  auto d1_adj = [&](int node) {
    int m = d1.match[static_cast<std::size_t>(node)];
    return m;  // in 0..2r-1, matching layout already
  };
  auto d2_adj = [&](int node) {
    int m = d2.match[static_cast<std::size_t>(node - r)];
    return m + r;  // shift d2's dots into r..3r-1
  };

  std::vector<char> visited(static_cast<std::size_t>(3 * r), 0);
  BrauerDiagram out{r, std::vector<int>(static_cast<std::size_t>(2 * r))};

  auto record = [&](int a, int b) {
    // a, b external: map to result dot numbering (top 0..r-1, bottom r..2r-1).
    int ra = a < r ? a : a - r;
    int rb = b < r ? b : b - r;
    out.match[static_cast<std::size_t>(ra)] = rb;
    out.match[static_cast<std::size_t>(rb)] = ra;
  };

  for (int start = 0; start < 3 * r; ++start) {
    bool external = start < r || start >= 2 * r;
    if (!external || visited[static_cast<std::size_t>(start)]) continue;
    visited[static_cast<std::size_t>(start)] = 1;
    bool use_d1 = start < r;
    int cur = start;
    for (;;) {
      int next = use_d1 ? d1_adj(cur) : d2_adj(cur);
      visited[static_cast<std::size_t>(next)] = 1;
      if (next < r || next >= 2 * r) {
        record(start, next);
        break;
      }
      use_d1 = !use_d1;
      cur = next;
    }
  }

  int loops = 0;
  for (int start = r; start < 2 * r; ++start) {
    if (visited[static_cast<std::size_t>(start)]) continue;
    // Untouched middle node: its component is a closed loop. Each middle node
    // carries exactly one d1 and one d2 edge, so the alternating walk returns
    // to start without revisiting anything in between.
    ++loops;
    int cur = start;
    bool use_d1 = true;
    do {
      visited[static_cast<std::size_t>(cur)] = 1;
      cur = use_d1 ? d1_adj(cur) : d2_adj(cur);
      use_d1 = !use_d1;
    } while (cur != start);
  }
  return {out, loops};
}

namespace {

void enumerate_matchings(std::vector<int>& match, std::vector<char>& used, int ndots,
                         std::vector<BrauerDiagram>& out, int r) {
  int first = -1;
  for (int d = 0; d < ndots; ++d) {
    if (!used[static_cast<std::size_t>(d)]) {
      first = d;
      break;
    }
  }
  if (first < 0) {
    out.push_back(BrauerDiagram{r, match});
    return;
  }
  used[static_cast<std::size_t>(first)] = 1;
  for (int partner = first + 1; partner < ndots; ++partner) {
    if (used[static_cast<std::size_t>(partner)]) continue;
    used[static_cast<std::size_t>(partner)] = 1;
    match[static_cast<std::size_t>(first)] = partner;
    match[static_cast<std::size_t>(partner)] = first;
    enumerate_matchings(match, used, ndots, out, r);
    used[static_cast<std::size_t>(partner)] = 0;
  }
  used[static_cast<std::size_t>(first)] = 0;
}

void enumerate_bars(int r, int t_left, int min_col, std::vector<char>& taken,
                    std::vector<std::pair<int, int>>& acc,
                    std::vector<NormalizedDiagram>& out) {
  if (t_left == 0) {
    out.push_back(NormalizedDiagram{r, acc});
    return;
  }
  for (int i = min_col; i <= r; ++i) {
    if (taken[static_cast<std::size_t>(i)]) continue;
    for (int j = i + 1; j <= r; ++j) {
      if (taken[static_cast<std::size_t>(j)]) continue;
      taken[static_cast<std::size_t>(i)] = taken[static_cast<std::size_t>(j)] = 1;
      acc.emplace_back(i, j);
      enumerate_bars(r, t_left - 1, i + 1, taken, acc, out);
      acc.pop_back();
      taken[static_cast<std::size_t>(i)] = taken[static_cast<std::size_t>(j)] = 0;
    }
  }
}

}  // namespace

std::vector<BrauerDiagram> enumerate_diagrams(int r) {
  std::vector<BrauerDiagram> out;
  std::vector<int> match(static_cast<std::size_t>(2 * r), -1);
  std::vector<char> used(static_cast<std::size_t>(2 * r), 0);
  enumerate_matchings(match, used, 2 * r, out, r);
  return out;
}

std::vector<NormalizedDiagram> enumerate_normalized(int r, int t) {
  std::vector<NormalizedDiagram> out;
  std::vector<char> taken(static_cast<std::size_t>(r + 1), 0);
  std::vector<std::pair<int, int>> acc;
  enumerate_bars(r, t, 1, taken, acc, out);
  return out;
}

std::vector<NormalizedDiagram> enumerate_normalized(int r) {
  std::vector<NormalizedDiagram> out;
  for (int t = 0; 2 * t <= r; ++t) {
    auto part = enumerate_normalized(r, t);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

BrauerDiagram build(const BrauerWord& w) {
  auto res = compose(BrauerDiagram::from_permutation(w.s), BrauerDiagram::from_normalized(w.z));
  assert(res.loops == 0);
  return res.diagram;
}

BrauerWord factorize(const BrauerDiagram& d) {
  int r = d.r;
  std::vector<std::pair<int, int>> top_bars, bottom_bars;
  std::vector<int> through_img(static_cast<std::size_t>(r), 0);
  for (const auto& [a, b] : d.edges()) {
    if (a < r && b < r) {
      top_bars.emplace_back(a + 1, b + 1);
    } else if (a >= r && b >= r) {
      bottom_bars.emplace_back(a - r + 1, b - r + 1);
    } else {
      through_img[static_cast<std::size_t>(b - r)] = a + 1;  // s(bottom col) = top col
    }
  }
  // edges() is sorted, so both bar lists are already in canonical order.
  for (std::size_t p = 0; p < bottom_bars.size(); ++p) {
    through_img[static_cast<std::size_t>(bottom_bars[p].first - 1)] = top_bars[p].first;
    through_img[static_cast<std::size_t>(bottom_bars[p].second - 1)] = top_bars[p].second;
  }
  BrauerWord w{Permutation(std::move(through_img)), NormalizedDiagram{r, std::move(bottom_bars)}};
  assert(build(w) == d);
  return w;
}

namespace {

std::string dot_name(int d, int r) {
  return (d < r ? "T" : "B") + std::to_string(d < r ? d + 1 : d - r + 1);
}

int parse_dot(const std::string& tok, int r) {
  if (tok.size() < 2 || (tok[0] != 'T' && tok[0] != 'B')) {
    throw std::invalid_argument("bad dot name: '" + tok + "'");
  }
  int k = 0;
  for (std::size_t i = 1; i < tok.size(); ++i) {
    if (tok[i] < '0' || tok[i] > '9') throw std::invalid_argument("bad dot name: '" + tok + "'");
    k = k * 10 + (tok[i] - '0');
  }
  if (k < 1 || k > r) throw std::invalid_argument("dot out of range: '" + tok + "'");
  return tok[0] == 'T' ? k - 1 : r + k - 1;
}

}  // namespace

std::string render(const BrauerDiagram& d) {
  std::ostringstream out;
  bool first = true;
  for (const auto& [a, b] : d.edges()) {
    if (!first) out << " ";
    first = false;
    out << dot_name(a, d.r) << "-" << dot_name(b, d.r);
  }
  return out.str();
}

BrauerDiagram parse_diagram(const std::string& text) {
  std::istringstream in(text);
  std::vector<std::pair<std::string, std::string>> tokens;
  std::string tok;
  while (in >> tok) {
    auto dash = tok.find('-');
    if (dash == std::string::npos || dash == 0 || dash + 1 == tok.size()) {
      throw std::invalid_argument("bad edge token: '" + tok + "'");
    }
    tokens.emplace_back(tok.substr(0, dash), tok.substr(dash + 1));
  }
  int r = static_cast<int>(tokens.size());
  if (r == 0) throw std::invalid_argument("empty diagram text");
  BrauerDiagram d{r, std::vector<int>(static_cast<std::size_t>(2 * r), -1)};
  for (const auto& [sa, sb] : tokens) {
    int a = parse_dot(sa, r), b = parse_dot(sb, r);
    if (a == b || d.match[static_cast<std::size_t>(a)] != -1 ||
        d.match[static_cast<std::size_t>(b)] != -1) {
      throw std::invalid_argument("not a perfect matching: '" + text + "'");
    }
    d.match[static_cast<std::size_t>(a)] = b;
    d.match[static_cast<std::size_t>(b)] = a;
  }
  return d;
}

}  // namespace ebrauer
