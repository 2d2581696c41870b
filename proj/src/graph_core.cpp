#include "ebi/graph_core.hpp"

#include <utility>

namespace ebi {

namespace {

std::string edge_str(const Edge& e) {
  return "(" + std::to_string(e.row) + "," + std::to_string(e.col) + ")";
}

}  // namespace

Instance::Instance(int m_, int n_) : m(m_), n(n_) {
  if (m < 1 || n < 1) {
    throw InstanceError("instance: part sizes must be positive, got m=" +
                        std::to_string(m) + " n=" + std::to_string(n));
  }
  if (m % 2 == 0 || n % 2 == 0) {
    throw InstanceError("instance: part sizes must be odd, got m=" +
                        std::to_string(m) + " n=" + std::to_string(n));
  }
  if (m < n) {
    throw InstanceError("instance: expected m >= n, got m=" + std::to_string(m) +
                        " n=" + std::to_string(n));
  }
}

Labeling::Labeling(const Instance& inst, std::span<const Edge> one_edges)
    : inst_(inst), bits_(static_cast<std::size_t>(inst.edges()), 0) {
  if (static_cast<long long>(one_edges.size()) != inst_.ones()) {
    throw LabelingError("labeling: expected exactly " + std::to_string(inst_.ones()) +
                        " one-edges for K(" + std::to_string(inst_.m) + "," +
                        std::to_string(inst_.n) + "), got " +
                        std::to_string(one_edges.size()));
  }
  for (const Edge& e : one_edges) {
    if (e.row < 1 || e.row > inst_.n || e.col < 1 || e.col > inst_.m) {
      throw LabelingError("labeling: edge " + edge_str(e) + " out of range for K(" +
                          std::to_string(inst_.m) + "," + std::to_string(inst_.n) + ")");
    }
    std::uint8_t& b = bits_[static_cast<std::size_t>(e.row - 1) * inst_.m + (e.col - 1)];
    if (b) throw LabelingError("labeling: duplicate edge " + edge_str(e));
    b = 1;
  }
}

Labeling::Labeling(const Instance& inst, std::initializer_list<Edge> one_edges)
    : Labeling(inst, std::span<const Edge>(one_edges.begin(), one_edges.size())) {}

Labeling::Labeling(const Instance& inst, std::vector<std::uint8_t> bits)
    : inst_(inst), bits_(std::move(bits)) {}

Labeling labeling_from_bits(const Instance& inst, std::vector<std::uint8_t> bits) {
  if (static_cast<long long>(bits.size()) != inst.edges()) {
    throw LabelingError("labeling: expected " + std::to_string(inst.edges()) +
                        " bits, got " + std::to_string(bits.size()));
  }
  long long ones = 0;
  for (std::uint8_t b : bits) {
    if (b > 1) throw LabelingError("labeling: bit values must be 0 or 1");
    ones += b;
  }
  if (ones != inst.ones()) {
    throw LabelingError("labeling: expected " + std::to_string(inst.ones()) +
                        " one-edges, got " + std::to_string(ones));
  }
  return Labeling(inst, std::move(bits));
}

bool Labeling::bit(int row, int col) const {
  if (row < 1 || row > inst_.n || col < 1 || col > inst_.m) {
    throw LabelingError("labeling: edge " + edge_str(Edge{row, col}) +
                        " out of range for K(" + std::to_string(inst_.m) + "," +
                        std::to_string(inst_.n) + ")");
  }
  return bits_[static_cast<std::size_t>(row - 1) * inst_.m + (col - 1)] != 0;
}

VertexSummaries vertex_summaries(const Labeling& labeling) {
  const Instance& inst = labeling.instance();
  VertexSummaries s;
  s.part_a.resize(inst.m);
  s.part_b.resize(inst.n);
  const auto& bits = labeling.bits();
  for (int r = 0; r < inst.n; ++r) {
    for (int c = 0; c < inst.m; ++c) {
      if (bits[static_cast<std::size_t>(r) * inst.m + c]) {
        ++s.part_a[c].deg1;
        ++s.part_b[r].deg1;
      }
    }
  }
  // Degrees: deg(v_j) = n for part A, deg(u_i) = m for part B; both odd,
  // so every vertex gets a label.
  for (auto& v : s.part_a) {
    v.deg0 = inst.n - v.deg1;
    v.label = v.deg1 > v.deg0 ? 1 : 0;
  }
  for (auto& u : s.part_b) {
    u.deg0 = inst.m - u.deg1;
    u.label = u.deg1 > u.deg0 ? 1 : 0;
  }
  return s;
}

Counts counts(const Labeling& labeling) {
  const Instance& inst = labeling.instance();
  const VertexSummaries s = vertex_summaries(labeling);
  Counts c;
  for (const auto& v : s.part_a) {
    c.e1 += v.deg1;
    v.label ? ++c.v1 : ++c.v0;
  }
  for (const auto& u : s.part_b) {
    u.label ? ++c.v1 : ++c.v0;
  }
  c.e0 = inst.edges() - c.e1;
  c.index = c.v1 >= c.v0 ? c.v1 - c.v0 : c.v0 - c.v1;
  return c;
}

Labeling swap_pair(const Labeling& labeling, Edge zero_edge, Edge one_edge) {
  if (labeling.bit(zero_edge.row, zero_edge.col)) {
    throw LabelingError("swap_pair: edge " + edge_str(zero_edge) + " is not a 0-edge");
  }
  if (!labeling.bit(one_edge.row, one_edge.col)) {
    throw LabelingError("swap_pair: edge " + edge_str(one_edge) + " is not a 1-edge");
  }
  const Instance& inst = labeling.instance();
  std::vector<std::uint8_t> bits = labeling.bits();
  bits[static_cast<std::size_t>(zero_edge.row - 1) * inst.m + (zero_edge.col - 1)] = 1;
  bits[static_cast<std::size_t>(one_edge.row - 1) * inst.m + (one_edge.col - 1)] = 0;
  return Labeling(inst, std::move(bits));
}

std::string to_text(const Labeling& labeling) {
  const Instance& inst = labeling.instance();
  std::string out = std::to_string(inst.m) + " " + std::to_string(inst.n) + "\n";
  out.reserve(out.size() + static_cast<std::size_t>(inst.edges()) + inst.n);
  const auto& bits = labeling.bits();
  for (int r = 0; r < inst.n; ++r) {
    for (int c = 0; c < inst.m; ++c) {
      out.push_back(bits[static_cast<std::size_t>(r) * inst.m + c] ? '1' : '0');
    }
    out.push_back('\n');
  }
  return out;
}

namespace {

// Reads an unsigned decimal integer at position `pos`, advancing it.
int parse_int(std::string_view text, std::size_t& pos, const char* what) {
  std::size_t start = pos;
  long long value = 0;
  while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
    value = value * 10 + (text[pos] - '0');
    if (value > 1'000'000) throw ParseError(std::string("labeling text: ") + what + " too large");
    ++pos;
  }
  if (pos == start) throw ParseError(std::string("labeling text: expected ") + what);
  return static_cast<int>(value);
}

}  // namespace

Labeling labeling_from_text(std::string_view text) {
  std::size_t pos = 0;
  const int m = parse_int(text, pos, "m");
  if (pos >= text.size() || text[pos] != ' ')
    throw ParseError("labeling text: expected single space after m");
  ++pos;
  const int n = parse_int(text, pos, "n");
  if (pos >= text.size() || text[pos] != '\n')
    throw ParseError("labeling text: expected newline after header");
  ++pos;
  Instance inst(m, n);
  std::vector<std::uint8_t> bits;
  bits.reserve(static_cast<std::size_t>(inst.edges()));
  for (int r = 1; r <= n; ++r) {
    for (int c = 1; c <= m; ++c) {
      if (pos >= text.size())
        throw ParseError("labeling text: truncated in row " + std::to_string(r));
      const char ch = text[pos++];
      if (ch != '0' && ch != '1')
        throw ParseError("labeling text: invalid character in row " + std::to_string(r));
      bits.push_back(ch == '1');
    }
    if (pos >= text.size() || text[pos] != '\n')
      throw ParseError("labeling text: row " + std::to_string(r) +
                       " must be exactly m characters followed by newline");
    ++pos;
  }
  if (pos != text.size())
    throw ParseError("labeling text: trailing content after last row");
  return labeling_from_bits(inst, std::move(bits));
}

}  // namespace ebi
