#include "jchroma/graph.hpp"

#include <bit>
#include <numeric>
#include <ostream>
#include <sstream>

namespace jchroma {

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  std::uint64_t result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    // result * (n-k+i) / i is integral at every step.  Strip gcd(factor, i)
    // first; the rest of i then divides result, keeping the product small.
    std::uint64_t factor = n - k + i;
    std::uint64_t g = std::gcd(factor, i);
    factor /= g;
    result /= i / g;
    if (factor != 0 && result > UINT64_MAX / factor) {
      std::ostringstream msg;
      msg << "binomial(" << n << ", " << k << ") overflows 64 bits";
      throw EnumerationError(msg.str(), 0);
    }
    result *= factor;
  }
  return result;
}

int ceil_log2(std::uint64_t x) {
  if (x == 0) throw InvalidInputError("ceil_log2 requires a positive value");
  return x == 1 ? 0 : std::bit_width(x - 1);
}

Sign SignedVertex::sign_of(Coord c) const {
  auto it = std::lower_bound(support.begin(), support.end(), c);
  if (it == support.end() || *it != c) return 0;
  return signs[static_cast<std::size_t>(it - support.begin())];
}

std::string SignedVertex::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < support.size(); ++i) {
    out += std::to_string(support[i]);
    out += signs[i] > 0 ? '+' : '-';
  }
  return out;
}

void GraphSpec::validate() const {
  if (k < 1 || n < 1 || k > n || t < -k || t >= k) {
    std::ostringstream msg;
    msg << "invalid graph spec " << to_string()
        << ": need 1 <= k <= n and -k <= t < k";
    throw InvalidSpecError(msg.str());
  }
}

VertexIndex GraphSpec::vertex_count() const {
  validate();
  std::uint64_t choice = binomial(static_cast<std::uint64_t>(n),
                                  static_cast<std::uint64_t>(k));
  if (choice > (UINT64_MAX >> k)) {
    throw EnumerationError("vertex count overflows 64 bits", 0);
  }
  return choice << k;
}

std::string GraphSpec::to_string() const {
  std::ostringstream out;
  out << "J(n=" << n << ",k=" << k << ",t=" << t << ")";
  return out.str();
}

void validate_vertex(const GraphSpec& spec, const SignedVertex& v) {
  spec.validate();
  if (v.k() != spec.k || v.signs.size() != v.support.size()) {
    throw InvalidInputError("vertex " + v.to_string() + " does not have " +
                            std::to_string(spec.k) + " signed coordinates");
  }
  for (int i = 0; i < v.k(); ++i) {
    if (v.support[i] < 1 || v.support[i] > spec.n) {
      throw InvalidInputError("vertex " + v.to_string() +
                              " has a coordinate outside [1.." +
                              std::to_string(spec.n) + "]");
    }
    if (i > 0 && v.support[i - 1] >= v.support[i]) {
      throw InvalidInputError("vertex " + v.to_string() +
                              " does not have a strictly increasing support");
    }
    if (v.signs[i] != 1 && v.signs[i] != -1) {
      throw InvalidInputError("vertex " + v.to_string() +
                              " has a sign other than +1/-1");
    }
  }
}

int scalar_product(const SignedVertex& u, const SignedVertex& v) {
  int total = 0;
  std::size_t i = 0, j = 0;
  while (i < u.support.size() && j < v.support.size()) {
    if (u.support[i] < v.support[j]) {
      ++i;
    } else if (u.support[i] > v.support[j]) {
      ++j;
    } else {
      total += u.signs[i] * v.signs[j];
      ++i, ++j;
    }
  }
  return total;
}

bool adjacent(const GraphSpec& spec, const SignedVertex& u,
              const SignedVertex& v) {
  validate_vertex(spec, u);
  validate_vertex(spec, v);
  return u != v && scalar_product(u, v) == spec.t;
}

namespace detail {

std::uint64_t support_rank(const std::vector<Coord>& support) {
  std::uint64_t rank = 0;
  for (std::size_t j = 0; j < support.size(); ++j) {
    rank += binomial(static_cast<std::uint64_t>(support[j]) - 1, j + 1);
  }
  return rank;
}

std::vector<Coord> support_unrank(std::uint64_t rank, int k) {
  std::vector<Coord> support(static_cast<std::size_t>(k));
  for (int j = k; j >= 1; --j) {
    // Largest c with C(c, j) <= rank; then coordinate is c + 1.
    std::uint64_t c = static_cast<std::uint64_t>(j) - 1;
    while (binomial(c + 1, static_cast<std::uint64_t>(j)) <= rank) ++c;
    support[static_cast<std::size_t>(j - 1)] = static_cast<Coord>(c + 1);
    rank -= binomial(c, static_cast<std::uint64_t>(j));
  }
  return support;
}

}  // namespace detail

VertexIndex vertex_index(const GraphSpec& spec, const SignedVertex& v) {
  validate_vertex(spec, v);
  VertexIndex word = 0;
  for (int i = 0; i < spec.k; ++i) {
    if (v.signs[static_cast<std::size_t>(i)] < 0) {
      word |= VertexIndex{1} << (spec.k - 1 - i);
    }
  }
  return (detail::support_rank(v.support) << spec.k) | word;
}

SignedVertex vertex_at(const GraphSpec& spec, VertexIndex index) {
  if (index >= spec.vertex_count()) {
    throw InvalidInputError("vertex index " + std::to_string(index) +
                            " out of range for " + spec.to_string());
  }
  VertexIndex word = index & ((VertexIndex{1} << spec.k) - 1);
  SignedVertex v;
  v.support = detail::support_unrank(index >> spec.k, spec.k);
  v.signs.resize(v.support.size());
  for (int i = 0; i < spec.k; ++i) {
    v.signs[static_cast<std::size_t>(i)] =
        (word >> (spec.k - 1 - i)) & 1 ? -1 : 1;
  }
  return v;
}

std::vector<SignedVertex> enumerate_vertices(const GraphSpec& spec) {
  VertexIndex count = spec.vertex_count();
  std::vector<SignedVertex> out;
  out.reserve(count);
  for (VertexIndex i = 0; i < count; ++i) out.push_back(vertex_at(spec, i));
  return out;
}

std::uint64_t edge_count(const GraphSpec& spec) {
  spec.validate();
  std::uint64_t n = static_cast<std::uint64_t>(spec.n);
  if (spec.k == 2 && spec.t == -1) {
    return n < 3 ? 0 : 4 * n * (n - 1) * (n - 2);
  }
  if (spec.k == 3 && spec.t == -2) {
    return n < 4 ? 0 : binomial(n, 2) * 8 * (n - 2) * (n - 3);
  }
  if (spec.k == 3 && spec.t == -1) {
    return n * 4 * binomial(n - 1, 2) * 4 * binomial(n - 3, 2) +
           12 * binomial(n, 3);
  }
  std::uint64_t count = 0;
  detail::edges_generic(spec, [&](VertexIndex, VertexIndex) { ++count; });
  return count;
}

void for_each_edge_fn(const GraphSpec& spec,
                      const std::function<void(VertexIndex, VertexIndex)>& f) {
  for_each_edge(spec, [&](VertexIndex i, VertexIndex j) { f(i, j); });
}

std::vector<Edge> enumerate_edges(const GraphSpec& spec,
                                  std::uint64_t max_edges) {
  std::vector<std::pair<VertexIndex, VertexIndex>> pairs;
  std::uint64_t seen = 0;
  bool truncated = false;
  for_each_edge(spec, [&](VertexIndex i, VertexIndex j) {
    if (seen == max_edges) {
      truncated = true;
      return false;
    }
    ++seen;
    pairs.emplace_back(i, j);
    return true;
  });
  if (truncated) {
    throw EnumerationError("edge enumeration exceeded the cap of " +
                               std::to_string(max_edges) + " edges",
                           seen);
  }
  std::vector<Edge> out;
  out.reserve(pairs.size());
  for (auto [i, j] : pairs) {
    out.push_back({vertex_at(spec, i), vertex_at(spec, j)});
  }
  return out;
}

SignedVertex apply_signed_permutation(const SignedVertex& v,
                                      const std::vector<Coord>& perm,
                                      const std::vector<Sign>& flips) {
  int n = static_cast<int>(perm.size());
  if (flips.size() != perm.size()) {
    throw InvalidInputError("perm and flips must have the same length");
  }
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (Coord image : perm) {
    if (image < 1 || image > n || seen[static_cast<std::size_t>(image)]) {
      throw InvalidInputError("perm is not a bijection of [1.." +
                              std::to_string(n) + "]");
    }
    seen[static_cast<std::size_t>(image)] = true;
  }
  for (Sign s : flips) {
    if (s != 1 && s != -1) {
      throw InvalidInputError("flips entries must be +1 or -1");
    }
  }
  SignedVertex image;
  std::vector<std::pair<Coord, Sign>> moved;
  moved.reserve(v.support.size());
  for (std::size_t i = 0; i < v.support.size(); ++i) {
    Coord c = v.support[i];
    if (c < 1 || c > n) {
      throw InvalidInputError("vertex coordinate " + std::to_string(c) +
                              " outside the permutation's domain");
    }
    std::size_t at = static_cast<std::size_t>(c - 1);
    moved.emplace_back(perm[at], v.signs[i] * flips[at]);
  }
  std::sort(moved.begin(), moved.end());
  for (auto [c, s] : moved) {
    image.support.push_back(c);
    image.signs.push_back(s);
  }
  return image;
}

int Bitset::count() const {
  int total = 0;
  for (std::uint64_t word : w_) total += std::popcount(word);
  return total;
}

bool Bitset::none() const {
  for (std::uint64_t word : w_) {
    if (word != 0) return false;
  }
  return true;
}

bool Bitset::intersects(const Bitset& o) const {
  std::size_t m = std::min(w_.size(), o.w_.size());
  for (std::size_t i = 0; i < m; ++i) {
    if (w_[i] & o.w_[i]) return true;
  }
  return false;
}

int Bitset::intersection_count(const Bitset& o) const {
  std::size_t m = std::min(w_.size(), o.w_.size());
  int total = 0;
  for (std::size_t i = 0; i < m; ++i) {
    total += std::popcount(w_[i] & o.w_[i]);
  }
  return total;
}

Bitset& Bitset::operator&=(const Bitset& o) {
  for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
  return *this;
}

Bitset& Bitset::operator|=(const Bitset& o) {
  for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
  return *this;
}

Bitset& Bitset::and_not(const Bitset& o) {
  for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
  return *this;
}

int Bitset::find_first() const {
  for (std::size_t i = 0; i < w_.size(); ++i) {
    if (w_[i]) return static_cast<int>(i * 64) + std::countr_zero(w_[i]);
  }
  return -1;
}

int Bitset::find_next(int i) const {
  ++i;
  if (i >= bits_) return -1;
  std::size_t word = static_cast<std::size_t>(i) >> 6;
  std::uint64_t rest = w_[word] >> (i & 63);
  if (rest) return i + std::countr_zero(rest);
  for (++word; word < w_.size(); ++word) {
    if (w_[word]) {
      return static_cast<int>(word * 64) + std::countr_zero(w_[word]);
    }
  }
  return -1;
}

DenseGraph materialize(const GraphSpec& spec, std::uint64_t max_vertices) {
  VertexIndex count = spec.vertex_count();
  if (count > max_vertices) {
    throw BudgetError(spec.to_string() + " has " + std::to_string(count) +
                      " vertices, over the materialization cap of " +
                      std::to_string(max_vertices));
  }
  DenseGraph g(static_cast<int>(count));
  for_each_edge(spec, [&](VertexIndex i, VertexIndex j) {
    g.add_edge(static_cast<int>(i), static_cast<int>(j));
  });
  return g;
}

void write_dimacs(const GraphSpec& spec, std::ostream& out) {
  out << "p edge " << spec.vertex_count() << " " << edge_count(spec) << "\n";
  for_each_edge(spec, [&](VertexIndex i, VertexIndex j) {
    out << "e " << i + 1 << " " << j + 1 << "\n";
  });
}

}  // namespace jchroma
