#include "jchroma/constructions.hpp"

#include <algorithm>
#include <bit>

namespace jchroma {

namespace {

// Single-pass distinct count over a growable bitmap; color ids produced in
// this library stay small (construction ids or solver palette indices).
class IdBitmap {
 public:
  void mark(std::uint32_t id) {
    std::size_t word = id >> 6;
    if (word >= words_.size()) words_.resize(word + 1, 0);
    words_[word] |= std::uint64_t{1} << (id & 63);
  }
  bool marked(std::uint32_t id) const {
    std::size_t word = id >> 6;
    return word < words_.size() &&
           (words_[word] >> (id & 63)) & 1;
  }
  std::size_t count() const {
    std::size_t total = 0;
    for (std::uint64_t w : words_) total += std::popcount(w);
    return total;
  }

 private:
  std::vector<std::uint64_t> words_;
};

IdBitmap used_ids(const std::vector<std::uint32_t>& ids) {
  IdBitmap used;
  for (std::uint32_t id : ids) {
    if (id != kNoColor) used.mark(id);
  }
  return used;
}

std::size_t distinct_ids(const std::vector<std::uint32_t>& ids) {
  return used_ids(ids).count();
}

// Drops palette entries for ids that no vertex actually received.
void prune_palette(std::map<std::uint32_t, std::string>& palette,
                   const std::vector<std::uint32_t>& ids) {
  IdBitmap used = used_ids(ids);
  for (auto it = palette.begin(); it != palette.end();) {
    it = used.marked(it->first) ? std::next(it) : palette.erase(it);
  }
}

}  // namespace

std::uint32_t Coloring::at(VertexIndex index) const {
  if (index >= ids.size()) {
    throw InvalidInputError("vertex index " + std::to_string(index) +
                            " out of range for this coloring");
  }
  return ids[index];
}

std::uint32_t Coloring::color_of(const SignedVertex& v) const {
  return at(vertex_index(spec, v));
}

std::size_t Coloring::num_colors() const { return distinct_ids(ids); }

int msb_diff(std::uint64_t a, std::uint64_t b) {
  if (a == b) {
    throw UndefinedInputError("msb_diff(" + std::to_string(a) + ", " +
                              std::to_string(b) +
                              ") is undefined for equal arguments");
  }
  return std::bit_width(a ^ b);
}

Coloring warmup_coloring_k2(int n) {
  GraphSpec spec{n, 2, -1};
  spec.validate();
  Coloring col{spec, "warmup2", {}, {}};
  col.ids.resize(spec.vertex_count());
  col.palette[0] = "nonneg";
  col.palette[1] = "nonpos";
  int bits = ceil_log2(static_cast<std::uint64_t>(n));
  for (int m = 1; m <= bits; ++m) {
    col.palette[2 * static_cast<std::uint32_t>(m)] =
        "msb:+" + std::to_string(m);
    col.palette[2 * static_cast<std::uint32_t>(m) + 1] =
        "msb:-" + std::to_string(m);
  }
  for (int a = 1; a <= n; ++a) {
    for (int b = a + 1; b <= n; ++b) {
      std::uint64_t base =
          (static_cast<std::uint64_t>(b - 1) * (b - 2) / 2 + (a - 1)) << 2;
      // Sign word: bit 1 is a's sign, bit 0 is b's, 1 meaning negative.
      std::uint32_t m = static_cast<std::uint32_t>(
          msb_diff(static_cast<std::uint64_t>(a) - 1,
                   static_cast<std::uint64_t>(b) - 1));
      col.ids[base | 0] = 0;  // a+ b+
      col.ids[base | 3] = 1;  // a- b-
      // The larger coordinate b owns the 1 at the differing bit; + on b
      // selects the positive color, - on b the negative one.
      col.ids[base | 1] = 2 * m + 1;  // a+ b-
      col.ids[base | 2] = 2 * m;      // a- b+
    }
  }
  prune_palette(col.palette, col.ids);
  return col;
}

int min_m_for(std::uint64_t n) {
  if (n == 0) throw InvalidInputError("min_m_for requires n >= 1");
  int m = 1;
  while (binomial(2 * static_cast<std::uint64_t>(m) + 1,
                  static_cast<std::uint64_t>(m)) < n) {
    ++m;
  }
  return m;
}

void SubsetAssignment::validate(int n) const {
  if (m < 1) throw InvalidAssignmentError("assignment needs m >= 1");
  if (subsets.size() != static_cast<std::size_t>(n)) {
    throw InvalidAssignmentError(
        "assignment covers " + std::to_string(subsets.size()) +
        " coordinates, expected " + std::to_string(n));
  }
  std::vector<std::uint64_t> masks;
  masks.reserve(subsets.size());
  for (const std::vector<int>& subset : subsets) {
    if (subset.size() != static_cast<std::size_t>(m)) {
      throw InvalidAssignmentError("every subset must have exactly " +
                                   std::to_string(m) + " elements");
    }
    std::uint64_t mask = 0;
    for (std::size_t i = 0; i < subset.size(); ++i) {
      int e = subset[i];
      if (e < 1 || e > 2 * m + 1 || (i > 0 && subset[i - 1] >= e)) {
        throw InvalidAssignmentError(
            "subsets must be sorted subsets of [1.." +
            std::to_string(2 * m + 1) + "]");
      }
      mask |= std::uint64_t{1} << (e - 1);
    }
    masks.push_back(mask);
  }
  std::vector<std::uint64_t> sorted = masks;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw InvalidAssignmentError(
        "assignment is not injective: two coordinates share a subset");
  }
}

SubsetAssignment default_subset_assignment(int n) {
  if (n < 1) throw InvalidInputError("default_subset_assignment needs n >= 1");
  SubsetAssignment asg;
  asg.m = min_m_for(static_cast<std::uint64_t>(n));
  asg.subsets.reserve(static_cast<std::size_t>(n));
  for (int a = 1; a <= n; ++a) {
    // a-th m-subset in colex order; ranks below C(2m+1, m) stay in range.
    asg.subsets.push_back(
        detail::support_unrank(static_cast<std::uint64_t>(a) - 1, asg.m));
  }
  return asg;
}

Coloring subset_coloring_k2(int n, const SubsetAssignment& assignment) {
  GraphSpec spec{n, 2, -1};
  spec.validate();
  assignment.validate(n);
  int m = assignment.m;
  std::vector<std::uint64_t> mask(static_cast<std::size_t>(n) + 1, 0);
  for (int a = 1; a <= n; ++a) {
    for (int e : assignment.subsets[static_cast<std::size_t>(a) - 1]) {
      mask[static_cast<std::size_t>(a)] |= std::uint64_t{1} << (e - 1);
    }
  }
  const std::uint64_t universe = (std::uint64_t{1} << (2 * m + 1)) - 1;
  const std::uint32_t leftover = static_cast<std::uint32_t>(2 * m + 2);

  Coloring col{spec, "subset2", {}, {}};
  col.ids.resize(spec.vertex_count());
  for (int i = 1; i <= 2 * m + 2; ++i) {
    col.palette[static_cast<std::uint32_t>(i)] =
        "subset-color:" + std::to_string(i);
  }
  for (int a = 1; a <= n; ++a) {
    std::uint64_t fa = mask[static_cast<std::size_t>(a)];
    for (int b = a + 1; b <= n; ++b) {
      std::uint64_t fb = mask[static_cast<std::size_t>(b)];
      std::uint64_t base =
          (static_cast<std::uint64_t>(b - 1) * (b - 2) / 2 + (a - 1)) << 2;
      // The qualifying classes i are those where the sign at each support
      // coordinate is + exactly when i is in that coordinate's subset.
      std::array<std::uint64_t, 4> qualifying = {
          fa & fb,                  // a+ b+
          fa & ~fb,                 // a+ b-
          fb & ~fa,                 // a- b+
          ~(fa | fb) & universe};   // a- b-
      for (std::uint64_t w = 0; w < 4; ++w) {
        std::uint64_t q = qualifying[w];
        col.ids[base | w] =
            q ? static_cast<std::uint32_t>(std::countr_zero(q)) + 1
              : leftover;
      }
    }
  }
  prune_palette(col.palette, col.ids);
  return col;
}

Coloring subset_coloring_k2(int n) {
  return subset_coloring_k2(n, default_subset_assignment(n));
}

AltColor alternating_color(int a, int b, int c) {
  if (a < 1 || a >= b || b >= c) {
    throw InvalidInputError("alternating_color requires 1 <= a < b < c");
  }
  int m1 = msb_diff(static_cast<std::uint64_t>(a) - 1,
                    static_cast<std::uint64_t>(b) - 1);
  int m2 = msb_diff(static_cast<std::uint64_t>(b) - 1,
                    static_cast<std::uint64_t>(c) - 1);
  // m1 != m2: if both consecutive pairs first differed at the same bit, b
  // would have to carry both a 1 and a 0 there.
  AltColor color;
  color.sign = m1 > m2 ? 1 : -1;
  color.magnitude = msb_diff(static_cast<std::uint64_t>(m1) - 1,
                             static_cast<std::uint64_t>(m2) - 1);
  return color;
}

Coloring altsign_coloring_k3(int n) {
  GraphSpec spec{n, 3, -2};
  spec.validate();
  Coloring col{spec, "altsign3", {}, {}};
  col.ids.resize(spec.vertex_count());

  // Constant classes for the six non-alternating sign patterns, in sign-word
  // order: +++ ++- +-- -++ --+ ---.
  static constexpr std::array<const char*, 6> kPatternNames = {
      "class:+++", "class:++-", "class:+--",
      "class:-++", "class:--+", "class:---"};
  // Word (bit 2 = first coordinate negative) -> constant class id, with the
  // alternating words 010 and 101 marked -1.
  static constexpr std::array<int, 8> kClassOf = {0, 1, -1, 2, 3, -1, 4, 5};

  int bits = ceil_log2(static_cast<std::uint64_t>(n));
  int vcap = ceil_log2(static_cast<std::uint64_t>(std::max(bits, 2)));
  const std::uint32_t p1_base = 6;                // even base, +-+ patterns
  const std::uint32_t p2_base =
      7 + 2 * static_cast<std::uint32_t>(vcap);   // odd base, -+- patterns

  for (int i = 0; i < 6; ++i) {
    col.palette[static_cast<std::uint32_t>(i)] = kPatternNames[i];
  }
  for (int v = 1; v <= vcap; ++v) {
    std::uint32_t off = 2 * static_cast<std::uint32_t>(v - 1);
    col.palette[p1_base + off] = "alt+-+:+" + std::to_string(v);
    col.palette[p1_base + off + 1] = "alt+-+:-" + std::to_string(v);
    col.palette[p2_base + off] = "alt-+-:+" + std::to_string(v);
    col.palette[p2_base + off + 1] = "alt-+-:-" + std::to_string(v);
  }

  for (int a = 1; a <= n; ++a) {
    for (int b = a + 1; b <= n; ++b) {
      for (int c = b + 1; c <= n; ++c) {
        std::uint64_t base = detail::triple_base(
            static_cast<VertexIndex>(a), static_cast<VertexIndex>(b),
            static_cast<VertexIndex>(c));
        AltColor alt = alternating_color(a, b, c);
        std::uint32_t off = 2 * static_cast<std::uint32_t>(alt.magnitude - 1) +
                            (alt.sign > 0 ? 0 : 1);
        for (std::uint64_t w = 0; w < 8; ++w) {
          int cls = kClassOf[w];
          if (cls >= 0) {
            col.ids[base | w] = static_cast<std::uint32_t>(cls);
          } else {
            col.ids[base | w] = (w == 0b010 ? p1_base : p2_base) + off;
          }
        }
      }
    }
  }
  prune_palette(col.palette, col.ids);
  return col;
}

std::uint64_t triple_rank(int a, int b, int c) {
  if (a < 1 || a >= b || b >= c) {
    throw InvalidInputError("triple_rank requires 1 <= a < b < c");
  }
  return static_cast<std::uint64_t>(c - 1) * (c - 2) * (c - 3) / 6 +
         static_cast<std::uint64_t>(b - 1) * (b - 2) / 2 +
         static_cast<std::uint64_t>(a - 1);
}

std::array<int, 3> triple_at(std::uint64_t rank) {
  std::vector<Coord> support = detail::support_unrank(rank, 3);
  return {support[0], support[1], support[2]};
}

std::uint32_t TripleColoring::color_of(int a, int b, int c) const {
  if (c > n) {
    throw InvalidInputError("triple coordinate " + std::to_string(c) +
                            " outside [1.." + std::to_string(n) + "]");
  }
  return ids[triple_rank(a, b, c)];
}

std::size_t TripleColoring::num_colors() const { return distinct_ids(ids); }

TripleColoring contest_triple_coloring(int n) {
  if (n < 4) {
    throw InvalidSpecError(
        "contest_triple_coloring requires n >= 4, got n = " +
        std::to_string(n));
  }
  TripleColoring col;
  col.n = n;
  col.construction = "contest";
  col.ids.resize(binomial(static_cast<std::uint64_t>(n), 3));
  int bits = ceil_log2(static_cast<std::uint64_t>(n));
  int vcap = ceil_log2(static_cast<std::uint64_t>(std::max(bits, 2)));
  for (int v = 1; v <= vcap; ++v) {
    col.palette[2 * static_cast<std::uint32_t>(v - 1)] =
        "msb:+" + std::to_string(v);
    col.palette[2 * static_cast<std::uint32_t>(v) - 1] =
        "msb:-" + std::to_string(v);
  }
  for (int a = 1; a <= n; ++a) {
    for (int b = a + 1; b <= n; ++b) {
      for (int c = b + 1; c <= n; ++c) {
        AltColor alt = alternating_color(a, b, c);
        col.ids[triple_rank(a, b, c)] =
            alt.sign > 0
                ? 2 * static_cast<std::uint32_t>(alt.magnitude - 1)
                : 2 * static_cast<std::uint32_t>(alt.magnitude) - 1;
      }
    }
  }
  prune_palette(col.palette, col.ids);
  return col;
}

}  // namespace jchroma
