#include "ccs/extraction/coloring.hpp"

#include "ccs/core/bigint.hpp"

namespace ccs {

TransitiveColoring::TransitiveColoring(std::vector<Label> sequence, const ColorFn& color)
    : sequence_(std::move(sequence)) {
  const int m = static_cast<int>(sequence_.size());
  const auto um = static_cast<std::size_t>(m);
  table_.assign(um * um * um, 0);
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      for (int l = j + 1; l < m; ++l) {
        const ColorClass c = color(i, j, l);
        if (c != ColorClass::T1 && c != ColorClass::T2) {
          throw Error(ErrorCode::InvalidColoring, "triple without a color class",
                      {sequence_[i], sequence_[j], sequence_[l]});
        }
        table_[(i * um + j) * um + l] = static_cast<std::uint8_t>(c);
      }
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b)
      for (int c = b + 1; c < m; ++c)
        for (int d = c + 1; d < m; ++d) {
          const ColorClass first = this->color(a, b, c);
          if (first != this->color(b, c, d)) continue;
          if (this->color(a, b, d) != first || this->color(a, c, d) != first) {
            throw Error(ErrorCode::InvalidColoring, "transitivity fails on a 4-chain",
                        {sequence_[a], sequence_[b], sequence_[c], sequence_[d]});
          }
        }
}

bool is_monochromatic(const TransitiveColoring& coloring, std::span<const int> positions, ColorClass color) {
  const std::size_t m = positions.size();
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      for (std::size_t l = j + 1; l < m; ++l)
        if (coloring.color(positions[i], positions[j], positions[l]) != color) return false;
  return true;
}

MonochromaticChain longest_monochromatic(const TransitiveColoring& coloring, ColorClass color) {
  MonochromaticChain out;
  out.color = color;
  const int m = static_cast<int>(coloring.size());
  if (m <= 2) {
    for (int i = 0; i < m; ++i) out.positions.push_back(i);
  } else {
    // len[j][l]: longest chain ending with positions j < l.
    const auto um = static_cast<std::size_t>(m);
    std::vector<int> len(um * um, 2);
    std::vector<int> parent(um * um, -1);
    int best_j = 0;
    int best_l = 1;
    for (int l = 1; l < m; ++l)
      for (int j = 0; j < l; ++j) {
        int& cur = len[j * um + l];
        for (int i = 0; i < j; ++i) {
          if (coloring.color(i, j, l) != color) continue;
          if (len[i * um + j] + 1 > cur) {
            cur = len[i * um + j] + 1;
            parent[j * um + l] = i;
          }
        }
        if (cur > len[best_j * um + best_l]) {
          best_j = j;
          best_l = l;
        }
      }
    std::vector<int> rev{best_l};
    int j = best_j;
    int l = best_l;
    while (j >= 0) {
      rev.push_back(j);
      const int i = parent[j * um + l];
      l = j;
      j = i;
    }
    out.positions.assign(rev.rbegin(), rev.rend());
  }
  for (int p : out.positions) out.labels.push_back(coloring.sequence()[p]);
  return out;
}

CupCapResult cupcap_extract(const TransitiveColoring& coloring, int k, int l) {
  if (k < 3 || l < 3) throw Error(ErrorCode::InvalidArgument, "cup-cap extraction needs k, l >= 3");
  const auto first = longest_monochromatic(coloring, ColorClass::T1);
  const auto second = longest_monochromatic(coloring, ColorClass::T2);
  for (const auto* chain : {&first, &second}) {
    if (!is_monochromatic(coloring, chain->positions, chain->color)) {
      throw Error(ErrorCode::InvalidColoring, "extracted chain is not monochromatic", chain->labels);
    }
  }

  CupCapResult out;
  const int t1 = static_cast<int>(first.labels.size());
  const int t2 = static_cast<int>(second.labels.size());
  if (t1 >= k) {
    out.color = ColorClass::T1;
    out.subset = first.labels;
  } else if (t2 >= l) {
    out.color = ColorClass::T2;
    out.subset = second.labels;
  } else if (t1 >= t2) {
    out.color = ColorClass::T1;
    out.subset = first.labels;
  } else {
    out.color = ColorClass::T2;
    out.subset = second.labels;
  }
  out.meets_target = t1 >= k || t2 >= l;
  out.guaranteed = BigInt(coloring.size()) > binomial(k + l - 4, k - 2);
  return out;
}

}  // namespace ccs
