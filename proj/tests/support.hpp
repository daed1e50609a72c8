#pragma once

#include <random>

#include "gnk/gnk.hpp"

namespace gnk::test {

/// a_{ij,kl} with two-digit shorthand: pp(12, 13) is a_{12,13}.
inline PairPairGenerator pp(int ij, int kl) {
  return PairPairGenerator::make(OrderedPair::make(ij / 10, ij % 10),
                                 OrderedPair::make(kl / 10, kl % 10));
}

/// a'_{ijk}
inline Triple tr(int i, int j, int k) { return Triple::make(i, j, k); }

template <class G>
Word<G> random_word(std::mt19937_64& rng, const std::vector<G>& alphabet, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
  Word<G> w(len(rng));
  for (auto& x : w) x = alphabet[pick(rng)];
  return w;
}

/// The example word a_{12,13} a_{32,31} a_{12,13} a_{23,21} = phi(a'_{123} a'_{132}).
inline Word<PairPairGenerator> worked_word() {
  return {pp(12, 13), pp(32, 31), pp(12, 13), pp(23, 21)};
}

}  // namespace gnk::test
