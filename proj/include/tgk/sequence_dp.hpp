#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <vector>

#include "tgk/error.hpp"
#include "tgk/tgraph.hpp"

namespace tgk {

struct SequenceEvent {
  Timestamp time = 0;
  std::uint32_t symbol = 0;
};

/// Counts length-`ell` subsequences with strictly increasing times and
/// `last - first <= window`, per symbol sequence, in one pass over a sorted
/// event list.
///
/// Level j holds, for every symbol prefix of length j, the number of its
/// occurrences inside the current window. An entering event extends all
/// prefixes (longest level first) and completes length-ell sequences; a
/// leaving event retires every prefix it starts (shortest level first).
/// Events with equal times are handled as a group so they never pair up:
/// expire, then complete each member against the pre-group state, then insert.
///
/// Results accumulate across `run` calls until `clear_results`.
class SequenceCounter {
 public:
  static constexpr std::uint64_t kMaxTableSize = std::uint64_t{1} << 26;

  SequenceCounter(std::size_t alphabet, std::size_t ell, TimeWindow window)
      : alphabet_(alphabet), ell_(ell), window_(window) {
    if (alphabet == 0 || ell == 0) throw InputError("alphabet and ell must be positive");
    powers_.assign(ell + 1, 1);
    for (std::size_t j = 1; j <= ell; ++j) {
      if (powers_[j - 1] > kMaxTableSize / alphabet)
        throw UnsupportedError("sequence counter table A^ell exceeds 2^26 entries");
      powers_[j] = powers_[j - 1] * alphabet;
    }
    levels_.resize(ell);
    for (std::size_t j = 1; j < ell; ++j) levels_[j].assign(powers_[j], 0);
    results_.assign(powers_[ell], 0);
    accept_.assign(powers_[ell], 1);
  }

  /// Restricts which completed sequences are accumulated (indexed like results()).
  void set_accept_mask(std::vector<std::uint8_t> mask) {
    if (mask.size() != results_.size()) throw InputError("accept mask has wrong size");
    accept_ = std::move(mask);
  }

  void run(std::span<const SequenceEvent> sigma) {
    for (std::size_t j = 1; j < ell_; ++j) std::fill(levels_[j].begin(), levels_[j].end(), 0);
    std::size_t lo = 0;  // first event still inside the window
    std::size_t i = 0;
    while (i < sigma.size()) {
      const Timestamp t = sigma[i].time;
      if (i > 0 && t < sigma[i - 1].time) throw InputError("sequence must be sorted by time");
      std::size_t hi = i;
      while (hi < sigma.size() && sigma[hi].time == t) ++hi;

      // Retire whole time groups that fall out of the window.
      while (lo < i && !window_.admits(t - sigma[lo].time)) {
        std::size_t ge = lo;
        while (ge < i && sigma[ge].time == sigma[lo].time) ++ge;
        retire(sigma.subspan(lo, ge - lo));
        lo = ge;
      }

      for (std::size_t k = i; k < hi; ++k) complete(sigma[k].symbol);
      insert(sigma.subspan(i, hi - i));
      i = hi;
    }
  }

  /// Dense results; index of (s_1..s_ell) is sum s_i * A^(ell - i).
  std::span<const std::uint64_t> results() const { return results_; }
  void clear_results() { std::fill(results_.begin(), results_.end(), 0); }

  std::size_t alphabet() const { return alphabet_; }
  std::size_t ell() const { return ell_; }

  std::vector<std::uint32_t> decode(std::uint64_t index) const {
    std::vector<std::uint32_t> seq(ell_);
    for (std::size_t k = ell_; k-- > 0;) {
      seq[k] = static_cast<std::uint32_t>(index % alphabet_);
      index /= alphabet_;
    }
    return seq;
  }

 private:
  // Level 0 is the empty prefix, whose count is always 1.
  std::uint64_t level_count(std::size_t j, std::uint64_t idx) const { return j == 0 ? 1 : levels_[j][idx]; }

  void complete(std::uint32_t x) {
    if (ell_ == 1) {
      if (accept_[x]) ++results_[x];
      return;
    }
    const auto& prev = levels_[ell_ - 1];
    for (std::uint64_t p = 0; p < prev.size(); ++p) {
      if (prev[p] == 0) continue;
      const std::uint64_t idx = p * alphabet_ + x;
      if (accept_[idx]) results_[idx] += prev[p];
    }
  }

  void insert(std::span<const SequenceEvent> group) {
    for (std::size_t j = ell_ - 1; j >= 1; --j) {
      for (const auto& ev : group) {
        for (std::uint64_t p = 0; p < powers_[j - 1]; ++p) {
          const auto c = level_count(j - 1, p);
          if (c != 0) levels_[j][p * alphabet_ + ev.symbol] += c;
        }
      }
    }
  }

  void retire(std::span<const SequenceEvent> group) {
    for (std::size_t j = 1; j < ell_; ++j) {
      for (const auto& ev : group) {
        const std::uint64_t base = ev.symbol * powers_[j - 1];
        for (std::uint64_t q = 0; q < powers_[j - 1]; ++q) levels_[j][base + q] -= level_count(j - 1, q);
      }
    }
  }

  std::size_t alphabet_;
  std::size_t ell_;
  TimeWindow window_;
  std::vector<std::uint64_t> powers_;
  std::vector<std::vector<std::uint64_t>> levels_;
  std::vector<std::uint64_t> results_;
  std::vector<std::uint8_t> accept_;
};

/// Convenience wrapper: nonzero counts per accepted symbol sequence.
inline std::map<std::vector<std::uint32_t>, std::uint64_t> dp_sequence_count(
    std::span<const SequenceEvent> sigma, std::size_t alphabet, std::size_t ell, TimeWindow window,
    const std::function<bool(std::span<const std::uint32_t>)>& accept = {}) {
  SequenceCounter counter(alphabet, ell, window);
  if (accept) {
    std::vector<std::uint8_t> mask(counter.results().size());
    for (std::uint64_t idx = 0; idx < mask.size(); ++idx) mask[idx] = accept(counter.decode(idx)) ? 1 : 0;
    counter.set_accept_mask(std::move(mask));
  }
  counter.run(sigma);
  std::map<std::vector<std::uint32_t>, std::uint64_t> out;
  auto res = counter.results();
  for (std::uint64_t idx = 0; idx < res.size(); ++idx)
    if (res[idx] != 0) out[counter.decode(idx)] = res[idx];
  return out;
}

}  // namespace tgk
