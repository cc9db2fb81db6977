#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

namespace cgtk::detail {

/// Suffix array by prefix doubling with counting sorts, O(n log n).
std::vector<std::uint32_t> suffix_array(std::span<const std::uint32_t> text);

/// lcp[i] = longest common prefix of suffixes sa[i-1] and sa[i]; lcp[0] = 0 (Kasai).
std::vector<std::uint32_t> lcp_array(std::span<const std::uint32_t> text, std::span<const std::uint32_t> sa);

/// Suffix automaton over several texts. Each text must end with a symbol that
/// is unique to it so no match can straddle two texts.
class SuffixAutomaton {
public:
  SuffixAutomaton();
  void extend(std::uint32_t symbol);
  void add_text(std::span<const std::uint32_t> text, std::uint32_t separator);

  /// out[i] = length of the longest suffix of query[0..i] occurring in some text.
  std::vector<std::size_t> matching_lengths(std::span<const std::uint32_t> query) const;

private:
  struct State {
    std::size_t len = 0;
    std::ptrdiff_t link = -1;
    std::map<std::uint32_t, std::size_t> next;
  };
  std::vector<State> states_;
  std::size_t last_ = 0;
};

}  // namespace cgtk::detail
