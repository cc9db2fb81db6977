#include "cgtk/detail/suffix.hpp"

#include <algorithm>

namespace cgtk::detail {

std::vector<std::uint32_t> suffix_array(std::span<const std::uint32_t> text) {
  const std::size_t n = text.size();
  std::vector<std::uint32_t> sa(n);
  if (n == 0) return sa;

  // Compress the alphabet to dense ranks.
  std::vector<std::uint32_t> symbols(text.begin(), text.end());
  std::sort(symbols.begin(), symbols.end());
  symbols.erase(std::unique(symbols.begin(), symbols.end()), symbols.end());
  std::vector<std::uint32_t> rank(n), tmp(n);
  for (std::size_t i = 0; i < n; ++i)
    rank[i] = static_cast<std::uint32_t>(std::lower_bound(symbols.begin(), symbols.end(), text[i]) - symbols.begin());

  std::size_t classes = symbols.size();
  std::vector<std::uint32_t> count(std::max(classes, n) + 1);
  for (std::size_t i = 0; i < n; ++i) ++count[rank[i]];
  for (std::size_t c = 1; c < count.size(); ++c) count[c] += count[c - 1];
  for (std::size_t i = n; i-- > 0;) sa[--count[rank[i]]] = static_cast<std::uint32_t>(i);

  for (std::size_t k = 1; classes < n; k <<= 1) {
    // Order by second key: suffixes without a second half come first.
    std::size_t p = 0;
    for (std::size_t i = n - std::min(k, n); i < n; ++i) tmp[p++] = static_cast<std::uint32_t>(i);
    for (std::size_t j = 0; j < n; ++j)
      if (sa[j] >= k) tmp[p++] = static_cast<std::uint32_t>(sa[j] - k);

    std::fill(count.begin(), count.begin() + static_cast<std::ptrdiff_t>(classes + 1), 0);
    for (std::size_t i = 0; i < n; ++i) ++count[rank[i]];
    for (std::size_t c = 1; c <= classes; ++c) count[c] += count[c - 1];
    for (std::size_t j = n; j-- > 0;) sa[--count[rank[tmp[j]]]] = tmp[j];

    auto second = [&](std::uint32_t i) -> std::int64_t { return i + k < n ? rank[i + k] : -1; };
    tmp[sa[0]] = 0;
    std::uint32_t next_class = 0;
    for (std::size_t j = 1; j < n; ++j) {
      if (rank[sa[j]] != rank[sa[j - 1]] || second(sa[j]) != second(sa[j - 1])) ++next_class;
      tmp[sa[j]] = next_class;
    }
    rank.swap(tmp);
    classes = next_class + 1;
  }
  return sa;
}

std::vector<std::uint32_t> lcp_array(std::span<const std::uint32_t> text, std::span<const std::uint32_t> sa) {
  const std::size_t n = text.size();
  std::vector<std::uint32_t> rank(n), lcp(n, 0);
  for (std::size_t i = 0; i < n; ++i) rank[sa[i]] = static_cast<std::uint32_t>(i);
  std::size_t h = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (rank[i] == 0) {
      h = 0;
      continue;
    }
    const std::size_t j = sa[rank[i] - 1];
    while (i + h < n && j + h < n && text[i + h] == text[j + h]) ++h;
    lcp[rank[i]] = static_cast<std::uint32_t>(h);
    if (h > 0) --h;
  }
  return lcp;
}

SuffixAutomaton::SuffixAutomaton() { states_.emplace_back(); }

void SuffixAutomaton::extend(std::uint32_t symbol) {
  const std::size_t cur = states_.size();
  states_.push_back({states_[last_].len + 1, -1, {}});
  std::ptrdiff_t p = static_cast<std::ptrdiff_t>(last_);
  while (p != -1 && !states_[static_cast<std::size_t>(p)].next.count(symbol)) {
    states_[static_cast<std::size_t>(p)].next[symbol] = cur;
    p = states_[static_cast<std::size_t>(p)].link;
  }
  if (p == -1) {
    states_[cur].link = 0;
  } else {
    const std::size_t q = states_[static_cast<std::size_t>(p)].next[symbol];
    if (states_[static_cast<std::size_t>(p)].len + 1 == states_[q].len) {
      states_[cur].link = static_cast<std::ptrdiff_t>(q);
    } else {
      const std::size_t clone = states_.size();
      State copy = states_[q];
      copy.len = states_[static_cast<std::size_t>(p)].len + 1;
      states_.push_back(std::move(copy));
      while (p != -1) {
        auto it = states_[static_cast<std::size_t>(p)].next.find(symbol);
        if (it == states_[static_cast<std::size_t>(p)].next.end() || it->second != q) break;
        it->second = clone;
        p = states_[static_cast<std::size_t>(p)].link;
      }
      states_[q].link = static_cast<std::ptrdiff_t>(clone);
      states_[cur].link = static_cast<std::ptrdiff_t>(clone);
    }
  }
  last_ = cur;
}

void SuffixAutomaton::add_text(std::span<const std::uint32_t> text, std::uint32_t separator) {
  for (auto s : text) extend(s);
  extend(separator);
}

std::vector<std::size_t> SuffixAutomaton::matching_lengths(std::span<const std::uint32_t> query) const {
  std::vector<std::size_t> out(query.size());
  std::size_t state = 0;
  std::size_t len = 0;
  for (std::size_t i = 0; i < query.size(); ++i) {
    const auto s = query[i];
    while (state != 0 && !states_[state].next.count(s)) {
      state = static_cast<std::size_t>(states_[state].link);
      len = states_[state].len;
    }
    if (auto it = states_[state].next.find(s); it != states_[state].next.end()) {
      state = it->second;
      ++len;
    } else {
      len = 0;
    }
    out[i] = len;
  }
  return out;
}

}  // namespace cgtk::detail
