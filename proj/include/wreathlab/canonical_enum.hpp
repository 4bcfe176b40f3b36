#pragma once

#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "wreathlab/errors.hpp"
#include "wreathlab/word.hpp"

namespace wreathlab {

enum class EnumStatus { frontier_exhausted, visitor_stopped, budget_exhausted };

/// Streams canonical shortlex representatives over a signed alphabet of
/// `generators` symbols with letters ordered x1 < x1^-1 < x2 < x2^-1 < ...
/// Each distinct element (as identified by `key`) is visited exactly once, at
/// its first shortlex word. Canonical words are prefix-closed, so only
/// canonical prefixes are extended; words with an immediate inverse pair are
/// skipped since the shorter reduction was already seen. The visitor returns
/// false to stop the stream.
template <class State, class ExtendFn, class KeyFn, class VisitFn>
EnumStatus canonical_words(int generators, State identity, ExtendFn&& extend, KeyFn&& key,
                           VisitFn&& visit, long long node_budget = 4'000'000,
                           const CancelToken* cancel = nullptr) {
  struct Node {
    Word word;
    State state;
  };
  std::unordered_set<std::string> seen;
  std::vector<Node> layer;
  {
    State start = identity;
    seen.insert(key(start));
    if (!visit(Word{}, start)) return EnumStatus::visitor_stopped;
    layer.push_back(Node{Word{}, std::move(start)});
  }
  long long nodes = 0;
  while (!layer.empty()) {
    std::vector<Node> next;
    for (const Node& node : layer) {
      for (int li = 0; li < 2 * generators; ++li) {
        const Letter letter{li / 2 + 1, li % 2 == 0 ? +1 : -1};
        if (!node.word.empty() && node.word.back().gen == letter.gen &&
            node.word.back().sign == -letter.sign)
          continue;
        if (++nodes > node_budget) return EnumStatus::budget_exhausted;
        if (cancel != nullptr && (nodes & 1023) == 0 && cancel->cancelled())
          throw Cancelled("enumeration cancelled");
        State child = extend(node.state, letter);
        if (!seen.insert(key(child)).second) continue;
        Word word = node.word;
        word.push_back(letter);
        if (!visit(word, child)) return EnumStatus::visitor_stopped;
        next.push_back(Node{std::move(word), std::move(child)});
      }
    }
    layer = std::move(next);
  }
  return EnumStatus::frontier_exhausted;
}

}  // namespace wreathlab
