#include "wreathlab/geodesic.hpp"

#include <array>
#include <unordered_map>
#include <utility>
#include <vector>

namespace wreathlab {

std::string geodesic_cache_key(const Family& fam, const Level2Element& e, long long cap) {
  return fam.digest() + "|" + l2_to_json(e).dump() + "|" + std::to_string(cap);
}

namespace {

struct Side {
  std::unordered_map<std::string, long long> dist;
  std::vector<Level2Element> frontier;
  long long depth = 0;
};

}  // namespace

std::optional<long long> geodesic_length(const Level2Element& e, const Family& fam, long long cap,
                                         const SearchLimits& limits, GeodesicCache* cache) {
  if (cap < 0) throw InputError("geodesic cap must be nonnegative");

  std::string cache_key;
  if (cache != nullptr) {
    cache_key = geodesic_cache_key(fam, e, cap);
    if (auto hit = cache->get(cache_key)) {
      if (*hit == -1) return std::nullopt;
      if (*hit >= 0 && *hit <= cap) return *hit;
      // Out-of-range entries are treated as misses; the cache is advisory.
    }
  }

  auto finish = [&](std::optional<long long> result) {
    if (cache != nullptr) cache->put(cache_key, result ? *result : -1);
    return result;
  };

  if (l2_is_trivial(e, fam)) return finish(0);
  if (cap == 0) return finish(std::nullopt);

  const std::array<Level2Element, 4> gens = {l2_s(1), l2_s(-1), l2_F(+1), l2_F(-1)};

  Side fwd, bwd;
  fwd.dist[l2_key(l2_identity(), fam)] = 0;
  fwd.frontier.push_back(l2_identity());
  bwd.dist[l2_key(e, fam)] = 0;
  bwd.frontier.push_back(e);

  // Forward depths are distances from the identity, backward depths are
  // distances to the target under right multiplication; a node known to both
  // sides witnesses a path of the summed length. After both sides complete
  // their levels, every path of length <= fwd.depth + bwd.depth has been
  // witnessed, which gives both the exactness and the negative certificate.
  long long best = -1;
  long long ticks = 0;
  while (true) {
    if (best >= 0 && best <= fwd.depth + bwd.depth) return finish(best);
    if (fwd.depth + bwd.depth >= cap) return finish(best >= 0 ? std::optional(best) : std::nullopt);
    if (fwd.frontier.empty() && bwd.frontier.empty())
      return finish(best >= 0 ? std::optional(best) : std::nullopt);

    Side& grow = (fwd.frontier.size() <= bwd.frontier.size() && !fwd.frontier.empty()) ||
                         bwd.frontier.empty()
                     ? fwd
                     : bwd;
    const Side& other = &grow == &fwd ? bwd : fwd;

    std::vector<Level2Element> next;
    for (const Level2Element& cur : grow.frontier) {
      for (const Level2Element& g : gens) {
        limits.tick(ticks, "geodesic search");
        Level2Element cand = l2_mul(cur, g);
        std::string key = l2_key(cand, fam);
        if (grow.dist.count(key) != 0) continue;
        grow.dist.emplace(key, grow.depth + 1);
        auto it = other.dist.find(key);
        if (it != other.dist.end()) {
          const long long total = grow.depth + 1 + it->second;
          if (total <= cap && (best < 0 || total < best)) best = total;
        }
        next.push_back(std::move(cand));
      }
    }
    grow.frontier = std::move(next);
    ++grow.depth;
  }
}

}  // namespace wreathlab
