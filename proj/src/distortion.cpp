#include "wreathlab/distortion.hpp"

#include "wreathlab/ball.hpp"
#include "wreathlab/level2.hpp"

namespace wreathlab {

DistortionReport lipschitz_audit(const Family& fam, int group_index, int radius,
                                 const SearchLimits& limits, GeodesicCache* cache,
                                 long long max_exact_cap) {
  if (radius < 0) throw InputError("radius must be nonnegative");
  const GroupDescriptor g =
      group_index == 0 ? direct_sum_descriptor(fam) : fam.group(group_index);
  const QiConstants q = lipschitz_constants(fam, group_index);

  const BallResult ball_words = ball(g, radius, limits.node_budget, limits.cancel);
  if (ball_words.capped) throw BudgetExceeded("ball enumeration: node budget exhausted");

  DistortionReport report;
  report.c_bound = q.C;
  for (const Word& w : ball_words.words) {
    DistortionRow row;
    row.g = w;
    row.len_g = static_cast<long long>(w.size());
    const Level2Element image = embed(fam, group_index, w);
    row.len_h_upper = static_cast<long long>(embed_word(fam, group_index, w).size());

    const long long cap = row.len_h_upper;
    if (max_exact_cap < 0 || cap <= max_exact_cap) {
      try {
        row.len_h_exact = geodesic_length(image, fam, cap, limits, cache);
      } catch (const BudgetExceeded&) {
        // Upper-bound-only row; the audit itself is still a success.
      }
    }

    // C * len_g, saturating; C.den is 1 for the certified constants.
    const __int128 c_times_len =
        static_cast<__int128>(q.C.num) * row.len_g / q.C.den;
    row.ok = static_cast<__int128>(row.len_h_upper) <= c_times_len;
    if (row.len_h_exact)
      row.ok = row.ok && row.len_g <= *row.len_h_exact && *row.len_h_exact <= row.len_h_upper;
    report.rows.push_back(std::move(row));
  }
  return report;
}

std::string distortion_csv(const DistortionReport& report) {
  std::string out = "word,len_G,len_H_upper,len_H_exact,C_bound,ok\n";
  std::string c_bound = std::to_string(report.c_bound.num);
  if (report.c_bound.den != 1) c_bound += "/" + std::to_string(report.c_bound.den);
  for (const DistortionRow& row : report.rows) {
    out += format_generator_word(row.g);
    out += "," + std::to_string(row.len_g);
    out += "," + std::to_string(row.len_h_upper);
    out += ",";
    if (row.len_h_exact) out += std::to_string(*row.len_h_exact);
    out += "," + c_bound;
    out += ",";
    out += row.ok ? "true" : "false";
    out += "\n";
  }
  return out;
}

}  // namespace wreathlab
