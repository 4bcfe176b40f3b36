#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "wreathlab/distortion.hpp"
#include "wreathlab/enumerate.hpp"
#include "wreathlab/errors.hpp"
#include "wreathlab/family.hpp"
#include "wreathlab/family_config.hpp"
#include "wreathlab/file_cache.hpp"
#include "wreathlab/frattini.hpp"
#include "wreathlab/geodesic.hpp"
#include "wreathlab/horder.hpp"
#include "wreathlab/level1.hpp"
#include "wreathlab/level2.hpp"
#include "wreathlab/membership.hpp"
#include "wreathlab/orders.hpp"
#include "wreathlab/word.hpp"

using namespace wreathlab;

namespace {

struct Opts {
  std::string family;
  int group = 1;
  std::string word;
  std::string g1, g2;
  long long k = 1;
  std::optional<long long> m;
  bool l2 = false;
  int radius = 1;
  long long count_cap = 10;
  long long node_budget = SearchLimits{}.node_budget;
  long long geodesic_cap = -1;
  std::string cache_dir;
  std::string output;
  std::string format;
};

void emit(const std::string& path, const std::string& payload) {
  if (path.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream out(path, std::ios::trunc | std::ios::binary);
  out << payload;
  if (!out) throw InputError("cannot write output file: " + path);
}

nlohmann::json l1_to_json(const Level1Element& v) {
  nlohmann::json factors = nlohmann::json::array();
  for (const Level1Factor& f : v.factors) factors.push_back({f.gen, f.shift, f.sign});
  return {{"factors", std::move(factors)}, {"tExp", v.t_exp}};
}

std::string resolve_format(const std::string& given, const char* fallback) {
  return given.empty() ? fallback : given;
}

int dispatch(const CLI::App& app, const Opts& o) {
  const Family fam = family_from_file(o.family);
  const SearchLimits limits{o.node_budget, nullptr};
  std::unique_ptr<FileGeodesicCache> cache;
  if (!o.cache_dir.empty()) cache = std::make_unique<FileGeodesicCache>(o.cache_dir);

  if (app.got_subcommand("wp")) {
    const Word w = parse_generator_word(o.word);
    const bool trivial = o.group == 0 ? direct_sum_trivial(fam, w) : wp(fam.group(o.group), w);
    emit(o.output, nlohmann::json{{"trivial", trivial}}.dump() + "\n");
    return 0;
  }

  if (app.got_subcommand("embed")) {
    const Word w = parse_generator_word(o.word);
    const Level2Element e = embed(fam, o.group, w);
    const Word image = embed_word(fam, o.group, w);
    nlohmann::json payload{{"element", l2_to_json(e)},
                           {"word", format_sf_word(image)},
                           {"word_length", image.size()}};
    emit(o.output, payload.dump() + "\n");
    return 0;
  }

  if (app.got_subcommand("eval")) {
    const Level2Element e = l2_collect(parse_sf_word(o.word));
    const Level1Element v = eval_l2(e, o.k, fam);
    nlohmann::json payload;
    if (o.m) {
      const Word value = eval_l1(v, *o.m);
      payload = {{"k", o.k},
                 {"m", *o.m},
                 {"value_word", format_generator_word(value)},
                 {"trivial", direct_sum_trivial(fam, value)}};
    } else {
      payload = {{"k", o.k}, {"value", l1_to_json(v)}};
    }
    emit(o.output, payload.dump() + "\n");
    return 0;
  }

  if (app.got_subcommand("member")) {
    const MembershipResult r =
        membership(fam, o.group, parse_sf_word(o.word), limits, cache.get());
    nlohmann::json payload{{"member", r.preimage.has_value()}};
    if (r.range_searched) {
      payload["image_geodesic"] = r.image_geodesic;
      payload["searched"] = {r.searched_lo, r.searched_hi};
    }
    if (r.preimage) payload["preimage"] = format_generator_word(*r.preimage);
    emit(o.output, payload.dump() + "\n");
    return 0;
  }

  if (app.got_subcommand("sign")) {
    OrderSign s;
    if (o.l2) {
      s = sign_l2(l2_collect(parse_sf_word(o.word)), fam);
    } else {
      const Word w = parse_generator_word(o.word);
      s = o.group == 0 ? direct_sum_sign(fam, w) : sign_base(fam.group(o.group), w);
    }
    emit(o.output, nlohmann::json{{"sign", to_string(s)}}.dump() + "\n");
    return 0;
  }

  if (app.got_subcommand("cone")) {
    const OrderDescriptor od = o.group == 0 ? order_of(fam) : order_of(fam.group(o.group));
    const std::vector<Word> words =
        positive_cone_enum(od, o.count_cap, o.node_budget, limits.cancel);
    const std::string format = resolve_format(o.format, "text");
    std::string payload;
    if (format == "json") {
      nlohmann::json arr = nlohmann::json::array();
      for (const Word& w : words) arr.push_back(format_generator_word(w));
      payload = nlohmann::json{{"words", std::move(arr)}}.dump() + "\n";
    } else {
      for (const Word& w : words) payload += format_generator_word(w) + "\n";
    }
    emit(o.output, payload);
    return 0;
  }

  if (app.got_subcommand("enum")) {
    const std::vector<HElement> elements = enumerate_H(fam, o.count_cap, limits);
    const std::string format = resolve_format(o.format, "json");
    std::string payload;
    for (const HElement& h : elements) {
      if (format == "json") {
        payload += nlohmann::json{{"word", format_sf_word(h.sf_word)},
                                  {"element", l2_to_json(h.element)}}
                       .dump() +
                   "\n";
      } else {
        payload += format_sf_word(h.sf_word) + "\n";
      }
    }
    emit(o.output, payload);
    return 0;
  }

  if (app.got_subcommand("order-list")) {
    const std::vector<OrderListEntry> entries =
        induced_order_list(fam, o.group, o.count_cap, limits, cache.get());
    std::string payload;
    for (const OrderListEntry& entry : entries)
      payload += nlohmann::json{{"word", format_sf_word(entry.sf_word)},
                                {"sign", to_string(entry.sign)}}
                     .dump() +
                 "\n";
    emit(o.output, payload);
    return 0;
  }

  if (app.got_subcommand("distort")) {
    const DistortionReport report =
        lipschitz_audit(fam, o.group, o.radius, limits, cache.get(), o.geodesic_cap);
    const std::string format = resolve_format(o.format, "csv");
    std::string payload;
    if (format == "json") {
      nlohmann::json rows = nlohmann::json::array();
      for (const DistortionRow& row : report.rows) {
        nlohmann::json r{{"word", format_generator_word(row.g)},
                         {"len_G", row.len_g},
                         {"len_H_upper", row.len_h_upper},
                         {"ok", row.ok}};
        if (row.len_h_exact) r["len_H_exact"] = *row.len_h_exact;
        rows.push_back(std::move(r));
      }
      payload =
          nlohmann::json{{"C_bound", report.c_bound.num}, {"rows", std::move(rows)}}.dump() +
          "\n";
    } else {
      payload = distortion_csv(report);
    }
    emit(o.output, payload);
    return 0;
  }

  if (app.got_subcommand("frattini")) {
    const FrattiniResult r = frattini_witness_search(fam, o.group, parse_generator_word(o.g1),
                                                     parse_generator_word(o.g2), o.radius, limits);
    nlohmann::json payload{{"outcome", to_string(r.outcome)}};
    if (r.witness_g) payload["witness"] = format_generator_word(*r.witness_g);
    if (r.witness_h) payload["witness"] = format_sf_word(*r.witness_h);
    emit(o.output, payload.dump() + "\n");
    return 0;
  }

  throw std::logic_error("unhandled subcommand");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact arithmetic and decision procedures for two-level wreath embeddings"};
  app.set_version_flag("--version", "wreath-lab 0.1.0");
  app.require_subcommand(1);

  Opts o;

  auto add_family = [&](CLI::App* c) {
    c->add_option("--family", o.family, "Family config JSON file")->required();
  };
  auto add_group = [&](CLI::App* c) {
    c->add_option("--group", o.group, "Group index, 1-based; 0 means the whole direct sum")
        ->capture_default_str();
  };
  auto add_word = [&](CLI::App* c, const char* help) {
    c->add_option("--word", o.word, help)->required();
  };
  auto add_io = [&](CLI::App* c, const std::vector<std::string>& formats) {
    c->add_option("--output", o.output, "Write the report to this file instead of stdout");
    if (!formats.empty())
      c->add_option("--format", o.format, "Report format")->check(CLI::IsMember(formats));
    c->add_option("--node-budget", o.node_budget, "Search node budget")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
  };
  auto add_cache = [&](CLI::App* c) {
    c->add_option("--cache-dir", o.cache_dir,
                  "Geodesic cache directory (advisory, atomic rename-on-write)")
        ->envname("WREATH_LAB_CACHE_DIR");
  };

  CLI::App* wp_cmd = app.add_subcommand("wp", "Word problem in one family group");
  add_family(wp_cmd);
  add_group(wp_cmd);
  add_word(wp_cmd, "Word over the group's generators, e.g. \"x1 x2^-1\"");
  add_io(wp_cmd, {});

  CLI::App* embed_cmd = app.add_subcommand("embed", "Image of a group word in <s, F>");
  add_family(embed_cmd);
  add_group(embed_cmd);
  add_word(embed_cmd, "Word over the group's generators");
  add_io(embed_cmd, {});

  CLI::App* eval_cmd = app.add_subcommand("eval", "Evaluate an <s, F> word at s^k (and t^m)");
  add_family(eval_cmd);
  add_word(eval_cmd, "Word over {s, F}, token or compact form");
  eval_cmd->add_option("--k", o.k, "Evaluation point s^k")->capture_default_str();
  eval_cmd->add_option("--m", o.m, "Also evaluate the level-1 value at t^m");
  add_io(eval_cmd, {});

  CLI::App* member_cmd = app.add_subcommand("member", "Membership in the image of a group");
  add_family(member_cmd);
  add_group(member_cmd);
  add_word(member_cmd, "Word over {s, F}");
  add_io(member_cmd, {});
  add_cache(member_cmd);

  CLI::App* sign_cmd = app.add_subcommand("sign", "Left-order sign of a word");
  add_family(sign_cmd);
  add_group(sign_cmd);
  add_word(sign_cmd, "Word over the group's generators, or over {s, F} with --l2");
  sign_cmd->add_flag("--l2", o.l2, "Interpret the word over {s, F} and use the order there");
  add_io(sign_cmd, {});

  CLI::App* cone_cmd = app.add_subcommand("cone", "Positive cone enumeration");
  add_family(cone_cmd);
  add_group(cone_cmd);
  cone_cmd->add_option("--count-cap", o.count_cap, "Number of cone elements")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  add_io(cone_cmd, {"text", "json"});

  CLI::App* enum_cmd = app.add_subcommand("enum", "Enumerate elements of <s, F>");
  add_family(enum_cmd);
  enum_cmd->add_option("--count-cap", o.count_cap, "Number of elements")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  add_io(enum_cmd, {"json", "text"});

  CLI::App* list_cmd =
      app.add_subcommand("order-list", "Induced order list: members of the image with signs");
  add_family(list_cmd);
  add_group(list_cmd);
  list_cmd->add_option("--count-cap", o.count_cap, "Number of <s, F> elements to scan")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  add_io(list_cmd, {});
  add_cache(list_cmd);

  CLI::App* distort_cmd = app.add_subcommand("distort", "Two-sided length bound audit over a ball");
  add_family(distort_cmd);
  add_group(distort_cmd);
  distort_cmd->add_option("--radius", o.radius, "Ball radius in the group")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  distort_cmd
      ->add_option("--geodesic-cap", o.geodesic_cap,
                   "Skip exact geodesics whose search cap exceeds this (-1: never skip)")
      ->capture_default_str();
  add_io(distort_cmd, {"csv", "json"});
  add_cache(distort_cmd);

  CLI::App* frattini_cmd =
      app.add_subcommand("frattini", "Bounded conjugacy witness search in the group and in <s, F>");
  add_family(frattini_cmd);
  add_group(frattini_cmd);
  frattini_cmd->add_option("--g1", o.g1, "First word over the group's generators")->required();
  frattini_cmd->add_option("--g2", o.g2, "Second word over the group's generators")->required();
  frattini_cmd->add_option("--radius", o.radius, "Conjugator length bound")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  add_io(frattini_cmd, {});

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    std::cerr << nlohmann::json{{"error", "input"}, {"message", e.what()}}.dump() << "\n";
    return 2;
  }

  try {
    return dispatch(app, o);
  } catch (const InputError& e) {
    std::cerr << nlohmann::json{{"error", "input"}, {"message", e.what()}}.dump() << "\n";
    return 2;
  } catch (const UnsupportedError& e) {
    std::cerr << nlohmann::json{{"error", "unsupported"}, {"message", e.what()}}.dump() << "\n";
    return 2;
  } catch (const BudgetExceeded& e) {
    std::cerr << nlohmann::json{{"error", "budget"}, {"message", e.what()}}.dump() << "\n";
    return 3;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << nlohmann::json{{"error", "input"}, {"message", e.what()}}.dump() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << nlohmann::json{{"error", "internal"}, {"message", e.what()}}.dump() << "\n";
    return 1;
  }
}
