// Copyright 2026 The kmaj Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "kmaj/cli.hpp"

#include <CLI11.hpp>

#include <functional>
#include <map>
#include <sstream>

#include "kmaj/distribution.hpp"
#include "kmaj/enumerate.hpp"
#include "kmaj/equivalence.hpp"
#include "kmaj/error.hpp"
#include "kmaj/io.hpp"
#include "kmaj/parallel.hpp"
#include "kmaj/tableau.hpp"
#include "kmaj/verify.hpp"
#include "kmaj/word_bijections.hpp"

namespace kmaj::cli {

namespace {

enum class Format { text, json, csv };

struct Inputs {
  std::string word;
  std::string tableau;
  std::string shape;
  std::string multiset;
  std::string spacers;
  std::string stat = "maj";
  std::string format = "text";
  std::string suite;
  std::string candidate = "phi";
  int k = 1;
  int n = 0;
  int i = 0;
  int h = 0;
  int max_size = 0;
  bool with_spacers = false;
  bool inverse = false;
};

// A command's result: the JSON value, its text rendering and CSV rows.
struct Output {
  nlohmann::json json;
  std::string text;
  std::vector<std::vector<std::string>> csv;
  int code = exit_ok;
};

std::string pairs_text(const IndexPairSet& s) {
  std::string out = "{";
  bool first = true;
  for (const auto& p : s) {
    if (!first) out += ", ";
    first = false;
    out += "(" + std::to_string(p.first) + "," + std::to_string(p.second) + ")";
  }
  return out + "}";
}

std::string list_text(const std::vector<int>& v) {
  std::string out = "{";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out + "}";
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

// key,value rows from a flat JSON object; nested values are dumped.
std::vector<std::vector<std::string>> key_value_rows(const nlohmann::json& j) {
  std::vector<std::vector<std::string>> rows = {{"key", "value"}};
  for (const auto& [key, value] : j.items()) {
    rows.push_back({key, value.is_string() ? value.get<std::string>() : value.dump()});
  }
  return rows;
}

Word input_word(const Inputs& in) {
  if (in.word.empty()) throw InvalidInput("--word is required");
  Word w = parse_word(in.word);
  if (in.spacers.empty()) return w;
  if (w.has_spacers()) throw InvalidInput("use either '_' in --word or --spacers, not both");
  return place_letters(w.codes(), parse_positions(in.spacers));
}

StandardTableau input_tableau(const Inputs& in) {
  if (in.tableau.empty()) throw InvalidInput("--tableau is required");
  return parse_tableau(in.tableau);
}

Output word_result(const std::string& op, const Word& input, const Word& output, nlohmann::json params) {
  Output o;
  o.json = {{"operation", op}, {"input", to_json(input)}, {"output", to_json(output)}};
  o.json.update(params);
  o.text = to_string(output) + "\n";
  o.csv = key_value_rows(o.json);
  return o;
}

Output cmd_stats(const Inputs& in) {
  const Word w = input_word(in);
  const int k = in.k;
  Output o;
  const auto des = descent_set_k(w, k);
  const auto inv_set = inversion_set_k(w, k);
  const long value = maj_k(w, k);
  o.json = {{"word", to_json(w)}, {"k", k}, {"des_k", to_json(des)}, {"inv_k", to_json(inv_set)}, {"maj_k", value}};
  std::ostringstream text;
  text << "word: " << to_string(w) << "\n"
       << "Des_" << k << ": " << pairs_text(des) << "\n"
       << "Inv_" << k << ": " << pairs_text(inv_set) << "\n"
       << "maj_" << k << ": " << value << "\n";
  if (w.is_permutation()) {
    const auto i = ides(w);
    o.json["ides"] = i;
    text << "iDes: " << list_text(i) << "\n";
  }
  o.text = text.str();
  o.csv = key_value_rows(o.json);
  return o;
}

Output cmd_tstats(const Inputs& in) {
  const auto t = input_tableau(in);
  const int k = in.k;
  Output o;
  const auto des = descent_set_k(t, k);
  const auto inv_set = inversion_set_k(t, k);
  const long value = maj_k(t, k);
  o.json = {{"tableau", to_json(t)}, {"k", k}, {"des_k", to_json(des)}, {"inv_k", to_json(inv_set)}, {"maj_k", value}};
  std::ostringstream text;
  text << "tableau: " << to_string(t) << "\n"
       << "shape: " << to_string(t.shape()) << "\n"
       << "Des_" << k << ": " << pairs_text(des) << "\n"
       << "Inv_" << k << ": " << pairs_text(inv_set) << "\n"
       << "maj_" << k << ": " << value << "\n";
  o.text = text.str();
  o.csv = key_value_rows(o.json);
  return o;
}

Output cmd_phi_tableau(const Inputs& in) {
  const auto t = input_tableau(in);
  const auto image = in.inverse ? psi_k(t, in.k) : phi_k(t, in.k);
  Output o;
  o.json = {{"operation", in.inverse ? "Psi" : "Phi"}, {"k", in.k}, {"input", to_json(t)}, {"output", to_json(image)}};
  o.text = to_string(image) + "\n";
  o.csv = key_value_rows(o.json);
  return o;
}

Output cmd_rsk(const Inputs& in) {
  const Word w = input_word(in);
  const auto pair = rsk(w);
  Output o;
  o.json = {{"word", to_json(w)}, {"p", to_json(pair.p)}, {"q", to_json(pair.q)}};
  o.text = "P: " + to_string(pair.p) + "\nQ: " + to_string(pair.q) + "\n";
  o.csv = key_value_rows(o.json);
  return o;
}

Output cmd_dist(const Inputs& in) {
  QPolynomial p;
  Output o;
  if (!in.shape.empty()) {
    if (!in.multiset.empty()) throw InvalidInput("use either --shape or --multiset");
    const auto shape = parse_partition(in.shape);
    p = syt_distribution(shape, in.k);
    o.json = {{"shape", to_json(shape)}, {"k", in.k}};
  } else if (!in.multiset.empty()) {
    const auto m = parse_multiset(in.multiset);
    const auto spacers = parse_positions(in.spacers);
    const auto stat = parse_word_statistic(in.stat);
    p = word_distribution(m, spacers, stat, in.k);
    o.json = {{"multiset", to_json(m)}, {"spacers", std::vector<Position>(spacers.begin(), spacers.end())},
              {"statistic", to_string(stat)}};
    if (stat == WordStatistic::maj_k) o.json["k"] = in.k;
  } else {
    throw InvalidInput("dist needs --multiset or --shape");
  }
  o.json["distribution"] = to_json(p);
  o.text = to_string(p) + "\n";
  o.csv = {{"degree", "coefficient"}};
  for (std::size_t d = 0; d < p.coeffs().size(); ++d) o.csv.push_back({std::to_string(d), std::to_string(p.coeffs()[d])});
  return o;
}

Output cmd_classes(const Inputs& in) {
  if (in.n < 1) throw InvalidInput("classes needs --n >= 1");
  const auto classes = k_classes(in.n, in.k, parse_positions(in.spacers));
  Output o;
  o.json = classes_to_json(in.k, classes);
  std::ostringstream text;
  o.csv = {{"class", "word", "des_k", "inv_k"}};
  for (std::size_t c = 0; c < classes.size(); ++c) {
    text << "[";
    for (std::size_t m = 0; m < classes[c].members.size(); ++m) {
      const auto& w = classes[c].members[m];
      text << (m ? ", " : "") << to_string(w);
      o.csv.push_back({std::to_string(c + 1), to_string(w), pairs_text(classes[c].shared_des_k),
                       std::to_string(classes[c].shared_inv_count)});
    }
    text << "]  Des_" << in.k << " = " << pairs_text(classes[c].shared_des_k) << "  |Inv_" << in.k
         << "| = " << classes[c].shared_inv_count << "\n";
  }
  o.text = text.str();
  return o;
}

Output cmd_verify(const Inputs& in) {
  SuiteOptions options;
  options.max_size = in.max_size;
  options.threads = default_thread_count();
  options.with_spacers = in.with_spacers;
  options.k = in.k;
  options.n = in.n;
  options.candidate = in.candidate;
  const auto report = run_suite(in.suite, options);
  Output o;
  o.json = to_json(report);
  o.code = report.passed() ? exit_ok : exit_failed;
  std::ostringstream text;
  if (report.passed()) {
    text << "PASS " << report.name << " (" << report.cases << " cases)\n";
  } else {
    text << "FAIL " << report.name << " (" << report.violation_count << " violations in " << report.cases
         << " cases)\n";
  }
  text << o.json.dump(2) << "\n";
  o.text = text.str();
  o.csv = {{"property", "input", "detail"}};
  for (const auto& v : report.violations) o.csv.push_back({v.property, v.input.dump(), v.detail});
  return o;
}

void print(const Output& o, Format f, std::ostream& out) {
  switch (f) {
    case Format::text:
      out << o.text;
      break;
    case Format::json:
      out << o.json.dump() << "\n";
      break;
    case Format::csv:
      for (const auto& row : o.csv) {
        for (std::size_t c = 0; c < row.size(); ++c) out << (c ? "," : "") << csv_field(row[c]);
        out << "\n";
      }
      break;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Mahonian k-statistics on words and standard Young tableaux", "kmaj"};
  app.require_subcommand(1);
  Inputs in;

  std::function<Output()> action;
  const std::map<std::string, Format> formats = {{"text", Format::text}, {"json", Format::json}, {"csv", Format::csv}};

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", in.format, "Output format: text, json or csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));
  };
  auto add_word = [&](CLI::App* sub, bool spacers) {
    sub->add_option("--word", in.word, "Word, letters separated by spaces or commas, '_' for a spacer")->required();
    if (spacers) sub->add_option("--spacers", in.spacers, "Spacer positions to insert around the letters");
  };

  auto* stats = app.add_subcommand("stats", "Des_k, Inv_k, maj_k and iDes of a word");
  add_word(stats, true);
  stats->add_option("--k", in.k, "Level k >= 1")->capture_default_str();
  add_format(stats);
  stats->callback([&] { action = [&] { return cmd_stats(in); }; });

  auto* phi = app.add_subcommand("phi", "Apply phi^(k) to a word");
  add_word(phi, true);
  phi->add_option("--k", in.k, "Level k >= 2")->required();
  add_format(phi);
  phi->callback([&] {
    action = [&] {
      const Word w = input_word(in);
      return word_result("phi", w, phi_k(w, in.k), {{"k", in.k}});
    };
  });

  auto* psi = app.add_subcommand("psi", "Apply psi^(k), the inverse of phi^(k), to a word");
  add_word(psi, true);
  psi->add_option("--k", in.k, "Level k >= 2")->required();
  add_format(psi);
  psi->callback([&] {
    action = [&] {
      const Word w = input_word(in);
      return word_result("psi", w, psi_k(w, in.k), {{"k", in.k}});
    };
  });

  auto* phirange = app.add_subcommand("phirange", "Apply phi^(i) o ... o phi^(h+1) to a word");
  phirange->set_help_flag("--help", "Print this help message and exit");
  add_word(phirange, true);
  phirange->add_option("--i", in.i, "Top level i")->required();
  phirange->add_option("--h", in.h, "Bottom level h < i")->required();
  add_format(phirange);
  phirange->callback([&] {
    action = [&] {
      const Word w = input_word(in);
      return word_result("phirange", w, phi_range(w, in.i, in.h), {{"i", in.i}, {"h", in.h}});
    };
  });

  auto* foata_cmd = app.add_subcommand("foata", "Apply Foata's second fundamental transformation");
  add_word(foata_cmd, false);
  add_format(foata_cmd);
  foata_cmd->callback([&] {
    action = [&] {
      const Word w = input_word(in);
      return word_result("foata", w, foata(w), nlohmann::json::object());
    };
  });

  auto* tstats = app.add_subcommand("tstats", "Des_k, Inv_k and maj_k of a standard tableau (k <= 3)");
  tstats->add_option("--tableau", in.tableau, "Rows bottom-up separated by '/'")->required();
  tstats->add_option("--k", in.k, "Level k in 1..3")->capture_default_str();
  add_format(tstats);
  tstats->callback([&] { action = [&] { return cmd_tstats(in); }; });

  auto* phi_t = app.add_subcommand("Phi", "Apply Phi^(k) (k = 2, 3) to a standard tableau");
  phi_t->add_option("--tableau", in.tableau, "Rows bottom-up separated by '/'")->required();
  phi_t->add_option("--k", in.k, "Level k in {2, 3}")->required();
  phi_t->add_flag("--inverse", in.inverse, "Apply the inverse map instead");
  add_format(phi_t);
  phi_t->callback([&] { action = [&] { return cmd_phi_tableau(in); }; });

  auto* rsk_cmd = app.add_subcommand("rsk", "RSK pair (P, Q) of a permutation, with Des(Q) = iDes(w)");
  add_word(rsk_cmd, false);
  add_format(rsk_cmd);
  rsk_cmd->callback([&] { action = [&] { return cmd_rsk(in); }; });

  auto* dist = app.add_subcommand("dist", "Distribution of a statistic over words on a multiset or SYT of a shape");
  dist->add_option("--multiset", in.multiset, "Multiset, e.g. 1:2,2:1");
  dist->add_option("--spacers", in.spacers, "Fixed spacer positions");
  dist->add_option("--stat", in.stat, "Word statistic: maj, inv or majk")->capture_default_str();
  dist->add_option("--shape", in.shape, "Partition, e.g. 4,3,1");
  dist->add_option("--k", in.k, "Level k")->capture_default_str();
  add_format(dist);
  dist->callback([&] { action = [&] { return cmd_dist(in); }; });

  auto* classes = app.add_subcommand("classes", "k-equivalence classes of S_n");
  classes->add_option("--n", in.n, "Permutation size")->required();
  classes->add_option("--k", in.k, "Level k >= 1")->capture_default_str();
  classes->add_option("--spacers", in.spacers, "Fixed spacer positions");
  add_format(classes);
  classes->callback([&] { action = [&] { return cmd_classes(in); }; });

  auto* verify = app.add_subcommand("verify", "Run a named verification suite");
  verify->add_option("suite", in.suite, "Suite name")->required()->check(CLI::IsMember(suite_names()));
  verify->add_option("--max-size", in.max_size, "Largest size exercised (0 = suite default)");
  verify->add_flag("--with-spacers", in.with_spacers, "Include spacer masks (mahonian, dk-invariants)");
  verify->add_option("--k", in.k, "Level k (theta-check)");
  verify->add_option("--n", in.n, "Single size n (theta-check)");
  verify->add_option("--candidate", in.candidate, "theta-check candidate: phi, psi or identity")
      ->check(CLI::IsMember({"phi", "psi", "identity"}));
  add_format(verify);
  verify->callback([&] {
    if (verify->count("--k") == 0) in.k = 2;
    action = [&] { return cmd_verify(in); };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return exit_usage;
  }

  try {
    const Output o = action();
    print(o, formats.at(in.format), out);
    return o.code;
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  }
}

}  // namespace kmaj::cli
