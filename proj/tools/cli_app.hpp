#pragma once

#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "comod/comod.hpp"

namespace comod::cli {

using io::json;

enum Exit { kOk = 0, kPropertyFailure = 1, kInputError = 2 };

struct Options {
  std::string subcommand;
  std::string source;
  std::string seed_family;
  std::string format;
  std::size_t max_elements = kDefaultMaxElements;
  std::size_t max_chains = 10000;
  unsigned jobs = 1;
};

/// A lattice built from the family grammar, with its decode table.
struct Built {
  std::string name;
  Lattice lattice;
  json decode = json::array();
  std::optional<Group> group;
  std::optional<SubgroupLattice> subgroups;
};

inline std::vector<std::size_t> parse_numbers(const std::string& s, std::size_t count) {
  std::vector<std::size_t> out;
  std::stringstream ss(s);
  std::string part;
  while (std::getline(ss, part, ',')) {
    if (part.empty() || part.find_first_not_of("0123456789") != std::string::npos)
      throw BadParams("expected a comma-separated list of numbers, got '" + s + "'");
    out.push_back(std::stoul(part));
  }
  if (count != 0 && out.size() != count)
    throw BadParams("expected " + std::to_string(count) + " numbers, got '" + s + "'");
  if (out.empty()) throw BadParams("expected numbers, got '" + s + "'");
  return out;
}

/// A poset file, or one of chain:n, antichain:n, n5, bowtie.
inline Poset parse_poset_source(const std::string& s) {
  if (s.rfind("chain:", 0) == 0) return chain_poset(parse_numbers(s.substr(6), 1)[0]);
  if (s.rfind("antichain:", 0) == 0) return antichain_poset(parse_numbers(s.substr(10), 1)[0]);
  if (s == "n5") return pentagon_poset();
  if (s == "bowtie") return bowtie_poset();
  return io::read_poset(s);
}

inline Group parse_group_source(const std::string& s) {
  if (auto stock = stock_group(s)) return make_group(*stock);
  return io::group_from_json(io::read_json_file(s));
}

inline json partitions_json(const std::vector<SetPartition>& d) {
  json j = json::array();
  for (const auto& p : d) j.push_back(p.to_string());
  return j;
}

inline json signed_json(const std::vector<SignedPartition>& d) {
  json j = json::array();
  for (const auto& p : d) j.push_back(p.to_string());
  return j;
}

inline Built build_family(const std::string& spec, std::size_t max_elements) {
  const auto colon = spec.find(':');
  const std::string kind = spec.substr(0, colon);
  const std::string arg = colon == std::string::npos ? "" : spec.substr(colon + 1);
  auto need_arg = [&] {
    if (arg.empty()) throw BadParams("family '" + kind + "' needs a parameter");
  };
  auto check_size = [&](const Lattice& l) {
    if (l.size() > max_elements) throw TooLarge("lattice has more than " + std::to_string(max_elements) + " elements");
  };
  Built b;
  b.name = spec;
  if (kind == "boolean") {
    need_arg();
    auto n = parse_numbers(arg, 1)[0];
    if (n > 20 || (std::size_t{1} << n) > max_elements) throw TooLarge("boolean lattice too large");
    b.lattice = boolean_lattice(n);
  } else if (kind == "chain") {
    need_arg();
    auto n = parse_numbers(arg, 1)[0];
    if (n > max_elements) throw TooLarge("chain too long");
    b.lattice = chain_lattice(n);
  } else if (kind == "partition") {
    need_arg();
    auto f = partition_lattice(parse_numbers(arg, 1)[0], max_elements);
    b.lattice = std::move(f.lattice);
    b.decode = partitions_json(f.decode);
  } else if (kind == "ordcong" || kind == "ordconv") {
    need_arg();
    Poset p = parse_poset_source(arg);
    auto f = kind == "ordcong" ? order_congruence_lattice(p, max_elements) : order_convexity_lattice(p, max_elements);
    b.lattice = std::move(f.lattice);
    b.decode = partitions_json(f.decode);
  } else if (kind == "kequal") {
    need_arg();
    auto v = parse_numbers(arg, 2);
    auto f = k_equal_lattice(v[0], v[1], max_elements);
    b.lattice = std::move(f.lattice);
    b.decode = partitions_json(f.decode);
  } else if (kind == "signed") {
    need_arg();
    auto f = signed_partition_lattice(parse_numbers(arg, 1)[0], max_elements);
    b.lattice = std::move(f.lattice);
    b.decode = signed_json(f.decode);
  } else if (kind == "signedkh") {
    need_arg();
    auto v = parse_numbers(arg, 3);
    auto f = signed_kh_lattice(v[0], v[1], v[2], max_elements);
    b.lattice = std::move(f.lattice);
    b.decode = signed_json(f.decode);
  } else if (kind == "aff-forall" || kind == "aff-exists") {
    need_arg();
    auto f = affinity_lattice(parse_numbers(arg, 0), kind == "aff-forall" ? Quantifier::ForAll : Quantifier::Exists,
                              max_elements);
    b.lattice = std::move(f.lattice);
    b.decode = partitions_json(f.decode);
  } else if (kind == "ngon") {
    need_arg();
    b.lattice = ngon_face_lattice(parse_numbers(arg, 1)[0]);
  } else if (kind == "diamond") {
    need_arg();
    b.lattice = diamond(parse_numbers(arg, 1)[0]);
  } else if (kind == "pentagon" && arg.empty()) {
    b.lattice = pentagon();
  } else if (kind == "fig1" && arg.empty()) {
    b.lattice = fig1_lattice();
  } else if (kind == "poset") {
    need_arg();
    b.lattice = as_lattice(parse_poset_source(arg));
  } else if (kind == "subgroups") {
    need_arg();
    b.group = parse_group_source(arg);
    b.subgroups = subgroup_lattice(*b.group);
    b.lattice = b.subgroups->lattice;
    for (const auto& h : b.subgroups->decode) b.decode.push_back(io::subgroup_to_json(h));
  } else {
    throw BadParams("unknown family '" + spec + "'");
  }
  check_size(b.lattice);
  return b;
}

inline std::vector<std::string> chain_labels(const Lattice& l, const Chain& c) {
  std::vector<std::string> out;
  for (Id x : c) out.push_back(l.label(x));
  return out;
}

inline std::string join_strings(const std::vector<std::string>& v, const std::string& sep) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + v[i];
  return s;
}

inline std::string word_string(const std::vector<int>& w) {
  std::vector<std::string> parts;
  for (int x : w) parts.push_back(std::to_string(x));
  return join_strings(parts, ",");
}

/// Renders a flat report object as "key: value" lines.
inline void emit(std::ostream& out, const json& j, const std::string& format) {
  if (format == "json") {
    out << j.dump(2) << "\n";
    return;
  }
  for (const auto& [k, v] : j.items()) out << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
}

/// Labeling used by the label/mobius/chains/shell-verify commands. Subgroup
/// lattices of solvable groups are seeded by the chief series.
inline Labeling labeling_for(const Built& b, unsigned jobs) {
  if (b.group && is_solvable(*b.group)) {
    auto finder = std::make_shared<SubMChainFinder>(b.lattice);
    return comodernistic_labeling(b.lattice, projection_selector(finder, chief_series_ids(*b.group, *b.subgroups)));
  }
  return comodernistic_labeling(b.lattice, jobs);
}

inline int cmd_build(const Options& o, const Built& b, std::ostream& out) {
  const Lattice& l = b.lattice;
  if (o.format == "dot") {
    out << io::to_dot(l.poset());
    return kOk;
  }
  json j;
  j["family"] = b.name;
  auto pj = io::poset_to_json(l.poset());
  j["n"] = pj["n"];
  j["covers"] = pj["covers"];
  j["labels"] = pj["labels"];
  j["bottom"] = l.bottom();
  j["top"] = l.top();
  if (!b.decode.empty()) j["decode"] = b.decode;
  if (o.format == "json") {
    out << j.dump(2) << "\n";
  } else {
    out << "family: " << b.name << "\nelements: " << l.size() << "\n";
    for (Id x = 0; x < l.size(); ++x) {
      std::vector<std::string> up;
      for (Id y : l.upper_covers(x)) up.push_back(l.label(y));
      out << x << " " << l.label(x);
      if (!up.empty()) out << " < " << join_strings(up, " ");
      out << "\n";
    }
  }
  return kOk;
}

inline int cmd_check(const Options& o, const Built& b, std::ostream& out) {
  const Lattice& l = b.lattice;
  json j;
  j["family"] = b.name;
  j["elements"] = l.size();
  json lm = json::array(), not_lm = json::array();
  for (Id m = 0; m < l.size(); ++m) {
    auto r = is_left_modular(l, m);
    if (r.is_left_modular) {
      lm.push_back(l.label(m));
    } else {
      not_lm.push_back({{"element", l.label(m)},
                        {"witness", {l.label(r.witness->first), l.label(r.witness->second)}}});
    }
  }
  j["left_modular"] = std::move(lm);
  j["not_left_modular"] = std::move(not_lm);
  j["graded"] = is_graded(l.poset());
  j["semimodular"] = is_semimodular(l);
  j["supersolvable"] = is_supersolvable(l);
  auto mfail = modernism_failure(l);
  j["modernistic"] = !mfail;
  if (mfail) j["modernistic_failure"] = {l.label(mfail->first), l.label(mfail->second)};
  SubMChainFinder finder(l);
  auto cfail = finder.comodernism_failure(o.jobs);
  j["comodernistic"] = !cfail;
  if (cfail) j["comodernistic_failure"] = {l.label(cfail->first), l.label(cfail->second)};
  emit(out, j, o.format);
  return kOk;
}

inline int cmd_label(const Options& o, const Built& b, std::ostream& out, bool only_decreasing) {
  Labeling lab = labeling_for(b, o.jobs);
  std::vector<LabeledChain> chains;
  if (only_decreasing) {
    for (auto& c : decreasing_chains(lab))
      if (chains.size() < o.max_chains)
        chains.push_back(std::move(c));
      else
        throw TooLarge("more than " + std::to_string(o.max_chains) + " decreasing chains");
  } else {
    chains = labeled_chains(lab, o.max_chains);
  }
  if (o.format == "json") {
    out << io::chains_to_json(chains).dump(2) << "\n";
  } else {
    for (const auto& c : chains)
      out << join_strings(chain_labels(b.lattice, c.chain), " < ") << "  [" << word_string(c.word) << "]"
          << (c.decreasing() ? " decreasing" : "") << "\n";
  }
  return kOk;
}

inline int cmd_mobius(const Options& o, const Built& b, std::ostream& out) {
  const Lattice& l = b.lattice;
  Labeling lab = labeling_for(b, o.jobs);
  const long long brute = mobius_brute(l);
  const long long from_labels = mobius_from_labeling(lab);
  json j;
  j["family"] = b.name;
  j["mobius_labeling"] = from_labels;
  j["mobius_brute"] = brute;
  std::optional<long long> chi;
  if (l.size() > 1) {
    chi = euler_characteristic(order_complex(l.poset()));
    j["euler_characteristic"] = *chi;
  }
  const bool agree = brute == from_labels && (!chi || *chi == brute);
  j["agreement"] = agree ? "OK" : "MISMATCH";
  emit(out, j, o.format);
  return agree ? kOk : kPropertyFailure;
}

inline int cmd_shell_verify(const Options& o, const Built& b, std::ostream& out) {
  const Lattice& l = b.lattice;
  Labeling lab = labeling_for(b, o.jobs);
  json j;
  j["family"] = b.name;
  auto cl = verify_cl(lab, o.jobs);
  j["cl_labeling"] = cl.ok;
  if (!cl.ok) {
    const auto& v = *cl.violation;
    j["cl_violation"] = {{"root", chain_labels(l, v.root)}, {"x", l.label(v.x)}, {"y", l.label(v.y)}, {"reason", v.reason}};
  }
  bool shell_ok = true;
  if (l.size() > 1) {
    auto sh = verify_lex_shelling(lab, o.max_chains);
    shell_ok = sh.ok;
    j["shelling"] = sh.ok;
    if (!sh.ok) j["shelling_violation"] = {{"position", sh.position}, {"earlier", sh.earlier}};
  } else {
    j["shelling"] = true;
  }
  emit(out, j, o.format);
  return cl.ok && shell_ok ? kOk : kPropertyFailure;
}

inline int cmd_group(const Options& o, std::ostream& out) {
  Group g = parse_group_source(o.source);
  auto lg = subgroup_lattice(g);
  const bool solvable = is_solvable(g);
  SubMChainFinder finder(lg.lattice);
  auto fail = finder.comodernism_failure(o.jobs);
  const bool comod = !fail;
  json j;
  j["order"] = g.order();
  j["subgroups"] = lg.lattice.size();
  j["solvable"] = solvable;
  j["comodernistic"] = comod;
  if (fail) j["comodernistic_failure"] = {lg.lattice.label(fail->first), lg.lattice.label(fail->second)};
  j["mobius"] = mobius_brute(lg.lattice);
  if (solvable) j["complement_chains"] = complement_chains_to_chief_series(g, lg).size();
  j["agreement"] = solvable == comod ? "OK" : "MISMATCH";
  emit(out, j, o.format);
  return solvable == comod ? kOk : kPropertyFailure;
}

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Comodernistic lattice toolkit"};
  app.require_subcommand(1);
  Options o;
  const std::vector<std::string> names{"build", "check", "label", "mobius", "shell-verify", "chains", "group"};
  const std::vector<std::string> help{
      "build a lattice and print it", "report modularity properties", "print the comodernistic labeling",
      "compare Möbius numbers from the labeling and by brute force", "verify the CL property and the lexicographic shelling",
      "list the decreasing maximal chains", "check solvability against comodernism of the subgroup lattice"};
  for (std::size_t i = 0; i < names.size(); ++i) {
    auto* sub = app.add_subcommand(names[i], help[i]);
    sub->add_option("source", o.source, names[i] == "group" ? "group file or stock group name" : "lattice family");
    if (names[i] != "group") sub->add_option("--seed-family", o.seed_family, "lattice family (instead of the positional source)");
    sub->add_option("--format", o.format, "output format")->check(CLI::IsMember({"json", "dot", "text"}));
    sub->add_option("--max-elements", o.max_elements, "refuse lattices with more elements");
    sub->add_option("--max-chains", o.max_chains, "refuse to list more maximal chains");
    sub->add_option("--jobs", o.jobs, "worker threads for interval checks")->check(CLI::Range(1u, 256u));
    sub->final_callback([&o, name = names[i]] { o.subcommand = name; });
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }
  if (o.format.empty()) o.format = o.subcommand == "build" ? "json" : "text";
  if (o.format == "dot" && o.subcommand != "build") {
    err << "error: --format dot is only available for build\n";
    return kInputError;
  }
  if (!o.seed_family.empty()) {
    if (!o.source.empty()) {
      err << "error: give either a positional family or --seed-family, not both\n";
      return kInputError;
    }
    o.source = o.seed_family;
  }
  if (o.source.empty()) {
    err << "error: no input given\n";
    return kInputError;
  }
  try {
    if (o.subcommand == "group") return cmd_group(o, out);
    Built b = build_family(o.source, o.max_elements);
    if (o.subcommand == "build") return cmd_build(o, b, out);
    if (o.subcommand == "check") return cmd_check(o, b, out);
    if (o.subcommand == "label") return cmd_label(o, b, out, false);
    if (o.subcommand == "chains") return cmd_label(o, b, out, true);
    if (o.subcommand == "mobius") return cmd_mobius(o, b, out);
    if (o.subcommand == "shell-verify") return cmd_shell_verify(o, b, out);
  } catch (const NotComodernistic& e) {
    err << "property failure: " << e.what() << "\n";
    return kPropertyFailure;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}

}  // namespace comod::cli
