#include <chrono>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "sring/duality.hpp"
#include "sring/error.hpp"
#include "sring/json_io.hpp"
#include "sring/modarith.hpp"
#include "sring/multipliers.hpp"
#include "sring/oracle.hpp"
#include "sring/sections.hpp"
#include "sring/verify.hpp"

using namespace sring;

namespace {

struct Options {
  bool json = false;
  bool timings = false;
  bool oracle = false;
  std::string input;
  int n = 0;
  int max_n = 0;
  std::string seed_sets;
  std::string suite;
};

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::InvalidInput, "cannot read " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::vector<ResidueSet> parse_seed_sets(int n, const std::string& text) {
  std::vector<ResidueSet> out;
  std::stringstream sets(text);
  std::string set;
  while (std::getline(sets, set, ';')) {
    ResidueSet s(n);
    std::stringstream items(set);
    std::string item;
    while (std::getline(items, item, ',')) {
      if (item.find_first_not_of(" \t") == std::string::npos) continue;
      std::size_t used = 0;
      int x = 0;
      try {
        x = std::stoi(item, &used);
      } catch (const std::exception&) {
        throw Error(ErrorCode::InvalidInput, "bad residue '" + item + "'");
      }
      if (item.find_first_not_of(" \t", used) != std::string::npos) {
        throw Error(ErrorCode::InvalidInput, "bad residue '" + item + "'");
      }
      s.insert(mod(x, n));
    }
    if (!s.empty()) out.push_back(std::move(s));
  }
  return out;
}

Json sections_json(const std::vector<Section>& secs) {
  Json out = Json::array();
  for (const auto& s : secs) out.push_back(to_json(s));
  return out;
}

std::string sections_text(const std::vector<Section>& secs) {
  std::string out;
  for (const auto& s : secs) out += (out.empty() ? "" : " ") + s.to_string();
  return out.empty() ? "-" : out;
}

class Stopwatch {
 public:
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

void emit(const Options& o, Json j, const std::string& text, const Stopwatch& clock) {
  if (o.json) {
    if (o.timings) j["timings"] = Json{{"total_ms", clock.ms()}};
    std::cout << j.dump() << "\n";
  } else {
    std::cout << text;
    if (o.timings) std::cout << "time: " << clock.ms() << " ms\n";
  }
}

int cmd_validate(const Options& o) {
  Stopwatch clock;
  const SRing a = parse_sring(read_input(o.input));
  emit(o, to_json(a),
       "valid S-ring over Z_" + std::to_string(a.order()) + " of rank " + std::to_string(a.rank()) + "\n" +
           a.to_string() + "\n",
       clock);
  return 0;
}

int cmd_closure(const Options& o) {
  Stopwatch clock;
  if (o.n < 1) throw Error(ErrorCode::InvalidInput, "group order must be positive");
  const SRing a = closure(o.n, parse_seed_sets(o.n, o.seed_sets));
  emit(o, to_json(a), a.to_string() + "\n", clock);
  return 0;
}

int cmd_analyze(const Options& o) {
  Stopwatch clock;
  const SRing a = parse_sring(read_input(o.input));
  const auto secs = sections(a);
  const auto principal = principal_sections(a);
  const auto fr = frs0(a);
  const bool qd = is_quasidense(a);
  const auto witness = singular_witness(a);
  const auto report = is_separable(a);

  Json j;
  j["n"] = a.order();
  j["rank"] = a.rank();
  j["a_subgroups"] = a_subgroups(a);
  j["sections"] = secs.size();
  j["principal_sections"] = sections_json(principal);
  j["frs0"] = sections_json(fr);
  j["quasidense"] = qd;
  if (witness) {
    j["singular_witness"] = Json{{"found", to_json(witness->found)},
                                 {"members", sections_json(witness->cls.members)},
                                 {"smallest", to_json(witness->smallest)},
                                 {"largest", to_json(witness->largest)}};
  } else {
    j["singular_witness"] = nullptr;
  }
  j["mult_order"] = report.mult_order;
  j["fmult_order"] = report.fmult_order;
  j["separable"] = report.separable;

  std::ostringstream t;
  t << a.to_string() << "\n"
    << "rank: " << a.rank() << "\n"
    << "A-subgroups: " << j["a_subgroups"].dump() << "\n"
    << "A-sections: " << secs.size() << "\n"
    << "principal sections: " << sections_text(principal) << "\n"
    << "frs0: " << sections_text(fr) << "\n"
    << "quasidense: " << (qd ? "yes" : "no") << "\n";
  if (witness) t << "singular witness: " << witness->found.to_string() << "\n";
  t << "|mult|: " << report.mult_order << ", |fmult|: " << report.fmult_order << "\n"
    << "separable: " << (report.separable ? "yes" : "no") << "\n";
  emit(o, j, t.str(), clock);
  return 0;
}

int cmd_separability(const Options& o) {
  Stopwatch clock;
  const SRing a = parse_sring(read_input(o.input));
  const auto report = is_separable(a);
  Json j;
  j["separable"] = report.separable;
  j["quasidense"] = report.reduction.trace.empty();
  j["reduction"] = sections_json(report.reduction.trace);
  j["ranks"] = report.reduction.ranks;
  j["reduct"] = to_json(report.reduction.result);
  j["mult_order"] = report.mult_order;
  j["fmult_order"] = report.fmult_order;
  j["image_order"] = report.image_order;
  j["uncovered"] = report.uncovered ? to_json(*report.uncovered) : Json(nullptr);

  std::ostringstream t;
  t << "separable: " << (report.separable ? "yes" : "no") << "\n"
    << "reduction: " << sections_text(report.reduction.trace) << "\n"
    << "|mult|: " << report.mult_order << ", |fmult|: " << report.fmult_order
    << ", |theta(mult)|: " << report.image_order << "\n";

  int code = 0;
  if (o.oracle) {
    const bool brute = is_separable_bruteforce(a);
    j["oracle"] = brute;
    t << "exhaustive search: " << (brute ? "separable" : "non-separable") << "\n";
    if (brute != report.separable) {
      t << "criterion and exhaustive search disagree\n";
      code = 1;
    }
  }
  emit(o, j, t.str(), clock);
  return code;
}

int cmd_dual(const Options& o) {
  Stopwatch clock;
  const SRing d = dual_sring(parse_sring(read_input(o.input)));
  emit(o, to_json(d), d.to_string() + "\n", clock);
  return 0;
}

int cmd_enumerate(const Options& o) {
  Stopwatch clock;
  const auto rings = enumerate_srings(o.n);
  Json list = Json::array();
  std::string text;
  for (const auto& a : rings) {
    list.push_back(to_json(a));
    text += a.to_string() + "\n";
  }
  text += std::to_string(rings.size()) + " S-rings over Z_" + std::to_string(o.n) + "\n";
  emit(o, Json{{"n", o.n}, {"count", rings.size()}, {"srings", list}}, text, clock);
  return 0;
}

int cmd_verify(const Options& o) {
  Stopwatch clock;
  const SuiteResult r = run_suite(o.suite, o.max_n);
  Json j{{"suite", r.name},  {"max_n", r.max_n},       {"checked", r.checked},
         {"passed", r.passed()}, {"failures", r.failures}, {"info", r.info}};
  std::ostringstream t;
  t << r.name << " (max-n " << r.max_n << "): " << r.checked << " checked, " << r.failures.size() << " failures\n";
  for (const auto& f : r.failures) t << "FAIL " << f << "\n";
  for (const auto& i : r.info) t << "info " << i << "\n";
  emit(o, j, t.str(), clock);
  return r.passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Schur rings over cyclic groups: validation, duality and separability"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_flag("--json", o.json, "Print canonical JSON");
  app.add_flag("--timings", o.timings, "Report wall-clock time");

  auto* validate = app.add_subcommand("validate", "Check the S-ring axioms and print the canonical form");
  validate->add_option("input", o.input, "S-ring JSON file (stdin when omitted)");

  auto* close = app.add_subcommand("closure", "Smallest S-ring containing the seed sets");
  close->add_option("n", o.n, "Group order")->required();
  close->add_option("--seed-sets", o.seed_sets, "Seed sets as \"a,b;c,d\"");

  auto* analyze = app.add_subcommand("analyze", "Sections, quasidensity and multiplier data");
  analyze->add_option("input", o.input, "S-ring JSON file (stdin when omitted)");

  auto* separability = app.add_subcommand("separability", "Decide separability");
  separability->add_option("input", o.input, "S-ring JSON file (stdin when omitted)");
  separability->add_flag("--oracle", o.oracle, "Also run the exhaustive isomorphism search");

  auto* dual = app.add_subcommand("dual", "Dual S-ring");
  dual->add_option("input", o.input, "S-ring JSON file (stdin when omitted)");

  auto* enumerate = app.add_subcommand("enumerate", "All S-rings over Z_n");
  enumerate->add_option("n", o.n, "Group order")->required()->check(CLI::PositiveNumber);

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("suite", o.suite, "Suite name")->required()->check(CLI::IsMember(suite_names()));
  verify->add_option("--max-n", o.max_n, "Largest group order")->required()->check(CLI::NonNegativeNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*validate) return cmd_validate(o);
    if (*close) return cmd_closure(o);
    if (*analyze) return cmd_analyze(o);
    if (*separability) return cmd_separability(o);
    if (*dual) return cmd_dual(o);
    if (*enumerate) return cmd_enumerate(o);
    if (*verify) return cmd_verify(o);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    switch (e.kind()) {
      case ErrorKind::Input:
        return 2;
      case ErrorKind::Limit:
        return 3;
      case ErrorKind::Theory:
        return 1;
    }
  }
  return 2;
}
