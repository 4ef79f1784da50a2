#include "tiedarcs/cli.hpp"

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "tiedarcs/arc_diagram.hpp"
#include "tiedarcs/exact_math.hpp"
#include "tiedarcs/render.hpp"
#include "tiedarcs/ta_diagram.hpp"
#include "tiedarcs/tb_codec.hpp"
#include "tiedarcs/triangles.hpp"
#include "tiedarcs/verify.hpp"

namespace tiedarcs {

namespace {

// Default per-family bounds on enumeration size; the ta space grows much
// faster (A_8(4,1) = 420732 already, A_12 is hopeless on one core).
int family_bound(const std::string& family) {
  return family == "ta" ? 8 : 12;
}

// TIEDARCS_MAX_N (a positive integer) replaces the default bound.
int effective_bound(const std::string& family) {
  if (const char* env = std::getenv("TIEDARCS_MAX_N")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end && *end == '\0' && v > 0 && v < 1000000) return static_cast<int>(v);
  }
  return family_bound(family);
}

int cmd_triangle(const std::string& kind, int rows, const std::string& format) {
  Triangle t = kind == "catalan" ? catalan_triangle(rows) : fuss_triangle(rows);
  if (format == "csv")
    std::cout << t.to_csv();
  else
    std::cout << t.to_json() << '\n';
  return 0;
}

int cmd_enumerate(const std::string& family, int n, const std::string& emit,
                  bool unsafe) {
  if (!unsafe && n > effective_bound(family)) {
    std::cerr << "enumerate: n=" << n << " exceeds the safety bound "
              << effective_bound(family) << " for family '" << family
              << "' (raise TIEDARCS_MAX_N or pass --unsafe-n)\n";
    return 2;
  }
  const bool lines = emit == "lines";
  ExactInt total = 0;
  std::vector<ExactInt> by_blocks(n, ExactInt(0));
  if (family == "arc") {
    for_each_arc_diagram(n, [&](const ArcDiagram& d) {
      if (lines) {
        std::cout << d.to_parentheses() << '\n';
        return;
      }
      total += 1;
      if (n > 0) by_blocks[block_structure(d).count() - 1] += 1;
    });
  } else if (family == "tb") {
    if (n == 0) {  // the library enumerator starts at one arc
      if (lines)
        std::cout << "|\n";
      else
        total = 1;
    } else {
      for_each_tb_diagram(n, [&](const TbDiagram& d) {
        if (lines) {
          std::cout << d.to_text() << '\n';
          return;
        }
        total += 1;
        by_blocks[block_structure(d.base).count() - 1] += 1;
      });
    }
  } else {
    TaCensus census = for_each_standard_ta(n, [&](const TaDiagram& d) {
      if (lines) std::cout << d.to_text() << '\n';
    });
    total = census.total;
    by_blocks = census.by_blocks;
  }
  if (!lines) {
    nlohmann::ordered_json j;
    j["family"] = family;
    j["n"] = n;
    j["total"] = total.str();
    j["by_blocks"] = nlohmann::ordered_json::array();
    for (const ExactInt& b : by_blocks) j["by_blocks"].push_back(b.str());
    std::cout << j.dump() << '\n';
  }
  return 0;
}

int cmd_verify(const std::string& suite, int max_n, bool parallel) {
  VerificationReport report = run_suite(suite, max_n, parallel);
  std::cout << report.to_json();
  double total_ms = 0.0;
  for (const CheckResult& c : report.checks) {
    std::fprintf(stderr, "%s: %.1f ms\n", c.name.c_str(), c.elapsed_ms);
    total_ms += c.elapsed_ms;
  }
  std::fprintf(stderr, "total: %.1f ms\n", total_ms);
  return report.all_pass() ? 0 : 1;
}

int finish_roundtrip(bool ok) {
  std::cout << (ok ? "roundtrip: ok\n" : "roundtrip: FAILED\n");
  return ok ? 0 : 1;
}

int cmd_roundtrip(const std::string& input) {
  switch (classify_input(input)) {
    case InputKind::Combination: {
      const std::vector<int> c = parse_combination(input);
      const int n = static_cast<int>(c.size());
      TbDiagram d = decode_combination(c, n);
      std::cout << "tb: " << d.to_text() << '\n';
      const std::vector<int> back = encode_combination(d);
      std::cout << "combination: " << combination_to_text(back) << '\n';
      return finish_roundtrip(back == c);
    }
    case InputKind::TbText: {
      TbDiagram d = TbDiagram::from_text(input);
      const std::vector<int> c = encode_combination(d);
      std::cout << "combination: " << combination_to_text(c) << '\n';
      TbDiagram back = decode_combination(c, d.base.arc_count());
      std::cout << "tb: " << back.to_text() << '\n';
      return finish_roundtrip(back == d);
    }
    case InputKind::ArcText: {
      ArcDiagram d = ArcDiagram::from_parentheses(input);
      std::cout << "arcs: " << d.to_parentheses() << '\n';
      return finish_roundtrip(ArcDiagram::from_parentheses(d.to_parentheses()) ==
                              d);
    }
    case InputKind::TaText:
      break;
  }
  TaDiagram d = TaDiagram::from_text(input);
  if (!is_standard(d)) {
    d = standardize(d);
    std::cout << "standard: " << d.to_text() << '\n';
  }
  if (d.base().arc_count() == 0) {
    std::cout << "ta: " << d.to_text() << '\n';
    return finish_roundtrip(true);
  }
  if (ta_blocks(d).count() == 1) {
    auto [d1, d2, d3] = one_block_to_triple(d);
    std::cout << "triple: " << d1.to_text() << " ; " << d2.to_text() << " ; "
              << d3.to_text() << '\n';
    TaDiagram back = triple_to_one_block(d1, d2, d3);
    std::cout << "rebuilt: " << back.to_text() << '\n';
    return finish_roundtrip(back == d);
  }
  auto [prefix, last] = split_last_block(d);
  std::cout << "prefix: " << prefix.to_text() << '\n';
  std::cout << "last: " << last.to_text() << '\n';
  TaDiagram back = concat(prefix, last);
  std::cout << "rebuilt: " << back.to_text() << '\n';
  return finish_roundtrip(back == d);
}

int cmd_render(const std::string& input) {
  switch (classify_input(input)) {
    case InputKind::Combination: {
      const std::vector<int> c = parse_combination(input);
      std::cout << render_ascii(
          decode_combination(c, static_cast<int>(c.size())));
      return 0;
    }
    case InputKind::TbText:
      std::cout << render_ascii(TbDiagram::from_text(input));
      return 0;
    case InputKind::ArcText:
      std::cout << render_ascii(ArcDiagram::from_parentheses(input));
      return 0;
    case InputKind::TaText:
      std::cout << render_ascii(TaDiagram::from_text(input));
      return 0;
  }
  return 2;  // unreachable
}

}  // namespace

InputKind classify_input(std::string_view s) {
  const size_t bar = s.find('|');
  if (bar == std::string_view::npos) {
    const bool digits =
        !s.empty() &&
        s.find_first_not_of("0123456789,") == std::string_view::npos;
    return digits ? InputKind::Combination : InputKind::ArcText;
  }
  ArcDiagram base = ArcDiagram::from_parentheses(s.substr(0, bar));
  const std::string_view tail = s.substr(bar + 1);
  const int blocks = block_structure(base).count();
  const bool bits =
      tail.find_first_not_of("01") == std::string_view::npos;
  if (bits && static_cast<int>(tail.size()) == blocks - 1)
    return InputKind::TbText;
  return InputKind::TaText;
}

int run_cli(int argc, const char* const* argv) {
  CLI::App app{"exact enumeration and identity checks for arc diagrams, "
               "tied-boundary diagrams, and tied arc diagrams"};
  app.require_subcommand(1);
  int code = 0;

  std::string tri_kind, tri_format = "csv";
  int tri_rows = 0;
  auto* tri = app.add_subcommand("triangle",
                                 "print a number triangle's rows 0..N");
  tri->add_option("kind", tri_kind, "catalan or fuss")
      ->required()
      ->check(CLI::IsMember({"catalan", "fuss"}));
  tri->add_option("--rows", tri_rows, "largest row index")
      ->required()
      ->check(CLI::Range(0, 5000));
  tri->add_option("--format", tri_format, "csv (default) or json")
      ->check(CLI::IsMember({"csv", "json"}));
  tri->callback([&] { code = cmd_triangle(tri_kind, tri_rows, tri_format); });

  std::string enu_family, enu_emit = "count";
  int enu_n = 0;
  bool enu_unsafe = false;
  auto* enu = app.add_subcommand("enumerate",
                                 "enumerate diagrams of one family at size n");
  enu->add_option("family", enu_family, "arc, tb, or ta")
      ->required()
      ->check(CLI::IsMember({"arc", "tb", "ta"}));
  enu->add_option("--n", enu_n, "number of arcs")
      ->required()
      ->check(CLI::Range(0, 1000000));
  enu->add_option("--emit", enu_emit,
                  "count (default): totals as JSON; lines: one diagram per line")
      ->check(CLI::IsMember({"count", "lines"}));
  enu->add_flag("--unsafe-n", enu_unsafe, "ignore the safety bound on n");
  enu->callback(
      [&] { code = cmd_enumerate(enu_family, enu_n, enu_emit, enu_unsafe); });

  std::string ver_suite = "all";
  int ver_max_n = 0;
  bool ver_parallel = false;
  auto* ver = app.add_subcommand("verify", "run identity/bijection suites");
  ver->add_option("--suite", ver_suite,
                  "triangles, fuss, tb, ta, or all (default)")
      ->check(CLI::IsMember({"triangles", "fuss", "tb", "ta", "all"}));
  ver->add_option("--max-n", ver_max_n,
                  "cap every check at this n (default: per-check ranges)")
      ->check(CLI::Range(1, 1000000));
  ver->add_flag("--parallel", ver_parallel, "run checks in worker threads");
  ver->callback(
      [&] { code = cmd_verify(ver_suite, ver_max_n, ver_parallel); });

  std::string rt_input;
  auto* rt = app.add_subcommand(
      "roundtrip", "map a diagram or combination through its codec and back");
  rt->add_option("INPUT", rt_input,
                 "combination, parenthesis string, tb text, or ta text")
      ->required();
  rt->callback([&] { code = cmd_roundtrip(rt_input); });

  std::string rd_input;
  auto* rd = app.add_subcommand("render", "ASCII drawing of a diagram");
  rd->add_option("INPUT", rd_input,
                 "combination, parenthesis string, tb text, or ta text")
      ->required();
  rd->callback([&] { code = cmd_render(rd_input); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int c = app.exit(e);
    return c == 0 ? 0 : 2;  // help/version exit 0; usage errors exit 2
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return 2;
  }
  return code;
}

}  // namespace tiedarcs
