#include <cstdio>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "ptutte/ptutte.hpp"

using namespace ptutte;

namespace {

enum Exit : int { kOk = 0, kViolation = 1, kInputError = 2, kPrecondition = 3 };

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::Parse:
    case ErrorCode::EdgeWithinSide:
    case ErrorCode::UnknownVertex:
    case ErrorCode::DuplicateVertex:
    case ErrorCode::InvalidSpec:
    case ErrorCode::InvalidArgs:
    case ErrorCode::UnknownEdge:
      return kInputError;
    default:
      return kPrecondition;
  }
}

EvalPoint parse_point(const std::string& text) {
  auto comma = text.find(',');
  if (comma == std::string::npos) throw Error(ErrorCode::Parse, "expected x,y but got '" + text + "'");
  return {parse_rational(text.substr(0, comma)), parse_rational(text.substr(comma + 1))};
}

std::pair<int, int> parse_range(const std::string& text) {
  auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      int v = std::stoi(text);
      return {v, v};
    }
    return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
  } catch (const std::exception&) {
    throw Error(ErrorCode::Parse, "expected lo..hi but got '" + text + "'");
  }
}

BipGraph require_bipartite(const GraphDocument& doc) {
  if (const auto* h = std::get_if<BipGraph>(&doc)) return *h;
  throw Error(ErrorCode::Parse, "expected a bipartite graph document with \"A\" and \"B\"");
}

MultiGraph require_multigraph(const GraphDocument& doc) {
  if (const auto* g = std::get_if<MultiGraph>(&doc)) return *g;
  throw Error(ErrorCode::Parse, "expected a multigraph document with \"n\"");
}

// Writes reports as NDJSON and returns the exit code for the batch.
int emit(const std::vector<CheckReport>& reports, std::ostream& out) {
  bool violated = false;
  std::size_t applicable = 0;
  for (const auto& r : reports) {
    out << r.to_json().dump() << '\n';
    violated = violated || r.is_violation();
    if (r.status != CheckStatus::NotApplicable) ++applicable;
  }
  std::cerr << reports.size() << " reports, " << applicable << " applicable, "
            << (violated ? "violations found" : "no violations") << '\n';
  return violated ? kViolation : kOk;
}

std::vector<Rational> random_rationals(std::mt19937_64& rng, int count) {
  std::uniform_int_distribution<int> num(-40, 40), den(1, 17);
  std::vector<Rational> out;
  while (static_cast<int>(out.size()) < count) {
    Rational r = make_rational(num(rng), den(rng));
    if (r != 1 && r != 0) out.push_back(r);
  }
  return out;
}

struct VerifyOptions {
  std::string target;
  int max_vertices = 6;
  int max_edges = 6;
  std::uint64_t seed = 1;
  int count = 5;
  std::string graph;
  unsigned jobs = 1;
};

std::vector<BipGraph> corpus_for(const VerifyOptions& o) {
  if (!o.graph.empty()) return {require_bipartite(load_graph(o.graph))};
  return bipartite_graphs(o.max_vertices);
}

// Evaluates fn on every item with a worker pool and concatenates the results
// in input order.
template <class Item, class Fn>
std::vector<CheckReport> run_all(const std::vector<Item>& items, unsigned jobs, Fn fn) {
  std::vector<std::vector<CheckReport>> parts(items.size());
  std::atomic<std::size_t> cursor{0};
  auto work = [&] {
    for (std::size_t k; (k = cursor.fetch_add(1)) < items.size();) parts[k] = fn(items[k]);
  };
  if (jobs <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  std::vector<CheckReport> out;
  for (auto& p : parts) out.insert(out.end(), std::make_move_iterator(p.begin()), std::make_move_iterator(p.end()));
  return out;
}

int cmd_verify(const VerifyOptions& o) {
  std::mt19937_64 rng(o.seed);
  if (o.target == "identities") {
    auto xs = random_rationals(rng, o.count);
    return emit(run_all(corpus_for(o), o.jobs, [&](const BipGraph& h) { return check_identity_suite(h, xs); }),
                std::cout);
  }
  if (o.target == "inequalities")
    return emit(run_all(corpus_for(o), o.jobs, [](const BipGraph& h) { return check_inequality_suite(h); }), std::cout);
  if (o.target == "brylawski") {
    auto reports = run_all(corpus_for(o), o.jobs, [](const BipGraph& h) { return check_brylawski(h); });
    if (o.graph.empty())
      for (const auto& g : connected_multigraphs(o.max_edges)) {
        auto more = check_brylawski_graph(g);
        reports.insert(reports.end(), more.begin(), more.end());
      }
    return emit(reports, std::cout);
  }
  if (o.target == "gluing") {
    std::vector<BipGraph> trees;
    for (int m = 2; m <= std::max(2, o.max_vertices); ++m)
      for (auto& t : gen_free_trees(m)) trees.push_back(std::move(t));
    const std::vector<Rational> xs{Rational(1), Rational(3, 2), Rational(2), Rational(3)};
    std::uniform_int_distribution<std::size_t> pick_tree(0, trees.size() - 1), pick_x(0, xs.size() - 1);
    std::vector<CheckReport> reports;
    for (int k = 0; k < o.count; ++k) {
      const BipGraph& t1 = trees[pick_tree(rng)];
      const BipGraph& t2 = trees[pick_tree(rng)];
      const Rational& x = xs[pick_x(rng)];
      VertexId r1 = t1.id(std::uniform_int_distribution<int>(0, static_cast<int>(t1.size()) - 1)(rng));
      Side side = t1.side(*t1.index_of(r1));
      auto same = t2.side_ids(side);
      if (same.empty()) continue;
      VertexId r2 = same[std::uniform_int_distribution<std::size_t>(0, same.size() - 1)(rng)];
      auto [rooted, product] = check_gluing(t1, r1, t2, r2, x);
      reports.push_back(std::move(rooted));
      reports.push_back(std::move(product));
      for (int v = 0; v < static_cast<int>(t1.size()); ++v)
        if (t1.degree(v) == 1 && t1.size() > 2) {
          reports.push_back(check_leaf_deletion(t1, t1.id(v), x));
          break;
        }
    }
    return emit(reports, std::cout);
  }
  throw Error(ErrorCode::InvalidArgs, "unknown verify target '" + o.target + "'");
}

std::string fixed(double v, int places) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(places) << v;
  return s.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Permutation Tutte polynomial toolkit"};
  app.require_subcommand(1);
  app.fallthrough();
  unsigned jobs = 1;
  app.add_option("--jobs", jobs, "Worker threads")->check(CLI::Range(1u, 256u));

  std::string file, at, method = "auto";
  bool want_alt = false, verbose = false;
  auto* compute = app.add_subcommand("compute", "Permutation Tutte polynomial of a bipartite graph");
  compute->add_option("graph", file, "Graph file")->required();
  compute->add_option("--at", at, "Evaluate at x,y instead of printing the polynomial");
  compute->add_option("--method", method, "brute, recursive or auto")
      ->check(CLI::IsMember({"brute", "recursive", "auto"}));
  compute->add_flag("--alt", want_alt, "Print the alternating number");

  std::string tutte_method = "delcon";
  auto* tutte = app.add_subcommand("tutte", "Classical Tutte polynomial of a multigraph");
  tutte->add_option("graph", file, "Graph file")->required();
  tutte->add_option("--method", tutte_method, "subset, delcon, activities or decompose")
      ->check(CLI::IsMember({"subset", "delcon", "activities", "decompose"}));
  tutte->add_flag("--verbose", verbose, "Print per-tree summands (decompose)");

  VerifyOptions vo;
  auto* verify = app.add_subcommand("verify", "Run a check suite and print NDJSON reports");
  verify->add_option("target", vo.target, "identities, inequalities, brylawski or gluing")
      ->required()
      ->check(CLI::IsMember({"identities", "inequalities", "brylawski", "gluing"}));
  verify->add_option("--max-vertices", vo.max_vertices, "Exhaustive corpus bound")->check(CLI::Range(1, 9));
  verify->add_option("--max-edges", vo.max_edges, "Multigraph corpus bound (brylawski)")->check(CLI::Range(1, 8));
  verify->add_option("--seed", vo.seed, "Random seed");
  verify->add_option("--count", vo.count, "Random sample count")->check(CLI::Range(0, 1000000));
  verify->add_option("--graph", vo.graph, "Check a single bipartite graph file");

  std::string ra = "1..5", rb = "1..5", rc = "0..5", rx = "2";
  auto* scan = app.add_subcommand("scan", "Search H(a,b,c) for P_x < 1");
  scan->add_option("--a", ra, "a range lo..hi");
  scan->add_option("--b", rb, "b range lo..hi");
  scan->add_option("--c", rc, "c range lo..hi");
  scan->add_option("--x", rx, "Rational x");

  std::string survey_range;
  auto* survey_cmd = app.add_subcommand("survey", "Minimum of P_2 over free trees, as TSV");
  survey_cmd->add_option("m", survey_range, "Order m or range lo..hi")->required();

  std::uint64_t samples = 100000, seed = 1;
  auto* estimate = app.add_subcommand("estimate", "Monte Carlo estimate of the polynomial at a point");
  estimate->add_option("graph", file, "Graph file")->required();
  estimate->add_option("--at", at, "x,y")->required();
  estimate->add_option("--samples", samples, "Sample count")->check(CLI::PositiveNumber);
  estimate->add_option("--seed", seed, "Random seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    if (*compute) {
      BipGraph h = require_bipartite(load_graph(file));
      if (want_alt) {
        std::cout << to_string(alt(h)) << '\n';
        return kOk;
      }
      BiPoly p;
      if (method == "brute")
        p = brute_force_poly(h);
      else if (method == "recursive" || h.size() > static_cast<std::size_t>(kDefaultBruteForceLimit))
        p = compute_poly(h);
      else
        p = h.size() <= 6 ? brute_force_poly(h) : compute_poly(h);
      if (!at.empty()) {
        EvalPoint pt = parse_point(at);
        std::cout << to_string(method == "brute" ? p.eval(pt.x, pt.y) : evaluate(h, pt)) << '\n';
      } else {
        std::cout << p.to_string() << '\n';
      }
      return kOk;
    }
    if (*tutte) {
      MultiGraph g = require_multigraph(load_graph(file));
      if (tutte_method == "subset") {
        std::cout << tutte_subset_oracle(g).to_string() << '\n';
      } else if (tutte_method == "delcon") {
        std::cout << tutte_del_con(g).to_string() << '\n';
      } else if (tutte_method == "activities") {
        std::cout << activities_poly(g, identity_labeling(g)).to_string() << '\n';
      } else {
        auto terms = decompose_terms(g);
        BiPoly total;
        for (const auto& t : terms) {
          if (verbose) {
            std::cout << "T={";
            for (std::size_t k = 0; k < t.tree.size(); ++k) std::cout << (k ? "," : "") << t.tree[k];
            std::cout << "}\t" << t.summand.to_string() << '\n';
          }
          total += t.summand;
        }
        if (verbose) std::cout << "total\t";
        std::cout << total.to_string() << '\n';
      }
      return kOk;
    }
    if (*verify) {
      vo.jobs = jobs;
      return cmd_verify(vo);
    }
    if (*scan) {
      Rational x = parse_rational(rx);
      auto found = counterexample_scan(parse_range(ra), parse_range(rb), parse_range(rc), x);
      for (const auto& r : found) {
        auto j = r.to_json();
        j["product_decimal"] = to_decimal(r.lhs, 6);
        j["margin_decimal"] = to_decimal(r.margin, 6);
        std::cout << j.dump() << '\n';
      }
      std::cerr << found.size() << " instances with P_x < 1\n";
      return kOk;
    }
    if (*survey_cmd) {
      auto [lo, hi] = parse_range(survey_range);
      if (lo < 2 || lo > hi) throw Error(ErrorCode::InvalidArgs, "survey needs 2 <= m");
      for (int m = lo; m <= hi; ++m) std::cout << survey(m, jobs).tsv() << std::endl;
      return kOk;
    }
    if (*estimate) {
      BipGraph h = require_bipartite(load_graph(file));
      EvalPoint pt = parse_point(at);
      auto est = monte_carlo_eval(h, pt.x.get_d(), pt.y.get_d(), samples, seed);
      std::cout << fixed(est.mean, 6) << " +- " << fixed(est.std_error, 6) << "\tsamples=" << est.samples
                << "\tseed=" << est.seed << '\n';
      return kOk;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code_for(e.code());
  }
  return kOk;
}
