// rqv: command-line front end for q/R verification runs.

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "rqv/certifier.hpp"
#include "rqv/graph6.hpp"
#include "rqv/harness.hpp"
#include "rqv/report.hpp"

namespace {

enum Exit { kOk = 0, kFailure = 1, kInputError = 2, kUndecidable = 3 };

/// Writes line-delimited JSON to a file, or stdout for "-".
class JsonSink {
 public:
  explicit JsonSink(const std::string& path) {
    if (path.empty()) return;
    if (path == "-") {
      out_ = &std::cout;
      return;
    }
    file_ = std::make_unique<std::ofstream>(path);
    if (!*file_) throw rqv::InputError("cannot open '" + path + "' for writing");
    out_ = file_.get();
  }

  void write(const nlohmann::ordered_json& j) {
    if (out_) *out_ << j.dump() << "\n";
  }

  bool to_stdout() const { return out_ == &std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream* out_ = nullptr;
};

std::vector<rqv::Graph> read_graphs(const std::string& path) {
  if (path == "-") return rqv::read_graph6_stream(std::cin);
  std::ifstream in(path);
  if (!in) throw rqv::InputError("cannot open '" + path + "'");
  return rqv::read_graph6_stream(in);
}

std::string interval_text(const rqv::Interval<double>& x) {
  std::ostringstream os;
  os << std::setprecision(12) << x;
  return os.str();
}

int report_verify(const rqv::VerifyRunResult& r, JsonSink& sink) {
  sink.write(rqv::to_json(r));
  std::ostream& os = sink.to_stdout() ? std::cerr : std::cout;
  os << "mode " << rqv::to_string(r.mode) << ": " << r.graphs_checked << " graphs checked\n";
  for (const auto& [n, c] : r.graphs_per_n) os << "  n = " << n << ": " << c << "\n";
  for (const auto& f : r.equality_witnesses) {
    os << "  equality " << f.graph6 << " (" << f.note << ") ratio " << interval_text(f.ratio) << "\n";
  }
  for (const auto& f : r.violations) {
    os << "  VIOLATION " << f.graph6 << ": " << f.note << ", ratio " << interval_text(f.ratio) << " bound "
       << interval_text(f.bound) << "\n";
  }
  for (const auto& f : r.undecidable) os << "  UNDECIDABLE " << f.graph6 << ": " << f.note << "\n";
  if (r.max_ratio_graph) {
    os << "  max ratio " << r.max_ratio_graph->graph6 << " " << interval_text(r.max_ratio_graph->ratio) << "\n";
  }
  os << (r.passed() ? "PASS" : "FAIL") << "\n";
  if (!r.violations.empty()) return kFailure;
  if (!r.undecidable.empty()) return kUndecidable;
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"q(G)/R(G) verification toolkit"};
  app.require_subcommand(1);

  std::string json_path;

  auto* verify = app.add_subcommand("verify", "check q/R against the conjectured bound");
  std::string n_text;
  bool exhaustive = false;
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  std::string m_text;
  std::string verify_graph6;
  std::string claim;
  verify->add_option("--n", n_text, "order or range, e.g. 7 or 4..9");
  verify->add_flag("--exhaustive", exhaustive, "every connected graph up to isomorphism");
  verify->add_option("--samples", samples, "seeded random connected graphs per n");
  verify->add_option("--seed", seed, "sampling seed");
  verify->add_option("--m", m_text, "edge-count range for sampling");
  verify->add_option("--graph6", verify_graph6, "graph6 file (or -) to check instead");
  verify->add_option("--claim", claim, "family every graph in --graph6 is claimed to be an equality witness of");
  verify->add_option("--json", json_path, "write a JSON report (- for stdout)");

  auto* invariants = app.add_subcommand("invariants", "print the invariant report of a graph");
  std::string inv_graph6;
  std::vector<std::string> family;
  invariants->add_option("--graph6", inv_graph6, "graph6 file or -");
  invariants->add_option("--family", family, "family name and order, e.g. star 13")->expected(2);
  invariants->add_option("--json", json_path, "write JSON reports (- for stdout)");

  auto* certify = app.add_subcommand("certify", "run the inequality certificates");
  std::string lemma;
  int n_max = 40;
  int chain_n_max = 100;
  int min2_n_min = 12;
  double perturb_f = 0.0;
  certify->add_option("--lemma", lemma, "single lemma id");
  certify->add_option("--n-max", n_max, "upper n for the h/l grids")->capture_default_str();
  certify->add_option("--chain-n-max", chain_n_max, "upper n for the rational chains")->capture_default_str();
  certify->add_option("--min2-n-min", min2_n_min, "lower n for the min2 grid")->capture_default_str();
  certify->add_option("--perturb-f", perturb_f, "test hook: add this to every f value");
  certify->add_option("--json", json_path, "write JSON certificates (- for stdout)");

  auto* extremal = app.add_subcommand("extremal", "largest q/R over all connected graphs on n vertices");
  int extremal_n = 0;
  extremal->add_option("--n", extremal_n, "order (4..10)")->required();
  extremal->add_option("--json", json_path, "write a JSON report (- for stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    JsonSink sink(json_path);

    if (*verify) {
      rqv::VerifyRunConfig cfg;
      if (!verify_graph6.empty()) {
        cfg.graphs = read_graphs(verify_graph6);
        cfg.mode = cfg.graphs.size() == 1 && claim.empty() ? rqv::RunMode::single : rqv::RunMode::stream;
        if (!claim.empty()) cfg.claimed_family = rqv::parse_family(claim);
      } else {
        if (n_text.empty()) throw rqv::InputError("verify needs --n or --graph6");
        if (!claim.empty()) throw rqv::InputError("--claim applies to --graph6 input");
        cfg.n = rqv::parse_int_range(n_text);
        if (exhaustive == (samples > 0)) throw rqv::InputError("choose exactly one of --exhaustive and --samples");
        if (exhaustive) {
          cfg.mode = rqv::RunMode::exhaustive;
          if (!m_text.empty()) cfg.filter.edges = rqv::parse_int_range(m_text);
        } else {
          cfg.mode = rqv::RunMode::sample;
          cfg.sampler.seed = seed;
          cfg.sampler.count = samples;
          if (!m_text.empty()) cfg.sampler.edges = rqv::parse_int_range(m_text);
        }
      }
      return report_verify(rqv::verify_conjecture(cfg), sink);
    }

    if (*invariants) {
      std::vector<std::pair<std::string, rqv::Graph>> graphs;
      if (!family.empty() == !inv_graph6.empty()) throw rqv::InputError("give exactly one of --graph6 and --family");
      if (!family.empty()) {
        const int n = static_cast<int>(rqv::parse_int_range(family[1]).lo);
        graphs.emplace_back(family[0] + " " + family[1], rqv::make_family(family[0], n));
      } else {
        for (auto& g : read_graphs(inv_graph6)) graphs.emplace_back(rqv::write_graph6(g), std::move(g));
      }
      std::ostream& os = sink.to_stdout() ? std::cerr : std::cout;
      for (const auto& [label, g] : graphs) {
        const rqv::InvariantReport r = rqv::full_report(g);
        sink.write(rqv::to_json(r));
        os << rqv::render_text(r, label);
      }
      return kOk;
    }

    if (*certify) {
      rqv::CertifyOptions opt;
      opt.hl_n_max = n_max;
      opt.chain_n_max = chain_n_max;
      opt.min2_n_min = min2_n_min;
      opt.f_perturbation = perturb_f;
      std::vector<rqv::LemmaCheck> checks;
      if (lemma.empty()) {
        checks = rqv::certify_all(opt);
      } else {
        checks.push_back(rqv::certify_one(rqv::parse_lemma_id(lemma), opt));
      }
      std::ostream& os = sink.to_stdout() ? std::cerr : std::cout;
      bool failed = false;
      bool undecidable = false;
      for (const auto& c : checks) {
        sink.write(rqv::to_json(c));
        os << std::left << std::setw(22) << rqv::to_string(c.lemma_id) << std::right << std::setw(12)
           << rqv::to_string(c.status) << "  points " << c.evaluated_points << "  worst "
           << interval_text(c.worst_margin) << " at " << rqv::params_json(c.witness).dump() << "\n";
        if (c.first_failure && !c.certified()) os << "    first bad point " << rqv::params_json(*c.first_failure).dump() << "\n";
        failed |= c.status == rqv::CheckStatus::failed;
        undecidable |= c.status == rqv::CheckStatus::undecidable;
      }
      return failed ? kFailure : (undecidable ? kUndecidable : kOk);
    }

    if (*extremal) {
      const rqv::VerifyRunResult r = rqv::find_extremal(extremal_n);
      sink.write(rqv::to_json(r));
      std::ostream& os = sink.to_stdout() ? std::cerr : std::cout;
      os << "n = " << extremal_n << ", " << r.graphs_checked << " connected graphs\n";
      for (std::size_t i = 0; i < r.top.size(); ++i) {
        const auto& f = r.top[i];
        os << "  " << std::setw(2) << i + 1 << ". " << std::left << std::setw(12) << f.graph6 << std::right
           << " m = " << std::setw(2) << f.m << "  q/R " << interval_text(f.ratio) << "\n";
      }
      return r.passed() ? kOk : kFailure;
    }
  } catch (const rqv::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const rqv::NumericalError& e) {
    std::cerr << "numerical error: " << e.what() << "\n";
    return kUndecidable;
  }
  return kOk;
}
