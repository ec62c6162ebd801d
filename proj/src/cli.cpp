// Copyright 2026 The pstlab Authors
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

#include "pstlab/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cctype>
#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <numbers>
#include <sstream>

#include "pstlab/cubelike.hpp"
#include "pstlab/errors.hpp"
#include "pstlab/feder.hpp"
#include "pstlab/graph.hpp"
#include "pstlab/graph_json.hpp"
#include "pstlab/partition.hpp"
#include "pstlab/spectral.hpp"
#include "pstlab/suites.hpp"
#include "pstlab/symmetry.hpp"
#include "pstlab/walk.hpp"

namespace pstlab::cli {
namespace {

class ExpressionParser {
 public:
  explicit ExpressionParser(std::string_view text) : text_(text) {}

  double parse() {
    const double v = sum();
    skipSpace();
    if (pos_ != text_.size()) fail();
    return v;
  }

 private:
  double sum() {
    double v = product();
    for (;;) {
      if (accept('+')) v += product();
      else if (accept('-')) v -= product();
      else return v;
    }
  }

  double product() {
    double v = unary();
    for (;;) {
      if (accept('*')) v *= unary();
      else if (accept('/')) v /= unary();
      else return v;
    }
  }

  double unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return atom();
  }

  double atom() {
    skipSpace();
    if (accept('(')) {
      const double v = sum();
      expect(')');
      return v;
    }
    if (keyword("pi")) return std::numbers::pi;
    if (keyword("sqrt")) {
      expect('(');
      const double v = sum();
      expect(')');
      if (v < 0) throw InputError("number: sqrt of a negative value in '" + std::string(text_) + "'");
      return std::sqrt(v);
    }
    double v = 0;
    const char* begin = text_.data() + pos_;
    const auto [ptr, ec] = std::from_chars(begin, text_.data() + text_.size(), v);
    if (ec != std::errc{} || ptr == begin) fail();
    pos_ += static_cast<std::size_t>(ptr - begin);
    return v;
  }

  void skipSpace() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skipSpace();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail();
  }

  bool keyword(std::string_view word) {
    if (text_.substr(pos_, word.size()) != word) return false;
    pos_ += word.size();
    return true;
  }

  [[noreturn]] void fail() const {
    throw InputError("cannot parse number '" + std::string(text_) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

struct Output {
  std::string path;
  bool force = false;
};

void emit(const Output& target, const std::string& content, std::ostream& out) {
  if (target.path.empty()) {
    out << content;
    return;
  }
  if (std::filesystem::exists(target.path) && !target.force)
    throw InputError("refusing to overwrite '" + target.path + "' (use --force)");
  std::ofstream file(target.path, std::ios::binary | std::ios::trunc);
  if (!file) throw InputError("cannot write '" + target.path + "'");
  file << content;
  if (!file) throw InputError("write failed for '" + target.path + "'");
}

Graph loadGraph(const std::string& path) { return io::graphFromJson(io::readFile(path)); }

double number(const std::string& text) {
  const double v = parseNumber(text);
  if (!std::isfinite(v)) throw InputError("non-finite number '" + text + "'");
  return v;
}

std::size_t count(const std::string& text) {
  std::size_t v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size())
    throw InputError("expected a non-negative integer, got '" + text + "'");
  return v;
}

std::vector<long long> offsetList(const std::string& text) {
  std::vector<long long> values;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) values.push_back(static_cast<long long>(count(item)));
  return values;
}

class Params {
 public:
  explicit Params(const std::vector<std::string>& raw) {
    for (const auto& kv : raw) {
      const auto eq = kv.find('=');
      if (eq == std::string::npos || eq == 0)
        throw InputError("--param expects key=value, got '" + kv + "'");
      if (!values_.emplace(kv.substr(0, eq), kv.substr(eq + 1)).second)
        throw InputError("duplicate --param '" + kv.substr(0, eq) + "'");
    }
  }

  const std::string& get(const std::string& key) {
    const auto it = values_.find(key);
    if (it == values_.end()) throw InputError("missing --param " + key + "=...");
    used_.insert(key);
    return it->second;
  }

  std::optional<std::string> find(const std::string& key) {
    const auto it = values_.find(key);
    if (it == values_.end()) return std::nullopt;
    used_.insert(key);
    return it->second;
  }

  void finish() const {
    for (const auto& [key, value] : values_)
      if (!used_.count(key)) throw InputError("unknown --param '" + key + "' for this family");
  }

 private:
  std::map<std::string, std::string> values_;
  std::set<std::string> used_;
};

Graph buildFamily(const std::string& name, Params& p) {
  Graph g = Graph::empty(1);
  if (name == "complete") g = build(family::Complete{count(p.get("n"))});
  else if (name == "path") g = build(family::Path{count(p.get("n"))});
  else if (name == "cycle") g = build(family::Cycle{count(p.get("n"))});
  else if (name == "hypercube") g = build(family::Hypercube{static_cast<unsigned>(count(p.get("d")))});
  else if (name == "circulant")
    g = build(family::Circulant{CirculantSpec::symmetric(count(p.get("n")), offsetList(p.get("s")))});
  else if (name == "cubelike") {
    CubelikeSpec spec = cubelike::parseGenerators(p.get("s"));
    if (auto d = p.find("d"); d && count(*d) != spec.d)
      throw InputError("cubelike: d does not match generator length");
    g = build(family::Cubelike{spec});
  } else if (name == "p4") g = build(family::WeightedP4{number(p.get("a")), number(p.get("b"))});
  else if (name == "p5") g = build(family::WeightedP5{number(p.get("a")), number(p.get("b"))});
  else if (name == "christandl") g = build(family::ChristandlPath{count(p.get("n"))});
  else if (name == "godsil") {
    const auto m = static_cast<unsigned>(count(p.get("m")));
    std::optional<CirculantSpec> conn;
    if (auto s = p.find("s")) conn = CirculantSpec::symmetric(godsilFamily(m).n, offsetList(*s));
    g = godsilFamily(m, conn).graph;
  } else
    throw InputError("unknown family '" + name +
                     "' (complete, path, cycle, hypercube, circulant, cubelike, p4, p5, "
                     "christandl, godsil)");
  p.finish();
  return g;
}

std::string cellMapJson(const QuotientResult& q) {
  nlohmann::ordered_json j;
  j["cell_of"] = q.cellMap.labels();
  j["cell_sizes"] = q.cellMap.cellSizes();
  return j.dump(2) + "\n";
}

std::string formatPermutation(const VertexPermutation& p) {
  std::string s = "[";
  for (std::size_t i = 0; i < p.image.size(); ++i) s += (i ? ", " : "") + std::to_string(p.image[i]);
  return s + "]";
}

// A partition argument is a JSON file or one of the keywords below.
Partition partitionArg(const std::string& spec, const Graph& g, unsigned power) {
  const std::size_t n = g.order();
  if (spec == "orbit") return orbitPartition(g, power).partition;
  std::size_t size = 1;
  for (unsigned i = 0; i < power; ++i) size *= n;
  if (spec == "singletons") return Partition::singletons(size);
  if (spec == "unit") return Partition::unit(size);
  return io::partitionFromJson(io::readFile(spec), size);
}

struct Common {
  std::string graph;
  Output out;
};

void addOut(CLI::App* cmd, Output& o) {
  cmd->add_option("--out,-o", o.path, "Output path (default stdout)");
  cmd->add_flag("--force", o.force, "Overwrite an existing output file");
}

}  // namespace

double parseNumber(std::string_view text) { return ExpressionParser(text).parse(); }

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"pstlab: perfect state transfer on graphs and their quotients"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  int status = kOk;
  std::function<void()> action;
  Output output;
  std::string graphPath, otherPath, partitionPath, family, suite, generators, fromText, toText,
      timeText, tolText, factorText, tmaxText, csvPath, peaksPath, mapPath, pi1Text, pi2Text;
  std::vector<std::string> params, graphPaths;
  std::vector<std::size_t> seed, swap;
  std::size_t from = 0, to = 0, steps = 10000, k = 1, m1 = 1, m2 = 1, power = 0;
  std::uint64_t suiteSeed = suites::kDefaultSeed;
  bool json = false;

  auto needGraph = [&](CLI::App* cmd) {
    cmd->add_option("--graph,-g", graphPath, "Graph JSON file")->required();
  };
  auto needEndpoints = [&](CLI::App* cmd) {
    cmd->add_option("--from", from, "Source vertex")->required();
    cmd->add_option("--to", to, "Target vertex")->required();
  };

  auto* buildCmd = app.add_subcommand("build", "Build a graph family");
  buildCmd->add_option("--family,-f", family, "Family name")->required();
  buildCmd->add_option("--param,-p", params, "Family parameter key=value");
  addOut(buildCmd, output);
  buildCmd->callback([&] {
    Params p(params);
    emit(output, io::toJson(buildFamily(family, p)), out);
  });

  auto* productCmd = app.add_subcommand("product", "Cartesian product or power");
  productCmd->add_option("--graph,-g", graphPaths, "Factor graph JSON (repeatable)")->required();
  productCmd->add_option("--power,-k", power, "Cartesian power of a single factor");
  addOut(productCmd, output);
  productCmd->callback([&] {
    std::vector<Graph> gs;
    for (const auto& path : graphPaths) gs.push_back(loadGraph(path));
    Graph result = gs.front();
    if (power > 0) {
      if (gs.size() != 1) throw InputError("product: --power takes exactly one --graph");
      result = cartesianPower(gs.front(), static_cast<unsigned>(power));
    } else {
      if (gs.size() < 2) throw InputError("product: give two or more --graph files or --power");
      for (std::size_t i = 1; i < gs.size(); ++i) result = cartesianProduct(result, gs[i]);
    }
    emit(output, io::toJson(result), out);
  });

  auto* joinCmd = app.add_subcommand("join", "Join of two graphs");
  joinCmd->add_option("--graph,-g", graphPaths, "The two graphs")->required()->expected(2);
  addOut(joinCmd, output);
  joinCmd->callback([&] {
    emit(output, io::toJson(join(loadGraph(graphPaths[0]), loadGraph(graphPaths[1]))), out);
  });

  auto* complementCmd = app.add_subcommand("complement", "Complement of a simple graph");
  needGraph(complementCmd);
  addOut(complementCmd, output);
  complementCmd->callback([&] { emit(output, io::toJson(complement(loadGraph(graphPath))), out); });

  auto* scaleCmd = app.add_subcommand("scale", "Multiply all weights by a positive factor");
  needGraph(scaleCmd);
  scaleCmd->add_option("--factor,-c", factorText, "Factor, e.g. 1/sqrt(2)")->required();
  addOut(scaleCmd, output);
  scaleCmd->callback([&] {
    emit(output, io::toJson(scale(loadGraph(graphPath), number(factorText))), out);
  });

  auto partitionFor = [&](const Graph& g) {
    if (!partitionPath.empty() && !seed.empty())
      throw InputError("give either --partition or --seed, not both");
    if (!seed.empty()) return seededPartition(g, seed[0], seed[1]);
    if (!partitionPath.empty()) return io::partitionFromJson(io::readFile(partitionPath), g.order());
    throw InputError("a --partition file or --seed a b is required");
  };

  auto* quotientCmd = app.add_subcommand("quotient", "Quotient by an equitable partition");
  needGraph(quotientCmd);
  quotientCmd->add_option("--partition", partitionPath, "Partition JSON");
  quotientCmd->add_option("--seed", seed, "Seed vertices a b for the coarsest equitable refinement")
      ->expected(2);
  quotientCmd->add_option("--cell-map", mapPath, "Write the vertex-to-cell map here");
  addOut(quotientCmd, output);
  quotientCmd->callback([&] {
    const Graph g = loadGraph(graphPath);
    const QuotientResult q = quotient(g, partitionFor(g));
    if (!mapPath.empty()) emit({mapPath, output.force}, cellMapJson(q), out);
    emit(output, io::toJson(q.quotient), out);
  });

  auto* refineCmd = app.add_subcommand("refine", "Coarsest equitable refinement");
  needGraph(refineCmd);
  refineCmd->add_option("--partition", partitionPath, "Initial partition JSON (default: unit)");
  refineCmd->add_option("--seed", seed, "Seed vertices a b as singletons")->expected(2);
  addOut(refineCmd, output);
  refineCmd->callback([&] {
    const Graph g = loadGraph(graphPath);
    const Partition p = (partitionPath.empty() && seed.empty())
                            ? refine(g, Partition::unit(g.order()))
                            : (seed.empty() ? refine(g, partitionFor(g)) : partitionFor(g));
    emit(output, io::toJson(p), out);
  });

  auto* fidelityCmd = app.add_subcommand("fidelity", "Transfer fidelity |<b|U(t)|a>|");
  needGraph(fidelityCmd);
  needEndpoints(fidelityCmd);
  fidelityCmd->add_option("--time,-t", timeText, "Time in radians")->required();
  fidelityCmd->callback([&] {
    out << io::formatReal(fidelity(loadGraph(graphPath), from, to, number(timeText))) << '\n';
  });

  auto* scanCmd = app.add_subcommand("scan", "Fidelity scan with peak refinement");
  needGraph(scanCmd);
  needEndpoints(scanCmd);
  scanCmd->add_option("--tmax", tmaxText, "End of the time window")->required();
  scanCmd->add_option("--steps", steps, "Grid points");
  scanCmd->add_option("--csv", csvPath, "Write the grid as CSV");
  scanCmd->add_flag("--force", output.force, "Overwrite an existing CSV file");
  scanCmd->callback([&] {
    const auto series = fidelityScan(loadGraph(graphPath), from, to, number(tmaxText), steps);
    if (!csvPath.empty()) emit({csvPath, output.force}, toCsv(series), out);
    out << peaksToJson(series.peaks);
    const auto best = series.best();
    if (!best || best->fidelity < 1.0 - kPstTolerance) status = kFalse;
  });

  auto* pstCmd = app.add_subcommand("pst-verify", "Check PST at a given time");
  needGraph(pstCmd);
  needEndpoints(pstCmd);
  pstCmd->add_option("--time,-t", timeText, "Time in radians")->required();
  pstCmd->add_option("--tol", tolText, "Fidelity tolerance (default 1e-8)");
  pstCmd->callback([&] {
    const double tol = tolText.empty() ? kPstTolerance : number(tolText);
    const bool ok = verifyPst(loadGraph(graphPath), from, to, number(timeText), tol);
    out << (ok ? "true" : "false") << '\n';
    if (!ok) status = kFalse;
  });

  auto* federCmd = app.add_subcommand("feder", "k-boson secondary graph F(G,k)");
  needGraph(federCmd);
  federCmd->add_option("-k,--bosons", k, "Number of bosons")->required();
  federCmd->add_option("--map", mapPath, "Write the occupation-vector map here");
  addOut(federCmd, output);
  federCmd->callback([&] {
    const FederGraph f = federGraph(loadGraph(graphPath), static_cast<unsigned>(k));
    if (!mapPath.empty()) {
      nlohmann::json j = nlohmann::json::array();
      for (std::size_t i = 0; i < f.vertices.size(); ++i)
        j.push_back({{"occupation", f.vertices[i].counts}, {"vertex", i}});
      emit({mapPath, output.force}, j.dump(2) + "\n", out);
    }
    emit(output, io::toJson(f.graph), out);
  });

  auto* orbitCmd = app.add_subcommand("orbit-quotient", "Quotient of G^k by S_k orbits");
  needGraph(orbitCmd);
  orbitCmd->add_option("-k,--power", k, "Power")->required();
  orbitCmd->add_option("--cell-map", mapPath, "Write the tuple-to-cell map here");
  addOut(orbitCmd, output);
  orbitCmd->callback([&] {
    const Graph g = loadGraph(graphPath);
    const auto orbit = orbitPartition(g, static_cast<unsigned>(k));
    const QuotientResult q = quotient(cartesianPower(g, static_cast<unsigned>(k)), orbit.partition);
    if (!mapPath.empty()) {
      nlohmann::ordered_json j;
      j["keys"] = orbit.keys;
      j["cell_of"] = q.cellMap.labels();
      emit({mapPath, output.force}, j.dump(2) + "\n", out);
    }
    emit(output, io::toJson(q.quotient), out);
  });

  auto* composeCmd = app.add_subcommand("compose", "Check (G^m1/pi1)^m2/pi2 against G^(m1 m2)/pi3");
  needGraph(composeCmd);
  composeCmd->add_option("--m1", m1, "First power")->required();
  composeCmd->add_option("--pi1", pi1Text, "orbit | singletons | unit | partition JSON")->required();
  composeCmd->add_option("--m2", m2, "Second power")->required();
  composeCmd->add_option("--pi2", pi2Text, "orbit | singletons | unit | partition JSON")->required();
  composeCmd->callback([&] {
    const Graph g = loadGraph(graphPath);
    const Partition pi1 = partitionArg(pi1Text, g, static_cast<unsigned>(m1));
    const Graph inner = quotient(cartesianPower(g, static_cast<unsigned>(m1)), pi1).quotient;
    const Partition pi2 = partitionArg(pi2Text, inner, static_cast<unsigned>(m2));
    const auto c = composeQuotients(g, static_cast<unsigned>(m1), pi1, static_cast<unsigned>(m2), pi2);
    out << "residual " << io::formatReal(c.residual) << "\ncells " << c.composed.cellCount()
        << "\nequitable " << (c.composedEquitable ? "true" : "false") << '\n';
    if (!c.matches) status = kFalse;
  });

  auto* cubeCmd = app.add_subcommand("cubelike", "Predict and certify PST on X(Z_2^d, S)");
  cubeCmd->add_option("--generators,-s", generators, "Comma-separated bit strings")->required();
  cubeCmd->callback([&] {
    const CubelikeSpec spec = cubelike::parseGenerators(generators);
    const auto c = cubelike::certify(spec);
    out << cubelike::certificateToJson(spec, c);
    if (!c.certified || !c.prediction) status = kFalse;
  });

  auto* autCmd = app.add_subcommand("aut", "Automorphism group order or a vertex swap");
  needGraph(autCmd);
  autCmd->add_option("--swap", swap, "Look for an automorphism mapping a to b")->expected(2);
  autCmd->callback([&] {
    const Graph g = loadGraph(graphPath);
    if (!swap.empty()) {
      const auto p = findSwap(g, swap[0], swap[1]);
      out << (p ? "true" : "false") << '\n';
      if (p) out << formatPermutation(*p) << '\n';
      else status = kFalse;
      return;
    }
    const auto group = automorphisms(g);
    out << "order " << group.order << (group.complete ? "" : " (enumeration truncated)") << '\n';
  });

  auto* isoCmd = app.add_subcommand("iso", "Isomorphism test");
  isoCmd->add_option("--graph,-g", graphPaths, "The two graphs")->required()->expected(2);
  isoCmd->callback([&] {
    const auto p = findIsomorphism(loadGraph(graphPaths[0]), loadGraph(graphPaths[1]));
    out << (p ? "true" : "false") << '\n';
    if (p) out << formatPermutation(*p) << '\n';
    else status = kFalse;
  });

  auto* triCmd = app.add_subcommand("triangles", "Per-vertex triangle counts");
  needGraph(triCmd);
  triCmd->callback([&] {
    const Graph g = loadGraph(graphPath);
    const auto census = triangleCensus(g);
    nlohmann::ordered_json j;
    j["census"] = census;
    j["total"] = triangleCount(g);
    out << j.dump() << '\n';
  });

  auto* verifyCmd = app.add_subcommand("verify", "Run a named verification suite");
  verifyCmd->add_option("--suite", suite, "Suite name")
      ->required()
      ->check(CLI::IsMember(suites::names()));
  verifyCmd->add_option("--seed", suiteSeed, "Seed for sampled checks");
  verifyCmd->add_flag("--json", json, "Emit the report as JSON");
  addOut(verifyCmd, output);
  verifyCmd->callback([&] {
    const auto report = suites::run(suite, suiteSeed);
    emit(output, json ? report.toJson() : report.toText(), out);
    if (!report.passed()) status = kFalse;
  });

  try {
    std::vector<std::string> args;
    for (int i = argc - 1; i >= 1; --i) args.emplace_back(argv[i]);
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const NumericError& e) {
    err << "numeric error: " << e.what() << '\n';
    return kNumericError;
  } catch (const PreconditionError& e) {
    err << "precondition error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::invalid_argument& e) {
    err << "input error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kNumericError;
  }
  return status;
}

}  // namespace pstlab::cli
