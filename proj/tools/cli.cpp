// Copyright 2026 The dichoq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <future>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <variant>

#include "CLI11.hpp"
#include "dichoq/dichoq.hpp"

namespace dichoq::cli {

namespace {

struct Failure {
  int code;
  std::string message;
};

struct Outcome {
  Json doc;
  std::string text;  // used instead of doc when non-empty (CSV)
  bool violated = false;
};

struct Options {
  std::vector<std::string> inputs;
  std::string output;
  std::string format = "json";
  std::string rotation;
  std::vector<std::string> factors;
  std::vector<std::string> keeps;
  std::vector<std::string> qs;
  std::uint64_t seed = 0;
  bool no_validate = false;
  bool swapped = false;
  std::size_t dim = 0;
  std::string ensemble = "mixed";
  std::size_t count = 1;
};

int code_for(const std::exception& e) {
  if (dynamic_cast<const ParseError*>(&e)) return kParseError;
  if (dynamic_cast<const NotHermitian*>(&e) || dynamic_cast<const NotTraceOne*>(&e) ||
      dynamic_cast<const NotPositive*>(&e) || dynamic_cast<const InvalidTable*>(&e))
    return kInvalidState;
  if (dynamic_cast<const DimensionMismatch*>(&e) || dynamic_cast<const BadFactorization*>(&e) ||
      dynamic_cast<const InvalidParameter*>(&e) || dynamic_cast<const NotOrthogonal*>(&e) ||
      dynamic_cast<const NotSpecial*>(&e) || dynamic_cast<const IndexOutOfRange*>(&e))
    return kUsageError;
  return kInternalError;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_json(buf.str());
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Failure{kUsageError, "cannot write " + path};
  out << text;
  if (!out) throw Failure{kUsageError, "failed writing " + path};
}

std::size_t parse_size(const std::string& s, const std::string& what) {
  std::size_t pos = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(s, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos == 0 || pos != s.size()) throw Failure{kUsageError, "bad " + what + ": " + s};
  return static_cast<std::size_t>(v);
}

std::vector<std::string> split_commas(const std::vector<std::string>& values) {
  std::vector<std::string> out;
  for (const auto& v : values) {
    std::stringstream ss(v);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(item);
  }
  return out;
}

Factorization parse_factor(const std::string& spec, std::size_t total) {
  const auto comma = spec.find(',');
  if (comma == std::string::npos) throw Failure{kUsageError, "--factor expects n,m, got " + spec};
  const std::size_t n = parse_size(spec.substr(0, comma), "--factor");
  const std::size_t m = parse_size(spec.substr(comma + 1), "--factor");
  return Factorization(total, n, m);
}

std::vector<EntropyParams> parse_qs(const std::vector<std::string>& raw) {
  std::vector<EntropyParams> out;
  const auto items = split_commas(raw);
  if (items.empty()) {
    for (double q : kDefaultTsallisQ) out.push_back(EntropyParams::make(q));
    return out;
  }
  for (const auto& item : items) {
    double q = 0.0;
    std::size_t pos = 0;
    try {
      q = std::stod(item, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos == 0 || pos != item.size()) throw Failure{kUsageError, "bad --q value: " + item};
    out.push_back(EntropyParams::make(q));
  }
  return out;
}

HermitianMatrix read_hermitian(const std::string& path) {
  return make_hermitian(matrix_from_json(read_json_file(path)));
}

Json raw_canonical_table(const PlaneTable& raw) {
  Json planes = Json::array();
  Json p3 = Json::array();
  for (std::size_t j = 0; j + 1 < raw.dim(); ++j)
    p3.push_back(raw.entry(PlaneIndex(j, j + 1, raw.dim())).p3);
  for (const auto& e : raw.entries())
    planes.push_back({{"j", e.plane.j() + 1}, {"k", e.plane.k() + 1}, {"p1", e.p1}, {"p2", e.p2}});
  return Json{{"dim", raw.dim()}, {"p3", std::move(p3)}, {"planes", std::move(planes)}};
}

Outcome do_encode(const std::string& path, const Options& opt) {
  const auto h = read_hermitian(path);
  std::optional<Rotation> rotation;
  if (!opt.rotation.empty()) rotation = rotation_from_json(read_json_file(opt.rotation));
  if (opt.format == "csv" && rotation)
    throw Failure{kUsageError, "--format csv supports canonical tables only"};

  if (opt.no_validate) {
    const auto verdict = check_density(h);
    if (!verdict.valid()) {
      const auto frame = cached_frame(h.dim(), rotation.value_or(Rotation::identity()));
      const auto raw = encode_planes(h.matrix(), *frame);
      Json doc = rotation ? plane_table_to_json(raw) : raw_canonical_table(raw);
      doc["warning"] = {{"message", "input is not a valid state; probabilities are unchecked"},
                        {"min_eigenvalue", verdict.min_eigenvalue},
                        {"trace_deficit", verdict.trace_deficit}};
      if (opt.format == "csv") throw Failure{kUsageError, "--format csv needs a valid state"};
      return {std::move(doc), {}, false};
    }
  }
  const auto rho = validate_density(h);
  if (rotation) return {plane_table_to_json(rotate_table(rho, *rotation)), {}, false};
  const auto table = encode(rho);
  if (opt.format == "csv") return {Json(), table_to_csv(table), false};
  return {table_to_json(table), {}, false};
}

Outcome do_decode(const std::string& path, const Options&) {
  const auto table = table_from_json(read_json_file(path));
  const auto m = decode(table);
  const auto verdict = check_density(m);
  Json doc{{"matrix", matrix_to_json(m.matrix())},
           {"verdict", {{"min_eigenvalue", verdict.min_eigenvalue}, {"valid", verdict.valid()}}}};
  return {std::move(doc), {}, false};
}

Outcome do_audit(const std::string& path, const Options& opt) {
  const auto h = read_hermitian(path);
  const auto verdict = check_density(h);
  if (!verdict.trace_one) {
    std::ostringstream os;
    os << path << ": trace deficit " << verdict.trace_deficit;
    throw Failure{kInvalidState, os.str()};
  }
  if (opt.factors.size() > 1) throw Failure{kUsageError, "audit takes a single --factor"};
  std::optional<Factorization> f;
  if (!opt.factors.empty()) f = parse_factor(opt.factors.front(), h.dim());
  const auto qs = parse_qs(opt.qs);

  InequalityReport report;
  report.add_lower_bound("positivity", verdict.min_eigenvalue, 0.0);
  if (f && f->n() == 2) {
    report.append(det_bounds_check(h, *f));
  } else if (f) {
    report.set_diagnostic("det_bounds_skipped", 1.0);
  }

  if (verdict.positive) {
    const auto rho = validate_density(h);
    if (rho.dim() == 2) report.append(qubit_ball_check(encode(rho)));
    report.append(vn_inequality_suite(rho));
    for (const auto& q : qs)
      for (Axis a : kAxes)
        for (Axis b : kAxes)
          if (a != b) report.append(tsallis_inequality(rho, a, b, q));
    if (f && f->n() == 2) report.append(reduced_state_inequalities(rho, *f, qs));
  } else {
    report.set_diagnostic("entropic_suites_skipped", 1.0);
  }

  const bool ok = report.all_satisfied();
  Json doc{{"dim", h.dim()},
           {"diagnostics", diagnostics_to_json(report)},
           {"inequalities", report_to_json(report)},
           {"satisfied", ok}};
  return {std::move(doc), {}, !ok};
}

Outcome do_reduce(const std::string& path, const Options& opt) {
  const auto rho = validate_density(read_hermitian(path));
  if (opt.factors.empty()) throw Failure{kUsageError, "reduce needs --factor n,m"};
  if (opt.swapped) {
    if (opt.factors.size() != 1) throw Failure{kUsageError, "--swapped takes a single --factor"};
    const auto r = reduce_swapped(rho, parse_factor(opt.factors.front(), rho.dim()));
    return {Json{{"rho1_tilde", matrix_to_json(r.rho1_tilde.matrix())},
                 {"rho2_tilde", matrix_to_json(r.rho2_tilde.matrix())}},
            {},
            false};
  }
  if (!opt.keeps.empty() && opt.keeps.size() != opt.factors.size())
    throw Failure{kUsageError, "give one --keep per --factor"};

  std::vector<ReductionStep> chain;
  std::size_t dim = rho.dim();
  for (std::size_t i = 0; i < opt.factors.size(); ++i) {
    const std::string keep = opt.keeps.empty() ? "first" : opt.keeps[i];
    if (keep != "first" && keep != "second")
      throw Failure{kUsageError, "--keep must be first or second"};
    Factorization f = [&] {
      try {
        return parse_factor(opt.factors[i], dim);
      } catch (const BadFactorization& e) {
        std::ostringstream os;
        os << "reduction step " << i << ": " << e.what();
        throw BadFactorization(os.str());
      }
    }();
    const Keep k = keep == "first" ? Keep::First : Keep::Second;
    chain.push_back({f, k});
    dim = k == Keep::First ? f.n() : f.m();
  }
  return {matrix_to_json(iterate_reduction(rho, chain).matrix()), {}, false};
}

int run_gen(const Options& opt, std::ostream& out) {
  if (opt.dim < 2) throw Failure{kUsageError, "--dim must be >= 2"};
  if (opt.count < 1) throw Failure{kUsageError, "--count must be >= 1"};
  std::optional<Factorization> f;
  if (opt.ensemble == "product") {
    if (opt.factors.size() > 1) throw Failure{kUsageError, "gen takes a single --factor"};
    if (!opt.factors.empty()) {
      f = parse_factor(opt.factors.front(), opt.dim);
    } else {
      const auto all = admissible_factorizations(opt.dim);
      if (all.empty()) throw Failure{kUsageError, "--dim has no factorization for a product state"};
      f = all.front();
    }
  }
  const std::filesystem::path dir = opt.output.empty() ? "." : opt.output;
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw Failure{kUsageError, "cannot create " + dir.string()};

  Json files = Json::array();
  for (std::size_t i = 0; i < opt.count; ++i) {
    const Seed seed{opt.seed + i};
    ComplexMatrix m;
    if (opt.ensemble == "pure") {
      m = random_pure(opt.dim, seed).matrix();
    } else if (opt.ensemble == "mixed") {
      m = random_mixed(opt.dim, seed).matrix();
    } else {
      m = random_product(f->n(), f->m(), seed).state.matrix();
    }
    std::ostringstream name;
    name << opt.ensemble << "_" << opt.dim << "_" << std::setw(4) << std::setfill('0') << i
         << ".json";
    const auto path = dir / name.str();
    write_text_file(path.string(), canonical_dump(fixture_to_json(m, seed, opt.ensemble)));
    files.push_back(path.string());
  }
  out << canonical_dump(Json{{"files", std::move(files)}});
  return kOk;
}

using Handler = Outcome (*)(const std::string&, const Options&);

int run_batch(Handler handler, const Options& opt, std::ostream& out, std::ostream& err) {
  if (opt.inputs.empty()) {
    err << "error: --input is required\n";
    return kUsageError;
  }
  if (opt.format != "json" && opt.inputs.size() > 1) {
    err << "error: --format csv takes a single --input\n";
    return kUsageError;
  }

  auto process = [&](const std::string& path) -> std::variant<Outcome, Failure> {
    try {
      return handler(path, opt);
    } catch (const Failure& f) {
      return f;
    } catch (const Error& e) {
      return Failure{code_for(e), path + ": " + e.what()};
    } catch (const std::exception& e) {
      return Failure{kInternalError, path + ": " + e.what()};
    }
  };

  std::vector<std::variant<Outcome, Failure>> results;
  if (opt.inputs.size() == 1) {
    results.push_back(process(opt.inputs.front()));
  } else {
    std::vector<std::future<std::variant<Outcome, Failure>>> pending;
    for (const auto& path : opt.inputs)
      pending.push_back(std::async(std::launch::async, process, std::cref(path)));
    for (auto& p : pending) results.push_back(p.get());
  }

  bool violated = false;
  Json combined = Json::array();
  std::string text;
  for (auto& r : results) {
    if (auto* f = std::get_if<Failure>(&r)) {
      err << "error: " << f->message << "\n";
      return f->code;
    }
    auto& o = std::get<Outcome>(r);
    violated = violated || o.violated;
    if (!o.text.empty()) {
      text = o.text;
    } else {
      combined.push_back(std::move(o.doc));
    }
  }
  if (text.empty()) text = canonical_dump(opt.inputs.size() == 1 ? combined[0] : combined);

  if (opt.output.empty()) {
    out << text;
  } else {
    try {
      write_text_file(opt.output, text);
    } catch (const Failure& f) {
      err << "error: " << f.message << "\n";
      return f.code;
    }
  }
  return violated ? kInequalityViolated : kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Dichotomic probability representation of qudit density matrices", "dichoq"};
  app.require_subcommand(1);
  Options opt;

  auto add_io = [&](CLI::App* cmd) {
    cmd->add_option("--input,-i", opt.inputs, "Input JSON file(s)")->required();
    cmd->add_option("--output,-o", opt.output, "Output file (default: stdout)");
  };

  auto* encode_cmd = app.add_subcommand("encode", "Density matrix -> dichotomic table");
  add_io(encode_cmd);
  encode_cmd->add_option("--format", opt.format)->check(CLI::IsMember({"json", "csv"}));
  encode_cmd->add_option("--rotation", opt.rotation, "3x3 rotation JSON file");
  encode_cmd->add_flag("--no-validate", opt.no_validate, "Emit probabilities for invalid states");

  auto* decode_cmd = app.add_subcommand("decode", "Dichotomic table -> matrix and verdict");
  add_io(decode_cmd);

  auto* audit_cmd = app.add_subcommand("audit", "Run the inequality suites on a state");
  add_io(audit_cmd);
  audit_cmd->add_option("--factor", opt.factors, "n,m");
  audit_cmd->add_option("--q", opt.qs, "Tsallis q values, comma separated");

  auto* reduce_cmd = app.add_subcommand("reduce", "Partial-trace reductions");
  add_io(reduce_cmd);
  reduce_cmd->add_option("--factor", opt.factors, "n,m (repeat for a chain)")->required();
  reduce_cmd->add_option("--keep", opt.keeps, "first|second, one per --factor");
  reduce_cmd->add_flag("--swapped", opt.swapped, "Emit the exchanged-basis reductions");

  auto* gen_cmd = app.add_subcommand("gen", "Write random-state fixtures");
  gen_cmd->add_option("--dim", opt.dim)->required();
  gen_cmd->add_option("--ensemble", opt.ensemble)->check(CLI::IsMember({"pure", "mixed", "product"}));
  gen_cmd->add_option("--count", opt.count);
  gen_cmd->add_option("--seed", opt.seed);
  gen_cmd->add_option("--output,-o", opt.output, "Output directory");
  gen_cmd->add_option("--factor", opt.factors, "n,m for product states");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kUsageError;
  }

  try {
    if (encode_cmd->parsed()) return run_batch(do_encode, opt, out, err);
    if (decode_cmd->parsed()) return run_batch(do_decode, opt, out, err);
    if (audit_cmd->parsed()) return run_batch(do_audit, opt, out, err);
    if (reduce_cmd->parsed()) return run_batch(do_reduce, opt, out, err);
    return run_gen(opt, out);
  } catch (const Failure& f) {
    err << "error: " << f.message << "\n";
    return f.code;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return code_for(e);
  }
}

}  // namespace dichoq::cli
