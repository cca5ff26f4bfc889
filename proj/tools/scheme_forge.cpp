// Copyright 2026 The scheme-forge Authors
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

// scheme-forge command line.
//
// Exit status: 0 when every check passes, 1 when a check fails, 2 on a
// usage error.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "scheme_forge/common.hpp"
#include "scheme_forge/cyclotomy.hpp"
#include "scheme_forge/dense_scheme.hpp"
#include "scheme_forge/design.hpp"
#include "scheme_forge/finite_field.hpp"
#include "scheme_forge/fusion.hpp"
#include "scheme_forge/projective.hpp"
#include "scheme_forge/reproduce.hpp"
#include "scheme_forge/translation_scheme.hpp"

namespace sf = scheme_forge;
using nlohmann::json;

namespace {

constexpr int kOk = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// "c0,c1,...,cm", low degree first; the leading 1 may be left off.
std::optional<std::vector<std::uint32_t>> parse_modulus(const std::string& csv, std::uint32_t m) {
  if (csv.empty()) return std::nullopt;
  std::vector<std::uint32_t> c;
  std::stringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      std::size_t used = 0;
      const long v = std::stol(tok, &used);
      if (used != tok.size() || v < 0) throw std::invalid_argument(tok);
      c.push_back(static_cast<std::uint32_t>(v));
    } catch (const std::exception&) {
      throw UsageError("bad modulus coefficient '" + tok + "'");
    }
  }
  if (m != 0 && c.size() == m) c.push_back(1);
  return c;
}

struct LoadedScheme {
  std::string name;  // empty unless a named example
  std::optional<sf::TranslationScheme> scheme;
};

// named | P:M:E[:GROUPSPEC]
LoadedScheme load_scheme(const std::string& spec, std::int64_t a, const std::string& modulus) {
  LoadedScheme out;
  for (const char* n : {"example1", "example2", "example3", "vls"}) {
    if (spec == n) {
      sf::ReproduceOptions opts;
      opts.a = a;
      opts.modulus = parse_modulus(modulus, sf::example_scheme(spec).m);
      out.name = spec;
      out.scheme.emplace(sf::build_example_scheme(spec, opts));
      return out;
    }
  }
  std::vector<std::string> fields;
  std::size_t pos = 0;
  for (int i = 0; i < 3; ++i) {
    const std::size_t colon = spec.find(':', pos);
    fields.push_back(spec.substr(pos, colon == std::string::npos ? std::string::npos : colon - pos));
    if (colon == std::string::npos) {
      pos = std::string::npos;
      break;
    }
    pos = colon + 1;
  }
  if (fields.size() != 3) throw UsageError("scheme must be a named example or P:M:E[:GROUPS], got '" + spec + "'");
  std::uint32_t pme[3];
  for (int i = 0; i < 3; ++i) {
    try {
      pme[i] = static_cast<std::uint32_t>(std::stoul(fields[i]));
    } catch (const std::exception&) {
      throw UsageError("bad number '" + fields[i] + "' in scheme '" + spec + "'");
    }
  }
  const std::string groups = pos == std::string::npos ? std::string() : spec.substr(pos);
  auto field = sf::FieldTable::build(pme[0], pme[1], parse_modulus(modulus, pme[1]));
  auto frame = sf::CyclotomicFrame::build(field, pme[2]);
  out.scheme.emplace(sf::parse_groups(frame, groups));
  return out;
}

void write_output(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot open '" + path + "' for writing");
  f << text;
}

json srg_reports(const sf::TranslationScheme& s) {
  json out = json::array();
  for (std::size_t j = 1; j <= s.relations(); ++j) out.push_back(sf::to_json(sf::srg_check_translation(s, j)));
  return out;
}

// Finds (m, q) with PG(m, q) having the parameters of the extracted design.
std::optional<sf::ProjectiveSpace> matching_pg(const sf::DesignParameters& p) {
  for (std::uint32_t m = 2; m <= 4; ++m)
    for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u, 11u, 13u, 16u}) {
      const auto want = sf::ProjectiveSpace::expected_parameters(m, q);
      if (want == p && static_cast<std::size_t>(want.d) <= sf::ProjectiveSpace::max_points) return sf::pg_space(m, q);
    }
  return std::nullopt;
}

int cmd_field_info(std::uint32_t p, std::uint32_t m, const std::string& modulus) {
  auto f = sf::FieldTable::build(p, m, parse_modulus(modulus, m));
  json j{{"p", p},
         {"m", m},
         {"q", f->order()},
         {"modulus", f->modulus()},
         {"alpha", f->alpha()},
         {"alpha_coefficients", f->coefficients(f->alpha())},
         {"trace_of_one", f->trace(1)}};
  std::cout << j.dump(2) << '\n';
  return kOk;
}

int cmd_periods(std::uint32_t p, std::uint32_t m, std::uint32_t e, const std::string& modulus) {
  auto f = sf::FieldTable::build(p, m, parse_modulus(modulus, m));
  auto frame = sf::CyclotomicFrame::build(f, e);
  json j{{"e", e}, {"class_size", frame->class_size()}};
  if (frame->periods_rational()) {
    j["periods"] = frame->integral_periods();
  } else {
    j["rational"] = false;
    json counts = json::array();
    for (std::uint32_t i = 0; i < e; ++i) counts.push_back(frame->period_counts(i).counts);
    j["trace_counts"] = counts;
  }
  std::cout << j.dump(2) << '\n';
  return kOk;
}

int cmd_scheme_verify(const std::string& spec, std::int64_t a, const std::string& modulus, bool dense) {
  const LoadedScheme ls = load_scheme(spec, a, modulus);
  const auto& s = *ls.scheme;
  json j;
  j["q"] = s.frame().field().order();
  j["groups"] = s.groups();
  bool ok = true;
  try {
    const sf::Eigenmatrix p = sf::translation_eigenmatrix(s);
    j["eigenmatrix"] = sf::to_json(p.entries());
    j["multiplicities"] = p.multiplicities();
    j["pseudocyclic"] = sf::is_pseudocyclic(p);
    j["srg"] = srg_reports(s);
  } catch (const sf::Error& ex) {
    ok = false;
    j["error"] = ex.what();
  }
  if (dense) {
    if (s.frame().field().order() > sf::DenseScheme::max_points)
      throw UsageError("--dense needs q <= " + std::to_string(sf::DenseScheme::max_points));
    const sf::DenseScheme ds = sf::dense_materialize(s);
    const sf::DenseVerification v = sf::verify_scheme_dense(ds);
    json dj{{"ok", v.ok}};
    if (!v.ok) dj["failure"] = v.failure;
    json srg = json::array();
    for (std::size_t r = 1; r <= ds.classes(); ++r) {
      const sf::DenseSrgCheck c = sf::dense_srg_check(ds, r);
      json cj{{"relation", r}, {"strongly_regular", c.strongly_regular}};
      if (c.strongly_regular)
        cj["parameters"] = {c.parameters.n, c.parameters.k, c.parameters.lambda, c.parameters.mu};
      srg.push_back(cj);
    }
    dj["srg"] = srg;
    j["dense"] = dj;
    ok = ok && v.ok;
  }
  j["status"] = ok ? "PASS" : "FAIL";
  std::cout << j.dump(2) << '\n';
  return ok ? kOk : kFail;
}

json partition_json(const sf::FusionPartition& part) { return part.parts(); }

int cmd_fusion(const std::string& spec, const std::string& partition, std::int64_t a, const std::string& modulus) {
  const LoadedScheme ls = load_scheme(spec, a, modulus);
  const sf::Eigenmatrix p = sf::translation_eigenmatrix(*ls.scheme);
  json j;
  j["scheme"] = spec;
  bool ok = false;
  try {
    if (!partition.empty() && partition.front() == '[') {
      std::vector<std::vector<std::size_t>> parts;
      try {
        parts = json::parse(partition).get<std::vector<std::vector<std::size_t>>>();
      } catch (const json::exception& ex) {
        throw UsageError(std::string("bad partition JSON: ") + ex.what());
      }
      const bool has_zero = !parts.empty() && parts.front() == std::vector<std::size_t>{0};
      const sf::FusionPartition part = has_zero ? sf::FusionPartition(parts, p.classes())
                                                : sf::FusionPartition::from_nontrivial(parts, p.classes());
      const sf::FusionResult r = sf::bannai_muzychuk(p, part);
      j["partition"] = partition_json(part);
      j["row_classes"] = r.row_classes;
      if (r.ok) j["fused"] = sf::to_json(r.fused->entries());
      if (!r.diagnostic.empty()) j["diagnostic"] = r.diagnostic;
      ok = r.ok;
    } else if (partition.rfind("named:", 0) == 0) {
      const std::string kind = partition.substr(6);
      const sf::Theorem1Decomposition t = sf::extract_design(p);
      if (kind == "block" || kind.rfind("block=", 0) == 0) {
        const std::size_t b = kind == "block" ? 0 : std::stoul(kind.substr(6));
        const sf::BlockFusion bf = sf::design_block_fusion(t, b);
        j["partition"] = partition_json(bf.partition);
        j["fused"] = sf::to_json(bf.class3.entries());
        j["fused_class2"] = sf::to_json(bf.class2.entries());
        ok = true;
      } else if (kind.rfind("line=", 0) == 0 || kind == "spread") {
        auto pg = matching_pg(t.design.parameters());
        if (!pg) throw sf::Error("extracted design has no projective-space parameters");
        const sf::PgAlignment align = sf::align_to_pg(t, *pg);
        const sf::GeometricFusion g = kind == "spread"
                                          ? sf::spread_fusion(t, *pg, align, sf::regular_spread(*pg))
                                          : sf::line_fusion(t, *pg, align, std::stoul(kind.substr(5)));
        j["partition"] = partition_json(g.partition);
        j["fused"] = sf::to_json(g.fused.entries());
        if (kind == "spread") j["amorphous"] = sf::is_amorphous(g.fused).amorphous;
        ok = true;
      } else {
        throw UsageError("unknown named partition '" + partition + "'");
      }
    } else {
      throw UsageError("partition must be JSON or named:block[=B] | named:line=ID | named:spread");
    }
  } catch (const UsageError&) {
    throw;
  } catch (const std::invalid_argument& ex) {
    throw UsageError(ex.what());
  } catch (const std::out_of_range& ex) {
    throw UsageError(ex.what());
  } catch (const std::exception& ex) {
    j["diagnostic"] = ex.what();
  }
  j["criterion"] = ok ? "PASS" : "FAIL";
  std::cout << j.dump(2) << '\n';
  return ok ? kOk : kFail;
}

json incidence_rows(const sf::Incidence& m) { return sf::to_json(m); }

int cmd_design_extract(const std::string& spec, std::int64_t a, const std::string& modulus) {
  const LoadedScheme ls = load_scheme(spec, a, modulus);
  const sf::Theorem1Decomposition t = sf::extract_design(sf::translation_eigenmatrix(*ls.scheme));
  const auto order = sf::circulant_row_order(t.design.incidence());
  json j{{"d", t.design.points()},
         {"k", t.design.block_size()},
         {"lambda", t.design.lambda()},
         {"circulant", order.has_value()},
         {"incidence_value", t.marked},
         {"other_value", t.unmarked},
         {"both_orientations", t.both_orientations},
         {"incidence", incidence_rows(order ? sf::permute_rows(t.design.incidence(), *order) : t.design.incidence())}};
  std::cout << j.dump(2) << '\n';
  return kOk;
}

int cmd_design_match_pg(std::uint32_t m, std::uint32_t q, std::string spec, std::int64_t a,
                        const std::string& modulus) {
  const sf::ProjectiveSpace pg = sf::pg_space(m, q);
  if (spec.empty()) {
    if (q != 2) throw UsageError("--scheme is required unless q = 2");
    spec = m == 3 ? "example1" : m == 2 ? "example3" : "";
    if (spec.empty()) throw UsageError("--scheme is required for this m");
  }
  const LoadedScheme ls = load_scheme(spec, a, modulus);
  const sf::Theorem1Decomposition t = sf::extract_design(sf::translation_eigenmatrix(*ls.scheme));
  const auto iso = sf::design_isomorphic(t.design, pg.design());
  json j{{"scheme", spec}, {"m", m}, {"q", q}, {"isomorphic", iso.has_value()}};
  if (iso) {
    j["point_map"] = iso->point_map;
    j["block_map"] = iso->block_map;
  }
  std::cout << j.dump(2) << '\n';
  return iso ? kOk : kFail;
}

int cmd_reproduce(const std::string& target, std::int64_t a, const std::string& modulus, const std::string& format,
                  const std::string& out, bool timing) {
  sf::ReproduceOptions opts;
  opts.a = a;
  if (!modulus.empty()) {
    std::uint32_t m = 0;
    if (target == "example1" || target == "example2" || target == "example3" || target == "vls")
      m = sf::example_scheme(target).m;
    opts.modulus = parse_modulus(modulus, m);
  }
  const sf::ReportFormat fmt = sf::parse_report_format(format);
  const sf::ReproductionReport rep = sf::reproduce(target, opts);
  write_output(sf::emit(rep, fmt, timing), out);
  return rep.passed() ? kOk : kFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cyclotomic association schemes, eigenmatrices, designs and fusions"};
  app.name("scheme-forge");
  app.require_subcommand(1);

  std::uint32_t p = 0, m = 0, e = 0, q = 0;
  std::int64_t a = 1;
  std::string modulus, groups, spec, partition, target, format = "json", out;
  bool dense = false, timing = false;

  auto* field_info = app.add_subcommand("field-info", "Field order, modulus, primitive element and Tr(1)");
  field_info->add_option("--p", p, "characteristic")->required();
  field_info->add_option("--m", m, "extension degree")->required();
  field_info->add_option("--modulus", modulus, "c0,...,cm (low degree first)");

  auto* periods = app.add_subcommand("periods", "Gaussian periods of the index-e cyclotomic classes");
  periods->add_option("--p", p)->required();
  periods->add_option("--m", m)->required();
  periods->add_option("--e", e)->required();
  periods->add_option("--modulus", modulus);

  auto* scheme = app.add_subcommand("scheme", "Translation scheme checks");
  scheme->require_subcommand(1);
  auto* verify = scheme->add_subcommand("verify", "Eigenmatrix and SRG report of a grouped cyclotomic scheme");
  verify->add_option("--p", p)->required();
  verify->add_option("--m", m)->required();
  verify->add_option("--e", e)->required();
  verify->add_option("--groups", groups, "cyclic:STEP,COUNT,STRIDE,a | JSON partition | singletons");
  verify->add_option("--modulus", modulus);
  verify->add_flag("--dense", dense, "cross-check with the brute-force oracle (q <= 4096)");

  auto* fusion = app.add_subcommand("fusion", "Fusion criterion on a partition of the relations");
  fusion->add_option("--scheme", spec, "example1|example2|example3|vls or P:M:E[:GROUPS]")->required();
  fusion->add_option("--partition", partition, "JSON | named:block[=B] | named:line=ID | named:spread")->required();
  fusion->add_option("--a", a);
  fusion->add_option("--modulus", modulus);

  auto* design = app.add_subcommand("design", "Symmetric designs in the principal part");
  design->require_subcommand(1);
  auto* extract = design->add_subcommand("extract", "Extract the design from a scheme");
  extract->add_option("--scheme", spec)->required();
  extract->add_option("--a", a);
  extract->add_option("--modulus", modulus);
  auto* match_pg = design->add_subcommand("match-pg", "Isomorphism test against PG(m, q)");
  match_pg->add_option("--m", m)->required();
  match_pg->add_option("--q", q)->required();
  match_pg->add_option("--scheme", spec);
  match_pg->add_option("--a", a);
  match_pg->add_option("--modulus", modulus);

  auto* repro = app.add_subcommand("reproduce", "Rebuild a published example end to end");
  repro->add_option("target", target)->required()->check(CLI::IsMember(sf::reproduction_targets()));
  repro->add_option("--a", a, "unit multiplier in the union rule");
  repro->add_option("--modulus", modulus);
  repro->add_option("--format", format)->check(CLI::IsMember({"json", "tsv", "markdown"}));
  repro->add_option("--out", out, "output file (default stdout)");
  repro->add_flag("--timing", timing, "include per-stage wall-clock times");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& ex) {
    const int rc = app.exit(ex);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (*field_info) return cmd_field_info(p, m, modulus);
    if (*periods) return cmd_periods(p, m, e, modulus);
    if (*verify) {
      const std::string s = std::to_string(p) + ":" + std::to_string(m) + ":" + std::to_string(e) +
                            (groups.empty() ? "" : ":" + groups);
      return cmd_scheme_verify(s, a, modulus, dense);
    }
    if (*fusion) return cmd_fusion(spec, partition, a, modulus);
    if (*extract) return cmd_design_extract(spec, a, modulus);
    if (*match_pg) return cmd_design_match_pg(m, q, spec, a, modulus);
    if (*repro) return cmd_reproduce(target, a, modulus, format, out, timing);
  } catch (const std::invalid_argument& ex) {
    std::cerr << "scheme-forge: " << ex.what() << '\n';
    return kUsage;
  } catch (const std::exception& ex) {
    std::cerr << "scheme-forge: " << ex.what() << '\n';
    return kFail;
  }
  return kUsage;
}
