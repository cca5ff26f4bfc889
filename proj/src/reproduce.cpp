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

#include "scheme_forge/reproduce.hpp"

#include <chrono>
#include <set>
#include <sstream>

#include "scheme_forge/common.hpp"
#include "scheme_forge/dense_scheme.hpp"
#include "scheme_forge/fusion.hpp"
#include "scheme_forge/projective.hpp"

namespace scheme_forge {

using nlohmann::json;

bool ReproductionReport::passed() const {
  for (const auto& a : assertions)
    if (!a.pass) return false;
  return true;
}

void ReproductionReport::check(std::string name, json expected, json computed, std::string provenance) {
  const bool pass = expected == computed;
  assertions.push_back({std::move(name), std::move(expected), std::move(computed), std::move(provenance), pass});
}

const std::vector<std::string>& reproduction_targets() {
  static const std::vector<std::string> targets{"example1", "example2",          "example3",
                                                "vls",      "corollary-fusions", "spread-amorphy"};
  return targets;
}

ExampleScheme example_scheme(const std::string& name) {
  if (name == "example1") return {2, 12, 45, 3, 3, 5, 15};
  if (name == "example2") return {2, 20, 75, 5, 5, 3, 15};
  if (name == "example3") return {2, 21, 49, 7, 7, 1, 7};
  if (name == "vls") return {3, 5, 11, 1, 1, 0, 11};
  throw std::invalid_argument("unknown example '" + name + "'");
}

TranslationScheme build_example_scheme(const std::string& name, const ReproduceOptions& options) {
  const ExampleScheme ex = example_scheme(name);
  if (gcd64(options.a, ex.unit_modulus) != 1)
    throw std::invalid_argument("a = " + std::to_string(options.a) + " must be coprime to " +
                                std::to_string(ex.unit_modulus));
  auto field = FieldTable::build(ex.p, ex.m, options.modulus);
  auto frame = CyclotomicFrame::build(field, ex.e);
  return TranslationScheme::cyclic_union(frame, ex.step, ex.count, ex.stride, options.a);
}

IntMatrix published_line_fusion(const std::string& example) {
  if (example == "example1")
    return IntMatrix{{1, 3276, 273, 273, 273},
                     {1, -52, 17, 17, 17},
                     {1, 12, -15, -15, 17},
                     {1, 12, -15, 17, -15},
                     {1, 12, 17, -15, -15}};
  if (example == "example2")
    return IntMatrix{{1, 838860, 69905, 69905, 69905},
                     {1, -820, 273, 273, 273},
                     {1, 204, -239, -239, 273},
                     {1, 204, -239, 273, -239},
                     {1, 204, 273, -239, -239}};
  if (example == "example3")
    return IntMatrix{{1, 1198372, 299593, 299593, 299593},
                     {1, -1756, 585, 585, 585},
                     {1, 292, -439, -439, 585},
                     {1, 292, -439, 585, -439},
                     {1, 292, 585, -439, -439}};
  throw std::invalid_argument("no published line fusion for '" + example + "'");
}

json to_json(const IntMatrix& m) { return m.to_rows(); }

json to_json(const SrgReport& r) {
  json j{{"relation", r.relation}, {"status", to_string(r.status)}, {"n", r.n}, {"k", r.k}, {"values", r.values}};
  if (r.status == SrgStatus::strongly_regular) {
    j["r"] = r.r;
    j["s"] = r.s;
    j["lambda"] = r.lambda;
    j["mu"] = r.mu;
    j["r_multiplicity"] = r.r_multiplicity;
    j["s_multiplicity"] = r.s_multiplicity;
  }
  return j;
}

json to_json(const Incidence& m) {
  json rows = json::array();
  for (std::size_t b = 0; b < m.size(); ++b) rows.push_back(m.block(b).to_string());
  return rows;
}

namespace {

class StageClock {
 public:
  explicit StageClock(ReproductionReport& r) : report_(r), last_(std::chrono::steady_clock::now()) {}
  void lap(const std::string& stage) {
    const auto now = std::chrono::steady_clock::now();
    report_.timing.emplace_back(stage, std::chrono::duration<double>(now - last_).count());
    last_ = now;
  }

 private:
  ReproductionReport& report_;
  std::chrono::steady_clock::time_point last_;
};

struct PublishedExample {
  std::string name;
  std::string label;  // e.g. "GF(2^12), e = 45"
  std::int64_t k, r, s;
  std::uint32_t pg_dim;
  bool expect_circulant;
};

PublishedExample published(const std::string& name) {
  if (name == "example1") return {name, "GF(2^12), e = 45", 273, 17, -15, 3, true};
  if (name == "example2") return {name, "GF(2^20), e = 75", 69905, 273, -239, 3, true};
  if (name == "example3") return {name, "GF(2^21), e = 49", 299593, 585, -439, 2, true};
  throw std::invalid_argument("unknown example '" + name + "'");
}

json srg_triple(std::int64_t k, std::int64_t r, std::int64_t s) { return json::array({k, r, s}); }

// Everything the published examples share: SRG check, extraction, PG
// alignment, line fusion; the spread fusion when the geometry is PG(3, 2).
struct ExampleRun {
  std::optional<Eigenmatrix> eigenmatrix;
  std::optional<Theorem1Decomposition> decomposition;
};

ExampleRun run_published_example(const std::string& name, const ReproduceOptions& opts, ReproductionReport& rep,
                                 bool with_fusions) {
  const PublishedExample pub = published(name);
  const std::string src = "published eigenvalues (" + pub.label + ")";
  StageClock clock(rep);
  ExampleRun run;

  TranslationScheme scheme = build_example_scheme(name, opts);
  clock.lap(name + ": field and periods");
  const auto& field = scheme.frame().field();
  rep.artifacts[name]["q"] = field.order();
  rep.artifacts[name]["modulus"] = field.modulus();
  rep.artifacts[name]["alpha"] = field.alpha();
  rep.artifacts[name]["groups"] = scheme.groups();

  Eigenmatrix p = translation_eigenmatrix(scheme);
  clock.lap(name + ": eigenmatrix");
  rep.matrices.emplace_back(name + ".eigenmatrix", p.entries());
  rep.check(name + ": pseudocyclic", true, is_pseudocyclic(p), "cyclotomic fusions with equal group sizes");

  std::set<std::vector<std::int64_t>> spectra;
  json srg = json::array();
  bool all_srg = true;
  for (std::size_t rel = 1; rel <= scheme.relations(); ++rel) {
    const SrgReport r = srg_check_translation(scheme, rel);
    srg.push_back(to_json(r));
    all_srg = all_srg && r.status == SrgStatus::strongly_regular;
    spectra.insert({r.k, r.r, r.s});
  }
  rep.artifacts[name]["srg"] = srg;
  rep.check(name + ": every relation strongly regular", true, all_srg, src);
  rep.check(name + ": spectrum of every relation", json::array({srg_triple(pub.k, pub.r, pub.s)}), spectra, src);
  const SrgParameters params = srg_from_spectrum(field.order(), pub.k, pub.r, pub.s);
  rep.check(name + ": (lambda, mu)", json::array({params.lambda, params.mu}),
            srg.empty() ? json() : json::array({srg[0].value("lambda", -1), srg[0].value("mu", -1)}),
            "derived: mu = k + r s, lambda = mu + r + s");
  clock.lap(name + ": strong regularity");

  const std::int64_t pg_d = ProjectiveSpace::expected_parameters(pub.pg_dim, 2).d;
  const DesignParameters want = ProjectiveSpace::expected_parameters(pub.pg_dim, 2);
  Theorem1Decomposition t = extract_design(p);
  rep.designs.emplace_back(name + ".design", t.design.incidence());
  rep.check(name + ": design parameters", json::array({want.d, want.k, want.lambda}),
            json::array({t.design.points(), t.design.block_size(), t.design.lambda()}),
            "published design parameters");
  rep.check(name + ": eigenvalue on incidences", pub.r, t.marked, src);
  const auto order = circulant_row_order(t.design.incidence());
  rep.check(name + ": circulant incidence", pub.expect_circulant,
            order.has_value() && is_circulant(permute_rows(t.design.incidence(), *order)),
            "relations indexed cyclically by the union rule");
  if (order) rep.designs.emplace_back(name + ".design_circulant", permute_rows(t.design.incidence(), *order));

  ProjectiveSpace pg = pg_space(pub.pg_dim, 2);
  std::optional<PgAlignment> align;
  try {
    align = align_to_pg(t, pg);
  } catch (const Error&) {
  }
  rep.check(name + ": design isomorphic to PG(" + std::to_string(pub.pg_dim) + ",2)", true, align.has_value(),
            "published identification of the design");
  clock.lap(name + ": design");
  (void)pg_d;

  if (align) {
    rep.artifacts[name]["point_of_relation"] = align->point_of_relation;
    try {
      const GeometricFusion lf = line_fusion(t, pg, *align, 0);
      rep.matrices.emplace_back(name + ".line_fusion", lf.fused.entries());
      rep.check(name + ": line fusion equals printed eigenmatrix", to_json(canonical_row_order(published_line_fusion(name))),
                to_json(canonical_row_order(lf.fused.entries())), "published class-4 eigenmatrix");
    } catch (const std::exception& ex) {
      rep.check(name + ": line fusion equals printed eigenmatrix", to_json(published_line_fusion(name)), ex.what(),
                "published class-4 eigenmatrix");
    }
    clock.lap(name + ": line fusion");

    if (with_fusions && pub.pg_dim == 3) {
      const Spread spread = regular_spread(pg);
      const GeometricFusion sf = spread_fusion(t, pg, *align, spread);
      rep.matrices.emplace_back(name + ".spread_fusion", sf.fused.entries());
      const std::int64_t q = 2;
      // rows of the fused matrix come in eigenspace order, not spread order
      std::set<std::int64_t> principal_values;
      std::int64_t diagonal_count = 0;
      const std::int64_t diagonal = q * (pub.r - pub.s) + pub.r + pub.s * q;
      for (std::size_t j = 1; j <= sf.fused.classes(); ++j)
        for (std::size_t i = 1; i <= sf.fused.classes(); ++i) {
          principal_values.insert(sf.fused(j, i));
          diagonal_count += sf.fused(j, i) == diagonal;
        }
      rep.check(name + ": spread fusion principal part (diagonal, off-diagonal, valency)",
                json::array({json::array({pub.r + pub.s * q, diagonal}), q * q + 1, (q + 1) * pub.k}),
                json::array({principal_values, diagonal_count, sf.fused(0, 1)}),
                "derived: q(r - s) I + (r + s q) J up to row order, valency (q + 1) f");
      rep.check(name + ": spread fusion equals closed form", to_json(canonical_row_order(spread_fusion_formula(pub.k, q, pub.r, pub.s))),
                to_json(canonical_row_order(sf.fused.entries())), "derived: closed form at published parameters");
      rep.check(name + ": spread fusion pseudocyclic", true, is_pseudocyclic(sf.fused), "amorphous spread fusion");
      const AmorphyResult am = is_amorphous(sf.fused);
      rep.check(name + ": spread fusion amorphous", json::array({true, 52}),
                json::array({am.amorphous, am.partitions_checked}), "all Bell(5) = 52 partitions");
      clock.lap(name + ": spread fusion");
    }
  }

  if (field.order() <= DenseScheme::max_points) {
    const DenseScheme ds = dense_materialize(scheme);
    const DenseVerification v = verify_scheme_dense(ds);
    rep.check(name + ": dense oracle verifies the scheme", true, v.ok, "brute-force intersection numbers");
    if (v.ok) {
      std::set<std::vector<std::int64_t>> dense_params;
      for (std::size_t i = 1; i <= ds.classes(); ++i) {
        const std::size_t other = i == 1 ? 2 : 1;
        dense_params.insert({v.p[i][i][0], v.p[i][i][i], v.p[i][i][other]});
      }
      rep.check(name + ": dense (k, lambda, mu)", json::array({json::array({pub.k, params.lambda, params.mu})}),
                dense_params, "derived from the published spectrum");
    }
    clock.lap(name + ": dense oracle");
  }

  run.eigenmatrix = std::move(p);
  run.decomposition = std::move(t);
  return run;
}

void run_vls(const ReproduceOptions& opts, ReproductionReport& rep) {
  StageClock clock(rep);
  TranslationScheme scheme = build_example_scheme("vls", opts);
  const auto& frame = scheme.frame();
  clock.lap("vls: field and periods");
  rep.check("vls: periods rational (odd characteristic)", true, frame.periods_rational(),
            "trace counts c_1 = c_2 for every class");
  std::set<std::int64_t> values;
  for (std::uint32_t i = 0; i < frame.classes(); ++i)
    if (auto v = frame.period(i)) values.insert(*v);
  rep.check("vls: period values", json::array({-5, 4}), values, "derived: brute-force periods over 242 elements");

  const Eigenmatrix p = translation_eigenmatrix(scheme);
  rep.matrices.emplace_back("vls.eigenmatrix", p.entries());
  rep.check("vls: pseudocyclic", true, is_pseudocyclic(p), "cyclotomic schemes are pseudocyclic");

  const DenseScheme ds = dense_materialize(scheme);
  const DenseVerification v = verify_scheme_dense(ds);
  rep.check("vls: dense oracle verifies all intersection numbers", true, v.ok, "brute force over 243 points");
  std::set<std::vector<std::int64_t>> dense;
  std::set<std::vector<std::int64_t>> spectral;
  for (std::size_t rel = 1; rel <= scheme.relations(); ++rel) {
    const DenseSrgCheck c = dense_srg_check(ds, rel);
    dense.insert(c.strongly_regular ? std::vector<std::int64_t>{c.parameters.n, c.parameters.k, c.parameters.lambda,
                                                                c.parameters.mu}
                                    : std::vector<std::int64_t>{});
    const SrgReport r = srg_check_translation(scheme, rel);
    spectral.insert({r.n, r.k, r.lambda, r.mu});
  }
  rep.check("vls: dense A^2 check, every relation", json::array({json::array({243, 22, 1, 2})}), dense,
            "derived: SRG(243,22,1,2) by direct adjacency counts");
  rep.check("vls: spectral SRG parameters agree with dense", dense, spectral, "two independent routes");
  clock.lap("vls: dense oracle");

  const Theorem1Decomposition t = extract_design(p);
  rep.designs.emplace_back("vls.design", t.design.incidence());
  rep.check("vls: design parameters", json::array({11, 5, 2}),
            json::array({t.design.points(), t.design.block_size(), t.design.lambda()}),
            "published 2-(11,5,2) design");
  // quadratic residue biplane on Z/11
  Incidence qr(11);
  for (std::size_t b = 0; b < 11; ++b)
    for (std::size_t r : {1, 3, 4, 5, 9}) qr.set(b, (b + r) % 11);
  const SymmetricDesign model(qr);
  rep.check("vls: design isomorphic to the quadratic-residue biplane", true,
            design_isomorphic(t.design, model).has_value(), "isomorphism to one fixed model");
  clock.lap("vls: design");
}

void run_corollary(const ReproduceOptions& opts, ReproductionReport& rep) {
  for (const std::string name : {"example1", "example2"}) {
    StageClock clock(rep);
    const TranslationScheme scheme = build_example_scheme(name, opts);
    const Eigenmatrix p = translation_eigenmatrix(scheme);
    const Theorem1Decomposition t = extract_design(p);
    const auto& dp = t.design.parameters();
    const auto want3 = block_fusion_class3_formula(t.valency, dp.k, dp.lambda, dp.d, t.marked, t.unmarked);
    const auto want2 = block_fusion_class2_formula(t.valency, dp.k, dp.lambda, dp.d, t.marked, t.unmarked);
    try {
      const BlockFusion bf = design_block_fusion(t, 0);
      rep.matrices.emplace_back(name + ".block_fusion_class3", bf.class3.entries());
      rep.matrices.emplace_back(name + ".block_fusion_class2", bf.class2.entries());
      rep.check(name + ": class-3 block fusion", to_json(canonical_row_order(want3)),
                to_json(canonical_row_order(bf.class3.entries())), "derived: closed form at published parameters");
      rep.check(name + ": class-2 block fusion", to_json(canonical_row_order(want2)),
                to_json(canonical_row_order(bf.class2.entries())), "derived: closed form at published parameters");
      const FusionResult merged =
          bannai_muzychuk(bf.class3, FusionPartition::from_nontrivial({{1, 2}, {3}}, 3));
      rep.check(name + ": merging the first two block-fusion relations gives the class-2 fusion", true,
                merged.ok && merged.fused->entries() == bf.class2.entries(), "fusion criterion on the class-3 result");
    } catch (const std::exception& ex) {
      rep.check(name + ": block fusion", to_json(want3), ex.what(), "derived: closed form at published parameters");
    }
    clock.lap(name + ": block fusions");
  }
}

}  // namespace

ReproductionReport reproduce(const std::string& target, const ReproduceOptions& options) {
  ReproductionReport rep;
  rep.target = target;
  rep.options["a"] = options.a;
  rep.options["modulus"] = options.modulus ? json(*options.modulus) : json(nullptr);
  if (target == "example1" || target == "example2" || target == "example3") {
    run_published_example(target, options, rep, true);
  } else if (target == "vls") {
    run_vls(options, rep);
  } else if (target == "corollary-fusions") {
    run_corollary(options, rep);
  } else if (target == "spread-amorphy") {
    for (const std::string name : {"example1", "example2"}) {
      ReproductionReport inner;
      run_published_example(name, options, inner, true);
      for (auto& a : inner.assertions)
        if (a.name.find("spread") != std::string::npos) rep.assertions.push_back(std::move(a));
      for (auto& m : inner.matrices)
        if (m.first.find("spread") != std::string::npos) rep.matrices.push_back(std::move(m));
      for (auto& t : inner.timing) rep.timing.push_back(std::move(t));
    }
  } else {
    throw std::invalid_argument("unknown reproduction target '" + target + "'");
  }
  return rep;
}

ReportFormat parse_report_format(const std::string& s) {
  if (s == "json") return ReportFormat::json;
  if (s == "tsv") return ReportFormat::tsv;
  if (s == "markdown" || s == "md") return ReportFormat::markdown;
  throw std::invalid_argument("unknown format '" + s + "'");
}

std::string matrix_tsv(const IntMatrix& m) {
  std::ostringstream os;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? "\t" : "") << m(r, c);
    os << '\n';
  }
  return os.str();
}

std::string emit(const ReproductionReport& report, ReportFormat format, bool include_timing) {
  switch (format) {
    case ReportFormat::json: {
      json j;
      j["schema"] = report_schema;
      j["target"] = report.target;
      j["status"] = report.passed() ? "pass" : "fail";
      j["options"] = report.options;
      j["assertions"] = json::array();
      for (const auto& a : report.assertions)
        j["assertions"].push_back({{"name", a.name},
                                   {"expected", a.expected},
                                   {"computed", a.computed},
                                   {"provenance", a.provenance},
                                   {"pass", a.pass}});
      json artifacts = report.artifacts;
      for (const auto& [name, m] : report.matrices) artifacts["matrices"][name] = to_json(m);
      for (const auto& [name, d] : report.designs) artifacts["designs"][name] = to_json(d);
      j["artifacts"] = artifacts;
      if (include_timing) {
        json t = json::array();
        for (const auto& [stage, sec] : report.timing) t.push_back({{"stage", stage}, {"seconds", sec}});
        j["timing"] = t;
      }
      return j.dump(2) + "\n";
    }
    case ReportFormat::tsv: {
      std::ostringstream os;
      os << "# " << report_schema << '\t' << report.target << '\t' << (report.passed() ? "pass" : "fail") << '\n';
      for (const auto& a : report.assertions)
        os << (a.pass ? "PASS" : "FAIL") << '\t' << a.name << '\t' << a.expected.dump() << '\t' << a.computed.dump()
           << '\t' << a.provenance << '\n';
      for (const auto& [name, m] : report.matrices) os << "# matrix\t" << name << '\n' << matrix_tsv(m);
      for (const auto& [name, d] : report.designs) {
        os << "# design\t" << name << '\n';
        for (std::size_t b = 0; b < d.size(); ++b) os << d.block(b).to_string() << '\n';
      }
      if (include_timing)
        for (const auto& [stage, sec] : report.timing) os << "# time\t" << stage << '\t' << sec << '\n';
      return os.str();
    }
    case ReportFormat::markdown: {
      std::ostringstream os;
      os << "# " << report.target << " (" << (report.passed() ? "pass" : "fail") << ")\n\n";
      if (!report.assertions.empty()) {
        os << "| status | assertion | expected | computed | provenance |\n|---|---|---|---|---|\n";
        for (const auto& a : report.assertions)
          os << "| " << (a.pass ? "PASS" : "FAIL") << " | " << a.name << " | `" << a.expected.dump() << "` | `"
             << a.computed.dump() << "` | " << a.provenance << " |\n";
      }
      for (const auto& [name, m] : report.matrices) os << "\n## " << name << "\n\n```\n" << matrix_tsv(m) << "```\n";
      for (const auto& [name, d] : report.designs) {
        os << "\n## " << name << "\n\n```\n";
        for (std::size_t b = 0; b < d.size(); ++b) os << d.block(b).to_string() << '\n';
        os << "```\n";
      }
      if (include_timing) {
        os << "\n## timing\n\n";
        for (const auto& [stage, sec] : report.timing) os << "- " << stage << ": " << sec << " s\n";
      }
      return os.str();
    }
  }
  return {};
}

}  // namespace scheme_forge
