// Acceptance suite: one PASS/FAIL line per criterion.
// usage: acceptance <fixtures-dir> <golden-dir>
#include <lwcost/lwcost.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

using namespace lwcost;

namespace {

struct Outcome
{
  bool pass = true;
  std::string detail;

  void fail(const std::string& why)
  {
    if (pass)
      detail = why;
    else if (detail.size() < 400)
      detail += "; " + why;
    pass = false;
  }
};

std::filesystem::path fixtures;
std::filesystem::path golden;

Cost
random_cost(std::mt19937_64& rng, int64_t max_num)
{
  return Cost(int64_t(rng() % uint64_t(max_num + 1)), int64_t(1 + rng() % 6));
}

// 1: total equals the sum of the four phases, exactly.
Outcome
decomposition()
{
  Outcome o;
  std::mt19937_64 rng(1);
  size_t checked = 0;
  for (const auto& alg : primary_algorithms()) {
    for (int i = 0; i < 1000; i++) {
      CostParams p = default_params(alg);
      p.b = random_cost(rng, 40);
      p.P = random_cost(rng, 40);
      p.b_640 = random_cost(rng, 40);
      p.b_1024 = random_cost(rng, 40);
      p.c_k = random_cost(rng, 20);
      p.c_n = random_cost(rng, 20);
      p.c_A = random_cost(rng, 20);
      p.c_M = random_cost(rng, 20);
      p.c_f = random_cost(rng, 20);
      const uint64_t a = rng() % 2048, m = rng() % 2048;
      const auto pc = predicted_cost(plan(alg, a, m), p);
      if (pc.total != pc.init + pc.process_ad + pc.process_msg + pc.finalize)
        o.fail(variant_key(alg.variant) + " scheduled breakdown");
      const auto ev = eval_total(rng() % 512, rng() % 512, random_cost(rng, 30), p);
      if (ev.total != ev.init + ev.process_ad + ev.process_msg + ev.finalize)
        o.fail(variant_key(alg.variant) + " eval_total");
      checked++;
    }
  }
  if (o.pass)
    o.detail = std::to_string(checked) + " tuples";
  return o;
}

// 2: rendered registry rows against the committed transcription.
Outcome
registry_fidelity()
{
  Outcome o;
  std::ifstream in(golden / "cost_rows.txt");
  if (!in) {
    o.fail("golden file missing");
    return o;
  }
  std::map<std::string, std::string> rows;
  std::string line;
  while (std::getline(in, line))
    if (!line.empty() && line[0] != '#') {
      const auto tab = line.find('\t');
      rows[line.substr(0, tab)] = line.substr(tab + 1);
    }
  for (const auto& alg : primary_algorithms()) {
    const auto key = family_key(alg.family);
    const auto got = render_expr(expr_for(alg));
    if (!rows.count(key))
      o.fail(key + " has no golden row");
    else if (rows[key] != got)
      o.fail(key + ": '" + got + "' != '" + rows[key] + "'");
    else if (render_expr(parse_expr(got)) != got)
      o.fail(key + " does not re-parse");
  }
  if (rows.size() != 10)
    o.fail("golden file has " + std::to_string(rows.size()) + " rows");
  if (o.pass)
    o.detail = "10/10 rows";
  return o;
}

// 3: published KAT files, bit-exact.
Outcome
kat_conformance()
{
  Outcome o;
  std::string summary;
  for (const char* name : { "ascon-128", "gift-cofb", "tinyjambu-128", "xoodyak", "grain-128aeadv2" }) {
    const auto alg = parse_algorithm(name);
    const auto path = kat_path(fixtures / "kat", alg);
    if (!std::filesystem::exists(path)) {
      o.fail(std::string(name) + ": no published KAT file");
      continue;
    }
    const auto r = run_kat(alg, parse_kat_file(path));
    if (!r.ok() || r.total == 0)
      o.fail(std::string(name) + ": " + std::to_string(r.passed) + "/" + std::to_string(r.total));
    else
      summary += std::string(summary.empty() ? "" : ", ") + name + " " + std::to_string(r.passed) + "/" +
                 std::to_string(r.total);
  }
  // The other algorithms may only be marked validated on a passing KAT.
  ValidateOptions opt;
  opt.kat_dir = fixtures / "kat";
  for (const auto& alg : primary_algorithms()) {
    const auto rep = validate_algorithm(alg, opt);
    const bool has_kat = std::filesystem::exists(kat_path(fixtures / "kat", alg));
    if (rep.validated() && !has_kat)
      o.fail(variant_key(alg.variant) + " marked validated without a KAT");
  }
  if (o.pass)
    o.detail = summary;
  else if (!summary.empty())
    o.detail += " (passing: " + summary + ")";
  return o;
}

// 4: default 9x9 grid, counters against plan field for field.
Outcome
counter_exactness()
{
  Outcome o;
  size_t points = 0;
  for (const auto& alg : primary_algorithms()) {
    const auto samples = run_count_experiment(default_count_config(alg));
    points += samples.size();
    const auto d = count_discrepancies(samples);
    for (const auto& s : samples)
      if (!s.exact())
        o.fail(variant_key(alg.variant) + " at (" + std::to_string(s.len_A) + ", " +
               std::to_string(s.len_M) + ")");
    size_t bad = 0;
    for (const auto& s : samples)
      bad += !s.exact();
    if (d.size() != bad)
      o.fail(variant_key(alg.variant) + ": mismatches not all reported");
  }
  // A planted mismatch must surface.
  auto probe = run_count_experiment(default_count_config(primary(Family::Ascon)));
  probe[3].measured.phases[size_t(Phase::Msg)]["ascon_p6"] += 1;
  if (count_discrepancies(probe).size() != 1)
    o.fail("planted mismatch not reported");
  if (o.pass)
    o.detail = std::to_string(points) + " grid points";
  return o;
}

// 5: exact linear fit on rate-aligned grids; every disagreement with the
// tabulated row shows up as a classified entry.
Outcome
linear_scaling()
{
  Outcome o;
  std::string notes;
  for (const auto& alg : primary_algorithms()) {
    const auto key = variant_key(alg.variant);
    const auto samples = run_count_experiment(aligned_count_config(alg));
    const auto fit = fit_counts(samples);
    if (fit.residual_max != Exact(0))
      o.fail(key + " residual_max " + to_string(fit.residual_max));
    if (!is_integer(fit.slope_A) || !is_integer(fit.slope_M))
      o.fail(key + " non-integer slopes");
    const auto d = coefficient_check(fit, alg, samples);
    auto reported = [&](const std::string& subject) {
      for (const auto& e : d)
        if (e.subject == subject && e.kind != DiscrepancyKind::CountMismatch)
          return true;
      return false;
    };
    const auto exp = expected_fit(alg, samples);
    if (exp.slope_A != fit.slope_A && !reported("slope_A"))
      o.fail(key + " unreported slope_A difference");
    if (exp.slope_M != fit.slope_M && !reported("slope_M"))
      o.fail(key + " unreported slope_M difference");
    if (alg.family == Family::Sparkle) {
      const bool ratio_ok = fit.slope_A != Exact(0) && fit.slope_M / fit.slope_A == Exact(3) / Exact(2);
      if (!ratio_ok && !reported("slope_M/slope_A"))
        o.fail("SPARKLE slope ratio not reported");
      notes += " sparkle ratio " + (fit.slope_A == Exact(0) ? std::string("undefined")
                                                           : to_string(fit.slope_M / fit.slope_A));
    }
    if (alg.family == Family::TinyJambu) {
      if (fit.intercept != Exact(10) && !reported("intercept"))
        o.fail("TinyJambu fixed terms not reported");
      bool inconsistency = false;
      for (const auto& e : d)
        inconsistency = inconsistency || e.kind == DiscrepancyKind::PaperInternalInconsistency;
      if (!inconsistency)
        o.fail("TinyJambu initialization inconsistency not reported");
      notes += ", tinyjambu intercept " + to_string(fit.intercept) + " vs 10";
    }
  }
  if (o.pass)
    o.detail = "residual 0, integer slopes;" + notes;
  return o;
}

Bytes
random_bytes(std::mt19937_64& rng, size_t n)
{
  Bytes b(n);
  for (auto& x : b)
    x = uint8_t(rng());
  return b;
}

// 6: round trips and single-bit tampering.
Outcome
aead_properties()
{
  Outcome o;
  std::mt19937_64 rng(6);
  size_t forgeries = 0, trials = 0;
  for (const auto& alg : primary_algorithms()) {
    const auto key = variant_key(alg.variant);
    auto aead = make_aead(alg);
    const auto& p = aead->params();
    for (int i = 0; i < 200; i++) {
      const Bytes k = random_bytes(rng, p.key_len), n = random_bytes(rng, p.nonce_len);
      const Bytes ad = random_bytes(rng, rng() % 130), pt = random_bytes(rng, rng() % 130);
      const auto s = aead->seal(k, n, ad, pt);
      const auto r = aead->open(k, n, ad, s.ciphertext, s.tag);
      if (!r.ok || r.plaintext != pt) {
        o.fail(key + " round trip " + std::to_string(i));
        break;
      }
    }
    for (int cls = 0; cls < 4; cls++)
      for (int t = 0; t < 64; t++) {
        const Bytes k = random_bytes(rng, p.key_len);
        Bytes n = random_bytes(rng, p.nonce_len);
        Bytes ad = random_bytes(rng, 1 + rng() % 64), pt = random_bytes(rng, 1 + rng() % 64);
        auto s = aead->seal(k, n, ad, pt);
        Bytes* target = cls == 0 ? &s.ciphertext : cls == 1 ? &s.tag : cls == 2 ? &ad : &n;
        const size_t bit = rng() % (target->size() * 8);
        (*target)[bit / 8] ^= uint8_t(1u << (bit % 8));
        trials++;
        if (aead->open(k, n, ad, s.ciphertext, s.tag).ok) {
          forgeries++;
          static const char* names[] = { "ct", "tag", "ad", "nonce" };
          o.fail(key + " accepted a " + names[cls] + " flip");
        }
      }
  }
  if (o.pass)
    o.detail = "2000 round trips, " + std::to_string(trials) + " tampered, 0 accepted";
  return o;
}

// 7: wall-clock fit; never gates the suite.
Outcome
wall_clock()
{
  Outcome o;
  double worst = 1;
  std::string worst_alg;
  for (const auto& alg : primary_algorithms()) {
    const auto te = run_time_experiment(default_time_config(alg));
    const auto f = fit_times(te.samples);
    if (f.r_squared < worst) {
      worst = f.r_squared;
      worst_alg = variant_key(alg.variant);
    }
    if (f.r_squared < 0.95)
      o.fail(variant_key(alg.variant) + " R^2 " + std::to_string(f.r_squared));
  }
  if (o.pass)
    o.detail = "lowest R^2 " + std::to_string(worst) + " (" + worst_alg + ")";
  return o;
}

}

int
main(int argc, char** argv)
{
  if (argc != 3) {
    std::cerr << "usage: acceptance <fixtures-dir> <golden-dir>\n";
    return 2;
  }
  fixtures = argv[1];
  golden = argv[2];

  struct Criterion
  {
    int id;
    const char* name;
    Outcome (*run)();
    bool gating;
  };
  const Criterion criteria[] = {
    { 1, "decomposition identity", decomposition, true },
    { 2, "registry fidelity", registry_fidelity, true },
    { 3, "KAT conformance", kat_conformance, true },
    { 4, "scheduler/counter exactness", counter_exactness, true },
    { 5, "linear scaling", linear_scaling, true },
    { 6, "AEAD properties", aead_properties, true },
    { 7, "wall-clock corroboration (non-gating)", wall_clock, false },
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::ostringstream line;
    line << (o.pass ? "PASS" : "FAIL") << " criterion " << c.id << " " << c.name << ": " << o.detail;
    line.precision(2);
    line << std::fixed << " [" << secs << " s]";
    std::cout << line.str() << std::endl;
    if (!o.pass && c.gating)
      failed++;
  }
  return failed == 0 ? 0 : 1;
}
