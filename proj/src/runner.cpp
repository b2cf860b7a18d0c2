#include "qfrob/runner.hpp"

#include <atomic>
#include <chrono>
#include <functional>
#include <random>
#include <thread>

#include "qfrob/frobsplit.hpp"

namespace qfrob {

namespace {

using nlohmann::json;
using Task = std::function<std::vector<CheckRecord>()>;

const char* kNote =
    "Fr* and Fr'* are applied monomialwise on the specialized quantum torus; "
    "equality there is equivalent to the identity on each cluster monomial since the torus at 1 is a domain.";

json word_json(const std::vector<int>& seq) {
  json a = json::array();
  for (int k : seq) a.push_back(k + 1);
  return a;
}

CheckRecord record(const std::string& name, json params, bool pass, const std::string& witness) {
  CheckRecord r;
  r.name = name;
  r.params = std::move(params);
  r.verdict = pass ? Outcome::PASS : Outcome::FAIL;
  if (!pass) r.witness = witness.empty() ? "mismatch" : witness;
  return r;
}

std::vector<CheckRecord> timed(const Task& t, const std::string& name, const json& params) {
  const auto start = std::chrono::steady_clock::now();
  std::vector<CheckRecord> out;
  try {
    out = t();
  } catch (const std::exception& e) {
    out = {record(name, params, false, std::string("error: ") + e.what())};
  }
  const long ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  for (auto& r : out) r.millis = ms;
  return out;
}

void run_pool(const std::vector<std::pair<std::string, json>>& keys, const std::vector<Task>& tasks, int jobs,
              std::vector<std::vector<CheckRecord>>& slots) {
  slots.assign(tasks.size(), {});
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k; (k = next.fetch_add(1)) < tasks.size();) slots[k] = timed(tasks[k], keys[k].first, keys[k].second);
  };
  const int n = std::max(1, std::min<int>(jobs, static_cast<int>(tasks.size())));
  std::vector<std::thread> pool;
  for (int i = 1; i < n; ++i) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
}

PElt random_modp(const std::shared_ptr<const ModpTorus>& sp, std::mt19937_64& rng, int lo, int hi) {
  const uint64_t p = sp->ring.p;
  return random_element<ModpRing>(sp, rng, 4, lo, hi, [&](std::mt19937_64& g) { return std::uniform_int_distribution<uint64_t>(1, p - 1)(g); });
}

}  // namespace

VerdictReport run_campaign(const Campaign& c, const RunOptions& opt) {
  VerdictReport rep;
  rep.meta.campaign = c.name;
  rep.meta.type = c.type;
  for (int x : c.word) rep.meta.word.push_back(x + 1);
  rep.meta.l = c.l_values;
  rep.meta.note = kNote;
  if (c.word.empty() && c.checks.empty()) {
    rep.meta.lambda_source = "oracle";
    return rep;
  }

  const CartanData cd = c.datum();
  const int r = static_cast<int>(c.word.size());

  // LAMBDA: always computed, reported only on request.
  std::optional<SkewForm> lam;
  {
    json params = {{"word", word_json(c.word)}};
    auto t = [&]() -> std::vector<CheckRecord> {
      SkewForm oracle = commutation_matrix(cd, c.word);
      const ExchangeMatrix bt = btilde_from_word(cd, c.word);
      const IVec want = expected_skew_symmetrizer(cd, c.word);
      std::string why;
      auto judge = [&](const SkewForm& f, const std::string& what) {
        Compatibility comp = check_compatible(f, bt);
        if (!comp.ok) {
          why = what + " not compatible: " + comp.reason;
        } else if (comp.d != want) {
          why = what + " has the wrong skew-symmetrizer";
        }
      };
      judge(oracle, "oracle lambda");
      if (c.lambda) {
        SkewForm given(*c.lambda);
        if (why.empty()) judge(given, "config lambda");
        if (why.empty() && !(given == oracle)) why = "config lambda differs from the oracle";
        lam = given;
      } else {
        lam = oracle;
      }
      return {record("LAMBDA", params, why.empty(), why)};
    };
    auto out = timed(t, "LAMBDA", params);
    if (c.wants(Check::LAMBDA)) {
      for (auto& x : out) rep.checks.push_back(std::move(x));
    }
  }
  rep.meta.lambda_source = c.lambda ? "config" : "oracle";
  if (lam) rep.meta.lambda = lam->matrix();

  std::vector<std::pair<std::string, json>> keys;
  std::vector<Task> tasks;
  auto add = [&](const std::string& name, json params, Task t) {
    keys.emplace_back(name, std::move(params));
    tasks.push_back(std::move(t));
  };

  const std::vector<std::vector<int>> seqs = c.sequences ? *c.sequences : enumerate_sequences(frozen_split(c.word).ex, c.depth, c.prune);
  std::shared_ptr<QuantumSeed> initial;
  if (lam && (c.wants(Check::THEOREM))) {
    try {
      initial = std::make_shared<QuantumSeed>(seed_from_word(cd, c.word, *lam, c.gamma));
    } catch (const std::exception&) {
      initial.reset();
    }
  }

  for (int l : c.l_values) {
    if (c.wants(Check::THEOREM)) {
      const bool split = c.wants(Check::SPLIT_AXIOMS) && is_prime(l);
      for (const auto& s : seqs) {
        json params = {{"l", l}, {"sequence", word_json(s)}};
        add("THEOREM", params, [&, l, s, split, params]() -> std::vector<CheckRecord> {
          if (!initial) {
            if (!lam) throw std::runtime_error("no lambda");
            seed_from_word(cd, c.word, *lam, c.gamma);  // rethrows the reason
          }
          TheoremVerifier tv(mutate_along(*initial, s), l);
          TheoremVerdict v;
          if (c.exponents) {
            std::vector<ExpVec> as;
            for (const auto& e : *c.exponents) as.push_back(ExpVec::from(e));
            v = tv.run(as, split);
          } else {
            v = tv.run(c.max_entry.value_or(l), split);
          }
          json p = params;
          p["monomials"] = v.checked;
          std::vector<CheckRecord> out{record("THEOREM", p, v.pass, v.witness)};
          if (split) out.push_back(record("SPLIT_DEGREE", p, v.split_pass, v.split_witness));
          return out;
        });
      }
    }
    if (c.wants(Check::BASE_CASE)) {
      for (int t = 0; t < r; ++t) {
        json params = {{"l", l}, {"t", t + 1}};
        add("BASE_CASE", params, [&, l, t, params]() -> std::vector<CheckRecord> {
          Verdict v = check_prop_le1_base(cd, c.word, t, l);
          json p = params;
          p["words"] = v.checked;
          return {record("BASE_CASE", p, v.pass, v.witness)};
        });
      }
    }
    if (c.wants(Check::KKKO)) {
      for (int t = 0; t < r; ++t) {
        json params = {{"l", l}, {"t", t + 1}};
        add("KKKO", params, [&, l, t, params]() -> std::vector<CheckRecord> {
          Verdict v = check_kkko_power(cd, c.word, t, l);
          json p = params;
          p["words"] = v.checked;
          return {record("KKKO", p, v.pass, v.witness)};
        });
      }
    }
    if (c.wants(Check::SPLIT_AXIOMS)) {
      json params = {{"p", l}, {"trials", c.split_trials}};
      add("SPLIT_AXIOMS", params, [&, l, params]() -> std::vector<CheckRecord> {
        if (!is_prime(l)) {
          CheckRecord s = record("SPLIT_AXIOMS", params, true, "");
          s.verdict = Outcome::SKIP;
          return {s};
        }
        std::mt19937_64 rng(c.seed * 1000003 + static_cast<uint64_t>(l));
        auto sp = make_space<ModpRing>(SkewForm::zero(std::max(r, 1)), ModpRing{static_cast<uint64_t>(l)});
        std::string why;
        if (!(modp_split(PElt::one(sp)) == PElt::one(sp))) why = "phi(1) != 1";
        for (int k = 0; k < c.split_trials && why.empty(); ++k) {
          PElt f = random_modp(sp, rng, -3, 3);
          PElt g = random_modp(sp, rng, -3, 3);
          PElt lhs = modp_split(f.pow(l) * g);
          PElt rhs = f * modp_split(g);
          if (!(lhs == rhs)) why = "trial " + std::to_string(k) + ": phi(f^p g) != f phi(g)";
        }
        return {record("SPLIT_AXIOMS", params, why.empty(), why)};
      });
    }
    if (c.wants(Check::REDUCTION)) {
      const int prefix = c.reduction_prefix.value_or(r / 2);
      json params = {{"p", l}, {"prefix", prefix}};
      add("REDUCTION", params, [&, l, prefix, params]() -> std::vector<CheckRecord> {
        if (!is_prime(l)) {
          CheckRecord s = record("REDUCTION", params, true, "");
          s.verdict = Outcome::SKIP;
          return {s};
        }
        std::mt19937_64 rng(c.seed * 7919 + static_cast<uint64_t>(l));
        auto sp = make_space<ModpRing>(SkewForm::zero(prefix), ModpRing{static_cast<uint64_t>(l)});
        std::vector<PElt> samples{PElt::one(sp)};
        for (int k = 0; k < 100; ++k) samples.push_back(random_modp(sp, rng, -2 * l, 2 * l));
        std::string why;
        bool ok = reduction_commutes(cd, c.word, prefix, samples, &why);
        return {record("REDUCTION", params, ok, why)};
      });
    }
  }

  std::vector<std::vector<CheckRecord>> slots;
  run_pool(keys, tasks, opt.jobs, slots);
  for (auto& s : slots) {
    for (auto& x : s) rep.checks.push_back(std::move(x));
  }
  if (opt.deterministic) rep.zero_timings();
  return rep;
}

}  // namespace qfrob
