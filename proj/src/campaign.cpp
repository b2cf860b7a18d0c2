#include "qfrob/campaign.hpp"

#include <yaml-cpp/yaml.h>

#include <algorithm>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

namespace qfrob {

namespace {

[[noreturn]] void fail(const std::string& source, const YAML::Node& n, const std::string& field, const std::string& msg) {
  std::ostringstream os;
  os << source;
  if (n.IsDefined() && n.Mark().line >= 0) os << ":" << n.Mark().line + 1;
  os << ": field '" << field << "': " << msg;
  throw ConfigError(os.str());
}

int as_int(const std::string& src, const YAML::Node& n, const std::string& field) {
  try {
    return n.as<int>();
  } catch (const YAML::Exception&) {
    fail(src, n, field, "expected an integer");
  }
}

std::vector<int> as_ints(const std::string& src, const YAML::Node& n, const std::string& field) {
  if (!n.IsSequence()) fail(src, n, field, "expected a list of integers");
  std::vector<int> out;
  for (const auto& x : n) out.push_back(as_int(src, x, field));
  return out;
}

std::vector<std::vector<int>> as_rows(const std::string& src, const YAML::Node& n, const std::string& field) {
  if (!n.IsSequence()) fail(src, n, field, "expected a list of lists");
  std::vector<std::vector<int>> out;
  for (const auto& r : n) out.push_back(as_ints(src, r, field));
  return out;
}

const std::set<std::string> kKeys{"name", "cartan", "word", "l", "lambda", "gamma", "mutations", "exponents", "checks", "split_trials", "reduction_prefix", "seed"};

}  // namespace

const char* to_string(Check c) {
  switch (c) {
    case Check::LAMBDA: return "LAMBDA";
    case Check::THEOREM: return "THEOREM";
    case Check::BASE_CASE: return "BASE_CASE";
    case Check::KKKO: return "KKKO";
    case Check::SPLIT_AXIOMS: return "SPLIT_AXIOMS";
    case Check::REDUCTION: return "REDUCTION";
  }
  return "?";
}

std::optional<Check> parse_check(const std::string& s) {
  for (Check c : {Check::LAMBDA, Check::THEOREM, Check::BASE_CASE, Check::KKKO, Check::SPLIT_AXIOMS, Check::REDUCTION}) {
    if (s == to_string(c)) return c;
  }
  return std::nullopt;
}

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

CartanData Campaign::datum() const { return CartanData(cartan, symmetrizers, type); }

bool Campaign::wants(Check c) const { return std::find(checks.begin(), checks.end(), c) != checks.end(); }

Campaign parse_campaign(const std::string& text, const std::string& src) {
  YAML::Node root;
  try {
    root = YAML::Load(text);
  } catch (const YAML::ParserException& e) {
    throw ConfigError(src + ":" + std::to_string(e.mark.line + 1) + ": " + e.msg);
  }
  Campaign c;
  if (root.IsNull()) return c;
  if (!root.IsMap()) fail(src, root, "<root>", "expected a mapping");
  for (const auto& kv : root) {
    const auto key = kv.first.as<std::string>();
    if (!kKeys.count(key)) fail(src, kv.first, key, "unknown field");
  }

  c.name = root["name"] ? root["name"].as<std::string>() : "campaign";

  const YAML::Node cartan = root["cartan"];
  if (!cartan) fail(src, root, "cartan", "missing");
  try {
    if (cartan.IsScalar()) {
      CartanData cd = CartanData::preset(cartan.as<std::string>());
      c.type = cd.name();
      c.cartan = cd.matrix();
      c.symmetrizers = cd.symmetrizers();
    } else {
      c.type = "custom";
      c.cartan = as_rows(src, cartan["matrix"], "cartan.matrix");
      c.symmetrizers = as_ints(src, cartan["symmetrizers"], "cartan.symmetrizers");
      (void)c.datum();
    }
  } catch (const std::invalid_argument& e) {
    fail(src, cartan, "cartan", e.what());
  }
  const CartanData cd = c.datum();
  const int n = cd.rank();

  const YAML::Node word = root["word"];
  if (!word) fail(src, root, "word", "missing");
  for (int x : as_ints(src, word, "word")) {
    if (x < 1 || x > n) fail(src, word, "word", "letter " + std::to_string(x) + " outside 1.." + std::to_string(n));
    c.word.push_back(x - 1);
  }
  if (!is_reduced(cd, c.word)) fail(src, word, "word", "word not reduced");
  const int r = static_cast<int>(c.word.size());

  if (const YAML::Node l = root["l"]) {
    c.l_values = l.IsSequence() ? as_ints(src, l, "l") : std::vector<int>{as_int(src, l, "l")};
    for (int x : c.l_values) {
      if (x % 2 == 0) fail(src, l, "l", "l must be odd");
      if (x < 3) fail(src, l, "l", "l must be at least 3");
      for (int t : c.symmetrizers) {
        if (std::gcd(x, 2 * t) != 1) fail(src, l, "l", "l must be coprime to 2t_i = " + std::to_string(2 * t));
      }
    }
  }

  if (const YAML::Node lam = root["lambda"]) {
    if (!(lam.IsScalar() && lam.as<std::string>() == "oracle")) {
      IMat m = as_rows(src, lam, "lambda");
      if (static_cast<int>(m.size()) != r) fail(src, lam, "lambda", "expected a " + std::to_string(r) + "x" + std::to_string(r) + " matrix");
      for (int i = 0; i < r; ++i) {
        if (static_cast<int>(m[i].size()) != r) fail(src, lam, "lambda", "expected a " + std::to_string(r) + "x" + std::to_string(r) + " matrix");
        for (int j = 0; j < r; ++j) {
          if (m[i][j] != -m[j][i]) fail(src, lam, "lambda", "matrix is not skew-symmetric");
        }
      }
      c.lambda = m;
    }
  }

  if (const YAML::Node g = root["gamma"]) {
    c.gamma = as_ints(src, g, "gamma");
    if (static_cast<int>(c.gamma.size()) != r) fail(src, g, "gamma", "expected " + std::to_string(r) + " entries");
  }

  std::vector<int> ex = frozen_split(c.word).ex;
  if (const YAML::Node m = root["mutations"]) {
    if (!m.IsMap()) fail(src, m, "mutations", "expected a mapping with 'depth' or 'sequences'");
    if (m["sequences"]) {
      std::vector<std::vector<int>> seqs;
      for (auto s : as_rows(src, m["sequences"], "mutations.sequences")) {
        for (int& k : s) {
          --k;
          if (std::find(ex.begin(), ex.end(), k) == ex.end()) fail(src, m["sequences"], "mutations.sequences", "index " + std::to_string(k + 1) + " is not exchangeable");
        }
        seqs.push_back(s);
      }
      c.sequences = seqs;
    }
    if (m["depth"]) {
      c.depth = as_int(src, m["depth"], "mutations.depth");
      if (c.depth < 0) fail(src, m["depth"], "mutations.depth", "must be nonnegative");
    }
    if (m["prune"]) c.prune = m["prune"].as<bool>();
  }

  if (const YAML::Node e = root["exponents"]) {
    if (!e.IsMap()) fail(src, e, "exponents", "expected a mapping with 'max' or 'vectors'");
    if (e["vectors"]) {
      auto vs = as_rows(src, e["vectors"], "exponents.vectors");
      for (const auto& v : vs) {
        if (static_cast<int>(v.size()) != r) fail(src, e["vectors"], "exponents.vectors", "expected " + std::to_string(r) + " entries");
        for (int x : v) {
          if (x < 0) fail(src, e["vectors"], "exponents.vectors", "entries must be nonnegative");
        }
      }
      c.exponents = vs;
    }
    if (e["max"] && !(e["max"].IsScalar() && e["max"].as<std::string>() == "l")) {
      c.max_entry = as_int(src, e["max"], "exponents.max");
      if (*c.max_entry < 0) fail(src, e["max"], "exponents.max", "must be nonnegative");
    }
  }

  if (const YAML::Node ch = root["checks"]) {
    auto add = [&](const std::string& s) {
      if (s == "ALL") {
        for (Check k : {Check::LAMBDA, Check::THEOREM, Check::BASE_CASE, Check::KKKO, Check::SPLIT_AXIOMS, Check::REDUCTION}) c.checks.push_back(k);
        return;
      }
      auto k = parse_check(s);
      if (!k) fail(src, ch, "checks", "unknown check '" + s + "'");
      c.checks.push_back(*k);
    };
    if (ch.IsScalar()) {
      add(ch.as<std::string>());
    } else if (ch.IsSequence()) {
      for (const auto& x : ch) add(x.as<std::string>());
    } else {
      fail(src, ch, "checks", "expected a list of check names");
    }
    std::sort(c.checks.begin(), c.checks.end());
    c.checks.erase(std::unique(c.checks.begin(), c.checks.end()), c.checks.end());
  }
  const bool needs_l = std::any_of(c.checks.begin(), c.checks.end(), [](Check k) { return k != Check::LAMBDA; });
  if (needs_l && c.l_values.empty()) fail(src, root, "l", "missing (needed by the requested checks)");

  if (root["split_trials"]) c.split_trials = as_int(src, root["split_trials"], "split_trials");
  if (root["reduction_prefix"]) {
    c.reduction_prefix = as_int(src, root["reduction_prefix"], "reduction_prefix");
    if (*c.reduction_prefix < 0 || *c.reduction_prefix > r) fail(src, root["reduction_prefix"], "reduction_prefix", "must be between 0 and the word length");
  }
  if (root["seed"]) c.seed = static_cast<uint64_t>(as_int(src, root["seed"], "seed"));
  return c;
}

Campaign load_campaign(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError(path + ": cannot open");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_campaign(ss.str(), path);
}

}  // namespace qfrob
