#include "qfrob/report.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace qfrob {

using nlohmann::json;

const char* to_string(Outcome o) {
  switch (o) {
    case Outcome::PASS: return "PASS";
    case Outcome::FAIL: return "FAIL";
    case Outcome::SKIP: return "SKIP";
  }
  return "?";
}

namespace {

Outcome parse_outcome(const std::string& s) {
  if (s == "PASS") return Outcome::PASS;
  if (s == "FAIL") return Outcome::FAIL;
  if (s == "SKIP") return Outcome::SKIP;
  throw json::other_error::create(501, "unknown verdict " + s, nullptr);
}

std::string param_text(const json& p) {
  std::string out;
  for (const auto& [k, v] : p.items()) {
    if (!out.empty()) out += " ";
    out += k + "=" + (v.is_string() ? v.get<std::string>() : v.dump());
  }
  return out;
}

}  // namespace

bool VerdictReport::passed() const {
  return std::none_of(checks.begin(), checks.end(), [](const CheckRecord& c) { return c.verdict == Outcome::FAIL; });
}

void VerdictReport::zero_timings() {
  for (auto& c : checks) c.millis = 0;
}

std::string emit(const VerdictReport& r, Format f) {
  if (f == Format::JSON) {
    json checks = json::array();
    for (const auto& c : r.checks) {
      json x = {{"name", c.name}, {"params", c.params}, {"verdict", to_string(c.verdict)}, {"millis", c.millis}};
      if (!c.witness.empty()) x["witness"] = c.witness;
      checks.push_back(std::move(x));
    }
    json meta = {{"campaign", r.meta.campaign}, {"type", r.meta.type},     {"word", r.meta.word},
                 {"l", r.meta.l},               {"lambda", r.meta.lambda}, {"lambda_source", r.meta.lambda_source},
                 {"note", r.meta.note}};
    return json{{"meta", meta}, {"checks", checks}}.dump(2) + "\n";
  }

  std::ostringstream os;
  os << "campaign " << r.meta.campaign << "  type " << r.meta.type << "  word (";
  for (std::size_t k = 0; k < r.meta.word.size(); ++k) os << (k ? "," : "") << r.meta.word[k];
  os << ")  lambda from " << r.meta.lambda_source << "\n";
  const std::vector<std::string> head{"check", "params", "verdict", "ms", "witness"};
  std::vector<std::vector<std::string>> rows;
  for (const auto& c : r.checks) rows.push_back({c.name, param_text(c.params), to_string(c.verdict), std::to_string(c.millis), c.witness});
  std::vector<std::size_t> w(head.size());
  for (std::size_t k = 0; k < head.size(); ++k) {
    w[k] = head[k].size();
    for (const auto& row : rows) w[k] = std::max(w[k], row[k].size());
  }
  auto line = [&](const std::vector<std::string>& row) {
    std::string s;
    for (std::size_t k = 0; k < row.size(); ++k) {
      std::ostringstream cell;
      if (k + 1 < row.size()) {
        cell << std::left << std::setw(static_cast<int>(w[k])) << row[k] << "  ";
      } else {
        cell << row[k];
      }
      s += cell.str();
    }
    while (!s.empty() && s.back() == ' ') s.pop_back();
    os << s << "\n";
  };
  line(head);
  for (const auto& row : rows) line(row);
  const long fails = std::count_if(r.checks.begin(), r.checks.end(), [](const CheckRecord& c) { return c.verdict == Outcome::FAIL; });
  os << r.checks.size() << " checks, " << fails << " failed\n";
  return os.str();
}

VerdictReport parse_report(const std::string& text) {
  const json j = json::parse(text);
  VerdictReport r;
  const json& m = j.at("meta");
  r.meta.campaign = m.at("campaign").get<std::string>();
  r.meta.type = m.at("type").get<std::string>();
  r.meta.word = m.at("word").get<std::vector<int>>();
  r.meta.l = m.at("l").get<std::vector<int>>();
  r.meta.lambda = m.at("lambda").get<std::vector<std::vector<int>>>();
  r.meta.lambda_source = m.at("lambda_source").get<std::string>();
  r.meta.note = m.value("note", "");
  for (const auto& c : j.at("checks")) {
    CheckRecord x;
    x.name = c.at("name").get<std::string>();
    x.params = c.at("params");
    x.verdict = parse_outcome(c.at("verdict").get<std::string>());
    x.witness = c.value("witness", "");
    x.millis = c.at("millis").get<long>();
    r.checks.push_back(std::move(x));
  }
  return r;
}

}  // namespace qfrob
