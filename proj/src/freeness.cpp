#include "linarr/freeness.hpp"

#include <algorithm>
#include <istream>
#include <set>
#include <sstream>

namespace linarr {

ExponentTriple::ExponentTriple(unsigned a, unsigned b, unsigned c) : values_{a, b, c} {
  std::sort(values_.begin(), values_.end());
}

namespace {

std::vector<unsigned> parse_exponents(const std::string& text, std::size_t count) {
  std::string cleaned;
  for (char c : text) cleaned.push_back(c == '{' || c == '}' || c == ',' ? ' ' : c);
  std::istringstream ss(cleaned);
  std::vector<long> v;
  long x;
  while (ss >> x) v.push_back(x);
  if (!ss.eof() || v.size() != count || std::any_of(v.begin(), v.end(), [](long a) { return a < 0; })) {
    throw ParseError("expected " + std::to_string(count) + " non-negative exponents, got '" + text + "'");
  }
  return {v.begin(), v.end()};
}

std::array<unsigned, 2> parse_pair(const std::string& text) {
  auto v = parse_exponents(text, 2);
  std::sort(v.begin(), v.end());
  return {v[0], v[1]};
}

}  // namespace

ExponentTriple ExponentTriple::parse(const std::string& text) {
  const auto v = parse_exponents(text, 3);
  return {v[0], v[1], v[2]};
}

bool ExponentTriple::contains_pair(unsigned a, unsigned b) const {
  std::multiset<unsigned> pool(values_.begin(), values_.end());
  for (unsigned want : {a, b}) {
    auto it = pool.find(want);
    if (it == pool.end()) return false;
    pool.erase(it);
  }
  return true;
}

std::string ExponentTriple::to_string() const {
  return "{" + std::to_string(values_[0]) + "," + std::to_string(values_[1]) + "," + std::to_string(values_[2]) + "}";
}

nlohmann::json FreenessCertificate::to_json() const {
  nlohmann::json steps_json = nlohmann::json::array();
  for (const auto& s : steps) {
    steps_json.push_back({{"label", s.label},
                          {"exponents", s.exponents.values()},
                          {"restriction_count", s.restriction_count},
                          {"valid", s.valid}});
  }
  return steps_json;
}

FreenessCertificate freeness_replay(const Arrangement& arrangement, const std::vector<std::size_t>& order) {
  std::vector<bool> seen(arrangement.size(), false);
  for (auto i : order) {
    if (i >= arrangement.size() || seen[i]) throw std::invalid_argument("order is not a permutation of the lines");
    seen[i] = true;
  }
  if (order.size() != arrangement.size()) throw std::invalid_argument("order does not cover every line");

  FreenessCertificate cert;
  cert.verdict = true;
  ExponentTriple current;
  for (std::size_t step = 0; step < order.size(); ++step) {
    const ProjectiveLine& h = arrangement.line(order[step]);
    std::set<ProjectivePoint> restriction;
    for (std::size_t prev = 0; prev < step; ++prev) restriction.insert(meet(h, arrangement.line(order[prev])));

    FreenessStep s;
    s.line = order[step];
    s.label = arrangement.label(order[step]).empty() ? h.equation() : arrangement.label(order[step]);
    s.restriction_count = restriction.size();
    if (step == 0) {
      s.exponents = {0, 0, 1};
      s.valid = true;
    } else if (step == 1) {
      s.exponents = {0, 1, 1};
      s.valid = true;
    } else {
      const auto t = static_cast<unsigned>(s.restriction_count);
      s.valid = current.contains_pair(1, t - 1);
      if (s.valid) {
        // Removing {1, t-1} leaves one exponent; it grows by one.
        std::multiset<unsigned> pool(current.values().begin(), current.values().end());
        pool.erase(pool.find(1));
        pool.erase(pool.find(t - 1));
        s.exponents = {1, t - 1, *pool.begin() + 1};
      }
    }
    cert.steps.push_back(s);
    if (!s.valid) {
      cert.verdict = false;
      cert.failing_step = step;
      break;
    }
    current = s.exponents;
  }
  return cert;
}

FreenessCertificate freeness_replay(const Arrangement& arrangement) {
  std::vector<std::size_t> order(arrangement.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  return freeness_replay(arrangement, order);
}

AdditionTable AdditionTable::read(std::istream& in) {
  AdditionTable table;
  std::string row;
  while (std::getline(in, row)) {
    row = row.substr(0, row.find('#'));
    const auto b = row.find_first_not_of(" \t\r");
    if (b == std::string::npos) continue;
    row = row.substr(b, row.find_last_not_of(" \t\r") - b + 1);
    Row r;
    if (const auto bar = row.find('|'); bar != std::string::npos) {
      std::string rest = row.substr(bar + 1);
      row = row.substr(0, row.find_last_not_of(" \t", bar - 1) + 1);
      const auto bar2 = rest.find('|');
      r.exponents = ExponentTriple::parse(rest.substr(0, bar2));
      if (bar2 != std::string::npos) r.restriction = parse_pair(rest.substr(bar2 + 1));
    }
    if (const auto colon = row.find(':'); colon != std::string::npos) {
      r.name = row.substr(0, row.find_last_not_of(" \t", colon - 1) + 1);
      r.line = ProjectiveLine::parse(row.substr(colon + 1));
    } else {
      r.name = row;
      try {
        r.line = ProjectiveLine::parse(row);
      } catch (const std::exception&) {
        r.line.reset();
      }
    }
    table.rows.push_back(std::move(r));
  }
  return table;
}

std::vector<std::size_t> AdditionTable::resolve(const Arrangement& arrangement) const {
  std::vector<std::size_t> order;
  for (const auto& r : rows) {
    std::optional<std::size_t> idx;
    if (r.line) {
      idx = arrangement.index_of(*r.line);
    } else {
      idx = arrangement.index_of_label(r.name);
    }
    if (!idx) throw std::invalid_argument("table row '" + r.name + "' matches no line of the arrangement");
    order.push_back(*idx);
  }
  return order;
}

}  // namespace linarr
