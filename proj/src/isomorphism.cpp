#include "linarr/isomorphism.hpp"

#include <algorithm>
#include <map>

namespace linarr {
namespace {

struct Incidence {
  std::size_t lines = 0;
  std::vector<std::vector<std::size_t>> point_lines;  // per singular point
  std::vector<std::vector<int>> meet_point;           // [i][j] -> point id, -1 on the diagonal
  std::vector<std::vector<std::size_t>> line_points;  // per line

  explicit Incidence(const Arrangement& arr) : lines(arr.size()) {
    const SingularLocus locus = singular_locus(arr);
    meet_point.assign(lines, std::vector<int>(lines, -1));
    line_points.assign(lines, {});
    for (std::size_t p = 0; p < locus.points.size(); ++p) {
      const auto& ls = locus.points[p].lines;
      point_lines.push_back(ls);
      for (auto i : ls) {
        line_points[i].push_back(p);
        for (auto j : ls) {
          if (i != j) meet_point[i][j] = static_cast<int>(p);
        }
      }
    }
  }
};

using Signature = std::vector<std::size_t>;

// One refinement round over both structures with a shared signature table so
// colours stay comparable across A and B.
std::size_t refine(const Incidence& a, const Incidence& b, std::vector<std::size_t>& ca,
                   std::vector<std::size_t>& cb) {
  std::map<std::vector<Signature>, std::size_t> table;
  auto signatures = [](const Incidence& s, const std::vector<std::size_t>& colour) {
    std::vector<std::vector<Signature>> out(s.lines);
    for (std::size_t l = 0; l < s.lines; ++l) {
      out[l].push_back({colour[l]});
      std::vector<Signature> per_point;
      for (auto p : s.line_points[l]) {
        Signature sig{s.point_lines[p].size()};
        std::vector<std::size_t> others;
        for (auto m : s.point_lines[p]) {
          if (m != l) others.push_back(colour[m]);
        }
        std::sort(others.begin(), others.end());
        sig.insert(sig.end(), others.begin(), others.end());
        per_point.push_back(std::move(sig));
      }
      std::sort(per_point.begin(), per_point.end());
      out[l].insert(out[l].end(), per_point.begin(), per_point.end());
    }
    return out;
  };
  const auto sa = signatures(a, ca);
  const auto sb = signatures(b, cb);
  for (const auto& s : sa) table.emplace(s, 0);
  for (const auto& s : sb) table.emplace(s, 0);
  std::size_t next = 0;
  for (auto& [sig, id] : table) id = next++;
  for (std::size_t l = 0; l < a.lines; ++l) ca[l] = table.at(sa[l]);
  for (std::size_t l = 0; l < b.lines; ++l) cb[l] = table.at(sb[l]);
  return table.size();
}

class Search {
 public:
  Search(const Incidence& a, const Incidence& b, std::vector<std::size_t> ca, std::vector<std::size_t> cb)
      : a_(a), b_(b), ca_(std::move(ca)), cb_(std::move(cb)) {
    map_.assign(a.lines, kUnset);
    used_.assign(b.lines, false);
    point_map_.assign(a.point_lines.size(), -1);
    point_inv_.assign(b.point_lines.size(), -1);
    order_ = search_order();
  }

  std::optional<std::vector<std::size_t>> run() {
    if (assign(0)) return map_;
    return std::nullopt;
  }

 private:
  static constexpr std::size_t kUnset = static_cast<std::size_t>(-1);

  // Smallest colour class first, then lines sharing points with already
  // ordered lines, so constraints bite early.
  std::vector<std::size_t> search_order() const {
    std::map<std::size_t, std::size_t> class_size;
    for (auto c : ca_) ++class_size[c];
    std::vector<std::size_t> order;
    std::vector<bool> placed(a_.lines, false);
    while (order.size() < a_.lines) {
      std::size_t best = kUnset;
      for (std::size_t l = 0; l < a_.lines; ++l) {
        if (placed[l]) continue;
        if (best == kUnset || class_size[ca_[l]] < class_size[ca_[best]]) best = l;
      }
      order.push_back(best);
      placed[best] = true;
    }
    return order;
  }

  bool assign(std::size_t depth) {
    if (depth == order_.size()) return true;
    const std::size_t la = order_[depth];
    for (std::size_t lb = 0; lb < b_.lines; ++lb) {
      if (used_[lb] || cb_[lb] != ca_[la]) continue;
      std::vector<std::size_t> new_points;
      if (consistent(la, lb, depth, new_points)) {
        map_[la] = lb;
        used_[lb] = true;
        if (assign(depth + 1)) return true;
        map_[la] = kUnset;
        used_[lb] = false;
      }
      for (auto p : new_points) {
        point_inv_[static_cast<std::size_t>(point_map_[p])] = -1;
        point_map_[p] = -1;
      }
    }
    return false;
  }

  bool consistent(std::size_t la, std::size_t lb, std::size_t depth, std::vector<std::size_t>& new_points) {
    for (std::size_t k = 0; k < depth; ++k) {
      const std::size_t pa_line = order_[k];
      const auto pa = static_cast<std::size_t>(a_.meet_point[la][pa_line]);
      const auto pb = static_cast<std::size_t>(b_.meet_point[lb][map_[pa_line]]);
      if (a_.point_lines[pa].size() != b_.point_lines[pb].size()) return false;
      if (point_map_[pa] == -1 && point_inv_[pb] == -1) {
        point_map_[pa] = static_cast<int>(pb);
        point_inv_[pb] = static_cast<int>(pa);
        new_points.push_back(pa);
      } else if (point_map_[pa] != static_cast<int>(pb) || point_inv_[pb] != static_cast<int>(pa)) {
        return false;
      }
    }
    return true;
  }

  const Incidence& a_;
  const Incidence& b_;
  std::vector<std::size_t> ca_, cb_;
  std::vector<std::size_t> map_;
  std::vector<bool> used_;
  std::vector<int> point_map_, point_inv_;
  std::vector<std::size_t> order_;
};

}  // namespace

std::optional<std::vector<std::size_t>> find_lattice_isomorphism(const Arrangement& a, const Arrangement& b) {
  if (a.size() != b.size()) return std::nullopt;
  if (a.size() < 2) {
    std::vector<std::size_t> id(a.size());
    for (std::size_t i = 0; i < id.size(); ++i) id[i] = i;
    return id;
  }
  const Incidence ia(a), ib(b);
  if (ia.point_lines.size() != ib.point_lines.size()) return std::nullopt;

  std::vector<std::size_t> ca(a.size(), 0), cb(b.size(), 0);
  std::size_t classes = 1;
  for (;;) {
    const std::size_t next = refine(ia, ib, ca, cb);
    std::vector<std::size_t> ha = ca, hb = cb;
    std::sort(ha.begin(), ha.end());
    std::sort(hb.begin(), hb.end());
    if (ha != hb) return std::nullopt;
    if (next == classes) break;
    classes = next;
  }
  return Search(ia, ib, std::move(ca), std::move(cb)).run();
}

bool incidence_isomorphic(const Arrangement& a, const Arrangement& b) {
  return find_lattice_isomorphism(a, b).has_value();
}

}  // namespace linarr
