#pragma once

#include <array>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace tarski {

struct parse_error : std::runtime_error {
  int line;
  parse_error(int line_no, const std::string& msg)
      : std::runtime_error("line " + std::to_string(line_no) + ": " + msg), line(line_no) {}
};

/// Finite relational structure: a k-element universe with explicit
/// betweenness triples and congruence quadruples.
struct FiniteModel {
  int size = 0;
  std::set<std::array<int, 3>> bet_triples;
  std::set<std::array<int, 4>> cong_quads;

  bool bet(int i, int j, int l) const { return bet_triples.count({i, j, l}) != 0; }
  bool cong(int i, int j, int l, int m) const { return cong_quads.count({i, j, l, m}) != 0; }

  friend bool operator==(const FiniteModel& a, const FiniteModel& b) = default;
};

// Text format, one record per line, '#' starts a comment:
//   points <k>
//   bet <i> <j> <l>
//   cong <i> <j> <l> <m>
inline FiniteModel parse_model(std::string_view text) {
  FiniteModel model;
  bool have_points = false;
  int line_no = 0;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(pos, eol == std::string_view::npos ? text.size() - pos
                                                                           : eol - pos);
    ++line_no;
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;

    if (size_t hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    std::istringstream in{std::string(line)};
    std::string keyword;
    if (!(in >> keyword)) continue;  // blank or comment-only line

    auto read_index = [&](const char* what) {
      long v;
      if (!(in >> v)) throw parse_error(line_no, std::string("expected ") + what);
      if (!have_points) throw parse_error(line_no, "relation before 'points' header");
      if (v < 0 || v >= model.size)
        throw parse_error(line_no, "index " + std::to_string(v) + " out of range [0, " +
                                       std::to_string(model.size) + ")");
      return static_cast<int>(v);
    };
    auto expect_end = [&] {
      std::string extra;
      if (in >> extra) throw parse_error(line_no, "trailing token '" + extra + "'");
    };

    if (keyword == "points") {
      if (have_points) throw parse_error(line_no, "duplicate 'points' header");
      long k;
      if (!(in >> k) || k < 1) throw parse_error(line_no, "expected positive point count");
      expect_end();
      model.size = static_cast<int>(k);
      have_points = true;
    } else if (keyword == "bet") {
      int i = read_index("bet index");
      int j = read_index("bet index");
      int l = read_index("bet index");
      expect_end();
      model.bet_triples.insert({i, j, l});
    } else if (keyword == "cong") {
      int i = read_index("cong index");
      int j = read_index("cong index");
      int l = read_index("cong index");
      int m = read_index("cong index");
      expect_end();
      model.cong_quads.insert({i, j, l, m});
    } else {
      throw parse_error(line_no, "unknown keyword '" + keyword + "'");
    }
  }
  if (!have_points) throw parse_error(line_no, "missing 'points' header");
  return model;
}

inline std::string serialize_model(const FiniteModel& m) {
  std::string out = "points " + std::to_string(m.size) + "\n";
  for (const auto& t : m.bet_triples)
    out += "bet " + std::to_string(t[0]) + " " + std::to_string(t[1]) + " " +
           std::to_string(t[2]) + "\n";
  for (const auto& q : m.cong_quads)
    out += "cong " + std::to_string(q[0]) + " " + std::to_string(q[1]) + " " +
           std::to_string(q[2]) + " " + std::to_string(q[3]) + "\n";
  return out;
}

}  // namespace tarski
