#pragma once

#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "tarski/axiom.hpp"

namespace tarski {

enum class CheckMode { exhaustive, sampled, certificate };
enum class CheckStatus { pass, fail, unknown, not_checked };

inline constexpr std::string_view mode_name(CheckMode m) {
  switch (m) {
    case CheckMode::exhaustive: return "exhaustive";
    case CheckMode::sampled: return "sampled";
    case CheckMode::certificate: return "certificate";
  }
  return "?";
}

inline constexpr std::string_view status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::unknown: return "unknown";
    case CheckStatus::not_checked: return "not-checked";
  }
  return "?";
}

/// A falsifying instance: the universally quantified point tuple plus the
/// evidence lines produced when the conclusion was refuted. Replaying the
/// tuple must reproduce the failure and the evidence exactly.
struct Certificate {
  AxiomId axiom = AxiomId::A0;
  std::string model;
  std::vector<std::string> points;
  std::vector<std::string> evidence;

  friend bool operator==(const Certificate&, const Certificate&) = default;
};

struct CheckReport {
  AxiomId axiom = AxiomId::A0;
  CheckMode mode = CheckMode::sampled;
  CheckStatus status = CheckStatus::unknown;
  long trials = 0;
  long premise_hits = 0;
  long failures = 0;
  std::uint64_t seed = 0;
  std::optional<Certificate> certificate;
  std::string note;
};

inline std::string certificate_text(const Certificate& cert) {
  std::string out = "certificate\n";
  out += "axiom " + std::string(axiom_name(cert.axiom)) + "\n";
  out += "model " + cert.model + "\n";
  for (const auto& p : cert.points) out += "point " + p + "\n";
  for (const auto& e : cert.evidence) out += "evidence " + e + "\n";
  out += "end\n";
  return out;
}

inline std::invalid_argument parse_error_at(int line, const std::string& msg) {
  return std::invalid_argument("certificate line " + std::to_string(line) + ": " + msg);
}

inline Certificate parse_certificate(std::string_view text) {
  Certificate cert;
  bool started = false;
  bool ended = false;
  bool have_axiom = false;
  int line_no = 0;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t eol = text.find('\n', pos);
    std::string_view raw = text.substr(pos, eol == std::string_view::npos ? text.size() - pos
                                                                          : eol - pos);
    ++line_no;
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    if (size_t hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    std::istringstream in{std::string(raw)};
    std::string keyword;
    if (!(in >> keyword)) continue;
    auto rest = [&] {
      std::string r;
      std::getline(in, r);
      size_t b = r.find_first_not_of(" \t");
      return b == std::string::npos ? std::string() : r.substr(b);
    };
    auto fail = [&](const std::string& msg) { throw parse_error_at(line_no, msg); };
    if (!started) {
      if (keyword != "certificate") fail("expected 'certificate' header");
      started = true;
      continue;
    }
    if (ended) fail("content after 'end'");
    if (keyword == "axiom") {
      auto id = parse_axiom(rest());
      if (!id) fail("unknown axiom id");
      cert.axiom = *id;
      have_axiom = true;
    } else if (keyword == "model") {
      cert.model = rest();
    } else if (keyword == "point") {
      cert.points.push_back(rest());
    } else if (keyword == "evidence") {
      cert.evidence.push_back(rest());
    } else if (keyword == "end") {
      ended = true;
    } else {
      fail("unknown keyword '" + keyword + "'");
    }
  }
  if (!started || !ended || !have_axiom)
    throw std::invalid_argument("incomplete certificate");
  return cert;
}

inline std::string certificate_inline(const Certificate& cert) {
  std::string pts;
  for (size_t i = 0; i < cert.points.size(); ++i) {
    if (i) pts += '|';
    pts += cert.points[i];
  }
  std::string ev;
  for (size_t i = 0; i < cert.evidence.size(); ++i) {
    if (i) ev += '|';
    ev += cert.evidence[i];
  }
  return pts + ";" + ev;
}

/// One machine-readable record per axiom; keys are stable.
inline std::string report_structured(const CheckReport& r) {
  std::string out = "id=" + std::string(axiom_name(r.axiom));
  out += " status=" + std::string(status_name(r.status));
  out += " mode=" + std::string(mode_name(r.mode));
  out += " trials=" + std::to_string(r.trials);
  out += " premise_hits=" + std::to_string(r.premise_hits);
  out += " failures=" + std::to_string(r.failures);
  out += " seed=" + std::to_string(r.seed);
  if (r.certificate) out += " certificate=" + certificate_inline(*r.certificate);
  return out;
}

inline std::string report_text_line(const CheckReport& r) {
  auto pad = [](std::string s, size_t w) {
    if (s.size() < w) s += std::string(w - s.size(), ' ');
    return s;
  };
  std::string line = pad(std::string(axiom_name(r.axiom)), 6) +
                     pad(std::string(status_name(r.status)), 13) +
                     pad(std::string(mode_name(r.mode)), 12) +
                     pad(std::to_string(r.trials), 9) +
                     pad(std::to_string(r.premise_hits), 9) +
                     pad(std::to_string(r.failures), 9);
  if (!r.note.empty()) line += " (" + r.note + ")";
  while (!line.empty() && line.back() == ' ') line.pop_back();
  return line;
}

inline std::string report_table_header() {
  return "axiom status       mode        trials   hits     failures";
}

}  // namespace tarski
