/*
 * Copyright 2026 The chainchaos Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/*
 * Copyright 2026 The chainchaos Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <cstdio>
#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "chainchaos/chaos_analyzer.hpp"
#include "chainchaos/error.hpp"
#include "chainchaos/random_walk.hpp"
#include "chainchaos/sequence_space.hpp"
#include "chainchaos/simulator.hpp"
#include "chainchaos/state_space.hpp"

namespace chainchaos {

/// Provenance stamped into every artifact so a file can be traced back to
/// the exact config and seed that produced it.
struct ArtifactMeta {
  std::string spec_digest;
  std::uint64_t seed = 0;
};

namespace detail {

/// Fixed-precision formatting via the C locale, byte-stable across runs.
inline std::string fmt_fixed(double v, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
  return buf;
}

inline void require_csv_safe_labels(const StateSpace& space) {
  for (const auto& label : space.labels()) {
    if (label.find_first_of(",\n\r#|") != std::string::npos) {
      throw Error(errc::invalid_argument,
                  "state label '" + label + "' contains CSV delimiter characters");
    }
  }
}

inline void write_meta_comments(std::ostream& out, const char* kind,
                                const ArtifactMeta& meta) {
  out << "# chainchaos " << kind << "\n";
  out << "# spec-digest: " << meta.spec_digest << "\n";
  out << "# seed: " << meta.seed << "\n";
}

inline std::vector<std::string> word_labels(const StateSpace& space,
                                            const std::vector<int>& word) {
  std::vector<std::string> out;
  out.reserve(word.size());
  for (int s : word) out.push_back(space.label(s));
  return out;
}

inline std::string join_word(const StateSpace& space, const std::vector<int>& word) {
  std::string out;
  for (std::size_t k = 0; k < word.size(); ++k) {
    if (k > 0) out += '|';
    out += space.label(word[static_cast<std::size_t>(k)]);
  }
  return out;
}

}  // namespace detail

// --- path CSV ---------------------------------------------------------------

/// Columns: step, state_label.  Steps are consecutive from 0.
inline void write_path_csv(std::ostream& out, const Realization& real,
                           const StateSpace& space, const ArtifactMeta& meta) {
  detail::require_csv_safe_labels(space);
  require_symbols_in_range(space, real.path, "path");
  detail::write_meta_comments(out, "path", meta);
  out << "# model-digest: " << real.model_digest << "\n";
  out << "step,state_label\n";
  for (std::size_t i = 0; i < real.path.size(); ++i) {
    out << i << ',' << space.label(real.path[i]) << "\n";
  }
}

/// Reads a path CSV back into state indices.  Comment lines are skipped,
/// the header is required, steps must count up from 0, and every label
/// must name a state of `space`.
inline std::vector<int> read_path_csv(std::istream& in, const StateSpace& space) {
  std::vector<int> path;
  std::string line;
  bool header_seen = false;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    if (!header_seen) {
      if (line != "step,state_label") {
        throw Error(errc::config_parse_error,
                    "line " + std::to_string(lineno) +
                        ": expected header 'step,state_label'");
      }
      header_seen = true;
      continue;
    }
    const auto comma = line.find(',');
    if (comma == std::string::npos) {
      throw Error(errc::config_parse_error,
                  "line " + std::to_string(lineno) + ": expected 'step,state_label'");
    }
    const std::string step_text = line.substr(0, comma);
    const std::string label = line.substr(comma + 1);
    std::size_t parsed = 0;
    unsigned long long step = 0;
    try {
      step = std::stoull(step_text, &parsed);
    } catch (const std::exception&) {
      parsed = 0;
    }
    if (parsed != step_text.size() || step != path.size()) {
      throw Error(errc::config_parse_error,
                  "line " + std::to_string(lineno) + ": expected step " +
                      std::to_string(path.size()));
    }
    const auto idx = space.index_of(label);
    if (!idx) {
      throw Error(errc::config_parse_error,
                  "line " + std::to_string(lineno) + ": unknown state label '" + label +
                      "'");
    }
    path.push_back(*idx);
  }
  if (!header_seen || path.empty()) {
    throw Error(errc::config_parse_error, "path CSV contains no data rows");
  }
  return path;
}

// --- JSON reports -----------------------------------------------------------

inline nlohmann::json witness_report_json(const WitnessReport& report,
                                          const ArtifactMeta& meta) {
  nlohmann::json j;
  j["artifact"] = "witness_report";
  j["spec_digest"] = meta.spec_digest;
  j["seed"] = meta.seed;
  j["epsilon0"] = report.epsilon0;
  j["window"] = report.window;
  j["realization_digest"] = report.realization_digest;
  j["witness_count"] = report.witnesses.size();
  auto& list = j["witnesses"] = nlohmann::json::array();
  for (const auto& w : report.witnesses) {
    list.push_back({{"zeta", w.zeta}, {"eta", w.eta}, {"window", w.window}});
  }
  return j;
}

inline nlohmann::json diameter_report_json(const DiameterReport& report) {
  nlohmann::json j;
  j["truncation_depth"] = report.truncation_depth;
  j["truncated_max"] = report.truncated_max;
  j["limit_max"] = report.limit_max;
  j["pass"] = report.pass;
  return j;
}

inline nlohmann::json separation_certificate_json(const SeparationCertificate& cert,
                                                  const StateSpace& space) {
  nlohmann::json j;
  j["degree"] = cert.degree;
  j["epsilon0"] = cert.epsilon0;
  auto& entries = j["entries"] = nlohmann::json::array();
  for (const auto& e : cert.entries) {
    entries.push_back({{"prefix", detail::word_labels(space, e.prefix)},
                       {"witness", detail::word_labels(space, e.witness)},
                       {"distance", e.distance}});
  }
  return j;
}

inline nlohmann::json coverage_report_json(const CoverageReport& report,
                                           const StateSpace& space) {
  nlohmann::json j;
  j["shift_count"] = report.shift_count;
  j["truncation_depth"] = report.truncation_depth;
  j["expected_words"] = report.expected_words;
  j["covered_words"] = report.covered_words;
  j["missing_count"] = report.missing_count;
  auto& missing = j["missing"] = nlohmann::json::array();
  for (const auto& word : report.missing) {
    missing.push_back(detail::word_labels(space, word));
  }
  j["pass"] = report.pass;
  return j;
}

inline nlohmann::json devaney_certificate_json(const DevaneyCertificate& cert,
                                               const StateSpace& space) {
  nlohmann::json j;
  j["depth"] = cert.depth;
  j["truncation_depth"] = cert.truncation_depth;
  j["periodic_density_pass"] = cert.periodic_density_pass;
  j["transitivity_pass"] = cert.transitivity_pass;
  j["transitivity_witness"] = detail::word_labels(space, cert.transitivity_witness);
  j["transitivity_witness_length"] = cert.transitivity_witness.size();
  j["sensitivity_constant"] = cert.sensitivity_constant;
  j["separation"] = separation_certificate_json(cert.separation, space);
  return j;
}

// --- arc-coverage CSV ---------------------------------------------------------

/// Columns: word (labels joined by '|'), probability_class, appeared.
inline void write_arc_coverage_csv(std::ostream& out, const ArcCoverageReport& report,
                                   const StateSpace& space, const ArtifactMeta& meta) {
  detail::require_csv_safe_labels(space);
  detail::write_meta_comments(out, "arc-coverage", meta);
  out << "word,probability_class,appeared\n";
  for (std::size_t w = 0; w < report.total_words; ++w) {
    const auto word = index_to_word(w, space.size(), report.word_length);
    out << detail::join_word(space, word) << ','
        << (report.positive[w] ? "positive" : "zero") << ','
        << (report.appeared[w] ? 1 : 0) << "\n";
  }
}

// --- step-function trace -------------------------------------------------------

/// Columns: t (4 decimals), value.
inline void write_step_csv(std::ostream& out, const StepTrace& trace,
                           const ArtifactMeta& meta) {
  detail::write_meta_comments(out, "step-function", meta);
  out << "t,value\n";
  for (std::size_t n = 0; n < trace.times.size(); ++n) {
    out << detail::fmt_fixed(trace.times[n], 4) << ',' << trace.values[n] << "\n";
  }
}

/**
 * Self-contained SVG rendering of the step function: horizontal segments
 * per interval and, optionally, the vertical connector lines between
 * consecutive values.  Output bytes depend only on the trace and flags.
 */
inline void write_step_svg(std::ostream& out, const StepTrace& trace, bool connectors,
                           const ArtifactMeta& meta) {
  if (trace.times.size() < 2 || trace.times.size() != trace.values.size()) {
    throw Error(errc::invalid_argument, "trace needs at least two breakpoints");
  }
  const double width = 880.0, height = 360.0;
  const double ml = 60.0, mr = 20.0, mt = 20.0, mb = 50.0;
  const double t_max = trace.times.back();
  int v_min = trace.values.front(), v_max = trace.values.front();
  for (int v : trace.values) {
    if (v < v_min) v_min = v;
    if (v > v_max) v_max = v;
  }
  // Walk traces plot the full 1..4 band even if a short path misses a level.
  if (v_min > 1) v_min = 1;
  if (v_max < 4) v_max = 4;
  const double y_lo = v_min - 0.5, y_hi = v_max + 0.5;
  auto sx = [&](double t) { return ml + (width - ml - mr) * (t / t_max); };
  auto sy = [&](double v) {
    return mt + (height - mt - mb) * (1.0 - (v - y_lo) / (y_hi - y_lo));
  };
  using detail::fmt_fixed;

  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
      << height << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
  out << "<!-- chainchaos step-function spec-digest:" << meta.spec_digest
      << " seed:" << meta.seed << " -->\n";
  out << "<rect width=\"" << width << "\" height=\"" << height << "\" fill=\"white\"/>\n";

  // axes
  out << "<line x1=\"" << fmt_fixed(ml, 2) << "\" y1=\"" << fmt_fixed(sy(y_lo), 2)
      << "\" x2=\"" << fmt_fixed(width - mr, 2) << "\" y2=\"" << fmt_fixed(sy(y_lo), 2)
      << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
  out << "<line x1=\"" << fmt_fixed(ml, 2) << "\" y1=\"" << fmt_fixed(sy(y_lo), 2)
      << "\" x2=\"" << fmt_fixed(ml, 2) << "\" y2=\"" << fmt_fixed(sy(y_hi), 2)
      << "\" stroke=\"black\" stroke-width=\"1\"/>\n";

  // x ticks every tenth of the horizon, y ticks at integer levels
  for (int k = 0; k <= 10; ++k) {
    const double t = t_max * k / 10.0;
    out << "<line x1=\"" << fmt_fixed(sx(t), 2) << "\" y1=\"" << fmt_fixed(sy(y_lo), 2)
        << "\" x2=\"" << fmt_fixed(sx(t), 2) << "\" y2=\""
        << fmt_fixed(sy(y_lo) + 5.0, 2) << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
    out << "<text x=\"" << fmt_fixed(sx(t), 2) << "\" y=\""
        << fmt_fixed(sy(y_lo) + 20.0, 2)
        << "\" font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"middle\">"
        << fmt_fixed(t, 1) << "</text>\n";
  }
  for (int v = v_min; v <= v_max; ++v) {
    out << "<line x1=\"" << fmt_fixed(ml - 5.0, 2) << "\" y1=\"" << fmt_fixed(sy(v), 2)
        << "\" x2=\"" << fmt_fixed(ml, 2) << "\" y2=\"" << fmt_fixed(sy(v), 2)
        << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
    out << "<text x=\"" << fmt_fixed(ml - 10.0, 2) << "\" y=\""
        << fmt_fixed(sy(v) + 4.0, 2)
        << "\" font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"end\">" << v
        << "</text>\n";
  }
  out << "<text x=\"" << fmt_fixed((ml + width - mr) / 2.0, 2) << "\" y=\""
      << fmt_fixed(height - 12.0, 2)
      << "\" font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"middle\">t"
      << "</text>\n";

  // the step function itself, one path element
  out << "<path d=\"";
  for (std::size_t n = 0; n + 1 < trace.times.size(); ++n) {
    const double x0 = sx(trace.times[n]);
    const double x1 = sx(trace.times[n + 1]);
    const double y = sy(trace.values[n]);
    if (n == 0) {
      out << "M" << fmt_fixed(x0, 2) << " " << fmt_fixed(y, 2);
    } else if (trace.values[n] != trace.values[n - 1]) {
      if (connectors) {
        out << " V" << fmt_fixed(y, 2);
      } else {
        out << " M" << fmt_fixed(x0, 2) << " " << fmt_fixed(y, 2);
      }
    }
    out << " H" << fmt_fixed(x1, 2);
  }
  out << "\" fill=\"none\" stroke=\"#1f4e9c\" stroke-width=\"1.5\"/>\n";
  out << "</svg>\n";
}

}  // namespace chainchaos
